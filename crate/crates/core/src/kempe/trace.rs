use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::coloring::{Color, Coloring};
use crate::error::Result;
use crate::graph::Graph;
use crate::kempe::profile::check_proper_without;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Tactic {
    /// Give the center a color already absent from its neighborhood.
    Assign,
    /// Recolor one vertex to a color missing from its own neighborhood.
    FreeColor,
    /// Exchange the two colors of a Kempe chain.
    KempeSwap,
    /// Replace the whole coloring with an exact solution.
    ExactFallback,
}

impl Tactic {
    pub fn name(self) -> &'static str {
        match self {
            Tactic::Assign => "assign",
            Tactic::FreeColor => "free_color",
            Tactic::KempeSwap => "kempe_swap",
            Tactic::ExactFallback => "exact_fallback",
        }
    }
}

/// One vertex changing color; `0` stands for unassigned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Change {
    pub vertex: usize,
    pub before: Color,
    pub after: Color,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TacticStep {
    pub tactic: Tactic,
    pub changes: Vec<Change>,
}

impl TacticStep {
    pub(crate) fn apply(&self, c: &mut Coloring) {
        for ch in &self.changes {
            debug_assert_eq!(c.raw(ch.vertex), ch.before);
            c.set(ch.vertex, ch.after);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "color")]
pub enum TraceOutcome {
    /// The center received this color.
    Colored(Color),
    Failed,
}

/// Audit trail of one extension attempt.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TacticTrace {
    pub center: usize,
    pub initial: Coloring,
    pub steps: Vec<TacticStep>,
    pub outcome: TraceOutcome,
}

impl TacticTrace {
    /// Applies every step to the initial coloring.
    ///
    /// Returns `None` if a step's recorded "before" color does not match.
    pub fn replay(&self) -> Option<Coloring> {
        let mut c = self.initial.clone();
        for step in &self.steps {
            if step.changes.iter().any(|ch| c.raw(ch.vertex) != ch.before) {
                return None;
            }
            for ch in &step.changes {
                if ch.after as usize > c.palette() {
                    return None;
                }
            }
            step.apply(&mut c);
        }
        Some(c)
    }

    /// Checks that every coloring along the trace is proper on `G - center`.
    /// The exact fallback replaces the coloring wholesale and is checked on `G`.
    pub fn check_intermediates(&self, g: &Graph) -> Result<()> {
        let mut c = self.initial.clone();
        check_proper_without(g, &c, self.center)?;
        for step in &self.steps {
            step.apply(&mut c);
            check_proper_without(g, &c, self.center)?;
        }
        Ok(())
    }

    /// One line per step: `tactic v:before>after ...`, then the outcome.
    pub fn to_log(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            out.push_str(step.tactic.name());
            for ch in &step.changes {
                let _ = write!(out, " {}:{}>{}", ch.vertex, ch.before, ch.after);
            }
            out.push('\n');
        }
        match self.outcome {
            TraceOutcome::Colored(c) => {
                let _ = writeln!(out, "outcome colored {c}");
            }
            TraceOutcome::Failed => out.push_str("outcome failed\n"),
        }
        out
    }
}

impl fmt::Display for TacticTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_log())
    }
}
