//! Palette profiles, Kempe chains and the recoloring tactics that extend a
//! coloring of `G - u` to `G`.

mod bk;
mod chain;
mod profile;
mod tactics;
mod trace;

pub use bk::{bk_color, bk_color_with, BkOptions, BkRun, ExtensionEvent, MIN_DELTA};
pub use chain::{kempe_component, kempe_swap, KempeChain};
pub use profile::{palette_profile, PaletteProfile};
pub use tactics::{
    extend_coloring, failure_profile, tactic_chain_cascade, tactic_free_color, CascadeConfig, Extension,
    ExtensionMethod, DEFAULT_NODE_LIMIT, DEFAULT_TACTIC_DEPTH,
};
pub use trace::{Change, Tactic, TacticStep, TacticTrace, TraceOutcome};
