//! Constructive Brooks colorer.
//!
//! Every vertex except a chosen root is colored while its breadth-first
//! parent (one step closer to the root) is still uncolored, so it sees at
//! most `deg - 1 <= Δ - 1` colored neighbors. The root needs separate care:
//!
//! * some vertex has degree below Δ: use it as the root;
//! * Δ-regular with a cut vertex `v`: color each lobe `G[C ∪ {v}]` rooted at
//!   `v` (which has degree below Δ inside the lobe), then align colors on `v`;
//! * Δ-regular and 2-connected: find `x` with non-adjacent neighbors `y, z`
//!   such that `G - {y, z}` is connected, give `y` and `z` the same color,
//!   and root the order at `x`, which then sees at most Δ - 1 colors.

use super::{Color, Coloring, UNASSIGNED};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::{is_complete, is_odd_cycle};

/// Breadth-first order from `root` inside `allowed`.
fn bfs_order(g: &Graph, root: usize, allowed: &VertexSet) -> Vec<usize> {
    let mut seen = VertexSet::singleton(root);
    let mut order = vec![root];
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for w in g.neighbors(v).intersection(allowed).difference(&seen).iter() {
            seen.insert(w);
            order.push(w);
        }
    }
    order
}

fn least_free_color(g: &Graph, colors: &[Color], v: usize) -> Color {
    let mut used = vec![false; g.deg(v) + 2];
    for w in g.neighbors(v).iter() {
        let c = colors[w] as usize;
        if c < used.len() {
            used[c] = true;
        }
    }
    (1..used.len()).find(|&c| !used[c]).expect("deg + 1 colors suffice") as Color
}

/// Colors `allowed` (reachable from `root`) farthest-first, root last.
fn color_toward_root(g: &Graph, root: usize, allowed: &VertexSet, colors: &mut [Color]) {
    for &v in bfs_order(g, root, allowed).iter().rev() {
        colors[v] = least_free_color(g, colors, v);
    }
}

fn two_color(g: &Graph) -> Vec<Color> {
    let mut colors = vec![UNASSIGNED; g.order()];
    if g.order() == 0 {
        return colors;
    }
    let order = bfs_order(g, 0, &g.vertices());
    colors[0] = 1;
    for &v in &order[1..] {
        let parent_color = g
            .neighbors(v)
            .iter()
            .map(|w| colors[w])
            .find(|&c| c != UNASSIGNED)
            .expect("breadth-first vertices have a colored parent");
        colors[v] = 3 - parent_color;
    }
    colors
}

fn find_cut_vertex(g: &Graph) -> Option<usize> {
    let all = g.vertices();
    (0..g.order()).find(|&v| {
        let mut rest = all;
        rest.remove(v);
        match rest.first() {
            Some(s) => g.reachable_within(s, &rest).len() < rest.len(),
            None => false,
        }
    })
}

fn find_brooks_triple(g: &Graph) -> Option<(usize, usize, usize)> {
    let all = g.vertices();
    for x in 0..g.order() {
        let nbrs = g.neighbors(x).to_vec();
        for (i, &y) in nbrs.iter().enumerate() {
            for &z in &nbrs[i + 1..] {
                if g.has_edge(y, z) {
                    continue;
                }
                let mut rest = all;
                rest.remove(y);
                rest.remove(z);
                if g.reachable_within(x, &rest).len() == rest.len() {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// A proper coloring with at most Δ colors, built rather than searched.
///
/// Requires a connected graph that is neither complete nor an odd cycle.
/// Graphs with Δ ≤ 2 (paths and even cycles) get two colors.
pub fn brooks_color(g: &Graph) -> Result<Coloring> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph is disconnected".into()));
    }
    if is_complete(g) {
        return Err(Error::Precondition("graph is complete".into()));
    }
    if is_odd_cycle(g) {
        return Err(Error::Precondition("graph is an odd cycle".into()));
    }
    let n = g.order();
    let delta = g.max_degree();
    if delta <= 2 {
        return Coloring::from_colors(two_color(g), 2);
    }

    let all = g.vertices();
    let mut colors = vec![UNASSIGNED; n];
    if let Some(root) = (0..n).find(|&v| g.deg(v) < delta) {
        color_toward_root(g, root, &all, &mut colors);
    } else if let Some(cut) = find_cut_vertex(g) {
        let mut rest = all;
        rest.remove(cut);
        let lobes = g.induced_subgraph(&rest).components();
        let rest_vertices = rest.to_vec();
        for lobe in lobes {
            let mut part: VertexSet = lobe.iter().map(|i| rest_vertices[i]).collect();
            part.insert(cut);
            let mut local = vec![UNASSIGNED; n];
            color_toward_root(g, cut, &part, &mut local);
            let pivot = local[cut];
            for v in part.iter() {
                colors[v] = match local[v] {
                    c if c == pivot => 1,
                    1 => pivot,
                    c => c,
                };
            }
        }
    } else {
        let (x, y, z) = find_brooks_triple(g)
            .expect("a 2-connected regular non-complete graph with Δ >= 3 has a Brooks triple");
        colors[y] = 1;
        colors[z] = 1;
        let mut rest = all;
        rest.remove(y);
        rest.remove(z);
        color_toward_root(g, x, &rest, &mut colors);
    }
    debug_assert!(colors.iter().all(|&c| c != UNASSIGNED && c as usize <= delta));
    Coloring::from_colors(colors, delta)
}
