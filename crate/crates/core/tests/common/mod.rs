//! Brute-force oracles shared by the integration tests. Each one is written
//! independently of the library's search code.

#![allow(dead_code)]

use bklab::{Coloring, Color, Graph};
use rand::Rng;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut m = vec![vec![false; n]; n];
    for (a, b) in g.edges() {
        m[a][b] = true;
        m[b][a] = true;
    }
    m
}

/// Largest subset whose pairs all satisfy `related`, over all 2^n subsets.
fn largest_subset(n: usize, related: impl Fn(usize, usize) -> bool) -> usize {
    let mut best = 0;
    for s in 0u32..1 << n {
        let size = s.count_ones() as usize;
        if size <= best {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        let ok = members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[i + 1..].iter().all(|&b| related(a, b)));
        if ok {
            best = size;
        }
    }
    best
}

pub fn brute_alpha(g: &Graph) -> usize {
    let m = adjacency(g);
    largest_subset(g.order(), |a, b| !m[a][b])
}

pub fn brute_omega(g: &Graph) -> usize {
    let m = adjacency(g);
    largest_subset(g.order(), |a, b| m[a][b])
}

/// Whether some assignment in `{1..k}^n` is proper. Vertex 0 is pinned to
/// color 1, which loses nothing since colors can be renamed.
pub fn brute_k_colorable(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut colors = vec![0usize; n];
    loop {
        if edges.iter().all(|&(a, b)| colors[a] != colors[b]) {
            return true;
        }
        // odometer over vertices 1..n
        let mut i = 1;
        loop {
            if i == n {
                return false;
            }
            colors[i] += 1;
            if colors[i] < k {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

pub fn brute_chromatic(g: &Graph) -> usize {
    (0..=g.order()).find(|&k| brute_k_colorable(g, k)).unwrap()
}

/// Scan of every vertex quartet for an independent one.
pub fn quartet_4k1_free(g: &Graph) -> bool {
    let m = adjacency(g);
    let n = g.order();
    for a in 0..n {
        for b in a + 1..n {
            if m[a][b] {
                continue;
            }
            for c in b + 1..n {
                if m[a][c] || m[b][c] {
                    continue;
                }
                if (c + 1..n).any(|d| !m[a][d] && !m[b][d] && !m[c][d]) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Number of isomorphism classes of graphs on `n` vertices by Burnside's
/// lemma: a permutation fixes `2^c` graphs, `c` its number of cycles on pairs.
pub fn burnside_count(n: usize) -> u64 {
    let perms = permutations(n);
    let mut total: u64 = 0;
    for p in &perms {
        let mut seen = vec![vec![false; n]; n];
        let mut cycles = 0;
        for a in 0..n {
            for b in a + 1..n {
                if seen[a][b] {
                    continue;
                }
                cycles += 1;
                let (mut x, mut y) = (a, b);
                while !seen[x.min(y)][x.max(y)] {
                    seen[x.min(y)][x.max(y)] = true;
                    x = p[x];
                    y = p[y];
                }
            }
        }
        total += 1u64 << cycles;
    }
    total / perms.len() as u64
}

/// Edge bitmask over pairs `(a, b)`, `a < b`, in lexicographic order.
pub fn pair_mask(n: usize, has: impl Fn(usize, usize) -> bool) -> u64 {
    let mut mask = 0u64;
    let mut bit = 0;
    for a in 0..n {
        for b in a + 1..n {
            if has(a, b) {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}

/// Smallest pair mask over all relabelings.
pub fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let m = adjacency(g);
    perms
        .iter()
        .map(|p| {
            let mut inv = vec![0; p.len()];
            for (i, &v) in p.iter().enumerate() {
                inv[v] = i;
            }
            pair_mask(g.order(), |a, b| m[inv[a]][inv[b]])
        })
        .min()
        .unwrap()
}

pub fn graph_from_pair_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for a in 0..n {
        for b in a + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((a, b));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn proper(g: &Graph, c: &Coloring, skip: Option<usize>) -> bool {
    g.edges().all(|(a, b)| {
        Some(a) == skip || Some(b) == skip || c.as_slice()[a] == 0 || c.as_slice()[a] != c.as_slice()[b]
    })
}

/// Random proper coloring of `G - skip` from `{1..k}`: vertices in random
/// order, each taking a random free color. `None` if every attempt gets stuck.
pub fn random_coloring(g: &Graph, skip: Option<usize>, k: usize, rng: &mut impl Rng) -> Option<Coloring> {
    let n = g.order();
    'attempt: for _ in 0..50 {
        let mut colors = vec![0 as Color; n];
        let mut order: Vec<usize> = (0..n).filter(|&v| Some(v) != skip).collect();
        for i in (1..order.len()).rev() {
            order.swap(i, rng.gen_range(0..=i));
        }
        for &v in &order {
            let free: Vec<Color> = (1..=k as Color)
                .filter(|&c| g.neighbors(v).iter().all(|w| colors[w] != c))
                .collect();
            if free.is_empty() {
                continue 'attempt;
            }
            colors[v] = free[rng.gen_range(0..free.len())];
        }
        return Some(Coloring::from_colors(colors, k).unwrap());
    }
    None
}
