use crate::coloring::{Color, EdgeColoring};
use crate::graph::Graph;
use crate::named;

/// Colors along the cycle `0-1-...-(k-1)-0`, edge `i` being `i ~ i+1`.
///
/// Three colors for every `k != 5`: `012` repeated when `3 | k`, prefix
/// `0121` then `012` blocks when `k = 1 (mod 3)`, prefix `01021` then
/// `012` blocks when `k = 2 (mod 3)`. `C_5` needs a fourth color.
pub fn cycle_pattern(k: usize) -> Vec<Color> {
    assert!(k >= 3, "cycles have at least 3 edges");
    let prefix: &[Color] = match (k, k % 3) {
        (4, _) => return vec![0, 1, 0, 2],
        (5, _) => return vec![0, 1, 2, 0, 3],
        (_, 0) => &[],
        (_, 1) => &[0, 1, 2, 1],
        _ => &[0, 1, 0, 2, 1],
    };
    let mut out = prefix.to_vec();
    while out.len() < k {
        out.extend([0, 1, 2]);
    }
    out
}

/// `C_k` with the [`cycle_pattern`] coloring mapped onto canonical edge ids.
pub fn cycle_star_coloring(k: usize) -> (Graph, EdgeColoring) {
    let g = named::cycle(k);
    let mut c = EdgeColoring::uncolored(k);
    for (i, color) in cycle_pattern(k).into_iter().enumerate() {
        c.set(g.edge_between(i, (i + 1) % k).expect("cycle edge"), color);
    }
    (g, c)
}
