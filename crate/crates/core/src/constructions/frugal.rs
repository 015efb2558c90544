use crate::coloring::{Color, EdgeColoring};
use crate::graph::{Graph, Vertex};

/// Proper vertex coloring with at most `Δ + 1` colors and its frugality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrugalColoring {
    pub vertex_colors: Vec<Color>,
    /// Largest number of same-colored vertices in any neighborhood.
    pub beta: usize,
}

impl FrugalColoring {
    pub fn palette_size(&self) -> usize {
        let mut p = self.vertex_colors.clone();
        p.sort_unstable();
        p.dedup();
        p.len()
    }
}

/// Largest multiplicity of a color inside any vertex neighborhood.
pub fn frugality(g: &Graph, colors: &[Color]) -> usize {
    let k = colors.iter().max().map_or(0, |&c| c as usize + 1);
    let mut count = vec![0usize; k];
    let mut beta = 0;
    for v in 0..g.n() {
        for w in g.neighbors(v) {
            count[colors[w] as usize] += 1;
        }
        for w in g.neighbors(v) {
            let c = colors[w] as usize;
            beta = beta.max(count[c]);
            count[c] = 0;
        }
    }
    beta
}

const LOCAL_SEARCH_ROUNDS: usize = 64;

/// Greedy `(Δ+1)`-coloring aiming at small frugality.
///
/// Vertices are taken by decreasing degree (ties by index); each takes the
/// color, among those not on colored neighbors, that keeps the worst
/// neighborhood multiplicity it creates smallest (ties to the lowest color).
/// A bounded local search then recolors vertices sitting in a
/// worst neighborhood whenever that strictly helps.
pub fn frugal_coloring(g: &Graph) -> FrugalColoring {
    let n = g.n();
    let k = g.max_degree() + 1;
    // mult[w][c]: colored neighbors of w with color c
    let mut mult = vec![vec![0usize; k]; n];
    let mut colors: Vec<Option<Color>> = vec![None; n];

    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for &v in &order {
        let mut used = vec![false; k];
        for w in g.neighbors(v) {
            if let Some(c) = colors[w] {
                used[c as usize] = true;
            }
        }
        let best = (0..k)
            .filter(|&c| !used[c])
            .min_by_key(|&c| (g.neighbors(v).map(|w| mult[w][c] + 1).max().unwrap_or(0), c))
            .expect("a vertex of degree d < k always has a free color");
        colors[v] = Some(best as Color);
        for w in g.neighbors(v) {
            mult[w][best] += 1;
        }
    }
    let mut colors: Vec<usize> = colors.into_iter().map(|c| c.unwrap() as usize).collect();

    for _ in 0..LOCAL_SEARCH_ROUNDS {
        let beta = mult.iter().flatten().copied().max().unwrap_or(0);
        if beta <= 1 {
            break;
        }
        let mut improved = false;
        'scan: for w in 0..n {
            for c in 0..k {
                if mult[w][c] != beta {
                    continue;
                }
                for u in g.neighbors(w) {
                    if colors[u] != c {
                        continue;
                    }
                    let taken: Vec<usize> = g.neighbors(u).map(|x| colors[x]).collect();
                    let target = (0..k).find(|&d| {
                        d != c
                            && !taken.contains(&d)
                            && g.neighbors(u).all(|x| mult[x][d] + 1 < beta)
                    });
                    if let Some(d) = target {
                        for x in g.neighbors(u) {
                            mult[x][c] -= 1;
                            mult[x][d] += 1;
                        }
                        colors[u] = d;
                        improved = true;
                        break 'scan;
                    }
                }
            }
        }
        if !improved {
            break;
        }
    }

    let vertex_colors: Vec<Color> = colors.into_iter().map(|c| c as Color).collect();
    let beta = frugality(g, &vertex_colors);
    FrugalColoring {
        vertex_colors,
        beta,
    }
}

/// Greedy strong edge coloring: edges in canonical order take the lowest
/// color absent from every edge within line-graph distance 2.
///
/// Each edge has at most `2Δ(Δ-1)` such neighbors, so at most
/// `2Δ(Δ-1) + 1` colors are used.
pub fn distance2_edge_coloring(g: &Graph) -> EdgeColoring {
    let mut c = EdgeColoring::uncolored(g.m());
    for e in 0..g.m() {
        let mut taken: Vec<Color> = g
            .edges_within_two(e)
            .into_iter()
            .filter_map(|f| c.get(f))
            .collect();
        taken.sort_unstable();
        taken.dedup();
        let color = (0..).find(|x| taken.binary_search(x).is_err()).unwrap();
        c.set(e, color);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::verify::verify_star;

    fn is_proper_vertex(g: &Graph, colors: &[Color]) -> bool {
        g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
    }

    #[test]
    fn frugal_examples() {
        let c4 = named::cycle(4);
        let f = frugal_coloring(&c4);
        assert!(is_proper_vertex(&c4, &f.vertex_colors));
        assert!((2..=3).contains(&f.palette_size()));
        if f.palette_size() == 2 {
            assert_eq!(f.beta, 2);
        }

        let k6 = named::complete(6);
        let f = frugal_coloring(&k6);
        assert_eq!(f.palette_size(), 6);
        assert_eq!(f.beta, 1);

        // minimizing multiplicity spreads the leaves over all 7 colors
        let star = named::complete_bipartite(1, 6);
        let f = frugal_coloring(&star);
        assert!(is_proper_vertex(&star, &f.vertex_colors));
        assert_eq!(f.palette_size(), 7);
        assert_eq!(f.beta, 1);
    }

    #[test]
    fn frugal_bounds_on_named() {
        for g in [
            named::petersen(),
            named::heawood(),
            named::cube(),
            named::complete_bipartite(3, 4),
        ] {
            let f = frugal_coloring(&g);
            assert!(is_proper_vertex(&g, &f.vertex_colors));
            assert!(f.palette_size() <= g.max_degree() + 1);
            assert_eq!(f.beta, frugality(&g, &f.vertex_colors));
        }
    }

    #[test]
    fn distance2_examples() {
        assert_eq!(distance2_edge_coloring(&named::cycle(4)).palette_size(), 4);
        assert_eq!(
            distance2_edge_coloring(&named::complete(2)).palette_size(),
            1
        );
        assert_eq!(distance2_edge_coloring(&named::path(4)).palette_size(), 3);
        let g = named::petersen();
        let c = distance2_edge_coloring(&g);
        assert!(verify_star(&g, &c).unwrap().is_pass());
        for e in 0..g.m() {
            for f in g.edges_within_two(e) {
                assert_ne!(c.color(e), c.color(f));
            }
        }
    }
}
