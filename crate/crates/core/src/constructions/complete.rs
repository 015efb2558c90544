//! Star edge-colorings of complete and complete bipartite graphs.

use std::collections::HashMap;

use crate::coloring::{Color, EdgeColoring};
use crate::constructions::ap3::{behrend_set_of_size, Ap3Set};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::named;
use crate::solver::{star_chromatic_index, SolveBudget};
use crate::verify::is_star;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumColoring {
    pub graph: Graph,
    /// Dense colors `0..palette`, order-preserving image of `raw`.
    pub coloring: EdgeColoring,
    /// `x + y` for the edge between elements `x` and `y`, by edge id.
    pub raw: Vec<u64>,
}

/// Colors `K_n`, `n = |a|`, by identifying vertex `i` with the `i`-th
/// element of `a` and giving edge `xy` the color `x + y`.
///
/// Adjacent edges get different sums, and an alternating path
/// `i j k l m` would force `i + m = 2k`, which `a` rules out.
pub fn color_kn_sum(a: &Ap3Set) -> SumColoring {
    let graph = named::complete(a.len().max(1));
    let xs = a.elements();
    let raw: Vec<u64> = graph.edges().iter().map(|&(u, v)| xs[u] + xs[v]).collect();
    let mut palette = raw.clone();
    palette.sort_unstable();
    palette.dedup();
    let coloring = EdgeColoring::from_colors(
        raw.iter()
            .map(|x| palette.binary_search(x).expect("value in palette") as Color),
    );
    SumColoring {
        graph,
        coloring,
        raw,
    }
}

fn check_complete(g: &Graph) -> Result<()> {
    let n = g.n();
    if g.m() == n * n.saturating_sub(1) / 2 {
        Ok(())
    } else {
        Err(Error::NotComplete)
    }
}

/// Star coloring of `K_{n,n}` (left `0..n`, right `n..2n`) from a star
/// coloring of `K_n`: `a_i b_j` and `a_j b_i` take the color of `ij`, and
/// each `a_i b_i` gets a fresh color.
pub fn color_knn_from_kn(kn: &Graph, c: &EdgeColoring) -> Result<(Graph, EdgeColoring)> {
    check_complete(kn)?;
    c.check_total_on(kn)?;
    if !is_star(kn, c) {
        return Err(Error::NotStar);
    }
    let n = kn.n();
    let dense = c.densified();
    let base = dense.palette_size() as Color;
    let knn = named::complete_bipartite(n, n);
    let colors: Vec<Color> = knn
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (i, j) = (a, b - n);
            if i == j {
                base + i as Color
            } else {
                dense.color(kn.edge_between(i, j).expect("complete graph"))
            }
        })
        .collect();
    Ok((knn, EdgeColoring::from_colors(colors)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnMethod {
    /// Sum coloring over a Behrend progression-free set.
    Sum,
    /// Exact solver, unlimited budget. Only practical for small `n`.
    Exact,
    /// Dyadic recursion through `K_{s,s}` blocks, sum colorings at the leaves.
    Recursive,
}

impl std::str::FromStr for KnMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<KnMethod> {
        match s {
            "ap3" | "sum" | "behrend" => Ok(KnMethod::Sum),
            "exact" => Ok(KnMethod::Exact),
            "recursive" => Ok(KnMethod::Recursive),
            other => Err(Error::BadParameter(format!("unknown K_n method `{other}`"))),
        }
    }
}

/// Star coloring of `K_n` by the chosen method.
pub fn color_kn(n: usize, method: KnMethod) -> Result<(Graph, EdgeColoring)> {
    if n == 0 {
        return Err(Error::BadParameter("K_n needs n >= 1".into()));
    }
    match method {
        KnMethod::Sum => {
            let sum = color_kn_sum(&behrend_set_of_size(n));
            Ok((sum.graph, sum.coloring))
        }
        KnMethod::Exact => {
            let g = named::complete(n);
            let idx = star_chromatic_index(&g, SolveBudget::unlimited())
                .expect("unlimited budget never runs out");
            Ok((g, idx.coloring))
        }
        KnMethod::Recursive => {
            let rec = color_kn_recursive(n, KnMethod::Sum)?;
            Ok((rec.graph, rec.coloring))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockInfo {
    /// 1 for the top split.
    pub level: usize,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    /// Colors actually used on this block.
    pub palette: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursiveColoring {
    pub graph: Graph,
    pub coloring: EdgeColoring,
    pub blocks: Vec<BlockInfo>,
    /// `sum_i 2^(i-1) * |palette(K_{s_i,s_i})|` with `s_i = ceil(n / 2^i)`,
    /// evaluated on the block colorings used here.
    pub bound: usize,
}

/// Colors `K_n` by splitting the vertex set in halves, coloring the cross
/// edges with a `K_{s,s}` coloring built from `K_s` by `leaf`, and recursing
/// into both halves. Every block gets its own palette.
pub fn color_kn_recursive(n: usize, leaf: KnMethod) -> Result<RecursiveColoring> {
    if n == 0 {
        return Err(Error::BadParameter("K_n needs n >= 1".into()));
    }
    let graph = named::complete(n);
    let mut coloring = EdgeColoring::uncolored(graph.m());
    let mut blocks = Vec::new();
    let mut knn_cache: HashMap<usize, EdgeColoring> = HashMap::new();
    let mut bound = 0;

    let mut level = 1;
    let mut parts: Vec<Vec<usize>> = vec![(0..n).collect()];
    let mut next_color: Color = 0;
    while parts.iter().any(|p| p.len() > 1) {
        let s = n.div_ceil(1 << level);
        if let std::collections::hash_map::Entry::Vacant(e) = knn_cache.entry(s) {
            let (kn, c) = color_kn(s, leaf)?;
            let (_, cc) = color_knn_from_kn(&kn, &c)?;
            e.insert(cc);
        }
        let block_coloring = &knn_cache[&s];
        let block_graph = named::complete_bipartite(s, s);
        bound += (1 << (level - 1)) * block_coloring.palette_size();

        let mut next_parts = Vec::new();
        for part in parts {
            if part.len() < 2 {
                continue;
            }
            let (left, right) = part.split_at(part.len().div_ceil(2));
            let mut local: HashMap<Color, Color> = HashMap::new();
            for (i, &u) in left.iter().enumerate() {
                for (j, &v) in right.iter().enumerate() {
                    let be = block_graph.edge_between(i, s + j).expect("block edge");
                    let bc = block_coloring.color(be);
                    let fresh = local.len() as Color;
                    let color = *local.entry(bc).or_insert(fresh);
                    coloring.set(
                        graph.edge_between(u, v).expect("complete graph"),
                        next_color + color,
                    );
                }
            }
            next_color += local.len() as Color;
            blocks.push(BlockInfo {
                level,
                left: left.to_vec(),
                right: right.to_vec(),
                palette: local.len(),
            });
            next_parts.push(left.to_vec());
            next_parts.push(right.to_vec());
        }
        parts = next_parts;
        level += 1;
    }
    Ok(RecursiveColoring {
        graph,
        coloring,
        blocks,
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::ap3::{behrend_set, greedy_ap3_set};
    use crate::verify::verify_star;

    #[test]
    fn sum_k2() {
        let s = color_kn_sum(&greedy_ap3_set(2));
        assert_eq!(s.graph.m(), 1);
        assert_eq!(s.coloring.palette_size(), 1);
    }

    #[test]
    fn sum_k4_by_hand() {
        let s = color_kn_sum(&Ap3Set::new(vec![1, 2, 4, 5], 5).unwrap());
        // edges 01 02 03 12 13 23 over elements 1 2 4 5
        assert_eq!(s.raw, vec![3, 5, 6, 6, 7, 9]);
        assert_eq!(s.coloring.palette_size(), 5);
        assert!(verify_star(&s.graph, &s.coloring).unwrap().is_pass());
    }

    #[test]
    fn sum_on_behrend() {
        let a = behrend_set_of_size(50);
        let s = color_kn_sum(&a);
        assert!(verify_star(&s.graph, &s.coloring).unwrap().is_pass());
        assert!(s.coloring.palette_size() as u64 <= 2 * a.span());
        let b = behrend_set(300);
        let s = color_kn_sum(&b);
        assert!(verify_star(&s.graph, &s.coloring).unwrap().is_pass());
    }

    #[test]
    fn knn_small() {
        let (k1, c1) = (named::complete(1), EdgeColoring::uncolored(0));
        let (g, c) = color_knn_from_kn(&k1, &c1).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(c.palette_size(), 1);

        let s = color_kn_sum(&Ap3Set::new(vec![1, 2, 4, 5], 5).unwrap());
        let (g, c) = color_knn_from_kn(&s.graph, &s.coloring).unwrap();
        assert_eq!(g.m(), 16);
        assert!(c.palette_size() <= 5 + 4);
        assert!(verify_star(&g, &c).unwrap().is_pass());
    }

    #[test]
    fn knn_rejects_bad_input() {
        let k3 = named::complete(3);
        let bad = EdgeColoring::from_colors([0, 0, 1]);
        assert_eq!(color_knn_from_kn(&k3, &bad), Err(Error::NotStar));
        let p3 = named::path(3);
        assert_eq!(
            color_knn_from_kn(&p3, &EdgeColoring::from_colors([0, 1])),
            Err(Error::NotComplete)
        );
    }

    #[test]
    fn recursive_small() {
        let r = color_kn_recursive(2, KnMethod::Sum).unwrap();
        assert_eq!(r.coloring.palette_size(), 1);
        let r = color_kn_recursive(4, KnMethod::Sum).unwrap();
        assert!(verify_star(&r.graph, &r.coloring).unwrap().is_pass());
        assert_eq!(r.blocks.len(), 3);
        assert_eq!(r.bound, 3 + 2);
        assert!(r.coloring.palette_size() <= 5);
        let r = color_kn_recursive(1, KnMethod::Sum).unwrap();
        assert_eq!(r.graph.m(), 0);
    }

    #[test]
    fn recursive_sixteen_and_odd() {
        for n in [5, 7, 13, 16] {
            for leaf in [KnMethod::Sum, KnMethod::Recursive] {
                let r = color_kn_recursive(n, leaf).unwrap();
                assert!(r.coloring.is_total());
                assert!(
                    verify_star(&r.graph, &r.coloring).unwrap().is_pass(),
                    "n={n}"
                );
                let used: usize = r.blocks.iter().map(|b| b.palette).sum();
                assert_eq!(used, r.coloring.palette_size());
                assert!(used <= r.bound);
                if n == 16 {
                    assert_eq!(used, r.bound);
                }
            }
        }
    }
}
