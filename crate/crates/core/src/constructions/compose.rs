//! Star edge-colorings of arbitrary graphs from a star coloring of
//! `K_{Δ+1}`, a frugal vertex coloring and strong colorings of the
//! two-class subgraphs.
//!
//! With `f` the vertex coloring (its colors are the vertices of `K_{Δ+1}`),
//! `c` a star coloring of `K_{Δ+1}` and `g_ij` a distance-2 coloring of the
//! edges between classes `i` and `j`, edge `uv` gets the pair
//! `(c(f(u) f(v)), g_ij(uv))`. Frugality bounds the degree of every
//! two-class subgraph by `β`, which bounds the second coordinate.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;

use crate::coloring::{Color, EdgeColoring};
use crate::constructions::complete::{color_kn, KnMethod};
use crate::constructions::frugal::{distance2_edge_coloring, frugal_coloring, FrugalColoring};
use crate::error::Result;
use crate::graph::Graph;

/// Default largest `Δ + 1` for which `K_{Δ+1}` is colored by the exact solver.
pub const DEFAULT_EXACT_THRESHOLD: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComposeOptions {
    pub exact_threshold: usize,
}

impl Default for ComposeOptions {
    fn default() -> Self {
        ComposeOptions {
            exact_threshold: DEFAULT_EXACT_THRESHOLD,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductColoring {
    /// `(outer, inner)` per edge id.
    pub pairs: Vec<(Color, Color)>,
    /// `outer * inner_width + inner`, injective on pairs.
    pub flattened: EdgeColoring,
    pub inner_width: Color,
    pub frugal: FrugalColoring,
    /// Coloring of `K_{Δ+1}` used for the outer coordinate.
    pub outer: EdgeColoring,
    pub outer_method: KnMethod,
}

impl ProductColoring {
    pub fn outer_palette(&self) -> usize {
        self.outer.palette_size()
    }
}

fn kn_cache() -> &'static Mutex<HashMap<(usize, bool), EdgeColoring>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, bool), EdgeColoring>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn outer_coloring(n: usize, exact: bool) -> Result<EdgeColoring> {
    if let Some(c) = kn_cache().lock().unwrap().get(&(n, exact)) {
        return Ok(c.clone());
    }
    let method = if exact {
        KnMethod::Exact
    } else {
        KnMethod::Sum
    };
    let (_, c) = color_kn(n, method)?;
    kn_cache().lock().unwrap().insert((n, exact), c.clone());
    Ok(c)
}

pub fn compose_star_coloring(g: &Graph, options: ComposeOptions) -> Result<ProductColoring> {
    let frugal = frugal_coloring(g);
    let classes = g.max_degree() + 1;
    let exact = classes <= options.exact_threshold;
    let outer = outer_coloring(classes, exact)?;
    let kn = crate::named::complete(classes);
    let f = &frugal.vertex_colors;

    let class_pair = |e: usize| {
        let (u, v) = g.edge(e);
        let (a, b) = (f[u], f[v]);
        (a.min(b), a.max(b))
    };
    let mut by_pair: HashMap<(Color, Color), Vec<usize>> = HashMap::new();
    for e in 0..g.m() {
        by_pair.entry(class_pair(e)).or_default().push(e);
    }
    let mut keys: Vec<(Color, Color)> = by_pair.keys().copied().collect();
    keys.sort_unstable();

    // the class-pair subgraphs are edge-disjoint
    let inner_parts: Vec<Vec<(usize, Color)>> = keys
        .par_iter()
        .map(|key| {
            let ids = &by_pair[key];
            let (sub, kept) = g.edge_subgraph(|e| ids.binary_search(&e).is_ok());
            let c = distance2_edge_coloring(&sub);
            kept.iter()
                .enumerate()
                .map(|(local, &e)| (e, c.color(local)))
                .collect()
        })
        .collect();

    let mut inner = vec![0; g.m()];
    for part in inner_parts {
        for (e, c) in part {
            inner[e] = c;
        }
    }
    let inner_width = inner.iter().max().map_or(1, |&c| c + 1);
    let pairs: Vec<(Color, Color)> = (0..g.m())
        .map(|e| {
            let (a, b) = class_pair(e);
            let ke = kn
                .edge_between(a as usize, b as usize)
                .expect("distinct classes");
            (outer.color(ke), inner[e])
        })
        .collect();
    let flattened = EdgeColoring::from_colors(pairs.iter().map(|&(o, i)| o * inner_width + i));
    Ok(ProductColoring {
        pairs,
        flattened,
        inner_width,
        frugal,
        outer,
        outer_method: if exact {
            KnMethod::Exact
        } else {
            KnMethod::Sum
        },
    })
}
