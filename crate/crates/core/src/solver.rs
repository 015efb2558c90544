//! Exact star edge-coloring by branch and bound.
//!
//! The search colors one edge per node. It keeps, for every uncolored edge,
//! the set of colors that would immediately close an improper pair or an
//! alternating `a, b, a, b` path or 4-cycle with already colored edges, and
//! always branches on the edge with the fewest remaining colors (ties go to
//! the edge with more colored edges nearby, then to the lower edge id).
//! Colors are tried lowest first, and an edge may open at most one new
//! color beyond those already used, which removes palette permutations.
//!
//! Identical inputs give identical outcomes. The parallel entry point splits
//! the top of the tree across threads; it reports the same status as the
//! sequential search but may return a different witness.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::coloring::{Color, EdgeColoring};
use crate::constructions::distance2_edge_coloring;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::verify::{edge_with_color, first_star_violation};

type Mask = u128;

/// Largest palette the search handles; larger requests are answered
/// directly when `k >= |E|`.
pub const MAX_SEARCH_COLORS: usize = Mask::BITS as usize;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveBudget {
    pub max_nodes: Option<u64>,
    pub time_cap: Option<Duration>,
}

impl SolveBudget {
    pub fn unlimited() -> SolveBudget {
        SolveBudget::default()
    }

    pub fn nodes(max_nodes: u64) -> SolveBudget {
        SolveBudget {
            max_nodes: Some(max_nodes),
            time_cap: None,
        }
    }

    pub fn time(cap: Duration) -> SolveBudget {
        SolveBudget {
            max_nodes: None,
            time_cap: Some(cap),
        }
    }

    pub fn is_unlimited(&self) -> bool {
        self.max_nodes.is_none() && self.time_cap.is_none()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Feasible,
    Infeasible,
    ExhaustedBudget,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    /// Present exactly when `status` is `Feasible`.
    pub coloring: Option<EdgeColoring>,
    pub nodes_explored: u64,
}

impl SolveOutcome {
    pub fn is_feasible(&self) -> bool {
        self.status == SolveStatus::Feasible
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarIndex {
    pub value: usize,
    pub coloring: EdgeColoring,
    pub nodes_explored: u64,
}

/// The budget ran out before the index was pinned down: every palette
/// below `lower` is infeasible and `upper_witness` is a star coloring with
/// `upper` colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexBracket {
    pub lower: usize,
    pub upper: usize,
    pub upper_witness: EdgeColoring,
    pub nodes_explored: u64,
}

struct Limits<'a> {
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    /// shared by parallel workers: node counter and early-stop flag
    shared: Option<(&'a AtomicU64, &'a AtomicBool)>,
}

enum Step {
    Found,
    Dead,
    Stop,
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<Option<Color>>,
    at: Vec<Mask>,
    colored: usize,
    max_used: Option<Color>,
    nodes: u64,
    limits: Limits<'a>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize, limits: Limits<'a>) -> Search<'a> {
        Search {
            g,
            k,
            colors: vec![None; g.m()],
            at: vec![0; g.n()],
            colored: 0,
            max_used: None,
            nodes: 0,
            limits,
        }
    }

    fn assign(&mut self, e: EdgeId, c: Color) {
        let (u, v) = self.g.edge(e);
        self.colors[e] = Some(c);
        self.at[u] |= 1 << c;
        self.at[v] |= 1 << c;
        self.colored += 1;
    }

    fn unassign(&mut self, e: EdgeId) {
        let (u, v) = self.g.edge(e);
        let c = self.colors[e].take().expect("edge colored");
        self.at[u] &= !(1 << c);
        self.at[v] &= !(1 << c);
        self.colored -= 1;
    }

    /// Colors that cannot go on the uncolored edge `e` right now.
    fn forbidden(&self, e: EdgeId) -> Mask {
        let g = self.g;
        let col = &self.colors;
        let (u, v) = g.edge(e);
        let mut mask = self.at[u] | self.at[v];
        for (p0, p1) in [(u, v), (v, u)] {
            // e is the first edge: p0 p1 | p2 (y) p3 (x) p4 (y)
            for &(p2, f) in g.incident(p1) {
                let Some(y) = col[f] else { continue };
                for &(p3, h) in g.incident(p2) {
                    let Some(x) = col[h] else { continue };
                    if h == f || p3 == p0 || mask & (1 << x) != 0 {
                        continue;
                    }
                    if self.at[p3] & (1 << y) != 0 {
                        mask |= 1 << x;
                    }
                }
            }
            // e is the second edge: p0' (y) p0 p1 | p3 (y) then any x at p3
            for &(_, f) in g.incident(p0) {
                let Some(y) = col[f] else { continue };
                if let Some((p3, _)) = edge_with_color(g, col, p1, y) {
                    mask |= self.at[p3] & !(1 << y);
                }
            }
        }
        mask
    }

    fn out_of_budget(&mut self) -> bool {
        self.nodes += 1;
        if let Some((counter, stop)) = self.limits.shared {
            let total = counter.fetch_add(1, Ordering::Relaxed) + 1;
            if stop.load(Ordering::Relaxed) {
                return true;
            }
            if self.limits.max_nodes.is_some_and(|cap| total > cap) {
                return true;
            }
        } else if self.limits.max_nodes.is_some_and(|cap| self.nodes > cap) {
            return true;
        }
        if self.nodes.is_multiple_of(1024) {
            if let Some(deadline) = self.limits.deadline {
                if Instant::now() >= deadline {
                    return true;
                }
            }
        }
        false
    }

    /// Picks the next edge and its candidate colors, or `None` when some
    /// uncolored edge has no color left.
    fn choose(&self) -> Option<(EdgeId, Vec<Color>)> {
        let full: Mask = if self.k == MAX_SEARCH_COLORS {
            Mask::MAX
        } else {
            (1 << self.k) - 1
        };
        let mut best: Option<(u32, usize, EdgeId, Mask)> = None;
        for e in 0..self.g.m() {
            if self.colors[e].is_some() {
                continue;
            }
            let domain = full & !self.forbidden(e);
            if domain == 0 {
                return None;
            }
            let size = domain.count_ones();
            let (u, v) = self.g.edge(e);
            let saturation = (self.at[u] | self.at[v]).count_ones() as usize;
            let better = match best {
                None => true,
                Some((bs, bsat, _, _)) => size < bs || (size == bs && saturation > bsat),
            };
            if better {
                best = Some((size, saturation, e, domain));
            }
        }
        let (_, _, e, domain) = best?;
        let open = self.max_used.map_or(0, |c| c + 1);
        let candidates = (0..=open.min(self.k as Color - 1))
            .filter(|&c| domain & (1 << c) != 0)
            .collect();
        Some((e, candidates))
    }

    fn run(&mut self) -> Step {
        if self.out_of_budget() {
            return Step::Stop;
        }
        if self.colored == self.g.m() {
            debug_assert!(first_star_violation(self.g, &self.colors).is_none());
            return Step::Found;
        }
        let Some((e, candidates)) = self.choose() else {
            return Step::Dead;
        };
        for c in candidates {
            let prev_max = self.max_used;
            self.assign(e, c);
            self.max_used = Some(prev_max.map_or(c, |m| m.max(c)));
            match self.run() {
                Step::Dead => {}
                other => return other,
            }
            self.max_used = prev_max;
            self.unassign(e);
        }
        Step::Dead
    }

    /// Partial states `depth` levels down, in the order the sequential
    /// search would visit them.
    fn frontier(&mut self, depth: usize, out: &mut Vec<(Vec<Option<Color>>, Option<Color>)>) {
        if depth == 0 || self.colored == self.g.m() {
            out.push((self.colors.clone(), self.max_used));
            return;
        }
        let Some((e, candidates)) = self.choose() else {
            return;
        };
        for c in candidates {
            let prev_max = self.max_used;
            self.assign(e, c);
            self.max_used = Some(prev_max.map_or(c, |m| m.max(c)));
            self.frontier(depth - 1, out);
            self.max_used = prev_max;
            self.unassign(e);
        }
    }
}

fn trivial_outcome(g: &Graph, k: usize) -> Option<SolveOutcome> {
    if g.m() == 0 {
        return Some(SolveOutcome {
            status: SolveStatus::Feasible,
            coloring: Some(EdgeColoring::uncolored(0)),
            nodes_explored: 0,
        });
    }
    if k >= g.m() {
        // all edges distinct is always star
        return Some(SolveOutcome {
            status: SolveStatus::Feasible,
            coloring: Some(EdgeColoring::from_colors(0..g.m() as Color)),
            nodes_explored: 0,
        });
    }
    if k < g.max_degree() {
        return Some(SolveOutcome {
            status: SolveStatus::Infeasible,
            coloring: None,
            nodes_explored: 0,
        });
    }
    None
}

fn check_palette(k: usize) -> Result<()> {
    if k > MAX_SEARCH_COLORS {
        return Err(Error::BadParameter(format!(
            "search supports at most {MAX_SEARCH_COLORS} colors, asked for {k}"
        )));
    }
    Ok(())
}

fn finish(g: &Graph, step: Step, colors: Vec<Option<Color>>, nodes: u64) -> SolveOutcome {
    match step {
        Step::Found => {
            let coloring = EdgeColoring::from_partial(colors);
            assert!(
                first_star_violation(g, coloring.as_slice()).is_none(),
                "solver produced a coloring that fails verification"
            );
            SolveOutcome {
                status: SolveStatus::Feasible,
                coloring: Some(coloring),
                nodes_explored: nodes,
            }
        }
        Step::Dead => SolveOutcome {
            status: SolveStatus::Infeasible,
            coloring: None,
            nodes_explored: nodes,
        },
        Step::Stop => SolveOutcome {
            status: SolveStatus::ExhaustedBudget,
            coloring: None,
            nodes_explored: nodes,
        },
    }
}

/// Decides whether `g` has a star edge-coloring with at most `k` colors.
pub fn star_decision(g: &Graph, k: usize, budget: SolveBudget) -> Result<SolveOutcome> {
    if let Some(out) = trivial_outcome(g, k) {
        return Ok(out);
    }
    check_palette(k)?;
    let limits = Limits {
        max_nodes: budget.max_nodes,
        deadline: budget.time_cap.map(|d| Instant::now() + d),
        shared: None,
    };
    let mut search = Search::new(g, k, limits);
    let step = search.run();
    let nodes = search.nodes;
    Ok(finish(g, step, search.colors, nodes))
}

/// Parallel variant of [`star_decision`]: the states `split_depth` levels
/// below the root are searched concurrently. The node cap applies to the
/// total across workers.
pub fn star_decision_parallel(
    g: &Graph,
    k: usize,
    budget: SolveBudget,
    split_depth: usize,
) -> Result<SolveOutcome> {
    if let Some(out) = trivial_outcome(g, k) {
        return Ok(out);
    }
    check_palette(k)?;
    let deadline = budget.time_cap.map(|d| Instant::now() + d);
    let mut root = Search::new(
        g,
        k,
        Limits {
            max_nodes: None,
            deadline: None,
            shared: None,
        },
    );
    let mut frontier = Vec::new();
    root.frontier(split_depth, &mut frontier);
    let counter = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let results: Vec<(usize, Step, Vec<Option<Color>>)> = frontier
        .into_par_iter()
        .enumerate()
        .map(|(i, (colors, max_used))| {
            let mut search = Search::new(
                g,
                k,
                Limits {
                    max_nodes: budget.max_nodes,
                    deadline,
                    shared: Some((&counter, &stop)),
                },
            );
            for (e, c) in colors.iter().enumerate() {
                if let Some(c) = *c {
                    search.assign(e, c);
                }
            }
            search.max_used = max_used;
            let step = search.run();
            if matches!(step, Step::Found) {
                stop.store(true, Ordering::Relaxed);
            }
            (i, step, search.colors)
        })
        .collect();
    let nodes = counter.load(Ordering::Relaxed) + root.nodes;
    if let Some((_, _, colors)) = results.iter().find(|(_, s, _)| matches!(s, Step::Found)) {
        return Ok(finish(g, Step::Found, colors.clone(), nodes));
    }
    let step = if results.iter().all(|(_, s, _)| matches!(s, Step::Dead)) {
        Step::Dead
    } else {
        Step::Stop
    };
    Ok(finish(g, step, Vec::new(), nodes))
}

/// Trivial lower bound used to start the search: the maximum degree, and 4
/// for cubic graphs.
pub fn index_lower_bound(g: &Graph) -> usize {
    if g.m() == 0 {
        return 0;
    }
    let delta = g.max_degree();
    if g.is_cubic() {
        delta.max(4)
    } else {
        delta
    }
}

/// Smallest `k` for which [`star_decision`] is feasible, with a witness.
///
/// The budget covers the whole sequence of decision calls.
pub fn star_chromatic_index(g: &Graph, budget: SolveBudget) -> Result<StarIndex, IndexBracket> {
    let start = Instant::now();
    let upper_witness = distance2_edge_coloring(g);
    let upper = upper_witness.palette_size();
    let mut nodes = 0;
    let mut k = index_lower_bound(g);
    loop {
        let remaining = SolveBudget {
            max_nodes: budget.max_nodes.map(|n| n.saturating_sub(nodes)),
            time_cap: budget.time_cap.map(|d| d.saturating_sub(start.elapsed())),
        };
        let outcome = if k >= upper {
            // the greedy coloring already settles it
            SolveOutcome {
                status: SolveStatus::Feasible,
                coloring: Some(upper_witness.clone()),
                nodes_explored: 0,
            }
        } else {
            match star_decision(g, k, remaining) {
                Ok(out) => out,
                Err(_) => SolveOutcome {
                    status: SolveStatus::ExhaustedBudget,
                    coloring: None,
                    nodes_explored: 0,
                },
            }
        };
        nodes += outcome.nodes_explored;
        match outcome.status {
            SolveStatus::Feasible => {
                return Ok(StarIndex {
                    value: k,
                    coloring: outcome.coloring.expect("feasible outcome has a coloring"),
                    nodes_explored: nodes,
                })
            }
            SolveStatus::Infeasible => k += 1,
            SolveStatus::ExhaustedBudget => {
                return Err(IndexBracket {
                    lower: k,
                    upper,
                    upper_witness,
                    nodes_explored: nodes,
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::verify::verify_star;

    fn decide(g: &Graph, k: usize) -> SolveStatus {
        star_decision(g, k, SolveBudget::unlimited())
            .unwrap()
            .status
    }

    #[test]
    fn cycles() {
        assert_eq!(decide(&named::cycle(5), 3), SolveStatus::Infeasible);
        assert_eq!(decide(&named::cycle(5), 4), SolveStatus::Feasible);
        assert_eq!(decide(&named::cycle(6), 3), SolveStatus::Feasible);
    }

    #[test]
    fn small_indices() {
        let idx = |g: &Graph| {
            star_chromatic_index(g, SolveBudget::unlimited())
                .unwrap()
                .value
        };
        assert_eq!(idx(&named::complete(2)), 1);
        assert_eq!(idx(&named::cycle(4)), 3);
        assert_eq!(idx(&named::path(5)), 3);
        assert_eq!(idx(&Graph::empty(3)), 0);
        let k4 = idx(&named::complete(4));
        assert!((4..=7).contains(&k4));
    }

    #[test]
    fn k33_and_cube() {
        let k33 = named::complete_bipartite(3, 3);
        assert_eq!(decide(&k33, 5), SolveStatus::Infeasible);
        assert_eq!(decide(&k33, 6), SolveStatus::Feasible);
        let out = star_decision(&named::cube(), 4, SolveBudget::unlimited()).unwrap();
        let c = out.coloring.unwrap();
        assert!(verify_star(&named::cube(), &c).unwrap().is_pass());
        assert!(c.palette_size() <= 4);
    }

    #[test]
    fn deterministic() {
        let g = named::petersen();
        let a = star_decision(&g, 5, SolveBudget::unlimited()).unwrap();
        let b = star_decision(&g, 5, SolveBudget::unlimited()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let g = named::complete(6);
        let out = star_decision(&g, 7, SolveBudget::nodes(10)).unwrap();
        assert_eq!(out.status, SolveStatus::ExhaustedBudget);
        assert!(out.coloring.is_none());
        let err = star_chromatic_index(&g, SolveBudget::nodes(10)).unwrap_err();
        assert!(err.lower >= 5 && err.upper >= err.lower);
        assert!(verify_star(&g, &err.upper_witness).unwrap().is_pass());
    }

    #[test]
    fn parallel_agrees() {
        for (g, k) in [
            (named::petersen(), 4),
            (named::petersen(), 5),
            (named::complete_bipartite(3, 3), 5),
            (named::cube(), 4),
        ] {
            let seq = star_decision(&g, k, SolveBudget::unlimited()).unwrap();
            let par = star_decision_parallel(&g, k, SolveBudget::unlimited(), 3).unwrap();
            assert_eq!(seq.status, par.status);
            if let Some(c) = par.coloring {
                assert!(verify_star(&g, &c).unwrap().is_pass());
            }
        }
    }
}
