//! Star 7-colorings of 2-connected cubic graphs by matching decomposition.
//!
//! A perfect matching `M` gets colors 3..=6 from a proper 4-coloring of the
//! auxiliary graph `K` on `M` (two matching edges adjacent when an edge of
//! the graph joins their ends); the 2-factor `G - M` gets colors 0..=2 cycle
//! by cycle. A 5-cycle borrows one matching color on a single edge. When `K`
//! is `K_5` the graph has 10 vertices and is either the Petersen graph or
//! has a Hamiltonian 2-factor with five chords; both are handled directly.

use crate::coloring::{Color, EdgeColoring};
use crate::cubic::cover::find_cover;
use crate::cubic::cycles::cycle_pattern;
use crate::cubic::lift::lift_coloring;
use crate::cubic::pattern::reference_petersen_coloring;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::named;
use crate::solver::{star_decision, SolveBudget, SolveStatus};
use crate::verify::{can_extend, is_star};

/// Matchings enumerated before giving up on the decomposition.
pub const MATCHING_LIMIT: usize = 1 << 16;

const CYCLE_COLORS: Color = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Perfect matching, ascending edge ids.
    pub matching: Vec<EdgeId>,
    /// Cycles of `G - M` as vertex sequences.
    pub cycles: Vec<Vec<Vertex>>,
    /// Vertex `i` stands for `matching[i]`.
    pub auxiliary: Graph,
    /// Colors `0..4` on the vertices of `auxiliary`, absent when `K = K_5`.
    pub k_coloring: Option<Vec<Color>>,
}

impl Decomposition {
    pub fn has_short_cycle(&self) -> bool {
        self.cycles.iter().any(|c| c.len() <= 4)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SevenRoute {
    Decomposition,
    Petersen,
    TenCycle,
    Solver,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SevenColoring {
    pub coloring: EdgeColoring,
    pub route: SevenRoute,
    /// The decomposition the coloring came from, if any.
    pub decomposition: Option<Decomposition>,
}

fn check_cubic_connected(g: &Graph) -> Result<()> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) != 3) {
        return Err(Error::NotCubic {
            vertex: v,
            degree: g.degree(v),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Checks the input of the decomposition: simple, cubic, 2-connected.
pub fn require_two_connected_cubic(g: &Graph) -> Result<()> {
    check_cubic_connected(g)?;
    if let Some(&e) = g.bridges().first() {
        let (u, v) = g.edge(e);
        return Err(Error::Bridge(u, v));
    }
    Ok(())
}

/// Perfect matchings in lexicographic order of their edge choices, at most
/// `limit` of them.
pub fn perfect_matchings(g: &Graph, limit: usize) -> Vec<Vec<EdgeId>> {
    fn rec(
        g: &Graph,
        matched: &mut [bool],
        chosen: &mut Vec<EdgeId>,
        out: &mut Vec<Vec<EdgeId>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        let Some(v) = matched.iter().position(|&m| !m) else {
            let mut m = chosen.clone();
            m.sort_unstable();
            out.push(m);
            return;
        };
        matched[v] = true;
        for &(w, e) in g.incident(v) {
            if !matched[w] {
                matched[w] = true;
                chosen.push(e);
                rec(g, matched, chosen, out, limit);
                chosen.pop();
                matched[w] = false;
            }
        }
        matched[v] = false;
    }
    let mut out = Vec::new();
    rec(g, &mut vec![false; g.n()], &mut Vec::new(), &mut out, limit);
    out
}

fn two_factor_cycles(g: &Graph, in_matching: &[bool]) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.n()];
    let mut cycles = Vec::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = g
                .incident(cur)
                .iter()
                .find(|&&(w, e)| !in_matching[e] && w != prev && (w == start || !seen[w]))
                .map(|&(w, _)| w);
            match next {
                Some(w) if w == start => break,
                Some(w) => {
                    seen[w] = true;
                    cycle.push(w);
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        cycles.push(cycle);
    }
    cycles
}

fn auxiliary_graph(g: &Graph, matching: &[EdgeId]) -> Graph {
    let mut owner = vec![0; g.n()];
    for (i, &e) in matching.iter().enumerate() {
        let (u, v) = g.edge(e);
        owner[u] = i;
        owner[v] = i;
    }
    let mut pairs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (owner[u].min(owner[v]), owner[u].max(owner[v])))
        .filter(|&(a, b)| a != b)
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    Graph::new(matching.len(), pairs).expect("auxiliary graph is simple")
}

/// Proper coloring with `k` colors: greedy first, exact backtracking in
/// saturation order if greedy needs more.
fn color_vertices(h: &Graph, k: usize) -> Option<Vec<Color>> {
    let mut colors: Vec<Option<Color>> = vec![None; h.n()];
    let greedy_ok = (0..h.n()).all(|v| {
        let free = (0..k as Color).find(|&c| h.neighbors(v).all(|w| colors[w] != Some(c)));
        colors[v] = free;
        free.is_some()
    });
    if greedy_ok {
        return Some(colors.into_iter().map(Option::unwrap).collect());
    }
    fn rec(h: &Graph, k: usize, colors: &mut [Option<Color>]) -> bool {
        let pick = (0..h.n())
            .filter(|&v| colors[v].is_none())
            .max_by_key(|&v| {
                let mut sat = 0u32;
                for w in h.neighbors(v) {
                    if let Some(c) = colors[w] {
                        sat |= 1 << c;
                    }
                }
                (sat.count_ones(), h.degree(v), std::cmp::Reverse(v))
            });
        let Some(v) = pick else { return true };
        for c in 0..k as Color {
            if h.neighbors(v).all(|w| colors[w] != Some(c)) {
                colors[v] = Some(c);
                if rec(h, k, colors) {
                    return true;
                }
            }
        }
        colors[v] = None;
        false
    }
    let mut colors = vec![None; h.n()];
    rec(h, k, &mut colors).then(|| colors.into_iter().map(Option::unwrap).collect())
}

fn is_k5_component(h: &Graph, comp: &[Vertex]) -> bool {
    comp.len() == 5 && comp.iter().all(|&v| h.degree(v) == 4)
}

pub fn decompose(g: &Graph, matching: &[EdgeId]) -> Decomposition {
    let mut in_matching = vec![false; g.m()];
    for &e in matching {
        in_matching[e] = true;
    }
    let cycles = two_factor_cycles(g, &in_matching);
    let auxiliary = auxiliary_graph(g, matching);
    let has_k5 = auxiliary
        .components()
        .iter()
        .any(|c| is_k5_component(&auxiliary, c));
    let k_coloring = if has_k5 {
        None
    } else {
        color_vertices(&auxiliary, 4)
    };
    Decomposition {
        matching: matching.to_vec(),
        cycles,
        auxiliary,
        k_coloring,
    }
}

fn cycle_edges(g: &Graph, cycle: &[Vertex]) -> Vec<EdgeId> {
    let k = cycle.len();
    (0..k)
        .map(|i| {
            g.edge_between(cycle[i], cycle[(i + 1) % k])
                .expect("cycle edge")
        })
        .collect()
}

/// Candidate `(position in cycle, color)` pairs for a 5-cycle: the case
/// analysis picks first, then every remaining pair.
fn five_cycle_candidates(
    g: &Graph,
    cycle: &[Vertex],
    c: &EdgeColoring,
    in_matching: &[bool],
) -> Vec<(usize, Color)> {
    let matching_color_at = |v: Vertex| {
        g.incident(v)
            .iter()
            .find(|&&(_, e)| in_matching[e])
            .map(|&(_, e)| c.color(e))
            .expect("matched vertex")
    };
    let f: Vec<Color> = cycle.iter().map(|&v| matching_color_at(v)).collect();
    let count = |x: Color| f.iter().filter(|&&y| y == x).count();
    let mut out = Vec::new();
    // a color seen once on F: the cycle edge opposite its vertex
    for (i, &x) in f.iter().enumerate() {
        if count(x) == 1 {
            out.push(((i + 2) % 5, x));
        }
    }
    // a matching color absent from F: any edge
    for x in CYCLE_COLORS..CYCLE_COLORS + 4 {
        if count(x) == 0 {
            out.extend((0..5).map(|p| (p, x)));
        }
    }
    for p in 0..5 {
        for x in CYCLE_COLORS..CYCLE_COLORS + 4 {
            if !out.contains(&(p, x)) {
                out.push((p, x));
            }
        }
    }
    out
}

fn color_from_decomposition(g: &Graph, d: &Decomposition) -> Option<EdgeColoring> {
    let k_colors = d.k_coloring.as_ref()?;
    let mut c = EdgeColoring::uncolored(g.m());
    let mut in_matching = vec![false; g.m()];
    for (i, &e) in d.matching.iter().enumerate() {
        in_matching[e] = true;
        c.set(e, CYCLE_COLORS + k_colors[i]);
    }
    let mut fives = Vec::new();
    for cycle in &d.cycles {
        if cycle.len() == 5 {
            fives.push(cycle);
            continue;
        }
        for (e, color) in cycle_edges(g, cycle)
            .into_iter()
            .zip(cycle_pattern(cycle.len()))
        {
            c.set(e, color);
        }
    }
    for cycle in fives {
        let edges = cycle_edges(g, cycle);
        let choice = five_cycle_candidates(g, cycle, &c, &in_matching)
            .into_iter()
            .find(|&(p, x)| can_extend(g, &c, edges[p], x).unwrap_or(false))?;
        let (p, x) = choice;
        c.set(edges[p], x);
        for (step, color) in [0, 1, 2, 0].into_iter().enumerate() {
            c.set(edges[(p + 1 + step) % 5], color);
        }
    }
    is_star(g, &c).then_some(c)
}

fn petersen_coloring(g: &Graph) -> Option<EdgeColoring> {
    let cover = find_cover(g, &named::petersen())?;
    let (_, pc) = reference_petersen_coloring();
    lift_coloring(&cover, &pc).ok()
}

/// The 10-cycle case: chords get colors 0..5, cycle edges 0, 3 and 6
/// (counted from some start in some direction) get colors from 0..5, the
/// remaining seven cycle edges get 5 and 6. Start, direction and the
/// choices are searched in order; the first star coloring wins.
fn ten_cycle_coloring(g: &Graph, d: &Decomposition) -> Option<EdgeColoring> {
    let [cycle] = d.cycles.as_slice() else {
        return None;
    };
    if cycle.len() != 10 {
        return None;
    }
    let mut base = EdgeColoring::uncolored(g.m());
    for (i, &e) in d.matching.iter().enumerate() {
        base.set(e, i as Color);
    }
    for reversed in [false, true] {
        let mut order = cycle.clone();
        if reversed {
            order.reverse();
        }
        for start in 0..10 {
            let rotated: Vec<Vertex> = (0..10).map(|i| order[(start + i) % 10]).collect();
            let edges = cycle_edges(g, &rotated);
            for picks in 0..125u32 {
                let mut c = base.clone();
                let chosen = [picks % 5, picks / 5 % 5, picks / 25];
                let fits = [0, 3, 6].iter().zip(chosen).all(|(&pos, color)| {
                    let ok = can_extend(g, &c, edges[pos], color).unwrap_or(false);
                    c.set(edges[pos], color);
                    ok
                });
                if !fits {
                    continue;
                }
                for flips in 0..8u32 {
                    let mut c = c.clone();
                    let runs: [&[usize]; 3] = [&[1, 2], &[4, 5], &[7, 8, 9]];
                    for (r, run) in runs.iter().enumerate() {
                        let first = 5 + (flips >> r & 1);
                        for (i, &pos) in run.iter().enumerate() {
                            c.set(edges[pos], if i % 2 == 0 { first } else { 11 - first });
                        }
                    }
                    if is_star(g, &c) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

/// Full report of [`cubic_seven_coloring`], including the route taken.
pub fn cubic_seven_coloring_report(g: &Graph) -> Result<SevenColoring> {
    check_cubic_connected(g)?;
    match require_two_connected_cubic(g) {
        Ok(()) => {}
        Err(Error::Bridge(..)) => return solver_coloring(g),
        Err(e) => return Err(e),
    }
    let mut matchings = perfect_matchings(g, MATCHING_LIMIT);
    let mut cycle_free = Vec::with_capacity(matchings.len());
    let mut rest = Vec::new();
    for m in matchings.drain(..) {
        let d = decompose(g, &m);
        if d.has_short_cycle() {
            rest.push(d);
        } else {
            cycle_free.push(d);
        }
    }
    for d in cycle_free.into_iter().chain(rest) {
        let attempt = if d.k_coloring.is_some() {
            color_from_decomposition(g, &d).map(|c| (c, SevenRoute::Decomposition))
        } else if g.n() == 10 && d.cycles.len() == 2 && d.cycles.iter().all(|c| c.len() == 5) {
            petersen_coloring(g).map(|c| (c, SevenRoute::Petersen))
        } else if g.n() == 10 {
            ten_cycle_coloring(g, &d).map(|c| (c, SevenRoute::TenCycle))
        } else {
            None
        };
        if let Some((coloring, route)) = attempt {
            return Ok(SevenColoring {
                coloring,
                route,
                decomposition: Some(d),
            });
        }
    }
    solver_coloring(g)
}

fn solver_coloring(g: &Graph) -> Result<SevenColoring> {
    let outcome = star_decision(g, 7, SolveBudget::unlimited())?;
    match (outcome.status, outcome.coloring) {
        (SolveStatus::Feasible, Some(coloring)) => Ok(SevenColoring {
            coloring,
            route: SevenRoute::Solver,
            decomposition: None,
        }),
        _ => Err(Error::Exhausted),
    }
}

/// A star coloring with at most 7 colors of a simple connected cubic
/// graph. Graphs with a bridge go to the exact solver.
pub fn cubic_seven_coloring(g: &Graph) -> Result<EdgeColoring> {
    cubic_seven_coloring_report(g).map(|r| r.coloring)
}
