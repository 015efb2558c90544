//! Star edge-coloring verification.
//!
//! A coloring is a star edge-coloring when it is proper and no path on four
//! edges (five distinct vertices) and no 4-cycle carries only two colors.
//! Under a proper coloring such a structure must alternate `a, b, a, b`, so
//! the scan walks every edge as the second edge of a candidate path and
//! follows the unique continuation of each color.

use std::fmt;

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    ImproperPair,
    BicoloredPath4,
    BicoloredCycle4,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    /// Offending edges in walk order.
    pub edges: Vec<EdgeId>,
    /// Walk vertices: 3 for an improper pair, 5 for a path, 4 for a cycle.
    pub vertices: Vec<Vertex>,
    pub colors: Vec<Color>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ViolationKind::ImproperPair => "improper pair",
            ViolationKind::BicoloredPath4 => "bi-colored path of length 4",
            ViolationKind::BicoloredCycle4 => "bi-colored 4-cycle",
        };
        let walk: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "{kind}: vertices {} edges {:?} colors {:?}",
            walk.join("-"),
            self.edges,
            self.colors
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Violation),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(v) => Some(v),
        }
    }
}

/// The edge of color `color` at `v`, if any.
pub(crate) fn edge_with_color(
    g: &Graph,
    c: &[Option<Color>],
    v: Vertex,
    color: Color,
) -> Option<(Vertex, EdgeId)> {
    g.incident(v)
        .iter()
        .copied()
        .find(|&(_, f)| c[f] == Some(color))
}

pub fn is_proper(g: &Graph, c: &EdgeColoring) -> Result<Verdict> {
    c.check_total_on(g)?;
    Ok(first_improper_pair(g, c.as_slice()).map_or(Verdict::Pass, Verdict::Fail))
}

fn first_improper_pair(g: &Graph, c: &[Option<Color>]) -> Option<Violation> {
    let mut best: Option<(EdgeId, EdgeId, Vertex)> = None;
    for v in 0..g.n() {
        let inc = g.incident(v);
        for (i, &(_, e)) in inc.iter().enumerate() {
            for &(_, f) in &inc[i + 1..] {
                if c[e].is_some() && c[e] == c[f] {
                    let key = (e.min(f), e.max(f), v);
                    if best.is_none_or(|b| key < b) {
                        best = Some(key);
                    }
                }
            }
        }
    }
    best.map(|(e, f, v)| Violation {
        kind: ViolationKind::ImproperPair,
        edges: vec![e, f],
        vertices: vec![g.other_end(e, v), v, g.other_end(f, v)],
        colors: vec![c[e].unwrap()],
    })
}

/// Scans for an alternating walk `p0 p1 p2 p3 p4` with `p1 p2` = `mid`
/// traversed from `p1` to `p2`. Assumes the colored part is proper.
fn alternating_through(
    g: &Graph,
    c: &[Option<Color>],
    mid: EdgeId,
    p1: Vertex,
) -> Option<Violation> {
    let b = c[mid]?;
    let p2 = g.other_end(mid, p1);
    for &(p0, e1) in g.incident(p1) {
        if e1 == mid {
            continue;
        }
        let Some(a) = c[e1] else { continue };
        let Some((p3, e3)) = edge_with_color(g, c, p2, a) else {
            continue;
        };
        if p3 == p0 {
            continue;
        }
        let Some((p4, e4)) = edge_with_color(g, c, p3, b) else {
            continue;
        };
        let (kind, vertices) = if p4 == p0 {
            (ViolationKind::BicoloredCycle4, vec![p0, p1, p2, p3])
        } else {
            (ViolationKind::BicoloredPath4, vec![p0, p1, p2, p3, p4])
        };
        return Some(Violation {
            kind,
            edges: vec![e1, mid, e3, e4],
            vertices,
            colors: vec![a, b],
        });
    }
    None
}

/// Checks properness first, then every 4-edge path and 4-cycle.
///
/// The reported violation is the first one met scanning second edges in
/// canonical order, lower endpoint first.
pub fn verify_star(g: &Graph, c: &EdgeColoring) -> Result<Verdict> {
    c.check_total_on(g)?;
    Ok(first_star_violation(g, c.as_slice()).map_or(Verdict::Pass, Verdict::Fail))
}

/// Same check on a possibly partial coloring: uncolored edges are ignored.
pub fn first_star_violation(g: &Graph, c: &[Option<Color>]) -> Option<Violation> {
    if let Some(v) = first_improper_pair(g, c) {
        return Some(v);
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        for p1 in [u, v] {
            if let Some(viol) = alternating_through(g, c, e, p1) {
                return Some(viol);
            }
        }
    }
    None
}

pub fn is_star(g: &Graph, c: &EdgeColoring) -> bool {
    verify_star(g, c).map(|v| v.is_pass()).unwrap_or(false)
}

/// True when no colored edge within line-graph distance 2 of `e` has `color`.
///
/// When the coloring of `g - e` is star, assigning `color` to `e` after a
/// `true` answer keeps it star.
pub fn can_extend(g: &Graph, partial: &EdgeColoring, e: EdgeId, color: Color) -> Result<bool> {
    partial.check_len_on(g)?;
    g.check_edge(e)?;
    if partial.get(e).is_some() {
        return Err(Error::EdgeAlreadyColored(e));
    }
    Ok(g.edges_within_two(e)
        .into_iter()
        .all(|f| partial.get(f) != Some(color)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GlueCondition {
    /// the coloring restricted to `G[A]` is star
    StarOnA = 1,
    /// the coloring restricted to `G[B]` is star
    StarOnB = 2,
    /// no two crossing edges meet in `A` or are joined by an edge of `G[A]`
    CrossingSeparatedInA = 3,
    /// crossing edges differ from everything within distance 2 in `G[B] + X`
    CrossingFreshTowardB = 4,
    /// crossing edges avoid every color of `G[A]`
    CrossingAvoidsAColors = 5,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GlueReport {
    pub failed: Vec<GlueCondition>,
}

impl GlueReport {
    pub fn passes(&self) -> bool {
        self.failed.is_empty()
    }
}

/// Evaluates the five sufficient conditions for gluing star colorings of
/// `G[A]` and `G[B]` across the cut `X`. `in_a[v]` marks membership in `A`.
///
/// A passing report implies [`verify_star`] passes on the whole graph.
pub fn glue_check(g: &Graph, in_a: &[bool], c: &EdgeColoring) -> Result<GlueReport> {
    c.check_total_on(g)?;
    if in_a.len() != g.n() {
        return Err(Error::BadParameter(format!(
            "vertex set mask has length {}, graph has {} vertices",
            in_a.len(),
            g.n()
        )));
    }
    let side = |e: EdgeId| {
        let (u, v) = g.edge(e);
        (in_a[u], in_a[v])
    };
    let is_a = |e: EdgeId| side(e) == (true, true);
    let is_b = |e: EdgeId| side(e) == (false, false);
    let is_x = |e: EdgeId| {
        let (x, y) = side(e);
        x != y
    };
    let restricted_star = |keep: &dyn Fn(EdgeId) -> bool| {
        let (sub, ids) = g.edge_subgraph(keep);
        let sc = EdgeColoring::from_colors(ids.iter().map(|&e| c.color(e)));
        first_star_violation(&sub, sc.as_slice()).is_none()
    };

    let mut failed = Vec::new();
    if !restricted_star(&is_a) {
        failed.push(GlueCondition::StarOnA);
    }
    if !restricted_star(&is_b) {
        failed.push(GlueCondition::StarOnB);
    }

    let crossing: Vec<EdgeId> = (0..g.m()).filter(|&e| is_x(e)).collect();
    let a_end = |e: EdgeId| {
        let (u, v) = g.edge(e);
        if in_a[u] {
            u
        } else {
            v
        }
    };
    let separated = crossing.iter().enumerate().all(|(i, &e1)| {
        crossing[i + 1..].iter().all(|&e2| {
            let (a1, a2) = (a_end(e1), a_end(e2));
            a1 != a2 && !g.has_edge(a1, a2)
        })
    });
    if !separated {
        failed.push(GlueCondition::CrossingSeparatedInA);
    }

    let (toward_b, ids) = g.edge_subgraph(|e| is_b(e) || is_x(e));
    let fresh = ids
        .iter()
        .enumerate()
        .filter(|&(_, &e)| is_x(e))
        .all(|(local, &e)| {
            toward_b
                .edges_within_two(local)
                .into_iter()
                .all(|other| c.color(ids[other]) != c.color(e))
        });
    if !fresh {
        failed.push(GlueCondition::CrossingFreshTowardB);
    }

    let a_colors: Vec<Color> = (0..g.m())
        .filter(|&e| is_a(e))
        .map(|e| c.color(e))
        .collect();
    if crossing.iter().any(|&e| a_colors.contains(&c.color(e))) {
        failed.push(GlueCondition::CrossingAvoidsAColors);
    }
    Ok(GlueReport { failed })
}
