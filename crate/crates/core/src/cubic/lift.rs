use crate::coloring::EdgeColoring;
use crate::cubic::cover::CoverMap;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// Pulls a coloring of the target back along a cover: source edge `uv`
/// takes the color of `m(u) m(v)`.
pub fn lift_coloring(m: &CoverMap, c: &EdgeColoring) -> Result<EdgeColoring> {
    let target = m.target();
    c.check_total_on(target)?;
    let colors = m.source().edges().iter().map(|&(u, v)| {
        target
            .edge_between(m.image(u), m.image(v))
            .map(|te| c.color(te))
            .ok_or_else(|| Error::InvalidCover(format!("edge {u}-{v} has no image")))
    });
    Ok(EdgeColoring::from_colors(
        colors.collect::<Result<Vec<_>>>()?,
    ))
}

/// Double cover of `h` from an edge signing: vertex `v` has copies `v` and
/// `v + n`. Unsigned edges stay inside each copy, edges in `negated` cross
/// between them. Returns the lift and its projection onto `h`.
pub fn voltage_lift(h: &Graph, negated: &[EdgeId]) -> Result<CoverMap> {
    let n = h.n();
    let mut pairs = Vec::with_capacity(2 * h.m());
    for (e, &(u, v)) in h.edges().iter().enumerate() {
        if negated.contains(&e) {
            pairs.push((u, v + n));
            pairs.push((u + n, v));
        } else {
            pairs.push((u, v));
            pairs.push((u + n, v + n));
        }
    }
    let lift = Graph::new(2 * n, pairs)?;
    let projection = (0..2 * n).map(|v| v % n).collect();
    CoverMap::new(lift, h.clone(), projection)
}
