//! Covering maps: vertex maps that send edges to edges and each
//! neighborhood bijectively onto the neighborhood of the image.

use crate::error::{Error, Result};
use crate::format::CoverDocument;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverMap {
    source: Graph,
    target: Graph,
    assignment: Vec<Vertex>,
}

impl CoverMap {
    /// Validates and wraps a vertex map.
    pub fn new(source: Graph, target: Graph, assignment: Vec<Vertex>) -> Result<CoverMap> {
        validate(&source, &target, &assignment)?;
        Ok(CoverMap {
            source,
            target,
            assignment,
        })
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn assignment(&self) -> &[Vertex] {
        &self.assignment
    }

    pub fn image(&self, v: Vertex) -> Vertex {
        self.assignment[v]
    }

    /// Preimage of every target vertex.
    pub fn fibers(&self) -> Vec<Vec<Vertex>> {
        let mut out = vec![Vec::new(); self.target.n()];
        for (v, &t) in self.assignment.iter().enumerate() {
            out[t].push(v);
        }
        out
    }

    pub fn to_document(&self) -> CoverDocument {
        CoverDocument {
            source_n: self.source.n(),
            target_n: self.target.n(),
            assignment: self.assignment.clone(),
            source_edges: Some(self.source.edges().to_vec()),
            target_edges: Some(self.target.edges().to_vec()),
        }
    }

    /// Rebuilds a cover from a document; graphs missing from the document
    /// must be supplied.
    pub fn from_document(
        doc: &CoverDocument,
        source: Option<Graph>,
        target: Option<Graph>,
    ) -> Result<CoverMap> {
        let pick =
            |given: Option<Graph>, edges: &Option<Vec<(Vertex, Vertex)>>, n: usize, what: &str| {
                match (given, edges) {
                    (Some(g), _) => Ok(g),
                    (None, Some(edges)) => Graph::new(n, edges.iter().copied()),
                    (None, None) => Err(Error::InvalidCover(format!("{what} graph not given"))),
                }
            };
        let source = pick(source, &doc.source_edges, doc.source_n, "source")?;
        let target = pick(target, &doc.target_edges, doc.target_n, "target")?;
        if source.n() != doc.source_n || target.n() != doc.target_n {
            return Err(Error::InvalidCover(
                "vertex counts differ from the document".into(),
            ));
        }
        CoverMap::new(source, target, doc.assignment.clone())
    }
}

/// Checks homomorphism, local bijectivity, and equal fibers when the source
/// is connected.
pub fn validate(source: &Graph, target: &Graph, assignment: &[Vertex]) -> Result<()> {
    let bad = |msg: String| Err(Error::InvalidCover(msg));
    if assignment.len() != source.n() {
        return bad(format!(
            "assignment has {} entries for {} source vertices",
            assignment.len(),
            source.n()
        ));
    }
    if let Some(&t) = assignment.iter().find(|&&t| t >= target.n()) {
        return bad(format!("image {t} is not a target vertex"));
    }
    for v in 0..source.n() {
        let t = assignment[v];
        let mut images: Vec<Vertex> = source.neighbors(v).map(|w| assignment[w]).collect();
        images.sort_unstable();
        let expected: Vec<Vertex> = target.neighbors(t).collect();
        if images != expected {
            return bad(format!(
                "neighbors of {v} map to {images:?}, neighbors of {t} are {expected:?}"
            ));
        }
    }
    if source.n() > 0 && source.is_connected() {
        let mut sizes = vec![0usize; target.n()];
        for &t in assignment {
            sizes[t] += 1;
        }
        if sizes.iter().any(|&s| s != sizes[0]) {
            return bad(format!("fibers have unequal sizes {sizes:?}"));
        }
    }
    Ok(())
}

struct CoverSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    image: Vec<Option<Vertex>>,
    /// assigned vertices in assignment order
    order: Vec<Vertex>,
}

impl CoverSearch<'_> {
    fn consistent(&self, u: Vertex, t: Vertex) -> bool {
        if self.g.degree(u) != self.h.degree(t) {
            return false;
        }
        let mut seen_at_u = Vec::new();
        for w in self.g.neighbors(u) {
            let Some(tw) = self.image[w] else { continue };
            if !self.h.has_edge(t, tw) || seen_at_u.contains(&tw) {
                return false;
            }
            seen_at_u.push(tw);
            // t must not already be the image of another neighbor of w
            if self
                .g
                .neighbors(w)
                .any(|x| x != u && self.image[x] == Some(t))
            {
                return false;
            }
        }
        true
    }

    fn assign(&mut self, u: Vertex, t: Vertex) {
        self.image[u] = Some(t);
        self.order.push(u);
    }

    fn unassign_to(&mut self, len: usize) {
        while self.order.len() > len {
            let u = self.order.pop().unwrap();
            self.image[u] = None;
        }
    }

    /// Extends the assignment of the current component, then moves on to
    /// the next component with `next_root`.
    fn extend(&mut self, roots: &[(Vertex, Vec<Vertex>)], next_root: usize) -> bool {
        let pending = self
            .order
            .iter()
            .copied()
            .find(|&v| self.g.neighbors(v).any(|w| self.image[w].is_none()));
        let Some(v) = pending else {
            let Some((root, candidates)) = roots.get(next_root) else {
                return true;
            };
            if self.image[*root].is_some() {
                return self.extend(roots, next_root + 1);
            }
            for &t in candidates {
                if self.consistent(*root, t) {
                    let mark = self.order.len();
                    self.assign(*root, t);
                    if self.extend(roots, next_root + 1) {
                        return true;
                    }
                    self.unassign_to(mark);
                }
            }
            return false;
        };
        let tv = self.image[v].unwrap();
        let free_sources: Vec<Vertex> = self
            .g
            .neighbors(v)
            .filter(|&w| self.image[w].is_none())
            .collect();
        let free_targets: Vec<Vertex> = self
            .h
            .neighbors(tv)
            .filter(|&t| !self.g.neighbors(v).any(|w| self.image[w] == Some(t)))
            .collect();
        if free_sources.len() != free_targets.len() {
            return false;
        }
        self.place(
            &free_sources,
            &free_targets,
            &mut vec![false; free_targets.len()],
            roots,
            next_root,
        )
    }

    fn place(
        &mut self,
        sources: &[Vertex],
        targets: &[Vertex],
        used: &mut Vec<bool>,
        roots: &[(Vertex, Vec<Vertex>)],
        next_root: usize,
    ) -> bool {
        let Some((&u, rest)) = sources.split_first() else {
            return self.extend(roots, next_root);
        };
        for i in 0..targets.len() {
            if used[i] || !self.consistent(u, targets[i]) {
                continue;
            }
            let mark = self.order.len();
            used[i] = true;
            self.assign(u, targets[i]);
            if self.place(rest, targets, used, roots, next_root) {
                return true;
            }
            used[i] = false;
            self.unassign_to(mark);
        }
        false
    }
}

fn search(g: &Graph, h: &Graph, roots: Vec<(Vertex, Vec<Vertex>)>) -> Option<Vec<Vertex>> {
    let mut s = CoverSearch {
        g,
        h,
        image: vec![None; g.n()],
        order: Vec::new(),
    };
    if s.extend(&roots, 0) {
        Some(
            s.image
                .into_iter()
                .map(|t| t.expect("every vertex assigned"))
                .collect(),
        )
    } else {
        None
    }
}

/// True when every vertex of `h` is the image of vertex 0 under some
/// automorphism.
pub fn is_vertex_transitive(h: &Graph) -> bool {
    if h.n() <= 1 {
        return true;
    }
    if !h.is_connected() {
        return false;
    }
    (0..h.n()).all(|t| search(h, h, vec![(0, vec![t])]).is_some())
}

/// Exhaustive search for a covering map `g -> h`; `None` proves there is none.
///
/// Each component of `g` gets a root whose image is branched over; the
/// images of the remaining vertices follow by extending neighborhood
/// bijections outward from assigned vertices. When `h` is vertex-transitive
/// the root image is fixed.
pub fn find_cover(g: &Graph, h: &Graph) -> Option<CoverMap> {
    if g.n() == 0 {
        return CoverMap::new(g.clone(), h.clone(), Vec::new()).ok();
    }
    if h.n() == 0 {
        return None;
    }
    let comps = g.components();
    let h_connected = h.is_connected();
    if h_connected && comps.iter().any(|c| c.len() % h.n() != 0) {
        return None;
    }
    let candidates: Vec<Vertex> = if is_vertex_transitive(h) {
        vec![0]
    } else {
        (0..h.n()).collect()
    };
    let roots = comps
        .iter()
        .map(|c| {
            let r = c[0];
            let cand = candidates
                .iter()
                .copied()
                .filter(|&t| h.degree(t) == g.degree(r))
                .collect();
            (r, cand)
        })
        .collect();
    let assignment = search(g, h, roots)?;
    let map = CoverMap::new(g.clone(), h.clone(), assignment).ok()?;
    Some(map)
}
