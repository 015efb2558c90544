#![allow(dead_code)]

use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::Rng;
use star_edge::format::parse_graph6_lines;
use star_edge::verify::first_star_violation;
use star_edge::{Color, Graph};

pub fn data_graphs(file: &str) -> Vec<Graph> {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", file]
        .iter()
        .collect();
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_graph6_lines(&text).unwrap()
}

/// Connected cubic graphs on at most 12 vertices, one per isomorphism class.
pub fn census() -> Vec<Graph> {
    data_graphs("cubic_census.g6")
}

/// Every coloring of `m` items up to renaming colors, as restricted growth
/// strings.
pub fn set_partitions(m: usize) -> Vec<Vec<Color>> {
    fn rec(m: usize, cur: &mut Vec<Color>, max: Color, out: &mut Vec<Vec<Color>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for c in 0..=max {
            cur.push(c);
            rec(m, cur, if c == max { max + 1 } else { max }, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, &mut Vec::new(), 0, &mut out);
    out
}

/// Star test straight from the definition: every pair of adjacent edges
/// differs, and no 4 edges forming a path on 5 vertices or a 4-cycle carry
/// at most 2 colors.
pub fn naive_is_star(g: &Graph, colors: &[Option<Color>]) -> bool {
    let m = g.m();
    let edges = g.edges();
    for a in 0..m {
        for b in a + 1..m {
            if g.edges_share_vertex(a, b) && colors[a].is_some() && colors[a] == colors[b] {
                return false;
            }
        }
    }
    fn bad(edges: &[(usize, usize)], pick: &[usize; 4], colors: &[Option<Color>]) -> bool {
        let mut cs: Vec<Color> = Vec::new();
        for &e in pick {
            match colors[e] {
                Some(c) if !cs.contains(&c) => cs.push(c),
                Some(_) => {}
                None => return false,
            }
        }
        if cs.len() > 2 {
            return false;
        }
        let mut verts: Vec<usize> = pick
            .iter()
            .flat_map(|&e| [edges[e].0, edges[e].1])
            .collect();
        verts.sort_unstable();
        let mut degs: Vec<usize> = Vec::new();
        let mut i = 0;
        while i < verts.len() {
            let j = verts[i..].iter().take_while(|&&v| v == verts[i]).count();
            degs.push(j);
            i += j;
        }
        degs.sort_unstable();
        let cycle = degs == [2, 2, 2, 2];
        let path = degs == [1, 1, 2, 2, 2];
        if !(cycle || path) {
            return false;
        }
        // a triangle plus a disjoint edge has the degrees of a path
        let mut comp: Vec<usize> = verts.clone();
        comp.dedup();
        let mut parent: Vec<usize> = (0..comp.len()).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for &e in pick {
            let a = comp.binary_search(&edges[e].0).unwrap();
            let b = comp.binary_search(&edges[e].1).unwrap();
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let root = find(&mut parent, 0);
        (0..comp.len()).all(|x| find(&mut parent, x) == root)
    }
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                for d in c + 1..m {
                    if bad(edges, &[a, b, c, d], colors) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `G(n, p)`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::new(n, pairs).unwrap()
}

/// Random graph on `n` vertices with maximum degree at most `max_degree`.
pub fn random_bounded_degree_graph(rng: &mut impl Rng, n: usize, max_degree: usize) -> Graph {
    let mut all: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    all.shuffle(rng);
    let target = rng.gen_range(0..=n * max_degree / 2);
    let mut deg = vec![0; n];
    let mut pairs = Vec::new();
    for (u, v) in all {
        if pairs.len() >= target {
            break;
        }
        if deg[u] < max_degree && deg[v] < max_degree {
            deg[u] += 1;
            deg[v] += 1;
            pairs.push((u, v));
        }
    }
    Graph::new(n, pairs).unwrap()
}

/// A random total star coloring: edges in random order take a random color
/// below `k` that keeps the partial coloring star, or a fresh color.
pub fn random_star_coloring(rng: &mut impl Rng, g: &Graph, k: Color) -> Vec<Option<Color>> {
    let mut colors = vec![None; g.m()];
    let mut order: Vec<usize> = (0..g.m()).collect();
    order.shuffle(rng);
    let mut fresh = k;
    for e in order {
        let mut options: Vec<Color> = (0..k).collect();
        options.shuffle(rng);
        let pick = options.into_iter().find(|&c| {
            colors[e] = Some(c);
            first_star_violation(g, &colors).is_none()
        });
        colors[e] = Some(pick.unwrap_or_else(|| {
            fresh += 1;
            fresh - 1
        }));
    }
    colors
}

/// Extension lemma on one graph: random star colorings with some edges
/// cleared; every accepted `(edge, color)` must keep the coloring star.
/// Returns the number of accepted extensions checked.
pub fn check_extension_lemma(rng: &mut impl Rng, g: &Graph, trials: usize) -> usize {
    use star_edge::verify::can_extend;
    use star_edge::EdgeColoring;
    let mut accepted = 0;
    for _ in 0..trials {
        let k: Color = rng.gen_range(2..=5);
        let mut colors = random_star_coloring(rng, g, k);
        for c in colors.iter_mut() {
            if rng.gen_bool(0.35) {
                *c = None;
            }
        }
        let partial = EdgeColoring::from_partial(colors.clone());
        for e in (0..g.m()).filter(|&e| colors[e].is_none()) {
            for x in 0..=k + 1 {
                if can_extend(g, &partial, e, x).unwrap() {
                    let mut ext = colors.clone();
                    ext[e] = Some(x);
                    assert!(
                        first_star_violation(g, &ext).is_none(),
                        "extension broke star: graph {:?}, colors {colors:?}, edge {e}, color {x}",
                        g.edges()
                    );
                    accepted += 1;
                }
            }
        }
    }
    accepted
}

/// Gluing lemma on one graph and cut: sides colored independently, crossing
/// edges fresh or reused. Returns whether the glue conditions held.
pub fn check_glue_lemma(rng: &mut impl Rng, g: &Graph, in_a: &[bool]) -> bool {
    use star_edge::verify::{glue_check, verify_star};
    use star_edge::EdgeColoring;
    let k: Color = rng.gen_range(2..=5);
    let mut colors: Vec<Color> = vec![0; g.m()];
    for side in [true, false] {
        let (sub, ids) = g.edge_subgraph(|e| {
            let (u, v) = g.edge(e);
            in_a[u] == side && in_a[v] == side
        });
        for (local, c) in random_star_coloring(rng, &sub, k).into_iter().enumerate() {
            colors[ids[local]] = c.unwrap();
        }
    }
    let fresh_crossing = rng.gen_bool(0.7);
    let mut next_fresh = 1000;
    for e in 0..g.m() {
        let (u, v) = g.edge(e);
        if in_a[u] != in_a[v] {
            colors[e] = if fresh_crossing {
                next_fresh += 1;
                next_fresh
            } else {
                rng.gen_range(0..k + 3)
            };
        }
    }
    let c = EdgeColoring::from_colors(colors);
    let report = glue_check(g, in_a, &c).unwrap();
    if report.passes() {
        assert!(
            verify_star(g, &c).unwrap().is_pass(),
            "glue conditions held but coloring is not star: graph {:?}, side {in_a:?}, colors {:?}",
            g.edges(),
            c.as_slice()
        );
    }
    report.passes()
}
