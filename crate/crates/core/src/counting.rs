//! Double counting for star colorings of complete graphs.
//!
//! For a star coloring of `K_n` let `a_i` be the size of color class `i`
//! and `b_ij` the number of 3-edge paths colored `i, j, i`. Then
//!
//! * `sum_i a_i = n(n-1)/2`;
//! * `sum_j b_ij = 4 * C(a_i, 2)`: any two edges of class `i` are joined by
//!   four edges, each the middle of an `i, j, i` path;
//! * `sum_i b_ij <= a_j (n - 2 a_j)`: the two flanking edges of such a path
//!   leave the class-`j` matching, and a star coloring lets each such edge
//!   flank at most one path per middle class.
//!
//! Summing both ways gives `4 sum a_i^2 <= (n + 2) sum a_i`, and
//! Cauchy-Schwarz turns that into `palette >= 2n(n-1)/(n+2)`.

use std::fmt;

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::is_star;

/// `ceil(2n(n-1)/(n+2))`, a lower bound on the star chromatic index of `K_n`.
pub fn kn_lower_bound(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    (2 * n * (n - 1)).div_ceil(n + 2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountingCertificate {
    pub n: usize,
    /// Colors in use, ascending; `a` and `b` are indexed by position here.
    pub palette: Vec<Color>,
    pub a: Vec<usize>,
    /// `b[i][j]`: 3-edge paths colored `palette[i], palette[j], palette[i]`.
    pub b: Vec<Vec<usize>>,
}

pub fn counting_certificate(g: &Graph, c: &EdgeColoring) -> Result<CountingCertificate> {
    let n = g.n();
    if g.m() != n * n.saturating_sub(1) / 2 {
        return Err(Error::NotComplete);
    }
    c.check_total_on(g)?;
    if !is_star(g, c) {
        return Err(Error::NotStar);
    }
    let palette = c.palette();
    let index = |col: Color| palette.binary_search(&col).expect("color in palette");
    let k = palette.len();
    let mut a = vec![0; k];
    let mut b = vec![vec![0; k]; k];
    for e in 0..g.m() {
        a[index(c.color(e))] += 1;
    }
    for (mid, &(x, z)) in g.edges().iter().enumerate() {
        let j = index(c.color(mid));
        for &(_, f) in g.incident(x) {
            if f == mid {
                continue;
            }
            let ci = c.color(f);
            if g.incident(z)
                .iter()
                .any(|&(_, h)| h != mid && c.color(h) == ci)
            {
                b[index(ci)][j] += 1;
            }
        }
    }
    Ok(CountingCertificate { n, palette, a, b })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    /// Color the check is about, for per-color checks.
    pub color: Option<Color>,
    pub lhs: i128,
    pub rhs: i128,
    pub relation: Relation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Le,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        match self.relation {
            Relation::Eq => self.lhs == self.rhs,
            Relation::Le => self.lhs <= self.rhs,
        }
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match self.relation {
            Relation::Eq => "=",
            Relation::Le => "<=",
        };
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        match self.color {
            Some(c) => write!(
                f,
                "{verdict} {} [color {c}]: {} {rel} {}",
                self.name, self.lhs, self.rhs
            ),
            None => write!(
                f,
                "{verdict} {}: {} {rel} {}",
                self.name, self.lhs, self.rhs
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountingReport {
    pub checks: Vec<IdentityCheck>,
}

impl CountingReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

pub fn check_counting_identities(cert: &CountingCertificate) -> CountingReport {
    let n = cert.n as i128;
    let k = cert.palette.len();
    let mut checks = Vec::new();
    let sum_a: i128 = cert.a.iter().map(|&x| x as i128).sum();
    checks.push(IdentityCheck {
        name: "edges-partitioned",
        color: None,
        lhs: sum_a,
        rhs: n * (n - 1) / 2,
        relation: Relation::Eq,
    });
    for i in 0..k {
        let ai = cert.a[i] as i128;
        checks.push(IdentityCheck {
            name: "no-monochromatic-path",
            color: Some(cert.palette[i]),
            lhs: cert.b[i][i] as i128,
            rhs: 0,
            relation: Relation::Eq,
        });
        checks.push(IdentityCheck {
            name: "class-pairs-joined-four-ways",
            color: Some(cert.palette[i]),
            lhs: cert.b[i].iter().map(|&x| x as i128).sum(),
            rhs: 4 * (ai * (ai - 1) / 2),
            relation: Relation::Eq,
        });
    }
    for j in 0..k {
        let aj = cert.a[j] as i128;
        checks.push(IdentityCheck {
            name: "middle-class-capacity",
            color: Some(cert.palette[j]),
            lhs: (0..k).map(|i| cert.b[i][j] as i128).sum(),
            rhs: aj * (n - 2 * aj),
            relation: Relation::Le,
        });
    }
    let sum_sq: i128 = cert.a.iter().map(|&x| (x as i128) * (x as i128)).sum();
    checks.push(IdentityCheck {
        name: "square-sum",
        color: None,
        lhs: 4 * sum_sq,
        rhs: (n + 2) * sum_a,
        relation: Relation::Le,
    });
    // palette >= 2n(n-1)/(n+2), kept in integers
    checks.push(IdentityCheck {
        name: "palette-lower-bound",
        color: None,
        lhs: 2 * n * (n - 1),
        rhs: k as i128 * (n + 2),
        relation: Relation::Le,
    });
    CountingReport { checks }
}
