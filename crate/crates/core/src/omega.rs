//! Ordered antipodal 3-cycles `Ω_n = (A_n, B_n, C_n)` of the undirected graph
//! `T_n`, their scaled images `Ω_{n,1} = 2·Ω_{n-1}`, `Ω_{n,2} = 4·Ω_{n-2}`,
//! and the negated triples `Ω̄`.
//!
//! Two members of `Ω_n` are fixed by closed forms: the anchor `(D_{n-1}, D_n)`
//! (named `C` for odd `n`, `B` for even `n`) and its companion one diagonal
//! step further. The third member `A_n` has no published formula; it is one
//! of the two vertices closing a triangle on that edge, and the BFS oracle
//! picks the one that is antipodal and not already in `Ω_{n,1} ∪ Ω̄_{n,1}`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::cayley::{self, Directedness, GraphSpec, TorusVertex, Variant};
use crate::error::{Error, Result};
use crate::formulas::{self, Member};
use crate::metrics;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum OmegaLabel {
    /// `Ω_n`
    Base,
    /// `Ω̄_n`
    BaseBar,
    /// `Ω_{n,1}`
    Scaled1,
    /// `Ω̄_{n,1}`
    Scaled1Bar,
    /// `Ω_{n,2}`
    Scaled2,
    /// `Ω̄_{n,2}`
    Scaled2Bar,
}

impl OmegaLabel {
    pub fn is_bar(self) -> bool {
        matches!(
            self,
            OmegaLabel::BaseBar | OmegaLabel::Scaled1Bar | OmegaLabel::Scaled2Bar
        )
    }

    /// Scale exponent `k` of `Ω_{n,k}`.
    pub fn scale(self) -> u32 {
        match self {
            OmegaLabel::Base | OmegaLabel::BaseBar => 0,
            OmegaLabel::Scaled1 | OmegaLabel::Scaled1Bar => 1,
            OmegaLabel::Scaled2 | OmegaLabel::Scaled2Bar => 2,
        }
    }

    fn name(self, n: u32) -> String {
        let stem = if self.is_bar() { "OmegaBar" } else { "Omega" };
        match self.scale() {
            0 => format!("{stem}_{n}"),
            k => format!("{stem}_{n},{k}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OmegaTriple {
    pub label: OmegaLabel,
    pub n: u32,
    /// `(A, B, C)`. Degenerate levels repeat vertices: `Ω_0 = ((0,0),(0,0),(0,0))`.
    pub members: [TorusVertex; 3],
}

impl OmegaTriple {
    pub fn member(&self, m: Member) -> TorusVertex {
        match m {
            Member::A => self.members[0],
            Member::B => self.members[1],
            Member::C => self.members[2],
        }
    }

    pub fn vertex_set(&self) -> BTreeSet<TorusVertex> {
        self.members.iter().copied().collect()
    }

    pub fn name(&self) -> String {
        self.label.name(self.n)
    }

    /// Members pairwise adjacent in the scaled graph `Γ(G_{n,k}, 2^k S)`, i.e.
    /// mutual offsets among `2^k·{±(1,0), ±(0,1), ±(1,1)}` mod `2^n`. For `k = 0`
    /// this is adjacency in `T_n`.
    pub fn is_three_cycle(&self) -> bool {
        let k = self.label.scale();
        if self.n > 31 || k > self.n {
            return false;
        }
        let mask = ((1u64 << self.n) - 1) as u32;
        let step = 1u32 << k;
        let offsets: Vec<(u32, u32)> = [(1, 0), (0, 1), (1, 1)]
            .into_iter()
            .flat_map(|(dx, dy): (u32, u32)| {
                let d = ((dx * step) & mask, (dy * step) & mask);
                [d, (d.0.wrapping_neg() & mask, d.1.wrapping_neg() & mask)]
            })
            .collect();
        let adjacent = |u: TorusVertex, v: TorusVertex| {
            offsets.contains(&(v.x.wrapping_sub(u.x) & mask, v.y.wrapping_sub(u.y) & mask))
        };
        let [a, b, c] = self.members;
        a != b && b != c && a != c && adjacent(a, b) && adjacent(b, c) && adjacent(a, c)
    }
}

impl fmt::Display for OmegaTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.members;
        write!(f, "{} = ({a},{b},{c})", self.name())
    }
}

fn negate(n: u32, t: &OmegaTriple, label: OmegaLabel) -> OmegaTriple {
    let mask = ((1u64 << n) - 1) as u32;
    let neg =
        |v: TorusVertex| TorusVertex::new(v.x.wrapping_neg() & mask, v.y.wrapping_neg() & mask);
    OmegaTriple {
        label,
        n,
        members: t.members.map(neg),
    }
}

fn scale(n: u32, k: u32, t: &OmegaTriple, label: OmegaLabel) -> Result<OmegaTriple> {
    let [a, b, c] = t.members;
    Ok(OmegaTriple {
        label,
        n,
        members: [
            cayley::embed_scaled(n, k, a)?,
            cayley::embed_scaled(n, k, b)?,
            cayley::embed_scaled(n, k, c)?,
        ],
    })
}

fn base_literal(n: u32) -> OmegaTriple {
    let members = match n {
        0 => [TorusVertex::ORIGIN; 3],
        _ => [
            TorusVertex::new(1, 1),
            TorusVertex::new(1, 0),
            TorusVertex::new(0, 1),
        ],
    };
    OmegaTriple {
        label: OmegaLabel::Base,
        n,
        members,
    }
}

/// Builds `Ω_n` from `Ω_{n-1}` and the antipodal set of `T_n`, `n >= 2`.
fn resolve_base(
    n: u32,
    prev: &OmegaTriple,
    antipodals: &BTreeSet<TorusVertex>,
) -> Result<OmegaTriple> {
    let g = GraphSpec::with_ceiling(n, Variant::Arrowhead, Directedness::Undirected, n)?;
    let anchor = formulas::antipodal_anchor(n)?;
    let p = anchor.anchor;
    let q = g.translate(p, (1, 1));

    let scaled = scale(n, 1, prev, OmegaLabel::Scaled1)?;
    let mut excluded = scaled.vertex_set();
    excluded.extend(negate(n, &scaled, OmegaLabel::Scaled1Bar).vertex_set());

    let candidates: Vec<TorusVertex> = [g.translate(p, (0, 1)), g.translate(p, (1, 0))]
        .into_iter()
        .filter(|c| antipodals.contains(c) && !excluded.contains(c))
        .collect();
    let &[third] = candidates.as_slice() else {
        return Err(Error::Oracle(format!(
            "level {n}: expected exactly one antipodal completion of {p}-{q}, found {candidates:?}"
        )));
    };
    for v in [p, q] {
        if !antipodals.contains(&v) {
            return Err(Error::Oracle(format!(
                "level {n}: anchor vertex {v} is not antipodal"
            )));
        }
    }
    let (b, c) = match anchor.anchor_member {
        Member::C => (q, p),
        _ => (p, q),
    };
    Ok(OmegaTriple {
        label: OmegaLabel::Base,
        n,
        members: [third, b, c],
    })
}

/// `Ω_0, Ω_1, ..., Ω_n`, resolving each level `>= 2` with one BFS of `T_m`.
pub fn base_triples(n: u32, ceiling: u32) -> Result<Vec<OmegaTriple>> {
    cayley::check_level(n, ceiling)?;
    let mut out = vec![base_literal(0)];
    for m in 1..=n {
        let t = if m == 1 {
            base_literal(1)
        } else {
            let g =
                GraphSpec::with_ceiling(m, Variant::Arrowhead, Directedness::Undirected, ceiling)?;
            let antipodals = metrics::antipodals_oracle(&g)?;
            resolve_base(m, &out[m as usize - 1], &antipodals)?
        };
        out.push(t);
    }
    Ok(out)
}

/// All Ω triples of level `n` under the default ceiling.
pub fn omega_subsets(n: u32) -> Result<Vec<OmegaTriple>> {
    omega_subsets_with_ceiling(n, cayley::DEFAULT_MAX_LEVEL)
}

/// `[Ω_n, Ω̄_n, Ω_{n,1}, Ω̄_{n,1}, Ω_{n,2}, Ω̄_{n,2}]`, scaled entries present
/// when defined (`n >= 1`, `n >= 2`). Level 0 yields only `Ω_0`.
pub fn omega_subsets_with_ceiling(n: u32, ceiling: u32) -> Result<Vec<OmegaTriple>> {
    let bases = base_triples(n, ceiling)?;
    let base = bases[n as usize];
    if n == 0 {
        return Ok(vec![base]);
    }
    let mut out = vec![base, negate(n, &base, OmegaLabel::BaseBar)];
    let s1 = scale(n, 1, &bases[n as usize - 1], OmegaLabel::Scaled1)?;
    out.push(s1);
    out.push(negate(n, &s1, OmegaLabel::Scaled1Bar));
    if n >= 2 {
        let s2 = scale(n, 2, &bases[n as usize - 2], OmegaLabel::Scaled2)?;
        out.push(s2);
        out.push(negate(n, &s2, OmegaLabel::Scaled2Bar));
    }
    Ok(out)
}

pub fn find(triples: &[OmegaTriple], label: OmegaLabel) -> Option<&OmegaTriple> {
    triples.iter().find(|t| t.label == label)
}

/// Union of the members of the triples carrying any of `labels`.
pub fn union_of(triples: &[OmegaTriple], labels: &[OmegaLabel]) -> BTreeSet<TorusVertex> {
    triples
        .iter()
        .filter(|t| labels.contains(&t.label))
        .flat_map(|t| t.members)
        .collect()
}
