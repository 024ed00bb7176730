//! Closed-form diameters, antipodal counts and antipodal anchors.
//!
//! Everything here is pure integer arithmetic valid up to
//! [`MAX_FORMULA_LEVEL`]; nothing builds a graph. Notation: `D_n` is the
//! diameter of the undirected graph `T_n`, `N = 4^n` its order.

use serde::Serialize;

use crate::cayley::{Family, TorusVertex};
use crate::error::{Error, Result};

/// Largest level at which the integer formulas are evaluated.
pub const MAX_FORMULA_LEVEL: u32 = 64;

/// Coordinates of antipodal anchors must fit in `u32`.
pub const MAX_ANCHOR_LEVEL: u32 = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DiameterValue {
    pub n: u32,
    pub family: Family,
    pub value: u64,
}

/// Member name within an ordered antipodal triple `(A, B, C)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Member {
    A,
    B,
    C,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AntipodalSummary {
    pub family: Family,
    pub n: u32,
    pub count: u128,
    /// `(D_{n-1}, D_n)`.
    pub anchor: TorusVertex,
    /// `C` for odd `n`, `B` for even `n`.
    pub anchor_member: Member,
    /// `(D_n, D_{n-1})`, the negation of the anchor's 3-cycle companion.
    pub anchor_inverse: TorusVertex,
    /// `B̄` for odd `n`, `C̄` for even `n`.
    pub inverse_member: Member,
}

fn check_formula_level(n: u32) -> Result<()> {
    if n > MAX_FORMULA_LEVEL {
        Err(Error::arg(format!(
            "level {n} exceeds the formula range (n <= {MAX_FORMULA_LEVEL})"
        )))
    } else {
        Ok(())
    }
}

/// `2^n - 1`, the side length minus one.
fn side_minus_one(n: u32) -> u64 {
    ((1u128 << n) - 1) as u64
}

/// `D_n = (2·2^n − 1)/3` for odd `n`, `2(2^n − 1)/3` for even `n`.
pub fn undirected_diameter(n: u32) -> Result<DiameterValue> {
    check_formula_level(n)?;
    let side = 1u128 << n;
    let numerator = if n % 2 == 1 {
        2 * side - 1
    } else {
        2 * (side - 1)
    };
    assert_eq!(
        numerator % 3,
        0,
        "closed form for D_{n} is not an exact division"
    );
    Ok(DiameterValue {
        n,
        family: Family::UndirectedT,
        value: (numerator / 3) as u64,
    })
}

/// `D_0 .. D_{n_max}` from `D_0 = 0`, `D_n = 2 D_{n-1} + (n mod 2)`.
pub fn diameter_recurrence_table(n_max: u32) -> Result<Vec<DiameterValue>> {
    check_formula_level(n_max)?;
    let mut d = 0u64;
    let mut out = Vec::with_capacity(n_max as usize + 1);
    out.push(DiameterValue {
        n: 0,
        family: Family::UndirectedT,
        value: 0,
    });
    for n in 1..=n_max {
        d = 2 * d + u64::from(n % 2);
        out.push(DiameterValue {
            n,
            family: Family::UndirectedT,
            value: d,
        });
    }
    Ok(out)
}

/// Truth of `D_{n-1} + D_n = 2^n - 1` and, for `n >= 2`, `D_n - D_{n-2} = 2^{n-1}`.
pub fn check_relations(n: u32) -> Result<(bool, Option<bool>)> {
    if n == 0 {
        return Err(Error::arg("diameter relations need n >= 1"));
    }
    check_formula_level(n)?;
    let d = |m: u32| undirected_diameter(m).map(|v| u128::from(v.value));
    let sum_holds = d(n - 1)? + d(n)? == (1u128 << n) - 1;
    let step_holds = if n >= 2 {
        Some(d(n)? - d(n - 2)? == 1u128 << (n - 1))
    } else {
        None
    };
    Ok((sum_holds, step_holds))
}

/// Oriented diameter of the directed arrowhead, by its recurrence
/// `→D_0 = 0`, `→D_n = 2 →D_{n-1} + 1`. Equals `√N − 1 = 2^n − 1`.
pub fn directed_arrowhead_diameter(n: u32) -> Result<DiameterValue> {
    check_formula_level(n)?;
    let value = (1..=n).fold(0u64, |d, _| 2 * d + 1);
    Ok(DiameterValue {
        n,
        family: Family::DirectedAT,
        value,
    })
}

/// Oriented diameter of the directed diamond, `√N − 1`.
pub fn directed_diamond_diameter(n: u32) -> Result<DiameterValue> {
    check_formula_level(n)?;
    Ok(DiameterValue {
        n,
        family: Family::DirectedDT,
        value: side_minus_one(n),
    })
}

pub fn diameter(family: Family, n: u32) -> Result<DiameterValue> {
    match family {
        Family::UndirectedT => undirected_diameter(n),
        Family::DirectedAT => directed_arrowhead_diameter(n),
        Family::DirectedDT => directed_diamond_diameter(n),
    }
}

/// Distance from the origin to `v` in the directed diamond: `max(x, y)`.
///
/// Not stated as such in the literature, which only gives the shell sizes
/// `2p + 1`; admitted because it matches BFS on every vertex (see tests).
pub fn directed_diamond_distance(n: u32, v: TorusVertex) -> Result<u32> {
    if n > MAX_ANCHOR_LEVEL || !v.is_canonical(n) {
        return Err(Error::arg(format!(
            "vertex {v} is not canonical at level {n}"
        )));
    }
    Ok(v.x.max(v.y))
}

/// Number of antipodals of the origin.
///
/// `T`: 3, 9, then 6 / 12 for odd / even `n > 2`. Directed arrowhead: 3, then 6.
/// Directed diamond: `2√N − 1`. Level 0 is refused for `T` and the directed
/// arrowhead; see [`antipodal_count_with_trivial`].
pub fn antipodal_count(family: Family, n: u32) -> Result<u128> {
    check_formula_level(n)?;
    match (family, n) {
        (Family::UndirectedT | Family::DirectedAT, 0) => Err(Error::arg(format!(
            "antipodal count of {family}_0 is undefined (the only vertex is the origin)"
        ))),
        (Family::UndirectedT, 1) => Ok(3),
        (Family::UndirectedT, 2) => Ok(9),
        (Family::UndirectedT, n) if n % 2 == 1 => Ok(6),
        (Family::UndirectedT, _) => Ok(12),
        (Family::DirectedAT, 1) => Ok(3),
        (Family::DirectedAT, _) => Ok(6),
        (Family::DirectedDT, n) => Ok((1u128 << (n + 1)) - 1),
    }
}

/// [`antipodal_count`] that reports the single vertex of level 0 as its own antipodal.
pub fn antipodal_count_with_trivial(family: Family, n: u32) -> Result<u128> {
    if n == 0 {
        Ok(1)
    } else {
        antipodal_count(family, n)
    }
}

/// Anchor `(D_{n-1}, D_n)` of the antipodal triple of `T_n` and its inverse `(D_n, D_{n-1})`.
pub fn antipodal_anchor(n: u32) -> Result<AntipodalSummary> {
    if n == 0 {
        return Err(Error::arg("antipodal anchors need n >= 1"));
    }
    if n > MAX_ANCHOR_LEVEL {
        return Err(Error::arg(format!(
            "anchor coordinates at level {n} do not fit 32 bits (n <= {MAX_ANCHOR_LEVEL})"
        )));
    }
    let prev = undirected_diameter(n - 1)?.value as u32;
    let cur = undirected_diameter(n)?.value as u32;
    let odd = n % 2 == 1;
    Ok(AntipodalSummary {
        family: Family::UndirectedT,
        n,
        count: antipodal_count(Family::UndirectedT, n)?,
        anchor: TorusVertex::new(prev, cur),
        anchor_member: if odd { Member::C } else { Member::B },
        anchor_inverse: TorusVertex::new(cur, prev),
        inverse_member: if odd { Member::B } else { Member::C },
    })
}
