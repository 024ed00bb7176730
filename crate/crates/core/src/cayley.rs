//! Arrowhead and diamond Cayley graphs over `Z_{2^n} x Z_{2^n}`.
//!
//! Graphs are implicit: a [`GraphSpec`] is just the level plus an ordered
//! generator list, and neighbors are computed by adding each generator to a
//! vertex modulo `2^n`. Vertices are densely indexed as `x * 2^n + y`.
//!
//! The generator multiset is authoritative. At `n <= 1` generators collide
//! (`s = -s` mod 2, and every generator is a loop at `n = 0`), so neighbor
//! lists keep duplicates and loops. [`GraphSpec::simple_edges`] offers a
//! deduplicated view for export.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default maximum level for anything that enumerates vertices (`4^12` ≈ 16.7M).
pub const DEFAULT_MAX_LEVEL: u32 = 12;

/// Absolute maximum level a graph may be built at, whatever the configured ceiling.
pub const HARD_MAX_LEVEL: u32 = 16;

/// A group element `(x, y)` of `Z_{2^n} x Z_{2^n}`, in canonical form `0 <= x, y < 2^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TorusVertex {
    pub x: u32,
    pub y: u32,
}

impl TorusVertex {
    pub const ORIGIN: TorusVertex = TorusVertex { x: 0, y: 0 };

    pub const fn new(x: u32, y: u32) -> Self {
        TorusVertex { x, y }
    }

    /// Whether both coordinates are canonical residues modulo `2^n`.
    pub fn is_canonical(self, n: u32) -> bool {
        let side = 1u64 << n;
        u64::from(self.x) < side && u64::from(self.y) < side
    }

    /// Multiply both coordinates by `2^k`.
    ///
    /// Caller guarantees the result stays below `2^32`.
    fn scaled(self, k: u32) -> Self {
        TorusVertex::new(self.x << k, self.y << k)
    }
}

impl fmt::Display for TorusVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl FromStr for TorusVertex {
    type Err = Error;

    /// Parses `"x,y"` (surrounding parentheses are tolerated).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(t);
        let (x, y) = t
            .split_once(',')
            .ok_or_else(|| Error::arg(format!("vertex `{s}` is not of the form x,y")))?;
        let parse = |c: &str| {
            c.trim().parse::<u32>().map_err(|_| {
                Error::arg(format!("vertex `{s}`: `{c}` is not a non-negative integer"))
            })
        };
        Ok(TorusVertex::new(parse(x)?, parse(y)?))
    }
}

/// Coordinate offset of a generator.
pub type Offset = (i32, i32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Arrowhead,
    Diamond,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Arrowhead => "arrowhead",
            Variant::Diamond => "diamond",
        }
    }

    /// `S+ = (s1, s2, s3)` for arrowhead, `T+ = (-s1, s2, s3)` for diamond.
    pub fn positive_generators(self) -> [Offset; 3] {
        match self {
            Variant::Arrowhead => [(-1, -1), (1, 0), (0, 1)],
            Variant::Diamond => [(1, 1), (1, 0), (0, 1)],
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "arrowhead" | "at" => Ok(Variant::Arrowhead),
            "diamond" | "dt" => Ok(Variant::Diamond),
            other => Err(Error::arg(format!(
                "unknown variant `{other}` (expected arrowhead or diamond)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Directedness {
    Directed,
    Undirected,
}

impl Directedness {
    pub fn as_str(self) -> &'static str {
        match self {
            Directedness::Directed => "directed",
            Directedness::Undirected => "undirected",
        }
    }
}

impl fmt::Display for Directedness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Ordered generator list of one member of the family.
///
/// Directed graphs use the three positive generators; undirected graphs
/// append their inverses in the same order, giving 6 generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    variant: Variant,
    directedness: Directedness,
    generators: Vec<Offset>,
}

impl GeneratorSet {
    pub fn new(variant: Variant, directedness: Directedness) -> Self {
        let positive = variant.positive_generators();
        let mut generators = positive.to_vec();
        if directedness == Directedness::Undirected {
            generators.extend(positive.iter().map(|&(dx, dy)| (-dx, -dy)));
        }
        GeneratorSet {
            variant,
            directedness,
            generators,
        }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn directedness(&self) -> Directedness {
        self.directedness
    }

    pub fn as_slice(&self) -> &[Offset] {
        &self.generators
    }

    /// The first three generators (`S+` or `T+`).
    pub fn positive(&self) -> &[Offset] {
        &self.generators[..3]
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Which graph of the family a spec denotes once the (irrelevant) variant of
/// an undirected graph is forgotten.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Undirected arrowhead = undirected diamond.
    #[serde(rename = "T")]
    UndirectedT,
    /// Directed arrowhead.
    #[serde(rename = "ATdir")]
    DirectedAT,
    /// Directed diamond.
    #[serde(rename = "DTdir")]
    DirectedDT,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::UndirectedT, Family::DirectedAT, Family::DirectedDT];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::UndirectedT => "T",
            Family::DirectedAT => "ATdir",
            Family::DirectedDT => "DTdir",
        }
    }

    /// A representative `(variant, directedness)` pair. Undirected maps to arrowhead.
    pub fn parts(self) -> (Variant, Directedness) {
        match self {
            Family::UndirectedT => (Variant::Arrowhead, Directedness::Undirected),
            Family::DirectedAT => (Variant::Arrowhead, Directedness::Directed),
            Family::DirectedDT => (Variant::Diamond, Directedness::Directed),
        }
    }

    pub fn of(variant: Variant, directedness: Directedness) -> Family {
        match (variant, directedness) {
            (_, Directedness::Undirected) => Family::UndirectedT,
            (Variant::Arrowhead, Directedness::Directed) => Family::DirectedAT,
            (Variant::Diamond, Directedness::Directed) => Family::DirectedDT,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "t" | "undirected" => Ok(Family::UndirectedT),
            "atdir" | "at" => Ok(Family::DirectedAT),
            "dtdir" | "dt" => Ok(Family::DirectedDT),
            other => Err(Error::arg(format!(
                "unknown family `{other}` (expected T, ATdir or DTdir)"
            ))),
        }
    }
}

/// One edge slot of the Cayley multigraph.
///
/// Directed: the arc `from -> to`. Undirected: `from <= to` in `(x, y)` order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub from: TorusVertex,
    pub to: TorusVertex,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.from == self.to
    }
}

/// A fully determined graph of the family: level plus generator set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphSpec {
    n: u32,
    mask: u32,
    gens: GeneratorSet,
}

impl GraphSpec {
    /// Builds a spec under [`DEFAULT_MAX_LEVEL`].
    pub fn new(n: u32, variant: Variant, directedness: Directedness) -> Result<Self> {
        Self::with_ceiling(n, variant, directedness, DEFAULT_MAX_LEVEL)
    }

    pub fn with_ceiling(
        n: u32,
        variant: Variant,
        directedness: Directedness,
        ceiling: u32,
    ) -> Result<Self> {
        check_level(n, ceiling)?;
        Ok(GraphSpec {
            n,
            mask: ((1u64 << n) - 1) as u32,
            gens: GeneratorSet::new(variant, directedness),
        })
    }

    pub fn family(n: u32, family: Family, ceiling: u32) -> Result<Self> {
        let (variant, directedness) = family.parts();
        Self::with_ceiling(n, variant, directedness, ceiling)
    }

    pub fn level(&self) -> u32 {
        self.n
    }

    /// `2^n`.
    pub fn side(&self) -> usize {
        1usize << self.n
    }

    /// `N = 4^n`.
    pub fn order(&self) -> usize {
        1usize << (2 * self.n)
    }

    /// Number of arcs (directed) or edges counted with multiplicity (undirected): `3N` either way.
    pub fn edge_count(&self) -> usize {
        3 * self.order()
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn variant(&self) -> Variant {
        self.gens.variant
    }

    pub fn directedness(&self) -> Directedness {
        self.gens.directedness
    }

    pub fn is_directed(&self) -> bool {
        self.gens.directedness == Directedness::Directed
    }

    pub fn as_family(&self) -> Family {
        Family::of(self.variant(), self.directedness())
    }

    /// Short name such as `T_3`, `ATdir_3` or `DTdir_3`.
    pub fn name(&self) -> String {
        format!("{}_{}", self.as_family(), self.n)
    }

    pub fn contains(&self, v: TorusVertex) -> bool {
        v.is_canonical(self.n)
    }

    pub fn check_vertex(&self, v: TorusVertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::arg(format!(
                "vertex {v} is out of range for level {} (coordinates must be < {})",
                self.n,
                self.side()
            )))
        }
    }

    /// Dense index `x * 2^n + y`.
    #[inline]
    pub fn index(&self, v: TorusVertex) -> usize {
        ((v.x as usize) << self.n) | v.y as usize
    }

    #[inline]
    pub fn vertex(&self, idx: usize) -> TorusVertex {
        TorusVertex::new((idx >> self.n) as u32, (idx as u32) & self.mask)
    }

    /// All vertices in index order.
    pub fn vertices(&self) -> impl Iterator<Item = TorusVertex> + '_ {
        (0..self.order()).map(move |i| self.vertex(i))
    }

    /// Reduce arbitrary integer coordinates to canonical form.
    pub fn reduce(&self, x: i64, y: i64) -> TorusVertex {
        let m = i64::from(self.mask) + 1;
        TorusVertex::new(x.rem_euclid(m) as u32, y.rem_euclid(m) as u32)
    }

    #[inline]
    pub fn translate(&self, v: TorusVertex, (dx, dy): Offset) -> TorusVertex {
        TorusVertex::new(
            v.x.wrapping_add(dx as u32) & self.mask,
            v.y.wrapping_add(dy as u32) & self.mask,
        )
    }

    #[inline]
    pub fn add(&self, u: TorusVertex, v: TorusVertex) -> TorusVertex {
        TorusVertex::new(
            u.x.wrapping_add(v.x) & self.mask,
            u.y.wrapping_add(v.y) & self.mask,
        )
    }

    #[inline]
    pub fn sub(&self, u: TorusVertex, v: TorusVertex) -> TorusVertex {
        TorusVertex::new(
            u.x.wrapping_sub(v.x) & self.mask,
            u.y.wrapping_sub(v.y) & self.mask,
        )
    }

    #[inline]
    pub fn neg(&self, v: TorusVertex) -> TorusVertex {
        self.sub(TorusVertex::ORIGIN, v)
    }

    /// `v + s` for every generator `s`, in generator order, duplicates kept.
    pub fn neighbors(&self, v: TorusVertex) -> Vec<TorusVertex> {
        self.neighbors_iter(v).collect()
    }

    pub fn neighbors_iter(&self, v: TorusVertex) -> impl Iterator<Item = TorusVertex> + '_ {
        self.gens
            .generators
            .iter()
            .map(move |&s| self.translate(v, s))
    }

    /// Whether `v` is reachable from `u` by a single generator step.
    pub fn is_adjacent(&self, u: TorusVertex, v: TorusVertex) -> bool {
        self.neighbors_iter(u).any(|w| w == v)
    }

    /// The full edge multiset, sorted by `(from, to)`.
    ///
    /// Directed specs yield the `3N` arcs `g -> g + s`, `s` in the positive
    /// generators. Undirected specs yield the `3N` edges `{g, g + s}` with the
    /// endpoints put in `(x, y)` order; each vertex then has degree 6 counted
    /// with multiplicity (a loop counts twice).
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        let directed = self.is_directed();
        for g in self.vertices() {
            for &s in self.gens.positive() {
                let h = self.translate(g, s);
                let edge = if directed || g <= h {
                    Edge { from: g, to: h }
                } else {
                    Edge { from: h, to: g }
                };
                out.push(edge);
            }
        }
        out.sort_unstable();
        out
    }

    /// Edge set with duplicates and loops removed. Export only; all metrics
    /// work on the multigraph.
    pub fn simple_edges(&self) -> Vec<Edge> {
        let mut edges = self.edges();
        edges.retain(|e| !e.is_loop());
        edges.dedup();
        edges
    }
}

pub(crate) fn check_level(n: u32, ceiling: u32) -> Result<()> {
    let ceiling = ceiling.min(HARD_MAX_LEVEL);
    if n > ceiling {
        Err(Error::LevelCeiling { level: n, ceiling })
    } else {
        Ok(())
    }
}

fn check_scale(n: u32, k: u32) -> Result<()> {
    if k > n {
        return Err(Error::arg(format!(
            "scale exponent k = {k} must satisfy k <= n = {n}"
        )));
    }
    if n > 31 {
        return Err(Error::arg(format!(
            "level {n} does not fit 32-bit coordinates"
        )));
    }
    Ok(())
}

/// `G_{n,k} = 2^k * G_{n-k}`, the subgroup generated by `2^k S+`.
pub fn subgroup_vertices(n: u32, k: u32) -> Result<BTreeSet<TorusVertex>> {
    check_scale(n, k)?;
    check_level(n - k, HARD_MAX_LEVEL)?;
    let side = 1u32 << (n - k);
    Ok((0..side)
        .flat_map(|x| (0..side).map(move |y| TorusVertex::new(x, y).scaled(k)))
        .collect())
}

/// Embeds a vertex of level `n - k` into level `n` by scaling with `2^k`.
///
/// The map is an injective group homomorphism sending each guest generator
/// `s` to the host offset `2^k s`, hence an embedding with dilation `2^k`.
pub fn embed_scaled(n: u32, k: u32, guest: TorusVertex) -> Result<TorusVertex> {
    check_scale(n, k)?;
    if !guest.is_canonical(n - k) {
        return Err(Error::arg(format!(
            "guest vertex {guest} is not canonical at level {}",
            n - k
        )));
    }
    Ok(guest.scaled(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: u32, y: u32) -> TorusVertex {
        TorusVertex::new(x, y)
    }

    #[test]
    fn generator_order_follows_definition() {
        let s = GeneratorSet::new(Variant::Arrowhead, Directedness::Undirected);
        assert_eq!(
            s.as_slice(),
            &[(-1, -1), (1, 0), (0, 1), (1, 1), (-1, 0), (0, -1)]
        );
        let t = GeneratorSet::new(Variant::Diamond, Directedness::Directed);
        assert_eq!(t.as_slice(), &[(1, 1), (1, 0), (0, 1)]);
    }

    #[test]
    fn neighbors_examples() {
        let g = GraphSpec::new(2, Variant::Arrowhead, Directedness::Undirected).unwrap();
        assert_eq!(
            g.neighbors(v(0, 0)),
            vec![v(3, 3), v(1, 0), v(0, 1), v(1, 1), v(3, 0), v(0, 3)]
        );

        let g1 = GraphSpec::new(1, Variant::Arrowhead, Directedness::Undirected).unwrap();
        let nb = g1.neighbors(v(0, 0));
        assert_eq!(nb.len(), 6);
        for w in [v(1, 1), v(1, 0), v(0, 1)] {
            assert_eq!(nb.iter().filter(|&&u| u == w).count(), 2);
        }

        let d = GraphSpec::new(2, Variant::Diamond, Directedness::Directed).unwrap();
        assert_eq!(d.neighbors(v(2, 3)), vec![v(3, 0), v(3, 3), v(2, 0)]);
        assert_eq!(d.neighbors(v(0, 0)), vec![v(1, 1), v(1, 0), v(0, 1)]);
    }

    #[test]
    fn level_zero_is_a_six_valent_loop() {
        let g = GraphSpec::new(0, Variant::Arrowhead, Directedness::Undirected).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(
            g.neighbors(TorusVertex::ORIGIN),
            vec![TorusVertex::ORIGIN; 6]
        );
        let edges = g.edges();
        assert_eq!(edges.len(), 3);
        assert!(edges.iter().all(Edge::is_loop));
        assert!(g.simple_edges().is_empty());
    }

    #[test]
    fn level_one_edge_slots() {
        let g = GraphSpec::new(1, Variant::Arrowhead, Directedness::Undirected).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges().len(), 12);
        // K4 once duplicates are dropped
        assert_eq!(g.simple_edges().len(), 6);
    }

    #[test]
    fn ceiling_is_enforced() {
        let err =
            GraphSpec::with_ceiling(5, Variant::Diamond, Directedness::Directed, 4).unwrap_err();
        assert_eq!(
            err,
            Error::LevelCeiling {
                level: 5,
                ceiling: 4
            }
        );
        let err =
            GraphSpec::with_ceiling(17, Variant::Diamond, Directedness::Directed, 99).unwrap_err();
        assert_eq!(
            err,
            Error::LevelCeiling {
                level: 17,
                ceiling: HARD_MAX_LEVEL
            }
        );
        assert!(GraphSpec::new(
            DEFAULT_MAX_LEVEL + 1,
            Variant::Arrowhead,
            Directedness::Directed
        )
        .is_err());
    }

    #[test]
    fn index_round_trip() {
        let g = GraphSpec::new(3, Variant::Arrowhead, Directedness::Directed).unwrap();
        for (i, w) in g.vertices().enumerate() {
            assert_eq!(g.index(w), i);
        }
        assert_eq!(g.index(v(2, 5)), 2 * 8 + 5);
    }

    #[test]
    fn subgroup_examples() {
        let g21 = subgroup_vertices(2, 1).unwrap();
        assert_eq!(
            g21,
            [v(0, 0), v(2, 2), v(2, 0), v(0, 2)].into_iter().collect()
        );
        assert_eq!(
            subgroup_vertices(2, 2).unwrap(),
            [v(0, 0)].into_iter().collect()
        );
        assert_eq!(subgroup_vertices(3, 0).unwrap().len(), 64);
        assert!(subgroup_vertices(2, 3).is_err());
    }

    #[test]
    fn embed_examples() {
        assert_eq!(embed_scaled(2, 1, v(1, 1)).unwrap(), v(2, 2));
        assert_eq!(embed_scaled(5, 0, v(7, 9)).unwrap(), v(7, 9));
        assert_eq!(embed_scaled(3, 2, v(1, 0)).unwrap(), v(4, 0));
        assert!(embed_scaled(3, 4, v(0, 0)).is_err());
        assert!(embed_scaled(3, 2, v(2, 0)).is_err());
    }

    #[test]
    fn parse_vertex() {
        assert_eq!("2,3".parse::<TorusVertex>().unwrap(), v(2, 3));
        assert_eq!("(4, 5)".parse::<TorusVertex>().unwrap(), v(4, 5));
        assert!("-1,0".parse::<TorusVertex>().is_err());
        assert!("3".parse::<TorusVertex>().is_err());
    }
}
