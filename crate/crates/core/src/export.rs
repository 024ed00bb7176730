//! File formats written by `arrowhead generate` and `arrowhead stats`.
//!
//! * `edge_list`: one line per arc `x1,y1 -> x2,y2` or edge `x1,y1 -- x2,y2`,
//!   sorted by `(x1, y1, x2, y2)`. Multi-edges are repeated and loops kept.
//! * `dot`: a `digraph`/`graph` block named after the graph, nodes `v_x_y`
//!   in index order, then edges in `edge_list` order.
//! * `adjacency_csv`: the `4^n x 4^n` matrix whose entry `(i, j)` is the
//!   number of generators taking vertex `i` to vertex `j` (row sums are the
//!   out-degree). Rows and columns follow index order; no header. Level 5 at most.
//! * `json_stats`: see [`GraphStats`].
//!
//! Every writer is byte-deterministic.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use serde::Serialize;

use crate::cayley::{Edge, Family, GraphSpec, TorusVertex};
use crate::error::{Error, Result};
use crate::formulas::{self, Member};
use crate::metrics;
use crate::omega::{self, OmegaLabel};

/// Largest level accepted by the quadratic `adjacency_csv` format.
pub const ADJACENCY_CSV_MAX_LEVEL: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    EdgeList,
    Dot,
    AdjacencyCsv,
    JsonStats,
}

impl ExportFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            ExportFormat::EdgeList => "edge_list",
            ExportFormat::Dot => "dot",
            ExportFormat::AdjacencyCsv => "adjacency_csv",
            ExportFormat::JsonStats => "json_stats",
        }
    }
}

impl fmt::Display for ExportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "edge_list" | "edges" => Ok(ExportFormat::EdgeList),
            "dot" => Ok(ExportFormat::Dot),
            "adjacency_csv" | "csv" => Ok(ExportFormat::AdjacencyCsv),
            "json_stats" | "json" => Ok(ExportFormat::JsonStats),
            other => Err(Error::arg(format!(
                "unknown format `{other}` (expected edge_list, dot, adjacency_csv or json_stats)"
            ))),
        }
    }
}

fn edge_set(g: &GraphSpec, simple: bool) -> Vec<Edge> {
    if simple {
        g.simple_edges()
    } else {
        g.edges()
    }
}

fn arrow(g: &GraphSpec) -> &'static str {
    if g.is_directed() {
        "->"
    } else {
        "--"
    }
}

pub fn write_edge_list<W: Write>(g: &GraphSpec, simple: bool, out: &mut W) -> io::Result<()> {
    let arrow = arrow(g);
    for e in edge_set(g, simple) {
        writeln!(
            out,
            "{},{} {arrow} {},{}",
            e.from.x, e.from.y, e.to.x, e.to.y
        )?;
    }
    Ok(())
}

fn node_id(v: TorusVertex) -> String {
    format!("v_{}_{}", v.x, v.y)
}

pub fn write_dot<W: Write>(g: &GraphSpec, simple: bool, out: &mut W) -> io::Result<()> {
    let kind = if g.is_directed() { "digraph" } else { "graph" };
    writeln!(out, "{kind} {} {{", g.name())?;
    for v in g.vertices() {
        writeln!(out, "  {} [label=\"{v}\"];", node_id(v))?;
    }
    let arrow = arrow(g);
    for e in edge_set(g, simple) {
        writeln!(out, "  {} {arrow} {};", node_id(e.from), node_id(e.to))?;
    }
    writeln!(out, "}}")
}

pub fn write_adjacency_csv<W: Write>(g: &GraphSpec, out: &mut W) -> Result<io::Result<()>> {
    if g.level() > ADJACENCY_CSV_MAX_LEVEL {
        return Err(Error::LevelCeiling {
            level: g.level(),
            ceiling: ADJACENCY_CSV_MAX_LEVEL,
        });
    }
    let order = g.order();
    let mut row = vec![0u32; order];
    let mut line = String::with_capacity(2 * order);
    Ok((|| {
        for u in g.vertices() {
            row.iter_mut().for_each(|c| *c = 0);
            for w in g.neighbors_iter(u) {
                row[g.index(w)] += 1;
            }
            line.clear();
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    line.push(',');
                }
                line.push_str(&c.to_string());
            }
            writeln!(out, "{line}")?;
        }
        Ok(())
    })())
}

/// A number reported both from its closed form and from the BFS oracle.
#[derive(Debug, Clone, Serialize)]
pub struct Paired<T> {
    pub formula: Option<T>,
    pub oracle: T,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnchorStats {
    /// `(D_{n-1}, D_n)`
    pub anchor: TorusVertex,
    pub anchor_member: Member,
    pub anchor_is_antipodal: bool,
    /// `(D_n, D_{n-1})`
    pub inverse: TorusVertex,
    pub inverse_member: Member,
    pub inverse_is_antipodal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TripleStats {
    pub label: String,
    /// `[A, B, C]`
    pub members: [TorusVertex; 3],
}

/// Content of `json_stats`. Fields that come from a closed form sit under
/// `formula`, fields measured by BFS under `oracle`.
#[derive(Debug, Clone, Serialize)]
pub struct GraphStats {
    pub graph: String,
    pub n: u32,
    pub variant: String,
    pub directedness: String,
    pub family: Family,
    pub order: u64,
    pub edge_count: u64,
    pub degree: usize,
    pub diameter: Paired<u64>,
    pub antipodal_count: Paired<u128>,
    pub antipodals: Vec<TorusVertex>,
    /// `histogram[p]` = number of vertices at distance `p` from `(0,0)`.
    pub histogram: Vec<u64>,
    /// Undirected graphs at `n >= 1` only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub anchor: Option<AnchorStats>,
    /// Undirected graphs only: Ω triples, third member resolved by the oracle.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub omega: Vec<TripleStats>,
}

pub fn graph_stats(g: &GraphSpec, ceiling: u32) -> Result<GraphStats> {
    let n = g.level();
    let family = g.as_family();
    let field = metrics::bfs_from(g, TorusVertex::ORIGIN)?;
    let antipodals = metrics::antipodals_of(&field);
    let histogram = field.histogram();

    let anchor = if family == Family::UndirectedT && n >= 1 {
        let a = formulas::antipodal_anchor(n)?;
        Some(AnchorStats {
            anchor: a.anchor,
            anchor_member: a.anchor_member,
            anchor_is_antipodal: antipodals.contains(&a.anchor),
            inverse: a.anchor_inverse,
            inverse_member: a.inverse_member,
            inverse_is_antipodal: antipodals.contains(&a.anchor_inverse),
        })
    } else {
        None
    };
    let omega = if family == Family::UndirectedT {
        omega::omega_subsets_with_ceiling(n, ceiling)?
            .into_iter()
            .filter(|t| n >= 2 || t.label != OmegaLabel::Scaled1Bar)
            .map(|t| TripleStats {
                label: t.name(),
                members: t.members,
            })
            .collect()
    } else {
        Vec::new()
    };

    Ok(GraphStats {
        graph: g.name(),
        n,
        variant: g.variant().to_string(),
        directedness: g.directedness().to_string(),
        family,
        order: g.order() as u64,
        edge_count: g.edge_count() as u64,
        degree: g.generators().len(),
        diameter: Paired {
            formula: Some(formulas::diameter(family, n)?.value),
            oracle: u64::from(field.eccentricity()),
        },
        antipodal_count: Paired {
            formula: formulas::antipodal_count(family, n).ok(),
            oracle: antipodals.len() as u128,
        },
        antipodals: antipodals.into_iter().collect(),
        histogram: histogram.counts,
        anchor,
        omega,
    })
}

pub fn write_json_stats<W: Write>(
    g: &GraphSpec,
    ceiling: u32,
    out: &mut W,
) -> Result<io::Result<()>> {
    let stats = graph_stats(g, ceiling)?;
    let text = serde_json::to_string_pretty(&stats).expect("stats serialize to JSON");
    Ok(writeln!(out, "{text}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{Directedness, Variant};

    fn render(g: &GraphSpec, format: ExportFormat) -> String {
        let mut buf = Vec::new();
        match format {
            ExportFormat::EdgeList => write_edge_list(g, false, &mut buf).unwrap(),
            ExportFormat::Dot => write_dot(g, false, &mut buf).unwrap(),
            ExportFormat::AdjacencyCsv => write_adjacency_csv(g, &mut buf).unwrap().unwrap(),
            ExportFormat::JsonStats => write_json_stats(g, 12, &mut buf).unwrap().unwrap(),
        }
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn level_zero_edge_list_is_six_loops() {
        let g = GraphSpec::new(0, Variant::Arrowhead, Directedness::Undirected).unwrap();
        // 3 edge slots, each a loop counted twice at the vertex
        let text = render(&g, ExportFormat::EdgeList);
        assert_eq!(text, "0,0 -- 0,0\n".repeat(3));
    }

    #[test]
    fn level_one_edge_list() {
        let g = GraphSpec::new(1, Variant::Arrowhead, Directedness::Undirected).unwrap();
        let text = render(&g, ExportFormat::EdgeList);
        assert_eq!(text.lines().count(), 12);
        assert!(text.starts_with("0,0 -- 0,1\n0,0 -- 0,1\n"));
    }

    #[test]
    fn diamond_directed_edge_list() {
        let g = GraphSpec::new(2, Variant::Diamond, Directedness::Directed).unwrap();
        let text = render(&g, ExportFormat::EdgeList);
        assert_eq!(text.lines().count(), 48);
        assert!(text
            .lines()
            .take(3)
            .eq(["0,0 -> 0,1", "0,0 -> 1,0", "0,0 -> 1,1"]));
    }

    #[test]
    fn dot_layout() {
        let g = GraphSpec::new(1, Variant::Diamond, Directedness::Directed).unwrap();
        let text = render(&g, ExportFormat::Dot);
        assert!(text.starts_with("digraph DTdir_1 {\n  v_0_0 [label=\"(0,0)\"];\n"));
        assert!(text.contains("  v_1_1 -> v_0_0;\n"));
        assert!(text.ends_with("}\n"));
    }

    #[test]
    fn adjacency_rows_sum_to_degree() {
        let g = GraphSpec::new(1, Variant::Arrowhead, Directedness::Undirected).unwrap();
        let text = render(&g, ExportFormat::AdjacencyCsv);
        assert_eq!(text.lines().next().unwrap(), "0,2,2,2");
        for line in text.lines() {
            let sum: u32 = line.split(',').map(|c| c.parse::<u32>().unwrap()).sum();
            assert_eq!(sum, 6);
        }
        let big = GraphSpec::new(6, Variant::Arrowhead, Directedness::Undirected).unwrap();
        assert!(write_adjacency_csv(&big, &mut Vec::new()).is_err());
    }

    #[test]
    fn stats_fields() {
        let g = GraphSpec::new(5, Variant::Arrowhead, Directedness::Undirected).unwrap();
        let s = graph_stats(&g, 12).unwrap();
        assert_eq!(s.diameter.formula, Some(21));
        assert_eq!(s.diameter.oracle, 21);
        assert_eq!(s.antipodal_count.oracle, 6);
        assert!(s.anchor.unwrap().anchor_is_antipodal);
        let json = render(&g, ExportFormat::JsonStats);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["antipodal_count"]["formula"], 6);
        assert_eq!(v["family"], "T");
    }
}
