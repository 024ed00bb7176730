//! Exact hop distances by breadth-first search over the implicit graph.
//!
//! Every closed form in [`crate::formulas`] is checked against this module.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cayley::{GraphSpec, TorusVertex};
use crate::error::{Error, Result};

const UNSEEN: u32 = u32::MAX;

/// Default number of random origins for the vertex-transitivity smoke test.
pub const DEFAULT_TRANSITIVITY_SAMPLES: usize = 8;

/// Exhaustive all-origin transitivity checks are limited to this level.
pub const EXHAUSTIVE_TRANSITIVITY_MAX_LEVEL: u32 = 4;

/// Single-source hop distances, indexed by [`GraphSpec::index`].
#[derive(Debug, Clone)]
pub struct DistanceField {
    graph: GraphSpec,
    origin: TorusVertex,
    dist: Vec<u32>,
}

impl DistanceField {
    pub fn graph(&self) -> &GraphSpec {
        &self.graph
    }

    pub fn origin(&self) -> TorusVertex {
        self.origin
    }

    pub fn get(&self, v: TorusVertex) -> u32 {
        self.dist[self.graph.index(v)]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.dist
    }

    pub fn eccentricity(&self) -> u32 {
        eccentricity(self)
    }

    pub fn histogram(&self) -> DistanceHistogram {
        distance_histogram(self)
    }

    /// Vertices at exactly distance `p`, in index order.
    pub fn shell(&self, p: u32) -> Vec<TorusVertex> {
        self.dist
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == p)
            .map(|(i, _)| self.graph.vertex(i))
            .collect()
    }
}

/// Number of vertices at each distance; `counts[p]` is the size of shell `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceHistogram {
    pub counts: Vec<u64>,
}

impl DistanceHistogram {
    pub fn get(&self, p: usize) -> u64 {
        self.counts.get(p).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn max_distance(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }
}

/// BFS from `origin`, honoring arc direction for directed specs.
pub fn bfs_from(g: &GraphSpec, origin: TorusVertex) -> Result<DistanceField> {
    g.check_vertex(origin)?;
    let order = g.order();
    let mut dist = vec![UNSEEN; order];
    let mut queue: Vec<u32> = Vec::with_capacity(order);
    let gens = g.generators().as_slice();

    let start = g.index(origin);
    dist[start] = 0;
    queue.push(start as u32);
    let mut head = 0;
    while head < queue.len() {
        let u = g.vertex(queue[head] as usize);
        head += 1;
        let du = dist[g.index(u)];
        for &s in gens {
            let w = g.index(g.translate(u, s));
            if dist[w] == UNSEEN {
                dist[w] = du + 1;
                queue.push(w as u32);
            }
        }
    }
    if queue.len() != order {
        return Err(Error::Oracle(format!(
            "{} is not strongly connected: reached {} of {order} vertices",
            g.name(),
            queue.len()
        )));
    }
    Ok(DistanceField {
        graph: g.clone(),
        origin,
        dist,
    })
}

pub fn eccentricity(f: &DistanceField) -> u32 {
    f.dist.iter().copied().max().unwrap_or(0)
}

/// Diameter as the eccentricity of the origin; valid because Cayley graphs are vertex-transitive.
pub fn diameter_oracle(g: &GraphSpec) -> Result<u32> {
    Ok(bfs_from(g, TorusVertex::ORIGIN)?.eccentricity())
}

/// [`diameter_oracle`] that also re-runs BFS from `samples` seeded random
/// origins and fails if any eccentricity differs.
pub fn diameter_oracle_paranoid(g: &GraphSpec, samples: usize, seed: u64) -> Result<u32> {
    let diameter = diameter_oracle(g)?;
    for origin in sample_origins(g, samples, seed) {
        let e = bfs_from(g, origin)?.eccentricity();
        if e != diameter {
            return Err(Error::Oracle(format!(
                "{}: eccentricity {e} from {origin} differs from {diameter} at the origin",
                g.name()
            )));
        }
    }
    Ok(diameter)
}

/// Vertices at distance equal to the diameter from `(0,0)`.
pub fn antipodals_oracle(g: &GraphSpec) -> Result<BTreeSet<TorusVertex>> {
    let f = bfs_from(g, TorusVertex::ORIGIN)?;
    Ok(antipodals_of(&f))
}

pub fn antipodals_of(f: &DistanceField) -> BTreeSet<TorusVertex> {
    f.shell(f.eccentricity()).into_iter().collect()
}

pub fn distance_histogram(f: &DistanceField) -> DistanceHistogram {
    let mut counts = vec![0u64; f.eccentricity() as usize + 1];
    for &d in &f.dist {
        counts[d as usize] += 1;
    }
    DistanceHistogram { counts }
}

/// Shortest path `from -> to`.
///
/// Uses the translation automorphism: the distance from `v` to `to` equals
/// the distance from the origin to `to - v`. At each step the first generator,
/// in canonical order, that lowers the remaining distance is taken.
pub fn shortest_path(
    g: &GraphSpec,
    from: TorusVertex,
    to: TorusVertex,
) -> Result<Vec<TorusVertex>> {
    let field = bfs_from(g, TorusVertex::ORIGIN)?;
    shortest_path_in(&field, from, to)
}

/// [`shortest_path`] reusing a distance field rooted at the origin.
pub fn shortest_path_in(
    origin_field: &DistanceField,
    from: TorusVertex,
    to: TorusVertex,
) -> Result<Vec<TorusVertex>> {
    let g = origin_field.graph();
    if origin_field.origin() != TorusVertex::ORIGIN {
        return Err(Error::arg(
            "path extraction needs a distance field rooted at (0,0)",
        ));
    }
    g.check_vertex(from)?;
    g.check_vertex(to)?;
    let remaining = |v: TorusVertex| origin_field.get(g.sub(to, v));

    let mut path = vec![from];
    let mut cur = from;
    while cur != to {
        let here = remaining(cur);
        let next = g
            .neighbors_iter(cur)
            .find(|&w| remaining(w) + 1 == here)
            .ok_or_else(|| Error::Oracle(format!("no descending step from {cur} towards {to}")))?;
        path.push(next);
        cur = next;
    }
    Ok(path)
}

/// Deterministic sample of origins (with replacement) from a seeded ChaCha stream.
pub fn sample_origins(g: &GraphSpec, count: usize, seed: u64) -> Vec<TorusVertex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| g.vertex(rng.gen_range(0..g.order())))
        .collect()
}

/// Compares the histogram from each sampled origin with the one from `(0,0)`.
/// Returns the origins whose histogram differs (empty on success).
pub fn transitivity_sample(g: &GraphSpec, samples: usize, seed: u64) -> Result<Vec<TorusVertex>> {
    let reference = bfs_from(g, TorusVertex::ORIGIN)?.histogram();
    let mut bad = Vec::new();
    for origin in sample_origins(g, samples, seed) {
        if bfs_from(g, origin)?.histogram() != reference {
            bad.push(origin);
        }
    }
    Ok(bad)
}

/// All-origin version of [`transitivity_sample`], limited to small levels.
pub fn transitivity_exhaustive(g: &GraphSpec) -> Result<Vec<TorusVertex>> {
    if g.level() > EXHAUSTIVE_TRANSITIVITY_MAX_LEVEL {
        return Err(Error::LevelCeiling {
            level: g.level(),
            ceiling: EXHAUSTIVE_TRANSITIVITY_MAX_LEVEL,
        });
    }
    let reference = bfs_from(g, TorusVertex::ORIGIN)?.histogram();
    let mut bad = Vec::new();
    for origin in g.vertices() {
        if bfs_from(g, origin)?.histogram() != reference {
            bad.push(origin);
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{Directedness, Variant};

    fn v(x: u32, y: u32) -> TorusVertex {
        TorusVertex::new(x, y)
    }

    fn t(n: u32) -> GraphSpec {
        GraphSpec::new(n, Variant::Arrowhead, Directedness::Undirected).unwrap()
    }

    fn at(n: u32) -> GraphSpec {
        GraphSpec::new(n, Variant::Arrowhead, Directedness::Directed).unwrap()
    }

    fn dt(n: u32) -> GraphSpec {
        GraphSpec::new(n, Variant::Diamond, Directedness::Directed).unwrap()
    }

    #[test]
    fn bfs_examples() {
        let f = bfs_from(&t(1), TorusVertex::ORIGIN).unwrap();
        assert_eq!(f.as_slice(), &[0, 1, 1, 1]);
        assert_eq!(
            bfs_from(&at(2), TorusVertex::ORIGIN).unwrap().get(v(1, 2)),
            3
        );
        assert_eq!(
            bfs_from(&dt(2), TorusVertex::ORIGIN).unwrap().get(v(3, 1)),
            3
        );
    }

    #[test]
    fn eccentricity_examples() {
        assert_eq!(diameter_oracle(&t(2)).unwrap(), 2);
        assert_eq!(diameter_oracle(&t(0)).unwrap(), 0);
        assert_eq!(diameter_oracle(&at(3)).unwrap(), 7);
        assert_eq!(diameter_oracle(&t(5)).unwrap(), 21);
        assert_eq!(diameter_oracle(&dt(4)).unwrap(), 15);
    }

    #[test]
    fn antipodal_examples() {
        let expected: BTreeSet<_> = [
            v(1, 2),
            v(1, 3),
            v(2, 3),
            v(2, 1),
            v(3, 1),
            v(3, 2),
            v(2, 2),
            v(2, 0),
            v(0, 2),
        ]
        .into_iter()
        .collect();
        assert_eq!(antipodals_oracle(&t(2)).unwrap(), expected);
        assert_eq!(
            antipodals_oracle(&t(1)).unwrap(),
            [v(1, 1), v(1, 0), v(0, 1)].into_iter().collect()
        );
        assert_eq!(antipodals_oracle(&dt(1)).unwrap().len(), 3);
    }

    #[test]
    fn path_examples() {
        assert_eq!(
            shortest_path(&at(1), v(0, 0), v(1, 1)).unwrap(),
            vec![v(0, 0), v(1, 1)]
        );
        assert_eq!(shortest_path(&t(2), v(0, 0), v(1, 2)).unwrap().len(), 3);
        assert_eq!(shortest_path(&dt(3), v(0, 0), v(5, 2)).unwrap().len(), 6);
        assert_eq!(
            shortest_path(&dt(3), v(0, 0), v(0, 0)).unwrap(),
            vec![v(0, 0)]
        );
    }

    #[test]
    fn directed_path_respects_arcs() {
        let g = at(3);
        let path = shortest_path(&g, v(3, 1), v(6, 2)).unwrap();
        for w in path.windows(2) {
            assert!(
                g.is_adjacent(w[0], w[1]),
                "{} -> {} is not an arc",
                w[0],
                w[1]
            );
        }
        let f = bfs_from(&g, v(3, 1)).unwrap();
        assert_eq!(path.len() as u32 - 1, f.get(v(6, 2)));
    }

    #[test]
    fn histogram_examples() {
        assert_eq!(
            bfs_from(&t(0), TorusVertex::ORIGIN)
                .unwrap()
                .histogram()
                .counts,
            vec![1]
        );
        assert_eq!(
            bfs_from(&t(2), TorusVertex::ORIGIN)
                .unwrap()
                .histogram()
                .get(2),
            9
        );
        let h = bfs_from(&dt(3), TorusVertex::ORIGIN).unwrap().histogram();
        assert_eq!(h.counts, (0..8).map(|p| 2 * p + 1).collect::<Vec<u64>>());
    }

    #[test]
    fn paranoid_diameter_and_exhaustive_transitivity() {
        for g in [t(3), at(3), dt(3)] {
            assert_eq!(
                diameter_oracle_paranoid(&g, 8, 7).unwrap(),
                diameter_oracle(&g).unwrap()
            );
            assert!(transitivity_exhaustive(&g).unwrap().is_empty());
        }
        assert!(transitivity_exhaustive(&t(5)).is_err());
    }

    #[test]
    fn sampling_is_seeded() {
        let g = t(6);
        assert_eq!(sample_origins(&g, 8, 42), sample_origins(&g, 8, 42));
        assert_ne!(sample_origins(&g, 8, 42), sample_origins(&g, 8, 43));
    }

    #[test]
    fn out_of_range_origin_is_rejected() {
        assert!(bfs_from(&t(2), v(4, 0)).is_err());
    }
}
