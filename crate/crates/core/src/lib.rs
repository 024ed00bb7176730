//! Arrowhead and diamond Cayley graphs on the triangular torus
//! `Z_{2^n} x Z_{2^n}`: implicit graph construction, an exact BFS distance
//! oracle, the closed-form diameters and antipodal sets, and a harness that
//! checks one against the other.

pub mod cayley;
pub mod cli;
pub mod error;
pub mod export;
pub mod formulas;
pub mod metrics;
pub mod omega;
pub mod verify;

pub use cayley::{
    embed_scaled, subgroup_vertices, Directedness, Edge, Family, GeneratorSet, GraphSpec,
    TorusVertex, Variant, DEFAULT_MAX_LEVEL,
};
pub use error::{Error, Result};
pub use metrics::{
    antipodals_oracle, bfs_from, diameter_oracle, distance_histogram, eccentricity, shortest_path,
    DistanceField, DistanceHistogram,
};
pub use omega::{omega_subsets, OmegaLabel, OmegaTriple};
pub use verify::{run_sweep, ClaimCheck, ClaimId, SweepConfig, VerificationReport};
