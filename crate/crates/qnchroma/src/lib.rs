//! Edge-coloured hypercubes: minimum colour-change geodesics and paths,
//! exact verification of the averaged deviation identities behind the
//! square-root bound on antipodal colour changes, extremal colouring
//! search, and Hamilton-path / spanning-tree colour statistics.
//!
//! The crate is organised around a handful of building blocks:
//!
//! - [`cube`]: vertex arithmetic and the canonical edge indexing of `Q_n`.
//! - [`colouring`]: immutable edge colourings, the standard constructions
//!   (layered, perfect-code, direction, random), and the `QNCOL` file
//!   format.
//! - [`geodesic`]: the `f_c` dynamic programme, 0-1 BFS over general
//!   paths, witnesses, and antipodal cost profiles.
//! - [`averages`]: the local statistics `I`/`J`/`S`, the weighted averages
//!   `f`, `g`, `h`, and exact or sampled expectations `E_k`.
//! - [`verify`]: zero-tolerance certificates for the step identities and
//!   the full chain report.
//! - [`bounds`]: hypergeometric moments and the closed-form deviation
//!   bound whose prefix sums stay within `(pi/2) sqrt(n)`.
//! - [`search`]: exhaustive and sampled scans over colourings, plus
//!   hill climbing on the mean antipodal cost.
//! - [`hamilton`]: minimum colour-change Hamilton paths and monochromatic
//!   components of spanning trees.
//!
//! The `examples/` directory walks through each capability; the `qnchroma`
//! binary exposes the same operations as subcommands.

pub mod averages;
pub mod bounds;
pub mod cli;
pub mod colouring;
pub mod cube;
mod error;
pub mod geodesic;
pub mod hamilton;
pub mod report;
pub mod rng;
pub mod search;
pub mod verify;

pub use averages::{
    expect_k, fgh_averages, ij_counts, s_value, Condition, Expectation, ExpectMode, Fgh,
    IjCounts, Quantity, Rational,
};
pub use bounds::{hypergeom_moments, layer_deviation_mean, master_bound, s_bound, VarianceMode};
pub use colouring::{Colouring, BLUE, RED};
pub use cube::{CubeDim, EdgeId, Vertex};
pub use error::Error;
pub use geodesic::{
    antipodal_cost, antipodal_mean_sampled, antipodal_profile, min_geodesic_cc, min_path_cc,
    min_path_cc_with_witness, path_changes, witness_geodesic, CostMode, FcTable, PathCost, Scope,
};
pub use hamilton::{
    gray_code_cc, hamilton_min_cc, hamming_component_bound, mono_components,
    random_spanning_tree, tree_path_monochromatic, HammingComponentReport, SpanningTree,
};
pub use search::{
    adversary_climb, conjecture_scan, min_antipodal_cost, sampled_scan, ClimbObjective,
    ClimbOutcome, ScanResult, Universe,
};
pub use verify::{
    verify_all, verify_corollary_chain, verify_step1, verify_step1_exhaustive, verify_step2,
    verify_step3, verify_step3_exhaustive, Certificate, ChainRow, LemmaReport,
};

pub type Result<T> = std::result::Result<T, Error>;
