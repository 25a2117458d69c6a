//! Enumerative oracles: Wick pairings and rosettes, multigraphs and their
//! doubled Eulerian cycles, combinatorial maps with spanning trees, and the
//! Harer–Zagier series.

mod best;
mod checks;
mod cmap;
mod derivative;
mod eulerian;
mod harer_zagier;
mod multigraph;
pub(crate) mod rosette;

pub use best::{best_forward, best_inverse};
pub use checks::{
    certify_normalization, verify_bijection, verify_initial_identity, BijectionReport, InitialIdentityReport,
    InitialTerm, Mismatch, INITIAL_IDENTITY_BUDGET,
};
pub use cmap::{enumerate_maps, CombinatorialMap, DARTS_PER_VERTEX_BUDGET};
pub use derivative::{derivative_oracle, DERIVATIVE_EDGE_BUDGET};
pub use eulerian::{
    directed_double, eulerian_count_normalized, eulerian_count_rooted, eulerian_cycles_rooted, Arc, DirectedDouble,
    EulerianCycle, ARC_BUDGET,
};
pub use harer_zagier::{harer_zagier_closed, harer_zagier_from_counts};
pub use multigraph::{
    enumerate_connected_multigraphs, Edge, Multigraph, MULTIGRAPH_EDGE_BUDGET, MULTIGRAPH_VERTEX_BUDGET,
};
pub use rosette::{
    enumerate_pairings, moment_wick, pairing_count, pairing_total, rosette_census, rosette_count_formula,
    rosette_genus, rosette_total_formula, Pairing, RosetteCensus, PAIRING_BUDGET,
};
