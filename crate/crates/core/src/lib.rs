//! Exact-arithmetic toolkit relating Lin-Lu-Yau curvature to graph
//! connectivity.
//!
//! Everything is computed over arbitrary-precision rationals: Wasserstein
//! distances come from an integer min-cost flow with a Kantorovich dual
//! certificate, curvature limits are evaluated symbolically on the final
//! linear piece of `p ↦ κ_p`, and connectivities are certified by minimum
//! separators and cuts from unit-capacity max-flow. On top of that sits a
//! harness that checks the curvature-connectivity inequalities on generated
//! families and random instances, reporting exact margins.

#![forbid(unsafe_code)]

pub mod assignment;
pub mod connectivity;
pub mod curvature;
pub mod families;
pub mod graph;
pub mod io;
pub mod matching;
pub mod rational;
pub mod report;
pub mod theorems;
pub mod transport;

pub use connectivity::{edge_connectivity, vertex_connectivity, ConnectivityWitness, Separator};
pub use curvature::{
    curvature_at_scale, is_positively_curved, kappa_p, lly_curvature, lly_equal_degree,
    matching_transport_bound, CurvatureValue,
};
pub use graph::{Graph, GraphError};
pub use rational::{rat, ratio, Rational};
pub use report::{CheckId, TheoremReport};
pub use transport::{
    plan_cost, plan_upper_bound, vertex_measure, wasserstein, wasserstein_forced, Measure,
    TransportPlan,
};
