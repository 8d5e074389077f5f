//! Connection probability estimation for multi-layer binary networks.
//!
//! A multi-layer network on a shared node set is stored as an `n × n × K`
//! adjacency tensor with symmetric, zero-diagonal layers. The estimators in
//! this crate recover the underlying connection probability tensor by
//! neighborhood smoothing: averaging observed edges over nodes and layers
//! whose estimated probability profiles are close, with the neighborhoods
//! themselves refined iteratively from the current estimate (MICE). The
//! single-layer reduction (ICE) and the oracle variant (neighborhoods built
//! from the true tensor) share the same smoothing kernel.
//!
//! The companion modules provide a seeded graphon simulator ([`graphon`]),
//! accuracy / link-prediction metrics and a replication harness ([`metrics`],
//! [`scenario`]), and the file formats behind the `mice` CLI ([`io`],
//! [`config`], [`commands`]).
//!
//! Core numerics are generic over the floating scalar via [`Scalar`];
//! `f64` aliases are exported at the crate root and are what the CLI uses.

pub mod commands;
pub mod config;
pub mod estimator;
pub mod graphon;
pub mod io;
pub mod metrics;
pub mod rng;
pub mod scalar;
pub mod scenario;
pub mod tensor;

pub use estimator::{
    compute_delta, default_sizes, mice_estimate, select_layer_neighbors, select_node_neighbors,
    smoothing_update, warm_start, EstimateMode, EstimatorError, IterationRecord, IterationTrace,
    NeighborSets, NeighborhoodConfig,
};
pub use graphon::{
    build_probability_tensor, builtin_graphon, sample_adjacency, sample_latents, GraphonError,
    GraphonId, GraphonModel, LatentPositions,
};
pub use metrics::{
    auc, generate_mask, mae, rmse, roc_curve, temporal_precision, EvalError, EvaluationReport,
    RocPoint,
};
pub use scalar::Scalar;
pub use scenario::{run_scenario, Grid, MethodSpec, ScenarioRow, ScenarioSpec, ScenarioTable};
pub use tensor::{
    apply_mask, layer_distance, row_distance, validate_adjacency, validate_probability,
    AdjacencyTensor, MaskTensor, MaskedAdjacency, ProbabilityTensor, TensorError, Violation,
};

/// `f64` probability tensor, the type the CLI and file formats use.
pub type ProbabilityTensor64 = ProbabilityTensor<f64>;
/// `f32` probability tensor for memory-constrained callers.
pub type ProbabilityTensor32 = ProbabilityTensor<f32>;
/// `f64` graphon model.
pub type GraphonModel64 = GraphonModel<f64>;
/// `f64` latent positions.
pub type LatentPositions64 = LatentPositions<f64>;
