//! Large homogeneous sets in disperse hypergraphs.

mod crossing;
mod exact;
mod partition;
mod pipeline;
mod spencer;
pub mod thresholds;

pub use crossing::{verify_crossing_degree, verify_trace_crossing_degree, CrossingDegreeReport};
pub use exact::{exact_max_homogeneous, oracle_cap, ExactHomogeneous};
pub use partition::{partition_algorithm, side_hypergraph, EarlyStop, PartitionTrace, Side, Split};
pub use pipeline::{
    cohypergraph_completion, homogeneous_pipeline, homogeneous_pipeline_with, Branch, Completion,
    PipelineOptions, PipelineResult,
};
pub use spencer::{sampling_weight, spencer_bound, spencer_independent_set, ROUNDING_SLACK};
pub use thresholds::Exponents;
