//! Decoding bipartitions into cost-model quantities, connectedness checks and
//! multi-way partitioning by repeated bisection.

mod bisect;
mod connectivity;
mod enforce;
mod report;

pub use bisect::{bisect_iterative, Bisection, MultiPartition};
pub use connectivity::{check_connected, Connectivity};
pub use enforce::{
    enforce_connectedness, ConnectedSolution, ConnectednessOutcome, LoopRound, LoopStatus,
};
pub use report::{
    decode, ComponentSide, CutEdge, NormalizedOverheads, PartitionReport, REPORT_CSV_HEADER,
};
