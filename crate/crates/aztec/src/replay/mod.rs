//! Orchestration of the full verification: chain replay, complementation
//! replay, formula sweeps, and report serialization.

pub mod chain;
pub mod complementation;
pub mod report;
pub mod sweeps;

pub use chain::{chain_graphs, replay_order, verify_chain, ChainGraphs, CHAIN_IDS};
pub use complementation::{ecg_index_sets, verify_complementation, verify_ecf_ecg};
pub use report::{to_jsonl, IdentityReport};
