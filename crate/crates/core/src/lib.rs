//! Combinatorial engine for the tensor category of mixed tensor
//! representations of the Mackey Lie algebra `gl^M(V, V_*)`.
//!
//! The crate works at the level of Young diagrams and Grothendieck groups:
//! Littlewood–Richardson arithmetic, closed plethysm families, composition
//! factors of tensor products, the index poset and its defect, Ext
//! computations against the trivial and purely thick simples, and explicit
//! symmetric-group-algebra checks. [`oracle`] holds independent brute-force
//! verifiers used by the test suite and the CLI's `--verify` mode.

pub mod cli;
pub mod combination;
pub mod config;
pub mod diagrams;
pub mod error;
pub mod ext;
pub mod grothendieck;
pub mod oracle;
pub mod ospcat;
pub mod plethysm;
pub mod poset;
pub mod symalg;
pub mod syntax;
pub mod symfunc;

pub use combination::Combination;
pub use diagrams::Partition;
pub use error::{Error, Result};
pub use symfunc::SymFunc;
