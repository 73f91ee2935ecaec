//! Finite residuated lattices, their filter lattices and prime spectra, and
//! the hull-kernel and dual hull-kernel topologies on collections of prime
//! filters.
//!
//! Every structure here is finite and materialized explicitly: sets are
//! 64-bit masks, topologies are lists of open sets.

pub mod algebra;
pub mod census;
pub mod enumerate;
pub mod error;
pub mod filter;
pub mod fixtures;
pub mod format;
pub mod harness;
pub mod sample;
pub mod set;
pub mod spectrum;
pub mod topology;

pub use algebra::{residual_from_prod, validate_algebra, Algebra, Tables, ValidationReport};
pub use error::{Error, Result};
pub use filter::{all_filters, generated_filter, principal_filter, Filter, FilterLattice};
pub use format::{emit_algebra, parse_algebra};
pub use harness::{run_suite, SuiteOptions, TheoremReport};
pub use set::{ElementSet, PointSet};
pub use spectrum::{PrimeCollection, Spectrum};
pub use topology::{FiniteTopology, HullKernelSpace, TopologyKind};
