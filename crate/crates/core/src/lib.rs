//! Finite crystallographic reflection groups and generalized Specht modules.
//!
//! The pipeline runs bottom-up: [`rootsys`] builds Φ with a simple system,
//! [`weyl`] enumerates W(Φ) as permutations of Φ, [`subsys`] handles
//! subsystems and distinguished coset representatives, [`tabloid`] builds
//! frames and tabloids, and [`specht`] assembles polytabloids, Specht
//! modules, the invariant form and characters. [`report`] bundles one frame
//! into a serializable record. All arithmetic is exact ([`exactlin`]).

pub mod error;
pub mod exactlin;
pub mod exec;
pub mod report;
pub mod rootsys;
pub mod specht;
pub mod subsys;
pub mod tabloid;
pub mod weyl;

pub use error::{Error, Result};
pub use exec::Exec;
