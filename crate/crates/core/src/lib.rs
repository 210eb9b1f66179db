//! Exact decision procedures for invertibility of finite braided tensor
//! categories, presented either as quasitriangular Hopf algebras or as
//! semisimple modular data.

pub mod axioms;
pub mod error;
pub mod exact;
pub mod group;
pub mod hopf;
pub mod modular;
pub mod coend;
pub mod diagrams;
pub mod rep;
pub mod azumaya;
pub mod format;
pub mod cli;

pub use error::{Error, Result};
