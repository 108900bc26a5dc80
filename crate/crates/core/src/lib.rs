//! Exact multigraded Betti numbers of monomial ideals and their powers over
//! ℚ and 𝔽_p, computed through lcm-lattice homology, with tooling to detect
//! where the answer depends on the characteristic.

pub mod betti;
pub mod cli;
pub mod complexes;
pub mod config;
pub mod error;
pub mod field;
pub mod ideals;
pub mod lattice_homology;
pub mod linalg;
pub mod scan;

pub use config::Guards;
pub use error::{Error, Result};
pub use field::FieldSpec;
