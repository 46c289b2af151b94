//! Equivariant Littlewood-Richardson coefficients for Grassmannians, the
//! edge-labeled tableau rule that computes them, and the Horn-type
//! inequalities that decide when they vanish.

pub mod error;
pub mod partition;
pub mod poly;
pub mod tableau;
pub mod coefficient;
pub mod oracle;
pub mod horn;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{IndexSet, Partition, RealSpectrum};
pub use poly::TPolynomial;
pub use tableau::{EdgeLabeledTableau, GapPosition, SkewShape};
