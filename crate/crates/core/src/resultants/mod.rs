//! Sylvester matrices, resultants, discriminants, the power-of-irreducible
//! structure of resultants and a bounded irreducibility tester.

pub mod factor;
pub mod kronecker;
pub mod power;
pub mod prs;
pub mod sylvester;

pub use kronecker::{factor_univariate, kronecker_irreducible, DEFAULT_DEGREE_BOUND};
pub use power::{power_structure, PowerStructure};
pub use prs::{discriminant, resultant};
pub use sylvester::{sylvester_matrix, SylvesterMatrix};
