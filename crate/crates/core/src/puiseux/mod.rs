//! Puiseux expansions of fibers `p = c` at infinity, their images under `q`,
//! the bounded-branch probe and the classification of critical values.

pub mod classify;
pub mod expand;
pub mod image;
pub mod laurent;
pub mod roots;

pub use classify::{classify_critical_values, classify_resultant, CriticalClassification};
pub use expand::{expand_at_infinity, PuiseuxBranch};
pub use image::{branch_image, kraus_probe, proper_on_fiber, BranchImage, GapStatus, ProbeEntry};
pub use laurent::Laurent;
pub use roots::{complex_roots, complex_roots_in};
