//! Exact Clifford algebras, their spinor representations, the Pin, Spin and
//! Lipschitz groups, and mod 2 obstructions to spin structures.

pub mod bundles;
pub mod charclass;
pub mod clifford;
pub mod error;
pub mod groups;
pub mod linalg;
pub mod matrix;
pub mod report;
pub mod scalar;
pub mod spinor;
pub mod suite;

pub use charclass::{Catalog, CohoRing, F2Vec, ManifoldData, ObstructionRow};
pub use clifford::{Blade, CliffordElement, Signature, VolumeElement};
pub use error::{Error, Result};
pub use groups::{kappa, FrameGroup, KappaImage, LipschitzSampler, OrthMatrix};
pub use matrix::ExactMatrix;
pub use report::{Aggregate, CheckReport, Status, SCHEMA_VERSION};
pub use scalar::{Rational, Scalar};
pub use spinor::{Grading, Intertwiner, RepKind, Representation, SpinSpace};
