//! Finite matroids given by their circuits: the connectivity function,
//! 2-separations and their calculus, localizations and 2-sums, and the
//! canonical tree-decomposition of a connected matroid into 3-connected,
//! circuit and cocircuit torsos.

pub mod builders;
pub mod cli;
pub mod connectivity;
pub mod decomposition;
pub mod duality;
pub mod error;
pub mod fixtures;
pub mod lemmas;
pub mod localization;
pub mod matroid;
pub mod separation;
pub mod subset;

pub use connectivity::{Separation, SeparationKey};
pub use error::{Axiom, Error, Result};
pub use localization::{LocalElement, Localization};
pub use matroid::{Matroid, ValidationLevel, DEFAULT_CAP};
pub use subset::Subset;
