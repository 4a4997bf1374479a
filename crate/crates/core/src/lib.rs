//! Finite and finitely-presented topology: power spaces, sobriety,
//! well-filteredness and the ω-well-filtered reflection.

pub mod battery;
pub mod caps;
pub mod catalog;
pub mod certificate;
pub mod classify;
pub mod cli;
pub mod document;
pub mod dot;
pub mod enumerate;
pub mod error;
pub mod map;
pub mod pointset;
pub mod poset;
pub mod powerspace;
pub mod product;
pub mod reflection;
pub mod report;
pub mod rudin;
pub mod space;
pub mod topology;

pub use error::{Error, Result};
pub use map::ContinuousMap;
pub use pointset::PointSet;
pub use poset::FinitePoset;
pub use powerspace::IndexedSpace;
pub use product::ProductSpace;
pub use space::{FiniteSpace, SetFamily};
