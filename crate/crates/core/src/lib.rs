//! Marked Dynkin diagrams, invariants of rational homogeneous varieties,
//! roofs of projective bundles and the Chow-ring arithmetic of projectivised
//! bundles.

pub mod chow;
pub mod dynkin;
pub mod error;
pub mod homog;
pub mod roofs;
pub mod root_system;

pub use dynkin::{Diagram, MarkedDiagram};
pub use error::{Error, Result};
pub use homog::{gp_invariants, is_projective_space, VarietyInvariants};
pub use roofs::{enumerate_roofs, is_roof, RoofRecord};
pub use root_system::{RootSystem, SimpleType, TypeLetter};
