//! Exact symbolic computation with delta-Hom-Jordan Lie conformal
//! superalgebras: lambda-brackets over `Q[d]`, axiom checks as polynomial
//! identities, constructions, representations, cochain differentials,
//! deformations and derivations.

pub mod algebra;
pub mod error;
pub mod exactmath;
pub mod par;
pub mod report;

pub use error::{Error, Result};
pub mod cohomology;
pub mod constructions;
pub mod deformation;
pub mod derivation;
pub mod fixtures;
pub mod io;
pub mod oracle;
pub mod representation;
