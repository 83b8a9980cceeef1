//! Lambda-bracket superalgebras with a twist map and the axiom checkers.

pub mod checks;
pub mod element;
pub mod endo;
pub mod parity;
pub mod superalgebra;

pub use checks::{
    check_grading, check_hom_jacobi, check_multiplicative, check_regular, check_skew_symmetry, run_suite, SuiteOptions,
};
pub use element::{sesquilinear, Element, LambdaValue};
pub use endo::ConformalEndo;
pub use parity::{koszul, Parity};
pub use superalgebra::{Generator, Superalgebra};
