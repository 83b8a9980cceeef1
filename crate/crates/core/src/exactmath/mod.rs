//! Exact arithmetic: rationals, multivariate polynomials, polynomial matrices
//! and linear systems over the rationals.

pub mod expr;
pub mod linsolve;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod var;

pub use expr::{parse_poly, ExprError};
pub use linsolve::{kernel, rank, solve_linear, Solution, SolveError};
pub use matrix::PolyMatrix;
pub use poly::{MissingVariable, Monomial, Poly};
pub use rational::{frac, int, Rational, RationalParseError};
pub use var::Var;
