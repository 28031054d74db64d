//! Exact construction of faithful modules of dimension at most `n + 1`
//! for `n`-dimensional left Leibniz algebras over the rationals, with
//! independent checkers for every property of the output.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod exactlin;
pub mod faithful;
pub mod fixtures;
pub mod io;
pub mod rep;
pub mod sample;
pub mod splitting;

pub use algebra::{AlgebraMorphism, LeibnizAlgebra};
pub use error::{Error, Result};
pub use exactlin::{RMatrix, Rational, Subspace};
pub use faithful::{faithful_representation, Branch, FaithfulResult};
pub use rep::LeibnizModule;
pub use splitting::{construct_splitting, verify_splitting, SplittingAlgebra};
