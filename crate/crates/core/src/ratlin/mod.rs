//! Exact rational scalars, dense matrices and tensors, and elimination routines.

pub mod matrix;
pub mod rational;
pub mod solve;
pub mod tensor;

pub use matrix::{dot, Matrix};
pub use rational::{format_rational, int, one, parse_rational, rat, zero, Rational};
pub use solve::{
    determinant, invert, invert_symmetric, nullspace, rank, signature, solve_affine,
    AffineSolutionSpace, Signature,
};
pub use tensor::{DenseTensor, Slot};
