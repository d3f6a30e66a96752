//! Dense linear algebra kernel: matrices, vectors, an SPD solver, the
//! symmetric eigensolver, and the HJB C-matrix builder.

mod eig;
mod matrix;

pub use eig::{build_c, sym_eig, EigenDecomposition};
pub use matrix::{solve_spd, Matrix, Vector};

pub(crate) use eig::spectral_inv_sqrt;
pub(crate) use matrix::dot as dot_slices;
