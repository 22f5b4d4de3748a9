//! Exact linear algebra for second-order recurrent sequences.
//!
//! The crate builds the structured matrix families attached to a recurrence
//! `w_{n+1} = A*w_n - B*w_{n-1}` (absolute-difference and shifted Toeplitz,
//! Hankel, q-power, tree-distance), evaluates their determinants and
//! characteristic polynomials with fraction-free exact arithmetic, and
//! verifies a catalog of closed-form identities and conjectures about them,
//! either symbolically (polynomial identities in indeterminates) or
//! numerically (exact integer sampling).
//!
//! Core algorithms are generic over the scalar ring through [`Ring`];
//! concrete instantiations are the type aliases exported at the crate root.

pub mod element;
pub mod identities;
pub mod matrix;
pub mod poly;
pub mod ring;
pub mod sequences;
pub mod tree;
pub mod unipoly;
pub mod verify;

pub use element::{poly_eval, RingElement};
pub use matrix::{
    add_diag, build_abs_diff, build_hankel, build_q_jk_matrix, build_q_matrix, build_shifted,
    map_entries, DenseMatrix, MatrixError,
};
pub use poly::{MultiPoly, PolyLift, Var};
pub use ring::{neg_one_pow, ArithError, Integer, Rational, Ring};
pub use sequences::{
    addition_formula, gen_prefix, legendre3, lucas_u, lucas_v, RecurrenceParams, SequencePrefix,
};
pub use tree::Tree;
pub use unipoly::UniPoly;

/// Matrix over the integers.
pub type IntMatrix = DenseMatrix<Integer>;
/// Matrix over the rationals.
pub type RatMatrix = DenseMatrix<Rational>;
/// Matrix over multivariate integer polynomials.
pub type PolyMatrix = DenseMatrix<MultiPoly>;
/// Univariate polynomial with integer coefficients.
pub type IntUniPoly = UniPoly<Integer>;
/// Univariate polynomial with multivariate-polynomial coefficients.
pub type PolyUniPoly = UniPoly<MultiPoly>;
