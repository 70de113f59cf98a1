//! Symmetric matrices, Gram matrices and lattice bases.
//!
//! Every matrix keeps an `f64` view; matrices built from text or from exact
//! rationals additionally carry the exact entries, and determinants,
//! definiteness tests and reduction slacks use them when present.

mod bracket;
mod exact;
mod matrix;

pub use bracket::{parse_bracket, parse_matrix, parse_matrix_json, render_bracket, render_json, MatrixJson};
pub use exact::{bareiss_determinant, format_float, format_rational, parse_rational, rational, rational_from_f64, to_f64, Rational};
pub use matrix::{
    convex_combination, gram_from_basis, BasisMatrix, Definiteness, GramMatrix, Labels3, Labels4,
    SymMatrix, MAX_DIM,
};
