//! Normalized solid angles of cones spanned by lattice bases.
//!
//! The crate is organised in four layers:
//!
//! - [`linalg`]: symmetric matrices, Gram matrices of bases, exact rational
//!   determinants and the bracket text encoding `[a, d, e; b, f; c]`.
//! - [`reduction`]: Minkowski reduction conditions for ranks 2 to 4, slack
//!   reports, active facets, well-rounded rescaling and sign-flip search.
//! - [`solidangle`]: the orthant integral `∫ (xᵀQx)^(-n/2) ds` by tensor
//!   Gauss–Legendre, adaptive or Monte Carlo rules, plus closed-form and
//!   sampling oracles.
//! - [`extremal`]: vertex enumeration of fixed-diagonal reduced domains,
//!   minimal-determinant formulas, the reduced-triangle scan and the rank-4 /
//!   rank-5 comparison.
//!
//! ```
//! use solidcone::{forms, solidangle::{solid_angle, QuadratureSpec}};
//!
//! let q0 = forms::fcc(4);
//! let omega = solid_angle(&q0, &QuadratureSpec::default()).unwrap();
//! assert!((omega.omega * 2.0 * std::f64::consts::PI.powi(2) - 0.193142).abs() < 5e-4);
//! ```

pub mod error;
pub mod extremal;
pub mod forms;
pub mod linalg;
pub mod reduction;
pub mod solidangle;

pub use error::{Error, Result};
pub use linalg::{BasisMatrix, Definiteness, GramMatrix, Rational, SymMatrix};
pub use reduction::{ReductionCondition, ReductionReport};
pub use solidangle::{QuadratureResult, QuadratureSpec, SolidAngle};
