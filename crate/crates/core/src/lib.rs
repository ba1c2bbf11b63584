//! Exact generalized Catalan numbers.
//!
//! `C(n, m)` counts monotone lattice paths from `(0, -2m)` to `(n-m, n-m)`
//! that never rise above the diagonal `y = x`, and equals
//! `(2m+1)/(n+m+1) * binom(2n, n+m)`. This crate evaluates that family and
//! its variants in exact arithmetic and checks every closed formula, recursion,
//! identity, generating function and determinant against independent routes:
//!
//! * [`paths`]: path model, dynamic-programming and enumeration oracles,
//!   prefix reflection.
//! * [`family`]: closed formulas, ballot probability, recursions, product
//!   forms.
//! * [`identities`]: two-sided identity evaluation and parameter sweeps.
//! * [`series`]: truncated power series and the generating functions.
//! * [`determinant`]: the Catalan matrix and fraction-free determinants.

pub mod determinant;
pub mod error;
pub mod family;
pub mod identities;
pub mod numeric;
pub mod paths;
pub mod series;

pub use determinant::{
    catalan_matrix, coeff_matrix_from_series, det_exact, triangularize_check,
    verify_catalan_determinant, ExactMatrix, TriangularReport,
};
pub use error::{Error, Result};
pub use family::{
    ballot_probability, c_closed_product, c_via_product_recursion, c_via_weighted_recursion,
    catalan_family, catalan_family_by_paths, central_binomial_via, convolution_closed_form,
    convolution_sum, CatalanValue, CentralBinomialRoute, FamilyKind,
};
pub use identities::{
    conjecture_sweep, evaluate_sides, first_touch_sides, verify_identity, Evaluation, IdentityId,
    IdentityReport, Params, Regime,
};
pub use numeric::{binomial, binomial_falling, ExactInt, ExactRational};
pub use paths::{
    count_paths, enumerate_paths, first_touch, reflect_prefix, Constraint, LatticePath, Point,
    Step, DEFAULT_STEP_CAP,
};
pub use series::{
    big_gamma, gamma0, gamma0_from_radical, gamma_m, gamma_product_form, series_invert,
    series_mul, series_pow, series_sqrt_of, theta, BivariateSeries, TruncatedSeries,
};
