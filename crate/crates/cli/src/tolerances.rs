//! Pinned tolerances. Quadrature comparisons use the run's `--tol` instead.

/// Default relative tolerance for the quadrature path.
pub const QUAD_DEFAULT: f64 = 1e-10;

/// Coefficient pairing against direct evaluation; the identity is termwise.
pub const REPRODUCING_COEFF: f64 = 1e-13;

/// Quadrature pairing against a truncated kernel.
pub const REPRODUCING_QUAD: f64 = 1e-8;

/// Closed-form kernel Gram value against the coefficient pairing.
pub const KERNEL_GRAM: f64 = 1e-10;

/// Slice extension against direct evaluation, relative.
pub const REPRESENTATION: f64 = 1e-10;

/// Tensor inner-product axioms, adjointness, symmetric identities and the
/// Brownian covariance.
pub const TENSOR: f64 = 1e-12;

/// Algebra identities in double precision, relative.
pub const ALGEBRA: f64 = 1e-12;

/// Reconstruction `x + I y` from slice coordinates, relative.
pub const SLICE_COORDS: f64 = 1e-14;

/// Exact comparisons.
pub const EXACT: f64 = 0.0;
