//! The cosmological length scale and the zero curvature test.

use adskit_core::Field;

use crate::GeometryError;

/// The value printed alongside the cosmological constant estimate, in seconds.
pub const QUOTED_R_SECONDS: f64 = 2.6e17;

/// The positive `r` with `|Λ| = 6/(r²c²)`, in seconds for SI inputs.
pub fn cosmological_r(lambda_abs: f64, c: f64) -> Result<f64, GeometryError> {
    if !(lambda_abs > 0.0) || !lambda_abs.is_finite() {
        return Err(GeometryError::NonPositive("|Λ|"));
    }
    if !(c > 0.0) || !c.is_finite() {
        return Err(GeometryError::NonPositive("c"));
    }
    Ok((6.0 / lambda_abs).sqrt() / c)
}

/// True when `∂_i B_j - ∂_j B_i` vanishes identically.
pub fn zero_curvature_test(b: &[Field]) -> bool {
    assert_eq!(b.len(), 10, "one component per coordinate");
    (0..10).all(|i| (0..i).all(|j| b[j].partial(i) == b[i].partial(j)))
}
