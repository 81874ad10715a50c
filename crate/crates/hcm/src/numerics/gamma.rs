//! Gamma function for positive real arguments.
//!
//! Stirling's asymptotic series with Bernoulli-number corrections, applied
//! after shifting the argument above `STIRLING_THRESHOLD` with the
//! recurrence Γ(x) = Γ(x + n) / (x (x+1) ... (x+n-1)). At x >= 12 the first
//! omitted series term is below 2e-18, so the result is accurate to a few
//! ulp; the shift multiplies in at most 12 rounding errors.

use super::NumericsError;

const STIRLING_THRESHOLD: f64 = 12.0;

// B_{2n} / (2n (2n-1)) for the correction series in descending power order:
// S(x) = 1/(12x) - 1/(360x^3) + 1/(1260x^5) - 1/(1680x^7) + 1/(1188x^9)
//        - 691/(360360x^11) + 1/(156x^13) - 3617/(122400x^15)
const STIRLING_COEFFS: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

#[allow(clippy::excessive_precision)]
const LN_SQRT_TWO_PI: f64 = 0.918_938_533_204_672_74;

/// Γ(x) for x > 0. Relative error below 1e-12 on [0.5, 30] (in practice a
/// few ulp over the whole positive range until overflow near x ≈ 171.6).
pub fn gamma_fn(x: f64) -> Result<f64, NumericsError> {
    if !x.is_finite() || x <= 0.0 {
        return Err(NumericsError::Domain {
            routine: "gamma_fn",
            value: x,
            constraint: "x > 0",
        });
    }

    if x >= STIRLING_THRESHOLD {
        return Ok(stirling(x));
    }

    // Shift up: Γ(x) = Γ(x + n) / Π_{i=0}^{n-1} (x + i).
    let mut product = 1.0;
    let mut y = x;
    while y < STIRLING_THRESHOLD {
        product *= y;
        y += 1.0;
    }
    Ok(stirling(y) / product)
}

fn stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut power = inv;
    for c in STIRLING_COEFFS {
        series += c * power;
        power *= inv2;
    }
    let ln_gamma = (x - 0.5) * x.ln() - x + LN_SQRT_TWO_PI + series;
    ln_gamma.exp()
}
