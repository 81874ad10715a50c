//! Scalar minimization by golden-section search.

use super::{NumericsError, Tolerance};

const INV_GOLDEN: f64 = 0.618_033_988_749_894_9; // (sqrt(5) - 1) / 2

/// Minimize f on [lo, hi]. For unimodal f the minimizer is located to
/// within the tolerance; for general f the result is a local minimizer no
/// worse than either endpoint (the best evaluated point is returned, and
/// both endpoints are evaluated). Returns (x, f(x)).
pub fn minimize_scalar<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    tol: &Tolerance,
) -> Result<(f64, f64), NumericsError> {
    tol.validate()?;
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(NumericsError::Domain {
            routine: "minimize_scalar",
            value: lo,
            constraint: "finite lo < hi",
        });
    }

    let mut best = (lo, f(lo));
    let f_hi = f(hi);
    if f_hi < best.1 {
        best = (hi, f_hi);
    }

    let mut a = lo;
    let mut b = hi;
    let mut x1 = b - INV_GOLDEN * (b - a);
    let mut x2 = a + INV_GOLDEN * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    if f1 < best.1 {
        best = (x1, f1);
    }
    if f2 < best.1 {
        best = (x2, f2);
    }

    let mut converged = false;
    for _ in 0..tol.max_iterations {
        let mid = 0.5 * (a + b);
        if (b - a).abs() <= tol.absolute + tol.relative * mid.abs() {
            converged = true;
            break;
        }
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_GOLDEN * (b - a);
            f1 = f(x1);
            if f1 < best.1 {
                best = (x1, f1);
            }
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_GOLDEN * (b - a);
            f2 = f(x2);
            if f2 < best.1 {
                best = (x2, f2);
            }
        }
    }

    if !converged {
        return Err(NumericsError::NonConvergence {
            routine: "minimize_scalar",
            max_iterations: tol.max_iterations,
            residual: (b - a).abs(),
        });
    }
    Ok(best)
}
