//! Bracketed scalar root finding (Brent's method).

use super::{NumericsError, Tolerance};

/// Root of f on [lo, hi] given f(lo)·f(hi) <= 0. Inverse-quadratic /
/// secant steps with a bisection fallback; the bracket is never lost.
/// Returns once |f(x)| <= tol.absolute or the bracket width falls below
/// tol.absolute + tol.relative·|x|.
pub fn find_root<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    tol: &Tolerance,
) -> Result<f64, NumericsError> {
    tol.validate()?;
    if !lo.is_finite() || !hi.is_finite() || lo > hi {
        return Err(NumericsError::Domain {
            routine: "find_root",
            value: lo,
            constraint: "finite lo <= hi",
        });
    }

    let mut a = lo;
    let mut b = hi;
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(NumericsError::NoSignChange {
            lo,
            hi,
            f_lo: fa,
            f_hi: fb,
        });
    }

    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;

    for _ in 0..tol.max_iterations {
        if fb.abs() > fc.abs() {
            // c is the better endpoint; keep b as the current iterate
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let xtol = 0.5 * (tol.absolute + tol.relative * b.abs());
        let m = 0.5 * (c - b);
        if fb == 0.0 || fb.abs() <= tol.absolute || m.abs() <= xtol {
            return Ok(b);
        }

        if e.abs() < xtol || fa.abs() <= fb.abs() {
            d = m;
            e = m;
        } else {
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                // secant
                (2.0 * m * s, 1.0 - s)
            } else {
                // inverse quadratic interpolation
                let q0 = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * m * q0 * (q0 - r) - (b - a) * (r - 1.0)),
                    (q0 - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            if 2.0 * p < (3.0 * m * q - (xtol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        }

        a = b;
        fa = fb;
        b += if d.abs() > xtol {
            d
        } else if m > 0.0 {
            xtol
        } else {
            -xtol
        };
        fb = f(b);
        if (fb > 0.0) == (fc > 0.0) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }

    Err(NumericsError::NonConvergence {
        routine: "find_root",
        max_iterations: tol.max_iterations,
        residual: fb.abs(),
    })
}
