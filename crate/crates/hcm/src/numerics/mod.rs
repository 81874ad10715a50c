//! Self-contained special functions, quadrature, root finding, and scalar
//! minimization used by the physics modules.
//!
//! Everything here is a pure function over `f64`; callers may evaluate many
//! integrals or solves concurrently without coordination.

mod bessel;
mod gamma;
mod minimize;
mod quad;
mod roots;

pub use bessel::bessel_j_quarter;
pub use gamma::gamma_fn;
pub use minimize::minimize_scalar;
pub use quad::integrate;
pub use roots::find_root;

use thiserror::Error;

/// Errors from the numerical kernels. Failures are always explicit; no
/// routine returns a silent partial result.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum NumericsError {
    #[error("domain error in {routine}: argument {value} outside {constraint}")]
    Domain {
        routine: &'static str,
        value: f64,
        constraint: &'static str,
    },
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    NoSignChange { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },
    #[error("{routine} did not converge within {max_iterations} iterations (residual {residual})")]
    NonConvergence {
        routine: &'static str,
        max_iterations: usize,
        residual: f64,
    },
    #[error("integrand returned a non-finite value at x = {at}")]
    NonFiniteIntegrand { at: f64 },
    #[error("invalid tolerance: {0}")]
    InvalidTolerance(&'static str),
}

/// Convergence control shared by the iterative routines.
///
/// `absolute`/`relative` are combined as `max(absolute, relative * scale)`
/// where the scale is routine-specific (integral magnitude, bracket
/// midpoint, ...). For quadrature `max_iterations` bounds the bisection
/// depth; for the solvers it bounds the iteration count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub absolute: f64,
    pub relative: f64,
    pub max_iterations: usize,
}

impl Tolerance {
    pub fn new(absolute: f64, relative: f64, max_iterations: usize) -> Result<Self, NumericsError> {
        let tol = Self {
            absolute,
            relative,
            max_iterations,
        };
        tol.validate()?;
        Ok(tol)
    }

    pub fn validate(&self) -> Result<(), NumericsError> {
        if !(self.absolute > 0.0 || self.relative > 0.0) {
            return Err(NumericsError::InvalidTolerance(
                "at least one of absolute/relative must be positive",
            ));
        }
        if self.absolute < 0.0 || self.relative < 0.0 {
            return Err(NumericsError::InvalidTolerance(
                "tolerances must be non-negative",
            ));
        }
        if !self.absolute.is_finite() || !self.relative.is_finite() {
            return Err(NumericsError::InvalidTolerance("tolerances must be finite"));
        }
        if self.max_iterations < 1 {
            return Err(NumericsError::InvalidTolerance("max_iterations must be >= 1"));
        }
        Ok(())
    }

    /// Quadrature default: relative 1e-10, absolute 1e-14, max depth 60.
    pub fn quadrature() -> Self {
        Self {
            absolute: 1e-14,
            relative: 1e-10,
            max_iterations: 60,
        }
    }

    /// Root finding default.
    pub fn root() -> Self {
        Self {
            absolute: 1e-14,
            relative: 1e-12,
            max_iterations: 200,
        }
    }

    /// Scalar minimization default. Golden-section contraction is slow
    /// (one digit per ~5 iterations), hence the larger iteration budget.
    pub fn minimization() -> Self {
        Self {
            absolute: 1e-12,
            relative: 1e-10,
            max_iterations: 300,
        }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::quadrature()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_rejects_degenerate_settings() {
        assert!(Tolerance::new(0.0, 0.0, 10).is_err());
        assert!(Tolerance::new(-1e-9, 1e-9, 10).is_err());
        assert!(Tolerance::new(1e-9, 0.0, 0).is_err());
        assert!(Tolerance::new(1e-9, 0.0, 1).is_ok());
    }
}
