//! Quadratic and cubic modular transformations of Weierstrass invariants.
//!
//! Dividing the imaginary period of `p = ℘(·; ω, ω′)` by n gives
//! `q = ℘(·; ω, ω′/n)`. For n = 2 and n = 3 the invariants of `q` are
//! polynomials in `(g2, g3)` and one special value `b` of `p`:
//!
//! ```text
//! n = 2, b = p(ω′):    h2 = 60b² − 4g2,   h3 = 56b³ + 8g3
//! n = 3, b = p(⅔ω′):   h2 = 120b² − 9g2,  h3 = 280b³ − 42b·g2 − 27g3
//! ```
//!
//! The formulas are generic over the scalar type so that they can be
//! evaluated exactly over the rationals as well as in `f64`.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use num_traits::FromPrimitive;

use crate::weierstrass::{HalfPeriods, Invariants, Weierstrass};
use crate::{Error, Result};

/// Invariants `(h2, h3)` of the transformed function and the value `b` used.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformResult<T = f64> {
    pub h2: T,
    pub h3: T,
    pub b: T,
}

impl TransformResult<f64> {
    pub fn invariants(&self) -> Invariants {
        Invariants::new(self.h2, self.h3)
    }
}

fn int<T: FromPrimitive>(n: i64) -> T {
    T::from_i64(n).expect("small integer constant is representable")
}

/// n = 2 transformation over any ring with integer constants.
pub fn quadratic_formula<T>(g2: T, g3: T, b: T) -> TransformResult<T>
where
    T: Copy + FromPrimitive + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    TransformResult {
        h2: int::<T>(60) * b * b - int::<T>(4) * g2,
        h3: int::<T>(56) * b * b * b + int::<T>(8) * g3,
        b,
    }
}

/// n = 3 transformation over any ring with integer constants.
pub fn cubic_formula<T>(g2: T, g3: T, b: T) -> TransformResult<T>
where
    T: Copy + FromPrimitive + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    TransformResult {
        h2: int::<T>(120) * b * b - int::<T>(9) * g2,
        h3: int::<T>(280) * b * b * b - int::<T>(42) * b * g2 - int::<T>(27) * g3,
        b,
    }
}

/// Invariants of `℘(·; ω, ½ω′)` given those of `℘(·; ω, ω′)` and `b = ℘(ω′)`.
pub fn quadratic_invariants(inv: Invariants, b: f64) -> TransformResult {
    quadratic_formula(inv.g2, inv.g3, b)
}

/// Invariants of `℘(·; ω, ⅓ω′)` given those of `℘(·; ω, ω′)` and `b = ℘(⅔ω′)`.
pub fn cubic_invariants(inv: Invariants, b: f64) -> TransformResult {
    cubic_formula(inv.g2, inv.g3, b)
}

fn require_half_periods(hp: &HalfPeriods) -> Result<()> {
    if hp.omega_prime.re != 0.0 || hp.omega_prime.im <= 0.0 {
        return Err(Error::Domain(format!(
            "omega' must lie on the positive imaginary axis, got {}",
            hp.omega_prime
        )));
    }
    Ok(())
}

/// `|q(z) − [p(z) + p(z + ω′) − p(ω′)]|` where `q` has the quadratic
/// invariants built from `b = p(ω′)`.
pub fn quadratic_sum_identity_residual(
    z: Complex64,
    inv: Invariants,
    hp: HalfPeriods,
) -> Result<f64> {
    require_half_periods(&hp)?;
    let p = Weierstrass::new(inv)?;
    let b = p.wp(hp.omega_prime)?;
    let q = Weierstrass::new(quadratic_invariants(inv, b.re).invariants())?;
    let lhs = q.wp(z)?;
    let rhs = p.wp(z)? + p.wp(z + hp.omega_prime)? - b;
    Ok((lhs - rhs).norm())
}

/// `|q(z) − [p(z) + p(z + ⅔ω′) + p(z − ⅔ω′) − 2p(⅔ω′)]|` where `q` has the
/// cubic invariants built from `b = p(⅔ω′)`.
pub fn cubic_sum_identity_residual(z: Complex64, inv: Invariants, hp: HalfPeriods) -> Result<f64> {
    require_half_periods(&hp)?;
    let p = Weierstrass::new(inv)?;
    let shift = hp.omega_prime * (2.0 / 3.0);
    let b = p.wp(shift)?;
    let q = Weierstrass::new(cubic_invariants(inv, b.re).invariants())?;
    let lhs = q.wp(z)?;
    let rhs = p.wp(z)? + p.wp(z + shift)? + p.wp(z - shift)? - b * 2.0;
    Ok((lhs - rhs).norm())
}
