//! Shen's elliptic functions `dn3` (signature three) and `dn4` (signature four).
//!
//! On the real line, with φ the inverse of the incomplete integral:
//!
//! * `dn3 = δ = φ′ = 1 / F(⅓, ⅔; ½; κ² sin² φ)`,
//! * `dn4 = rd = cos ψ` with `ψ = arcsin(κ sin φ)`.
//!
//! In the plane each is a Möbius image of its coperiodic Weierstrass function,
//! `f = 1 − c·κ² / (⅓ + p_κ)`, with invariants
//!
//! ```text
//! three: g2 = 4/27 (9 − 8κ²),  g3 = 8/729 (27 − 36κ² + 8κ⁴),  c = 4/9
//! four:  g2 = 4/3 − κ²,        g3 = 8/27 − κ²/3,               c = 1/2
//! ```
//!
//! and half-periods `ω = ½π F(a, b; 1; κ²)`, `ω′ = i (√n/2) π F(a, b; 1; λ²)`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::hypergeometric::{gauss_2f1, integrand, invert_phi, Modulus, Signature};
use crate::modular::{cubic_invariants, quadratic_invariants};
use crate::weierstrass::{half_periods_from_invariants, HalfPeriods, Invariants, Weierstrass};
use crate::{Error, Result};

/// `|⅓ + ℘(z)|` below which the Shen function is treated as infinite.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// The exact special value `p_κ(⅔ω′) = −⅓` (three) and `p_κ(ω′) = −⅓` (four).
pub const SPECIAL_VALUE: f64 = -1.0 / 3.0;

/// Weierstrass invariants of the coperiodic function `p_κ`.
pub fn signature_invariants(sig: Signature, m: Modulus) -> Invariants {
    let k2 = m.kappa2();
    match sig {
        Signature::Three => Invariants::new(
            4.0 / 27.0 * (9.0 - 8.0 * k2),
            8.0 / 729.0 * (27.0 - 36.0 * k2 + 8.0 * k2 * k2),
        ),
        Signature::Four => Invariants::new(4.0 / 3.0 - k2, 8.0 / 27.0 - k2 / 3.0),
    }
}

/// Half-periods `(½π F(a,b;1;κ²), i·(√n/2)·π·F(a,b;1;λ²))`.
pub fn shen_half_periods(sig: Signature, m: Modulus) -> Result<HalfPeriods> {
    let omega = FRAC_PI_2 * gauss_2f1(sig.a(), sig.b(), 1.0, m.kappa2())?;
    let omega_prime =
        0.5 * sig.period_scale() * PI * gauss_2f1(sig.a(), sig.b(), 1.0, m.lambda2())?;
    HalfPeriods::new(omega, omega_prime)
}

/// `ω′/ω = i·√n·F(a,b;1;λ²)/F(a,b;1;κ²)`.
pub fn period_ratio(sig: Signature, m: Modulus) -> Result<Complex64> {
    let num = gauss_2f1(sig.a(), sig.b(), 1.0, m.lambda2())?;
    let den = gauss_2f1(sig.a(), sig.b(), 1.0, m.kappa2())?;
    Ok(Complex64::new(0.0, sig.period_scale() * num / den))
}

/// A Shen function of fixed signature and modulus, with its coperiodic
/// Weierstrass function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShenFunction {
    sig: Signature,
    m: Modulus,
    inv: Invariants,
    hp: HalfPeriods,
    p: Weierstrass,
}

impl ShenFunction {
    pub fn new(sig: Signature, m: Modulus) -> Result<Self> {
        let inv = signature_invariants(sig, m);
        let p = Weierstrass::new(inv)?;
        let hp = shen_half_periods(sig, m)?;
        Ok(ShenFunction { sig, m, inv, hp, p })
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn modulus(&self) -> Modulus {
        self.m
    }

    pub fn invariants(&self) -> Invariants {
        self.inv
    }

    /// Hypergeometric half-periods `(ω_κ, ω_κ′)`.
    pub fn half_periods(&self) -> HalfPeriods {
        self.hp
    }

    /// The coperiodic Weierstrass function `p_κ`.
    pub fn weierstrass(&self) -> &Weierstrass {
        &self.p
    }

    fn coefficient(&self) -> f64 {
        self.sig.rhs_scale() * self.m.kappa2()
    }

    /// `f(z)` and `f′(z)`; both are taken as their limits `1` and `0` at poles
    /// of ℘.
    pub fn eval_with_derivative(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        let (p, dp) = match self.p.eval(z) {
            Ok(v) => v,
            Err(Error::Pole { .. }) => {
                return Ok((Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)))
            }
            Err(e) => return Err(e),
        };
        let shifted = p + 1.0 / 3.0;
        if shifted.norm() < POLE_TOLERANCE {
            return Err(Error::Pole { re: z.re, im: z.im });
        }
        let c = self.coefficient();
        let inv = shifted.inv();
        let f = Complex64::new(1.0, 0.0) - inv * c;
        let df = dp * inv * inv * c;
        Ok((f, df))
    }

    /// `f(z) = 1 − c·κ² / (⅓ + ℘(z))`.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        self.eval_with_derivative(z).map(|(f, _)| f)
    }

    /// `℘(⅔ω′)` (three) or `℘(ω′)` (four), using the hypergeometric ω′.
    pub fn special_value(&self) -> Result<Complex64> {
        let at = match self.sig {
            Signature::Three => self.hp.omega_prime * (2.0 / 3.0),
            Signature::Four => self.hp.omega_prime,
        };
        self.p.wp(at)
    }

    /// `|LHS − RHS|` of the signature's differential equation at `z`:
    ///
    /// ```text
    /// three: 9 (δ′)² = 4 (1 − δ)(δ³ + 3δ² − 4λ²)
    /// four:  (rd′)² = 2 (1 − rd)(rd² − λ²)
    /// ```
    pub fn ode_residual(&self, z: Complex64) -> Result<f64> {
        let (f, df) = self.eval_with_derivative(z)?;
        let one = Complex64::new(1.0, 0.0);
        let l2 = self.m.lambda2();
        let diff = match self.sig {
            Signature::Three => {
                df * df * 9.0 - (one - f) * (f * f * f + f * f * 3.0 - 4.0 * l2) * 4.0
            }
            Signature::Four => df * df - (one - f) * (f * f - l2) * 2.0,
        };
        Ok(diff.norm())
    }
}

/// `dn3(z)` or `dn4(z)` from the Weierstrass closed form.
pub fn shen_eval(f: &ShenFunction, z: Complex64) -> Result<Complex64> {
    f.eval(z)
}

/// `δ(u) = φ′(u) = 1 / F(⅓, ⅔; ½; κ² sin² φ(u))` on the real line.
pub fn dn3_real(m: Modulus, u: f64) -> Result<f64> {
    let phi = invert_phi(Signature::Three, m, u)?;
    Ok(1.0 / integrand(Signature::Three, m, phi)?)
}

/// `rd(u) = cos(arcsin(κ sin φ(u)))` on the real line.
pub fn dn4_real(m: Modulus, u: f64) -> Result<f64> {
    let phi = invert_phi(Signature::Four, m, u)?;
    let s = m.kappa() * phi.sin();
    Ok((1.0 - s * s).sqrt())
}

/// The real-line construction for either signature.
pub fn dn_real(sig: Signature, m: Modulus, u: f64) -> Result<f64> {
    match sig {
        Signature::Three => dn3_real(m, u),
        Signature::Four => dn4_real(m, u),
    }
}

/// Real part of `p_κ(⅔ω′)` (three) or `p_κ(ω′)` (four); equals −⅓.
pub fn special_value_b(sig: Signature, m: Modulus) -> Result<f64> {
    Ok(ShenFunction::new(sig, m)?.special_value()?.re)
}

/// Residual of the signature's differential equation, derivatives via ℘′.
pub fn ode_residual(f: &ShenFunction, z: Complex64) -> Result<f64> {
    f.ode_residual(z)
}

/// `|q_κ(z) + n·p_λ(√n·i·z)|` where `q_κ` carries the n-division invariants of
/// `p_κ` built with the exact value `b = −⅓`.
pub fn companion_q_residual(sig: Signature, m: Modulus, z: Complex64) -> Result<f64> {
    let inv = signature_invariants(sig, m);
    let transformed = match sig {
        Signature::Three => cubic_invariants(inv, SPECIAL_VALUE),
        Signature::Four => quadratic_invariants(inv, SPECIAL_VALUE),
    };
    let q = Weierstrass::new(transformed.invariants())?;
    let p_lambda = Weierstrass::new(signature_invariants(sig, m.complementary()))?;
    let n = f64::from(sig.division_order());
    let rotated = z * Complex64::new(0.0, sig.period_scale());
    Ok((q.wp(z)? + p_lambda.wp(rotated)? * n).norm())
}

/// `|ω′_κ − √n·i·ω_λ| / |ω′_κ|` with both sides hypergeometric.
pub fn complementary_period_residual(sig: Signature, m: Modulus) -> Result<f64> {
    let kappa = shen_half_periods(sig, m)?;
    complementary_residual(sig, m, kappa.omega_prime)
}

/// As [`complementary_period_residual`], with `ω′_κ` from the period
/// quadrature of the invariants instead.
pub fn complementary_period_residual_quadrature(sig: Signature, m: Modulus) -> Result<f64> {
    let kappa = half_periods_from_invariants(signature_invariants(sig, m))?;
    complementary_residual(sig, m, kappa.omega_prime)
}

fn complementary_residual(sig: Signature, m: Modulus, omega_prime: Complex64) -> Result<f64> {
    let lambda = shen_half_periods(sig, m.complementary())?;
    let predicted = Complex64::new(0.0, sig.period_scale() * lambda.omega);
    Ok((omega_prime - predicted).norm() / omega_prime.norm())
}
