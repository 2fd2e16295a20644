//! Gauss hypergeometric series and the real-line inversion behind Shen's
//! functions.
//!
//! For a signature with parameters (a, b), a + b = 1, and modulus κ, the map
//!
//! ```text
//! T ↦ u(T) = ∫₀ᵀ F(a, b; ½; κ² sin² t) dt
//! ```
//!
//! is strictly increasing on ℝ with `u(T + π) = u(T) + 2K`, where
//! `K = ½π F(a, b; 1; κ²)`. Its inverse is φ.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::quadrature;
use crate::{Error, Result};

const SERIES_REL_EPS: f64 = 1e-16;
const SERIES_MAX_TERMS: usize = 100_000;
const QUAD_ABS_TOL: f64 = 1e-12;
const NEWTON_MAX_ITER: usize = 100;

/// Ramanujan alternative-base signature of a Shen function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Signature {
    /// F(⅓, ⅔; ·; ·), the setting of `dn3`.
    Three,
    /// F(¼, ¾; ·; ·), the setting of `dn4`.
    Four,
}

impl Signature {
    pub const ALL: [Signature; 2] = [Signature::Three, Signature::Four];

    /// First hypergeometric parameter.
    pub fn a(self) -> f64 {
        match self {
            Signature::Three => 1.0 / 3.0,
            Signature::Four => 0.25,
        }
    }

    /// Second hypergeometric parameter, `1 − a`.
    pub fn b(self) -> f64 {
        match self {
            Signature::Three => 2.0 / 3.0,
            Signature::Four => 0.75,
        }
    }

    /// Order n of the period division used by the companion function
    /// (3 for signature three, 2 for signature four).
    pub fn division_order(self) -> u32 {
        match self {
            Signature::Three => 3,
            Signature::Four => 2,
        }
    }

    /// √n: the factor in `ω′_κ = √n · i · ω_λ`.
    pub fn period_scale(self) -> f64 {
        match self {
            Signature::Three => 3f64.sqrt(),
            Signature::Four => 2f64.sqrt(),
        }
    }

    /// Constant c in `(1 − dn)(⅓ + p_κ) = c·κ²`.
    pub fn rhs_scale(self) -> f64 {
        match self {
            Signature::Three => 4.0 / 9.0,
            Signature::Four => 0.5,
        }
    }

    /// Parses the command-line label `3` or `4`.
    pub fn from_label(label: &str) -> Result<Self> {
        match label.trim() {
            "3" | "three" | "Three" => Ok(Signature::Three),
            "4" | "four" | "Four" => Ok(Signature::Four),
            other => Err(Error::Domain(format!(
                "signature must be 3 or 4, got {other:?}"
            ))),
        }
    }

    pub fn label(self) -> u32 {
        match self {
            Signature::Three => 3,
            Signature::Four => 4,
        }
    }
}

/// Elliptic modulus κ ∈ (0, 1) with its complement λ = √(1 − κ²).
///
/// The modulus is stored through κ² so that `1 − κ²` is formed exactly once
/// and the complementary modulus of the complementary modulus round-trips.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Modulus {
    kappa2: f64,
    lambda2: f64,
}

impl Modulus {
    pub fn from_kappa2(kappa2: f64) -> Result<Self> {
        if !(kappa2 > 0.0 && kappa2 < 1.0) {
            return Err(Error::Domain(format!(
                "kappa^2 must lie strictly inside (0, 1), got {kappa2}"
            )));
        }
        Ok(Modulus {
            kappa2,
            lambda2: 1.0 - kappa2,
        })
    }

    pub fn from_kappa(kappa: f64) -> Result<Self> {
        if !(kappa > 0.0 && kappa < 1.0) {
            return Err(Error::Domain(format!(
                "kappa must lie strictly inside (0, 1), got {kappa}"
            )));
        }
        Self::from_kappa2(kappa * kappa)
    }

    pub fn kappa(&self) -> f64 {
        self.kappa2.sqrt()
    }

    pub fn kappa2(&self) -> f64 {
        self.kappa2
    }

    pub fn lambda(&self) -> f64 {
        self.lambda2.sqrt()
    }

    pub fn lambda2(&self) -> f64 {
        self.lambda2
    }

    /// The modulus λ, whose own complement is κ.
    pub fn complementary(&self) -> Modulus {
        Modulus {
            kappa2: self.lambda2,
            lambda2: self.kappa2,
        }
    }
}

/// Gauss hypergeometric series ₂F₁(a, b; c; x) for real `0 ≤ x < 1`.
///
/// Terms are accumulated until one falls below 1e−16 of the partial sum.
pub fn gauss_2f1(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    if c <= 0.0 && c.fract() == 0.0 {
        return Err(Error::Domain(format!(
            "c must not be a nonpositive integer, got {c}"
        )));
    }
    if !(0.0..1.0).contains(&x) {
        return Err(Error::Domain(format!(
            "series argument must lie in [0, 1), got {x}"
        )));
    }

    let mut sum = 1.0;
    let mut term = 1.0;
    for k in 0..SERIES_MAX_TERMS {
        let k = k as f64;
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
        sum += term;
        if term.abs() < SERIES_REL_EPS * sum.abs() {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence(SERIES_MAX_TERMS))
}

/// The integrand `F(a, b; ½; κ² sin² t)` of the signature's incomplete
/// integral. Even, π-periodic and never below 1.
pub fn integrand(sig: Signature, m: Modulus, t: f64) -> Result<f64> {
    let s = t.sin();
    gauss_2f1(sig.a(), sig.b(), 0.5, m.kappa2() * s * s)
}

/// Complete value `K = ½π F(a, b; 1; κ²)`.
pub fn complete_k(sig: Signature, m: Modulus) -> Result<f64> {
    Ok(FRAC_PI_2 * gauss_2f1(sig.a(), sig.b(), 1.0, m.kappa2())?)
}

/// `∫₀ʳ integrand dt` by adaptive quadrature, for any real `r`.
fn integral_from_origin(sig: Signature, m: Modulus, r: f64) -> Result<f64> {
    quadrature::integrate(|t| integrand(sig, m, t), 0.0, r, QUAD_ABS_TOL)
}

/// The incomplete integral `u(T) = ∫₀ᵀ F(a, b; ½; κ² sin² t) dt`.
///
/// `T` is split as `nπ + r` with `|r| ≤ ½π`; whole half-turns contribute 2K
/// each and only the remainder is integrated.
pub fn incomplete_integral(sig: Signature, m: Modulus, t: f64) -> Result<f64> {
    if !t.is_finite() {
        return Err(Error::Domain(format!("T must be finite, got {t}")));
    }
    let turns = (t / PI).round();
    let rest = t - turns * PI;
    let partial = integral_from_origin(sig, m, rest)?;
    if turns == 0.0 {
        return Ok(partial);
    }
    Ok(2.0 * turns * complete_k(sig, m)? + partial)
}

/// φ, the inverse of [`incomplete_integral`].
///
/// `u` is reduced modulo 2K onto `[−K, K]`, where φ takes values in
/// `[−½π, ½π]`; there a Newton iteration started from `u·π/(2K)` is kept
/// inside a shrinking bracket, bisecting whenever a step would leave it.
pub fn invert_phi(sig: Signature, m: Modulus, u: f64) -> Result<f64> {
    if !u.is_finite() {
        return Err(Error::Domain(format!("u must be finite, got {u}")));
    }
    let k = complete_k(sig, m)?;
    let turns = (u / (2.0 * k)).round();
    let target = u - 2.0 * turns * k;
    if target == 0.0 {
        return Ok(turns * PI);
    }

    let (mut lo, mut hi) = (-FRAC_PI_2, FRAC_PI_2);
    let mut phi = (target * FRAC_PI_2 / k).clamp(lo, hi);
    for _ in 0..NEWTON_MAX_ITER {
        let residual = integral_from_origin(sig, m, phi)? - target;
        if residual == 0.0 {
            break;
        }
        if residual > 0.0 {
            hi = phi;
        } else {
            lo = phi;
        }
        let step = residual / integrand(sig, m, phi)?;
        let mut next = phi - step;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        let moved = (next - phi).abs();
        phi = next;
        if moved <= 4.0 * f64::EPSILON * phi.abs().max(1e-300) || hi - lo <= f64::EPSILON {
            break;
        }
    }
    Ok(turns * PI + phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// F(a, 1−a; ½; sin²θ) = cos((2a − 1)θ) / cos θ for |θ| < ½π.
    fn closed_form(a: f64, theta: f64) -> f64 {
        ((2.0 * a - 1.0) * theta).cos() / theta.cos()
    }

    fn modulus(k2: f64) -> Modulus {
        Modulus::from_kappa2(k2).unwrap()
    }

    #[test]
    fn series_at_origin_is_one() {
        assert_eq!(gauss_2f1(1.0 / 3.0, 2.0 / 3.0, 1.0, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn series_matches_closed_form_examples() {
        let theta = PI / 6.0;
        let v = gauss_2f1(0.25, 0.75, 0.5, theta.sin().powi(2)).unwrap();
        assert!((v - 1.115_355_071_650_951).abs() < 1e-12, "{v}");
        assert!((v - closed_form(0.25, theta)).abs() < 1e-12);

        let theta = PI / 4.0;
        let v = gauss_2f1(1.0 / 3.0, 2.0 / 3.0, 0.5, theta.sin().powi(2)).unwrap();
        assert!((v - 1.366_025_403_784_438_6).abs() < 1e-12, "{v}");
    }

    #[test]
    fn series_domain_and_budget_errors() {
        assert!(matches!(gauss_2f1(0.5, 0.5, 1.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(gauss_2f1(0.5, 0.5, 1.0, -0.1), Err(Error::Domain(_))));
        assert!(matches!(gauss_2f1(0.5, 0.5, -2.0, 0.3), Err(Error::Domain(_))));
        assert!(matches!(gauss_2f1(0.5, 0.5, 0.0, 0.3), Err(Error::Domain(_))));
        assert!(matches!(
            gauss_2f1(0.5, 0.5, 1.0, 1.0 - 1e-9),
            Err(Error::NonConvergence(SERIES_MAX_TERMS))
        ));
    }

    #[test]
    fn terminating_series() {
        // F(−2, b; c; x) is a quadratic polynomial
        let v = gauss_2f1(-2.0, 1.5, 2.0, 0.4).unwrap();
        let exact = 1.0 - 2.0 * 1.5 / 2.0 * 0.4 + (-2.0 * -1.0) * (1.5 * 2.5) / (2.0 * 3.0 * 2.0) * 0.16;
        assert!((v - exact).abs() < 1e-15);
    }

    #[test]
    fn signature_constants() {
        for sig in Signature::ALL {
            assert!((sig.a() + sig.b() - 1.0).abs() < 1e-16);
            assert!((sig.period_scale().powi(2) - sig.division_order() as f64).abs() < 1e-15);
        }
        assert_eq!(Signature::from_label("3").unwrap(), Signature::Three);
        assert_eq!(Signature::from_label("4").unwrap(), Signature::Four);
        assert!(Signature::from_label("5").is_err());
    }

    #[test]
    fn modulus_validation() {
        for bad in [0.0, 1.0, -0.2, 1.5, f64::NAN] {
            assert!(Modulus::from_kappa2(bad).is_err(), "{bad}");
        }
        let m = modulus(0.36);
        assert!((m.kappa() - 0.6).abs() < 1e-15);
        assert!((m.lambda() - 0.8).abs() < 1e-15);
        assert_eq!(m.complementary().complementary(), m);
        assert!((m.kappa().powi(2) + m.lambda().powi(2) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn integrand_examples() {
        assert_eq!(integrand(Signature::Three, modulus(0.36), 0.0).unwrap(), 1.0);
        for k2 in [0.1, 0.5, 0.9] {
            let v = integrand(Signature::Four, modulus(k2), PI).unwrap();
            assert!((v - 1.0).abs() < 1e-15);
        }
        let v = integrand(Signature::Three, modulus(0.5), FRAC_PI_2).unwrap();
        let series = gauss_2f1(1.0 / 3.0, 2.0 / 3.0, 0.5, 0.5).unwrap();
        assert_eq!(v, series);
    }

    #[test]
    fn incomplete_integral_examples() {
        for sig in Signature::ALL {
            for k2 in [0.1, 0.25, 0.5, 0.75, 0.9] {
                let m = modulus(k2);
                assert_eq!(incomplete_integral(sig, m, 0.0).unwrap(), 0.0);
                let k = complete_k(sig, m).unwrap();
                let half = integral_from_origin(sig, m, FRAC_PI_2).unwrap();
                assert!((half - k).abs() < 1e-10, "{sig:?} {k2}: {half} vs {k}");
                let full = integral_from_origin(sig, m, PI).unwrap();
                assert!((full - 2.0 * k).abs() < 1e-10);
                assert!((incomplete_integral(sig, m, PI).unwrap() - 2.0 * k).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn complete_k_limits_and_values() {
        for sig in Signature::ALL {
            let k = complete_k(sig, modulus(1e-12)).unwrap();
            assert!((k - FRAC_PI_2).abs() < 1e-10);
        }
        // independent route: ½π ∫ closed form is not available for c = 1, so
        // compare with a brute-force composite Simpson rule on the integrand
        for sig in Signature::ALL {
            let m = modulus(0.5);
            let n = 20_000;
            let h = FRAC_PI_2 / n as f64;
            let f = |t: f64| closed_form(sig.a(), (m.kappa() * t.sin()).asin());
            let mut acc = f(0.0) + f(FRAC_PI_2);
            for i in 1..n {
                acc += if i % 2 == 1 { 4.0 } else { 2.0 } * f(i as f64 * h);
            }
            let simpson = acc * h / 3.0;
            assert!((complete_k(sig, m).unwrap() - simpson).abs() < 1e-12);
        }
    }

    #[test]
    fn invert_phi_examples() {
        for sig in Signature::ALL {
            let m = modulus(0.5);
            assert_eq!(invert_phi(sig, m, 0.0).unwrap(), 0.0);
            let k = complete_k(sig, m).unwrap();
            assert!((invert_phi(sig, m, k).unwrap() - FRAC_PI_2).abs() < 1e-11);
            let u = incomplete_integral(sig, m, 1.1).unwrap();
            assert!((invert_phi(sig, m, u).unwrap() - 1.1).abs() < 1e-10);
        }
    }

    #[test]
    fn phi_is_odd() {
        let m = modulus(0.75);
        for u in [0.3, 1.7, 5.2] {
            let p = invert_phi(Signature::Three, m, u).unwrap();
            let n = invert_phi(Signature::Three, m, -u).unwrap();
            assert!((p + n).abs() < 1e-12);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn series_closed_form_identity(
            four in any::<bool>(),
            theta in -1.5f64..1.5,
        ) {
            let a = if four { 0.25 } else { 1.0 / 3.0 };
            let v = gauss_2f1(a, 1.0 - a, 0.5, theta.sin().powi(2)).unwrap();
            prop_assert!((v * theta.cos() - ((2.0 * a - 1.0) * theta).cos()).abs() < 1e-12);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn quasi_periodicity_of_u(
            four in any::<bool>(),
            k2 in 0.01f64..0.99,
            t in -20.0f64..20.0,
        ) {
            let sig = if four { Signature::Four } else { Signature::Three };
            let m = modulus(k2);
            let k = complete_k(sig, m).unwrap();
            let d = incomplete_integral(sig, m, t + PI).unwrap()
                - incomplete_integral(sig, m, t).unwrap();
            prop_assert!((d - 2.0 * k).abs() < 1e-10);
        }

        #[test]
        fn phi_inverts_u(
            four in any::<bool>(),
            k2 in 0.01f64..0.99,
            u in -10.0f64..10.0,
        ) {
            let sig = if four { Signature::Four } else { Signature::Three };
            let m = modulus(k2);
            let phi = invert_phi(sig, m, u).unwrap();
            prop_assert!((incomplete_integral(sig, m, phi).unwrap() - u).abs() < 1e-10);
            let k = complete_k(sig, m).unwrap();
            let shifted = invert_phi(sig, m, u + 2.0 * k).unwrap();
            prop_assert!((shifted - phi - PI).abs() < 1e-10);
        }

        #[test]
        fn u_strictly_increasing(
            four in any::<bool>(),
            k2 in 0.01f64..0.99,
            t in -10.0f64..10.0,
            dt in 1e-3f64..1.0,
        ) {
            let sig = if four { Signature::Four } else { Signature::Three };
            let m = modulus(k2);
            let lo = incomplete_integral(sig, m, t).unwrap();
            let hi = incomplete_integral(sig, m, t + dt).unwrap();
            // integrand ≥ 1
            prop_assert!(hi - lo >= dt * (1.0 - 1e-12));
        }
    }
}
