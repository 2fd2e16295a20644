//! Weierstrass ℘ for real invariants with positive discriminant.
//!
//! With roots `e1 > e2 > e3` of `4t³ − g2·t − g3`, the lattice is rectangular
//! with half-periods `ω = K(m)/√(e1 − e3)` and `ω′ = i·K(1 − m)/√(e1 − e3)`,
//! `m = (e2 − e3)/(e1 − e3)`, and
//!
//! ```text
//! ℘(z)  = e3 + (e1 − e3) / sn²(z·√(e1 − e3) | m)
//! ℘′(z) = −2 (e1 − e3)^{3/2} · cn·dn / sn³
//! ```
//!
//! Arguments are first reduced into the period cell centred on the origin.
//! In the half of the cell nearest the poles of `sn` the evaluation moves to
//! `v = u ∓ iK(1 − m)` using `sn(v + iK′) = 1/(k·sn v)`.
//!
//! The half-periods returned by [`half_periods_from_invariants`] come from a
//! separate quadrature route and are not used by the evaluator itself.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::jacobi;
use crate::quadrature;
use crate::{Error, Result};

/// Relative size below which the discriminant is treated as zero.
const DISCRIMINANT_EPS: f64 = 1e-14;
/// Reduced arguments closer than this multiple of ω to a lattice point are poles.
pub const POLE_RADIUS: f64 = 1e-12;

/// Invariants `(g2, g3)` of a Weierstrass function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Invariants {
    pub g2: f64,
    pub g3: f64,
}

impl Invariants {
    pub fn new(g2: f64, g3: f64) -> Self {
        Invariants { g2, g3 }
    }

    /// Δ = g2³ − 27·g3².
    pub fn discriminant(&self) -> f64 {
        self.g2.powi(3) - 27.0 * self.g3 * self.g3
    }

    /// Whether the invariants describe a nondegenerate rectangular lattice.
    pub fn is_rectangular(&self) -> bool {
        let scale = self.g2.abs().powi(3) + 27.0 * self.g3 * self.g3;
        self.discriminant() > DISCRIMINANT_EPS * scale
    }

    /// Real invariants from a complex pair whose imaginary parts are rounding noise.
    pub fn from_complex(g2: Complex64, g3: Complex64) -> Result<Self> {
        let tol = 1e-12 * (1.0 + g2.norm() + g3.norm());
        if g2.im.abs() > tol || g3.im.abs() > tol {
            return Err(Error::Domain(format!(
                "invariants ({g2}, {g3}) are not real"
            )));
        }
        Ok(Invariants::new(g2.re, g3.re))
    }

    fn require_rectangular(&self) -> Result<()> {
        if self.is_rectangular() {
            Ok(())
        } else {
            Err(Error::DegenerateLattice(self.discriminant()))
        }
    }
}

/// Real roots of `4t³ − g2·t − g3` in descending order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicRoots {
    pub e1: f64,
    pub e2: f64,
    pub e3: f64,
}

/// Half-periods `(ω, ω′)` of a rectangular lattice: ω > 0, ω′ on the positive
/// imaginary axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPeriods {
    pub omega: f64,
    pub omega_prime: Complex64,
}

impl HalfPeriods {
    pub fn new(omega: f64, omega_prime_im: f64) -> Result<Self> {
        if !(omega > 0.0 && omega_prime_im > 0.0) {
            return Err(Error::Domain(format!(
                "half-periods must satisfy omega > 0 and Im omega' > 0, got ({omega}, {omega_prime_im}i)"
            )));
        }
        Ok(HalfPeriods {
            omega,
            omega_prime: Complex64::new(0.0, omega_prime_im),
        })
    }

    /// ω′/ω.
    pub fn ratio(&self) -> Complex64 {
        self.omega_prime / self.omega
    }

    /// Lattice point `2mω + 2nω′`.
    pub fn lattice_point(&self, m: i64, n: i64) -> Complex64 {
        Complex64::new(2.0 * m as f64 * self.omega, 2.0 * n as f64 * self.omega_prime.im)
    }

    /// Representative of `z` in the cell `[−ω, ω) × [−ω′, ω′)`.
    pub fn reduce(&self, z: Complex64) -> Complex64 {
        let period_re = 2.0 * self.omega;
        let period_im = 2.0 * self.omega_prime.im;
        let shift_re = (z.re / period_re + 0.5).floor();
        let shift_im = (z.im / period_im + 0.5).floor();
        Complex64::new(z.re - shift_re * period_re, z.im - shift_im * period_im)
    }
}

/// The three real roots of `4t³ − g2·t − g3`, by the trigonometric method for
/// depressed cubics followed by one Newton step per root.
pub fn cubic_roots(inv: Invariants) -> Result<CubicRoots> {
    inv.require_rectangular()?;
    let Invariants { g2, g3 } = inv;
    // t³ + p·t + q with p = −g2/4 < 0, q = −g3/4
    let p = -0.25 * g2;
    let q = -0.25 * g3;
    let radius = 2.0 * (-p / 3.0).sqrt();
    let cos3 = (1.5 * q / p * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
    let theta = cos3.acos() / 3.0;
    let third = 2.0 * PI / 3.0;

    let polish = |t: f64| {
        let f = (4.0 * t * t - g2) * t - g3;
        let df = 12.0 * t * t - g2;
        if df != 0.0 {
            t - f / df
        } else {
            t
        }
    };
    let mut roots = [
        polish(radius * theta.cos()),
        polish(radius * (theta - third).cos()),
        polish(radius * (theta + third).cos()),
    ];
    roots.sort_by(|a, b| b.total_cmp(a));
    Ok(CubicRoots {
        e1: roots[0],
        e2: roots[1],
        e3: roots[2],
    })
}

/// `∫₀^∞ ds / √((s² + p)(s² + q))` for `p, q > 0`.
///
/// The range is split at `S = (pq)^{1/4}`; beyond it `s = 1/v` turns the
/// slowly decaying tail into the smooth `∫₀^{1/S} dv / √((1 + p v²)(1 + q v²))`.
fn symmetric_quartic_integral(p: f64, q: f64) -> Result<f64> {
    let split = (p * q).sqrt().sqrt();
    let tol = 1e-14 / split;
    let head = quadrature::integrate(
        |s| Ok(1.0 / ((s * s + p) * (s * s + q)).sqrt()),
        0.0,
        split,
        tol,
    )?;
    let tail = quadrature::integrate(
        |v| Ok(1.0 / ((1.0 + p * v * v) * (1.0 + q * v * v)).sqrt()),
        0.0,
        1.0 / split,
        tol,
    )?;
    Ok(head + tail)
}

/// Half-periods from the real and imaginary period integrals
///
/// ```text
/// ω  = ∫_{e1}^{∞} (4t³ − g2·t − g3)^{−1/2} dt,        t = e1 + s²
/// ω′ = i ∫_{−∞}^{e3} (−(4t³ − g2·t − g3))^{−1/2} dt,  t = e3 − s²
/// ```
///
/// evaluated by adaptive quadrature. Independent of the AGM route used by
/// [`Weierstrass`].
pub fn half_periods_from_invariants(inv: Invariants) -> Result<HalfPeriods> {
    let CubicRoots { e1, e2, e3 } = cubic_roots(inv)?;
    // 4t³ − g2 t − g3 = 4(t − e1)(t − e2)(t − e3); the factor 4 and the
    // Jacobian 2s cancel against √(4s²)
    let omega = symmetric_quartic_integral(e1 - e2, e1 - e3)?;
    let omega_prime = symmetric_quartic_integral(e1 - e3, e2 - e3)?;
    HalfPeriods::new(omega, omega_prime)
}

/// A Weierstrass function with precomputed root and lattice data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Weierstrass {
    inv: Invariants,
    roots: CubicRoots,
    m: f64,
    m1: f64,
    scale: f64,
    k: f64,
    k_prime: f64,
    half_periods: HalfPeriods,
}

impl Weierstrass {
    pub fn new(inv: Invariants) -> Result<Self> {
        let roots = cubic_roots(inv)?;
        let span = roots.e1 - roots.e3;
        let m = (roots.e2 - roots.e3) / span;
        let m1 = (roots.e1 - roots.e2) / span;
        let scale = span.sqrt();
        let k = jacobi::complete_k(m1);
        let k_prime = jacobi::complete_k(m);
        let half_periods = HalfPeriods::new(k / scale, k_prime / scale)?;
        Ok(Weierstrass {
            inv,
            roots,
            m,
            m1,
            scale,
            k,
            k_prime,
            half_periods,
        })
    }

    pub fn invariants(&self) -> Invariants {
        self.inv
    }

    pub fn roots(&self) -> CubicRoots {
        self.roots
    }

    /// Half-periods from the AGM: `ω = K(m)/√(e1 − e3)`, `ω′ = i·K(1 − m)/√(e1 − e3)`.
    pub fn half_periods(&self) -> HalfPeriods {
        self.half_periods
    }

    /// Parameter `m = (e2 − e3)/(e1 − e3)` of the underlying Jacobi functions.
    pub fn parameter(&self) -> f64 {
        self.m
    }

    /// ℘(z).
    pub fn wp(&self, z: Complex64) -> Result<Complex64> {
        self.eval(z).map(|(p, _)| p)
    }

    /// ℘′(z).
    pub fn wp_prime(&self, z: Complex64) -> Result<Complex64> {
        self.eval(z).map(|(_, dp)| dp)
    }

    /// ℘(z) and ℘′(z) from one set of Jacobi values.
    pub fn eval(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::Domain(format!("argument must be finite, got {z}")));
        }
        let reduced = self.half_periods.reduce(z);
        if reduced.norm() < POLE_RADIUS * self.half_periods.omega {
            return Err(Error::pole(z));
        }
        let CubicRoots { e1, e3, .. } = self.roots;
        let span = e1 - e3;
        let cube = 2.0 * span * self.scale;
        let u = reduced * self.scale;

        if u.im.abs() <= 0.5 * self.k_prime {
            let j = jacobi::complex(u, self.m, self.m1);
            let inv_sn = j.sn.inv();
            let inv_sn2 = inv_sn * inv_sn;
            let p = inv_sn2 * span + e3;
            let dp = -j.cn * j.dn * inv_sn2 * inv_sn * cube;
            Ok((p, dp))
        } else {
            // u = v ± iK′, with sn(u) = 1/(k sn v) and ℘′ ∝ m·sn·cn·dn (v)
            let v = u - Complex64::new(0.0, self.k_prime.copysign(u.im));
            let j = jacobi::complex(v, self.m, self.m1);
            let p = j.sn * j.sn * (self.m * span) + e3;
            let dp = j.sn * j.cn * j.dn * (self.m * cube);
            Ok((p, dp))
        }
    }
}

/// ℘(z; g2, g3).
pub fn wp(z: Complex64, inv: Invariants) -> Result<Complex64> {
    Weierstrass::new(inv)?.wp(z)
}

/// ℘′(z; g2, g3).
pub fn wp_prime(z: Complex64, inv: Invariants) -> Result<Complex64> {
    Weierstrass::new(inv)?.wp_prime(z)
}

fn lattice_points(hp: &HalfPeriods, n: usize) -> Vec<Complex64> {
    let n = n as i64;
    let side = (2 * n + 1) as usize;
    let mut points = Vec::with_capacity(side * side - 1);
    for a in -n..=n {
        for b in -n..=n {
            if a != 0 || b != 0 {
                points.push(hp.lattice_point(a, b));
            }
        }
    }
    points
}

/// Brute-force ℘ from the defining lattice sum
///
/// ```text
/// z⁻² + Σ [(z − w)⁻² − w⁻²],   w = 2aω + 2bω′,  0 < max(|a|, |b|) ≤ N,
/// ```
///
/// summed in order of increasing `|w|`. Truncation error is O(1/N); only
/// good for loose cross-checks.
pub fn lattice_sum_oracle(z: Complex64, hp: HalfPeriods, n: usize) -> Result<Complex64> {
    if n < 10 {
        return Err(Error::Domain(format!(
            "lattice-sum truncation must be at least 10, got {n}"
        )));
    }
    if hp.reduce(z).norm() < POLE_RADIUS * hp.omega {
        return Err(Error::pole(z));
    }
    let mut points = lattice_points(&hp, n);
    points.sort_by(|a, b| a.norm_sqr().total_cmp(&b.norm_sqr()));
    let mut sum = (z * z).inv();
    for w in points {
        let d = z - w;
        sum += (d * d).inv() - (w * w).inv();
    }
    Ok(sum)
}

/// Invariants recomputed from half-periods by the Eisenstein sums
/// `g2 = 60 Σ w⁻⁴`, `g3 = 140 Σ w⁻⁶` over the truncated lattice.
pub fn eisenstein_invariants(hp: HalfPeriods, n: usize) -> Invariants {
    let mut points = lattice_points(&hp, n);
    // smallest terms first
    points.sort_by(|a, b| b.norm_sqr().total_cmp(&a.norm_sqr()));
    let (mut s4, mut s6) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    for w in points {
        let w2 = (w * w).inv();
        let w4 = w2 * w2;
        s4 += w4;
        s6 += w4 * w2;
    }
    Invariants::new(60.0 * s4.re, 140.0 * s6.re)
}

/// Invariants `(c⁴·g2, c⁶·g3)` of `z ↦ c²·℘(c·z; g2, g3)`.
///
/// This is the homogeneity relation `℘(z; c⁴g2, c⁶g3) = c²·℘(cz; g2, g3)`.
/// For `c = √3·i` it maps `(g2, g3)` to `(9g2, −27g3)`.
pub fn scale_invariants(c: Complex64, inv: Invariants) -> (Complex64, Complex64) {
    let c2 = c * c;
    let c4 = c2 * c2;
    (c4 * inv.g2, c4 * c2 * inv.g3)
}
