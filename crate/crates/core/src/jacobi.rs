//! Jacobi elliptic functions by the arithmetic-geometric mean.
//!
//! Real arguments use the descending Landen recurrence; complex arguments are
//! assembled from two real evaluations, one at parameter `m` and one at the
//! complementary parameter `1 − m`, via Jacobi's imaginary transformation.
//! Both `m` and `1 − m` are passed explicitly so that neither is formed by
//! cancellation.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

const AGM_MAX_ITER: usize = 64;

/// Values of `sn`, `cn`, `dn` at one argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jacobi<T> {
    pub sn: T,
    pub cn: T,
    pub dn: T,
}

/// Complete elliptic integral K(m), given the complementary parameter `m1 = 1 − m`.
pub fn complete_k(m1: f64) -> f64 {
    let (mut a, mut b) = (1.0, m1.sqrt());
    for _ in 0..AGM_MAX_ITER {
        let next = 0.5 * (a + b);
        if (a - b).abs() <= 2.0 * f64::EPSILON * next {
            a = next;
            break;
        }
        b = (a * b).sqrt();
        a = next;
    }
    FRAC_PI_2 / a
}

/// `sn`, `cn`, `dn` of a real argument, `0 ≤ m ≤ 1`.
pub fn real(u: f64, m: f64, m1: f64) -> Jacobi<f64> {
    if m == 0.0 {
        return Jacobi { sn: u.sin(), cn: u.cos(), dn: 1.0 };
    }
    if m1 == 0.0 {
        let c = 1.0 / u.cosh();
        return Jacobi { sn: u.tanh(), cn: c, dn: c };
    }

    let mut a = [0.0f64; AGM_MAX_ITER + 1];
    let mut c = [0.0f64; AGM_MAX_ITER + 1];
    a[0] = 1.0;
    c[0] = m.sqrt();
    let mut b = m1.sqrt();
    let mut n = 0;
    while n < AGM_MAX_ITER && c[n].abs() > f64::EPSILON * a[n] {
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = (a[n] * b).sqrt();
        n += 1;
    }

    let mut phi = 2f64.powi(n as i32) * a[n] * u;
    let mut prev = phi;
    for j in (1..=n).rev() {
        prev = phi;
        phi = 0.5 * (phi + (c[j] * phi.sin() / a[j]).asin());
    }
    let (sn, cn) = phi.sin_cos();
    let dn = if n == 0 { 1.0 } else { cn / (prev - phi).cos() };
    Jacobi { sn, cn, dn }
}

/// `sn`, `cn`, `dn` of a complex argument.
///
/// With `s, c, d` at `(x | m)` and `s1, c1, d1` at `(y | 1 − m)`,
///
/// ```text
/// sn(x + iy) = (s·d1 + i·c·d·s1·c1) / δ
/// cn(x + iy) = (c·c1 − i·s·d·s1·d1) / δ
/// dn(x + iy) = (d·c1·d1 − i·m·s·c·s1) / δ,   δ = c1² + m·s²·s1².
/// ```
///
/// Accurate while `|y|` stays well inside `K(1 − m)`, where `c1` is bounded
/// away from zero.
pub fn complex(u: Complex64, m: f64, m1: f64) -> Jacobi<Complex64> {
    let r = real(u.re, m, m1);
    let i = real(u.im, m1, m);
    let (s, c, d) = (r.sn, r.cn, r.dn);
    let (s1, c1, d1) = (i.sn, i.cn, i.dn);
    let delta = c1 * c1 + m * s * s * s1 * s1;
    Jacobi {
        sn: Complex64::new(s * d1, c * d * s1 * c1) / delta,
        cn: Complex64::new(c * c1, -s * d * s1 * d1) / delta,
        dn: Complex64::new(d * c1 * d1, -m * s * c * s1) / delta,
    }
}
