//! Globally adaptive Gauss–Kronrod (7, 15) quadrature.
//!
//! The interval with the largest error estimate is bisected until the summed
//! estimate falls below the requested absolute tolerance.

use crate::{Error, Result};

/// Kronrod abscissae on [−1, 1], positive half, descending; the last is the centre.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights for the abscissae XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const MAX_INTERVALS: usize = 4096;

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

/// One application of the 15-point Kronrod rule with its embedded 7-point
/// Gauss rule. Returns the Kronrod value and `|K15 − G7|`.
pub fn gauss_kronrod_15<F>(f: &mut F, a: f64, b: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre)?;
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for (j, (&x, &w)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let dx = half * x;
        let pair = f(centre - dx)? + f(centre + dx)?;
        kronrod += w * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    Ok((kronrod * half, ((kronrod - gauss) * half).abs()))
}

/// Integrates `f` over `[a, b]` to absolute tolerance `abs_tol`.
///
/// Reversed limits give the negated integral; `a == b` gives zero without
/// evaluating `f`.
pub fn integrate<F>(mut f: F, a: f64, b: f64, abs_tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    if a == b {
        return Ok(0.0);
    }
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain(format!(
            "integration limits must be finite, got [{a}, {b}]"
        )));
    }

    let (value, error) = gauss_kronrod_15(&mut f, a, b)?;
    let mut segments = vec![Segment { a, b, value, error }];
    let mut total_error = error;

    while total_error > abs_tol {
        if segments.len() >= MAX_INTERVALS {
            return Err(Error::NonConvergence(segments.len()));
        }
        let (worst, _) = segments
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .expect("segment list is never empty");
        let seg = segments.swap_remove(worst);
        let mid = 0.5 * (seg.a + seg.b);
        if mid == seg.a || mid == seg.b {
            // interval exhausted at double precision
            segments.push(seg);
            break;
        }
        let (lv, le) = gauss_kronrod_15(&mut f, seg.a, mid)?;
        let (rv, re) = gauss_kronrod_15(&mut f, mid, seg.b)?;
        segments.push(Segment { a: seg.a, b: mid, value: lv, error: le });
        segments.push(Segment { a: mid, b: seg.b, value: rv, error: re });
        total_error = segments.iter().map(|s| s.error).sum();
    }

    Ok(segments.iter().map(|s| s.value).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(f: impl Fn(f64) -> f64) -> impl FnMut(f64) -> Result<f64> {
        move |x| Ok(f(x))
    }

    #[test]
    fn kronrod_rule_is_exact_to_degree_22() {
        for n in 0..=22 {
            let (v, _) = gauss_kronrod_15(&mut ok(|x: f64| x.powi(n)), -1.0, 1.0).unwrap();
            let exact = if n % 2 == 1 { 0.0 } else { 2.0 / (n as f64 + 1.0) };
            assert!((v - exact).abs() < 1e-15, "degree {n}: {v} vs {exact}");
        }
    }

    #[test]
    fn embedded_gauss_rule_is_exact_to_degree_13() {
        // error estimate vanishes when both rules are exact
        for n in 0..=13 {
            let (_, e) = gauss_kronrod_15(&mut ok(|x: f64| x.powi(n)), -1.0, 1.0).unwrap();
            assert!(e < 1e-15, "degree {n}: |K - G| = {e}");
        }
        let (_, e) = gauss_kronrod_15(&mut ok(|x: f64| x.powi(14)), -1.0, 1.0).unwrap();
        assert!(e > 1e-6);
    }

    #[test]
    fn adaptive_handles_peaked_integrand() {
        // ∫₀¹ 1/(1e-4 + x²) dx = 100·atan(100)
        let v = integrate(ok(|x| 1.0 / (1e-4 + x * x)), 0.0, 1.0, 1e-12).unwrap();
        assert!((v - 100.0 * 100f64.atan()).abs() < 1e-10);
    }

    #[test]
    fn reversed_and_empty_limits() {
        let fwd = integrate(ok(f64::cos), 0.0, 1.0, 1e-13).unwrap();
        let rev = integrate(ok(f64::cos), 1.0, 0.0, 1e-13).unwrap();
        assert!((fwd - 1f64.sin()).abs() < 1e-14);
        assert!((fwd + rev).abs() < 1e-15);
        assert_eq!(integrate(ok(f64::cos), 2.0, 2.0, 1e-13).unwrap(), 0.0);
    }

    #[test]
    fn infinite_limit_is_rejected() {
        assert!(matches!(
            integrate(ok(f64::cos), 0.0, f64::INFINITY, 1e-12),
            Err(Error::Domain(_))
        ));
    }
}
