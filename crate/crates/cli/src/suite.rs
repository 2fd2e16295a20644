//! Verification sweeps behind `shen-ell verify`.
//!
//! Every check reduces a family of residuals at one κ² to a single number
//! (the maximum, taken over both signatures where the check applies to
//! both) and compares it with a threshold. Checks whose contract is the
//! default tolerance use the `--tol` value; the rest carry their own.

use std::f64::consts::{FRAC_PI_2, PI};

use clap::ValueEnum;
use rayon::prelude::*;
use shen_elliptic::shen::{dn_real, SPECIAL_VALUE};
use shen_elliptic::{
    companion_q_residual, complementary_period_residual, complementary_period_residual_quadrature,
    complete_k, cubic_invariants, cubic_sum_identity_residual, eisenstein_invariants,
    half_periods_from_invariants, incomplete_integral, integrand, invert_phi, lattice_sum_oracle,
    period_ratio, quadratic_invariants, quadratic_sum_identity_residual, scale_invariants,
    signature_invariants, ComplexValue, Invariants, Modulus, Result, ShenFunction, Signature,
    Weierstrass,
};

/// κ² values every suite is run at.
pub const SWEEP: [f64; 5] = [0.1, 0.25, 0.5, 0.75, 0.9];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Hypergeometric,
    Weierstrass,
    Modular,
    Shen,
}

impl Suite {
    fn members(self) -> &'static [Suite] {
        match self {
            Suite::All => &[
                Suite::Hypergeometric,
                Suite::Weierstrass,
                Suite::Modular,
                Suite::Shen,
            ],
            Suite::Hypergeometric => &[Suite::Hypergeometric],
            Suite::Weierstrass => &[Suite::Weierstrass],
            Suite::Modular => &[Suite::Modular],
            Suite::Shen => &[Suite::Shen],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub kappa2: f64,
    pub residual: f64,
    pub threshold: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.residual <= self.threshold
    }

    /// `name,kappa2,residual,threshold,PASS|FAIL`
    pub fn record(&self) -> String {
        format!(
            "{},{},{:e},{:e},{}",
            self.name,
            self.kappa2,
            self.residual,
            self.threshold,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// Runs `suite` over the κ² sweep; records come back in sweep order.
pub fn run(suite: Suite, tol: f64) -> Vec<Check> {
    let tasks: Vec<(Suite, f64)> = suite
        .members()
        .iter()
        .flat_map(|&s| SWEEP.iter().map(move |&k2| (s, k2)))
        .collect();
    tasks
        .par_iter()
        .map(|&(s, k2)| {
            let m = Modulus::from_kappa2(k2).expect("sweep values lie in (0, 1)");
            match s {
                Suite::Hypergeometric => hypergeometric_checks(m, tol),
                Suite::Weierstrass => weierstrass_checks(m, tol),
                Suite::Modular => modular_checks(m, tol),
                Suite::Shen => shen_checks(m, tol),
                Suite::All => unreachable!("expanded by members()"),
            }
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Largest residual in the family; any evaluation error counts as infinite.
fn worst<I: IntoIterator<Item = Result<f64>>>(residuals: I) -> f64 {
    residuals
        .into_iter()
        .map(|r| match r {
            Ok(v) if !v.is_nan() => v,
            _ => f64::INFINITY,
        })
        .fold(0.0, f64::max)
}

fn per_signature(f: impl Fn(Signature) -> Result<f64>) -> f64 {
    worst(Signature::ALL.map(f))
}

fn linspace(a: f64, b: f64, n: usize) -> impl Iterator<Item = f64> + Clone {
    (0..n).map(move |i| a + (b - a) * i as f64 / (n - 1) as f64)
}

/// Sample points `aω + bω′` away from lattice points, in units of the half-periods.
const CELL_POINTS: [(f64, f64); 10] = [
    (0.3, 0.2),
    (0.7, 0.45),
    (-0.55, 0.8),
    (0.15, -0.65),
    (1.2, 0.3),
    (-0.9, -0.35),
    (0.45, 1.1),
    (-0.25, 0.55),
    (1.6, -1.3),
    (0.85, 0.9),
];

fn cell_point(hp_omega: f64, hp_omega_prime: ComplexValue, (a, b): (f64, f64)) -> ComplexValue {
    hp_omega_prime * b + a * hp_omega
}

fn check(name: &'static str, m: Modulus, residual: f64, threshold: f64) -> Check {
    Check {
        name,
        kappa2: m.kappa2(),
        residual,
        threshold,
    }
}

fn hypergeometric_checks(m: Modulus, _tol: f64) -> Vec<Check> {
    let closed_form = per_signature(|sig| {
        let a = sig.a();
        Ok(worst(linspace(-PI, PI, 41).map(|t| {
            let theta = (m.kappa() * t.sin()).asin();
            let f = integrand(sig, m, t)?;
            Ok((f * theta.cos() - ((2.0 * a - 1.0) * theta).cos()).abs())
        })))
    });
    let k_quadrature = per_signature(|sig| {
        Ok((incomplete_integral(sig, m, FRAC_PI_2)? - complete_k(sig, m)?).abs())
    });
    let quasi_period = per_signature(|sig| {
        let k = complete_k(sig, m)?;
        Ok(worst([-7.3, -1.1, 0.4, 2.9, 6.2].map(|t| {
            Ok((incomplete_integral(sig, m, t + PI)? - incomplete_integral(sig, m, t)? - 2.0 * k)
                .abs())
        })))
    });
    let round_trip = per_signature(|sig| {
        Ok(worst(linspace(-10.0, 10.0, 21).map(|u| {
            Ok((incomplete_integral(sig, m, invert_phi(sig, m, u)?)? - u).abs())
        })))
    });
    let phi_shift = per_signature(|sig| {
        let k = complete_k(sig, m)?;
        Ok(worst(linspace(-3.0, 3.0, 7).map(|u| {
            Ok((invert_phi(sig, m, u + 2.0 * k)? - invert_phi(sig, m, u)? - PI).abs())
        })))
    });
    vec![
        check("closed_form_identity", m, closed_form, 1e-12),
        check("k_quadrature_vs_series", m, k_quadrature, 1e-10),
        check("u_quasi_period", m, quasi_period, 1e-10),
        check("phi_round_trip", m, round_trip, 1e-10),
        check("phi_quasi_period", m, phi_shift, 1e-10),
    ]
}

fn weierstrass_checks(m: Modulus, tol: f64) -> Vec<Check> {
    let functions = || Signature::ALL.map(|sig| Weierstrass::new(signature_invariants(sig, m)));
    let each = |f: &dyn Fn(&Weierstrass) -> Result<f64>| -> f64 {
        worst(functions().map(|w| w.and_then(|w| f(&w))))
    };
    let over_cell = |w: &Weierstrass, f: &dyn Fn(ComplexValue) -> Result<f64>| -> Result<f64> {
        let hp = w.half_periods();
        Ok(worst(
            CELL_POINTS.map(|p| f(cell_point(hp.omega, hp.omega_prime, p))),
        ))
    };

    let roots = each(&|w| {
        let inv = w.invariants();
        let r = w.roots();
        let scale = 1f64.max(inv.g2.abs()).max(inv.g3.abs());
        let worst_root = [r.e1, r.e2, r.e3]
            .map(|t| (4.0 * t * t * t - inv.g2 * t - inv.g3).abs() / scale)
            .into_iter()
            .fold(0.0, f64::max);
        Ok(worst_root.max((r.e1 + r.e2 + r.e3).abs()))
    });
    let evenness = each(&|w| {
        over_cell(w, &|z| {
            let p = w.wp(z)?;
            Ok((w.wp(-z)? - p).norm() / (1.0 + p.norm()))
        })
    });
    let periodicity = each(&|w| {
        let hp = w.half_periods();
        over_cell(w, &|z| {
            let p = w.wp(z)?;
            let a = (w.wp(z + 2.0 * hp.omega)? - p).norm();
            let b = (w.wp(z + hp.omega_prime * 2.0)? - p).norm();
            Ok(a.max(b) / (1.0 + p.norm()))
        })
    });
    let half_values = each(&|w| {
        let hp = w.half_periods();
        let r = w.roots();
        let e1 = (w.wp(ComplexValue::new(hp.omega, 0.0))? - r.e1).norm();
        let e2 = (w.wp(hp.omega_prime + hp.omega)? - r.e2).norm();
        let e3 = (w.wp(hp.omega_prime)? - r.e3).norm();
        Ok(e1.max(e2).max(e3))
    });
    let ode = each(&|w| {
        let inv = w.invariants();
        over_cell(w, &|z| {
            let (p, dp) = w.eval(z)?;
            let rhs = p * p * p * 4.0 - p * inv.g2 - inv.g3;
            Ok((dp * dp - rhs).norm() / (1.0 + p.norm().powi(3)))
        })
    });
    let homogeneity = each(&|w| {
        let inv = w.invariants();
        let mut worst_case: f64 = 0.0;
        for s in [0.5, 1.7, 2.9] {
            let (g2, g3) = scale_invariants(ComplexValue::new(s, 0.0), inv);
            let scaled = Weierstrass::new(Invariants::from_complex(g2, g3)?)?;
            let r = over_cell(&scaled, &|z| {
                let lhs = scaled.wp(z)?;
                let rhs = w.wp(z * s)? * (s * s);
                Ok((lhs - rhs).norm() / (1.0 + lhs.norm()))
            })?;
            worst_case = worst_case.max(r);
        }
        Ok(worst_case)
    });
    let lattice_sum = each(&|w| {
        let hp = w.half_periods();
        let z = cell_point(hp.omega, hp.omega_prime, (0.3, 0.2));
        let exact = w.wp(z)?;
        Ok((lattice_sum_oracle(z, hp, 200)? - exact).norm() / exact.norm())
    });
    let eisenstein = each(&|w| {
        let inv = w.invariants();
        let back = eisenstein_invariants(half_periods_from_invariants(inv)?, 400);
        Ok(((back.g2 - inv.g2) / inv.g2)
            .abs()
            .max(((back.g3 - inv.g3) / inv.g3).abs()))
    });
    let quadrature = each(&|w| {
        let agm = w.half_periods();
        let quad = half_periods_from_invariants(w.invariants())?;
        Ok(((quad.omega - agm.omega) / agm.omega)
            .abs()
            .max((quad.omega_prime - agm.omega_prime).norm() / agm.omega_prime.norm()))
    });

    vec![
        check("cubic_roots", m, roots, 1e-10),
        check("wp_evenness", m, evenness, 1e-10),
        check("wp_periodicity", m, periodicity, 1e-9),
        check("wp_half_period_values", m, half_values, 1e-8),
        check("wp_ode_residual", m, ode, tol),
        check("wp_homogeneity", m, homogeneity, 1e-9),
        check("lattice_sum_oracle", m, lattice_sum, 5e-3),
        check("eisenstein_invariants", m, eisenstein, 1e-3),
        check("half_periods_quadrature_vs_agm", m, quadrature, 1e-9),
    ]
}

fn modular_checks(m: Modulus, tol: f64) -> Vec<Check> {
    let identity = |cubic: bool| {
        per_signature(|sig| {
            let inv = signature_invariants(sig, m);
            let p = Weierstrass::new(inv)?;
            let hp = half_periods_from_invariants(inv)?;
            let transformed = if cubic {
                cubic_invariants(inv, p.wp(hp.omega_prime * (2.0 / 3.0))?.re)
            } else {
                quadratic_invariants(inv, p.wp(hp.omega_prime)?.re)
            };
            let q = Weierstrass::new(transformed.invariants())?;
            Ok(worst(CELL_POINTS.map(|pt| {
                let z = cell_point(hp.omega, hp.omega_prime, pt);
                let residual = if cubic {
                    cubic_sum_identity_residual(z, inv, hp)?
                } else {
                    quadratic_sum_identity_residual(z, inv, hp)?
                };
                Ok(residual / (1.0 + q.wp(z)?.norm()))
            })))
        })
    };
    let k2 = m.kappa2();
    let quadratic_closed = {
        let r = quadratic_invariants(signature_invariants(Signature::Four, m), SPECIAL_VALUE);
        (r.h2 - 4.0 * (1.0 / 3.0 + k2))
            .abs()
            .max((r.h3 - 8.0 * (1.0 / 27.0 - k2 / 3.0)).abs())
    };
    let cubic_closed = {
        let r = cubic_invariants(signature_invariants(Signature::Three, m), SPECIAL_VALUE);
        (r.h2 - 4.0 / 3.0 * (1.0 + 8.0 * k2))
            .abs()
            .max((r.h3 - 8.0 / 27.0 * (1.0 - 20.0 * k2 - 8.0 * k2 * k2)).abs())
    };
    let divided_periods = per_signature(|sig| {
        let inv = signature_invariants(sig, m);
        let p = Weierstrass::new(inv)?;
        let hp = half_periods_from_invariants(inv)?;
        let n = f64::from(sig.division_order());
        let transformed = match sig {
            Signature::Three => cubic_invariants(inv, p.wp(hp.omega_prime * (2.0 / 3.0))?.re),
            Signature::Four => quadratic_invariants(inv, p.wp(hp.omega_prime)?.re),
        };
        let q = half_periods_from_invariants(transformed.invariants())?;
        Ok(((q.omega - hp.omega) / hp.omega)
            .abs()
            .max((q.omega_prime - hp.omega_prime / n).norm() / (hp.omega_prime.im / n)))
    });
    vec![
        check("quadratic_sum_identity", m, identity(false), tol),
        check("cubic_sum_identity", m, identity(true), tol),
        check("quadratic_invariants_closed_form", m, quadratic_closed, 1e-13),
        check("cubic_invariants_closed_form", m, cubic_closed, 1e-13),
        check("divided_half_periods", m, divided_periods, 1e-7),
    ]
}

fn shen_checks(m: Modulus, tol: f64) -> Vec<Check> {
    let shen = |sig| ShenFunction::new(sig, m);
    let omega = per_signature(|sig| {
        let f = shen(sig)?;
        let quad = half_periods_from_invariants(f.invariants())?;
        Ok(((f.half_periods().omega - quad.omega) / quad.omega).abs())
    });
    let omega_prime = per_signature(|sig| {
        let f = shen(sig)?;
        let quad = half_periods_from_invariants(f.invariants())?;
        Ok((f.half_periods().omega_prime - quad.omega_prime).norm() / quad.omega_prime.norm())
    });
    let special = per_signature(|sig| {
        let b = shen(sig)?.special_value()?;
        Ok((b.re - SPECIAL_VALUE).abs().max(b.im.abs()))
    });
    let companion = per_signature(|sig| {
        let f = shen(sig)?;
        let hp = f.half_periods();
        let transformed = match sig {
            Signature::Three => cubic_invariants(f.invariants(), SPECIAL_VALUE),
            Signature::Four => quadratic_invariants(f.invariants(), SPECIAL_VALUE),
        };
        let q = Weierstrass::new(transformed.invariants())?;
        let grid = [0.2, 0.5, 0.8];
        Ok(worst(grid.iter().flat_map(|&a| {
            grid.iter().map(move |&b| (a, b))
        }).map(|pt| {
            let z = cell_point(hp.omega, hp.omega_prime, pt);
            Ok(companion_q_residual(sig, m, z)? / (1.0 + q.wp(z)?.norm()))
        })))
    });
    let ode = per_signature(|sig| {
        let f = shen(sig)?;
        let hp = f.half_periods();
        let real = linspace(0.0, 2.0 * hp.omega, 22)
            .skip(1)
            .take(20)
            .map(|u| ComplexValue::new(u, 0.0));
        let complex = CELL_POINTS.map(|pt| cell_point(hp.omega, hp.omega_prime, pt));
        Ok(worst(real.chain(complex).map(|z| {
            let v = f.eval(z)?;
            Ok(f.ode_residual(z)? / (1.0 + v.norm().powi(3)))
        })))
    });
    let equivalence = per_signature(|sig| {
        let f = shen(sig)?;
        let k = f.half_periods().omega;
        Ok(worst(linspace(0.05, 2.0 * k - 0.05, 40).map(|u| {
            Ok((dn_real(sig, m, u)? - f.eval(ComplexValue::new(u, 0.0))?).norm())
        })))
    });
    let complementary = per_signature(|sig| complementary_period_residual(sig, m));
    let complementary_quad = per_signature(|sig| complementary_period_residual_quadrature(sig, m));
    let ratio = per_signature(|sig| {
        let quad = half_periods_from_invariants(signature_invariants(sig, m))?;
        let r = period_ratio(sig, m)?;
        Ok((r - quad.ratio()).norm() / r.norm())
    });
    let periodicity = per_signature(|sig| {
        let f = shen(sig)?;
        let hp = f.half_periods();
        Ok(worst(CELL_POINTS.map(|pt| {
            let z = cell_point(hp.omega, hp.omega_prime, pt);
            let v = f.eval(z)?;
            let a = (f.eval(z + 2.0 * hp.omega)? - v).norm();
            let b = (f.eval(z + hp.omega_prime * 2.0)? - v).norm();
            Ok(a.max(b))
        })))
    });
    let range = worst([shen(Signature::Four).map(|f| {
        let k = f.half_periods().omega;
        worst(linspace(-2.0 * k, 4.0 * k, 61).map(|u| {
            let v = dn_real(Signature::Four, m, u)?;
            Ok((m.lambda() - v).max(v - 1.0).max(0.0))
        }))
    })]);

    let mut checks = vec![
        check("half_period_omega", m, omega, 1e-8),
        check("half_period_omega_prime", m, omega_prime, 1e-8),
        check("special_value_b", m, special, tol),
        check("companion_q_residual", m, companion, 1e-7),
        check("ode_residual", m, ode, tol),
        check("construction_equivalence", m, equivalence, 1e-9),
        check("complementary_period", m, complementary, 1e-10),
        check("complementary_period_quadrature", m, complementary_quad, 1e-8),
        check("period_ratio_vs_quadrature", m, ratio, 1e-8),
        check("double_periodicity", m, periodicity, 1e-8),
        check("dn4_range", m, range, 1e-12),
    ];
    if m.kappa2() == 0.5 {
        let symmetric = per_signature(|sig| {
            let expected = ComplexValue::new(0.0, sig.period_scale());
            Ok((period_ratio(sig, m)? - expected).norm())
        });
        checks.push(check("period_ratio_symmetry", m, symmetric, 1e-10));
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_are_well_formed() {
        let c = Check {
            name: "special_value_b",
            kappa2: 0.5,
            residual: 2.5e-15,
            threshold: 1e-8,
        };
        assert_eq!(c.record(), "special_value_b,0.5,2.5e-15,1e-8,PASS");
        let c = Check { residual: f64::INFINITY, ..c };
        assert!(c.record().ends_with(",FAIL"));
    }

    #[test]
    fn errors_count_as_failures() {
        assert_eq!(worst([Ok(1.0), Ok(f64::NAN)]), f64::INFINITY);
        assert_eq!(worst(Vec::<Result<f64>>::new()), 0.0);
    }

    #[test]
    fn hypergeometric_suite_passes() {
        let checks = run(Suite::Hypergeometric, 1e-8);
        assert_eq!(checks.len(), 5 * SWEEP.len());
        for c in &checks {
            assert!(c.passed(), "{}", c.record());
        }
        // records follow the sweep order
        let order: Vec<f64> = checks.iter().map(|c| c.kappa2).collect();
        let mut sorted = order.clone();
        sorted.sort_by(f64::total_cmp);
        assert_eq!(order, sorted);
    }
}
