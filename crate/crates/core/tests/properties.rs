use num_complex::Complex64;
use proptest::prelude::*;
use shen_elliptic::shen::dn_real;
use shen_elliptic::{
    companion_q_residual, complementary_period_residual, complete_k, cubic_sum_identity_residual,
    half_periods_from_invariants, quadratic_sum_identity_residual, shen_half_periods,
    signature_invariants, special_value_b, Modulus, ShenFunction, Signature, Weierstrass,
};

fn signature() -> impl Strategy<Value = Signature> {
    prop_oneof![Just(Signature::Three), Just(Signature::Four)]
}

fn modulus() -> impl Strategy<Value = Modulus> {
    (0.02f64..0.98).prop_map(|k2| Modulus::from_kappa2(k2).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn half_periods_agree_with_quadrature(sig in signature(), m in modulus()) {
        let hyper = shen_half_periods(sig, m).unwrap();
        let quad = half_periods_from_invariants(signature_invariants(sig, m)).unwrap();
        prop_assert!((hyper.omega - quad.omega).abs() / hyper.omega < 1e-8);
        prop_assert!((hyper.omega_prime - quad.omega_prime).norm() / hyper.omega_prime.norm() < 1e-8);
        prop_assert!(complementary_period_residual(sig, m).unwrap() < 1e-10);
    }

    #[test]
    fn special_value_is_minus_one_third(sig in signature(), m in modulus()) {
        prop_assert!((special_value_b(sig, m).unwrap() + 1.0 / 3.0).abs() < 1e-8);
    }

    #[test]
    fn real_line_matches_weierstrass_form(
        sig in signature(),
        m in modulus(),
        t in 0.0f64..1.0,
    ) {
        let f = ShenFunction::new(sig, m).unwrap();
        let u = 4.0 * f.half_periods().omega * t;
        let direct = dn_real(sig, m, u).unwrap();
        let via_wp = f.eval(Complex64::new(u, 0.0)).unwrap();
        prop_assert!((direct - via_wp.re).abs() < 1e-9);
        prop_assert!(via_wp.im.abs() < 1e-9);
    }

    #[test]
    fn real_period_is_twice_k(sig in signature(), m in modulus()) {
        let f = ShenFunction::new(sig, m).unwrap();
        let omega = f.half_periods().omega;
        prop_assert!((omega - complete_k(sig, m).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn companion_relation(
        sig in signature(),
        m in modulus(),
        a in 0.1f64..0.9,
        b in 0.1f64..0.9,
    ) {
        let hp = shen_half_periods(sig, m).unwrap();
        let z = hp.omega_prime * b + a * hp.omega;
        let scale = 1.0 + Weierstrass::new(signature_invariants(sig, m)).unwrap().wp(z).unwrap().norm();
        prop_assert!(companion_q_residual(sig, m, z).unwrap() / scale < 1e-7);
    }

    #[test]
    fn division_sum_identities(
        m in modulus(),
        a in 0.1f64..0.9,
        b in 0.1f64..0.9,
    ) {
        for sig in Signature::ALL {
            let inv = signature_invariants(sig, m);
            let hp = shen_half_periods(sig, m).unwrap();
            let z = hp.omega_prime * b + a * hp.omega;
            let r = match sig {
                Signature::Three => cubic_sum_identity_residual(z, inv, hp).unwrap(),
                Signature::Four => quadratic_sum_identity_residual(z, inv, hp).unwrap(),
            };
            prop_assert!(r < 1e-8, "{sig:?} {r}");
        }
    }
}
