//! Numerical evaluation of Shen's elliptic functions `dn3` and `dn4`.
//!
//! Both functions begin life on the real line as derivatives of the inverse of
//! an incomplete hypergeometric integral,
//!
//! ```text
//! u(T) = ∫₀ᵀ F(a, b; ½; κ² sin² t) dt,   (a, b) = (⅓, ⅔) or (¼, ¾),
//! ```
//!
//! and extend to the complex plane through their coperiodic Weierstrass
//! function `p_κ`:
//!
//! ```text
//! (1 − dn)(⅓ + p_κ) = c·κ²,   c = 4/9 (signature three), ½ (signature four).
//! ```
//!
//! The crate provides both constructions, the Weierstrass ℘ machinery they
//! rest on, the n = 2 and n = 3 modular transformations on invariants, and a
//! residual for every identity connecting them, so that each one can be
//! checked numerically.
//!
//! Modules:
//!
//! * [`hypergeometric`]: the ₂F₁ series, the incomplete integral, its inverse φ
//!   and the complete value K.
//! * [`weierstrass`]: cubic roots, ℘ and ℘′ through Jacobi `sn`, half-periods
//!   by quadrature, lattice-sum oracles and the homogeneity scaling.
//! * [`modular`]: invariants of the quadratic and cubic transforms and the
//!   period-division sum identities.
//! * [`shen`]: the Shen functions themselves and their identity residuals.

mod error;
pub mod hypergeometric;
pub mod jacobi;
pub mod modular;
pub mod quadrature;
pub mod shen;
pub mod weierstrass;

pub use error::{Error, Result};
pub use hypergeometric::{
    complete_k, gauss_2f1, incomplete_integral, integrand, invert_phi, Modulus, Signature,
};
pub use modular::{
    cubic_invariants, cubic_sum_identity_residual, quadratic_invariants,
    quadratic_sum_identity_residual, TransformResult,
};
pub use shen::{
    companion_q_residual, complementary_period_residual,
    complementary_period_residual_quadrature, dn3_real, dn4_real, ode_residual, period_ratio,
    shen_eval, shen_half_periods, signature_invariants, special_value_b, ShenFunction,
};
pub use weierstrass::{
    cubic_roots, eisenstein_invariants, half_periods_from_invariants, lattice_sum_oracle,
    scale_invariants, wp, wp_prime, CubicRoots, HalfPeriods, Invariants, Weierstrass,
};

/// Complex numbers used for arguments and values throughout the crate.
pub type ComplexValue = num_complex::Complex64;
