use thiserror::Error;

/// Failure modes shared by every evaluation routine in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The invariants do not describe a rectangular lattice (Δ = g2³ − 27·g3² ≤ 0).
    #[error("degenerate lattice: discriminant {0:e} is not positive")]
    DegenerateLattice(f64),

    /// The argument sits on (or numerically at) a pole of the function.
    #[error("pole at z = {re}{im:+}i")]
    Pole { re: f64, im: f64 },

    /// A series or an adaptive scheme exhausted its budget.
    #[error("no convergence after {0} steps")]
    NonConvergence(usize),
}

impl Error {
    pub(crate) fn pole(z: num_complex::Complex64) -> Self {
        Error::Pole { re: z.re, im: z.im }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
