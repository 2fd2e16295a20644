use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use shen_elliptic::{ComplexValue, Modulus, Signature};

/// Environment variable overriding the default verification tolerance.
pub const TOL_ENV: &str = "SHEN_ELL_TOL";
pub const DEFAULT_TOL: f64 = 1e-8;

/// Validated settings shared by the subcommands.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub signature: Signature,
    pub modulus: Modulus,
    pub z: ComplexValue,
    pub grid: usize,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(
        signature: &str,
        kappa2: f64,
        z: ComplexValue,
        grid: usize,
        output: Option<PathBuf>,
    ) -> Result<Self, String> {
        let signature = Signature::from_label(signature).map_err(|e| e.to_string())?;
        let modulus = Modulus::from_kappa2(kappa2).map_err(|e| e.to_string())?;
        if grid < 2 {
            return Err(format!("grid must be at least 2, got {grid}"));
        }
        Ok(RunConfig {
            signature,
            modulus,
            z,
            grid,
            output,
        })
    }

    /// Writes `text` to the configured output, or standard output.
    pub fn emit(&self, text: &str) -> Result<(), String> {
        emit(self.output.as_ref(), text)
    }
}

pub fn emit(output: Option<&PathBuf>, text: &str) -> Result<(), String> {
    match output {
        Some(path) => File::create(path)
            .and_then(|mut f| f.write_all(text.as_bytes()))
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| format!("cannot write to stdout: {e}")),
    }
}

/// Flag value, else `SHEN_ELL_TOL`, else 1e−8.
pub fn resolve_tol(flag: Option<f64>) -> Result<f64, String> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var(TOL_ENV) {
            Ok(v) => v
                .trim()
                .parse::<f64>()
                .map_err(|_| format!("{TOL_ENV} is not a number: {v:?}"))?,
            Err(_) => DEFAULT_TOL,
        },
    };
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(format!("tolerance must be positive, got {tol}"));
    }
    Ok(tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let z = ComplexValue::new(0.0, 0.0);
        assert!(RunConfig::new("4", 0.5, z, 5, None).is_ok());
        assert!(RunConfig::new("5", 0.5, z, 5, None).is_err());
        assert!(RunConfig::new("3", 1.5, z, 5, None).is_err());
        assert!(RunConfig::new("3", 0.0, z, 5, None).is_err());
        assert!(RunConfig::new("3", 0.5, z, 1, None).is_err());
        assert!(resolve_tol(Some(-1.0)).is_err());
        assert!(resolve_tol(Some(f64::NAN)).is_err());
    }

    #[test]
    fn flag_takes_precedence() {
        assert_eq!(resolve_tol(Some(1e-5)).unwrap(), 1e-5);
    }
}
