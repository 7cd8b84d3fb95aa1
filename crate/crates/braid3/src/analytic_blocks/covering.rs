//! Covering maps of the twice punctured plane `C \ {-1, 1}`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::finite;
use crate::{Error, Result};

/// `f1(w) = (w + 1/w) / 2`, a double cover of `C \ {-1, 1}` by `C \ {0, ±1}`.
pub fn covering_f1(w: Complex64) -> Result<Complex64> {
    if w.norm() == 0.0 {
        return Err(Error::Pole("f1 has a pole at 0".into()));
    }
    finite(0.5 * (w + w.inv()), "f1")
}

/// `f2(z) = (e^{πz} - 1) / (e^{πz} + 1)`; poles on `i(2Z + 1)`.
pub fn covering_f2(z: Complex64) -> Result<Complex64> {
    let e = (z * PI).exp();
    let near_pole = (e + 1.0).norm() <= 1e-15 * e.norm().max(1.0);
    if near_pole {
        return Err(Error::Pole(format!("f2 has a pole at {z}")));
    }
    finite((z * (0.5 * PI)).tanh(), "f2")
}

/// `e^{πz}`.
pub fn covering_f2_exp(z: Complex64) -> Result<Complex64> {
    finite((z * PI).exp(), "exp(pi z)")
}

/// `f1 ∘ f2`, a universal-cover factor `C \ iZ -> C \ {-1, 1}` with period `i`.
pub fn covering_f(z: Complex64) -> Result<Complex64> {
    let w = covering_f2(z)?;
    if w.norm() <= 1e-15 {
        return Err(Error::Pole(format!("f1 ∘ f2 has a pole at {z}")));
    }
    covering_f1(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

    fn samples() -> Vec<Complex64> {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        (0..1000)
            .map(|_| Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-3.0..3.0)))
            .filter(|z: &Complex64| z.re.abs() > 0.05)
            .collect()
    }

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() <= 1e-12 * (1.0 + a.norm())
    }

    #[test]
    fn identities() {
        let zs = samples();
        assert!(zs.len() > 900);
        for z in zs {
            let f2 = covering_f2(z).unwrap();
            assert!(close(covering_f2(z + 2.0 * I).unwrap(), f2), "{z}");
            assert!(close(covering_f2(z + I).unwrap(), f2.inv()), "{z}");
            assert!(close(covering_f(z + I).unwrap(), covering_f(z).unwrap()), "{z}");
            assert!(close(covering_f1(z.inv()).unwrap(), covering_f1(z).unwrap()), "{z}");
        }
    }

    #[test]
    fn avoids_the_punctures() {
        for z in samples() {
            let w = covering_f(z).unwrap();
            assert!((w - 1.0).norm() > 1e-9 && (w + 1.0).norm() > 1e-9);
        }
    }

    #[test]
    fn poles() {
        assert!(matches!(covering_f1(Complex64::new(0.0, 0.0)), Err(Error::Pole(_))));
        assert!(matches!(covering_f2(I), Err(Error::Pole(_))));
        assert!(matches!(covering_f2(-3.0 * I), Err(Error::Pole(_))));
        assert!(matches!(covering_f(2.0 * I), Err(Error::Pole(_))));
        assert!(covering_f2_exp(Complex64::new(1e3, 0.0)).is_err());
    }
}
