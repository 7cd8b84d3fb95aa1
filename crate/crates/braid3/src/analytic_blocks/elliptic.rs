use std::f64::consts::FRAC_PI_2;

use crate::{Error, Result};

/// Complete elliptic integral of the first kind, modulus `k`:
/// `K(k) = int_0^1 dx / sqrt((1 - x^2)(1 - k^2 x^2))`, via the AGM.
pub fn ellip_k(k: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&k) {
        return Err(Error::Domain(format!("ellip_K needs 0 <= k < 1, got {k}")));
    }
    let mut a = 1.0f64;
    let mut b = ((1.0 - k) * (1.0 + k)).sqrt();
    for _ in 0..64 {
        if (a - b).abs() <= 4.0 * f64::EPSILON * a {
            break;
        }
        let an = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = an;
    }
    Ok(FRAC_PI_2 / (0.5 * (a + b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic_blocks::quadrature::tanh_sinh;
    use num_complex::Complex64;

    #[test]
    fn k_zero() {
        assert_eq!(ellip_k(0.0).unwrap(), FRAC_PI_2);
    }

    #[test]
    fn k_two_thirds() {
        // mpmath ellipk(m = 4/9)
        let v = ellip_k(2.0 / 3.0).unwrap();
        assert!((v - 1.809_667_495_486_588_5).abs() < 1e-14, "{v}");
        assert!(0.5 * 5f64.ln() < v && v < 0.5 * (2.4 + 5f64.ln()));
    }

    #[test]
    fn matches_direct_quadrature() {
        for &k in &[0.1, 0.5, 2.0 / 3.0, 0.9, 0.99] {
            let f = |x: f64, _da: f64, db: f64| {
                // 1 - x = db, exactly
                let one_minus_x2 = db * (1.0 + x);
                Complex64::new(1.0 / (one_minus_x2 * (1.0 - k * k * x * x)).sqrt(), 0.0)
            };
            let q = tanh_sinh(f, 0.0, 1.0, 1e-13).unwrap();
            let a = ellip_k(k).unwrap();
            assert!((q.re - a).abs() < 1e-11, "k={k}: {} vs {a}", q.re);
        }
    }

    #[test]
    fn domain() {
        assert!(matches!(ellip_k(1.0), Err(Error::Domain(_))));
        assert!(ellip_k(-0.1).is_err());
        assert!(ellip_k(f64::NAN).is_err());
    }
}
