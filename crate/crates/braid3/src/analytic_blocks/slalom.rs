//! Extremal lengths of the elementary slalom classes.
//!
//! After two Moebius maps the slalom domain becomes the ring between the
//! unit circle and the circle with diameter `[-i y⁻, i y⁺]`; its extremal
//! length is `arccosh(δ) / π` with `δ` the inversive distance.

use std::f64::consts::PI;

use crate::{Error, Result};

fn check(m: f64) -> Result<()> {
    if m > 0.0 && m.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("slalom needs M > 0, got {m}")))
    }
}

/// `1 / ((4M+1)(4M+2) - 1)`.
pub fn slalom_y_minus(m: f64) -> f64 {
    1.0 / ((4.0 * m + 1.0) * (4.0 * m + 2.0) - 1.0)
}

/// `1 / ((4M+2)(4M+3) - 1)`.
pub fn slalom_y_plus(m: f64) -> f64 {
    1.0 / ((4.0 * m + 2.0) * (4.0 * m + 3.0) - 1.0)
}

/// `[(2/π) ln(4M+1), (2/π) ln(4M+3)]`.
pub fn slalom_extremal_bounds(m: f64) -> Result<(f64, f64)> {
    check(m)?;
    Ok((2.0 / PI * (4.0 * m + 1.0).ln(), 2.0 / PI * (4.0 * m + 3.0).ln()))
}

/// `[(1/π) ln((4M+1)(4M+2) - 1), (1/π) ln((4M+2)(4M+3) - 1)]`.
pub fn slalom_proof_bounds(m: f64) -> Result<(f64, f64)> {
    check(m)?;
    Ok(((1.0 / slalom_y_minus(m)).ln() / PI, (1.0 / slalom_y_plus(m)).ln() / PI))
}

/// Inversive distance between the unit circle and the circle with
/// diametral points `-i y⁻`, `i y⁺`.
pub fn inversive_distance(m: f64) -> Result<f64> {
    check(m)?;
    let (ym, yp) = (slalom_y_minus(m), slalom_y_plus(m));
    let r = 0.5 * (ym + yp);
    let d = 0.5 * (yp - ym).abs();
    Ok((1.0 + r * r - d * d) / (2.0 * r))
}

pub fn slalom_extremal_exact(m: f64) -> Result<f64> {
    Ok(inversive_distance(m)?.acosh() / PI)
}

pub fn half_slalom_extremal(m: f64) -> Result<f64> {
    Ok(0.5 * slalom_extremal_exact(m)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_at_one() {
        assert!((inversive_distance(1.0).unwrap() - 17.0).abs() < 1e-12);
        // acosh(17) / pi
        let v = slalom_extremal_exact(1.0).unwrap();
        assert!((v - 1.122_199_704_678_36).abs() < 1e-13, "{v}");
        assert!((v - 1.1223).abs() < 1e-3);
        assert!((half_slalom_extremal(1.0).unwrap() - 0.561_099_852_339_18).abs() < 1e-13);
    }

    #[test]
    fn bounds_examples() {
        let (lo, hi) = slalom_extremal_bounds(1.0).unwrap();
        assert!((lo - 1.024_599_997_453_55).abs() < 1e-13 && (hi - 1.238_804_876_139_36).abs() < 1e-13);
        let (lo, hi) = slalom_extremal_bounds(0.5).unwrap();
        assert!((lo - 2.0 / PI * 3f64.ln()).abs() < 1e-15 && (hi - 2.0 / PI * 5f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn sandwich_and_monotone() {
        let mut prev = 0.0;
        for m in 1..=50 {
            let m = m as f64;
            let v = slalom_extremal_exact(m).unwrap();
            let (a, b) = slalom_extremal_bounds(m).unwrap();
            let (c, d) = slalom_proof_bounds(m).unwrap();
            assert!(a <= v && v <= b && c <= v && v <= d, "M={m}");
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn half_at_two() {
        let h = half_slalom_extremal(2.0).unwrap();
        assert!((h - 0.729_703_663_822_14).abs() < 1e-13);
        assert!(9f64.ln() / PI < h && h < 11f64.ln() / PI);
        assert_eq!(h / slalom_extremal_exact(2.0).unwrap(), 0.5);
    }

    #[test]
    fn domain() {
        assert!(slalom_extremal_exact(0.0).is_err());
        assert!(slalom_extremal_bounds(-1.0).is_err());
        assert!(half_slalom_extremal(f64::NAN).is_err());
    }
}
