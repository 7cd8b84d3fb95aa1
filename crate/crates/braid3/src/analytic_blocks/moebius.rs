use std::ops::Mul;

use num_complex::Complex64;

use super::finite;
use crate::{Error, Result};

/// `z -> (a z + b) / (c z + d)` with `ad - bc != 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoebiusMap {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl MoebiusMap {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        let det = a * d - b * c;
        if det.norm() == 0.0 || !det.re.is_finite() || !det.im.is_finite() {
            return Err(Error::Domain("Moebius map with zero determinant".into()));
        }
        Ok(MoebiusMap { a, b, c, d })
    }

    pub fn identity() -> Self {
        let (o, z) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
        MoebiusMap { a: o, b: z, c: z, d: o }
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn apply(&self, z: Complex64) -> Result<Complex64> {
        let den = self.c * z + self.d;
        if den.norm() == 0.0 {
            return Err(Error::Pole(format!("Moebius map has a pole at {z}")));
        }
        finite((self.a * z + self.b) / den, "Moebius")
    }

    pub fn inverse(&self) -> Self {
        MoebiusMap { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MoebiusMap) -> Self {
        MoebiusMap {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }
}

impl Mul for MoebiusMap {
    type Output = MoebiusMap;
    fn mul(self, rhs: MoebiusMap) -> MoebiusMap {
        self.compose(&rhs)
    }
}

/// `φ1(z) = 1 / (2z + i(2M+1))`.
pub fn phi1(m: f64) -> MoebiusMap {
    let (o, z) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
    MoebiusMap { a: z, b: o, c: Complex64::new(2.0, 0.0), d: Complex64::new(0.0, 2.0 * m + 1.0) }
}

/// `φ2(z) = (z + i/(4M+2)) / (1 - z i/(4M+2))`.
pub fn phi2(m: f64) -> MoebiusMap {
    let c = Complex64::new(0.0, 1.0 / (4.0 * m + 2.0));
    MoebiusMap { a: Complex64::new(1.0, 0.0), b: c, c: -c, d: Complex64::new(1.0, 0.0) }
}
