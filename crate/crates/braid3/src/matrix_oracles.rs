//! Exact matrix images of braids.
//!
//! The Burau image over `ℤ[t, t⁻¹]` is faithful on B₃ and decides the word
//! problem. The SL(2,ℤ) image (σ₁ ↦ [[1,1],[0,1]], σ₂ ↦ [[1,0],[−1,1]]) has
//! kernel ⟨Δ⁴⟩; modulo sign it realises B₃/⟨Δ²⟩ ≅ PSL(2,ℤ), and its trace
//! gives the Nielsen–Thurston type and the entropy.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::braid_words::{BraidSymbol, BraidWord, CyclicFreeWord, FreeWord, Generator};

/// A 2×2 integer matrix `[[a, b], [c, d]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl IntMat2 {
    pub fn new<T: Into<BigInt>>(a: T, b: T, c: T, d: T) -> Self {
        Self { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn neg(&self) -> Self {
        Self { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }

    /// True for ±I.
    pub fn is_central(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d && self.a.abs().is_one()
    }

    /// Equality in PSL(2,ℤ).
    pub fn eq_up_to_sign(&self, other: &Self) -> bool {
        self == other || *self == other.neg()
    }

    /// Inverse of a determinant-one matrix.
    pub fn inverse_sl2(&self) -> Self {
        Self { a: self.d.clone(), b: -&self.b, c: -&self.c, d: self.a.clone() }
    }
}

impl Mul for &IntMat2 {
    type Output = IntMat2;
    fn mul(self, o: &IntMat2) -> IntMat2 {
        IntMat2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }
}

impl fmt::Display for IntMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

fn sigma_power(sym: BraidSymbol, n: i64) -> IntMat2 {
    match sym {
        BraidSymbol::S1 => IntMat2::new(1, n, 0, 1),
        BraidSymbol::S2 => IntMat2::new(1, 0, -n, 1),
        // Δ ↦ [[0,1],[−1,0]] has order 4.
        BraidSymbol::Delta => match n.rem_euclid(4) {
            0 => IntMat2::new(1, 0, 0, 1),
            1 => IntMat2::new(0, 1, -1, 0),
            2 => IntMat2::new(-1, 0, 0, -1),
            _ => IntMat2::new(0, -1, 1, 0),
        },
    }
}

/// Words with an SL(2,ℤ) image.
pub trait MatrixWord {
    fn psl2_image(&self) -> IntMat2;
}

impl MatrixWord for BraidWord {
    fn psl2_image(&self) -> IntMat2 {
        self.letters()
            .iter()
            .fold(IntMat2::identity(), |acc, l| &acc * &sigma_power(l.symbol, l.exp))
    }
}

impl MatrixWord for FreeWord {
    fn psl2_image(&self) -> IntMat2 {
        self.blocks().iter().fold(IntMat2::identity(), |acc, b| {
            let sym = match b.gen {
                Generator::One => BraidSymbol::S1,
                Generator::Two => BraidSymbol::S2,
            };
            &acc * &sigma_power(sym, 2 * b.exp)
        })
    }
}

impl MatrixWord for CyclicFreeWord {
    fn psl2_image(&self) -> IntMat2 {
        self.as_word().psl2_image()
    }
}

/// The SL(2,ℤ) matrix of a word; compare up to sign for the quotient.
pub fn psl2_image<W: MatrixWord + ?Sized>(w: &W) -> IntMat2 {
    w.psl2_image()
}

/// A Laurent polynomial in `t` with integer coefficients; zero terms are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c · t^e`.
    pub fn monomial<T: Into<BigInt>>(c: T, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// `Some((c, e))` when the polynomial is the single term `c · t^e`.
    pub fn as_monomial(&self) -> Option<(BigInt, i64)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), *e))
        } else {
            None
        }
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        self + &(-o)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(e, c)| format!("{c}t^{e}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// A 2×2 matrix over `ℤ[t, t⁻¹]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentMat2 {
    pub m: [[LaurentPoly; 2]; 2],
}

impl LaurentMat2 {
    pub fn identity() -> Self {
        Self::from_rows([[LaurentPoly::one(), LaurentPoly::zero()], [LaurentPoly::zero(), LaurentPoly::one()]])
    }

    pub fn from_rows(m: [[LaurentPoly; 2]; 2]) -> Self {
        Self { m }
    }

    pub fn det(&self) -> LaurentPoly {
        &(&self.m[0][0] * &self.m[1][1]) - &(&self.m[0][1] * &self.m[1][0])
    }

    /// `c · t^e · I`.
    pub fn scalar(c: i64, e: i64) -> Self {
        Self::from_rows([
            [LaurentPoly::monomial(c, e), LaurentPoly::zero()],
            [LaurentPoly::zero(), LaurentPoly::monomial(c, e)],
        ])
    }

    fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }
}

impl Mul for &LaurentMat2 {
    type Output = LaurentMat2;
    fn mul(self, o: &LaurentMat2) -> LaurentMat2 {
        let e = |i: usize, j: usize| &(&self.m[i][0] * &o.m[0][j]) + &(&self.m[i][1] * &o.m[1][j]);
        LaurentMat2::from_rows([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

fn lp(c: i64, e: i64) -> LaurentPoly {
    LaurentPoly::monomial(c, e)
}

fn burau_generator(sym: BraidSymbol, positive: bool) -> LaurentMat2 {
    let z = LaurentPoly::zero;
    match (sym, positive) {
        (BraidSymbol::S1, true) => LaurentMat2::from_rows([[lp(-1, 1), lp(1, 0)], [z(), lp(1, 0)]]),
        (BraidSymbol::S1, false) => LaurentMat2::from_rows([[lp(-1, -1), lp(1, -1)], [z(), lp(1, 0)]]),
        (BraidSymbol::S2, true) => LaurentMat2::from_rows([[lp(1, 0), z()], [lp(1, 1), lp(-1, 1)]]),
        (BraidSymbol::S2, false) => LaurentMat2::from_rows([[lp(1, 0), z()], [lp(1, 0), lp(-1, -1)]]),
        (BraidSymbol::Delta, p) => {
            let s1 = burau_generator(BraidSymbol::S1, p);
            let s2 = burau_generator(BraidSymbol::S2, p);
            &(&s1 * &s2) * &s1
        }
    }
}

/// Burau image with σ₁ ↦ [[−t,1],[0,1]], σ₂ ↦ [[1,0],[t,−t]].
pub fn burau_image(b: &BraidWord) -> LaurentMat2 {
    b.letters().iter().fold(LaurentMat2::identity(), |acc, l| {
        let g = burau_generator(l.symbol, l.exp > 0);
        &acc * &g.pow(l.exp.unsigned_abs())
    })
}

/// Word problem in B₃.
pub fn braids_equal(b1: &BraidWord, b2: &BraidWord) -> bool {
    burau_image(b1) == burau_image(b2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum NtClass {
    CentralPower,
    Periodic,
    Reducible,
    PseudoAnosov,
}

impl fmt::Display for NtClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NtClass::CentralPower => "central power",
            NtClass::Periodic => "periodic",
            NtClass::Reducible => "reducible",
            NtClass::PseudoAnosov => "pseudo-Anosov",
        };
        f.write_str(s)
    }
}

/// Type of a matrix image in PSL(2,ℤ).
pub fn nt_class_of_matrix(m: &IntMat2) -> NtClass {
    if m.is_central() {
        return NtClass::CentralPower;
    }
    let t = m.trace().abs();
    let two = BigInt::from(2);
    if t < two {
        NtClass::Periodic
    } else if t == two {
        NtClass::Reducible
    } else {
        NtClass::PseudoAnosov
    }
}

pub fn nt_class<W: MatrixWord + ?Sized>(w: &W) -> NtClass {
    nt_class_of_matrix(&w.psl2_image())
}

/// `ln |x|` for a nonzero big integer, without overflowing `f64`.
pub fn ln_abs_bigint(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.abs().to_f64().unwrap().ln();
    }
    let shift = bits - 64;
    let top = (x.abs() >> shift).to_f64().unwrap();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ln((|tr| + √(tr² − 4))/2)` for |tr| > 2, else 0.
pub fn entropy_from_trace(tr: &BigInt) -> f64 {
    let t = tr.abs();
    if t <= BigInt::from(2) {
        return 0.0;
    }
    if t.bits() <= 60 {
        let tf = t.to_f64().unwrap();
        // ln((t + √(t²−4))/2) = acosh(t/2)
        return (tf / 2.0).acosh();
    }
    // t > 2^59: √(1 − 4/t²) is 1 to double precision.
    ln_abs_bigint(&t)
}

/// Entropy of the conjugacy class: log of the spectral radius of the
/// PSL(2,ℤ) image, zero unless pseudo-Anosov.
pub fn entropy_exact<W: MatrixWord + ?Sized>(w: &W) -> f64 {
    let m = w.psl2_image();
    match nt_class_of_matrix(&m) {
        NtClass::PseudoAnosov => entropy_from_trace(&m.trace()),
        _ => 0.0,
    }
}
