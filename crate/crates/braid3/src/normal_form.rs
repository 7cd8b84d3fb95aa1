//! The factorization `b = σ_j^k · b₁ · Δ^ℓ` of a 3-braid.
//!
//! `b₁` is a reduced word in a₁ = σ₁², a₂ = σ₂² whose first block does not
//! use generator `j`. The factorization is read off from three invariants of
//! `b`: its strand permutation (fixing `j` and the parities of `k`, `ℓ`), its
//! PSL(2,ℤ) image (fixing `k` and `b₁` via the free basis of Γ(2)), and its
//! exponent sum (fixing `ℓ`). The result is checked against `b` with the
//! Burau representation.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::braid_words::{free_reduce, Block, BraidSymbol, BraidWord, FreeWord, Generator};
use crate::matrix_oracles::{braids_equal, IntMat2, MatrixWord};
use crate::{Error, Result};

/// An element of S₃, stored as the images of 1, 2, 3 (zero-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PermutationS3([u8; 3]);

impl PermutationS3 {
    pub const ID: Self = Self([0, 1, 2]);
    pub const T12: Self = Self([1, 0, 2]);
    pub const T23: Self = Self([0, 2, 1]);
    pub const T13: Self = Self([2, 1, 0]);
    /// 1 → 2 → 3 → 1
    pub const C123: Self = Self([1, 2, 0]);
    /// 1 → 3 → 2 → 1
    pub const C132: Self = Self([2, 0, 1]);

    /// Image of point `i ∈ {1,2,3}`.
    pub fn apply(&self, i: u8) -> u8 {
        self.0[(i - 1) as usize] + 1
    }

    /// `self` followed by `other` (left-to-right along the word).
    pub fn then(&self, other: &Self) -> Self {
        Self([other.0[self.0[0] as usize], other.0[self.0[1] as usize], other.0[self.0[2] as usize]])
    }

    pub fn inverse(&self) -> Self {
        let mut out = [0u8; 3];
        for (i, &p) in self.0.iter().enumerate() {
            out[p as usize] = i as u8;
        }
        Self(out)
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { *self };
        // Every element of S₃ has order dividing 6.
        (0..n.unsigned_abs() % 6).fold(Self::ID, |acc, _| acc.then(&base))
    }

    pub fn name(&self) -> &'static str {
        match *self {
            Self::ID => "id",
            Self::T12 => "(12)",
            Self::T23 => "(23)",
            Self::T13 => "(13)",
            Self::C123 => "(123)",
            _ => "(132)",
        }
    }
}

impl fmt::Display for PermutationS3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for PermutationS3 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

fn symbol_permutation(sym: BraidSymbol) -> PermutationS3 {
    match sym {
        BraidSymbol::S1 => PermutationS3::T12,
        BraidSymbol::S2 => PermutationS3::T23,
        BraidSymbol::Delta => PermutationS3::T13,
    }
}

/// Strand permutation, composed left to right along the word.
pub fn permutation(b: &BraidWord) -> PermutationS3 {
    b.letters()
        .iter()
        .fold(PermutationS3::ID, |acc, l| acc.then(&symbol_permutation(l.symbol).pow(l.exp)))
}

/// The even integer nearest to `k` on the side of zero.
pub fn q(k: i64) -> Result<i64> {
    match k {
        0 => Err(Error::ZeroInput),
        _ if k % 2 == 0 => Ok(k),
        _ => Ok(k - k.signum()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum NormalForm {
    DeltaPower(i64),
    Split { j: Generator, k: i64, b1: FreeWord, l: i64 },
}

impl NormalForm {
    /// `ℓ`, or `m` for `Δ^m`.
    pub fn delta_exponent(&self) -> i64 {
        match self {
            NormalForm::DeltaPower(m) => *m,
            NormalForm::Split { l, .. } => *l,
        }
    }

    /// The same braid multiplied by `Δ^n` on the right.
    pub fn shift_delta(&self, n: i64) -> NormalForm {
        match self.clone() {
            NormalForm::DeltaPower(m) => NormalForm::DeltaPower(m + n),
            NormalForm::Split { j, k, b1, l } => NormalForm::Split { j, k, b1, l: l + n },
        }
    }

    pub fn render(&self) -> String {
        match self {
            NormalForm::DeltaPower(m) => format!("d^{m}"),
            NormalForm::Split { j, k, b1, l } => {
                let mut s = format!("s{}^{k}", j.index());
                if !b1.is_empty() {
                    s.push_str(" . ");
                    s.push_str(&b1.render());
                }
                if *l != 0 {
                    s.push_str(&format!(" . d^{l}"));
                }
                s
            }
        }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Rewrites a reduced Γ(2) matrix as a reduced word in a₁ ↦ [[1,2],[0,1]],
/// a₂ ↦ [[1,0],[−2,1]], up to sign. Returns `None` if `m` is not in Γ(2).
fn gamma2_word(m: &IntMat2) -> Option<FreeWord> {
    let two = BigInt::from(2);
    let mut cur = m.clone();
    let mut letters: Vec<Block> = Vec::new();
    // Peel letters from the left by Euclid steps on the first column.
    loop {
        if cur.c.is_zero() {
            if cur.a.abs() != BigInt::from(1) || cur.a != cur.d {
                return None;
            }
            // ±[[1, b], [0, 1]] with b even.
            let b = if cur.a.is_positive() { cur.b.clone() } else { -&cur.b };
            if !b.is_even() {
                return None;
            }
            letters.push(Block::new(Generator::One, (b / &two).to_i64()?));
            break;
        }
        if cur.a.is_zero() {
            return None;
        }
        if cur.a.abs() > cur.c.abs() {
            // a₁^n · cur' with a' = a − 2nc, |a'| < |c|.
            let n = round_div(&cur.a, &(&two * &cur.c));
            let step = IntMat2::new(BigInt::from(1), -(&two * &n), BigInt::zero(), BigInt::from(1));
            cur = &step * &cur;
            letters.push(Block::new(Generator::One, n.to_i64()?));
        } else {
            // a₂^n · cur' with c' = c + 2na, |c'| < |a|.
            let n = -round_div(&cur.c, &(&two * &cur.a));
            let step = IntMat2::new(BigInt::from(1), BigInt::zero(), &two * &n, BigInt::from(1));
            cur = &step * &cur;
            letters.push(Block::new(Generator::Two, n.to_i64()?));
        }
    }
    Some(free_reduce(letters))
}

/// Nearest integer to `x / y`.
fn round_div(x: &BigInt, y: &BigInt) -> BigInt {
    let (q, r) = x.div_mod_floor(y);
    // x/y = q + r/y with r/y ∈ [0, 1).
    if (BigInt::from(2) * r).abs() > y.abs() {
        q + 1
    } else {
        q
    }
}

fn sigma_matrix(j: Generator, n: i64) -> IntMat2 {
    match j {
        Generator::One => IntMat2::new(1, n, 0, 1),
        Generator::Two => IntMat2::new(1, 0, -n, 1),
    }
}

const DELTA_INV: (i64, i64, i64, i64) = (0, -1, 1, 0);

fn compute(b: &BraidWord) -> NormalForm {
    let perm = permutation(b);
    // (j if k is odd, ℓ odd) from τ(σ_j^k Δ^ℓ) = τ(b).
    let (odd_j, l_odd) = match perm {
        PermutationS3::ID => (None, false),
        PermutationS3::T13 => (None, true),
        PermutationS3::T12 => (Some(Generator::One), false),
        PermutationS3::T23 => (Some(Generator::Two), false),
        PermutationS3::C123 => (Some(Generator::One), true),
        _ => (Some(Generator::Two), true),
    };
    let mut v = b.psl2_image();
    if l_odd {
        let (a, bb, c, d) = DELTA_INV;
        v = &v * &IntMat2::new(a, bb, c, d);
    }
    if let Some(j) = odd_j {
        v = &sigma_matrix(j, -1) * &v;
    }
    let word = gamma2_word(&v).expect("image lies in Γ(2)");
    let e = b.exponent_sum();
    let (j, k, b1) = match (odd_j, word.blocks().first()) {
        (None, None) => {
            debug_assert_eq!(e % 3, 0);
            return NormalForm::DeltaPower(e / 3);
        }
        (None, Some(first)) => {
            let j = first.gen;
            let b1 = FreeWord::from_pairs(word.blocks()[1..].iter().map(|blk| (blk.gen, blk.exp)));
            (j, 2 * first.exp, b1)
        }
        (Some(j), first) => match first {
            Some(f) if f.gen == j => {
                let b1 = FreeWord::from_pairs(word.blocks()[1..].iter().map(|blk| (blk.gen, blk.exp)));
                (j, 2 * f.exp + 1, b1)
            }
            _ => (j, 1, word.clone()),
        },
    };
    let rest = e - k - 2 * b1.exponent_sum();
    debug_assert_eq!(rest % 3, 0);
    NormalForm::Split { j, k, b1, l: rest / 3 }
}

/// The unique factorization of `b`, certified by Burau equality.
pub fn normalize(b: &BraidWord) -> NormalForm {
    let nf = compute(b);
    assert!(
        braids_equal(&denormalize(&nf), b),
        "normal form {nf} does not reproduce {b}"
    );
    nf
}

/// ϑ(b) = σ_j^{q(k)} b₁ as a word in a₁, a₂.
pub fn theta(nf: &NormalForm) -> Result<FreeWord> {
    match nf {
        NormalForm::DeltaPower(_) => Err(Error::NotApplicable("theta of a Δ-power".into())),
        NormalForm::Split { j, k, b1, .. } => Ok(FreeWord::power(*j, q(*k)? / 2).concat(b1)),
    }
}

/// The literal braid word `σ_j^k · b₁ · Δ^ℓ`.
pub fn denormalize(nf: &NormalForm) -> BraidWord {
    let mut w = BraidWord::identity();
    match nf {
        NormalForm::DeltaPower(m) => w.push(BraidSymbol::Delta, *m),
        NormalForm::Split { j, k, b1, l } => {
            let sym = |g: Generator| match g {
                Generator::One => BraidSymbol::S1,
                Generator::Two => BraidSymbol::S2,
            };
            w.push(sym(*j), *k);
            for blk in b1.blocks() {
                w.push(sym(blk.gen), 2 * blk.exp);
            }
            w.push(BraidSymbol::Delta, *l);
        }
    }
    w
}
