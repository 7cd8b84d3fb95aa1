//! Two-sided bounds on extremal length and entropy in terms of `L(w)`.

use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::braid_words::{
    cyclic_syllable_decompose, script_l, script_l_word, syllable_decompose, BraidWord,
    CyclicFreeWord, CyclicSyllables, FreeWord, Syllable, SyllableKind,
};
use crate::matrix_oracles::{entropy_exact, nt_class, NtClass};
use crate::normal_form::{normalize, theta, NormalForm};
use crate::{Error, Result};

/// Upper constant in every extremal-length bound.
pub const UPPER_CONSTANT: f64 = 300.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryCondition {
    TrTr,
    PbPb,
    TrPb,
    PbTr,
    Conjugacy,
}

impl BoundaryCondition {
    pub fn is_mixed(self) -> bool {
        matches!(self, BoundaryCondition::TrPb | BoundaryCondition::PbTr)
    }

    /// Accepts `tr`, `pb`, `tr_tr`, `pb_pb`, `tr_pb`, `pb_tr`, `conjugacy`.
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "tr" | "tr_tr" => BoundaryCondition::TrTr,
            "pb" | "pb_pb" => BoundaryCondition::PbPb,
            "tr_pb" => BoundaryCondition::TrPb,
            "pb_tr" => BoundaryCondition::PbTr,
            "conjugacy" => BoundaryCondition::Conjugacy,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            BoundaryCondition::TrTr => "tr_tr",
            BoundaryCondition::PbPb => "pb_pb",
            BoundaryCondition::TrPb => "tr_pb",
            BoundaryCondition::PbTr => "pb_tr",
            BoundaryCondition::Conjugacy => "conjugacy",
        }
    }
}

impl fmt::Display for BoundaryCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Families for which the invariant vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExceptionalFamily {
    Identity,
    /// `w = a_jⁿ` with totally real boundary values.
    GeneratorPower,
    /// Every term of `w` equal to the same power +1 or −1.
    EqualUnitPowers,
    /// Conjugacy classes of `a₁ⁿ`, `a₂ⁿ`, `(a₁a₂)ⁿ`.
    ReducibleClass,
    /// `b = Δ^m`.
    DeltaPower,
    /// `b = σ_j^k Δ^ℓ`.
    SigmaPowerTimesDelta,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Exceptional {
    pub family: ExceptionalFamily,
    pub reason: String,
}

impl Exceptional {
    fn new(family: ExceptionalFamily, reason: impl Into<String>) -> Self {
        Self { family, reason: reason.into() }
    }
}

/// Result of one of the bound computations.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    /// The word the bound is phrased in (ϑ-image for braids, the cut period for classes).
    pub word: String,
    pub boundary: BoundaryCondition,
    #[serde(rename = "L")]
    pub l: f64,
    pub lambda_lower: f64,
    pub lambda_upper: f64,
    /// `[1/Λ_upper, 1/Λ_lower]`, absent when Λ = 0.
    pub module_interval: Option<(f64, f64)>,
    pub entropy_lower: Option<f64>,
    pub entropy_upper: Option<f64>,
    pub entropy_exact: Option<f64>,
    pub exceptional: Option<Exceptional>,
    pub nt_class: NtClass,
}

impl BoundsReport {
    fn build(
        word: String,
        boundary: BoundaryCondition,
        l: f64,
        exceptional: Option<Exceptional>,
        nt: NtClass,
    ) -> Self {
        let (lo, hi) = if exceptional.is_some() { (0.0, 0.0) } else { lambda_interval(l) };
        let module_interval = (lo > 0.0).then(|| (1.0 / hi, 1.0 / lo));
        Self {
            word,
            boundary,
            l,
            lambda_lower: lo,
            lambda_upper: hi,
            module_interval,
            entropy_lower: None,
            entropy_upper: None,
            entropy_exact: None,
            exceptional,
            nt_class: nt,
        }
    }

    pub fn is_exceptional(&self) -> bool {
        self.exceptional.is_some()
    }
}

/// `[L/(2π), 300 L]`.
pub fn lambda_interval(l: f64) -> (f64, f64) {
    (l / (2.0 * PI), UPPER_CONSTANT * l)
}

/// `[L/4, 150π L]`, from `h = (π/2) Λ`.
pub fn entropy_interval(l: f64) -> (f64, f64) {
    (l / 4.0, 0.5 * PI * UPPER_CONSTANT * l)
}

fn tr_exception(w: &FreeWord) -> Option<Exceptional> {
    match w.blocks() {
        [] => Some(Exceptional::new(ExceptionalFamily::Identity, "identity word")),
        [b] => Some(Exceptional::new(
            ExceptionalFamily::GeneratorPower,
            format!("w = a{}^{} is a generator power, so the tr invariant vanishes", b.gen.index(), b.exp),
        )),
        _ => None,
    }
}

fn pb_exception(w: &FreeWord) -> Option<Exceptional> {
    let blocks = w.blocks();
    if blocks.is_empty() {
        return Some(Exceptional::new(ExceptionalFamily::Identity, "identity word"));
    }
    let e = blocks[0].exp;
    if e.abs() == 1 && blocks.iter().all(|b| b.exp == e) {
        return Some(Exceptional::new(
            ExceptionalFamily::EqualUnitPowers,
            format!("every term of w has power {e}, so the pb invariant vanishes"),
        ));
    }
    None
}

/// Bounds for the totally real or perpendicular-bisector boundary problems.
pub fn bounds_thm1(w: &FreeWord, bc: BoundaryCondition) -> Result<BoundsReport> {
    let exc = match bc {
        BoundaryCondition::TrTr => tr_exception(w),
        BoundaryCondition::PbPb => pb_exception(w),
        _ => return Err(Error::UnsupportedCombination(format!("bounds_thm1 with {bc}"))),
    };
    Ok(BoundsReport::build(w.render(), bc, script_l_word(w), exc, nt_class(w)))
}

/// Bounds with mixed boundary values; there are no exceptional words.
pub fn bounds_mixed(w: &FreeWord, bc: BoundaryCondition) -> Result<BoundsReport> {
    if !bc.is_mixed() {
        return Err(Error::UnsupportedCombination(format!("bounds_mixed with {bc}")));
    }
    Ok(BoundsReport::build(w.render(), bc, script_l_word(w), None, nt_class(w)))
}

/// Dispatches linear words to the matching bound.
pub fn bounds_for_word(w: &FreeWord, bc: BoundaryCondition) -> Result<BoundsReport> {
    match bc {
        BoundaryCondition::TrTr | BoundaryCondition::PbPb => bounds_thm1(w, bc),
        BoundaryCondition::TrPb | BoundaryCondition::PbTr => bounds_mixed(w, bc),
        BoundaryCondition::Conjugacy => class_bounds_thm2(&crate::braid_words::cyclic_reduce(w)),
    }
}

/// Bounds for the conjugacy class represented by `cw`, with the exact entropy.
pub fn class_bounds_thm2(cw: &CyclicFreeWord) -> Result<BoundsReport> {
    let nt = nt_class(cw);
    let h = entropy_exact(cw);
    let (word, l, exc) = if cw.is_empty() {
        (String::new(), 0.0, Some(Exceptional::new(ExceptionalFamily::Identity, "identity class")))
    } else {
        match cyclic_syllable_decompose(cw)? {
            CyclicSyllables::Regular(dec) => (dec.word.render(), script_l(&dec), None),
            CyclicSyllables::Exceptional(e) => (
                cw.render(),
                0.0,
                Some(Exceptional::new(
                    ExceptionalFamily::ReducibleClass,
                    format!("class of {e} has no syllable boundary; Λ = h = 0"),
                )),
            ),
        }
    };
    let mut rep = BoundsReport::build(word, BoundaryCondition::Conjugacy, l, exc, nt);
    let (elo, ehi) = if rep.is_exceptional() { (0.0, 0.0) } else { entropy_interval(l) };
    rep.entropy_lower = Some(elo);
    rep.entropy_upper = Some(ehi);
    rep.entropy_exact = Some(h);
    Ok(rep)
}

/// Report for a braid together with its normal form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BraidBounds {
    pub normal_form: NormalForm,
    /// ϑ(b), absent for Δ-powers.
    pub theta_word: Option<FreeWord>,
    pub report: BoundsReport,
}

/// Totally real bounds for an arbitrary 3-braid via its normal form.
pub fn braid_bounds_thm3(b: &BraidWord) -> BraidBounds {
    let nf = normalize(b);
    let nt = nt_class(b);
    match &nf {
        NormalForm::DeltaPower(m) => {
            let exc = Exceptional::new(ExceptionalFamily::DeltaPower, format!("b = d^{m}; Λ_tr = 0"));
            BraidBounds {
                report: BoundsReport::build(String::new(), BoundaryCondition::TrTr, 0.0, Some(exc), nt),
                theta_word: None,
                normal_form: nf,
            }
        }
        NormalForm::Split { j, k, b1, l } => {
            let w = theta(&nf).expect("split form");
            let exc = b1.is_empty().then(|| {
                Exceptional::new(
                    ExceptionalFamily::SigmaPowerTimesDelta,
                    format!("b = s{}^{k} d^{l}; Λ_tr = 0", j.index()),
                )
            });
            let rep = BoundsReport::build(w.render(), BoundaryCondition::TrTr, script_l_word(&w), exc, nt);
            BraidBounds { normal_form: nf, theta_word: Some(w), report: rep }
        }
    }
}

/// Building-block bounds for a single syllable under the given boundary values.
pub fn syllable_block_bounds(s: &Syllable, bc: BoundaryCondition) -> Result<(f64, f64)> {
    let d = s.degree as f64;
    match (s.kind, bc) {
        (_, BoundaryCondition::TrPb | BoundaryCondition::PbTr) => {
            Ok(((4.0 * d - 1.0).ln() / PI, (4.0 * d + 1.0).ln() / PI))
        }
        (SyllableKind::Form1, BoundaryCondition::PbPb) | (SyllableKind::Form2, BoundaryCondition::TrTr) => {
            Ok((2.0 / PI * (2.0 * d - 1.0).ln(), 2.0 / PI * (2.0 * d + 1.0).ln()))
        }
        (kind, bc) => Err(Error::UnsupportedCombination(format!("{kind:?} syllable with {bc}"))),
    }
}

/// The summed bound `Λ_tr + Λ_pb ∈ [L/(2π), 600 L]`; the flag records whether
/// the word satisfies the standing hypothesis that it is not a singleton.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SumBound {
    pub lower: f64,
    pub upper: f64,
    pub not_singleton_hypothesis: bool,
}

pub fn sum_bound(w: &FreeWord) -> SumBound {
    let l = script_l_word(w);
    let singleton = match syllable_decompose(w) {
        Ok(dec) => dec.syllables.len() == 1 && dec.syllables[0].kind == SyllableKind::Singleton,
        Err(_) => false,
    };
    SumBound { lower: l / (2.0 * PI), upper: 2.0 * UPPER_CONSTANT * l, not_singleton_hypothesis: !singleton }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

/// Compares a class report against its exact entropy.
pub fn consistency_check(rep: &BoundsReport) -> Verdict {
    let Some(h) = rep.entropy_exact else { return Verdict::Fail };
    let ok = if rep.is_exceptional() {
        h == 0.0 && rep.nt_class != NtClass::PseudoAnosov
    } else {
        match (rep.entropy_lower, rep.entropy_upper) {
            (Some(lo), Some(hi)) => lo <= h && h <= hi && rep.nt_class == NtClass::PseudoAnosov,
            _ => false,
        }
    };
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}
