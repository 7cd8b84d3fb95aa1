//! Words in the braid generators and in the free group `⟨a₁, a₂⟩`.
//!
//! `a₁ = σ₁²` and `a₂ = σ₂²` generate the pure braids modulo the center, which
//! is free of rank two. Everything downstream (syllables, `L(w)`, the bounds)
//! is phrased in terms of reduced words in these two letters.

use std::fmt;
use std::ops::Range;

use serde::Serialize;

use crate::{Error, Result};

/// Exponents larger than this are rejected by the parsers so that block
/// merging cannot overflow.
pub const MAX_EXPONENT: i64 = 1 << 40;

/// One of the two generators, read as σ₁/σ₂ or a₁/a₂ depending on context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Generator {
    One,
    Two,
}

impl Generator {
    pub fn index(self) -> u8 {
        match self {
            Generator::One => 1,
            Generator::Two => 2,
        }
    }

    pub fn other(self) -> Generator {
        match self {
            Generator::One => Generator::Two,
            Generator::Two => Generator::One,
        }
    }

    pub fn from_index(i: u8) -> Option<Generator> {
        match i {
            1 => Some(Generator::One),
            2 => Some(Generator::Two),
            _ => None,
        }
    }
}

/// Letters of a braid word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BraidSymbol {
    S1,
    S2,
    Delta,
}

impl BraidSymbol {
    fn token(self) -> &'static str {
        match self {
            BraidSymbol::S1 => "s1",
            BraidSymbol::S2 => "s2",
            BraidSymbol::Delta => "d",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BraidLetter {
    pub symbol: BraidSymbol,
    pub exp: i64,
}

/// A raw braid word over σ₁, σ₂ and Δ. No reduction is ever applied.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct BraidWord {
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Builds a word from `(symbol, exponent)` pairs; zero exponents are dropped.
    pub fn from_letters<I: IntoIterator<Item = (BraidSymbol, i64)>>(it: I) -> Self {
        let letters = it
            .into_iter()
            .filter(|&(_, e)| e != 0)
            .map(|(symbol, exp)| BraidLetter { symbol, exp })
            .collect();
        Self { letters }
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, symbol: BraidSymbol, exp: i64) {
        if exp != 0 {
            self.letters.push(BraidLetter { symbol, exp });
        }
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { letters }
    }

    pub fn inverse(&self) -> BraidWord {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| BraidLetter { symbol: l.symbol, exp: -l.exp })
            .collect();
        BraidWord { letters }
    }

    /// Sum of all exponents, counting Δ with weight 3 (the abelianization).
    pub fn exponent_sum(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| match l.symbol {
                BraidSymbol::Delta => 3 * l.exp,
                _ => l.exp,
            })
            .sum()
    }

    pub fn render(&self) -> String {
        render_tokens(self.letters.iter().map(|l| (l.symbol.token(), l.exp)))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A maximal power `a_gen^exp` inside a free word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Block {
    pub gen: Generator,
    pub exp: i64,
}

impl Block {
    pub fn new(gen: Generator, exp: i64) -> Self {
        Self { gen, exp }
    }

    fn key(&self) -> (u8, i64) {
        (self.gen.index(), self.exp)
    }
}

/// A freely reduced word in a₁, a₂: adjacent blocks have distinct generators
/// and no block has exponent zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct FreeWord {
    blocks: Vec<Block>,
}

impl FreeWord {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Shorthand for `free_reduce` over `(generator, exponent)` pairs.
    pub fn from_pairs<I: IntoIterator<Item = (Generator, i64)>>(it: I) -> Self {
        free_reduce(it.into_iter().map(|(g, e)| Block::new(g, e)))
    }

    pub fn power(gen: Generator, exp: i64) -> Self {
        Self::from_pairs([(gen, exp)])
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    /// Σ|exponent|.
    pub fn total_degree(&self) -> u64 {
        self.blocks.iter().map(|b| b.exp.unsigned_abs()).sum()
    }

    /// Σ exponent, i.e. the image under the map sending both generators to 1.
    pub fn exponent_sum(&self) -> i64 {
        self.blocks.iter().map(|b| b.exp).sum()
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        free_reduce(self.blocks.iter().chain(other.blocks.iter()).copied())
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            blocks: self.blocks.iter().rev().map(|b| Block::new(b.gen, -b.exp)).collect(),
        }
    }

    /// Expands into single letters `(gen, ±1)`.
    pub fn letters(&self) -> Vec<(Generator, i8)> {
        let mut out = Vec::with_capacity(self.total_degree() as usize);
        for b in &self.blocks {
            let s = if b.exp > 0 { 1 } else { -1 };
            for _ in 0..b.exp.unsigned_abs() {
                out.push((b.gen, s));
            }
        }
        out
    }

    pub fn render(&self) -> String {
        render_tokens(self.blocks.iter().map(|b| match b.gen {
            Generator::One => ("a1", b.exp),
            Generator::Two => ("a2", b.exp),
        }))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A cyclically reduced word in canonical rotation.
///
/// Two cyclic words are conjugate in the free group iff they are equal as
/// values of this type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct CyclicFreeWord {
    blocks: Vec<Block>,
}

impl CyclicFreeWord {
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.blocks.iter().map(|b| b.exp.unsigned_abs()).sum()
    }

    /// Always true: the constructor only produces cyclically reduced words.
    pub fn cyclically_reduced(&self) -> bool {
        true
    }

    /// The canonical representative as a linear word.
    pub fn as_word(&self) -> FreeWord {
        FreeWord { blocks: self.blocks.clone() }
    }

    /// The period starting at block `start`.
    pub fn rotation(&self, start: usize) -> FreeWord {
        let n = self.blocks.len();
        FreeWord {
            blocks: (0..n).map(|i| self.blocks[(start + i) % n]).collect(),
        }
    }

    pub fn render(&self) -> String {
        self.as_word().render()
    }
}

impl fmt::Display for CyclicFreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn render_tokens<'a, I: Iterator<Item = (&'a str, i64)>>(it: I) -> String {
    let parts: Vec<String> = it
        .map(|(name, e)| if e == 1 { name.to_string() } else { format!("{name}^{e}") })
        .collect();
    parts.join(" ")
}

struct Token<'a> {
    offset: usize,
    name: &'a str,
    name_len: usize,
    exp: i64,
}

fn tokenize(text: &str) -> Result<Vec<Token<'_>>> {
    let mut out = Vec::new();
    let mut pos = 0;
    let bytes = text.as_bytes();
    while pos < bytes.len() {
        if bytes[pos].is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        let raw = &text[start..pos];
        let (name, exp) = match raw.find('^') {
            None => (raw, 1),
            Some(caret) => {
                let digits = &raw[caret + 1..];
                let err_at = start + caret + 1;
                let valid = !digits.is_empty()
                    && digits
                        .trim_start_matches(['+', '-'])
                        .bytes()
                        .all(|c| c.is_ascii_digit())
                    && digits.len() > usize::from(digits.starts_with(['+', '-']));
                if !valid {
                    return Err(Error::Syntax {
                        offset: err_at,
                        message: format!("malformed exponent `{digits}`"),
                    });
                }
                let e: i64 = digits.parse().map_err(|_| Error::Syntax {
                    offset: err_at,
                    message: format!("exponent `{digits}` out of range"),
                })?;
                if e == 0 {
                    return Err(Error::Syntax { offset: err_at, message: "exponent ^0".into() });
                }
                if e.abs() > MAX_EXPONENT {
                    return Err(Error::Syntax {
                        offset: err_at,
                        message: format!("exponent `{digits}` out of range"),
                    });
                }
                (&raw[..caret], e)
            }
        };
        out.push(Token { offset: start, name, name_len: name.len(), exp });
    }
    Ok(out)
}

fn unknown(tok: &Token<'_>, expected: &str) -> Error {
    Error::Syntax {
        offset: tok.offset,
        message: format!(
            "unknown token `{}` (expected {expected})",
            &tok.name[..tok.name_len]
        ),
    }
}

/// Parses `s1`, `s2`, `d` tokens with optional `^<signed-int>` exponents.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let mut w = BraidWord::identity();
    for tok in tokenize(text)? {
        let sym = match tok.name {
            "s1" => BraidSymbol::S1,
            "s2" => BraidSymbol::S2,
            "d" => BraidSymbol::Delta,
            _ => return Err(unknown(&tok, "s1, s2 or d")),
        };
        w.push(sym, tok.exp);
    }
    Ok(w)
}

/// Parses `a1`, `a2` tokens and returns the freely reduced word.
pub fn parse_pure_word(text: &str) -> Result<FreeWord> {
    let mut blocks = Vec::new();
    for tok in tokenize(text)? {
        let gen = match tok.name {
            "a1" => Generator::One,
            "a2" => Generator::Two,
            _ => return Err(unknown(&tok, "a1 or a2")),
        };
        blocks.push(Block::new(gen, tok.exp));
    }
    Ok(free_reduce(blocks))
}

/// Free reduction: drops zero blocks and merges equal neighbours, cascading.
pub fn free_reduce<I: IntoIterator<Item = Block>>(blocks: I) -> FreeWord {
    let mut stack: Vec<Block> = Vec::new();
    for b in blocks {
        if b.exp == 0 {
            continue;
        }
        match stack.last_mut() {
            Some(top) if top.gen == b.gen => {
                top.exp += b.exp;
                if top.exp == 0 {
                    stack.pop();
                }
            }
            _ => stack.push(b),
        }
    }
    FreeWord { blocks: stack }
}

/// Conjugates `w` to a cyclically reduced word and fixes the canonical
/// (lexicographically least) rotation.
pub fn cyclic_reduce(w: &FreeWord) -> CyclicFreeWord {
    let mut blocks = w.blocks.clone();
    while blocks.len() >= 2 && blocks[0].gen == blocks[blocks.len() - 1].gen {
        let last = blocks.pop().unwrap();
        blocks[0].exp += last.exp;
        if blocks[0].exp == 0 {
            blocks.remove(0);
        }
    }
    CyclicFreeWord { blocks: canonical_rotation(&blocks) }
}

fn canonical_rotation(blocks: &[Block]) -> Vec<Block> {
    let n = blocks.len();
    if n == 0 {
        return Vec::new();
    }
    let best = (0..n)
        .min_by(|&i, &j| {
            let ki = (0..n).map(|t| blocks[(i + t) % n].key());
            let kj = (0..n).map(|t| blocks[(j + t) % n].key());
            ki.cmp(kj)
        })
        .unwrap();
    (0..n).map(|t| blocks[(best + t) % n]).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SyllableKind {
    Form1,
    Form2,
    Singleton,
}

/// A syllable: a contiguous range of blocks of the decomposed word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Syllable {
    pub kind: SyllableKind,
    pub span: Range<usize>,
    pub degree: u64,
}

/// Syllables of a word, left to right. For cyclic inputs `word` is the period
/// cut at a syllable boundary and `cyclic` is set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SyllableDecomposition {
    pub word: FreeWord,
    pub cyclic: bool,
    pub syllables: Vec<Syllable>,
}

impl SyllableDecomposition {
    pub fn degrees(&self) -> Vec<u64> {
        self.syllables.iter().map(|s| s.degree).collect()
    }

    /// The blocks making up syllable `i`.
    pub fn syllable_blocks(&self, i: usize) -> &[Block] {
        &self.word.blocks()[self.syllables[i].span.clone()]
    }

    /// The one-syllable decomposition consisting of syllable `i` alone.
    pub fn single(&self, i: usize) -> SyllableDecomposition {
        let s = &self.syllables[i];
        SyllableDecomposition {
            word: FreeWord { blocks: self.syllable_blocks(i).to_vec() },
            cyclic: false,
            syllables: vec![Syllable { kind: s.kind, span: 0..s.span.len(), degree: s.degree }],
        }
    }
}

/// Why a periodic word has no syllable boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CyclicExceptional {
    /// `a₁ⁿ`
    PowerA1(i64),
    /// `a₂ⁿ`
    PowerA2(i64),
    /// `(a₁a₂)ⁿ` with all exponents +1 (`n > 0`) or all −1 (`n < 0`).
    Alternating(i64),
}

impl fmt::Display for CyclicExceptional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CyclicExceptional::PowerA1(n) => write!(f, "a1^{n}"),
            CyclicExceptional::PowerA2(n) => write!(f, "a2^{n}"),
            CyclicExceptional::Alternating(n) => write!(f, "(a1 a2)^{n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CyclicSyllables {
    Regular(SyllableDecomposition),
    Exceptional(CyclicExceptional),
}

fn is_unit(b: &Block) -> bool {
    b.exp == 1 || b.exp == -1
}

fn decompose_blocks(blocks: &[Block]) -> Vec<Syllable> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < blocks.len() {
        if !is_unit(&blocks[i]) {
            out.push(Syllable {
                kind: SyllableKind::Form1,
                span: i..i + 1,
                degree: blocks[i].exp.unsigned_abs(),
            });
            i += 1;
            continue;
        }
        let mut j = i + 1;
        while j < blocks.len() && blocks[j].exp == blocks[i].exp {
            j += 1;
        }
        let kind = if j - i >= 2 { SyllableKind::Form2 } else { SyllableKind::Singleton };
        out.push(Syllable { kind, span: i..j, degree: (j - i) as u64 });
        i = j;
    }
    out
}

/// Splits a reduced word into syllables. Powers with |n| ≥ 2 are claimed
/// first; maximal runs of equal ±1 powers of length ≥ 2 become Form2; the
/// remaining ±1 terms are singletons.
pub fn syllable_decompose(w: &FreeWord) -> Result<SyllableDecomposition> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(SyllableDecomposition { word: w.clone(), cyclic: false, syllables: decompose_blocks(&w.blocks) })
}

/// Syllables of the periodic word `…www…`, cut at the first syllable boundary
/// found from the canonical rotation.
pub fn cyclic_syllable_decompose(cw: &CyclicFreeWord) -> Result<CyclicSyllables> {
    let n = cw.blocks.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    if n == 1 {
        let b = cw.blocks[0];
        return Ok(CyclicSyllables::Exceptional(match b.gen {
            Generator::One => CyclicExceptional::PowerA1(b.exp),
            Generator::Two => CyclicExceptional::PowerA2(b.exp),
        }));
    }
    // A boundary sits before block i unless blocks i-1 and i are equal ±1 powers.
    let boundary = (0..n).find(|&i| {
        let prev = cw.blocks[(i + n - 1) % n];
        let cur = cw.blocks[i];
        !(is_unit(&prev) && prev.exp == cur.exp)
    });
    match boundary {
        None => {
            // All blocks are the same ±1 power and generators alternate, so n is even.
            let sign = cw.blocks[0].exp;
            Ok(CyclicSyllables::Exceptional(CyclicExceptional::Alternating(sign * (n as i64 / 2))))
        }
        Some(start) => {
            let word = cw.rotation(start);
            let syllables = decompose_blocks(&word.blocks);
            Ok(CyclicSyllables::Regular(SyllableDecomposition { word, cyclic: true, syllables }))
        }
    }
}

/// `L = Σ ln(4 d_j − 1)`.
pub fn script_l(dec: &SyllableDecomposition) -> f64 {
    script_l_degrees(dec.syllables.iter().map(|s| s.degree))
}

/// `L` from a list of syllable degrees.
pub fn script_l_degrees<I: IntoIterator<Item = u64>>(degrees: I) -> f64 {
    degrees.into_iter().map(|d| (4.0 * d as f64 - 1.0).ln()).sum()
}

/// `L(w)` for a linear word; zero for the identity.
pub fn script_l_word(w: &FreeWord) -> f64 {
    match syllable_decompose(w) {
        Ok(dec) => script_l(&dec),
        Err(_) => 0.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::{One as A1, Two as A2};

    fn fw(pairs: &[(Generator, i64)]) -> FreeWord {
        FreeWord::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn parse_examples() {
        let w = parse_braid("s1^3 s2^-2").unwrap();
        assert_eq!(
            w.letters(),
            &[
                BraidLetter { symbol: BraidSymbol::S1, exp: 3 },
                BraidLetter { symbol: BraidSymbol::S2, exp: -2 }
            ]
        );
        assert!(parse_braid("").unwrap().is_empty());
        assert_eq!(parse_braid("d^2").unwrap().letters()[0].symbol, BraidSymbol::Delta);
        assert_eq!(parse_pure_word("a1^2 a2^-3").unwrap(), fw(&[(A1, 2), (A2, -3)]));
        assert_eq!(parse_pure_word("a1 a1 a1^-1").unwrap(), fw(&[(A1, 1)]));
        assert!(parse_pure_word("a1 a2 a2^-1 a1^-1").unwrap().is_empty());
    }

    #[test]
    fn parse_errors_carry_offsets() {
        assert_eq!(
            parse_braid("s1 s3").unwrap_err(),
            Error::Syntax { offset: 3, message: "unknown token `s3` (expected s1, s2 or d)".into() }
        );
        match parse_braid("s1  s2^0") {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 7),
            other => panic!("{other:?}"),
        }
        assert!(parse_braid("s1^").is_err());
        assert!(parse_braid("s1^-").is_err());
        assert!(parse_braid("s1^2x").is_err());
        assert!(parse_pure_word("s1").is_err());
        assert!(parse_braid("a1").is_err());
        assert_eq!(parse_braid("s1^+2").unwrap().letters()[0].exp, 2);
    }

    #[test]
    fn render_round_trip() {
        let w = fw(&[(A1, 1), (A2, -3), (A1, 2)]);
        assert_eq!(w.render(), "a1 a2^-3 a1^2");
        assert_eq!(parse_pure_word(&w.render()).unwrap(), w);
        assert_eq!(parse_braid("s1 d^-1 s2^4").unwrap().render(), "s1 d^-1 s2^4");
    }

    #[test]
    fn free_reduce_examples() {
        assert_eq!(fw(&[(A1, 2), (A1, 3)]), fw(&[(A1, 5)]));
        assert!(fw(&[(A1, 1), (A2, 0), (A1, -1)]).is_empty());
        assert_eq!(fw(&[(A2, -1), (A1, 2)]).blocks(), &[Block::new(A2, -1), Block::new(A1, 2)]);
    }

    #[test]
    fn cyclic_reduce_examples() {
        assert_eq!(cyclic_reduce(&fw(&[(A1, 1), (A2, 1), (A1, -1)])).blocks(), &[Block::new(A2, 1)]);
        assert_eq!(
            cyclic_reduce(&fw(&[(A2, 1), (A1, 3), (A2, 1)])).blocks(),
            &[Block::new(A1, 3), Block::new(A2, 2)]
        );
        assert_eq!(
            cyclic_reduce(&fw(&[(A1, 2), (A2, -1)])).blocks(),
            &[Block::new(A1, 2), Block::new(A2, -1)]
        );
        assert!(cyclic_reduce(&fw(&[(A1, 1), (A2, 2), (A1, -1), (A2, -2)])).blocks().len() == 4);
        assert!(cyclic_reduce(&fw(&[(A2, 1), (A1, 1), (A2, -1)])).blocks() == [Block::new(A1, 1)]);
    }

    #[test]
    fn six_syllable_example() {
        let w = parse_pure_word("a2^-1 a1^2 a2^-3 a1^-1 a2^-1 a1^-1 a2 a1^-1").unwrap();
        let dec = syllable_decompose(&w).unwrap();
        let kinds: Vec<_> = dec.syllables.iter().map(|s| s.kind).collect();
        use SyllableKind::*;
        assert_eq!(kinds, vec![Singleton, Form1, Form1, Form2, Singleton, Singleton]);
        assert_eq!(dec.degrees(), vec![1, 2, 3, 3, 1, 1]);
        let expected = 3.0 * 3f64.ln() + 7f64.ln() + 2.0 * 11f64.ln();
        assert!((script_l(&dec) - expected).abs() < 1e-12);
        assert!((script_l(&dec) - 10.037_537_560_656_383).abs() < 1e-12);
    }

    #[test]
    fn form1_breaks_runs() {
        let w = parse_pure_word("a1 a2 a1^5 a2 a1").unwrap();
        let dec = syllable_decompose(&w).unwrap();
        assert_eq!(dec.degrees(), vec![2, 5, 2]);
        assert_eq!(dec.syllables[1].kind, SyllableKind::Form1);
        assert_eq!(syllable_decompose(&fw(&[(A1, 5)])).unwrap().degrees(), vec![5]);
        assert_eq!(syllable_decompose(&FreeWord::identity()), Err(Error::EmptyWord));
    }

    #[test]
    fn cyclic_syllable_examples() {
        for n in 1..6 {
            // (a1 a2)^n a1
            let mut pairs = Vec::new();
            for _ in 0..n {
                pairs.push((A1, 1));
                pairs.push((A2, 1));
            }
            pairs.push((A1, 1));
            let cw = cyclic_reduce(&fw(&pairs));
            let CyclicSyllables::Regular(dec) = cyclic_syllable_decompose(&cw).unwrap() else {
                panic!()
            };
            let mut expect = vec![(A1, 2)];
            for _ in 0..n - 1 {
                expect.push((A2, 1));
                expect.push((A1, 1));
            }
            expect.push((A2, 1));
            assert_eq!(dec.word, fw(&expect));
            assert_eq!(dec.degrees(), vec![2, 2 * n as u64 - 1]);
            assert_eq!(dec.syllables[0].kind, SyllableKind::Form1);
            if n > 1 {
                assert_eq!(dec.syllables[1].kind, SyllableKind::Form2);
            }
        }
        let alt = cyclic_reduce(&fw(&[(A1, 1), (A2, 1), (A1, 1), (A2, 1), (A1, 1), (A2, 1)]));
        assert_eq!(
            cyclic_syllable_decompose(&alt).unwrap(),
            CyclicSyllables::Exceptional(CyclicExceptional::Alternating(3))
        );
        let alt_neg = cyclic_reduce(&fw(&[(A1, -1), (A2, -1)]));
        assert_eq!(
            cyclic_syllable_decompose(&alt_neg).unwrap(),
            CyclicSyllables::Exceptional(CyclicExceptional::Alternating(-1))
        );
        let sq = cyclic_reduce(&fw(&[(A1, 2), (A2, 2)]));
        let CyclicSyllables::Regular(dec) = cyclic_syllable_decompose(&sq).unwrap() else { panic!() };
        assert_eq!(dec.degrees(), vec![2, 2]);
        assert!(dec.syllables.iter().all(|s| s.kind == SyllableKind::Form1));
        assert_eq!(
            cyclic_syllable_decompose(&cyclic_reduce(&fw(&[(A2, -4)]))).unwrap(),
            CyclicSyllables::Exceptional(CyclicExceptional::PowerA2(-4))
        );
    }

    #[test]
    fn cyclic_run_across_the_cut() {
        // The +1 run a2 a1 a2 closes up against a1^2.
        let cw = cyclic_reduce(&parse_pure_word("a1^2 a2 a1 a2").unwrap());
        let CyclicSyllables::Regular(dec) = cyclic_syllable_decompose(&cw).unwrap() else { panic!() };
        assert_eq!(dec.degrees().iter().sum::<u64>(), 5);
        let mut d = dec.degrees();
        d.sort();
        assert_eq!(d, vec![2, 3]);
        let l = script_l(&dec);
        assert!((l - (7f64.ln() + 11f64.ln())).abs() < 1e-12);
    }

    #[test]
    fn script_l_examples() {
        assert_eq!(script_l_degrees([]), 0.0);
        assert_eq!(script_l_word(&FreeWord::identity()), 0.0);
        assert!((script_l_degrees([2]) - 7f64.ln()).abs() < 1e-15);
    }
}
