//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use braid3::analytic_blocks::{
    audit_block_constants, audit_upper_bound_arithmetic, ellip_k, fm, glue_word, pb_witness, seeded_glue_words,
    slalom_extremal_bounds, slalom_extremal_exact, slalom_proof_bounds, tr_witness,
    QuadratureSpec, DEFAULT_AUDIT_SEED, MU_BOUND, QC_BOUND,
};
use braid3::braid_words::{
    parse_braid, parse_pure_word, script_l, syllable_decompose, BraidSymbol, BraidWord, FreeWord, Generator,
    SyllableKind,
};
use braid3::cli::{enumerate_words, pure_image};
use braid3::invariant_bounds::class_bounds_thm2;
use braid3::matrix_oracles::{burau_image, entropy_exact, psl2_image, IntMat2, LaurentMat2, NtClass};
use braid3::normal_form::{denormalize, normalize};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let t = Instant::now();
    let mut o = f();
    let el = t.elapsed();
    if let Some(lim) = limit {
        if el > lim {
            o.ok = false;
            o.detail.push_str(&format!("; took {el:?}, limit {lim:?}"));
            return o;
        }
    }
    o.detail.push_str(&format!("; {el:?}"));
    o
}

fn c1_syllables() -> Outcome {
    let w = parse_pure_word("a2^-1 a1^2 a2^-3 a1^-1 a2^-1 a1^-1 a2 a1^-1").unwrap();
    let t = Instant::now();
    let dec = syllable_decompose(&w).unwrap();
    let l = script_l(&dec);
    let el = t.elapsed();
    let expected = 3.0 * 3f64.ln() + 7f64.ln() + 2.0 * 11f64.ln();
    let ok = dec.degrees() == [1, 2, 3, 3, 1, 1] && (l - expected).abs() < 1e-12 && el < Duration::from_millis(1);
    outcome(ok, format!("degrees {:?}, L = {l:.15} (expected {expected:.15}), decomposed in {el:?}", dec.degrees()))
}

fn c2_sandwich() -> Outcome {
    let words = enumerate_words(6);
    let mut failures = Vec::new();
    for cw in &words {
        let rep = class_bounds_thm2(cw).unwrap();
        let tr = psl2_image(cw).trace().abs();
        let h = entropy_exact(cw);
        let ok = if rep.is_exceptional() {
            tr <= BigInt::from(2) && h == 0.0
        } else {
            let l = rep.l;
            tr > BigInt::from(2)
                && rep.nt_class == NtClass::PseudoAnosov
                && l / 4.0 <= h
                && h <= 150.0 * PI * l
        };
        if !ok {
            failures.push(cw.render());
        }
    }
    outcome(failures.is_empty(), format!("{} classes, {} failures {:?}", words.len(), failures.len(), failures))
}

fn c3_entropy() -> Outcome {
    let b = parse_braid("s1^-2 s2^2").unwrap();
    let w = pure_image(&b).unwrap();
    let h = entropy_exact(&w);
    let expected = (3.0 + 2.0 * 2f64.sqrt()).ln();
    let tr = psl2_image(&w).trace();
    let ok = (h - expected).abs() < 1e-12 && tr.abs() == BigInt::from(6);
    outcome(ok, format!("h = {h:.15}, ln(3+2 sqrt2) = {expected:.15}, trace {tr}"))
}

/// All freely reduced words of total degree `1..=max`.
fn reduced_words(max: usize) -> Vec<FreeWord> {
    let letters = [(Generator::One, 1), (Generator::One, -1), (Generator::Two, 1), (Generator::Two, -1)];
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..4).map(|i| vec![i]).collect();
    while let Some(seq) = stack.pop() {
        out.push(FreeWord::from_pairs(seq.iter().map(|&i| letters[i])));
        if seq.len() < max {
            let last = *seq.last().unwrap();
            for i in 0..4 {
                if i / 2 == last / 2 && i != last {
                    continue;
                }
                let mut s = seq.clone();
                s.push(i);
                stack.push(s);
            }
        }
    }
    out
}

fn c4_oracles() -> Outcome {
    let braid = |s: &str| parse_braid(s).unwrap();
    let braid_rel = burau_image(&braid("s1 s2 s1")) == burau_image(&braid("s2 s1 s2"));
    let center = burau_image(&braid("s1 s2 s1 s1 s2 s1")) == LaurentMat2::scalar(1, 3);
    let psl = psl2_image(&braid("s1 s2 s1 s1 s2 s1")) == IntMat2::new(-1, 0, 0, -1);
    let words = reduced_words(8);
    let id = IntMat2::identity();
    let bad: Vec<String> = words
        .iter()
        .filter(|w| psl2_image(*w).eq_up_to_sign(&id))
        .map(|w| w.render())
        .collect();
    let ok = braid_rel && center && psl && bad.is_empty() && !words.is_empty();
    outcome(
        ok,
        format!(
            "braid relation {braid_rel}, burau(D^2) = t^3 I {center}, psl2(D^2) = -I {psl}, {} reduced words, {} map to +-I",
            words.len(),
            bad.len()
        ),
    )
}

fn random_braid(rng: &mut ChaCha8Rng) -> BraidWord {
    let len = rng.gen_range(0..=12);
    let syms = [BraidSymbol::S1, BraidSymbol::S2, BraidSymbol::Delta];
    BraidWord::from_letters((0..len).map(|_| {
        let e = rng.gen_range(1..=3i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
        (syms[rng.gen_range(0..3)], e)
    }))
}

fn c5_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let delta = BraidWord::from_letters([(BraidSymbol::Delta, 1)]);
    let mut fails = 0;
    for _ in 0..1000 {
        let b = random_braid(&mut rng);
        let nf = normalize(&b);
        let round = burau_image(&denormalize(&nf)) == burau_image(&b);
        let shifted = normalize(&b.concat(&delta)) == nf.shift_delta(1);
        if !(round && shifted) {
            fails += 1;
        }
    }
    outcome(fails == 0, format!("1000 seeded braids, {fails} failures"))
}

fn c6_elliptic() -> Outcome {
    let spec = QuadratureSpec::default();
    let mut ok = true;
    let mut parts = Vec::new();
    for m in [2.0, 5.0, 10.0] {
        let f_lo = fm(Complex64::new(0.0, m), m, &spec).unwrap();
        let f_hi = fm(Complex64::new(0.0, m + 1.0), m, &spec).unwrap();
        let gap = (f_hi - f_lo).norm();
        let in_gap = PI / (2.0 * (m + 1.0)) <= gap && gap <= PI / (2.0 * m);
        let k_quad = (m + 1.0) * (f_lo / Complex64::i()).re;
        let k_agm = ellip_k(m / (m + 1.0)).unwrap();
        let agree = (k_quad - k_agm).abs() < 1e-8;
        let l = (2.0 * m + 1.0).ln();
        let sandwich = 0.5 * l < k_quad && k_quad < 0.5 * (2.4 + l);
        ok &= in_gap && agree && sandwich;
        parts.push(format!("M={m}: gap {gap:.10}, K {k_quad:.12} vs {k_agm:.12}"));
    }
    outcome(ok, parts.join("; "))
}

fn c7_slalom() -> Outcome {
    let mut ok = true;
    for m in 1..=50 {
        let m = m as f64;
        let v = slalom_extremal_exact(m).unwrap();
        let (a, b) = slalom_extremal_bounds(m).unwrap();
        let (c, d) = slalom_proof_bounds(m).unwrap();
        ok &= a <= v && v <= b && c <= v && v <= d;
    }
    let v1 = slalom_extremal_exact(1.0).unwrap();
    // recomputed oracle: y- = 1/29, y+ = 1/41, inversive distance 17
    let oracle = 17f64.acosh() / PI;
    ok &= (v1 - 1.1223).abs() < 1e-3 && (v1 - oracle).abs() < 1e-12;
    outcome(ok, format!("M = 1..50 inside both intervals; value at M=1 {v1:.12} (oracle {oracle:.12})"))
}

fn c8_constants() -> Outcome {
    let ms: Vec<f64> = (2..=20).map(f64::from).collect();
    let rep = audit_block_constants(&ms, 10_000, DEFAULT_AUDIT_SEED).unwrap();
    let enough = rep.audits.iter().all(|a| a.samples >= 10_000);
    let worst = rep.audits.iter().map(|a| a.margin / a.bound).fold(f64::INFINITY, f64::min);
    let arith = audit_upper_bound_arithmetic();
    let counted: Vec<_> = arith.checks.iter().filter(|c| c.counted).collect();
    let arith_ok = counted.iter().all(|c| c.holds && c.margin > 0.0);
    let headline = arith.checks.iter().any(|c| c.name == "upper_c" && c.holds)
        && arith.checks.iter().any(|c| c.name == "upper_300" && c.holds);
    let misprints: Vec<&str> = arith.checks.iter().filter(|c| !c.counted).map(|c| c.name).collect();
    let ok = rep.passed && enough && arith_ok && headline && rep.anchor_max_error < 1e-12;
    outcome(
        ok,
        format!(
            "{} sampled cases, smallest relative margin {worst:.3e}; {} inequalities hold; recorded misprints {:?}",
            rep.audits.len(),
            counted.len(),
            misprints
        ),
    )
}

fn c9_gluing() -> Outcome {
    let mut words = vec![parse_pure_word("a1^2 a2^-2").unwrap()];
    words.extend(seeded_glue_words(DEFAULT_AUDIT_SEED, 2));
    let mut ok = true;
    let mut parts = Vec::new();
    for w in &words {
        let dec = syllable_decompose(w).unwrap();
        ok &= dec.degrees().iter().all(|&d| d <= 4) && dec.syllables.iter().all(|s| s.kind != SyllableKind::Singleton);
        let a = glue_word(w, 1.0 / 180.0).unwrap();
        ok &= a.sup_mu < MU_BOUND && a.qc_dilatation <= QC_BOUND && a.margin > 0.0;
        parts.push(format!("{}: sup|mu| {:.6}, margin {:.6}, K {:.6}", w.render(), a.sup_mu, a.margin, a.qc_dilatation));
    }
    outcome(ok, parts.join("; "))
}

fn c10_witnesses() -> Outcome {
    let mut ok = true;
    let mut n = 0;
    for s in ["a1", "a1^4", "a1^-3", "a2^2"] {
        let r = tr_witness(&parse_pure_word(s).unwrap(), 200, 1e-3).unwrap();
        ok &= r.passed && r.extremal_length < 1e-3;
        n += 1;
    }
    for s in ["a1 a2", "a1 a2 a1 a2 a1", "a2^-1 a1^-1 a2^-1"] {
        let r = pb_witness(&parse_pure_word(s).unwrap(), 200, 1e-3).unwrap();
        ok &= r.passed && r.extremal_length < 1e-3;
        n += 1;
    }
    outcome(ok, format!("{n} witnesses on rectangles of extremal length 5e-4"))
}

type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("1 syllable golden test", None, c1_syllables),
        ("2 exhaustive class sandwich", Some(Duration::from_secs(10)), c2_sandwich),
        ("3 entropy spot value", None, c3_entropy),
        ("4 oracle sanity", None, c4_oracles),
        ("5 normal-form round trip", None, c5_round_trip),
        ("6 elliptic sandwiches", None, c6_elliptic),
        ("7 slalom exactness", None, c7_slalom),
        ("8 constants audit", None, c8_constants),
        ("9 gluing audit", Some(Duration::from_secs(30)), c9_gluing),
        ("10 exceptional witnesses", None, c10_witnesses),
    ];
    let mut failed = 0;
    for (name, limit, f) in criteria {
        let o = timed(limit, f);
        println!("criterion {name}: {} ({})", if o.ok { "PASS" } else { "FAIL" }, o.detail);
        if !o.ok {
            failed += 1;
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
