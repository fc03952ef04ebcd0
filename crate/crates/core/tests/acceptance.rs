//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits with a
//! failure status if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cliffcs::analysis::{adversarial_operator, count_exact, count_upto, epsilon_lower_bound, su4_lde};
use cliffcs::analysis::{lde_vs_cscount, CLIFFORD_GROUP_ORDER};
use cliffcs::automata::{classify_pattern_language, geometric_class, normal_form_automaton, SymbolicWord};
use cliffcs::oracle::optimality_oracle;
use cliffcs::random::random_operator;
use cliffcs::relations::{sweep, Relation};
use cliffcs::so6::{su4_to_so6, SO6Matrix};
use cliffcs::su4::{determinant_one_clifford, generator_matrix, Token, U4Matrix};
use cliffcs::synthesis::{synthesize, synthesize_with_stats};
use cliffcs::CycloElem;
use num_bigint::BigUint;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, limit {limit:?}"))
    }
}

fn worked_example() -> U4Matrix {
    let g = |re: i64, im: i64| CycloElem::gaussian(re, im);
    let rows = [
        [g(3, 1), g(-1, -1), g(-2, 0), g(0, 0)],
        [g(1, -1), g(3, -1), g(0, 0), g(-2, 0)],
        [g(2, 0), g(0, 0), g(3, -1), g(1, 1)],
        [g(0, 0), g(2, 0), g(-1, 1), g(3, 1)],
    ];
    U4Matrix::new(rows, 4)
}

fn c1_worked_example() -> Outcome {
    let u = worked_example();
    let _ = su4_to_so6(&u);
    let t = Instant::now();
    let v = su4_to_so6(&u).map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    #[rustfmt::skip]
    let reference: [[i64; 6]; 6] = [
        [4, 0, 6, 2, 2, -2],
        [0, 8, 0, 0, 0, 0],
        [-6, 0, 1, 3, 3, -3],
        [2, 0, -6, 7, -1, 1],
        [2, 0, -3, -1, 7, 1],
        [-2, 0, 3, 1, 1, 7],
    ];
    // With -6 in the fourth row the reference is not orthogonal; the third entry
    // must be -3 for the matrix to lie in SO(6).
    ensure!(SO6Matrix::from_rows(reference, 6).is_err(), "reference matrix unexpectedly orthogonal");
    let mut corrected = reference;
    corrected[3][2] = -3;
    let expected = SO6Matrix::from_rows(corrected, 6).map_err(|e| e.to_string())?;
    ensure!(v == expected, "image differs:\n{v}");
    ensure!(v.k() == 6, "denominator 8 = √2^6, got k = {}", v.k());
    let e = |r: usize, c: usize| v.entries()[r][c].to_string().parse::<i64>().unwrap();
    ensure!(e(2, 3) == 3, "entry (3,4) is {}/8, expected 3/8", e(2, 3));
    ensure!((0..6).all(|c| e(0, c) == reference[0][c] && e(5, c) == reference[5][c]), "first/last row");
    within(elapsed, Duration::from_millis(1))?;
    Ok(format!("exact, {elapsed:?}"))
}

#[rustfmt::skip]
const EXPECTED_GENERATOR_IMAGES: [[[i64; 6]; 6]; 15] = [
    [[1,0,0,-1,0,0],[0,1,-1,0,0,0],[0,1,1,0,0,0],[1,0,0,1,0,0],[0,0,0,0,1,-1],[0,0,0,0,1,1]],
    [[1,0,1,0,0,0],[0,1,0,0,-1,0],[-1,0,1,0,0,0],[0,0,0,1,0,1],[0,1,0,0,1,0],[0,0,0,-1,0,1]],
    [[1,-1,0,0,0,0],[1,1,0,0,0,0],[0,0,1,0,0,-1],[0,0,0,1,-1,0],[0,0,0,1,1,0],[0,0,1,0,0,1]],
    [[1,0,1,0,0,0],[0,1,0,0,0,-1],[-1,0,1,0,0,0],[0,0,0,1,-1,0],[0,0,0,1,1,0],[0,1,0,0,0,1]],
    [[1,-1,0,0,0,0],[1,1,0,0,0,0],[0,0,1,0,-1,0],[0,0,0,1,0,1],[0,0,1,0,1,0],[0,0,0,-1,0,1]],
    [[1,-1,0,0,0,0],[1,1,0,0,0,0],[0,0,1,-1,0,0],[0,0,1,1,0,0],[0,0,0,0,1,-1],[0,0,0,0,1,1]],
    [[1,0,0,0,0,-1],[0,1,-1,0,0,0],[0,1,1,0,0,0],[0,0,0,1,-1,0],[0,0,0,1,1,0],[1,0,0,0,0,1]],
    [[1,0,0,0,-1,0],[0,1,-1,0,0,0],[0,1,1,0,0,0],[0,0,0,1,0,1],[1,0,0,0,1,0],[0,0,0,-1,0,1]],
    [[1,0,1,0,0,0],[0,1,0,-1,0,0],[-1,0,1,0,0,0],[0,1,0,1,0,0],[0,0,0,0,1,-1],[0,0,0,0,1,1]],
    [[1,0,0,1,0,0],[0,1,0,0,1,0],[0,0,1,0,0,1],[-1,0,0,1,0,0],[0,-1,0,0,1,0],[0,0,-1,0,0,1]],
    [[1,0,0,-1,0,0],[0,1,0,0,0,1],[0,0,1,0,1,0],[1,0,0,1,0,0],[0,0,-1,0,1,0],[0,-1,0,0,0,1]],
    [[1,0,0,0,0,1],[0,1,0,0,-1,0],[0,0,1,1,0,0],[0,0,-1,1,0,0],[0,1,0,0,1,0],[-1,0,0,0,0,1]],
    [[1,0,0,0,-1,0],[0,1,0,1,0,0],[0,0,1,0,0,1],[0,-1,0,1,0,0],[1,0,0,0,1,0],[0,0,-1,0,0,1]],
    [[1,0,0,0,1,0],[0,1,0,0,0,1],[0,0,1,1,0,0],[0,0,-1,1,0,0],[-1,0,0,0,1,0],[0,-1,0,0,0,1]],
    [[1,0,0,0,0,1],[0,1,0,1,0,0],[0,0,1,0,1,0],[0,-1,0,1,0,0],[0,0,-1,0,1,0],[-1,0,0,0,0,1]],
];

#[rustfmt::skip]
const EXPECTED_CLIFFORD_IMAGES: [(Token, [[i64; 6]; 6]); 5] = [
    (Token::S1, [[0,-1,0,0,0,0],[1,0,0,0,0,0],[0,0,1,0,0,0],[0,0,0,1,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]]),
    (Token::S2, [[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,1,0,0,0],[0,0,0,0,-1,0],[0,0,0,1,0,0],[0,0,0,0,0,1]]),
    (Token::H1, [[0,0,1,0,0,0],[0,-1,0,0,0,0],[1,0,0,0,0,0],[0,0,0,1,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]]),
    (Token::H2, [[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,1,0,0,0],[0,0,0,0,0,1],[0,0,0,0,-1,0],[0,0,0,1,0,0]]),
    (Token::CZ, [[0,-1,0,0,0,0],[1,0,0,0,0,0],[0,0,0,0,0,-1],[0,0,0,0,-1,0],[0,0,0,1,0,0],[0,0,1,0,0,0]]),
];

fn c2_generator_images() -> Outcome {
    let t = Instant::now();
    for (j, rows) in EXPECTED_GENERATOR_IMAGES.iter().enumerate() {
        let expected = SO6Matrix::from_rows(*rows, 1).map_err(|e| e.to_string())?;
        let got = su4_to_so6(generator_matrix(j as u8 + 1)).map_err(|e| e.to_string())?;
        ensure!(got == expected, "G{} image differs:\n{got}", j + 1);
    }
    for (tok, rows) in EXPECTED_CLIFFORD_IMAGES {
        let expected = SO6Matrix::from_rows(rows, 0).map_err(|e| e.to_string())?;
        let got = su4_to_so6(&determinant_one_clifford(tok)).map_err(|e| e.to_string())?;
        ensure!(got == expected, "{tok} image differs:\n{got}");
    }
    let elapsed = t.elapsed();
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("20/20 images exact, {elapsed:?}"))
}

fn c3_relations() -> Outcome {
    let t = Instant::now();
    let mut parts = Vec::new();
    for rel in Relation::ALL {
        let r = sweep(rel);
        ensure!(r.checked > 0, "{rel:?}: nothing checked");
        ensure!(r.held == r.checked, "{rel:?}: {} of {} hold", r.held, r.checked);
        parts.push(format!("{rel:?} {}", r.checked));
    }
    let elapsed = t.elapsed();
    within(elapsed, Duration::from_secs(30))?;
    Ok(format!("{}, {elapsed:?}", parts.join(", ")))
}

fn c4_roundtrip() -> Outcome {
    let t = Instant::now();
    let mut seed = 0u64;
    for n in [1usize, 5, 25, 100] {
        for _ in 0..1000 {
            seed += 1;
            let (u, nf) = random_operator(n, seed);
            let got = synthesize(&u).map_err(|e| format!("seed {seed}: {e}"))?;
            ensure!(got.syllables == nf.syllables, "seed {seed}: syllables differ");
            ensure!(got.evaluate().eq_up_to_phase(&u), "seed {seed}: evaluation differs");
            ensure!(got.evaluate() == u, "seed {seed}: exact evaluation differs");
            let shifted = synthesize(&u.mul_omega_pow((seed % 8) as i64)).map_err(|e| e.to_string())?;
            ensure!(
                shifted.syllables == got.syllables && shifted.tail == got.tail,
                "seed {seed}: result depends on global phase"
            );
            ensure!(synthesize(&u).unwrap() == got, "seed {seed}: not deterministic");
        }
    }
    let elapsed = t.elapsed();
    within(elapsed, Duration::from_secs(120))?;
    Ok(format!("4000 operators, {elapsed:?}"))
}

fn c5_oracle() -> Outcome {
    let t = Instant::now();
    let mut hist = [0usize; 4];
    for seed in 0..200u64 {
        let n = (seed % 4) as usize;
        let (u, _) = random_operator(n, 10_000 + seed);
        let nf = synthesize(&u).map_err(|e| e.to_string())?;
        let d = optimality_oracle(&u, 3).map_err(|e| e.to_string())?;
        ensure!(d == Some(nf.cs_count() as u32), "seed {seed}: oracle {d:?}, synthesized {}", nf.cs_count());
        hist[n] += 1;
    }
    let elapsed = t.elapsed();
    within(elapsed, Duration::from_secs(300))?;
    Ok(format!("200 operators by count {hist:?}, {elapsed:?}"))
}

fn c6_counting() -> Outcome {
    let t = Instant::now();
    let cliffords = BigUint::from(CLIFFORD_GROUP_ORDER);
    ensure!(count_upto(0) == cliffords, "count_upto(0) = {}", count_upto(0));
    let nfa = normal_form_automaton();
    ensure!(nfa.count_words(0) == BigUint::from(1u32), "one empty normal form");
    for n in 1..=8u32 {
        let words = nfa.count_words(n as usize);
        let exact = count_exact(n).map_err(|e| e.to_string())?;
        ensure!(exact == &cliffords * &words, "n = {n}: {exact} vs 92160 x {words}");
    }
    let mut total = cliffords.clone();
    for n in 1..=30u32 {
        total += count_exact(n).unwrap();
        ensure!(count_upto(n) == total, "n = {n}: count_upto does not telescope");
    }
    let elapsed = t.elapsed();
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!("n <= 8 automaton, n <= 30 telescoping, {elapsed:?}"))
}

fn c7_language() -> Outcome {
    let t = Instant::now();
    let nfa = normal_form_automaton();
    let mut classes = std::collections::BTreeMap::new();
    for seed in 0..10_000u64 {
        let n = (seed % 9) as usize;
        let (u, _) = random_operator(n, 20_000 + seed);
        let nf = synthesize(&u).map_err(|e| e.to_string())?;
        let w = SymbolicWord::from_syllables(&nf.syllables);
        ensure!(nfa.accepts(&w), "seed {seed}: `{w}` rejected");
        let lang = classify_pattern_language(&w).map_err(|e| e.to_string())?;
        let geo = geometric_class(&su4_to_so6(&u).unwrap());
        ensure!(lang == geo, "seed {seed}: `{w}` language class {lang}, pattern class {geo}");
        *classes.entry(lang.to_string()).or_insert(0) += 1;
    }
    let elapsed = t.elapsed();
    within(elapsed, Duration::from_secs(120))?;
    Ok(format!("{classes:?}, {elapsed:?}"))
}

fn c8_sandwich() -> Outcome {
    let t = Instant::now();
    let ops: Vec<U4Matrix> =
        (0..10_000u64).map(|seed| random_operator((seed % 101) as usize, 30_000 + seed).0).collect();
    let stats = lde_vs_cscount(&ops).map_err(|e| e.to_string())?;
    ensure!(stats.violations == 0, "{} sandwich violations", stats.violations);
    ensure!(!stats.pairs.is_empty(), "no determinant-one samples");
    let u = adversarial_operator(50);
    let k_prime = synthesize(&u).map_err(|e| e.to_string())?.cs_count() as f64;
    let k = su4_lde(&u).ok_or("adversarial operator has no determinant-one phase")? as f64;
    let ratio = k_prime / k;
    ensure!(ratio >= 1.8, "adversarial k'/k = {k_prime}/{k} = {ratio:.3}");
    let elapsed = t.elapsed();
    within(elapsed, Duration::from_secs(120))?;
    Ok(format!(
        "{} pairs, {} skipped, 0 violations; m = 50 gives k'/k = {k_prime}/{k} = {ratio:.3}, {elapsed:?}",
        stats.pairs.len(),
        stats.skipped
    ))
}

fn c9_scaling() -> Outcome {
    let t = Instant::now();
    let (small, _) = random_operator(1000, 9);
    let (large, _) = random_operator(10_000, 9);
    let t_small = Instant::now();
    let (nf_small, s_small) = synthesize_with_stats(&small).map_err(|e| e.to_string())?;
    let t_small = t_small.elapsed();
    let t_large = Instant::now();
    let (nf_large, s_large) = synthesize_with_stats(&large).map_err(|e| e.to_string())?;
    let t_large = t_large.elapsed();
    ensure!(nf_small.cs_count() == 1000 && nf_large.cs_count() == 10_000, "wrong CS-counts");
    let growth = (s_large.ring_ops as f64 / s_small.ring_ops as f64) / 10.0;
    ensure!((1.0 / 1.3..=1.3).contains(&growth), "ring-op growth {growth:.3} x linear");
    let elapsed = t.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!(
        "ops {} -> {} ({growth:.3} x linear), synth {t_small:?} -> {t_large:?}, total {elapsed:?}",
        s_small.ring_ops, s_large.ring_ops
    ))
}

fn c10_bound() -> Outcome {
    let t = Instant::now();
    let mut parts = Vec::new();
    for eps in [1e-2, 1e-4, 1e-6] {
        let b = epsilon_lower_bound(eps).map_err(|e| e.to_string())?;
        let diff = (b.lower_bound - b.volume_bound).abs();
        ensure!(diff <= 1.0, "eps {eps}: headline {} vs volume {}", b.lower_bound, b.volume_bound);
        parts.push(format!("{eps:e}: {:.4} vs {:.4}", b.lower_bound, b.volume_bound));
    }
    let elapsed = t.elapsed();
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("{}, {elapsed:?}", parts.join("; ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 worked example image", c1_worked_example),
        ("2 generator images", c2_generator_images),
        ("3 relations suite", c3_relations),
        ("4 roundtrip and determinism", c4_roundtrip),
        ("5 optimality vs oracle", c5_oracle),
        ("6 counting identities", c6_counting),
        ("7 normal-form language", c7_language),
        ("8 lde sandwich", c8_sandwich),
        ("9 performance scaling", c9_scaling),
        ("10 lower-bound consistency", c10_bound),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|p| Err(format!("panicked: {:?}", p.downcast_ref::<String>())));
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
