//! Acceptance criteria. All arithmetic is exact, so every comparison below is
//! an exact equality or strict inequality; there is no tolerance to tune.
//!
//! Runs as a plain binary and prints one PASS/FAIL line per criterion.

mod common;

use std::cmp::Ordering;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use grossone::expr::{evaluate, evaluate_str, parse, ExprError};
use grossone::{
    carpet_snapshot, distinguish, is_sequentially_countable, sequential_reach, set_measure_add,
    set_measure_remove, set_measure_tuples, sponge_snapshot, ExpMeasure, Fractal,
    FractalSnapshot, GrossLinear, GrossValue, Notation, Rational,
};
use num_bigint::BigInt;
use rand::Rng;

use common::q;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn g(a: i64, b: i64) -> GrossLinear {
    GrossLinear::new(a, b)
}

fn f(b: i64) -> GrossLinear {
    GrossLinear::finite(b)
}

fn exp(n: i64, d: i64, a: i64, b: i64) -> GrossValue {
    GrossValue::exp(&q(n, d), &g(a, b)).unwrap()
}

fn ac1_carpet_at_infinity() -> Check {
    let a = carpet_snapshot(f(1), g(1, 0)).map_err(|e| e.to_string())?;
    let text = a.total_measure().to_string();
    ensure(text == "(8/9)^(①-1)", || format!("A(1,①) = {text}"))?;
    let b = carpet_snapshot(f(1), g(1, -9)).map_err(|e| e.to_string())?;
    let text = b.total_measure().to_string();
    ensure(text == "(8/9)^(①-10)", || format!("A(1,①-9) = {text}"))
}

fn ac2_offset_carpet() -> Check {
    let a = carpet_snapshot(f(2), g(1, 0)).map_err(|e| e.to_string())?;
    ensure(a.total_measure() == &exp(8, 9, 1, 0), || {
        format!("A(2,①) = {}", a.total_measure())
    })?;
    let b = carpet_snapshot(f(2), g(1, -9)).map_err(|e| e.to_string())?;
    ensure(b.total_measure() == &exp(8, 9, 1, -9), || {
        format!("A(2,①-9) = {}", b.total_measure())
    })
}

fn ac3_sponge_at_infinity() -> Check {
    let a = sponge_snapshot(f(1), g(1, 0)).map_err(|e| e.to_string())?;
    ensure(a.total_measure() == &exp(20, 27, 1, -1), || {
        format!("V(1,①) = {}", a.total_measure())
    })?;
    let b = sponge_snapshot(f(1), g(1, -1)).map_err(|e| e.to_string())?;
    ensure(b.total_measure() == &exp(20, 27, 1, -2), || {
        format!("V(1,①-1) = {}", b.total_measure())
    })
}

fn ac4_countability() -> Check {
    let boxes = exp(8, 1, 1, -1);
    let countable = is_sequentially_countable(&boxes).map_err(|e| e.to_string())?;
    ensure(!countable, || "8^(①-1) reported countable".into())?;
    let ord = boxes.cmp(&GrossValue::grossone());
    ensure(ord == Ordering::Greater, || format!("8^(①-1) vs ①: {ord:?}"))
}

fn ac5_reachability() -> Check {
    let r1 = sequential_reach(&f(1)).map_err(|e| e.to_string())?;
    ensure(r1 == g(1, 0), || format!("reach(1) = {r1}"))?;
    let r3 = sequential_reach(&f(3)).map_err(|e| e.to_string())?;
    ensure(r3 == g(1, 2), || format!("reach(3) = {r3}"))
}

fn ac6_set_measures() -> Check {
    ensure(set_measure_remove(1) == GrossValue::from(g(1, -1)), || {
        format!("remove(1) = {}", set_measure_remove(1))
    })?;
    ensure(set_measure_add(1) == GrossValue::from(g(1, 1)), || {
        format!("add(1) = {}", set_measure_add(1))
    })?;
    let cube = GrossValue::grossone()
        .checked_mul(&GrossValue::grossone())
        .and_then(|x| x.checked_mul(&GrossValue::grossone()))
        .unwrap();
    ensure(set_measure_tuples(3) == cube, || {
        format!("tuples(3) = {}", set_measure_tuples(3))
    })
}

fn ac7_classical_recovery() -> Check {
    let start = Instant::now();
    let s = carpet_snapshot(f(1), g(1, 0)).map_err(|e| e.to_string())?;
    let eps = q(1, 1_000_000);
    let mut prev: Option<Rational> = None;
    let mut below = false;
    for m in 1..=200i64 {
        let v = s
            .finite_approximation(&BigInt::from(m))
            .map_err(|e| e.to_string())?
            .measure;
        if let Some(p) = &prev {
            ensure(&v < p, || format!("not strictly decreasing at m = {m}"))?;
        }
        below |= v < eps;
        prev = Some(v);
    }
    ensure(below, || "never fell below 1e-6".into())?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(2), || format!("took {elapsed:?}"))
}

fn ac8_composition_law() -> Check {
    let mut rng = common::rng(8);
    let mut infinite = 0;
    for i in 0..1000 {
        let (k, n) = common::fractal_range(&mut rng);
        if !n.is_finite() {
            infinite += 1;
        }
        let fractal = Fractal::ALL[rng.random_range(0..3)];
        let s = FractalSnapshot::new(fractal, k.clone(), n.clone())
            .map_err(|e| format!("sample {i} ({k}, {n}): {e}"))?;
        let size = s.piece_size().as_measure().ok_or("size is not a measure")?;
        let count = s.piece_count().as_measure().ok_or("count is not a measure")?;
        let recomposed = GrossValue::from_measure(size.pow(&fractal.dim().into()).mul(&count))
            .map_err(|e| e.to_string())?;
        let closed = GrossValue::exp(&fractal.ratio(), &fractal.subdivisions(&k, &n))
            .map_err(|e| e.to_string())?;
        ensure(recomposed == closed && s.total_measure() == &closed, || {
            format!("{fractal} ({k}, {n}): {recomposed} vs {closed}")
        })?;
    }
    ensure(infinite > 100, || format!("only {infinite} infinite samples"))
}

fn ac9_order_laws() -> Check {
    let mut rng = common::rng(9);
    for i in 0..10_000 {
        let a = common::value(&mut rng);
        let b = common::value(&mut rng);
        let relations = [a < b, a == b, a > b];
        ensure(relations.iter().filter(|&&x| x).count() == 1, || {
            format!("trichotomy fails on pair {i}: {a}, {b}")
        })?;
        ensure(a.cmp(&b) == b.cmp(&a).reverse(), || {
            format!("antisymmetry fails on {a}, {b}")
        })?;
    }
    for i in 0..10_000 {
        let a = common::value(&mut rng);
        let b = common::value(&mut rng);
        let c = common::value(&mut rng);
        for (x, y, z) in [(&a, &b, &c), (&a, &c, &b), (&b, &a, &c), (&b, &c, &a), (&c, &a, &b), (&c, &b, &a)] {
            if x <= y && y <= z {
                ensure(x <= z, || format!("transitivity fails on triple {i}: {x}, {y}, {z}"))?;
            }
        }
    }
    for i in 0..10_000 {
        // a + b must be defined: same scale for measures, anything for polynomials
        let (a, b) = if rng.random_bool(0.5) {
            (
                GrossValue::Poly(common::poly(&mut rng)),
                GrossValue::Poly(common::positive_poly(&mut rng)),
            )
        } else {
            let m = common::measure(&mut rng);
            let scaled = m.mul(&ExpMeasure::from_rational(&common::positive_rational(&mut rng)).unwrap());
            (
                GrossValue::from_measure(m).unwrap(),
                GrossValue::from_measure(scaled).unwrap(),
            )
        };
        let sum = a.checked_add(&b).map_err(|e| format!("sample {i}: {e}"))?;
        ensure(sum > a, || format!("{a} + {b} is not greater than {a}"))?;
    }
    Ok(())
}

fn ac10_substitution_homomorphism() -> Check {
    let mut rng = common::rng(10);
    for i in 0..1000 {
        let (x, y) = if rng.random_bool(0.5) {
            (
                GrossValue::Poly(common::poly(&mut rng)),
                GrossValue::Poly(common::poly(&mut rng)),
            )
        } else {
            (
                GrossValue::from_measure(common::measure(&mut rng)).unwrap(),
                GrossValue::from_measure(common::measure(&mut rng)).unwrap(),
            )
        };
        let m = BigInt::from(rng.random_range(1..=30));
        let xy = x.checked_mul(&y).map_err(|e| format!("pair {i}: {e}"))?;
        let lhs = xy.eval_at(&m).map_err(|e| e.to_string())?;
        let rhs = x.eval_at(&m).map_err(|e| e.to_string())? * y.eval_at(&m).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("pair {i}: ({x})·({y}) at {m}"))?;
    }
    Ok(())
}

fn ac11_parser_round_trip_and_fuzz() -> Check {
    let mut rng = common::rng(11);
    for _ in 0..1000 {
        let v = common::value(&mut rng);
        for notation in [Notation::Unicode, Notation::Ascii] {
            let text = v.display(notation);
            let back = evaluate_str(&text).map_err(|e| format!("{text}: {e}"))?;
            ensure(back.cmp(&v) == Ordering::Equal, || format!("{text} came back as {back}"))?;
        }
    }
    let mut syntax_errors = 0;
    for i in 0..10_000 {
        let len = rng.random_range(0..=40);
        let bytes: Vec<u8> = (0..len).map(|_| rng.random()).collect();
        let input = String::from_utf8_lossy(&bytes).into_owned();
        let outcome = catch_unwind(AssertUnwindSafe(|| match parse(&input) {
            Ok(e) => evaluate(&e).err(),
            Err(e) => Some(ExprError::Syntax(e)),
        }))
        .map_err(|_| format!("panic on fuzz input {i}: {input:?}"))?;
        if let Some(ExprError::Syntax(e)) = outcome {
            syntax_errors += 1;
            ensure(e.offset <= input.len() && input.is_char_boundary(e.offset), || {
                format!("bad offset {} for {input:?}", e.offset)
            })?;
            ensure(!e.expected.is_empty(), || format!("empty expectation for {input:?}"))?;
        }
    }
    ensure(syntax_errors > 9_000, || format!("only {syntax_errors} syntax errors"))
}

fn ac12_distinguishability() -> Check {
    let a = carpet_snapshot(f(1), g(1, 0)).map_err(|e| e.to_string())?;
    let b = carpet_snapshot(f(2), g(1, 0)).map_err(|e| e.to_string())?;
    let (ord, ratio) = distinguish(&a, &b).map_err(|e| e.to_string())?;
    ensure(ord == Ordering::Greater, || format!("ordering {ord:?}"))?;
    ensure(ratio == GrossValue::rational(q(9, 8)), || format!("ratio {ratio}"))?;
    let m = BigInt::from(5);
    let at_a = a.finite_approximation(&m).map_err(|e| e.to_string())?.measure;
    let at_b = b.finite_approximation(&m).map_err(|e| e.to_string())?.measure;
    ensure(at_a / at_b == q(9, 8), || "eval oracle at m = 5 disagrees".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("AC1  carpet area at n=① and n=①-9", ac1_carpet_at_infinity),
        ("AC2  carpet area with offset k=2", ac2_offset_carpet),
        ("AC3  sponge volume at n=① and n=①-1", ac3_sponge_at_infinity),
        ("AC4  8^(①-1) boxes are not sequentially countable", ac4_countability),
        ("AC5  sequential reach from 1 and 3", ac5_reachability),
        ("AC6  set measures ①-1, ①+1, ①^3", ac6_set_measures),
        ("AC7  finite approximations decrease below 1e-6 (m=1..200, <2s)", ac7_classical_recovery),
        ("AC8  composition law on 1000 random (k, n)", ac8_composition_law),
        ("AC9  trichotomy, transitivity, monotonicity on 10000 samples", ac9_order_laws),
        ("AC10 substitution homomorphism on 1000 pairs", ac10_substitution_homomorphism),
        ("AC11 round trip on 1000 values, 10000 fuzz inputs", ac11_parser_round_trip_and_fuzz),
        ("AC12 carpet(1,①) vs carpet(2,①): greater, ratio 9/8", ac12_distinguishability),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let result = catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        match result {
            Ok(()) => println!("PASS  {name}  ({took:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}  ({took:.2?}): {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
