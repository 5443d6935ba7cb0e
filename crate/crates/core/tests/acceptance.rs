//! Acceptance criteria, one pass/fail line each.
//!
//! Runs without the libtest harness so every line is printed even when all
//! criteria pass; exits non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bsymbol::bsymbol::{w_b, Word};
use bsymbol::grid::{table1, DEFAULT_MAX_ORDER};
use bsymbol::report::CheckStatus;
use bsymbol::shorten::{griesmer_sum, table2};
use bsymbol::suite::{
    check_cases, check_hierarchy, check_oracle, check_tuple_classes, conjecture_check, over_grid, pair_distance_checks,
    periods_over_grid, Tally, HIERARCHY_PARTS, PERIOD_PARTS, TUPLE_CLASS_PARTS,
};
use bsymbol::Limits;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, budget_secs: f64) -> Result<(), String> {
    ensure(elapsed.as_secs_f64() < budget_secs, || {
        format!("took {:.2} s, budget {budget_secs} s", elapsed.as_secs_f64())
    })
}

fn all_pass(names: &[&str], tallies: &[Tally]) -> Result<String, String> {
    let mut summary = Vec::new();
    for (name, t) in names.iter().zip(tallies) {
        ensure(t.passed(), || format!("{name}: {} failures, first: {:?}", t.failures, t.examples))?;
        summary.push(format!("{name} {}/{}", t.instances - t.failures, t.instances));
    }
    Ok(summary.join(", "))
}

fn word(q: u32, a: u32, b: u32, c: u32) -> Word {
    Word::new(q, vec![0, 0, a, 0, 0, 0, b, 0, 0, 0, 0, c, 0, a]).unwrap()
}

fn criterion_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let triple: [u32; 3] = std::array::from_fn(|_| rng.gen_range(1..5));
    let words = [word(2, 1, 1, 1), word(5, triple[0], triple[1], triple[2])];
    let start = Instant::now();
    let weights: Vec<Vec<usize>> = words.iter().map(|x| (1..=5).map(|b| w_b(x, b).unwrap()).collect()).collect();
    let elapsed = start.elapsed();
    for w in &weights {
        ensure(w == &[4, 8, 11, 13, 14], || format!("weights {w:?}"))?;
    }
    within(elapsed, 1e-3)?;
    Ok(format!("w_1..w_5 = 4,8,11,13,14 over F_2 and F_5 {triple:?} in {} us", elapsed.as_micros()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let rows = table1(&Limits::default()).map_err(|e| e.to_string())?;
    within(start.elapsed(), 10.0)?;
    ensure(rows.len() == 12, || format!("{} rows", rows.len()))?;
    for r in &rows {
        ensure(r.pass, || format!("row {:?}: computed {}", r.row, r.computed))?;
    }
    Ok(format!("12/12 rows, first CSV row {}", rows[0].csv_record().join(",")))
}

fn criterion_3() -> Outcome {
    let limits = Limits::default();
    let t = over_grid(DEFAULT_MAX_ORDER, 1, |c| check_oracle(c, &limits));
    ensure(t[0].skipped == 0, || format!("{} (code, b) pairs skipped", t[0].skipped))?;
    all_pass(&["(code, b) pairs with every class exact"], &t)
}

fn criterion_4() -> Outcome {
    let limits = Limits::default();
    let t = over_grid(DEFAULT_MAX_ORDER, 1, |c| check_cases(c, &limits));
    ensure(t[0].instances > 0, || "no instance satisfied a case hypothesis".into())?;
    all_pass(&["case-theorem (code, b) pairs"], &t)
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let checks = pair_distance_checks(&Limits::default(), 0);
    let elapsed = start.elapsed();
    for c in &checks {
        ensure(c.status == CheckStatus::Pass, || {
            format!("{}: expected {}, measured {}", c.name, c.expected, c.measured)
        })?;
    }
    ensure(checks.len() >= 4, || "missing routes".into())?;
    within(elapsed, 60.0)?;
    Ok(format!("d_2 = 26136 by all three routes, #U(2,0,2) = 8, in {:.1} s", elapsed.as_secs_f64()))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let rows = table2(&Limits::default()).map_err(|e| e.to_string())?;
    within(start.elapsed(), 30.0)?;
    ensure(rows.len() == 15, || format!("{} rows", rows.len()))?;
    for r in &rows {
        ensure(r.pass, || format!("S({},{}) b={}: {:?} vs {:?}", r.row.m, r.row.q, r.row.b, r.computed, r.row.params))?;
        let [n, k, d] = r.computed;
        ensure(griesmer_sum(k as u32, d as u64, r.row.q) == n as u64, || format!("{:?} not Griesmer", r.computed))?;
    }
    Ok(format!("15/15 rows Griesmer in {:.1} s", start.elapsed().as_secs_f64()))
}

fn criterion_7() -> Outcome {
    let limits = Limits::default();
    let t = over_grid(DEFAULT_MAX_ORDER, HIERARCHY_PARTS.len(), |c| check_hierarchy(c, &limits));
    ensure(t[1].instances > 0 && t[2].instances > 0, || "no generalized weight was feasible".into())?;
    all_pass(&HIERARCHY_PARTS, &t)
}

fn criterion_8() -> Outcome {
    let t = periods_over_grid(DEFAULT_MAX_ORDER, 1 << 10, 1e-6);
    let asserted = all_pass(&PERIOD_PARTS[..4], &t[..4])?;
    let probe = format!(
        "probe: printed identity {}/{}, shifted identity {}/{}",
        t[4].instances - t[4].failures,
        t[4].instances,
        t[5].instances - t[5].failures,
        t[5].instances
    );
    Ok(format!("{asserted}; {probe}"))
}

fn criterion_9() -> Outcome {
    // the conjecture is open: the scan is reported, never asserted
    let c = conjecture_check(DEFAULT_MAX_ORDER);
    Ok(format!("{} ({})", c.measured, c.status.as_str()))
}

fn criterion_10() -> Outcome {
    let limits = Limits::default();
    let t = over_grid(DEFAULT_MAX_ORDER, TUPLE_CLASS_PARTS.len(), |c| check_tuple_classes(c, &limits));
    all_pass(&TUPLE_CLASS_PARTS, &t)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("worked-example b-symbol weights", criterion_1),
        ("#U table reproduction", criterion_2),
        ("closed form vs brute force, Q <= 2^12", criterion_3),
        ("case theorems vs general form", criterion_4),
        ("C(3^10,2) symbol-pair distance", criterion_5),
        ("shortened Simplex table", criterion_6),
        ("hierarchy shape, dominance, endpoints", criterion_7),
        ("Gaussian-period suite", criterion_8),
        ("circulant invertibility scan", criterion_9),
        ("#U invariant properties", criterion_10),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = (i + 1).to_string();
        if !filter.is_empty() && !filter.iter().any(|f| f == &id) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS {name} [{secs:.2} s]: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id:>2} FAIL {name} [{secs:.2} s]: {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} acceptance criteria failed");
        ExitCode::FAILURE
    }
}
