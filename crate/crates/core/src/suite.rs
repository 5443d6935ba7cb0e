//! Verification drivers: every closed form against its oracle, over fixed
//! examples, the pinned manifest, or the exhaustive grid.

use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bsymbol::{w_b, weights_upto, Word};
use crate::codes::{brute_distribution, brute_distributions, Code, DistributionView, EnumerationMode};
use crate::cyclotomy::{
    autocorrelation_probe, circulant_scan, gaussian_period_closed_form, gaussian_sum_with_trace, PeriodSystem, Verdict,
};
use crate::enumerators::{
    closed_form_distribution, closed_form_weight, special_case, special_case_distribution, tuple_classes, u_profile,
};
use crate::gf::FieldDescriptor;
use crate::grid::{codes_over, prime_powers, table1, GridPoint, CONWAY_3_10, GRID_VERSION, VERIFY_GRID};
use crate::hierarchy::{equality_report, ghw_brute, ghw_closed, min_db_closed};
use crate::numtheory::{divisors, gaussian_binomial, gcd};
use crate::report::{Check, CheckStatus, VerificationReport};
use crate::shorten::table2;
use crate::{Error, Limits, Result};

/// Outcome counts of one claim over many instances.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub instances: u64,
    pub failures: u64,
    pub skipped: u64,
    /// The first few failure descriptions, in grid order.
    pub examples: Vec<String>,
}

const KEPT_EXAMPLES: usize = 5;

impl Tally {
    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < KEPT_EXAMPLES {
                self.examples.push(describe());
            }
        }
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    pub fn fail(&mut self, msg: String) {
        self.record(false, || msg);
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        self.failures += other.failures;
        self.skipped += other.skipped;
        for e in other.examples {
            if self.examples.len() < KEPT_EXAMPLES {
                self.examples.push(e);
            }
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Pass iff there were instances and none failed.
    pub fn to_check(&self, name: &str, reference: &str, expected: &str) -> Check {
        let status = if self.failures > 0 {
            CheckStatus::Fail
        } else if self.instances == 0 {
            CheckStatus::Skipped
        } else {
            CheckStatus::Pass
        };
        let mut measured =
            format!("{} instances, {} failures, {} skipped", self.instances, self.failures, self.skipped);
        if !self.examples.is_empty() {
            measured.push_str(&format!("; first: {}", self.examples.join(" | ")));
        }
        Check::new(name, reference, status, expected, measured)
    }
}

fn merge_parts(a: Vec<Tally>, b: Vec<Tally>) -> Vec<Tally> {
    if a.is_empty() {
        return b;
    }
    a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect()
}

/// Errors that mean "outside this check's reach" rather than "wrong".
fn is_out_of_reach(e: &Error) -> bool {
    matches!(
        e,
        Error::EnumerationLimitExceeded(..)
            | Error::SubspaceLimitExceeded(..)
            | Error::HypothesisViolated(..)
            | Error::NoTheoremApplies(..)
            | Error::CaseNotCovered(..)
    )
}

/// Applies a per-code check to every code over every field of order `≤ max_order`.
pub fn over_grid<F>(max_order: u64, parts: usize, check: F) -> Vec<Tally>
where
    F: Fn(&Code) -> Vec<Tally> + Sync,
{
    let per_field: Vec<Vec<Tally>> = prime_powers(max_order)
        .par_iter()
        .map(|&(p, e)| match FieldDescriptor::new(p, e, None) {
            Ok(f) => codes_over(&f).iter().map(&check).fold(Vec::new(), merge_parts),
            Err(err) => {
                let mut t = Tally::default();
                t.fail(format!("F_{p}^{e}: {err}"));
                vec![t; parts]
            }
        })
        .collect();
    let out = per_field.into_iter().fold(Vec::new(), merge_parts);
    if out.is_empty() {
        vec![Tally::default(); parts]
    } else {
        out
    }
}

/// Applies a per-code check to a fixed list of grid points.
pub fn over_points<F>(points: &[GridPoint], parts: usize, check: F) -> Vec<Tally>
where
    F: Fn(&Code) -> Vec<Tally> + Sync,
{
    let per_point: Vec<Vec<Tally>> = points
        .par_iter()
        .map(|g| match g.build() {
            Ok(c) => check(&c),
            Err(err) => {
                let mut t = Tally::default();
                t.fail(format!("{g:?}: {err}"));
                vec![t; parts]
            }
        })
        .collect();
    let out = per_point.into_iter().fold(Vec::new(), merge_parts);
    if out.is_empty() {
        vec![Tally::default(); parts]
    } else {
        out
    }
}

// ---------------------------------------------------------------------------
// fixed examples

/// The length-14 word `(0,0,a,0,0,0,b,0,0,0,0,c,0,a)` over `F_q`.
pub fn worked_word(q: u32, a: u32, b: u32, c: u32) -> Result<Word> {
    let mut x = vec![0u32; 14];
    x[2] = a;
    x[6] = b;
    x[11] = c;
    x[13] = a;
    Word::new(q, x)
}

pub const WORKED_WEIGHTS: [usize; 5] = [4, 8, 11, 13, 14];

/// `w_1..w_5` of the worked example over `F_2` and over `F_5` with a seeded nonzero triple.
pub fn worked_example_checks(seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triple: [u32; 3] = std::array::from_fn(|_| rng.gen_range(1..5));
    [(2u32, [1u32, 1, 1]), (5, triple)]
        .into_iter()
        .map(|(q, [a, b, c])| {
            let name = format!("worked-example weights over F_{q} (a,b,c) = ({a},{b},{c})");
            let got: Result<Vec<usize>> = worked_word(q, a, b, c).and_then(|x| (1..=5).map(|b| w_b(&x, b)).collect());
            match got {
                Ok(w) => Check::verdict(
                    &name,
                    "b-symbol weights of a fixed word",
                    w == WORKED_WEIGHTS,
                    fmt_list(&WORKED_WEIGHTS),
                    fmt_list(&w),
                ),
                Err(e) => Check::error(&name, "b-symbol weights of a fixed word", &e),
            }
        })
        .collect()
}

pub fn table1_checks(limits: &Limits) -> Vec<Check> {
    const REF: &str = "published #U(b,0,N1) table";
    match table1(limits) {
        Ok(rows) => rows
            .iter()
            .map(|r| {
                let g = r.row.code;
                let name = format!("#U({},0,{}) for Q={} q={}", r.row.b, r.row.n1, g.field_order(), g.q());
                Check::verdict(
                    &name,
                    REF,
                    r.pass,
                    r.row.u0,
                    format!("{} (tuples: {}, k0 = {})", r.computed, r.tuple_count, r.k0),
                )
            })
            .collect(),
        Err(e) => vec![Check::error("#U table", REF, &e)],
    }
}

pub fn table2_checks(limits: &Limits) -> Vec<Check> {
    const REF: &str = "published shortened Simplex table";
    match table2(limits) {
        Ok(rows) => rows
            .iter()
            .map(|r| {
                let name = format!("S({},{}) shortened at b = {}", r.row.m, r.row.q, r.row.b);
                let expected = format!("{:?} Griesmer", r.row.params);
                let measured = format!("{:?} {}", r.computed, if r.griesmer { "Griesmer" } else { "not Griesmer" });
                Check::verdict(&name, REF, r.pass, expected, measured)
            })
            .collect(),
        Err(e) => vec![Check::error("shortened Simplex table", REF, &e)],
    }
}

/// `C(3^10, 2)` at `b = 2` over the Conway modulus: the minimum symbol-pair
/// distance by three independent routes, plus the generalized weight and the
/// equality condition.
pub fn pair_distance_checks(limits: &Limits, seed: u64) -> Vec<Check> {
    const REF: &str = "symbol-pair distance of C(3^10, 2)";
    const D2: u64 = 26136;
    let code = match FieldDescriptor::new(3, 10, Some(&CONWAY_3_10)).and_then(|f| Code::new(&f, 1, 2)) {
        Ok(c) => c,
        Err(e) => return vec![Check::error("C(3^10,2) construction", REF, &e)],
    };
    let mut out = Vec::new();
    let u = u_profile(&code, 2, limits);
    match &u {
        Ok(u) => out.push(Check::verdict("#U(2,0,2)", REF, u.counts[0] == 8, 8, u.counts[0])),
        Err(e) => out.push(Check::error("#U(2,0,2)", REF, e)),
    }
    let route1 = special_case_distribution(&code, 2, limits).map(|w| (w.weights.iter().copied().min(), w.weights));
    out.push(match route1 {
        Ok((min, w)) => Check::verdict(
            "d_2 via the two-class weights",
            REF,
            min == Some(D2),
            D2,
            format!("min of {}", fmt_list(&w)),
        ),
        Err(e) => Check::error("d_2 via the two-class weights", REF, &e),
    });
    let route2 = u.and_then(|u| min_db_closed(&code, 2, &u));
    out.push(match route2 {
        Ok((d, tag)) => {
            Check::verdict("d_2 via the minimum-distance closed form", REF, d == D2, D2, format!("{d} ({tag})"))
        }
        Err(e) => Check::error("d_2 via the minimum-distance closed form", REF, &e),
    });
    let route3 = brute_distribution(&code, 2, EnumerationMode::PerClass, DistributionView::BetaIndexed, limits, seed);
    out.push(match route3 {
        Ok(d) => {
            let min = d.min_nonzero().unwrap_or(0) as u64;
            Check::verdict(
                "d_2 by brute force on one codeword per class",
                REF,
                min == D2,
                D2,
                format!("{min} from {}", d.enumerator()),
            )
        }
        Err(e) => Check::error("d_2 by brute force on one codeword per class", REF, &e),
    });
    out.push(match ghw_closed(&code, 2) {
        Ok(g) => Check::verdict("second generalized Hamming weight", REF, g == D2, D2, g),
        Err(e) => Check::error("second generalized Hamming weight", REF, &e),
    });
    out.push(match equality_report(&code, 2, limits) {
        Ok(r) => Check::verdict(
            "d_2 equals the generalized weight, first condition",
            REF,
            r.equal && r.cond1 && r.consistent,
            "equal, first condition",
            format!("equal = {}, condition = {:?}", r.equal, r.condition_fired),
        ),
        Err(e) => Check::error("d_2 equals the generalized weight, first condition", REF, &e),
    });
    out
}

// ---------------------------------------------------------------------------
// per-code checks

/// Closed-form weight against the brute-force weight of `c(α^i)`, every class, every `b ≤ k0`.
pub fn check_oracle(code: &Code, limits: &Limits) -> Vec<Tally> {
    let mut t = Tally::default();
    let id = code.id();
    let k0 = code.k0() as usize;
    let periods = match PeriodSystem::exact(code.field(), code.n1()) {
        Ok(p) => p,
        Err(e) => {
            t.fail(format!("{id}: {e}"));
            return vec![t];
        }
    };
    let mut buf = vec![0u32; code.n()];
    let brute: Vec<Vec<usize>> = (0..code.n1() as u64)
        .map(|i| {
            code.codeword_symbols_log(i, &mut buf);
            weights_upto(&buf, k0)
        })
        .collect();
    for b in 1..=k0 {
        let u = match u_profile(code, b, limits) {
            Ok(u) => u,
            Err(e) if is_out_of_reach(&e) => {
                t.skip();
                continue;
            }
            Err(e) => {
                t.fail(format!("{id} b={b}: {e}"));
                continue;
            }
        };
        for (i, w) in brute.iter().enumerate() {
            match closed_form_weight(code, b, i as u32, &periods, &u) {
                Ok(cf) => {
                    t.record(cf == w[b - 1] as u64, || format!("{id} b={b} class {i}: closed {cf}, brute {}", w[b - 1]))
                }
                Err(e) => t.fail(format!("{id} b={b} class {i}: {e}")),
            }
        }
    }
    vec![t]
}

/// Case-theorem weights against the general closed form and the brute β-indexed enumerator.
pub fn check_cases(code: &Code, limits: &Limits) -> Vec<Tally> {
    let mut t = Tally::default();
    if special_case(code).is_none() {
        return vec![t];
    }
    let id = code.id();
    let top = code.k0().min(code.m().saturating_sub(1)) as usize;
    let class_size = (code.field_order() - 1) / code.n1() as u64;
    for b in 1..=top {
        let sp = match special_case_distribution(code, b, limits) {
            Ok(sp) => sp,
            Err(e) if is_out_of_reach(&e) => {
                t.skip();
                continue;
            }
            Err(e) => {
                t.fail(format!("{id} b={b}: {e}"));
                continue;
            }
        };
        let dist = sp.distribution(code);
        let general = closed_form_distribution(code, b, limits);
        let brute = brute_distribution(code, b, EnumerationMode::Orbits, DistributionView::BetaIndexed, limits, 0);
        match (general, brute) {
            (Ok(g), Ok(br)) => {
                let shape = dist.total() == code.field_order()
                    && dist.entries.iter().all(|(&w, &c)| (c - (w == 0) as u64).is_multiple_of(class_size));
                t.record(dist == g && dist == br && shape, || {
                    format!(
                        "{id} b={b} [{}]: case {}, general {}, brute {}",
                        sp.case.tag(),
                        dist.enumerator(),
                        g.enumerator(),
                        br.enumerator()
                    )
                });
            }
            (Err(e), _) | (_, Err(e)) => t.fail(format!("{id} b={b}: {e}")),
        }
    }
    vec![t]
}

/// Index names of [`check_hierarchy`]'s parts.
pub const HIERARCHY_PARTS: [&str; 5] = ["shape", "dominance", "endpoints", "closed agreement", "equality condition"];

/// Hierarchy shape, dominance and endpoints, closed forms against oracles,
/// and the two-class equality condition as a biconditional.
pub fn check_hierarchy(code: &Code, limits: &Limits) -> Vec<Tally> {
    let mut parts = vec![Tally::default(); HIERARCHY_PARTS.len()];
    let (n, k0, q) = (code.n(), code.k0() as usize, code.q());
    let id = code.id();
    if q.checked_pow(k0 as u32).is_none_or(|v| v > 1 << 16) {
        parts.iter_mut().for_each(Tally::skip);
        return parts;
    }
    let bmax = (k0 + 1).min(n);
    let dists = match brute_distributions(code, bmax, EnumerationMode::Orbits, DistributionView::Distinct, limits, 0) {
        Ok(d) => d,
        Err(e) => {
            parts[0].fail(format!("{id}: {e}"));
            return parts;
        }
    };
    let d: Vec<usize> = dists.iter().map(|x| x.min_nonzero().unwrap_or(0)).collect();
    let increasing = d[..k0].windows(2).all(|w| w[0] < w[1]);
    let plateau = d[k0 - 1] == n && d[k0..].iter().all(|&x| x == n);
    parts[0].record(increasing && plateau, || format!("{id}: d = {}", fmt_list(&d)));

    let ghw: Vec<Option<usize>> = (1..=k0)
        .map(|b| {
            let feasible = gaussian_binomial(k0 as u32, b as u32, q) <= limits.subspaces as u128;
            feasible.then(|| ghw_brute(code, b, limits).ok()).flatten()
        })
        .collect();
    for (b, g) in ghw.iter().enumerate().filter_map(|(i, g)| g.map(|g| (i + 1, g))) {
        parts[1].record(d[b - 1] >= g, || format!("{id} b={b}: d_b = {} < ghw {g}", d[b - 1]));
        if b == 1 || b == k0 {
            parts[2].record(d[b - 1] == g, || format!("{id} b={b}: d_b = {} != ghw {g}", d[b - 1]));
        }
    }
    if ghw.iter().all(Option::is_none) {
        parts[1].skip();
    }

    for b in 1..k0 {
        if let Ok(u) = u_profile(code, b, limits) {
            if let Ok((v, tag)) = min_db_closed(code, b, &u) {
                parts[3]
                    .record(v == d[b - 1] as u64, || format!("{id} b={b}: d_b closed {v} ({tag}), brute {}", d[b - 1]));
            }
        }
        if let (Ok(v), Some(g)) = (ghw_closed(code, b), ghw[b - 1]) {
            parts[3].record(v == g as u64, || format!("{id} b={b}: ghw closed {v}, brute {g}"));
        }
        if code.n1() == 2 && ghw[b - 1].is_some() {
            match equality_report(code, b, limits) {
                Ok(r) => parts[4].record(r.consistent, || {
                    format!("{id} b={b}: equal = {}, conditions = ({}, {})", r.equal, r.cond1, r.cond2)
                }),
                Err(e) if is_out_of_reach(&e) => parts[4].skip(),
                Err(e) => parts[4].fail(format!("{id} b={b}: {e}")),
            }
        }
    }
    parts
}

/// Index names of [`check_tuple_classes`]'s parts.
pub const TUPLE_CLASS_PARTS: [&str; 6] = ["partition", "sum rule", "b = 1", "b = k0", "bounds and sharp case", "chain"];

/// Every property of the `#U` invariant, for every `b ≤ k0`.
pub fn check_tuple_classes(code: &Code, limits: &Limits) -> Vec<Tally> {
    let mut parts = vec![Tally::default(); TUPLE_CLASS_PARTS.len()];
    let id = code.id();
    let (q, k0, n1) = (code.q(), code.k0() as usize, code.n1() as u64);
    let big_q = code.field_order();
    let mut prev: Option<Vec<Option<u32>>> = None;
    for b in 1..=k0 {
        let (classes, u) = match tuple_classes(code, b, limits).and_then(|c| Ok((c, u_profile(code, b, limits)?))) {
            Ok(x) => x,
            Err(e) if is_out_of_reach(&e) => {
                parts.iter_mut().for_each(Tally::skip);
                break;
            }
            Err(e) => {
                parts[0].fail(format!("{id} b={b}: {e}"));
                break;
            }
        };
        let qb = q.pow(b as u32);
        parts[0].record(classes[0].is_none() && classes[1..].iter().all(Option::is_some), || {
            format!("{id} b={b}: a nonzero tuple maps to 0")
        });
        parts[1].record(u.total() == qb - 1 && u.degenerate == 0, || format!("{id} b={b}: total {}", u.total()));
        if b == 1 {
            let ok = u.counts[0] == q - 1 && u.counts[1..].iter().all(|&c| c == 0);
            parts[2].record(ok, || format!("{id}: #U(1,·) = {}", fmt_list(&u.counts)));
        }
        if b == k0 {
            // C_i ∩ F_{q^k0}^*: the subgroup meets only classes divisible by g
            let sub = qb - 1;
            let g = gcd((big_q - 1) / sub, n1);
            let ok = u
                .counts
                .iter()
                .enumerate()
                .all(|(i, &c)| c == if (i as u64).is_multiple_of(g) { sub * g / n1 } else { 0 });
            let uniform_when_full = k0 as u32 != code.m() || u.is_uniform();
            parts[3].record(ok && uniform_when_full, || format!("{id}: #U(k0,·) = {}", fmt_list(&u.counts)));
        }
        let bound = (big_q - 1) / n1;
        let mut ok = u.counts[0] >= b as u64 * (q - 1) && u.counts.iter().all(|&c| c <= bound);
        if (q - 1) * b as u64 * n1 == big_q - 1 {
            ok &= u.counts[0] == b as u64 * (q - 1);
        }
        parts[4].record(ok, || format!("{id} b={b}: #U = {}", fmt_list(&u.counts)));
        if let Some(p) = &prev {
            parts[5].record(classes[..p.len()] == p[..], || format!("{id} b={b}: embedding changes a class"));
        }
        prev = Some(classes);
    }
    parts
}

/// Index names of [`check_periods`]'s parts.
pub const PERIOD_PARTS: [&str; 6] = [
    "sum rule",
    "not all equal",
    "closed forms",
    "Fourier relation",
    "printed quadratic identity",
    "shifted quadratic identity",
];

/// Gaussian-period identities of every order `k | Q - 1` over one field.
///
/// The last two parts probe two candidate quadratic identities and are
/// informational.
pub fn check_periods(field: &FieldDescriptor, fourier_max: u64, tol: f64) -> Vec<Tally> {
    let mut parts = vec![Tally::default(); PERIOD_PARTS.len()];
    let (p, e) = (field.p(), field.e());
    let big_q = field.order() as u64;
    let g = big_q - 1;
    let tr = field.absolute_trace_table();
    let gauss: Option<Vec<Complex64>> = (big_q <= fourier_max)
        .then(|| (0..g).into_par_iter().map(|j| gaussian_sum_with_trace(field, &tr, j).0).collect());
    for k in divisors(g) {
        let k32 = k as u32;
        let ps = match PeriodSystem::exact_with_trace(field, &tr, k32) {
            Ok(ps) => ps,
            Err(err) => {
                parts[0].fail(format!("Q={big_q} k={k}: {err}"));
                continue;
            }
        };
        let eta = ps.periods().expect("exact system");
        let sum = ps.exact_sum().and_then(|s| s.as_integer());
        parts[0].record(sum == Some(-1), || format!("Q={big_q} k={k}: sum {sum:?}"));
        if k >= 2 {
            parts[1].record(eta.iter().any(|x| x != &eta[0]), || format!("Q={big_q} k={k}: all periods equal"));
        }
        for i in 0..k32 {
            if let Ok(cf) = gaussian_period_closed_form(p, 1, e, k32, i) {
                parts[2].record(cf.value.matches(&eta[i as usize]), || {
                    format!("Q={big_q} k={k} i={i} [{}]: {:?}", cf.case.tag(), cf.value)
                });
            }
        }
        if let Some(gs) = &gauss {
            let step = g / k;
            let worst = (0..k)
                .map(|i| {
                    let mut acc = Complex64::new(-1.0, 0.0);
                    for j in 1..k {
                        let phase = -std::f64::consts::TAU * ((i * j) % k) as f64 / k as f64;
                        acc += Complex64::from_polar(1.0, phase) * gs[(j * step) as usize];
                    }
                    (acc / k as f64 - ps.approx()[i as usize]).norm()
                })
                .fold(0.0, f64::max);
            parts[3].record(worst <= tol, || format!("Q={big_q} k={k}: deviation {worst:e}"));
        }
        // exact products in Z[ζ_p] cost O(k²p²)
        if big_q <= fourier_max && (k * p as u64).pow(2) <= 1 << 20 {
            match autocorrelation_probe(field, k32) {
                Ok(probe) => {
                    parts[4].record(probe.printed_holds(), || format!("Q={big_q} k={k}"));
                    parts[5].record(probe.shifted_holds(), || format!("Q={big_q} k={k}"));
                }
                Err(err) => parts[4].fail(format!("Q={big_q} k={k}: {err}")),
            }
        }
    }
    parts
}

/// [`check_periods`] over every field of order `≤ max_order`.
pub fn periods_over_grid(max_order: u64, fourier_max: u64, tol: f64) -> Vec<Tally> {
    let per_field: Vec<Vec<Tally>> = prime_powers(max_order)
        .par_iter()
        .map(|&(p, e)| match FieldDescriptor::new(p, e, None) {
            Ok(f) => check_periods(&f, fourier_max, tol),
            Err(err) => {
                let mut t = Tally::default();
                t.fail(format!("F_{p}^{e}: {err}"));
                vec![t; PERIOD_PARTS.len()]
            }
        })
        .collect();
    per_field.into_iter().fold(Vec::new(), merge_parts)
}

/// Circulant invertibility scan, reported without asserting the open conjecture.
pub fn conjecture_check(max_order: u64) -> Check {
    const NAME: &str = "circulant invertibility scan";
    const REF: &str = "open conjecture: the period circulant is invertible";
    match circulant_scan(max_order) {
        Ok(rows) => {
            let singular = rows.iter().filter(|r| r.verdict == Verdict::Singular).count();
            let inconclusive = rows.iter().filter(|r| r.verdict == Verdict::Inconclusive).count();
            let min = rows.iter().map(|r| r.min_abs_eval).fold(f64::INFINITY, f64::min);
            let status = if singular > 0 {
                CheckStatus::Fail
            } else if inconclusive > 0 {
                CheckStatus::Inconclusive
            } else {
                CheckStatus::Pass
            };
            let measured = format!(
                "{} systems up to Q = {max_order}: {singular} singular, {inconclusive} inconclusive, min |f| = {min}",
                rows.len()
            );
            Check::new(NAME, REF, status, "no singular system", measured).informational()
        }
        Err(e) => Check::error(NAME, REF, &e).informational(),
    }
}

// ---------------------------------------------------------------------------
// the verify driver

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyOptions {
    pub extended: bool,
    /// Largest field order of the exhaustive grid (extended runs only).
    pub max_order: u64,
    /// Largest field order of the period suite and the circulant scan.
    pub period_max_order: u64,
    /// Largest field order of the Fourier and autocorrelation checks.
    pub fourier_max_order: u64,
    pub tolerance: f64,
    pub seed: u64,
    pub limits: Limits,
}

impl VerifyOptions {
    pub fn quick() -> Self {
        VerifyOptions {
            extended: false,
            max_order: 1 << 8,
            period_max_order: 1 << 8,
            fourier_max_order: 1 << 8,
            tolerance: 1e-6,
            seed: 0,
            limits: Limits::default(),
        }
    }

    pub fn extended() -> Self {
        VerifyOptions {
            extended: true,
            max_order: 1 << 12,
            period_max_order: 1 << 12,
            fourier_max_order: 1 << 10,
            ..Self::quick()
        }
    }
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self::quick()
    }
}

fn push_parts(report: &mut VerificationReport, prefix: &str, names: &[&str], reference: &str, tallies: &[Tally]) {
    for (name, t) in names.iter().zip(tallies) {
        report.push(t.to_check(&format!("{prefix}: {name}"), reference, "no failures"));
    }
}

/// Runs every check; the extended run adds the exhaustive grid and `C(3^10, 2)`.
pub fn verify(opts: &VerifyOptions) -> VerificationReport {
    let config = serde_json::json!({ "options": opts, "grid_version": GRID_VERSION, "manifest": VERIFY_GRID });
    let mut report = VerificationReport::new(if opts.extended { "verify-extended" } else { "verify" }, config);
    let limits = opts.limits;
    report.extend(worked_example_checks(opts.seed));
    report.extend(table1_checks(&limits));
    report.extend(table2_checks(&limits));

    let scope = if opts.extended { format!("grid Q <= {}", opts.max_order) } else { "manifest".to_string() };
    let run = |check: &(dyn Fn(&Code) -> Vec<Tally> + Sync), parts: usize| {
        let mut t = over_points(&VERIFY_GRID, parts, check);
        if opts.extended {
            t = merge_parts(t, over_grid(opts.max_order, parts, check));
        }
        t
    };
    let oracle = run(&|c| check_oracle(c, &limits), 1);
    report.push(oracle[0].to_check(
        &format!("closed-form weights vs brute force ({scope})"),
        "core weight formula",
        "exact agreement",
    ));
    let cases = run(&|c| check_cases(c, &limits), 1);
    report.push(cases[0].to_check(
        &format!("case weights vs general form ({scope})"),
        "case enumerators",
        "exact agreement",
    ));
    let hier = run(&|c| check_hierarchy(c, &limits), HIERARCHY_PARTS.len());
    push_parts(&mut report, &format!("hierarchy ({scope})"), &HIERARCHY_PARTS, "weight hierarchies", &hier);
    let tuples = run(&|c| check_tuple_classes(c, &limits), TUPLE_CLASS_PARTS.len());
    push_parts(&mut report, &format!("#U invariant ({scope})"), &TUPLE_CLASS_PARTS, "#U properties", &tuples);

    let periods = periods_over_grid(opts.period_max_order, opts.fourier_max_order, opts.tolerance);
    let scope = format!("Q <= {}", opts.period_max_order);
    push_parts(
        &mut report,
        &format!("Gaussian periods ({scope})"),
        &PERIOD_PARTS[..4],
        "Gaussian periods",
        &periods[..4],
    );
    for (name, t) in PERIOD_PARTS[4..].iter().zip(&periods[4..]) {
        let check =
            t.to_check(&format!("Gaussian periods ({scope}): {name}"), "quadratic period identity probe", "holds");
        report.push(check.informational());
    }
    report.push(conjecture_check(opts.period_max_order));

    if opts.extended {
        let start = Instant::now();
        report.extend(pair_distance_checks(&limits, opts.seed));
        let secs = start.elapsed().as_secs_f64();
        report.push(
            Check::verdict("C(3^10,2) runtime", "performance", secs < 60.0, "< 60 s", format!("{secs:.3} s"))
                .informational(),
        );
    }
    report
}

fn fmt_list<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
