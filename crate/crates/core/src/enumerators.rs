//! The `#U(b, i, N1)` tuple-class counts and the closed-form b-symbol weights built on them.
//!
//! For `β ∈ C_i^{(N1,Q)}`,
//! `w_b(c(β)) = ((q^b-1)(Q-1) - N1 Σ_k #U(b,k,N1) η_{i+k}) / (q^b N)`,
//! valid for `1 <= b <= k0`. The case formulas for `N1 ∈ {1, 2, 3, 4}` and the
//! semi-primitive case replace the periods by their known values.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::codes::{Code, CodeKind, DistributionView, WeightDistribution};
use crate::cyclotomy::{circulant_invertibility, default_tolerance, semi_primitive, PeriodSystem, Verdict};
use crate::error::{Error, Result};
use crate::numtheory::exact_sqrt;
use crate::Limits;

/// Class counts of the nonzero tuples `(u_1, …, u_b) ∈ F_q^b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UProfile {
    pub b: usize,
    #[serde(rename = "N1")]
    pub n1: u32,
    pub q: u64,
    pub k0: u32,
    /// `#U(b, i, N1)`: nonzero tuples whose sum `Σ u_j θ^{j-1}` lies in `C_i`.
    pub counts: Vec<u64>,
    /// Distinct nonzero sums per class; equals `counts` when `b <= k0`.
    pub image_counts: Vec<u64>,
    /// Nonzero tuples with a zero sum; only possible when `b > k0`.
    pub degenerate: u64,
}

impl UProfile {
    /// Whether every class holds the same number of tuples.
    pub fn is_uniform(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] == w[1])
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `#U(b, i, N1)` with `i` reduced mod `N1`.
    pub fn count(&self, i: i64) -> u64 {
        self.counts[i.rem_euclid(self.n1 as i64) as usize]
    }
}

fn check_irreducible(code: &Code) -> Result<()> {
    match code.kind() {
        CodeKind::Irreducible => Ok(()),
        CodeKind::ProjectiveSimplex => Err(Error::CaseNotCovered(format!("{} is not of the form C(Q, N)", code.id()))),
    }
}

/// `Σ_j u_j θ^j` for every tuple, indexed by `Σ_j u_j q^j`.
pub fn tuple_sums(code: &Code, b: usize, limits: &Limits) -> Result<Vec<u32>> {
    check_irreducible(code)?;
    if b == 0 || b > code.n() {
        return Err(Error::BOutOfRange(b, code.n()));
    }
    let q = code.q() as usize;
    let total = (q as u128).checked_pow(b as u32).unwrap_or(u128::MAX);
    if total > limits.enumeration as u128 {
        return Err(Error::EnumerationLimitExceeded(total, limits.enumeration as u128));
    }
    let f = code.field();
    let emb: Vec<u32> = (0..q as u32).map(|u| code.subfield().embed(f, u)).collect();
    let mut table = vec![0u32; total as usize];
    let mut size = 1;
    for j in 0..b {
        let theta_j = f.exp(j as u64 * code.theta_log());
        let (head, tail) = table.split_at_mut(size);
        tail[..size * (q - 1)].par_chunks_mut(size).enumerate().for_each(|(v, chunk)| {
            let add = f.mul(emb[v + 1], theta_j);
            for (c, &h) in chunk.iter_mut().zip(head.iter()) {
                *c = f.add(h, add);
            }
        });
        size *= q;
    }
    Ok(table)
}

/// Class index `k_(u)` of each tuple sum, `None` for the zero sum.
pub fn tuple_classes(code: &Code, b: usize, limits: &Limits) -> Result<Vec<Option<u32>>> {
    let sums = tuple_sums(code, b, limits)?;
    let f = code.field();
    let n1 = code.n1();
    Ok(sums.par_iter().map(|&x| (x != 0).then(|| f.log_unchecked(x) % n1)).collect())
}

pub fn u_profile(code: &Code, b: usize, limits: &Limits) -> Result<UProfile> {
    let classes = tuple_classes(code, b, limits)?;
    let n1 = code.n1() as usize;
    let mut counts = vec![0u64; n1];
    let mut degenerate = 0;
    for c in &classes[1..] {
        match c {
            Some(i) => counts[*i as usize] += 1,
            None => degenerate += 1,
        }
    }
    // the sums form an F_q-space of dimension min(b, k0), each value hit equally often
    let dim = b.min(code.k0() as usize);
    let fibre = code.q().pow((b - dim) as u32);
    let image_counts = counts.iter().map(|c| c / fibre).collect();
    Ok(UProfile { b, n1: code.n1(), q: code.q(), k0: code.k0(), counts, image_counts, degenerate })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightCase {
    /// Exact Gaussian periods of order `N1`.
    General,
    /// `N1 = 1`: one class.
    OneClass,
    /// `N1 = 2`.
    Quadratic,
    /// `N1 = 3`, `p ≡ 2 (mod 3)`.
    Cubic,
    /// `N1 = 4`, `p ≡ 3 (mod 4)`.
    Quartic,
    /// Semi-primitive with `γ`, `p` and `(p^j+1)/N1` all odd.
    SemiPrimitiveOdd,
    /// Semi-primitive, all other cases.
    SemiPrimitiveOther,
}

impl WeightCase {
    pub fn tag(self) -> &'static str {
        match self {
            WeightCase::General => "general",
            WeightCase::OneClass => "N1=1",
            WeightCase::Quadratic => "N1=2",
            WeightCase::Cubic => "N1=3",
            WeightCase::Quartic => "N1=4",
            WeightCase::SemiPrimitiveOdd => "semi-primitive-odd",
            WeightCase::SemiPrimitiveOther => "semi-primitive-other",
        }
    }
}

/// Per-class b-symbol weights: `weights[i]` is `w_b(c(β))` for `β ∈ C_i^{(N1,Q)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormWeights {
    pub b: usize,
    #[serde(rename = "N1")]
    pub n1: u32,
    pub weights: Vec<u64>,
    pub case: WeightCase,
}

impl ClosedFormWeights {
    /// The β-indexed distribution `1 + ((Q-1)/N1) Σ_i T^{u_i}`.
    pub fn distribution(&self, code: &Code) -> WeightDistribution {
        let class_size = code.field().group_order() as u64 / self.n1 as u64;
        let mut entries = BTreeMap::from([(0usize, 1u64)]);
        for &w in &self.weights {
            *entries.entry(w as usize).or_insert(0) += class_size;
        }
        WeightDistribution { b: self.b, n: code.n(), view: DistributionView::BetaIndexed, entries }
    }
}

/// Checks a weight numerator against `q^b N` and the admissible range.
fn finish_weight(code: &Code, b: usize, num: i128) -> Result<u64> {
    let den = code.q().pow(b as u32) as i128 * code.big_n() as i128;
    if num % den != 0 {
        return Err(Error::WeightOutOfRange(format!("{num}/{den} is not an integer")));
    }
    let w = num / den;
    let kernel_allowed = code.k0() < code.m();
    if (w == 0 && kernel_allowed) || (b as i128 <= w && w <= code.n() as i128) {
        Ok(w as u64)
    } else {
        Err(Error::WeightOutOfRange(format!("weight {w} outside [{b}, {}]", code.n())))
    }
}

fn check_closed_form_b(code: &Code, b: usize) -> Result<()> {
    check_irreducible(code)?;
    if b == 0 || b > code.k0() as usize {
        return Err(Error::BOutOfRange(b, code.k0() as usize));
    }
    Ok(())
}

/// `w_b(c(β))` for `β ∈ C_class`, from the periods of order `N1` and the `#U` profile.
pub fn closed_form_weight(code: &Code, b: usize, class: u32, periods: &PeriodSystem, uprof: &UProfile) -> Result<u64> {
    check_closed_form_b(code, b)?;
    let n1 = code.n1();
    if periods.k() != n1 || periods.field_order() != code.field_order() {
        return Err(Error::OrderNotDivisor(periods.k() as u64, code.field_order() - 1));
    }
    if uprof.b != b || uprof.n1 != n1 {
        return Err(Error::LengthMismatch(uprof.b, b));
    }
    if class >= n1 {
        return Err(Error::IndexOutOfRange(class as u64, n1 as u64));
    }
    let sum: i128 = match periods.periods() {
        Some(exact) => {
            let mut acc = crate::cyclotomy::CyclotomicValue::zero(periods.p());
            for (k, &c) in uprof.counts.iter().enumerate() {
                acc.add_scaled(&exact[(class as usize + k) % n1 as usize], c as i64);
            }
            crate::cyclotomy::CyclotomicValue::from_counts(acc.counts().to_vec())
                .as_integer()
                .ok_or(Error::NonRationalCombination)? as i128
        }
        None => {
            let (approx, err) = (periods.approx(), periods.error_bounds());
            let mut z = num_complex::Complex64::new(0.0, 0.0);
            let mut bound = 0.0;
            for (k, &c) in uprof.counts.iter().enumerate() {
                let idx = (class as usize + k) % n1 as usize;
                z += approx[idx] * c as f64;
                bound += err[idx] * c as f64;
            }
            let r = z.re.round();
            if (z.re - r).abs() > bound.max(1e-9) + 1e-6 || z.im.abs() > bound.max(1e-9) + 1e-6 {
                return Err(Error::NonRationalCombination);
            }
            r as i128
        }
    };
    let qb = code.q().pow(b as u32) as i128;
    let num = (qb - 1) * (code.field_order() as i128 - 1) - n1 as i128 * sum;
    finish_weight(code, b, num)
}

/// All per-class weights through exact periods.
pub fn closed_form_weights(code: &Code, b: usize, limits: &Limits) -> Result<ClosedFormWeights> {
    check_closed_form_b(code, b)?;
    let uprof = u_profile(code, b, limits)?;
    let periods = PeriodSystem::exact(code.field(), code.n1())?;
    let weights =
        (0..code.n1()).map(|i| closed_form_weight(code, b, i, &periods, &uprof)).collect::<Result<Vec<u64>>>()?;
    Ok(ClosedFormWeights { b, n1: code.n1(), weights, case: WeightCase::General })
}

/// β-indexed distribution from the general closed form.
pub fn closed_form_distribution(code: &Code, b: usize, limits: &Limits) -> Result<WeightDistribution> {
    Ok(closed_form_weights(code, b, limits)?.distribution(code))
}

/// The case that [`special_case_weights`] dispatches to, if any.
pub fn special_case(code: &Code) -> Option<WeightCase> {
    let (p, n1, e) = (code.p(), code.n1(), code.s() * code.m());
    let sp = semi_primitive(p, e, n1);
    let odd_semi = sp
        .as_ref()
        .is_some_and(|sp| sp.gamma % 2 == 1 && p % 2 == 1 && ((p as u64).pow(sp.j) + 1) / n1 as u64 % 2 == 1);
    match n1 {
        1 => Some(WeightCase::OneClass),
        2 => Some(WeightCase::Quadratic),
        3 if p % 3 == 2 => Some(WeightCase::Cubic),
        4 if p % 4 == 3 && !odd_semi => Some(WeightCase::Quartic),
        _ if sp.is_some() && e % 2 == 0 => {
            Some(if odd_semi { WeightCase::SemiPrimitiveOdd } else { WeightCase::SemiPrimitiveOther })
        }
        _ => None,
    }
}

/// Per-class weights from the explicit case formulas, which use only `#U` and `√Q`.
pub fn special_case_weights(code: &Code, b: usize, uprof: &UProfile) -> Result<ClosedFormWeights> {
    let case = special_case(code)
        .ok_or_else(|| Error::NoTheoremApplies(format!("{}: N1 = {}, p = {}", code.id(), code.n1(), code.p())))?;
    case_weights(code, b, uprof, case)
}

/// Evaluates one case formula, checking only that case's own hypotheses.
pub fn case_weights(code: &Code, b: usize, uprof: &UProfile, case: WeightCase) -> Result<ClosedFormWeights> {
    check_irreducible(code)?;
    let (p, n1, m, e) = (code.p(), code.n1(), code.m(), code.s() * code.m());
    let hyp = |msg: &str| Error::HypothesisViolated(format!("{}: {msg}", code.id()));
    if b == 0 || b as u32 > code.k0().min(m.saturating_sub(1)) {
        return Err(hyp(&format!("need 1 <= b <= min(k0, m-1), got b = {b}")));
    }
    if uprof.b != b || uprof.n1 != n1 {
        return Err(Error::LengthMismatch(uprof.b, b));
    }
    let big_q = code.field_order() as i128;
    let qb1 = code.q().pow(b as u32) as i128 - 1;
    let root = || exact_sqrt(code.field_order()).map(|r| r as i128).ok_or_else(|| hyp("Q is not a square"));
    let sign = |k: u32| if k.is_multiple_of(2) { 1i128 } else { -1 };
    let u = |i: i64| uprof.count(i) as i128;
    let n1i = n1 as i128;
    // numerator of the weight of class i
    let nums: Vec<i128> = match case {
        WeightCase::General => return Err(hyp("the general case needs periods")),
        WeightCase::OneClass => {
            if n1 != 1 {
                return Err(hyp("N1 != 1"));
            }
            vec![qb1 * big_q]
        }
        WeightCase::Quadratic => {
            if n1 != 2 {
                return Err(hyp("N1 != 2"));
            }
            let r = if p % 4 == 1 { root()? } else { sign(e / 2) * root()? };
            vec![qb1 * (big_q - r) + 2 * r * u(0), qb1 * (big_q + r) - 2 * r * u(0)]
        }
        WeightCase::Cubic | WeightCase::Quartic => {
            let ok = match case {
                WeightCase::Cubic => n1 == 3 && p % 3 == 2,
                _ => n1 == 4 && p % 4 == 3,
            };
            if !ok || e % 2 == 1 {
                return Err(hyp(&format!("{} hypotheses fail", case.tag())));
            }
            let r = sign(e / 2) * root()?;
            (0..n1 as i64).map(|i| qb1 * (big_q - r) + n1i * r * u(-i)).collect()
        }
        WeightCase::SemiPrimitiveOdd | WeightCase::SemiPrimitiveOther => {
            let sp =
                semi_primitive(p, e, n1).filter(|_| n1 > 2 && e % 2 == 0).ok_or_else(|| hyp("not semi-primitive"))?;
            let r = root()?;
            let odd = sp.gamma % 2 == 1 && p % 2 == 1 && ((p as u64).pow(sp.j) + 1) / n1 as u64 % 2 == 1;
            if odd != (case == WeightCase::SemiPrimitiveOdd) {
                return Err(hyp("wrong semi-primitive branch"));
            }
            if sp.gamma % 2 == 1 && n1i > r {
                return Err(hyp(&format!("N1 = {n1} exceeds Q^(1/2) = {r}")));
            }
            if odd {
                let half = n1 as i64 / 2;
                (0..n1 as i64).map(|i| qb1 * (big_q + r) - n1i * r * u(half - i)).collect()
            } else {
                let sg = sign(sp.gamma);
                (0..n1 as i64).map(|i| qb1 * (big_q - sg * r) + sg * n1i * r * u(-i)).collect()
            }
        }
    };
    let weights = nums.into_iter().map(|num| finish_weight(code, b, num)).collect::<Result<Vec<u64>>>()?;
    Ok(ClosedFormWeights { b, n1, weights, case })
}

/// `special_case_weights` with the profile computed on the fly.
pub fn special_case_distribution(code: &Code, b: usize, limits: &Limits) -> Result<ClosedFormWeights> {
    special_case(code)
        .ok_or_else(|| Error::NoTheoremApplies(format!("{}: N1 = {}, p = {}", code.id(), code.n1(), code.p())))?;
    let uprof = u_profile(code, b, limits)?;
    special_case_weights(code, b, &uprof)
}

/// How far the constant-weight characterization can be asserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimScope {
    /// Circulant invertible: uniform profile iff constant weight.
    Equivalence,
    /// Invertibility not established: only uniform implies constant.
    SufficientOnly,
    /// `k0 < m`, so the characterization (dimension `m`) does not apply.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantWeightReport {
    pub b: usize,
    pub u_uniform: bool,
    pub is_constant: bool,
    /// The common weight of the nonzero codewords, when constant.
    pub weight: Option<u64>,
    /// `(q^b-1)Q/(q^b N)` when integral.
    pub predicted_weight: Option<u64>,
    pub matrix_invertible: Verdict,
    pub scope: ClaimScope,
    /// Whether the observation is consistent with the characterization at this scope.
    pub consistent: bool,
}

/// Compares uniformity of `#U(b, ·, N1)` with constancy of the nonzero b-weights.
pub fn constant_weight_check(code: &Code, b: usize, limits: &Limits) -> Result<ConstantWeightReport> {
    check_irreducible(code)?;
    if b == 0 || b > code.n() {
        return Err(Error::BOutOfRange(b, code.n()));
    }
    let uprof = u_profile(code, b, limits)?;
    let weights: Vec<u64> = if b >= code.k0() as usize {
        // any k0 consecutive coordinates determine a codeword
        vec![code.n() as u64]
    } else {
        closed_form_weights(code, b, limits)?.weights.into_iter().filter(|&w| w > 0).collect()
    };
    let is_constant = weights.windows(2).all(|w| w[0] == w[1]);
    let weight = is_constant.then(|| weights[0]);
    let qb = code.q().pow(b as u32);
    let num = (qb - 1) * code.field_order();
    let den = qb * code.big_n();
    let predicted_weight = num.is_multiple_of(den).then_some(num / den);
    let periods = PeriodSystem::numeric(code.field(), code.n1())?;
    let verdict = circulant_invertibility(&periods, default_tolerance(code.field_order(), code.n1())).verdict;
    let u_uniform = uprof.is_uniform();
    let scope = if code.k0() < code.m() {
        ClaimScope::NotApplicable
    } else if verdict == Verdict::Invertible {
        ClaimScope::Equivalence
    } else {
        ClaimScope::SufficientOnly
    };
    let sufficient = !u_uniform || (is_constant && (b as u32 >= code.m() || weight == predicted_weight));
    let consistent = match scope {
        ClaimScope::NotApplicable => true,
        ClaimScope::SufficientOnly => sufficient,
        ClaimScope::Equivalence => sufficient && (u_uniform || !is_constant || b as u32 >= code.m()),
    };
    Ok(ConstantWeightReport {
        b,
        u_uniform,
        is_constant,
        weight,
        predicted_weight,
        matrix_invertible: verdict,
        scope,
        consistent,
    })
}

/// Square count over the projectively normalized sums, against `#U(b, 0, 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuBridge {
    pub b: usize,
    pub mu: u64,
    pub u0: u64,
    pub holds: bool,
}

/// Counts squares among `θ^{j-1} + x_1 θ^j + … + x_{b-j} θ^{b-1}`, `1 <= j <= b`,
/// and checks `(q-1) μ(b) = #U(b, 0, 2)`.
pub fn mu_bridge(code: &Code, b: usize, limits: &Limits) -> Result<MuBridge> {
    check_closed_form_b(code, b)?;
    if code.n1() != 2 {
        return Err(Error::HypothesisViolated(format!("{}: N1 = {} != 2", code.id(), code.n1())));
    }
    let f = code.field();
    let q = code.q() as u32;
    let theta = |j: usize| f.exp(j as u64 * code.theta_log());
    let mut mu = 0u64;
    for lead in 0..b {
        let tail = b - 1 - lead;
        let count = (q as u64).pow(tail as u32);
        if count > limits.enumeration {
            return Err(Error::EnumerationLimitExceeded(count as u128, limits.enumeration as u128));
        }
        for idx in 0..count {
            let mut x = theta(lead);
            let mut rest = idx;
            for t in 0..tail {
                let coeff = (rest % q as u64) as u32;
                rest /= q as u64;
                x = f.add(x, f.mul(code.subfield().embed(f, coeff), theta(lead + 1 + t)));
            }
            if x != 0 && f.log_unchecked(x).is_multiple_of(2) {
                mu += 1;
            }
        }
    }
    let u0 = u_profile(code, b, limits)?.counts[0];
    Ok(MuBridge { b, mu, u0, holds: (q as u64 - 1) * mu == u0 })
}
