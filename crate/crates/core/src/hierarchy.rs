//! b-symbol weight hierarchies `d_1 < d_2 < … < d_{k0} = n` and generalized
//! Hamming weights `𝐝_1 < … < 𝐝_{k0}`, by brute force and in closed form.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::codes::{brute_distributions, Code, CodeKind, CodeParams, DistributionView, EnumerationMode};
use crate::cyclotomy::semi_primitive;
use crate::enumerators::{u_profile, UProfile};
use crate::error::{Error, Result};
use crate::numtheory::{exact_sqrt, gaussian_binomial};
use crate::Limits;

/// Largest support table, in bytes, the generalized-weight oracle will allocate.
const SUPPORT_TABLE_BYTES: u128 = 1 << 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HierarchyMethod {
    Brute,
    Closed,
    /// Closed form where a case formula applies, brute force otherwise.
    Auto,
}

impl std::str::FromStr for HierarchyMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "brute" => Ok(HierarchyMethod::Brute),
            "closed" => Ok(HierarchyMethod::Closed),
            "auto" => Ok(HierarchyMethod::Auto),
            other => Err(format!("unknown method {other:?} (brute, closed, auto)")),
        }
    }
}

/// Full hierarchies of one code, with the method used for each entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HierarchyReport {
    pub code: String,
    pub params: CodeParams,
    pub n: usize,
    pub k0: u32,
    /// `d_1, …, d_n`.
    pub db: Vec<usize>,
    pub db_method: Vec<String>,
    /// `𝐝_1, …, 𝐝_{k0}`.
    pub ghw: Option<Vec<usize>>,
    pub ghw_method: Option<Vec<String>>,
    /// `d_b = 𝐝_b` for `b <= k0`.
    pub equal: Option<Vec<bool>>,
}

impl HierarchyReport {
    /// Strict increase on `[1, k0]`, constant `n` from `k0` on.
    pub fn shape_holds(&self) -> bool {
        let k0 = self.k0 as usize;
        self.db[..k0].windows(2).all(|w| w[0] < w[1]) && self.db[k0 - 1..].iter().all(|&d| d == self.n)
    }

    /// `d_b >= 𝐝_b` wherever both are known, with equality at `b = 1` and `b = k0`.
    pub fn dominance_holds(&self) -> bool {
        let Some(g) = &self.ghw else { return true };
        let k0 = self.k0 as usize;
        g.iter().zip(&self.db).all(|(gh, d)| d >= gh) && g[0] == self.db[0] && g[k0 - 1] == self.db[k0 - 1]
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(["b", "d_b", "d_b_method", "ghw", "ghw_method", "equal"]).map_err(io)?;
        for (i, (&d, m)) in self.db.iter().zip(&self.db_method).enumerate() {
            let gh = self.ghw.as_ref().and_then(|v| v.get(i)).map(|x| x.to_string()).unwrap_or_default();
            let gm = self.ghw_method.as_ref().and_then(|v| v.get(i)).cloned().unwrap_or_default();
            let eq = self.equal.as_ref().and_then(|v| v.get(i)).map(|x| x.to_string()).unwrap_or_default();
            w.write_record([(i + 1).to_string(), d.to_string(), m.clone(), gh, gm, eq]).map_err(io)?;
        }
        String::from_utf8(w.into_inner().map_err(|e| Error::Io(e.to_string()))?).map_err(|e| Error::Io(e.to_string()))
    }
}

fn check_irreducible(code: &Code) -> Result<()> {
    match code.kind() {
        CodeKind::Irreducible => Ok(()),
        CodeKind::ProjectiveSimplex => Err(Error::CaseNotCovered(format!("{} is not of the form C(Q, N)", code.id()))),
    }
}

fn signed_root(code: &Code) -> Result<i128> {
    exact_sqrt(code.field_order())
        .map(|r| r as i128)
        .ok_or_else(|| Error::HypothesisViolated(format!("{}: Q is not a square", code.id())))
}

fn divide(code: &Code, b: usize, num: i128) -> Result<u64> {
    let den = code.q().pow(b as u32) as i128 * code.big_n() as i128;
    if num % den != 0 || num <= 0 {
        return Err(Error::WeightOutOfRange(format!("{num}/{den}")));
    }
    Ok((num / den) as u64)
}

/// Minimum b-symbol distance from the case formulas, with the tag of the case used.
pub fn min_db_closed(code: &Code, b: usize, uprof: &UProfile) -> Result<(u64, &'static str)> {
    check_irreducible(code)?;
    let (m, n1) = (code.m(), code.n1());
    if b == 0 || b as u32 >= m || b as u32 > code.k0() {
        return Err(Error::HypothesisViolated(format!("{}: need 1 <= b <= m-1, got b = {b}", code.id())));
    }
    if uprof.b != b || uprof.n1 != n1 {
        return Err(Error::LengthMismatch(uprof.b, b));
    }
    let big_q = code.field_order() as i128;
    let qb1 = code.q().pow(b as u32) as i128 - 1;
    if n1 == 1 {
        return Ok((divide(code, b, qb1 * big_q)?, "N1=1"));
    }
    if n1 == 2 {
        let r = signed_root(code)?;
        let u0 = uprof.counts[0] as i128;
        let num = if 2 * u0 >= qb1 { qb1 * (big_q + r) - 2 * r * u0 } else { qb1 * (big_q - r) + 2 * r * u0 };
        return Ok((divide(code, b, num)?, "N1=2"));
    }
    let e = code.s() * m;
    let Some(sp) = semi_primitive(code.p(), e, n1) else {
        return Err(Error::CaseNotCovered(format!("{}: N1 = {n1} is not semi-primitive", code.id())));
    };
    if code.k0() < m {
        return Err(Error::HypothesisViolated(format!("{}: dimension {} < m", code.id(), code.k0())));
    }
    let r = signed_root(code)?;
    let n1i = n1 as i128;
    let num = if sp.gamma % 2 == 1 {
        if n1i > r {
            return Err(Error::HypothesisViolated(format!("{}: N1 = {n1} exceeds Q^(1/2) = {r}", code.id())));
        }
        let max = *uprof.counts.iter().max().expect("N1 >= 1") as i128;
        qb1 * (big_q + r) - n1i * r * max
    } else {
        let min = *uprof.counts.iter().min().expect("N1 >= 1") as i128;
        qb1 * (big_q - r) + n1i * r * min
    };
    Ok((divide(code, b, num)?, "semi-primitive"))
}

/// Generalized Hamming weight from the known closed forms (`N1 ∈ {1, 2}`, `2 <= b <= m-1`).
pub fn ghw_closed(code: &Code, b: usize) -> Result<u64> {
    check_irreducible(code)?;
    let m = code.m();
    if b < 2 || b as u32 >= m {
        return Err(Error::CaseNotCovered(format!("{}: need 2 <= b <= m-1, got b = {b}", code.id())));
    }
    let big_q = code.field_order() as i128;
    let qb = code.q().pow(b as u32) as i128;
    match code.n1() {
        1 => divide(code, b, (qb - 1) * big_q),
        2 => {
            let r = signed_root(code)?;
            if 2 * b as u32 <= m {
                divide(code, b, (qb - 1) * (big_q - r))
            } else {
                divide(code, b, big_q * qb - 2 * big_q + qb)
            }
        }
        n1 => Err(Error::CaseNotCovered(format!("{}: no generalized-weight formula for N1 = {n1}", code.id()))),
    }
}

/// Supports of all `q^{k0}` codewords as bitsets, indexed by the message `Σ u_j q^j`.
struct SupportTable {
    words: usize,
    bits: Vec<u64>,
}

impl SupportTable {
    fn build(code: &Code, limits: &Limits) -> Result<Self> {
        let size = code.size();
        let words = code.n().div_ceil(64);
        if size > limits.enumeration as u128 || size * words as u128 * 8 > SUPPORT_TABLE_BYTES {
            return Err(Error::EnumerationLimitExceeded(size, limits.enumeration as u128));
        }
        let (q, k0, n) = (code.q(), code.k0() as usize, code.n());
        let mut bits = vec![0u64; size as usize * words];
        bits.par_chunks_mut(words).enumerate().for_each(|(idx, row)| {
            let mut rest = idx as u64;
            let u: Vec<u32> = (0..k0)
                .map(|_| {
                    let d = (rest % q) as u32;
                    rest /= q;
                    d
                })
                .collect();
            let beta = code.message_beta(&u);
            if beta == 0 {
                return;
            }
            let mut buf = vec![0u32; n];
            code.codeword_symbols_log(code.field().log_unchecked(beta) as u64, &mut buf);
            for (i, &s) in buf.iter().enumerate() {
                if s != 0 {
                    row[i / 64] |= 1 << (i % 64);
                }
            }
        });
        Ok(SupportTable { words, bits })
    }

    fn row(&self, idx: u64) -> &[u64] {
        let i = idx as usize * self.words;
        &self.bits[i..i + self.words]
    }
}

fn combinations(k: usize, b: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, k: usize, b: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == b {
            out.push(cur.clone());
            return;
        }
        for i in start..=k - (b - cur.len()) {
            cur.push(i);
            rec(i + 1, k, b, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, k, b, &mut Vec::new(), &mut out);
    out
}

struct Search<'a> {
    table: &'a SupportTable,
    q: u64,
    best: &'a AtomicUsize,
}

impl Search<'_> {
    /// Row `r` of an RREF basis: 1 at its pivot, free entries in later non-pivot columns.
    fn dfs(&self, pivots: &[usize], free: &[Vec<usize>], r: usize, acc: &[u64]) {
        let f = &free[r];
        let count = self.q.pow(f.len() as u32);
        let mut next = vec![0u64; acc.len()];
        for t in 0..count {
            let mut idx = self.q.pow(pivots[r] as u32);
            let mut rest = t;
            for &c in f {
                idx += (rest % self.q) * self.q.pow(c as u32);
                rest /= self.q;
            }
            let mut weight = 0;
            for ((o, &a), &s) in next.iter_mut().zip(acc).zip(self.table.row(idx)) {
                *o = a | s;
                weight += o.count_ones() as usize;
            }
            if weight >= self.best.load(Ordering::Relaxed) {
                continue;
            }
            if r + 1 == pivots.len() {
                self.best.fetch_min(weight, Ordering::Relaxed);
            } else {
                self.dfs(pivots, free, r + 1, &next);
            }
        }
    }
}

/// Exact `𝐝_b`: the smallest support of a `b`-dimensional subcode, over every subspace once.
pub fn ghw_brute(code: &Code, b: usize, limits: &Limits) -> Result<usize> {
    let k0 = code.k0() as usize;
    if b == 0 || b > k0 {
        return Err(Error::BOutOfRange(b, k0));
    }
    let count = gaussian_binomial(k0 as u32, b as u32, code.q());
    if count > limits.subspaces as u128 {
        return Err(Error::SubspaceLimitExceeded(count, limits.subspaces as u128));
    }
    let table = SupportTable::build(code, limits)?;
    let best = AtomicUsize::new(code.n() + 1);
    let search = Search { table: &table, q: code.q(), best: &best };
    combinations(k0, b).par_iter().for_each(|pivots| {
        let free: Vec<Vec<usize>> =
            pivots.iter().map(|&p| (p + 1..k0).filter(|c| !pivots.contains(c)).collect()).collect();
        search.dfs(pivots, &free, 0, &vec![0u64; table.words]);
    });
    Ok(best.into_inner())
}

/// `d_1, …, d_n` with a method tag per entry.
pub fn bsymbol_hierarchy(code: &Code, method: HierarchyMethod, limits: &Limits) -> Result<(Vec<usize>, Vec<String>)> {
    let (n, k0) = (code.n(), code.k0() as usize);
    let mut db = vec![n; n];
    let mut tags = vec!["saturated".to_string(); n];
    let mut open: Vec<usize> = (1..k0).collect();
    if method != HierarchyMethod::Brute && !open.is_empty() {
        let mut missing = Vec::new();
        for &b in &open {
            let closed = u_profile(code, b, limits).and_then(|u| min_db_closed(code, b, &u));
            match (closed, method) {
                (Ok((d, tag)), _) => {
                    db[b - 1] = d as usize;
                    tags[b - 1] = format!("closed:{tag}");
                }
                (Err(e), HierarchyMethod::Closed) => return Err(e),
                (Err(_), _) => missing.push(b),
            }
        }
        open = missing;
    }
    if let Some(&bmax) = open.last() {
        let dists = brute_distributions(code, bmax, EnumerationMode::Orbits, DistributionView::Distinct, limits, 0)?;
        for &b in &open {
            db[b - 1] = dists[b - 1].min_nonzero().ok_or(Error::WeightOutOfRange("zero code".into()))?;
            tags[b - 1] = "brute".to_string();
        }
    }
    Ok((db, tags))
}

/// `𝐝_1, …, 𝐝_{k0}`: closed forms where available, the subspace oracle otherwise.
pub fn ghw_hierarchy(
    code: &Code,
    method: HierarchyMethod,
    d1: usize,
    limits: &Limits,
) -> Result<(Vec<usize>, Vec<String>)> {
    let k0 = code.k0() as usize;
    let mut out = Vec::with_capacity(k0);
    let mut tags = Vec::with_capacity(k0);
    for b in 1..=k0 {
        let (v, tag) = if b == 1 {
            (d1, "minimum-distance".to_string())
        } else if b == k0 {
            (code.n(), "saturated".to_string())
        } else {
            let closed = if method == HierarchyMethod::Brute { None } else { ghw_closed(code, b).ok() };
            match (closed, method) {
                (Some(v), _) => (v as usize, format!("closed:N1={}", code.n1())),
                (None, HierarchyMethod::Closed) => {
                    return Err(Error::CaseNotCovered(format!(
                        "{}: no generalized-weight formula at b = {b}",
                        code.id()
                    )))
                }
                (None, _) => (ghw_brute(code, b, limits)?, "brute".to_string()),
            }
        };
        out.push(v);
        tags.push(tag);
    }
    Ok((out, tags))
}

pub fn hierarchy_report(
    code: &Code,
    method: HierarchyMethod,
    with_ghw: bool,
    limits: &Limits,
) -> Result<HierarchyReport> {
    let (db, db_method) = bsymbol_hierarchy(code, method, limits)?;
    let (ghw, ghw_method, equal) = if with_ghw {
        let (g, t) = ghw_hierarchy(code, method, db[0], limits)?;
        let eq = g.iter().zip(&db).map(|(a, b)| a == b).collect();
        (Some(g), Some(t), Some(eq))
    } else {
        (None, None, None)
    };
    Ok(HierarchyReport {
        code: code.id(),
        params: code.params(),
        n: code.n(),
        k0: code.k0(),
        db,
        db_method,
        ghw,
        ghw_method,
        equal,
    })
}

/// Whether `d_b = 𝐝_b` for an `N1 = 2` code, against the two conditions that characterize it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualityReport {
    pub b: usize,
    pub db: u64,
    pub db_source: String,
    pub ghw: u64,
    pub ghw_source: String,
    pub equal: bool,
    /// `1 <= b <= m/2` and `#U(b, 0, 2) = q^b - 1`.
    pub cond1: bool,
    /// `m/2 < b <= m` and some `#U(b, i, 2)` equals one of the two admissible values.
    pub cond2: bool,
    /// Which admissible value of the second condition matched, if any.
    pub cond2_value: Option<u64>,
    pub condition_fired: Option<String>,
    /// `equal == (cond1 || cond2)`.
    pub consistent: bool,
}

pub fn equality_report(code: &Code, b: usize, limits: &Limits) -> Result<EqualityReport> {
    check_irreducible(code)?;
    if code.n1() != 2 {
        return Err(Error::CaseNotCovered(format!("{}: N1 = {} != 2", code.id(), code.n1())));
    }
    let m = code.m() as usize;
    if b == 0 || b > m {
        return Err(Error::BOutOfRange(b, m));
    }
    let uprof = u_profile(code, b, limits)?;
    let (db, db_source) = if b == m {
        (code.n() as u64, "saturated".to_string())
    } else {
        (crate::codes::min_db(code, b, limits)? as u64, "brute".to_string())
    };
    let (ghw, ghw_source) = if b == m {
        (code.n() as u64, "saturated".to_string())
    } else {
        match ghw_brute(code, b, limits) {
            Ok(g) => (g as u64, "brute".to_string()),
            Err(Error::SubspaceLimitExceeded(..)) | Err(Error::EnumerationLimitExceeded(..)) => {
                let g = if b == 1 { db } else { ghw_closed(code, b)? };
                (g, if b == 1 { "minimum-distance" } else { "closed:N1=2" }.to_string())
            }
            Err(e) => return Err(e),
        }
    };
    let qb = code.q().pow(b as u32) as i128;
    let r = signed_root(code)?;
    let cond1 = 2 * b <= m && uprof.counts[0] as i128 == qb - 1;
    let mut cond2_value = None;
    if 2 * b > m {
        for v in [(qb + r) * (r - 1), (qb - r) * (r + 1)] {
            if v % (2 * r) == 0 {
                let v = v / (2 * r);
                if uprof.counts.iter().any(|&c| c as i128 == v) {
                    cond2_value = Some(v as u64);
                }
            }
        }
    }
    let cond2 = cond2_value.is_some();
    let equal = db == ghw;
    let condition_fired = match (cond1, cond2) {
        (true, _) => Some("cond1".to_string()),
        (false, true) => Some("cond2".to_string()),
        _ => None,
    };
    Ok(EqualityReport {
        b,
        db,
        db_source,
        ghw,
        ghw_source,
        equal,
        cond1,
        cond2,
        cond2_value,
        condition_fired,
        consistent: equal == (cond1 || cond2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldDescriptor;
    use crate::linalg::{for_each_in_span, rank};
    use crate::numtheory::divisors;

    fn code(p: u32, e: u32, s: u32, big_n: u64) -> Code {
        Code::new(&FieldDescriptor::new(p, e, None).unwrap(), s, big_n).unwrap()
    }

    fn limits() -> Limits {
        Limits::default()
    }

    /// Generalized weight by listing every subset of `b` codewords and keeping the independent ones.
    fn ghw_by_subsets(code: &Code, b: usize) -> usize {
        let f = code.symbol_field();
        let mut words = Vec::new();
        for_each_in_span(f, &code.generator_matrix(), 1 << 16, |v| {
            if v.iter().any(|&x| x != 0) {
                words.push(v.to_vec());
            }
        })
        .unwrap();
        let mut best = code.n();
        for set in combinations(words.len(), b) {
            let rows: Vec<Vec<u32>> = set.iter().map(|&i| words[i].clone()).collect();
            if rank(f, &rows) == b {
                let supp = (0..code.n()).filter(|&j| rows.iter().any(|r| r[j] != 0)).count();
                best = best.min(supp);
            }
        }
        best
    }

    #[test]
    fn simplex_hierarchies() {
        let s = code(2, 4, 1, 1);
        let r = hierarchy_report(&s, HierarchyMethod::Brute, true, &limits()).unwrap();
        assert_eq!(&r.db[..5], &[8, 12, 14, 15, 15]);
        assert_eq!(r.ghw.as_ref().unwrap(), &vec![8, 12, 14, 15]);
        assert!(r.shape_holds() && r.dominance_holds());
        assert_eq!(ghw_brute(&s, 2, &limits()).unwrap(), 12);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
    }

    #[test]
    fn subspace_oracle_agrees_with_subset_listing() {
        for (p, e, s, big_n) in [(2, 4, 1, 1), (2, 4, 1, 3), (3, 4, 1, 2), (2, 6, 1, 9), (2, 4, 2, 1), (2, 6, 1, 3)] {
            let c = code(p, e, s, big_n);
            for b in 1..=c.k0().min(3) as usize {
                if gaussian_binomial(c.k0(), b as u32, c.q()) > 2000 || c.size() > 300 {
                    continue;
                }
                assert_eq!(ghw_brute(&c, b, &limits()).unwrap(), ghw_by_subsets(&c, b), "{c} b={b}");
            }
        }
    }

    #[test]
    fn ghw_ends() {
        for (p, e, s, big_n) in [(2, 6, 1, 3), (3, 4, 1, 5), (2, 8, 1, 17)] {
            let c = code(p, e, s, big_n);
            let d = crate::codes::min_db(&c, 1, &limits()).unwrap();
            assert_eq!(ghw_brute(&c, 1, &limits()).unwrap(), d);
            assert_eq!(ghw_brute(&c, c.k0() as usize, &limits()).unwrap(), c.n());
        }
    }

    #[test]
    fn closed_forms_match_oracles() {
        let mut checked = 0;
        for (p, e) in [(3, 4), (5, 4), (3, 6), (7, 4), (2, 6), (2, 8), (3, 8), (5, 2), (13, 2)] {
            let f = FieldDescriptor::new(p, e, None).unwrap();
            for s in (1..e).filter(|s| e % s == 0) {
                for big_n in divisors(f.group_order() as u64) {
                    let Ok(c) = Code::new(&f, s, big_n) else { continue };
                    if c.size() > 1 << 14 {
                        continue;
                    }
                    for b in 1..c.m().min(c.k0()) as usize {
                        let uprof = u_profile(&c, b, &limits()).unwrap();
                        if let Ok((d, tag)) = min_db_closed(&c, b, &uprof) {
                            assert_eq!(d as usize, crate::codes::min_db(&c, b, &limits()).unwrap(), "{c} b={b} {tag}");
                            checked += 1;
                        }
                        if let Ok(g) = ghw_closed(&c, b) {
                            if let Ok(brute) = ghw_brute(&c, b, &Limits { subspaces: 200_000, ..limits() }) {
                                assert_eq!(g as usize, brute, "{c} b={b} ghw");
                                checked += 1;
                            }
                        }
                    }
                }
            }
        }
        assert!(checked > 50, "{checked}");
    }

    #[test]
    fn large_b_generalized_weight_for_two_classes() {
        // m = 4, b = 3 falls in the second range
        let c = code(3, 4, 1, 2);
        assert_eq!(ghw_closed(&c, 3).unwrap() as usize, ghw_brute(&c, 3, &limits()).unwrap());
        let c = code(3, 6, 1, 2);
        for b in 2..6 {
            assert_eq!(ghw_closed(&c, b).unwrap() as usize, ghw_brute(&c, b, &limits()).unwrap(), "b={b}");
        }
    }

    #[test]
    fn equality_biconditional() {
        let mut fired = std::collections::BTreeSet::new();
        for (p, e, s) in [(3, 4, 1), (5, 4, 1), (3, 6, 1), (7, 4, 1), (3, 8, 2), (5, 2, 1), (3, 4, 2)] {
            let f = FieldDescriptor::new(p, e, None).unwrap();
            for big_n in divisors(f.group_order() as u64) {
                let Ok(c) = Code::new(&f, s, big_n) else { continue };
                if c.n1() != 2 || c.size() > 1 << 14 {
                    continue;
                }
                for b in 1..=c.m() as usize {
                    let r = equality_report(&c, b, &Limits { subspaces: 500_000, ..limits() }).unwrap();
                    assert!(r.consistent, "{c}: {r:?}");
                    if let Some(t) = &r.condition_fired {
                        fired.insert(t.clone());
                    }
                }
            }
        }
        assert!(fired.contains("cond1"), "{fired:?}");
    }

    #[test]
    fn example_distance_over_f3_power_ten() {
        let modulus = [2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1];
        let c = Code::new(&FieldDescriptor::new(3, 10, Some(&modulus)).unwrap(), 1, 2).unwrap();
        assert_eq!(ghw_closed(&c, 2).unwrap(), 26136);
        let u = u_profile(&c, 2, &limits()).unwrap();
        assert_eq!(min_db_closed(&c, 2, &u).unwrap(), (26136, "N1=2"));
        let r = equality_report(&c, 2, &limits()).unwrap();
        assert!(r.equal && r.cond1 && r.consistent);
        assert_eq!(r.ghw_source, "closed:N1=2");
        let d = Code::new(&FieldDescriptor::new(3, 10, None).unwrap(), 1, 2).unwrap();
        let r = equality_report(&d, 2, &limits()).unwrap();
        assert_eq!(r.db, 26190);
        assert!(!r.equal && !r.cond1 && r.consistent);
    }

    #[test]
    fn closed_hierarchy_method() {
        let c = code(3, 4, 1, 2);
        let (closed, tags) = bsymbol_hierarchy(&c, HierarchyMethod::Closed, &limits()).unwrap();
        let (brute, _) = bsymbol_hierarchy(&c, HierarchyMethod::Brute, &limits()).unwrap();
        assert_eq!(closed, brute);
        assert_eq!(tags[0], "closed:N1=2");
        let generic = code(2, 6, 1, 7);
        assert!(bsymbol_hierarchy(&generic, HierarchyMethod::Closed, &limits()).is_err());
        assert!(bsymbol_hierarchy(&generic, HierarchyMethod::Auto, &limits()).is_ok());
    }

    #[test]
    fn semi_primitive_distance_matches_smallest_weight() {
        let c = code(2, 8, 1, 5);
        assert_eq!(c.n1(), 5);
        for b in 1..c.k0().min(c.m()) as usize {
            let u = u_profile(&c, b, &limits()).unwrap();
            let (d, tag) = min_db_closed(&c, b, &u).unwrap();
            assert_eq!(tag, "semi-primitive");
            let w = crate::enumerators::special_case_weights(&c, b, &u).unwrap();
            assert_eq!(d, *w.weights.iter().min().unwrap());
        }
    }

    #[test]
    fn subspace_limit() {
        let c = code(2, 8, 1, 1);
        let tight = Limits { subspaces: 100, ..limits() };
        assert!(matches!(ghw_brute(&c, 4, &tight), Err(Error::SubspaceLimitExceeded(200787, 100))));
    }

    #[test]
    fn report_csv() {
        let r = hierarchy_report(&code(2, 4, 1, 1), HierarchyMethod::Auto, true, &limits()).unwrap();
        let csv = r.to_csv().unwrap();
        assert!(csv.starts_with("b,d_b,d_b_method,ghw,ghw_method,equal\n1,8,"));
        assert_eq!(csv.lines().count(), 16);
    }
}
