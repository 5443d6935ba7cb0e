//! Irreducible cyclic codes `C(Q, N)` and their brute-force b-symbol weight distributions.
//!
//! With `θ = α^N` and `n = (Q-1)/N`, the codeword of `β ∈ F_Q` is
//! `c(β) = (T_{Q/q}(βθ^i))_{i<n}`. The map `β ↦ c(β)` factors through
//! `T_{Q/q^{k0}}`, so the `q^{k0}` distinct codewords are `c(γδ)` for
//! `γ ∈ F_{q^{k0}}` and any fixed `δ` of relative trace 1; every codeword is
//! hit by `q^{m-k0}` values of `β`.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bsymbol::{weights_upto, Word};
use crate::error::{Error, Result};
use crate::gf::{FieldDescriptor, Subfield};
use crate::numtheory::{gcd, mult_order};
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CodeKind {
    /// `C(Q, N)` with `θ = α^N`.
    Irreducible,
    /// The Simplex code `(T_{Q/q}(βα^i))_{i < (Q-1)/(q-1)}`, constacyclic with
    /// shift scalar `α^{-n} ∈ F_q`. Used when `gcd(m, q-1) > 1`, where
    /// `C(q^m, q-1)` is not one-weight.
    ProjectiveSimplex,
}

/// The parameters identifying a code, as echoed in reports.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeParams {
    pub p: u32,
    pub s: u32,
    pub m: u32,
    #[serde(rename = "N")]
    pub big_n: u64,
    pub kind: CodeKind,
    pub modulus: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct Code {
    field: FieldDescriptor,
    sub: Subfield,
    kind: CodeKind,
    s: u32,
    m: u32,
    big_n: u64,
    n: usize,
    step: u64,
    n1: u32,
    k0: u32,
    semi_primitive: bool,
    /// `T_{Q/q}(α^l)` in the subfield encoding, indexed by `l`.
    trace: Vec<u32>,
    delta_log: u64,
    shift_scalar: u32,
}

/// Builds `C(Q, N)` over the subfield of order `q`.
pub fn build_code(field: &FieldDescriptor, q: u64, big_n: u64) -> Result<Code> {
    let p = field.p() as u64;
    let s = (1..=field.e()).find(|&s| p.pow(s) == q).filter(|&s| field.e().is_multiple_of(s));
    let s = s.ok_or(Error::NotSubfield(q, field.order() as u64))?;
    Code::new(field, s, big_n)
}

impl Code {
    pub fn new(field: &FieldDescriptor, s: u32, big_n: u64) -> Result<Self> {
        let q = (field.p() as u64).pow(s);
        if s == 0 || !field.e().is_multiple_of(s) {
            return Err(Error::NotSubfield(q, field.order() as u64));
        }
        let g = field.group_order() as u64;
        if big_n == 0 || !g.is_multiple_of(big_n) {
            return Err(Error::NNotDivisor(big_n, g));
        }
        let n = g / big_n;
        if gcd(n, q) != 1 {
            return Err(Error::GcdViolation(n, q));
        }
        Self::assemble(field, s, big_n, n, big_n, CodeKind::Irreducible)
    }

    /// The Simplex code `S(m, q)` of length `(Q-1)/(q-1)`.
    ///
    /// Equal to `C(q^m, q-1)` when `gcd(m, q-1) = 1`; otherwise the
    /// projective form is used, since then `C(q^m, q-1)` has two weights.
    pub fn simplex(field: &FieldDescriptor, s: u32) -> Result<Self> {
        let q = (field.p() as u64).pow(s);
        if s == 0 || !field.e().is_multiple_of(s) {
            return Err(Error::NotSubfield(q, field.order() as u64));
        }
        let m = (field.e() / s) as u64;
        if gcd(m, q - 1) == 1 {
            return Self::new(field, s, q - 1);
        }
        let n = field.group_order() as u64 / (q - 1);
        Self::assemble(field, s, q - 1, n, 1, CodeKind::ProjectiveSimplex)
    }

    fn assemble(field: &FieldDescriptor, s: u32, big_n: u64, n: u64, step: u64, kind: CodeKind) -> Result<Self> {
        let q = (field.p() as u64).pow(s);
        let m = field.e() / s;
        let g = field.group_order() as u64;
        let sub = field.subfield(s)?;
        let n1 = match kind {
            CodeKind::Irreducible => gcd(g / (q - 1), big_n) as u32,
            // all nonzero codewords lie in one shift orbit
            CodeKind::ProjectiveSimplex => 1,
        };
        let k0 = match kind {
            CodeKind::Irreducible => mult_order(q % n.max(1), n) as u32,
            CodeKind::ProjectiveSimplex => m,
        };
        let semi_primitive = big_n > 2 && {
            let mut acc = 1u64;
            (1..=big_n).any(|_| {
                acc = acc * (q % big_n) % big_n;
                acc == big_n - 1
            })
        };
        let trace = field.trace_table(s)?.into_iter().map(|x| sub.restrict(field, x)).collect::<Result<Vec<u32>>>()?;
        let delta_log = if k0 == m {
            0
        } else {
            (0..g).find(|&l| field.relative_trace(s * k0, field.exp(l)) == Ok(1)).expect("relative trace is onto")
        };
        let shift_scalar = match kind {
            CodeKind::Irreducible => 1,
            // c(βα^{-1}) = (α^{-n} c_{n-1}, c_0, …, c_{n-2})
            CodeKind::ProjectiveSimplex => sub.restrict(field, field.exp(g - n))?,
        };
        Ok(Code {
            field: field.clone(),
            sub,
            kind,
            s,
            m,
            big_n,
            n: n as usize,
            step,
            n1,
            k0,
            semi_primitive,
            trace,
            delta_log,
            shift_scalar,
        })
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    /// Descriptor of the symbol field `F_q`.
    pub fn symbol_field(&self) -> &FieldDescriptor {
        self.sub.field()
    }

    pub fn subfield(&self) -> &Subfield {
        &self.sub
    }

    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `q`.
    pub fn q(&self) -> u64 {
        self.sub.order() as u64
    }

    /// `Q`.
    pub fn field_order(&self) -> u64 {
        self.field.order() as u64
    }

    /// `N`.
    pub fn big_n(&self) -> u64 {
        self.big_n
    }

    /// Code length `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `N1 = gcd((Q-1)/(q-1), N)`.
    pub fn n1(&self) -> u32 {
        self.n1
    }

    /// Dimension `k0 = ord_n(q)`.
    pub fn k0(&self) -> u32 {
        self.k0
    }

    pub fn is_semi_primitive(&self) -> bool {
        self.semi_primitive
    }

    /// `log θ`.
    pub fn theta_log(&self) -> u64 {
        self.step
    }

    /// Number of `β ∈ F_Q` mapping to each codeword, `q^{m-k0}`.
    pub fn beta_multiplicity(&self) -> u64 {
        self.q().pow(self.m - self.k0)
    }

    /// Number of distinct codewords, `q^{k0}`.
    pub fn size(&self) -> u128 {
        (self.q() as u128).pow(self.k0)
    }

    pub fn params(&self) -> CodeParams {
        CodeParams {
            p: self.p(),
            s: self.s,
            m: self.m,
            big_n: self.big_n,
            kind: self.kind,
            modulus: self.field.modulus().to_vec(),
        }
    }

    /// A short label such as `C(16,5) over F_2` or `S(4,3)`.
    pub fn id(&self) -> String {
        match self.kind {
            CodeKind::Irreducible => format!("C({},{}) over F_{}", self.field_order(), self.big_n, self.q()),
            CodeKind::ProjectiveSimplex => format!("S({},{})", self.m, self.q()),
        }
    }

    /// Class index of `α^l` among `C_i^{(N1,Q)}`.
    pub fn class_of_log(&self, l: u64) -> u32 {
        (l % self.n1 as u64) as u32
    }

    /// Writes the symbols of `c(α^l)` into `out` (length `n`).
    pub fn codeword_symbols_log(&self, l: u64, out: &mut [u32]) {
        let g = self.field.group_order() as u64;
        let mut idx = l % g;
        for o in out.iter_mut() {
            *o = self.trace[idx as usize];
            idx += self.step;
            if idx >= g {
                idx -= g;
            }
        }
    }

    /// `c(α^l)`.
    pub fn codeword_log(&self, l: u64) -> Word {
        let mut s = vec![0u32; self.n];
        self.codeword_symbols_log(l, &mut s);
        Word::new(self.q() as u32, s).expect("trace values lie in F_q")
    }

    /// `c(β)` for a field element `β` in the encoding of [`Code::field`].
    pub fn codeword(&self, beta: u32) -> Result<Word> {
        if !self.field.contains(beta) {
            return Err(Error::FieldMismatch);
        }
        if beta == 0 {
            return Ok(Word::zero(self.q() as u32, self.n));
        }
        Ok(self.codeword_log(self.field.log_unchecked(beta) as u64))
    }

    /// `log` of a primitive element `ω` of `F_{q^{k0}}`, `(Q-1)/(q^{k0}-1)`.
    fn omega_log(&self) -> u64 {
        self.field.group_order() as u64 / (self.q().pow(self.k0) - 1)
    }

    /// Logs `β` of the `q^{k0} - 1` distinct nonzero codewords.
    pub fn distinct_logs(&self) -> impl Iterator<Item = u64> + '_ {
        let r = self.omega_log();
        let count = self.q().pow(self.k0) - 1;
        (0..count).map(move |j| j * r + self.delta_log)
    }

    /// Rows `c(ω^j δ)`, `j < k0`, of a generator matrix.
    pub fn generator_matrix(&self) -> Vec<Vec<u32>> {
        let r = self.omega_log();
        (0..self.k0 as u64).map(|j| self.codeword_log(j * r + self.delta_log).symbols().to_vec()).collect()
    }

    /// `β = (Σ_j u_j ω^j) δ` for a message `u ∈ F_q^{k0}`, as a parent element.
    pub fn message_beta(&self, u: &[u32]) -> u32 {
        let r = self.omega_log();
        let mut gamma = 0;
        for (j, &uj) in u.iter().enumerate() {
            if uj != 0 {
                let t = self.field.mul(self.sub.embed(&self.field, uj), self.field.exp(j as u64 * r));
                gamma = self.field.add(gamma, t);
            }
        }
        self.field.mul(gamma, self.field.exp(self.delta_log))
    }

    /// The code's own shift: `τ^t` for cyclic codes, the constacyclic shift otherwise.
    pub fn shift(&self, c: &Word, t: i64) -> Word {
        let n = self.n as i64;
        let sym = c.symbols();
        let f = self.symbol_field();
        let out = (0..n)
            .map(|i| {
                let src = i - t;
                // each rightward wrap from coordinate n-1 to 0 multiplies by λ
                let wraps = src.div_euclid(n);
                let x = sym[src.rem_euclid(n) as usize];
                if self.shift_scalar == 1 || x == 0 || wraps == 0 {
                    x
                } else {
                    let lam =
                        if wraps < 0 { self.shift_scalar } else { f.inv(self.shift_scalar).expect("nonzero scalar") };
                    f.mul(x, f.pow(lam, wraps.unsigned_abs()))
                }
            })
            .collect();
        Word::new(c.q(), out).expect("same field")
    }

    /// Whether `c` lies in the code.
    pub fn contains(&self, c: &Word) -> bool {
        if c.len() != self.n || c.q() as u64 != self.q() {
            return false;
        }
        let mut g = self.generator_matrix();
        let r = crate::linalg::rank(self.symbol_field(), &g);
        g.push(c.symbols().to_vec());
        crate::linalg::rank(self.symbol_field(), &g) == r
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [n={}, k0={}, N1={}]", self.id(), self.n, self.k0, self.n1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumerationMode {
    /// Every distinct codeword.
    Full,
    /// One codeword per shift orbit `{c(βθ^t)}`, weighted by the orbit size; exact.
    Orbits,
    /// One representative per class `C_i^{(N1,Q)}`, spot-checked on random members.
    PerClass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistributionView {
    /// Over the `q^{k0}` distinct codewords.
    Distinct,
    /// Over all `Q` values of `β`.
    BetaIndexed,
}

/// `A_w^b` for each weight `w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub b: usize,
    pub n: usize,
    pub view: DistributionView,
    pub entries: BTreeMap<usize, u64>,
}

impl WeightDistribution {
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Smallest nonzero weight.
    pub fn min_nonzero(&self) -> Option<usize> {
        self.entries.keys().copied().find(|&w| w > 0)
    }

    pub fn count(&self, w: usize) -> u64 {
        self.entries.get(&w).copied().unwrap_or(0)
    }

    /// Nonzero weights present.
    pub fn weights(&self) -> Vec<usize> {
        self.entries.keys().copied().filter(|&w| w > 0).collect()
    }

    /// `"1 + 15T^8"`-style enumerator.
    pub fn enumerator(&self) -> String {
        let terms: Vec<String> = self
            .entries
            .iter()
            .filter(|(_, &c)| c > 0)
            .map(|(&w, &c)| match w {
                0 => c.to_string(),
                _ => format!("{c}T^{w}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// The same distribution in the other view.
    pub fn to_view(&self, code: &Code, view: DistributionView) -> Result<WeightDistribution> {
        if view == self.view {
            return Ok(self.clone());
        }
        let mult = code.beta_multiplicity();
        let mut entries = BTreeMap::new();
        for (&w, &c) in &self.entries {
            let v = match (self.view, w) {
                (DistributionView::Distinct, 0) => mult,
                (DistributionView::Distinct, _) => c * mult,
                (DistributionView::BetaIndexed, 0) => 1,
                (DistributionView::BetaIndexed, _) => {
                    if c % mult != 0 {
                        return Err(Error::WeightOutOfRange(format!("count {c} not divisible by {mult}")));
                    }
                    c / mult
                }
            };
            entries.insert(w, v);
        }
        Ok(WeightDistribution { b: self.b, n: self.n, view, entries })
    }
}

fn merge(mut a: Vec<BTreeMap<usize, u64>>, b: Vec<BTreeMap<usize, u64>>) -> Vec<BTreeMap<usize, u64>> {
    for (ma, mb) in a.iter_mut().zip(b) {
        for (w, c) in mb {
            *ma.entry(w).or_insert(0) += c;
        }
    }
    a
}

/// Distributions of `w_1, …, w_bmax` in one pass over the codewords.
pub fn brute_distributions(
    code: &Code,
    bmax: usize,
    mode: EnumerationMode,
    view: DistributionView,
    limits: &Limits,
    seed: u64,
) -> Result<Vec<WeightDistribution>> {
    let n = code.n();
    if bmax == 0 || bmax > n {
        return Err(Error::BOutOfRange(bmax, n));
    }
    let maps = match mode {
        EnumerationMode::Full => {
            let size = code.size();
            if size > limits.enumeration as u128 {
                return Err(Error::EnumerationLimitExceeded(size, limits.enumeration as u128));
            }
            let logs: Vec<u64> = code.distinct_logs().collect();
            let mut maps = logs
                .par_chunks(256)
                .map(|chunk| {
                    let mut acc = vec![BTreeMap::new(); bmax];
                    let mut buf = vec![0u32; n];
                    for &l in chunk {
                        code.codeword_symbols_log(l, &mut buf);
                        for (b, w) in weights_upto(&buf, bmax).into_iter().enumerate() {
                            *acc[b].entry(w).or_insert(0u64) += 1;
                        }
                    }
                    acc
                })
                .reduce(|| vec![BTreeMap::new(); bmax], merge);
            for m in maps.iter_mut() {
                *m.entry(0).or_insert(0) += 1;
            }
            maps = maps
                .into_iter()
                .map(|m| WeightDistribution { b: 0, n, view: DistributionView::Distinct, entries: m }.entries)
                .collect();
            (maps, DistributionView::Distinct)
        }
        EnumerationMode::Orbits => {
            // c(α^{l + t·step}) is a shift of c(α^l), so l < step covers every orbit
            let step = code.theta_log();
            let orbit = code.field().group_order() as u64 / step;
            let mut maps = (0..step)
                .into_par_iter()
                .fold(
                    || (vec![BTreeMap::new(); bmax], vec![0u32; n]),
                    |(mut acc, mut buf), l| {
                        code.codeword_symbols_log(l, &mut buf);
                        for (b, w) in weights_upto(&buf, bmax).into_iter().enumerate() {
                            *acc[b].entry(w).or_insert(0u64) += orbit;
                        }
                        (acc, buf)
                    },
                )
                .map(|(acc, _)| acc)
                .reduce(|| vec![BTreeMap::new(); bmax], merge);
            for m in maps.iter_mut() {
                *m.entry(0).or_insert(0) += 1;
            }
            (maps, DistributionView::BetaIndexed)
        }
        EnumerationMode::PerClass => {
            let n1 = code.n1() as u64;
            let class_size = code.field().group_order() as u64 / n1;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut maps = vec![BTreeMap::new(); bmax];
            let mut buf = vec![0u32; n];
            for i in 0..n1 {
                code.codeword_symbols_log(i, &mut buf);
                let rep = weights_upto(&buf, bmax);
                for _ in 0..3 {
                    let t = rng.gen_range(0..class_size);
                    code.codeword_symbols_log(i + n1 * t, &mut buf);
                    let other = weights_upto(&buf, bmax);
                    if let Some(b) = (0..bmax).find(|&b| other[b] != rep[b]) {
                        return Err(Error::ClassConstancyViolated {
                            class: i as u32,
                            expected: rep[b] as u32,
                            got: other[b] as u32,
                        });
                    }
                }
                for (b, &w) in rep.iter().enumerate() {
                    *maps[b].entry(w).or_insert(0u64) += class_size;
                }
            }
            for m in maps.iter_mut() {
                *m.entry(0).or_insert(0) += 1;
            }
            (maps, DistributionView::BetaIndexed)
        }
    };
    let (maps, native) = maps;
    maps.into_iter()
        .enumerate()
        .map(|(b, entries)| WeightDistribution { b: b + 1, n, view: native, entries }.to_view(code, view))
        .collect()
}

/// Exact distribution of `w_b` over the code.
pub fn brute_distribution(
    code: &Code,
    b: usize,
    mode: EnumerationMode,
    view: DistributionView,
    limits: &Limits,
    seed: u64,
) -> Result<WeightDistribution> {
    if b == 0 || b > code.n() {
        return Err(Error::BOutOfRange(b, code.n()));
    }
    Ok(brute_distributions(code, b, mode, view, limits, seed)?.pop().expect("b >= 1"))
}

/// Minimum b-symbol distance over one codeword per shift orbit.
pub fn min_db(code: &Code, b: usize, limits: &Limits) -> Result<usize> {
    let d = brute_distribution(code, b, EnumerationMode::Orbits, DistributionView::Distinct, limits, 0)?;
    d.min_nonzero().ok_or(Error::WeightOutOfRange("code has no nonzero codeword".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bsymbol::{all_weights, cyclic_shift, w_b};

    fn f16() -> FieldDescriptor {
        FieldDescriptor::new(2, 4, None).unwrap()
    }

    #[test]
    fn construction_parameters() {
        let c = build_code(&f16(), 2, 1).unwrap();
        assert_eq!((c.n(), c.n1(), c.k0()), (15, 1, 4));
        let c = build_code(&f16(), 2, 5).unwrap();
        assert_eq!((c.n(), c.n1(), c.k0()), (3, 5, 2));
        assert!(c.is_semi_primitive());
        let f81 = FieldDescriptor::new(3, 4, None).unwrap();
        let c = build_code(&f81, 3, 20).unwrap();
        assert_eq!((c.n(), c.n1()), (4, 20));
        assert!(matches!(build_code(&f16(), 8, 1), Err(Error::NotSubfield(8, 16))));
        assert!(matches!(build_code(&f16(), 2, 4), Err(Error::NNotDivisor(4, 15))));
    }

    #[test]
    fn codewords_are_linear_and_shift() {
        let f = FieldDescriptor::new(3, 4, None).unwrap();
        let c = build_code(&f, 3, 5).unwrap();
        let k = c.symbol_field();
        assert!(c.codeword(0).unwrap().is_zero());
        for (x, y) in [(1u32, 7u32), (20, 55), (80, 3)] {
            for a in 0..3u32 {
                let lhs = c.codeword(f.add(f.mul(c.subfield().embed(&f, a), x), y)).unwrap();
                let cx = c.codeword(x).unwrap();
                let cy = c.codeword(y).unwrap();
                let rhs: Vec<u32> =
                    cx.symbols().iter().zip(cy.symbols()).map(|(&u, &v)| k.add(k.mul(a, u), v)).collect();
                assert_eq!(lhs.symbols(), &rhs[..]);
            }
            // c(βθ) is c(β) read one step later
            let theta = f.exp(c.theta_log());
            let moved = c.codeword(f.mul(x, theta)).unwrap();
            assert_eq!(cyclic_shift(&moved, 1), c.codeword(x).unwrap());
        }
    }

    #[test]
    fn distinct_codewords_cover_the_code() {
        for (p, e, s, big_n) in [(2, 4, 1, 5), (2, 6, 1, 9), (3, 4, 1, 10), (2, 6, 2, 7)] {
            let f = FieldDescriptor::new(p, e, None).unwrap();
            let c = Code::new(&f, s, big_n).unwrap();
            let mut from_beta = std::collections::HashSet::new();
            for beta in 0..f.order() {
                from_beta.insert(c.codeword(beta).unwrap());
            }
            let mut distinct: std::collections::HashSet<Word> = c.distinct_logs().map(|l| c.codeword_log(l)).collect();
            distinct.insert(Word::zero(c.q() as u32, c.n()));
            assert_eq!(distinct.len() as u128, c.size());
            assert_eq!(from_beta, distinct);
            assert_eq!(crate::linalg::rank(c.symbol_field(), &c.generator_matrix()), c.k0() as usize);
        }
    }

    #[test]
    fn messages_map_through_the_generator() {
        let f = FieldDescriptor::new(2, 6, None).unwrap();
        let c = Code::new(&f, 2, 3).unwrap();
        let g = c.generator_matrix();
        let k = c.symbol_field();
        for u in [[1u32, 0, 0], [2, 3, 1], [0, 0, 3]] {
            let via_g = crate::linalg::combine(k, &u, &g);
            assert_eq!(c.codeword(c.message_beta(&u)).unwrap().symbols(), &via_g[..]);
        }
    }

    #[test]
    fn simplex_is_one_weight() {
        let f = f16();
        let s = Code::simplex(&f, 1).unwrap();
        assert_eq!(s.kind(), CodeKind::Irreducible);
        let d = brute_distribution(&s, 1, EnumerationMode::Full, DistributionView::Distinct, &Limits::default(), 0)
            .unwrap();
        assert_eq!(d.enumerator(), "1 + 15T^8");
        // C(81, 2) is two-weight; the projective form is the Simplex code
        let f81 = FieldDescriptor::new(3, 4, None).unwrap();
        let two = Code::new(&f81, 1, 2).unwrap();
        let d2 = brute_distribution(&two, 1, EnumerationMode::Full, DistributionView::Distinct, &Limits::default(), 0)
            .unwrap();
        assert_eq!(d2.weights(), vec![24, 30]);
        let s43 = Code::simplex(&f81, 1).unwrap();
        assert_eq!(s43.kind(), CodeKind::ProjectiveSimplex);
        let d3 = brute_distribution(&s43, 1, EnumerationMode::Full, DistributionView::Distinct, &Limits::default(), 0)
            .unwrap();
        assert_eq!(d3.enumerator(), "1 + 80T^27");
    }

    #[test]
    fn constacyclic_shift_stays_in_code() {
        let f81 = FieldDescriptor::new(3, 4, None).unwrap();
        let s = Code::simplex(&f81, 1).unwrap();
        for l in [0u64, 5, 33] {
            let c = s.codeword_log(l);
            for t in [-3i64, -1, 1, 2, 41] {
                let moved = s.shift(&c, t);
                assert!(s.contains(&moved));
                assert_eq!(all_weights(&moved), all_weights(&c));
            }
            assert_eq!(s.shift(&s.shift(&c, 7), -7), c);
        }
        assert!(!s.contains(&cyclic_shift(&s.codeword_log(0), 1)));
        // over F_4 the scalar differs from its inverse
        let f64_ = FieldDescriptor::new(2, 6, None).unwrap();
        let s34 = Code::simplex(&f64_, 2).unwrap();
        assert_eq!(s34.kind(), CodeKind::ProjectiveSimplex);
        let theta_inv = f64_.exp(f64_.group_order() as u64 - 1);
        for l in [0u64, 9] {
            let c = s34.codeword_log(l);
            let expect = s34.codeword(f64_.mul(f64_.exp(l), theta_inv)).unwrap();
            assert_eq!(s34.shift(&c, 1), expect);
            assert!(s34.contains(&s34.shift(&c, 5)));
        }
    }

    #[test]
    fn saturation_at_dimension() {
        let c = build_code(&f16(), 2, 5).unwrap();
        for b in 2..=3 {
            let d = brute_distribution(&c, b, EnumerationMode::Full, DistributionView::Distinct, &Limits::default(), 0)
                .unwrap();
            assert_eq!(d.enumerator(), "1 + 3T^3");
        }
        let s = build_code(&f16(), 2, 1).unwrap();
        let l = Limits::default();
        assert_eq!((1..=5).map(|b| min_db(&s, b, &l).unwrap()).collect::<Vec<_>>(), vec![8, 12, 14, 15, 15]);
    }

    #[test]
    fn views_and_modes_agree() {
        let limits = Limits::default();
        for (p, e, s, big_n) in [(2, 4, 1, 5), (2, 6, 1, 3), (3, 4, 1, 10), (2, 6, 2, 7), (5, 2, 1, 4), (2, 8, 2, 17)] {
            let f = FieldDescriptor::new(p, e, None).unwrap();
            let c = Code::new(&f, s, big_n).unwrap();
            for b in 1..=c.n().min(4) {
                let full = brute_distribution(&c, b, EnumerationMode::Full, DistributionView::BetaIndexed, &limits, 0)
                    .unwrap();
                let per =
                    brute_distribution(&c, b, EnumerationMode::PerClass, DistributionView::BetaIndexed, &limits, 7)
                        .unwrap();
                assert_eq!(full, per);
                let orbits =
                    brute_distribution(&c, b, EnumerationMode::Orbits, DistributionView::BetaIndexed, &limits, 0)
                        .unwrap();
                assert_eq!(full, orbits);
                assert_eq!(full.total(), f.order() as u64);
                let distinct = full.to_view(&c, DistributionView::Distinct).unwrap();
                assert_eq!(distinct.total() as u128, c.size());
                assert_eq!(distinct.count(0), 1);
                // direct count over every β
                let mut direct = BTreeMap::new();
                for beta in 0..f.order() {
                    *direct.entry(w_b(&c.codeword(beta).unwrap(), b).unwrap()).or_insert(0u64) += 1;
                }
                assert_eq!(full.entries, direct);
            }
        }
    }

    #[test]
    fn enumeration_limit() {
        let f = FieldDescriptor::new(2, 10, None).unwrap();
        let c = Code::new(&f, 1, 1).unwrap();
        let tight = Limits { enumeration: 1000, ..Limits::default() };
        assert!(matches!(
            brute_distribution(&c, 1, EnumerationMode::Full, DistributionView::Distinct, &tight, 0),
            Err(Error::EnumerationLimitExceeded(1024, 1000))
        ));
        assert!(brute_distribution(&c, 1, EnumerationMode::PerClass, DistributionView::Distinct, &tight, 0).is_ok());
    }
}
