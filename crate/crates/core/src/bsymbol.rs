//! Cyclic b-symbol reads of words over `F_q`.
//!
//! `π_b(x)_i = (x_i, …, x_{i+b-1})` with indices mod `n`; the b-symbol weight
//! counts nonzero windows. Weights for every `b` come from one pass over the
//! cyclic zero runs: a run of length `L` contains `max(0, L-b+1)` all-zero
//! windows.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::FieldDescriptor;

/// A length-`n` word over `F_q`, symbols in the field's integer encoding.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    q: u32,
    symbols: Vec<u32>,
}

impl Word {
    pub fn new(q: u32, symbols: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| s >= q) {
            return Err(Error::NotAnElement(bad));
        }
        Ok(Word { q, symbols })
    }

    pub fn zero(q: u32, n: usize) -> Self {
        Word { q, symbols: vec![0; n] }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn is_zero(&self) -> bool {
        self.symbols.iter().all(|&s| s == 0)
    }

    pub fn hamming_weight(&self) -> usize {
        self.symbols.iter().filter(|&&s| s != 0).count()
    }

    fn check_b(&self, b: usize) -> Result<()> {
        if b == 0 || b > self.len() {
            return Err(Error::BOutOfRange(b, self.len()));
        }
        Ok(())
    }
}

/// `τ^t(x)`, where `τ(x_0, …, x_{n-1}) = (x_{n-1}, x_0, …, x_{n-2})`; negative `t` shifts left.
pub fn cyclic_shift(x: &Word, t: i64) -> Word {
    let n = x.len();
    if n == 0 {
        return x.clone();
    }
    let mut symbols = x.symbols.clone();
    symbols.rotate_right(t.rem_euclid(n as i64) as usize);
    Word { q: x.q, symbols }
}

/// The `n` cyclic windows of length `b`.
pub fn pi_b(x: &Word, b: usize) -> Result<Vec<Vec<u32>>> {
    x.check_b(b)?;
    let n = x.len();
    Ok((0..n).map(|i| (0..b).map(|t| x.symbols[(i + t) % n]).collect()).collect())
}

/// Number of nonzero cyclic length-`b` windows.
pub fn w_b(x: &Word, b: usize) -> Result<usize> {
    x.check_b(b)?;
    Ok(weights_upto(&x.symbols, b)[b - 1])
}

/// `w_1(x), …, w_n(x)`.
pub fn all_weights(x: &Word) -> Vec<usize> {
    weights_upto(&x.symbols, x.len())
}

/// `w_b` of a raw symbol slice for every `1 <= b <= bmax`, in `O(n + bmax)`.
pub fn weights_upto(symbols: &[u32], bmax: usize) -> Vec<usize> {
    let n = symbols.len();
    let Some(first) = symbols.iter().position(|&s| s != 0) else {
        return vec![0; bmax];
    };
    // histogram of maximal cyclic zero-run lengths, scanning from a nonzero symbol
    let mut hist = vec![0usize; n + 1];
    let mut run = 0;
    for k in 1..=n {
        if symbols[(first + k) % n] == 0 {
            run += 1;
        } else {
            hist[run] += 1;
            run = 0;
        }
    }
    let mut out = vec![0; bmax];
    let (mut s0, mut s1) = (0usize, 0usize);
    let mut b = n;
    while b >= 1 {
        s0 += hist[b];
        s1 += b * hist[b];
        if b <= bmax {
            out[b - 1] = n - (s1 - (b - 1) * s0);
        }
        b -= 1;
    }
    for slot in out.iter_mut().skip(n) {
        *slot = n;
    }
    out
}

/// `d_b(x, y) = w_b(x - y)`.
pub fn d_b(field: &FieldDescriptor, x: &Word, y: &Word, b: usize) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    if x.q != y.q || x.q != field.order() {
        return Err(Error::FieldMismatch);
    }
    let diff: Vec<u32> = x.symbols.iter().zip(&y.symbols).map(|(&a, &c)| field.sub(a, c)).collect();
    w_b(&Word { q: x.q, symbols: diff }, b)
}

/// `w_b(x)` through the shift span: `Σ_{u ∈ F_q^b} w_1(Σ_j u_j τ^{-j} x) / (q^{b-1}(q-1))`.
///
/// Exponential in `b`; an oracle for [`w_b`] on short words.
pub fn w_b_via_shift_span(field: &FieldDescriptor, x: &Word, b: usize) -> Result<usize> {
    x.check_b(b)?;
    if x.q != field.order() {
        return Err(Error::FieldMismatch);
    }
    let rows: Vec<Vec<u32>> = (0..b).map(|j| cyclic_shift(x, -(j as i64)).symbols).collect();
    let mut total = 0usize;
    crate::linalg::for_each_in_span(field, &rows, u64::MAX, |v| {
        total += v.iter().filter(|&&s| s != 0).count();
    })?;
    let q = field.order() as usize;
    Ok(total / (q.pow(b as u32 - 1) * (q - 1)))
}

/// A subset of the coordinates `{0, …, n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SupportSet {
    n: usize,
    indices: Vec<usize>,
}

impl SupportSet {
    pub fn new(n: usize, mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        indices.dedup();
        if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange(bad as u64, n as u64));
        }
        Ok(SupportSet { n, indices })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn complement(&self) -> SupportSet {
        let indices = (0..self.n).filter(|&i| !self.contains(i)).collect();
        SupportSet { n: self.n, indices }
    }
}

/// `I_b(x)`: start positions of the nonzero windows of `π_b(x)`.
pub fn bsymbol_support(x: &Word, b: usize) -> Result<SupportSet> {
    x.check_b(b)?;
    let n = x.len();
    let indices = (0..n).filter(|&i| (0..b).any(|t| x.symbols[(i + t) % n] != 0)).collect();
    Ok(SupportSet { n, indices })
}

/// `I_b(x)` as the union of the supports of `x` shifted left by `0..b`.
///
/// Left shifts index each window by its first coordinate, which is the
/// convention of [`pi_b`]; right shifts give the same set moved by `b-1`.
pub fn bsymbol_support_union(x: &Word, b: usize) -> Result<SupportSet> {
    x.check_b(b)?;
    let mut indices = Vec::new();
    for i in 0..b {
        let shifted = cyclic_shift(x, -(i as i64));
        indices.extend(shifted.symbols.iter().enumerate().filter(|(_, &s)| s != 0).map(|(j, _)| j));
    }
    SupportSet::new(x.len(), indices)
}
