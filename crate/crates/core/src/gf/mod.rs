//! Table-driven arithmetic in F_{p^e}.
//!
//! Elements are encoded as integers `0..p^e` whose base-`p` digits are the
//! coefficients of the polynomial basis `1, α, …, α^{e-1}` (low degree first),
//! where `α` is the root of the modulus. Multiplication goes through
//! log/antilog tables keyed by `α`, addition is digit-wise.
//!
//! ```
//! use bsymbol::gf::FieldDescriptor;
//!
//! let f16 = FieldDescriptor::new(2, 4, Some(&[1, 1, 0, 0, 1])).unwrap();
//! let a = f16.alpha();
//! // α^4 = α + 1
//! assert_eq!(f16.pow(a, 4), f16.add(a, 1));
//! ```

mod poly;
mod trace;

pub use trace::Subfield;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{is_prime, prime_factors};

/// Default bound on `p^e` for table construction.
pub const DEFAULT_TABLE_LIMIT: u64 = 1 << 24;

/// Serialisable field description: `{p, e, modulus: [c0, …, ce]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldConfig {
    pub p: u32,
    pub e: u32,
    #[serde(default)]
    pub modulus: Option<Vec<u32>>,
}

/// A finite field `F_{p^e}` with a verified primitive modulus.
///
/// Immutable after construction; share it by reference across threads.
#[derive(Clone)]
pub struct FieldDescriptor {
    p: u32,
    e: u32,
    order: u32,
    modulus: Vec<u32>,
    /// exp[k] = α^k for 0 <= k < 2(order-1), doubled so products skip a reduction.
    exp: Vec<u32>,
    /// log[x] for x != 0; log[0] is unused.
    log: Vec<u32>,
    place: Vec<u32>,
}

impl std::fmt::Debug for FieldDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldDescriptor")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}

impl Eq for FieldDescriptor {}

impl FieldDescriptor {
    /// Builds `F_{p^e}` under the default table limit.
    ///
    /// Without a modulus, prime fields use `x - g` for the smallest generator `g`,
    /// and extensions use the monic primitive polynomial whose coefficient
    /// vector, read as base-`p` digits `c0 + c1 p + …`, is smallest.
    pub fn new(p: u32, e: u32, modulus: Option<&[u32]>) -> Result<Self> {
        Self::with_limit(p, e, modulus, DEFAULT_TABLE_LIMIT)
    }

    pub fn from_config(cfg: &FieldConfig) -> Result<Self> {
        Self::new(cfg.p, cfg.e, cfg.modulus.as_deref())
    }

    pub fn config(&self) -> FieldConfig {
        FieldConfig { p: self.p, e: self.e, modulus: Some(self.modulus.clone()) }
    }

    pub fn with_limit(p: u32, e: u32, modulus: Option<&[u32]>, limit: u64) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if e == 0 {
            return Err(Error::BadModulus("extension degree must be positive".into()));
        }
        let size = (p as u64).checked_pow(e).unwrap_or(u64::MAX);
        if size > limit || size > u32::MAX as u64 {
            return Err(Error::TableLimitExceeded(size, limit));
        }
        let modulus = match modulus {
            Some(m) => {
                check_modulus(m, p, e)?;
                m.to_vec()
            }
            None => default_modulus(p, e),
        };
        Ok(Self::build_tables(p, e, modulus))
    }

    fn build_tables(p: u32, e: u32, modulus: Vec<u32>) -> Self {
        let order = p.pow(e);
        let group = (order - 1) as usize;
        let place: Vec<u32> = (0..e).map(|i| p.pow(i)).collect();
        let mut exp = vec![0u32; 2 * group.max(1)];
        let mut log = vec![0u32; order as usize];
        let mut digits = vec![0u32; e as usize];
        digits[0] = 1;
        for k in 0..group {
            let x: u32 = digits.iter().zip(&place).map(|(d, pl)| d * pl).sum();
            exp[k] = x;
            exp[k + group] = x;
            log[x as usize] = k as u32;
            // multiply by α: shift up, then fold the top coefficient with the modulus
            if e == 1 {
                digits[0] = ((digits[0] as u64 * (p - modulus[0]) as u64) % p as u64) as u32;
            } else {
                let top = digits[e as usize - 1];
                for i in (1..e as usize).rev() {
                    digits[i] = digits[i - 1];
                }
                digits[0] = 0;
                for (i, d) in digits.iter_mut().enumerate() {
                    *d = (*d + (p - top) * modulus[i] % p) % p;
                }
            }
        }
        FieldDescriptor { p, e, order, modulus, exp, log, place }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// Number of elements `p^e`.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The table-defining primitive element.
    pub fn alpha(&self) -> u32 {
        self.exp[1 % self.group_order() as usize]
    }

    /// `p^e - 1`.
    pub fn group_order(&self) -> u32 {
        self.order - 1
    }

    pub fn contains(&self, x: u32) -> bool {
        x < self.order
    }

    /// `α^k` for any exponent.
    #[inline]
    pub fn exp(&self, k: u64) -> u32 {
        self.exp[(k % self.group_order() as u64) as usize]
    }

    /// Discrete log base `α`, in `[0, p^e - 2]`.
    #[inline]
    pub fn log(&self, x: u32) -> Result<u32> {
        if x == 0 {
            return Err(Error::LogOfZero);
        }
        if x >= self.order {
            return Err(Error::NotAnElement(x));
        }
        Ok(self.log[x as usize])
    }

    /// Unchecked discrete log; `x` must be a nonzero element.
    #[inline]
    pub fn log_unchecked(&self, x: u32) -> u32 {
        self.log[x as usize]
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.e == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        let p = self.p;
        let (mut a, mut b, mut r) = (a, b, 0);
        for &pl in &self.place {
            let d = a % p + b % p;
            r += if d >= p { d - p } else { d } * pl;
            a /= p;
            b /= p;
        }
        r
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let p = self.p;
        let (mut a, mut r) = (a, 0);
        for &pl in &self.place {
            let d = a % p;
            r += if d == 0 { 0 } else { p - d } * pl;
            a /= p;
        }
        r
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let g = self.group_order();
        Ok(self.exp[((g - self.log[a as usize]) % g) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, k: u64) -> u32 {
        if k == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        self.exp(self.log[a as usize] as u64 * (k % self.group_order() as u64))
    }

    /// Multiplies by a prime-field scalar `c < p`.
    #[inline]
    pub fn scale(&self, c: u32, a: u32) -> u32 {
        match c % self.p {
            0 => 0,
            1 => a,
            c => self.mul(c, a),
        }
    }

    /// Coefficient vector (low degree first).
    pub fn digits(&self, x: u32) -> Vec<u32> {
        let mut x = x;
        (0..self.e)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<u32> {
        if digits.len() != self.e as usize || digits.iter().any(|&d| d >= self.p) {
            return Err(Error::BadModulus(format!("bad coefficient vector {digits:?}")));
        }
        Ok(digits.iter().zip(&self.place).map(|(d, pl)| d * pl).sum())
    }

    /// `x^(p^e')` where `e'` is the subfield degree, i.e. the relative Frobenius.
    pub fn frobenius(&self, x: u32, sub_degree: u32) -> u32 {
        self.pow(x, (self.p as u64).pow(sub_degree))
    }

    pub fn element(&self, value: u32) -> Result<FieldElement<'_>> {
        if !self.contains(value) {
            return Err(Error::NotAnElement(value));
        }
        Ok(FieldElement { field: self, value })
    }

    /// Discrete-log range check that also validates `x`.
    pub fn discrete_log(&self, x: u32) -> Result<u32> {
        self.log(x)
    }
}

fn check_modulus(m: &[u32], p: u32, e: u32) -> Result<()> {
    if m.len() != e as usize + 1 || m[e as usize] != 1 || m.iter().any(|&c| c >= p) {
        return Err(Error::BadModulus(format!("expected a monic degree-{e} coefficient vector over F_{p}, got {m:?}")));
    }
    if !poly::is_irreducible(m, p) {
        return Err(Error::ModulusNotIrreducible(m.to_vec(), p));
    }
    let group = (p as u64).pow(e) - 1;
    let ord = poly::order_of_x(m, p);
    if ord != group {
        return Err(Error::ModulusNotPrimitive(m.to_vec(), ord, group));
    }
    Ok(())
}

fn default_modulus(p: u32, e: u32) -> Vec<u32> {
    if e == 1 {
        let g = smallest_generator(p);
        return vec![(p - g) % p, 1];
    }
    let count = (p as u64).pow(e);
    for v in 0..count {
        let mut m: Vec<u32> = Vec::with_capacity(e as usize + 1);
        let mut t = v;
        for _ in 0..e {
            m.push((t % p as u64) as u32);
            t /= p as u64;
        }
        m.push(1);
        if m[0] == 0 {
            continue;
        }
        if check_modulus(&m, p, e).is_ok() {
            return m;
        }
    }
    unreachable!("every finite field has a primitive polynomial")
}

fn smallest_generator(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    let group = p as u64 - 1;
    let factors = prime_factors(group);
    (2..p)
        .find(|&g| factors.iter().all(|&r| crate::numtheory::pow_mod(g as u64, group / r, p as u64) != 1))
        .expect("prime fields are cyclic")
}

/// Arithmetic operations exposed through [`field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    /// `a^k` where the exponent is the integer encoding of `b`.
    Pow,
    /// Inverse of `a`; `b` is ignored.
    Inv,
}

/// A field element tied to its descriptor.
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    field: &'f FieldDescriptor,
    value: u32,
}

impl std::fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.field == other.field
    }
}

impl<'f> FieldElement<'f> {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> &'f FieldDescriptor {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }
}

/// Checked binary operation on two elements of the same field.
pub fn field_arith<'f>(a: FieldElement<'f>, b: FieldElement<'f>, op: FieldOp) -> Result<FieldElement<'f>> {
    let f = a.field;
    if !std::ptr::eq(f, b.field) && f != b.field {
        return Err(Error::FieldMismatch);
    }
    let value = match op {
        FieldOp::Add => f.add(a.value, b.value),
        FieldOp::Sub => f.sub(a.value, b.value),
        FieldOp::Mul => f.mul(a.value, b.value),
        FieldOp::Div => f.div(a.value, b.value)?,
        FieldOp::Pow => f.pow(a.value, b.value as u64),
        FieldOp::Inv => f.inv(a.value)?,
    };
    Ok(FieldElement { field: f, value })
}
