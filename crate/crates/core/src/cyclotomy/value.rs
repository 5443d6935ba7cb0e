use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// An element `Σ_t c_t ζ_p^t` of `Z[ζ_p]`, `ζ_p = e^{2πi/p}`.
///
/// Stored in canonical form with `c_{p-1} = 0`, using `Σ_t ζ_p^t = 0`; two
/// values are equal iff their canonical vectors are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclotomicValue {
    counts: Vec<i64>,
}

impl CyclotomicValue {
    pub fn zero(p: u32) -> Self {
        CyclotomicValue { counts: vec![0; p as usize] }
    }

    pub fn integer(p: u32, n: i64) -> Self {
        let mut v = Self::zero(p);
        v.counts[0] = n;
        v
    }

    /// `ζ_p^t`.
    pub fn root_power(p: u32, t: u32) -> Self {
        let mut counts = vec![0; p as usize];
        counts[(t % p) as usize] = 1;
        Self::from_counts(counts)
    }

    /// Canonicalises an arbitrary coefficient vector of length `p`.
    pub fn from_counts(mut counts: Vec<i64>) -> Self {
        assert!(!counts.is_empty(), "characteristic must be positive");
        let last = *counts.last().unwrap();
        if last != 0 {
            counts.iter_mut().for_each(|c| *c -= last);
        }
        CyclotomicValue { counts }
    }

    /// The quadratic Gauss sum `Σ_t (t/p) ζ_p^t` for odd `p`; its square is `(-1)^{(p-1)/2} p`.
    pub fn quadratic_gauss_sum(p: u32) -> Self {
        assert!(p > 2, "needs an odd prime");
        let counts = (0..p)
            .map(|t| match crate::numtheory::pow_mod(t as u64, (p as u64 - 1) / 2, p as u64) {
                0 => 0,
                1 => 1,
                _ => -1,
            })
            .collect();
        Self::from_counts(counts)
    }

    pub fn p(&self) -> u32 {
        self.counts.len() as u32
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.p(), other.p(), "characteristic mismatch");
        let counts = self.counts.iter().zip(&other.counts).map(|(a, b)| a + b).collect();
        Self::from_counts(counts)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        CyclotomicValue { counts: self.counts.iter().map(|c| c * k).collect() }
    }

    /// `self += k * other` in place.
    pub fn add_scaled(&mut self, other: &Self, k: i64) {
        if k == 0 {
            return;
        }
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += k * b;
        }
    }

    /// Product in `Z[ζ_p]`: cyclic convolution of exponents mod `p`.
    pub fn mul(&self, other: &Self) -> Self {
        let p = self.counts.len();
        assert_eq!(p, other.counts.len(), "characteristic mismatch");
        let mut out = vec![0i64; p];
        for (i, &a) in self.counts.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.counts.iter().enumerate() {
                out[(i + j) % p] += a * b;
            }
        }
        Self::from_counts(out)
    }

    /// The rational-integer value, if this element is one.
    pub fn as_integer(&self) -> Option<i64> {
        let p = self.counts.len();
        if p == 2 {
            // ζ_2 = -1 and the canonical form already folds it away
            return Some(self.counts[0]);
        }
        self.counts[1..p - 1].iter().all(|&c| c == 0).then_some(self.counts[0])
    }

    pub fn to_complex(&self) -> Complex64 {
        let p = self.counts.len() as f64;
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(t, &c)| Complex64::from_polar(c as f64, 2.0 * std::f64::consts::PI * t as f64 / p))
            .sum()
    }

    /// A bound on `|to_complex() - exact value|`.
    pub fn approx_error(&self) -> f64 {
        let mass: f64 = self.counts.iter().map(|c| c.unsigned_abs() as f64).sum();
        (self.counts.len() as f64 + 4.0) * f64::EPSILON * mass
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_form_detects_integers() {
        // ζ + ζ² + ζ³ + ζ⁴ = -1 for p = 5
        let v = CyclotomicValue::from_counts(vec![0, 1, 1, 1, 1]);
        assert_eq!(v.as_integer(), Some(-1));
        let w = CyclotomicValue::from_counts(vec![0, 1, 0, 0, 0]);
        assert_eq!(w.as_integer(), None);
        assert_eq!(CyclotomicValue::from_counts(vec![3, 5]).as_integer(), Some(-2));
    }

    #[test]
    fn gauss_sum_squares_to_signed_p() {
        for p in [3u32, 5, 7, 11, 13] {
            let g = CyclotomicValue::quadratic_gauss_sum(p);
            let sign = if p % 4 == 1 { 1 } else { -1 };
            assert_eq!(g.mul(&g).as_integer(), Some(sign * p as i64));
            let z = g.to_complex();
            assert!((z.norm() - (p as f64).sqrt()).abs() < 1e-9);
        }
    }

    proptest! {
        #[test]
        fn arithmetic_is_canonical(a in proptest::collection::vec(-50i64..50, 7),
                                   b in proptest::collection::vec(-50i64..50, 7),
                                   k in -5i64..5) {
            let x = CyclotomicValue::from_counts(a);
            let y = CyclotomicValue::from_counts(b);
            let s = x.add(&y);
            prop_assert_eq!(s.counts()[6], 0);
            prop_assert!((s.to_complex() - x.to_complex() - y.to_complex()).norm() < 1e-9);
            let t = x.scale(k);
            prop_assert_eq!(t.counts()[6], 0);
            prop_assert!((t.to_complex() - x.to_complex() * k as f64).norm() < 1e-9);
            let m = x.mul(&y);
            prop_assert!((m.to_complex() - x.to_complex() * y.to_complex()).norm() < 1e-6);
            prop_assert_eq!(x.sub(&x).as_integer(), Some(0));
        }
    }
}
