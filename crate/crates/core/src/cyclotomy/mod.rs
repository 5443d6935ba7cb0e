//! Cyclotomic classes `C_i^{(k,Q)} = α^i ⟨α^k⟩` and the Gaussian periods over them.
//!
//! Periods are kept exactly as trace-count vectors in `Z[ζ_p]`; complex
//! approximations carry explicit error bounds and are used only for the
//! Gauss-sum and circulant-eigenvalue checks.

mod closed_form;
mod numeric;
mod value;

pub use closed_form::{
    gaussian_period_closed_form, semi_primitive, ClosedFormPeriod, PeriodCase, PeriodValue, SemiPrimitive,
};
pub use numeric::{
    autocorrelation_probe, circulant_invertibility, circulant_scan, default_tolerance, gaussian_sum_numeric,
    gaussian_sum_with_trace, AutocorrelationProbe, CirculantReport, ScanRow, Verdict,
};
pub use value::CyclotomicValue;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gf::FieldDescriptor;

fn check_order(field: &FieldDescriptor, k: u32) -> Result<()> {
    let g = field.group_order() as u64;
    if k == 0 || !g.is_multiple_of(k as u64) {
        return Err(Error::OrderNotDivisor(k as u64, g));
    }
    Ok(())
}

/// The `(Q-1)/k` elements `α^{i + kj}` of the class `C_i^{(k,Q)}`.
pub fn cyclotomic_class(field: &FieldDescriptor, k: u32, i: u32) -> Result<impl Iterator<Item = u32> + '_> {
    check_order(field, k)?;
    if i >= k {
        return Err(Error::IndexOutOfRange(i as u64, k as u64));
    }
    let size = field.group_order() / k;
    Ok((0..size).map(move |j| field.exp(i as u64 + k as u64 * j as u64)))
}

/// Class index of a nonzero element: `log(x) mod k`.
pub fn class_of(field: &FieldDescriptor, k: u32, x: u32) -> Result<u32> {
    Ok(field.log(x)? % k)
}

/// `η_i^{(k,Q)} = Σ_{x ∈ C_i} χ_1(x)` as the trace-count vector `c_t = #{x ∈ C_i : T(x) = t}`.
pub fn gaussian_period_exact(field: &FieldDescriptor, k: u32, i: u32) -> Result<CyclotomicValue> {
    let tr = field.absolute_trace_table();
    let class: Vec<u32> = cyclotomic_class(field, k, i)?.collect();
    let mut counts = vec![0i64; field.p() as usize];
    for x in class {
        counts[tr[field.log_unchecked(x) as usize] as usize] += 1;
    }
    Ok(CyclotomicValue::from_counts(counts))
}

/// All `k` Gaussian periods of order `k` over one field.
#[derive(Debug, Clone)]
pub struct PeriodSystem {
    field_order: u64,
    p: u32,
    k: u32,
    exact: Option<Vec<CyclotomicValue>>,
    approx: Vec<Complex64>,
    error: Vec<f64>,
}

impl PeriodSystem {
    /// Exact periods in one pass over `F_Q^*`.
    pub fn exact(field: &FieldDescriptor, k: u32) -> Result<Self> {
        Self::exact_with_trace(field, &field.absolute_trace_table(), k)
    }

    /// As [`PeriodSystem::exact`], reusing a precomputed absolute trace table.
    pub fn exact_with_trace(field: &FieldDescriptor, trace: &[u32], k: u32) -> Result<Self> {
        check_order(field, k)?;
        let p = field.p() as usize;
        let mut counts = vec![vec![0i64; p]; k as usize];
        for (l, &t) in trace.iter().enumerate() {
            counts[l % k as usize][t as usize] += 1;
        }
        let exact: Vec<CyclotomicValue> = counts.into_iter().map(CyclotomicValue::from_counts).collect();
        let approx = exact.iter().map(CyclotomicValue::to_complex).collect();
        let error = exact.iter().map(CyclotomicValue::approx_error).collect();
        Ok(PeriodSystem { field_order: field.order() as u64, p: field.p(), k, exact: Some(exact), approx, error })
    }

    /// Floating-point periods only, by direct summation of `χ_1` over each class.
    pub fn numeric(field: &FieldDescriptor, k: u32) -> Result<Self> {
        Self::numeric_with_trace(field, &field.absolute_trace_table(), k)
    }

    pub fn numeric_with_trace(field: &FieldDescriptor, trace: &[u32], k: u32) -> Result<Self> {
        check_order(field, k)?;
        let p = field.p();
        let zeta: Vec<Complex64> =
            (0..p).map(|t| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * t as f64 / p as f64)).collect();
        let mut approx = vec![Complex64::new(0.0, 0.0); k as usize];
        for (l, &t) in trace.iter().enumerate() {
            approx[l % k as usize] += zeta[t as usize];
        }
        let len = (field.group_order() / k) as f64;
        // recursive summation of `len` unit terms, each within a few ulps
        let err = (len * len + 4.0 * len) * f64::EPSILON;
        Ok(PeriodSystem { field_order: field.order() as u64, p, k, exact: None, approx, error: vec![err; k as usize] })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// `Q`.
    pub fn field_order(&self) -> u64 {
        self.field_order
    }

    pub fn periods(&self) -> Option<&[CyclotomicValue]> {
        self.exact.as_deref()
    }

    /// `η_i` with the index reduced mod `k`.
    pub fn period(&self, i: i64) -> Option<&CyclotomicValue> {
        let k = self.k as i64;
        self.exact.as_ref().map(|v| &v[i.rem_euclid(k) as usize])
    }

    pub fn approx(&self) -> &[Complex64] {
        &self.approx
    }

    pub fn error_bounds(&self) -> &[f64] {
        &self.error
    }

    /// `Σ_i η_i`, exactly when available.
    pub fn exact_sum(&self) -> Option<CyclotomicValue> {
        let v = self.exact.as_ref()?;
        let mut acc = CyclotomicValue::zero(self.p);
        for x in v {
            acc.add_scaled(x, 1);
        }
        Some(CyclotomicValue::from_counts(acc.counts().to_vec()))
    }

    /// Integer values of all periods, when every one is rational.
    pub fn integer_values(&self) -> Option<Vec<i64>> {
        self.exact.as_ref()?.iter().map(CyclotomicValue::as_integer).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes_partition_the_group() {
        let f = FieldDescriptor::new(2, 4, None).unwrap();
        let c0: Vec<u32> = cyclotomic_class(&f, 5, 0).unwrap().collect();
        assert_eq!(c0, vec![1, f.exp(5), f.exp(10)]);
        let mut all: Vec<u32> = (0..5).flat_map(|i| cyclotomic_class(&f, 5, i).unwrap()).collect();
        all.sort();
        assert_eq!(all, (1..16).collect::<Vec<_>>());
        assert_eq!(cyclotomic_class(&f, 1, 0).unwrap().count(), 15);
        assert!(matches!(cyclotomic_class(&f, 4, 0), Err(Error::OrderNotDivisor(4, 15))));
        assert!(matches!(cyclotomic_class(&f, 5, 5), Err(Error::IndexOutOfRange(5, 5))));
    }

    #[test]
    fn squares_of_f9() {
        let f = FieldDescriptor::new(3, 2, None).unwrap();
        let mut squares: Vec<u32> = (1..9).map(|x| f.mul(x, x)).collect();
        squares.sort();
        squares.dedup();
        let mut c0: Vec<u32> = cyclotomic_class(&f, 2, 0).unwrap().collect();
        c0.sort();
        assert_eq!(c0, squares);
    }

    #[test]
    fn periods_of_f9_by_direct_summation() {
        let f = FieldDescriptor::new(3, 2, None).unwrap();
        // oracle: χ_1(x) = ζ_3^{T(x)} summed over squares / non-squares
        for (i, expected) in [(0u32, 1i64), (1, -2)] {
            let mut z = num_complex::Complex64::new(0.0, 0.0);
            for x in 1..9u32 {
                let is_sq = (1..9).any(|y| f.mul(y, y) == x);
                if is_sq == (i == 0) {
                    let t = f.relative_trace(1, x).unwrap();
                    z += num_complex::Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * t as f64 / 3.0);
                }
            }
            assert!((z.re - expected as f64).abs() < 1e-12 && z.im.abs() < 1e-12);
            assert_eq!(gaussian_period_exact(&f, 2, i).unwrap().as_integer(), Some(expected));
        }
    }

    #[test]
    fn trivial_order_gives_minus_one() {
        for (p, e) in [(2, 3), (3, 3), (5, 2), (7, 1)] {
            let f = FieldDescriptor::new(p, e, None).unwrap();
            assert_eq!(gaussian_period_exact(&f, 1, 0).unwrap().as_integer(), Some(-1));
        }
    }

    #[test]
    fn sums_to_minus_one() {
        for (p, e, k) in [(2, 4, 5), (2, 6, 21), (3, 4, 16), (5, 2, 8), (13, 1, 12)] {
            let f = FieldDescriptor::new(p, e, None).unwrap();
            let ps = PeriodSystem::exact(&f, k).unwrap();
            assert_eq!(ps.exact_sum().unwrap().as_integer(), Some(-1));
            let num = PeriodSystem::numeric(&f, k).unwrap();
            for (a, b) in ps.approx().iter().zip(num.approx()) {
                assert!((a - b).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn periods_not_all_equal_for_k_at_least_two() {
        for (p, e) in [(2, 4), (3, 2), (5, 2), (2, 6)] {
            let f = FieldDescriptor::new(p, e, None).unwrap();
            for k in crate::numtheory::divisors(f.group_order() as u64).into_iter().skip(1) {
                let ps = PeriodSystem::exact(&f, k as u32).unwrap();
                let v = ps.periods().unwrap();
                assert!(v.iter().any(|x| x != &v[0]), "p={p} e={e} k={k}");
            }
        }
    }
}
