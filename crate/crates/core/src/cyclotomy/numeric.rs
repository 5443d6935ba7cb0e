use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use super::{CyclotomicValue, PeriodSystem};
use crate::error::Result;
use crate::gf::FieldDescriptor;
use crate::numtheory::{divisors, prime_power};

const TAU: f64 = 2.0 * std::f64::consts::PI;

/// `G(ψ_j) = Σ_{c ∈ F_Q^*} ψ_j(c) χ_1(c)` with `ψ_j(α^l) = e^{2πi jl/(Q-1)}`.
///
/// Returns the value and an absolute error bound.
pub fn gaussian_sum_numeric(field: &FieldDescriptor, j: u64) -> (Complex64, f64) {
    gaussian_sum_with_trace(field, &field.absolute_trace_table(), j)
}

pub fn gaussian_sum_with_trace(field: &FieldDescriptor, trace: &[u32], j: u64) -> (Complex64, f64) {
    let g = field.group_order() as u64;
    let p = field.p() as f64;
    let j = j % g;
    let mut acc = Complex64::new(0.0, 0.0);
    for (l, &t) in trace.iter().enumerate() {
        // exact integer reduction keeps the phase argument small
        let phase = (j * l as u64 % g) as f64 / g as f64 + t as f64 / p;
        acc += Complex64::from_polar(1.0, TAU * phase);
    }
    let len = g as f64;
    (acc, (len * len + 8.0 * len) * f64::EPSILON)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Invertible,
    Singular,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Invertible => "invertible",
            Verdict::Singular => "singular",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CirculantReport {
    pub k: u32,
    pub min_abs_eval: f64,
    /// Index `l` at which `|f(ω^l)|` is smallest.
    pub argmin: u32,
    pub error_bound: f64,
    pub tol: f64,
    pub verdict: Verdict,
}

/// `1e-6 · (Q-1)/k`.
pub fn default_tolerance(field_order: u64, k: u32) -> f64 {
    1e-6 * (field_order - 1) as f64 / k as f64
}

/// Evaluates `f(ω^l) = Σ_i η_i ω^{il}` for every `l < k` and compares `min |f|` with `tol`.
///
/// The circulant matrix of the periods is invertible exactly when no value
/// vanishes. The verdict is `Inconclusive` when the propagated error bound
/// straddles `tol`.
pub fn circulant_invertibility(ps: &PeriodSystem, tol: f64) -> CirculantReport {
    let k = ps.k() as usize;
    let mut buf: Vec<Complex64> = ps.approx().to_vec();
    // forward FFT computes Σ_i x_i e^{-2πi il/k}; f(ω^l) for ω = e^{2πi/k} is entry (k-l) mod k
    FftPlanner::new().plan_fft_forward(k).process(&mut buf);
    let (argmin, min_abs) = buf
        .iter()
        .enumerate()
        .map(|(idx, z)| (((k - idx) % k) as u32, z.norm()))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("k >= 1");
    let input_err: f64 = ps.error_bounds().iter().sum();
    let l2: f64 = ps.approx().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let levels = (k as f64).log2().ceil() + 1.0;
    let fft_err = 5.0 * levels * f64::EPSILON * (k as f64).sqrt() * l2;
    let error_bound = input_err + fft_err;
    let verdict = if min_abs - error_bound > tol {
        Verdict::Invertible
    } else if min_abs + error_bound < tol {
        Verdict::Singular
    } else {
        Verdict::Inconclusive
    };
    CirculantReport { k: k as u32, min_abs_eval: min_abs, argmin, error_bound, tol, verdict }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub field_order: u64,
    pub p: u32,
    pub e: u32,
    pub k: u32,
    pub min_abs_eval: f64,
    pub error_bound: f64,
    pub verdict: Verdict,
}

/// Circulant invertibility for every prime power `Q <= max_order` and every `k | Q-1`.
pub fn circulant_scan(max_order: u64) -> Result<Vec<ScanRow>> {
    let orders: Vec<(u64, u64, u32)> = (2..=max_order).filter_map(|q| prime_power(q).map(|(p, e)| (q, p, e))).collect();
    let rows: Result<Vec<Vec<ScanRow>>> = orders
        .par_iter()
        .map(|&(q, p, e)| {
            let field = FieldDescriptor::with_limit(p as u32, e, None, u64::MAX)?;
            let trace = field.absolute_trace_table();
            divisors(q - 1)
                .into_iter()
                .map(|k| {
                    let k = k as u32;
                    let ps = PeriodSystem::numeric_with_trace(&field, &trace, k)?;
                    let r = circulant_invertibility(&ps, default_tolerance(q, k));
                    Ok(ScanRow {
                        field_order: q,
                        p: p as u32,
                        e,
                        k,
                        min_abs_eval: r.min_abs_eval,
                        error_bound: r.error_bound,
                        verdict: r.verdict,
                    })
                })
                .collect()
        })
        .collect();
    Ok(rows?.into_iter().flatten().collect())
}

/// Which candidate quadratic period identity holds, checked exactly.
///
/// `printed[j]`: `Σ_i η_i² = Qθ_j - (Q-1)/k`. `shifted[j]`:
/// `Σ_i η_i η_{i+j} = Qθ_j - (Q-1)/k`. Here `θ_j = 1` iff `-1 ∈ C_j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AutocorrelationProbe {
    pub field_order: u64,
    pub k: u32,
    pub theta: Vec<u8>,
    pub printed: Vec<bool>,
    pub shifted: Vec<bool>,
}

impl AutocorrelationProbe {
    pub fn printed_holds(&self) -> bool {
        self.printed.iter().all(|&b| b)
    }

    pub fn shifted_holds(&self) -> bool {
        self.shifted.iter().all(|&b| b)
    }
}

pub fn autocorrelation_probe(field: &FieldDescriptor, k: u32) -> Result<AutocorrelationProbe> {
    let ps = PeriodSystem::exact(field, k)?;
    let eta = ps.periods().expect("exact system");
    let q = field.order() as i64;
    let p = field.p();
    let minus_one_class = if p == 2 { 0 } else { (field.group_order() / 2) % k };
    let theta: Vec<u8> = (0..k).map(|j| (j == minus_one_class) as u8).collect();
    let base = (q - 1) / k as i64;
    let rhs = |j: usize| CyclotomicValue::integer(p, q * theta[j] as i64 - base);
    let mut squares = CyclotomicValue::zero(p);
    for x in eta {
        squares = squares.add(&x.mul(x));
    }
    let kk = k as usize;
    let mut printed = Vec::with_capacity(kk);
    let mut shifted = Vec::with_capacity(kk);
    for j in 0..kk {
        printed.push(squares == rhs(j));
        let mut acc = CyclotomicValue::zero(p);
        for i in 0..kk {
            acc = acc.add(&eta[i].mul(&eta[(i + j) % kk]));
        }
        shifted.push(acc == rhs(j));
    }
    Ok(AutocorrelationProbe { field_order: q as u64, k, theta, printed, shifted })
}
