use serde::{Deserialize, Serialize};

use super::CyclotomicValue;
use crate::error::{Error, Result};
use crate::numtheory::is_prime;

/// Which known evaluation produced a closed-form period.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PeriodCase {
    /// `k = 2`, `p ≡ 1 (mod 4)`.
    QuadraticP1,
    /// `k = 2`, `p ≡ 3 (mod 4)`.
    QuadraticP3,
    /// `k = 3`, `p ≡ 2 (mod 3)`.
    Cubic,
    /// `k = 4`, `p ≡ 3 (mod 4)`, outside the odd semi-primitive sub-case.
    Quartic,
    /// Semi-primitive with `γ`, `p` and `(p^j+1)/k` all odd.
    SemiPrimitiveOdd,
    /// Every other semi-primitive configuration.
    SemiPrimitive,
}

impl PeriodCase {
    pub fn tag(self) -> &'static str {
        match self {
            PeriodCase::QuadraticP1 => "quadratic-p1mod4",
            PeriodCase::QuadraticP3 => "quadratic-p3mod4",
            PeriodCase::Cubic => "cubic",
            PeriodCase::Quartic => "quartic",
            PeriodCase::SemiPrimitiveOdd => "semi-primitive-odd",
            PeriodCase::SemiPrimitive => "semi-primitive",
        }
    }
}

/// A closed-form period value.
///
/// `Rational` is `num/den`. `Quadratic` is `(a + c·g)/den` with `g` the
/// quadratic Gauss sum over `F_p`, which is how `√Q` (or `i^{sm}√Q`) enters
/// when `sm` is odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PeriodValue {
    Rational { num: i64, den: i64 },
    Quadratic { a: i64, c: i64, den: i64 },
}

impl PeriodValue {
    /// The integer value, when the formula yields one.
    pub fn as_integer(&self) -> Option<i64> {
        match *self {
            PeriodValue::Rational { num, den } if num % den == 0 => Some(num / den),
            _ => None,
        }
    }

    pub fn to_f64(&self, p: u32) -> f64 {
        match *self {
            PeriodValue::Rational { num, den } => num as f64 / den as f64,
            PeriodValue::Quadratic { a, c, den } => {
                let g = CyclotomicValue::quadratic_gauss_sum(p).to_complex();
                (a as f64 + c as f64 * g.re) / den as f64
            }
        }
    }

    /// `den·value` as an element of `Z[ζ_p]`, together with `den`.
    pub fn scaled_cyclotomic(&self, p: u32) -> (CyclotomicValue, i64) {
        match *self {
            PeriodValue::Rational { num, den } => (CyclotomicValue::integer(p, num), den),
            PeriodValue::Quadratic { a, c, den } => {
                let g = CyclotomicValue::quadratic_gauss_sum(p).scale(c);
                (g.add(&CyclotomicValue::integer(p, a)), den)
            }
        }
    }

    /// Exact equality with a computed period.
    pub fn matches(&self, exact: &CyclotomicValue) -> bool {
        let (scaled, den) = self.scaled_cyclotomic(exact.p());
        exact.scale(den) == scaled
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormPeriod {
    pub value: PeriodValue,
    pub case: PeriodCase,
}

/// Semi-primitive data: least `j` with `p^j ≡ -1 (mod k)`, and `γ` with `Q = p^{2jγ}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiPrimitive {
    pub j: u32,
    pub gamma: u32,
}

/// Semi-primitive parameters of `(p, e = sm, k)` when they exist.
pub fn semi_primitive(p: u32, e: u32, k: u32) -> Option<SemiPrimitive> {
    if k <= 2 {
        return None;
    }
    let k64 = k as u64;
    let target = k64 - 1;
    let mut acc = 1u64;
    for j in 1..=k {
        acc = acc * (p as u64 % k64) % k64;
        if acc == target {
            return e.is_multiple_of(2 * j).then_some(SemiPrimitive { j, gamma: e / (2 * j) });
        }
        if acc == 1 {
            // powers cycle back before ever reaching -1
            return None;
        }
    }
    None
}

/// `(-1)^n`.
fn sign(n: u32) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The known closed-form evaluations of `η_i^{(k,Q)}`, `Q = p^{sm}`.
///
/// Returns [`Error::NoClosedFormCase`] when none applies; callers then fall
/// back to the exact trace-count computation.
pub fn gaussian_period_closed_form(p: u32, s: u32, m: u32, k: u32, i: u32) -> Result<ClosedFormPeriod> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let e = s.checked_mul(m).filter(|&e| e > 0).ok_or(Error::BadModulus(format!("extension degree s·m = {s}·{m}")))?;
    let q_big = (p as u128).checked_pow(e).filter(|&q| q < (1u128 << 62));
    let q_big = q_big.ok_or_else(|| Error::NoClosedFormCase(format!("{p}^{e} exceeds the supported range")))? as u64;
    if k == 0 || !(q_big - 1).is_multiple_of(k as u64) {
        return Err(Error::OrderNotDivisor(k as u64, q_big - 1));
    }
    if i >= k {
        return Err(Error::IndexOutOfRange(i as u64, k as u64));
    }
    let half = |n: u32| (p as i64).pow(n);
    let k_i = k as i64;
    let sp = semi_primitive(p, e, k);
    let odd_semi = sp.filter(|sp| sp.gamma % 2 == 1 && p % 2 == 1 && (((p as u64).pow(sp.j) + 1) / k as u64) % 2 == 1);

    if k == 2 {
        // Q = p^e with p odd; √Q is p^{e/2} or, for odd e, p^{(e-1)/2}·|g|
        let (case, eta0) = if p % 4 == 1 {
            let v = if e % 2 == 0 {
                PeriodValue::Rational { num: -1 + sign(e - 1) * half(e / 2), den: 2 }
            } else {
                // g = √p here
                PeriodValue::Quadratic { a: -1, c: half((e - 1) / 2), den: 2 }
            };
            (PeriodCase::QuadraticP1, v)
        } else {
            let v = if e % 2 == 0 {
                // (-1)^{e-1} i^e √Q = -(-1)^{e/2} p^{e/2}
                PeriodValue::Rational { num: -1 - sign(e / 2) * half(e / 2), den: 2 }
            } else {
                // i^e √Q = (-1)^{(e-1)/2} p^{(e-1)/2} · i√p and g = i√p
                PeriodValue::Quadratic { a: -1, c: sign((e - 1) / 2) * half((e - 1) / 2), den: 2 }
            };
            (PeriodCase::QuadraticP3, v)
        };
        let value = if i == 0 {
            eta0
        } else {
            match eta0 {
                PeriodValue::Rational { num, den } => PeriodValue::Rational { num: -den - num, den },
                PeriodValue::Quadratic { a, c, den } => PeriodValue::Quadratic { a: -den - a, c: -c, den },
            }
        };
        return Ok(ClosedFormPeriod { value, case });
    }

    if k == 3 && p % 3 == 2 {
        // 3 | Q-1 forces e even, so i^e √Q = (-1)^{e/2} p^{e/2}
        let r = sign(e / 2) * half(e / 2);
        let num = if i == 0 { -1 - 2 * r } else { -1 + r };
        return Ok(ClosedFormPeriod { value: PeriodValue::Rational { num, den: 3 }, case: PeriodCase::Cubic });
    }

    if k == 4 && p % 4 == 3 && odd_semi.is_none() {
        let r = sign(e / 2) * half(e / 2);
        let num = if i == 0 { -1 - 3 * r } else { -1 + r };
        return Ok(ClosedFormPeriod { value: PeriodValue::Rational { num, den: 4 }, case: PeriodCase::Quartic });
    }

    if let Some(sp) = sp {
        let root = half(e / 2);
        if odd_semi.is_some() {
            let num = if i == k / 2 { (k_i - 1) * root - 1 } else { -root - 1 };
            return Ok(ClosedFormPeriod {
                value: PeriodValue::Rational { num, den: k_i },
                case: PeriodCase::SemiPrimitiveOdd,
            });
        }
        let num = if i == 0 { sign(sp.gamma + 1) * (k_i - 1) * root - 1 } else { sign(sp.gamma) * root - 1 };
        return Ok(ClosedFormPeriod {
            value: PeriodValue::Rational { num, den: k_i },
            case: PeriodCase::SemiPrimitive,
        });
    }

    Err(Error::NoClosedFormCase(format!("p={p}, sm={e}, k={k}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomy::PeriodSystem;
    use crate::gf::FieldDescriptor;
    use crate::numtheory::{divisors, prime_power};

    #[test]
    fn f9_quadratic() {
        let c = gaussian_period_closed_form(3, 2, 1, 2, 0).unwrap();
        assert_eq!(c.case, PeriodCase::QuadraticP3);
        assert_eq!(c.value.as_integer(), Some(1));
        assert_eq!(gaussian_period_closed_form(3, 1, 2, 2, 1).unwrap().value.as_integer(), Some(-2));
    }

    #[test]
    fn f16_order_five_is_semi_primitive_other() {
        // p even, so the odd sub-case cannot apply
        assert_eq!(semi_primitive(2, 4, 5), Some(SemiPrimitive { j: 2, gamma: 1 }));
        let c0 = gaussian_period_closed_form(2, 4, 1, 5, 0).unwrap();
        assert_eq!(c0.case, PeriodCase::SemiPrimitive);
        assert_eq!(c0.value.as_integer(), Some(3));
        assert_eq!(gaussian_period_closed_form(2, 4, 1, 5, 3).unwrap().value.as_integer(), Some(-1));
        let f = FieldDescriptor::new(2, 4, None).unwrap();
        let ps = PeriodSystem::exact(&f, 5).unwrap();
        assert_eq!(ps.integer_values().unwrap(), vec![3, -1, -1, -1, -1]);
    }

    #[test]
    fn semi_primitive_even_gamma_shape() {
        // Q = 2^8, k = 5: j = 2, γ = 2
        let c = gaussian_period_closed_form(2, 8, 1, 5, 0).unwrap();
        assert_eq!(c.value, PeriodValue::Rational { num: -4 * 16 - 1, den: 5 });
        let c = gaussian_period_closed_form(2, 8, 1, 5, 2).unwrap();
        assert_eq!(c.value, PeriodValue::Rational { num: 16 - 1, den: 5 });
    }

    #[test]
    fn odd_semi_primitive_overrides_quartic() {
        // F_9, k = 4: p ≡ 3 (mod 8) and γ = 1, where the quartic formula gives 2
        let f = FieldDescriptor::new(3, 2, None).unwrap();
        let exact = PeriodSystem::exact(&f, 4).unwrap().integer_values().unwrap();
        assert_eq!(exact[0], -1);
        let c = gaussian_period_closed_form(3, 2, 1, 4, 0).unwrap();
        assert_eq!(c.case, PeriodCase::SemiPrimitiveOdd);
        assert_eq!(c.value.as_integer(), Some(exact[0]));
        // F_49, k = 4: (7+1)/4 even, the quartic formula applies
        assert_eq!(gaussian_period_closed_form(7, 2, 1, 4, 0).unwrap().case, PeriodCase::Quartic);
    }

    #[test]
    fn outside_every_case() {
        assert!(matches!(gaussian_period_closed_form(2, 4, 1, 15, 0), Err(Error::NoClosedFormCase(_))));
        assert!(matches!(gaussian_period_closed_form(7, 1, 1, 3, 0), Err(Error::NoClosedFormCase(_))));
        assert!(matches!(gaussian_period_closed_form(2, 4, 1, 7, 0), Err(Error::OrderNotDivisor(7, 15))));
        assert!(matches!(gaussian_period_closed_form(4, 1, 1, 3, 0), Err(Error::NotPrime(4))));
    }

    /// Exact agreement wherever a closed form fires, for every field of order at most 2^12.
    #[test]
    fn closed_forms_agree_with_exact_periods() {
        let mut fired = 0;
        for q in 3..=4096u64 {
            let Some((p, e)) = prime_power(q) else { continue };
            let f = FieldDescriptor::new(p as u32, e, None).unwrap();
            let tr = f.absolute_trace_table();
            for k in divisors(q - 1) {
                let k = k as u32;
                if gaussian_period_closed_form(p as u32, e, 1, k, 0).is_err() {
                    continue;
                }
                let ps = PeriodSystem::exact_with_trace(&f, &tr, k).unwrap();
                for (i, eta) in ps.periods().unwrap().iter().enumerate() {
                    let c = gaussian_period_closed_form(p as u32, 1, e, k, i as u32).unwrap();
                    assert!(c.value.matches(eta), "Q={q} k={k} i={i} case={:?} value={:?}", c.case, c.value);
                    if e % 2 == 0 && matches!(c.case, PeriodCase::SemiPrimitive | PeriodCase::SemiPrimitiveOdd) {
                        assert!(eta.as_integer().is_some());
                    }
                    fired += 1;
                }
            }
        }
        assert!(fired > 1000);
    }
}
