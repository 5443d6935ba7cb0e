use super::{poly, FieldDescriptor};
use crate::error::{Error, Result};

impl FieldDescriptor {
    /// Relative trace `T(x) = Σ_{i<m} x^{q^i}` onto the subfield `F_q`, `q = p^sub_degree`.
    ///
    /// Evaluated directly by repeated Frobenius; the result is checked to be
    /// fixed by `x ↦ x^q`.
    pub fn relative_trace(&self, sub_degree: u32, x: u32) -> Result<u32> {
        if sub_degree == 0 || !self.e.is_multiple_of(sub_degree) {
            return Err(Error::DegreeNotDivisor(sub_degree, self.e));
        }
        if !self.contains(x) {
            return Err(Error::NotAnElement(x));
        }
        let m = self.e / sub_degree;
        let mut acc = 0;
        let mut y = x;
        for _ in 0..m {
            acc = self.add(acc, y);
            y = self.frobenius(y, sub_degree);
        }
        debug_assert_eq!(self.frobenius(acc, sub_degree), acc);
        Ok(acc)
    }

    /// `T_{F/F_{p^sub_degree}}(α^k)` for every `0 <= k < p^e - 1`, as elements of this field.
    ///
    /// Built from the traces of the polynomial basis using F_p-linearity, one
    /// field addition per element.
    pub fn trace_table(&self, sub_degree: u32) -> Result<Vec<u32>> {
        if sub_degree == 0 || !self.e.is_multiple_of(sub_degree) {
            return Err(Error::DegreeNotDivisor(sub_degree, self.e));
        }
        let basis: Vec<u32> =
            (0..self.e).map(|j| self.relative_trace(sub_degree, self.exp(j as u64))).collect::<Result<_>>()?;
        let p = self.p;
        // by_value[x] = T(x) for the integer encoding x
        let mut by_value = vec![0u32; self.order as usize];
        let mut place = 1u32;
        for b in &basis {
            let len = place as usize;
            let mut step = 0;
            for d in 1..p {
                step = self.add(step, *b);
                let off = (d * place) as usize;
                for x in 0..len {
                    by_value[off + x] = self.add(by_value[x], step);
                }
            }
            place *= p;
        }
        Ok((0..self.group_order() as usize).map(|k| by_value[self.exp[k] as usize]).collect())
    }

    /// Absolute trace of `α^k` as an integer in `0..p`.
    pub fn absolute_trace_table(&self) -> Vec<u32> {
        // F_p sits inside the encoding as the constant digit
        self.trace_table(1).expect("degree 1 divides every extension")
    }

    /// The subfield `F_{p^s}` with its own descriptor, primitive element `α^{(Q-1)/(q-1)}`.
    pub fn subfield(&self, s: u32) -> Result<Subfield> {
        if s == 0 || !self.e.is_multiple_of(s) {
            return Err(Error::DegreeNotDivisor(s, self.e));
        }
        let q = self.p.pow(s);
        let step = self.group_order() / (q - 1);
        let gamma = self.exp(step as u64);
        let modulus = self.minimal_polynomial(gamma, s)?;
        let field = FieldDescriptor::with_limit(self.p, s, Some(&modulus), u64::MAX)?;
        Ok(Subfield { field, step, parent_group: self.group_order() })
    }

    /// Minimal polynomial over F_p of `x`, whose degree must be `deg`.
    fn minimal_polynomial(&self, x: u32, deg: u32) -> Result<Vec<u32>> {
        // Π (X - x^{p^i}) with coefficients in this field, low degree first
        let mut coeffs = vec![1u32];
        let mut root = x;
        for _ in 0..deg {
            let mut next = vec![0u32; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] = self.add(next[i + 1], c);
                next[i] = self.sub(next[i], self.mul(c, root));
            }
            coeffs = next;
            root = self.frobenius(root, 1);
        }
        if root != x {
            return Err(Error::NotInSubfield(deg));
        }
        coeffs
            .into_iter()
            .map(|c| if c < self.p { Ok(c) } else { Err(Error::NotInSubfield(deg)) })
            .collect::<Result<Vec<u32>>>()
            .inspect(|m| {
                debug_assert!(poly::is_irreducible(m, self.p));
            })
    }
}

/// A subfield `F_q ⊆ F_Q` with its own tables and the embedding between encodings.
///
/// `F_q^* = ⟨α^{(Q-1)/(q-1)}⟩`, so the subfield's discrete log of `x` is the
/// parent log divided by that step.
#[derive(Debug, Clone)]
pub struct Subfield {
    field: FieldDescriptor,
    step: u32,
    parent_group: u32,
}

impl Subfield {
    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order()
    }

    /// `(Q-1)/(q-1)`.
    pub fn step(&self) -> u32 {
        self.step
    }

    /// Maps an `F_q` element into the parent encoding.
    pub fn embed(&self, parent: &FieldDescriptor, x: u32) -> u32 {
        if x == 0 {
            0
        } else {
            parent.exp(self.field.log_unchecked(x) as u64 * self.step as u64)
        }
    }

    /// Maps a parent element that lies in `F_q` to the subfield encoding.
    pub fn restrict(&self, parent: &FieldDescriptor, x: u32) -> Result<u32> {
        if x == 0 {
            return Ok(0);
        }
        debug_assert_eq!(parent.group_order(), self.parent_group);
        let l = parent.log(x)?;
        if l % self.step != 0 {
            return Err(Error::NotInSubfield(self.field.e()));
        }
        Ok(self.field.exp((l / self.step) as u64))
    }
}
