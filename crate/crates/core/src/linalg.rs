//! Dense linear algebra over a small finite field, plus exhaustive span enumeration.

use crate::error::{Error, Result};
use crate::gf::FieldDescriptor;

/// Reduced row-echelon form; returns the nonzero rows and their pivot columns.
pub fn rref(field: &FieldDescriptor, rows: &[Vec<u32>]) -> (Vec<Vec<u32>>, Vec<usize>) {
    let mut m: Vec<Vec<u32>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pr) = (r..m.len()).find(|&i| m[i][col] != 0) else { continue };
        m.swap(r, pr);
        let inv = field.inv(m[r][col]).expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row).take(ncols) {
                    *x = field.sub(*x, field.mul(f, y));
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(field: &FieldDescriptor, rows: &[Vec<u32>]) -> usize {
    rref(field, rows).1.len()
}

/// Basis of `{x : M x = 0}`.
pub fn nullspace(field: &FieldDescriptor, matrix: &[Vec<u32>], ncols: usize) -> Vec<Vec<u32>> {
    let (r, pivots) = rref(field, matrix);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u32; ncols];
            v[f] = 1;
            for (row, &pc) in r.iter().zip(&pivots) {
                v[pc] = field.neg(row[f]);
            }
            v
        })
        .collect()
}

pub fn transpose(rows: &[Vec<u32>], ncols: usize) -> Vec<Vec<u32>> {
    (0..ncols).map(|j| rows.iter().map(|r| r[j]).collect()).collect()
}

/// `Σ_j u_j · rows[j]`.
pub fn combine(field: &FieldDescriptor, coeffs: &[u32], rows: &[Vec<u32>]) -> Vec<u32> {
    let n = rows.first().map_or(0, Vec::len);
    let mut out = vec![0u32; n];
    for (&c, row) in coeffs.iter().zip(rows) {
        if c == 0 {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(row) {
            *o = field.add(*o, field.mul(c, x));
        }
    }
    out
}

/// Calls `f` on every vector of the `F_q`-span of `rows` (with multiplicity if dependent).
///
/// Walks `F_p`-coordinates as an odometer: every digit change, including a
/// wrap from `p-1` to `0`, adds one generator, since `p·g = 0`.
pub fn for_each_in_span(
    field: &FieldDescriptor,
    rows: &[Vec<u32>],
    limit: u64,
    mut f: impl FnMut(&[u32]),
) -> Result<()> {
    let q = field.order() as u128;
    let total = q.checked_pow(rows.len() as u32).unwrap_or(u128::MAX);
    if total > limit as u128 {
        return Err(Error::EnumerationLimitExceeded(total, limit as u128));
    }
    let n = rows.first().map_or(0, Vec::len);
    let p = field.p();
    // F_p generators: α^t · row for t < e
    let gens: Vec<Vec<u32>> = rows
        .iter()
        .flat_map(|row| (0..field.e()).map(move |t| row.iter().map(|&x| field.mul(field.exp(t as u64), x)).collect()))
        .collect();
    let mut digits = vec![0u32; gens.len()];
    let mut cur = vec![0u32; n];
    f(&cur);
    for _ in 1..total {
        let mut j = 0;
        loop {
            for (c, &g) in cur.iter_mut().zip(&gens[j]) {
                *c = field.add(*c, g);
            }
            digits[j] += 1;
            if digits[j] < p {
                break;
            }
            digits[j] = 0;
            j += 1;
        }
        f(&cur);
    }
    Ok(())
}

/// Minimum Hamming weight over the nonzero vectors of the span.
pub fn min_distance(field: &FieldDescriptor, rows: &[Vec<u32>], limit: u64) -> Result<Option<usize>> {
    let mut best: Option<usize> = None;
    for_each_in_span(field, rows, limit, |v| {
        let w = v.iter().filter(|&&x| x != 0).count();
        if w > 0 && best.is_none_or(|b| w < b) {
            best = Some(w);
        }
    })?;
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace_over_f4() {
        let f = FieldDescriptor::new(2, 2, None).unwrap();
        let a = f.alpha();
        let rows = vec![vec![1, a, 0, 1], vec![a, f.mul(a, a), 0, a], vec![0, 0, 1, 1]];
        assert_eq!(rank(&f, &rows), 2);
        let ns = nullspace(&f, &rows, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &rows {
                let dot = r.iter().zip(v).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
                assert_eq!(dot, 0);
            }
        }
    }

    #[test]
    fn span_enumeration_visits_each_vector_once() {
        let f = FieldDescriptor::new(2, 2, None).unwrap();
        let rows = vec![vec![1, 0, 1], vec![0, 1, 2]];
        let mut seen = std::collections::HashSet::new();
        for_each_in_span(&f, &rows, 1 << 10, |v| {
            assert!(seen.insert(v.to_vec()));
        })
        .unwrap();
        assert_eq!(seen.len(), 16);
        for c1 in 0..4 {
            for c2 in 0..4 {
                assert!(seen.contains(&combine(&f, &[c1, c2], &rows)));
            }
        }
        assert!(matches!(for_each_in_span(&f, &rows, 15, |_| {}), Err(Error::EnumerationLimitExceeded(16, 15))));
    }

    #[test]
    fn hamming_code_distance() {
        let f = FieldDescriptor::new(2, 1, None).unwrap();
        let g = vec![
            vec![1, 0, 0, 0, 1, 1, 0],
            vec![0, 1, 0, 0, 1, 0, 1],
            vec![0, 0, 1, 0, 0, 1, 1],
            vec![0, 0, 0, 1, 1, 1, 1],
        ];
        assert_eq!(min_distance(&f, &g, 1 << 10).unwrap(), Some(3));
    }
}
