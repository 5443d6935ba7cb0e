//! Dense polynomials over a prime field F_p, coefficients stored low degree first.

use crate::numtheory::prime_factors;

pub(crate) type Poly = Vec<u32>;

fn trim(mut a: Poly) -> Poly {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    if a.is_empty() {
        a.push(0);
    }
    a
}

fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn inv_mod(a: u32, p: u32) -> u32 {
    crate::numtheory::pow_mod(a as u64, p as u64 - 2, p as u64) as u32
}

pub(crate) fn sub(a: &[u32], b: &[u32], p: u32) -> Poly {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

/// Remainder of `a` modulo `m` (`m` nonzero).
pub(crate) fn rem(a: &[u32], m: &[u32], p: u32) -> Poly {
    let dm = degree(m).expect("modulus must be nonzero");
    let lead_inv = inv_mod(m[dm], p) as u64;
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let p64 = p as u64;
    let mut i = r.len();
    while i > dm {
        i -= 1;
        let c = r[i] % p64;
        if c == 0 {
            continue;
        }
        let f = c * lead_inv % p64;
        for (j, &mj) in m.iter().enumerate().take(dm + 1) {
            let idx = i - dm + j;
            r[idx] = (r[idx] + (p64 - f) * mj as u64) % p64;
        }
    }
    r.truncate(dm.max(1));
    trim(r.into_iter().map(|c| (c % p64) as u32).collect())
}

pub(crate) fn mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Poly {
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let prod: Poly = prod.into_iter().map(|c| c as u32).collect();
    rem(&prod, m, p)
}

pub(crate) fn pow_mod(base: &[u32], mut exp: u128, m: &[u32], p: u32) -> Poly {
    let mut acc = vec![1];
    let mut b = rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(&acc, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while degree(&b).is_some() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Rabin's irreducibility test for a monic `f` of degree `e >= 1`.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let e = f.len() - 1;
    if e == 1 {
        return true;
    }
    let x: Poly = vec![0, 1];
    // frob[k] = x^(p^k) mod f
    let mut frob = vec![rem(&x, f, p)];
    for k in 1..=e {
        let prev = &frob[k - 1];
        frob.push(pow_mod(prev, p as u128, f, p));
    }
    if sub(&frob[e], &x, p) != vec![0] {
        return false;
    }
    for r in prime_factors(e as u64) {
        let h = sub(&frob[e / r as usize], &x, p);
        let g = gcd(&h, f, p);
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// Order of the class of `x` in `(F_p[x]/f)^*`, assuming `f` irreducible of degree `e`.
pub(crate) fn order_of_x(f: &[u32], p: u32) -> u64 {
    let e = (f.len() - 1) as u32;
    let group = (p as u64).pow(e) - 1;
    let x: Poly = vec![0, 1];
    let mut order = group;
    for r in prime_factors(group) {
        while order.is_multiple_of(r) && pow_mod(&x, (order / r) as u128, f, p) == vec![1] {
            order /= r;
        }
    }
    order
}
