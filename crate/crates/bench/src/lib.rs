//! Fixtures shared by the benchmarks.

use bsymbol::{Code, FieldDescriptor, Word};

/// `C(p^{sm}, N)` over the default modulus.
pub fn code(p: u32, s: u32, m: u32, big_n: u64) -> Code {
    let field = FieldDescriptor::new(p, s * m, None).expect("valid field");
    Code::new(&field, s, big_n).expect("valid code")
}

/// A deterministic pseudo-random word of length `n` over `F_q` with roughly half its symbols zero.
pub fn word(q: u32, n: usize) -> Word {
    let mut x = 0x9e37_79b9_u32;
    let symbols = (0..n)
        .map(|_| {
            x ^= x << 13;
            x ^= x >> 17;
            x ^= x << 5;
            if x & 1 == 0 {
                0
            } else {
                x % q
            }
        })
        .collect();
    Word::new(q, symbols).expect("valid word")
}
