//! Singleton and Hamming bounds in their entanglement-assisted forms.

use num_bigint::BigUint;

use super::QuantumCode;
use crate::error::{Error, Result};

fn distance(code: &QuantumCode, d: Option<usize>) -> Result<usize> {
    d.or_else(|| code.claimed().and_then(|c| c.d))
        .ok_or(Error::UnknownDistance)
}

/// `n − (k − c) ≥ 2(d − 1)`. Uses `d` if given, else the claimed distance.
pub fn singleton_check(code: &QuantumCode, d: Option<usize>) -> Result<bool> {
    let d = distance(code, d)?;
    let lhs = code.n() + code.c() - code.k();
    Ok(lhs + 2 >= 2 * d)
}

/// `Σ_{j ≤ ⌊(d−1)/2⌋} 3ʲ C(n, j) ≤ 2^{n−k}`, computed exactly. The bound
/// only constrains non-degenerate codes.
pub fn hamming_check(code: &QuantumCode, d: Option<usize>) -> Result<bool> {
    let d = distance(code, d)?;
    let t = d.saturating_sub(1) / 2;
    let n = code.n();
    let mut sum = BigUint::from(0u32);
    let mut binom = BigUint::from(1u32);
    let mut pow3 = BigUint::from(1u32);
    for j in 0..=t.min(n) {
        if j > 0 {
            binom = binom * (n - j + 1) / j;
            pow3 *= 3u32;
        }
        sum += &binom * &pow3;
    }
    Ok(sum <= BigUint::from(1u32) << (n - code.k()))
}
