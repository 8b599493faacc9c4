//! The four named quasi-cyclic constructions.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{ExponentEntry, ExponentMatrix};
use crate::codes::{build_css, build_eaqecc_binary, CodeParams, QuantumCode};
use crate::error::{Error, Result};
use crate::f2::{BitMatrix, BitVec};

pub const EXAMPLE_NAMES: [&str; 4] = ["ex1", "ex2", "mackay", "hi"];

/// Seed of the `mackay` example code.
pub const DEFAULT_MACKAY_SEED: u64 = 0;

/// Type-I `(3, 8)` matrix over `r = 16` with rows `1…1`, `1 2 … 8` and
/// `1 3 … 15`.
pub fn make_ex1() -> ExponentMatrix {
    let rows = vec![
        vec![1; 8],
        (1..=8).collect(),
        (0..8).map(|k| 2 * k + 1).collect(),
    ];
    ExponentMatrix::from_monomials(16, &rows).expect("literal matrix is valid")
}

/// Type-II matrix over `r = 16` whose outer rows alternate binomials
/// `X + X^{2k}` with zero blocks.
pub fn make_ex2() -> ExponentMatrix {
    use ExponentEntry::{Bin, Mono, Zero};
    let outer = |shift: usize| -> Vec<ExponentEntry> {
        (0..8)
            .map(|l| {
                if l % 2 == shift {
                    Bin(1, l - shift + 2)
                } else {
                    Zero
                }
            })
            .collect()
    };
    let middle = (0..8).map(|l| Mono(5 + l / 2)).collect();
    ExponentMatrix::new(16, vec![outer(0), middle, outer(1)]).expect("literal matrix is valid")
}

/// `H₀ = [C, Cᵀ]` for an `n/2 × n/2` circulant `C` whose first row has `l/2`
/// ones drawn from `seed`, truncated to its first `m` rows. `H₀` is
/// self-orthogonal because circulants commute.
pub fn make_ex_mackay(n: usize, m: usize, l: usize, seed: u64) -> Result<BitMatrix> {
    if n == 0
        || !n.is_multiple_of(2)
        || l == 0
        || !l.is_multiple_of(2)
        || l / 2 > n / 2
        || m > n / 2
    {
        return Err(Error::InvalidParameter(format!(
            "need even n > 0, even l > 0 with l ≤ n and m ≤ n/2; got n={n}, m={m}, l={l}"
        )));
    }
    let half = n / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let support: Vec<usize> = sample(&mut rng, half, l / 2).into_vec();
    let c = BitMatrix::circulant(&BitVec::from_ones(half, &support));
    Ok(c.hstack(&c.transpose())?.take_rows(m))
}

fn pow_mod(base: u64, exp: u64, p: u64) -> u64 {
    (0..exp).fold(1 % p, |acc, _| acc * base % p)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The exponent matrices `(H_C, H_D)`, each `j × l` over `r = p`, with
///
/// `c_{j,l} = σ^{l−j}` and `d_{j,l} = τσ^{l−j−1}` for `l < L/2`,
/// `c_{j,l} = −τσ^{j−1+l}` and `d_{j,l} = −σ^{j+l}` otherwise.
///
/// Requires `p > 2`, `σ` a unit of order `L/2` that does not generate all
/// units, `1 ≤ j ≤ L/2` and `0 < τ < p`.
pub fn make_ex_hi(
    j: usize,
    l: usize,
    p: u64,
    sigma: u64,
    tau: u64,
) -> Result<(ExponentMatrix, ExponentMatrix)> {
    let bad = |msg: String| Err(Error::InvalidParameter(msg));
    if p <= 2 {
        return bad(format!("p = {p} must exceed 2"));
    }
    if l == 0 || !l.is_multiple_of(2) {
        return bad(format!("l = {l} must be positive and even"));
    }
    let half = (l / 2) as u64;
    if sigma == 0 || sigma >= p || gcd(sigma, p) != 1 {
        return bad(format!("σ = {sigma} is not a unit mod {p}"));
    }
    let order = (1..p)
        .find(|&k| pow_mod(sigma, k, p) == 1)
        .expect("units have finite order");
    if order != half {
        return bad(format!("ord(σ) = {order} but l/2 = {half}"));
    }
    let units = (1..p).filter(|&z| gcd(z, p) == 1).count() as u64;
    if order == units {
        return bad(format!("σ = {sigma} generates all units mod {p}"));
    }
    if j == 0 || j as u64 > half {
        return bad(format!("j = {j} must lie in 1..=l/2"));
    }
    if tau == 0 || tau >= p {
        return bad(format!("τ = {tau} must lie in 1..p"));
    }
    // σ^e for any integer e, using σ^{L/2} = 1.
    let s = |e: i64| pow_mod(sigma, e.rem_euclid(half as i64) as u64, p);
    let neg = |x: u64| (p - x % p) % p;
    let (half_i, mut hc, mut hd) = (half as i64, Vec::new(), Vec::new());
    for row in 0..j as i64 {
        let (mut c_row, mut d_row) = (Vec::new(), Vec::new());
        for col in 0..l as i64 {
            let (c, d) = if col < half_i {
                (s(col - row), tau * s(col - row - 1) % p)
            } else {
                (neg(tau * s(row - 1 + col) % p), neg(s(row + col)))
            };
            c_row.push(c as usize);
            d_row.push(d as usize);
        }
        hc.push(c_row);
        hd.push(d_row);
    }
    let r = p as usize;
    Ok((
        ExponentMatrix::from_monomials(r, &hc)?,
        ExponentMatrix::from_monomials(r, &hd)?,
    ))
}

fn claimed(n: usize, k: usize, d: usize, c: usize) -> CodeParams {
    CodeParams {
        n,
        k,
        d: Some(d),
        r: 0,
        c,
    }
}

/// The quantum code of a named example, with the published parameters
/// attached where they exist. `ex1`, `ex2` and `mackay` use one parity
/// check for both halves; `hi` uses `H_C` for Z checks and `H_D` for X
/// checks.
pub fn example_code(name: &str) -> Result<QuantumCode> {
    let code = match name {
        "ex1" => build_eaqecc_binary(&make_ex1().expand())?.with_claimed(claimed(128, 48, 6, 18)),
        "ex2" => build_eaqecc_binary(&make_ex2().expand())?.with_claimed(claimed(128, 48, 6, 18)),
        "mackay" => build_eaqecc_binary(&make_ex_mackay(128, 48, 8, DEFAULT_MACKAY_SEED)?)?,
        "hi" => {
            let (hc, hd) = make_ex_hi(3, 8, 15, 2, 3)?;
            build_css(&hc.expand(), &hd.expand())?.with_claimed(claimed(120, 38, 4, 0))
        }
        other => return Err(Error::UnknownName(other.to_string())),
    };
    Ok(code.with_name(name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qc_ldpc::{girth_exact, CircPoly};

    fn sum(r: usize, exps: impl IntoIterator<Item = usize>) -> CircPoly {
        CircPoly::from_exponents(r, &exps.into_iter().collect::<Vec<_>>())
    }

    #[test]
    fn ex1_structure() {
        let e = make_ex1();
        assert!(e.is_type_one());
        assert!(e.girth_ge_6());
        assert!(!e.dual_containing_qc());
        let h = e.expand();
        assert_eq!(girth_exact(&h), Some(6));
        let hhat = e.hermitian_poly_product();
        for (i, row) in hhat.iter().enumerate() {
            assert!(row[i].is_zero());
        }
        assert_eq!(hhat[1][0], sum(16, 0..8));
        assert_eq!(hhat[2][1], sum(16, 0..8));
        assert_eq!(hhat[2][0], sum(16, (0..8).map(|k| 2 * k)));
        assert_eq!(hhat[0][1], hhat[1][0].transpose());
    }

    #[test]
    fn ex1_ranks() {
        let e = make_ex1();
        let gram = e.gram_rank_via_gcd();
        assert_eq!(gram.gcd_degree, 30);
        assert_eq!(gram.rank, 18);
        assert_eq!(e.expand().gram().rank(), 18);
        assert_eq!(e.rank_via_gcd().rank, e.expand().rank());
    }

    #[test]
    fn ex2_structure() {
        let e = make_ex2();
        assert!(!e.is_type_one());
        assert!(e.girth_ge_6());
        // The published girth is 8; the literal matrix has 6-cycles.
        assert_eq!(girth_exact(&e.expand()), Some(6));
        let hhat = e.hermitian_poly_product();
        let odd = sum(16, (0..8).map(|k| 1 + 2 * k));
        assert!(hhat[1][1].is_zero());
        assert!(hhat[0][2].is_zero() && hhat[2][0].is_zero());
        assert_eq!(hhat[0][0], odd);
        assert_eq!(hhat[2][2], odd);
        assert_eq!(hhat[1][0], sum(16, 0..8));
        assert_eq!(hhat[1][2], sum(16, 0..8));
        assert_eq!(e.gram_rank_via_gcd().rank, 18);
        assert_eq!(e.expand().gram().rank(), 18);
        assert_eq!(e.rank_bound(), 27);
        // Each block row of H Hᵀ has rank exactly 9, not below 9.
        for row in &hhat {
            assert_eq!(crate::qc_ldpc::grid_rank(std::slice::from_ref(row)).rank, 9);
        }
    }

    #[test]
    fn ex_hi_rows() {
        let (hc, hd) = make_ex_hi(3, 8, 15, 2, 3).unwrap();
        let row = |e: &ExponentMatrix, i: usize| -> Vec<String> {
            e.row(i).iter().map(|x| x.to_string()).collect()
        };
        assert_eq!(row(&hc, 0).join(" "), "1 2 4 8 6 12 9 3");
        assert_eq!(row(&hc, 1).join(" "), "8 1 2 4 12 9 3 6");
        assert_eq!(row(&hc, 2).join(" "), "4 8 1 2 9 3 6 12");
        assert_eq!(row(&hd, 0).join(" "), "9 3 6 12 14 13 11 7");
        assert_eq!(row(&hd, 1).join(" "), "12 9 3 6 13 11 7 14");
        assert_eq!(row(&hd, 2).join(" "), "6 12 9 3 11 7 14 13");
        // τ = 3 is not a unit mod 15, and rows 0 and 2 of H_C differ by
        // (12,9,3,6,12,9,3,6): both matrices have 4-cycles.
        assert_eq!(hc.row_difference(0, 2).to_string(), "(12,9,3,6,12,9,3,6)");
        assert!(!hc.girth_ge_6() && !hd.girth_ge_6());
        assert_eq!(girth_exact(&hc.expand()), Some(4));
        // The Z and X checks commute.
        assert!(hc
            .expand()
            .mat_mul(&hd.expand().transpose())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn ex_hi_rejects_bad_parameters() {
        assert!(make_ex_hi(3, 8, 2, 1, 1).is_err());
        assert!(make_ex_hi(3, 7, 15, 2, 3).is_err());
        assert!(make_ex_hi(3, 8, 15, 3, 3).is_err());
        assert!(make_ex_hi(3, 6, 15, 2, 3).is_err());
        assert!(make_ex_hi(5, 8, 15, 2, 3).is_err());
        assert!(make_ex_hi(3, 8, 15, 2, 0).is_err());
        // 2 generates all units mod 5.
        assert!(make_ex_hi(1, 8, 5, 2, 1).is_err());
    }

    #[test]
    fn mackay_shape() {
        let h = make_ex_mackay(128, 48, 8, DEFAULT_MACKAY_SEED).unwrap();
        assert_eq!((h.num_rows(), h.num_cols()), (48, 128));
        assert!(h.row_weights().iter().all(|&w| w == 8));
        assert!(h.gram().is_zero());
        assert_eq!(girth_exact(&h), Some(4));
        assert_eq!(h, make_ex_mackay(128, 48, 8, DEFAULT_MACKAY_SEED).unwrap());
        assert!(make_ex_mackay(127, 48, 8, 0).is_err());
        assert!(make_ex_mackay(128, 65, 8, 0).is_err());
    }

    #[test]
    fn example_codes() {
        for name in EXAMPLE_NAMES {
            let code = example_code(name).unwrap();
            assert_eq!(code.name(), Some(name));
            assert!(code.css_form().is_ok());
        }
        let ex1 = example_code("ex1").unwrap();
        assert_eq!((ex1.n(), ex1.c()), (128, 18));
        let hi = example_code("hi").unwrap();
        assert_eq!(hi.params().to_string(), "[[120,38;0]]");
        assert_eq!(example_code("mackay").unwrap().c(), 0);
        assert!(matches!(example_code("ex3"), Err(Error::UnknownName(_))));
    }
}
