//! Named example codes.

use super::{build_eaqecc_binary, CodeParams, QuantumCode, SymplecticPair};
use crate::error::{Error, Result};
use crate::f2::BitMatrix;
use crate::gf4::F4Matrix;
use crate::pauli::PauliVec;

pub const BUILTIN_NAMES: [&str; 8] = [
    "shor9",
    "steane7",
    "fivequbit",
    "ea8",
    "eaoq8",
    "bch63",
    "q15",
    "q15g",
];

fn ops(rows: &[&str]) -> Vec<PauliVec> {
    rows.iter()
        .map(|s| s.parse().expect("builtin table is well formed"))
        .collect()
}

fn pairs(rows: &[&str]) -> Vec<SymplecticPair> {
    ops(rows)
        .chunks(2)
        .map(|c| SymplecticPair::new(c[0].clone(), c[1].clone()))
        .collect()
}

fn params(n: usize, k: usize, d: usize, r: usize, c: usize) -> CodeParams {
    CodeParams {
        n,
        k,
        d: Some(d),
        r,
        c,
    }
}

fn shor9() -> Result<QuantumCode> {
    let s = ops(&[
        "ZZIIIIIII",
        "IZZIIIIII",
        "IIIZZIIII",
        "IIIIZZIII",
        "IIIIIIZZI",
        "IIIIIIIZZ",
        "XXXIIIXXX",
        "XXXXXXIII",
    ]);
    QuantumCode::new(9, s, vec![], vec![])?.with_logicals(pairs(&["ZZZZZZZZZ", "XXXXXXXXX"]))
}

fn steane7() -> Result<QuantumCode> {
    let s = ops(&[
        "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ", "IIIXXXX", "IXXIIXX", "XIXIXIX",
    ]);
    QuantumCode::new(7, s, vec![], vec![])?.with_logicals(pairs(&["ZZZZZZZ", "XXXXXXX"]))
}

fn fivequbit() -> Result<QuantumCode> {
    let s = ops(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]);
    QuantumCode::new(5, s, vec![], vec![])?.with_logicals(pairs(&["ZZZZZ", "XXXXX"]))
}

/// One-ebit code on eight qubits; the receiver's qubit is omitted.
fn ea8() -> Result<QuantumCode> {
    let s = ops(&[
        "ZZIIIIII", "ZIZIIIII", "IIIZZIII", "IIIZIZII", "IIIIIIZZ", "XXXXXXII",
    ]);
    let e = pairs(&["IIIIIIIZ", "XXXIIIXX"]);
    QuantumCode::new(8, s, e, vec![])?.with_logicals(pairs(&["ZIIZIIIZ", "IIIXXXII"]))
}

/// `ea8` with its first four checks recombined into two checks and two
/// gauge pairs.
fn eaoq8() -> Result<QuantumCode> {
    let s = ops(&["ZZIZZIII", "ZIZZIZII", "IIIIIIZZ", "XXXXXXII"]);
    let e = pairs(&["IIIIIIIZ", "XXXIIIXX"]);
    let g = pairs(&["ZZIIIIII", "IXIIXIII", "IIIZIZII", "IIXIIXII"]);
    QuantumCode::new(8, s, e, g)?.with_logicals(pairs(&["ZIIZIIIZ", "IIIXXXII"]))
}

const Q15_ENTANGLED: [&str; 8] = [
    "IIYIZXYZYIIZYXZ",
    "IYIIYIZXYZIIYZY",
    "IZYIIXZXXXIZXII",
    "IIXIYZXYXIIYXZY",
    "IIIIIIIIIIZIIII",
    "IIIIIIIIIIYIIII",
    "IZZZXIYIYIIZZZI",
    "IYYYZIXIXIIYYYI",
];

fn q15() -> Result<QuantumCode> {
    let s = ops(&["ZZYIZYXXYZIYZZI", "YYXIYXZZXYIXYYI"]);
    QuantumCode::new(15, s, pairs(&Q15_ENTANGLED), vec![])
}

/// `q15` with its fourth pair moved to the gauge group. Qubit 3 is then
/// checked only by the gauge pair, so its distance is 1.
fn q15g() -> Result<QuantumCode> {
    let s = ops(&["XXZIXZYYZXIZXXI", "ZZYIZYXXYZIYZZI"]);
    let e = pairs(&Q15_ENTANGLED[..6]);
    let g = pairs(&Q15_ENTANGLED[6..]);
    QuantumCode::new(15, s, e, g)
}

/// Parity check of the `[15, 10, 4]` quaternary code behind `q15`.
pub fn q15_parity_check() -> F4Matrix {
    F4Matrix::parse(
        "5 15
         1 0 0 0 1 1 W 0 1 W 0 w W 1 0
         0 1 0 0 1 0 w W 1 w 0 0 1 w 1
         0 0 1 0 w W 1 w 1 0 0 w 1 W w
         0 0 0 1 1 W 0 1 W w 0 W 1 0 W
         0 0 0 0 0 0 0 0 0 0 1 0 0 0 0",
    )
    .expect("builtin matrix is well formed")
}

/// Binary image of the narrow-sense BCH check matrix over GF(2⁶) with rows
/// `αʲ, α³ʲ, α⁵ʲ, α⁷ʲ` (`j = 0..63`, `α⁶ = α + 1`). Symbol `j` of GF(2⁶)
/// row `t` expands to rows `6t..6t+6`, row `6t + b` holding the coefficient
/// of `αᵇ`.
pub fn bch63_parity_check() -> BitMatrix {
    const N: usize = 63;
    // pow[e] = αᵉ as a bit mask over 1, α, …, α⁵.
    let mut pow = [0u8; N];
    pow[0] = 1;
    for e in 1..N {
        let mut v = pow[e - 1] << 1;
        if v & 0x40 != 0 {
            v ^= 0x43;
        }
        pow[e] = v;
    }
    let mut h = BitMatrix::zeros(24, N);
    for (t, step) in [1usize, 3, 5, 7].into_iter().enumerate() {
        for j in 0..N {
            let sym = pow[(step * j) % N];
            for b in 0..6 {
                h.set(6 * t + b, j, sym >> b & 1 == 1);
            }
        }
    }
    h
}

fn bch63() -> Result<QuantumCode> {
    build_eaqecc_binary(&bch63_parity_check())
}

/// Looks up a named code; its claimed parameters are attached.
pub fn builtin(name: &str) -> Result<QuantumCode> {
    let (code, claimed) = match name {
        "shor9" => (shor9()?, params(9, 1, 3, 0, 0)),
        "steane7" => (steane7()?, params(7, 1, 3, 0, 0)),
        "fivequbit" => (fivequbit()?, params(5, 1, 3, 0, 0)),
        "ea8" => (ea8()?, params(8, 1, 3, 0, 1)),
        "eaoq8" => (eaoq8()?, params(8, 1, 3, 2, 1)),
        "bch63" => (bch63()?, params(63, 21, 9, 0, 6)),
        "q15" => (q15()?, params(15, 9, 4, 0, 4)),
        "q15g" => (q15g()?, params(15, 9, 3, 1, 3)),
        other => return Err(Error::UnknownName(other.to_string())),
    };
    Ok(code.with_name(name).with_claimed(claimed))
}
