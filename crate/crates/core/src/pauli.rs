//! Phase-free Pauli operators as binary symplectic vectors.
//!
//! An `n`-qubit operator `Z^z X^x` is stored as the pair `(z | x)`; the
//! single-qubit map is I ↔ 00, X ↔ 01, Y ↔ 11, Z ↔ 10. Operator products are
//! vector sums and two operators commute iff their symplectic product is 0.
//! Qubit 0 is the leftmost character of the string form.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::f2::{BitMatrix, BitVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    /// `(z, x)` bits.
    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (false, true),
            Pauli::Y => (true, true),
            Pauli::Z => (true, false),
        }
    }

    pub fn from_bits(z: bool, x: bool) -> Self {
        match (z, x) {
            (false, false) => Pauli::I,
            (false, true) => Pauli::X,
            (true, true) => Pauli::Y,
            (true, false) => Pauli::Z,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c {
            'I' => Ok(Pauli::I),
            'X' => Ok(Pauli::X),
            'Y' => Ok(Pauli::Y),
            'Z' => Ok(Pauli::Z),
            other => Err(Error::InvalidPauliChar(other)),
        }
    }
}

/// An element of `(Z₂)²ⁿ` in `(z | x)` form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliVec {
    z: BitVec,
    x: BitVec,
}

impl PauliVec {
    pub fn identity(n: usize) -> Self {
        PauliVec {
            z: BitVec::zeros(n),
            x: BitVec::zeros(n),
        }
    }

    pub fn from_zx(z: BitVec, x: BitVec) -> Result<Self> {
        if z.len() != x.len() {
            return Err(Error::DimensionMismatch {
                expected: z.len(),
                found: x.len(),
            });
        }
        Ok(PauliVec { z, x })
    }

    /// Splits a length-`2n` vector laid out as `(z | x)`.
    pub fn from_bits(bits: &BitVec) -> Result<Self> {
        if !bits.len().is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!(
                "symplectic vector has odd length {}",
                bits.len()
            )));
        }
        let n = bits.len() / 2;
        Ok(PauliVec {
            z: bits.slice(0, n),
            x: bits.slice(n, n),
        })
    }

    /// Pure-Z operator with support `z`.
    pub fn z_type(z: BitVec) -> Self {
        let n = z.len();
        PauliVec {
            z,
            x: BitVec::zeros(n),
        }
    }

    /// Pure-X operator with support `x`.
    pub fn x_type(x: BitVec) -> Self {
        let n = x.len();
        PauliVec {
            z: BitVec::zeros(n),
            x,
        }
    }

    /// A single Pauli `p` on qubit `i`.
    pub fn single(n: usize, i: usize, p: Pauli) -> Self {
        let mut v = PauliVec::identity(n);
        v.set(i, p);
        v
    }

    pub fn n(&self) -> usize {
        self.z.len()
    }

    pub fn z(&self) -> &BitVec {
        &self.z
    }

    pub fn x(&self) -> &BitVec {
        &self.x
    }

    /// The `(z | x)` concatenation, of length `2n`.
    pub fn to_bits(&self) -> BitVec {
        self.z.concat(&self.x)
    }

    pub fn get(&self, i: usize) -> Pauli {
        Pauli::from_bits(self.z.get(i), self.x.get(i))
    }

    pub fn set(&mut self, i: usize, p: Pauli) {
        let (z, x) = p.bits();
        self.z.set(i, z);
        self.x.set(i, x);
    }

    pub fn is_identity(&self) -> bool {
        self.z.is_zero() && self.x.is_zero()
    }

    /// Number of qubits acted on non-trivially.
    pub fn weight(&self) -> usize {
        self.z.or(&self.x).count_ones()
    }

    /// `u ⊙ v = z·x' + z'·x`. Panics if the qubit counts differ.
    pub fn symp(&self, other: &PauliVec) -> bool {
        assert_eq!(self.n(), other.n(), "qubit count mismatch");
        self.z.dot(&other.x) ^ self.x.dot(&other.z)
    }

    pub fn commutes_with(&self, other: &PauliVec) -> bool {
        !self.symp(other)
    }

    /// Operator product up to phase.
    pub fn mul(&self, other: &PauliVec) -> PauliVec {
        PauliVec {
            z: self.z.xor(&other.z),
            x: self.x.xor(&other.x),
        }
    }

    pub fn mul_assign(&mut self, other: &PauliVec) {
        self.z.xor_assign(&other.z);
        self.x.xor_assign(&other.x);
    }

    /// Restriction to qubits `[start, start + len)`.
    pub fn restrict(&self, start: usize, len: usize) -> PauliVec {
        PauliVec {
            z: self.z.slice(start, len),
            x: self.x.slice(start, len),
        }
    }

    /// Tensor product `self ⊗ other`.
    pub fn tensor(&self, other: &PauliVec) -> PauliVec {
        PauliVec {
            z: self.z.concat(&other.z),
            x: self.x.concat(&other.x),
        }
    }
}

/// Symplectic product with a dimension check.
pub fn symplectic_product(u: &PauliVec, v: &PauliVec) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::DimensionMismatch {
            expected: u.n(),
            found: v.n(),
        });
    }
    Ok(u.symp(v))
}

/// Rows `(z | x)` of a `len × 2n` matrix. `n` is needed for the empty case.
pub fn to_matrix(n: usize, ops: &[PauliVec]) -> BitMatrix {
    let mut m = BitMatrix::zeros(0, 2 * n);
    for op in ops {
        m.push_row(op.to_bits()).expect("qubit count mismatch");
    }
    m
}

pub fn from_matrix(m: &BitMatrix) -> Result<Vec<PauliVec>> {
    m.rows().iter().map(PauliVec::from_bits).collect()
}

/// Basis of `{w : u ⊙ w = 0 for all u in ops}` on `n` qubits.
pub fn symplectic_complement(n: usize, ops: &[PauliVec]) -> Vec<PauliVec> {
    // u ⊙ w = (x_u | z_u) · (z_w | x_w), so swap halves and take the nullspace.
    let mut swapped = BitMatrix::zeros(0, 2 * n);
    for op in ops {
        swapped
            .push_row(op.x.concat(&op.z))
            .expect("qubit count mismatch");
    }
    swapped
        .nullspace()
        .rows()
        .iter()
        .map(|r| PauliVec::from_bits(r).expect("even length"))
        .collect()
}

impl FromStr for PauliVec {
    type Err = Error;

    /// Accepts `I`, `X`, `Y`, `Z`. A `|` (separating receiver qubits in
    /// tables) and whitespace are skipped.
    fn from_str(s: &str) -> Result<Self> {
        let ops: Vec<Pauli> = s
            .chars()
            .filter(|c| *c != '|' && !c.is_whitespace())
            .map(Pauli::from_char)
            .collect::<Result<_>>()?;
        if ops.is_empty() {
            return Err(Error::Empty("Pauli string"));
        }
        let mut v = PauliVec::identity(ops.len());
        for (i, p) in ops.into_iter().enumerate() {
            v.set(i, p);
        }
        Ok(v)
    }
}

impl fmt::Display for PauliVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n() {
            write!(f, "{}", self.get(i).to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliVec({self})")
    }
}
