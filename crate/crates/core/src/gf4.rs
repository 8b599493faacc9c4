//! The quaternary field GF(4) = {0, 1, ω, ω̄} and its map to binary
//! symplectic vectors.
//!
//! The additive map γ sends 0 ↦ 00, ω̄ ↦ 01, 1 ↦ 11, ω ↦ 10 (z bit first),
//! so a GF(4) vector becomes a Pauli operator and the trace product becomes
//! the symplectic product. Text form uses `0`, `1`, `w` (ω) and `W` (ω̄ = ω²).

use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::f2::BitMatrix;
use crate::pauli::PauliVec;

/// Element of GF(4). The discriminants are chosen so that addition is XOR.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
#[repr(u8)]
pub enum F4 {
    #[default]
    Zero = 0,
    One = 1,
    W = 2,
    Wbar = 3,
}

impl F4 {
    pub const ALL: [F4; 4] = [F4::Zero, F4::One, F4::W, F4::Wbar];

    fn from_u8(v: u8) -> F4 {
        F4::ALL[(v & 3) as usize]
    }

    /// Exponent `e` with `self = ωᵉ`, for nonzero elements.
    fn log(self) -> Option<u8> {
        match self {
            F4::Zero => None,
            F4::One => Some(0),
            F4::W => Some(1),
            F4::Wbar => Some(2),
        }
    }

    fn exp(e: u8) -> F4 {
        [F4::One, F4::W, F4::Wbar][(e % 3) as usize]
    }

    /// Frobenius conjugate `a† = a²`.
    pub fn conj(self) -> F4 {
        match self {
            F4::W => F4::Wbar,
            F4::Wbar => F4::W,
            other => other,
        }
    }

    /// Absolute trace `a + a²`: 0 for {0, 1}, 1 for {ω, ω̄}.
    pub fn trace(self) -> bool {
        matches!(self, F4::W | F4::Wbar)
    }

    /// `γ(a)` as `(z, x)`.
    pub fn gamma(self) -> (bool, bool) {
        match self {
            F4::Zero => (false, false),
            F4::Wbar => (false, true),
            F4::One => (true, true),
            F4::W => (true, false),
        }
    }

    pub fn from_gamma(z: bool, x: bool) -> F4 {
        match (z, x) {
            (false, false) => F4::Zero,
            (false, true) => F4::Wbar,
            (true, true) => F4::One,
            (true, false) => F4::W,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            F4::Zero => '0',
            F4::One => '1',
            F4::W => 'w',
            F4::Wbar => 'W',
        }
    }

    pub fn from_char(c: char) -> Option<F4> {
        match c {
            '0' => Some(F4::Zero),
            '1' => Some(F4::One),
            'w' => Some(F4::W),
            'W' => Some(F4::Wbar),
            _ => None,
        }
    }
}

impl Add for F4 {
    type Output = F4;
    // Coordinates over GF(2) add bitwise.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: F4) -> F4 {
        F4::from_u8(self as u8 ^ rhs as u8)
    }
}

impl Mul for F4 {
    type Output = F4;
    // Nonzero elements multiply by adding discrete logarithms.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: F4) -> F4 {
        match (self.log(), rhs.log()) {
            (Some(a), Some(b)) => F4::exp(a + b),
            _ => F4::Zero,
        }
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Trace of the Hermitian product, `tr(a† b)`.
pub fn trace_inner(a: F4, b: F4) -> bool {
    (a.conj() * b).trace()
}

/// `tr ⟨a, b⟩` summed over coordinates.
pub fn trace_inner_vec(a: &[F4], b: &[F4]) -> bool {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(false, |acc, (&x, &y)| acc ^ trace_inner(x, y))
}

pub fn weight(a: &[F4]) -> usize {
    a.iter().filter(|&&x| x != F4::Zero).count()
}

/// γ applied entrywise.
pub fn gamma_vec(a: &[F4]) -> PauliVec {
    let mut out = PauliVec::identity(a.len());
    for (i, &v) in a.iter().enumerate() {
        let (z, x) = v.gamma();
        out.set(i, crate::pauli::Pauli::from_bits(z, x));
    }
    out
}

pub fn gamma_inv(u: &PauliVec) -> Vec<F4> {
    (0..u.n())
        .map(|i| F4::from_gamma(u.z().get(i), u.x().get(i)))
        .collect()
}

/// Dense matrix over GF(4).
#[derive(Clone, PartialEq, Eq)]
pub struct F4Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<F4>,
}

impl F4Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<F4>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Empty("GF(4) matrix"));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(F4Matrix {
            rows,
            cols,
            entries,
        })
    }

    /// Embeds a binary matrix (0 ↦ 0, 1 ↦ 1).
    pub fn from_binary(m: &BitMatrix) -> Result<Self> {
        let entries = (0..m.num_rows())
            .flat_map(|r| (0..m.num_cols()).map(move |c| (r, c)))
            .map(|(r, c)| if m.get(r, c) { F4::One } else { F4::Zero })
            .collect();
        F4Matrix::new(m.num_rows(), m.num_cols(), entries)
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> F4 {
        self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[F4] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn scale(&self, s: F4) -> F4Matrix {
        F4Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&e| s * e).collect(),
        }
    }

    /// Rank over GF(4), by Gaussian elimination on a copy.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<F4>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(p) = (rank..m.len()).find(|&r| m[r][c] != F4::Zero) else {
                continue;
            };
            m.swap(rank, p);
            // Normalise the pivot to 1: multiply by its inverse ω^{-e}.
            let inv = F4::exp(3 - m[rank][c].log().unwrap());
            for x in m[rank].iter_mut() {
                *x = inv * *x;
            }
            let pivot_row = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != rank && row[c] != F4::Zero {
                    let f = row[c];
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        *x = *x + f * y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// `H_sp = γ([ωH; ω̄H])`, a `2m × 2n` matrix in `(z | x)` layout with the
    /// ω rows first.
    pub fn to_symplectic(&self) -> BitMatrix {
        let ops = self.symplectic_rows();
        crate::pauli::to_matrix(self.cols, &ops)
    }

    /// Rows of `γ([ωH; ω̄H])` as Pauli operators.
    pub fn symplectic_rows(&self) -> Vec<PauliVec> {
        [F4::W, F4::Wbar]
            .iter()
            .flat_map(|&s| (0..self.rows).map(move |r| (s, r)))
            .map(|(s, r)| {
                let scaled: Vec<F4> = self.row(r).iter().map(|&e| s * e).collect();
                gamma_vec(&scaled)
            })
            .collect()
    }

    /// Parses a `ROWS COLS` header followed by rows of `{0, 1, w, W}`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hl, header) = lines.next().ok_or(Error::Empty("GF(4) matrix file"))?;
        let dims = crate::f2::parse_header(hl, header, 2)?;
        let (rows, cols) = (dims[0], dims[1]);
        if rows == 0 || cols == 0 {
            return Err(Error::parse(
                hl,
                "matrix must have at least one row and column",
            ));
        }
        let mut entries = Vec::with_capacity(rows * cols);
        let mut seen = 0;
        for (ln, line) in lines {
            let row: Vec<F4> = line
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| {
                    F4::from_char(c)
                        .ok_or_else(|| Error::parse(ln, format!("unexpected symbol {c:?}")))
                })
                .collect::<Result<_>>()?;
            if row.len() != cols {
                return Err(Error::parse(
                    ln,
                    format!("expected {cols} entries, got {}", row.len()),
                ));
            }
            entries.extend(row);
            seen += 1;
        }
        if seen != rows {
            return Err(Error::parse(0, format!("expected {rows} rows, got {seen}")));
        }
        F4Matrix::new(rows, cols, entries)
    }

    pub fn write(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(F4::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for F4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F4Matrix {}x{}\n{}", self.rows, self.cols, self.write())
    }
}
