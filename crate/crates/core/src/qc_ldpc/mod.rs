//! Quasi-cyclic LDPC codes described by exponent matrices.
//!
//! Block `(i, l)` of the parity check is the `r × r` circulant of a
//! monomial `Xᵉ`, a binomial `X^e₁ + X^e₂` or zero. Row differences of the
//! exponent matrix decide dual containment (every residue appears an even
//! number of times) and the absence of 4-cycles (no residue repeats).

mod examples;
mod girth;
mod poly;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::f2::BitMatrix;

pub use examples::{
    example_code, make_ex1, make_ex2, make_ex_hi, make_ex_mackay, DEFAULT_MACKAY_SEED,
    EXAMPLE_NAMES,
};
pub use girth::girth_exact;
pub use poly::{determinantal_degree, grid_rank, CircPoly, Gf2Poly, QcRank};

/// One block of an exponent matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExponentEntry {
    /// The zero block, written `-`.
    Zero,
    /// `Xᵉ`, written `e`.
    Mono(usize),
    /// `X^e₁ + X^e₂` with `e₁ ≠ e₂`, written `e1+e2`.
    Bin(usize, usize),
}

impl ExponentEntry {
    pub fn exponents(&self) -> Vec<usize> {
        match *self {
            ExponentEntry::Zero => vec![],
            ExponentEntry::Mono(e) => vec![e],
            ExponentEntry::Bin(a, b) => vec![a, b],
        }
    }

    pub fn to_circ(&self, r: usize) -> CircPoly {
        CircPoly::from_exponents(r, &self.exponents())
    }
}

impl fmt::Display for ExponentEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExponentEntry::Zero => write!(f, "-"),
            ExponentEntry::Mono(e) => write!(f, "{e}"),
            ExponentEntry::Bin(a, b) => write!(f, "{a}+{b}"),
        }
    }
}

impl FromStr for ExponentEntry {
    type Err = Error;

    /// Range checks against `r` happen in [`ExponentMatrix::new`].
    fn from_str(s: &str) -> Result<Self> {
        let int = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("bad exponent entry {s:?}")))
        };
        if s == "-" {
            return Ok(ExponentEntry::Zero);
        }
        match s.split_once('+') {
            Some((a, b)) => Ok(ExponentEntry::Bin(int(a)?, int(b)?)),
            None => Ok(ExponentEntry::Mono(int(s)?)),
        }
    }
}

/// Per-column residues `cᵢ − cⱼ mod r`. A column holding a zero block in
/// either row is `None` (written ∞).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceVector {
    pub columns: Vec<Option<Vec<usize>>>,
}

impl DifferenceVector {
    fn counts(&self) -> HashMap<usize, usize> {
        let mut counts = HashMap::new();
        for &d in self.columns.iter().flatten().flatten() {
            *counts.entry(d).or_insert(0) += 1;
        }
        counts
    }

    /// Every residue occurs an even number of times.
    pub fn is_multiplicity_even(&self) -> bool {
        self.counts().values().all(|c| c % 2 == 0)
    }

    /// No residue occurs twice.
    pub fn is_multiplicity_free(&self) -> bool {
        self.counts().values().all(|&c| c <= 1)
    }
}

impl fmt::Display for DifferenceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self
            .columns
            .iter()
            .map(|c| match c.as_deref() {
                None => "∞".to_string(),
                Some([d]) => d.to_string(),
                Some(ds) => {
                    let inner: Vec<String> = ds.iter().map(usize::to_string).collect();
                    format!("({})", inner.join(","))
                }
            })
            .collect();
        write!(f, "({})", cols.join(","))
    }
}

/// Estimates of `rank(H Hᵀ)` read off the circulant blocks `ĥᵢⱼ` of
/// `H(X) H(X)ᵀ`. Only `layer_sum` is a guaranteed upper bound; the other
/// two are exceeded by some matrices (see the tests) and are reported for
/// comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankBounds {
    /// `Σᵢ rank([ĥᵢ₁ … ĥᵢJ])`, by subadditivity over block rows.
    pub layer_sum: usize,
    /// `Σᵢ maxⱼ rank(ĥᵢⱼ)`. A block row can have larger rank than each of
    /// its blocks, so this is not a bound in general.
    pub max_block_sum: usize,
    /// `J(r − w + 1)` for row weight `w` when `w` is even, every row has the
    /// same weight and every off-diagonal `ĥᵢⱼ` shares a factor with
    /// `Xʳ − 1`. Not a bound in general.
    pub weight_bound: Option<usize>,
}

/// A `J × L` exponent matrix over circulants of size `r`.
#[derive(Clone, PartialEq, Eq)]
pub struct ExponentMatrix {
    r: usize,
    rows: usize,
    cols: usize,
    entries: Vec<ExponentEntry>,
}

impl ExponentMatrix {
    /// Checks `r ≥ 1`, equal row lengths, exponents below `r` and distinct
    /// binomial exponents.
    pub fn new(r: usize, rows: Vec<Vec<ExponentEntry>>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidParameter(
                "circulant size must be positive".into(),
            ));
        }
        let cols = rows.first().map_or(0, Vec::len);
        let num_rows = rows.len();
        let mut entries = Vec::with_capacity(num_rows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for e in row {
                if let Some(&bad) = e.exponents().iter().find(|&&x| x >= r) {
                    return Err(Error::InvalidParameter(format!(
                        "exponent {bad} is not below r = {r}"
                    )));
                }
                if let ExponentEntry::Bin(a, b) = e {
                    if a == b {
                        return Err(Error::InvalidParameter(format!(
                            "binomial {a}+{b} has equal exponents"
                        )));
                    }
                }
                entries.push(e);
            }
        }
        Ok(ExponentMatrix {
            r,
            rows: num_rows,
            cols,
            entries,
        })
    }

    /// All-monomial matrix; exponents are reduced mod `r`.
    pub fn from_monomials(r: usize, rows: &[Vec<usize>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&e| ExponentEntry::Mono(e % r.max(1)))
                    .collect()
            })
            .collect();
        ExponentMatrix::new(r, rows)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, l: usize) -> ExponentEntry {
        self.entries[i * self.cols + l]
    }

    pub fn row(&self, i: usize) -> &[ExponentEntry] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Every block is a monomial.
    pub fn is_type_one(&self) -> bool {
        self.entries
            .iter()
            .all(|e| matches!(e, ExponentEntry::Mono(_)))
    }

    pub fn poly_grid(&self) -> Vec<Vec<CircPoly>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|e| e.to_circ(self.r)).collect())
            .collect()
    }

    /// The `Jr × Lr` binary parity check.
    pub fn expand(&self) -> BitMatrix {
        expand_grid(self.r, self.cols, &self.poly_grid())
    }

    /// `cᵢ − cⱼ`. A binomial minus a binomial gives
    /// `(a₁ − b₁, a₁ − b₂, a₂ − b₁, a₂ − b₂)`.
    pub fn row_difference(&self, i: usize, j: usize) -> DifferenceVector {
        let r = self.r;
        let columns = (0..self.cols)
            .map(|l| {
                let (a, b) = (self.get(i, l).exponents(), self.get(j, l).exponents());
                if a.is_empty() || b.is_empty() {
                    return None;
                }
                Some(
                    a.iter()
                        .flat_map(|&x| b.iter().map(move |&y| (x + r - y) % r))
                        .collect(),
                )
            })
            .collect();
        DifferenceVector { columns }
    }

    /// Residues `e − e'` for distinct exponents `e ≠ e'` of one block of row
    /// `i`, i.e. `cᵢ − cᵢ` without the trivial zeros from pairing an
    /// exponent with itself.
    fn self_difference_nontrivial(&self, i: usize) -> DifferenceVector {
        let r = self.r;
        let columns = self
            .row(i)
            .iter()
            .map(|e| match *e {
                ExponentEntry::Bin(a, b) => Some(vec![(a + r - b) % r, (b + r - a) % r]),
                _ => None,
            })
            .collect();
        DifferenceVector { columns }
    }

    /// No 4-cycles in the expansion: `cᵢ − cⱼ` is multiplicity free for all
    /// `i ≠ j`, and within a row no nonzero residue repeats.
    pub fn girth_ge_6(&self) -> bool {
        (0..self.rows).all(|i| {
            self.self_difference_nontrivial(i).is_multiplicity_free()
                && (i + 1..self.rows).all(|j| self.row_difference(i, j).is_multiplicity_free())
        })
    }

    /// `H Hᵀ = 0`: `cᵢ − cⱼ` is multiplicity even for all `i ≤ j`.
    pub fn dual_containing_qc(&self) -> bool {
        (0..self.rows)
            .all(|i| (i..self.rows).all(|j| self.row_difference(i, j).is_multiplicity_even()))
    }

    /// The `J × J` grid `ĥᵢⱼ = Σₗ hᵢₗ(X) hⱼₗ(X)ᵀ`, representing `H Hᵀ`.
    pub fn hermitian_poly_product(&self) -> Vec<Vec<CircPoly>> {
        let grid = self.poly_grid();
        let transposed: Vec<Vec<CircPoly>> = grid
            .iter()
            .map(|row| row.iter().map(CircPoly::transpose).collect())
            .collect();
        (0..self.rows)
            .map(|i| {
                (0..self.rows)
                    .map(|j| {
                        grid[i]
                            .iter()
                            .zip(&transposed[j])
                            .fold(CircPoly::zero(self.r), |acc, (a, b)| &acc + &(a * b))
                    })
                    .collect()
            })
            .collect()
    }

    /// Rank of the expanded parity check, computed in GF(2)[X].
    pub fn rank_via_gcd(&self) -> QcRank {
        grid_rank(&self.poly_grid())
    }

    /// Rank of `H Hᵀ` (the ebit count of the entanglement-assisted CSS
    /// code), computed in GF(2)[X].
    pub fn gram_rank_via_gcd(&self) -> QcRank {
        grid_rank(&self.hermitian_poly_product())
    }

    pub fn rank_bounds(&self) -> RankBounds {
        let hhat = self.hermitian_poly_product();
        let r = self.r;
        let layer_sum = hhat
            .iter()
            .map(|row| grid_rank(std::slice::from_ref(row)).rank)
            .sum();
        let max_block_sum = hhat
            .iter()
            .map(|row| row.iter().map(CircPoly::rank).max().unwrap_or(0))
            .sum();
        let weights: Vec<usize> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|e| e.exponents().len()).sum())
            .collect();
        let w = weights.first().copied().unwrap_or(0);
        let shares_factor = (0..self.rows)
            .flat_map(|i| (0..self.rows).filter(move |&j| j != i).map(move |j| (i, j)))
            .all(|(i, j)| hhat[i][j].gcd_degree() > 0);
        let weight_bound =
            (w % 2 == 0 && w <= r + 1 && weights.iter().all(|&x| x == w) && shares_factor)
                .then(|| self.rows * (r + 1 - w));
        RankBounds {
            layer_sum,
            max_block_sum,
            weight_bound,
        }
    }

    /// Guaranteed upper bound on `rank(H Hᵀ)`: the sum of the block-row
    /// ranks of `Ĥ(X)`.
    pub fn rank_bound(&self) -> usize {
        self.rank_bounds().layer_sum
    }

    /// Parses a header `r J L` followed by `J` lines of `L` entries. Blank
    /// lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Empty("exponent matrix"))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::parse(hline, "header must be `r J L`"))?;
        let [r, j, l] = dims[..] else {
            return Err(Error::parse(hline, "header must be `r J L`"));
        };
        let mut rows = Vec::with_capacity(j);
        let mut last = hline;
        for _ in 0..j {
            let (no, line) = lines
                .next()
                .ok_or_else(|| Error::parse(last + 1, format!("expected {j} rows")))?;
            last = no;
            let row: Vec<ExponentEntry> = line
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|e: Error| Error::parse(no, e.to_string()))
                })
                .collect::<Result<_>>()?;
            if row.len() != l {
                return Err(Error::parse(
                    no,
                    format!("expected {l} entries, got {}", row.len()),
                ));
            }
            rows.push(row);
        }
        if let Some((no, _)) = lines.next() {
            return Err(Error::parse(no, "trailing content after the last row"));
        }
        ExponentMatrix::new(r, rows).map_err(|e| Error::parse(last, e.to_string()))
    }
}

impl fmt::Display for ExponentMatrix {
    /// The text format read by [`ExponentMatrix::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.r, self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ExponentEntry::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExponentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ExponentMatrix {{ {} }}",
            self.to_string().trim_end().replace('\n', "; ")
        )
    }
}

/// Binary expansion of a grid of circulants of size `r`.
pub fn expand_grid(r: usize, cols: usize, grid: &[Vec<CircPoly>]) -> BitMatrix {
    let mut out = BitMatrix::zeros(grid.len() * r, cols * r);
    for (i, row) in grid.iter().enumerate() {
        for (l, p) in row.iter().enumerate() {
            for k in p.coeffs().iter_ones() {
                for t in 0..r {
                    out.set(i * r + t, l * r + (t + k) % r, true);
                }
            }
        }
    }
    out
}
