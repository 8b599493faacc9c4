//! Polynomials over GF(2) and the circulant ring GF(2)[X]/(Xʳ − 1).

use std::fmt;
use std::ops::{Add, Mul};

use crate::f2::{BitMatrix, BitVec};

/// A polynomial over GF(2); bit `i` of the packed words is the coefficient
/// of `Xⁱ`. No trailing zero words are stored, so the zero polynomial is
/// the empty vector.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Gf2Poly {
    words: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Gf2Poly::default()
    }

    pub fn one() -> Self {
        Gf2Poly::monomial(0)
    }

    pub fn monomial(e: usize) -> Self {
        let mut p = Gf2Poly {
            words: vec![0; e / 64 + 1],
        };
        p.words[e / 64] = 1 << (e % 64);
        p
    }

    /// `Xʳ + 1`.
    pub fn x_pow_minus_one(r: usize) -> Self {
        Gf2Poly::monomial(r).add(&Gf2Poly::one())
    }

    pub fn from_bits(bits: &BitVec) -> Self {
        let mut p = Gf2Poly {
            words: bits.words().to_vec(),
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some(64 * (self.words.len() - 1) + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    pub fn add(&self, other: &Gf2Poly) -> Gf2Poly {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.clone();
        for (o, s) in out.words.iter_mut().zip(&short.words) {
            *o ^= s;
        }
        out.trim();
        out
    }

    /// `self · Xᵏ`.
    fn shl(&self, k: usize) -> Gf2Poly {
        if self.is_zero() {
            return Gf2Poly::zero();
        }
        let (wshift, bshift) = (k / 64, k % 64);
        let mut words = vec![0u64; self.words.len() + wshift + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + wshift] ^= w << bshift;
            if bshift != 0 {
                words[i + wshift + 1] ^= w >> (64 - bshift);
            }
        }
        let mut out = Gf2Poly { words };
        out.trim();
        out
    }

    pub fn mul(&self, other: &Gf2Poly) -> Gf2Poly {
        let mut acc = Gf2Poly::zero();
        let Some(d) = other.degree() else {
            return acc;
        };
        for i in (0..=d).filter(|&i| other.coeff(i)) {
            acc = acc.add(&self.shl(i));
        }
        acc
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, divisor: &Gf2Poly) -> (Gf2Poly, Gf2Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut q = Gf2Poly::zero();
        let mut rem = self.clone();
        while let Some(dr) = rem.degree().filter(|&dr| dr >= dd) {
            q = q.add(&Gf2Poly::monomial(dr - dd));
            rem = rem.add(&divisor.shl(dr - dd));
        }
        (q, rem)
    }

    pub fn gcd(&self, other: &Gf2Poly) -> Gf2Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else {
            return write!(f, "0");
        };
        let terms: Vec<String> = (0..=d)
            .filter(|&i| self.coeff(i))
            .map(|i| format!("X^{i}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Sum of the diagonal degrees after diagonalizing a polynomial matrix by
/// unimodular row and column operations. For a matrix of full column rank
/// this is the degree of the gcd of its maximal minors, which equals the
/// GF(2)-dimension of the quotient of `GF(2)[X]^cols` by the row module.
pub fn determinantal_degree(mut a: Vec<Vec<Gf2Poly>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut total = 0;
    for t in 0..rows.min(cols) {
        loop {
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter_map(|(i, j)| a[i][j].degree().map(|d| (d, i, j)))
                .min();
            let Some((_, pi, pj)) = pivot else {
                return total;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                let (q, r) = a[i][t].div_rem(&a[t][t]);
                if !q.is_zero() {
                    let (top, bottom) = a.split_at_mut(i);
                    for (x, y) in bottom[0][t..].iter_mut().zip(&top[t][t..]) {
                        *x = x.add(&q.mul(y));
                    }
                }
                clean &= r.is_zero();
            }
            for j in t + 1..cols {
                let (q, r) = a[t][j].div_rem(&a[t][t]);
                if !q.is_zero() {
                    for row in a.iter_mut().skip(t) {
                        let sub = q.mul(&row[t]);
                        row[j] = row[j].add(&sub);
                    }
                }
                clean &= r.is_zero();
            }
            if clean {
                break;
            }
        }
        total += a[t][t].degree().expect("pivot is nonzero");
    }
    total
}

/// An element of GF(2)[X]/(Xʳ − 1), identified with the `r × r` circulant
/// whose first row holds the coefficients; row `i` is that row shifted
/// right by `i`, so `Xᵉ` has its 1 in row `i` at column `(i + e) mod r`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CircPoly {
    coeffs: BitVec,
}

impl CircPoly {
    /// Panics if `r == 0`.
    pub fn zero(r: usize) -> Self {
        assert!(r > 0, "circulant size must be positive");
        CircPoly {
            coeffs: BitVec::zeros(r),
        }
    }

    pub fn one(r: usize) -> Self {
        CircPoly::monomial(r, 0)
    }

    /// `X^(e mod r)`.
    pub fn monomial(r: usize, e: usize) -> Self {
        let mut p = CircPoly::zero(r);
        p.coeffs.set(e % r, true);
        p
    }

    /// `Σ X^(e mod r)`; repeated exponents cancel.
    pub fn from_exponents(r: usize, exponents: &[usize]) -> Self {
        let mut p = CircPoly::zero(r);
        for &e in exponents {
            p.coeffs.flip(e % r);
        }
        p
    }

    pub fn from_coeffs(coeffs: BitVec) -> Self {
        assert!(!coeffs.is_empty(), "circulant size must be positive");
        CircPoly { coeffs }
    }

    pub fn r(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &BitVec {
        &self.coeffs
    }

    pub fn weight(&self) -> usize {
        self.coeffs.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// The polynomial of the transposed circulant: `Xᵏ ↦ X^(r−k)`.
    pub fn transpose(&self) -> CircPoly {
        let r = self.r();
        let mut out = CircPoly::zero(r);
        for k in self.coeffs.iter_ones() {
            out.coeffs.set((r - k) % r, true);
        }
        out
    }

    pub fn to_poly(&self) -> Gf2Poly {
        Gf2Poly::from_bits(&self.coeffs)
    }

    /// `deg gcd(M(X), Xʳ − 1)`; equals `r` for the zero element.
    pub fn gcd_degree(&self) -> usize {
        self.to_poly()
            .gcd(&Gf2Poly::x_pow_minus_one(self.r()))
            .degree()
            .expect("gcd with a nonzero polynomial is nonzero")
    }

    /// Rank of the circulant, `r − deg gcd(M(X), Xʳ − 1)`.
    pub fn rank(&self) -> usize {
        self.r() - self.gcd_degree()
    }

    pub fn to_matrix(&self) -> BitMatrix {
        BitMatrix::circulant(&self.coeffs)
    }
}

impl Add for &CircPoly {
    type Output = CircPoly;

    fn add(self, other: &CircPoly) -> CircPoly {
        assert_eq!(self.r(), other.r(), "circulant size mismatch");
        CircPoly {
            coeffs: self.coeffs.xor(&other.coeffs),
        }
    }
}

impl Mul for &CircPoly {
    type Output = CircPoly;

    fn mul(self, other: &CircPoly) -> CircPoly {
        assert_eq!(self.r(), other.r(), "circulant size mismatch");
        let r = self.r();
        let mut out = CircPoly::zero(r);
        for i in self.coeffs.iter_ones() {
            for j in other.coeffs.iter_ones() {
                out.coeffs.flip((i + j) % r);
            }
        }
        out
    }
}

impl fmt::Display for CircPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter_ones()
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "X".to_string(),
                k => format!("X^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for CircPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CircPoly(r={}, {self})", self.r())
    }
}

/// Rank data of a block matrix of circulants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QcRank {
    /// Rank of the binary expansion.
    pub rank: usize,
    /// Degree of the gcd of the maximal minors of `[M; (Xʳ − 1)·I]`, the
    /// block generalization of `deg gcd(M(X), Xʳ − 1)`.
    pub gcd_degree: usize,
}

/// Rank of the binary expansion of a `J × L` grid of circulants, computed
/// in GF(2)[X]. The row space of the expansion is the image of
/// `v ↦ v·M` on `Rᴶ`, whose codimension in `Rᴸ` is `gcd_degree`.
pub fn grid_rank(grid: &[Vec<CircPoly>]) -> QcRank {
    let Some(first) = grid.first().and_then(|row| row.first()) else {
        return QcRank {
            rank: 0,
            gcd_degree: 0,
        };
    };
    let r = first.r();
    let cols = grid[0].len();
    let mut a: Vec<Vec<Gf2Poly>> = grid
        .iter()
        .map(|row| row.iter().map(CircPoly::to_poly).collect())
        .collect();
    for l in 0..cols {
        let mut row = vec![Gf2Poly::zero(); cols];
        row[l] = Gf2Poly::x_pow_minus_one(r);
        a.push(row);
    }
    let gcd_degree = determinantal_degree(a);
    QcRank {
        rank: cols * r - gcd_degree,
        gcd_degree,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn poly(exps: &[usize]) -> Gf2Poly {
        exps.iter()
            .fold(Gf2Poly::zero(), |acc, &e| acc.add(&Gf2Poly::monomial(e)))
    }

    #[test]
    fn polynomial_arithmetic() {
        assert_eq!(Gf2Poly::zero().degree(), None);
        assert_eq!(poly(&[0, 70]).degree(), Some(70));
        // (X + 1)² = X² + 1 over GF(2).
        assert_eq!(poly(&[0, 1]).mul(&poly(&[0, 1])), poly(&[0, 2]));
        let (q, r) = Gf2Poly::x_pow_minus_one(16).div_rem(&poly(&[0, 1]));
        assert!(r.is_zero());
        assert_eq!(q.degree(), Some(15));
        assert_eq!(poly(&[0, 2]).gcd(&poly(&[0, 1, 2])), Gf2Poly::one());
        assert_eq!(poly(&[0, 3]).gcd(&poly(&[0, 2])), poly(&[0, 1]));
    }

    #[test]
    fn circulant_ranks() {
        assert_eq!(CircPoly::zero(7).rank(), 0);
        assert_eq!(CircPoly::one(7).rank(), 7);
        // Σ X^{2k} over r = 16 is (X + 1)¹⁴.
        let even = CircPoly::from_exponents(16, &[0, 2, 4, 6, 8, 10, 12, 14]);
        assert_eq!(even.rank(), 2);
        assert_eq!(even.to_matrix().rank(), 2);
    }

    #[test]
    fn monomial_convention() {
        let m = CircPoly::monomial(5, 2).to_matrix();
        for i in 0..5 {
            assert!(m.get(i, (i + 2) % 5));
            assert_eq!(m.row(i).count_ones(), 1);
        }
        assert_eq!(
            CircPoly::monomial(5, 2).transpose(),
            CircPoly::monomial(5, 3)
        );
        assert_eq!(
            CircPoly::monomial(5, 2).transpose().to_matrix(),
            m.transpose()
        );
    }

    #[test]
    fn structured_supports() {
        // Support on multiples of p gives rank p; support {0..p} gives
        // rank r − p + 1.
        for (p, q) in [(2, 8), (4, 4), (3, 5), (5, 3), (1, 9)] {
            let r = p * q;
            let spaced: Vec<usize> = (0..q).map(|i| p * i).collect();
            let m = CircPoly::from_exponents(r, &spaced);
            assert_eq!(m.rank(), p);
            assert_eq!(m.to_matrix().rank(), p);
            let prefix: Vec<usize> = (0..p).collect();
            let m = CircPoly::from_exponents(r, &prefix);
            assert_eq!(m.rank(), r - p + 1);
            assert_eq!(m.to_matrix().rank(), r - p + 1);
        }
    }

    #[test]
    fn divisor_rank_is_at_most_r_minus_weight_plus_one() {
        // For M(X) | Xʳ − 1 of weight w, deg M ≥ w − 1, so rank ≤ r − w + 1.
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut seen = 0;
        while seen < 100 {
            let r = rng.random_range(2..=32);
            let m = CircPoly::from_coeffs(BitVec::from_bools((0..r).map(|_| rng.random())));
            if m.is_zero() {
                continue;
            }
            let g = m.to_poly().gcd(&Gf2Poly::x_pow_minus_one(r));
            let mut coeffs = BitVec::zeros(r);
            for i in 0..=g.degree().unwrap().min(r - 1) {
                coeffs.set(i, g.coeff(i));
            }
            if g.degree() == Some(r) {
                continue;
            }
            let d = CircPoly::from_coeffs(coeffs);
            assert!(d.rank() <= r - d.weight() + 1);
            seen += 1;
        }
    }

    #[test]
    fn grid_rank_matches_elimination() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let r = rng.random_range(1..=12);
            let rows = rng.random_range(1..=3);
            let cols = rng.random_range(1..=4);
            let grid: Vec<Vec<CircPoly>> = (0..rows)
                .map(|_| {
                    (0..cols)
                        .map(|_| {
                            let exps: Vec<usize> = (0..rng.random_range(0..3))
                                .map(|_| rng.random_range(0..r))
                                .collect();
                            CircPoly::from_exponents(r, &exps)
                        })
                        .collect()
                })
                .collect();
            let mut big = BitMatrix::zeros(0, cols * r);
            for row in &grid {
                let band = row
                    .iter()
                    .map(CircPoly::to_matrix)
                    .reduce(|a, b| a.hstack(&b).unwrap())
                    .unwrap();
                big = big.vstack(&band).unwrap();
            }
            let qc = grid_rank(&grid);
            assert_eq!(qc.rank, big.rank());
            assert_eq!(qc.gcd_degree, cols * r - big.rank());
        }
    }

    fn arb_circ() -> impl Strategy<Value = (CircPoly, CircPoly)> {
        (1usize..=32).prop_flat_map(|r| {
            (
                prop::collection::vec(any::<bool>(), r),
                prop::collection::vec(any::<bool>(), r),
            )
                .prop_map(|(a, b)| {
                    (
                        CircPoly::from_coeffs(BitVec::from_bools(a)),
                        CircPoly::from_coeffs(BitVec::from_bools(b)),
                    )
                })
        })
    }

    proptest! {
        #[test]
        fn ring_isomorphism((a, b) in arb_circ()) {
            prop_assert_eq!((&a + &b).to_matrix(), a.to_matrix().add(&b.to_matrix()).unwrap());
            prop_assert_eq!((&a * &b).to_matrix(), a.to_matrix().mat_mul(&b.to_matrix()).unwrap());
            prop_assert_eq!(a.rank(), a.to_matrix().rank());
        }
    }
}
