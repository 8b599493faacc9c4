//! Sum-product syndrome decoding for binary parity checks.
//!
//! Messages live in the probability domain and are updated on a flooding
//! schedule: every check (horizontal step), then every bit (vertical step),
//! then a tentative hard decision. For check `j` and bit `i ∈ N(j)` the
//! horizontal step uses
//!
//! `r⁰ⱼᵢ = (1 + (−1)^zⱼ Π (q⁰ⱼᵢ' − q¹ⱼᵢ')) / 2`, `r¹ⱼᵢ = 1 − r⁰ⱼᵢ`,
//!
//! the product running over `i' ∈ N(j) \ i`; it equals the sum over all
//! configurations of the other bits that satisfy the check.

use crate::error::{Error, Result};
use crate::f2::{BitMatrix, BitVec};

/// Iteration cap used by the simulations.
pub const DEFAULT_MAX_ITER: usize = 100;

/// Lower clamp on every message, keeping products away from zero.
const FLOOR: f64 = 1e-300;

/// Largest code length accepted by [`exact_marginals`].
pub const EXACT_MAX_BITS: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeResult {
    /// Estimated noise vector `n̂`.
    pub estimate: BitVec,
    /// `H n̂ᵀ` equals the syndrome.
    pub converged: bool,
    pub iterations: usize,
}

/// Tanner graph of a parity check with message buffers. Edges are numbered
/// in check-major order; `q` and `r` hold per-edge probabilities of the
/// bit being 0 and 1.
#[derive(Clone, Debug)]
pub struct SpaWorkspace {
    h: BitMatrix,
    /// `check_edges[j]` is the edge range of check `j`.
    check_edges: Vec<std::ops::Range<usize>>,
    edge_bit: Vec<usize>,
    /// `bit_edges[i]` lists the edges at bit `i`.
    bit_edges: Vec<Vec<usize>>,
    q: Vec<[f64; 2]>,
    r: Vec<[f64; 2]>,
    prior: [f64; 2],
    posterior: Vec<f64>,
    deltas: Vec<f64>,
    suffix: Vec<f64>,
    suffix_pair: Vec<[f64; 2]>,
}

impl SpaWorkspace {
    pub fn new(h: &BitMatrix) -> Self {
        let n = h.num_cols();
        let mut check_edges = Vec::with_capacity(h.num_rows());
        let mut edge_bit = Vec::new();
        let mut bit_edges = vec![Vec::new(); n];
        for row in h.rows() {
            let start = edge_bit.len();
            for i in row.iter_ones() {
                bit_edges[i].push(edge_bit.len());
                edge_bit.push(i);
            }
            check_edges.push(start..edge_bit.len());
        }
        let edges = edge_bit.len();
        SpaWorkspace {
            h: h.clone(),
            check_edges,
            edge_bit,
            bit_edges,
            q: vec![[0.5; 2]; edges],
            r: vec![[0.5; 2]; edges],
            prior: [0.5; 2],
            posterior: vec![0.5; n],
            deltas: Vec::new(),
            suffix: Vec::new(),
            suffix_pair: Vec::new(),
        }
    }

    pub fn parity_check(&self) -> &BitMatrix {
        &self.h
    }

    fn validate(&self, syndrome: &BitVec, prior_flip: f64) -> Result<()> {
        if syndrome.len() != self.h.num_rows() {
            return Err(Error::DimensionMismatch {
                expected: self.h.num_rows(),
                found: syndrome.len(),
            });
        }
        if !(0.0..1.0).contains(&prior_flip) {
            return Err(Error::InvalidParameter(format!(
                "prior flip probability {prior_flip} is outside [0, 1)"
            )));
        }
        Ok(())
    }

    fn initialize(&mut self, prior_flip: f64) {
        self.prior = [1.0 - prior_flip, prior_flip];
        self.q.fill(self.prior);
    }

    fn horizontal(&mut self, syndrome: &BitVec) {
        for (j, range) in self.check_edges.iter().enumerate() {
            let sign = if syndrome.get(j) { -1.0 } else { 1.0 };
            let (deltas, suffix) = (&mut self.deltas, &mut self.suffix);
            deltas.clear();
            deltas.extend(self.q[range.clone()].iter().map(|q| q[0] - q[1]));
            // Product over the other edges via prefix and suffix products.
            let k = deltas.len();
            suffix.clear();
            suffix.resize(k + 1, 1.0);
            for t in (0..k).rev() {
                suffix[t] = suffix[t + 1] * deltas[t];
            }
            let mut prefix = 1.0;
            for t in 0..k {
                let others = prefix * suffix[t + 1];
                let r0 = (0.5 * (1.0 + sign * others)).max(FLOOR);
                let r1 = (0.5 * (1.0 - sign * others)).max(FLOOR);
                self.r[range.start + t] = [r0, r1];
                prefix *= deltas[t];
            }
        }
    }

    fn vertical(&mut self) {
        for (i, edges) in self.bit_edges.iter().enumerate() {
            let k = edges.len();
            let suffix = &mut self.suffix_pair;
            suffix.clear();
            suffix.resize(k + 1, [1.0; 2]);
            for t in (0..k).rev() {
                let r = self.r[edges[t]];
                suffix[t] = [suffix[t + 1][0] * r[0], suffix[t + 1][1] * r[1]];
            }
            let mut prefix = self.prior;
            for t in 0..k {
                let q0 = (prefix[0] * suffix[t + 1][0]).max(FLOOR);
                let q1 = (prefix[1] * suffix[t + 1][1]).max(FLOOR);
                let norm = q0 + q1;
                self.q[edges[t]] = [q0 / norm, q1 / norm];
                let r = self.r[edges[t]];
                prefix = [prefix[0] * r[0], prefix[1] * r[1]];
            }
            // Pseudoposterior from all incoming messages.
            let (p0, p1) = (prefix[0].max(FLOOR), prefix[1].max(FLOOR));
            self.posterior[i] = p1 / (p0 + p1);
        }
    }

    fn hard_decision(&self) -> BitVec {
        // A tie favours 0, the lower-weight choice.
        BitVec::from_bools(self.posterior.iter().map(|&p| p > 0.5))
    }

    /// Decodes until `H n̂ᵀ = syndrome` or `max_iter` iterations have run.
    pub fn decode(
        &mut self,
        syndrome: &BitVec,
        prior_flip: f64,
        max_iter: usize,
    ) -> Result<DecodeResult> {
        self.validate(syndrome, prior_flip)?;
        if max_iter == 0 {
            return Err(Error::InvalidParameter(
                "max_iter must be at least 1".into(),
            ));
        }
        self.initialize(prior_flip);
        let mut estimate = BitVec::zeros(self.h.num_cols());
        for it in 1..=max_iter {
            self.horizontal(syndrome);
            self.vertical();
            estimate = self.hard_decision();
            if &self.h.mul_vec(&estimate)? == syndrome {
                return Ok(DecodeResult {
                    estimate,
                    converged: true,
                    iterations: it,
                });
            }
        }
        Ok(DecodeResult {
            estimate,
            converged: false,
            iterations: max_iter,
        })
    }

    /// Pseudoposteriors `P(nᵢ = 1)` after exactly `iterations` rounds,
    /// without stopping at a valid estimate.
    pub fn posteriors_after(
        &mut self,
        syndrome: &BitVec,
        prior_flip: f64,
        iterations: usize,
    ) -> Result<Vec<f64>> {
        self.validate(syndrome, prior_flip)?;
        self.initialize(prior_flip);
        self.posterior.fill(prior_flip);
        for _ in 0..iterations {
            self.horizontal(syndrome);
            self.vertical();
        }
        Ok(self.posterior.clone())
    }

    /// Largest `|q⁰ + q¹ − 1|` over all edges.
    pub fn normalization_error(&self) -> f64 {
        self.q
            .iter()
            .map(|q| (q[0] + q[1] - 1.0).abs())
            .fold(0.0, f64::max)
    }

    pub fn num_edges(&self) -> usize {
        self.edge_bit.len()
    }
}

/// One-shot [`SpaWorkspace::decode`].
pub fn decode(
    h: &BitMatrix,
    syndrome: &BitVec,
    prior_flip: f64,
    max_iter: usize,
) -> Result<DecodeResult> {
    SpaWorkspace::new(h).decode(syndrome, prior_flip, max_iter)
}

/// Exact `P(nᵢ = 1 | z)` for i.i.d. flips with probability `prior_flip`,
/// by enumerating all `2ⁿ` noise vectors. Requires `n ≤ 24` and a
/// syndrome in the column space of `h`.
pub fn exact_marginals(h: &BitMatrix, syndrome: &BitVec, prior_flip: f64) -> Result<Vec<f64>> {
    let (m, n) = (h.num_rows(), h.num_cols());
    if n > EXACT_MAX_BITS {
        return Err(Error::InvalidParameter(format!(
            "exact marginals need n ≤ {EXACT_MAX_BITS}, got {n}"
        )));
    }
    if syndrome.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: syndrome.len(),
        });
    }
    let columns: Vec<BitVec> = h.transpose().into_rows();
    // Walk the noise vectors in Gray-code order, flipping one bit a step.
    let mut current = BitVec::zeros(m);
    let mut pattern = 0u32;
    let mut weight = 0i32;
    let ratio = prior_flip / (1.0 - prior_flip);
    let base = (1.0 - prior_flip).powi(n as i32);
    let mut total = 0.0;
    let mut marginal = vec![0.0; n];
    for step in 0u64..1 << n {
        if step > 0 {
            let bit = step.trailing_zeros() as usize;
            pattern ^= 1 << bit;
            current.xor_assign(&columns[bit]);
            weight += if pattern >> bit & 1 == 1 { 1 } else { -1 };
        }
        if &current == syndrome {
            let prob = base * ratio.powi(weight);
            total += prob;
            for (i, mi) in marginal.iter_mut().enumerate() {
                if pattern >> i & 1 == 1 {
                    *mi += prob;
                }
            }
        }
    }
    if total == 0.0 {
        return Err(Error::InvalidParameter(
            "syndrome is not reachable from any noise vector".into(),
        ));
    }
    Ok(marginal.into_iter().map(|x| x / total).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn hamming() -> BitMatrix {
        BitMatrix::from_u8_rows(&[
            &[0, 0, 0, 1, 1, 1, 1],
            &[0, 1, 1, 0, 0, 1, 1],
            &[1, 0, 1, 0, 1, 0, 1],
        ])
    }

    /// Random Tanner tree: every new check hangs off one existing bit and
    /// owns one to three new bits.
    fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> BitMatrix {
        let mut rows: Vec<Vec<usize>> = Vec::new();
        let mut bits = 1;
        while bits < n {
            let anchor = rng.random_range(0..bits);
            let fresh = rng.random_range(1..=3).min(n - bits);
            let mut row = vec![anchor];
            row.extend(bits..bits + fresh);
            bits += fresh;
            rows.push(row);
        }
        let mut h = BitMatrix::zeros(rows.len(), n);
        for (j, row) in rows.iter().enumerate() {
            for &i in row {
                h.set(j, i, true);
            }
        }
        h
    }

    #[test]
    fn zero_syndrome() {
        let h = hamming();
        let res = decode(&h, &BitVec::zeros(3), 0.1, 10).unwrap();
        assert!(res.estimate.is_zero());
        assert!(res.converged);
        assert_eq!(res.iterations, 1);
    }

    #[test]
    fn single_errors_on_hamming() {
        let h = hamming();
        for i in 0..7 {
            let e = BitVec::from_ones(7, &[i]);
            let z = h.mul_vec(&e).unwrap();
            let res = decode(&h, &z, 0.01, DEFAULT_MAX_ITER).unwrap();
            assert!(res.converged);
            // The maximum-likelihood pattern is the single flip.
            let ml = (0u32..128)
                .map(|p| BitVec::from_bools((0..7).map(|b| p >> b & 1 == 1)))
                .filter(|v| h.mul_vec(v).unwrap() == z)
                .min_by_key(BitVec::count_ones)
                .unwrap();
            assert_eq!(ml, e);
            if i < 6 {
                assert_eq!(res.estimate, e);
            } else {
                // Bit 6 meets all three checks. After one round every bit in
                // two unsatisfied checks has posterior above 1/2, and those
                // bits with bit 6 already satisfy the syndrome.
                assert_eq!(res.iterations, 1);
                assert_eq!(res.estimate, BitVec::from_ones(7, &[2, 4, 5, 6]));
            }
        }
    }

    #[test]
    fn converged_estimates_satisfy_the_syndrome() {
        let h = hamming();
        for f in [0.01, 0.05, 0.1] {
            let mut ws = SpaWorkspace::new(&h);
            for pattern in 0u32..128 {
                let e = BitVec::from_bools((0..7).map(|b| pattern >> b & 1 == 1));
                let z = h.mul_vec(&e).unwrap();
                let res = ws.decode(&z, f, DEFAULT_MAX_ITER).unwrap();
                assert!(res.converged);
                assert_eq!(h.mul_vec(&res.estimate).unwrap(), z);
                assert!(ws.normalization_error() < 1e-12);
            }
        }
    }

    #[test]
    fn trees_give_exact_marginals() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let n = rng.random_range(2..=15);
            let h = random_tree(&mut rng, n);
            let z = BitVec::from_bools((0..h.num_rows()).map(|_| rng.random()));
            let f = rng.random_range(0.02..0.3);
            let exact = exact_marginals(&h, &z, f).unwrap();
            // n iterations exceed the tree's diameter in check steps.
            let spa = SpaWorkspace::new(&h).posteriors_after(&z, f, n).unwrap();
            for (a, b) in exact.iter().zip(&spa) {
                assert!((a - b).abs() < 1e-9, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn exact_marginal_symmetry() {
        let h = BitMatrix::from_u8_rows(&[&[1, 1]]);
        let m = exact_marginals(&h, &BitVec::from_ones(1, &[0]), 0.1).unwrap();
        assert!((m[0] - 0.5).abs() < 1e-15 && (m[1] - 0.5).abs() < 1e-15);
        let m = exact_marginals(&hamming(), &BitVec::zeros(3), 1e-9).unwrap();
        assert!(m.iter().all(|&x| x < 1e-8));
        assert!(exact_marginals(&BitMatrix::zeros(1, 25), &BitVec::zeros(1), 0.1).is_err());
        let unreachable = BitMatrix::from_u8_rows(&[&[0, 0]]);
        assert!(exact_marginals(&unreachable, &BitVec::from_ones(1, &[0]), 0.1).is_err());
    }

    #[test]
    fn input_validation() {
        let h = hamming();
        assert!(matches!(
            decode(&h, &BitVec::zeros(4), 0.1, 10),
            Err(Error::DimensionMismatch {
                expected: 3,
                found: 4
            })
        ));
        assert!(decode(&h, &BitVec::zeros(3), 1.0, 10).is_err());
        assert!(decode(&h, &BitVec::zeros(3), -0.1, 10).is_err());
        assert!(decode(&h, &BitVec::zeros(3), 0.1, 0).is_err());
    }

    #[test]
    fn single_errors_on_a_girth_six_code() {
        let h = crate::qc_ldpc::make_ex1().expand();
        let mut ws = SpaWorkspace::new(&h);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut ok = 0;
        for _ in 0..1000 {
            let e = BitVec::from_ones(h.num_cols(), &[rng.random_range(0..h.num_cols())]);
            let res = ws
                .decode(&h.mul_vec(&e).unwrap(), 0.01, DEFAULT_MAX_ITER)
                .unwrap();
            ok += usize::from(res.estimate == e);
        }
        assert!(ok >= 990, "{ok} of 1000");
    }
}
