//! Shared fixtures for the benchmarks.

use eaqecc::pauli::from_matrix;
use eaqecc::{BitMatrix, BitVec, PauliVec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded generator, so every run measures the same inputs.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> BitMatrix {
    let rows = (0..rows)
        .map(|_| BitVec::from_bools((0..cols).map(|_| rng.random::<bool>())))
        .collect();
    BitMatrix::from_rows(cols, rows).expect("rows have `cols` bits")
}

/// `count` uniformly random Pauli operators on `n` qubits.
pub fn random_paulis<R: Rng>(n: usize, count: usize, rng: &mut R) -> Vec<PauliVec> {
    from_matrix(&random_matrix(count, 2 * n, rng)).expect("rows have 2n bits")
}

/// Error with independent flips of probability `f`, and its syndrome.
pub fn flip_pattern<R: Rng>(h: &BitMatrix, f: f64, rng: &mut R) -> (BitVec, BitVec) {
    let e = BitVec::from_bools((0..h.num_cols()).map(|_| rng.random::<f64>() < f));
    let s = h.mul_vec(&e).expect("pattern has one bit per column");
    (e, s)
}
