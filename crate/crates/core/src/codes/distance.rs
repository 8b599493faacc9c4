//! Distance verification by exhaustive enumeration of low-weight errors.
//!
//! An error `u` is detected when it anticommutes with some element of `S_I`
//! or `S_E`. In degenerate mode an undetected error is also harmless when it
//! lies in `span(S_I ∪ S_G)`. Errors are visited by ascending weight and, at
//! each weight, in depth-first order over (qubit, X < Y < Z); the first
//! violation in that order is reported.

use rayon::prelude::*;

use super::QuantumCode;
use crate::f2::RowEchelon;
use crate::pauli::{Pauli, PauliVec};

/// Default cap on the number of error patterns enumerated.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceMode {
    /// Every nonzero error of weight `< d` must be detected.
    Strict,
    /// Undetected errors of weight `< d` must lie in `span(S_I ∪ S_G)`.
    Degenerate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DistanceCheck {
    Holds,
    /// An error of weight `weight < d` violating the criterion.
    Violated {
        weight: usize,
        witness: PauliVec,
    },
    /// The enumeration would exceed the budget; nothing was decided.
    OverBudget {
        required: u128,
        budget: u128,
    },
}

impl DistanceCheck {
    pub fn holds(&self) -> bool {
        matches!(self, DistanceCheck::Holds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DistanceSearch {
    /// The distance, with a minimum-weight violating error.
    Exact { d: usize, witness: PauliVec },
    /// No violation up to weight `max_weight`, which the budget allowed.
    AtLeast { d: usize },
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| {
        acc.saturating_mul((n - i) as u128) / (i as u128 + 1)
    })
}

/// `Σ_{1 ≤ w < d} C(n, w) · 3ʷ`, the number of errors checked to certify
/// distance `d`.
pub fn enumeration_cost(n: usize, d: usize) -> u128 {
    (1..d)
        .map(|w| binomial(n, w).saturating_mul(3u128.saturating_pow(w as u32)))
        .fold(0u128, u128::saturating_add)
}

const PAULIS: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

/// Per-qubit syndromes of X, Y and Z against the checks, packed in words.
struct SyndromeTable {
    words: usize,
    /// `table[(q * 3 + p) * words ..][..words]`.
    table: Vec<u64>,
}

impl SyndromeTable {
    fn new(n: usize, checks: &[PauliVec]) -> Self {
        let words = checks.len().div_ceil(64).max(1);
        let mut table = vec![0u64; n * 3 * words];
        for (k, g) in checks.iter().enumerate() {
            for q in 0..n {
                let (gz, gx) = (g.z().get(q), g.x().get(q));
                // X anticommutes with a Z component, Z with an X component.
                let flips = [gz, gz ^ gx, gx];
                for (p, &f) in flips.iter().enumerate() {
                    if f {
                        table[(q * 3 + p) * words + k / 64] |= 1 << (k % 64);
                    }
                }
            }
        }
        SyndromeTable { words, table }
    }

    fn get(&self, q: usize, p: usize) -> &[u64] {
        let start = (q * 3 + p) * self.words;
        &self.table[start..start + self.words]
    }
}

struct Search<'a> {
    n: usize,
    syndromes: SyndromeTable,
    trivial: Option<&'a RowEchelon>,
}

impl Search<'_> {
    /// First violating error of exactly weight `w` whose lowest qubit is
    /// `first`.
    fn violation_from(&self, w: usize, first: usize) -> Option<PauliVec> {
        let mut support = vec![(first, 0usize); w];
        let mut acc = vec![0u64; self.syndromes.words * (w + 1)];
        for p in 0..3 {
            support[0] = (first, p);
            let words = self.syndromes.words;
            let (head, tail) = acc.split_at_mut(words);
            tail[..words]
                .iter_mut()
                .zip(head.iter().zip(self.syndromes.get(first, p)))
                .for_each(|(o, (a, s))| *o = a ^ s);
            if let Some(v) = self.descend(w, 1, &mut support, &mut acc) {
                return Some(v);
            }
        }
        None
    }

    fn descend(
        &self,
        w: usize,
        depth: usize,
        support: &mut [(usize, usize)],
        acc: &mut [u64],
    ) -> Option<PauliVec> {
        let words = self.syndromes.words;
        if depth == w {
            let s = &acc[depth * words..(depth + 1) * words];
            if s.iter().all(|&x| x == 0) {
                let err = self.to_pauli(support);
                if self.violates(&err) {
                    return Some(err);
                }
            }
            return None;
        }
        let start = support[depth - 1].0 + 1;
        // Leave room for the remaining positions.
        let end = self.n - (w - depth - 1);
        for q in start..end {
            for p in 0..3 {
                support[depth] = (q, p);
                let (head, tail) = acc.split_at_mut((depth + 1) * words);
                let prev = &head[depth * words..];
                tail[..words]
                    .iter_mut()
                    .zip(prev.iter().zip(self.syndromes.get(q, p)))
                    .for_each(|(o, (a, s))| *o = a ^ s);
                if let Some(v) = self.descend(w, depth + 1, support, acc) {
                    return Some(v);
                }
            }
        }
        None
    }

    fn to_pauli(&self, support: &[(usize, usize)]) -> PauliVec {
        let mut v = PauliVec::identity(self.n);
        for &(q, p) in support {
            v.set(q, PAULIS[p]);
        }
        v
    }

    fn violates(&self, err: &PauliVec) -> bool {
        match self.trivial {
            None => true,
            Some(span) => !span.contains(&err.to_bits()),
        }
    }

    fn first_violation(&self, w: usize) -> Option<PauliVec> {
        if w > self.n {
            return None;
        }
        (0..=self.n - w)
            .into_par_iter()
            .find_map_first(|first| self.violation_from(w, first))
    }
}

/// Checks that the code has distance at least `d`, with the default budget.
pub fn verify_distance(code: &QuantumCode, d: usize, mode: DistanceMode) -> DistanceCheck {
    verify_distance_with_budget(code, d, mode, DEFAULT_BUDGET)
}

pub fn verify_distance_with_budget(
    code: &QuantumCode,
    d: usize,
    mode: DistanceMode,
    budget: u128,
) -> DistanceCheck {
    let required = enumeration_cost(code.n(), d);
    if required > budget {
        return DistanceCheck::OverBudget { required, budget };
    }
    let trivial = code.trivial_span();
    let search = Search {
        n: code.n(),
        syndromes: SyndromeTable::new(code.n(), &code.checks()),
        trivial: (mode == DistanceMode::Degenerate).then_some(&trivial),
    };
    for w in 1..d {
        if let Some(witness) = search.first_violation(w) {
            return DistanceCheck::Violated { weight: w, witness };
        }
    }
    DistanceCheck::Holds
}

/// Smallest weight of a violating error, searching weights up to
/// `max_weight` within `budget`.
pub fn find_distance(
    code: &QuantumCode,
    mode: DistanceMode,
    max_weight: usize,
    budget: u128,
) -> DistanceSearch {
    let trivial = code.trivial_span();
    let search = Search {
        n: code.n(),
        syndromes: SyndromeTable::new(code.n(), &code.checks()),
        trivial: (mode == DistanceMode::Degenerate).then_some(&trivial),
    };
    let mut checked = 0;
    for w in 1..=max_weight.min(code.n()) {
        if enumeration_cost(code.n(), w + 1) > budget {
            break;
        }
        if let Some(witness) = search.first_violation(w) {
            return DistanceSearch::Exact { d: w, witness };
        }
        checked = w;
    }
    DistanceSearch::AtLeast { d: checked + 1 }
}
