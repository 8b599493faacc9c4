//! Symplectic Gram–Schmidt.
//!
//! Any subspace `V ⊆ (Z₂)²ⁿ` splits as `V_symp ⊕ V_iso`: `c` hyperbolic pairs
//! `(uᵢ, vᵢ)` with `uᵢ ⊙ vᵢ = 1`, plus `ℓ` vectors orthogonal to all of `V`.
//! [`decompose`] finds such a split and extends it to a symplectic basis of
//! the whole space.
//!
//! The input is first reduced to an independent list (keeping the first
//! occurrence of each new direction) and padded with standard basis vectors.
//! Each of the `n` rounds takes `u = w₁`, pairs it with the first `w_j`
//! (`j ≥ 2`) that anticommutes with it, and projects the remaining vectors
//! onto the symplectic complement of `(u, w_j)`. Pure Z and pure X inputs
//! stay pure throughout, so CSS generators keep their type.

use crate::f2::{BitVec, RowEchelon};
use crate::pauli::PauliVec;

/// An anticommuting pair of operators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticPair {
    pub u: PauliVec,
    pub v: PauliVec,
}

impl SymplecticPair {
    pub fn new(u: PauliVec, v: PauliVec) -> Self {
        SymplecticPair { u, v }
    }
}

#[derive(Clone, Debug)]
pub struct GroupDecomposition {
    n: usize,
    /// Hyperbolic pairs inside `V`.
    pairs: Vec<SymplecticPair>,
    /// Isotropic part of `V`.
    isotropic: Vec<PauliVec>,
    /// Partners of `isotropic`, outside `V`.
    partners: Vec<PauliVec>,
    /// Pairs with neither member in `V`.
    completion: Vec<SymplecticPair>,
}

impl GroupDecomposition {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of hyperbolic pairs in `V`.
    pub fn c(&self) -> usize {
        self.pairs.len()
    }

    /// Dimension of the isotropic part.
    pub fn ell(&self) -> usize {
        self.isotropic.len()
    }

    pub fn pairs(&self) -> &[SymplecticPair] {
        &self.pairs
    }

    pub fn isotropic(&self) -> &[PauliVec] {
        &self.isotropic
    }

    pub fn isotropic_partners(&self) -> &[PauliVec] {
        &self.partners
    }

    pub fn completion(&self) -> &[SymplecticPair] {
        &self.completion
    }

    /// All `n` pairs of the symplectic basis: the pairs of `V`, then the
    /// isotropic vectors with their partners, then the completion.
    pub fn symplectic_basis(&self) -> Vec<SymplecticPair> {
        let iso = self
            .isotropic
            .iter()
            .zip(&self.partners)
            .map(|(u, v)| SymplecticPair::new(u.clone(), v.clone()));
        self.pairs
            .iter()
            .cloned()
            .chain(iso)
            .chain(self.completion.iter().cloned())
            .collect()
    }

    /// The `2c + ℓ` vectors spanning `V`.
    pub fn span_vectors(&self) -> Vec<PauliVec> {
        self.pairs
            .iter()
            .flat_map(|p| [p.u.clone(), p.v.clone()])
            .chain(self.isotropic.iter().cloned())
            .collect()
    }
}

fn project(w: &PauliVec, u: &PauliVec, v: &PauliVec) -> PauliVec {
    let mut out = w.clone();
    if v.symp(w) {
        out.mul_assign(u);
    }
    if u.symp(w) {
        out.mul_assign(v);
    }
    out
}

fn unit(n: usize, k: usize) -> PauliVec {
    PauliVec::from_bits(&BitVec::from_ones(2 * n, &[k])).expect("even length")
}

/// Decomposes `span(basis)` into hyperbolic pairs and an isotropic part.
///
/// Panics if some vector does not act on `n` qubits.
pub fn decompose(n: usize, basis: &[PauliVec]) -> GroupDecomposition {
    let mut ech = RowEchelon::empty(2 * n);
    let mut w: Vec<PauliVec> = Vec::with_capacity(2 * n);
    for b in basis {
        assert_eq!(b.n(), n, "qubit count mismatch");
        if ech.insert(b.to_bits()) {
            w.push(b.clone());
        }
    }
    let mut m = w.len();
    for k in 0..2 * n {
        if w.len() == 2 * n {
            break;
        }
        let e = unit(n, k);
        if ech.insert(e.to_bits()) {
            w.push(e);
        }
    }
    debug_assert_eq!(w.len(), 2 * n);

    let mut out = GroupDecomposition {
        n,
        pairs: Vec::new(),
        isotropic: Vec::new(),
        partners: Vec::new(),
        completion: Vec::new(),
    };
    while !w.is_empty() {
        let u = w[0].clone();
        // The remaining vectors span a symplectic space, so a partner exists.
        let j = (1..w.len())
            .find(|&j| u.symp(&w[j]))
            .expect("working set is non-degenerate");
        let v = w[j].clone();
        if j < m {
            w.swap(1, j);
            w = w[2..].iter().map(|x| project(x, &u, &v)).collect();
            m -= 2;
            out.pairs.push(SymplecticPair::new(u, v));
        } else {
            let last = w.len() - 1;
            w.swap(j, last);
            w = w[1..last].iter().map(|x| project(x, &u, &v)).collect();
            if m >= 1 {
                m -= 1;
                out.isotropic.push(u);
                out.partners.push(v);
            } else {
                out.completion.push(SymplecticPair::new(u, v));
            }
        }
    }
    out
}

/// Number of hyperbolic pairs in `span(basis)`, i.e. half its symplectic
/// dimension.
pub fn symp_dim(n: usize, basis: &[PauliVec]) -> usize {
    decompose(n, basis).c()
}
