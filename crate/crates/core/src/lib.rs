//! Construction, analysis and simulation of stabilizer, entanglement-assisted
//! and operator quantum error-correcting codes built from classical binary
//! and quaternary codes.
//!
//! Pauli operators are phase-free vectors in `(Z₂)²ⁿ` ([`pauli`]). The
//! symplectic Gram–Schmidt procedure ([`sgs`]) splits a generator set into
//! hyperbolic pairs and isotropic vectors, which determines the ebit count of
//! a code ([`codes`]). [`qc_ldpc`] builds quasi-cyclic LDPC parity checks,
//! [`spa`] decodes them with belief propagation and [`sim`] measures block
//! error rates on the depolarizing channel.

pub mod codes;
pub mod error;
pub mod f2;
pub mod gf4;
pub mod pauli;
pub mod qc_ldpc;
pub mod sgs;
pub mod sim;
pub mod spa;

pub use codes::{CodeParams, QuantumCode, SymplecticPair};
pub use error::{Error, Result};
pub use f2::{BitMatrix, BitVec};
pub use gf4::{F4Matrix, F4};
pub use pauli::{Pauli, PauliVec};
pub use qc_ldpc::{CircPoly, ExponentEntry, ExponentMatrix};
pub use sgs::GroupDecomposition;
