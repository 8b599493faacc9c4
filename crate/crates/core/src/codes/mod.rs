//! Quantum codes described by their generator groups.
//!
//! A code on `n` channel qubits is given by three generator sets: the
//! isotropic subgroup `S_I` (mutually commuting checks), the entanglement
//! subgroup `S_E` (anticommuting pairs, one ebit each) and the gauge subgroup
//! `S_G` (anticommuting pairs whose action is ignored). With `s = |S_I|`,
//! `c = |S_E|` and `r = |S_G|` pairs, the code encodes `k = n − s − c − r`
//! logical qubits. Only the sender's halves of `S_E` are stored; the
//! receiver's halves are implied (one ebit per pair).

mod bounds;
mod builtins;
mod distance;
mod table;

use std::fmt;

pub use bounds::{hamming_check, singleton_check};
pub use builtins::{bch63_parity_check, builtin, q15_parity_check, BUILTIN_NAMES};
pub use distance::{
    enumeration_cost, find_distance, verify_distance, verify_distance_with_budget, DistanceCheck,
    DistanceMode, DistanceSearch, DEFAULT_BUDGET,
};
pub use table::{parse_table, write_table, CodeReport};

pub use crate::sgs::SymplecticPair;

use crate::error::{Error, Result};
use crate::f2::{BitMatrix, RowEchelon};
use crate::gf4::F4Matrix;
use crate::pauli::{self, PauliVec};
use crate::sgs;

/// `[[n, k, d; r, c]]` parameters. `d` is optional because it is often only
/// claimed or bounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub r: usize,
    pub c: usize,
}

impl CodeParams {
    pub fn with_d(self, d: Option<usize>) -> Self {
        CodeParams { d, ..self }
    }
}

impl fmt::Display for CodeParams {
    /// `[[n,k,d;c]]` for codes without gauge qubits, `[[n,k,d;c=C,r=R]]`
    /// otherwise; `,d` is omitted when unknown.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}", self.n, self.k)?;
        if let Some(d) = self.d {
            write!(f, ",{d}")?;
        }
        if self.r == 0 {
            write!(f, ";{}]]", self.c)
        } else {
            write!(f, ";c={},r={}]]", self.c, self.r)
        }
    }
}

/// Classical parity checks of a CSS code: `hz` rows are Z-type checks (they
/// detect X errors), `hx` rows are X-type checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CssMatrices {
    pub hz: BitMatrix,
    pub hx: BitMatrix,
}

#[derive(Clone, Debug)]
pub struct QuantumCode {
    name: Option<String>,
    n: usize,
    isotropic: Vec<PauliVec>,
    entangled: Vec<SymplecticPair>,
    gauge: Vec<SymplecticPair>,
    /// `(Z̄, X̄)` pairs.
    logicals: Vec<SymplecticPair>,
    claimed: Option<CodeParams>,
    css: Option<CssMatrices>,
}

fn pair_members(pairs: &[SymplecticPair]) -> impl Iterator<Item = &PauliVec> {
    pairs.iter().flat_map(|p| [&p.u, &p.v])
}

impl QuantumCode {
    /// Checks that every operator acts on `n` qubits, that `S_I` commutes
    /// with everything, that each pair anticommutes internally and commutes
    /// with all other generators, and that the generators are independent.
    /// Logical operators are derived from a symplectic completion.
    pub fn new(
        n: usize,
        isotropic: Vec<PauliVec>,
        entangled: Vec<SymplecticPair>,
        gauge: Vec<SymplecticPair>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidCode(
                "code must act on at least one qubit".into(),
            ));
        }
        let all: Vec<&PauliVec> = isotropic
            .iter()
            .chain(pair_members(&entangled))
            .chain(pair_members(&gauge))
            .collect();
        if let Some(bad) = all.iter().find(|g| g.n() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.n(),
            });
        }
        for (i, a) in isotropic.iter().enumerate() {
            if let Some(b) = all.iter().find(|b| a.symp(b)) {
                return Err(Error::InvalidCode(format!(
                    "isotropic generator {} ({a}) anticommutes with {b}",
                    i + 1
                )));
            }
        }
        let pairs: Vec<&SymplecticPair> = entangled.iter().chain(&gauge).collect();
        for (i, p) in pairs.iter().enumerate() {
            if !p.u.symp(&p.v) {
                return Err(Error::InvalidCode(format!(
                    "pair {} ({}, {}) commutes",
                    i + 1,
                    p.u,
                    p.v
                )));
            }
            for q in pairs.iter().skip(i + 1) {
                if [&q.u, &q.v].iter().any(|w| p.u.symp(w) || p.v.symp(w)) {
                    return Err(Error::InvalidCode(format!(
                        "pairs ({}, {}) and ({}, {}) do not commute",
                        p.u, p.v, q.u, q.v
                    )));
                }
            }
        }
        let owned: Vec<PauliVec> = all.iter().map(|g| (*g).clone()).collect();
        if pauli::to_matrix(n, &owned).rank() != owned.len() {
            return Err(Error::InvalidCode(
                "generators are linearly dependent".into(),
            ));
        }
        let logicals = sgs::decompose(n, &owned).completion().to_vec();
        Ok(QuantumCode {
            name: None,
            n,
            isotropic,
            entangled,
            gauge,
            logicals,
            claimed: None,
            css: None,
        })
    }

    /// Splits `span(generators)` into isotropic and entangled parts with
    /// symplectic Gram–Schmidt. Dependent generators are dropped.
    pub fn from_generators(n: usize, generators: &[PauliVec]) -> Result<Self> {
        let d = sgs::decompose(n, generators);
        QuantumCode::new(n, d.isotropic().to_vec(), d.pairs().to_vec(), Vec::new())
    }

    /// Replaces the derived logical operators by `logicals`, which must
    /// commute with every generator and form `k` mutually commuting
    /// anticommuting pairs.
    pub fn with_logicals(mut self, logicals: Vec<SymplecticPair>) -> Result<Self> {
        if logicals.len() != self.k() {
            return Err(Error::InvalidCode(format!(
                "expected {} logical pairs, got {}",
                self.k(),
                logicals.len()
            )));
        }
        for (i, l) in logicals.iter().enumerate() {
            for op in [&l.u, &l.v] {
                if op.n() != self.n {
                    return Err(Error::DimensionMismatch {
                        expected: self.n,
                        found: op.n(),
                    });
                }
                if let Some(g) = self.all_generators().find(|g| op.symp(g)) {
                    return Err(Error::InvalidCode(format!(
                        "logical {op} anticommutes with generator {g}"
                    )));
                }
            }
            if !l.u.symp(&l.v) {
                return Err(Error::InvalidCode(format!(
                    "logical pair {} commutes",
                    i + 1
                )));
            }
            for m in logicals.iter().skip(i + 1) {
                if [&m.u, &m.v].iter().any(|w| l.u.symp(w) || l.v.symp(w)) {
                    return Err(Error::InvalidCode("logical pairs do not commute".into()));
                }
            }
        }
        self.logicals = logicals;
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_claimed(mut self, claimed: CodeParams) -> Self {
        self.claimed = Some(claimed);
        self
    }

    pub fn with_css(mut self, css: CssMatrices) -> Result<Self> {
        if css.hz.num_cols() != self.n || css.hx.num_cols() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: css.hz.num_cols().max(css.hx.num_cols()),
            });
        }
        self.css = Some(css);
        Ok(self)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of isotropic generators `s`.
    pub fn s(&self) -> usize {
        self.isotropic.len()
    }

    /// Ebits `c`.
    pub fn c(&self) -> usize {
        self.entangled.len()
    }

    /// Gauge qubits `r`.
    pub fn r(&self) -> usize {
        self.gauge.len()
    }

    pub fn k(&self) -> usize {
        self.n - self.s() - self.c() - self.r()
    }

    pub fn params(&self) -> CodeParams {
        CodeParams {
            n: self.n,
            k: self.k(),
            d: None,
            r: self.r(),
            c: self.c(),
        }
    }

    pub fn claimed(&self) -> Option<CodeParams> {
        self.claimed
    }

    pub fn isotropic(&self) -> &[PauliVec] {
        &self.isotropic
    }

    pub fn entangled(&self) -> &[SymplecticPair] {
        &self.entangled
    }

    pub fn gauge(&self) -> &[SymplecticPair] {
        &self.gauge
    }

    pub fn logicals(&self) -> &[SymplecticPair] {
        &self.logicals
    }

    /// Operators measured by the sender: `S_I` and both members of each
    /// `S_E` pair.
    pub fn checks(&self) -> Vec<PauliVec> {
        self.isotropic
            .iter()
            .chain(pair_members(&self.entangled))
            .cloned()
            .collect()
    }

    fn all_generators(&self) -> impl Iterator<Item = &PauliVec> {
        self.isotropic
            .iter()
            .chain(pair_members(&self.entangled))
            .chain(pair_members(&self.gauge))
    }

    /// Echelon form of `span(S_I ∪ S_G)`: errors in it act trivially.
    pub fn trivial_span(&self) -> RowEchelon {
        RowEchelon::new(
            2 * self.n,
            self.isotropic
                .iter()
                .chain(pair_members(&self.gauge))
                .map(PauliVec::to_bits),
        )
    }

    /// Whether all generators commute, i.e. no ebits are needed.
    pub fn is_dual_containing(&self) -> bool {
        self.c() == 0
    }

    /// Classical CSS matrices: those supplied at construction, otherwise the
    /// pure-Z and pure-X checks when every check is of one type.
    pub fn css_form(&self) -> Result<CssMatrices> {
        if let Some(css) = &self.css {
            return Ok(css.clone());
        }
        let mut hz = BitMatrix::zeros(0, self.n);
        let mut hx = BitMatrix::zeros(0, self.n);
        for g in self.checks() {
            if g.x().is_zero() {
                hz.push_row(g.z().clone())?;
            } else if g.z().is_zero() {
                hx.push_row(g.x().clone())?;
            } else {
                return Err(Error::NotCss);
            }
        }
        Ok(CssMatrices { hz, hx })
    }

    /// Moves pair `index` of `S_E` into `S_G`: one ebit becomes one gauge
    /// qubit, `k` is unchanged.
    pub fn gauge_move(&self, index: usize) -> Result<QuantumCode> {
        if index >= self.entangled.len() {
            return Err(Error::IndexOutOfRange {
                index,
                len: self.entangled.len(),
            });
        }
        let mut out = self.clone();
        let pair = out.entangled.remove(index);
        out.gauge.push(pair);
        out.claimed = None;
        Ok(out)
    }

    /// Keeps the first member of every gauge pair as a stabilizer and drops
    /// its partner.
    pub fn ungauge(&self) -> Result<QuantumCode> {
        if self.gauge.is_empty() {
            return Err(Error::InvalidCode("code has no gauge qubits".into()));
        }
        let mut isotropic = self.isotropic.clone();
        isotropic.extend(self.gauge.iter().map(|p| p.u.clone()));
        let mut out = QuantumCode::new(self.n, isotropic, self.entangled.clone(), Vec::new())?;
        out.name = self.name.clone();
        out.css = self.css.clone();
        Ok(out)
    }

    /// Appends a qubit and the checks `X^{⊗(n+1)}` and `Z^{⊗(n+1)}`. The net
    /// yield drops by one and the distance does not decrease.
    pub fn extend(&self) -> Result<QuantumCode> {
        if self.r() > 0 {
            return Err(Error::InvalidCode(
                "extension needs a code without gauge qubits".into(),
            ));
        }
        let n = self.n + 1;
        let all_x: PauliVec = "X".repeat(n).parse()?;
        let all_z: PauliVec = "Z".repeat(n).parse()?;
        let mut gens = vec![all_x, all_z];
        gens.extend(
            self.checks()
                .iter()
                .map(|g| g.tensor(&PauliVec::identity(1))),
        );
        QuantumCode::from_generators(n, &gens)
    }

    /// Deletes the first qubit from the code space (the symplectic
    /// complement of the checks) and re-derives the checks. For
    /// non-degenerate codes the distance drops by at most one.
    pub fn puncture(&self) -> Result<QuantumCode> {
        if self.n < 2 {
            return Err(Error::InvalidParameter(
                "cannot puncture a one-qubit code".into(),
            ));
        }
        if self.r() > 0 {
            return Err(Error::InvalidCode(
                "puncturing needs a code without gauge qubits".into(),
            ));
        }
        let space = pauli::symplectic_complement(self.n, &self.checks());
        let punctured: Vec<PauliVec> = space.iter().map(|w| w.restrict(1, self.n - 1)).collect();
        let checks = pauli::symplectic_complement(self.n - 1, &punctured);
        QuantumCode::from_generators(self.n - 1, &checks)
    }
}

/// `[h 0; 0 h]` in `(z | x)` layout.
pub fn css_sp_matrix(h: &BitMatrix) -> BitMatrix {
    let n = h.num_cols();
    let zero = BitMatrix::zeros(h.num_rows(), n);
    let top = h.hstack(&zero).expect("same row count");
    let bottom = zero.hstack(h).expect("same row count");
    top.vstack(&bottom).expect("same column count")
}

/// Whether every pair of rows of a `(z | x)` matrix has symplectic product 0.
pub fn is_dual_containing(hsp: &BitMatrix) -> Result<bool> {
    let ops = pauli::from_matrix(hsp)?;
    Ok(ops
        .iter()
        .enumerate()
        .all(|(i, a)| ops[i + 1..].iter().all(|b| !a.symp(b))))
}

/// The CSS code of `h` assisted by `c = rank(h hᵀ)` ebits:
/// `[[n, 2k − n + c; c]]` for an `[n, k]` code.
pub fn build_eaqecc_binary(h: &BitMatrix) -> Result<QuantumCode> {
    let n = h.num_cols();
    if n == 0 || h.num_rows() == 0 {
        return Err(Error::Empty("parity check matrix"));
    }
    let gens = pauli::from_matrix(&css_sp_matrix(h))?;
    QuantumCode::from_generators(n, &gens)?.with_css(CssMatrices {
        hz: h.clone(),
        hx: h.clone(),
    })
}

/// The CSS code with Z-type checks `hz` and X-type checks `hx`, with ebits
/// for any anticommuting pairs.
pub fn build_css(hz: &BitMatrix, hx: &BitMatrix) -> Result<QuantumCode> {
    let n = hz.num_cols();
    if hx.num_cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: hx.num_cols(),
        });
    }
    let mut gens: Vec<PauliVec> = hz.rows().iter().cloned().map(PauliVec::z_type).collect();
    gens.extend(hx.rows().iter().cloned().map(PauliVec::x_type));
    QuantumCode::from_generators(n, &gens)?.with_css(CssMatrices {
        hz: hz.clone(),
        hx: hx.clone(),
    })
}

/// The code of `γ([ωH₄; ω̄H₄])`: `[[n, 2k − n + c; c]]` for an `[n, k]₄`
/// code.
pub fn build_eaqecc_gf4(h4: &F4Matrix) -> Result<QuantumCode> {
    QuantumCode::from_generators(h4.num_cols(), &h4.symplectic_rows())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2::BitVec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn hamming() -> BitMatrix {
        BitMatrix::from_u8_rows(&[
            &[0, 0, 0, 1, 1, 1, 1],
            &[0, 1, 1, 0, 0, 1, 1],
            &[1, 0, 1, 0, 1, 0, 1],
        ])
    }

    fn p(s: &str) -> PauliVec {
        s.parse().unwrap()
    }

    #[test]
    fn css_matrix_layout() {
        let one = BitMatrix::from_u8_rows(&[&[1]]);
        assert_eq!(
            css_sp_matrix(&one),
            BitMatrix::from_u8_rows(&[&[1, 0], &[0, 1]])
        );
        let hsp = css_sp_matrix(&hamming());
        assert_eq!((hsp.num_rows(), hsp.num_cols()), (6, 14));
        assert!(is_dual_containing(&hsp).unwrap());
        let pair = BitMatrix::from_u8_rows(&[&[1, 0], &[0, 1]]);
        assert!(!is_dual_containing(&pair).unwrap());
    }

    #[test]
    fn steane_from_hamming() {
        let code = build_eaqecc_binary(&hamming()).unwrap();
        assert_eq!(code.params().to_string(), "[[7,1;0]]");
        assert_eq!(code.logicals().len(), 1);
        assert!(code.is_dual_containing());
    }

    #[test]
    fn ebits_equal_gram_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let (m, n) = (rng.random_range(1..8), rng.random_range(2..14));
            let rows = (0..m)
                .map(|_| BitVec::from_bools((0..n).map(|_| rng.random::<bool>())))
                .collect();
            let h = BitMatrix::from_rows(n, rows).unwrap();
            let code = build_eaqecc_binary(&h).unwrap();
            assert_eq!(code.c(), h.gram().rank());
            let rank = h.rank();
            assert_eq!(code.k() + 2 * rank, n + code.c());
        }
    }

    #[test]
    fn checked_constructor_rejects_bad_groups() {
        let anti = vec![p("XI"), p("ZI")];
        assert!(matches!(
            QuantumCode::new(2, anti, vec![], vec![]),
            Err(Error::InvalidCode(_))
        ));
        let commuting_pair = SymplecticPair::new(p("XI"), p("XI"));
        assert!(QuantumCode::new(2, vec![], vec![commuting_pair], vec![]).is_err());
        let dependent = vec![p("ZZ"), p("ZZ")];
        assert!(QuantumCode::new(2, dependent, vec![], vec![]).is_err());
        assert!(QuantumCode::new(3, vec![p("ZZ")], vec![], vec![]).is_err());
    }

    #[test]
    fn gauge_bookkeeping() {
        let h = BitMatrix::from_u8_rows(&[&[1, 1, 0, 1, 0], &[0, 1, 1, 1, 1], &[1, 0, 1, 0, 0]]);
        let code = build_eaqecc_binary(&h).unwrap();
        let (n, k, cr) = (code.n(), code.k(), code.c() + code.r());
        let mut cur = code.clone();
        while cur.c() > 0 {
            cur = cur.gauge_move(0).unwrap();
            assert_eq!((cur.n(), cur.k(), cur.c() + cur.r()), (n, k, cr));
        }
        assert!(matches!(
            cur.gauge_move(0),
            Err(Error::IndexOutOfRange { .. })
        ));
        if cur.r() > 0 {
            let un = cur.ungauge().unwrap();
            assert_eq!((un.r(), un.k(), un.c()), (0, k, 0));
        }
        assert!(code.ungauge().is_err());
    }

    #[test]
    fn extend_and_puncture_steane() {
        let steane = build_eaqecc_binary(&hamming()).unwrap();
        let ext = steane.extend().unwrap();
        assert_eq!(ext.params().to_string(), "[[8,0;0]]");
        let back = ext.puncture().unwrap();
        assert_eq!(back.params().to_string(), "[[7,1;0]]");
        let trivial = QuantumCode::new(1, vec![p("Z")], vec![], vec![]).unwrap();
        let t2 = trivial.extend().unwrap();
        assert_eq!(t2.n(), 2);
        assert_eq!(t2.s() + 2 * t2.c(), 3);
        assert!(trivial.puncture().is_err());
    }

    #[test]
    fn params_display() {
        let base = CodeParams {
            n: 15,
            k: 9,
            d: Some(3),
            r: 1,
            c: 3,
        };
        assert_eq!(base.to_string(), "[[15,9,3;c=3,r=1]]");
        assert_eq!(
            CodeParams {
                r: 0,
                c: 4,
                d: None,
                ..base
            }
            .to_string(),
            "[[15,9;4]]"
        );
    }

    #[test]
    fn css_fallback() {
        let steane = build_eaqecc_binary(&hamming()).unwrap();
        let plain = QuantumCode::new(
            7,
            steane.isotropic().to_vec(),
            steane.entangled().to_vec(),
            vec![],
        )
        .unwrap();
        let css = plain.css_form().unwrap();
        assert_eq!(css.hz.rank(), 3);
        assert_eq!(css.hx.rank(), 3);
        let mixed = QuantumCode::new(2, vec![p("XZ")], vec![], vec![]).unwrap();
        assert_eq!(mixed.css_form(), Err(Error::NotCss));
    }
}
