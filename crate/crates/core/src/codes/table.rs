//! Stabilizer table text format and code reports.
//!
//! A table lists one Pauli string per line, optionally preceded by a label
//! (any token that is not itself a Pauli string). Characters after a `|`
//! act on the receiver's qubits and are ignored on input. Sections
//! `[isotropic]`, `[entangled]`, `[gauge]` and `[logical]` assign lines to
//! groups; in the last three, consecutive lines form a pair. Without any
//! section header all lines are generators and are split by symplectic
//! Gram–Schmidt. Lines starting with `#` are comments.

use std::fmt::{self, Write as _};

use super::{hamming_check, singleton_check, CodeParams, QuantumCode, SymplecticPair};
use crate::error::{Error, Result};
use crate::pauli::PauliVec;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Isotropic,
    Entangled,
    Gauge,
    Logical,
}

fn is_pauli_token(t: &str) -> bool {
    t.chars().all(|c| matches!(c, 'I' | 'X' | 'Y' | 'Z' | '|'))
}

fn parse_operator(line_no: usize, line: &str) -> Result<PauliVec> {
    let mut tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() > 1 && !is_pauli_token(tokens[0]) {
        tokens.remove(0);
    }
    let joined: String = tokens.concat();
    let (alice, bob) = joined.split_once('|').unwrap_or((&joined, ""));
    if let Some(bad) = bob.chars().find(|c| !matches!(c, 'I' | 'X' | 'Y' | 'Z')) {
        return Err(Error::parse(
            line_no,
            format!("invalid receiver symbol {bad:?}"),
        ));
    }
    alice
        .parse()
        .map_err(|e: Error| Error::parse(line_no, e.to_string()))
}

fn into_pairs(line_no: usize, ops: Vec<PauliVec>, what: &str) -> Result<Vec<SymplecticPair>> {
    if !ops.len().is_multiple_of(2) {
        return Err(Error::parse(
            line_no,
            format!("{what} section needs an even number of lines"),
        ));
    }
    Ok(ops
        .chunks(2)
        .map(|c| SymplecticPair::new(c[0].clone(), c[1].clone()))
        .collect())
}

pub fn parse_table(text: &str) -> Result<QuantumCode> {
    let mut section = None;
    let mut any_section = false;
    let mut groups: [Vec<PauliVec>; 4] = Default::default();
    let mut unsectioned = Vec::new();
    let mut n = None;
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        last_line = line_no;
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            section = Some(match name.trim() {
                "isotropic" => Section::Isotropic,
                "entangled" => Section::Entangled,
                "gauge" => Section::Gauge,
                "logical" => Section::Logical,
                other => return Err(Error::parse(line_no, format!("unknown section {other:?}"))),
            });
            any_section = true;
            continue;
        }
        let op = parse_operator(line_no, line)?;
        match n {
            None => n = Some(op.n()),
            Some(n) if n != op.n() => {
                return Err(Error::parse(
                    line_no,
                    format!("expected {n} qubits, got {}", op.n()),
                ))
            }
            _ => {}
        }
        match section {
            None if any_section => unreachable!(),
            None => unsectioned.push(op),
            Some(s) => groups[s as usize].push(op),
        }
    }
    let n = n.ok_or(Error::Empty("stabilizer table"))?;
    if !any_section {
        return QuantumCode::from_generators(n, &unsectioned);
    }
    if !unsectioned.is_empty() {
        return Err(Error::parse(1, "operators before the first section header"));
    }
    let [iso, ent, gauge, logical] = groups;
    let entangled = into_pairs(last_line, ent, "entangled")?;
    let gauge = into_pairs(last_line, gauge, "gauge")?;
    let code = QuantumCode::new(n, iso, entangled, gauge)?;
    if logical.is_empty() {
        Ok(code)
    } else {
        code.with_logicals(into_pairs(last_line, logical, "logical")?)
    }
}

/// Writes the sectioned table. When the code uses ebits, a receiver column
/// is appended after `|`: pair `i` of `S_E` carries `Z` and `X` on receiver
/// qubit `i`.
pub fn write_table(code: &QuantumCode) -> String {
    let c = code.c();
    let bob = |pair: Option<(usize, char)>| -> String {
        if c == 0 {
            return String::new();
        }
        let mut s: Vec<char> = vec!['I'; c];
        if let Some((i, p)) = pair {
            s[i] = p;
        }
        format!("|{}", s.into_iter().collect::<String>())
    };
    let mut out = String::new();
    let _ = writeln!(out, "# {}", code.params());
    out.push_str("[isotropic]\n");
    for (i, g) in code.isotropic().iter().enumerate() {
        let _ = writeln!(out, "S{} {g}{}", i + 1, bob(None));
    }
    if c > 0 {
        out.push_str("[entangled]\n");
        for (i, p) in code.entangled().iter().enumerate() {
            let _ = writeln!(out, "E{}z {}{}", i + 1, p.u, bob(Some((i, 'Z'))));
            let _ = writeln!(out, "E{}x {}{}", i + 1, p.v, bob(Some((i, 'X'))));
        }
    }
    if code.r() > 0 {
        out.push_str("[gauge]\n");
        for (i, p) in code.gauge().iter().enumerate() {
            let _ = writeln!(out, "G{}z {}{}", i + 1, p.u, bob(None));
            let _ = writeln!(out, "G{}x {}{}", i + 1, p.v, bob(None));
        }
    }
    if !code.logicals().is_empty() {
        out.push_str("[logical]\n");
        for (i, p) in code.logicals().iter().enumerate() {
            let _ = writeln!(out, "Zbar{} {}{}", i + 1, p.u, bob(None));
            let _ = writeln!(out, "Xbar{} {}{}", i + 1, p.v, bob(None));
        }
    }
    out
}

/// Computed properties of a code, with its claimed parameters if any.
#[derive(Clone, Debug)]
pub struct CodeReport {
    pub name: Option<String>,
    /// Computed parameters; `d` is the verified distance when known.
    pub params: CodeParams,
    pub claimed: Option<CodeParams>,
    pub dual_containing: bool,
    pub singleton_ok: Option<bool>,
    pub hamming_ok: Option<bool>,
    pub verified_d: Option<usize>,
    pub table: String,
}

impl CodeReport {
    /// Bounds use `verified_d` if given, else the claimed distance.
    pub fn new(code: &QuantumCode, verified_d: Option<usize>) -> Self {
        CodeReport {
            name: code.name().map(str::to_string),
            params: code.params().with_d(verified_d),
            claimed: code.claimed(),
            dual_containing: code.is_dual_containing(),
            singleton_ok: singleton_check(code, verified_d).ok(),
            hamming_ok: hamming_check(code, verified_d).ok(),
            verified_d,
            table: write_table(code),
        }
    }
}

fn yes_no(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown distance",
    }
}

impl fmt::Display for CodeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            writeln!(f, "code: {name}")?;
        }
        writeln!(f, "computed: {}", self.params)?;
        if let Some(claimed) = &self.claimed {
            writeln!(f, "claimed: {claimed}")?;
        }
        writeln!(
            f,
            "dual-containing: {}",
            if self.dual_containing { "yes" } else { "no" }
        )?;
        writeln!(f, "singleton bound holds: {}", yes_no(self.singleton_ok))?;
        writeln!(f, "hamming bound holds: {}", yes_no(self.hamming_ok))?;
        write!(f, "{}", self.table)
    }
}
