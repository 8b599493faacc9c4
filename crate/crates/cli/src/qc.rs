//! The `qcldpc` subcommand.

use std::fmt::Write as _;
use std::path::Path;

use eaqecc::codes::build_eaqecc_binary;
use eaqecc::f2::{write_alist, write_dense};
use eaqecc::qc_ldpc::{
    example_code, girth_exact, make_ex1, make_ex2, make_ex_hi, make_ex_mackay, DEFAULT_MACKAY_SEED,
};
use eaqecc::{BitMatrix, ExponentMatrix, QuantumCode};

use crate::{parsed, read, usage, CliError, CliResult, Emit, MatrixFormat};

/// Parity checks of a construction.
enum Source {
    /// One exponent matrix used for both halves.
    Single(ExponentMatrix),
    /// A plain binary matrix used for both halves.
    Plain(BitMatrix),
    /// Exponent matrices of the Z and X checks.
    Pair(ExponentMatrix, ExponentMatrix),
}

fn from_example(name: &str) -> CliResult<Source> {
    Ok(match name {
        "ex1" => Source::Single(make_ex1()),
        "ex2" => Source::Single(make_ex2()),
        "mackay" => Source::Plain(make_ex_mackay(128, 48, 8, DEFAULT_MACKAY_SEED).map_err(usage)?),
        "hi" => {
            let (hc, hd) = make_ex_hi(3, 8, 15, 2, 3).map_err(usage)?;
            Source::Pair(hc, hd)
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown example {other:?}; expected one of ex1, ex2, mackay, hi"
            )))
        }
    })
}

fn from_file(path: &Path, r: Option<usize>) -> CliResult<Source> {
    let em = parsed(path, ExponentMatrix::parse(&read(path)?))?;
    let Some(r) = r else {
        return Ok(Source::Single(em));
    };
    let rows = (0..em.num_rows()).map(|i| em.row(i).to_vec()).collect();
    Ok(Source::Single(ExponentMatrix::new(r, rows).map_err(usage)?))
}

fn write_matrix(h: &BitMatrix, format: MatrixFormat) -> String {
    match format {
        MatrixFormat::Dense => write_dense(h),
        MatrixFormat::Alist => write_alist(h),
    }
}

fn girth(h: &BitMatrix) -> String {
    girth_exact(h).map_or("none".to_string(), |g| g.to_string())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn exponent_section(out: &mut String, label: &str, em: &ExponentMatrix) {
    let h = em.expand();
    let _ = writeln!(out, "{label} exponent matrix:");
    for line in em.to_string().lines() {
        let _ = writeln!(out, "  {line}");
    }
    let _ = writeln!(out, "{label} size: {} x {}", h.num_rows(), h.num_cols());
    let _ = writeln!(out, "{label} girth: {}", girth(&h));
    let _ = writeln!(
        out,
        "{label} girth >= 6 by row differences: {}",
        yes_no(em.girth_ge_6())
    );
    let _ = writeln!(
        out,
        "{label} dual-containing by row differences: {}",
        yes_no(em.dual_containing_qc())
    );
    let _ = writeln!(out, "{label} row differences:");
    for i in 0..em.num_rows() {
        for j in i..em.num_rows() {
            let d = em.row_difference(i, j);
            let _ = writeln!(
                out,
                "  d({},{}) = {d}  even: {}  free: {}",
                i + 1,
                j + 1,
                yes_no(d.is_multiplicity_even()),
                yes_no(d.is_multiplicity_free())
            );
        }
    }
    let rank = em.rank_via_gcd();
    let _ = writeln!(
        out,
        "{label} rank: {} by gcd (deg gcd {}), {} by elimination",
        rank.rank,
        rank.gcd_degree,
        h.rank()
    );
}

fn params_lines(out: &mut String, code: &QuantumCode) {
    let _ = writeln!(out, "computed: {}", code.params());
    if let Some(claimed) = code.claimed() {
        let _ = writeln!(out, "claimed: {claimed}");
    }
}

fn report(name: Option<&str>, source: &Source) -> CliResult<String> {
    let mut out = String::new();
    if let Some(name) = name {
        let _ = writeln!(out, "example: {name}");
    }
    let code = match name {
        Some(name) => example_code(name).map_err(usage)?,
        None => match source {
            Source::Single(em) => build_eaqecc_binary(&em.expand()).map_err(usage)?,
            _ => unreachable!("files hold a single exponent matrix"),
        },
    };
    match source {
        Source::Single(em) => {
            exponent_section(&mut out, "H", em);
            let gram = em.gram_rank_via_gcd();
            let h = em.expand();
            let _ = writeln!(
                out,
                "rank(H H^T): {} by gcd (deg gcd {}), {} by elimination",
                gram.rank,
                gram.gcd_degree,
                h.gram().rank()
            );
            let _ = writeln!(out, "c: {}", code.c());
        }
        Source::Plain(h) => {
            let _ = writeln!(out, "H size: {} x {}", h.num_rows(), h.num_cols());
            let _ = writeln!(out, "H girth: {}", girth(h));
            let _ = writeln!(out, "H rank: {}", h.rank());
            let _ = writeln!(out, "rank(H H^T): {}", h.gram().rank());
            let _ = writeln!(out, "c: {}", code.c());
        }
        Source::Pair(hc, hd) => {
            exponent_section(&mut out, "H_C", hc);
            exponent_section(&mut out, "H_D", hd);
            let cross = hc
                .expand()
                .mat_mul(&hd.expand().transpose())
                .map_err(usage)?;
            let _ = writeln!(out, "rank(H_C H_D^T): {}", cross.rank());
            let _ = writeln!(out, "c: {}", code.c());
        }
    }
    params_lines(&mut out, &code);
    Ok(out)
}

pub(crate) fn run(
    example: Option<&str>,
    exponent: Option<&Path>,
    r: Option<usize>,
    emit: Emit,
    format: MatrixFormat,
) -> CliResult<String> {
    let source = match (example, exponent) {
        (Some(name), None) => from_example(name)?,
        (None, Some(path)) => from_file(path, r)?,
        _ => {
            return Err(CliError::Usage(
                "give exactly one of --example and --exponent".into(),
            ))
        }
    };
    match emit {
        Emit::Report => report(example, &source),
        Emit::Matrix => Ok(match &source {
            Source::Single(em) => write_matrix(&em.expand(), format),
            Source::Plain(h) => write_matrix(h, format),
            Source::Pair(hc, hd) => format!(
                "# H_C\n{}# H_D\n{}",
                write_matrix(&hc.expand(), format),
                write_matrix(&hd.expand(), format)
            ),
        }),
    }
}
