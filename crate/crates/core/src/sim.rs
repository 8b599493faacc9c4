//! Monte Carlo block error rates on the depolarizing channel.
//!
//! Each trial samples a Pauli error, measures the CSS syndromes, and decodes
//! the X part with the Z-type checks and the Z part with the X-type checks,
//! each by the sum-product decoder with flip prior `2p/3` (X or Y flips the
//! X part; Z or Y flips the Z part). Correlations between the halves are
//! ignored.
//!
//! Trial `t` at grid index `i` draws from
//! `ChaCha8Rng::seed_from_u64(seed)` with stream `i` and word position
//! `t · 2²⁰`, so results do not depend on how trials are scheduled.

use std::fmt::Write as _;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::codes::{CssMatrices, QuantumCode};
use crate::error::{Error, Result};
use crate::f2::{BitVec, RowEchelon};
use crate::pauli::{Pauli, PauliVec};
use crate::spa::{SpaWorkspace, DEFAULT_MAX_ITER};

/// `z` for a two-sided 95% interval.
pub const WILSON_Z: f64 = 1.959963984540054;

/// Words of key stream reserved for each trial. A trial draws at most
/// four words per qubit, so streams stay disjoint below 2¹⁸ qubits.
const TRIAL_STRIDE_LOG2: u32 = 20;

pub const CSV_HEADER: &str = "p,trials,block_errors,wer,ci_lo,ci_hi";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuccessMode {
    /// The residual error must be the identity.
    Strict,
    /// The residual error must lie in `span(S_I ∪ S_G)`.
    Degenerate,
}

#[derive(Clone, Debug)]
pub struct SimConfig {
    pub code: QuantumCode,
    pub p_grid: Vec<f64>,
    pub trials: u64,
    pub seed: u64,
    pub max_iter: usize,
    pub mode: SuccessMode,
}

impl SimConfig {
    /// Degenerate scoring with the default iteration cap.
    pub fn new(code: QuantumCode, p_grid: Vec<f64>, trials: u64, seed: u64) -> Self {
        SimConfig {
            code,
            p_grid,
            trials,
            seed,
            max_iter: DEFAULT_MAX_ITER,
            mode: SuccessMode::Degenerate,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimPoint {
    pub p: f64,
    pub trials: u64,
    pub block_errors: u64,
    pub wer: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SimResult {
    pub points: Vec<SimPoint>,
}

impl SimResult {
    pub fn to_csv(&self) -> String {
        let mut out = format!("{CSV_HEADER}\n");
        for pt in &self.points {
            let _ = writeln!(
                out,
                "{},{},{},{:.6e},{:.6e},{:.6e}",
                pt.p, pt.trials, pt.block_errors, pt.wer, pt.ci_lo, pt.ci_hi
            );
        }
        out
    }
}

/// Wilson score interval for `k` successes in `n` trials.
pub fn wilson_interval(k: u64, n: u64) -> (f64, f64) {
    if n == 0 {
        return (0.0, 1.0);
    }
    let (k, n) = (k as f64, n as f64);
    let z2 = WILSON_Z * WILSON_Z;
    let phat = k / n;
    let denom = 1.0 + z2 / n;
    let centre = phat + z2 / (2.0 * n);
    let spread = WILSON_Z * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt();
    // The bounds are exactly 0 and 1 at the extremes; avoid rounding residue.
    let lo = if k == 0.0 {
        0.0
    } else {
        (centre - spread) / denom
    };
    let hi = if k == n {
        1.0
    } else {
        (centre + spread) / denom
    };
    (lo.max(0.0), hi.min(1.0))
}

const NON_IDENTITY: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

/// Independent errors per qubit: `I` with probability `1 − p`, each of
/// `X`, `Y`, `Z` with probability `p/3`.
pub fn sample_depolarizing<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> PauliVec {
    let mut e = PauliVec::identity(n);
    for q in 0..n {
        if rng.random::<f64>() < p {
            e.set(q, NON_IDENTITY[rng.random_range(0..3)]);
        }
    }
    e
}

/// Symplectic products of `error` with the checks `S_I` followed by `S_E`
/// (in [`QuantumCode::checks`] order). The receiver's qubits are noiseless,
/// so only the sender's halves contribute.
pub fn syndrome(code: &QuantumCode, error: &PauliVec) -> Result<BitVec> {
    if error.n() != code.n() {
        return Err(Error::DimensionMismatch {
            expected: code.n(),
            found: error.n(),
        });
    }
    Ok(BitVec::from_bools(
        code.checks().iter().map(|g| g.symp(error)),
    ))
}

/// `(H_z · e_x, H_x · e_z)`.
pub fn css_syndrome(css: &CssMatrices, error: &PauliVec) -> Result<(BitVec, BitVec)> {
    Ok((css.hz.mul_vec(error.x())?, css.hx.mul_vec(error.z())?))
}

/// Decoding context shared by all trials of a configuration.
struct Trial<'a> {
    n: usize,
    css: CssMatrices,
    trivial: Option<RowEchelon>,
    config: &'a SimConfig,
}

impl Trial<'_> {
    fn new(config: &SimConfig) -> Result<Trial<'_>> {
        let css = config.code.css_form()?;
        let trivial = (config.mode == SuccessMode::Degenerate).then(|| config.code.trivial_span());
        Ok(Trial {
            n: config.code.n(),
            css,
            trivial,
            config,
        })
    }

    fn workspaces(&self) -> (SpaWorkspace, SpaWorkspace) {
        (
            SpaWorkspace::new(&self.css.hz),
            SpaWorkspace::new(&self.css.hx),
        )
    }

    /// Whether trial `t` at grid index `index` ends in a block error.
    fn fails(
        &self,
        ws: &mut (SpaWorkspace, SpaWorkspace),
        index: usize,
        p: f64,
        t: u64,
    ) -> Result<bool> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed);
        rng.set_stream(index as u64);
        rng.set_word_pos(u128::from(t) << TRIAL_STRIDE_LOG2);
        let error = sample_depolarizing(self.n, p, &mut rng);
        if error.is_identity() {
            return Ok(false);
        }
        let (sz, sx) = css_syndrome(&self.css, &error)?;
        let f = 2.0 * p / 3.0;
        let x_hat = ws.0.decode(&sz, f, self.config.max_iter)?;
        let z_hat = ws.1.decode(&sx, f, self.config.max_iter)?;
        if !x_hat.converged || !z_hat.converged {
            return Ok(true);
        }
        let residual = error.mul(&PauliVec::from_zx(z_hat.estimate, x_hat.estimate)?);
        Ok(match &self.trivial {
            None => !residual.is_identity(),
            Some(span) => !span.contains(&residual.to_bits()),
        })
    }
}

fn validate(config: &SimConfig) -> Result<()> {
    if config.trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    if config.max_iter == 0 {
        return Err(Error::InvalidParameter(
            "max_iter must be at least 1".into(),
        ));
    }
    if let Some(p) = config.p_grid.iter().find(|p| !(0.0..=1.0).contains(*p)) {
        return Err(Error::InvalidParameter(format!(
            "depolarizing probability {p} is outside [0, 1]"
        )));
    }
    Ok(())
}

fn point(trial: &Trial<'_>, index: usize) -> Result<SimPoint> {
    let config = trial.config;
    let p = config.p_grid[index];
    let block_errors = (0..config.trials)
        .into_par_iter()
        .map_init(
            || trial.workspaces(),
            |ws, t| trial.fails(ws, index, p, t).map(u64::from),
        )
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    let (ci_lo, ci_hi) = wilson_interval(block_errors, config.trials);
    Ok(SimPoint {
        p,
        trials: config.trials,
        block_errors,
        wer: block_errors as f64 / config.trials as f64,
        ci_lo,
        ci_hi,
    })
}

/// Runs grid point `index` of the configuration. The code must have a CSS
/// form.
pub fn run_point(config: &SimConfig, index: usize) -> Result<SimPoint> {
    validate(config)?;
    if index >= config.p_grid.len() {
        return Err(Error::IndexOutOfRange {
            index,
            len: config.p_grid.len(),
        });
    }
    point(&Trial::new(config)?, index)
}

/// Runs every grid point. Results are identical for any thread count.
pub fn sweep(config: &SimConfig) -> Result<SimResult> {
    validate(config)?;
    if config.p_grid.is_empty() {
        return Ok(SimResult::default());
    }
    let trial = Trial::new(config)?;
    let points = (0..config.p_grid.len())
        .map(|i| point(&trial, i))
        .collect::<Result<_>>()?;
    Ok(SimResult { points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{build_eaqecc_binary, builtin};
    use crate::f2::BitMatrix;

    fn steane() -> QuantumCode {
        build_eaqecc_binary(&BitMatrix::from_u8_rows(&[
            &[0, 0, 0, 1, 1, 1, 1],
            &[0, 1, 1, 0, 0, 1, 1],
            &[1, 0, 1, 0, 1, 0, 1],
        ]))
        .unwrap()
    }

    #[test]
    fn depolarizing_extremes() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(sample_depolarizing(50, 0.0, &mut rng).is_identity());
        let e = sample_depolarizing(10_000, 1.0, &mut rng);
        assert_eq!(e.weight(), 10_000);
        // Each type has count ~ Binomial(10⁴, 1/3): σ ≈ 47.
        for p in NON_IDENTITY {
            let count = (0..e.n()).filter(|&q| e.get(q) == p).count() as f64;
            assert!(
                (count - 10_000.0 / 3.0).abs() < 3.0 * 47.2,
                "{p:?}: {count}"
            );
        }
    }

    #[test]
    fn depolarizing_mean_weight() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let w = sample_depolarizing(100_000, 0.1, &mut rng).weight() as f64;
        // σ = √(n p (1 − p)) ≈ 94.9.
        assert!((w - 10_000.0).abs() < 3.0 * 94.9, "{w}");
    }

    #[test]
    fn syndromes() {
        let shor = builtin("shor9").unwrap();
        assert!(syndrome(&shor, &PauliVec::identity(9)).unwrap().is_zero());
        let x0 = PauliVec::single(9, 0, Pauli::X);
        assert_eq!(syndrome(&shor, &x0).unwrap(), BitVec::from_ones(8, &[0]));
        let x1 = PauliVec::single(9, 1, Pauli::X);
        assert_eq!(syndrome(&shor, &x1).unwrap(), BitVec::from_ones(8, &[0, 1]));
        assert!(syndrome(&shor, &PauliVec::identity(8)).is_err());
    }

    #[test]
    fn syndrome_matches_rowwise_products() {
        let code = crate::qc_ldpc::example_code("ex1").unwrap();
        let css = code.css_form().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let e = sample_depolarizing(code.n(), 0.05, &mut rng);
            let s = syndrome(&code, &e).unwrap();
            let brute: Vec<bool> = code.checks().iter().map(|g| g.symp(&e)).collect();
            assert_eq!(s, BitVec::from_bools(brute));
            // Both syndromes vanish together: the checks span the CSS rows.
            let (sz, sx) = css_syndrome(&css, &e).unwrap();
            assert_eq!(s.is_zero(), sz.is_zero() && sx.is_zero());
        }
    }

    #[test]
    fn zero_noise_and_empty_grid() {
        let config = SimConfig::new(steane(), vec![0.0], 100, 0);
        let res = sweep(&config).unwrap();
        assert_eq!(res.points[0].block_errors, 0);
        assert_eq!(res.points[0].wer, 0.0);
        let empty = SimConfig::new(steane(), vec![], 100, 0);
        assert!(sweep(&empty).unwrap().points.is_empty());
    }

    #[test]
    fn steane_low_noise() {
        let config = SimConfig::new(steane(), vec![1e-3], 10_000, 3);
        let pt = run_point(&config, 0).unwrap();
        assert!(pt.wer < 1e-2, "{pt:?}");
    }

    #[test]
    fn deterministic_across_thread_counts() {
        let config = SimConfig::new(steane(), vec![0.02, 0.05], 500, 11);
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| sweep(&config).unwrap().to_csv())
        };
        let one = run(1);
        assert_eq!(one, run(4));
        assert_eq!(one, sweep(&config).unwrap().to_csv());
        assert!(one.starts_with(CSV_HEADER));
    }

    #[test]
    fn strict_failures_include_degenerate_ones() {
        let code = builtin("shor9").unwrap();
        let mut config = SimConfig::new(code, vec![0.05, 0.1], 400, 5);
        let degenerate = sweep(&config).unwrap();
        config.mode = SuccessMode::Strict;
        let strict = sweep(&config).unwrap();
        for (d, s) in degenerate.points.iter().zip(&strict.points) {
            assert!(d.block_errors <= s.block_errors);
        }
        // Per trial: a strict success is a degenerate success.
        let strict_config = config.clone();
        config.mode = SuccessMode::Degenerate;
        let strict_trial = Trial::new(&strict_config).unwrap();
        let degen_trial = Trial::new(&config).unwrap();
        let mut ws = strict_trial.workspaces();
        for t in 0..400 {
            let s = strict_trial.fails(&mut ws, 1, 0.1, t).unwrap();
            let d = degen_trial.fails(&mut ws, 1, 0.1, t).unwrap();
            assert!(s || !d);
        }
    }

    #[test]
    fn wer_grows_with_noise() {
        let config = SimConfig::new(steane(), vec![0.01, 0.05, 0.15], 2000, 8);
        let res = sweep(&config).unwrap();
        for w in res.points.windows(2) {
            // Non-decreasing up to overlap of the intervals.
            assert!(w[0].ci_lo <= w[1].ci_hi, "{w:?}");
        }
        assert!(res.points[0].wer < res.points[2].wer);
    }

    #[test]
    fn wilson_bounds() {
        let (lo, hi) = wilson_interval(0, 100);
        assert_eq!(lo, 0.0);
        assert!((hi - 0.036994).abs() < 1e-5);
        let (lo, hi) = wilson_interval(50, 100);
        assert!((lo - 0.403832).abs() < 1e-5 && (hi - 0.596168).abs() < 1e-5);
        assert_eq!(wilson_interval(0, 0), (0.0, 1.0));
    }

    #[test]
    fn invalid_configs() {
        let mut config = SimConfig::new(steane(), vec![1.5], 10, 0);
        assert!(sweep(&config).is_err());
        config.p_grid = vec![0.1];
        config.trials = 0;
        assert!(sweep(&config).is_err());
        config.trials = 10;
        assert!(matches!(
            run_point(&config, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
        let mixed = QuantumCode::new(2, vec!["XZ".parse().unwrap()], vec![], vec![]).unwrap();
        assert_eq!(
            sweep(&SimConfig::new(mixed, vec![0.1], 10, 0)).unwrap_err(),
            Error::NotCss
        );
    }
}
