//! The functions `x = Σ 2^(2^k) χ(h_k)` and `y = Σ 4^(4^k) χ(g_k)` with
//! `|h_k| = 2^(-k-2^k)` and `|g_k| = 4^(-k-4^k)`.
//!
//! Only the measures of `h_k` and `g_k` matter, so both functions are stored as
//! step functions. The `*_closed` builders append one remainder atom that carries
//! the exact measure and exact first moment of the discarded tail `k > K`.

use serde::Serialize;

use crate::analysis::{equivalence_constant_log2, lp_l2_norm, EquivalenceReport};
use crate::error::{invalid, Error, Result};
use crate::measure::{disjoint_union, distribution, normalize, Ambient, StepFunction};
use crate::numerics::{log_sum, Grid, LogScalar};
use crate::orlicz::{luxemburg_seq, OrliczFunction};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CounterexampleConfig {
    /// Atoms retained from each series.
    pub k: u32,
    /// Largest `log2(1/t)` the truncation must serve.
    pub l_max: f64,
}

impl CounterexampleConfig {
    pub fn new(k: u32, l_max: f64) -> Result<Self> {
        if !(l_max >= 1.0) || !l_max.is_finite() {
            return Err(invalid(format!("L_max must be a finite real >= 1, got {l_max}")));
        }
        let needed = Self::min_k(l_max);
        if k < needed {
            return Err(Error::TruncationInsufficient {
                k,
                needed: format!("K >= {needed} for L_max = {l_max}"),
            });
        }
        if k > 500 {
            return Err(invalid(format!("K = {k} exceeds the supported maximum 500")));
        }
        Ok(Self { k, l_max })
    }

    /// `ceil(log2 L_max) + 2`.
    pub fn min_k(l_max: f64) -> u32 {
        l_max.log2().ceil().max(0.0) as u32 + 2
    }

    /// Smallest valid configuration for `L_max`.
    pub fn for_l_max(l_max: f64) -> Result<Self> {
        Self::new(Self::min_k(l_max.max(1.0)), l_max)
    }

    fn check_l(&self, l: f64) -> Result<()> {
        if l > self.l_max {
            return Err(Error::TruncationInsufficient {
                k: self.k,
                needed: format!("log2(1/t) = {l} exceeds L_max = {}", self.l_max),
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Series {
    X,
    Y,
}

impl Series {
    /// `(log2 v_k, log2 μ_k)`.
    fn atom(self, k: u32) -> (f64, f64) {
        let k = k as f64;
        match self {
            Series::X => {
                let e = k.exp2();
                (e, -k - e)
            }
            Series::Y => {
                let e = (2.0 * k).exp2();
                (2.0 * e, -2.0 * (k + e))
            }
        }
    }

    /// `log2 Σ_{k > K} v_k μ_k`: `2^-K` for x, `4^-K / 3` for y.
    fn tail_moment_log2(self, k: u32) -> f64 {
        match self {
            Series::X => -(k as f64),
            Series::Y => -2.0 * k as f64 - 3f64.log2(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Series::X => "x",
            Series::Y => "y",
        }
    }

    pub fn build(self, cfg: &CounterexampleConfig) -> StepFunction {
        build_series(self, cfg.k, false)
    }

    pub fn build_closed(self, cfg: &CounterexampleConfig) -> StepFunction {
        build_series(self, cfg.k, true)
    }
}

fn build_series(series: Series, k: u32, closed: bool) -> StepFunction {
    let mut atoms: Vec<(LogScalar, LogScalar)> = (1..=k)
        .map(|i| {
            let (v, m) = series.atom(i);
            (LogScalar::from_log2(v), LogScalar::from_log2(m))
        })
        .collect();
    if closed {
        // Later terms are below 2^-(2^(K+3)) relative and vanish in log_sum.
        let tail: Vec<LogScalar> = (k + 1..=k + 3)
            .map(|i| LogScalar::from_log2(series.atom(i).1))
            .collect();
        let mu = log_sum(&tail);
        let value = LogScalar::from_log2(series.tail_moment_log2(k) - mu.log2_mag());
        atoms.push((value, mu));
    }
    normalize(atoms, Ambient::unit()).expect("series atoms are valid")
}

/// First `K` atoms of `x`.
pub fn build_x(cfg: &CounterexampleConfig) -> StepFunction {
    Series::X.build(cfg)
}

/// First `K` atoms of `y`.
pub fn build_y(cfg: &CounterexampleConfig) -> StepFunction {
    Series::Y.build(cfg)
}

/// `x` with the tail `k > K` folded into one atom.
pub fn build_x_closed(cfg: &CounterexampleConfig) -> StepFunction {
    Series::X.build_closed(cfg)
}

/// `y` with the tail `k > K` folded into one atom.
pub fn build_y_closed(cfg: &CounterexampleConfig) -> StepFunction {
    Series::Y.build_closed(cfg)
}

/// `∫ min(f, t f^2)` over the atoms, at `t = 2^lt`.
pub fn min_integral(f: &StepFunction, lt: f64) -> LogScalar {
    let terms: Vec<LogScalar> = f
        .atoms()
        .iter()
        .map(|a| {
            let lv = a.value.log2_mag();
            LogScalar::from_log2(lv.min(lt + 2.0 * lv) + a.measure.log2_mag())
        })
        .collect();
    log_sum(&terms)
}

/// `log2 N(2^w)` with `N(s) = s^2` on `(0, 1)` and `2s - 1` for `s >= 1`.
pub fn aux_n_log2(w: f64) -> f64 {
    if w < 0.0 {
        2.0 * w
    } else {
        w + 1.0 + (-(-w - 1.0).exp2()).ln_1p() / std::f64::consts::LN_2
    }
}

/// `log2 Σ N(2^u v_i) μ_i`.
pub fn induced_log2(f: &StepFunction, u: f64) -> f64 {
    let terms: Vec<LogScalar> = f
        .atoms()
        .iter()
        .map(|a| LogScalar::from_log2(aux_n_log2(u + a.value.log2_mag()) + a.measure.log2_mag()))
        .collect();
    log_sum(&terms).log2_mag()
}

/// `∫ N(t f(s)) ds` at `t = 2^lt`, unnormalized.
pub fn induced_orlicz(f: &StepFunction, lt: f64) -> Result<LogScalar> {
    if !(lt <= 0.0) {
        return Err(Error::OutOfDomain {
            arg: "t",
            value: lt.exp2(),
            domain: "(0, 1]".into(),
        });
    }
    Ok(LogScalar::from_log2(induced_log2(f, lt)))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Lemma51Row {
    #[serde(rename = "L")]
    pub l: f64,
    pub integral: f64,
    pub lower_bound: f64,
    pub upper_bound: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Lemma51Report {
    pub series: Series,
    pub k: u32,
    pub rows: Vec<Lemma51Row>,
    /// `min` and `max` of `integral * L` over the rows.
    pub c_lower: f64,
    pub c_upper: f64,
    pub all_pass: bool,
}

/// Two-sided bounds `(lo / L, hi / L)` on `∫ min(f, t f^2)` at `t = 2^-L`.
pub fn lemma51_bounds(series: Series) -> (f64, f64) {
    match series {
        Series::X => (1.0, 6.0),
        Series::Y => (2.0 / 3.0, 56.0 / 3.0),
    }
}

/// Check `lo / L <= ∫ min(f, t f^2) <= hi / L` at `t = 2^-L` for the closed series,
/// comparing in log2 without tolerance.
pub fn verify_lemma51(
    series: Series,
    cfg: &CounterexampleConfig,
    l_list: &[f64],
) -> Result<Lemma51Report> {
    let f = series.build_closed(cfg);
    let (lo, hi) = lemma51_bounds(series);
    let mut rows = Vec::with_capacity(l_list.len());
    let (mut c_lower, mut c_upper) = (f64::INFINITY, f64::NEG_INFINITY);
    for &l in l_list {
        if !(l > 2.0) {
            return Err(invalid(format!("L must exceed 2, got {l}")));
        }
        cfg.check_l(l)?;
        let v = min_integral(&f, -l);
        let lv = v.log2_mag();
        let ll = l.log2();
        let pass = lo.log2() - ll <= lv && lv <= hi.log2() - ll;
        let scaled = (lv + ll).exp2();
        c_lower = c_lower.min(scaled);
        c_upper = c_upper.max(scaled);
        rows.push(Lemma51Row {
            l,
            integral: v.to_f64(),
            lower_bound: lo / l,
            upper_bound: hi / l,
            pass,
        });
    }
    Ok(Lemma51Report {
        series,
        k: cfg.k,
        all_pass: rows.iter().all(|r| r.pass),
        rows,
        c_lower,
        c_upper,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub log2_c: f64,
    pub k: u32,
    pub log2_t: f64,
    /// `log2 n_x(C t)`.
    pub log2_lhs: f64,
    /// `log2 (C n_y(t))`.
    pub log2_rhs: f64,
    /// `n_x(C t) >= 2 C n_y(t)`.
    pub verified: bool,
}

/// Smallest `k >= 1` with `2^(2k+1) > log2 C + 1`, and `t = 2^(2^(2k+1) + 1)`, so that
/// `t` and `C t` both lie in `(2^(2^(2k+1)), 2^(2^(2k+2)))`.
pub fn find_nonequiv_witness(c: LogScalar, cfg: &CounterexampleConfig) -> Result<Witness> {
    if !(c >= LogScalar::ONE) {
        return Err(invalid(format!("C must be >= 1, got {c}")));
    }
    let lc = c.log2_mag();
    let mut k = 1u32;
    while ((2 * k + 1) as f64).exp2() <= lc + 1.0 {
        k += 1;
        if k > 250 {
            return Err(invalid(format!("C = 2^{lc} is beyond the supported range")));
        }
    }
    let needed = 2 * k + 2;
    if cfg.k < needed {
        return Err(Error::TruncationInsufficient {
            k: cfg.k,
            needed: format!("K >= {needed} for C = 2^{lc}"),
        });
    }
    let lt = ((2 * k + 1) as f64).exp2() + 1.0;
    let x = build_x_closed(cfg);
    let y = build_y_closed(cfg);
    let lhs = distribution(&x, LogScalar::from_log2(lt + lc));
    let rhs = distribution(&y, LogScalar::from_log2(lt)) * c;
    Ok(Witness {
        log2_c: lc,
        k,
        log2_t: lt,
        log2_lhs: lhs.log2_mag(),
        log2_rhs: rhs.log2_mag(),
        verified: lhs >= rhs.scale_log2(1.0),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Prop53Row {
    pub vector: String,
    pub norm_x: f64,
    pub norm_y: f64,
    pub luxemburg_induced_x: f64,
    pub luxemburg_induced_y: f64,
    pub luxemburg_powerlog: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Prop53Report {
    pub rows: Vec<Prop53Row>,
    pub x_vs_induced: f64,
    pub y_vs_induced: f64,
    pub x_vs_powerlog: f64,
    pub y_vs_powerlog: f64,
    pub x_vs_y: f64,
    pub cap: f64,
    pub verdict: bool,
}

/// Test vectors: `e_1`, flat vectors of length `2^j` for every grid point `log2 n = j`,
/// and geometric vectors `r^k`, `k < 64`, for `r` in `{1/2, 9/10}`.
pub fn prop53_vectors(grid: &Grid) -> Result<Vec<(String, Vec<f64>)>> {
    let mut out = vec![("unit".to_string(), vec![1.0])];
    for &j in grid.log2_points() {
        if j < 0.0 || j.fract() != 0.0 || j > 24.0 {
            return Err(invalid(format!(
                "flat lengths must be 2^j for integer 0 <= j <= 24, got j = {j}"
            )));
        }
        let n = 1usize << j as u32;
        out.push((format!("flat-{n}"), vec![1.0; n]));
    }
    for r in [0.5f64, 0.9] {
        out.push((format!("geometric-{r}"), (0..64).map(|k| r.powi(k)).collect()));
    }
    Ok(out)
}

fn weighted_union(f: &StepFunction, a: &[f64]) -> Result<StepFunction> {
    let parts = a
        .iter()
        .filter(|c| **c != 0.0)
        .map(|c| f.scaled(LogScalar::from_f64(c.abs())))
        .collect::<Result<Vec<_>>>()?;
    disjoint_union(&parts)
}

/// `‖Σ a_k f̄_k‖` in `L_p + L_2` for disjoint copies `f̄_k` of `f`.
pub fn disjoint_norm(f: &StepFunction, a: &[f64], p: f64) -> Result<LogScalar> {
    lp_l2_norm(&weighted_union(f, a)?, p)
}

/// Compare `‖Σ a_k x̄_k‖`, `‖Σ a_k ȳ_k‖` in `L_1 + L_2` with the Luxemburg norms of
/// the induced functions and of `t / (1 + ln(1/t))`.
pub fn verify_prop53(
    cfg: &CounterexampleConfig,
    p: f64,
    grid: &Grid,
    cap: f64,
) -> Result<Prop53Report> {
    if p != 1.0 {
        return Err(invalid("the construction is stated in L_1; use p = 1"));
    }
    let x = build_x_closed(cfg);
    let y = build_y_closed(cfg);
    let mx = OrliczFunction::induced(x.clone())?;
    let my = OrliczFunction::induced(y.clone())?;
    let pl = OrliczFunction::PowerLog;
    let mut rows = Vec::new();
    for (name, a) in prop53_vectors(grid)? {
        rows.push(Prop53Row {
            vector: name,
            norm_x: disjoint_norm(&x, &a, p)?.to_f64(),
            norm_y: disjoint_norm(&y, &a, p)?.to_f64(),
            luxemburg_induced_x: luxemburg_seq(&mx, &a, 1e-12)?,
            luxemburg_induced_y: luxemburg_seq(&my, &a, 1e-12)?,
            luxemburg_powerlog: luxemburg_seq(&pl, &a, 1e-12)?,
        });
    }
    let index = Grid::explicit((0..rows.len()).map(|i| i as f64).collect())?;
    let pick = |f: fn(&Prop53Row) -> f64, g: fn(&Prop53Row) -> f64| -> Result<EquivalenceReport> {
        equivalence_constant_log2(
            |i| Ok(f(&rows[i as usize]).log2()),
            |i| Ok(g(&rows[i as usize]).log2()),
            &index,
            cap,
        )
    };
    let x_vs_induced = pick(|r| r.norm_x, |r| r.luxemburg_induced_x)?.constant;
    let y_vs_induced = pick(|r| r.norm_y, |r| r.luxemburg_induced_y)?.constant;
    let x_vs_powerlog = pick(|r| r.norm_x, |r| r.luxemburg_powerlog)?.constant;
    let y_vs_powerlog = pick(|r| r.norm_y, |r| r.luxemburg_powerlog)?.constant;
    let x_vs_y = pick(|r| r.norm_x, |r| r.norm_y)?.constant;
    let verdict = [x_vs_induced, y_vs_induced, x_vs_powerlog, y_vs_powerlog, x_vs_y]
        .iter()
        .all(|&c| c <= cap);
    Ok(Prop53Report {
        rows,
        x_vs_induced,
        y_vs_induced,
        x_vs_powerlog,
        y_vs_powerlog,
        x_vs_y,
        cap,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn cfg(k: u32) -> CounterexampleConfig {
        CounterexampleConfig { k, l_max: 4.0 }
    }

    fn pairs(f: &StepFunction) -> Vec<(f64, f64)> {
        f.atoms()
            .iter()
            .map(|a| (a.value.log2_mag(), a.measure.log2_mag()))
            .collect()
    }

    #[test]
    fn config_rule() {
        assert_eq!(CounterexampleConfig::min_k(4096.0), 14);
        assert!(CounterexampleConfig::new(13, 4096.0).is_err());
        assert!(CounterexampleConfig::new(14, 4096.0).is_ok());
        assert_eq!(CounterexampleConfig::for_l_max(9.0).unwrap().k, 6);
    }

    #[test]
    fn build_examples() {
        assert_eq!(pairs(&build_x(&cfg(1))), vec![(2.0, -3.0)]);
        assert_eq!(pairs(&build_x(&cfg(2))), vec![(4.0, -6.0), (2.0, -3.0)]);
        assert_relative_eq!(
            build_x(&cfg(3)).total_measure().to_f64(),
            0.14111328125,
            max_relative = 1e-14
        );
        assert_eq!(pairs(&build_y(&cfg(1))), vec![(8.0, -10.0)]);
        assert_eq!(pairs(&build_y(&cfg(2))), vec![(32.0, -36.0), (8.0, -10.0)]);
        assert_eq!(build_y(&cfg(1)).top_value().to_f64(), 256.0);
    }

    #[test]
    fn closed_tail_atom() {
        let x = build_x_closed(&cfg(4));
        assert_eq!(x.len(), 5);
        let top = x.atoms()[0];
        // Measure 2^-37 (1 + 2^-33 + ...) and first moment 2^-4.
        assert_relative_eq!(top.measure.log2_mag(), -37.0, epsilon = 1e-9);
        assert_relative_eq!((top.value * top.measure).log2_mag(), -4.0, epsilon = 1e-12);
        let y = build_y_closed(&cfg(2));
        let top = y.atoms()[0];
        assert_relative_eq!(
            (top.value * top.measure).to_f64(),
            4f64.powi(-2) / 3.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn min_integral_examples() {
        let x = build_x(&cfg(6));
        // All values >= 1 at t = 1, so the integral is Σ v μ = Σ 2^-k.
        assert_relative_eq!(min_integral(&x, 0.0).to_f64(), 1.0 - 2f64.powi(-6), max_relative = 1e-14);
        let xc = build_x_closed(&cfg(4));
        let v = min_integral(&xc, -9.0).to_f64();
        assert_relative_eq!(v, 0.19921875, max_relative = 1e-14);
        assert!((1.0 / 9.0..=6.0 / 9.0).contains(&v));
    }

    #[test]
    fn proof_identity_for_x() {
        let k = 14;
        let x = build_x_closed(&cfg(k));
        for l in 3..=4096u32 {
            let m = (1..k).rev().find(|&m| (m as f64).exp2() < l as f64).unwrap();
            let sum: f64 = (1..=m).map(|j| ((j as f64).exp2() - j as f64 - l as f64).exp2()).sum();
            let expect = (-(m as f64)).exp2() + sum;
            assert_relative_eq!(min_integral(&x, -(l as f64)).to_f64(), expect, max_relative = 1e-13);
        }
    }

    #[test]
    fn truncation_stability() {
        for series in [Series::X, Series::Y] {
            for k in 4..10 {
                let a = series.build_closed(&cfg(k));
                let b = series.build_closed(&cfg(k + 1));
                let l_max = ((k - 2) as f64).exp2();
                for l in (3..=l_max as u32).step_by(3) {
                    let va = min_integral(&a, -(l as f64));
                    let vb = min_integral(&b, -(l as f64));
                    assert!(va.approx_eq(vb, 2f64.powi(-40)), "{series:?} K={k} L={l}");
                }
            }
        }
    }

    #[test]
    fn induced_examples() {
        let x = build_x_closed(&cfg(8));
        let v = induced_orlicz(&x, 0.0).unwrap().to_f64();
        let mu_sum: f64 = (1..=12).map(|k| (-(k as f64) - (k as f64).exp2()).exp2()).sum();
        assert_relative_eq!(v, 2.0 - mu_sum, max_relative = 1e-12);
        assert!((v - 1.8589).abs() < 1e-4);
        // Quadratic regime for tiny t.
        let lt = -80.0;
        let sq: f64 = x.atoms().iter().map(|a| (a.value.powf(2.0) * a.measure).to_f64()).sum();
        let small = induced_orlicz(&build_x(&cfg(4)), lt).unwrap();
        let sq4: f64 = build_x(&cfg(4))
            .atoms()
            .iter()
            .map(|a| (a.value.powf(2.0) * a.measure).to_f64())
            .sum();
        assert_relative_eq!(small.log2_mag(), 2.0 * lt + sq4.log2(), epsilon = 1e-12);
        assert!(sq > sq4);
        assert!(induced_orlicz(&x, 0.5).is_err());
    }

    #[test]
    fn aux_n_values() {
        assert_eq!(aux_n_log2(-1.0), -2.0);
        assert_relative_eq!(aux_n_log2(0.0), 0.0, epsilon = 1e-15);
        assert_relative_eq!(aux_n_log2(3.0).exp2(), 15.0, max_relative = 1e-14);
        assert_relative_eq!(aux_n_log2(100.0), 101.0, epsilon = 1e-12);
    }

    #[test]
    fn lemma51_examples() {
        let c = CounterexampleConfig::new(14, 4096.0).unwrap();
        let r = verify_lemma51(Series::X, &c, &[9.0]).unwrap();
        assert!(r.all_pass);
        assert_eq!(r.rows[0].integral, 0.19921875);
        let ls: Vec<f64> = (2..=12).map(|j| (j as f64).exp2()).collect();
        assert!(verify_lemma51(Series::X, &c, &ls).unwrap().all_pass);
        let ry = verify_lemma51(Series::Y, &c, &[9.0]).unwrap();
        assert!(ry.all_pass && ry.c_lower > 0.0 && ry.c_upper.is_finite());
        assert!(verify_lemma51(Series::X, &c, &[2.0]).is_err());
        assert!(matches!(
            verify_lemma51(Series::X, &c, &[5000.0]),
            Err(Error::TruncationInsufficient { .. })
        ));
    }

    #[test]
    fn witness_examples() {
        let c = CounterexampleConfig::new(14, 4096.0).unwrap();
        let w = find_nonequiv_witness(LogScalar::from_f64(2.0), &c).unwrap();
        assert_eq!((w.k, w.log2_t), (1, 9.0));
        assert_relative_eq!(w.log2_lhs, -20.0, epsilon = 1e-4);
        assert_relative_eq!(w.log2_rhs, -35.0, epsilon = 1e-4);
        assert!(w.verified);
        assert_eq!(find_nonequiv_witness(LogScalar::ONE, &c).unwrap().k, 1);
        let w = find_nonequiv_witness(LogScalar::pow2(64), &c).unwrap();
        assert_eq!(w.k, 3);
        assert!(w.log2_t > 128.0 && w.log2_t + 64.0 < 256.0 && w.verified);
        assert!(matches!(
            find_nonequiv_witness(LogScalar::pow2(64), &cfg(7)),
            Err(Error::TruncationInsufficient { .. })
        ));
    }

    #[test]
    fn prop53_examples() {
        let c = CounterexampleConfig::new(14, 4096.0).unwrap();
        let r = verify_prop53(&c, 1.0, &Grid::dyadic(0, 16).unwrap(), 10.0).unwrap();
        let unit = &r.rows[0];
        assert_relative_eq!(unit.norm_x, 1.0, max_relative = 1e-12);
        assert_relative_eq!(unit.luxemburg_induced_x, 1.0, max_relative = 1e-12);
        assert_relative_eq!(unit.luxemburg_powerlog, 1.0, max_relative = 1e-12);
        assert!(r.x_vs_induced.is_finite() && r.y_vs_induced.is_finite());
        assert!(r.x_vs_y.is_finite());
        assert!(verify_prop53(&c, 1.5, &Grid::dyadic(0, 2).unwrap(), 10.0).is_err());
    }

    proptest! {
        #[test]
        fn min_integral_monotone(l1 in 3.0f64..4000.0, d in 0.0f64..50.0) {
            let c = cfg(14);
            for f in [build_x_closed(&c), build_y_closed(&c)] {
                prop_assert!(min_integral(&f, -l1 - d) <= min_integral(&f, -l1));
            }
        }

        #[test]
        fn induced_doubling(lt in -3000.0f64..-1.0) {
            let c = cfg(14);
            for f in [build_x_closed(&c), build_y_closed(&c)] {
                let a = induced_orlicz(&f, lt).unwrap();
                let b = induced_orlicz(&f, lt + 1.0).unwrap();
                prop_assert!(a < b);
                prop_assert!(b <= a.scale_log2(2.0 + 1e-12));
            }
        }

        #[test]
        fn witness_gap(lc in 0.0f64..120.0) {
            let c = cfg(16);
            let w = find_nonequiv_witness(LogScalar::from_log2(lc), &c).unwrap();
            prop_assert!(w.verified);
            prop_assert!(w.log2_lhs - w.log2_rhs >= 1.0);
        }
    }
}
