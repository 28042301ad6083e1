//! The `L_p + L_2` norm, the Cesàro head/tail ratios and two-sided equivalence
//! constants between positive functions on a grid.

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::measure::{power_integral, rearrangement_eval, Ambient, StepFunction};
use crate::numerics::{head_integral_log2, integrate_log2, log2_ln2, Grid, LogScalar, QuadConfig};
use crate::orlicz::{epsilon_margin, EpsilonMargin, MfrakView, OrliczFunction};

/// `(∫_0^1 f*^p)^(1/p) + (∫_1^∞ f*^2)^(1/2)` for a step function on the half line.
pub fn lp_l2_norm(f: &StepFunction, p: f64) -> Result<LogScalar> {
    if !(1.0..=2.0).contains(&p) {
        return Err(invalid(format!("p must lie in [1, 2], got {p}")));
    }
    if f.is_empty() {
        return Ok(LogScalar::ZERO);
    }
    let total = f.total_measure();
    let one = LogScalar::ONE;
    let head_end = if total < one { total } else { one };
    let head = power_integral(f, p, LogScalar::ZERO, head_end)?.powf(1.0 / p);
    let tail = if total > one {
        power_integral(f, 2.0, one, total)?.powf(0.5)
    } else {
        LogScalar::ZERO
    };
    Ok(head + tail)
}

/// A non-increasing function on `(0, 1]` with its averages.
pub trait DecreasingSource {
    fn log2_value(&self, lt: f64) -> Result<f64>;
    /// `(1/t) ∫_0^t g^r`.
    fn head_mean(&self, r: f64, lt: f64, quad: &QuadConfig) -> Result<LogScalar>;
    /// `(1/t) ∫_t^1 g^r`.
    fn tail_mean(&self, r: f64, lt: f64, quad: &QuadConfig) -> Result<LogScalar>;
}

fn check_unit_interval(lt: f64) -> Result<()> {
    if lt.is_nan() || lt > 0.0 || lt == f64::NEG_INFINITY {
        return Err(Error::OutOfDomain {
            arg: "t",
            value: lt.exp2(),
            domain: "(0, 1]".into(),
        });
    }
    Ok(())
}

impl DecreasingSource for StepFunction {
    fn log2_value(&self, lt: f64) -> Result<f64> {
        Ok(rearrangement_eval(self, LogScalar::from_log2(lt))?.log2_mag())
    }

    fn head_mean(&self, r: f64, lt: f64, _quad: &QuadConfig) -> Result<LogScalar> {
        check_unit_interval(lt)?;
        let v = power_integral(self, r, LogScalar::ZERO, LogScalar::from_log2(lt))?;
        Ok(v.scale_log2(-lt))
    }

    fn tail_mean(&self, r: f64, lt: f64, _quad: &QuadConfig) -> Result<LogScalar> {
        check_unit_interval(lt)?;
        if lt == 0.0 {
            return Ok(LogScalar::ZERO);
        }
        let v = power_integral(self, r, LogScalar::from_log2(lt), LogScalar::ONE)?;
        Ok(v.scale_log2(-lt))
    }
}

/// `log2` of the integrand of `(1/t) ∫ m^r(s) ds / m^r(t)` in `u = log2 s`.
fn ratio_integrand<'a>(m: &'a OrliczFunction, r: f64, lt: f64) -> Result<impl FnMut(f64) -> Result<f64> + 'a> {
    let base = m.log2_mfrak(lt)?;
    let jac = log2_ln2();
    Ok(move |u: f64| Ok(r * (m.log2_mfrak(u)? - base) + (u - lt) + jac))
}

/// `log2` of `(1/t) ∫_0^t m^r / m^r(t)`, or a divergence error.
fn head_ratio_log2(
    m: &OrliczFunction,
    r: f64,
    lt: f64,
    floor: Option<f64>,
    quad: &QuadConfig,
) -> Result<f64> {
    check_unit_interval(lt)?;
    let h = head_integral_log2(ratio_integrand(m, r, lt)?, lt, floor, quad)?;
    if !h.converged {
        return Err(Error::Divergent {
            log2_t: lt,
            partial: h.value.to_f64(),
            span: h.span,
        });
    }
    Ok(h.value.log2_mag())
}

fn tail_ratio_log2(m: &OrliczFunction, q: f64, lt: f64, quad: &QuadConfig) -> Result<f64> {
    check_unit_interval(lt)?;
    let top = m.log2_range_hi().min(0.0);
    if lt >= top {
        return Ok(f64::NEG_INFINITY);
    }
    Ok(integrate_log2(ratio_integrand(m, q, lt)?, lt, top, quad)?.log2_mag())
}

impl DecreasingSource for MfrakView {
    fn log2_value(&self, lt: f64) -> Result<f64> {
        self.log2_eval(lt)
    }

    fn head_mean(&self, r: f64, lt: f64, quad: &QuadConfig) -> Result<LogScalar> {
        let ratio = head_ratio_log2(&self.source, r, lt, None, quad)?;
        Ok(LogScalar::from_log2(ratio + r * self.log2_eval(lt)?))
    }

    fn tail_mean(&self, r: f64, lt: f64, quad: &QuadConfig) -> Result<LogScalar> {
        let ratio = tail_ratio_log2(&self.source, r, lt, quad)?;
        Ok(LogScalar::from_log2(ratio + r * self.log2_eval(lt)?))
    }
}

/// `((1/t) ∫_0^t g^p)^(1/p) + ((1/t) ∫_t^1 g^2)^(1/2)` at `t = 2^lt`.
pub fn rhs_main_cond<G: DecreasingSource + ?Sized>(
    g: &G,
    p: f64,
    lt: f64,
    quad: &QuadConfig,
) -> Result<LogScalar> {
    if !(p >= 1.0) {
        return Err(invalid(format!("p must be >= 1, got {p}")));
    }
    let head = g.head_mean(p, lt, quad)?.powf(1.0 / p);
    let tail = g.tail_mean(2.0, lt, quad)?.powf(0.5);
    Ok(head + tail)
}

/// Head Cesàro ratio `[(1/t) ∫_0^t m^p] / m^p(t)`.
pub fn cesaro_head(m: &OrliczFunction, p: f64, lt: f64) -> Result<f64> {
    cesaro_head_with(m, p, lt, &QuadConfig::default())
}

pub fn cesaro_head_with(m: &OrliczFunction, p: f64, lt: f64, quad: &QuadConfig) -> Result<f64> {
    Ok(head_ratio_log2(m, p, lt, None, quad)?.exp2())
}

/// Head ratio with the integral cut at `s = 2^log2_floor`; finite even when `m ∉ L_p`.
pub fn cesaro_head_truncated(m: &OrliczFunction, p: f64, lt: f64, log2_floor: f64) -> Result<f64> {
    if !(log2_floor < lt) {
        return Err(invalid(format!("floor 2^{log2_floor} must lie below t = 2^{lt}")));
    }
    Ok(head_ratio_log2(m, p, lt, Some(log2_floor), &QuadConfig::default())?.exp2())
}

/// Tail Cesàro ratio `[(1/t) ∫_t^1 m^q] / m^q(t)`.
pub fn cesaro_tail(m: &OrliczFunction, q: f64, lt: f64) -> Result<f64> {
    Ok(tail_ratio_log2(m, q, lt, &QuadConfig::default())?.exp2())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EquivalenceReport {
    /// `max(sup f/g, sup g/f)`; may overflow to `inf`, see `log2_constant`.
    pub constant: f64,
    /// `log2 t` attaining `sup f/g`.
    pub worst_over: f64,
    /// `log2 t` attaining `sup g/f`.
    pub worst_under: f64,
    pub grid_descriptor: String,
    pub verdict: bool,
    #[serde(skip)]
    pub log2_constant: f64,
}

/// Equivalence constant between `2^lf(u)` and `2^lg(u)` over the grid.
pub fn equivalence_constant_log2<F, G>(
    mut lf: F,
    mut lg: G,
    grid: &Grid,
    cap: f64,
) -> Result<EquivalenceReport>
where
    F: FnMut(f64) -> Result<f64>,
    G: FnMut(f64) -> Result<f64>,
{
    if grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let mut over = (f64::NEG_INFINITY, f64::NAN);
    let mut under = (f64::NEG_INFINITY, f64::NAN);
    for &u in grid.log2_points() {
        let (a, b) = (lf(u)?, lg(u)?);
        for v in [a, b] {
            if !v.is_finite() {
                return Err(Error::NonPositive {
                    log2_t: u,
                    value: v.exp2(),
                });
            }
        }
        if a - b > over.0 {
            over = (a - b, u);
        }
        if b - a > under.0 {
            under = (b - a, u);
        }
    }
    let log2_constant = over.0.max(under.0).max(0.0);
    let constant = log2_constant.exp2();
    Ok(EquivalenceReport {
        constant,
        worst_over: over.1,
        worst_under: under.1,
        grid_descriptor: grid.descriptor(),
        verdict: constant <= cap,
        log2_constant,
    })
}

/// Equivalence constant between two positive maps of `t` (not `log2 t`).
pub fn equivalence_constant<F, G>(mut f: F, mut g: G, grid: &Grid, cap: f64) -> Result<EquivalenceReport>
where
    F: FnMut(f64) -> f64,
    G: FnMut(f64) -> f64,
{
    let positive = |u: f64, v: f64| -> Result<f64> {
        if v > 0.0 && v.is_finite() {
            Ok(v.log2())
        } else {
            Err(Error::NonPositive { log2_t: u, value: v })
        }
    };
    equivalence_constant_log2(
        |u| positive(u, f(u.exp2())),
        |u| positive(u, g(u.exp2())),
        grid,
        cap,
    )
}

/// Relative growth of the constant from a narrow to a wide grid.
pub fn stabilization(narrow: &EquivalenceReport, wide: &EquivalenceReport) -> f64 {
    (wide.log2_constant - narrow.log2_constant).exp2() - 1.0
}

/// Equivalence of `m(t)` with `rhs_main_cond(g, p, t)` over a grid in `(0, 1)`.
pub fn check_main_f_cond<G: DecreasingSource + ?Sized>(
    m: &OrliczFunction,
    g: &G,
    p: f64,
    grid: &Grid,
    cap: f64,
) -> Result<EquivalenceReport> {
    check_main_f_cond_with(m, g, p, grid, cap, &QuadConfig::default())
}

pub fn check_main_f_cond_with<G: DecreasingSource + ?Sized>(
    m: &OrliczFunction,
    g: &G,
    p: f64,
    grid: &Grid,
    cap: f64,
    quad: &QuadConfig,
) -> Result<EquivalenceReport> {
    if grid.log2_max().is_some_and(|h| h >= 0.0) {
        return Err(invalid("the main-condition grid must lie in (0, 1)"));
    }
    equivalence_constant_log2(
        |u| m.log2_mfrak(u),
        |u| Ok(rhs_main_cond(g, p, u, quad)?.log2_mag()),
        grid,
        cap,
    )
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Theorem33Report {
    pub family: String,
    pub p: f64,
    /// The main condition holds for `f = m` on the grid within the cap.
    pub equiv_holds: bool,
    /// `None` when the head integral diverges.
    pub main_cond: Option<EquivalenceReport>,
    pub divergent: bool,
    pub eps: EpsilonMargin,
    pub agree: bool,
}

/// Both sides of the characterization: the main condition for `f = m`, and the
/// ε-improved convexity/concavity margin.
pub fn theorem_3_3_check(
    m: &OrliczFunction,
    p: f64,
    grid: &Grid,
    cap: f64,
) -> Result<Theorem33Report> {
    if !(1.0..2.0).contains(&p) {
        return Err(invalid(format!("p must lie in [1, 2), got {p}")));
    }
    let eps = epsilon_margin(m, p, grid)?;
    let inner = grid.restrict(f64::NEG_INFINITY, -1e-12);
    let view = MfrakView::new(m.clone());
    let (main_cond, divergent) = match check_main_f_cond(m, &view, p, &inner, cap) {
        Ok(r) => (Some(r), false),
        Err(Error::Divergent { .. }) => (None, true),
        Err(e) => return Err(e),
    };
    let equiv_holds = main_cond.as_ref().is_some_and(|r| r.verdict);
    Ok(Theorem33Report {
        family: m.describe(),
        p,
        equiv_holds,
        agree: equiv_holds == eps.verdict,
        main_cond,
        divergent,
        eps,
    })
}

/// Equivalence of `f*` with `m` on a grid in `(0, t0]`, `t0 <= 1`.
pub fn uniqueness_check(
    m: &OrliczFunction,
    f: &StepFunction,
    grid: &Grid,
    cap: f64,
) -> Result<EquivalenceReport> {
    if grid.log2_max().is_some_and(|h| h > 0.0) {
        return Err(invalid("the uniqueness grid must lie in (0, 1]"));
    }
    equivalence_constant_log2(|u| f.log2_value(u), |u| m.log2_mfrak(u), grid, cap)
}

/// Step approximation of `m` on `(0, 1)` with `n` dyadic atoms: the value
/// `m(2^-(j+1))` on `[2^-(j+1), 2^-j)` and `m(2^-n)` on `(0, 2^-(n-1))`.
pub fn mfrak_step(m: &OrliczFunction, n: u32) -> Result<StepFunction> {
    if n < 2 {
        return Err(invalid("mfrak_step needs at least two atoms"));
    }
    if m.log2_range_hi() < 0.0 {
        return Err(invalid("m must be defined on (0, 1]"));
    }
    let mut atoms = Vec::with_capacity(n as usize);
    for j in 0..n - 1 {
        let lv = m.log2_mfrak(-(j as f64) - 1.0)?;
        atoms.push((LogScalar::from_log2(lv), LogScalar::pow2(-(j as i64) - 1)));
    }
    let top = m.log2_mfrak(-(n as f64))?;
    atoms.push((LogScalar::from_log2(top), LogScalar::pow2(-(n as i64) + 1)));
    crate::measure::normalize(atoms, Ambient::unit())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::disjoint_sum;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn p15() -> OrliczFunction {
        OrliczFunction::power(1.5).unwrap()
    }

    fn q() -> QuadConfig {
        QuadConfig::default()
    }

    #[test]
    fn lp_l2_examples() {
        let f = StepFunction::half_line(&[(1.0, 2.0)]).unwrap();
        assert_relative_eq!(lp_l2_norm(&f, 1.0).unwrap().to_f64(), 2.0, max_relative = 1e-15);
        let f = StepFunction::half_line(&[(1.0, 0.5)]).unwrap();
        for p in [1.0, 1.5, 2.0] {
            assert_relative_eq!(lp_l2_norm(&f, p).unwrap().to_f64(), 0.5f64.powf(1.0 / p), max_relative = 1e-14);
        }
        let g = disjoint_sum(&StepFunction::probability(&[(2.0, 0.5), (1.0, 0.5)]).unwrap(), 4).unwrap();
        // f* = 2 on (0, 2) and 1 on (2, 4): the tail is ∫_1^2 4 + ∫_2^4 1 = 6.
        assert_relative_eq!(lp_l2_norm(&g, 1.0).unwrap().to_f64(), 2.0 + 6f64.sqrt(), max_relative = 1e-14);
        assert!(lp_l2_norm(&g, 2.5).is_err());
    }

    #[test]
    fn rhs_examples() {
        let view = MfrakView::new(p15());
        let v = rhs_main_cond(&view, 1.0, -6.0, &q()).unwrap();
        assert_relative_eq!(v.to_f64(), 72.0, max_relative = 1e-7);
        let one = StepFunction::probability(&[(1.0, 1.0)]).unwrap();
        for &(p, lt) in &[(1.0, -3.0), (1.5, -1.0), (2.0, -10.0)] {
            let t = f64::exp2(lt);
            let v = rhs_main_cond(&one, p, lt, &q()).unwrap().to_f64();
            assert_relative_eq!(v, 1.0 + ((1.0 - t) / t).sqrt(), max_relative = 1e-13);
        }
        assert_relative_eq!(rhs_main_cond(&one, 2.0, -1.0, &q()).unwrap().to_f64(), 2.0, max_relative = 1e-15);
    }

    #[test]
    fn cesaro_examples() {
        assert_relative_eq!(cesaro_head(&p15(), 1.0, -5.0).unwrap(), 3.0, max_relative = 1e-7);
        let p2 = OrliczFunction::power(2.0).unwrap();
        assert_relative_eq!(cesaro_head(&p2, 1.0, -5.0).unwrap(), 2.0, max_relative = 1e-7);
        assert_relative_eq!(cesaro_tail(&p15(), 2.0, -6.0).unwrap(), 2.25, max_relative = 1e-7);
        assert_relative_eq!(cesaro_tail(&p2, 2.0, -6.0).unwrap(), 6.0 * std::f64::consts::LN_2, max_relative = 1e-7);
        assert!(cesaro_tail(&p15(), 2.0, -1e-9).unwrap() < 1e-6);
        assert_eq!(cesaro_tail(&p15(), 2.0, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn powerlog_head_diverges() {
        let pl = OrliczFunction::PowerLog;
        assert!(matches!(cesaro_head(&pl, 1.0, -16.0), Err(Error::Divergent { .. })));
        let floor = -(2f64.powi(20));
        let a = cesaro_head_truncated(&pl, 1.0, -16.0, floor).unwrap();
        let b = cesaro_head_truncated(&pl, 1.0, -1024.0, floor).unwrap();
        assert!(b > 10.0 * a, "{a} {b}");
    }

    #[test]
    fn equivalence_examples() {
        let grid = Grid::dyadic(-20, 0).unwrap();
        let f = |t: f64| t.sqrt() + 1.0;
        let r = equivalence_constant(f, f, &grid, 10.0).unwrap();
        assert_eq!(r.constant, 1.0);
        let r = equivalence_constant(f, |t| 2.0 * f(t), &grid, 10.0).unwrap();
        assert_relative_eq!(r.constant, 2.0, max_relative = 1e-14);
        assert!(r.verdict);
        assert!(equivalence_constant(f, |_| 0.0, &grid, 10.0).is_err());
        let json = serde_json::to_value(&r).unwrap();
        let mut keys: Vec<&String> = json.as_object().unwrap().keys().collect();
        keys.sort();
        assert_eq!(keys, ["constant", "grid_descriptor", "verdict", "worst_over", "worst_under"]);
    }

    #[test]
    fn induced_vs_powerlog_constant() {
        let cfg = crate::counterexample::CounterexampleConfig::new(14, 4096.0).unwrap();
        let m = OrliczFunction::induced(crate::counterexample::build_x_closed(&cfg)).unwrap();
        let pl = OrliczFunction::PowerLog;
        let grid = Grid::dyadic(-256, -1).unwrap();
        let r = equivalence_constant_log2(|u| m.log2_eval(u), |u| pl.log2_eval(u), &grid, 32.0).unwrap();
        assert!(r.verdict, "{r:?}");
    }

    #[test]
    fn main_cond_examples() {
        let view = MfrakView::new(p15());
        let grid = Grid::dyadic(-40, -1).unwrap();
        let r = check_main_f_cond(&p15(), &view, 1.0, &grid, 10.0).unwrap();
        assert!(r.constant <= 3.0 + 3f64.sqrt() + 1e-6 && r.verdict, "{r:?}");
        // Ratio 2 + sqrt(ln(1/t)) for Power(2); on 2^-1..2^-5 it stays below 4.
        let p2 = OrliczFunction::power(2.0).unwrap();
        let small = Grid::dyadic(-5, -1).unwrap();
        let r = check_main_f_cond(&p2, &MfrakView::new(p2.clone()), 1.0, &small, 10.0).unwrap();
        assert!(r.constant <= 4.0, "{r:?}");
        let one = StepFunction::probability(&[(1.0, 1.0)]).unwrap();
        let r = check_main_f_cond(&p15(), &one, 1.0, &Grid::dyadic(-60, -1).unwrap(), 10.0).unwrap();
        assert!(!r.verdict);
        assert!(check_main_f_cond(&p15(), &one, 1.0, &Grid::dyadic(-3, 0).unwrap(), 10.0).is_err());
    }

    #[test]
    fn theorem33_examples() {
        let grid = Grid::dyadic(-256, 0).unwrap();
        let r = theorem_3_3_check(&p15(), 1.0, &grid, 10.0).unwrap();
        assert!(r.equiv_holds && r.eps.verdict && r.agree);
        let p2 = OrliczFunction::power(2.0).unwrap();
        let r = theorem_3_3_check(&p2, 1.0, &grid, 10.0).unwrap();
        assert!(!r.equiv_holds && !r.eps.verdict && r.agree);
        let r = theorem_3_3_check(&OrliczFunction::PowerLog, 1.0, &grid, 10.0).unwrap();
        assert!(r.divergent && !r.equiv_holds && r.agree);
    }

    #[test]
    fn uniqueness_examples() {
        let m = p15();
        let f = mfrak_step(&m, 64).unwrap();
        assert_eq!(f.len(), 64);
        assert_relative_eq!(f.total_measure().to_f64(), 1.0, max_relative = 1e-15);
        let grid = Grid::log_uniform(-64.0, -0.25, 256).unwrap();
        let r = uniqueness_check(&m, &f, &grid, 10.0).unwrap();
        assert!(r.constant <= 2.0 && r.verdict, "{r:?}");
        let r3 = uniqueness_check(&m, &f.scaled(LogScalar::from_f64(3.0)).unwrap(), &Grid::dyadic(-64, -1).unwrap(), 10.0).unwrap();
        assert_relative_eq!(r3.constant, 3.0, max_relative = 1e-12);
        let one = StepFunction::probability(&[(1.0, 1.0)]).unwrap();
        let r = uniqueness_check(&m, &one, &Grid::dyadic(-40, -1).unwrap(), 10.0).unwrap();
        assert!(!r.verdict);
    }

    #[test]
    fn power_head_ratio_constant() {
        for q in [1.2, 1.5, 1.9] {
            let m = OrliczFunction::power(q).unwrap();
            let expect = 1.0 / (1.0 - 1.0 / q);
            for lt in [-1.0, -17.0, -300.0] {
                assert_relative_eq!(cesaro_head(&m, 1.0, lt).unwrap(), expect, max_relative = 1e-6);
            }
        }
    }

    proptest! {
        #[test]
        fn constant_symmetric_and_scaled(a in 0.1f64..5.0, b in -3.0f64..3.0, lam in 0.01f64..100.0) {
            let grid = Grid::log_uniform(-30.0, 0.0, 31).unwrap();
            let f = |t: f64| a + t.powf(b.abs()) ;
            let g = |t: f64| 1.0 + t;
            let r1 = equivalence_constant(f, g, &grid, 10.0).unwrap();
            let r2 = equivalence_constant(g, f, &grid, 10.0).unwrap();
            prop_assert_eq!(r1.constant, r2.constant);
            let r3 = equivalence_constant(f, |t| lam * f(t), &grid, 10.0).unwrap();
            let expect = lam.max(1.0 / lam);
            prop_assert!((r3.constant - expect).abs() <= 1e-10 * expect);
        }

        #[test]
        fn rhs_dominates_value(raw in proptest::collection::vec((1u32..64, 1u32..16), 1..8), lt in -12.0f64..-0.01, p in 1.0f64..2.0) {
            let pairs: Vec<(f64, f64)> = raw.iter().map(|&(v, m)| (v as f64, m as f64)).collect();
            let total: f64 = pairs.iter().map(|x| x.1).sum();
            let pairs: Vec<(f64, f64)> = pairs.iter().map(|&(v, m)| (v, m / total)).collect();
            let f = StepFunction::probability(&pairs).unwrap();
            let rhs = rhs_main_cond(&f, p, lt, &q()).unwrap();
            let val = rearrangement_eval(&f, LogScalar::from_log2(lt)).unwrap();
            prop_assert!(val.to_f64() <= rhs.to_f64() * (1.0 + 1e-9));
        }

        #[test]
        fn lp_l2_monotone_in_n(raw in proptest::collection::vec((1u32..64, 1u32..16), 1..6), p in 1.0f64..2.0) {
            let pairs: Vec<(f64, f64)> = raw.iter().map(|&(v, m)| (v as f64 / 8.0, m as f64 / 128.0)).collect();
            let f = StepFunction::probability(&pairs).unwrap();
            let mut prev = LogScalar::ZERO;
            for n in [1u64, 2, 3, 5, 8, 64, 1000] {
                let v = lp_l2_norm(&disjoint_sum(&f, n).unwrap(), p).unwrap();
                prop_assert!(v.to_f64() >= prev.to_f64() * (1.0 - 1e-12));
                prev = v;
            }
        }
    }
}
