//! Orlicz functions, their inverses and `m(t) = 1 / M^{-1}(t)`.
//!
//! Every family is evaluated in log2 coordinates: `log2_eval(u)` returns
//! `log2 M(2^u)`, so arguments such as `t = 2^-4096` stay representable.

use std::io::Read;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::counterexample::induced_log2;
use crate::error::{invalid, Error, Result};
use crate::measure::StepFunction;
use crate::numerics::{bisect_monotone, least_squares, Grid, LN_2};

/// Piecewise power interpolation of a table in log-log coordinates.
#[derive(Clone, Debug)]
pub struct Tabulated {
    log2_t: Vec<f64>,
    log2_m: Vec<f64>,
    slopes: Vec<f64>,
}

impl Tabulated {
    pub fn new(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.len() < 2 {
            return Err(invalid("a tabulated Orlicz function needs at least two rows"));
        }
        if points.iter().any(|(a, b)| !a.is_finite() || !b.is_finite()) {
            return Err(invalid("tabulated rows must be finite"));
        }
        let (log2_t, log2_m): (Vec<f64>, Vec<f64>) = points.into_iter().unzip();
        for i in 1..log2_t.len() {
            if !(log2_t[i] > log2_t[i - 1]) || !(log2_m[i] > log2_m[i - 1]) {
                return Err(invalid(format!(
                    "tabulated rows must be strictly increasing in both columns (row {i})"
                )));
            }
        }
        let slopes: Vec<f64> = (1..log2_t.len())
            .map(|i| (log2_m[i] - log2_m[i - 1]) / (log2_t[i] - log2_t[i - 1]))
            .collect();
        if let Some(s) = slopes.iter().find(|&&s| s < 1.0 - 1e-9) {
            return Err(invalid(format!(
                "log-log slope {s} < 1: M(t)/t must be non-decreasing for a convex M"
            )));
        }
        let tab = Self {
            log2_t,
            log2_m,
            slopes,
        };
        let lo = tab.log2_t[0];
        let hi = *tab.log2_t.last().expect("non-empty");
        if !(lo <= 0.0 && 0.0 <= hi) {
            return Err(invalid("tabulated range must contain t = 1"));
        }
        let at_one = tab.log2_eval(0.0);
        if at_one.abs() > 1e-9 {
            return Err(invalid(format!(
                "tabulated function is not normalized: log2 M(1) = {at_one}"
            )));
        }
        tab.check_convex()?;
        Ok(tab)
    }

    pub fn from_csv<R: Read>(reader: R) -> Result<Self> {
        #[derive(Deserialize)]
        struct Row {
            log2_t: f64,
            #[serde(rename = "log2_M")]
            log2_m: f64,
        }
        let mut rdr = csv::Reader::from_reader(reader);
        let mut pts = Vec::new();
        for row in rdr.deserialize() {
            let r: Row = row?;
            pts.push((r.log2_t, r.log2_m));
        }
        Self::new(pts)
    }

    fn check_convex(&self) -> Result<()> {
        let n = self.log2_t.len();
        for i in 1..n - 1 {
            let (t0, t1, t2) = (
                self.log2_t[i - 1].exp2(),
                self.log2_t[i].exp2(),
                self.log2_t[i + 1].exp2(),
            );
            let (m0, m1, m2) = (
                self.log2_m[i - 1].exp2(),
                self.log2_m[i].exp2(),
                self.log2_m[i + 1].exp2(),
            );
            let chord = m0 + (m2 - m0) * (t1 - t0) / (t2 - t0);
            if m1 > chord + 1e-9 * m2 {
                return Err(invalid(format!(
                    "tabulated function is not convex at log2 t = {}",
                    self.log2_t[i]
                )));
            }
        }
        Ok(())
    }

    fn segment(&self, u: f64) -> usize {
        let i = self.log2_t.partition_point(|&x| x <= u);
        i.clamp(1, self.log2_t.len() - 1) - 1
    }

    pub fn log2_hi(&self) -> f64 {
        *self.log2_t.last().expect("non-empty")
    }

    /// Below the first row the first segment is extended toward zero.
    fn log2_eval(&self, u: f64) -> f64 {
        let i = self.segment(u);
        self.log2_m[i] + self.slopes[i] * (u - self.log2_t[i])
    }

    fn log2_inverse(&self, ly: f64) -> f64 {
        let j = self.log2_m.partition_point(|&x| x <= ly);
        let i = j.clamp(1, self.log2_m.len() - 1) - 1;
        self.log2_t[i] + (ly - self.log2_m[i]) / self.slopes[i]
    }

    fn derivatives(&self, u: f64) -> Result<(f64, f64, f64)> {
        let i = self.segment(u);
        let neighbours = [i.checked_sub(1), Some(i + 1)];
        for j in neighbours.into_iter().flatten() {
            if j < self.slopes.len() && (self.slopes[j] - self.slopes[i]).abs() > 0.01 {
                return Err(Error::DerivativeUnavailable {
                    u: u.exp2(),
                    reason: format!(
                        "adjacent log-log slopes {} and {} differ by more than 0.01",
                        self.slopes[i], self.slopes[j]
                    ),
                });
            }
        }
        let s = self.slopes[i];
        let t = u.exp2();
        let m = self.log2_eval(u).exp2();
        Ok((m, s * m / t, s * (s - 1.0) * m / (t * t)))
    }
}

/// `Σ N(t v_i) μ_i / M_raw(1)` for a step function source.
#[derive(Clone, Debug)]
pub struct Induced {
    source: StepFunction,
    log2_norm: f64,
}

impl Induced {
    pub fn new(source: StepFunction) -> Result<Self> {
        if source.is_empty() {
            return Err(invalid("induced Orlicz function needs a non-zero source"));
        }
        let log2_norm = induced_log2(&source, 0.0);
        Ok(Self { source, log2_norm })
    }

    pub fn source(&self) -> &StepFunction {
        &self.source
    }

    /// `log2` of the unnormalized value at `t = 1`.
    pub fn log2_norm(&self) -> f64 {
        self.log2_norm
    }
}

#[derive(Clone, Debug)]
pub enum OrliczFunction {
    Power(f64),
    /// `t / (1 + ln(1/t))` on `(0, 1]`.
    PowerLog,
    Induced(Arc<Induced>),
    Tabulated(Arc<Tabulated>),
}

impl OrliczFunction {
    pub fn power(q: f64) -> Result<Self> {
        if !(q >= 1.0) || !q.is_finite() {
            return Err(invalid(format!("power exponent must be >= 1, got {q}")));
        }
        Ok(Self::Power(q))
    }

    pub fn induced(source: StepFunction) -> Result<Self> {
        Ok(Self::Induced(Arc::new(Induced::new(source)?)))
    }

    pub fn tabulated(points: Vec<(f64, f64)>) -> Result<Self> {
        Ok(Self::Tabulated(Arc::new(Tabulated::new(points)?)))
    }

    pub fn tabulated_csv<R: Read>(reader: R) -> Result<Self> {
        Ok(Self::Tabulated(Arc::new(Tabulated::from_csv(reader)?)))
    }

    pub fn describe(&self) -> String {
        match self {
            Self::Power(q) => format!("power(q={q})"),
            Self::PowerLog => "powerlog".into(),
            Self::Induced(i) => format!("induced({} atoms)", i.source.len()),
            Self::Tabulated(t) => format!("tabulated({} rows)", t.log2_t.len()),
        }
    }

    /// `log2` of the largest admissible `t` (`inf` when unbounded).
    pub fn log2_domain_hi(&self) -> f64 {
        match self {
            Self::Power(_) => f64::INFINITY,
            Self::PowerLog | Self::Induced(_) => 0.0,
            Self::Tabulated(t) => t.log2_hi(),
        }
    }

    /// `log2 M(domain_hi)`, the upper end of the domain of `m`.
    pub fn log2_range_hi(&self) -> f64 {
        match self {
            Self::Power(_) => f64::INFINITY,
            Self::PowerLog | Self::Induced(_) => 0.0,
            Self::Tabulated(t) => *t.log2_m.last().expect("non-empty"),
        }
    }

    fn check_arg(&self, u: f64) -> Result<()> {
        if u.is_nan() || u == f64::INFINITY || u > self.log2_domain_hi() {
            return Err(Error::OutOfDomain {
                arg: "t",
                value: u.exp2(),
                domain: format!("(0, 2^{}]", self.log2_domain_hi()),
            });
        }
        Ok(())
    }

    /// `log2 M(2^u)`.
    pub fn log2_eval(&self, u: f64) -> Result<f64> {
        self.check_arg(u)?;
        if u == f64::NEG_INFINITY {
            return Ok(f64::NEG_INFINITY);
        }
        Ok(match self {
            Self::Power(q) => q * u,
            Self::PowerLog => u - (1.0 - u * LN_2).log2(),
            Self::Induced(i) => induced_log2(&i.source, u) - i.log2_norm,
            Self::Tabulated(t) => t.log2_eval(u),
        })
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        if !(t > 0.0) {
            return Err(Error::OutOfDomain {
                arg: "t",
                value: t,
                domain: "t > 0".into(),
            });
        }
        Ok(self.log2_eval(t.log2())?.exp2())
    }

    /// `log2 M^{-1}(2^ly)`.
    pub fn log2_inverse(&self, ly: f64) -> Result<f64> {
        if ly.is_nan() || ly == f64::INFINITY || ly > self.log2_range_hi() {
            return Err(Error::OutOfRange {
                value: ly.exp2(),
                range: format!("(0, 2^{}]", self.log2_range_hi()),
            });
        }
        if ly == f64::NEG_INFINITY {
            return Ok(f64::NEG_INFINITY);
        }
        match self {
            Self::Power(q) => Ok(ly / q),
            Self::PowerLog => Ok(powerlog_inverse(ly)),
            Self::Tabulated(t) => Ok(t.log2_inverse(ly)),
            Self::Induced(_) => {
                if ly == 0.0 {
                    return Ok(0.0);
                }
                // Normalized and convex gives t^2 <= M(t) <= t on (0, 1], so the root
                // lies in [ly, ly / 2].
                let mut failure = None;
                let u = bisect_monotone(
                    |u| match self.log2_eval(u) {
                        Ok(v) => v,
                        Err(e) => {
                            failure = Some(e);
                            f64::NAN
                        }
                    },
                    ly,
                    (ly, 0.5 * ly),
                    1e-14,
                );
                match (u, failure) {
                    (_, Some(e)) => Err(e),
                    (u, None) => u,
                }
            }
        }
    }

    pub fn inverse(&self, y: f64) -> Result<f64> {
        if !(y > 0.0) {
            return Err(Error::OutOfRange {
                value: y,
                range: "y > 0".into(),
            });
        }
        Ok(self.log2_inverse(y.log2())?.exp2())
    }

    /// `log2 m(2^lt)` with `m(t) = 1 / M^{-1}(t)`.
    pub fn log2_mfrak(&self, lt: f64) -> Result<f64> {
        Ok(-self.log2_inverse(lt)?)
    }

    pub fn mfrak(&self, t: f64) -> Result<f64> {
        Ok(1.0 / self.inverse(t)?)
    }

    /// `(M(t), M'(t), M''(t))` at `t = 2^u`.
    pub fn derivatives(&self, u: f64) -> Result<(f64, f64, f64)> {
        self.check_arg(u)?;
        let t = u.exp2();
        match self {
            Self::Power(q) => Ok((
                t.powf(*q),
                q * t.powf(q - 1.0),
                q * (q - 1.0) * t.powf(q - 2.0),
            )),
            Self::PowerLog => {
                let l = -u * LN_2;
                Ok((
                    t / (1.0 + l),
                    (2.0 + l) / ((1.0 + l) * (1.0 + l)),
                    (3.0 + l) / (t * (1.0 + l).powi(3)),
                ))
            }
            Self::Induced(i) => {
                let mut d = (0.0, 0.0, 0.0);
                for a in i.source.atoms() {
                    let v = a.value.to_f64();
                    let mu = a.measure.to_f64();
                    let s = t * v;
                    if s < 1.0 {
                        d.0 += s * s * mu;
                        d.1 += 2.0 * s * v * mu;
                        d.2 += 2.0 * v * v * mu;
                    } else {
                        d.0 += (2.0 * s - 1.0) * mu;
                        d.1 += 2.0 * v * mu;
                    }
                }
                let norm = i.log2_norm.exp2();
                Ok((d.0 / norm, d.1 / norm, d.2 / norm))
            }
            Self::Tabulated(tab) => tab.derivatives(u),
        }
    }
}

/// Newton iteration for `u - log2(1 - u ln 2) = ly`; the map is increasing and
/// convex with slope in `(1, 2]`, and the iterates stay in `u <= 0`.
fn powerlog_inverse(ly: f64) -> f64 {
    let mut u = ly;
    for _ in 0..200 {
        let w = 1.0 - u * LN_2;
        let f = u - w.log2() - ly;
        let df = 1.0 + 1.0 / w;
        let next = (u - f / df).min(0.0);
        if (next - u).abs() <= 4.0 * f64::EPSILON * u.abs().max(1.0) {
            return next;
        }
        u = next;
    }
    u
}

/// Evaluation view of `m(t) = 1 / M^{-1}(t)` on `(0, M(domain_hi)]`.
#[derive(Clone, Debug)]
pub struct MfrakView {
    pub source: OrliczFunction,
}

impl MfrakView {
    pub fn new(source: OrliczFunction) -> Self {
        Self { source }
    }

    pub fn log2_eval(&self, lt: f64) -> Result<f64> {
        self.source.log2_mfrak(lt)
    }
}

/// `S(u) = -2p M(u) + (p+1) u M'(u) - u^2 M''(u)`.
pub fn s_function(m: &OrliczFunction, p: f64, u: f64) -> Result<f64> {
    if !(u > 0.0) {
        return Err(Error::OutOfDomain {
            arg: "u",
            value: u,
            domain: "u > 0".into(),
        });
    }
    let (mv, d1, d2) = m.derivatives(u.log2())?;
    Ok(-2.0 * p * mv + (p + 1.0) * u * d1 - u * u * d2)
}

/// Luxemburg norm `inf { rho > 0 : Σ M(|a_k| / rho) <= 1 }`.
///
/// For a normalized convex `M` the root lies in `[max |a_k|, Σ |a_k|]`, where every
/// argument stays in `(0, 1]`.
pub fn luxemburg_seq(m: &OrliczFunction, a: &[f64], tol: f64) -> Result<f64> {
    if a.iter().any(|x| !x.is_finite()) {
        return Err(invalid("sequence entries must be finite"));
    }
    let mut mags: Vec<f64> = a.iter().map(|x| x.abs()).filter(|&x| x > 0.0).collect();
    if mags.is_empty() {
        return Ok(0.0);
    }
    if m.log2_domain_hi() < 0.0 {
        return Err(Error::DomainViolation(
            "the Orlicz function must be defined on (0, 1]".into(),
        ));
    }
    mags.sort_by(|x, y| y.partial_cmp(x).expect("finite"));
    let mut groups: Vec<(f64, f64)> = Vec::new();
    for x in mags {
        match groups.last_mut() {
            Some((v, c)) if *v == x => *c += 1.0,
            _ => groups.push((x, 1.0)),
        }
    }
    let lmax = groups[0].0.log2();
    let l1: f64 = groups.iter().map(|(v, c)| v * c).sum::<f64>().log2();
    if l1 - lmax <= 1e-15 * lmax.abs().max(1.0) {
        return Ok(groups[0].0);
    }
    let logs: Vec<(f64, f64)> = groups.iter().map(|&(v, c)| (v.log2(), c)).collect();
    let mut failure = None;
    let r = bisect_monotone(
        |r| {
            let mut s = 0.0;
            for &(lv, c) in &logs {
                match m.log2_eval((lv - r).min(0.0)) {
                    Ok(x) => s += c * x.exp2(),
                    Err(e) => {
                        failure = Some(e);
                        return f64::NAN;
                    }
                }
            }
            s
        },
        1.0,
        (lmax, l1),
        tol,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(r?.exp2())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Extremum {
    Max,
    Min,
}

/// `log2` of the max (or min) over grid `t` of `M(s t) / M(t)`.
pub fn log2_dilation(m: &OrliczFunction, log2_s: f64, grid: &Grid, which: Extremum) -> Result<f64> {
    if grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let mut best: Option<f64> = None;
    for &lt in grid.log2_points() {
        let r = m.log2_eval(lt + log2_s)? - m.log2_eval(lt)?;
        best = Some(match (best, which) {
            (None, _) => r,
            (Some(b), Extremum::Max) => b.max(r),
            (Some(b), Extremum::Min) => b.min(r),
        });
    }
    Ok(best.expect("non-empty grid"))
}

/// `max_t M(s t) / M(t)` over the grid.
pub fn dilation_sup(m: &OrliczFunction, s: f64, grid: &Grid) -> Result<f64> {
    if !(s > 0.0) {
        return Err(invalid(format!("dilation factor must be positive, got {s}")));
    }
    Ok(log2_dilation(m, s.log2(), grid, Extremum::Max)?.exp2())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DilationCase {
    /// `N max m^r(N t) / m^r(t)`.
    Expand,
    /// `(1/N) max m^r(t/N) / m^r(t)`.
    Shrink,
}

/// The two quantities that tend to zero under the improved convexity/concavity.
pub fn mfrak_dilation(
    m: &OrliczFunction,
    r: f64,
    n: u64,
    grid: &Grid,
    case: DilationCase,
) -> Result<f64> {
    if !(r > 0.0) || n == 0 {
        return Err(invalid("mfrak_dilation needs r > 0 and N >= 1"));
    }
    let ln = (n as f64).log2();
    let top = m.log2_range_hi();
    let cap = match case {
        DilationCase::Expand => top - ln,
        DilationCase::Shrink => top,
    };
    let admissible = grid.restrict(f64::NEG_INFINITY, cap);
    if admissible.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let mut best = f64::NEG_INFINITY;
    for &lt in admissible.log2_points() {
        let shifted = match case {
            DilationCase::Expand => lt + ln,
            DilationCase::Shrink => lt - ln,
        };
        best = best.max(r * (m.log2_mfrak(shifted)? - m.log2_mfrak(lt)?));
    }
    let prefactor = match case {
        DilationCase::Expand => ln,
        DilationCase::Shrink => -ln,
    };
    Ok((prefactor + best).exp2())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LargeN {
    pub n: u64,
    pub expand: f64,
    pub shrink: f64,
}

/// Smallest dyadic `N <= 2^max_log2_n` with
/// `N sup m^2(Nt)/m^2(t) <= 1/(8 C^2 C1^2)` and
/// `(1/N) sup m^p(t/N)/m^p(t) <= 1/(2^(p+1) C1^p C^p)`.
pub fn large_n(
    m: &OrliczFunction,
    p: f64,
    c: f64,
    c1: f64,
    grid: &Grid,
    max_log2_n: u32,
) -> Result<Option<LargeN>> {
    let first = 1.0 / (8.0 * c * c * c1 * c1);
    let second = 1.0 / (2f64.powf(p + 1.0) * (c1 * c).powf(p));
    for j in 1..=max_log2_n.min(62) {
        let n = 1u64 << j;
        let expand = mfrak_dilation(m, 2.0, n, grid, DilationCase::Expand)?;
        let shrink = mfrak_dilation(m, p, n, grid, DilationCase::Shrink)?;
        if expand <= first && shrink <= second {
            return Ok(Some(LargeN { n, expand, shrink }));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExponentEstimates {
    /// Least-squares slope of `log2 max_t M(st)/M(t)` against `log2 s`.
    pub alpha_lower: f64,
    /// Least-squares slope of `log2 min_t M(st)/M(t)` against `log2 s`.
    pub beta_upper: f64,
    pub alpha_residual: f64,
    pub beta_residual: f64,
    /// Largest `p` with `M(st) <= cap s^p M(t)` on the grid.
    pub alpha_capped: f64,
    /// Smallest `q` with `s^q M(t) <= cap M(st)` on the grid.
    pub beta_capped: f64,
    pub cap: f64,
    pub grid_descriptor: String,
}

/// `log2 s` and the `log2` max/min dilation for every grid `s < 1`.
fn dilation_profile(m: &OrliczFunction, grid: &Grid) -> Result<(Vec<f64>, Vec<f64>, Vec<f64>)> {
    let ts = grid.restrict(f64::NEG_INFINITY, m.log2_domain_hi());
    if ts.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let base: Vec<f64> = ts
        .log2_points()
        .iter()
        .map(|&lt| m.log2_eval(lt))
        .collect::<Result<_>>()?;
    let mut ls = Vec::new();
    let mut up = Vec::new();
    let mut down = Vec::new();
    for &s in grid.log2_points().iter().filter(|&&s| s < 0.0) {
        let mut hi = f64::NEG_INFINITY;
        let mut lo = f64::INFINITY;
        for (&lt, &b) in ts.log2_points().iter().zip(&base) {
            let r = m.log2_eval(lt + s)? - b;
            hi = hi.max(r);
            lo = lo.min(r);
        }
        ls.push(s);
        up.push(hi);
        down.push(lo);
    }
    Ok((ls, up, down))
}

const MIN_DECADES_LOG2: f64 = 6.0 * std::f64::consts::LOG2_10;

pub fn exponent_estimates(m: &OrliczFunction, grid: &Grid) -> Result<ExponentEstimates> {
    exponent_estimates_with_cap(m, grid, 10.0)
}

pub fn exponent_estimates_with_cap(
    m: &OrliczFunction,
    grid: &Grid,
    cap: f64,
) -> Result<ExponentEstimates> {
    let (lo, hi) = match (grid.log2_min(), grid.log2_max()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::EmptyGrid),
    };
    if hi - lo < MIN_DECADES_LOG2 - 1e-9 {
        return Err(invalid(format!(
            "exponent estimation needs a grid spanning six decades, got 2^{lo}..2^{hi}"
        )));
    }
    let (ls, up, down) = dilation_profile(m, grid)?;
    let (_, alpha, ares) =
        least_squares(&ls, &up).ok_or_else(|| invalid("too few dilation samples"))?;
    let (_, beta, bres) =
        least_squares(&ls, &down).ok_or_else(|| invalid("too few dilation samples"))?;
    let lc = cap.log2();
    let alpha_capped = ls
        .iter()
        .zip(&up)
        .map(|(&s, &d)| (lc - d) / -s)
        .fold(f64::INFINITY, f64::min);
    let beta_capped = ls
        .iter()
        .zip(&down)
        .map(|(&s, &d)| (d + lc) / s)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(ExponentEstimates {
        alpha_lower: alpha,
        beta_upper: beta,
        alpha_residual: ares,
        beta_residual: bres,
        alpha_capped,
        beta_capped,
        cap,
        grid_descriptor: grid.descriptor(),
    })
}

/// Best constant in `M(st) <= C s^p M(t)` over the grid (`s < 1`).
pub fn convexity_constant(m: &OrliczFunction, p: f64, grid: &Grid) -> Result<f64> {
    let (ls, up, _) = dilation_profile(m, grid)?;
    Ok(ls
        .iter()
        .zip(&up)
        .map(|(&s, &d)| d - p * s)
        .fold(f64::NEG_INFINITY, f64::max)
        .exp2())
}

/// Best constant in `s^q M(t) <= C M(st)` over the grid (`s < 1`).
pub fn concavity_constant(m: &OrliczFunction, q: f64, grid: &Grid) -> Result<f64> {
    let (ls, _, down) = dilation_profile(m, grid)?;
    Ok(ls
        .iter()
        .zip(&down)
        .map(|(&s, &d)| q * s - d)
        .fold(f64::NEG_INFINITY, f64::max)
        .exp2())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EpsilonMargin {
    pub eps_convex: f64,
    pub eps_concave: f64,
    pub margin: f64,
    pub verdict: bool,
    pub estimates: ExponentEstimates,
}

pub const DEFAULT_MARGIN: f64 = 0.02;

pub fn epsilon_margin(m: &OrliczFunction, p: f64, grid: &Grid) -> Result<EpsilonMargin> {
    epsilon_margin_with(m, p, grid, DEFAULT_MARGIN)
}

pub fn epsilon_margin_with(
    m: &OrliczFunction,
    p: f64,
    grid: &Grid,
    margin: f64,
) -> Result<EpsilonMargin> {
    if !(1.0..2.0).contains(&p) {
        return Err(invalid(format!("p must lie in [1, 2), got {p}")));
    }
    let est = exponent_estimates(m, grid)?;
    let eps_convex = est.alpha_lower - p;
    let eps_concave = 2.0 - est.beta_upper;
    Ok(EpsilonMargin {
        eps_convex,
        eps_concave,
        margin,
        verdict: eps_convex > margin && eps_concave > margin,
        estimates: est,
    })
}

/// Worst midpoint-convexity excess `M(mid) - (M(a) + M(b))/2` relative to `M(b)`
/// over all pairs of grid points.
pub fn midpoint_convexity_excess(m: &OrliczFunction, grid: &Grid) -> Result<f64> {
    let ts: Vec<f64> = grid
        .restrict(f64::NEG_INFINITY, m.log2_domain_hi())
        .points()
        .collect();
    let mut worst = f64::NEG_INFINITY;
    for (i, &a) in ts.iter().enumerate() {
        for &b in &ts[i + 1..] {
            let mid = m.eval(0.5 * (a + b))?;
            let (ma, mb) = (m.eval(a)?, m.eval(b)?);
            worst = worst.max((mid - 0.5 * (ma + mb)) / mb);
        }
    }
    Ok(worst)
}
