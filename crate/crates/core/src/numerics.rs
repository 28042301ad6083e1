//! Log-domain scalars, grids, monotone bisection and quadrature in log2 coordinates.
//!
//! Everything here works with base-2 logarithms so that dyadic data such as
//! `2^(-k - 2^k)` stay exactly representable long after `f64` would underflow.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

pub const LN_2: f64 = std::f64::consts::LN_2;

/// `log2(ln 2)`, the Jacobian of `s = 2^u` in log2 form.
pub(crate) fn log2_ln2() -> f64 {
    LN_2.log2()
}

/// A signed real stored as sign and `log2 |x|`.
///
/// Zero is `sign == 0` with `log2_mag == -inf`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogScalar {
    sign: i8,
    log2_mag: f64,
}

impl LogScalar {
    pub const ZERO: LogScalar = LogScalar {
        sign: 0,
        log2_mag: f64::NEG_INFINITY,
    };
    pub const ONE: LogScalar = LogScalar {
        sign: 1,
        log2_mag: 0.0,
    };

    pub fn new(sign: i8, log2_mag: f64) -> Result<Self> {
        match sign {
            0 if log2_mag == f64::NEG_INFINITY => Ok(Self::ZERO),
            -1 | 1 if log2_mag.is_finite() => Ok(Self { sign, log2_mag }),
            _ => Err(invalid(format!(
                "inconsistent LogScalar sign {sign} with log2 magnitude {log2_mag}"
            ))),
        }
    }

    /// Positive value `2^log2_mag`; `-inf` gives zero.
    pub fn from_log2(log2_mag: f64) -> Self {
        if log2_mag == f64::NEG_INFINITY {
            Self::ZERO
        } else {
            debug_assert!(!log2_mag.is_nan(), "NaN log2 magnitude");
            Self { sign: 1, log2_mag }
        }
    }

    pub fn pow2(k: i64) -> Self {
        Self::from_log2(k as f64)
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            Self {
                sign: if x > 0.0 { 1 } else { -1 },
                log2_mag: x.abs().log2(),
            }
        }
    }

    pub fn to_f64(self) -> f64 {
        match self.sign {
            0 => 0.0,
            s => f64::from(s) * self.log2_mag.exp2(),
        }
    }

    pub fn sign(self) -> i8 {
        self.sign
    }

    pub fn log2_mag(self) -> f64 {
        self.log2_mag
    }

    pub fn is_zero(self) -> bool {
        self.sign == 0
    }

    pub fn is_positive(self) -> bool {
        self.sign > 0
    }

    pub fn abs(self) -> Self {
        Self {
            sign: self.sign.abs(),
            log2_mag: self.log2_mag,
        }
    }

    /// `|x|^r` for `r > 0`, carrying the sign of `x` only when `r == 1`.
    pub fn powf(self, r: f64) -> Self {
        if self.is_zero() {
            return Self::ZERO;
        }
        Self {
            sign: if r == 1.0 { self.sign } else { 1 },
            log2_mag: self.log2_mag * r,
        }
    }

    /// Multiply by `2^k` for real `k`.
    pub fn scale_log2(self, k: f64) -> Self {
        if self.is_zero() {
            self
        } else {
            Self {
                sign: self.sign,
                log2_mag: self.log2_mag + k,
            }
        }
    }


    /// Sign equality plus `|log2 a - log2 b| <= rel * max(1, |log2 a|)`.
    pub fn approx_eq(self, other: Self, rel: f64) -> bool {
        if self.sign != other.sign {
            return false;
        }
        if self.sign == 0 {
            return true;
        }
        let scale = self.log2_mag.abs().max(other.log2_mag.abs()).max(1.0);
        (self.log2_mag - other.log2_mag).abs() <= rel * scale
    }
}

impl Default for LogScalar {
    fn default() -> Self {
        Self::ZERO
    }
}

impl fmt::Display for LogScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            0 => write!(f, "0"),
            1 => write!(f, "2^{}", self.log2_mag),
            _ => write!(f, "-2^{}", self.log2_mag),
        }
    }
}

impl Add for LogScalar {
    type Output = LogScalar;
    fn add(self, rhs: Self) -> Self {
        log_sum(&[self, rhs])
    }
}

impl Sub for LogScalar {
    type Output = LogScalar;
    fn sub(self, rhs: Self) -> Self {
        log_sum(&[self, -rhs])
    }
}

impl Neg for LogScalar {
    type Output = LogScalar;
    fn neg(self) -> Self {
        Self {
            sign: -self.sign,
            log2_mag: self.log2_mag,
        }
    }
}

impl Mul for LogScalar {
    type Output = LogScalar;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::ZERO;
        }
        Self {
            sign: self.sign * rhs.sign,
            log2_mag: self.log2_mag + rhs.log2_mag,
        }
    }
}

impl Div for LogScalar {
    type Output = LogScalar;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "LogScalar division by zero");
        if self.is_zero() {
            return Self::ZERO;
        }
        Self {
            sign: self.sign * rhs.sign,
            log2_mag: self.log2_mag - rhs.log2_mag,
        }
    }
}

impl PartialOrd for LogScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.sign.cmp(&other.sign) {
            Ordering::Equal => match self.sign {
                0 => Some(Ordering::Equal),
                1 => self.log2_mag.partial_cmp(&other.log2_mag),
                _ => other.log2_mag.partial_cmp(&self.log2_mag),
            },
            ord => Some(ord),
        }
    }
}

/// Result of a log-domain sum together with its condition number
/// `sum |x_i| / |sum x_i|` (1 for same-sign terms, `inf` for exact cancellation).
#[derive(Clone, Copy, Debug)]
pub struct LogSum {
    pub value: LogScalar,
    pub condition: f64,
}

pub fn log_sum(terms: &[LogScalar]) -> LogScalar {
    log_sum_with_condition(terms).value
}

/// Max-factored sum: every term is scaled by `2^-max` before a compensated
/// (Neumaier) accumulation.
pub fn log_sum_with_condition(terms: &[LogScalar]) -> LogSum {
    let max = terms
        .iter()
        .filter(|t| !t.is_zero())
        .map(|t| t.log2_mag)
        .fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return LogSum {
            value: LogScalar::ZERO,
            condition: 1.0,
        };
    }
    let mut sum = 0.0_f64;
    let mut comp = 0.0_f64;
    let mut abs_sum = 0.0_f64;
    for t in terms.iter().filter(|t| !t.is_zero()) {
        let x = f64::from(t.sign) * (t.log2_mag - max).exp2();
        abs_sum += x.abs();
        let s = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - s) + x;
        } else {
            comp += (x - s) + sum;
        }
        sum = s;
    }
    let total = sum + comp;
    if total == 0.0 {
        return LogSum {
            value: LogScalar::ZERO,
            condition: f64::INFINITY,
        };
    }
    LogSum {
        value: LogScalar {
            sign: if total > 0.0 { 1 } else { -1 },
            log2_mag: max + total.abs().log2(),
        },
        condition: abs_sum / total.abs(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GridKind {
    Dyadic,
    LogUniform,
    Explicit,
}

/// Strictly increasing positive sample points, stored as their log2.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    log2_points: Vec<f64>,
    kind: GridKind,
}

impl Grid {
    /// Points `2^e` for integer `e` in `lo..=hi`.
    pub fn dyadic(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(invalid(format!("dyadic grid needs lo <= hi, got {lo} > {hi}")));
        }
        Ok(Self {
            log2_points: (lo..=hi).map(|e| e as f64).collect(),
            kind: GridKind::Dyadic,
        })
    }

    /// `n >= 2` points equally spaced in log2 between the two endpoints.
    pub fn log_uniform(log2_lo: f64, log2_hi: f64, n: usize) -> Result<Self> {
        if n < 2 || !(log2_lo < log2_hi) || !log2_lo.is_finite() || !log2_hi.is_finite() {
            return Err(invalid(format!(
                "log-uniform grid needs n >= 2 and finite lo < hi (n = {n}, lo = {log2_lo}, hi = {log2_hi})"
            )));
        }
        let step = (log2_hi - log2_lo) / (n - 1) as f64;
        let mut pts: Vec<f64> = (0..n).map(|i| log2_lo + step * i as f64).collect();
        pts[n - 1] = log2_hi;
        Ok(Self {
            log2_points: pts,
            kind: GridKind::LogUniform,
        })
    }

    pub fn explicit(log2_points: Vec<f64>) -> Result<Self> {
        if log2_points.is_empty() {
            return Err(Error::EmptyGrid);
        }
        if log2_points.iter().any(|x| !x.is_finite()) {
            return Err(invalid("grid points must be finite"));
        }
        if log2_points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid("grid points must be strictly increasing"));
        }
        Ok(Self {
            log2_points,
            kind: GridKind::Explicit,
        })
    }

    pub fn log2_points(&self) -> &[f64] {
        &self.log2_points
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        self.log2_points.iter().map(|l| l.exp2())
    }

    pub fn kind(&self) -> GridKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.log2_points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.log2_points.is_empty()
    }

    pub fn log2_min(&self) -> Option<f64> {
        self.log2_points.first().copied()
    }

    pub fn log2_max(&self) -> Option<f64> {
        self.log2_points.last().copied()
    }

    /// Keep the points with `log2_lo <= log2 t <= log2_hi`. May be empty.
    pub fn restrict(&self, log2_lo: f64, log2_hi: f64) -> Self {
        Self {
            log2_points: self
                .log2_points
                .iter()
                .copied()
                .filter(|&l| l >= log2_lo && l <= log2_hi)
                .collect(),
            kind: self.kind,
        }
    }

    pub fn descriptor(&self) -> String {
        let name = match self.kind {
            GridKind::Dyadic => "dyadic",
            GridKind::LogUniform => "log-uniform",
            GridKind::Explicit => "explicit",
        };
        match (self.log2_min(), self.log2_max()) {
            (Some(lo), Some(hi)) => format!("{name}[2^{lo}, 2^{hi}; {} points]", self.len()),
            _ => format!("{name}[empty]"),
        }
    }
}

/// Solve `g(x) = target` for `g` continuous and monotone (either direction) on `bracket`.
///
/// Stops once the bracket is narrower than `tol * max(1, |x|)` and
/// `|g(x) - target| <= tol`, or when the bracket cannot shrink any further.
pub fn bisect_monotone<G>(mut g: G, target: f64, bracket: (f64, f64), tol: f64) -> Result<f64>
where
    G: FnMut(f64) -> f64,
{
    let (mut lo, mut hi) = bracket;
    if !(lo < hi) || !(tol > 0.0) {
        return Err(invalid(format!(
            "bisection needs lo < hi and tol > 0 (got [{lo}, {hi}], tol = {tol})"
        )));
    }
    let mut eval = |x: f64| -> Result<f64> {
        let v = g(x);
        if v.is_finite() {
            Ok(v - target)
        } else {
            Err(Error::NonFinite { at: x })
        }
    };
    let f_lo = eval(lo)?;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    let f_hi = eval(hi)?;
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if (f_lo < 0.0) == (f_hi < 0.0) {
        return Err(Error::BracketDoesNotStraddle {
            lo,
            hi,
            g_lo: f_lo + target,
            g_hi: f_hi + target,
            target,
        });
    }
    let increasing = f_lo < 0.0;
    let (mut r_lo, mut r_hi) = (f_lo, f_hi);
    // 2100 halvings exhaust any finite f64 interval.
    for _ in 0..2100 {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = eval(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == increasing {
            lo = mid;
            r_lo = fm;
        } else {
            hi = mid;
            r_hi = fm;
        }
        if hi - lo <= tol * mid.abs().max(1.0) && fm.abs() <= tol {
            return Ok(mid);
        }
    }
    Ok(if r_lo.abs() <= r_hi.abs() { lo } else { hi })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadConfig {
    /// Relative tolerance between successive Romberg diagonals.
    pub rel_tol: f64,
    pub min_level: u32,
    pub max_level: u32,
    /// Panel width in log2 units for the composite rule.
    pub panel_width: f64,
    /// Largest number of binary decades a head integral may extend below `t`.
    pub head_span_limit: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-8,
            min_level: 4,
            max_level: 20,
            panel_width: 4.0,
            head_span_limit: (1u64 << 20) as f64,
        }
    }
}

impl QuadConfig {
    pub fn with_tol(rel_tol: f64) -> Self {
        Self {
            rel_tol,
            ..Self::default()
        }
    }
}

/// Romberg integration of `2^lg(u)` over `[ua, ub]`.
///
/// Converged when successive diagonal entries differ by at most
/// `max(rel_tol * |R|, abs_tol)`.
pub fn romberg_log2<F>(
    lg: &mut F,
    ua: f64,
    ub: f64,
    cfg: &QuadConfig,
    abs_tol: LogScalar,
) -> Result<LogScalar>
where
    F: FnMut(f64) -> Result<f64>,
{
    if ua == ub {
        return Ok(LogScalar::ZERO);
    }
    if !(ua < ub) {
        return Err(invalid(format!("romberg needs ua < ub, got [{ua}, {ub}]")));
    }
    let mut checked = |u: f64| -> Result<f64> {
        let v = lg(u)?;
        if v.is_nan() || v == f64::INFINITY {
            Err(Error::NonFinite { at: u })
        } else {
            Ok(v)
        }
    };
    let la = checked(ua)?;
    let lb = checked(ub)?;
    let lm = checked(0.5 * (ua + ub))?;
    let mut scale = la.max(lb).max(lm);
    if scale == f64::NEG_INFINITY {
        scale = 0.0;
    }
    let abs_scaled = if abs_tol.is_zero() {
        0.0
    } else {
        (abs_tol.log2_mag() - scale).exp2()
    };
    let h0 = ub - ua;
    let mut prev_row = vec![0.5 * h0 * ((la - scale).exp2() + (lb - scale).exp2())];
    for level in 1..=cfg.max_level {
        let n_new = 1u64 << (level - 1);
        let h = h0 / (1u64 << level) as f64;
        let mut acc = 0.0;
        for i in 0..n_new {
            let u = ua + (2 * i + 1) as f64 * h;
            let v = (checked(u)? - scale).exp2();
            if !v.is_finite() {
                return Err(Error::NonFinite { at: u });
            }
            acc += v;
        }
        let mut row = Vec::with_capacity(level as usize + 1);
        row.push(0.5 * prev_row[0] + h * acc);
        let mut factor = 1.0;
        for j in 1..=level as usize {
            factor *= 4.0;
            let r = row[j - 1] + (row[j - 1] - prev_row[j - 1]) / (factor - 1.0);
            row.push(r);
        }
        let cur = row[level as usize];
        let prev = prev_row[level as usize - 1];
        if level >= cfg.min_level && (cur - prev).abs() <= (cfg.rel_tol * cur.abs()).max(abs_scaled) {
            return Ok(LogScalar::from_f64(cur).scale_log2(scale));
        }
        prev_row = row;
    }
    Err(Error::NonConvergence {
        lo: ua,
        hi: ub,
        levels: cfg.max_level,
    })
}

/// Composite Romberg over uniform panels of width `cfg.panel_width` covering `[ua, ub]`.
pub fn integrate_log2<F>(mut lg: F, ua: f64, ub: f64, cfg: &QuadConfig) -> Result<LogScalar>
where
    F: FnMut(f64) -> Result<f64>,
{
    if ua == ub {
        return Ok(LogScalar::ZERO);
    }
    if !(ua < ub) || !ua.is_finite() || !ub.is_finite() {
        return Err(invalid(format!("integration range [{ua}, {ub}] is invalid")));
    }
    let panels = ((ub - ua) / cfg.panel_width).ceil().max(1.0) as u64;
    let width = (ub - ua) / panels as f64;
    let mut parts = Vec::with_capacity(panels as usize);
    for i in 0..panels {
        let a = ua + width * i as f64;
        let b = if i + 1 == panels { ub } else { ua + width * (i + 1) as f64 };
        parts.push(romberg_log2(&mut lg, a, b, cfg, LogScalar::ZERO)?);
    }
    Ok(log_sum(&parts))
}

/// Outcome of integrating `2^lg(u)` over `(-inf, ub]`.
#[derive(Clone, Copy, Debug)]
pub struct HeadIntegral {
    pub value: LogScalar,
    pub converged: bool,
    /// Binary decades covered below `ub`.
    pub span: f64,
}

/// Integrate `2^lg(u)` over `(-inf, ub]` with doubling panels `[ub - 2w, ub - w]`.
///
/// Convergence requires the latest panel to be below `rel_tol` of the total and at
/// most half the previous panel; integrands decaying like `1/|u|` never satisfy this
/// and are reported as not converged once `head_span_limit` decades are covered.
/// With `floor = Some(f)` the integral is truncated at `u = f` instead.
pub fn head_integral_log2<F>(
    mut lg: F,
    ub: f64,
    floor: Option<f64>,
    cfg: &QuadConfig,
) -> Result<HeadIntegral>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut width = cfg.panel_width;
    let first_lo = match floor {
        Some(f) => (ub - width).max(f),
        None => ub - width,
    };
    let mut total = integrate_log2(&mut lg, first_lo, ub, cfg)?;
    let mut lo = first_lo;
    let mut prev_piece = total;
    loop {
        if let Some(f) = floor {
            if lo <= f {
                return Ok(HeadIntegral {
                    value: total,
                    converged: true,
                    span: ub - lo,
                });
            }
        } else if ub - lo >= cfg.head_span_limit {
            return Ok(HeadIntegral {
                value: total,
                converged: false,
                span: ub - lo,
            });
        }
        let mut next_lo = lo - width;
        if let Some(f) = floor {
            next_lo = next_lo.max(f);
        }
        let abs = if total.is_zero() {
            LogScalar::ZERO
        } else {
            LogScalar::from_f64(cfg.rel_tol * 1e-2).scale_log2(total.log2_mag())
        };
        let piece = romberg_log2(&mut lg, next_lo, lo, cfg, abs)?;
        total = total + piece;
        lo = next_lo;
        width *= 2.0;
        if floor.is_none() {
            let small = piece <= LogScalar::from_f64(cfg.rel_tol) * total;
            let decaying = piece <= prev_piece.scale_log2(-1.0);
            if small && decaying {
                return Ok(HeadIntegral {
                    value: total,
                    converged: true,
                    span: ub - lo,
                });
            }
        }
        prev_piece = piece;
    }
}

/// `∫_a^b g(s) ds` for positive `g`, via the substitution `s = 2^u`.
pub fn quad_log<G>(mut g: G, a: f64, b: f64, tol: f64) -> Result<f64>
where
    G: FnMut(f64) -> f64,
{
    if !(a > 0.0) || !(a < b) {
        return Err(invalid(format!("quad_log needs 0 < a < b, got [{a}, {b}]")));
    }
    let cfg = QuadConfig::with_tol(tol);
    let jac = log2_ln2();
    let v = integrate_log2(
        |u| {
            let s = u.exp2();
            let gv = g(s);
            if gv < 0.0 || gv.is_nan() {
                return Err(Error::NonPositive { log2_t: u, value: gv });
            }
            Ok(gv.log2() + u + jac)
        },
        a.log2(),
        b.log2(),
        &cfg,
    )?;
    Ok(v.to_f64())
}

/// Least-squares line `y = a + b x`; returns `(a, b, max |residual|)`.
pub fn least_squares(xs: &[f64], ys: &[f64]) -> Option<(f64, f64, f64)> {
    let n = xs.len();
    if n < 2 || n != ys.len() {
        return None;
    }
    let nf = n as f64;
    let mx = xs.iter().sum::<f64>() / nf;
    let my = ys.iter().sum::<f64>() / nf;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let resid = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (y - intercept - slope * x).abs())
        .fold(0.0, f64::max);
    Some((intercept, slope, resid))
}
