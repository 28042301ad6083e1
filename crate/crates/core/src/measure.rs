//! Finite step functions stored as their own decreasing rearrangement.
//!
//! A [`StepFunction`] is a list of `(value, measure)` atoms sorted by strictly
//! decreasing value. Atom `i` occupies the interval
//! `[cumulative[i-1], cumulative[i])` of the rearrangement; past the last atom the
//! function is zero up to the ambient measure.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::numerics::{log_sum, Grid, LogScalar};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Ambient {
    Finite(LogScalar),
    /// The half line `(0, inf)`, where disjoint sums live.
    Unbounded,
}

impl Ambient {
    pub fn unit() -> Self {
        Ambient::Finite(LogScalar::ONE)
    }

    fn admits(&self, s: LogScalar) -> bool {
        match self {
            Ambient::Finite(a) => s <= *a,
            Ambient::Unbounded => true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Atom {
    pub value: LogScalar,
    pub measure: LogScalar,
}

#[derive(Clone, Debug)]
pub struct StepFunction {
    atoms: Vec<Atom>,
    cumulative: Vec<LogScalar>,
    total: LogScalar,
    ambient: Ambient,
    // Exact f64 cumulative measures, kept when every partial sum is exact.
    linear_cum: Option<Vec<f64>>,
}

fn exact_sum(a: f64, b: f64) -> Option<f64> {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (err == 0.0 && s.is_finite()).then_some(s)
}

fn exact_product(a: f64, b: f64) -> Option<f64> {
    let p = a * b;
    (p.is_finite() && p != 0.0 && a.mul_add(b, -p) == 0.0).then_some(p)
}

/// Exact `f64` for an integral power of two inside the normal range.
fn dyadic_linear(x: LogScalar) -> Option<f64> {
    let l = x.log2_mag();
    (x.is_positive() && l.fract() == 0.0 && (-1022.0..=1023.0).contains(&l)).then(|| l.exp2())
}

struct RawAtom {
    value: LogScalar,
    measure: LogScalar,
    linear: Option<f64>,
}

impl StepFunction {
    fn build(mut raw: Vec<RawAtom>, ambient: Ambient) -> Result<Self> {
        for a in &raw {
            if a.measure.sign() < 0 {
                return Err(Error::NegativeMeasure(a.measure.to_f64()));
            }
            if a.value.sign() < 0 {
                return Err(invalid(format!(
                    "step function values must be non-negative, got {}",
                    a.value
                )));
            }
        }
        raw.retain(|a| !a.measure.is_zero() && !a.value.is_zero());
        raw.sort_by(|a, b| b.value.partial_cmp(&a.value).expect("ordered values"));

        let mut merged: Vec<RawAtom> = Vec::with_capacity(raw.len());
        for a in raw {
            match merged.last_mut() {
                Some(last) if last.value == a.value => {
                    last.measure = last.measure + a.measure;
                    last.linear = match (last.linear, a.linear) {
                        (Some(x), Some(y)) => exact_sum(x, y),
                        _ => None,
                    };
                }
                _ => merged.push(a),
            }
        }

        let mut cumulative = Vec::with_capacity(merged.len());
        let mut linear_cum = Some(Vec::with_capacity(merged.len()));
        let mut running = LogScalar::ZERO;
        let mut running_lin = 0.0;
        for a in &merged {
            running = running + a.measure;
            cumulative.push(running);
            linear_cum = match (linear_cum, a.linear) {
                (Some(mut v), Some(m)) => match exact_sum(running_lin, m) {
                    Some(s) => {
                        running_lin = s;
                        v.push(s);
                        Some(v)
                    }
                    None => None,
                },
                _ => None,
            };
        }
        let total = running;
        if let Ambient::Finite(amb) = ambient {
            if total.log2_mag() > amb.log2_mag() + 1e-12 * amb.log2_mag().abs().max(1.0) {
                return Err(invalid(format!(
                    "total measure {total} exceeds the ambient measure {amb}"
                )));
            }
        }
        Ok(Self {
            atoms: merged
                .into_iter()
                .map(|a| Atom {
                    value: a.value,
                    measure: a.measure,
                })
                .collect(),
            cumulative,
            total,
            ambient,
            linear_cum,
        })
    }

    /// Step function on `(0, 1)` from `(value, measure)` pairs.
    pub fn probability(pairs: &[(f64, f64)]) -> Result<Self> {
        normalize_f64(pairs, Ambient::unit())
    }

    /// Step function on the half line from `(value, measure)` pairs.
    pub fn half_line(pairs: &[(f64, f64)]) -> Result<Self> {
        normalize_f64(pairs, Ambient::Unbounded)
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn total_measure(&self) -> LogScalar {
        self.total
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn cumulative(&self) -> &[LogScalar] {
        &self.cumulative
    }

    /// Largest value (the essential supremum), zero for the empty function.
    pub fn top_value(&self) -> LogScalar {
        self.atoms.first().map_or(LogScalar::ZERO, |a| a.value)
    }

    /// Multiply every value by `factor > 0`.
    pub fn scaled(&self, factor: LogScalar) -> Result<Self> {
        if !factor.is_positive() {
            return Err(invalid("scale factor must be positive"));
        }
        let mut out = self.clone();
        for a in &mut out.atoms {
            a.value = a.value * factor;
        }
        Ok(out)
    }

    /// Same atoms viewed on a different ambient interval.
    pub fn with_ambient(&self, ambient: Ambient) -> Result<Self> {
        if !ambient.admits(self.total) {
            return Err(invalid("ambient measure smaller than total measure"));
        }
        let mut out = self.clone();
        out.ambient = ambient;
        Ok(out)
    }

    fn index_at(&self, s: LogScalar) -> usize {
        if let (Some(lin), Some(s_lin)) = (&self.linear_cum, dyadic_linear(s)) {
            return lin.partition_point(|&c| c <= s_lin);
        }
        self.cumulative.partition_point(|c| *c <= s)
    }

    fn check_position(&self, s: LogScalar) -> Result<()> {
        let inside = s.is_positive()
            && match self.ambient {
                Ambient::Finite(a) => s < a,
                Ambient::Unbounded => true,
            };
        if inside {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                value: s.to_f64(),
                range: "0 < s < ambient measure".into(),
            })
        }
    }
}

/// Sort by decreasing value, merge equal values and drop zero values.
pub fn normalize(atoms: Vec<(LogScalar, LogScalar)>, ambient: Ambient) -> Result<StepFunction> {
    StepFunction::build(
        atoms
            .into_iter()
            .map(|(value, measure)| RawAtom {
                value,
                measure,
                linear: dyadic_linear(measure),
            })
            .collect(),
        ambient,
    )
}

/// As [`normalize`], from plain `(value, measure)` pairs. Dyadic measures keep an
/// exact linear shadow so boundary comparisons are exact.
pub fn normalize_f64(pairs: &[(f64, f64)], ambient: Ambient) -> Result<StepFunction> {
    for &(v, m) in pairs {
        if !v.is_finite() || !m.is_finite() {
            return Err(invalid("step function data must be finite"));
        }
        if m < 0.0 {
            return Err(Error::NegativeMeasure(m));
        }
    }
    StepFunction::build(
        pairs
            .iter()
            .map(|&(v, m)| RawAtom {
                value: LogScalar::from_f64(v),
                measure: LogScalar::from_f64(m),
                linear: (m > 0.0).then_some(m),
            })
            .collect(),
        ambient,
    )
}

/// `n_f(tau)`: total measure of atoms with value `> tau`.
pub fn distribution(f: &StepFunction, tau: LogScalar) -> LogScalar {
    let count = f.atoms.partition_point(|a| a.value > tau);
    if count == 0 {
        LogScalar::ZERO
    } else {
        f.cumulative[count - 1]
    }
}

/// `f*(s) = inf { t : n_f(t) <= s }`, right-continuous.
pub fn rearrangement_eval(f: &StepFunction, s: LogScalar) -> Result<LogScalar> {
    f.check_position(s)?;
    let i = f.index_at(s);
    Ok(f.atoms.get(i).map_or(LogScalar::ZERO, |a| a.value))
}

/// [`rearrangement_eval`] at a plain `f64` position, compared exactly against the
/// linear cumulative measures when those are available.
pub fn rearrangement_eval_f64(f: &StepFunction, s: f64) -> Result<LogScalar> {
    let s_log = LogScalar::from_f64(s);
    f.check_position(s_log)?;
    let i = match &f.linear_cum {
        Some(lin) => lin.partition_point(|&c| c <= s),
        None => f.cumulative.partition_point(|c| *c <= s_log),
    };
    Ok(f.atoms.get(i).map_or(LogScalar::ZERO, |a| a.value))
}

/// `sum_k f_bar_k` for `n` disjoint translates: every measure times `n`, on the half line.
pub fn disjoint_sum(f: &StepFunction, n: u64) -> Result<StepFunction> {
    if n == 0 {
        return Err(invalid("disjoint_sum needs n >= 1"));
    }
    if n == 1 {
        return Ok(f.clone());
    }
    let ln = (n as f64).log2();
    let atoms = f
        .atoms
        .iter()
        .map(|a| Atom {
            value: a.value,
            measure: a.measure.scale_log2(ln),
        })
        .collect();
    let cumulative = f.cumulative.iter().map(|c| c.scale_log2(ln)).collect();
    let linear_cum = f.linear_cum.as_ref().and_then(|lin| {
        lin.iter()
            .map(|&c| exact_product(c, n as f64))
            .collect::<Option<Vec<_>>>()
    });
    Ok(StepFunction {
        atoms,
        cumulative,
        total: f.total.scale_log2(ln),
        ambient: Ambient::Unbounded,
        linear_cum,
    })
}

/// Disjoint placement of the pieces on the half line, rearranged.
pub fn disjoint_union(parts: &[StepFunction]) -> Result<StepFunction> {
    normalize(
        parts
            .iter()
            .flat_map(|p| p.atoms.iter().map(|a| (a.value, a.measure)))
            .collect(),
        Ambient::Unbounded,
    )
}

/// `sum_i value_i^r * |atom_i ∩ [a, b]|`, computed exactly atom by atom.
pub fn power_integral(f: &StepFunction, r: f64, a: LogScalar, b: LogScalar) -> Result<LogScalar> {
    if !(r > 0.0) {
        return Err(invalid(format!("power must be positive, got {r}")));
    }
    if a.sign() < 0 || !(a < b) || !f.ambient.admits(b) {
        return Err(Error::OutOfRange {
            value: b.to_f64(),
            range: format!("need 0 <= a < b <= ambient, got a = {a}, b = {b}"),
        });
    }
    let mut terms = Vec::new();
    let mut left = LogScalar::ZERO;
    for (atom, &right) in f.atoms.iter().zip(&f.cumulative) {
        if right <= a {
            left = right;
            continue;
        }
        if left >= b {
            break;
        }
        let overlap = if a <= left && right <= b {
            atom.measure
        } else {
            let lo = if a > left { a } else { left };
            let hi = if b < right { b } else { right };
            hi - lo
        };
        if overlap.is_positive() {
            terms.push(atom.value.powf(r) * overlap);
        }
        left = right;
    }
    Ok(log_sum(&terms))
}

/// Identical atom lists after normalization, up to relative `1e-12` in log2.
pub fn equimeasurable(f: &StepFunction, g: &StepFunction) -> bool {
    f.atoms.len() == g.atoms.len()
        && f.atoms.iter().zip(&g.atoms).all(|(x, y)| {
            x.value.approx_eq(y.value, 1e-12) && x.measure.approx_eq(y.measure, 1e-12)
        })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DistributionWitness {
    pub log2_tau: f64,
    /// `"f-over-g"` when `n_f(C tau) > C n_g(tau)`, else `"g-over-f"`.
    pub direction: String,
    pub log2_lhs: f64,
    pub log2_rhs: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DistributionEquivReport {
    pub pass: bool,
    pub log2_c: f64,
    pub grid_descriptor: String,
    pub witness: Option<DistributionWitness>,
}

/// Check `n_f(C tau) <= C n_g(tau)` and `n_g(C tau) <= C n_f(tau)` on the grid.
pub fn distribution_equiv_test(
    f: &StepFunction,
    g: &StepFunction,
    c: LogScalar,
    tau_grid: &Grid,
) -> Result<DistributionEquivReport> {
    if !(c >= LogScalar::ONE) {
        return Err(invalid(format!("constant must be >= 1, got {c}")));
    }
    if tau_grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let mut witness = None;
    'grid: for &lt in tau_grid.log2_points() {
        let tau = LogScalar::from_log2(lt);
        for (x, y, direction) in [(f, g, "f-over-g"), (g, f, "g-over-f")] {
            let lhs = distribution(x, tau * c);
            let rhs = distribution(y, tau) * c;
            if lhs > rhs {
                witness = Some(DistributionWitness {
                    log2_tau: lt,
                    direction: direction.into(),
                    log2_lhs: lhs.log2_mag(),
                    log2_rhs: rhs.log2_mag(),
                });
                break 'grid;
            }
        }
    }
    Ok(DistributionEquivReport {
        pass: witness.is_none(),
        log2_c: c.log2_mag(),
        grid_descriptor: tau_grid.descriptor(),
        witness,
    })
}

#[derive(Serialize, Deserialize)]
struct AtomRow {
    log2_value: f64,
    log2_measure: f64,
}

/// Write `log2_value,log2_measure` rows in decreasing-value order.
pub fn write_csv<W: Write>(f: &StepFunction, writer: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    for a in &f.atoms {
        w.serialize(AtomRow {
            log2_value: a.value.log2_mag(),
            log2_measure: a.measure.log2_mag(),
        })?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(reader: R, ambient: Ambient) -> Result<StepFunction> {
    let mut rdr = csv::Reader::from_reader(reader);
    let mut atoms = Vec::new();
    for row in rdr.deserialize() {
        let row: AtomRow = row?;
        if !row.log2_value.is_finite() || !row.log2_measure.is_finite() {
            return Err(invalid("step function rows must be finite log2 values"));
        }
        atoms.push((
            LogScalar::from_log2(row.log2_value),
            LogScalar::from_log2(row.log2_measure),
        ));
    }
    normalize(atoms, ambient)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn two_level() -> StepFunction {
        StepFunction::probability(&[(2.0, 0.5), (1.0, 0.5)]).unwrap()
    }

    fn x3() -> StepFunction {
        normalize(
            (1..=3)
                .map(|k: i64| (LogScalar::pow2(1 << k), LogScalar::pow2(-k - (1 << k))))
                .collect(),
            Ambient::unit(),
        )
        .unwrap()
    }

    fn f64s(f: &StepFunction) -> Vec<(f64, f64)> {
        f.atoms()
            .iter()
            .map(|a| (a.value.to_f64(), a.measure.to_f64()))
            .collect()
    }

    #[test]
    fn normalize_examples() {
        let f = StepFunction::probability(&[(1.0, 0.5), (2.0, 0.5)]).unwrap();
        assert_eq!(f64s(&f), vec![(2.0, 0.5), (1.0, 0.5)]);
        let f = StepFunction::probability(&[(2.0, 0.25), (2.0, 0.25)]).unwrap();
        assert_eq!(f64s(&f), vec![(2.0, 0.5)]);
        let f = normalize(
            vec![
                (LogScalar::pow2(2), LogScalar::pow2(-3)),
                (LogScalar::pow2(4), LogScalar::pow2(-6)),
            ],
            Ambient::unit(),
        )
        .unwrap();
        assert_eq!(f64s(&f), vec![(16.0, 2f64.powi(-6)), (4.0, 0.125)]);
        assert!(matches!(
            StepFunction::probability(&[(1.0, -0.5)]),
            Err(Error::NegativeMeasure(_))
        ));
        let dropped = StepFunction::probability(&[(0.0, 0.5), (3.0, 0.25)]).unwrap();
        assert_eq!(dropped.len(), 1);
        assert!(StepFunction::probability(&[(1.0, 0.75), (2.0, 0.5)]).is_err());
    }

    #[test]
    fn distribution_examples() {
        let f = two_level();
        assert_eq!(distribution(&f, LogScalar::from_f64(1.5)).to_f64(), 0.5);
        assert!(distribution(&f, LogScalar::from_f64(3.0)).is_zero());
        assert_relative_eq!(
            distribution(&x3(), LogScalar::ONE).to_f64(),
            0.14111328125,
            max_relative = 1e-14
        );
    }

    #[test]
    fn rearrangement_examples() {
        let f = two_level();
        assert_eq!(rearrangement_eval(&f, LogScalar::from_f64(0.25)).unwrap().to_f64(), 2.0);
        assert_eq!(rearrangement_eval(&f, LogScalar::from_f64(0.75)).unwrap().to_f64(), 1.0);
        // Right-continuity at the boundary.
        assert_eq!(rearrangement_eval(&f, LogScalar::from_f64(0.5)).unwrap().to_f64(), 1.0);
        // Cumulative measures 2^-11, 2^-11 + 2^-6, ... so 2^-4 falls in the third atom.
        assert_eq!(rearrangement_eval(&x3(), LogScalar::pow2(-4)).unwrap().to_f64(), 4.0);
        assert_eq!(rearrangement_eval(&x3(), LogScalar::pow2(-7)).unwrap().to_f64(), 16.0);
        assert!(rearrangement_eval(&f, LogScalar::ONE).is_err());
        assert!(rearrangement_eval(&f, LogScalar::ZERO).is_err());
    }

    #[test]
    fn disjoint_sum_examples() {
        let f = two_level();
        assert_eq!(f64s(&disjoint_sum(&f, 1).unwrap()), f64s(&f));
        let g = disjoint_sum(&StepFunction::probability(&[(2.0, 0.5)]).unwrap(), 2).unwrap();
        assert_eq!(f64s(&g), vec![(2.0, 1.0)]);
        let g = disjoint_sum(&f, 4).unwrap();
        assert_eq!(f64s(&g), vec![(2.0, 2.0), (1.0, 2.0)]);
        assert_eq!(rearrangement_eval(&g, LogScalar::ONE).unwrap().to_f64(), 2.0);
        assert!(disjoint_sum(&f, 0).is_err());
    }

    #[test]
    fn power_integral_examples() {
        let f = two_level();
        let v = power_integral(&f, 2.0, LogScalar::ZERO, LogScalar::ONE).unwrap();
        assert_relative_eq!(v.to_f64(), 2.5, max_relative = 1e-15);
        let v = power_integral(&f, 1.0, LogScalar::ZERO, LogScalar::from_f64(0.25)).unwrap();
        assert_relative_eq!(v.to_f64(), 0.5, max_relative = 1e-15);
        // Each x-atom contributes 2^(2^k) * 2^(-k-2^k) = 2^-k.
        let x = x3();
        let v = power_integral(&x, 1.0, LogScalar::ZERO, x.total_measure()).unwrap();
        assert_relative_eq!(v.to_f64(), 0.875, max_relative = 1e-14);
        assert!(power_integral(&f, 1.0, LogScalar::ONE, LogScalar::from_f64(0.5)).is_err());
        assert!(power_integral(&f, 1.0, LogScalar::ZERO, LogScalar::from_f64(2.0)).is_err());
    }

    #[test]
    fn equimeasurable_examples() {
        let f = two_level();
        assert!(equimeasurable(&f, &f));
        assert!(!equimeasurable(&f, &f.scaled(LogScalar::from_f64(2.0)).unwrap()));
        let y3 = normalize(
            (1..=3)
                .map(|k: i64| (LogScalar::pow2(2 << (2 * k)), LogScalar::pow2(-2 * (k + (1 << (2 * k))))))
                .collect(),
            Ambient::unit(),
        )
        .unwrap();
        assert!(!equimeasurable(&x3(), &y3));
        assert_ne!(
            distribution(&x3(), LogScalar::pow2(8)),
            distribution(&y3, LogScalar::pow2(8))
        );
    }

    #[test]
    fn distribution_equiv_examples() {
        let grid = Grid::log_uniform(-4.0, 4.0, 33).unwrap();
        let f = two_level();
        assert!(distribution_equiv_test(&f, &f, LogScalar::ONE, &grid).unwrap().pass);
        let a = StepFunction::probability(&[(2.0, 0.5)]).unwrap();
        let b = StepFunction::probability(&[(4.0, 0.5)]).unwrap();
        // Step levels at tau in {1, 2, 4}; the finer grid visits each side of them.
        let fine = Grid::log_uniform(-3.0, 3.0, 97).unwrap();
        assert!(distribution_equiv_test(&a, &b, LogScalar::from_f64(2.0), &fine).unwrap().pass);
        assert!(!distribution_equiv_test(&a, &b, LogScalar::ONE, &fine).unwrap().pass);
        assert!(distribution_equiv_test(&a, &b, LogScalar::from_f64(0.5), &fine).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let f = x3();
        let mut buf = Vec::new();
        write_csv(&f, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("log2_value,log2_measure\n8.0,-11.0\n"));
        let g = read_csv(&buf[..], Ambient::unit()).unwrap();
        assert!(equimeasurable(&f, &g));
    }

    fn arb_step() -> impl Strategy<Value = StepFunction> {
        proptest::collection::vec((1u32..64, 1u32..16), 1..8).prop_map(|raw| {
            // Dyadic values k/8 and measures m/256, scaled into (0, 1].
            let pairs: Vec<(f64, f64)> = raw
                .iter()
                .map(|&(v, m)| (v as f64 / 8.0, m as f64 / 256.0))
                .collect();
            StepFunction::probability(&pairs).unwrap()
        })
    }

    proptest! {
        #[test]
        fn duality_at_atom_boundaries(f in arb_step()) {
            for a in f.atoms() {
                let n = distribution(&f, a.value);
                if n.is_positive() && n < LogScalar::ONE {
                    prop_assert!(rearrangement_eval(&f, n).unwrap() <= a.value);
                }
            }
        }

        #[test]
        fn power_integral_additive(f in arb_step(), r in 1.0f64..3.0, a in 0.0f64..0.3, b in 0.3f64..0.6, c in 0.6f64..1.0) {
            let (a, b, c) = (LogScalar::from_f64(a), LogScalar::from_f64(b), LogScalar::from_f64(c));
            let ab = power_integral(&f, r, a, b).unwrap();
            let bc = power_integral(&f, r, b, c).unwrap();
            let ac = power_integral(&f, r, a, c).unwrap();
            let sum = ab + bc;
            if ac.is_zero() {
                prop_assert!(sum.is_zero() || sum.to_f64() < 1e-300);
            } else {
                prop_assert!(((sum.to_f64() - ac.to_f64()) / ac.to_f64()).abs() <= 1e-12);
            }
        }

        #[test]
        fn disjoint_sum_scales_total(f in arb_step(), n in 1u64..1000) {
            let g = disjoint_sum(&f, n).unwrap();
            prop_assert_eq!(g.len(), f.len());
            for (x, y) in f.atoms().iter().zip(g.atoms()) {
                prop_assert_eq!(x.value, y.value);
            }
            let ratio = g.total_measure().to_f64() / f.total_measure().to_f64();
            prop_assert!((ratio - n as f64).abs() <= 1e-12 * n as f64);
        }

        #[test]
        fn distribution_non_increasing(f in arb_step()) {
            let grid = Grid::log_uniform(-5.0, 4.0, 200).unwrap();
            let vals: Vec<LogScalar> = grid.log2_points().iter().map(|&l| distribution(&f, LogScalar::from_log2(l))).collect();
            prop_assert!(vals.windows(2).all(|w| w[1] <= w[0]));
        }

        #[test]
        fn equimeasurable_is_equivalence(f in arb_step(), g in arb_step()) {
            prop_assert!(equimeasurable(&f, &f));
            prop_assert_eq!(equimeasurable(&f, &g), equimeasurable(&g, &f));
            let h = f.clone();
            if equimeasurable(&f, &g) {
                prop_assert!(equimeasurable(&g, &h));
            }
        }
    }
}
