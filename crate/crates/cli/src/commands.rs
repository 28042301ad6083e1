use std::fs::File;
use std::path::Path;

use anyhow::Context;
use serde::Serialize;

use orlicz_lab::analysis::{
    cesaro_head, cesaro_head_truncated, cesaro_tail, check_main_f_cond, equivalence_constant_log2,
    mfrak_step, stabilization, theorem_3_3_check, EquivalenceReport,
};
use orlicz_lab::counterexample::{
    find_nonequiv_witness, verify_lemma51, verify_prop53, CounterexampleConfig, Series as Seq,
};
use orlicz_lab::measure::read_csv;
use orlicz_lab::montecarlo::{empirical_lp_norm, rosenthal_ratio, CoefficientScheme, SimConfig};
use orlicz_lab::orlicz::epsilon_margin_with;
use orlicz_lab::{Ambient, Error, Grid, LogScalar, MfrakView, OrliczFunction, StepFunction};

use crate::chart::Series;
use crate::output::Run;
use crate::{
    usage, CesaroArgs, Command, CounterexampleCommand, EquivalenceArgs, Family, FamilyArgs, IndicesArgs,
    InducedArgs, Lemma51Args, MainCondArgs, Prop53Args, RosenthalArgs, SchemeArg, SeriesArg, SimulateArgs,
    Theorem33Args, WitnessArgs,
};

pub fn dispatch(cmd: Command) -> anyhow::Result<bool> {
    match cmd {
        Command::Indices(a) => indices(a),
        Command::Equivalence(a) => equivalence(a),
        Command::Cesaro(a) => cesaro(a),
        Command::MainCond(a) => main_cond(a),
        Command::Theorem33(a) => theorem33(a),
        Command::Counterexample(c) => match c {
            CounterexampleCommand::Lemma51(a) => lemma51(a),
            CounterexampleCommand::Witness(a) => witness(a),
            CounterexampleCommand::Induced(a) => induced(a),
            CounterexampleCommand::Prop53(a) => prop53(a),
        },
        Command::Simulate(a) => simulate(a),
        Command::Rosenthal(a) => rosenthal(a),
    }
}

/// Any admissible configuration with `k` terms.
fn series_config(k: u32) -> anyhow::Result<CounterexampleConfig> {
    if !(3..=500).contains(&k) {
        return Err(usage(format!("k must lie in [3, 500], got {k}")));
    }
    Ok(CounterexampleConfig::new(k, f64::from(k - 2).exp2())?)
}

fn family(kind: Family, q: Option<f64>, table: Option<&Path>, k: u32) -> anyhow::Result<OrliczFunction> {
    let built = match kind {
        Family::Power => {
            let q = q.ok_or_else(|| usage("--family power needs --q"))?;
            OrliczFunction::power(q)
        }
        Family::Powerlog => Ok(OrliczFunction::PowerLog),
        Family::Tabulated => {
            let path = table.ok_or_else(|| usage("--family tabulated needs --table"))?;
            let file = File::open(path).map_err(|e| usage(format!("cannot open {}: {e}", path.display())))?;
            OrliczFunction::tabulated_csv(file)
        }
        Family::InducedX => OrliczFunction::induced(Seq::X.build_closed(&series_config(k)?)),
        Family::InducedY => OrliczFunction::induced(Seq::Y.build_closed(&series_config(k)?)),
    };
    built.map_err(|e| usage(e.to_string()))
}

fn build(f: &FamilyArgs) -> anyhow::Result<OrliczFunction> {
    family(f.family, f.q, f.table.as_deref(), f.k)
}

fn grid(lo: i64, hi: i64) -> anyhow::Result<Grid> {
    Grid::dyadic(lo, hi).map_err(|e| usage(e.to_string()))
}

fn series_of(s: SeriesArg) -> Seq {
    match s {
        SeriesArg::X => Seq::X,
        SeriesArg::Y => Seq::Y,
    }
}

fn read_rearrangement(path: &Path) -> anyhow::Result<StepFunction> {
    let file = File::open(path).map_err(|e| usage(format!("cannot open {}: {e}", path.display())))?;
    read_csv(file, Ambient::unit()).with_context(|| format!("reading {}", path.display()))
}

#[derive(Serialize)]
struct Labelled<'a, T: Serialize> {
    family: String,
    p: f64,
    #[serde(flatten)]
    report: &'a T,
}

fn indices(a: IndicesArgs) -> anyhow::Result<bool> {
    let m = build(&a.family)?;
    let g = grid(a.log2_lo, a.log2_hi)?;
    let r = epsilon_margin_with(&m, a.p, &g, a.margin)?;
    let mut run = Run::create("indices", &a, 0, &a.common)?;
    run.json("indices.json", &Labelled { family: m.describe(), p: a.p, report: &r })?;
    let summary = format!(
        "{} p={}: eps_convex={:.4} eps_concave={:.4}",
        m.describe(),
        a.p,
        r.eps_convex,
        r.eps_concave
    );
    run.finish(r.verdict, &summary)
}

#[derive(Serialize)]
struct PointRow {
    log2_t: f64,
    log2_lhs: f64,
    log2_rhs: f64,
}

fn ratio_rows<F, G>(g: &Grid, mut lf: F, mut lg: G) -> anyhow::Result<Vec<PointRow>>
where
    F: FnMut(f64) -> orlicz_lab::Result<f64>,
    G: FnMut(f64) -> orlicz_lab::Result<f64>,
{
    g.log2_points()
        .iter()
        .map(|&u| {
            Ok(PointRow {
                log2_t: u,
                log2_lhs: lf(u)?,
                log2_rhs: lg(u)?,
            })
        })
        .collect()
}

fn ratio_chart(rows: &[PointRow], label: &str) -> Vec<Series> {
    vec![Series::new(
        label,
        rows.iter().map(|r| (r.log2_t, r.log2_lhs - r.log2_rhs)).collect(),
    )]
}

fn equivalence(a: EquivalenceArgs) -> anyhow::Result<bool> {
    let m = build(&a.family)?;
    let n = family(a.against, a.against_q, a.family.table.as_deref(), a.family.k)?;
    let g = grid(a.log2_lo, a.log2_hi)?;
    let r = equivalence_constant_log2(|u| m.log2_eval(u), |u| n.log2_eval(u), &g, a.cap)?;
    let rows = ratio_rows(&g, |u| m.log2_eval(u), |u| n.log2_eval(u))?;
    #[derive(Serialize)]
    struct Out<'a> {
        lhs: String,
        rhs: String,
        #[serde(flatten)]
        report: &'a EquivalenceReport,
    }
    let mut run = Run::create("equivalence", &a, 0, &a.common)?;
    run.json("equivalence.json", &Out { lhs: m.describe(), rhs: n.describe(), report: &r })?;
    run.csv("equivalence.csv", &rows)?;
    let title = format!("log2 {}/{} against log2 t", m.describe(), n.describe());
    run.chart("equivalence.svg", &title, &ratio_chart(&rows, "log2 ratio"))?;
    run.finish(r.verdict, &format!("constant {:.6}", r.constant))
}

#[derive(Serialize)]
struct CesaroRow {
    log2_t: f64,
    head: Option<f64>,
    tail: f64,
    bound: Option<f64>,
    divergent: bool,
}

fn cesaro(a: CesaroArgs) -> anyhow::Result<bool> {
    let m = build(&a.family)?;
    let g = match a.log2_t {
        Some(t) => Grid::explicit(vec![t]).map_err(|e| usage(e.to_string()))?,
        None => grid(a.log2_lo, a.log2_hi)?,
    };
    let mut rows = Vec::new();
    for &lt in g.log2_points() {
        let head = match a.log2_floor {
            Some(fl) => Some(cesaro_head_truncated(&m, a.p, lt, fl)?),
            None => match cesaro_head(&m, a.p, lt) {
                Ok(h) => Some(h),
                Err(Error::Divergent { .. }) => None,
                Err(e) => return Err(e.into()),
            },
        };
        let tail = cesaro_tail(&m, 2.0, lt)?;
        rows.push(CesaroRow {
            log2_t: lt,
            head,
            tail,
            bound: head.map(|h| h.powf(1.0 / a.p) + tail.sqrt()),
            divergent: head.is_none(),
        });
    }
    let worst = rows
        .iter()
        .map(|r| r.bound.unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max);
    let pass = worst <= a.cap;
    let mut run = Run::create("cesaro", &a, 0, &a.common)?;
    run.csv("cesaro.csv", &rows)?;
    let finite: Vec<(f64, f64)> = rows.iter().filter_map(|r| r.head.map(|h| (r.log2_t, h))).collect();
    if !finite.is_empty() {
        let tails = rows.iter().map(|r| (r.log2_t, r.tail)).collect();
        run.chart(
            "cesaro.svg",
            &format!("Cesàro ratios of m for {}", m.describe()),
            &[Series::new("head", finite), Series::new("tail (q = 2)", tails)],
        )?;
    }
    let divergent = rows.iter().filter(|r| r.divergent).count();
    run.finish(pass, &format!("worst head^(1/p) + tail^(1/2) = {worst:.6}, {divergent} divergent"))
}

fn main_cond(a: MainCondArgs) -> anyhow::Result<bool> {
    let m = build(&a.family)?;
    let g = grid(a.log2_lo, a.log2_hi)?;
    let r = match &a.rearrangement {
        Some(path) => check_main_f_cond(&m, &read_rearrangement(path)?, a.p, &g, a.cap)?,
        None => check_main_f_cond(&m, &MfrakView::new(m.clone()), a.p, &g, a.cap)?,
    };
    let mut run = Run::create("main-cond", &a, 0, &a.common)?;
    run.json("main-cond.json", &Labelled { family: m.describe(), p: a.p, report: &r })?;
    run.finish(r.verdict, &format!("constant {:.6}", r.constant))
}

fn theorem33(a: Theorem33Args) -> anyhow::Result<bool> {
    let m = build(&a.family)?;
    let g = grid(a.log2_lo, a.log2_hi)?;
    let r = theorem_3_3_check(&m, a.p, &g, a.cap)?;
    let mut run = Run::create("theorem33", &a, 0, &a.common)?;
    run.json("theorem33.json", &r)?;
    let summary = format!(
        "{} p={}: main condition {}, margin {}",
        r.family, r.p, r.equiv_holds, r.eps.verdict
    );
    run.finish(r.agree, &summary)
}

fn lemma51(a: Lemma51Args) -> anyhow::Result<bool> {
    if a.max_log < 3 {
        return Err(usage("--max-log must be at least 3"));
    }
    let l_max = a.max_log as f64;
    let cfg = match a.k {
        Some(k) => CounterexampleConfig::new(k, l_max),
        None => CounterexampleConfig::for_l_max(l_max),
    }
    .map_err(|e| usage(e.to_string()))?;
    let ls: Vec<f64> = (3..=a.max_log).map(|l| l as f64).collect();
    let series = series_of(a.series);
    let r = verify_lemma51(series, &cfg, &ls)?;
    #[derive(Serialize)]
    struct Summary {
        series: Seq,
        k: u32,
        c_lower: f64,
        c_upper: f64,
        lower: f64,
        upper: f64,
        all_pass: bool,
    }
    let (c_lo, c_hi) = orlicz_lab::counterexample::lemma51_bounds(series);
    let mut run = Run::create("counterexample lemma51", &a, 0, &a.common)?;
    run.csv("lemma51.csv", &r.rows)?;
    run.json(
        "lemma51.json",
        &Summary {
            series,
            k: r.k,
            c_lower: r.c_lower,
            c_upper: r.c_upper,
            lower: c_lo,
            upper: c_hi,
            all_pass: r.all_pass,
        },
    )?;
    let scaled = r.rows.iter().map(|row| (row.l, row.integral * row.l)).collect();
    let ends = |c: f64| vec![(3.0, c), (l_max, c)];
    run.chart(
        "lemma51.svg",
        &format!("L times the minimum integral for {}", series.name()),
        &[
            Series::new("integral * L", scaled),
            Series::new("lower", ends(c_lo)),
            Series::new("upper", ends(c_hi)),
        ],
    )?;
    let summary = format!(
        "{} L values, integral * L in [{:.4}, {:.4}]",
        r.rows.len(),
        r.c_lower,
        r.c_upper
    );
    run.finish(r.all_pass, &summary)
}

fn witness(a: WitnessArgs) -> anyhow::Result<bool> {
    let cfg = series_config(a.k)?;
    let ws = a
        .log2_c
        .iter()
        .map(|&lc| find_nonequiv_witness(LogScalar::pow2(lc), &cfg))
        .collect::<orlicz_lab::Result<Vec<_>>>()?;
    let pass = ws.iter().all(|w| w.verified);
    let mut run = Run::create("counterexample witness", &a, 0, &a.common)?;
    run.csv("witness.csv", &ws)?;
    run.json("witness.json", &ws)?;
    let n = ws.iter().filter(|w| w.verified).count();
    run.finish(pass, &format!("{n} of {} witnesses verified", ws.len()))
}

fn induced(a: InducedArgs) -> anyhow::Result<bool> {
    if a.wide_lo > a.log2_lo {
        return Err(usage("--wide-lo must not exceed --log2-lo"));
    }
    let series = series_of(a.series);
    let m = OrliczFunction::induced(series.build_closed(&series_config(a.k)?))?;
    let pl = OrliczFunction::PowerLog;
    let narrow_grid = grid(a.log2_lo, a.log2_hi)?;
    let wide_grid = grid(a.wide_lo, a.log2_hi)?;
    let narrow = equivalence_constant_log2(|u| m.log2_eval(u), |u| pl.log2_eval(u), &narrow_grid, f64::INFINITY)?;
    let wide = equivalence_constant_log2(|u| m.log2_eval(u), |u| pl.log2_eval(u), &wide_grid, f64::INFINITY)?;
    let growth = stabilization(&narrow, &wide);
    let pass = narrow.constant.is_finite() && wide.constant.is_finite() && growth < a.max_growth;
    #[derive(Serialize)]
    struct Out {
        series: Seq,
        narrow: EquivalenceReport,
        wide: EquivalenceReport,
        growth: f64,
        verdict: bool,
    }
    let rows = ratio_rows(&wide_grid, |u| m.log2_eval(u), |u| pl.log2_eval(u))?;
    let mut run = Run::create("counterexample induced", &a, 0, &a.common)?;
    run.csv("induced.csv", &rows)?;
    let summary = format!(
        "constant {:.4} -> {:.4}, growth {:.2}%",
        narrow.constant,
        wide.constant,
        100.0 * growth
    );
    run.json("induced.json", &Out { series, narrow, wide, growth, verdict: pass })?;
    run.chart(
        "induced.svg",
        &format!("log2 of the induced function of {} over t/log(e/t)", series.name()),
        &ratio_chart(&rows, "log2 ratio"),
    )?;
    run.finish(pass, &summary)
}

fn prop53(a: Prop53Args) -> anyhow::Result<bool> {
    let cfg = series_config(a.k)?;
    let g = grid(a.log2_lo, a.log2_hi)?;
    let r = verify_prop53(&cfg, 1.0, &g, a.cap)?;
    let mut run = Run::create("counterexample prop53", &a, 0, &a.common)?;
    run.csv("prop53.csv", &r.rows)?;
    run.json("prop53.json", &r)?;
    let summary = format!(
        "x vs induced {:.4}, y vs induced {:.4}, x vs y {:.4}",
        r.x_vs_induced, r.y_vs_induced, r.x_vs_y
    );
    run.finish(r.verdict, &summary)
}

fn simulate(a: SimulateArgs) -> anyhow::Result<bool> {
    let (rearrangement, orlicz) = match &a.rearrangement {
        Some(path) => (read_rearrangement(path)?, None),
        None => {
            let m = build(&a.family)?;
            (mfrak_step(&m, a.atoms)?, Some(m))
        }
    };
    let scheme = match a.scheme {
        SchemeArg::Flat => CoefficientScheme::Flat,
        SchemeArg::Unit => CoefficientScheme::Unit,
        SchemeArg::Geometric => CoefficientScheme::Geometric(a.ratio),
    };
    let cfg = SimConfig {
        rearrangement,
        p: a.p,
        n_list: a.n.clone(),
        trials: a.trials,
        seed: a.seed,
        scheme,
        orlicz,
    };
    cfg.validate().map_err(|e| usage(e.to_string()))?;
    let r = empirical_lp_norm(&cfg)?;
    let band = r.band_ratio();
    let mut run = Run::create("simulate", &a, a.seed, &a.common)?;
    run.csv("simulate.csv", &r.records)?;
    run.json("simulate.json", &r)?;
    let pts = r.records.iter().map(|x| (x.n as f64, x.ratio)).collect();
    run.chart("simulate.svg", "empirical over reference norm", &[Series::new("ratio", pts)])?;
    run.finish(band <= a.max_band, &format!("band {:.4}..{:.4}, max/min {band:.4}", r.band_min, r.band_max))
}

fn parse_atoms(specs: &[String]) -> anyhow::Result<Vec<(f64, f64)>> {
    specs
        .iter()
        .map(|s| {
            let (v, m) = s
                .split_once(':')
                .ok_or_else(|| usage(format!("atom {s:?} must be value:measure")))?;
            let parse = |x: &str| x.trim().parse::<f64>().map_err(|_| usage(format!("bad number in atom {s:?}")));
            Ok((parse(v)?, parse(m)?))
        })
        .collect()
}

fn rosenthal(a: RosenthalArgs) -> anyhow::Result<bool> {
    let f = match &a.rearrangement {
        Some(path) => read_rearrangement(path)?,
        None => StepFunction::probability(&parse_atoms(&a.atoms)?).map_err(|e| usage(e.to_string()))?,
    };
    let r = rosenthal_ratio(&f, &a.a, a.p, a.trials, a.seed)?;
    let pass = (r.ratio - 1.0).abs() <= 3.0 * r.stderr;
    let mut run = Run::create("rosenthal", &a, a.seed, &a.common)?;
    run.json("rosenthal.json", &r)?;
    run.finish(pass, &format!("ratio {:.4} ± {:.4}", r.ratio, r.stderr))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atoms_parse() {
        let got = parse_atoms(&["4:0.125".into(), " 1 : 0.5".into()]).unwrap();
        assert_eq!(got, vec![(4.0, 0.125), (1.0, 0.5)]);
        assert!(parse_atoms(&["4".into()]).unwrap_err().is::<crate::UsageError>());
    }

    #[test]
    fn power_without_q_is_usage_error() {
        assert!(family(Family::Power, None, None, 14).unwrap_err().is::<crate::UsageError>());
        assert!(family(Family::Power, Some(0.5), None, 14).unwrap_err().is::<crate::UsageError>());
    }

    #[test]
    fn induced_families_are_normalized() {
        for f in [Family::InducedX, Family::InducedY] {
            let m = family(f, None, None, 14).unwrap();
            assert!(m.log2_eval(0.0).unwrap().abs() < 1e-12);
        }
    }
}
