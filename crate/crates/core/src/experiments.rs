//! Ensemble sweeps: generate instances, run the full analysis on each,
//! aggregate per mean degree and join with the mean-field curve.

use std::io::Write;
use std::path::Path;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::counting::{count_solutions, unfrozen_core};
use crate::error::{Error, Result};
use crate::graph::{generate_random_bipartite, giant_component_fraction, leaf_removal, EnsembleParams};
use crate::meanfield::{theory_curve, MeanFieldSolution, SizeRatio};
use crate::rsg::{build_rsg_bipartite, state_ratios};

pub const DEFAULT_THRESHOLD: f64 = 0.25;

/// Parameters of one sweep. Serialized into every output header.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub n1: usize,
    pub n2: usize,
    /// Ratio used for the theory curve; `n1:n2` unless given explicitly.
    pub ratio: SizeRatio,
    pub c_grid: Vec<f64>,
    pub instances: usize,
    pub base_seed: u64,
    /// Positive-backbone fraction above which an instance is big-ratio.
    pub threshold: f64,
}

impl RunConfig {
    /// Sizes given directly; the theory ratio is `n1:n2`.
    pub fn with_sizes(n1: usize, n2: usize, c_grid: Vec<f64>, instances: usize, base_seed: u64) -> Result<Self> {
        let ratio = SizeRatio::new(
            u32::try_from(n1).map_err(|_| Error::Config("n1 too large".into()))?,
            u32::try_from(n2).map_err(|_| Error::Config("n2 too large".into()))?,
        )?;
        let cfg = RunConfig { n1, n2, ratio, c_grid, instances, base_seed, threshold: DEFAULT_THRESHOLD };
        cfg.validate()?;
        Ok(cfg)
    }

    /// `n` nodes split as `ratio` (X1 gets the rounded share).
    pub fn with_ratio(ratio: SizeRatio, n: usize, c_grid: Vec<f64>, instances: usize, base_seed: u64) -> Result<Self> {
        let p = EnsembleParams::from_ratio(ratio.n1, ratio.n2, n, 0.0, 0);
        let cfg = RunConfig { n1: p.n1, n2: p.n2, ratio, c_grid, instances, base_seed, threshold: DEFAULT_THRESHOLD };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n1 == 0 || self.n2 == 0 {
            return Err(Error::Config(format!("both sides need nodes, got n1={} n2={}", self.n1, self.n2)));
        }
        if self.instances == 0 {
            return Err(Error::Config("instances must be positive".into()));
        }
        if self.c_grid.is_empty() {
            return Err(Error::Config("empty mean-degree grid".into()));
        }
        for &c in &self.c_grid {
            if !(c.is_finite() && c >= 0.0) {
                return Err(Error::Config(format!("mean degree must be finite and >= 0, got {c}")));
            }
            let p = EnsembleParams::new(self.n1, self.n2, c, 0).p();
            if p > 1.0 {
                return Err(Error::ProbabilityTooLarge { p });
            }
        }
        if !(self.threshold > 0.0 && self.threshold < 1.0) {
            return Err(Error::Config(format!("threshold must lie in (0, 1), got {}", self.threshold)));
        }
        Ok(())
    }

    pub fn header(&self) -> String {
        let grid: Vec<String> = self.c_grid.iter().map(|&c| fmt_sig(c)).collect();
        format!(
            "# config n1={} n2={} ratio={} c={} instances={} seed={} threshold={}",
            self.n1,
            self.n2,
            self.ratio,
            grid.join(","),
            self.instances,
            self.base_seed,
            fmt_sig(self.threshold)
        )
    }

    /// Seed of instance `index` (counted across the whole sweep).
    pub fn seed_of(&self, index: usize) -> u64 {
        self.base_seed.wrapping_add(index as u64)
    }
}

/// Evenly spaced grid `from, from + step, ...` up to `to` inclusive.
pub fn c_grid(from: f64, to: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !(to >= from) || !from.is_finite() || !to.is_finite() {
        return Err(Error::Config(format!("bad grid {from}..{to} step {step}")));
    }
    let k = ((to - from) / step + 1e-9).floor() as usize;
    Ok((0..=k).map(|i| fmt_sig(from + i as f64 * step).parse().unwrap()).collect())
}

/// Observables averaged by the sweep, in CSV column order.
pub const METRICS: [&str; 9] =
    ["x", "q_plus", "q_minus", "q_zero", "giant", "leaf_core", "unfrozen_core", "h_s", "h_c"];

/// Per-instance results. Float fields are already rounded to the CSV
/// precision so that aggregates can be recomputed from the file exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct InstanceRow {
    pub index: usize,
    pub seed: u64,
    pub n1: usize,
    pub n2: usize,
    pub c: f64,
    pub m: usize,
    pub metrics: [f64; 9],
    pub solution_count: BigUint,
    pub core_count: BigUint,
    pub big_ratio: bool,
}

impl InstanceRow {
    pub fn metric(&self, name: &str) -> f64 {
        let i = METRICS.iter().position(|&m| m == name).expect("known metric");
        self.metrics[i]
    }

    pub fn q_plus(&self) -> f64 {
        self.metrics[1]
    }
}

/// Generates and analyzes one instance.
pub fn run_instance(n1: usize, n2: usize, c: f64, seed: u64, threshold: f64, index: usize) -> Result<InstanceRow> {
    let wrap = |e: Error| Error::Instance { seed, source: Box::new(e) };
    let (g, part) = generate_random_bipartite(&EnsembleParams::new(n1, n2, c, seed)).map_err(wrap)?;
    let rsg = build_rsg_bipartite(&g, &part).map_err(wrap)?;
    let counts = count_solutions(&rsg).map_err(wrap)?;
    let n = g.node_count();
    let frac = |k: usize| k as f64 / n as f64;
    let q = state_ratios::<f64>(&rsg);
    let raw = [
        frac(rsg.min_cover_size()),
        q.q_plus,
        q.q_minus,
        q.q_zero,
        giant_component_fraction::<f64>(&g),
        frac(leaf_removal(&g).core_nodes.len()),
        frac(unfrozen_core(&rsg).len()),
        counts.entropy::<f64>(),
        counts.core_entropy::<f64>(),
    ];
    let metrics = raw.map(round_sig);
    Ok(InstanceRow {
        index,
        seed,
        n1,
        n2,
        c,
        m: g.edge_count(),
        big_ratio: metrics[1] > threshold,
        metrics,
        solution_count: counts.solution_count,
        core_count: counts.core_count,
    })
}

/// Fraction of big-ratio instances among rows sharing one mean degree.
pub fn classify_big_ratio(rows: &[InstanceRow], threshold: f64) -> Result<f64> {
    let first = rows.first().ok_or_else(|| Error::Config("no rows to classify".into()))?;
    if rows.iter().any(|r| r.c != first.c || (r.n1, r.n2) != (first.n1, first.n2)) {
        return Err(Error::Config("rows mix ensembles".into()));
    }
    let big = rows.iter().filter(|r| r.q_plus() > threshold).count();
    Ok(big as f64 / rows.len() as f64)
}

/// Rows and aggregates for one mean degree.
#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleStats {
    pub c: f64,
    pub rows: Vec<InstanceRow>,
    pub mean: [f64; 9],
    pub std_err: [f64; 9],
    pub rho: f64,
    pub theory: MeanFieldSolution<f64>,
}

impl EnsembleStats {
    pub fn from_rows(c: f64, rows: Vec<InstanceRow>, threshold: f64, theory: MeanFieldSolution<f64>) -> Result<Self> {
        let rho = classify_big_ratio(&rows, threshold)?;
        let k = rows.len() as f64;
        let mut mean = [0.0; 9];
        let mut std_err = [0.0; 9];
        for i in 0..9 {
            mean[i] = rows.iter().map(|r| r.metrics[i]).sum::<f64>() / k;
            if rows.len() > 1 {
                let var = rows.iter().map(|r| (r.metrics[i] - mean[i]).powi(2)).sum::<f64>() / (k - 1.0);
                std_err[i] = (var / k).sqrt();
            }
        }
        Ok(EnsembleStats { c, rows, mean, std_err, rho, theory })
    }

    pub fn mean_of(&self, name: &str) -> f64 {
        self.mean[METRICS.iter().position(|&m| m == name).expect("known metric")]
    }

    pub fn std_err_of(&self, name: &str) -> f64 {
        self.std_err[METRICS.iter().position(|&m| m == name).expect("known metric")]
    }

    pub fn median_of(&self, name: &str) -> f64 {
        let i = METRICS.iter().position(|&m| m == name).expect("known metric");
        let mut v: Vec<f64> = self.rows.iter().map(|r| r.metrics[i]).collect();
        v.sort_by(f64::total_cmp);
        let k = v.len();
        if k % 2 == 1 {
            v[k / 2]
        } else {
            0.5 * (v[k / 2 - 1] + v[k / 2])
        }
    }
}

/// Runs every instance of every grid point. Instances run in parallel; rows
/// come back in index order.
pub fn run_sweep(cfg: &RunConfig) -> Result<Vec<EnsembleStats>> {
    cfg.validate()?;
    let theory = theory_curve(cfg.ratio, &cfg.c_grid)?;
    let mut out = Vec::with_capacity(cfg.c_grid.len());
    for (ci, (&c, th)) in cfg.c_grid.iter().zip(theory).enumerate() {
        let rows = (0..cfg.instances)
            .into_par_iter()
            .map(|i| {
                let index = ci * cfg.instances + i;
                run_instance(cfg.n1, cfg.n2, c, cfg.seed_of(index), cfg.threshold, index)
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(EnsembleStats::from_rows(c, rows, cfg.threshold, th.solution)?);
    }
    Ok(out)
}

/// Formats with 12 significant digits, trailing zeros trimmed.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    if (-5..15).contains(&mag) {
        let decimals = (11 - mag).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        let s = format!("{x:.11e}");
        let (mant, exp) = s.split_once('e').unwrap();
        format!("{}e{exp}", trim_zeros(mant.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// `x` rounded to the CSV precision.
pub fn round_sig(x: f64) -> f64 {
    fmt_sig(x).parse().unwrap()
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

pub const INSTANCE_COLUMNS: [&str; 18] = [
    "index", "seed", "n1", "n2", "c", "m", "x", "q_plus", "q_minus", "q_zero", "giant", "leaf_core",
    "unfrozen_core", "s_n", "s_c", "h_s", "h_c", "big_ratio",
];

pub const THEORY_COLUMNS: [&str; 11] =
    ["ratio", "c", "c1", "c2", "giant", "x", "q_plus", "q_minus", "q_zero", "residual", "iterations"];

fn write_header(out: &mut impl Write, cfg: Option<&RunConfig>) -> Result<()> {
    if let Some(cfg) = cfg {
        writeln!(out, "{}", cfg.header())?;
    }
    writeln!(out, "# generated: {}", chrono::Utc::now().format("%Y-%m-%dT%H:%M:%SZ"))?;
    Ok(())
}

pub fn write_instances_csv(out: impl Write, cfg: &RunConfig, stats: &[EnsembleStats]) -> Result<()> {
    let mut out = out;
    write_header(&mut out, Some(cfg))?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(INSTANCE_COLUMNS).map_err(csv_err)?;
    for row in stats.iter().flat_map(|s| &s.rows) {
        let mut rec = vec![
            row.index.to_string(),
            row.seed.to_string(),
            row.n1.to_string(),
            row.n2.to_string(),
            fmt_sig(row.c),
            row.m.to_string(),
        ];
        rec.extend(row.metrics[..7].iter().map(|&v| fmt_sig(v)));
        rec.push(row.solution_count.to_string());
        rec.push(row.core_count.to_string());
        rec.extend(row.metrics[7..].iter().map(|&v| fmt_sig(v)));
        rec.push(u8::from(row.big_ratio).to_string());
        w.write_record(&rec).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn aggregate_columns() -> Vec<String> {
    let mut cols: Vec<String> = ["ratio", "c", "instances", "rho"].map(String::from).to_vec();
    for m in METRICS {
        cols.push(format!("mean_{m}"));
        cols.push(format!("se_{m}"));
    }
    for t in ["giant", "x", "q_plus", "q_minus", "q_zero"] {
        cols.push(format!("theory_{t}"));
    }
    cols
}

pub fn write_aggregate_csv(out: impl Write, cfg: &RunConfig, stats: &[EnsembleStats]) -> Result<()> {
    let mut out = out;
    write_header(&mut out, Some(cfg))?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(aggregate_columns()).map_err(csv_err)?;
    for s in stats {
        let mut rec = vec![cfg.ratio.to_string(), fmt_sig(s.c), s.rows.len().to_string(), fmt_sig(s.rho)];
        for i in 0..METRICS.len() {
            rec.push(fmt_sig(s.mean[i]));
            rec.push(fmt_sig(s.std_err[i]));
        }
        let t = &s.theory;
        rec.extend([t.giant, t.x, t.q_plus, t.q_minus(), t.q_zero].map(fmt_sig));
        w.write_record(&rec).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_theory_csv(out: impl Write, ratio: SizeRatio, c_grid: &[f64]) -> Result<()> {
    let rows = theory_curve(ratio, c_grid)?;
    let mut out = out;
    writeln!(out, "# theory ratio={ratio}")?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(THEORY_COLUMNS).map_err(csv_err)?;
    for r in rows {
        let s = &r.solution;
        let mut rec = vec![ratio.to_string()];
        rec.extend([r.c, s.c1, s.c2, s.giant, s.x, s.q_plus, s.q_minus(), s.q_zero, s.residual].map(fmt_sig));
        rec.push(s.iterations.to_string());
        w.write_record(&rec).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

/// Writes `instances.csv` and `aggregate.csv` into `dir`.
pub fn write_sweep(dir: &Path, cfg: &RunConfig, stats: &[EnsembleStats]) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let file = |name: &str| std::fs::File::create(dir.join(name)).map(std::io::BufWriter::new);
    write_instances_csv(file("instances.csv")?, cfg, stats)?;
    write_aggregate_csv(file("aggregate.csv")?, cfg, stats)?;
    Ok(())
}

/// Reads rows back from an instances CSV written by [`write_instances_csv`].
pub fn read_instances_csv(text: &str, threshold: f64) -> Result<Vec<InstanceRow>> {
    let body: String = text.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
    let mut r = csv::Reader::from_reader(body.as_bytes());
    let bad = |what: &str| Error::Parse { line: 0, msg: format!("bad {what} field in instances CSV") };
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(csv_err)?;
        let f = |i: usize| rec.get(i).ok_or_else(|| bad(INSTANCE_COLUMNS[i]));
        let num = |i: usize| f(i)?.parse::<f64>().map_err(|_| bad(INSTANCE_COLUMNS[i]));
        let int = |i: usize| f(i)?.parse::<usize>().map_err(|_| bad(INSTANCE_COLUMNS[i]));
        let big = |i: usize| f(i)?.parse::<BigUint>().map_err(|_| bad(INSTANCE_COLUMNS[i]));
        let mut metrics = [0.0; 9];
        for (k, col) in (6..13).chain(15..17).enumerate() {
            metrics[k] = num(col)?;
        }
        rows.push(InstanceRow {
            index: int(0)?,
            seed: f(1)?.parse().map_err(|_| bad("seed"))?,
            n1: int(2)?,
            n2: int(3)?,
            c: num(4)?,
            m: int(5)?,
            big_ratio: metrics[1] > threshold,
            metrics,
            solution_count: big(13)?,
            core_count: big(14)?,
        });
    }
    Ok(rows)
}
