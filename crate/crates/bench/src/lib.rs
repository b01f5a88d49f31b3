//! Runtime scaling harness for the packing colorer.
//!
//! [`run_scaling`] colors one fresh random instance per requested size and
//! records the median time of each pipeline stage over several repeats.
//! Generation and verification are kept out of the coloring timings.

use std::hint::black_box;
use std::time::{Duration, Instant};

use halin_core::colorer::{conflicts_resolving, default_root, recoloring_dispatch, two_color_tree};
use halin_core::generator::{gen_random_halin, GeneratorConfig, GeneratorError};
use halin_core::{verify_packing, ClassAssignment};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default instance sizes (`n_total`).
pub const DEFAULT_SIZES: [usize; 5] = [10_000, 20_000, 40_000, 80_000, 160_000];
pub const DEFAULT_REPEATS: usize = 5;
pub const MIN_REPEATS: usize = 3;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("sizes must be non-empty, positive and strictly ascending")]
    InvalidSizes,
    #[error("need at least {MIN_REPEATS} repeats, got {0}")]
    TooFewRepeats(usize),
    #[error("generating the instance for seed {seed} failed: {source}")]
    Generation {
        seed: u64,
        #[source]
        source: GeneratorError,
    },
    #[error("coloring for seed {seed} was rejected by the verifier")]
    InvalidColoring { seed: u64 },
    #[error("malformed CSV: {0}")]
    Csv(String),
}

/// Timings for one instance; stage times are medians over the repeats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub n_total: usize,
    pub seed: u64,
    pub total: Duration,
    pub tree: Duration,
    pub recolor: Duration,
    pub conflicts: Duration,
    pub verify: Duration,
}

fn median(mut xs: Vec<Duration>) -> Duration {
    xs.sort_unstable();
    xs[xs.len() / 2]
}

/// Leaf target that lands close to `n_total` vertices: random growth adds
/// about two leaves per three vertices.
fn leaves_for(n_total: usize) -> usize {
    (n_total * 2 / 3).max(3)
}

pub fn run_scaling(
    sizes: &[usize],
    repeats: usize,
    seed: u64,
) -> Result<Vec<BenchRecord>, BenchError> {
    if sizes.is_empty() || sizes[0] == 0 || sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(BenchError::InvalidSizes);
    }
    if repeats < MIN_REPEATS {
        return Err(BenchError::TooFewRepeats(repeats));
    }
    let mut records = Vec::with_capacity(sizes.len());
    for (i, &size) in sizes.iter().enumerate() {
        let seed = seed.wrapping_add(i as u64);
        let g = gen_random_halin(&GeneratorConfig::new(leaves_for(size), seed))
            .map_err(|source| BenchError::Generation { seed, source })?;

        let mut tree = Vec::with_capacity(repeats);
        let mut recolor = Vec::with_capacity(repeats);
        let mut conflicts = Vec::with_capacity(repeats);
        let mut total = Vec::with_capacity(repeats);
        let mut last = None;
        for _ in 0..repeats {
            let t0 = Instant::now();
            let phi = two_color_tree(&g, default_root(&g));
            let t1 = Instant::now();
            let (view, phi) = recoloring_dispatch(&g, phi);
            let t2 = Instant::now();
            let phi = conflicts_resolving(&g, &view, phi);
            let t3 = Instant::now();
            tree.push(t1 - t0);
            recolor.push(t2 - t1);
            conflicts.push(t3 - t2);
            total.push(t3 - t0);
            last = Some(black_box(phi));
        }

        let phi = last.expect("repeats >= 3");
        let t0 = Instant::now();
        let report = verify_packing(&g, phi.as_slice(), &ClassAssignment::standard())
            .map_err(|_| BenchError::InvalidColoring { seed })?;
        let verify = t0.elapsed();
        if !report.ok() {
            return Err(BenchError::InvalidColoring { seed });
        }

        records.push(BenchRecord {
            n_total: g.n_total(),
            seed,
            total: median(total),
            tree: median(tree),
            recolor: median(recolor),
            conflicts: median(conflicts),
            verify,
        });
    }
    Ok(records)
}

pub const CSV_HEADER: &str = "n,seed,total_us,tree_us,recolor_us,conflicts_us,verify_us";

#[derive(Serialize, Deserialize)]
struct Row {
    n: usize,
    seed: u64,
    total_us: String,
    tree_us: String,
    recolor_us: String,
    conflicts_us: String,
    verify_us: String,
}

/// Microseconds with nanosecond precision, e.g. `1234.567`.
fn micros(d: Duration) -> String {
    let ns = d.as_nanos();
    format!("{}.{:03}", ns / 1000, ns % 1000)
}

fn parse_micros(s: &str) -> Result<Duration, BenchError> {
    let bad = || BenchError::Csv(format!("bad duration `{s}`"));
    let (whole, frac) = s.split_once('.').unwrap_or((s, "0"));
    if frac.len() > 3 {
        return Err(bad());
    }
    let whole: u64 = whole.parse().map_err(|_| bad())?;
    let frac: u64 = format!("{frac:0<3}").parse().map_err(|_| bad())?;
    Ok(Duration::from_nanos(whole * 1000 + frac))
}

pub fn emit_csv(records: &[BenchRecord]) -> String {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    for r in records {
        w.serialize(Row {
            n: r.n_total,
            seed: r.seed,
            total_us: micros(r.total),
            tree_us: micros(r.tree),
            recolor_us: micros(r.recolor),
            conflicts_us: micros(r.conflicts),
            verify_us: micros(r.verify),
        })
        .expect("writing to memory");
    }
    let body = String::from_utf8(w.into_inner().expect("writing to memory")).expect("ascii");
    format!("{CSV_HEADER}\n{body}")
}

pub fn parse_csv(text: &str) -> Result<Vec<BenchRecord>, BenchError> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| BenchError::Csv(e.to_string()))?;
    if header.iter().collect::<Vec<_>>().join(",") != CSV_HEADER {
        return Err(BenchError::Csv(format!(
            "unexpected header `{}`",
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }
    reader
        .deserialize::<Row>()
        .map(|row| {
            let row = row.map_err(|e| BenchError::Csv(e.to_string()))?;
            Ok(BenchRecord {
                n_total: row.n,
                seed: row.seed,
                total: parse_micros(&row.total_us)?,
                tree: parse_micros(&row.tree_us)?,
                recolor: parse_micros(&row.recolor_us)?,
                conflicts: parse_micros(&row.conflicts_us)?,
                verify: parse_micros(&row.verify_us)?,
            })
        })
        .collect()
}

/// Least-squares line `time = slope * n + intercept` over total coloring time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

pub fn fit_linear(records: &[BenchRecord]) -> LinearFit {
    let xs: Vec<f64> = records.iter().map(|r| r.n_total as f64).collect();
    let ys: Vec<f64> = records.iter().map(|r| r.total.as_secs_f64()).collect();
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - (slope * x + intercept)).powi(2))
        .sum();
    let r_squared = if syy == 0.0 { 1.0 } else { 1.0 - ss_res / syy };
    LinearFit {
        slope,
        intercept,
        r_squared,
    }
}

/// `total[i+1] / total[i]` for consecutive records.
pub fn doubling_ratios(records: &[BenchRecord]) -> Vec<f64> {
    records
        .windows(2)
        .map(|w| w[1].total.as_secs_f64() / w[0].total.as_secs_f64())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(n: usize, us: u64) -> BenchRecord {
        let d = Duration::from_nanos(us * 1000 + 7);
        BenchRecord {
            n_total: n,
            seed: n as u64,
            total: d,
            tree: d / 3,
            recolor: d / 3,
            conflicts: d / 3,
            verify: d * 4,
        }
    }

    #[test]
    fn csv_header_only() {
        assert_eq!(emit_csv(&[]), format!("{CSV_HEADER}\n"));
        assert_eq!(parse_csv(&emit_csv(&[])).unwrap(), vec![]);
    }

    #[test]
    fn csv_one_record() {
        let text = emit_csv(&[record(10, 5)]);
        assert_eq!(text.lines().count(), 2);
        assert_eq!(
            text.lines().nth(1).unwrap(),
            "10,10,5.007,1.669,1.669,1.669,20.028"
        );
    }

    #[test]
    fn csv_round_trip() {
        let records: Vec<_> = (1..6).map(|i| record(i * 1000, i as u64 * 37)).collect();
        assert_eq!(parse_csv(&emit_csv(&records)).unwrap(), records);
    }

    #[test]
    fn csv_rejects_garbage() {
        assert!(parse_csv("a,b\n1,2\n").is_err());
        assert!(parse_csv(&format!("{CSV_HEADER}\n1,2,x,1,1,1,1\n")).is_err());
        assert!(parse_csv(&format!("{CSV_HEADER}\n1,2,1.2345,1,1,1,1\n")).is_err());
    }

    #[test]
    fn exact_line_fits_perfectly() {
        let records: Vec<_> = [1000, 2000, 4000, 8000]
            .iter()
            .map(|&n| record(n, n as u64 / 10))
            .collect();
        let fit = fit_linear(&records);
        assert!((fit.r_squared - 1.0).abs() < 1e-9);
        for r in doubling_ratios(&records) {
            assert!((r - 2.0).abs() < 1e-3);
        }
    }

    #[test]
    fn argument_checks() {
        assert!(matches!(
            run_scaling(&[100], 2, 0),
            Err(BenchError::TooFewRepeats(2))
        ));
        assert!(matches!(
            run_scaling(&[200, 100], 3, 0),
            Err(BenchError::InvalidSizes)
        ));
        assert!(matches!(
            run_scaling(&[], 3, 0),
            Err(BenchError::InvalidSizes)
        ));
    }

    #[test]
    fn small_run_produces_ascending_records() {
        let records = run_scaling(&[100, 200, 400], 3, 9).unwrap();
        assert_eq!(records.len(), 3);
        assert!(records.windows(2).all(|w| w[0].n_total < w[1].n_total));
        assert!(records.iter().all(|r| r.total >= r.tree));
    }
}
