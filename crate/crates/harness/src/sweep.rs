//! Corpus sweeps with an input-ordered reduction, so a report depends only on the corpus
//! and the check set, never on the worker count.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use rayon::prelude::*;
use zagreb_core::graph::{graph_from_mask, pair_count, MAX_ENUMERATION_ORDER};
use zagreb_core::invariants::{independence_number, zagreb_m1};
use zagreb_core::theorems::t3_bound;
use zagreb_core::{graph6, ExactRational, Graph};

use crate::checks::{evaluate, Check};
use crate::HarnessError;

/// Witness lists are truncated to this many entries per check.
pub const WITNESS_CAP: usize = 100;

/// Graphs evaluated per parallel batch.
const BATCH: usize = 1 << 12;

/// Histogram bucket width for `M1 / bound` is `1 / TIGHTNESS_BUCKETS`.
pub const TIGHTNESS_BUCKETS: i128 = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusSource {
    File(PathBuf),
    Enumerate { n: usize, connected_only: bool },
}

impl CorpusSource {
    pub fn id(&self) -> String {
        match self {
            CorpusSource::File(path) => path.display().to_string(),
            CorpusSource::Enumerate { n, connected_only } => format!(
                "enumerate:n={n}:{}",
                if *connected_only { "connected" } else { "all" }
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckStats {
    pub applicable: u64,
    pub condition_met: u64,
    pub violations: u64,
    pub violation_witnesses: Vec<String>,
}

impl CheckStats {
    fn merge(&mut self, other: CheckStats) {
        self.applicable += other.applicable;
        self.condition_met += other.condition_met;
        self.violations += other.violations;
        let room = WITNESS_CAP.saturating_sub(self.violation_witnesses.len());
        self.violation_witnesses
            .extend(other.violation_witnesses.into_iter().take(room));
    }
}

/// Counts of `M1 / t3_bound` per bucket `[i/20, (i+1)/20)`, plus exact attainment.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tightness {
    pub buckets: BTreeMap<i128, u64>,
    pub attained: u64,
    pub evaluated: u64,
}

impl Tightness {
    fn record(&mut self, g: &Graph) {
        let profile = g.degree_profile();
        if g.order() < 2 || profile.min_degree == 0 {
            return;
        }
        let beta = independence_number(g);
        let Ok(bound) = t3_bound(
            g.order() as u64,
            profile.edges as u64,
            profile.min_degree as u64,
            profile.max_degree as u64,
            beta as u64,
        ) else {
            return;
        };
        let m1 = zagreb_m1(g) as i128;
        // floor(20 · M1 / bound) = floor(20 · M1 · den / num); small enough for i128.
        let bucket = TIGHTNESS_BUCKETS * m1 * bound.denom() / bound.numer();
        *self.buckets.entry(bucket).or_default() += 1;
        self.attained += u64::from(bound.cmp_integer(m1).is_eq());
        self.evaluated += 1;
    }

    fn merge(&mut self, other: Tightness) {
        for (k, v) in other.buckets {
            *self.buckets.entry(k).or_default() += v;
        }
        self.attained += other.attained;
        self.evaluated += other.evaluated;
    }

    /// Bucket label `[lo, hi)` with bounds rendered as two-place decimals.
    pub fn label(bucket: i128) -> String {
        let edge = |i: i128| {
            ExactRational::new(i, TIGHTNESS_BUCKETS)
                .map(|r| r.to_decimal_string(2))
                .unwrap_or_default()
        };
        format!("[{}, {})", edge(bucket), edge(bucket + 1))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub corpus_id: String,
    pub graphs_scanned: u64,
    pub per_check: BTreeMap<Check, CheckStats>,
    pub tightness: Option<Tightness>,
}

impl SweepReport {
    fn empty(corpus_id: String, checks: &[Check], tightness: bool) -> Self {
        SweepReport {
            corpus_id,
            graphs_scanned: 0,
            per_check: checks.iter().map(|&c| (c, CheckStats::default())).collect(),
            tightness: tightness.then(Tightness::default),
        }
    }

    fn merge(&mut self, other: SweepReport) {
        self.graphs_scanned += other.graphs_scanned;
        for (check, stats) in other.per_check {
            self.per_check.entry(check).or_default().merge(stats);
        }
        if let (Some(t), Some(o)) = (self.tightness.as_mut(), other.tightness) {
            t.merge(o);
        }
    }

    pub fn total_violations(&self) -> u64 {
        self.per_check.values().map(|s| s.violations).sum()
    }

    pub fn passed(&self) -> bool {
        self.total_violations() == 0
    }

    /// Human-readable report: a key-value header, one section per check, the optional
    /// tightness histogram and a final status line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "corpus: {}", self.corpus_id);
        let _ = writeln!(out, "graphs_scanned: {}", self.graphs_scanned);
        let names: Vec<_> = self.per_check.keys().map(|c| c.name()).collect();
        let _ = writeln!(out, "checks: {}", names.join(","));
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "{:<10} {:>12} {:>14} {:>10}",
            "check", "applicable", "condition_met", "violations"
        );
        for (check, s) in &self.per_check {
            let _ = writeln!(
                out,
                "{:<10} {:>12} {:>14} {:>10}",
                check.name(),
                s.applicable,
                s.condition_met,
                s.violations
            );
        }
        for (check, s) in self
            .per_check
            .iter()
            .filter(|(_, s)| !s.violation_witnesses.is_empty())
        {
            let _ = writeln!(out);
            let _ = writeln!(out, "[witnesses {}]", check.name());
            for w in &s.violation_witnesses {
                let _ = writeln!(out, "{w}");
            }
        }
        if let Some(t) = &self.tightness {
            let _ = writeln!(out);
            let _ = writeln!(out, "[tightness t3]");
            let _ = writeln!(out, "evaluated: {}", t.evaluated);
            let _ = writeln!(out, "attained: {}", t.attained);
            for (bucket, count) in &t.buckets {
                let _ = writeln!(out, "{:<14} {count}", Tightness::label(*bucket));
            }
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "status: {}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }

    /// One comma-separated record per check, after a header line.
    pub fn render_csv(&self) -> String {
        let mut out = String::from("corpus,check,graphs_scanned,applicable,condition_met,violations\n");
        for (check, s) in &self.per_check {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                self.corpus_id, check, self.graphs_scanned, s.applicable, s.condition_met, s.violations
            );
        }
        out
    }

    /// Histogram as `bucket_lo,bucket_hi,count` lines.
    pub fn render_tightness_csv(&self) -> String {
        let mut out = String::from("bucket_lo,bucket_hi,count\n");
        if let Some(t) = &self.tightness {
            for (bucket, count) in &t.buckets {
                let edge = |i: i128| {
                    ExactRational::new(i, TIGHTNESS_BUCKETS)
                        .unwrap()
                        .to_decimal_string(2)
                };
                let _ = writeln!(out, "{},{},{count}", edge(*bucket), edge(bucket + 1));
            }
        }
        out
    }
}

fn evaluate_batch(corpus_id: &str, graphs: &[Graph], checks: &[Check], tightness: bool) -> SweepReport {
    let mut report = SweepReport::empty(corpus_id.to_string(), checks, tightness);
    for g in graphs {
        report.graphs_scanned += 1;
        for &check in checks {
            let outcome = evaluate(check, g);
            let stats = report.per_check.get_mut(&check).expect("check registered");
            stats.applicable += u64::from(outcome.applicable);
            stats.condition_met += u64::from(outcome.condition_met);
            if outcome.violated {
                stats.violations += 1;
                if stats.violation_witnesses.len() < WITNESS_CAP {
                    stats
                        .violation_witnesses
                        .push(graph6::encode(g).unwrap_or_else(|_| format!("{g:?}")));
                }
            }
        }
        if let Some(t) = report.tightness.as_mut() {
            t.record(g);
        }
    }
    report
}

/// Options for [`run_sweep`].
#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub checks: Vec<Check>,
    pub jobs: usize,
    pub tightness: bool,
}

/// Evaluates every graph of `source` against every requested check.
///
/// Work is split into fixed-size batches evaluated in parallel; batch reports are merged in
/// input order, so the result is identical for every `jobs` value. A malformed corpus line
/// aborts the sweep with its line number.
pub fn run_sweep(source: &CorpusSource, options: &SweepOptions) -> Result<SweepReport, HarnessError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs.max(1))
        .build()
        .map_err(|e| HarnessError::Usage(format!("thread pool: {e}")))?;
    let id = source.id();
    let mut checks = options.checks.clone();
    checks.sort();
    checks.dedup();
    let mut report = SweepReport::empty(id.clone(), &checks, options.tightness);

    match source {
        CorpusSource::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
                path: path.clone(),
                source,
            })?;
            let lines: Vec<&str> = text.lines().collect();
            let graphs: Vec<Graph> = pool.install(|| {
                lines
                    .par_iter()
                    .enumerate()
                    .map(|(i, line)| {
                        graph6::decode(line).map_err(|source| HarnessError::Malformed { line: i + 1, source })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })?;
            let parts: Vec<SweepReport> = pool.install(|| {
                graphs
                    .par_chunks(BATCH)
                    .map(|chunk| evaluate_batch(&id, chunk, &checks, options.tightness))
                    .collect()
            });
            parts.into_iter().for_each(|p| report.merge(p));
        }
        &CorpusSource::Enumerate { n, connected_only } => {
            if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
                return Err(HarnessError::Usage(format!(
                    "enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}"
                )));
            }
            let total = 1u64 << pair_count(n);
            let starts: Vec<u64> = (0..total).step_by(BATCH).collect();
            let parts: Vec<SweepReport> = pool.install(|| {
                starts
                    .par_iter()
                    .map(|&start| {
                        let graphs: Vec<Graph> = (start..(start + BATCH as u64).min(total))
                            .map(|mask| graph_from_mask(n, mask))
                            .filter(|g| !connected_only || g.is_connected())
                            .collect();
                        evaluate_batch(&id, &graphs, &checks, options.tightness)
                    })
                    .collect()
            });
            parts.into_iter().for_each(|p| report.merge(p));
        }
    }
    Ok(report)
}
