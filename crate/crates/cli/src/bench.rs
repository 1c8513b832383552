//! Wall-clock and peak-memory harness for label + verify on large trees.

use std::fmt;
use std::fs;
use std::time::{Duration, Instant};

use antimagic_core::{generate, is_antimagic, label_with, GenSpec, LabelOptions};

use crate::CliError;

/// Peak resident set size of this process in bytes (Linux only).
pub fn peak_rss_bytes() -> Option<u64> {
    let status = fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    let kb: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb * 1024)
}

/// Current resident set size in bytes (Linux only).
pub fn current_rss_bytes() -> Option<u64> {
    let status = fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmRSS:"))?;
    let kb: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb * 1024)
}

/// Resets the peak RSS watermark to the current RSS. Returns false when the
/// kernel does not support it.
pub fn reset_peak_rss() -> bool {
    fs::write("/proc/self/clear_refs", "5").is_ok()
}

/// Spec for a generated tree with at least `edges` edges (at most one more,
/// since the extra budget must be even).
pub fn spec_for_size(edges: usize, p: usize, seed: u64) -> GenSpec {
    let spine = 2 * p - 1;
    let budget = (edges.saturating_sub(spine).max(6) + 1) & !1;
    GenSpec::new(p, budget, seed)
}

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub edges: usize,
    pub generate: Duration,
    pub label: Duration,
    pub verify: Duration,
    /// Peak RSS growth over the RSS just before generation, when measurable.
    pub peak_rss_delta: Option<u64>,
}

impl BenchRow {
    pub fn label_and_verify(&self) -> Duration {
        self.label + self.verify
    }
}

impl fmt::Display for BenchRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mem = match self.peak_rss_delta {
            Some(b) => format!(
                "{:.1} MiB ({:.0} B/edge)",
                b as f64 / 1048576.0,
                b as f64 / self.edges as f64
            ),
            None => "n/a".into(),
        };
        write!(
            f,
            "edges={:>9} generate={:>9.3}ms label={:>9.3}ms verify={:>9.3}ms label+verify={:>9.3}ms peak_rss_delta={}",
            self.edges,
            self.generate.as_secs_f64() * 1e3,
            self.label.as_secs_f64() * 1e3,
            self.verify.as_secs_f64() * 1e3,
            self.label_and_verify().as_secs_f64() * 1e3,
            mem
        )
    }
}

/// Generates one tree of roughly `edges` edges and times label + verify.
pub fn bench_size(edges: usize, p: usize, seed: u64) -> Result<BenchRow, CliError> {
    let spec = spec_for_size(edges, p, seed);
    let measurable = reset_peak_rss();
    let baseline = current_rss_bytes();

    let start = Instant::now();
    let tree = generate(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
    let generate_time = start.elapsed();

    let start = Instant::now();
    let construction = label_with(
        &tree,
        LabelOptions {
            check_invariants: false,
        },
    )
    .map_err(|e| CliError::Internal(e.to_string()))?;
    let label_time = start.elapsed();

    let start = Instant::now();
    let verdict = is_antimagic(&tree, &construction.labeling);
    let verify_time = start.elapsed();
    if !verdict.is_antimagic() {
        return Err(CliError::Internal(format!(
            "benchmark tree not antimagic: {verdict:?}"
        )));
    }

    let peak_rss_delta = match (measurable, baseline, peak_rss_bytes()) {
        (true, Some(base), Some(peak)) => Some(peak.saturating_sub(base)),
        _ => None,
    };
    Ok(BenchRow {
        edges: tree.edge_count(),
        generate: generate_time,
        label: label_time,
        verify: verify_time,
        peak_rss_delta,
    })
}
