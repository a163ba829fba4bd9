use std::io::Write;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::Instant;

use core_partitions::verify::{Cell, CellOutcome, Discrepancy, Suite};
use core_partitions::{anderson_count, count_distinct_core, Family, ResourceGuard};
use rayon::prelude::*;
use serde::Serialize;

use crate::output::json_line;
use crate::Failure;

pub struct VerifySuiteConfig {
    pub suite: Suite,
    pub t_range: (u64, u64),
    pub m_range: (u64, u64),
    pub parallelism: usize,
    pub fail_fast: bool,
}

/// `A..B`, inclusive on both ends, or a single value `A`.
pub fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let parse = |x: &str| x.trim().parse::<u64>().map_err(|e| format!("{:?}: {}", x, e));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {}", s));
    }
    Ok((lo, hi))
}

impl VerifySuiteConfig {
    fn validate(&self, guard: &ResourceGuard) -> Result<(), Failure> {
        let (_, t_hi) = self.t_range;
        let (_, m_hi) = self.m_range;
        if t_hi < 2 {
            return Err(Failure::Usage("the t range must reach at least 2".into()));
        }
        if self.parallelism == 0 {
            return Err(Failure::Usage("--jobs must be positive".into()));
        }
        let estimate = match self.suite {
            Suite::Classical => anderson_count(t_hi - 1, t_hi),
            _ => {
                if m_hi == 0 {
                    return Err(Failure::Usage("the m range must reach at least 1".into()));
                }
                count_distinct_core(t_hi, m_hi, Family::Plus).map_or(u128::MAX, u128::from)
            }
        };
        guard.check(estimate)?;
        Ok(())
    }
}

#[derive(Serialize)]
struct Summary<'a> {
    suite: &'a str,
    cells: usize,
    completed: usize,
    knife_edge_cells: usize,
    passed: bool,
    discrepancies: Vec<&'a Discrepancy>,
}

/// Runs every cell of the suite; returns whether all of them passed.
pub fn run(config: &VerifySuiteConfig, guard: &ResourceGuard, out: &mut dyn Write) -> Result<bool, Failure> {
    config.validate(guard)?;
    let cells: Vec<Cell> = config.suite.cells(config.t_range, config.m_range);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()
        .map_err(|e| Failure::Usage(e.to_string()))?;

    let started = Instant::now();
    let stop = AtomicBool::new(false);
    let done = AtomicUsize::new(0);
    let total = cells.len();
    let outcomes: Vec<Option<CellOutcome>> = pool.install(|| {
        cells
            .par_iter()
            .map(|&cell| {
                if stop.load(Ordering::Relaxed) {
                    return None;
                }
                let cell_started = Instant::now();
                let outcome = cell.run();
                let finished = done.fetch_add(1, Ordering::Relaxed) + 1;
                let status = if outcome.discrepancies.is_empty() { "ok" } else { "FAILED" };
                eprintln!(
                    "[{}/{}] {} {} ({:.1?})",
                    finished,
                    total,
                    serde_json::to_string(&cell).unwrap_or_default(),
                    status,
                    cell_started.elapsed()
                );
                if config.fail_fast && !outcome.discrepancies.is_empty() {
                    stop.store(true, Ordering::Relaxed);
                }
                Some(outcome)
            })
            .collect()
    });

    let completed: Vec<&CellOutcome> = outcomes.iter().flatten().collect();
    let discrepancies: Vec<&Discrepancy> = completed.iter().flat_map(|o| &o.discrepancies).collect();
    let passed = discrepancies.is_empty() && completed.len() == total;
    let summary = Summary {
        suite: config.suite.name(),
        cells: total,
        completed: completed.len(),
        knife_edge_cells: completed.iter().filter(|o| o.knife_edge).count(),
        passed,
        discrepancies,
    };
    json_line(out, &summary)?;
    eprintln!(
        "{}: {} of {} cells checked, {} in {:.2?}",
        config.suite,
        summary.completed,
        total,
        if passed { "all passed" } else { "FAILED" },
        started.elapsed()
    );
    Ok(passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..12"), Ok((2, 12)));
        assert_eq!(parse_range("2..=12"), Ok((2, 12)));
        assert_eq!(parse_range("7"), Ok((7, 7)));
        assert!(parse_range("5..3").is_err());
        assert!(parse_range("a..3").is_err());
    }
}
