use std::fmt::Write as _;
use std::time::{Duration, Instant};

use kpartite_ao::{
    ao_count_plus_inner_edge_with_budget, ao_count_with_budget, BlockTuple, Error, HpTable, Pivot,
    StirlingTable,
};
use serde::Serialize;

use crate::args::{Mode, RunConfig};
use crate::exit;
use crate::verify;

/// Result of one verification check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// The structured record of one run. Counts are decimal strings.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub input: Vec<usize>,
    pub normalized: Vec<usize>,
    pub mode: &'static str,
    pub result: String,
    /// Cells in the dynamic-programming table; `None` in stirling mode.
    pub lattice_cells: Option<u64>,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<Check>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub exit_code: u8,
    pub stdout: String,
    pub stderr: String,
    /// Present unless the run failed before producing a result.
    pub report: Option<Report>,
}

struct Computed {
    result: String,
    plain: String,
    lattice_cells: Option<u64>,
    checks: Option<Vec<Check>>,
}

pub fn run(config: &RunConfig) -> Outcome {
    let start = Instant::now();
    let computed = compute(config);
    let elapsed = start.elapsed();

    let computed = match computed {
        Ok(c) => c,
        Err(e) => {
            let code = match e {
                Error::Capacity { .. } => exit::CAPACITY,
                _ => exit::USAGE,
            };
            return Outcome {
                exit_code: code,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
                report: None,
            };
        }
    };

    let exit_code = match &computed.checks {
        Some(checks) if checks.iter().any(|c| c.status == CheckStatus::Fail) => {
            exit::VERIFY_MISMATCH
        }
        _ => exit::SUCCESS,
    };

    let report = Report {
        input: config.parts.clone(),
        normalized: config.normalized.as_slice().to_vec(),
        mode: config.mode.name(),
        result: computed.result,
        lattice_cells: computed.lattice_cells,
        elapsed_ms: millis(elapsed),
        checks: computed.checks,
    };

    let mut stderr = String::new();
    if report.input != report.normalized {
        writeln!(
            stderr,
            "note: dropped empty parts, using {}",
            config.normalized
        )
        .unwrap();
    }
    let stdout = if config.json {
        let mut line = serde_json::to_string(&report).expect("report serializes");
        line.push('\n');
        line
    } else {
        if config.time_report {
            writeln!(stderr, "elapsed: {:.3} ms", report.elapsed_ms).unwrap();
        }
        let mut out = computed.plain;
        for check in report.checks.iter().flatten() {
            let status = match check.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "skipped",
            };
            writeln!(out, "{}: {status}", check.name).unwrap();
        }
        out
    };
    if exit_code == exit::VERIFY_MISMATCH {
        writeln!(stderr, "error: verification mismatch").unwrap();
    }

    Outcome {
        exit_code,
        stdout,
        stderr,
        report: Some(report),
    }
}

/// Milliseconds, rounded to whole microseconds.
fn millis(d: Duration) -> f64 {
    d.as_micros() as f64 / 1000.0
}

fn compute(config: &RunConfig) -> Result<Computed, Error> {
    let n = &config.normalized;
    let budget = config.memory_budget_cells;
    let cells = n.lattice_cells().and_then(|c| u64::try_from(c).ok());
    let single = |value: String, checks| Computed {
        plain: format!("{value}\n"),
        result: value,
        lattice_cells: cells,
        checks,
    };

    Ok(match config.mode {
        Mode::Ao => single(ao_count_with_budget(n, budget)?.to_string(), None),
        Mode::Hp => {
            let table = HpTable::build(n, Pivot::First, budget)?;
            let top = BlockTuple::from(n.clone());
            let value = table.get(&top).expect("n is the top of its own lattice");
            single(value.to_string(), None)
        }
        Mode::AoPlusEdge => {
            let part = config
                .plus_edge_part
                .expect("parse_args sets plus_edge_part in ao-plus-edge mode");
            single(
                ao_count_plus_inner_edge_with_budget(n, part, budget)?.to_string(),
                None,
            )
        }
        Mode::Verify => {
            let value = ao_count_with_budget(n, budget)?;
            let checks = verify::run_checks(n, &value, config.verify_cap, budget);
            single(value.to_string(), Some(checks))
        }
        Mode::Stirling => {
            let table = StirlingTable::build(n.max_part());
            let rows: Vec<Vec<String>> = n
                .as_slice()
                .iter()
                .map(|&a| table.row(a).iter().map(|v| v.to_string()).collect())
                .collect();
            Computed {
                result: rows
                    .iter()
                    .map(|r| r.join(","))
                    .collect::<Vec<_>>()
                    .join(";"),
                plain: rows.iter().map(|r| r.join(" ") + "\n").collect(),
                lattice_cells: None,
                checks: None,
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_args;

    fn run_args(argv: &[&str]) -> Outcome {
        run(&parse_args(argv).unwrap())
    }

    #[test]
    fn ao_plain() {
        let out = run_args(&["--parts", "2,2"]);
        assert_eq!((out.exit_code, out.stdout.as_str()), (0, "14\n"));
        assert_eq!(run_args(&["--parts", "1,1,1"]).stdout, "6\n");
    }

    #[test]
    fn hp_infeasible_is_zero() {
        assert_eq!(run_args(&["--parts", "3,1", "--mode", "hp"]).stdout, "0\n");
        assert_eq!(run_args(&["--parts", "2,2", "--mode", "hp"]).stdout, "8\n");
    }

    #[test]
    fn plus_edge() {
        let out = run_args(&[
            "--parts",
            "2,2",
            "--mode",
            "ao-plus-edge",
            "--plus-edge-part",
            "1",
        ]);
        assert_eq!(out.stdout, "18\n");
    }

    #[test]
    fn stirling_rows() {
        let out = run_args(&["--parts", "4,2", "--mode", "stirling", "--json"]);
        let report = out.report.unwrap();
        assert_eq!(report.result, "0,1,7,6,1;0,1,1");
        assert_eq!(report.lattice_cells, None);
        assert_eq!(
            run_args(&["--parts", "3", "--mode", "stirling"]).stdout,
            "0 1 3 1\n"
        );
    }

    #[test]
    fn capacity_exit_code() {
        let out = run_args(&["--parts", "10,10", "--memory-cells", "50"]);
        assert_eq!(out.exit_code, exit::CAPACITY);
        assert!(out.stdout.is_empty());
        assert!(out.stderr.contains("budget"));
    }

    #[test]
    fn normalization_is_reported() {
        let out = run_args(&["--parts", "2,0,2", "--json"]);
        let report = out.report.unwrap();
        assert_eq!(report.input, vec![2, 0, 2]);
        assert_eq!(report.normalized, vec![2, 2]);
        assert_eq!(report.result, "14");
        assert!(out.stderr.contains("(2,2)"));
    }

    #[test]
    fn verify_small_cap_passes() {
        let out = run_args(&["--parts", "2,3", "--mode", "verify", "--verify-cap", "5"]);
        assert_eq!(out.exit_code, 0, "{}", out.stdout);
        let checks = out.report.unwrap().checks.unwrap();
        assert!(
            checks.iter().all(|c| c.status == CheckStatus::Pass),
            "{checks:?}"
        );
    }
}
