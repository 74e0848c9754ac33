use clap::{error::ErrorKind, Parser, ValueEnum};
use kpartite_ao::{normalize_part_sizes, PartSizes, DEFAULT_MEMORY_CELLS};

/// Largest total vertex count the oracle sweep accepts.
pub const MAX_VERIFY_CAP: usize = 8;
pub const DEFAULT_VERIFY_CAP: usize = MAX_VERIFY_CAP;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Acyclic orientations of G_n.
    Ao,
    /// Hamiltonian paths of G_n.
    Hp,
    /// Acyclic orientations of G_n plus one edge inside a part.
    AoPlusEdge,
    /// Acyclic orientations, cross-checked against brute-force oracles.
    Verify,
    /// Rows S(n_i, 0..=n_i) of the Stirling numbers of the second kind.
    Stirling,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Ao => "ao",
            Mode::Hp => "hp",
            Mode::AoPlusEdge => "ao-plus-edge",
            Mode::Verify => "verify",
            Mode::Stirling => "stirling",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    /// Part sizes as given, zeros included.
    pub parts: Vec<usize>,
    pub normalized: PartSizes,
    pub mode: Mode,
    /// 1-based index into `normalized`.
    pub plus_edge_part: Option<usize>,
    pub verify_cap: usize,
    pub json: bool,
    pub time_report: bool,
    pub memory_budget_cells: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArgsError {
    Help(String),
    /// One-line diagnostic.
    Usage(String),
}

/// Count acyclic orientations of complete k-partite graphs.
#[derive(Debug, Parser)]
#[command(name = "kpartite-ao", version)]
struct Cli {
    /// Comma-separated part sizes, e.g. 3,4,5. Zero-sized parts are dropped.
    #[arg(long, value_delimiter = ',', required = true, num_args = 1)]
    parts: Vec<usize>,

    #[arg(long, value_enum, default_value = "ao")]
    mode: Mode,

    /// 1-based position in --parts of the part that receives the extra edge.
    #[arg(long)]
    plus_edge_part: Option<usize>,

    /// Largest total vertex count for the oracle sweeps in verify mode.
    #[arg(long)]
    verify_cap: Option<usize>,

    /// Emit one JSON object instead of plain text.
    #[arg(long)]
    json: bool,

    /// Report elapsed time.
    #[arg(long)]
    time: bool,

    /// Cap on the number of dynamic-programming table cells.
    #[arg(long, default_value_t = DEFAULT_MEMORY_CELLS)]
    memory_cells: usize,
}

pub fn parse_args<S: AsRef<str>>(argv: &[S]) -> Result<RunConfig, ArgsError> {
    let argv = std::iter::once("kpartite-ao").chain(argv.iter().map(AsRef::as_ref));
    let cli = Cli::try_parse_from(argv).map_err(|e| match e.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ArgsError::Help(e.to_string()),
        _ => {
            let rendered = e.to_string();
            ArgsError::Usage(rendered.lines().next().unwrap_or("error").to_string())
        }
    })?;

    let usage = |msg: String| ArgsError::Usage(format!("error: {msg}"));

    let normalized =
        normalize_part_sizes(&cli.parts).map_err(|e| usage(format!("--parts: {e}")))?;

    let plus_edge_part = match (cli.mode, cli.plus_edge_part) {
        (Mode::AoPlusEdge, None) => {
            return Err(usage(
                "--mode ao-plus-edge requires --plus-edge-part".into(),
            ))
        }
        (Mode::AoPlusEdge, Some(i)) => {
            if i == 0 || i > cli.parts.len() {
                return Err(usage(format!(
                    "--plus-edge-part: {i} is not a position in --parts (1..={})",
                    cli.parts.len()
                )));
            }
            if cli.parts[i - 1] < 2 {
                return Err(usage(format!(
                    "--plus-edge-part: part {i} has {} vertices, need at least 2",
                    cli.parts[i - 1]
                )));
            }
            // Position among the nonzero parts.
            Some(cli.parts[..i].iter().filter(|&&p| p > 0).count())
        }
        (_, Some(_)) => {
            return Err(usage(
                "--plus-edge-part is only valid with --mode ao-plus-edge".into(),
            ))
        }
        (_, None) => None,
    };

    let verify_cap = match (cli.mode, cli.verify_cap) {
        (Mode::Verify, Some(t)) if t > MAX_VERIFY_CAP => {
            return Err(usage(format!(
                "--verify-cap: {t} exceeds the oracle limit of {MAX_VERIFY_CAP}"
            )))
        }
        (Mode::Verify, t) => t.unwrap_or(DEFAULT_VERIFY_CAP),
        (_, Some(_)) => {
            return Err(usage(
                "--verify-cap is only valid with --mode verify".into(),
            ))
        }
        (_, None) => DEFAULT_VERIFY_CAP,
    };

    Ok(RunConfig {
        parts: cli.parts,
        normalized,
        mode: cli.mode,
        plus_edge_part,
        verify_cap,
        json: cli.json,
        time_report: cli.time,
        memory_budget_cells: cli.memory_cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn usage_message(argv: &[&str]) -> String {
        match parse_args(argv) {
            Err(ArgsError::Usage(msg)) => msg,
            other => panic!("expected usage error, got {other:?}"),
        }
    }

    #[test]
    fn default_mode_is_ao() {
        let c = parse_args(&["--parts", "3,4,5"]).unwrap();
        assert_eq!(c.mode, Mode::Ao);
        assert_eq!(c.normalized.as_slice(), &[3, 4, 5]);
        assert!(!c.json && !c.time_report);
        assert_eq!(c.memory_budget_cells, DEFAULT_MEMORY_CELLS);
    }

    #[test]
    fn plus_edge_config() {
        let c = parse_args(&[
            "--parts",
            "2,2",
            "--mode",
            "ao-plus-edge",
            "--plus-edge-part",
            "1",
        ])
        .unwrap();
        assert_eq!(c.mode, Mode::AoPlusEdge);
        assert_eq!(c.plus_edge_part, Some(1));
    }

    #[test]
    fn plus_edge_index_follows_raw_position() {
        let c = parse_args(&[
            "--parts",
            "0,2,3",
            "--mode",
            "ao-plus-edge",
            "--plus-edge-part",
            "3",
        ])
        .unwrap();
        assert_eq!(c.normalized.as_slice(), &[2, 3]);
        assert_eq!(c.plus_edge_part, Some(2));
    }

    #[test]
    fn all_zero_rejected() {
        assert!(usage_message(&["--parts", "0,0"]).contains("--parts"));
    }

    #[test]
    fn unknown_flag_named() {
        assert!(usage_message(&["--parts", "2", "--bogus"]).contains("--bogus"));
    }

    #[test]
    fn bad_number_named() {
        assert!(usage_message(&["--parts", "2,x"]).contains("--parts"));
        assert!(usage_message(&["--parts", "2,-1"]).contains("--parts"));
    }

    #[test]
    fn diagnostics_are_one_line() {
        for argv in [
            &["--parts", "2", "--bogus"][..],
            &["--mode", "ao"],
            &["--parts", "2", "--mode", "nope"],
        ] {
            assert_eq!(usage_message(argv).lines().count(), 1, "{argv:?}");
        }
    }

    #[test]
    fn plus_edge_validation() {
        assert!(usage_message(&["--parts", "2,2", "--mode", "ao-plus-edge"])
            .contains("--plus-edge-part"));
        assert!(usage_message(&[
            "--parts",
            "1,1",
            "--mode",
            "ao-plus-edge",
            "--plus-edge-part",
            "1"
        ])
        .contains("at least 2"));
        assert!(usage_message(&[
            "--parts",
            "2,2",
            "--mode",
            "ao-plus-edge",
            "--plus-edge-part",
            "3"
        ])
        .contains("--plus-edge-part"));
        assert!(usage_message(&["--parts", "2,2", "--plus-edge-part", "1"])
            .contains("--plus-edge-part"));
    }

    #[test]
    fn verify_cap_validation() {
        let c = parse_args(&["--parts", "2,2", "--mode", "verify", "--verify-cap", "5"]).unwrap();
        assert_eq!(c.verify_cap, 5);
        assert!(
            usage_message(&["--parts", "2", "--mode", "verify", "--verify-cap", "9"])
                .contains("--verify-cap")
        );
        assert!(usage_message(&["--parts", "2", "--verify-cap", "3"]).contains("--verify-cap"));
    }

    #[test]
    fn help_is_not_an_error() {
        assert!(matches!(parse_args(&["--help"]), Err(ArgsError::Help(_))));
    }
}
