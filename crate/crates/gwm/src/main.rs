//! Command-line front end: validation, duality, classification, enumeration,
//! power computation, ranking and conjecture verification with
//! machine-readable output.
//!
//! Exit status: 0 on success, 1 on domain errors (structured JSON with
//! `--format json`), 2 on usage errors. Data goes to stdout, diagnostics to
//! stderr.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use gwm::enumeration::{count, CountQuery, Family};
use gwm::json::{
    biguint_number, conjecture_report_to_json, game_from_json, game_to_json, power_to_json,
    ranking_to_json, rational_from_str, rational_to_decimal, rational_to_string, verdict_to_json,
    GameJson,
};
use gwm::oracle;
use gwm::power::{
    power_profile, rank_games, verify_banzhaf_conjecture, BipartiteGame, PowerIndex, PowerProfile,
    SemivalueWeights,
};
use gwm::weighted::classify_weighted;
use gwm::CompleteGameInvariants;

#[derive(Parser)]
#[command(
    name = "gwm",
    version,
    about = "Exact computations on complete simple games with one shift-minimal winning vector"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
    Json,
}

/// Game input: either an invariants JSON file or the four bipartite flags.
#[derive(Args)]
struct GameInput {
    /// Invariants JSON file ({"n": [...], "M": [[...]]}); "-" reads stdin
    #[arg(long, value_name = "PATH", conflicts_with_all = ["n1", "n2", "a", "b"])]
    game: Option<String>,

    /// Size of the strongest class
    #[arg(long, requires_all = ["n2", "a", "b"])]
    n1: Option<u32>,

    /// Size of the weakest class
    #[arg(long, requires_all = ["n1", "a", "b"])]
    n2: Option<u32>,

    /// Strong-class entry of the shift-minimal winning vector
    #[arg(long, requires_all = ["n1", "n2", "b"])]
    a: Option<u32>,

    /// Weak-class entry of the shift-minimal winning vector
    #[arg(long, requires_all = ["n1", "n2", "a"])]
    b: Option<u32>,
}

impl GameInput {
    fn load(&self) -> Result<CompleteGameInvariants, String> {
        if let Some(path) = &self.game {
            let text = if path == "-" {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| e.to_string())?;
                buf
            } else {
                std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
            };
            return game_from_json(&text);
        }
        match (self.n1, self.n2, self.a, self.b) {
            (Some(n1), Some(n2), Some(a), Some(b)) => {
                let g = BipartiteGame::new(n1, n2, a, b).map_err(|e| e.to_string())?;
                Ok(g.invariants())
            }
            _ => Err("provide either --game or all of --n1/--n2/--a/--b".to_string()),
        }
    }

    fn load_bipartite(&self) -> Result<BipartiteGame, String> {
        let g = self.load()?;
        let sizes = g.hierarchy().class_sizes();
        if sizes.len() != 2 || g.num_rows() != 1 {
            return Err(format!(
                "expected a bipartite game with one shift-minimal winning vector, got {} classes and {} rows",
                sizes.len(),
                g.num_rows()
            ));
        }
        let row = g.rows()[0].entries();
        BipartiteGame::new(sizes[0], sizes[1], row[0], row[1]).map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a hierarchy and matrix form valid invariants
    Validate {
        #[command(flatten)]
        input: GameInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Invariants of the dual game
    Dual {
        #[command(flatten)]
        input: GameInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Weightedness verdict with an exact representation when weighted
    Classify {
        #[command(flatten)]
        input: GameInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Approximate decimal rendering with this many digits
        #[arg(long, value_name = "DIGITS")]
        decimal: Option<u32>,
        /// Re-derive the answer from the coalition oracle and diff (n <= 22)
        #[arg(long, hide = true)]
        oracle: bool,
    },
    /// Closed-form counts of games, as CSV rows (n,t,r,family,count)
    Enumerate {
        /// weighted | complete | weighted-dual | complete-dual |
        /// nontrivial-weighted | symmetric
        #[arg(long)]
        family: String,
        /// Number of players
        #[arg(long, conflicts_with = "n_max")]
        n: Option<u32>,
        /// Sweep n = 1..=N instead of a single n
        #[arg(long, value_name = "N")]
        n_max: Option<u32>,
        /// Number of equivalence classes; omit for *
        #[arg(long)]
        t: Option<u32>,
        /// Number of shift-minimal winning vectors; omit for *
        #[arg(long)]
        r: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: TableFormat,
    },
    /// Swing counts and power indices of a bipartite game
    Power {
        #[command(flatten)]
        input: GameInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Approximate decimal rendering with this many digits
        #[arg(long, value_name = "DIGITS")]
        decimal: Option<u32>,
        /// Re-derive the answer from the coalition oracle and diff (n <= 22)
        #[arg(long, hide = true)]
        oracle: bool,
    },
    /// Rank all (a,b) games on a hierarchy by class-1 index value
    Rank {
        #[arg(long)]
        n1: u32,
        #[arg(long)]
        n2: u32,
        /// ss | bz-rel | bz-abs | semivalue
        #[arg(long, value_enum, default_value = "ss")]
        index: IndexArg,
        /// Semivalue coefficients: JSON array of rationals, one per size
        #[arg(long, value_name = "PATH", required_if_eq("index", "semivalue"))]
        weights: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exhaustively verify the relative-Banzhaf order conjecture
    VerifyConjecture {
        #[arg(long, value_name = "N")]
        n_max: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the formula-versus-oracle suites; exit 0 iff all pass
    Selfcheck {
        #[arg(long, value_name = "N", default_value = "10")]
        n_max: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum IndexArg {
    Ss,
    BzRel,
    BzAbs,
    Semivalue,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_errors = wants_json(&cli.command);
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            if json_errors {
                let payload = serde_json::json!({ "error": message });
                println!("{payload}");
            }
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn wants_json(command: &Command) -> bool {
    match command {
        Command::Validate { format, .. }
        | Command::Dual { format, .. }
        | Command::Classify { format, .. }
        | Command::Power { format, .. }
        | Command::Rank { format, .. }
        | Command::VerifyConjecture { format, .. } => *format == Format::Json,
        Command::Enumerate { format, .. } => *format == TableFormat::Json,
        Command::Selfcheck { .. } => false,
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Validate { input, format } => {
            let game = input.load()?;
            match format {
                Format::Text => println!("valid: {}", game_to_json(&game)),
                Format::Json => {
                    let raw = GameJson::from(&game);
                    let payload = serde_json::json!({
                        "valid": true,
                        "n": raw.n,
                        "M": raw.m,
                    });
                    println!("{payload}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dual { input, format } => {
            let game = input.load()?;
            let dual = game.dual().map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("{}", game_to_json(&dual)),
                Format::Json => println!("{}", game_to_json(&dual)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify {
            input,
            format,
            decimal,
            oracle: check_oracle,
        } => {
            let game = input.load()?;
            let verdict = classify_weighted(&game).map_err(|e| e.to_string())?;
            if check_oracle {
                oracle_check_classify(&game, &verdict)?;
            }
            print_classify(&verdict, format, decimal);
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            family,
            n,
            n_max,
            t,
            r,
            format,
        } => run_enumerate(&family, n, n_max, t, r, format),
        Command::Power {
            input,
            format,
            decimal,
            oracle: check_oracle,
        } => {
            let game = input.load_bipartite()?;
            let profile = power_profile(&game);
            if check_oracle {
                oracle_check_power(&game, &profile)?;
            }
            print_power(&game, &profile, format, decimal);
            Ok(ExitCode::SUCCESS)
        }
        Command::Rank {
            n1,
            n2,
            index,
            weights,
            format,
        } => {
            let index = match index {
                IndexArg::Ss => PowerIndex::ShapleyShubik,
                IndexArg::BzRel => PowerIndex::BanzhafRelative,
                IndexArg::BzAbs => PowerIndex::BanzhafAbsolute,
                IndexArg::Semivalue => {
                    let path = weights.expect("clap enforces --weights");
                    PowerIndex::Semivalue(load_weights(&path, n1 + n2)?)
                }
            };
            let report = rank_games(n1, n2, &index).map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("{}", report.chain_string()),
                Format::Json => println!("{}", ranking_to_json(&report)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyConjecture { n_max, format } => {
            if n_max < 2 {
                return Err("--n-max must be at least 2".to_string());
            }
            let report = verify_banzhaf_conjecture(n_max);
            let pass = report.violations.is_empty();
            match format {
                Format::Text => {
                    println!(
                        "checked {} games with n <= {}",
                        report.games_checked, report.n_max
                    );
                    println!("violations: {}", report.violations.len());
                    for v in &report.violations {
                        println!(
                            "  ({},{}) a={} b={} {:?}: {} vs {}",
                            v.n1,
                            v.n2,
                            v.a,
                            v.b,
                            v.kind,
                            rational_to_string(&v.lhs),
                            rational_to_string(&v.rhs)
                        );
                    }
                    println!("cross-family ties: {}", report.ties.len());
                    for t in &report.ties {
                        println!(
                            "  n={} ({},{}): ({},{}) ~ ({},{}) numerators ({},{}) / ({},{})",
                            t.n1 + t.n2,
                            t.n1,
                            t.n2,
                            t.first.0,
                            t.first.1,
                            t.second.0,
                            t.second.1,
                            t.first_numerators.0,
                            t.first_numerators.1,
                            t.second_numerators.0,
                            t.second_numerators.1
                        );
                    }
                    println!("{}", if pass { "PASS" } else { "FAIL" });
                }
                Format::Json => println!("{}", conjecture_report_to_json(&report)),
            }
            Ok(if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Selfcheck { n_max } => {
            let results = gwm::selfcheck::run(n_max);
            let mut all = true;
            for r in &results {
                if r.passed {
                    println!("ok {}", r.name);
                } else {
                    all = false;
                    println!("FAIL {} ({})", r.name, r.detail);
                }
            }
            println!(
                "selfcheck: {}/{} suites passed (n_max={n_max})",
                results.iter().filter(|r| r.passed).count(),
                results.len()
            );
            Ok(if all {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn load_weights(path: &str, n: u32) -> Result<SemivalueWeights, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let raw: Vec<String> = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let parsed = raw
        .iter()
        .map(|s| rational_from_str(s))
        .collect::<Result<Vec<_>, _>>()?;
    if parsed.len() != n as usize {
        return Err(format!(
            "expected {n} weights for {n} players, got {}",
            parsed.len()
        ));
    }
    SemivalueWeights::new(parsed).map_err(|e| e.to_string())
}

fn print_power(game: &BipartiteGame, profile: &PowerProfile, format: Format, decimal: Option<u32>) {
    match format {
        Format::Json => println!("{}", power_to_json(game, profile, decimal)),
        Format::Text => {
            println!(
                "game: n=({},{}) M=({} {})",
                game.n1(),
                game.n2(),
                game.a(),
                game.b()
            );
            println!("c1: {}", profile.c1);
            println!("c2: {}", profile.c2);
            println!(
                "ss: {} {}",
                rational_to_string(&profile.ss1),
                rational_to_string(&profile.ss2)
            );
            println!(
                "bz_rel: {} {}",
                rational_to_string(&profile.bz1_rel),
                rational_to_string(&profile.bz2_rel)
            );
            println!(
                "bz_abs: {} {}",
                rational_to_string(&profile.bz1_abs),
                rational_to_string(&profile.bz2_abs)
            );
            if let Some(digits) = decimal {
                println!(
                    "approx({digits} digits): ss {} {} | bz_rel {} {} | bz_abs {} {}",
                    rational_to_decimal(&profile.ss1, digits),
                    rational_to_decimal(&profile.ss2, digits),
                    rational_to_decimal(&profile.bz1_rel, digits),
                    rational_to_decimal(&profile.bz2_rel, digits),
                    rational_to_decimal(&profile.bz1_abs, digits),
                    rational_to_decimal(&profile.bz2_abs, digits)
                );
            }
        }
    }
}

fn print_classify(verdict: &gwm::WeightednessVerdict, format: Format, decimal: Option<u32>) {
    match format {
        Format::Json => println!("{}", verdict_to_json(verdict, decimal)),
        Format::Text => {
            println!(
                "weighted: {}",
                if verdict.is_weighted { "yes" } else { "no" }
            );
            println!(
                "stripped classes: {} veto, {} null",
                verdict.stripped_veto_classes, verdict.stripped_null_classes
            );
            if let Some(rep) = &verdict.representation {
                let join = |values: Vec<String>| values.join(", ");
                println!(
                    "representation: [{}; {}]",
                    rational_to_string(rep.quota()),
                    join(rep.class_weights().iter().map(rational_to_string).collect())
                );
                if let Some(digits) = decimal {
                    println!(
                        "approx({} digits): [{}; {}]",
                        digits,
                        rational_to_decimal(rep.quota(), digits),
                        join(
                            rep.class_weights()
                                .iter()
                                .map(|w| rational_to_decimal(w, digits))
                                .collect()
                        )
                    );
                }
            }
        }
    }
}

fn run_enumerate(
    family: &str,
    n: Option<u32>,
    n_max: Option<u32>,
    t: Option<u32>,
    r: Option<u32>,
    format: TableFormat,
) -> Result<ExitCode, String> {
    let family = Family::parse(family).ok_or_else(|| format!("unknown family {family:?}"))?;
    let ns: Vec<u32> = match (n, n_max) {
        (Some(n), None) => vec![n],
        (None, Some(max)) => (1..=max).collect(),
        (None, None) => return Err("provide --n or --n-max".to_string()),
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    };
    let mut rows = Vec::with_capacity(ns.len());
    for n in &ns {
        let query = CountQuery {
            family,
            n: *n,
            t,
            r,
        };
        let value = count(&query).map_err(|e| e.to_string())?;
        rows.push((*n, value));
    }
    let t_label = t.map_or_else(|| "*".to_string(), |v| v.to_string());
    let r_label = r.map_or_else(|| "*".to_string(), |v| v.to_string());
    match format {
        TableFormat::Text if rows.len() == 1 => println!("{}", rows[0].1),
        TableFormat::Text | TableFormat::Csv => {
            println!("n,t,r,family,count");
            for (n, value) in &rows {
                println!("{n},{t_label},{r_label},{family},{value}");
            }
        }
        TableFormat::Json => {
            let table: Vec<serde_json::Value> = rows
                .iter()
                .map(|(n, value)| {
                    serde_json::json!({
                        "n": n,
                        "t": t_label,
                        "r": r_label,
                        "family": family.to_string(),
                        "count": biguint_number(value),
                    })
                })
                .collect();
            println!("{}", serde_json::Value::from(table));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn oracle_check_power(game: &BipartiteGame, profile: &PowerProfile) -> Result<(), String> {
    let explicit = oracle::realize(&game.invariants()).map_err(|e| e.to_string())?;
    let power = oracle::brute_power(&explicit);
    let class2 = game.n1() as usize;
    let ok = BigUint::from(power[0].swings) == profile.c1
        && BigUint::from(power[class2].swings) == profile.c2
        && power[0].ss == profile.ss1
        && power[class2].ss == profile.ss2
        && power[0].bz_rel == profile.bz1_rel
        && power[class2].bz_rel == profile.bz2_rel
        && power[0].bz_abs == profile.bz1_abs
        && power[class2].bz_abs == profile.bz2_abs;
    if ok {
        eprintln!("oracle check: ok");
        Ok(())
    } else {
        Err("oracle check failed: formula and enumeration disagree".to_string())
    }
}

fn oracle_check_classify(
    game: &CompleteGameInvariants,
    verdict: &gwm::WeightednessVerdict,
) -> Result<(), String> {
    let explicit = oracle::realize(game).map_err(|e| e.to_string())?;
    let back = oracle::extract_invariants(&explicit).map_err(|e| e.to_string())?;
    if &back != game {
        return Err("oracle check failed: invariants round trip mismatch".to_string());
    }
    if let Some(rep) = &verdict.representation {
        let weights = rep
            .player_weights(game.hierarchy())
            .map_err(|e| e.to_string())?;
        let ok = oracle::check_weighted_representation(&explicit, rep.quota(), &weights)
            .map_err(|e| e.to_string())?;
        if !ok {
            return Err(
                "oracle check failed: representation does not separate winning from losing"
                    .to_string(),
            );
        }
    }
    eprintln!("oracle check: ok");
    Ok(())
}
