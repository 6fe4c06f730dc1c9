//! `plattice`: command-line front end for the priority-lattice library.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use priority_lattice::bijections::{phi, phi_inverse, psi, psi_inverse, weary};
use priority_lattice::enumeration::{
    chain_count_hook, characteristic_polynomial_closed, characteristic_polynomial_sum,
    corank_gf_coefficients, flag_vectors, gamma_census, hook_lengths, mobius, theta_census,
    whitney_first, whitney_second, whitney_second_closed, Polynomial,
};
use priority_lattice::forest::{OrderedForest, PriorityForest};
use priority_lattice::lattice::Lattice;
use priority_lattice::parking::PartialParkingFunction;
use priority_lattice::verify::{run as run_verify, Suite};
use priority_lattice::Error;

const DEFAULT_MAX_N: usize = 7;

#[derive(Parser)]
#[command(name = "plattice", version, about = "Exact combinatorics of the priority lattice")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build and export the lattice.
    Lattice {
        #[command(subcommand)]
        command: LatticeCmd,
    },
    /// Count or list complete chains.
    Chains {
        #[command(subcommand)]
        command: ChainsCmd,
    },
    /// Run the bijections on JSON inputs.
    Map {
        #[command(subcommand)]
        command: MapCmd,
    },
    /// Run the parking process on a preference list.
    Park { pf: PathBuf },
    /// Statistics of forests and parking functions.
    Stats {
        #[command(subcommand)]
        command: StatsCmd,
    },
    /// Enumerative invariants.
    Invariants {
        #[command(subcommand)]
        command: InvariantsCmd,
    },
    /// Run the oracle verification suites.
    Verify {
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Materialize the lattice on [0, n].
    Build {
        n: usize,
        /// Emit the Hasse diagram in DOT format.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        /// Emit elements, ranks, and labeled covers as JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum ChainsCmd {
    /// Number of complete m-chains.
    Count { n: usize, m: usize },
    /// List complete m-chains as arrays of forests.
    List {
        n: usize,
        m: usize,
        /// Restrict to chains ending at this forest.
        #[arg(long)]
        top: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum MapCmd {
    /// Ordered forest to partial parking function (the weary bijection).
    ForestToPf {
        forest: PathBuf,
        /// Also emit the intermediate chain.
        #[arg(long)]
        via_chain: bool,
    },
    /// Partial parking function to ordered forest.
    PfToForest {
        pf: PathBuf,
        #[arg(long)]
        via_chain: bool,
    },
    /// Complete chain (array of forests) to ordered forest.
    ChainToForest { chain: PathBuf },
    /// Complete chain (array of forests) to partial parking function.
    ChainToPf { chain: PathBuf },
}

#[derive(Subcommand)]
enum StatsCmd {
    /// Records, psa, and wait of an ordered forest.
    Forest { forest: PathBuf },
    /// Records, lucky cars, and probes of a partial parking function.
    Pf { pf: PathBuf },
}

#[derive(Subcommand)]
enum InvariantsCmd {
    /// Whitney numbers of the second kind (level sizes).
    Whitney { n: usize },
    /// Characteristic polynomial of the lattice or of a forest ideal.
    Charpoly {
        n: usize,
        #[arg(long)]
        ideal: Option<PathBuf>,
    },
    /// Möbius function: full sparse matrix or a single pair.
    Mobius {
        n: usize,
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        pair: Option<Vec<PathBuf>>,
    },
    /// Hook lengths and maximal-chain count of a forest ideal.
    Hooks { forest: PathBuf },
    /// Flag f- and h-vectors (alpha and beta tables).
    Flag { n: usize },
    /// Isomorphism censuses of principal ideals (gamma) or filters (theta).
    Census {
        #[arg(value_parser = ["gamma", "theta"])]
        which: String,
        n: usize,
        /// Print the sequence prefix with its OEIS identifier.
        #[arg(long)]
        oeis: bool,
    },
    /// Corank generating function coefficients up to z^(n+1).
    CorankGf {
        n: usize,
        #[arg(long)]
        oeis: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let (kind, code) = classify(&e);
            eprintln!(
                "{}",
                serde_json::to_string(&json!({"error": kind, "message": e.message})).unwrap()
            );
            ExitCode::from(code)
        }
    }
}

struct CliError {
    kind: &'static str,
    message: String,
    resource: bool,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let resource = matches!(e, Error::ResourceLimit { .. });
        CliError {
            kind: error_kind(&e),
            message: e.to_string(),
            resource,
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidPermutation(_) => "invalid-permutation",
        Error::InvalidOrderedForest(_) => "invalid-ordered-forest",
        Error::InvalidPriorityForest(_) => "invalid-priority-forest",
        Error::InvalidParkingFunction(_) => "invalid-parking-function",
        Error::DomainMismatch => "domain-mismatch",
        Error::NotAParkingFunction => "not-a-parking-function",
        Error::NotACover => "not-a-cover",
        Error::ContainsTop => "contains-top",
        Error::NotSaturated => "not-saturated",
        Error::InvalidLabelWord => "invalid-label-word",
        Error::EdgeNotInDifference => "edge-not-in-difference",
        Error::NotComparable => "not-comparable",
        Error::NotAbove => "not-above",
        Error::ResourceLimit { .. } => "resource-limit",
    }
}

fn classify(e: &CliError) -> (&'static str, u8) {
    (e.kind, if e.resource { 2 } else { 1 })
}

fn io_error(message: String) -> CliError {
    CliError {
        kind: "io",
        message,
        resource: false,
    }
}

fn check_cap(n: usize) -> Result<(), CliError> {
    let cap = std::env::var("PLATTICE_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_N);
    if n > cap {
        Err(Error::ResourceLimit {
            requested: n,
            cap,
        }
        .into())
    } else {
        Ok(())
    }
}

fn read_json<T: DeserializeOwned>(path: &PathBuf) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| io_error(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| io_error(format!("cannot parse {}: {e}", path.display())))
}

fn emit(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).unwrap());
}

fn bigints(values: &[BigInt]) -> Value {
    Value::from(values.iter().map(|v| v.to_string()).collect::<Vec<_>>())
}

fn polynomial_json(p: &Polynomial) -> Value {
    json!({
        "variable": "q",
        "coefficients_ascending": bigints(p.coeffs()),
    })
}

fn chain_json(chain: &[PriorityForest]) -> Value {
    serde_json::to_value(chain).unwrap()
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Lattice {
            command: LatticeCmd::Build { n, dot, json },
        } => {
            check_cap(n)?;
            let l = Lattice::build(n);
            if dot {
                print!("{}", l.to_dot());
            } else if json {
                emit(&l.to_json());
            } else {
                emit(&json!({
                    "n": n,
                    "elements": l.len(),
                    "level_sizes": l.level_sizes(),
                }));
            }
        }
        Command::Chains { command } => match command {
            ChainsCmd::Count { n, m } => {
                check_cap(n)?;
                let l = Lattice::build(n);
                let count = l.complete_chains(m).len();
                emit(&json!({
                    "n": n,
                    "m": m,
                    "count": count,
                    "cayley": priority_lattice::cayley_forest_count(m, n),
                }));
            }
            ChainsCmd::List { n, m, top } => {
                check_cap(n)?;
                let l = Lattice::build(n);
                let wanted: Option<PriorityForest> = match top {
                    Some(path) => Some(read_json(&path)?),
                    None => None,
                };
                let chains: Vec<Value> = l
                    .complete_chains(m)
                    .into_iter()
                    .map(|c| {
                        c.into_iter()
                            .map(|x| l.forest(x).unwrap().clone())
                            .collect::<Vec<_>>()
                    })
                    .filter(|c| wanted.as_ref().is_none_or(|w| c.last() == Some(w)))
                    .map(|c| chain_json(&c))
                    .collect();
                emit(&Value::from(chains));
            }
        },
        Command::Map { command } => match command {
            MapCmd::ForestToPf { forest, via_chain } => {
                let f: OrderedForest = read_json(&forest)?;
                let pf = weary(&f);
                let mut out = json!({ "result": pf });
                if via_chain {
                    out["chain"] = chain_json(&phi_inverse(&f));
                }
                emit(&out);
            }
            MapCmd::PfToForest { pf, via_chain } => {
                let p: PartialParkingFunction = read_json(&pf)?;
                let chain = psi_inverse(&p)?;
                let f = phi(&chain)?;
                let mut out = json!({ "result": f });
                if via_chain {
                    out["chain"] = chain_json(&chain);
                }
                emit(&out);
            }
            MapCmd::ChainToForest { chain } => {
                let c: Vec<PriorityForest> = read_json(&chain)?;
                emit(&json!({ "result": phi(&c)? }));
            }
            MapCmd::ChainToPf { chain } => {
                let c: Vec<PriorityForest> = read_json(&chain)?;
                emit(&json!({ "result": psi(&c)? }));
            }
        },
        Command::Park { pf } => {
            let p: PartialParkingFunction = read_json(&pf)?;
            let outcome = p.park();
            let mut out = json!({ "outcome": outcome });
            if outcome.success {
                let stats = p.statistics()?;
                out["statistics"] = json!({
                    "lucky": stats.lucky,
                    "probes": stats.probes,
                });
            }
            emit(&out);
        }
        Command::Stats { command } => match command {
            StatsCmd::Forest { forest } => {
                let f: OrderedForest = read_json(&forest)?;
                let s = f.statistics();
                emit(&json!({
                    "records": s.records.iter().collect::<Vec<_>>(),
                    "psa": s.psa,
                    "wait": s.wait,
                    "sasc": s.sasc,
                    "diff": s.diff,
                }));
            }
            StatsCmd::Pf { pf } => {
                let p: PartialParkingFunction = read_json(&pf)?;
                let s = p.statistics()?;
                let records = p.park().birds_eye.records();
                emit(&json!({
                    "records": records.iter().collect::<Vec<_>>(),
                    "lucky": s.lucky,
                    "probes": s.probes,
                }));
            }
        },
        Command::Invariants { command } => run_invariants(command)?,
        Command::Verify { n, suite } => {
            check_cap(n)?;
            let report = run_verify(n, suite);
            for check in &report.checks {
                println!(
                    "{} {}",
                    if check.passed { "PASS" } else { "FAIL" },
                    check.name
                );
            }
            if !report.passed() {
                return Err(io_error(format!("verification failed for n = {n}")));
            }
        }
    }
    Ok(())
}

fn run_invariants(command: InvariantsCmd) -> Result<(), CliError> {
    match command {
        InvariantsCmd::Whitney { n } => {
            check_cap(n)?;
            let counted = whitney_second(&Lattice::build(n));
            let closed = whitney_second_closed(n);
            emit(&json!({
                "n": n,
                "counted": bigints(&counted),
                "closed": bigints(&closed),
                "agree": counted == closed,
            }));
        }
        InvariantsCmd::Charpoly { n, ideal } => {
            check_cap(n)?;
            let l = Lattice::build(n);
            let top = match ideal {
                Some(path) => {
                    let f: PriorityForest = read_json(&path)?;
                    if f.n() != n {
                        return Err(io_error(format!(
                            "forest is on [0, {}], lattice on [0, {n}]",
                            f.n()
                        )));
                    }
                    l.id_of(&f).expect("validated forest is an element")
                }
                None => l.top(),
            };
            let by_sum = characteristic_polynomial_sum(&l, top);
            let closed = characteristic_polynomial_closed(&l, top);
            emit(&json!({
                "n": n,
                "by_mobius_sum": polynomial_json(&by_sum),
                "closed_form": polynomial_json(&closed),
                "agree": by_sum == closed,
                "whitney_first": bigints(&whitney_first(&l, top)),
            }));
        }
        InvariantsCmd::Mobius { n, pair } => {
            check_cap(n)?;
            let l = Lattice::build(n);
            match pair {
                Some(paths) => {
                    let a: PriorityForest = read_json(&paths[0])?;
                    let b: PriorityForest = read_json(&paths[1])?;
                    let (x, y) = match (l.id_of(&a), l.id_of(&b)) {
                        (Some(x), Some(y)) => (x, y),
                        _ => {
                            return Err(io_error(format!("forests must live on [0, {n}]")));
                        }
                    };
                    emit(&json!({
                        "mu": mobius(&l, x, y)?.to_string(),
                    }));
                }
                None => {
                    let mut triples = Vec::new();
                    for x in l.all_ids() {
                        for y in l.all_ids() {
                            if l.leq(x, y) {
                                let mu = mobius(&l, x, y).unwrap();
                                if mu != BigInt::from(0) {
                                    triples.push(json!([x, y, mu.to_string()]));
                                }
                            }
                        }
                    }
                    emit(&json!({ "n": n, "nonzero": triples }));
                }
            }
        }
        InvariantsCmd::Hooks { forest } => {
            let f: PriorityForest = read_json(&forest)?;
            let hooks = hook_lengths(&f);
            emit(&json!({
                "hooks": hooks,
                "maximal_chains": chain_count_hook(&f).to_string(),
            }));
        }
        InvariantsCmd::Flag { n } => {
            check_cap(n)?;
            let (alpha, beta) = flag_vectors(&Lattice::build(n));
            let fmt = |table: &std::collections::BTreeMap<Vec<usize>, BigInt>| -> Value {
                let map: serde_json::Map<String, Value> = table
                    .iter()
                    .map(|(k, v)| {
                        let key = k
                            .iter()
                            .map(|p| p.to_string())
                            .collect::<Vec<_>>()
                            .join(",");
                        (key, Value::from(v.to_string()))
                    })
                    .collect();
                Value::Object(map)
            };
            emit(&json!({ "n": n, "alpha": fmt(&alpha), "beta": fmt(&beta) }));
        }
        InvariantsCmd::Census { which, n, oeis } => {
            check_cap(n)?;
            let counts: Vec<usize> = (1..=n)
                .map(|k| {
                    let l = Lattice::build(k);
                    if which == "gamma" {
                        gamma_census(&l)
                    } else {
                        theta_census(&l)
                    }
                })
                .collect();
            let mut out = json!({ "which": which, "n": n, "sequence": counts });
            if oeis {
                out["oeis"] = Value::from(if which == "gamma" {
                    "A014206 (n^2 + n + 2, shifted)"
                } else {
                    "A003422 (left factorials, shifted)"
                });
            }
            emit(&out);
        }
        InvariantsCmd::CorankGf { n, oeis } => {
            let table = corank_gf_coefficients(n);
            let rows: Vec<Value> = table.iter().map(|row| bigints(row)).collect();
            let totals: Vec<String> = table
                .iter()
                .map(|row| {
                    (row.iter().sum::<BigInt>() - BigInt::from(1)).to_string()
                })
                .collect();
            let mut out = json!({
                "n": n,
                "rows": rows,
                "elements_below_top": totals,
            });
            if oeis {
                out["oeis"] = Value::from("A051295 (shifted)");
            }
            emit(&out);
        }
    }
    Ok(())
}
