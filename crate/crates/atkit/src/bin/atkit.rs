//! Command-line surface: one subcommand per library operation family.
//!
//! Exit codes: 0 = property holds / order produced, 1 = property violated
//! (witness printed), 2 = usage or input error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use atkit::convexity::BetweennessOracle;
use atkit::corpus::{generate_corpus, CorpusFilter};
use atkit::error::Error;
use atkit::graph::Graph;
use atkit::io::{self, RunReport};
use atkit::pipeline;
use atkit::search::{self, Ordering};
use atkit::verify;

#[derive(Parser)]
#[command(name = "atkit", about = "AT-free graph ordering toolkit", version)]
struct Cli {
    /// Emit reports as JSON instead of key-value lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report AT-freeness, claw and bad-claw certificates.
    Recognize { file: PathBuf },
    /// Compute a vertex ordering with the chosen search.
    Order {
        /// bfs | bfsplus | lbfs | lbfsplus | bfsconv | bfsconv-minhull |
        /// bfsconv-augmented | clawfree | badclawfree
        #[arg(long)]
        alg: String,
        /// Start vertex name (default: canonical-first vertex).
        #[arg(long)]
        start: Option<String>,
        /// Prior ordering file (whitespace-separated names) for the + sweeps.
        #[arg(long)]
        prior: Option<PathBuf>,
        /// Run the class certificates before the two-sweep pipelines.
        #[arg(long)]
        certify: bool,
        /// Append a key-value run report after the order line.
        #[arg(long)]
        report: bool,
        file: PathBuf,
    },
    /// Check a property of a graph or of a supplied ordering.
    Verify {
        /// atfree | bilateral | mdp | bfs | lbfs | spine | dompair
        #[arg(long)]
        property: String,
        /// Ordering as space-separated vertex names (two names for dompair).
        #[arg(long)]
        order: Option<String>,
        file: PathBuf,
    },
    /// Report admissible vertices, dominating pairs, intervals and hulls.
    Analyze {
        /// Interval endpoints as `x,z`.
        #[arg(long)]
        interval: Option<String>,
        /// Hull seed set as space-separated names.
        #[arg(long)]
        hull: Option<String>,
        /// Write a DOT rendering of the graph to this path.
        #[arg(long)]
        emit_dot: Option<PathBuf>,
        file: PathBuf,
    },
    /// Brute-force existence queries (bounded by ATKIT_BRUTE_CAP, default 9).
    Oracle {
        /// atfree-order | bilateral-order | atfree-bfs-order
        #[arg(long)]
        query: String,
        file: PathBuf,
    },
    /// Write the named figure fixtures (and optional paths/cycles) as files.
    Fixtures {
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Also emit the path graph P_n.
        #[arg(long)]
        path: Option<usize>,
        /// Also emit the cycle graph C_n.
        #[arg(long)]
        cycle: Option<usize>,
    },
    /// Generate a seeded filtered corpus of connected graphs.
    Corpus {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Vertex count range, `LO..HI` or a single number.
        #[arg(long, default_value = "5..9")]
        n: String,
        #[arg(long, default_value_t = 50)]
        count: usize,
        /// any | atfree | clawfree-atfree | badclawfree-atfree
        #[arg(long, default_value = "any")]
        filter: String,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::NotClawFree { .. }
        | Error::BadClawPresent { .. }
        | Error::NotAtFree { .. }
        | Error::NotAdmissible(_)
        | Error::NotDominatingPair(..)
        | Error::ConvexChoiceUnavailable { .. } => 1,
        _ => 2,
    }
}

fn brute_cap() -> usize {
    std::env::var("ATKIT_BRUTE_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(verify::DEFAULT_BRUTE_CAP)
}

fn load_graph(path: &PathBuf) -> Result<(Graph, String), Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        reason: format!("{}: {e}", path.display()),
    })?;
    let g = io::parse_graph(&text)?;
    Ok((g, io::input_digest(text.as_bytes())))
}

fn emit(report: &RunReport, json: bool) {
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
}

fn names_of(g: &Graph, verts: &[usize]) -> String {
    verts
        .iter()
        .map(|&v| g.name(v))
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Recognize { file } => {
            let started = Instant::now();
            let (g, digest) = load_graph(file)?;
            let oracle = BetweennessOracle::build(&g);
            let mut report = RunReport::new();
            report.push("command", format!("recognize {}", file.display()));
            report.push("input", &digest);
            let at = oracle.asteroidal_triple();
            match at {
                None => report.push("AT-free", "yes"),
                Some((a, b, c)) => {
                    report.push("AT-free", "no");
                    report.push("asteroidal-triple", names_of(&g, &[a, b, c]));
                }
            }
            match pipeline::find_claw(&g) {
                None => report.push("claw", "none"),
                Some(claw) => report.push(
                    "claw",
                    format!(
                        "base {} prongs {}",
                        g.name(claw.base),
                        names_of(&g, &[claw.prongs.0, claw.prongs.1, claw.prongs.2])
                    ),
                ),
            }
            match pipeline::find_bad_claw(&g, &oracle) {
                None => report.push("bad-claw", "none"),
                Some(claw) => report.push(
                    "bad-claw",
                    format!(
                        "base {} prongs {}",
                        g.name(claw.base),
                        names_of(&g, &[claw.prongs.0, claw.prongs.1, claw.prongs.2])
                    ),
                ),
            }
            report.push("timing_ms", started.elapsed().as_millis());
            emit(&report, cli.json);
            Ok(if at.is_none() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Order {
            alg,
            start,
            prior,
            certify,
            report: want_report,
            file,
        } => {
            let started = Instant::now();
            let (g, digest) = load_graph(file)?;
            let oracle = BetweennessOracle::build(&g);
            let start_vertex = match start {
                Some(name) => g.vertex(name)?,
                None => 0,
            };
            let load_prior = || -> Result<Ordering, Error> {
                let path = prior.as_ref().ok_or(Error::Parse {
                    line: 0,
                    reason: "--prior is required for the + sweeps".into(),
                })?;
                let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
                    line: 0,
                    reason: format!("{}: {e}", path.display()),
                })?;
                let names: Vec<&str> = text.split_whitespace().collect();
                Ordering::from_names(&g, &names)
            };
            let mut extra: Vec<(String, String)> = Vec::new();
            let mut flagged = false;
            let order = match alg.as_str() {
                "bfs" => search::bfs(&g, start_vertex)?,
                "bfsplus" => search::bfs_plus(&g, &load_prior()?)?,
                "lbfs" => search::lbfs(&g, start_vertex)?,
                "lbfsplus" => search::lbfs_plus(&g, &load_prior()?)?,
                "bfsconv" => {
                    let (order, trace) = search::bfs_conv(&g, start_vertex, &oracle)?;
                    if let Some(failure) = &trace.failure {
                        flagged = true;
                        extra.push((
                            "convex-choice-unavailable".into(),
                            format!(
                                "step {} queue {}",
                                failure.step,
                                names_of(&g, &failure.queue)
                            ),
                        ));
                    }
                    order
                }
                "bfsconv-minhull" => search::bfs_conv_minhull(&g, start_vertex, &oracle)?.0,
                "bfsconv-augmented" => {
                    let run = search::bfs_conv_augmented(&g, start_vertex, &oracle)?;
                    extra.push(("augmented-order".into(), run.augmented_order.join(" ")));
                    run.order
                }
                "clawfree" => {
                    let sweeps = pipeline::clawfree_atfree_order(&g, &oracle, *certify)?;
                    extra.push(("sweep1".into(), sweeps.first_sweep.display(&g)));
                    sweeps.order
                }
                "badclawfree" => {
                    let sweeps = pipeline::badclawfree_atfree_order(&g, &oracle, *certify)?;
                    extra.push(("sweep1".into(), sweeps.first_sweep.display(&g)));
                    sweeps.order
                }
                other => {
                    return Err(Error::Parse {
                        line: 0,
                        reason: format!("unknown algorithm `{other}`"),
                    })
                }
            };
            println!("{}", order.display(&g));
            if *want_report || cli.json {
                let mut report = RunReport::new();
                report.push("command", format!("order --alg {alg} {}", file.display()));
                report.push("input", &digest);
                report.push("order", order.display(&g));
                report.push("produced-by", order.kind().as_str());
                for (k, v) in &extra {
                    report.push(k, v);
                }
                report.push("timing_ms", started.elapsed().as_millis());
                emit(&report, cli.json);
            } else {
                for (k, v) in &extra {
                    eprintln!("{k}: {v}");
                }
            }
            Ok(if flagged {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Verify {
            property,
            order,
            file,
        } => {
            let started = Instant::now();
            let (g, digest) = load_graph(file)?;
            let oracle = BetweennessOracle::build(&g);
            let parse_order = || -> Result<Ordering, Error> {
                let text = order.as_ref().ok_or(Error::Parse {
                    line: 0,
                    reason: format!("--order is required for property `{property}`"),
                })?;
                let names: Vec<&str> = text.split_whitespace().collect();
                Ordering::from_names(&g, &names)
            };
            let mut report = RunReport::new();
            report.push(
                "command",
                format!("verify --property {property} {}", file.display()),
            );
            report.push("input", &digest);
            report.push("property", property);
            let mut witness: Option<String> = None;
            let pass = match property.as_str() {
                "atfree" => match verify::is_atfree_order(&oracle, &parse_order()?) {
                    None => true,
                    Some(v) => {
                        witness = Some(format!(
                            "triple {} at position {}",
                            names_of(&g, &v.witness),
                            v.position.unwrap_or(0) + 1
                        ));
                        false
                    }
                },
                "bilateral" => match verify::is_bilateral_atfree_order(&oracle, &parse_order()?) {
                    None => true,
                    Some(v) => {
                        witness = Some(format!("triple {}", names_of(&g, &v.witness)));
                        false
                    }
                },
                "mdp" => match verify::is_monotone_dp_order(&g, &parse_order()?) {
                    None => true,
                    Some(v) => {
                        witness = Some(format!(
                            "prefix {} pair {}",
                            v.position.unwrap_or(0),
                            names_of(&g, &v.witness)
                        ));
                        false
                    }
                },
                "bfs" => match verify::is_bfs_order(&g, &parse_order()?) {
                    None => true,
                    Some(v) => {
                        witness = Some(format!(
                            "step {} vertices {}",
                            v.position.unwrap_or(0) + 1,
                            names_of(&g, &v.witness)
                        ));
                        false
                    }
                },
                "lbfs" => match verify::is_lbfs_order(&g, &parse_order()?) {
                    None => true,
                    Some(v) => {
                        witness = Some(format!(
                            "step {} vertices {}",
                            v.position.unwrap_or(0) + 1,
                            names_of(&g, &v.witness)
                        ));
                        false
                    }
                },
                "spine" => {
                    let check = verify::has_spine_property(&g);
                    if let Some((s, t)) = check.witness {
                        witness = Some(format!("pair {}", names_of(&g, &[s, t])));
                    }
                    check.holds
                }
                "dompair" => {
                    let tau = parse_order()?;
                    if tau.seq().len() != 2 {
                        return Err(Error::Parse {
                            line: 0,
                            reason: "dompair expects --order \"s t\"".into(),
                        });
                    }
                    let check =
                        verify::is_dominating_pair(&g, tau.seq()[0], tau.seq()[1]);
                    if let Some((w, path)) = check.witness {
                        witness = Some(format!(
                            "vertex {} avoided by path {}",
                            g.name(w),
                            names_of(&g, &path)
                        ));
                    }
                    check.holds
                }
                other => {
                    return Err(Error::Parse {
                        line: 0,
                        reason: format!("unknown property `{other}`"),
                    })
                }
            };
            report.push("verdict", if pass { "pass" } else { "fail" });
            if let Some(w) = witness {
                report.push("witness", w);
            }
            report.push("timing_ms", started.elapsed().as_millis());
            emit(&report, cli.json);
            Ok(if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Analyze {
            interval,
            hull,
            emit_dot,
            file,
        } => {
            let started = Instant::now();
            let (g, digest) = load_graph(file)?;
            let oracle = BetweennessOracle::build(&g);
            let mut report = RunReport::new();
            report.push("command", format!("analyze {}", file.display()));
            report.push("input", &digest);
            report.push("admissible", names_of(&g, &oracle.admissible_vertices()));
            let mut pairs = Vec::new();
            for s in 0..g.n() {
                for t in s + 1..g.n() {
                    if verify::is_dominating_pair(&g, s, t).holds {
                        pairs.push(format!("({},{})", g.name(s), g.name(t)));
                    }
                }
            }
            report.push("dominating-pairs", pairs.join(" "));
            if let Some(spec) = interval {
                let (x, z) = spec.split_once(',').ok_or(Error::Parse {
                    line: 0,
                    reason: "--interval expects `x,z`".into(),
                })?;
                let (x, z) = (g.vertex(x.trim())?, g.vertex(z.trim())?);
                report.push(
                    &format!("interval({},{})", g.name(x), g.name(z)),
                    names_of(&g, &oracle.interval(x, z)),
                );
            }
            if let Some(spec) = hull {
                let seed: Vec<usize> = spec
                    .split_whitespace()
                    .map(|name| g.vertex(name))
                    .collect::<Result<_, _>>()?;
                report.push("hull", names_of(&g, &oracle.convex_hull(&seed).members));
            }
            if let Some(path) = emit_dot {
                std::fs::write(path, io::to_dot(&g)).map_err(|e| Error::Parse {
                    line: 0,
                    reason: format!("{}: {e}", path.display()),
                })?;
                report.push("dot", path.display().to_string());
            }
            report.push("timing_ms", started.elapsed().as_millis());
            emit(&report, cli.json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { query, file } => {
            let started = Instant::now();
            let (g, digest) = load_graph(file)?;
            let oracle = BetweennessOracle::build(&g);
            let cap = brute_cap();
            let found = match query.as_str() {
                "atfree-order" => verify::exists_atfree_order_bruteforce(&g, &oracle, cap)?,
                "bilateral-order" => verify::exists_bilateral_order_bruteforce(&g, &oracle, cap)?,
                "atfree-bfs-order" => {
                    verify::exists_atfree_bfs_order_bruteforce(&g, &oracle, cap)?
                }
                other => {
                    return Err(Error::Parse {
                        line: 0,
                        reason: format!("unknown query `{other}`"),
                    })
                }
            };
            let mut report = RunReport::new();
            report.push("command", format!("oracle --query {query} {}", file.display()));
            report.push("input", &digest);
            match &found {
                Some(tau) => {
                    report.push("exists", "yes");
                    report.push("order", tau.display(&g));
                }
                None => report.push("exists", "no"),
            }
            report.push("timing_ms", started.elapsed().as_millis());
            emit(&report, cli.json);
            Ok(if found.is_some() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Fixtures { out, path, cycle } => {
            std::fs::create_dir_all(out).map_err(|e| Error::Parse {
                line: 0,
                reason: format!("{}: {e}", out.display()),
            })?;
            let mut emitted = io::fixtures();
            if let Some(n) = path {
                emitted.push(("path", Graph::path(*n)));
            }
            if let Some(n) = cycle {
                emitted.push(("cycle", Graph::cycle(*n)));
            }
            for (name, g) in &emitted {
                let file = out.join(format!("{name}.graph"));
                std::fs::write(&file, io::serialize_graph(g)).map_err(|e| Error::Parse {
                    line: 0,
                    reason: format!("{}: {e}", file.display()),
                })?;
                println!("{name}: {}", file.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Corpus {
            seed,
            n,
            count,
            filter,
            out,
        } => {
            let (lo, hi) = match n.split_once("..") {
                Some((lo, hi)) => (
                    lo.parse().map_err(|_| bad_range(n))?,
                    hi.parse().map_err(|_| bad_range(n))?,
                ),
                None => {
                    let v = n.parse().map_err(|_| bad_range(n))?;
                    (v, v)
                }
            };
            let filter = CorpusFilter::parse(filter).ok_or(Error::Parse {
                line: 0,
                reason: format!("unknown filter `{filter}`"),
            })?;
            let graphs = generate_corpus(*seed, lo..=hi, *count, filter)?;
            std::fs::create_dir_all(out).map_err(|e| Error::Parse {
                line: 0,
                reason: format!("{}: {e}", out.display()),
            })?;
            for (i, g) in graphs.iter().enumerate() {
                let file = out.join(format!("corpus_{i:04}.graph"));
                std::fs::write(&file, io::serialize_graph(g)).map_err(|e| Error::Parse {
                    line: 0,
                    reason: format!("{}: {e}", file.display()),
                })?;
            }
            println!("wrote {} graphs to {}", graphs.len(), out.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn bad_range(n: &str) -> Error {
    Error::Parse {
        line: 0,
        reason: format!("invalid vertex range `{n}`"),
    }
}
