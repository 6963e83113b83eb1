//! Batch CLI over the exact pipelines: spectra, walk coefficients, bound
//! assembly, scaling sweeps, and the verification suites.
//!
//! Exit codes: 0 success, 1 failed exact identity, 2 validation error,
//! 3 resource bound exceeded.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use charwalk::characters::CharacterTable;
use charwalk::gelfand::{self, Label};
use charwalk::normal;
use charwalk::partition::Partition;
use charwalk::rational::render;
use charwalk::schemes::{self, AssociationScheme};
use charwalk::spin::SpinCharacterTable;
use charwalk::stein;
use charwalk::verify;
use charwalk::walks;
use charwalk::{Error, SpectrumAtomList};

#[derive(Parser)]
#[command(
    name = "charwalk",
    about = "Exact spectra and normal-approximation bounds for class-generated random walks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Structure {
    Symmetric,
    Hypercube,
    Matchings,
    Spin,
    Hamming,
    SchemeFile,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Variant {
    Steinbound,
    Rinrot,
    Main1,
    Main2,
    Asmains,
    Limgroup,
    Hypbound1,
    Hypbound2,
    #[value(name = "CLTgel", alias = "cltgel")]
    Cltgel,
    Projerror,
    Hamming,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Spectral,
    Brute,
}

#[derive(clap::Args)]
struct StructureArgs {
    /// Which structure family to compute on.
    #[arg(long, value_enum)]
    structure: Structure,
    /// Size parameter n (symmetric, hypercube, matchings, spin).
    #[arg(long)]
    n: Option<u32>,
    /// Word length d (hamming).
    #[arg(long)]
    d: Option<u32>,
    /// Alphabet size q (hamming).
    #[arg(long)]
    q: Option<u32>,
    /// Generator parameter i: the non-fixed part of the hook generator.
    #[arg(long)]
    i: Option<u32>,
    /// Double-coset index u (hypercube; defaults to 1).
    #[arg(long)]
    u: Option<usize>,
    /// Scheme class s (hamming / scheme-file; defaults to 1).
    #[arg(long)]
    s: Option<usize>,
    /// JSON file with {"relations": [...]} for scheme-file.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(clap::Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Output path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the exact atom distribution of the statistic W.
    Spectrum {
        #[command(flatten)]
        structure: StructureArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the named exact-identity suite.
    Verify {
        /// orthogonality | chains | moments | bounds | all
        #[arg(long)]
        suite: String,
        /// Restrict to one structure family
        /// (symmetric|hypercube|matchings|spin|hamming).
        #[arg(long)]
        structure: Option<String>,
        /// Cap the suite's default n range.
        #[arg(long)]
        n: Option<u32>,
        /// Cap the suite's default d range.
        #[arg(long)]
        d: Option<u32>,
        /// Cap the suite's default q range.
        #[arg(long)]
        q: Option<u32>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Assemble one normal-approximation bound.
    Bound {
        #[command(flatten)]
        structure: StructureArgs,
        #[arg(long, value_enum)]
        variant: Variant,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Bound table over a size range (n for groups/pairs, d for hamming).
    Sweep {
        #[command(flatten)]
        structure: StructureArgs,
        #[arg(long, value_enum)]
        variant: Variant,
        /// Inclusive range "from:to".
        #[arg(long, value_name = "FROM:TO")]
        n_range: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Walk occupancy coefficients p_m, by the spectral sum or enumeration.
    Walk {
        #[command(flatten)]
        structure: StructureArgs,
        /// Number of steps.
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "spectral")]
        method: Method,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::IdentityFailure(_) => 1,
        Error::ResourceBound(_) => 3,
        _ => 2,
    }
}

fn run(cli: Cli) -> charwalk::Result<()> {
    match cli.command {
        Command::Spectrum { structure, output } => {
            let spectrum = build_spectrum(&structure)?;
            let text = match output.format {
                Format::Json => pretty(spectrum.to_json()),
                Format::Csv => spectrum.to_csv(),
            };
            emit(&output, &text)
        }
        Command::Verify {
            suite,
            structure,
            n,
            d,
            q,
            output,
        } => {
            let scope = verify::Scope { structure, n, d, q };
            let checks = verify::run_suite(&suite, &scope)?;
            let text = match output.format {
                Format::Json => pretty(serde_json::Value::Array(
                    checks
                        .iter()
                        .map(|c| {
                            serde_json::json!({
                                "detail": c.detail,
                                "name": c.name,
                                "passed": c.passed,
                                "suite": c.suite,
                            })
                        })
                        .collect(),
                )),
                Format::Csv => {
                    let mut t = String::from("suite,name,passed,detail\n");
                    for c in &checks {
                        t.push_str(&format!(
                            "{},{},{},\"{}\"\n",
                            c.suite, c.name, c.passed, c.detail
                        ));
                    }
                    t
                }
            };
            emit(&output, &text)?;
            let mut failed = 0usize;
            for c in &checks {
                eprintln!(
                    "{} {}/{}: {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.suite,
                    c.name,
                    c.detail
                );
                if !c.passed {
                    failed += 1;
                }
            }
            if failed > 0 {
                return Err(Error::IdentityFailure(format!("{failed} checks failed")));
            }
            Ok(())
        }
        Command::Bound {
            structure,
            variant,
            output,
        } => {
            let report = build_bound(&structure, variant)?;
            let text = match output.format {
                Format::Json => pretty(report.to_json()),
                Format::Csv => bound_csv(&report),
            };
            emit(&output, &text)
        }
        Command::Sweep {
            structure,
            variant,
            n_range,
            output,
        } => {
            let (from, to) = parse_range(&n_range)?;
            let table = build_sweep(&structure, variant, from, to)?;
            let text = match output.format {
                Format::Json => pretty(table.to_json()),
                Format::Csv => table.to_csv(),
            };
            emit(&output, &text)
        }
        Command::Walk {
            structure,
            m,
            method,
            output,
        } => {
            let rows = build_walk(&structure, m, method)?;
            let text = match output.format {
                Format::Json => pretty(serde_json::Value::Array(
                    rows.iter()
                        .map(|(label, value)| {
                            serde_json::json!({
                                "label": label,
                                "value_exact": render(value),
                                "value_float": charwalk::rational::to_f64(value),
                            })
                        })
                        .collect(),
                )),
                Format::Csv => {
                    let mut t = String::from("label,value_exact,value_float\n");
                    for (label, value) in &rows {
                        t.push_str(&format!(
                            "{label},{},{}\n",
                            render(value),
                            charwalk::rational::to_f64(value)
                        ));
                    }
                    t
                }
            };
            emit(&output, &text)
        }
    }
}

fn pretty(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn emit(output: &OutputArgs, text: &str) -> charwalk::Result<()> {
    match &output.out {
        None => {
            print!("{text}");
            std::io::stdout().flush().ok();
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))),
    }
}

fn parse_range(range: &str) -> charwalk::Result<(u32, u32)> {
    let parts: Vec<&str> = range.split(':').collect();
    let err = || Error::InvalidArgument(format!("range must be FROM:TO, got '{range}'"));
    if parts.len() != 2 {
        return Err(err());
    }
    let from: u32 = parts[0].parse().map_err(|_| err())?;
    let to: u32 = parts[1].parse().map_err(|_| err())?;
    if from > to {
        return Err(err());
    }
    Ok((from, to))
}

fn need<T: Copy>(v: Option<T>, flag: &str, structure: &str) -> charwalk::Result<T> {
    v.ok_or_else(|| Error::InvalidArgument(format!("--{flag} is required for {structure}")))
}

fn load_scheme(args: &StructureArgs) -> charwalk::Result<AssociationScheme> {
    let path = args
        .file
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument("--file is required for scheme-file".into()))?;
    let raw = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    let parsed: serde_json::Value = serde_json::from_str(&raw)
        .map_err(|e| Error::InvalidArgument(format!("invalid JSON in {}: {e}", path.display())))?;
    let rels = parsed
        .get("relations")
        .and_then(|r| r.as_array())
        .ok_or_else(|| Error::InvalidArgument("missing \"relations\" array".into()))?;
    let mut matrices = Vec::with_capacity(rels.len());
    for (idx, mat) in rels.iter().enumerate() {
        let rows = mat
            .as_array()
            .ok_or_else(|| Error::InvalidArgument(format!("relation {idx} is not an array")))?;
        let mut matrix = Vec::with_capacity(rows.len());
        for row in rows {
            let entries = row.as_array().ok_or_else(|| {
                Error::InvalidArgument(format!("relation {idx} has a non-array row"))
            })?;
            let mut out_row = Vec::with_capacity(entries.len());
            for e in entries {
                match e.as_u64() {
                    Some(0) => out_row.push(0u8),
                    Some(1) => out_row.push(1u8),
                    _ => {
                        return Err(Error::InvalidArgument(format!(
                            "relation {idx} has an entry outside {{0,1}}"
                        )))
                    }
                }
            }
            matrix.push(out_row);
        }
        matrices.push(matrix);
    }
    schemes::scheme_from_relations(&matrices)
}

fn build_spectrum(args: &StructureArgs) -> charwalk::Result<SpectrumAtomList> {
    match args.structure {
        Structure::Symmetric => {
            let n = need(args.n, "n", "symmetric")?;
            let i = need(args.i, "i", "symmetric")?;
            let table = CharacterTable::new(n);
            let c = table
                .index_of(&Partition::hook_type(n, i)?)
                .ok_or_else(|| Error::InvalidArgument(format!("no generator class for i={i}")))?;
            normal::w_symmetric(&table, c)
        }
        Structure::Hypercube => {
            let n = need(args.n, "n", "hypercube")?;
            let pair = gelfand::hypercube_pair(n)?;
            let u = args.u.unwrap_or(1);
            if u == 0 || u > n as usize {
                return Err(Error::InvalidArgument(format!(
                    "--u must be in 1..={n}, got {u}"
                )));
            }
            normal::w_gelfand(&pair, u)
        }
        Structure::Matchings => {
            let n = need(args.n, "n", "matchings")?;
            let i = need(args.i, "i", "matchings")?;
            let pair = gelfand::matchings_pair(n)?;
            let u = pair
                .label_index(&Label::Shape(Partition::hook_type(n, i)?))
                .expect("hook shape of n");
            normal::w_gelfand(&pair, u)
        }
        Structure::Spin => {
            let n = need(args.n, "n", "spin")?;
            let i = need(args.i, "i", "spin")?;
            let table = SpinCharacterTable::new(n)?;
            let mu = table
                .op_index(&Partition::hook_type(n, 2 * i + 1)?)
                .ok_or_else(|| {
                    Error::InvalidArgument(format!("(2i+1, 1^*) is not an odd partition of {n}"))
                })?;
            normal::w_spin(&table, mu)
        }
        Structure::Hamming => {
            let d = need(args.d, "d", "hamming")?;
            let q = need(args.q, "q", "hamming")?;
            let scheme = schemes::hamming_scheme(d, q)?;
            normal::w_scheme(&scheme, args.s.unwrap_or(1))
        }
        Structure::SchemeFile => {
            let scheme = load_scheme(args)?;
            normal::w_scheme(&scheme, args.s.unwrap_or(1))
        }
    }
}

fn build_bound(args: &StructureArgs, variant: Variant) -> charwalk::Result<stein::BoundReport> {
    use Variant::*;
    match (args.structure, variant) {
        (Structure::Symmetric, Limgroup | Main1 | Steinbound) => {
            let n = need(args.n, "n", "symmetric")?;
            let i = need(args.i, "i", "symmetric")?;
            stein::limgroup_bound(&CharacterTable::new(n), i)
        }
        (Structure::Hypercube, Hypbound1 | Main2 | Steinbound) => {
            stein::hypbound1(need(args.n, "n", "hypercube")?)
        }
        (Structure::Hypercube, Hypbound2 | Rinrot) => {
            stein::hypbound2(need(args.n, "n", "hypercube")?)
        }
        (Structure::Matchings, Cltgel | Main2 | Steinbound) => {
            let n = need(args.n, "n", "matchings")?;
            let i = need(args.i, "i", "matchings")?;
            stein::cltgel_bound(n, i)
        }
        (Structure::Spin, Projerror | Steinbound) => {
            let n = need(args.n, "n", "spin")?;
            let i = need(args.i, "i", "spin")?;
            stein::projerror_bound(&SpinCharacterTable::new(n)?, i)
        }
        (Structure::Hamming, Hamming | Asmains | Steinbound) => {
            let d = need(args.d, "d", "hamming")?;
            let q = need(args.q, "q", "hamming")?;
            stein::hamming_steinbound(d, q)
        }
        (Structure::Hamming, Rinrot) => {
            let d = need(args.d, "d", "hamming")?;
            let q = need(args.q, "q", "hamming")?;
            stein::hamming_rinrot(d, q)
        }
        (Structure::SchemeFile, Asmains | Steinbound) => {
            let scheme = load_scheme(args)?;
            let s = args.s.unwrap_or(1);
            let stats = stein::scheme_closed_stats(&scheme, s, s)?;
            stein::assemble_steinbound("asmains", &stats)
        }
        _ => Err(Error::InvalidArgument(
            "this variant does not apply to this structure".into(),
        )),
    }
}

fn build_sweep(
    args: &StructureArgs,
    variant: Variant,
    from: u32,
    to: u32,
) -> charwalk::Result<stein::SweepTable> {
    use Variant::*;
    match (args.structure, variant) {
        (Structure::Symmetric, Limgroup | Main1 | Steinbound) => {
            verify::sweep_limgroup(need(args.i, "i", "symmetric")?, from, to)
        }
        (Structure::Matchings, Cltgel | Main2 | Steinbound) => {
            verify::sweep_cltgel(need(args.i, "i", "matchings")?, from, to)
        }
        (Structure::Spin, Projerror | Steinbound) => {
            verify::sweep_projerror(need(args.i, "i", "spin")?, from, to)
        }
        (Structure::Hypercube, Hypbound1 | Steinbound) => verify::sweep_hypercube(false, from, to),
        (Structure::Hypercube, Hypbound2 | Rinrot) => verify::sweep_hypercube(true, from, to),
        (Structure::Hamming, Hamming | Asmains | Steinbound) => {
            verify::sweep_hamming(need(args.q, "q", "hamming")?, false, from, to)
        }
        (Structure::Hamming, Rinrot) => {
            verify::sweep_hamming(need(args.q, "q", "hamming")?, true, from, to)
        }
        _ => Err(Error::InvalidArgument(
            "this variant does not sweep over this structure".into(),
        )),
    }
}

fn build_walk(
    args: &StructureArgs,
    m: u32,
    method: Method,
) -> charwalk::Result<Vec<(String, charwalk::Rat)>> {
    match args.structure {
        Structure::Symmetric => {
            let n = need(args.n, "n", "symmetric")?;
            let i = need(args.i, "i", "symmetric")?;
            let table = CharacterTable::new(n);
            let c = table
                .index_of(&Partition::hook_type(n, i)?)
                .ok_or_else(|| Error::InvalidArgument(format!("no generator class for i={i}")))?;
            let values = match method {
                Method::Spectral => walks::group_walk(&table, c, m),
                Method::Brute => walks::group_walk_brute(&table, c, m)?,
            };
            Ok(table
                .parts
                .iter()
                .map(|p| p.to_string())
                .zip(values)
                .collect())
        }
        Structure::Hypercube => {
            let n = need(args.n, "n", "hypercube")?;
            let u = args.u.unwrap_or(1);
            let values = match method {
                Method::Spectral => walks::hypercube_walk(n, u, m)?,
                Method::Brute => walks::hypercube_walk_brute(n, u as u32, m)?,
            };
            Ok((0..=n).map(|r| r.to_string()).zip(values).collect())
        }
        Structure::Matchings => {
            let n = need(args.n, "n", "matchings")?;
            let i = need(args.i, "i", "matchings")?;
            match method {
                Method::Spectral => {
                    let pair = gelfand::matchings_pair(n)?;
                    let u = pair
                        .label_index(&Label::Shape(Partition::hook_type(n, i)?))
                        .expect("hook shape of n");
                    let values = walks::gelfand_walk(&pair, u, m);
                    Ok(pair
                        .labels
                        .iter()
                        .map(|l| l.to_string())
                        .zip(values)
                        .collect())
                }
                Method::Brute => {
                    if m != 2 {
                        return Err(Error::InvalidArgument(
                            "matching-pair enumeration covers m = 2 only".into(),
                        ));
                    }
                    Ok(gelfand::matchings_p2_combinatorial(n, i)?
                        .into_iter()
                        .map(|(mu, p)| (mu.to_string(), p))
                        .collect())
                }
            }
        }
        Structure::Spin => {
            let n = need(args.n, "n", "spin")?;
            let i = need(args.i, "i", "spin")?;
            if method == Method::Brute {
                return Err(Error::InvalidArgument(
                    "the signed walk has no enumeration route; use --method spectral".into(),
                ));
            }
            let table = SpinCharacterTable::new(n)?;
            let mu = table
                .op_index(&Partition::hook_type(n, 2 * i + 1)?)
                .ok_or_else(|| {
                    Error::InvalidArgument(format!("(2i+1, 1^*) is not an odd partition of {n}"))
                })?;
            let values = walks::twisted_walk(&table, mu, m);
            Ok(table.op.iter().map(|p| p.to_string()).zip(values).collect())
        }
        Structure::Hamming => {
            let d = need(args.d, "d", "hamming")?;
            let q = need(args.q, "q", "hamming")?;
            let s = args.s.unwrap_or(1);
            let values = match method {
                Method::Spectral => {
                    let scheme = schemes::hamming_scheme(d, q)?;
                    walks::scheme_walk(&scheme, s, m)?
                }
                Method::Brute => walks::scheme_walk_brute(&schemes::hamming_relations(d, q), s, m)?,
            };
            Ok((0..=d).map(|r| r.to_string()).zip(values).collect())
        }
        Structure::SchemeFile => {
            let scheme = load_scheme(args)?;
            let s = args.s.unwrap_or(1);
            if method == Method::Brute {
                return Err(Error::InvalidArgument(
                    "brute scheme walks need the hamming structure (explicit tuples)".into(),
                ));
            }
            let values = walks::scheme_walk(&scheme, s, m)?;
            Ok((0..=scheme.n_classes)
                .map(|r| r.to_string())
                .zip(values)
                .collect())
        }
    }
}

fn bound_csv(report: &stein::BoundReport) -> String {
    let mut out = String::from("term,coeff,radicand,degree,over_pi,value_float\n");
    for t in &report.terms {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            t.label,
            render(&t.coeff),
            render(&t.radicand),
            t.degree,
            t.over_pi,
            t.eval()
        ));
    }
    out.push_str(&format!("total,,,,,{}\n", report.total));
    out
}
