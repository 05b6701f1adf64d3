use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use trimtor::classify::{check_conjectures, classify, conjugate_trim_set, tor_products_with};
use trimtor::dgproducts::{full_table, verify_leibniz, ProductTable};
use trimtor::families::{build_family, family_checks, realizability_scan, write_csv, FamilyKind, FamilySpec, ScanConfig};
use trimtor::io::{parse_matrix, write_matrix};
use trimtor::pfaffian::{check_identities, SkewMatrix};
use trimtor::resolution::{minimize, verify_diagrams, ChainComplex, TrimSource, TrimmedData};
use trimtor::Field;

#[derive(Parser)]
#[command(name = "trimtor", version, about = "Trimmed pfaffian ideals: resolutions, DG products and Tor classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generators y_i = (-1)^(i+1) pf_drop{i}.
    Pfaffians { file: PathBuf },
    /// Print the trimmed resolution.
    Resolve {
        file: PathBuf,
        #[command(flatten)]
        trim: Trim,
        /// Reduce to the minimal resolution first.
        #[arg(long)]
        minimize: bool,
        /// Print the complex as JSON.
        #[arg(long)]
        json: bool,
        /// Also write the JSON complex document here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the nonzero products of the DG structure.
    Products {
        file: PathBuf,
        #[command(flatten)]
        trim: Trim,
        /// Print every record, zeros included, as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Format and Tor class of the trimmed ideal.
    Classify {
        file: PathBuf,
        #[command(flatten)]
        trim: Trim,
        /// Also compute the Tor algebra products from the DG structure.
        #[arg(long)]
        tor: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check the pfaffian identities, d∘d = 0, the comparison diagrams and Leibniz.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        trim: Trim,
    },
    /// Build a member of the odd or even family.
    Family {
        kind: Kind,
        #[arg(long)]
        s: usize,
        /// Prime p, or "Q" for the rationals.
        #[arg(long, default_value = "2", value_parser = parse_field)]
        field: Field,
        /// Print the TorReport instead of the matrix.
        #[arg(long)]
        classify: bool,
        /// Run the family checks; exit 1 if any fails.
        #[arg(long)]
        checks: bool,
        #[arg(long)]
        json: bool,
    },
    /// Classify random matrices over F_p for every t and write CSV.
    Scan {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        min_degree: u32,
        #[arg(long, default_value_t = 2)]
        max_degree: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// CSV path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Check the G(r) bounds on every record; exit 1 if any fails.
        #[arg(long)]
        check: bool,
    },
    /// Resolve, then run the requested stages in order.
    Run {
        file: PathBuf,
        #[command(flatten)]
        trim: Trim,
        #[arg(long)]
        products: bool,
        #[arg(long)]
        classify: bool,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        minimize: bool,
        /// Write the JSON complex document (minimal if --minimize).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Trim {
    /// Trim the first t generators.
    #[arg(long)]
    trim: Option<usize>,
    /// Trim these generators (1-based, comma separated).
    #[arg(long, value_delimiter = ',')]
    trim_set: Option<Vec<usize>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Odd,
    Even,
}

fn parse_field(s: &str) -> Result<Field, String> {
    if s.eq_ignore_ascii_case("q") || s.eq_ignore_ascii_case("rational") {
        return Ok(Field::Rational);
    }
    let p: u32 = s.parse().map_err(|_| format!("expected a prime or Q, found '{s}'"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

/// Usage or input problem; exits with code 2.
struct Usage(String);

impl From<trimtor::Error> for Usage {
    fn from(e: trimtor::Error) -> Usage {
        Usage(e.to_string())
    }
}

impl From<io::Error> for Usage {
    fn from(e: io::Error) -> Usage {
        Usage(e.to_string())
    }
}

type Outcome = Result<bool, Usage>;

fn load(path: &Path) -> Result<SkewMatrix, Usage> {
    let text = fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    parse_matrix(&text).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

struct Trimmed {
    matrix: SkewMatrix,
    data: TrimmedData,
}

fn trimmed(path: &Path, trim: &Trim, out: &mut impl Write) -> Result<Trimmed, Usage> {
    let matrix = load(path)?;
    let (matrix, t) = match (&trim.trim, &trim.trim_set) {
        (Some(t), None) => (matrix, *t),
        (None, Some(set)) => {
            let (conj, order) = conjugate_trim_set(&matrix, set)?;
            let order: Vec<String> = order.iter().map(ToString::to_string).collect();
            writeln!(out, "order: {}", order.join(" "))?;
            (conj, set.len())
        }
        _ => return Err(Usage("exactly one of --trim and --trim-set is required".into())),
    };
    let data = TrimmedData::new(TrimSource::new(&matrix)?, t)?;
    Ok(Trimmed { matrix, data })
}

fn print_complex(c: &ChainComplex, out: &mut impl Write) -> io::Result<()> {
    let [a, b, d, e] = c.ranks();
    writeln!(out, "field: {}", c.field())?;
    writeln!(out, "ranks: ({a}, {b}, {d}, {e})")?;
    for d in 1..=3 {
        let labels: Vec<String> = c.basis(d).iter().map(ToString::to_string).collect();
        writeln!(out, "F{d}: {}", labels.join(" "))?;
    }
    for d in 1..=3 {
        write!(out, "d{d}:\n{}", c.differential(d))?;
    }
    Ok(())
}

fn write_document(c: &ChainComplex, path: &Path) -> Result<(), Usage> {
    let json = serde_json::to_string_pretty(&c.to_document()).expect("complex serializes");
    fs::write(path, json + "\n").map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn print_products(table: &ProductTable, out: &mut impl Write) -> io::Result<()> {
    for ((x, y), p) in table.iter() {
        if !p.is_zero() {
            writeln!(out, "{x}*{y} = {p}")?;
        }
    }
    Ok(())
}

/// Runs every check and reports each; true when all pass.
fn verify(tr: &Trimmed, table: &ProductTable, out: &mut impl Write) -> Result<bool, Usage> {
    let identities = check_identities(&tr.matrix);
    write!(out, "{identities}")?;
    let squares = tr.data.complex().d_squared_failures();
    if squares.is_empty() {
        writeln!(out, "d∘d = 0: ok")?;
    } else {
        writeln!(out, "d∘d = 0: FAILED at {squares:?}")?;
    }
    let diagrams = verify_diagrams(&tr.data);
    if diagrams.ok() {
        writeln!(out, "diagrams: ok")?;
    } else {
        for f in &diagrams.failures {
            writeln!(out, "diagrams: FAILED, diagram {} for k = {}", f.diagram, f.k)?;
        }
    }
    let leibniz = verify_leibniz(&tr.data, table);
    writeln!(out, "{leibniz}")?;
    let commutativity = table.commutativity_failures();
    if !commutativity.is_empty() {
        writeln!(out, "graded commutativity: FAILED at {} pairs", commutativity.len())?;
    }
    Ok(identities.all_pass() && squares.is_empty() && diagrams.ok() && leibniz.ok() && commutativity.is_empty())
}

fn execute(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Pfaffians { file } => {
            for (i, y) in load(&file)?.generators().iter().enumerate() {
                writeln!(out, "y{} = {y}", i + 1)?;
            }
            Ok(true)
        }
        Command::Resolve { file, trim, minimize: min, json, out: path } => {
            let tr = trimmed(&file, &trim, out)?;
            let c = if min { minimize(tr.data.complex()) } else { tr.data.complex().clone() };
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&c.to_document()).expect("complex serializes"))?;
            } else {
                print_complex(&c, out)?;
            }
            if let Some(path) = path {
                write_document(&c, &path)?;
            }
            Ok(true)
        }
        Command::Products { file, trim, json } => {
            let tr = trimmed(&file, &trim, out)?;
            let table = full_table(&tr.data);
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&table.to_records()).expect("records serialize"))?;
            } else {
                print_products(&table, out)?;
            }
            Ok(true)
        }
        Command::Classify { file, trim, tor, json } => {
            let tr = trimmed(&file, &trim, out)?;
            let report = classify(&tr.matrix, tr.data.t())?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serializes"))?;
            } else {
                writeln!(out, "{report}")?;
            }
            if tor {
                let table = tor_products_with(&tr.data, &full_table(&tr.data));
                writeln!(out, "{table}")?;
            }
            Ok(true)
        }
        Command::Verify { file, trim } => {
            let tr = trimmed(&file, &trim, out)?;
            let table = full_table(&tr.data);
            verify(&tr, &table, out)
        }
        Command::Family { kind, s, field, classify: show_class, checks, json } => {
            let kind = match kind {
                Kind::Odd => FamilyKind::Odd,
                Kind::Even => FamilyKind::Even,
            };
            let spec = FamilySpec::new(kind, s)?;
            if checks {
                let rep = family_checks(spec, field)?;
                if json {
                    writeln!(out, "{}", serde_json::to_string_pretty(&rep).expect("report serializes"))?;
                } else {
                    writeln!(out, "{}", rep.report)?;
                    let [a, b, c, d] = rep.expected_format;
                    writeln!(out, "expected: ({a}, {b}, {c}, {d}) {}", rep.expected_class)?;
                    for (name, v) in [("pf first", rep.pf_first), ("pf middle", rep.pf_middle), ("pf last", rep.pf_last)] {
                        let v = v.map_or("n/a", |ok| if ok { "ok" } else { "FAILED" });
                        writeln!(out, "{name}: {v}")?;
                    }
                }
                return Ok(rep.all_pass());
            }
            let (matrix, t) = build_family(spec, field)?;
            if show_class {
                let report = classify(&matrix, t)?;
                if json {
                    writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serializes"))?;
                } else {
                    writeln!(out, "{report}")?;
                }
            } else {
                write!(out, "{}", write_matrix(&matrix))?;
            }
            Ok(true)
        }
        Command::Scan { p, m, trials, min_degree, max_degree, seed, out: path, check } => {
            let config = ScanConfig { p, m, trials, min_degree, max_degree, seed };
            let scan = realizability_scan(&config)?;
            match &path {
                Some(path) => {
                    let file = fs::File::create(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
                    write_csv(&scan.records, file)?;
                }
                None => write_csv(&scan.records, &mut *out)?,
            }
            if !scan.skipped.is_empty() {
                eprintln!("skipped {} trials with no pfaffian generators", scan.skipped.len());
            }
            if !check {
                return Ok(true);
            }
            let mut failures = 0;
            for rec in &scan.records {
                let Some(r) = rec.r else { continue };
                if !check_conjectures(&rec.report())?.all_hold() {
                    failures += 1;
                    eprintln!("bounds fail: trial {} t {}: l = {}, r = {r}", rec.trial, rec.t, rec.l);
                }
            }
            Ok(failures == 0)
        }
        Command::Run { file, trim, products, classify: show_class, verify: check, minimize: min, out: path } => {
            let tr = trimmed(&file, &trim, out)?;
            let [a, b, c, d] = tr.data.complex().ranks();
            writeln!(out, "resolution ranks: ({a}, {b}, {c}, {d})")?;
            let minimal = min.then(|| minimize(tr.data.complex()));
            if let Some(mc) = &minimal {
                let [a, b, c, d] = mc.ranks();
                writeln!(out, "minimal ranks: ({a}, {b}, {c}, {d})")?;
            }
            if show_class {
                writeln!(out, "{}", classify(&tr.matrix, tr.data.t())?)?;
            }
            let mut ok = true;
            if products || check {
                let table = full_table(&tr.data);
                if products {
                    print_products(&table, out)?;
                }
                if check {
                    ok &= verify(&tr, &table, out)?;
                }
            }
            if let Some(path) = path {
                write_document(minimal.as_ref().unwrap_or(tr.data.complex()), &path)?;
            }
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = execute(cli.command, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(true), Ok(())) => ExitCode::SUCCESS,
        (Ok(false), Ok(())) => ExitCode::from(1),
        (Err(Usage(message)), _) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
