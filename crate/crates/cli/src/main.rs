mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use eqcodes::construct::{
    collapse_blocks, hyperplane_family, least_subspace, lift_with_sts, liftable_size, ratio_report, sts_lift,
    sunflower, sunflower_code_binary, table1, table2, trim_family, IntersectingFamily, LiftMode,
};
use eqcodes::designs::{design_params, is_projective_plane, Sts};
use eqcodes::lincode::{check_lemma_suite, metrics, structure_analysis, verify_file, CodeFile, LinearCode};
use eqcodes::search::{
    count_labeled_sts, e1_solutions, max_intersecting_family_with, ramanujan_nagell, verify_halfspace_bound,
    verify_p1, verify_p5, SearchOptions, SearchOrder, DEFAULT_BUDGET,
};
use eqcodes::subspace::{enumerate_grassmannian, gaussian_binomial, grassmannian};
use eqcodes::{fano_code, field, Error, FieldElement, FieldOp, Subspace};

#[derive(Parser)]
#[command(name = "eqcodes", version, about = "Equidistant linear codes in projective spaces over finite fields")]
struct Cli {
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Report wall-clock time on stderr.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Field parameters, or one arithmetic operation.
    Field(FieldArgs),
    /// Size (and optionally the members) of G_q(n, k).
    Grassmannian {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        list: bool,
    },
    /// Subspace distance between two subspaces given as JSON row lists.
    Distance {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Build a code and emit it in the code file format.
    Construct {
        #[command(subcommand)]
        what: Construction,
    },
    /// Verify a code, a Steiner triple system, or a block design file.
    Verify {
        #[arg(value_enum)]
        kind: VerifyKind,
        file: PathBuf,
    },
    /// Run the dimension/intersection lemma suite on a code file.
    Lemmas { file: PathBuf },
    /// Largest lambda-intersecting family in G_q(n, k).
    Search {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: usize,
        #[command(flatten)]
        search: SearchFlags,
        /// Stop after proving the maximum instead of listing every maximum family.
        #[arg(long)]
        no_census: bool,
    },
    /// Reproduce the size tables.
    Table {
        #[arg(value_enum)]
        which: TableKind,
        /// Field orders (table 1) or the single field order (table 2).
        #[arg(long, value_delimiter = ',')]
        q: Vec<u32>,
        /// Ambient dimensions (table 2).
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check one of the arithmetic or extremal claims.
    Check {
        #[command(subcommand)]
        what: Claim,
    },
}

#[derive(Args)]
struct FieldArgs {
    #[arg(long)]
    q: u32,
    #[arg(long, value_enum)]
    op: Option<OpArg>,
    #[arg(long)]
    a: Option<u32>,
    #[arg(long)]
    b: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpArg {
    Add,
    Mul,
    Neg,
    Inv,
}

#[derive(Args, Clone, Copy)]
struct SearchFlags {
    /// Node budget.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long, value_enum, default_value_t = OrderArg::Lex)]
    seed_order: OrderArg,
}

impl SearchFlags {
    fn options(self, census: bool) -> SearchOptions {
        let order = match self.seed_order {
            OrderArg::Lex => SearchOrder::Lex,
            OrderArg::Reverse => SearchOrder::Reverse,
            OrderArg::Degree => SearchOrder::Degree,
        };
        SearchOptions { budget: self.budget, threads: self.threads, order, census }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Reverse,
    Degree,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    Code,
    Sts,
    Design,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Boolean,
    BoseSkolem,
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    /// All 2-subspaces of F_q^3 (n = 3).
    Planes,
    /// 2-subspaces through a fixed line.
    Sunflower,
    /// 2-subspaces of a fixed 3-subspace of F_q^4.
    Hyperplane,
}

#[derive(Subcommand)]
enum Construction {
    /// The 8-word code on {0} and the seven planes of F_2^3.
    Fano,
    /// Sunflower on a 1-dimensional center, lifted to a code.
    Sunflower {
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long)]
        n: usize,
        /// Center as JSON rows (lexicographically least line by default).
        #[arg(long)]
        center: Option<String>,
        /// Number of family members to keep (2^m - 1).
        #[arg(long)]
        size: Option<usize>,
    },
    /// 2-subspaces of a fixed 3-subspace of F_q^4, lifted to a code.
    Hyperplane {
        #[arg(long, default_value_t = 2)]
        q: u32,
        /// The 3-subspace as JSON rows (lexicographically least by default).
        #[arg(long)]
        t: Option<String>,
        #[arg(long)]
        size: Option<usize>,
    },
    /// Lift an intersecting family through a Steiner triple system.
    StsLift {
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        family: Option<Source>,
        #[arg(long, value_enum, default_value_t = ModeArg::Boolean)]
        mode: ModeArg,
        /// Explicit STS file on the member indices, overriding --mode.
        #[arg(long)]
        sts: Option<PathBuf>,
        #[arg(long)]
        size: Option<usize>,
    },
}

#[derive(Subcommand)]
enum Claim {
    /// Solutions of 2^{n-d-1} = 2^{2d-1} + 2^{d-1} - 1 with n >= 2d + 1.
    E1 {
        #[arg(long, default_value_t = 30)]
        n_max: usize,
        #[arg(long, default_value_t = 14)]
        d_max: usize,
    },
    /// x with x^2 + 7 a power of two.
    Nagell {
        #[arg(long, default_value_t = 1_000_000)]
        x_max: u64,
    },
    /// Uniqueness of the size-8 equidistant linear code in P_2(3).
    P1,
    /// Largest d-intersecting families in G_2(n, 2d) stay below 2^n - 1.
    P5 {
        #[arg(long, value_delimiter = ',', default_values_t = [4, 5, 6])]
        n: Vec<usize>,
        #[command(flatten)]
        search: SearchFlags,
    },
    /// 1/4 < E_q(3) / |P_q(3)| <= 1/2, with equality exactly at q = 2, 5.
    Ratio {
        #[arg(long, value_delimiter = ',')]
        q: Vec<u32>,
    },
    /// Complement pairing and the half-Grassmannian bound.
    Halfspace {
        #[arg(long, value_delimiter = ',', default_values_t = [2, 3, 4, 5])]
        q: Vec<u32>,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[command(flatten)]
        search: SearchFlags,
    },
    /// Labeled Steiner triple systems on v points.
    Sts {
        #[arg(long, value_delimiter = ',', default_values_t = [3, 7, 9])]
        v: Vec<usize>,
    },
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Rendered output plus whether the claim or verification passed.
struct Outcome {
    body: String,
    pass: bool,
}

impl Outcome {
    fn json(v: &impl serde::Serialize, pass: bool) -> Self {
        Outcome { body: serde_json::to_string_pretty(v).expect("serializable") + "\n", pass }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn parse_subspace(q: u32, n: usize, s: &str) -> Result<Subspace, Failure> {
    let rows: Vec<Vec<u32>> = serde_json::from_str(s).map_err(|e| Failure::Usage(format!("bad subspace {s:?}: {e}")))?;
    Ok(Subspace::from_rows(&field(q)?, n, &rows)?)
}

fn trimmed(fam: &IntersectingFamily, size: Option<usize>) -> Result<IntersectingFamily, Failure> {
    Ok(trim_family(fam, size.unwrap_or_else(|| liftable_size(fam.len())))?)
}

fn construct(what: Construction) -> Result<Outcome, Failure> {
    let code: LinearCode = match what {
        Construction::Fano => fano_code(),
        Construction::Sunflower { q: 2, n, center: None, size: None } => sunflower_code_binary(n)?,
        Construction::Sunflower { q, n, center, size } => {
            let f = field(q)?;
            let c = match center {
                Some(s) => parse_subspace(q, n, &s)?,
                None => least_subspace(&f, n, 1)?,
            };
            if c.dim() != 1 {
                return Err(Failure::Usage(format!("center must be a line, got dimension {}", c.dim())));
            }
            sts_lift(&trimmed(&sunflower(&f, n, &c, 2)?.family, size)?, LiftMode::Boolean)?
        }
        Construction::Hyperplane { q, t, size } => {
            let f = field(q)?;
            let t = t.map(|s| parse_subspace(q, 4, &s)).transpose()?;
            sts_lift(&trimmed(&hyperplane_family(&f, 4, t.as_ref())?, size)?, LiftMode::Boolean)?
        }
        Construction::StsLift { q, n, family, mode, sts, size } => {
            let f = field(q)?;
            let source = family.unwrap_or(if n == 3 { Source::Planes } else { Source::Sunflower });
            let fam = match source {
                Source::Planes if n == 3 => IntersectingFamily::new(&f, 3, 2, 1, grassmannian(&f, 3, 2)?)?,
                Source::Planes => return Err(Failure::Usage("--family planes needs --n 3".into())),
                Source::Sunflower => sunflower(&f, n, &least_subspace(&f, n, 1)?, 2)?.family,
                Source::Hyperplane => hyperplane_family(&f, n, None)?,
            };
            let fam = trimmed(&fam, size)?;
            match (sts, mode) {
                (Some(path), _) => lift_with_sts(&fam, &parse_json::<Sts>(&path)?)?,
                (None, ModeArg::Boolean) => sts_lift(&fam, LiftMode::Boolean)?,
                (None, ModeArg::BoseSkolem) => sts_lift(&fam, LiftMode::BoseSkolem)?,
            }
        }
    };
    Ok(Outcome { body: code.to_json() + "\n", pass: true })
}

#[derive(Deserialize)]
struct DesignFile {
    v: usize,
    blocks: Vec<Vec<usize>>,
}

fn verify(kind: VerifyKind, path: &Path) -> Result<Outcome, Failure> {
    match kind {
        VerifyKind::Code => {
            let file: CodeFile = parse_json(path)?;
            let report = match verify_file(&file) {
                Ok(r) => r,
                Err(e) => return Ok(rejected(e)),
            };
            let mut out = json!({ "verification": report });
            if report.pass {
                let code = LinearCode::from_file(&file)?;
                if code.size() >= 2 {
                    out["metrics"] = json!(metrics(&code)?);
                }
                out["structure"] = json!(structure_analysis(&code)?);
            }
            Ok(Outcome::json(&out, report.pass))
        }
        VerifyKind::Sts => {
            let sts: Sts = parse_json(path)?;
            let check = sts.verify();
            let mut out = json!({ "v": sts.v, "b": sts.b(), "r": sts.r(), "check": check });
            if check.valid && (sts.v + 1).is_power_of_two() {
                out["associative_lift"] = json!(sts.lift_is_associative());
            }
            Ok(Outcome::json(&out, check.valid))
        }
        VerifyKind::Design => {
            let text = read(path)?;
            let (v, blocks) = match serde_json::from_str::<DesignFile>(&text) {
                Ok(d) => (d.v, d.blocks),
                Err(_) => {
                    let file: CodeFile =
                        serde_json::from_str(&text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                    let code = LinearCode::from_file(&CodeFile { table: None, ..file })?;
                    collapse_blocks(code.field(), code.n(), code.nontrivial())
                }
            };
            let params = design_params(v, &blocks)?;
            let plane = is_projective_plane(v, &blocks);
            let pass = params.identities_hold != Some(false) && params.fisher_holds != Some(false);
            Ok(Outcome::json(&json!({ "params": params, "projective_plane_order": plane }), pass))
        }
    }
}

/// A code file whose structure is invalid fails verification outright.
fn rejected(e: Error) -> Outcome {
    Outcome::json(&json!({ "pass": false, "error": e.to_string() }), false)
}

fn lemmas(path: &Path) -> Result<Outcome, Failure> {
    let file: CodeFile = parse_json(path)?;
    let code = match LinearCode::from_file(&file) {
        Ok(c) => c,
        Err(e) => return Ok(rejected(e)),
    };
    match check_lemma_suite(&code) {
        Ok(r) => Ok(Outcome::json(&r, r.pass)),
        Err(Error::NotVerifiedLinear(why)) => {
            Ok(Outcome::json(&json!({ "pass": false, "error": format!("not a verified linear code: {why}") }), false))
        }
        Err(e) => Err(e.into()),
    }
}

fn table(which: TableKind, q: Vec<u32>, n: Vec<usize>, format: Format) -> Result<Outcome, Failure> {
    match which {
        TableKind::One => {
            let qs = if q.is_empty() { vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17] } else { q };
            let rows = table1(&qs)?;
            Ok(match format {
                Format::Json => Outcome::json(&rows, true),
                _ => Outcome { body: render::table1(&rows, format == Format::Csv), pass: true },
            })
        }
        TableKind::Two => {
            let q = match q.as_slice() {
                [] => 3,
                [q] => *q,
                _ => return Err(Failure::Usage("table 2 takes a single --q".into())),
            };
            let ns = if n.is_empty() { (3..=8).collect() } else { n };
            let rows = table2(q, &ns)?;
            Ok(match format {
                Format::Json => Outcome::json(&rows, true),
                _ => Outcome { body: render::table2(q, &rows, format == Format::Csv), pass: true },
            })
        }
    }
}

fn check(what: Claim) -> Result<Outcome, Failure> {
    match what {
        Claim::E1 { n_max, d_max } => {
            let sols = e1_solutions(n_max, d_max)?;
            let pass = sols == [(3, 1)];
            Ok(Outcome::json(&json!({ "n_max": n_max, "d_max": d_max, "solutions": sols, "pass": pass }), pass))
        }
        Claim::Nagell { x_max } => {
            let sols = ramanujan_nagell(x_max);
            let known: Vec<u64> = [1, 3, 5, 11, 181].into_iter().filter(|&x| x <= x_max).collect();
            let pass = sols == known;
            Ok(Outcome::json(&json!({ "x_max": x_max, "solutions": sols, "pass": pass }), pass))
        }
        Claim::P1 => {
            let r = verify_p1()?;
            Ok(Outcome::json(&r, r.pass))
        }
        Claim::P5 { n, search } => {
            let reports = n.iter().map(|&n| verify_p5(n, &search.options(false))).collect::<Result<Vec<_>, _>>()?;
            let pass = reports.iter().all(|r| r.pass);
            Ok(Outcome::json(&json!({ "reports": reports, "pass": pass }), pass))
        }
        Claim::Ratio { q } => {
            let qs = if q.is_empty() { eqcodes::gfq::SUPPORTED_ORDERS.to_vec() } else { q };
            let reports = qs.iter().map(|&q| ratio_report(q)).collect::<Result<Vec<_>, _>>()?;
            let pass = reports.iter().all(|r| r.pass);
            Ok(Outcome::json(&json!({ "reports": reports, "pass": pass }), pass))
        }
        Claim::Halfspace { q, n, search } => {
            let reports = q
                .iter()
                .map(|&q| verify_halfspace_bound(q, n, &search.options(false)))
                .collect::<Result<Vec<_>, _>>()?;
            let pass = reports.iter().all(|r| r.pass);
            Ok(Outcome::json(&json!({ "reports": reports, "pass": pass }), pass))
        }
        Claim::Sts { v } => {
            let counts = v.iter().map(|&v| count_labeled_sts(v)).collect::<Result<Vec<_>, _>>()?;
            Ok(Outcome::json(&json!({ "counts": counts }), true))
        }
    }
}

fn field_info(args: FieldArgs) -> Result<Outcome, Failure> {
    let f = field(args.q)?;
    let Some(op) = args.op else {
        let elements: Vec<Value> = f
            .elements()
            .map(|x| json!({ "idx": x.idx(), "coefficients": f.coefficients(x), "log": f.log(x) }))
            .collect();
        let out = json!({
            "q": f.q(), "p": f.p(), "e": f.e(), "irr": f.irr(), "alpha": f.alpha(), "elements": elements,
        });
        return Ok(Outcome::json(&out, true));
    };
    let elem = |x: Option<u32>, name: &str| -> Result<FieldElement, Failure> {
        Ok(f.element(x.ok_or_else(|| Failure::Usage(format!("--{name} is required")))?)?)
    };
    let a = elem(args.a, "a")?;
    let (op, b) = match op {
        OpArg::Add => (FieldOp::Add, Some(elem(args.b, "b")?)),
        OpArg::Mul => (FieldOp::Mul, Some(elem(args.b, "b")?)),
        OpArg::Neg => (FieldOp::Neg, None),
        OpArg::Inv => (FieldOp::Inv, None),
    };
    let r = f.arith(op, a, b)?;
    Ok(Outcome::json(&json!({ "q": f.q(), "a": a, "b": b, "result": r }), true))
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Field(args) => field_info(args),
        Command::Grassmannian { q, n, k, list } => {
            let f = field(q)?;
            if k > n {
                return Err(Failure::Usage(format!("k = {k} exceeds n = {n}")));
            }
            let size = gaussian_binomial(q, n, k);
            let mut out = json!({ "q": q, "n": n, "k": k, "size": render::big(&size) });
            if list {
                let all: Vec<Vec<Vec<u32>>> = enumerate_grassmannian(&f, n, k)?.map(|s| s.to_rows()).collect();
                out["subspaces"] = json!(all);
            }
            Ok(Outcome::json(&out, true))
        }
        Command::Distance { q, n, x, y } => {
            let (x, y) = (parse_subspace(q, n, &x)?, parse_subspace(q, n, &y)?);
            let out = json!({
                "distance": x.distance(&y)?,
                "dim_x": x.dim(),
                "dim_y": y.dim(),
                "dim_sum": x.dim_sum(&y)?,
                "dim_intersection": x.dim_intersection(&y)?,
            });
            Ok(Outcome::json(&out, true))
        }
        Command::Construct { what } => construct(what),
        Command::Verify { kind, file } => verify(kind, &file),
        Command::Lemmas { file } => lemmas(&file),
        Command::Search { q, n, k, lambda, search, no_census } => {
            let r = max_intersecting_family_with(q, n, k, lambda, &search.options(!no_census))?;
            let pass = r.exhausted;
            Ok(Outcome::json(&r, pass))
        }
        Command::Table { which, q, n, format } => table(which, q, n, format),
        Command::Check { what } => check(what),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    let verbose = cli.verbose;
    let start = Instant::now();
    let result = run(cli);
    if verbose {
        eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(o) => {
            let written = match &out {
                Some(p) => std::fs::write(p, &o.body).map_err(|e| format!("{}: {e}", p.display())),
                None => {
                    print!("{}", o.body);
                    Ok(())
                }
            };
            match written {
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(3)
                }
                Ok(()) if o.pass => ExitCode::SUCCESS,
                Ok(()) => ExitCode::from(1),
            }
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
