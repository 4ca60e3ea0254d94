use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cubeshape::arith::Constants;
use cubeshape::census::{count_couples, count_fields, empirical_measure, CoupleCount, FieldCount};
use cubeshape::field::{canonicalize, enumerate_fields};
use cubeshape::output::{
    json_lines, measure_csv, rounded_row, round12, svg_scatter, ConstantsSummary, FieldWithBasis,
    ShapeRecord,
};
use cubeshape::shape::{reduce_to_fundamental_domain, shape};
use cubeshape::{Error, FieldType, Result};

#[derive(Parser)]
#[command(name = "cubeshape", version, about = "Shapes of pure cubic fields and the counts behind their distribution")]
struct Cli {
    /// Worker threads (CUBESHAPE_THREADS takes precedence). Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical data of Q(m^(1/3)): couple (a, b), type, discriminant and integral basis.
    Field {
        /// Cube-free part is taken automatically; perfect cubes are rejected.
        m: u64,
    },
    /// Shape of the field (the lattice of integers orthogonal to 1) and its reduction into the fundamental domain.
    Shape(ShapeArgs),
    /// Couple counts S(N, R), field counts N(X, R1, R2), empirical shape measures, analytic constants.
    Count(CountArgs),
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("what").required(true).args(["m", "scan"]))]
struct ShapeArgs {
    /// Shape of a single field Q(m^(1/3)).
    m: Option<u64>,
    /// Shapes of every field with |disc| <= X.
    #[arg(long, value_name = "X")]
    scan: Option<u64>,
    /// Also write an SVG scatter of the reduced shapes over the fundamental domain.
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("table").required(true)
    .args(["couples", "fields", "equidist", "constants"]))]
struct CountArgs {
    /// Strongly carefree couples S(N, R) with ab <= N and 1/R <= a/b <= R, split by type.
    #[arg(long, num_args = 2, value_names = ["N", "R"])]
    couples: Option<Vec<String>>,
    /// Field counts N_I, N_II with |disc| <= X and R1 < a/b < R2 (R2 may be inf).
    #[arg(long, num_args = 3, value_names = ["X", "R1", "R2"])]
    fields: Option<Vec<String>>,
    /// Empirical shape measure of one type on bins [e_j, e_{j+1}) of the shape coordinate r^(1/3), normalised by C_? sqrt(X).
    #[arg(long, num_args = 4.., value_names = ["TYPE", "X", "EDGES"])]
    equidist: Option<Vec<String>>,
    /// Euler-product constant C, kappa, gamma and the shape normalisers C_I, C_II with tail bounds.
    #[arg(long, value_name = "P")]
    constants: Option<u64>,
    /// Prime bound used for C when normalising measures.
    #[arg(long, default_value_t = 1_000_000)]
    prime_bound: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn parse<T: std::str::FromStr>(name: &str, s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::InvalidInput(format!("cannot parse {name} from {s:?}")))
}

fn thread_count(flag: Option<usize>) -> Result<Option<usize>> {
    match std::env::var("CUBESHAPE_THREADS") {
        Ok(v) => Ok(Some(parse("CUBESHAPE_THREADS", &v)?)),
        Err(_) => Ok(flag),
    }
}

fn cmd_field(m: u64) -> Result<String> {
    let f = canonicalize(m)?;
    Ok(json_lines([FieldWithBasis::from(&f)]))
}

fn cmd_shape(args: &ShapeArgs) -> Result<(String, Option<String>)> {
    let fields: Vec<_> = match (args.m, args.scan) {
        (Some(m), None) => vec![canonicalize(m)?],
        (None, Some(x)) => enumerate_fields(x, None)?.collect(),
        _ => unreachable!("clap enforces exactly one"),
    };
    let mut records = Vec::with_capacity(fields.len());
    let mut reduced = Vec::with_capacity(fields.len());
    for f in &fields {
        let p = reduce_to_fundamental_domain(&shape(f))?;
        reduced.push(p.reduced.expect("reduction fills the point").z);
        records.push(ShapeRecord::new(f, &p));
    }
    let y_max = reduced.iter().map(|z| z.im).fold(2.0, f64::max).min(12.0);
    let svg = args.svg.as_ref().map(|_| svg_scatter(&reduced, y_max));
    Ok((json_lines(records), svg))
}

fn couples_csv(c: &CoupleCount) -> String {
    format!("N,R,total,type_I,type_II\n{},{},{},{},{}\n", c.n, round12(c.r), c.total, c.type_i, c.type_ii)
}

fn fields_csv(c: &FieldCount) -> String {
    format!(
        "X,R1,R2,N_I,N_II,N\n{},{},{},{},{},{}\n",
        c.x, round12(c.r1), round12(c.r2), c.n_i, c.n_ii, c.n_total
    )
}

fn json_line<T: serde::Serialize>(v: &T) -> String {
    json_lines([v])
}

fn cmd_count(args: &CountArgs) -> Result<String> {
    if let Some(v) = &args.couples {
        let c = count_couples(parse("N", &v[0])?, parse("R", &v[1])?)?;
        return Ok(match args.format {
            Format::Json => json_line(&c),
            Format::Csv => couples_csv(&c),
        });
    }
    if let Some(v) = &args.fields {
        let c = count_fields(parse("X", &v[0])?, parse("R1", &v[1])?, parse("R2", &v[2])?)?;
        return Ok(match args.format {
            Format::Json => json_line(&c),
            Format::Csv => fields_csv(&c),
        });
    }
    if let Some(v) = &args.equidist {
        let ty: FieldType = v[0].parse()?;
        let x: u64 = parse("X", &v[1])?;
        let edges = v[2..]
            .iter()
            .map(|s| parse("bin edge", s))
            .collect::<Result<Vec<f64>>>()?;
        if edges.len() < 2 {
            return Err(Error::InvalidInput("need at least two bin edges".into()));
        }
        let k = Constants::compute(args.prime_bound)?;
        let rows = empirical_measure(ty, x, &edges, k.c.value)?.rows();
        return Ok(match args.format {
            Format::Json => json_lines(rows.iter().map(rounded_row)),
            Format::Csv => measure_csv(&rows),
        });
    }
    let p = args.constants.expect("clap enforces one table");
    let summary = ConstantsSummary::from(&Constants::compute(p)?);
    match args.format {
        Format::Json => Ok(json_line(&summary)),
        Format::Csv => Err(Error::InvalidInput("constants are only available as JSON".into())),
    }
}

fn run(cli: Cli) -> Result<()> {
    if let Some(n) = thread_count(cli.threads)? {
        if n == 0 {
            return Err(Error::InvalidInput("thread count must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::InvalidInput(e.to_string()))?;
    }
    let (text, svg) = match &cli.command {
        Command::Field { m } => (cmd_field(*m)?, None),
        Command::Shape(args) => cmd_shape(args)?,
        Command::Count(args) => (cmd_count(args)?, None),
    };
    let io = |e: std::io::Error| Error::InvalidInput(format!("cannot write output: {e}"));
    if let (Some(svg), Command::Shape(ShapeArgs { svg: Some(path), .. })) = (svg, &cli.command) {
        std::fs::write(path, svg).map_err(io)?;
    }
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(io),
        None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(io),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Consistency(_) => 3,
                _ => 2,
            })
        }
    }
}
