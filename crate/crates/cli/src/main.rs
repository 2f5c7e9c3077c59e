use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use invcomp_core::bench::{resolve_system, run_cell, BenchRow};
use invcomp_core::oracles::cofactor_identity_holds;
use invcomp_core::{
    admissibility_check, format_stats, run_bench, Algorithm, BenchConfig, CofactorTrace, DivisionKind, DivisionSpec,
    EngineOptions, Error, InvComp, OrderKind, StatsFormat, SystemFile,
};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "invcomp", version, about = "Minimal involutive bases over the rationals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the minimal involutive basis of one system.
    Compute(ComputeArgs),
    /// Run a grid of systems, algorithms and divisions and print a table.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgArg {
    Invcomp,
    Invbas,
}

impl From<AlgArg> for Algorithm {
    fn from(a: AlgArg) -> Self {
        match a {
            AlgArg::Invcomp => Algorithm::InvComp,
            AlgArg::Invbas => Algorithm::InvBas,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DivArg {
    Janet,
    Thomas,
    Alex,
}

impl From<DivArg> for DivisionKind {
    fn from(d: DivArg) -> Self {
        match d {
            DivArg::Janet => DivisionKind::Janet,
            DivArg::Thomas => DivisionKind::Thomas,
            DivArg::Alex => DivisionKind::Alex,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Degrevlex,
}

impl From<OrderArg> for OrderKind {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Lex => OrderKind::Lex,
            OrderArg::Degrevlex => OrderKind::DegRevLex,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StatsArg {
    Tsv,
    Json,
}

impl From<StatsArg> for StatsFormat {
    fn from(s: StatsArg) -> Self {
        match s {
            StatsArg::Tsv => StatsFormat::Tsv,
            StatsArg::Json => StatsFormat::Json,
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    /// System file to read.
    #[arg(long, conflicts_with = "system", required_unless_present = "system")]
    input: Option<String>,
    /// Built-in system such as cyclic5 or katsura3.
    #[arg(long)]
    system: Option<String>,
    #[arg(long, value_enum, default_value = "invcomp")]
    algorithm: AlgArg,
    #[arg(long, value_enum, default_value = "janet")]
    division: DivArg,
    /// Overrides the ordering declared by the system.
    #[arg(long, value_enum)]
    order: Option<OrderArg>,
    /// Print run statistics to stderr.
    #[arg(long, value_enum)]
    stats: Option<StatsArg>,
    /// Check the result with the Groebner and involutivity oracles.
    #[arg(long)]
    verify: bool,
    /// Track cofactors and check every inserted element against them.
    #[arg(long)]
    cofactors: bool,
    #[arg(long)]
    use_syzygy_signatures: bool,
    /// Shuffle the input polynomials with this seed first.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct BenchArgs {
    /// Built-in system names or system file paths.
    #[arg(long = "system", required = true, num_args = 1..)]
    systems: Vec<String>,
    #[arg(long = "algorithm", value_enum, num_args = 1.., default_values = ["invcomp"])]
    algorithms: Vec<AlgArg>,
    #[arg(long = "division", value_enum, num_args = 1.., default_values = ["janet"])]
    divisions: Vec<DivArg>,
    #[arg(long, value_enum, default_value = "degrevlex")]
    order: OrderArg,
    #[arg(long, value_enum, default_value = "tsv")]
    stats: StatsArg,
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    use_syzygy_signatures: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(args) => compute(args),
        Command::Bench(args) => bench(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("invcomp: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn load(args: &ComputeArgs) -> Result<SystemFile, Error> {
    let mut sys = match (&args.input, &args.system) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
            invcomp_core::parse_system(&text)?
        }
        (None, Some(name)) => resolve_system(name)?,
        (None, None) => unreachable!("clap requires one of --input/--system"),
    };
    if let Some(order) = args.order {
        sys = sys.with_order(order.into());
    }
    if let Some(seed) = args.seed {
        sys.polynomials.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    Ok(sys)
}

fn compute(args: ComputeArgs) -> Result<ExitCode, Error> {
    let sys = load(&args)?;
    let algorithm: Algorithm = args.algorithm.into();
    let division: DivisionKind = args.division.into();
    let opts = EngineOptions {
        use_syzygy_signatures: args.use_syzygy_signatures,
        track_cofactors: args.cofactors,
        ..EngineOptions::default()
    };
    let mut ok = true;
    let res = run_cell(&sys, algorithm, division, &opts, args.verify)?;
    if args.cofactors {
        if algorithm != Algorithm::InvComp {
            return Err(Error::Usage("--cofactors needs --algorithm invcomp".into()));
        }
        let failures = cofactor_failures(&sys, division, &opts)?;
        eprintln!("cofactor checks: {failures} failures");
        ok &= failures == 0;
    }
    let out = SystemFile {
        ordering: sys.ordering.clone(),
        polynomials: res.basis.clone(),
    };
    print!("{}", out.render());
    if let Some(fmt) = args.stats {
        let name = args.system.clone().or(args.input.clone()).unwrap_or_default();
        let row = BenchRow::new(&name, algorithm, division, &res.stats, res.verified.unwrap_or(false));
        eprint!("{}", format_stats(&[row], fmt.into()));
    }
    if let Some(verified) = res.verified {
        eprintln!("verified: {verified}");
        ok &= verified;
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY)
    })
}

fn cofactor_failures(sys: &SystemFile, division: DivisionKind, opts: &EngineOptions) -> Result<usize, Error> {
    let div = DivisionSpec::from_name(division.name(), sys.vars())?;
    let run = InvComp::with_options(&sys.polynomials, &div, &sys.ordering, opts.clone())?.run();
    let mut failures = 0;
    for q in &run.inserted {
        let trace = CofactorTrace::from_quadruple(q)?;
        let admissible = admissibility_check(&trace, &q.sig, &sys.ordering)?;
        let identity = cofactor_identity_holds(&trace, &run.generators, &q.poly, &sys.ordering);
        if !(admissible && identity) {
            failures += 1;
        }
    }
    Ok(failures)
}

fn bench(args: BenchArgs) -> Result<ExitCode, Error> {
    let config = BenchConfig {
        systems: args.systems,
        algorithms: args.algorithms.into_iter().map(Into::into).collect(),
        divisions: args.divisions.into_iter().map(Into::into).collect(),
        order: Some(args.order.into()),
        verify: args.verify,
        options: EngineOptions {
            use_syzygy_signatures: args.use_syzygy_signatures,
            ..EngineOptions::default()
        },
    };
    let rows = run_bench(&config)?;
    print!("{}", format_stats(&rows, args.stats.into()));
    let failed = args.verify && rows.iter().any(|r| !r.verified);
    Ok(if failed {
        ExitCode::from(EXIT_VERIFY)
    } else {
        ExitCode::SUCCESS
    })
}
