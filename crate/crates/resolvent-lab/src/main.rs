//! Command-line front end. All logic lives in the library; this binary only
//! parses arguments, dispatches, and maps outcomes to exit codes
//! (0 = all checks pass, 1 = a check failed, 2 = config error,
//! 3 = numerical failure).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use resolvent_lab::report::json_float;
use resolvent_lab::{
    geometry, parse_complex, render, resolvent, suite, Error, GeneratorSpec, SolverConfig,
};

#[derive(Parser)]
#[command(
    name = "resolvent-lab",
    version,
    about = "Nonlinear resolvents of semigroup generators on the unit disk"
)]
struct Cli {
    /// Enumerate the registered check names and exit.
    #[arg(long, global = true)]
    list_checks: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Solve G_r(w) pointwise and print the evaluation as JSON.
    Resolve(ResolveArgs),
    /// Run a check suite from a config file (or the built-in default).
    Suite(SuiteArgs),
    /// Emit CSV/SVG image curves of circles under G_r.
    Render(RenderArgs),
    /// Print the threshold radius r0 computed by both routes.
    R0,
    /// Print the order/constant report for given q and r.
    Orders(OrdersArgs),
}

#[derive(Args)]
struct ResolveArgs {
    /// Generator description file (JSON).
    #[arg(long)]
    gen: PathBuf,
    /// Resolvent parameter r > 0.
    #[arg(long)]
    r: f64,
    /// Target point, e.g. 0.3+0.1i. Targets outside the unit disk use the
    /// analytic continuation (requires r Re q > 2).
    #[arg(long, allow_hyphen_values = true)]
    w: String,
    /// Solver residual tolerance.
    #[arg(long, default_value_t = 1e-13)]
    tol: f64,
}

#[derive(Args)]
struct SuiteArgs {
    /// Suite configuration (JSON); omit to run the built-in default suite.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output directory override (default: the config's output_dir, or
    /// `reports` for the built-in suite).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long)]
    gen: PathBuf,
    #[arg(long)]
    r: f64,
    /// Comma-separated circle radii, e.g. 0.5,0.9,0.99.
    #[arg(long)]
    circles: String,
    #[arg(long, default_value_t = 256)]
    angles: usize,
    /// Output directory for curves CSV/SVG.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
struct OrdersArgs {
    /// f'(0), e.g. 1 or 1+0.5i.
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    #[arg(long)]
    r: f64,
}

fn exit_code_for(err: &Error) -> u8 {
    if err.is_numerical() {
        3
    } else {
        2
    }
}

fn init_thread_pool() {
    if let Ok(value) = std::env::var("RESOLVENT_LAB_THREADS") {
        if let Ok(n) = value.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        }
    }
}

fn complex_json(z: Complex64) -> String {
    format!("[{}, {}]", json_float(z.re), json_float(z.im))
}

fn run_resolve(args: &ResolveArgs) -> Result<u8, Error> {
    let g = GeneratorSpec::from_json_file(&args.gen)?;
    let w = parse_complex(&args.w)?;
    let cfg = SolverConfig {
        tol: args.tol,
        ..SolverConfig::default()
    }
    .validated()?;
    let eval = if w.norm() < 1.0 {
        resolvent::resolve(&g, args.r, w, &cfg)?
    } else {
        resolvent::resolve_continued(&g, args.r, w, &cfg)?
    };
    println!("{{");
    println!("  \"value\": {},", complex_json(eval.value));
    println!("  \"d1\": {},", complex_json(eval.d1));
    println!("  \"d2\": {},", complex_json(eval.d2));
    println!("  \"iterations\": {},", eval.iterations);
    println!("  \"residual\": {}", json_float(eval.residual));
    println!("}}");
    Ok(0)
}

fn run_suite_cmd(args: &SuiteArgs) -> Result<u8, Error> {
    let mut cfg = match &args.config {
        Some(path) => suite::SuiteConfig::from_json_file(path)?,
        None => suite::SuiteConfig::default_config(&PathBuf::from("reports")),
    };
    if let Some(out) = &args.out {
        cfg.output_dir = out.clone();
    }
    let summary = suite::run_suite(&cfg)?;
    print!("{}", summary.to_json());
    Ok(if summary.all_passed() { 0 } else { 1 })
}

fn run_render(args: &RenderArgs) -> Result<u8, Error> {
    let g = GeneratorSpec::from_json_file(&args.gen)?;
    let radii: Vec<f64> = args
        .circles
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| Error::invalid("circles", format!("bad radius `{s}`")))
        })
        .collect::<Result<_, _>>()?;
    let cfg = SolverConfig::default();
    let curves = render::render_image_curves(&g, args.r, &radii, args.angles, &cfg)?;
    let refs = render::reference_circles(g.q(), args.r);
    std::fs::create_dir_all(&args.out)?;
    let csv_path = args.out.join(format!("curves_r{}.csv", args.r));
    let svg_path = args.out.join(format!("curves_r{}.svg", args.r));
    std::fs::write(&csv_path, render::curves_to_csv(&curves))?;
    std::fs::write(&svg_path, render::curves_to_svg(&curves, &refs))?;
    println!("wrote {} and {}", csv_path.display(), svg_path.display());
    Ok(0)
}

fn run_orders(args: &OrdersArgs) -> Result<u8, Error> {
    let q = parse_complex(&args.q)?;
    let rep = geometry::orders(q, args.r)?;
    println!("{{");
    println!("  \"a\": {},", json_float(rep.a));
    println!("  \"r0\": {},", json_float(rep.r0));
    println!("  \"alpha_star\": {},", json_float(rep.alpha_star));
    println!("  \"beta_star\": {},", json_float(rep.beta_star));
    println!("  \"gamma_r\": {},", json_float(rep.gamma_r));
    match rep.kappa {
        Some(k) => println!("  \"kappa\": {},", json_float(k)),
        None => println!("  \"kappa\": null,"),
    }
    println!("  \"k_qc\": {},", json_float(rep.k_qc));
    println!("  \"sector_center\": {},", json_float(rep.sector_center));
    println!(
        "  \"sector_half_angle\": {}",
        json_float(rep.sector_half_angle)
    );
    println!("}}");
    Ok(0)
}

fn dispatch(cli: &Cli) -> Result<u8, Error> {
    if cli.list_checks {
        for name in suite::REGISTERED_CHECKS {
            println!("{name}");
        }
        return Ok(0);
    }
    match &cli.command {
        Some(Command::Resolve(args)) => run_resolve(args),
        Some(Command::Suite(args)) => run_suite_cmd(args),
        Some(Command::Render(args)) => run_render(args),
        Some(Command::R0) => {
            println!("bisection:   {}", json_float(geometry::find_r0()));
            println!("closed form: {}", json_float(geometry::r0_closed_form()));
            Ok(0)
        }
        Some(Command::Orders(args)) => run_orders(args),
        None => {
            eprintln!("no subcommand given; try --help or --list-checks");
            Ok(2)
        }
    }
}

fn main() -> ExitCode {
    init_thread_pool();
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
