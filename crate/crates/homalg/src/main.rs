//! Thin command-line front end over [`homalg::cli`].

use clap::{Args, Parser, Subcommand};
use homalg::cli::{run, Command, Degrees, Verb};
use homalg::smash::SmashOrder;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "homalg",
    version,
    about = "Exact checkers and constructors for finite-dimensional Hom-algebraic structures"
)]
struct Cli {
    #[command(subcommand)]
    verb: VerbCli,
}

#[derive(Args, Clone, Default)]
struct DegreeArgs {
    /// Monoidal context twist (first component).
    #[arg(short = 'i', long, default_value_t = 0, allow_hyphen_values = true)]
    i: i64,
    /// Monoidal context twist (second component).
    #[arg(short = 'j', long, default_value_t = 0, allow_hyphen_values = true)]
    j: i64,
    /// Module degree.
    #[arg(short = 'n', long, default_value_t = 0, allow_hyphen_values = true)]
    n: i64,
    /// Entwining / application twist degree.
    #[arg(short = 'm', long, default_value_t = 0, allow_hyphen_values = true)]
    m: i64,
    /// Yetter-Drinfeld degree.
    #[arg(short = 'p', long, default_value_t = 0, allow_hyphen_values = true)]
    p: i64,
    /// Bilinear-form degree.
    #[arg(short = 'q', long, default_value_t = 0, allow_hyphen_values = true)]
    q: i64,
    /// Doi-Hopf module degree.
    #[arg(short = 'k', long, default_value_t = 0, allow_hyphen_values = true)]
    k: i64,
}

impl DegreeArgs {
    fn into_degrees(self) -> Degrees {
        Degrees {
            i: self.i,
            j: self.j,
            n: self.n,
            m: self.m,
            p: self.p,
            q: self.q,
            k: self.k,
        }
    }
}

#[derive(Args, Clone)]
struct CheckArgs {
    /// What to check (algebra, coalgebra, bialgebra, hopf, cotwistor,
    /// entwining, module, doi-datum, doi-module, long, yd).
    kind: String,
    /// Primary input file (structure/cotwistor/entwining/datum file).
    path: Option<PathBuf>,
    /// Entwining file (for `module`).
    #[arg(long)]
    entwining: Option<PathBuf>,
    /// Datum file (for `doi-module`).
    #[arg(long)]
    datum: Option<PathBuf>,
    /// Bialgebra structure file (for `long`).
    #[arg(long)]
    bialgebra: Option<PathBuf>,
    /// Hopf structure file (for `yd`).
    #[arg(long)]
    hopf: Option<PathBuf>,
    /// Module file (for `module`, `doi-module`, `long`, `yd`).
    #[arg(long)]
    module: Option<PathBuf>,
    /// Also check the multiplicative axiom group (M5-M6 / E5-E6 /
    /// Doi-Hopf monoidality).
    #[arg(long)]
    monoidal: bool,
    #[command(flatten)]
    degrees: DegreeArgs,
    /// Emit the machine-readable line format instead of text.
    #[arg(long)]
    machine: bool,
}

#[derive(Subcommand)]
enum VerbCli {
    /// Check axioms; exit 0 when all hold, 1 when any fails.
    Verify(CheckArgs),
    /// Like verify, but always exits 0 when the inputs are well-formed.
    Report(CheckArgs),
    /// Build a derived structure and write it out canonically.
    Construct {
        /// What to build (smash, smash-bialgebra, dual-coalgebra,
        /// dual-bialgebra, yau-twist, codouble, codouble-bialgebra,
        /// long-codouble, drinfeld-codouble, doi-codouble, doi-entwining,
        /// long-entwining, yd-entwining, hopf-entwining, canonical-module,
        /// long-module, yd-module, sample).
        what: String,
        /// Input structure file (for duals and twists).
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Left coalgebra/bialgebra structure file (for smash).
        #[arg(long)]
        b: Option<PathBuf>,
        /// Right coalgebra/bialgebra structure file (for smash).
        #[arg(long)]
        h: Option<PathBuf>,
        /// Cotwistor map: `flip` or a matrix file path.
        #[arg(long)]
        phi: Option<String>,
        /// Automorphism matrix file (for yau-twist).
        #[arg(long)]
        alpha: Option<PathBuf>,
        /// Entwining file input.
        #[arg(long)]
        entwining: Option<PathBuf>,
        /// Datum file input.
        #[arg(long)]
        datum: Option<PathBuf>,
        /// Bialgebra structure file input.
        #[arg(long)]
        bialgebra: Option<PathBuf>,
        /// Hopf structure file input.
        #[arg(long)]
        hopf: Option<PathBuf>,
        /// Product order for smash-bialgebra: `hg` (in order) or `gh`
        /// (reversed). No default: the choice is mathematically visible.
        #[arg(long)]
        order: Option<String>,
        /// Carrier side for canonical modules: `ha` or `ah`.
        #[arg(long)]
        side: Option<String>,
        /// Generator family for module construction.
        #[arg(long)]
        family: Option<String>,
        /// Output path.
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        degrees: DegreeArgs,
        #[arg(long)]
        machine: bool,
    },
    /// Convert between entwining maps and cotwistors (exact round trips).
    Correspond {
        /// Direction: to-cotwistor, to-entwining, roundtrip.
        direction: String,
        #[arg(long)]
        entwining: Option<PathBuf>,
        #[arg(long)]
        cotwistor: Option<PathBuf>,
        /// Algebra presenting the cotwistor's dual side (to-entwining).
        #[arg(long)]
        algebra: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        degrees: DegreeArgs,
        #[arg(long)]
        machine: bool,
    },
    /// Check one of the equation families (ybe, d, zeta).
    Equation {
        /// Which equation: ybe, d, zeta.
        which: String,
        #[arg(long)]
        hopf: Option<PathBuf>,
        #[arg(long)]
        bialgebra: Option<PathBuf>,
        /// Module files (three for ybe/d).
        #[arg(long, num_args = 1..)]
        modules: Vec<PathBuf>,
        #[command(flatten)]
        degrees: DegreeArgs,
        #[arg(long)]
        machine: bool,
    },
}

fn check_command(verb: Verb, args: CheckArgs) -> Command {
    let mut cmd = Command::new(verb, &args.kind);
    cmd.degrees = args.degrees.into_degrees();
    cmd.monoidal = args.monoidal;
    cmd.machine = args.machine;
    if let Some(path) = args.path {
        cmd = cmd.input("in", path);
    }
    if let Some(path) = args.entwining {
        cmd = cmd.input("entwining", path);
    }
    if let Some(path) = args.datum {
        cmd = cmd.input("datum", path);
    }
    if let Some(path) = args.bialgebra {
        cmd = cmd.input("bialgebra", path);
    }
    if let Some(path) = args.hopf {
        cmd = cmd.input("hopf", path);
    }
    if let Some(path) = args.module {
        cmd = cmd.input("module", path);
    }
    cmd
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cmd = match cli.verb {
        VerbCli::Verify(args) => check_command(Verb::Verify, args),
        VerbCli::Report(args) => check_command(Verb::Report, args),
        VerbCli::Construct {
            what,
            input,
            b,
            h,
            phi,
            alpha,
            entwining,
            datum,
            bialgebra,
            hopf,
            order,
            side,
            family,
            out,
            degrees,
            machine,
        } => {
            let mut cmd = Command::new(Verb::Construct, &what);
            cmd.degrees = degrees.into_degrees();
            cmd.machine = machine;
            cmd.out = Some(out);
            cmd.phi = phi;
            cmd.side = side;
            cmd.family = family;
            cmd.order = match order.as_deref() {
                None => None,
                Some("hg") => Some(SmashOrder::Hg),
                Some("gh") => Some(SmashOrder::Gh),
                Some(other) => {
                    eprintln!("error: unknown --order `{other}` (expected hg or gh)");
                    return ExitCode::from(2);
                }
            };
            for (role, path) in [
                ("in", input),
                ("b", b),
                ("h", h),
                ("alpha", alpha),
                ("entwining", entwining),
                ("datum", datum),
                ("bialgebra", bialgebra),
                ("hopf", hopf),
            ] {
                if let Some(path) = path {
                    cmd = cmd.input(role, path);
                }
            }
            cmd
        }
        VerbCli::Correspond {
            direction,
            entwining,
            cotwistor,
            algebra,
            out,
            degrees,
            machine,
        } => {
            let mut cmd = Command::new(Verb::Correspond, &direction);
            cmd.degrees = degrees.into_degrees();
            cmd.machine = machine;
            cmd.out = out;
            for (role, path) in [
                ("entwining", entwining),
                ("cotwistor", cotwistor),
                ("algebra", algebra),
            ] {
                if let Some(path) = path {
                    cmd = cmd.input(role, path);
                }
            }
            cmd
        }
        VerbCli::Equation {
            which,
            hopf,
            bialgebra,
            modules,
            degrees,
            machine,
        } => {
            let mut cmd = Command::new(Verb::Equation, &which);
            cmd.degrees = degrees.into_degrees();
            cmd.machine = machine;
            if let Some(path) = hopf {
                cmd = cmd.input("hopf", path);
            }
            if let Some(path) = bialgebra {
                cmd = cmd.input("bialgebra", path);
            }
            for path in modules {
                cmd = cmd.input("module", path);
            }
            cmd
        }
    };
    let outcome = run(&cmd);
    print!("{}", outcome.rendered);
    ExitCode::from(outcome.exit as u8)
}
