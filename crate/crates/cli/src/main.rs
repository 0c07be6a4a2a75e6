mod suites;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use suites::{CaseSpec, Caps, Suite, Target};
use z2inv::invariants::{basic_invariants, SystemKind, VerificationReport};
use z2inv::liealg::{Family, LieAlgebra, SymmetricPair};
use z2inv::{Error, Status};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CONJECTURAL: u8 = 3;

#[derive(Parser)]
#[command(name = "z2inv", version, about = "Exact checks for invariants of Z2-contractions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and report PASS/FAIL/SKIPPED per check.
    Verify(VerifyArgs),
    /// Print structure constants, invariants or the slice of a pair.
    Dump(DumpArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Tables,
    GoodGens,
    Index,
    Nregular,
    F4,
    Dimstab,
    Uslovie,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Gl,
    So,
    Sp,
    F4,
    Heisenberg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: SuiteArg,
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Run cases on a thread pool; output order is unchanged.
    #[arg(long)]
    parallel: bool,
    /// Zero all elapsed_ms fields.
    #[arg(long)]
    deterministic: bool,
    /// Size cap, e.g. `order=10`, `gl=3`, `so=6`, `nregular=3`, `uslovie=12`.
    #[arg(long = "cap", value_name = "KEY=VALUE")]
    caps: Vec<String>,
    /// Generating system for good-gens, e.g. POWER_TRACES.
    #[arg(long, value_parser = parse_kind)]
    kind: Option<SystemKind>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DumpWhat {
    /// Structure constants of the contraction, `i j k num/den` per line.
    Contraction,
    /// Structure constants of g itself.
    Structure,
    /// Basic invariants with their top components and bi-degrees.
    Invariants,
    /// The slice matrix.
    Slice,
}

#[derive(Args)]
struct DumpArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_enum, default_value_t = DumpWhat::Contraction)]
    what: DumpWhat,
    #[arg(long, value_parser = parse_kind)]
    kind: Option<SystemKind>,
}

fn parse_kind(s: &str) -> Result<SystemKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn family_of(f: FamilyArg) -> Target {
    match f {
        FamilyArg::Gl => Target::Family(Family::Gl),
        FamilyArg::So => Target::Family(Family::So),
        FamilyArg::Sp => Target::Family(Family::Sp),
        FamilyArg::F4 => Target::Family(Family::F4),
        FamilyArg::Heisenberg => Target::Heisenberg,
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}\n\nFor more information, try 'z2inv verify --help'.");
    ExitCode::from(EXIT_USAGE)
}

fn error_exit(e: &Error) -> ExitCode {
    match e {
        Error::Conjectural(why) => {
            eprintln!("conjectural: {why}. Only proved rows are verified.");
            ExitCode::from(EXIT_CONJECTURAL)
        }
        other => usage(other),
    }
}

fn suites_of(s: SuiteArg) -> Vec<Suite> {
    match s {
        SuiteArg::Tables => vec![Suite::Tables],
        SuiteArg::GoodGens => vec![Suite::GoodGens],
        SuiteArg::Index => vec![Suite::Index],
        SuiteArg::Nregular => vec![Suite::Nregular],
        SuiteArg::F4 => vec![Suite::F4],
        SuiteArg::Dimstab => vec![Suite::Dimstab],
        SuiteArg::Uslovie => vec![Suite::Uslovie],
        SuiteArg::All => vec![
            Suite::Tables,
            Suite::GoodGens,
            Suite::Index,
            Suite::Nregular,
            Suite::F4,
            Suite::Dimstab,
            Suite::Uslovie,
        ],
    }
}

/// Parameter completeness per suite, checked before anything runs.
fn validate(args: &VerifyArgs) -> Result<(Option<Target>, Option<(usize, usize)>, Caps), String> {
    let mut caps = Caps::default();
    for c in &args.caps {
        let (k, v) = c.split_once('=').ok_or_else(|| format!("cap `{c}` is not KEY=VALUE"))?;
        let v: usize = v.trim().parse().map_err(|_| format!("cap `{c}` needs a non-negative integer"))?;
        caps.set(k.trim(), v)?;
    }
    let target = args.family.map(family_of);
    let suite = args.suite;
    if suite == SuiteArg::All && (target.is_some() || args.n.is_some() || args.m.is_some()) {
        return Err("--suite all takes no --family, --n or --m".into());
    }
    if target == Some(Target::Heisenberg) && suite != SuiteArg::Index {
        return Err("the heisenberg family is only available for --suite index".into());
    }
    if args.kind.is_some() && suite != SuiteArg::GoodGens {
        return Err("--kind only applies to --suite good-gens".into());
    }
    let size = match suite {
        SuiteArg::Nregular | SuiteArg::Uslovie => {
            if suite == SuiteArg::Uslovie && target.is_some() {
                return Err("--suite uslovie takes no --family".into());
            }
            if suite == SuiteArg::Nregular && !matches!(target, None | Some(Target::Family(Family::Gl))) {
                return Err("--suite nregular is defined for the gl family only".into());
            }
            match (args.n, args.m) {
                (Some(n), m) if m.map_or(true, |m| m == n) && n > 0 => Some((n, n)),
                (None, None) => None,
                _ => return Err("this suite takes --n (with --m equal to --n if given), n > 0".into()),
            }
        }
        SuiteArg::F4 => {
            if !matches!(target, None | Some(Target::Family(Family::F4))) || args.n.is_some() || args.m.is_some() {
                return Err("--suite f4 takes no --n/--m and only --family f4".into());
            }
            None
        }
        _ => match (args.n, args.m) {
            (Some(n), Some(m)) => {
                if target.is_none() {
                    return Err("--n and --m need --family".into());
                }
                if target == Some(Target::Family(Family::F4)) {
                    return Err("the f4 family has no (n, m) parameters".into());
                }
                if m == 0 || n < m {
                    return Err(format!("need n >= m >= 1, got n={n}, m={m}"));
                }
                Some((n, m))
            }
            (None, None) => None,
            _ => return Err("--n and --m must be given together".into()),
        },
    };
    Ok((target, size, caps))
}

fn verify(args: VerifyArgs) -> ExitCode {
    let (target, size, caps) = match validate(&args) {
        Ok(v) => v,
        Err(msg) => return usage(msg),
    };
    let mut cases = Vec::new();
    for suite in suites_of(args.suite) {
        let spec = CaseSpec {
            suite,
            target,
            size,
            seed: args.seed,
            kind: args.kind,
            caps: caps.clone(),
        };
        match suites::build(&spec) {
            Ok(c) => cases.extend(c),
            Err(e) => return error_exit(&e),
        }
    }
    if cases.is_empty() {
        return usage("no cases match the given parameters");
    }
    let results: Vec<z2inv::Result<Vec<VerificationReport>>> = if args.parallel {
        cases.par_iter().map(|c| (c.job)()).collect()
    } else {
        cases.iter().map(|c| (c.job)()).collect()
    };
    let mut reports = Vec::new();
    for (c, r) in cases.iter().zip(results) {
        match r {
            Ok(rs) => reports.extend(rs),
            Err(e) => {
                eprintln!("case `{}` could not run", c.label);
                return error_exit(&e);
            }
        }
    }
    if args.deterministic {
        for r in &mut reports {
            r.elapsed_ms = 0;
        }
    }
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n",
        Format::Text => {
            let mut out: String = reports.iter().map(|r| r.summary_line() + "\n").collect();
            let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
            out += &format!(
                "{} checks: {} passed, {} failed, {} skipped\n",
                reports.len(),
                count(Status::Pass),
                count(Status::Fail),
                count(Status::Skipped)
            );
            out
        }
    };
    emit(&text);
    if reports.iter().any(VerificationReport::failed) {
        ExitCode::from(EXIT_FAIL)
    } else {
        ExitCode::SUCCESS
    }
}

fn dump(args: DumpArgs) -> ExitCode {
    if args.family == FamilyArg::Heisenberg {
        let h = LieAlgebra::heisenberg();
        return match args.what {
            DumpWhat::Structure | DumpWhat::Contraction => {
                emit(&h.export());
                ExitCode::SUCCESS
            }
            _ => usage("the heisenberg family only has structure constants"),
        };
    }
    let family = match family_of(args.family) {
        Target::Family(f @ (Family::Gl | Family::So)) => f,
        Target::Family(Family::Sp) => return error_exit(&Error::Conjectural("no model for the Sp family".into())),
        _ => return usage("dump supports gl, so and heisenberg"),
    };
    let (Some(n), Some(m)) = (args.n, args.m) else {
        return usage("dump needs --n and --m");
    };
    let pair = match SymmetricPair::new(family, n, m) {
        Ok(p) => p,
        Err(e) => return error_exit(&e),
    };
    match args.what {
        DumpWhat::Contraction => emit(&pair.contract().algebra().export()),
        DumpWhat::Structure => emit(&pair.algebra().export()),
        DumpWhat::Slice => {
            let s = pair.slice().matrix();
            let mut out = String::new();
            for i in 0..s.rows() {
                let row: Vec<String> = (0..s.cols()).map(|j| s.get(i, j).to_string()).collect();
                out += &(row.join("\t") + "\n");
            }
            emit(&out);
        }
        DumpWhat::Invariants => {
            let kind = match args.kind.map_or_else(|| SystemKind::default_for(family), Ok) {
                Ok(k) => k,
                Err(e) => return error_exit(&e),
            };
            let sys = match basic_invariants(&pair, kind) {
                Ok(s) => s,
                Err(e) => return error_exit(&e),
            };
            let mut out = String::new();
            for (i, f) in sys.generators().iter().enumerate() {
                let top = match f.top_component() {
                    Ok(t) => t,
                    Err(e) => return error_exit(&e),
                };
                let bd = top.bidegree().map(|b| b.to_string()).unwrap_or_default();
                out += &format!("f{} = {f}\nf{}• = {top}    bideg {bd}\n", i + 1, i + 1);
            }
            emit(&out);
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(a) => verify(a),
        Command::Dump(a) => dump(a),
    }
}
