//! `uaut`: command-line access to the category U, the fiber functor of a
//! quadratic algebra and the presentation of aut(k[x_1, …, x_d]).
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

mod check;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use uaut::algebra::{builtin, polynomial, QuadraticAlgebra};
use uaut::fiber::FiberFunctor;
use uaut::presentation::{emit, uaut_presentation, Format};
use uaut::ucat::{hom_count, hom_enumerate};
use uaut::words::{
    all_words, down_set, is_antichain, is_saturated, leq, parse_word, parse_word_set, SaturatedSet,
    Word,
};
use uaut::Error;

#[derive(Parser)]
#[command(
    name = "uaut",
    version,
    about = "Computations in the category U and with its fiber functor"
)]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Config {
    /// Algebra in the TOML format (label, dimV, relations).
    #[arg(long, global = true, conflicts_with = "builtin")]
    algebra: Option<PathBuf>,
    /// Builtin algebra, e.g. `polynomial(3)`, `quantum_plane(2)`, `jordan_plane`, `sklyanin3(1,2,3)`.
    #[arg(long, global = true)]
    builtin: Option<String>,
    /// Global dimension; inferred from the algebra when omitted.
    #[arg(long, global = true)]
    d: Option<usize>,
    /// Degree bound; defaults to d+3.
    #[arg(long = "N", global = true)]
    n: Option<usize>,
    /// Word-length bound.
    #[arg(long, global = true, default_value_t = 3)]
    max_len: usize,
    /// Word set such as "{,r1}"; the empty item is the unit.
    #[arg(long, global = true)]
    set: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
    /// Seed for randomized trials.
    #[arg(long, global = true, default_value_t = 20240611)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Koszul and AS-regularity battery, Hilbert and R_n dimensions.
    Analyze,
    /// Queries on the order of the object monoid.
    #[command(subcommand)]
    Poset(PosetCommand),
    /// Morphism sets of U.
    #[command(subcommand)]
    Hom(HomCommand),
    /// Dimensions of M, ∇, Δ and L for every word up to --max-len.
    Eval,
    /// Dimension of the endomorphism algebra of M restricted to --set.
    End,
    /// Runs the property suite.
    Check,
    /// Emits the presentation of aut(k[x_1, …, x_d]).
    Present,
}

#[derive(Subcommand)]
enum PosetCommand {
    /// Whether MU ≤ LAMBDA.
    Leq { mu: String, lambda: String },
    /// All words below LAMBDA.
    DownSet { lambda: String },
    /// Saturation, antichain test and closure of --set.
    Saturated,
}

#[derive(Subcommand)]
enum HomCommand {
    Count {
        mu: String,
        nu: String,
    },
    /// All morphisms in normal form, one per line.
    Enumerate {
        mu: String,
        nu: String,
    },
}

/// How a command failed.
pub enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

impl Config {
    fn load_algebra(&self) -> Result<Option<QuadraticAlgebra>, Failure> {
        if let Some(path) = &self.algebra {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            return Ok(Some(QuadraticAlgebra::from_toml(&text)?));
        }
        match &self.builtin {
            Some(name) => Ok(Some(builtin(name)?)),
            None => Ok(None),
        }
    }

    /// d from the flag, else from the algebra, else 2.
    fn resolve_d(&self, alg: Option<&QuadraticAlgebra>) -> Result<usize, Failure> {
        let d = match (self.d, alg) {
            (Some(d), _) => d,
            (None, Some(a)) => a.infer_d(a.dim_v() + 2).ok_or_else(|| {
                Failure::Verification(format!(
                    "{}: no degree d with dim R_d = 1 and R_(d+1) = 0",
                    a.label()
                ))
            })?,
            (None, None) => 2,
        };
        if d < 2 {
            return Err(Failure::Usage("d must be at least 2".into()));
        }
        Ok(d)
    }

    fn resolve_n(&self, d: usize) -> Result<usize, Failure> {
        let n = self.n.unwrap_or(d + 3);
        if n < d {
            return Err(Failure::Usage(format!("--N {n} is below d = {d}")));
        }
        Ok(n)
    }

    fn max_len(&self) -> Result<usize, Failure> {
        if self.max_len == 0 {
            return Err(Failure::Usage("--max-len must be at least 1".into()));
        }
        Ok(self.max_len)
    }

    /// The configured algebra with its d, defaulting to polynomial(d).
    fn algebra_and_d(&self) -> Result<(QuadraticAlgebra, usize), Failure> {
        let alg = self.load_algebra()?;
        let d = self.resolve_d(alg.as_ref())?;
        Ok((alg.unwrap_or_else(|| polynomial(d)), d))
    }

    fn word_set(&self, d: usize) -> Result<Vec<Word>, Failure> {
        let text = self
            .set
            .as_deref()
            .ok_or_else(|| Failure::Usage("--set is required".into()))?;
        Ok(parse_word_set(text, d)?)
    }
}

/// Key/value report in either format.
pub struct Report {
    format: OutputFormat,
    lines: Vec<(String, String)>,
}

impl Report {
    pub fn new(format: OutputFormat) -> Self {
        Report {
            format,
            lines: Vec::new(),
        }
    }

    pub fn add(&mut self, key: &str, value: impl ToString) {
        self.lines.push((key.to_string(), value.to_string()));
    }

    pub fn render(&self) -> String {
        let width = self.lines.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut s = String::new();
        for (k, v) in &self.lines {
            match self.format {
                OutputFormat::Table => s.push_str(&format!("{k:<width$}  {v}\n")),
                OutputFormat::Machine => s.push_str(&format!("{}={v}\n", k.replace(' ', "_"))),
            }
        }
        s
    }
}

fn joined(xs: impl IntoIterator<Item = impl ToString>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_analyze(cfg: &Config) -> Outcome {
    let alg = cfg
        .load_algebra()?
        .unwrap_or_else(|| polynomial(cfg.d.unwrap_or(2)));
    let d = match cfg.d {
        Some(d) => Some(d),
        None => alg.infer_d(alg.dim_v() + 2),
    };
    let n = cfg.resolve_n(d.unwrap_or(alg.dim_v()).max(2))?;
    let mut r = Report::new(cfg.format);
    r.add("algebra", alg.label());
    r.add("dim V", alg.dim_v());
    r.add("N", n);
    r.add("hilbert", joined((0..=n).map(|k| alg.hilbert_dim(k))));
    r.add("dim R_n", joined((0..=n).map(|k| alg.r_n(k).dim())));
    let koszul = alg.koszul_degree(n);
    r.add("koszul through", koszul);
    let euler_ok = (0..=n).all(|m| alg.koszul_euler(m) == i64::from(m == 0));
    r.add("euler", if euler_ok { "ok" } else { "fails" });
    let certified = match d {
        Some(d) => {
            let p = alg.certify(d, n);
            r.add("d", d);
            r.add("top is line", p.top_is_line());
            r.add("vanishes above d", p.vanishes_above());
            r.add("pairings", joined(p.pairing_ok.iter()));
            r.add("AS regular", p.is_regular());
            r.add("certified", p.is_certified());
            p.is_certified() && euler_ok
        }
        None => {
            r.add("d", "none");
            r.add("AS regular", false);
            r.add("certified", false);
            false
        }
    };
    if certified {
        Ok(r.render())
    } else {
        Err(Failure::Verification(r.render()))
    }
}

fn cmd_poset(cfg: &Config, q: &PosetCommand) -> Outcome {
    let alg = cfg.load_algebra()?;
    let d = cfg.resolve_d(alg.as_ref())?;
    match q {
        PosetCommand::Leq { mu, lambda } => {
            let (mu, lambda) = (parse_word(mu, d)?, parse_word(lambda, d)?);
            Ok(format!("{}\n", leq(&mu, &lambda)?))
        }
        PosetCommand::DownSet { lambda } => {
            let set = down_set(&parse_word(lambda, d)?);
            Ok(set
                .elements()
                .map(|w| format!("{}\n", w.display()))
                .collect())
        }
        PosetCommand::Saturated => {
            let words = cfg.word_set(d)?;
            let mut r = Report::new(cfg.format);
            r.add("saturated", is_saturated(&words));
            r.add("antichain", is_antichain(&words));
            r.add("closure", SaturatedSet::closure(d, words));
            Ok(r.render())
        }
    }
}

fn cmd_hom(cfg: &Config, q: &HomCommand) -> Outcome {
    let alg = cfg.load_algebra()?;
    let d = cfg.resolve_d(alg.as_ref())?;
    match q {
        HomCommand::Count { mu, nu } => Ok(format!(
            "{}\n",
            hom_count(&parse_word(mu, d)?, &parse_word(nu, d)?)?
        )),
        HomCommand::Enumerate { mu, nu } => {
            let maps = hom_enumerate(&parse_word(mu, d)?, &parse_word(nu, d)?)?;
            Ok(maps
                .iter()
                .map(|f| match cfg.format {
                    OutputFormat::Table => format!("{f}\n"),
                    OutputFormat::Machine => format!("{}\n", joined(f.generators().iter())),
                })
                .collect())
        }
    }
}

fn cmd_eval(cfg: &Config) -> Outcome {
    let (alg, d) = cfg.algebra_and_d()?;
    let m = FiberFunctor::new(&alg, d)?;
    let mut s = String::new();
    match cfg.format {
        OutputFormat::Table => s.push_str(&format!(
            "{:<24} {:>6} {:>6} {:>6} {:>6}\n",
            "word", "M", "nabla", "delta", "L"
        )),
        OutputFormat::Machine => s.push_str("word\tM\tnabla\tdelta\tL\n"),
    }
    for w in all_words(d, cfg.max_len()?) {
        let row = (
            m.dim(&w),
            m.nabla_dim(&w)?,
            m.delta_dim(&w)?,
            m.simple_dim(&w)?,
        );
        match cfg.format {
            OutputFormat::Table => s.push_str(&format!(
                "{:<24} {:>6} {:>6} {:>6} {:>6}\n",
                w.display(),
                row.0,
                row.1,
                row.2,
                row.3
            )),
            OutputFormat::Machine => s.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                w.display(),
                row.0,
                row.1,
                row.2,
                row.3
            )),
        }
    }
    Ok(s)
}

fn cmd_end(cfg: &Config) -> Outcome {
    let (alg, d) = cfg.algebra_and_d()?;
    let set = SaturatedSet::new(d, cfg.word_set(d)?)?;
    let m = FiberFunctor::new(&alg, d)?;
    Ok(format!("{}\n", m.end_algebra_dim(&set)?))
}

fn cmd_present(cfg: &Config) -> Outcome {
    let d = cfg.d.unwrap_or(2);
    if d < 2 {
        return Err(Failure::Usage("d must be at least 2".into()));
    }
    let format = match cfg.format {
        OutputFormat::Table => Format::Table,
        OutputFormat::Machine => Format::Machine,
    };
    Ok(emit(&uaut_presentation(d), format))
}

fn run(cli: &Cli) -> Outcome {
    let cfg = &cli.config;
    match &cli.command {
        Command::Analyze => cmd_analyze(cfg),
        Command::Poset(q) => cmd_poset(cfg, q),
        Command::Hom(q) => cmd_hom(cfg, q),
        Command::Eval => cmd_eval(cfg),
        Command::End => cmd_end(cfg),
        Command::Check => check::cmd_check(cfg),
        Command::Present => cmd_present(cfg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
