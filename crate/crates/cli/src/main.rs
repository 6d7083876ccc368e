use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use octacat::category::{Category, CategoryKind, Morphism};
use octacat::diagrams::ColoredPartition;
use octacat::matrix_rep::{functor_g, functor_h, hom_dim, RepSpec};
use octacat::omega;
use octacat::poly::{parse_q, PolyQ, Q};
use octacat::presentations::{eval, DiagramTarget, GenWord, Presentation};
use octacat::rank::DEFAULT_SEED;
use octacat::report::{all_pass, render_text, CheckReport};
use octacat::suites;

#[derive(Parser, Debug)]
#[command(
    name = "octacat",
    version,
    about = "Exact even and Z2-coloured partition categories"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Diagram category.
    #[arg(long, global = true, value_enum)]
    cat: Option<Cat>,

    /// Specialize the parameter t to this rational.
    #[arg(long, global = true, value_parser = parse_rational)]
    t: Option<Q>,

    /// Use loop weight 2t instead of t.
    #[arg(long, global = true)]
    weight2t: bool,

    /// Group rank for matrices and finite checks.
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,

    /// Largest number of strands in exhaustive checks.
    #[arg(long, global = true, default_value_t = 3)]
    kmax: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for the rank specialization points.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// g ∘ f, with g given first.
    Compose { g: String, f: String },
    /// a ⊗ b.
    Tensor { a: String, b: String },
    /// Upside-down reflection.
    Dual { f: String },
    /// Categorical trace of an endomorphism.
    Trace { f: String },
    /// Dimension of the equivariant maps between tensor powers.
    Homdim {
        k: usize,
        l: usize,
        #[arg(long, value_enum, default_value_t = Rep::Reflection)]
        rep: Rep,
    },
    /// Image of an even morphism under the compression functor.
    Omega { f: String },
    /// Matrix of a morphism at t = n (even) or loop weight 2n (coloured).
    Matrix { f: String },
    /// Run a verification battery.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Cat {
    Even,
    Colored,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Rep {
    Reflection,
    Permutation,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    RelationsParz2,
    RelationsPart,
    Square,
    Counting,
    Axioms,
    Functoriality,
    SchurWeyl,
    Omega,
    DatumHpp,
    DatumGpp,
}

fn parse_rational(s: &str) -> Result<Q, String> {
    parse_q(s).map_err(|e| format!("{s}: {e}"))
}

impl Cli {
    fn kind(&self) -> CategoryKind {
        match self.cat {
            Some(Cat::Colored) => CategoryKind::ColoredPartitions,
            _ => CategoryKind::EvenPartitions,
        }
    }

    fn category(&self) -> Category {
        let weight = if self.weight2t {
            PolyQ::t().scale(&Q::from_integer(2.into()))
        } else {
            PolyQ::t()
        };
        let cat = Category::new(self.kind(), weight);
        match &self.t {
            Some(t) => cat.specialize(t),
            None => cat,
        }
    }
}

/// A diagram literal or a generator word.
fn parse_morphism(s: &str, cat: &Category) -> Result<Morphism, String> {
    if s.trim_start().starts_with('(') {
        let (pres, target) = match cat.kind {
            CategoryKind::EvenPartitions => (Presentation::ParT, DiagramTarget::even(cat)),
            CategoryKind::ColoredPartitions => (Presentation::ParZ2, DiagramTarget::colored(cat)),
        };
        let w = GenWord::parse(pres, s).map_err(|e| format!("{s}: {e}"))?;
        return eval(&w, &target).map_err(|e| format!("{s}: {e}"));
    }
    let d: ColoredPartition = s.parse().map_err(|e| format!("{s}: {e}"))?;
    Morphism::from_diagram(cat, d, PolyQ::one()).map_err(|e| format!("{s}: {e}"))
}

fn print_morphism(m: &Morphism, format: Format) {
    match format {
        Format::Text => println!("{m}"),
        Format::Json => println!("{}", m.to_json()),
    }
}

fn print_reports(reports: &[CheckReport], format: Format) {
    match format {
        Format::Text => print!("{}", render_text(reports)),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(reports).expect("reports serialize")
        ),
    }
}

fn verify(cli: &Cli, suite: Suite) -> Vec<CheckReport> {
    match suite {
        Suite::RelationsParz2 => suites::relations(Presentation::ParZ2),
        Suite::RelationsPart => suites::relations(Presentation::ParT),
        Suite::Square => suites::square(cli.n, cli.kmax),
        Suite::Counting => suites::counting(8),
        Suite::Axioms => {
            let cats = match cli.cat {
                Some(_) => vec![cli.category()],
                None => vec![Category::even(), Category::colored()],
            };
            cats.iter()
                .flat_map(|c| suites::category_axioms(c, 2))
                .collect()
        }
        Suite::Functoriality => suites::interpolation(),
        Suite::SchurWeyl => suites::schur_weyl(),
        Suite::Omega => omega::omega_battery(cli.seed),
        Suite::DatumHpp => suites::datum(Presentation::ParZ2, cli.n),
        Suite::DatumGpp => suites::datum(Presentation::ParT, cli.n),
    }
}

/// `Ok(true)` when everything requested passed.
fn run(cli: &Cli) -> Result<bool, String> {
    let cat = cli.category();
    let parse = |s: &str| parse_morphism(s, &cat);
    match &cli.command {
        Command::Compose { g, f } => {
            let m = parse(g)?.compose(&parse(f)?).map_err(|e| e.to_string())?;
            print_morphism(&m, cli.format);
        }
        Command::Tensor { a, b } => {
            let m = parse(a)?.tensor(&parse(b)?).map_err(|e| e.to_string())?;
            print_morphism(&m, cli.format);
        }
        Command::Dual { f } => print_morphism(&parse(f)?.involution(), cli.format),
        Command::Trace { f } => {
            let tr = parse(f)?.trace().map_err(|e| e.to_string())?;
            match cli.format {
                Format::Text => println!("{tr}"),
                Format::Json => println!("{}", serde_json::json!({"trace": tr.to_string()})),
            }
        }
        Command::Homdim { k, l, rep } => {
            let spec = match rep {
                Rep::Reflection => RepSpec::reflection(cli.n),
                Rep::Permutation => RepSpec::permutation(cli.n),
            };
            let d = hom_dim(spec, *k, *l).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Text => println!("{d}"),
                Format::Json => println!(
                    "{}",
                    serde_json::json!({"k": k, "l": l, "n": cli.n, "dim": d})
                ),
            }
        }
        Command::Omega { f } => {
            let even = Category::new(CategoryKind::EvenPartitions, cat.loop_weight.clone());
            let m = parse_morphism(f, &even)?;
            print_morphism(
                &omega::omega0_raw(&m).map_err(|e| e.to_string())?,
                cli.format,
            );
        }
        Command::Matrix { f } => {
            let n = cli.n as i64;
            let m = match cli.kind() {
                CategoryKind::EvenPartitions => {
                    let c = Category::new(CategoryKind::EvenPartitions, PolyQ::from_int(n));
                    functor_g(&parse_morphism(f, &c)?, cli.n)
                }
                CategoryKind::ColoredPartitions => {
                    let c = Category::new(CategoryKind::ColoredPartitions, PolyQ::from_int(2 * n));
                    functor_h(&parse_morphism(f, &c)?, cli.n)
                }
            }
            .map_err(|e| e.to_string())?;
            match cli.format {
                Format::Text => println!("{m}"),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(&m.to_json()).expect("matrix serializes")
                ),
            }
        }
        Command::Verify { suite } => {
            let reports = verify(cli, *suite);
            print_reports(&reports, cli.format);
            return Ok(all_pass(&reports));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
