use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sgr_core::oracle::poset_size;
use sgr_core::{build_catalog, glue, three_gen_symmetric, verify_theorem, FractionalIdeal, NumericalSemigroup};

mod output;

use output::{
    render_table, CatalogPayload, ColonPayload, ColonRow, GluePayload, Input, IsoPayload, OutputDocument,
    Payload, SemigroupSummary, ThreeGenPayload, VerifyPayload, SCHEMA_VERSION,
};

const DEFAULT_MAX_POSET: usize = 40;

const VALUE_SEMIGROUP_NOTE: &str = "generators are read as the value semigroup H_A of a one-dimensional \
complete local domain A; the associated graded ring of A along the valuation filtration is (A/m)[H_A], \
so the same list and the count c(H_A) apply to it";

#[derive(Parser)]
#[command(name = "sgr", version, about = "Gorenstein quotients of numerical semigroup rings")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Frobenius number, conductor, gaps and symmetry of a semigroup
    Analyze { generators: Vec<String> },
    /// Every non-principal graded ideal with Gorenstein quotient
    Catalog { generators: Vec<String> },
    /// Compare the catalog with a brute-force enumeration
    Verify {
        generators: Vec<String>,
        /// Extra room above the cutoff 2a
        #[arg(long, default_value_t = 0)]
        slack: i64,
        /// Run even when the poset exceeds the size guard
        #[arg(long)]
        force: bool,
    },
    /// The colon ideal R :_R t^m (every gap when --m is omitted)
    Colon {
        generators: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
    },
    /// Isomorphism classes of catalog members
    Iso { generators: Vec<String> },
    /// Glue two semigroups into <d1*H1, d2*H2>
    Glue {
        #[arg(long)]
        h1: String,
        #[arg(long)]
        h2: String,
        #[arg(long)]
        d1: i64,
        #[arg(long)]
        d2: i64,
    },
    /// The three-generated symmetric semigroup <da, db, c>
    Threegen { a: i64, b: i64, c: i64, d: i64 },
    /// Catalog of the associated graded ring of a local domain with this value semigroup
    ValueSemigroup { generators: Vec<String> },
}

/// Failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

fn invalid(message: impl ToString) -> Failure {
    Failure {
        code: 2,
        message: message.to_string(),
    }
}

fn parse_generators(args: &[String]) -> Result<Vec<i64>, Failure> {
    let gens: Vec<i64> = args
        .iter()
        .flat_map(|a| a.split(|c: char| c == ',' || c.is_whitespace()))
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<i64>()
                .map_err(|_| invalid(format!("not an integer: {s:?}")))
        })
        .collect::<Result<_, _>>()?;
    if gens.is_empty() {
        return Err(invalid("no generators given"));
    }
    Ok(gens)
}

fn semigroup(gens: &[i64]) -> Result<NumericalSemigroup, Failure> {
    NumericalSemigroup::new(gens).map_err(invalid)
}

fn max_poset() -> Result<usize, Failure> {
    match std::env::var("SGR_MAX_POSET") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| invalid(format!("SGR_MAX_POSET is not a count: {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_POSET),
    }
}

fn catalog_payload(gens: &[i64]) -> Result<CatalogPayload, Failure> {
    let h = semigroup(gens)?;
    let catalog = build_catalog(&h).map_err(invalid)?;
    Ok(CatalogPayload::from(&catalog))
}

fn run(cmd: Command) -> Result<(OutputDocument, u8), Failure> {
    let doc = |command, input, result| OutputDocument {
        schema_version: SCHEMA_VERSION,
        command,
        input,
        result,
    };
    let with_gens = |gens: &[i64]| Input {
        generators: Some(gens.to_vec()),
        ..Input::default()
    };

    Ok(match cmd {
        Command::Analyze { generators } => {
            let gens = parse_generators(&generators)?;
            let h = semigroup(&gens)?;
            let summary = SemigroupSummary::from(&h);
            (doc("analyze", with_gens(&gens), Payload::Analyze(summary)), 0)
        }
        Command::Catalog { generators } => {
            let gens = parse_generators(&generators)?;
            let payload = catalog_payload(&gens)?;
            (doc("catalog", with_gens(&gens), Payload::Catalog(payload)), 0)
        }
        Command::ValueSemigroup { generators } => {
            let gens = parse_generators(&generators)?;
            let mut payload = catalog_payload(&gens)?;
            payload.note = Some(VALUE_SEMIGROUP_NOTE);
            (doc("value-semigroup", with_gens(&gens), Payload::Catalog(payload)), 0)
        }
        Command::Verify {
            generators,
            slack,
            force,
        } => {
            let gens = parse_generators(&generators)?;
            let h = semigroup(&gens)?;
            if !h.is_symmetric() {
                return Err(invalid(format!("NotSymmetric: {h} is not symmetric")));
            }
            if slack < 0 {
                return Err(invalid("--slack must be non-negative"));
            }
            let bound = (2 * h.frobenius() + slack).max(0);
            let size = poset_size(&h, bound);
            let limit = max_poset()?;
            if size > limit && !force {
                return Err(invalid(format!(
                    "poset has {size} elements (limit {limit}); pass --force or raise SGR_MAX_POSET"
                )));
            }
            let report = verify_theorem(&h, slack).map_err(invalid)?;
            let code = if report.passed() { 0 } else { 1 };
            let input = Input {
                generators: Some(gens),
                slack: Some(slack),
                force: Some(force),
                ..Input::default()
            };
            (doc("verify", input, Payload::Verify(VerifyPayload::new(&report, size))), code)
        }
        Command::Colon { generators, m } => {
            let gens = parse_generators(&generators)?;
            let h = semigroup(&gens)?;
            let ms = match m {
                Some(m) => vec![m],
                None => h.gaps().to_vec(),
            };
            let rows = ms
                .into_iter()
                .map(|m| {
                    let ideal = FractionalIdeal::colon_into_ring(&h, m);
                    let profile = ideal.quotient_profile().ok();
                    ColonRow {
                        m,
                        generators: ideal.generators().to_vec(),
                        a_quotient: profile.as_ref().map(|p| p.a_invariant),
                        gorenstein: profile.map(|p| p.gorenstein),
                    }
                })
                .collect();
            let input = Input {
                generators: Some(gens),
                m,
                ..Input::default()
            };
            let payload = ColonPayload {
                minimal_generators: h.minimal_generators().to_vec(),
                rows,
            };
            (doc("colon", input, Payload::Colon(payload)), 0)
        }
        Command::Iso { generators } => {
            let gens = parse_generators(&generators)?;
            let h = semigroup(&gens)?;
            let classes = build_catalog(&h)
                .and_then(|c| c.iso_classes())
                .map_err(invalid)?;
            (doc("iso", with_gens(&gens), Payload::Iso(IsoPayload::new(&h, &classes))), 0)
        }
        Command::Glue { h1, h2, d1, d2 } => {
            let g1 = parse_generators(&[h1])?;
            let g2 = parse_generators(&[h2])?;
            let spec = glue(&semigroup(&g1)?, &semigroup(&g2)?, d1, d2).map_err(invalid)?;
            let input = Input {
                h1: Some(g1),
                h2: Some(g2),
                d1: Some(d1),
                d2: Some(d2),
                ..Input::default()
            };
            (doc("glue", input, Payload::Glue(GluePayload::from(&spec))), 0)
        }
        Command::Threegen { a, b, c, d } => {
            let spec = three_gen_symmetric(a, b, c, d).map_err(invalid)?;
            let cmp = spec.predicted_vs_actual().map_err(invalid)?;
            let input = Input {
                a: Some(a),
                b: Some(b),
                c: Some(c),
                d: Some(d),
                ..Input::default()
            };
            let code = if cmp.holds() { 0 } else { 1 };
            (doc("threegen", input, Payload::ThreeGen(ThreeGenPayload::new(&spec, cmp.actual))), code)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((doc, code)) => {
            match cli.format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"))
                }
                Format::Table => print!("{}", render_table(&doc)),
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
