mod source;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use invco_core::automata::DEFAULT_STATE_CAP;
use invco_core::closure::FimClosedSub;
use invco_core::cosets::enumerate_cosets;
use invco_core::word::{parse_word, Alphabet};
use invco_core::{f2ab, worked, Error};
use serde::Serialize;

/// Cosets and indices of closed inverse subsemigroups.
#[derive(Parser)]
#[command(name = "invco", version)]
struct Cli {
    /// Worker threads for the parallel parts of the library.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Index and cosets of the closed inverse subsemigroup generated by --gens.
    Index {
        /// Builtin name (I1..I5, B1..B4, cliffordC2, cliffordC4) or a JSON file.
        #[arg(long, short)]
        semigroup: String,
        /// Comma-separated element names; `stab<p>` stands for a point stabilizer in I_n.
        #[arg(long, short, default_value = "")]
        gens: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Closed inverse submonoids of the free inverse monoid.
    #[command(subcommand)]
    Fim(FimCommand),
    /// Recompute the worked examples and compare with their known values.
    Examples {
        #[arg(long)]
        json: bool,
        /// Replace the expected value of a claim (fault injection).
        #[arg(long, hide = true)]
        corrupt: Option<String>,
    },
    /// Distinct cosets of F₂′ ⊔ {0} in F₂ ⊔ F₂^ab.
    DemoF2ab {
        #[arg(short, long, default_value_t = 10)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct FimArgs {
    /// Generator letters, e.g. `xy`.
    #[arg(long, short)]
    alphabet: String,
    /// Generating word; repeat for several. Uppercase letters are inverses.
    #[arg(long = "gen", short)]
    gens: Vec<String>,
}

#[derive(Subcommand)]
enum FimCommand {
    /// Number of cosets, i.e. states of the folded automaton.
    Index {
        #[command(flatten)]
        sub: FimArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The coset automaton.
    Automaton {
        #[command(flatten)]
        sub: FimArgs,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Whether the element represented by --word lies in the submonoid.
    Member {
        #[command(flatten)]
        sub: FimArgs,
        #[arg(long, short)]
        word: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Serialize)]
struct CosetJson {
    representative: String,
    members: Vec<String>,
}

#[derive(Serialize)]
struct IndexJson {
    semigroup: String,
    order: usize,
    generators: Vec<String>,
    members: Vec<String>,
    index: usize,
    /// Elements `s` with `ss⁻¹ ∉ L`, which lie in no coset.
    undefined: usize,
    cosets: Vec<CosetJson>,
}

fn state_cap() -> Result<usize, Error> {
    match std::env::var("INVCO_STATE_CAP") {
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::Usage(format!(
                "INVCO_STATE_CAP must be a positive integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_STATE_CAP),
    }
}

fn fim_sub(args: &FimArgs) -> Result<FimClosedSub, Error> {
    let alphabet = Alphabet::parse(&args.alphabet)?;
    let words = args
        .gens
        .iter()
        .map(|g| parse_word(g))
        .collect::<Result<Vec<_>, _>>()?;
    FimClosedSub::generate_capped(alphabet, words, state_cap()?)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn index(semigroup: &str, gens: &str, format: Format) -> Result<u8, Error> {
    let loaded = source::load(semigroup)?;
    let s = &loaded.semigroup;
    let l = loaded.closed(gens)?;
    let cosets = enumerate_cosets(&l);
    let covered: usize = cosets.iter().map(|c| c.members().len()).sum();
    let report = IndexJson {
        semigroup: loaded.name.clone(),
        order: s.order(),
        generators: loaded.names(loaded.generators(gens)?.iter()),
        members: loaded.names(l.members().iter()),
        index: cosets.len(),
        undefined: s.order() - covered,
        cosets: cosets
            .iter()
            .map(|c| CosetJson {
                representative: s.name(c.representative()).to_string(),
                members: loaded.names(c.members().iter()),
            })
            .collect(),
    };
    match format {
        Format::Json => println!("{}", json(&report)),
        Format::Text => {
            println!("semigroup {} (order {})", report.semigroup, report.order);
            println!(
                "|L| = {}: {{{}}}",
                report.members.len(),
                report.members.join(", ")
            );
            println!("index {}", report.index);
            println!("undefined {}", report.undefined);
            for (i, c) in report.cosets.iter().enumerate() {
                println!(
                    "coset {}  rep {}  {{{}}}",
                    i + 1,
                    c.representative,
                    c.members.join(", ")
                );
            }
        }
    }
    Ok(0)
}

fn fim(command: &FimCommand) -> Result<u8, Error> {
    match command {
        FimCommand::Index { sub, format } => {
            let k = fim_sub(sub)?;
            let n = k.automaton().state_count();
            match format {
                Format::Text => println!("{n}"),
                Format::Json => println!(
                    "{}",
                    json(
                        &serde_json::json!({ "alphabet": sub.alphabet, "generators": sub.gens, "index": n })
                    )
                ),
            }
        }
        FimCommand::Automaton { sub, format } => {
            let k = fim_sub(sub)?;
            match format {
                GraphFormat::Dot => print!("{}", k.automaton().to_dot()),
                GraphFormat::Json => println!(
                    "{}",
                    serde_json::to_string(&k.automaton().to_json()).expect("serializable")
                ),
            }
        }
        FimCommand::Member { sub, word } => {
            let k = fim_sub(sub)?;
            println!("{}", k.contains_word(word)?);
        }
    }
    Ok(0)
}

fn examples(as_json: bool, corrupt: Option<&str>) -> Result<u8, Error> {
    let mut report = worked::run_examples()?;
    if let Some(id) = corrupt {
        if !report.corrupt(id) {
            return Err(Error::Usage(format!("no claim with id {id:?}")));
        }
    }
    if as_json {
        println!("{}", json(&report));
    } else {
        print!("{}", report.to_text());
    }
    Ok(report.exit_code() as u8)
}

fn demo(n: usize, as_json: bool) -> Result<u8, Error> {
    let report = f2ab::demo(n)?;
    if as_json {
        println!("{}", json(&report));
    } else {
        for r in &report.representatives {
            println!("{r}");
        }
        println!(
            "pairwise distinct: {} ({} exponent keys, {} product checks)",
            report.distinct && report.pairwise_ok,
            report.n,
            report.pairs_checked
        );
        println!(
            "membership oracle agrees with witness search: {} ({} words)",
            report.membership_agree, report.membership_checked
        );
        println!("(1, xyx⁻¹y⁻¹) ∈ K: {}", report.commutator_in_k);
        println!("(1, x) ∈ K: {}", report.x_in_k);
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn run(cli: Cli) -> Result<u8, Error> {
    if cli.threads == 0 {
        return Err(Error::Usage("--threads must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build_global()
        .map_err(|e| Error::Usage(format!("thread pool: {e}")))?;
    match &cli.command {
        Command::Index {
            semigroup,
            gens,
            format,
        } => index(semigroup, gens, *format),
        Command::Fim(command) => fim(command),
        Command::Examples { json, corrupt } => examples(*json, corrupt.as_deref()),
        Command::DemoF2ab { n, json } => demo(*n, *json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("invco: {e}");
            ExitCode::from(2)
        }
    }
}
