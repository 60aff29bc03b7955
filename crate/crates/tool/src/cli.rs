//! The `sqwalk` command line. [`run`] does all the work and returns the
//! text and exit status, so the binary is a thin wrapper and tests can call
//! it in process.

use std::io::Read;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sqwalk::search::{tournament_search, walk_search};
use sqwalk::walks::{
    c4_walk_uniform_stream, classify, claw_walk_stream, cycle_walk_stream, dean_reduced_stream,
    first_non_edge, p5_walk_stream, thue_stream, tournament5_stream,
};
use sqwalk::word::{free_group_cancellation, tournament_violation};
use sqwalk::{Alignment, Graph, Letter, Morphism, Preservation, Square, Word, WordStream};
use thiserror::Error;

use crate::formats::{
    builtin_graph, builtin_morphism, parse_graph, parse_morphism, render_classification,
    render_gamma_report, render_letters, render_search,
};
use crate::parallel;

const BUILTINS: &str = "\
Built-in graphs (usable wherever a graph file is expected):
  p3 p4 p5 c3 c4 c5 c6 claw
Built-in morphisms:
  tau alpha-p5 beta-p5 phi-p5 alpha-c4 alpha-t5
  alpha-c4-repaired beta-p5-printed phi-p5-printed
Streams for `generate`:
  thue p5 cycle:<n> c4-uniform claw tournament5 dean";

#[derive(Debug, Parser)]
#[command(
    name = "sqwalk",
    version,
    about = "Square-free words, square-free walks on graphs and their colour numbers",
    after_help = BUILTINS
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a prefix of an infinite square-free word or walk.
    #[command(after_help = BUILTINS)]
    Generate(GenerateArgs),
    /// Test a word; exits 1 if the predicate fails.
    Check(CheckArgs),
    /// Decide whether a graph has an infinite square-free walk.
    #[command(after_help = BUILTINS)]
    Classify(ClassifyArgs),
    /// Exhaustive bounded search for square-free walks or tournament words.
    #[command(after_help = BUILTINS)]
    Search(SearchArgs),
    /// Apply or test a morphism given by name or file.
    #[command(after_help = BUILTINS)]
    Morphism(MorphismArgs),
}

#[derive(Debug, Args)]
struct GenerateArgs {
    /// thue, p5, cycle:<n>, c4-uniform, claw, tournament5 or dean.
    stream: String,
    #[arg(long)]
    length: usize,
    /// Graph for the claw stream (default: the claw itself).
    #[arg(long)]
    graph: Option<String>,
    /// Vertex of degree at least 3 for the claw stream (default: the first one).
    #[arg(long)]
    hub: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Predicate {
    SquareFree,
    GWord,
    Tournament,
    Reduced,
}

#[derive(Debug, Args)]
struct CheckArgs {
    predicate: Predicate,
    /// The word; read from standard input when omitted or `-`.
    word: Option<String>,
    /// Graph for `g-word`.
    #[arg(long)]
    graph: Option<String>,
}

#[derive(Debug, Args)]
struct ClassifyArgs {
    #[arg(long)]
    graph: String,
    /// Prose output instead of key=value lines.
    #[arg(long)]
    human: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SearchKind {
    Walk,
    Tournament,
    GammaLower,
}

#[derive(Debug, Args)]
struct SearchArgs {
    kind: SearchKind,
    /// Graph for `walk` and `gamma-lower`.
    #[arg(long)]
    graph: Option<String>,
    /// Alphabet size for `tournament`.
    #[arg(long)]
    alphabet: Option<usize>,
    /// Length at which a search gives up and reports `bound_exceeded`
    /// (default 100, or 200 for `tournament`).
    #[arg(long)]
    cap: Option<usize>,
    /// Number of colours `k` for `gamma-lower`.
    #[arg(long)]
    colours: Option<usize>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MorphismAction {
    Apply,
    Crochemore,
    Preserve,
    Align,
}

#[derive(Debug, Args)]
struct MorphismArgs {
    action: MorphismAction,
    /// Built-in name or a file of `i -> image` lines.
    morphism: String,
    /// Word for `apply`; read from standard input when omitted or `-`.
    word: Option<String>,
    /// Longest source word checked by `preserve`.
    #[arg(long, default_value_t = 5)]
    max_len: usize,
    /// Factor excluded from the source words checked by `preserve`.
    #[arg(long)]
    forbid: Vec<String>,
    /// Letters checked by `align` (default: all of them).
    #[arg(long)]
    letters: Option<String>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Format(#[from] crate::formats::FormatError),
    #[error("{0}")]
    Word(#[from] sqwalk::WordError),
    #[error("{0}")]
    Morphism(#[from] sqwalk::MorphismError),
    #[error("{0}")]
    Walk(#[from] sqwalk::WalkError),
    #[error("{0}")]
    Search(#[from] sqwalk::SearchError),
    #[error("{0}")]
    Threads(#[from] rayon::ThreadPoolBuildError),
}

/// What a run printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }
}

/// Runs the command line `args` (program name first), reading words from
/// `stdin` when a command asks for them.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Output::ok(text)
            } else {
                Output {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    let result = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Check(a) => check(a, stdin),
        Command::Classify(a) => classify_cmd(a),
        Command::Search(a) => search(a),
        Command::Morphism(a) => morphism(a, stdin),
    };
    match result {
        Ok(out) => out,
        Err(e) => Output {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: 2,
        },
    }
}

fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })
}

fn load_graph(name: &str) -> Result<Graph, CliError> {
    if let Some(g) = builtin_graph(name) {
        return Ok(g);
    }
    if !Path::new(name).exists() {
        return Err(CliError::Usage(format!(
            "{name:?} is neither a built-in graph nor a file"
        )));
    }
    Ok(parse_graph(&read_file(name)?)?)
}

fn load_morphism(name: &str) -> Result<Morphism, CliError> {
    if let Some(m) = builtin_morphism(name) {
        return Ok(m);
    }
    if !Path::new(name).exists() {
        return Err(CliError::Usage(format!(
            "{name:?} is neither a built-in morphism nor a file"
        )));
    }
    Ok(parse_morphism(&read_file(name)?)?)
}

fn require<T>(value: Option<T>, flag: &str, what: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("{what} needs --{flag}")))
}

/// The word argument, or standard input for `None` and `-`.
fn word_text(arg: Option<String>, stdin: &mut dyn Read) -> Result<String, CliError> {
    match arg {
        Some(w) if w != "-" => Ok(w),
        _ => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|source| CliError::Io {
                    path: "<stdin>".to_string(),
                    source,
                })?;
            Ok(text.trim().to_string())
        }
    }
}

fn stream_by_name(args: &GenerateArgs) -> Result<WordStream, CliError> {
    let name = args.stream.as_str();
    if let Some(n) = name.strip_prefix("cycle:") {
        let n: usize = n
            .parse()
            .map_err(|_| CliError::Usage(format!("bad cycle length in {name:?}")))?;
        return Ok(cycle_walk_stream(n)?);
    }
    Ok(match name {
        "thue" => thue_stream(),
        "p5" => p5_walk_stream(),
        "c4-uniform" => c4_walk_uniform_stream(),
        "tournament5" => tournament5_stream(),
        "dean" => dean_reduced_stream(),
        "claw" => {
            let graph = match &args.graph {
                Some(g) => load_graph(g)?,
                None => sqwalk::graph::claw_graph(),
            };
            let hub = match args.hub {
                Some(h) => h,
                None => (0..graph.vertex_count())
                    .find(|&v| graph.degree(v) >= 3)
                    .ok_or_else(|| CliError::Usage("graph has no vertex of degree 3".into()))?,
            };
            claw_walk_stream(&graph, hub)?
        }
        _ => return Err(CliError::Usage(format!("unknown stream {name:?}"))),
    })
}

fn generate(args: GenerateArgs) -> Result<Output, CliError> {
    if args.stream != "claw" && (args.graph.is_some() || args.hub.is_some()) {
        return Err(CliError::Usage(
            "--graph and --hub only apply to the claw stream".into(),
        ));
    }
    let mut stream = stream_by_name(&args)?;
    Ok(Output::ok(format!("{}\n", stream.prefix(args.length))))
}

fn describe_square(letters: &[Letter], alphabet_size: usize, square: Square) -> String {
    format!(
        "square ({})^2 at position {}",
        render_letters(square.half(letters), alphabet_size),
        square.start
    )
}

fn check(args: CheckArgs, stdin: &mut dyn Read) -> Result<Output, CliError> {
    let text = word_text(args.word, stdin)?;
    if args.graph.is_some() && !matches!(args.predicate, Predicate::GWord) {
        return Err(CliError::Usage("--graph only applies to g-word".into()));
    }
    let failure = match args.predicate {
        Predicate::SquareFree => {
            let w = Word::parse_inferred(&text)?;
            w.find_square()
                .map(|s| describe_square(w.letters(), w.alphabet_size(), s))
        }
        Predicate::GWord => {
            let graph = load_graph(&require(args.graph, "graph", "g-word")?)?;
            let w = Word::parse(&text, graph.vertex_count())?;
            first_non_edge(&graph, w.letters()).map(|i| {
                format!(
                    "non-edge {} at position {i}",
                    render_letters(&w.letters()[i..i + 2], w.alphabet_size())
                )
            })
        }
        Predicate::Tournament => {
            let w = Word::parse_inferred(&text)?;
            tournament_violation(w.letters()).map(|(a, b)| {
                let n = w.alphabet_size();
                format!(
                    "both {} and {} occur",
                    render_letters(&[a, b], n),
                    render_letters(&[b, a], n)
                )
            })
        }
        Predicate::Reduced => {
            let w = Word::parse(&text, 4)?;
            free_group_cancellation(w.letters()).map(|i| {
                format!(
                    "cancelling pair {} at position {i}",
                    render_letters(&w.letters()[i..i + 2], 4)
                )
            })
        }
    };
    Ok(match failure {
        None => Output::ok("ok\n".to_string()),
        Some(reason) => Output {
            stdout: format!("{reason}\n"),
            stderr: String::new(),
            code: 1,
        },
    })
}

fn classify_cmd(args: ClassifyArgs) -> Result<Output, CliError> {
    let class = classify(&load_graph(&args.graph)?);
    Ok(Output::ok(if args.human {
        class.to_string()
    } else {
        render_classification(&class)
    }))
}

fn search(args: SearchArgs) -> Result<Output, CliError> {
    let pool = parallel::pool(args.threads)?;
    let text = match args.kind {
        SearchKind::Walk => {
            let graph = load_graph(&require(args.graph, "graph", "walk search")?)?;
            let search = walk_search(&graph, args.cap.unwrap_or(100))?;
            render_search(&parallel::run(&search, &pool))
        }
        SearchKind::Tournament => {
            let n = require(args.alphabet, "alphabet", "tournament search")?;
            let search = tournament_search(n, args.cap.unwrap_or(200))?;
            render_search(&parallel::run(&search, &pool))
        }
        SearchKind::GammaLower => {
            let graph = load_graph(&require(args.graph, "graph", "gamma-lower")?)?;
            let k = require(args.colours, "colours", "gamma-lower")?;
            let report =
                parallel::verify_gamma_lower_bound(&graph, k, args.cap.unwrap_or(100), &pool)?;
            render_gamma_report(&report)
        }
    };
    Ok(Output::ok(text))
}

fn render_preservation(result: &Preservation) -> String {
    match result {
        Preservation::Holds { words_checked } => format!("pass words_checked={words_checked}\n"),
        Preservation::Counterexample {
            word,
            image,
            square,
        } => format!(
            "fail counterexample={word} image={image} {}\n",
            describe_square(image.letters(), image.alphabet_size(), *square)
        ),
    }
}

fn morphism(args: MorphismArgs, stdin: &mut dyn Read) -> Result<Output, CliError> {
    let m = load_morphism(&args.morphism)?;
    let source = m.source_alphabet_size();
    if args.word.is_some() && !matches!(args.action, MorphismAction::Apply) {
        return Err(CliError::Usage(
            "a word argument only applies to apply".into(),
        ));
    }
    let text = match args.action {
        MorphismAction::Apply => {
            let w = Word::parse(&word_text(args.word, stdin)?, source)?;
            format!("{}\n", m.apply(&w)?)
        }
        MorphismAction::Crochemore => {
            if m.crochemore_uniform_test()? {
                "pass\n".to_string()
            } else {
                render_preservation(&m.preservation_test(3, &[]))
            }
        }
        MorphismAction::Preserve => {
            let forbidden = args
                .forbid
                .iter()
                .map(|f| Word::parse(f, source))
                .collect::<Result<Vec<_>, _>>()?;
            render_preservation(&m.preservation_test(args.max_len, &forbidden))
        }
        MorphismAction::Align => {
            let letters = match &args.letters {
                Some(l) => Word::parse(l, source)?.into_letters(),
                None => (0..source as Letter).collect(),
            };
            match m.alignment_test(&letters)? {
                Alignment::Aligned => "pass\n".to_string(),
                Alignment::Misaligned {
                    letter,
                    product,
                    offset,
                } => {
                    format!("fail letter={letter} product={product} offset={offset}\n")
                }
            }
        }
    };
    Ok(Output::ok(text))
}
