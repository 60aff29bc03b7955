//! Text formats: graph edge lists, morphism files, and the key=value
//! renderings of classifications and search results.

use std::fmt::Write as _;

use sqwalk::graph::{claw_graph, cycle_graph, path_graph};
use sqwalk::morphism::builtin;
use sqwalk::search::GammaReport;
use sqwalk::walks::PatternWitness;
use sqwalk::word::write_letters;
use sqwalk::{Classification, ComponentShape, Graph, Letter, Morphism, SearchResult, Word};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("missing header line \"n=<vertex_count>\"")]
    MissingHeader,
    #[error("line {line}: malformed header {text:?}, expected \"n=<vertex_count>\"")]
    MalformedHeader { line: usize, text: String },
    #[error("line {line}: malformed edge {text:?}, expected \"i j\"")]
    MalformedEdge { line: usize, text: String },
    #[error("line {line}: vertex {vertex} out of range for n={vertex_count}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: malformed morphism line {text:?}, expected \"i -> image\"")]
    MalformedMorphismLine { line: usize, text: String },
    #[error("line {line}: letter {letter} is given twice")]
    DuplicateImage { line: usize, letter: Letter },
    #[error("no image given for letter {0}")]
    MissingImage(Letter),
    #[error("morphism: {0}")]
    Morphism(#[from] sqwalk::MorphismError),
    #[error("word: {0}")]
    Word(#[from] sqwalk::WordError),
}

fn is_skippable(line: &str) -> bool {
    let line = line.trim();
    line.is_empty() || line.starts_with('#')
}

/// Parses the edge-list format: a header `n=<vertex_count>` followed by one
/// `i j` edge per line. Blank lines and `#` comments are ignored, duplicate
/// edges are merged.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !is_skippable(l));
    let (line, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let vertex_count = header
        .trim()
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse::<usize>().ok())
        .ok_or_else(|| FormatError::MalformedHeader {
            line,
            text: header.to_string(),
        })?;
    let mut graph = Graph::edgeless(vertex_count);
    for (line, text) in lines {
        let malformed = || FormatError::MalformedEdge {
            line,
            text: text.to_string(),
        };
        let fields: Vec<&str> = text.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(malformed());
        };
        let a: usize = a.parse().map_err(|_| malformed())?;
        let b: usize = b.parse().map_err(|_| malformed())?;
        if let Some(vertex) = [a, b].into_iter().find(|&v| v >= vertex_count) {
            return Err(FormatError::VertexOutOfRange {
                line,
                vertex,
                vertex_count,
            });
        }
        if a == b {
            return Err(FormatError::SelfLoop { line, vertex: a });
        }
        graph.add_edge(a, b).expect("endpoints were validated");
    }
    Ok(graph)
}

pub fn render_graph(graph: &Graph) -> String {
    let mut out = format!("n={}\n", graph.vertex_count());
    for (a, b) in graph.edges() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

pub const BUILTIN_GRAPHS: &[&str] = &["p3", "p4", "p5", "c3", "c4", "c5", "c6", "claw"];

pub fn builtin_graph(name: &str) -> Option<Graph> {
    let graph = match name {
        "p3" => path_graph(3),
        "p4" => path_graph(4),
        "p5" => path_graph(5),
        "c3" => cycle_graph(3),
        "c4" => cycle_graph(4),
        "c5" => cycle_graph(5),
        "c6" => cycle_graph(6),
        "claw" => Ok(claw_graph()),
        _ => return None,
    };
    Some(graph.expect("built-in graphs are valid"))
}

pub const BUILTIN_MORPHISMS: &[&str] = &[
    "tau",
    "alpha-p5",
    "beta-p5",
    "phi-p5",
    "alpha-c4",
    "alpha-t5",
    "alpha-c4-repaired",
    "beta-p5-printed",
    "phi-p5-printed",
];

/// Built-in morphisms by name. The colourings are returned as
/// letter-to-letter morphisms.
pub fn builtin_morphism(name: &str) -> Option<Morphism> {
    Some(match name {
        "tau" => builtin::tau(),
        "alpha-p5" => builtin::alpha_p5(),
        "beta-p5" => builtin::beta_p5(),
        "phi-p5" => builtin::phi_p5().as_morphism(),
        "alpha-c4" => builtin::alpha_c4(),
        "alpha-t5" => builtin::alpha_t5(),
        "alpha-c4-repaired" => builtin::alpha_c4_repaired(),
        "beta-p5-printed" => builtin::beta_p5_as_printed(),
        "phi-p5-printed" => builtin::phi_p5_as_printed().as_morphism(),
        _ => return None,
    })
}

/// Parses the morphism format: one `i -> image` line per source letter, in
/// any order. The target alphabet is the smallest one containing every
/// image letter.
pub fn parse_morphism(text: &str) -> Result<Morphism, FormatError> {
    let mut images: Vec<Option<Vec<Letter>>> = Vec::new();
    for (index, text) in text.lines().enumerate() {
        let line = index + 1;
        if is_skippable(text) {
            continue;
        }
        let malformed = || FormatError::MalformedMorphismLine {
            line,
            text: text.to_string(),
        };
        let (letter, image) = text.split_once("->").ok_or_else(malformed)?;
        let letter: Letter = letter.trim().parse().map_err(|_| malformed())?;
        let image = Word::parse_inferred(image)?;
        let slot = letter as usize;
        if images.len() <= slot {
            images.resize(slot + 1, None);
        }
        if images[slot].is_some() {
            return Err(FormatError::DuplicateImage { line, letter });
        }
        images[slot] = Some(image.into_letters());
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(i, img)| img.ok_or(FormatError::MissingImage(i as Letter)))
        .collect::<Result<Vec<_>, _>>()?;
    let target = images.iter().flatten().max().map_or(1, |&m| m as usize + 1);
    Ok(Morphism::new(target, images)?)
}

pub fn render_morphism(morphism: &Morphism) -> String {
    morphism
        .images()
        .iter()
        .enumerate()
        .map(|(i, image)| format!("{i} -> {image}\n"))
        .collect()
}

fn render_vertices(vertices: &[usize]) -> String {
    vertices
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn render_summary(witness: Option<&PatternWitness>) -> String {
    match witness {
        Some(w) => format!(
            "exists=true gamma={} witness={}",
            w.pattern.gamma(),
            w.pattern
        ),
        None => "exists=false gamma=none witness=none".to_string(),
    }
}

/// The key=value rendering: a summary line, the witness vertices when there
/// is a witness, then one line per component.
pub fn render_classification(class: &Classification) -> String {
    let mut out = render_summary(class.witness.as_ref());
    out.push('\n');
    if let Some(w) = &class.witness {
        let _ = writeln!(out, "witness_vertices={}", render_vertices(&w.vertices));
    }
    for (i, c) in class.components.iter().enumerate() {
        let shape = match &c.shape {
            ComponentShape::Path(v) => format!("path({})", v.len()),
            ComponentShape::Cycle(v) => format!("cycle({})", v.len()),
            ComponentShape::Other => "other".to_string(),
        };
        let _ = writeln!(
            out,
            "component={i} vertices={} shape={shape} {}",
            render_vertices(&c.vertices),
            render_summary(c.witness.as_ref())
        );
    }
    out
}

pub fn render_search(result: &SearchResult) -> String {
    let mut out = format!("outcome={}\n", result.outcome);
    for w in &result.witnesses {
        let _ = writeln!(out, "witness={w}");
    }
    let _ = writeln!(out, "nodes={}", result.nodes);
    out
}

pub fn render_gamma_report(report: &GammaReport) -> String {
    let mut out = String::new();
    let mut nodes = 0;
    for (phi, result) in &report.colourings {
        let mut colours = String::new();
        let _ = write_letters(&mut colours, phi.colours(), phi.target_alphabet_size());
        let _ = writeln!(out, "colouring={colours} outcome={}", result.outcome);
        nodes += result.nodes;
    }
    let _ = writeln!(out, "verdict={}", report.confirmed);
    let _ = writeln!(out, "nodes={nodes}");
    out
}

/// Renders `letters` over `A_alphabet_size` in the word text format.
pub fn render_letters(letters: &[Letter], alphabet_size: usize) -> String {
    let mut out = String::new();
    let _ = write_letters(&mut out, letters, alphabet_size);
    out
}
