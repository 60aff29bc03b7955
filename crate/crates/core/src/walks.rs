//! Walks on graphs as words: G-words, colourings, the classifier for infinite
//! square-free walks and the colour number, and generators of infinite
//! square-free walks for every positive case.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::graph::{ComponentShape, Graph};
use crate::morphism::{builtin, Morphism, WordStream};
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("word is over A_{word} but the graph has {vertices} vertices")]
    AlphabetMismatch { word: usize, vertices: usize },
    #[error("colouring maps vertex {vertex} to colour {colour}, outside A_{colours}")]
    ColourOutOfRange {
        vertex: usize,
        colour: Letter,
        colours: usize,
    },
    #[error("colouring needs a positive number of colours")]
    NoColours,
    #[error("hub {hub} is not a vertex of a graph on {vertices} vertices")]
    HubOutOfRange { hub: usize, vertices: usize },
    #[error("hub {hub} has degree {degree}, at least 3 is needed")]
    HubDegree { hub: usize, degree: usize },
    #[error("cycle walks need at least {min} vertices, got {n}")]
    CycleTooShort { n: usize, min: usize },
}

/// A letter-to-letter map `A_n -> A_k`, i.e. a `k`-colouring of a graph on
/// `A_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Colouring {
    colours: Vec<Letter>,
    colour_count: usize,
}

impl Colouring {
    /// `colours[v]` is the colour of vertex `v`.
    pub fn new(colours: Vec<Letter>, colour_count: usize) -> Result<Self, WalkError> {
        if colour_count == 0 {
            return Err(WalkError::NoColours);
        }
        if let Some((vertex, &colour)) = colours
            .iter()
            .enumerate()
            .find(|(_, &c)| c as usize >= colour_count)
        {
            return Err(WalkError::ColourOutOfRange {
                vertex,
                colour,
                colours: colour_count,
            });
        }
        Ok(Colouring {
            colours,
            colour_count,
        })
    }

    pub fn identity(n: usize) -> Self {
        Colouring {
            colours: (0..n as Letter).collect(),
            colour_count: n.max(1),
        }
    }

    pub fn source_alphabet_size(&self) -> usize {
        self.colours.len()
    }

    pub fn target_alphabet_size(&self) -> usize {
        self.colour_count
    }

    pub fn colours(&self) -> &[Letter] {
        &self.colours
    }

    pub fn colour(&self, vertex: Letter) -> Letter {
        self.colours[vertex as usize]
    }

    pub fn apply(&self, word: &Word) -> Result<Word, WalkError> {
        if word.alphabet_size() > self.colours.len() {
            return Err(WalkError::AlphabetMismatch {
                word: word.alphabet_size(),
                vertices: self.colours.len(),
            });
        }
        let letters = word.letters().iter().map(|&l| self.colour(l)).collect();
        Ok(Word::from_trusted(letters, self.colour_count))
    }

    /// The colouring as a (letter-to-letter) morphism.
    pub fn as_morphism(&self) -> Morphism {
        Morphism::new(
            self.colour_count,
            self.colours.iter().map(|&c| vec![c]).collect(),
        )
        .expect("a colouring is a valid morphism")
    }
}

pub fn apply_colouring(phi: &Colouring, word: &Word) -> Result<Word, WalkError> {
    phi.apply(word)
}

/// Position `i` of the first pair `w[i] w[i+1]` that is not an edge.
pub fn first_non_edge(graph: &Graph, letters: &[Letter]) -> Option<usize> {
    letters
        .windows(2)
        .position(|p| !graph.has_edge(p[0] as usize, p[1] as usize))
}

/// Whether every adjacent pair of `word` is an edge of `graph`.
pub fn is_g_word(graph: &Graph, word: &Word) -> Result<bool, WalkError> {
    if word.alphabet_size() != graph.vertex_count() {
        return Err(WalkError::AlphabetMismatch {
            word: word.alphabet_size(),
            vertices: graph.vertex_count(),
        });
    }
    Ok(first_non_edge(graph, word.letters()).is_none())
}

/// The connected patterns whose presence decides the classification.
/// `C_5` is not listed: it contains `P_5`, which already decides it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pattern {
    C3,
    C4,
    P5,
    K13,
}

impl Pattern {
    /// Colour number of any connected graph whose best pattern is `self`.
    pub fn gamma(self) -> u8 {
        match self {
            Pattern::C3 | Pattern::P5 => 3,
            Pattern::C4 | Pattern::K13 => 4,
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pattern::C3 => "C3",
            Pattern::C4 => "C4",
            Pattern::P5 => "P5",
            Pattern::K13 => "K13",
        })
    }
}

/// A pattern found as a subgraph, with its vertices in the graph's labels.
/// For `C3` and `C4` the vertices are in cycle order, for `P5` in path order
/// and for `K13` the hub comes first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternWitness {
    pub pattern: Pattern,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentClassification {
    pub vertices: Vec<usize>,
    pub shape: ComponentShape,
    pub witness: Option<PatternWitness>,
}

impl ComponentClassification {
    pub fn gamma(&self) -> Option<u8> {
        self.witness.as_ref().map(|w| w.pattern.gamma())
    }
}

/// Whether a graph has an infinite square-free walk and, if so, its colour
/// number `γ ∈ {3, 4}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub components: Vec<ComponentClassification>,
    /// Witness from the first component attaining the minimal `γ`.
    pub witness: Option<PatternWitness>,
}

impl Classification {
    pub fn exists(&self) -> bool {
        self.witness.is_some()
    }

    pub fn gamma(&self) -> Option<u8> {
        self.witness.as_ref().map(|w| w.pattern.gamma())
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            Some(w) => writeln!(
                f,
                "infinite square-free walk: yes, colour number {} (witness {} on {:?})",
                w.pattern.gamma(),
                w.pattern,
                w.vertices
            )?,
            None => writeln!(f, "infinite square-free walk: no")?,
        }
        for (i, c) in self.components.iter().enumerate() {
            let shape = match &c.shape {
                ComponentShape::Path(v) => alloc::format!("path P{}", v.len()),
                ComponentShape::Cycle(v) => alloc::format!("cycle C{}", v.len()),
                ComponentShape::Other => alloc::string::String::from("other"),
            };
            write!(f, "  component {i}: {shape}, vertices {:?}", c.vertices)?;
            match &c.witness {
                Some(w) => writeln!(f, ", gamma {} via {}", w.pattern.gamma(), w.pattern)?,
                None => writeln!(f, ", no infinite walk")?,
            }
        }
        Ok(())
    }
}

fn classify_connected(graph: &Graph) -> Option<(Pattern, Vec<usize>)> {
    if let Some(t) = graph.find_triangle() {
        return Some((Pattern::C3, t.to_vec()));
    }
    if let Some(p) = graph.find_p5() {
        return Some((Pattern::P5, p.to_vec()));
    }
    if let Some(c) = graph.find_c4() {
        return Some((Pattern::C4, c.to_vec()));
    }
    graph.find_claw().map(|c| (Pattern::K13, c.to_vec()))
}

/// Decides whether `graph` has an infinite square-free walk and computes its
/// colour number.
///
/// A connected graph has one iff it contains `C_3`, `C_4`, `P_5` or
/// `K_{1,3}` (`C_5` contains `P_5`); `γ = 3` with a triangle or a `P_5`, and
/// `γ = 4` otherwise. Walks stay inside one component, so a graph's answer
/// is the best answer over its components.
pub fn classify(graph: &Graph) -> Classification {
    let components: Vec<ComponentClassification> = graph
        .components()
        .into_iter()
        .map(|(vertices, shape)| {
            let sub = graph.induced(&vertices);
            let witness = classify_connected(&sub).map(|(pattern, local)| PatternWitness {
                pattern,
                vertices: local.into_iter().map(|v| vertices[v]).collect(),
            });
            ComponentClassification {
                vertices,
                shape,
                witness,
            }
        })
        .collect();
    let witness = components
        .iter()
        .filter_map(|c| c.witness.as_ref())
        .min_by_key(|w| w.pattern.gamma())
        .cloned();
    Classification {
        components,
        witness,
    }
}

/// The Thue word, the fixed point of `0 -> 012, 1 -> 02, 2 -> 1` from 0.
pub fn thue_stream() -> WordStream {
    builtin::tau()
        .fixed_point_stream(0)
        .expect("tau is prolongable on 0")
}

/// Square-free walk on `P_5` whose colouring by [`builtin::phi_p5`] is the
/// ternary square-free word `alpha_p5(thue)`.
pub fn p5_walk_stream() -> WordStream {
    builtin::beta_p5()
        .image_stream(thue_stream())
        .expect("beta_p5 is defined on A_3")
}

/// The image of the Thue word under `alpha_p5`.
pub fn alpha_p5_stream() -> WordStream {
    builtin::alpha_p5()
        .image_stream(thue_stream())
        .expect("alpha_p5 is defined on A_3")
}

/// Square-free walk through a vertex of degree at least 3: the Thue letters
/// `0, 1, 2` become the three smallest neighbours `a < b < c` of `hub`, each
/// followed by `hub`.
pub fn claw_walk_stream(graph: &Graph, hub: usize) -> Result<WordStream, WalkError> {
    let vertices = graph.vertex_count();
    if hub >= vertices {
        return Err(WalkError::HubOutOfRange { hub, vertices });
    }
    let nbrs = graph.neighbours(hub);
    if nbrs.len() < 3 {
        return Err(WalkError::HubDegree {
            hub,
            degree: nbrs.len(),
        });
    }
    let leaves = [nbrs[0] as Letter, nbrs[1] as Letter, nbrs[2] as Letter];
    let hub = hub as Letter;
    let letters = thue_stream()
        .into_letters()
        .flat_map(move |l| [leaves[l as usize], hub]);
    Ok(WordStream::new(letters, vertices))
}

/// Inserts `insert` between every adjacent `a b` or `b a`.
struct InsertBetween<I> {
    inner: I,
    pair: (Letter, Letter),
    insert: Letter,
    prev: Option<Letter>,
    pending: Option<Letter>,
}

impl<I: Iterator<Item = Letter>> Iterator for InsertBetween<I> {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        let out = match self.pending.take() {
            Some(l) => l,
            None => {
                let l = self.inner.next()?;
                let (a, b) = self.pair;
                match self.prev {
                    Some(p) if (p == a && l == b) || (p == b && l == a) => {
                        self.pending = Some(l);
                        self.insert
                    }
                    _ => l,
                }
            }
        };
        self.prev = Some(out);
        Some(out)
    }
}

/// Square-free walk on `C_n`, `n >= 3`.
///
/// `C_3` walks are exactly the ternary words without repeated letters, so
/// the Thue word is one. For `n >= 4` the `C_{n-1}` walk gets the letter
/// `n - 1` inserted between every adjacent `0, n-2` pair. Any square in the
/// result would give a nonempty square in the `C_{n-1}` walk once the
/// inserted letters are deleted, since `n - 1` never follows itself.
pub fn cycle_walk_stream(n: usize) -> Result<WordStream, WalkError> {
    if n < 3 {
        return Err(WalkError::CycleTooShort { n, min: 3 });
    }
    let mut stream = thue_stream();
    for size in 4..=n {
        let inner = stream.into_letters();
        let insert = InsertBetween {
            inner,
            pair: (0, (size - 2) as Letter),
            insert: (size - 1) as Letter,
            prev: None,
            pending: None,
        };
        stream = WordStream::new(insert, size);
    }
    Ok(stream)
}

/// Square-free walk on `C_n`, `n >= 5`, running along the path
/// `0 1 2 3 4` inside the cycle.
pub fn cycle_walk_p5_stream(n: usize) -> Result<WordStream, WalkError> {
    if n < 5 {
        return Err(WalkError::CycleTooShort { n, min: 5 });
    }
    Ok(p5_walk_stream().widen(n))
}

/// Square-free walk on `C_4` from the uniform morphism
/// [`builtin::alpha_c4_repaired`] applied to the Thue word (read over `A_4`,
/// letter 3 unused).
pub fn c4_walk_uniform_stream() -> WordStream {
    builtin::alpha_c4_repaired()
        .image_stream(thue_stream().widen(4))
        .expect("alpha_c4 is defined on A_4")
}

/// Square-free word over generators `0, 1` and inverses `2, 3` that is
/// reduced in the free group: a `C_4` walk never puts `0` next to `2` or `1`
/// next to `3`. Uses the insertion walk [`cycle_walk_stream`]`(4)`.
pub fn dean_reduced_stream() -> WordStream {
    cycle_walk_stream(4).expect("4 >= 3")
}

/// Square-free tournament word over `A_5`: `alpha_t5` applied to the Thue
/// word.
pub fn tournament5_stream() -> WordStream {
    builtin::alpha_t5()
        .image_stream(thue_stream())
        .expect("alpha_t5 is defined on A_3")
}
