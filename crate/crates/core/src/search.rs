//! Bounded exhaustive backtracking searches for long square-free words under
//! extra constraints (walks in a graph, tournament words, coloured walks).
//!
//! A search either exhausts the space and reports the exact maximum length
//! with every word attaining it, or reaches the cap, which is evidence of an
//! unbounded family and never reported as a maximum.
//!
//! The space splits into independent branches, one per first letter.
//! [`Search::run_branch`] and [`Search::merge`] let a caller run those on
//! several threads; merging in branch order gives the same result as
//! [`Search::run`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::graph::Graph;
use crate::walks::Colouring;
use crate::word::{self, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("the search cap must be at least 1")]
    ZeroCap,
    #[error("the alphabet must have at least one letter")]
    EmptyAlphabet,
    #[error("colouring is defined on {colouring} vertices, graph has {vertices}")]
    ColouringMismatch { colouring: usize, vertices: usize },
    #[error("the number of colours must be at least 1")]
    NoColours,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// Exhaustive: no valid word is longer than this.
    MaxLength(usize),
    /// A valid word of exactly this length (the cap) was found.
    BoundExceeded(usize),
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::MaxLength(l) => write!(f, "max_length {l}"),
            Outcome::BoundExceeded(c) => write!(f, "bound_exceeded {c}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: Outcome,
    /// Every word of maximal length, in lexicographic order. Empty when the
    /// bound was exceeded.
    pub witnesses: Vec<Word>,
    /// Number of valid words visited.
    pub nodes: u64,
}

impl SearchResult {
    pub fn is_bounded(&self) -> bool {
        matches!(self.outcome, Outcome::MaxLength(_))
    }

    pub fn max_length(&self) -> Option<usize> {
        match self.outcome {
            Outcome::MaxLength(l) => Some(l),
            Outcome::BoundExceeded(_) => None,
        }
    }
}

/// Extra constraint on top of square-freeness, maintained incrementally.
pub trait Constraint: Clone {
    fn alphabet_size(&self) -> usize;

    /// Letters that may follow `word` (or start it, when empty), in
    /// increasing order.
    fn candidates(&self, word: &[Letter]) -> Vec<Letter>;

    /// Called with the candidate already appended. Returns whether the
    /// extended word is valid; on `true` the constraint's state must
    /// include the new letter.
    fn accept(&mut self, word: &[Letter]) -> bool;

    /// Undoes the matching successful [`Constraint::accept`]. `word` still
    /// ends with the letter being removed.
    fn retract(&mut self, word: &[Letter]);
}

/// Square-free walks in a graph.
#[derive(Debug, Clone)]
pub struct WalkConstraint<'g> {
    graph: &'g Graph,
}

impl Constraint for WalkConstraint<'_> {
    fn alphabet_size(&self) -> usize {
        self.graph.vertex_count()
    }

    fn candidates(&self, word: &[Letter]) -> Vec<Letter> {
        match word.last() {
            None => (0..self.graph.vertex_count() as Letter).collect(),
            Some(&last) => self
                .graph
                .neighbours(last as usize)
                .iter()
                .map(|&v| v as Letter)
                .collect(),
        }
    }

    fn accept(&mut self, word: &[Letter]) -> bool {
        !word::has_suffix_square(word)
    }

    fn retract(&mut self, _word: &[Letter]) {}
}

/// Square-free tournament words: for letters `i != j`, `ij` and `ji` are
/// never both factors. Tracks how often each ordered adjacency occurs.
#[derive(Debug, Clone)]
pub struct TournamentConstraint {
    alphabet_size: usize,
    pair_counts: Vec<u32>,
}

impl TournamentConstraint {
    fn slot(&self, a: Letter, b: Letter) -> usize {
        a as usize * self.alphabet_size + b as usize
    }
}

impl Constraint for TournamentConstraint {
    fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    fn candidates(&self, word: &[Letter]) -> Vec<Letter> {
        let last = word.last().copied();
        (0..self.alphabet_size as Letter)
            .filter(|&l| Some(l) != last)
            .collect()
    }

    fn accept(&mut self, word: &[Letter]) -> bool {
        let n = word.len();
        if n >= 2 {
            let (prev, next) = (word[n - 2], word[n - 1]);
            if self.pair_counts[self.slot(next, prev)] > 0 || word::has_suffix_square(word) {
                return false;
            }
            let slot = self.slot(prev, next);
            self.pair_counts[slot] += 1;
        }
        true
    }

    fn retract(&mut self, word: &[Letter]) {
        let n = word.len();
        if n >= 2 {
            let slot = self.slot(word[n - 2], word[n - 1]);
            self.pair_counts[slot] -= 1;
        }
    }
}

/// Walks in a graph whose image under a colouring is square-free.
#[derive(Debug, Clone)]
pub struct ColouredWalkConstraint<'g> {
    graph: &'g Graph,
    colouring: &'g Colouring,
    coloured: Vec<Letter>,
}

impl Constraint for ColouredWalkConstraint<'_> {
    fn alphabet_size(&self) -> usize {
        self.graph.vertex_count()
    }

    fn candidates(&self, word: &[Letter]) -> Vec<Letter> {
        WalkConstraint { graph: self.graph }.candidates(word)
    }

    fn accept(&mut self, word: &[Letter]) -> bool {
        let last = *word.last().expect("accept is called on a nonempty word");
        self.coloured.push(self.colouring.colour(last));
        if word::has_suffix_square(&self.coloured) {
            self.coloured.pop();
            return false;
        }
        true
    }

    fn retract(&mut self, _word: &[Letter]) {
        self.coloured.pop();
    }
}

/// Result of exploring the words starting with one letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchResult {
    best: usize,
    exceeded: bool,
    witnesses: Vec<Vec<Letter>>,
    nodes: u64,
}

/// A configured bounded search.
#[derive(Debug, Clone)]
pub struct Search<C> {
    constraint: C,
    cap: usize,
}

impl<C: Constraint> Search<C> {
    pub fn new(constraint: C, cap: usize) -> Result<Self, SearchError> {
        if cap == 0 {
            return Err(SearchError::ZeroCap);
        }
        Ok(Search { constraint, cap })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// The first letters, one independent branch each, in order.
    pub fn branches(&self) -> Vec<Letter> {
        self.constraint.candidates(&[])
    }

    pub fn run_branch(&self, start: Letter) -> BranchResult {
        let mut dfs = Dfs {
            constraint: self.constraint.clone(),
            cap: self.cap,
            word: Vec::with_capacity(self.cap),
            result: BranchResult {
                best: 0,
                exceeded: false,
                witnesses: Vec::new(),
                nodes: 0,
            },
        };
        dfs.try_letter(start);
        dfs.result
    }

    /// Combines branch results given in [`Search::branches`] order. Branches
    /// after the first one that reached the cap are ignored, matching the
    /// early stop of [`Search::run`].
    pub fn merge<I>(&self, branches: I) -> SearchResult
    where
        I: IntoIterator<Item = BranchResult>,
    {
        let alphabet_size = self.constraint.alphabet_size().max(1);
        let mut nodes = 0;
        let mut best = 0;
        let mut witnesses: Vec<Vec<Letter>> = vec![Vec::new()];
        for branch in branches {
            nodes += branch.nodes;
            if branch.exceeded {
                return SearchResult {
                    outcome: Outcome::BoundExceeded(self.cap),
                    witnesses: Vec::new(),
                    nodes,
                };
            }
            if branch.best > best {
                best = branch.best;
                witnesses = branch.witnesses;
            } else if branch.best == best {
                witnesses.extend(branch.witnesses);
            }
        }
        SearchResult {
            outcome: Outcome::MaxLength(best),
            witnesses: witnesses
                .into_iter()
                .map(|w| Word::from_trusted(w, alphabet_size))
                .collect(),
            nodes,
        }
    }

    /// Sequential search over all branches.
    pub fn run(&self) -> SearchResult {
        let mut done = Vec::new();
        for start in self.branches() {
            let branch = self.run_branch(start);
            let exceeded = branch.exceeded;
            done.push(branch);
            if exceeded {
                break;
            }
        }
        self.merge(done)
    }
}

struct Dfs<C> {
    constraint: C,
    cap: usize,
    word: Vec<Letter>,
    result: BranchResult,
}

impl<C: Constraint> Dfs<C> {
    /// Returns true once the cap has been reached, to unwind the search.
    fn try_letter(&mut self, letter: Letter) -> bool {
        self.word.push(letter);
        let mut stop = false;
        if self.constraint.accept(&self.word) {
            self.result.nodes += 1;
            let len = self.word.len();
            if len >= self.cap {
                self.result.exceeded = true;
                stop = true;
            } else {
                if len > self.result.best {
                    self.result.best = len;
                    self.result.witnesses.clear();
                }
                if len == self.result.best {
                    self.result.witnesses.push(self.word.clone());
                }
                for next in self.constraint.candidates(&self.word) {
                    if self.try_letter(next) {
                        stop = true;
                        break;
                    }
                }
            }
            self.constraint.retract(&self.word);
        }
        self.word.pop();
        stop
    }
}

pub fn walk_search(graph: &Graph, cap: usize) -> Result<Search<WalkConstraint<'_>>, SearchError> {
    Search::new(WalkConstraint { graph }, cap)
}

pub fn tournament_search(
    alphabet_size: usize,
    cap: usize,
) -> Result<Search<TournamentConstraint>, SearchError> {
    if alphabet_size == 0 {
        return Err(SearchError::EmptyAlphabet);
    }
    Search::new(
        TournamentConstraint {
            alphabet_size,
            pair_counts: vec![0; alphabet_size * alphabet_size],
        },
        cap,
    )
}

pub fn coloured_walk_search<'g>(
    graph: &'g Graph,
    colouring: &'g Colouring,
    cap: usize,
) -> Result<Search<ColouredWalkConstraint<'g>>, SearchError> {
    if colouring.source_alphabet_size() != graph.vertex_count() {
        return Err(SearchError::ColouringMismatch {
            colouring: colouring.source_alphabet_size(),
            vertices: graph.vertex_count(),
        });
    }
    Search::new(
        ColouredWalkConstraint {
            graph,
            colouring,
            coloured: Vec::new(),
        },
        cap,
    )
}

/// Longest square-free walk in `graph`, up to `cap` letters.
pub fn longest_square_free_walk(graph: &Graph, cap: usize) -> Result<SearchResult, SearchError> {
    Ok(walk_search(graph, cap)?.run())
}

/// Longest square-free tournament word over `A_alphabet_size`, up to `cap`.
pub fn longest_square_free_tournament(
    alphabet_size: usize,
    cap: usize,
) -> Result<SearchResult, SearchError> {
    Ok(tournament_search(alphabet_size, cap)?.run())
}

/// Longest walk in `graph` whose `colouring` image is square-free, up to
/// `cap`. The witnesses are the walks, not their colour words.
pub fn max_coloured_walk(
    graph: &Graph,
    colouring: &Colouring,
    cap: usize,
) -> Result<SearchResult, SearchError> {
    Ok(coloured_walk_search(graph, colouring, cap)?.run())
}

/// All maps `A_n -> A_k` up to renaming the colours: restricted growth
/// strings, where each vertex gets a colour at most one above the largest
/// colour used so far.
pub fn colourings_up_to_permutation(vertex_count: usize, colours: usize) -> Vec<Colouring> {
    fn grow(current: &mut Vec<Letter>, n: usize, k: usize, used: usize, out: &mut Vec<Colouring>) {
        if current.len() == n {
            out.push(Colouring::new(current.clone(), k).expect("colours are below k"));
            return;
        }
        let limit = (used + 1).min(k);
        for c in 0..limit {
            current.push(c as Letter);
            grow(current, n, k, used.max(c + 1), out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if colours > 0 {
        grow(
            &mut Vec::with_capacity(vertex_count),
            vertex_count,
            colours,
            0,
            &mut out,
        );
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaReport {
    /// One entry per colouring class, in enumeration order.
    pub colourings: Vec<(Colouring, SearchResult)>,
    /// True iff every `k`-colouring has only bounded square-free coloured
    /// walks, i.e. `γ(G) > k` at this cap.
    pub confirmed: bool,
}

/// Checks `γ(graph) > colours` by searching every colouring class.
pub fn verify_gamma_lower_bound(
    graph: &Graph,
    colours: usize,
    cap: usize,
) -> Result<GammaReport, SearchError> {
    if colours == 0 {
        return Err(SearchError::NoColours);
    }
    if cap == 0 {
        return Err(SearchError::ZeroCap);
    }
    let colourings = colourings_up_to_permutation(graph.vertex_count(), colours)
        .into_iter()
        .map(|phi| {
            let result = max_coloured_walk(graph, &phi, cap)?;
            Ok((phi, result))
        })
        .collect::<Result<Vec<_>, SearchError>>()?;
    let confirmed = colourings.iter().all(|(_, r)| r.is_bounded());
    Ok(GammaReport {
        colourings,
        confirmed,
    })
}
