//! Finite words over `A_n = {0, 1, .., n-1}` and the predicates on them.
//!
//! The square checks come in three flavours that must agree:
//! [`find_square`] (period scan, quadratic), [`brute_force_square_check`]
//! (explicit enumeration of every `(start, half)` pair, cubic) and
//! [`has_suffix_square`] (only the squares ending at the last position, used
//! when a word grows one letter at a time).

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

/// A letter of `A_n`: a non-negative integer below the alphabet size.
pub type Letter = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("letter {letter} is outside the alphabet A_{alphabet_size}")]
    LetterOutOfRange {
        letter: Letter,
        alphabet_size: usize,
    },
    #[error("alphabet size must be positive")]
    EmptyAlphabet,
    #[error("invalid character {found:?} at position {position}")]
    InvalidCharacter { found: char, position: usize },
    #[error("invalid letter {0:?} in comma-separated word")]
    InvalidNumber(String),
    #[error("expected a word over A_{expected}, got one over A_{found}")]
    AlphabetMismatch { expected: usize, found: usize },
}

/// An occurrence of a square `uu` with `|u| = period`, starting at `start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Square {
    pub start: usize,
    pub period: usize,
}

impl Square {
    /// The half `u` of the square inside `letters`.
    pub fn half<'a>(&self, letters: &'a [Letter]) -> &'a [Letter] {
        &letters[self.start..self.start + self.period]
    }

    pub fn end(&self) -> usize {
        self.start + 2 * self.period
    }
}

/// Finds the square of smallest period, leftmost among those, or `None` if
/// the word is square-free.
///
/// For a fixed period `p`, `uu` with `|u| = p` starts at `i` iff
/// `w[j] == w[j + p]` for the `p` consecutive positions `j = i .. i + p`, so a
/// single pass counting runs of matches finds it.
pub fn find_square(letters: &[Letter]) -> Option<Square> {
    find_square_with_period_at_most(letters, letters.len() / 2)
}

/// Like [`find_square`] but only looks at squares whose half has length at
/// most `max_period`. Equivalent to checking that every factor of length
/// `2 * max_period` is square-free.
pub fn find_square_with_period_at_most(letters: &[Letter], max_period: usize) -> Option<Square> {
    let n = letters.len();
    let max_period = max_period.min(n / 2);
    for period in 1..=max_period {
        let mut run = 0usize;
        for j in 0..n - period {
            if letters[j] == letters[j + period] {
                run += 1;
                if run == period {
                    return Some(Square {
                        start: j + 1 - period,
                        period,
                    });
                }
            } else {
                run = 0;
            }
        }
    }
    None
}

pub fn is_square_free(letters: &[Letter]) -> bool {
    find_square(letters).is_none()
}

/// Reference oracle: tries every start and every half length and compares
/// the two halves letter by letter.
pub fn brute_force_square_check(letters: &[Letter]) -> bool {
    let n = letters.len();
    for start in 0..n {
        let mut half = 1;
        while start + 2 * half <= n {
            let left = &letters[start..start + half];
            let right = &letters[start + half..start + 2 * half];
            if left == right {
                return false;
            }
            half += 1;
        }
    }
    true
}

/// True iff some suffix of `letters` is a square.
///
/// If `w` is square-free then every square of `wa` must use the new last
/// letter, and a factor using the last letter is a suffix. So for square-free
/// `w`, `wa` is square-free iff this returns false for `wa`.
pub fn has_suffix_square(letters: &[Letter]) -> bool {
    let n = letters.len();
    (1..=n / 2).any(|half| letters[n - 2 * half..n - half] == letters[n - half..])
}

/// True iff `factor` occurs contiguously in `letters`. The empty factor
/// occurs everywhere.
pub fn contains_factor(letters: &[Letter], factor: &[Letter]) -> bool {
    factor.is_empty() || letters.windows(factor.len()).any(|w| w == factor)
}

/// First ordered pair `(i, j)` such that both `ij` and `ji` are factors,
/// in order of the first adjacency whose reverse was seen earlier.
pub fn tournament_violation(letters: &[Letter]) -> Option<(Letter, Letter)> {
    let mut seen = BTreeSet::new();
    for pair in letters.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if a != b && seen.contains(&(b, a)) {
            return Some((b, a));
        }
        seen.insert((a, b));
    }
    None
}

/// Position of the first adjacency that is a generator next to its inverse,
/// with `2 = 0^-1` and `3 = 1^-1`.
pub fn free_group_cancellation(letters: &[Letter]) -> Option<usize> {
    letters
        .windows(2)
        .position(|p| p[0] != p[1] && p[0] % 2 == p[1] % 2)
}

/// A finite word over `A_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    alphabet_size: usize,
}

impl Word {
    pub fn new(letters: Vec<Letter>, alphabet_size: usize) -> Result<Self, WordError> {
        if alphabet_size == 0 {
            return Err(WordError::EmptyAlphabet);
        }
        if let Some(&letter) = letters.iter().find(|&&l| l as usize >= alphabet_size) {
            return Err(WordError::LetterOutOfRange {
                letter,
                alphabet_size,
            });
        }
        Ok(Word {
            letters,
            alphabet_size,
        })
    }

    pub fn empty(alphabet_size: usize) -> Result<Self, WordError> {
        Word::new(Vec::new(), alphabet_size)
    }

    /// Builds a word whose letters are already known to be in range.
    pub(crate) fn from_trusted(letters: Vec<Letter>, alphabet_size: usize) -> Self {
        debug_assert!(letters.iter().all(|&l| (l as usize) < alphabet_size));
        Word {
            letters,
            alphabet_size,
        }
    }

    /// Parses the text format: a string of decimal digits when
    /// `alphabet_size <= 10`, comma-separated decimal integers otherwise.
    /// A string containing a comma is always read as comma-separated.
    pub fn parse(text: &str, alphabet_size: usize) -> Result<Self, WordError> {
        if alphabet_size == 0 {
            return Err(WordError::EmptyAlphabet);
        }
        let text = text.trim();
        let letters = if alphabet_size <= 10 && !text.contains(',') {
            parse_digits(text)?
        } else {
            parse_comma_separated(text)?
        };
        Word::new(letters, alphabet_size)
    }

    /// Parses a word without a known alphabet: comma-separated if the text
    /// contains a comma, digits otherwise. The alphabet is the smallest
    /// `A_n` containing every letter (`A_1` for the empty word).
    pub fn parse_inferred(text: &str) -> Result<Self, WordError> {
        let text = text.trim();
        let letters = if text.contains(',') {
            parse_comma_separated(text)?
        } else {
            parse_digits(text)?
        };
        let alphabet_size = letters.iter().max().map_or(1, |&m| m as usize + 1);
        Word::new(letters, alphabet_size)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The same letters viewed over a larger alphabet.
    pub fn widen(&self, alphabet_size: usize) -> Result<Self, WordError> {
        if alphabet_size < self.alphabet_size {
            return Word::new(self.letters.clone(), alphabet_size);
        }
        Ok(Word::from_trusted(self.letters.clone(), alphabet_size))
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word::from_trusted(
            self.letters[..len.min(self.len())].to_vec(),
            self.alphabet_size,
        )
    }

    /// `self` followed by `letter`.
    pub fn appended(&self, letter: Letter) -> Result<Word, WordError> {
        let mut letters = self.letters.clone();
        letters.push(letter);
        Word::new(letters, self.alphabet_size)
    }

    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        if self.alphabet_size != other.alphabet_size {
            return Err(WordError::AlphabetMismatch {
                expected: self.alphabet_size,
                found: other.alphabet_size,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word::from_trusted(letters, self.alphabet_size))
    }

    pub fn is_square_free(&self) -> bool {
        is_square_free(&self.letters)
    }

    pub fn find_square(&self) -> Option<Square> {
        find_square(&self.letters)
    }

    pub fn brute_force_square_check(&self) -> bool {
        brute_force_square_check(&self.letters)
    }

    /// Assuming `self` is square-free, whether `self·letter` is square-free.
    pub fn extends_square_free(&self, letter: Letter) -> bool {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.extend_from_slice(&self.letters);
        letters.push(letter);
        !has_suffix_square(&letters)
    }

    pub fn has_factor(&self, factor: &Word) -> bool {
        contains_factor(&self.letters, &factor.letters)
    }

    pub fn is_tournament_word(&self) -> bool {
        tournament_violation(&self.letters).is_none()
    }

    /// Whether the word is reduced in the free group on generators `0, 1`
    /// with inverses `2, 3`. Only defined for words over `A_4`.
    pub fn is_reduced_free_group_word(&self) -> Result<bool, WordError> {
        if self.alphabet_size != 4 {
            return Err(WordError::AlphabetMismatch {
                expected: 4,
                found: self.alphabet_size,
            });
        }
        Ok(free_group_cancellation(&self.letters).is_none())
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.letters
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters, self.alphabet_size)
    }
}

/// Writes letters in the word text format for the given alphabet size.
pub fn write_letters<W: fmt::Write>(
    out: &mut W,
    letters: &[Letter],
    alphabet_size: usize,
) -> fmt::Result {
    if alphabet_size <= 10 {
        for &l in letters {
            out.write_char(char::from_digit(l, 10).ok_or(fmt::Error)?)?;
        }
    } else {
        for (i, l) in letters.iter().enumerate() {
            if i > 0 {
                out.write_char(',')?;
            }
            write!(out, "{l}")?;
        }
    }
    Ok(())
}

fn parse_digits(text: &str) -> Result<Vec<Letter>, WordError> {
    text.chars()
        .enumerate()
        .map(|(position, ch)| {
            ch.to_digit(10).ok_or(WordError::InvalidCharacter {
                found: ch,
                position,
            })
        })
        .collect()
}

fn parse_comma_separated(text: &str) -> Result<Vec<Letter>, WordError> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|item| {
            let item = item.trim();
            item.parse::<Letter>()
                .map_err(|_| WordError::InvalidNumber(String::from(item)))
        })
        .collect()
}
