//! Morphisms between word sets, lazy infinite words generated from them, and
//! finite checks that a morphism preserves square-freeness.

use alloc::boxed::Box;
use alloc::vec::Vec;

use thiserror::Error;

use crate::walks::Colouring;
use crate::word::{self, Letter, Square, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("a morphism needs at least one source letter")]
    NoImages,
    #[error("the image of letter {0} is empty")]
    ErasingImage(Letter),
    #[error("image of letter {letter}: {source}")]
    BadImage { letter: Letter, source: WordError },
    #[error("letter {letter} is outside the source alphabet A_{alphabet_size}")]
    SourceLetterOutOfRange {
        letter: Letter,
        alphabet_size: usize,
    },
    #[error("the morphism is not uniform (image lengths {shortest} to {longest})")]
    NotUniform { shortest: usize, longest: usize },
    #[error("source alphabet A_{source_size} differs from target alphabet A_{target}")]
    NotEndomorphism { source_size: usize, target: usize },
    #[error(
        "letter {seed} is not prolongable: its image must start with it and have length at least 2"
    )]
    NotProlongable { seed: Letter },
    #[error("colouring is defined on A_{colouring}, but the morphism maps into A_{target}")]
    ColouringMismatch { colouring: usize, target: usize },
}

/// A non-erasing morphism `A_source^* -> A_target^*`, given by its letter images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    target_alphabet_size: usize,
    images: Vec<Word>,
}

impl Morphism {
    /// Builds a morphism from one image per source letter, in letter order.
    pub fn new(
        target_alphabet_size: usize,
        images: Vec<Vec<Letter>>,
    ) -> Result<Self, MorphismError> {
        if images.is_empty() {
            return Err(MorphismError::NoImages);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, letters)| {
                let letter = i as Letter;
                if letters.is_empty() {
                    return Err(MorphismError::ErasingImage(letter));
                }
                Word::new(letters, target_alphabet_size)
                    .map_err(|source| MorphismError::BadImage { letter, source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Morphism {
            target_alphabet_size,
            images,
        })
    }

    pub fn identity(alphabet_size: usize) -> Self {
        Morphism {
            target_alphabet_size: alphabet_size,
            images: (0..alphabet_size as Letter)
                .map(|l| Word::from_trusted(alloc::vec![l], alphabet_size))
                .collect(),
        }
    }

    pub fn source_alphabet_size(&self) -> usize {
        self.images.len()
    }

    pub fn target_alphabet_size(&self) -> usize {
        self.target_alphabet_size
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// The image of a single letter. Panics if `letter` is outside the source
    /// alphabet.
    pub fn image(&self, letter: Letter) -> &Word {
        &self.images[letter as usize]
    }

    /// The common image length, if all images have the same length.
    pub fn uniform_length(&self) -> Option<usize> {
        let first = self.images[0].len();
        self.images
            .iter()
            .all(|w| w.len() == first)
            .then_some(first)
    }

    fn check_source(&self, letters: &[Letter]) -> Result<(), MorphismError> {
        match letters.iter().find(|&&l| l as usize >= self.images.len()) {
            Some(&letter) => Err(MorphismError::SourceLetterOutOfRange {
                letter,
                alphabet_size: self.images.len(),
            }),
            None => Ok(()),
        }
    }

    fn apply_unchecked(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut out = Vec::new();
        for &l in letters {
            out.extend_from_slice(self.images[l as usize].letters());
        }
        out
    }

    pub fn apply(&self, word: &Word) -> Result<Word, MorphismError> {
        self.check_source(word.letters())?;
        Ok(Word::from_trusted(
            self.apply_unchecked(word.letters()),
            self.target_alphabet_size,
        ))
    }

    /// The infinite fixed point of the morphism starting with `seed`.
    pub fn fixed_point_stream(&self, seed: Letter) -> Result<WordStream, MorphismError> {
        self.check_source(&[seed])?;
        if self.target_alphabet_size != self.images.len() {
            return Err(MorphismError::NotEndomorphism {
                source_size: self.images.len(),
                target: self.target_alphabet_size,
            });
        }
        let seed_image = self.image(seed).letters();
        if seed_image.len() < 2 || seed_image[0] != seed {
            return Err(MorphismError::NotProlongable { seed });
        }
        let fixed = FixedPoint {
            images: self.images.iter().map(|w| w.letters().to_vec()).collect(),
            produced: seed_image.to_vec(),
            expanded: 1,
            emitted: 0,
        };
        Ok(WordStream::new(fixed, self.target_alphabet_size))
    }

    /// The morphic image of an infinite word, produced lazily.
    pub fn image_stream(&self, stream: WordStream) -> Result<WordStream, MorphismError> {
        if stream.alphabet_size() > self.images.len() {
            return Err(MorphismError::SourceLetterOutOfRange {
                letter: stream.alphabet_size() as Letter - 1,
                alphabet_size: self.images.len(),
            });
        }
        let images: Vec<Vec<Letter>> = self.images.iter().map(|w| w.letters().to_vec()).collect();
        let iter = stream
            .into_letters()
            .flat_map(move |l| images[l as usize].clone());
        Ok(WordStream::new(iter, self.target_alphabet_size))
    }

    /// Crochemore's test for uniform endomorphisms: the morphism is
    /// square-free iff it maps every square-free word of length 3 to a
    /// square-free word. Shorter words are included so that alphabets too
    /// small for square-free words of length 3 are still handled.
    pub fn crochemore_uniform_test(&self) -> Result<bool, MorphismError> {
        let source = self.images.len();
        if source != self.target_alphabet_size {
            return Err(MorphismError::NotEndomorphism {
                source_size: source,
                target: self.target_alphabet_size,
            });
        }
        if self.uniform_length().is_none() {
            let lens = self.images.iter().map(Word::len);
            return Err(MorphismError::NotUniform {
                shortest: lens.clone().min().unwrap_or(0),
                longest: lens.max().unwrap_or(0),
            });
        }
        Ok(matches!(
            self.preservation_test(3, &[]),
            Preservation::Holds { .. }
        ))
    }

    /// Checks every square-free word of length `1..=max_len` over the source
    /// alphabet that avoids all `forbidden` factors, in lexicographic
    /// depth-first order, and returns the first one whose image contains a
    /// square.
    pub fn preservation_test(&self, max_len: usize, forbidden: &[Word]) -> Preservation {
        let forbidden: Vec<&[Letter]> = forbidden
            .iter()
            .map(Word::letters)
            .filter(|f| !f.is_empty())
            .collect();
        let mut walker = PreservationWalk {
            morphism: self,
            max_len,
            forbidden,
            word: Vec::new(),
            checked: 0,
        };
        match walker.descend() {
            Some(p) => p,
            None => Preservation::Holds {
                words_checked: walker.checked,
            },
        }
    }

    /// Checks that each `m(i)`, `i` in `letters`, only occurs in products of
    /// images `m(i_1) m(i_2) ..` exactly as one of the factors `m(i_k)` with
    /// `i_k = i`.
    ///
    /// Every occurrence starts inside some image, so it is enough to look at
    /// occurrences starting inside the first image of a product. Products are
    /// grown until the occurrence fits, which makes the check exhaustive over
    /// all of `A^*` (not only square-free words).
    pub fn alignment_test(&self, letters: &[Letter]) -> Result<Alignment, MorphismError> {
        self.check_source(letters)?;
        for &letter in letters {
            let pattern = self.image(letter).letters();
            for first in 0..self.images.len() as Letter {
                let mut product = alloc::vec![first];
                if let Some(found) = self.find_misaligned(letter, pattern, &mut product) {
                    return Ok(found);
                }
            }
        }
        Ok(Alignment::Aligned)
    }

    fn find_misaligned(
        &self,
        letter: Letter,
        pattern: &[Letter],
        product: &mut Vec<Letter>,
    ) -> Option<Alignment> {
        let first_len = self.image(product[0]).len();
        let image = self.apply_unchecked(product);
        if image.len() < first_len + pattern.len() - 1 {
            for next in 0..self.images.len() as Letter {
                product.push(next);
                let found = self.find_misaligned(letter, pattern, product);
                product.pop();
                if found.is_some() {
                    return found;
                }
            }
            return None;
        }
        (0..first_len)
            .filter(|&offset| offset + pattern.len() <= image.len())
            .find(|&offset| {
                image[offset..offset + pattern.len()] == *pattern
                    && (offset != 0 || product[0] != letter)
            })
            .map(|offset| Alignment::Misaligned {
                letter,
                product: Word::from_trusted(product.clone(), self.images.len()),
                offset,
            })
    }

    /// The morphism `phi ∘ self`.
    pub fn compose_colouring(&self, phi: &Colouring) -> Result<Morphism, MorphismError> {
        if phi.source_alphabet_size() != self.target_alphabet_size {
            return Err(MorphismError::ColouringMismatch {
                colouring: phi.source_alphabet_size(),
                target: self.target_alphabet_size,
            });
        }
        let images = self
            .images
            .iter()
            .map(|w| w.letters().iter().map(|&l| phi.colour(l)).collect())
            .collect();
        Morphism::new(phi.target_alphabet_size(), images)
    }
}

/// Outcome of [`Morphism::preservation_test`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Preservation {
    Holds {
        words_checked: usize,
    },
    Counterexample {
        word: Word,
        image: Word,
        square: Square,
    },
}

impl Preservation {
    pub fn holds(&self) -> bool {
        matches!(self, Preservation::Holds { .. })
    }
}

/// Outcome of [`Morphism::alignment_test`]. A misalignment records the
/// product of images and the offset (inside the first image) at which the
/// image of `letter` was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Alignment {
    Aligned,
    Misaligned {
        letter: Letter,
        product: Word,
        offset: usize,
    },
}

impl Alignment {
    pub fn is_aligned(&self) -> bool {
        matches!(self, Alignment::Aligned)
    }
}

struct PreservationWalk<'a> {
    morphism: &'a Morphism,
    max_len: usize,
    forbidden: Vec<&'a [Letter]>,
    word: Vec<Letter>,
    checked: usize,
}

impl PreservationWalk<'_> {
    fn descend(&mut self) -> Option<Preservation> {
        if self.word.len() == self.max_len {
            return None;
        }
        for letter in 0..self.morphism.source_alphabet_size() as Letter {
            self.word.push(letter);
            let admissible = !word::has_suffix_square(&self.word)
                && !self.forbidden.iter().any(|f| self.word.ends_with(f));
            if admissible {
                self.checked += 1;
                let image = self.morphism.apply_unchecked(&self.word);
                if let Some(square) = word::find_square(&image) {
                    return Some(Preservation::Counterexample {
                        word: Word::from_trusted(
                            self.word.clone(),
                            self.morphism.source_alphabet_size(),
                        ),
                        image: Word::from_trusted(image, self.morphism.target_alphabet_size),
                        square,
                    });
                }
                if let Some(found) = self.descend() {
                    return Some(found);
                }
            }
            self.word.pop();
        }
        None
    }
}

/// Fixed point `w = m(w)` produced by reading `w` itself: the letters emitted
/// so far are expanded one at a time, and expansion always runs ahead of
/// emission because the seed image has length at least 2.
struct FixedPoint {
    images: Vec<Vec<Letter>>,
    produced: Vec<Letter>,
    expanded: usize,
    emitted: usize,
}

impl Iterator for FixedPoint {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        while self.emitted >= self.produced.len() {
            let letter = self.produced[self.expanded] as usize;
            self.produced.extend_from_slice(&self.images[letter]);
            self.expanded += 1;
        }
        let letter = self.produced[self.emitted];
        self.emitted += 1;
        Some(letter)
    }
}

/// A lazily generated infinite word.
///
/// Letters are pulled from the generator on demand and cached, so
/// `prefix(m)` is always a prefix of `prefix(n)` for `m <= n`. A stream has
/// a single consumer; it can be moved between threads but not shared.
pub struct WordStream {
    source: Box<dyn Iterator<Item = Letter> + Send>,
    cache: Vec<Letter>,
    alphabet_size: usize,
}

impl WordStream {
    /// Wraps an infinite letter generator. The generator must never end and
    /// must only yield letters below `alphabet_size`.
    pub fn new<I>(letters: I, alphabet_size: usize) -> Self
    where
        I: Iterator<Item = Letter> + Send + 'static,
    {
        WordStream {
            source: Box::new(letters),
            cache: Vec::new(),
            alphabet_size,
        }
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    fn fill(&mut self, len: usize) {
        while self.cache.len() < len {
            let letter = self.source.next().expect("infinite word stream ended");
            debug_assert!((letter as usize) < self.alphabet_size);
            self.cache.push(letter);
        }
    }

    /// The first `len` letters.
    pub fn prefix(&mut self, len: usize) -> Word {
        self.fill(len);
        Word::from_trusted(self.cache[..len].to_vec(), self.alphabet_size)
    }

    /// Letter at position `index` (0-based).
    pub fn letter(&mut self, index: usize) -> Letter {
        self.fill(index + 1);
        self.cache[index]
    }

    /// The whole infinite word as an iterator, starting from the first letter.
    pub fn into_letters(self) -> impl Iterator<Item = Letter> + Send {
        self.cache.into_iter().chain(self.source)
    }

    /// The same infinite word viewed over a larger alphabet.
    pub fn widen(self, alphabet_size: usize) -> WordStream {
        assert!(
            alphabet_size >= self.alphabet_size,
            "widen cannot shrink an alphabet"
        );
        WordStream {
            alphabet_size,
            ..self
        }
    }

    /// Letterwise image under `f`, over `A_alphabet_size`.
    pub fn map_letters<F>(self, alphabet_size: usize, f: F) -> WordStream
    where
        F: FnMut(Letter) -> Letter + Send + 'static,
    {
        WordStream::new(self.into_letters().map(f), alphabet_size)
    }
}

impl core::fmt::Debug for WordStream {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("WordStream")
            .field("alphabet_size", &self.alphabet_size)
            .field("cached", &self.cache.len())
            .finish_non_exhaustive()
    }
}

/// The named morphisms and colouring used by the witness constructions.
pub mod builtin {
    use alloc::vec::Vec;

    use super::Morphism;
    use crate::walks::Colouring;
    use crate::word::Letter;

    fn digits(text: &str) -> Vec<Letter> {
        text.bytes().map(|b| Letter::from(b - b'0')).collect()
    }

    fn from_digits(target: usize, images: &[&str]) -> Morphism {
        Morphism::new(target, images.iter().map(|s| digits(s)).collect())
            .expect("built-in morphism is valid")
    }

    /// `0 -> 012, 1 -> 02, 2 -> 1`; its fixed point from 0 is the Thue word.
    pub fn tau() -> Morphism {
        from_digits(3, &["012", "02", "1"])
    }

    /// Non-uniform morphism of `A_3` with images of lengths 24, 16 and 8.
    /// Maps square-free words avoiding `010` and `212` (such as the Thue
    /// word) to square-free words; avoiding `010` alone is not enough.
    pub fn alpha_p5() -> Morphism {
        from_digits(
            3,
            &["201021202101201021012021", "2010212021012021", "20102101"],
        )
    }

    /// Lift of [`alpha_p5`] to walks on the path `P_5` (edges `01, 12, 23,
    /// 34`): `alpha_p5 = phi_p5 ∘ beta_p5`.
    ///
    /// These are the images of [`beta_p5_as_printed`] with the letters 0 and
    /// 1 exchanged; the printed images walk on the path `1 0 2 3 4`.
    pub fn beta_p5() -> Morphism {
        from_digits(
            5,
            &["210123212343210123432123", "2101232123432123", "21012343"],
        )
    }

    /// 3-colouring of `P_5` with `phi_p5 ∘ beta_p5 = alpha_p5`:
    /// `0 -> 1, 1 -> 0, 2 -> 2, 3 -> 1, 4 -> 0`.
    pub fn phi_p5() -> Colouring {
        Colouring::new(alloc::vec![1, 0, 2, 1, 0], 3).expect("built-in colouring is valid")
    }

    /// The lift as originally displayed. Its images are walks on the path
    /// with edges `01, 02, 23, 34`.
    pub fn beta_p5_as_printed() -> Morphism {
        from_digits(
            5,
            &["201023202343201023432023", "2010232023432023", "20102343"],
        )
    }

    /// The colouring as originally displayed: `0 -> 1, 1 -> 0, 2 -> 2,
    /// 3 -> 0, 4 -> 1`. It does not factor `alpha_p5` through either lift.
    pub fn phi_p5_as_printed() -> Colouring {
        Colouring::new(alloc::vec![1, 0, 2, 0, 1], 3).expect("built-in colouring is valid")
    }

    /// Uniform morphism of `A_4` with length-12 images that are walks on
    /// `C_4`, as originally displayed. Not square-free: the image of `012`
    /// contains a square of period 12. See [`alpha_c4_repaired`].
    pub fn alpha_c4() -> Morphism {
        from_digits(
            4,
            &[
                "010301210323",
                "010301230323",
                "010301232123",
                "010321030123",
            ],
        )
    }

    /// [`alpha_c4`] with the fifth letter of the image of 1 changed from 0
    /// to 2, the only single-letter change that keeps every image a `C_4`
    /// walk and passes the Crochemore test.
    pub fn alpha_c4_repaired() -> Morphism {
        from_digits(
            4,
            &[
                "010301210323",
                "010321230323",
                "010301232123",
                "010321030123",
            ],
        )
    }

    /// Uniform morphism `A_3 -> A_5` with length-7 images producing
    /// square-free tournament words.
    pub fn alpha_t5() -> Morphism {
        from_digits(5, &["0123014", "0130124", "0120134"])
    }
}
