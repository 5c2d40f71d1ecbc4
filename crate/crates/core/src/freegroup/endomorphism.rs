use super::{Alphabet, Letter, Word};
use crate::error::{Error, Result};

/// An endomorphism of the free group on `alphabet`, given by one image word
/// per generator. Images are stored exactly as supplied (possibly unreduced).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Endomorphism {
    alphabet: Alphabet,
    images: Vec<Word>,
}

impl Endomorphism {
    pub fn new(alphabet: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != alphabet.rank() {
            return Err(Error::ImageCount {
                expected: alphabet.rank(),
                found: images.len(),
            });
        }
        for w in &images {
            alphabet.check_word(w)?;
        }
        Ok(Endomorphism { alphabet, images })
    }

    /// Builds an endomorphism from image strings in the alphabet's word syntax.
    pub fn parse(alphabet: &Alphabet, images: &[&str]) -> Result<Self> {
        let words = images
            .iter()
            .map(|s| alphabet.parse_word(s))
            .collect::<Result<Vec<_>>>()?;
        Endomorphism::new(alphabet.clone(), words)
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        let images = (0..alphabet.rank())
            .map(|i| Word::letter(Letter::positive(i)))
            .collect();
        Endomorphism { alphabet, images }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rank(&self) -> usize {
        self.alphabet.rank()
    }

    pub fn image(&self, generator: usize) -> &Word {
        &self.images[generator]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| w.reduced().letters() == [Letter::positive(i)])
    }

    /// Image of a single letter, reduced.
    pub fn apply_letter(&self, l: Letter) -> Word {
        let w = self.images[l.generator()].reduced();
        if l.is_inverted() {
            w.inverse()
        } else {
            w
        }
    }

    /// Substitutes every letter by its image and reduces.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        self.alphabet.check_word(w)?;
        Ok(self.apply_unchecked(w))
    }

    pub(crate) fn apply_unchecked(&self, w: &Word) -> Word {
        let mut out = Word::identity();
        for &l in w.letters() {
            let img = &self.images[l.generator()];
            if l.is_inverted() {
                for &m in img.letters().iter().rev() {
                    out.push_reducing(m.inverse());
                }
            } else {
                for &m in img.letters() {
                    out.push_reducing(m);
                }
            }
        }
        out
    }

    pub fn ensure_compatible(&self, other: &Endomorphism) -> Result<()> {
        self.alphabet.ensure_same(&other.alphabet)
    }

    /// Abelianization: entry `(i, j)` is the exponent sum of generator `i` in
    /// the image of generator `j`.
    pub fn abelianized_columns(&self) -> Vec<Vec<i64>> {
        self.images.iter().map(|w| w.exponent_sums(self.rank())).collect()
    }
}
