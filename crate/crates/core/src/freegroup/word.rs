use std::cmp::Ordering;
use std::fmt;

/// A generator or the inverse of a generator.
///
/// Letters are ordered by generator index, with `x` before `x^-1`. This is the
/// letter order used for every shortlex comparison in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    generator: usize,
    inverted: bool,
}

impl Letter {
    pub const fn new(generator: usize, sign: i8) -> Self {
        Letter {
            generator,
            inverted: sign < 0,
        }
    }

    pub const fn positive(generator: usize) -> Self {
        Letter {
            generator,
            inverted: false,
        }
    }

    pub const fn negative(generator: usize) -> Self {
        Letter {
            generator,
            inverted: true,
        }
    }

    pub const fn generator(self) -> usize {
        self.generator
    }

    /// `+1` for a generator, `-1` for an inverse generator.
    pub const fn sign(self) -> i64 {
        if self.inverted {
            -1
        } else {
            1
        }
    }

    pub const fn is_inverted(self) -> bool {
        self.inverted
    }

    pub const fn inverse(self) -> Self {
        Letter {
            generator: self.generator,
            inverted: !self.inverted,
        }
    }

    pub const fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverted != other.inverted
    }
}

/// A finite sequence of letters, possibly unreduced.
///
/// The empty word is the identity. Operations named after group
/// multiplication return reduced words; [`Word::concat`] keeps every letter.
///
/// `Ord` is shortlex: shorter words first, then lexicographic by [`Letter`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub const fn identity() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn from_letters(letters: impl Into<Vec<Letter>>) -> Self {
        Word {
            letters: letters.into(),
        }
    }

    pub fn letter(letter: Letter) -> Self {
        Word { letters: vec![letter] }
    }

    /// `x_generator^exponent`, reduced.
    pub fn generator_power(generator: usize, exponent: i64) -> Self {
        let letter = Letter::new(generator, if exponent < 0 { -1 } else { 1 });
        Word {
            letters: vec![letter; exponent.unsigned_abs() as usize],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].cancels(w[1]))
    }

    /// Largest generator index used, plus one.
    pub fn min_rank(&self) -> usize {
        self.letters.iter().map(|l| l.generator + 1).max().unwrap_or(0)
    }

    /// Free reduction. Single left-to-right pass with a stack, which reaches
    /// the same normal form as any other cancellation order.
    pub fn reduced(&self) -> Word {
        let mut out = Word::identity();
        for &l in &self.letters {
            out.push_reducing(l);
        }
        out
    }

    pub fn reduce(&mut self) {
        if !self.is_reduced() {
            *self = self.reduced();
        }
    }

    /// Appends `letter`, cancelling it against the last letter if possible.
    pub fn push_reducing(&mut self, letter: Letter) {
        match self.letters.last() {
            Some(&last) if last.cancels(letter) => {
                self.letters.pop();
            }
            _ => self.letters.push(letter),
        }
    }

    /// Appends `letter` without cancelling.
    pub fn push(&mut self, letter: Letter) {
        self.letters.push(letter);
    }

    /// Group product: reduced concatenation.
    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.reduced();
        for &l in &other.letters {
            out.push_reducing(l);
        }
        out
    }

    /// Literal concatenation; no cancellation.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Reverses the word and flips every sign. Preserves (un)reducedness.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `self^k` for any integer `k`, reduced.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 {
            self.inverse().reduced()
        } else {
            self.reduced()
        };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Prefix of the first `n` letters, unreduced.
    pub fn prefix(&self, n: usize) -> Word {
        Word::from_letters(&self.letters[..n])
    }

    /// Exponent sum of each generator, indexed up to `rank`.
    pub fn exponent_sums(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0i64; rank];
        for l in &self.letters {
            v[l.generator] += l.sign();
        }
        v
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl From<Letter> for Word {
    fn from(l: Letter) -> Self {
        Word::letter(l)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word {
            letters: iter.into_iter().collect(),
        }
    }
}

/// Alphabet-free fallback rendering: `x0 x1^-1 ...`, or `1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{}", l.generator)?;
            if l.inverted {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: Letter = Letter::positive(0);
    const AI: Letter = Letter::negative(0);
    const B: Letter = Letter::positive(1);
    const BI: Letter = Letter::negative(1);
    const C: Letter = Letter::positive(2);
    const CI: Letter = Letter::negative(2);

    fn w(ls: &[Letter]) -> Word {
        Word::from_letters(ls)
    }

    /// Repeatedly removes the first adjacent cancelling pair until none is left.
    fn reduce_by_single_passes(word: &Word) -> Word {
        let mut ls = word.letters().to_vec();
        loop {
            let pos = ls.windows(2).position(|p| p[0].cancels(p[1]));
            match pos {
                Some(i) => {
                    ls.drain(i..i + 2);
                }
                None => return Word::from_letters(ls),
            }
        }
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(w(&[A, AI, B]).reduced(), w(&[B]));
        assert_eq!(Word::identity().reduced(), Word::identity());
        let x = w(&[A, B, AI, A, BI]);
        assert_eq!(reduce_by_single_passes(&x), w(&[A]));
        assert_eq!(x.reduced(), w(&[A]));
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(w(&[A, B]).mul(&w(&[BI, C])), w(&[A, C]));
        assert_eq!(w(&[A, B]).mul(&Word::identity()), w(&[A, B]));
        // phi(a) psi(a)^-1 for the rank-3 worked example
        assert_eq!(w(&[A, C, BI]).mul(&w(&[B, CI, A])), w(&[A, A]));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w(&[A, C, BI]).inverse(), w(&[B, CI, AI]));
        assert_eq!(Word::identity().inverse(), Word::identity());
        assert_eq!(w(&[A, A]).inverse(), w(&[AI, AI]));
        let x = w(&[A, C, BI, BI]);
        assert!(x.mul(&x.inverse()).is_empty());
    }

    #[test]
    fn shortlex_order() {
        let mut ws = vec![w(&[B]), w(&[A, A]), Word::identity(), w(&[AI]), w(&[A])];
        ws.sort();
        assert_eq!(ws, vec![Word::identity(), w(&[A]), w(&[AI]), w(&[B]), w(&[A, A])]);
    }

    #[test]
    fn powers() {
        assert_eq!(w(&[A, B]).pow(2), w(&[A, B, A, B]));
        assert_eq!(w(&[A, B]).pow(-1), w(&[BI, AI]));
        assert_eq!(w(&[A]).pow(0), Word::identity());
        assert_eq!(Word::generator_power(1, -3), w(&[BI, BI, BI]));
    }
}
