//! Free groups of finite rank: words, endomorphisms and the integral group ring.
//!
//! [`Word`] and [`GroupRingElement`] are plain values that do not carry an
//! alphabet. The [`Alphabet`] is the context object: it validates words,
//! parses and prints them, and is owned by every [`Endomorphism`].

mod endomorphism;
mod ring;
mod word;

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

pub use endomorphism::Endomorphism;
pub use ring::GroupRingElement;
pub use word::{Letter, Word};

use crate::error::{Error, ParseErrorKind, Result};

/// Ordered generator names of a free group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

pub(crate) fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for n in &names {
            if !is_valid_name(n) {
                return Err(Error::InvalidGeneratorName(n.clone()));
            }
            if !seen.insert(n.as_str()) {
                return Err(Error::AlphabetMismatch(format!("duplicate generator {n:?}")));
            }
        }
        Ok(Alphabet { names })
    }

    /// `a, b, c, ...` for ranks up to 26, then `x1, x2, ...`.
    pub fn standard(rank: usize) -> Self {
        let names = if rank <= 26 {
            (0..rank).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
        } else {
            (1..=rank).map(|i| format!("x{i}")).collect()
        };
        Alphabet { names }
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, generator: usize) -> &str {
        &self.names[generator]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn generator(&self, name: &str) -> Option<Word> {
        self.index_of(name).map(|i| Word::letter(Letter::positive(i)))
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.letters().iter().find(|l| l.generator() >= self.rank()) {
            Some(l) => Err(Error::GeneratorOutOfRange {
                index: l.generator(),
                rank: self.rank(),
            }),
            None => Ok(()),
        }
    }

    pub fn check_element(&self, x: &GroupRingElement) -> Result<()> {
        x.terms().try_for_each(|(w, _)| self.check_word(w))
    }

    pub fn ensure_same(&self, other: &Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch(format!(
                "[{}] vs [{}]",
                self.names.join(" "),
                other.names.join(" ")
            )))
        }
    }

    /// Group product of two words over this alphabet.
    pub fn multiply(&self, u: &Word, v: &Word) -> Result<Word> {
        self.check_word(u)?;
        self.check_word(v)?;
        Ok(u.mul(v))
    }

    /// Parses a word such as `a b^-1 c^2`, or `1` for the identity.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        self.parse_word_at(text, 1, 1)
    }

    /// As [`Alphabet::parse_word`], reporting errors relative to the given
    /// line and starting column.
    pub(crate) fn parse_word_at(&self, text: &str, line: usize, column: usize) -> Result<Word> {
        let bytes = text.as_bytes();
        let err = |pos: usize, kind| Error::parse(line, column + pos, kind);
        let skip_ws = |mut p: usize| {
            while p < bytes.len() && bytes[p].is_ascii_whitespace() {
                p += 1;
            }
            p
        };

        let start = skip_ws(0);
        if start == bytes.len() {
            return Err(err(start, ParseErrorKind::EmptyWord));
        }
        if text[start..].trim_end() == "1" {
            return Ok(Word::identity());
        }

        let mut letters = Vec::new();
        let mut pos = start;
        while pos < bytes.len() {
            // longest generator name that is a prefix of the remaining input
            let rest = &text[pos..];
            let ident_len = rest
                .bytes()
                .take_while(|b| b.is_ascii_alphanumeric() || *b == b'_')
                .count();
            if ident_len == 0 {
                return Err(err(pos, ParseErrorKind::Expected("generator name")));
            }
            let generator = (1..=ident_len)
                .rev()
                .find_map(|k| self.index_of(&rest[..k]).map(|g| (g, k)));
            let Some((generator, name_len)) = generator else {
                return Err(err(
                    pos,
                    ParseErrorKind::UnknownGenerator(rest[..ident_len].to_string()),
                ));
            };
            pos = skip_ws(pos + name_len);

            let mut exponent: i64 = 1;
            if pos < bytes.len() && bytes[pos] == b'^' {
                let exp_pos = pos;
                pos = skip_ws(pos + 1);
                let digits_start = if pos < bytes.len() && bytes[pos] == b'-' {
                    pos + 1
                } else {
                    pos
                };
                let digits = text[digits_start..].bytes().take_while(u8::is_ascii_digit).count();
                let token = &text[pos..digits_start + digits];
                exponent = match token {
                    "-1" => -1,
                    _ if digits_start == pos && digits > 0 => match token.parse::<i64>() {
                        Ok(k) if k > 0 => k,
                        _ => return Err(err(exp_pos, ParseErrorKind::MalformedExponent(format!("^{token}")))),
                    },
                    _ => return Err(err(exp_pos, ParseErrorKind::MalformedExponent(format!("^{token}")))),
                };
                pos = skip_ws(digits_start + digits);
            }
            let letter = Letter::new(generator, if exponent < 0 { -1 } else { 1 });
            letters.extend(std::iter::repeat_n(letter, exponent.unsigned_abs() as usize));
        }
        Ok(Word::from_letters(letters))
    }

    /// Display adapter for a word over this alphabet.
    pub fn word<'a>(&'a self, w: &'a Word) -> WordDisplay<'a> {
        WordDisplay {
            alphabet: self,
            word: w,
        }
    }

    /// Display adapter for a group-ring element over this alphabet.
    pub fn element<'a>(&'a self, x: &'a GroupRingElement) -> ElementDisplay<'a> {
        ElementDisplay {
            alphabet: self,
            element: x,
        }
    }
}

/// Prints a word with positive runs collapsed to `x^k` and each inverse
/// letter as `x^-1`. The identity prints as `1`. The output re-parses to the
/// same letter sequence.
pub struct WordDisplay<'a> {
    alphabet: &'a Alphabet,
    word: &'a Word,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.word.letters();
        if letters.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let l = letters[i];
            let name = self.alphabet.name(l.generator());
            if l.is_inverted() {
                write!(f, "{name}^-1")?;
                i += 1;
            } else {
                let run = letters[i..].iter().take_while(|&&m| m == l).count();
                if run == 1 {
                    f.write_str(name)?;
                } else {
                    write!(f, "{name}^{run}")?;
                }
                i += run;
            }
        }
        Ok(())
    }
}

/// Prints `c1·w1 + c2·w2 - ...` in shortlex order of the words; `0` if empty.
pub struct ElementDisplay<'a> {
    alphabet: &'a Alphabet,
    element: &'a GroupRingElement,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.element.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.element.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude: BigInt = c.abs();
            if w.is_empty() {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}·")?;
                }
                write!(f, "{}", self.alphabet.word(w))?;
            }
        }
        Ok(())
    }
}
