//! The text format for a pair of endomorphisms.
//!
//! ```text
//! # comments and blank lines are ignored
//! generators: a b c
//! phi: a -> a c b^-1
//! phi: b -> a b
//! phi: c -> b
//! psi: a -> a^-1 c b^-1
//! psi: b -> c
//! psi: c -> b^-1 a
//! ```
//!
//! `generators:` must come before any image line. Every generator needs
//! exactly one `phi` image; `psi` lines are optional as a block, and when
//! absent `ψ` is the identity.

use std::fmt;

use crate::error::{Error, ParseErrorKind, Result};
use crate::freegroup::{is_valid_name, Alphabet, Endomorphism, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemSpec {
    pub alphabet: Alphabet,
    pub phi: Endomorphism,
    pub psi: Endomorphism,
}

impl ProblemSpec {
    pub fn new(phi: Endomorphism, psi: Endomorphism) -> Result<Self> {
        phi.ensure_compatible(&psi)?;
        Ok(ProblemSpec {
            alphabet: phi.alphabet().clone(),
            phi,
            psi,
        })
    }
}

/// 1-based column of byte offset `pos`.
fn col(pos: usize) -> usize {
    pos + 1
}

pub fn parse_spec(text: &str) -> Result<ProblemSpec> {
    let mut alphabet: Option<Alphabet> = None;
    // per map: image and the line it came from
    let mut images: [Vec<Option<Word>>; 2] = [Vec::new(), Vec::new()];
    let mut last_line = 0;

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = raw_line.split('#').next().unwrap_or("");
        let start = content.len() - content.trim_start().len();
        let body = content.trim();
        if body.is_empty() {
            continue;
        }
        let Some(colon) = body.find(':') else {
            return Err(Error::parse(
                line_no,
                col(start),
                ParseErrorKind::Expected("`generators:`, `phi:` or `psi:`"),
            ));
        };
        let keyword = body[..colon].trim();
        let rest_offset = start + colon + 1;
        let rest = &content[rest_offset..];

        match keyword {
            "generators" => {
                if alphabet.is_some() {
                    return Err(Error::parse(
                        line_no,
                        col(start),
                        ParseErrorKind::DuplicateGeneratorsLine,
                    ));
                }
                let mut names: Vec<String> = Vec::new();
                let mut offset = rest_offset;
                for token in rest.split_inclusive(char::is_whitespace) {
                    let name = token.trim();
                    let at = offset + (token.len() - token.trim_start().len());
                    offset += token.len();
                    if name.is_empty() {
                        continue;
                    }
                    if !is_valid_name(name) {
                        return Err(Error::parse(
                            line_no,
                            col(at),
                            ParseErrorKind::InvalidGeneratorName(name.to_string()),
                        ));
                    }
                    if names.iter().any(|n| n == name) {
                        return Err(Error::parse(
                            line_no,
                            col(at),
                            ParseErrorKind::DuplicateGenerator(name.to_string()),
                        ));
                    }
                    names.push(name.to_string());
                }
                if names.is_empty() {
                    return Err(Error::parse(
                        line_no,
                        col(rest_offset),
                        ParseErrorKind::Expected("at least one generator name"),
                    ));
                }
                let al = Alphabet::new(names)?;
                images = [vec![None; al.rank()], vec![None; al.rank()]];
                alphabet = Some(al);
            }
            "phi" | "psi" => {
                let which = usize::from(keyword == "psi");
                let map_name = if which == 0 { "phi" } else { "psi" };
                let Some(al) = &alphabet else {
                    return Err(Error::parse(line_no, col(start), ParseErrorKind::MissingGenerators));
                };
                let Some(arrow) = rest.find("->") else {
                    return Err(Error::parse(
                        line_no,
                        col(rest_offset + rest.len()),
                        ParseErrorKind::Expected("`->`"),
                    ));
                };
                let source = rest[..arrow].trim();
                let source_at = rest_offset + (rest.len() - rest.trim_start().len());
                if source.is_empty() {
                    return Err(Error::parse(
                        line_no,
                        col(source_at),
                        ParseErrorKind::Expected("generator name"),
                    ));
                }
                let Some(g) = al.index_of(source) else {
                    return Err(Error::parse(
                        line_no,
                        col(source_at),
                        ParseErrorKind::UnknownGenerator(source.to_string()),
                    ));
                };
                if images[which][g].is_some() {
                    return Err(Error::parse(
                        line_no,
                        col(start),
                        ParseErrorKind::DuplicateImage(source.to_string(), map_name),
                    ));
                }
                let word_at = rest_offset + arrow + 2;
                let word = al.parse_word_at(&content[word_at..], line_no, col(word_at))?;
                images[which][g] = Some(word);
            }
            _ => {
                return Err(Error::parse(
                    line_no,
                    col(start),
                    ParseErrorKind::Expected("`generators:`, `phi:` or `psi:`"),
                ));
            }
        }
    }

    let Some(alphabet) = alphabet else {
        return Err(Error::parse(last_line.max(1), 1, ParseErrorKind::MissingGenerators));
    };
    let [phi_images, psi_images] = images;
    let complete = |imgs: Vec<Option<Word>>, map_name: &'static str| -> Result<Vec<Word>> {
        imgs.into_iter()
            .enumerate()
            .map(|(g, w)| {
                w.ok_or_else(|| {
                    Error::parse(
                        last_line + 1,
                        1,
                        ParseErrorKind::MissingImage(alphabet.name(g).to_string(), map_name),
                    )
                })
            })
            .collect()
    };
    let phi = Endomorphism::new(alphabet.clone(), complete(phi_images, "phi")?)?;
    let psi = if psi_images.iter().all(Option::is_none) {
        Endomorphism::identity(alphabet.clone())
    } else {
        Endomorphism::new(alphabet.clone(), complete(psi_images, "psi")?)?
    };
    ProblemSpec::new(phi, psi)
}

impl fmt::Display for ProblemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators: {}", self.alphabet.names().join(" "))?;
        for (name, e) in [("phi", &self.phi), ("psi", &self.psi)] {
            for (g, w) in e.images().iter().enumerate() {
                writeln!(f, "{name}: {} -> {}", self.alphabet.name(g), self.alphabet.word(w))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "generators: a b c
phi: a -> a c b^-1
phi: b -> a b
phi: c -> b
psi: a -> a^-1 c b^-1
psi: b -> c
psi: c -> b^-1 a
";

    fn kind(text: &str) -> (usize, usize, ParseErrorKind) {
        match parse_spec(text) {
            Err(Error::Parse { line, column, kind }) => (line, column, kind),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn circle_spec() {
        let s = parse_spec("generators: a\nphi: a -> a^3\npsi: a -> a").unwrap();
        assert_eq!(s.alphabet.rank(), 1);
        assert_eq!(s.phi.image(0), &Word::generator_power(0, 3));
        assert!(s.psi.is_identity());
    }

    #[test]
    fn example_spec() {
        let s = parse_spec(EXAMPLE).unwrap();
        let al = &s.alphabet;
        assert_eq!(s.phi, Endomorphism::parse(al, &["a c b^-1", "a b", "b"]).unwrap());
        assert_eq!(s.psi, Endomorphism::parse(al, &["a^-1 c b^-1", "c", "b^-1 a"]).unwrap());
    }

    #[test]
    fn trivial_image_and_default_psi() {
        let s = parse_spec("generators: a\nphi: a -> 1").unwrap();
        assert!(s.phi.image(0).is_empty());
        assert!(s.psi.is_identity());
    }

    #[test]
    fn whitespace_and_comments() {
        let s = parse_spec("  # pair\n\ngenerators:  a   b \nphi:b->a  ^-1 b\nphi :  a -> a^2 # square\n").unwrap();
        assert_eq!(s.phi.image(1), &s.alphabet.parse_word("a^-1 b").unwrap());
        assert_eq!(s.phi.image(0), &s.alphabet.parse_word("a a").unwrap());
    }

    #[test]
    fn round_trip() {
        for text in [EXAMPLE, "generators: x y\nphi: x -> x y x^-1 x\nphi: y -> 1\n"] {
            let s = parse_spec(text).unwrap();
            assert_eq!(parse_spec(&s.to_string()).unwrap(), s);
        }
        assert_eq!(parse_spec(EXAMPLE).unwrap().to_string(), EXAMPLE);
    }

    #[test]
    fn error_positions() {
        assert_eq!(
            kind("generators: a\nphi: a -> a d"),
            (2, 13, ParseErrorKind::UnknownGenerator("d".into()))
        );
        assert_eq!(
            kind("generators: a b a"),
            (1, 17, ParseErrorKind::DuplicateGenerator("a".into()))
        );
        assert_eq!(
            kind("generators: a b\nphi: a -> b"),
            (3, 1, ParseErrorKind::MissingImage("b".into(), "phi"))
        );
        assert_eq!(
            kind("generators: a\nphi: a -> a^-2"),
            (2, 12, ParseErrorKind::MalformedExponent("^-2".into()))
        );
        assert_eq!(
            kind("generators: a\nphi: a -> a^0"),
            (2, 12, ParseErrorKind::MalformedExponent("^0".into()))
        );
        assert_eq!(kind("phi: a -> a"), (1, 1, ParseErrorKind::MissingGenerators));
        assert_eq!(
            kind("generators: a\nphi: a -> a\nphi: a -> a"),
            (3, 1, ParseErrorKind::DuplicateImage("a".into(), "phi"))
        );
        assert_eq!(
            kind("generators: a\nphi: z -> a"),
            (2, 6, ParseErrorKind::UnknownGenerator("z".into()))
        );
        assert_eq!(kind("generators: a\nphi: a -> "), (2, 11, ParseErrorKind::EmptyWord));
        assert_eq!(
            kind("generators: a\nphi: a -> a\npsi: a -> a\npsi: a -> a"),
            (4, 1, ParseErrorKind::DuplicateImage("a".into(), "psi"))
        );
    }
}
