//! The free nilpotent group of class 2, `F / γ₃F`.
//!
//! Normal form: every element is uniquely
//! `x_1^{v_1} ⋯ x_n^{v_n} · ∏_{i<j} [x_i, x_j]^{c_ij}` with
//! `[x, y] = x^-1 y^-1 x y`, and is stored as the pair `(v, c)`; `c` is indexed
//! lexicographically by `(i, j)`, `i < j`.
//!
//! Collection convention: moving `x_i` left past `x_j` (`i < j`) leaves
//! `x_j x_i = x_i x_j [x_j, x_i] = x_i x_j [x_i, x_j]^-1`, so
//! `(v₁, c₁)(v₂, c₂) = (v₁ + v₂, c₁ + c₂ + Q(v₁, v₂))` with
//! `Q(v₁, v₂)_{ij} = -v₁[j] · v₂[i]`.

use crate::error::{Error, Result};
use crate::freegroup::{Endomorphism, Word};

use super::smith::IntMatrix;

fn overflow() -> Error {
    Error::Overflow("class-2 nilpotent arithmetic")
}

fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or_else(overflow)
}

fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or_else(overflow)
}

/// Number of basic commutators `[x_i, x_j]`, `i < j`.
pub fn commutator_count(rank: usize) -> usize {
    rank * rank.saturating_sub(1) / 2
}

/// Coordinate of `[x_i, x_j]` for `i < j`.
pub fn commutator_index(rank: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < rank);
    i * (2 * rank - i - 1) / 2 + (j - i - 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Nil2Element {
    /// exponent sums
    pub v: Vec<i64>,
    /// basic-commutator coordinates
    pub c: Vec<i64>,
}

impl Nil2Element {
    pub fn identity(rank: usize) -> Self {
        Nil2Element {
            v: vec![0; rank],
            c: vec![0; commutator_count(rank)],
        }
    }

    pub fn rank(&self) -> usize {
        self.v.len()
    }

    /// The image of `x_g^{±1}`.
    pub fn letter(rank: usize, generator: usize, sign: i64) -> Self {
        let mut e = Self::identity(rank);
        e.v[generator] = sign;
        e
    }

    /// Projection of a free-group word. Collects letters left to right: each
    /// new letter `x_i^s` passes the exponents already gathered on
    /// generators `j > i`, contributing `-run[j] · s` to `c_ij`.
    pub fn embed(w: &Word, rank: usize) -> Result<Self> {
        let mut e = Self::identity(rank);
        for l in w.letters() {
            let i = l.generator();
            if i >= rank {
                return Err(Error::GeneratorOutOfRange { index: i, rank });
            }
            let s = l.sign();
            for j in i + 1..rank {
                let k = commutator_index(rank, i, j);
                e.c[k] = add(e.c[k], mul(-e.v[j], s)?)?;
            }
            e.v[i] = add(e.v[i], s)?;
        }
        Ok(e)
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank() == other.rank() {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch(format!(
                "class-2 elements of rank {} and {}",
                self.rank(),
                other.rank()
            )))
        }
    }

    /// `Q(v₁, v₂)` added onto `c`.
    fn add_q(c: &mut [i64], v1: &[i64], v2: &[i64], scale: i64) -> Result<()> {
        let n = v1.len();
        for (i, &v2i) in v2.iter().enumerate() {
            if v2i == 0 {
                continue;
            }
            for (j, &v1j) in v1.iter().enumerate().skip(i + 1) {
                let k = commutator_index(n, i, j);
                let term = mul(mul(-v1j, v2i)?, scale)?;
                c[k] = add(c[k], term)?;
            }
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let v = self
            .v
            .iter()
            .zip(&other.v)
            .map(|(a, b)| add(*a, *b))
            .collect::<Result<Vec<_>>>()?;
        let mut c = self
            .c
            .iter()
            .zip(&other.c)
            .map(|(a, b)| add(*a, *b))
            .collect::<Result<Vec<_>>>()?;
        Self::add_q(&mut c, &self.v, &other.v, 1)?;
        Ok(Nil2Element { v, c })
    }

    /// `(v, c)^-1 = (-v, -c + Q(v, v))`
    pub fn inverse(&self) -> Result<Self> {
        let v = self
            .v
            .iter()
            .map(|x| x.checked_neg().ok_or_else(overflow))
            .collect::<Result<Vec<_>>>()?;
        let mut c = self
            .c
            .iter()
            .map(|x| x.checked_neg().ok_or_else(overflow))
            .collect::<Result<Vec<_>>>()?;
        Self::add_q(&mut c, &self.v, &self.v, 1)?;
        Ok(Nil2Element { v, c })
    }

    /// `(v, c)^k = (k v, k c + C(k, 2) Q(v, v))` for every integer `k`.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let v = self.v.iter().map(|&x| mul(x, k)).collect::<Result<Vec<_>>>()?;
        let mut c = self.c.iter().map(|&x| mul(x, k)).collect::<Result<Vec<_>>>()?;
        let binom = (k as i128 * (k as i128 - 1) / 2).try_into().map_err(|_| overflow())?;
        Self::add_q(&mut c, &self.v, &self.v, binom)?;
        Ok(Nil2Element { v, c })
    }

    /// `[x, y] = x^-1 y^-1 x y`
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.inverse()?.mul(&other.inverse()?)?.mul(self)?.mul(other)
    }

    pub fn is_central(&self) -> bool {
        self.v.iter().all(|&x| x == 0)
    }
}

/// The endomorphism of the class-2 quotient induced by a free-group
/// endomorphism.
#[derive(Clone, Debug)]
pub struct Nil2Endo {
    rank: usize,
    /// images of the generators
    generators: Vec<Nil2Element>,
    /// images of the basic commutators, in coordinate order (all central)
    commutators: Vec<Nil2Element>,
}

impl Nil2Endo {
    pub fn new(e: &Endomorphism) -> Result<Self> {
        let rank = e.rank();
        let generators = (0..rank)
            .map(|i| Nil2Element::embed(e.image(i), rank))
            .collect::<Result<Vec<_>>>()?;
        let mut commutators = Vec::with_capacity(commutator_count(rank));
        for i in 0..rank {
            for j in i + 1..rank {
                commutators.push(generators[i].commutator(&generators[j])?);
            }
        }
        Ok(Nil2Endo {
            rank,
            generators,
            commutators,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn apply(&self, x: &Nil2Element) -> Result<Nil2Element> {
        if x.rank() != self.rank {
            return Err(Error::AlphabetMismatch(format!(
                "class-2 element of rank {} under endomorphism of rank {}",
                x.rank(),
                self.rank
            )));
        }
        let mut out = Nil2Element::identity(self.rank);
        for (g, &k) in self.generators.iter().zip(&x.v) {
            if k != 0 {
                out = out.mul(&g.pow(k)?)?;
            }
        }
        for (comm, &k) in self.commutators.iter().zip(&x.c) {
            if k != 0 {
                out = out.mul(&comm.pow(k)?)?;
            }
        }
        Ok(out)
    }

    /// Image of `(g, 0)`, i.e. of `x_1^{g_1} ⋯ x_n^{g_n}`.
    pub fn apply_vector(&self, g: &[i64]) -> Result<Nil2Element> {
        let mut out = Nil2Element::identity(self.rank);
        for (img, &k) in self.generators.iter().zip(g) {
            if k != 0 {
                out = out.mul(&img.pow(k)?)?;
            }
        }
        Ok(out)
    }

    /// The action on the commutator coordinates (the second exterior power
    /// of the abelianized map): column `k` is the image of the `k`-th basic
    /// commutator.
    pub fn commutator_matrix(&self) -> IntMatrix {
        let cols: Vec<Vec<i64>> = self.commutators.iter().map(|x| x.c.clone()).collect();
        IntMatrix::from_columns(commutator_count(self.rank), &cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegroup::{Alphabet, Letter};

    fn al() -> Alphabet {
        Alphabet::new(["a", "b", "c"]).unwrap()
    }

    #[test]
    fn empty_word_embeds_to_identity() {
        assert_eq!(
            Nil2Element::embed(&Word::identity(), 3).unwrap(),
            Nil2Element::identity(3)
        );
    }

    #[test]
    fn ab_and_ba_differ_in_one_commutator() {
        let al = al();
        let ab = Nil2Element::embed(&al.parse_word("a b").unwrap(), 3).unwrap();
        let ba = Nil2Element::embed(&al.parse_word("b a").unwrap(), 3).unwrap();
        assert_eq!(ab.v, ba.v);
        let diff: Vec<i64> = ab.c.iter().zip(&ba.c).map(|(x, y)| x - y).collect();
        assert_eq!(diff, vec![1, 0, 0]);
    }

    #[test]
    fn basic_commutators_are_unit_vectors() {
        let n = 3;
        for i in 0..n {
            for j in i + 1..n {
                let w = Word::from_letters([
                    Letter::negative(i),
                    Letter::negative(j),
                    Letter::positive(i),
                    Letter::positive(j),
                ]);
                let e = Nil2Element::embed(&w, n).unwrap();
                assert!(e.is_central());
                let mut unit = vec![0; 3];
                unit[commutator_index(n, i, j)] = 1;
                assert_eq!(e.c, unit);
            }
        }
    }

    #[test]
    fn pow_and_inverse_agree_with_words() {
        let al = al();
        let w = al.parse_word("a c b^-1 a").unwrap();
        let e = Nil2Element::embed(&w, 3).unwrap();
        for k in -3..=3 {
            assert_eq!(e.pow(k).unwrap(), Nil2Element::embed(&w.pow(k), 3).unwrap());
        }
        assert_eq!(e.inverse().unwrap(), Nil2Element::embed(&w.inverse(), 3).unwrap());
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let x = Nil2Element::identity(2);
        let y = Nil2Element::identity(3);
        assert!(x.mul(&y).is_err());
    }

    #[test]
    fn induced_map_matches_free_group() {
        let al = al();
        let phi = Endomorphism::parse(&al, &["a c b^-1", "a b", "b"]).unwrap();
        let n = Nil2Endo::new(&phi).unwrap();
        for s in ["a", "b a^-1", "c^2 a b^-1 a", "a b a^-1 b^-1"] {
            let w = al.parse_word(s).unwrap();
            let lhs = n.apply(&Nil2Element::embed(&w, 3).unwrap()).unwrap();
            let rhs = Nil2Element::embed(&phi.apply(&w).unwrap(), 3).unwrap();
            assert_eq!(lhs, rhs, "{s}");
        }
    }
}
