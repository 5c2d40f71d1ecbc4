use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Word;

/// An element of the integral group ring of a free group: a finite
/// combination of reduced words with nonzero integer coefficients.
///
/// Terms are kept in shortlex order of their words, so iteration and
/// printing are deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The identity word with coefficient 1.
    pub fn one() -> Self {
        Self::from_word(&Word::identity())
    }

    pub fn from_word(w: &Word) -> Self {
        let mut x = Self::zero();
        x.add_term(BigInt::one(), w);
        x
    }

    pub fn from_terms<'a>(terms: impl IntoIterator<Item = (i64, &'a Word)>) -> Self {
        let mut x = Self::zero();
        for (c, w) in terms {
            x.add_term(BigInt::from(c), w);
        }
        x
    }

    /// Adds `coeff · w`, reducing `w` first and dropping a zero result.
    pub fn add_term(&mut self, coeff: BigInt, w: &Word) {
        if coeff.is_zero() {
            return;
        }
        let key = if w.is_reduced() { w.clone() } else { w.reduced() };
        self.add_reduced_term(coeff, key);
    }

    pub(crate) fn add_reduced_term(&mut self, coeff: BigInt, key: Word) {
        debug_assert!(key.is_reduced());
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                if !coeff.is_zero() {
                    e.insert(coeff);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> BigInt {
        self.terms.get(&w.reduced()).cloned().unwrap_or_default()
    }

    /// Sum of all coefficients (the augmentation).
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        GroupRingElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    /// `w · self`, term-wise.
    pub fn left_mul(&self, w: &Word) -> Self {
        let mut out = Self::zero();
        for (v, c) in &self.terms {
            out.add_reduced_term(c.clone(), w.mul(v));
        }
        out
    }

    /// `self · w`, term-wise.
    pub fn right_mul(&self, w: &Word) -> Self {
        let mut out = Self::zero();
        for (v, c) in &self.terms {
            out.add_reduced_term(c.clone(), v.mul(w));
        }
        out
    }

    /// Full group-ring product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, c) in &self.terms {
            for (v, d) in &other.terms {
                out.add_reduced_term(c * d, u.mul(v));
            }
        }
        out
    }

    /// The involution `Σ c_k g_k ↦ Σ c_k g_k^-1`.
    pub fn involution(&self) -> Self {
        GroupRingElement {
            terms: self.terms.iter().map(|(w, c)| (w.inverse(), c.clone())).collect(),
        }
    }
}

impl AddAssign<&GroupRingElement> for GroupRingElement {
    fn add_assign(&mut self, rhs: &GroupRingElement) {
        for (w, c) in &rhs.terms {
            self.add_reduced_term(c.clone(), w.clone());
        }
    }
}

impl SubAssign<&GroupRingElement> for GroupRingElement {
    fn sub_assign(&mut self, rhs: &GroupRingElement) {
        for (w, c) in &rhs.terms {
            self.add_reduced_term(-c, w.clone());
        }
    }
}

impl Add for GroupRingElement {
    type Output = GroupRingElement;
    fn add(mut self, rhs: GroupRingElement) -> GroupRingElement {
        self += &rhs;
        self
    }
}

impl Add<&GroupRingElement> for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for GroupRingElement {
    type Output = GroupRingElement;
    fn sub(mut self, rhs: GroupRingElement) -> GroupRingElement {
        self -= &rhs;
        self
    }
}

impl Sub<&GroupRingElement> for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        GroupRingElement {
            terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect(),
        }
    }
}

impl FromIterator<(BigInt, Word)> for GroupRingElement {
    fn from_iter<I: IntoIterator<Item = (BigInt, Word)>>(iter: I) -> Self {
        let mut x = Self::zero();
        for (c, w) in iter {
            x.add_term(c, &w);
        }
        x
    }
}
