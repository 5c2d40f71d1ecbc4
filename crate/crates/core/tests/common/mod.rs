//! Shared helpers for the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use bouquet::freegroup::{Alphabet, Endomorphism, GroupRingElement, Letter, Word};
use num_bigint::BigInt;
use rand::Rng;

/// Reduced word of length in `lo..=hi` over the first `rank` generators.
pub fn random_word(rng: &mut impl Rng, rank: usize, lo: usize, hi: usize) -> Word {
    let len = rng.gen_range(lo..=hi);
    let mut w = Word::identity();
    while w.len() < len {
        let l = Letter::new(rng.gen_range(0..rank), if rng.gen() { 1 } else { -1 });
        if w.last().is_some_and(|x| x.cancels(l)) {
            continue;
        }
        w.push(l);
    }
    w
}

/// Letter sequence of length in `0..=hi`, possibly unreduced.
pub fn random_letters(rng: &mut impl Rng, rank: usize, hi: usize) -> Word {
    let len = rng.gen_range(0..=hi);
    (0..len)
        .map(|_| Letter::new(rng.gen_range(0..rank), if rng.gen() { 1 } else { -1 }))
        .collect()
}

pub fn random_endo(rng: &mut impl Rng, al: &Alphabet, lo: usize, hi: usize) -> Endomorphism {
    let images = (0..al.rank()).map(|_| random_word(rng, al.rank(), lo, hi)).collect();
    Endomorphism::new(al.clone(), images).unwrap()
}

/// Every letter sequence of length at most `max_len`.
pub fn all_words(rank: usize, max_len: usize) -> Vec<Word> {
    let letters: Vec<Letter> = (0..rank)
        .flat_map(|g| [Letter::positive(g), Letter::negative(g)])
        .collect();
    let mut out = vec![Word::identity()];
    let mut layer = vec![Word::identity()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Fox derivative from its closed form: every occurrence of `x` contributes
/// its prefix, every occurrence of `x^-1` minus its prefix including itself.
pub fn naive_fox(generator: usize, w: &Word) -> GroupRingElement {
    let letters = w.letters();
    let mut out = GroupRingElement::zero();
    for (k, l) in letters.iter().enumerate() {
        if l.generator() != generator {
            continue;
        }
        if l.is_inverted() {
            out.add_term(BigInt::from(-1), &Word::from_letters(&letters[..=k]));
        } else {
            out.add_term(BigInt::from(1), &Word::from_letters(&letters[..k]));
        }
    }
    out
}

/// `{ φ(γ)^s w ψ(γ)^-s : |γ| ≤ radius }`, `s = -1` forward and `+1`
/// backward, by brute force over reduced `γ`.
pub fn twisted_ball(w: &Word, phi: &Endomorphism, psi: &Endomorphism, radius: usize, forward: bool) -> HashSet<Word> {
    let mut out = HashSet::new();
    for g in all_words(phi.rank(), radius).into_iter().filter(Word::is_reduced) {
        let (p, q) = (phi.apply(&g).unwrap(), psi.apply(&g).unwrap());
        let v = if forward {
            p.inverse().mul(w).mul(&q)
        } else {
            p.mul(w).mul(&q.inverse())
        };
        out.insert(v);
    }
    out
}

/// Whether some `γ` with `|γ| ≤ 2 radius` has `α = φ(γ) β ψ(γ)^-1`.
pub fn reachable(alpha: &Word, beta: &Word, phi: &Endomorphism, psi: &Endomorphism, radius: usize) -> bool {
    let f = twisted_ball(alpha, phi, psi, radius, true);
    let b = twisted_ball(beta, phi, psi, radius, false);
    !f.is_disjoint(&b)
}
