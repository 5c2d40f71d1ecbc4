//! Fox derivatives and their right-handed counterpart.
//!
//! For a generator `x`:
//!
//! * `∂_x` is the additive map with `∂_x 1 = 0`, `∂_x y = δ(x, y)` and
//!   `∂_x(uv) = ∂_x u + u ∂_x v`;
//! * `Δ_x` is the additive map with `Δ_x 1 = 0`, `Δ_x y = δ(x, y)` and
//!   `Δ_x(uv) = (Δ_x u) v + Δ_x v`.
//!
//! Both accept unreduced words; the result depends only on the group element.
//! They are related by `Δ_x w = x^-1 · i(∂_x w) · w`, with `i` the involution.

use num_bigint::BigInt;
use num_traits::One;

use crate::freegroup::{GroupRingElement, Letter, Word};

/// `∂w/∂x_generator = Σ_k h_1…h_{k-1} · ∂h_k` over the letters `h_k` of `w`.
pub fn fox_derivative(generator: usize, w: &Word) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix = Word::identity();
    for &h in w.letters() {
        if h.generator() == generator {
            if h.is_inverted() {
                // ∂ x^-1 = -x^-1
                let mut t = prefix.clone();
                t.push_reducing(h);
                out.add_reduced_term(-BigInt::one(), t);
            } else {
                out.add_reduced_term(BigInt::one(), prefix.clone());
            }
        }
        prefix.push_reducing(h);
    }
    out
}

/// `Δw/Δx_generator = Σ_k (Δh_k) · h_{k+1}…h_n` over the letters of `w`.
///
/// `Δ x = 1` and `Δ x^-1 = -x^-1`; the latter is forced by
/// `0 = Δ(x x^-1) = (Δx) x^-1 + Δ x^-1`.
pub fn delta_derivative(generator: usize, w: &Word) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    // reduced suffix h_{k+1}…h_n, stored reversed so prepending is a push
    let mut suffix_rev: Vec<Letter> = Vec::new();
    let suffix_word = |rev: &[Letter]| Word::from_letters(rev.iter().rev().copied().collect::<Vec<_>>());
    for &h in w.letters().iter().rev() {
        if h.generator() == generator {
            if h.is_inverted() {
                let mut rev = suffix_rev.clone();
                prepend_reducing(&mut rev, h);
                out.add_reduced_term(-BigInt::one(), suffix_word(&rev));
            } else {
                out.add_reduced_term(BigInt::one(), suffix_word(&suffix_rev));
            }
        }
        prepend_reducing(&mut suffix_rev, h);
    }
    out
}

fn prepend_reducing(rev: &mut Vec<Letter>, h: Letter) {
    match rev.last() {
        Some(&top) if top.cancels(h) => {
            rev.pop();
        }
        _ => rev.push(h),
    }
}

/// The matrix of Fox derivatives: entry `[i][j] = ∂_{x_i} w_j`.
pub fn fox_jacobian(words: &[Word], rank: usize) -> Vec<Vec<GroupRingElement>> {
    (0..rank)
        .map(|i| words.iter().map(|w| fox_derivative(i, w)).collect())
        .collect()
}

/// The matrix of reversed derivatives: entry `[i][j] = Δ_{x_i} w_j`.
pub fn delta_jacobian(words: &[Word], rank: usize) -> Vec<Vec<GroupRingElement>> {
    (0..rank)
        .map(|i| words.iter().map(|w| delta_derivative(i, w)).collect())
        .collect()
}
