use crate::freegroup::{Endomorphism, Letter, Word};

/// All letters of a rank-`n` alphabet in shortlex letter order:
/// `x_1, x_1^-1, x_2, x_2^-1, …`.
pub(crate) fn letters_in_order(rank: usize) -> Vec<Letter> {
    (0..rank)
        .flat_map(|g| [Letter::positive(g), Letter::negative(g)])
        .collect()
}

/// `φ(γ) β ψ(γ)^-1 == α` in the free group.
pub fn verify_witness(alpha: &Word, beta: &Word, phi: &Endomorphism, psi: &Endomorphism, gamma: &Word) -> bool {
    let lhs = phi
        .apply_unchecked(gamma)
        .mul(beta)
        .mul(&psi.apply_unchecked(gamma).inverse());
    lhs == alpha.reduced()
}

/// Breadth-first search over reduced `γ` of length `≤ max_len` in shortlex
/// order, returning the first with `φ(γ) β ψ(γ)^-1 = α`.
///
/// Tracks `T(γ) = φ(γ)^-1 α ψ(γ)` incrementally, since
/// `T(γx) = φ(x)^-1 T(γ) ψ(x)`, and stops when `T(γ) = β`.
pub(crate) fn search(
    alpha: &Word,
    beta: &Word,
    phi: &Endomorphism,
    psi: &Endomorphism,
    max_len: usize,
) -> Option<Word> {
    let beta = beta.reduced();
    let start = alpha.reduced();
    if start == beta {
        return Some(Word::identity());
    }
    let letters = letters_in_order(phi.rank());
    let steps: Vec<(Letter, Word, Word)> = letters
        .iter()
        .map(|&x| (x, phi.apply_letter(x).inverse(), psi.apply_letter(x)))
        .collect();

    let mut frontier: Vec<(Word, Word)> = vec![(Word::identity(), start)];
    for depth in 1..=max_len {
        let last_level = depth == max_len;
        let mut next = Vec::with_capacity(if last_level {
            0
        } else {
            frontier.len() * 2 * letters.len()
        });
        for (gamma, t) in &frontier {
            for (x, phi_inv, psi_x) in &steps {
                if gamma.last().is_some_and(|l| l.cancels(*x)) {
                    continue;
                }
                let t_next = phi_inv.mul(t).mul(psi_x);
                let mut g_next = gamma.clone();
                g_next.push(*x);
                if t_next == beta {
                    return Some(g_next);
                }
                if !last_level {
                    next.push((g_next, t_next));
                }
            }
        }
        frontier = next;
    }
    None
}
