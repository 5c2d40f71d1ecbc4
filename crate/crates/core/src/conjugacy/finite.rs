//! Separation of twisted classes in finite permutation quotients.
//!
//! For any homomorphism `ρ: F → S` into a finite group, `α = φ(γ) β ψ(γ)^-1`
//! gives `ρ(α) = ρφ(γ) ρ(β) ρψ(γ)^-1`. The pairs `(ρφ(γ), ρψ(γ))` form the
//! subgroup `H ≤ S × S` generated by `(ρφ(x), ρψ(x))` over the generators
//! `x`, so `ρ(α)` and `ρ(β)` lie in one orbit of `H` acting by
//! `s ↦ h₁ s h₂^-1`. Different orbits certify that `α` and `β` are not
//! twisted conjugate.
//!
//! [`exhaustive_separation`] walks every representation into `S_3`, `S_4`,
//! ... up to a budget, following only the orbit of `ρ(α)`.

const MAX_DEGREE: usize = 8;

use crate::freegroup::{Endomorphism, Word};

/// A permutation of `0..degree`, padded with fixed points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Perm([u8; MAX_DEGREE]);

impl Perm {
    fn identity() -> Self {
        let mut p = [0u8; MAX_DEGREE];
        for (i, x) in p.iter_mut().enumerate() {
            *x = i as u8;
        }
        Perm(p)
    }

    /// `self` then `other`
    fn then(&self, other: &Perm) -> Perm {
        let mut p = [0u8; MAX_DEGREE];
        for (x, &s) in p.iter_mut().zip(&self.0) {
            *x = other.0[s as usize];
        }
        Perm(p)
    }

    fn inverse(&self) -> Perm {
        let mut p = [0u8; MAX_DEGREE];
        for (i, &s) in self.0.iter().enumerate() {
            p[s as usize] = i as u8;
        }
        Perm(p)
    }
}

/// All permutations of `0..n`, padded to [`MAX_DEGREE`].
fn all_perms(n: usize) -> Vec<Perm> {
    fn go(n: usize, prefix: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Perm>) {
        if prefix.len() == n {
            let mut p = Perm::identity();
            p.0[..n].copy_from_slice(prefix);
            out.push(p);
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                prefix.push(x as u8);
                go(n, prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut [false; MAX_DEGREE], &mut out);
    out
}

/// One permutation of each cycle type on `0..n`.
fn cycle_type_representatives(n: usize) -> Vec<Perm> {
    fn partitions(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            partitions(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut parts = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut parts);
    parts
        .into_iter()
        .map(|lengths| {
            let mut p = Perm::identity();
            let mut start = 0;
            for k in lengths {
                for i in 0..k {
                    p.0[start + i] = (start + (i + 1) % k) as u8;
                }
                start += k;
            }
            p
        })
        .collect()
}

/// Position of a permutation of `0..n` in lexicographic order.
fn lehmer_rank(p: &Perm, n: usize) -> usize {
    let mut r = 0;
    for i in 0..n {
        let smaller = p.0[i + 1..n].iter().filter(|&&x| x < p.0[i]).count();
        r = r * (n - i) + smaller;
    }
    r
}

fn eval_letters(images: &[Perm], inverses: &[Perm], w: &Word) -> Perm {
    w.letters().iter().fold(Perm::identity(), |acc, l| {
        let g = l.generator();
        acc.then(if l.is_inverted() { &inverses[g] } else { &images[g] })
    })
}

/// Reusable orbit search state for permutations of `0..n`.
struct OrbitScratch {
    n: usize,
    stamp: Vec<u32>,
    generation: u32,
    stack: Vec<Perm>,
}

impl OrbitScratch {
    fn new(n: usize) -> Self {
        let order = (1..=n).product();
        OrbitScratch {
            n,
            stamp: vec![0; order],
            generation: 0,
            stack: Vec::new(),
        }
    }

    /// Whether `target` is outside the orbit of `start` under
    /// `s ↦ a s b` for the given moves.
    fn separates(&mut self, moves: &[(Perm, Perm)], start: Perm, target: Perm) -> bool {
        if start == target {
            return false;
        }
        self.generation += 1;
        let generation = self.generation;
        self.stamp[lehmer_rank(&start, self.n)] = generation;
        self.stack.clear();
        self.stack.push(start);
        while let Some(s) = self.stack.pop() {
            for (a, b) in moves {
                let t = a.then(&s).then(b);
                if t == target {
                    return false;
                }
                let slot = &mut self.stamp[lehmer_rank(&t, self.n)];
                if *slot != generation {
                    *slot = generation;
                    self.stack.push(t);
                }
            }
        }
        true
    }
}

/// Tries every representation `F → S_n` for `n = 3, 4, ...`, up to
/// conjugation in the first generator, while the number of generator tuples
/// stays within `budget`. Returns whether one of them separates `α` from `β`.
pub(crate) fn exhaustive_separation(
    phi: &Endomorphism,
    psi: &Endomorphism,
    alpha: &Word,
    beta: &Word,
    budget: usize,
) -> bool {
    let rank = phi.rank();
    if rank == 0 {
        return false;
    }
    let mut spent = 0usize;
    let mut images = vec![Perm::identity(); rank];
    let mut inverses = vec![Perm::identity(); rank];
    let mut moves = vec![(Perm::identity(), Perm::identity()); rank];
    for n in 3..=MAX_DEGREE {
        let perms = all_perms(n);
        let firsts = cycle_type_representatives(n);
        let tuples = (1..rank).try_fold(firsts.len(), |acc, _| acc.checked_mul(perms.len()));
        match tuples {
            Some(t) if spent + t <= budget => spent += t,
            _ => return false,
        }
        let mut scratch = OrbitScratch::new(n);
        let mut counters = vec![0usize; rank];
        for first in &firsts {
            counters[1..].fill(0);
            loop {
                images[0] = *first;
                for g in 1..rank {
                    images[g] = perms[counters[g]];
                }
                for g in 0..rank {
                    inverses[g] = images[g].inverse();
                }
                for (x, m) in moves.iter_mut().enumerate() {
                    *m = (
                        eval_letters(&images, &inverses, phi.image(x)),
                        eval_letters(&images, &inverses, psi.image(x)).inverse(),
                    );
                }
                let start = eval_letters(&images, &inverses, alpha);
                let target = eval_letters(&images, &inverses, beta);
                if scratch.separates(&moves, start, target) {
                    return true;
                }
                // odometer over the remaining generators
                let mut g = rank;
                loop {
                    g -= 1;
                    if g == 0 {
                        break;
                    }
                    counters[g] += 1;
                    if counters[g] < perms.len() {
                        break;
                    }
                    counters[g] = 0;
                }
                if g == 0 {
                    break;
                }
            }
        }
    }
    false
}
