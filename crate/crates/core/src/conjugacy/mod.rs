//! Doubly twisted conjugacy: `α ~ β` iff `α = φ(γ) β ψ(γ)^-1` for some `γ`.
//!
//! The relation is only semi-decidable with the tools here, so every decision
//! is three-valued:
//!
//! * [`DecisionOutcome::Equivalent`] carries a witness `γ` that has been
//!   checked in the free group;
//! * [`DecisionOutcome::Distinct`] means the images of `α` and `β` are not
//!   twisted conjugate in the abelianization (level 1), in the free
//!   nilpotent quotient of class 2 (level 2), or in some finite permutation
//!   quotient, which rules out any witness;
//! * [`DecisionOutcome::Unknown`] means neither was established.

mod finite;
mod nil2;
mod smith;
mod witness;

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

pub use nil2::{commutator_count, commutator_index, Nil2Element, Nil2Endo};
pub use smith::{smith_normal_form, solve_integer_system, AffineLattice, IntMatrix, SmithForm};
pub use witness::verify_witness;

use crate::error::Result;
use crate::freegroup::{Endomorphism, Word};

/// Which quotient certified that two elements are in different classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuotientLevel {
    Abelian,
    Nilpotent2,
    /// a homomorphism onto a finite permutation group
    Finite,
}

impl QuotientLevel {
    /// `1`, `2`, or `finite`.
    pub fn label(self) -> &'static str {
        match self {
            QuotientLevel::Abelian => "1",
            QuotientLevel::Nilpotent2 => "2",
            QuotientLevel::Finite => "finite",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DecisionOutcome {
    Equivalent { witness: Word },
    Distinct { level: QuotientLevel },
    Unknown,
}

impl DecisionOutcome {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, DecisionOutcome::Equivalent { .. })
    }

    pub fn is_distinct(&self) -> bool {
        matches!(self, DecisionOutcome::Distinct { .. })
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, DecisionOutcome::Unknown)
    }
}

impl fmt::Display for DecisionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecisionOutcome::Equivalent { witness } => write!(f, "equivalent (witness {witness})"),
            DecisionOutcome::Distinct { level } => write!(f, "distinct (level {})", level.label()),
            DecisionOutcome::Unknown => f.write_str("unknown"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecisionConfig {
    /// Longest `γ` tried by the witness search.
    pub max_witness_len: usize,
    /// Deepest nilpotent quotient consulted: `Abelian` or `Nilpotent2`.
    pub nilpotent_level: QuotientLevel,
    /// Budget, in generator tuples, for the search over representations
    /// into small symmetric groups that runs when the witness search fails;
    /// `0` disables it.
    pub finite_tuples: usize,
    /// Half-width of the fallback box `[-b, b]^k` for the class-2 scan.
    pub fallback_box: i64,
    /// Largest number of lattice points a complete periodic scan may visit.
    pub max_scan_points: u64,
}

impl Default for DecisionConfig {
    fn default() -> Self {
        DecisionConfig {
            max_witness_len: 6,
            nilpotent_level: QuotientLevel::Nilpotent2,
            finite_tuples: 4_000,
            fallback_box: 3,
            max_scan_points: 1 << 20,
        }
    }
}

/// Abelianization of an endomorphism: column `j` is the exponent-sum vector
/// of the image of generator `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianizedEndo {
    pub matrix: IntMatrix,
}

pub fn abelianize_endo(e: &Endomorphism) -> AbelianizedEndo {
    AbelianizedEndo {
        matrix: IntMatrix::from_columns(e.rank(), &e.abelianized_columns()),
    }
}

/// Result of the class-2 analysis, before it is collapsed to a
/// [`DecisionOutcome`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nil2Verdict {
    /// No solution even in the abelianization.
    AbelianUnsolvable,
    /// No `γ` in the class-2 quotient solves the equation.
    Unsolvable,
    /// `γ` solves the equation in the class-2 quotient.
    Solvable { gamma: Nil2Element },
    /// The scan was not exhaustive and found nothing.
    Inconclusive,
}

/// Twisted-conjugacy decisions for a fixed pair `(φ, ψ)`.
///
/// Full decisions are memoized per ordered pair of reduced words.
#[derive(Debug)]
pub struct TwistedConjugacy {
    phi: Endomorphism,
    psi: Endomorphism,
    config: DecisionConfig,
    /// `Φ - Ψ` on exponent vectors
    abelian_difference: IntMatrix,
    nil_phi: Option<Nil2Endo>,
    nil_psi: Option<Nil2Endo>,
    memo: Mutex<HashMap<(Word, Word), DecisionOutcome>>,
}

impl TwistedConjugacy {
    pub fn new(phi: &Endomorphism, psi: &Endomorphism, config: DecisionConfig) -> Result<Self> {
        phi.ensure_compatible(psi)?;
        let abelian_difference = abelianize_endo(phi).matrix.checked_sub(&abelianize_endo(psi).matrix)?;
        // overflow here only disables the class-2 level
        let nil_phi = Nil2Endo::new(phi).ok();
        let nil_psi = Nil2Endo::new(psi).ok();
        Ok(TwistedConjugacy {
            phi: phi.clone(),
            psi: psi.clone(),
            config,
            abelian_difference,
            nil_phi,
            nil_psi,
            memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn phi(&self) -> &Endomorphism {
        &self.phi
    }

    pub fn psi(&self) -> &Endomorphism {
        &self.psi
    }

    pub fn config(&self) -> &DecisionConfig {
        &self.config
    }

    fn check(&self, alpha: &Word, beta: &Word) -> Result<()> {
        self.phi.alphabet().check_word(alpha)?;
        self.phi.alphabet().check_word(beta)
    }

    /// Integer solutions `g` of `(Φ - Ψ) g = ab(α) - ab(β)`.
    pub fn abelian_solutions(&self, alpha: &Word, beta: &Word) -> Result<Option<AffineLattice>> {
        self.check(alpha, beta)?;
        let n = self.phi.rank();
        let rhs: Vec<i64> = alpha
            .exponent_sums(n)
            .iter()
            .zip(beta.exponent_sums(n))
            .map(|(a, b)| a - b)
            .collect();
        solve_integer_system(&self.abelian_difference, &rhs)
    }

    /// `Distinct{1}` when the abelian equation has no integer solution,
    /// otherwise `Unknown`.
    pub fn decide_abelian(&self, alpha: &Word, beta: &Word) -> Result<DecisionOutcome> {
        Ok(match self.abelian_solutions(alpha, beta) {
            Ok(None) => DecisionOutcome::Distinct {
                level: QuotientLevel::Abelian,
            },
            Ok(Some(_)) => DecisionOutcome::Unknown,
            Err(crate::Error::Overflow(_)) => DecisionOutcome::Unknown,
            Err(e) => return Err(e),
        })
    }

    /// Class-2 decision collapsed to an outcome: `Distinct{2}` only when the
    /// class-2 equation is certified unsolvable.
    pub fn decide_nilpotent2(&self, alpha: &Word, beta: &Word) -> Result<DecisionOutcome> {
        Ok(match self.nilpotent2_verdict(alpha, beta)? {
            Nil2Verdict::AbelianUnsolvable => DecisionOutcome::Distinct {
                level: QuotientLevel::Abelian,
            },
            Nil2Verdict::Unsolvable => DecisionOutcome::Distinct {
                level: QuotientLevel::Nilpotent2,
            },
            Nil2Verdict::Solvable { .. } | Nil2Verdict::Inconclusive => DecisionOutcome::Unknown,
        })
    }

    /// Solves `ᾱ = φ̄(γ) β̄ ψ̄(γ)^-1` over the class-2 quotient.
    ///
    /// Writing `γ = (g, h)`, the linear part forces `g = g₀ + B t` on the
    /// abelian solution lattice. The commutator part then reads
    /// `M₂ h = c(α) - F(t)` with `M₂ = Λ²Φ - Λ²Ψ` and `F(t)` the commutator
    /// part of `φ̄(g, 0) β̄ ψ̄(g, 0)^-1`, an integer-valued quadratic in `t`.
    /// With `U M₂ V = diag(d)`, solvability at `t` is: `(U r)_i ≡ 0 mod d_i`
    /// on torsion rows and `(U r)_i = 0` on free rows, `r = c(α) - F(t)`.
    ///
    /// Free rows are examined as quadratics in `t` (identically zero rows
    /// drop out, nonzero constant rows certify unsolvability). Torsion rows
    /// are periodic in each `t_k` with period `P = e` (odd `e`) or `2e`, where
    /// `e` is the largest `d_i`, so scanning `[0, P)^k` is exhaustive.
    /// Otherwise a bounded box is scanned and a miss is inconclusive.
    pub fn nilpotent2_verdict(&self, alpha: &Word, beta: &Word) -> Result<Nil2Verdict> {
        let lattice = match self.abelian_solutions(alpha, beta) {
            Ok(Some(l)) => l,
            Ok(None) => return Ok(Nil2Verdict::AbelianUnsolvable),
            Err(crate::Error::Overflow(_)) => return Ok(Nil2Verdict::Inconclusive),
            Err(e) => return Err(e),
        };
        match self.nilpotent2_scan(alpha, beta, &lattice) {
            Ok(v) => Ok(v),
            Err(crate::Error::Overflow(_)) => Ok(Nil2Verdict::Inconclusive),
            Err(e) => Err(e),
        }
    }

    fn nilpotent2_scan(&self, alpha: &Word, beta: &Word, lattice: &AffineLattice) -> Result<Nil2Verdict> {
        let n = self.phi.rank();
        let (Some(nphi), Some(npsi)) = (&self.nil_phi, &self.nil_psi) else {
            return Ok(Nil2Verdict::Inconclusive);
        };
        let target = Nil2Element::embed(alpha, n)?;
        let beta_bar = Nil2Element::embed(beta, n)?;
        let k = lattice.kernel.len();

        if n < 2 {
            // no commutators: the class-2 quotient is the abelianization
            let g = lattice.point(&vec![0; k])?;
            return Ok(Nil2Verdict::Solvable {
                gamma: Nil2Element { v: g, c: Vec::new() },
            });
        }

        let m2 = nphi.commutator_matrix().checked_sub(&npsi.commutator_matrix())?;
        let snf = smith_normal_form(&m2)?;
        let diag = snf.diagonal();

        // U (c(α) - F(t)) for the lattice point t
        let residual = |t: &[i64]| -> Result<(Vec<i64>, Vec<i64>)> {
            let g = lattice.point(t)?;
            let x = nphi
                .apply_vector(&g)?
                .mul(&beta_bar)?
                .mul(&npsi.apply_vector(&g)?.inverse()?)?;
            debug_assert_eq!(x.v, target.v);
            let r: Vec<i64> = target
                .c
                .iter()
                .zip(&x.c)
                .map(|(a, b)| a.checked_sub(*b).ok_or(crate::Error::Overflow("residual")))
                .collect::<Result<_>>()?;
            Ok((g, snf.u.checked_mul_vec(&r)?))
        };
        let satisfied = |y: &[i64]| {
            y.iter()
                .zip(&diag)
                .all(|(&yi, &d)| if d == 0 { yi == 0 } else { yi % d == 0 })
        };
        let solution = |g: Vec<i64>, y: &[i64]| -> Result<Nil2Verdict> {
            let z: Vec<i64> = y
                .iter()
                .zip(&diag)
                .map(|(&yi, &d)| if d == 0 { 0 } else { yi / d })
                .collect();
            let h = snf.v.checked_mul_vec(&z)?;
            Ok(Nil2Verdict::Solvable {
                gamma: Nil2Element { v: g, c: h },
            })
        };

        // Free rows as quadratics in t, probed at 0, e_a, 2e_a, e_a + e_b.
        let free_rows: Vec<usize> = (0..diag.len()).filter(|&i| diag[i] == 0).collect();
        let mut probes: Vec<Vec<i64>> = vec![vec![0; k]];
        for a in 0..k {
            for s in [1, 2] {
                let mut t = vec![0; k];
                t[a] = s;
                probes.push(t);
            }
            for b in a + 1..k {
                let mut t = vec![0; k];
                t[a] = 1;
                t[b] = 1;
                probes.push(t);
            }
        }
        let mut free_rows_vanish = true;
        if !free_rows.is_empty() {
            let values: Vec<Vec<i64>> = probes
                .iter()
                .map(|t| residual(t).map(|(_, y)| free_rows.iter().map(|&i| y[i]).collect()))
                .collect::<Result<_>>()?;
            for (col, _) in free_rows.iter().enumerate() {
                let first = values[0][col];
                let constant = values.iter().all(|v| v[col] == first);
                if constant && first != 0 {
                    return Ok(Nil2Verdict::Unsolvable);
                }
                if !constant {
                    free_rows_vanish = false;
                }
            }
        }

        let e = diag.iter().copied().filter(|&d| d > 1).max().unwrap_or(1);
        let period = if e % 2 == 1 { e } else { 2 * e };
        let points = (period as u64).checked_pow(k as u32).unwrap_or(u64::MAX);

        if free_rows_vanish && points <= self.config.max_scan_points {
            let mut hit = None;
            for_each_point(k, 0, period, |t| {
                let (g, y) = residual(t)?;
                if satisfied(&y) {
                    hit = Some((g, y));
                    return Ok(false);
                }
                Ok(true)
            })?;
            return match hit {
                Some((g, y)) => solution(g, &y),
                None => Ok(Nil2Verdict::Unsolvable),
            };
        }

        let b = self.config.fallback_box;
        let mut hit = None;
        for_each_point(k, -b, b + 1, |t| {
            let (g, y) = residual(t)?;
            if satisfied(&y) {
                hit = Some((g, y));
                return Ok(false);
            }
            Ok(true)
        })?;
        match hit {
            Some((g, y)) => solution(g, &y),
            None => Ok(Nil2Verdict::Inconclusive),
        }
    }

    /// `Distinct` at the finite level when some representation into a
    /// small symmetric group separates the two words, within the
    /// configured budget; otherwise `Unknown`.
    pub fn decide_finite(&self, alpha: &Word, beta: &Word) -> Result<DecisionOutcome> {
        self.check(alpha, beta)?;
        let budget = self.config.finite_tuples;
        Ok(
            if budget > 0 && finite::exhaustive_separation(&self.phi, &self.psi, alpha, beta, budget) {
                DecisionOutcome::Distinct {
                    level: QuotientLevel::Finite,
                }
            } else {
                DecisionOutcome::Unknown
            },
        )
    }

    /// Shortlex-first witness of length at most `max_len`.
    pub fn find_witness(&self, alpha: &Word, beta: &Word, max_len: usize) -> Result<Option<Word>> {
        self.check(alpha, beta)?;
        Ok(witness::search(alpha, beta, &self.phi, &self.psi, max_len))
    }

    /// Full escalation: syntactic equality, abelian quotient, class-2
    /// quotient, witness search, then finite quotients.
    pub fn decide(&self, alpha: &Word, beta: &Word) -> Result<DecisionOutcome> {
        self.check(alpha, beta)?;
        let key = (alpha.reduced(), beta.reduced());
        if let Some(hit) = self.memo.lock().unwrap_or_else(|e| e.into_inner()).get(&key) {
            return Ok(hit.clone());
        }
        let outcome = self.decide_uncached(&key.0, &key.1)?;
        self.memo
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .insert(key, outcome.clone());
        Ok(outcome)
    }

    fn decide_uncached(&self, alpha: &Word, beta: &Word) -> Result<DecisionOutcome> {
        if alpha.reduced() == beta.reduced() {
            return Ok(DecisionOutcome::Equivalent {
                witness: Word::identity(),
            });
        }
        let outcome = match self.config.nilpotent_level {
            QuotientLevel::Abelian => self.decide_abelian(alpha, beta)?,
            _ => self.decide_nilpotent2(alpha, beta)?,
        };
        if outcome.is_distinct() {
            return Ok(outcome);
        }
        if let Some(witness) = witness::search(alpha, beta, &self.phi, &self.psi, self.config.max_witness_len) {
            return Ok(DecisionOutcome::Equivalent { witness });
        }
        self.decide_finite(alpha, beta)
    }
}

/// Visits every point of `[lo, hi)^k` in lexicographic order until `visit`
/// returns `false`.
fn for_each_point(k: usize, lo: i64, hi: i64, mut visit: impl FnMut(&[i64]) -> Result<bool>) -> Result<()> {
    if lo >= hi && k > 0 {
        return Ok(());
    }
    let mut t = vec![lo; k];
    loop {
        if !visit(&t)? {
            return Ok(());
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            t[pos] += 1;
            if t[pos] < hi {
                break;
            }
            t[pos] = lo;
        }
    }
}

/// One-shot form of [`TwistedConjugacy::decide_abelian`].
pub fn decide_abelian(alpha: &Word, beta: &Word, phi: &Endomorphism, psi: &Endomorphism) -> Result<DecisionOutcome> {
    TwistedConjugacy::new(phi, psi, DecisionConfig::default())?.decide_abelian(alpha, beta)
}

/// One-shot form of [`TwistedConjugacy::decide_nilpotent2`].
pub fn decide_nilpotent2(
    alpha: &Word,
    beta: &Word,
    phi: &Endomorphism,
    psi: &Endomorphism,
    config: &DecisionConfig,
) -> Result<DecisionOutcome> {
    TwistedConjugacy::new(phi, psi, config.clone())?.decide_nilpotent2(alpha, beta)
}

/// One-shot form of [`TwistedConjugacy::find_witness`].
pub fn find_witness(
    alpha: &Word,
    beta: &Word,
    phi: &Endomorphism,
    psi: &Endomorphism,
    max_len: usize,
) -> Result<Option<Word>> {
    TwistedConjugacy::new(phi, psi, DecisionConfig::default())?.find_witness(alpha, beta, max_len)
}

/// One-shot form of [`TwistedConjugacy::decide`].
pub fn decide(
    alpha: &Word,
    beta: &Word,
    phi: &Endomorphism,
    psi: &Endomorphism,
    config: &DecisionConfig,
) -> Result<DecisionOutcome> {
    TwistedConjugacy::new(phi, psi, config.clone())?.decide(alpha, beta)
}
