//! Coincidence Reidemeister traces.
//!
//! [`raw_trace`] and [`raw_trace_delta`] evaluate the trace formula in the
//! integral group ring; the result is only meaningful after projecting onto
//! Reidemeister classes, which [`reduce_trace`] does with the decision
//! procedures of [`crate::conjugacy`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::conjugacy::{DecisionConfig, DecisionOutcome, TwistedConjugacy};
use crate::error::Result;
use crate::fox::{delta_derivative, fox_derivative};
use crate::freegroup::{Alphabet, Endomorphism, GroupRingElement, Letter, Word};

/// `1 - Σ_a [∂_a φ(a) + φ(a)ψ(a)^-1 - φ(a) a^-1 i(∂_a ψ(a))]`
pub fn raw_trace(phi: &Endomorphism, psi: &Endomorphism) -> Result<GroupRingElement> {
    phi.ensure_compatible(psi)?;
    let mut out = GroupRingElement::one();
    for a in 0..phi.rank() {
        let (pa, sa) = (phi.image(a), psi.image(a));
        out -= &fox_derivative(a, pa);
        out -= &GroupRingElement::from_word(&pa.mul(&sa.inverse()));
        let twist = pa.mul(&Word::letter(Letter::negative(a)));
        out += &fox_derivative(a, sa).involution().left_mul(&twist);
    }
    Ok(out)
}

/// `1 - Σ_a [∂_a φ(a) - Δ_a ψ(a) + φ(a)ψ(a)^-1]`
pub fn raw_trace_delta(phi: &Endomorphism, psi: &Endomorphism) -> Result<GroupRingElement> {
    phi.ensure_compatible(psi)?;
    let mut out = GroupRingElement::one();
    for a in 0..phi.rank() {
        let (pa, sa) = (phi.image(a), psi.image(a));
        out -= &fox_derivative(a, pa);
        out += &delta_derivative(a, sa);
        out -= &GroupRingElement::from_word(&pa.mul(&sa.inverse()));
    }
    Ok(out)
}

/// `1 - Σ_a ∂_a φ(a)`, the fixed-point trace formula.
pub fn fixed_point_raw(phi: &Endomorphism) -> GroupRingElement {
    let mut out = GroupRingElement::one();
    for a in 0..phi.rank() {
        out -= &fox_derivative(a, phi.image(a));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MergeStatus {
    Resolved,
    PartiallyResolved,
}

impl fmt::Display for MergeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MergeStatus::Resolved => "resolved",
            MergeStatus::PartiallyResolved => "partially resolved",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceTerm {
    pub coefficient: BigInt,
    /// shortlex-least word of the merged group
    pub representative: Word,
}

/// A reduced trace: one term per class found, ordered by representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReidemeisterTrace {
    terms: Vec<TraceTerm>,
    merge_status: MergeStatus,
    /// Term index pairs `(i, j)`, `i < j`, that could be neither merged nor
    /// separated.
    unresolved: Vec<(usize, usize)>,
}

impl ReidemeisterTrace {
    pub fn empty() -> Self {
        ReidemeisterTrace {
            terms: Vec::new(),
            merge_status: MergeStatus::Resolved,
            unresolved: Vec::new(),
        }
    }

    pub fn terms(&self) -> &[TraceTerm] {
        &self.terms
    }

    pub fn merge_status(&self) -> MergeStatus {
        self.merge_status
    }

    pub fn is_resolved(&self) -> bool {
        self.merge_status == MergeStatus::Resolved
    }

    pub fn unresolved_pairs(&self) -> &[(usize, usize)] {
        &self.unresolved
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sorted coefficient multiset.
    pub fn coefficients(&self) -> Vec<BigInt> {
        let mut c: Vec<BigInt> = self.terms.iter().map(|t| t.coefficient.clone()).collect();
        c.sort();
        c
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.iter().map(|t| &t.coefficient).sum()
    }

    /// Back into the group ring, one term per class.
    pub fn to_element(&self) -> GroupRingElement {
        self.terms
            .iter()
            .map(|t| (t.coefficient.clone(), t.representative.clone()))
            .collect()
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> TraceDisplay<'a> {
        TraceDisplay { trace: self, alphabet }
    }
}

pub struct TraceDisplay<'a> {
    trace: &'a ReidemeisterTrace,
    alphabet: &'a Alphabet,
}

impl fmt::Display for TraceDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.trace.is_empty() {
            return f.write_str("0");
        }
        for (k, t) in self.trace.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if k > 0 && t.coefficient.is_positive() {
                f.write_str("+")?;
            }
            write!(f, "{}·[{}]", t.coefficient, self.alphabet.word(&t.representative))?;
        }
        Ok(())
    }
}

/// A single conjugacy decision taken while reducing or comparing traces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairDecision {
    pub left: Word,
    pub right: Word,
    pub outcome: DecisionOutcome,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    /// Keeps the smaller root, so roots are the first index of their class.
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi] = lo;
        }
    }
}

/// Partition of a word list into certified classes.
struct Classification {
    /// class id (root index) of each word
    class_of: Vec<usize>,
    /// root pairs certified distinct
    distinct: Vec<(usize, usize)>,
    decisions: Vec<PairDecision>,
}

impl Classification {
    fn separated(&self, a: usize, b: usize) -> bool {
        let (a, b) = (self.class_of[a], self.class_of[b]);
        let key = (a.min(b), a.max(b));
        self.distinct.contains(&key)
    }
}

/// Decides pairs in index order, skipping pairs whose classes are already
/// merged or already separated.
fn classify(words: &[Word], tc: &TwistedConjugacy) -> Result<Classification> {
    let n = words.len();
    let mut uf = UnionFind::new(n);
    // distinct pairs between current roots
    let mut distinct: Vec<(usize, usize)> = Vec::new();
    let mut decisions = Vec::new();
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    for i in 0..n {
        for j in i + 1..n {
            let (ri, rj) = (uf.find(i), uf.find(j));
            if ri == rj || distinct.contains(&key(ri, rj)) {
                continue;
            }
            let outcome = tc.decide(&words[i], &words[j])?;
            match &outcome {
                DecisionOutcome::Equivalent { .. } => {
                    uf.union(ri, rj);
                    let root = uf.find(ri);
                    let gone = if root == ri { rj } else { ri };
                    distinct = distinct
                        .into_iter()
                        .map(|(a, b)| {
                            let a = if a == gone { root } else { a };
                            let b = if b == gone { root } else { b };
                            key(a, b)
                        })
                        .collect();
                    distinct.sort();
                    distinct.dedup();
                }
                DecisionOutcome::Distinct { .. } => distinct.push(key(ri, rj)),
                DecisionOutcome::Unknown => {}
            }
            decisions.push(PairDecision {
                left: words[i].clone(),
                right: words[j].clone(),
                outcome,
            });
        }
    }
    let class_of = (0..n).map(|i| uf.find(i)).collect();
    Ok(Classification {
        class_of,
        distinct,
        decisions,
    })
}

/// [`reduce_trace`] together with every conjugacy decision it took.
pub fn reduce_trace_logged(
    raw: &GroupRingElement,
    phi: &Endomorphism,
    psi: &Endomorphism,
    config: &DecisionConfig,
) -> Result<(ReidemeisterTrace, Vec<PairDecision>)> {
    reduce_trace_with(raw, &TwistedConjugacy::new(phi, psi, config.clone())?)
}

/// [`reduce_trace_logged`] against a prepared decision procedure, so that
/// several traces of one pair share its quotient data.
pub fn reduce_trace_with(
    raw: &GroupRingElement,
    tc: &TwistedConjugacy,
) -> Result<(ReidemeisterTrace, Vec<PairDecision>)> {
    tc.phi().alphabet().check_element(raw)?;
    let words: Vec<Word> = raw.terms().map(|(w, _)| w.clone()).collect();
    let coeffs: Vec<&BigInt> = raw.terms().map(|(_, c)| c).collect();
    let cls = classify(&words, tc)?;

    // words are in shortlex order, so the first member of a class is its
    // least representative
    let mut groups: BTreeMap<usize, BigInt> = BTreeMap::new();
    for (i, c) in coeffs.iter().enumerate() {
        *groups.entry(cls.class_of[i]).or_insert_with(BigInt::zero) += *c;
    }
    let mut kept: Vec<(usize, TraceTerm)> = groups
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(root, c)| {
            (
                root,
                TraceTerm {
                    coefficient: c,
                    representative: words[root].clone(),
                },
            )
        })
        .collect();
    kept.sort_by(|a, b| a.1.representative.cmp(&b.1.representative));

    let mut unresolved = Vec::new();
    for i in 0..kept.len() {
        for j in i + 1..kept.len() {
            if !cls.separated(kept[i].0, kept[j].0) {
                unresolved.push((i, j));
            }
        }
    }
    let merge_status = if unresolved.is_empty() {
        MergeStatus::Resolved
    } else {
        MergeStatus::PartiallyResolved
    };
    let trace = ReidemeisterTrace {
        terms: kept.into_iter().map(|(_, t)| t).collect(),
        merge_status,
        unresolved,
    };
    Ok((trace, cls.decisions))
}

/// Groups the terms of `raw` into Reidemeister classes of `(φ, ψ)`, summing
/// coefficients of certified-equivalent terms and dropping zero sums. Pairs
/// that are neither merged nor separated mark the result partially resolved.
pub fn reduce_trace(
    raw: &GroupRingElement,
    phi: &Endomorphism,
    psi: &Endomorphism,
    config: &DecisionConfig,
) -> Result<ReidemeisterTrace> {
    reduce_trace_logged(raw, phi, psi, config).map(|(t, _)| t)
}

/// The fixed-point trace of `φ`, as the coincidence trace of `(φ, id)`.
pub fn fixed_point_trace(phi: &Endomorphism, config: &DecisionConfig) -> Result<ReidemeisterTrace> {
    let id = Endomorphism::identity(phi.alphabet().clone());
    reduce_trace(&raw_trace(phi, &id)?, phi, &id, config)
}

/// Largest unresolved group handled by exhaustive partition search.
const EXHAUSTIVE_LIMIT: usize = 10;

/// `(lower, upper)` bounds on the Nielsen number.
///
/// A resolved trace gives its number of terms for both. Otherwise the upper
/// bound is the term count and the lower bound is the fewest nonzero classes
/// over all ways of merging terms whose every pair is unresolved.
pub fn nielsen_bound(t: &ReidemeisterTrace) -> (usize, usize) {
    let n = t.terms.len();
    if t.is_resolved() {
        return (n, n);
    }
    let mut uf = UnionFind::new(n);
    for &(i, j) in &t.unresolved {
        uf.union(i, j);
    }
    let mut components: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        components.entry(uf.find(i)).or_default().push(i);
    }
    let mut lower = 0;
    for members in components.values() {
        lower += if members.len() == 1 {
            1
        } else if members.len() <= EXHAUSTIVE_LIMIT {
            min_nonzero_blocks(t, members)
        } else {
            let sum: BigInt = members.iter().map(|&i| &t.terms[i].coefficient).sum();
            usize::from(!sum.is_zero())
        };
    }
    (lower, n)
}

/// Fewest nonzero-sum blocks over partitions of `members` into blocks whose
/// pairs are all unresolved.
fn min_nonzero_blocks(t: &ReidemeisterTrace, members: &[usize]) -> usize {
    let k = members.len();
    let mergeable = |a: usize, b: usize| {
        let (i, j) = (members[a].min(members[b]), members[a].max(members[b]));
        t.unresolved.contains(&(i, j))
    };
    let mut best = k;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn go(
        pos: usize,
        k: usize,
        blocks: &mut Vec<Vec<usize>>,
        best: &mut usize,
        mergeable: &dyn Fn(usize, usize) -> bool,
        coeff: &dyn Fn(usize) -> BigInt,
    ) {
        if pos == k {
            let nonzero = blocks
                .iter()
                .filter(|b| !b.iter().map(|&m| coeff(m)).sum::<BigInt>().is_zero())
                .count();
            *best = (*best).min(nonzero);
            return;
        }
        for bi in 0..blocks.len() {
            if blocks[bi].iter().all(|&m| mergeable(m, pos)) {
                blocks[bi].push(pos);
                go(pos + 1, k, blocks, best, mergeable, coeff);
                blocks[bi].pop();
            }
        }
        blocks.push(vec![pos]);
        go(pos + 1, k, blocks, best, mergeable, coeff);
        blocks.pop();
    }
    let coeff = |m: usize| t.terms[members[m]].coefficient.clone();
    go(0, k, &mut blocks, &mut best, &mergeable, &coeff);
    best
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Match,
    Mismatch,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// One merged class across two traces, by term index into each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPairing {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub left_sum: BigInt,
    pub right_sum: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceComparison {
    pub verdict: Verdict,
    pub classes: Vec<ClassPairing>,
    /// Pairs of classes with unequal totals that were neither merged nor
    /// separated; zero unless the verdict is inconclusive.
    pub unknown_pairs: usize,
    pub decisions: Vec<PairDecision>,
}

/// Class-by-class comparison of two traces of the same pair `(φ, ψ)`.
///
/// Terms with the same reduced representative are paired first, at no cost.
/// Conjugacy decisions are then taken only between classes whose totals
/// still differ across the two sides, merging along certified
/// equivalences. The traces match when every class carries the same total
/// on both sides. They mismatch when a class with unequal totals is
/// certified distinct from every other such class, since merging it with a
/// balanced class cannot change its difference. Anything else is
/// inconclusive.
pub fn compare_traces(
    left: &ReidemeisterTrace,
    right: &ReidemeisterTrace,
    phi: &Endomorphism,
    psi: &Endomorphism,
    config: &DecisionConfig,
) -> Result<TraceComparison> {
    compare_traces_with(left, right, &TwistedConjugacy::new(phi, psi, config.clone())?)
}

/// [`compare_traces`] against a prepared decision procedure.
pub fn compare_traces_with(
    left: &ReidemeisterTrace,
    right: &ReidemeisterTrace,
    tc: &TwistedConjugacy,
) -> Result<TraceComparison> {
    let nl = left.terms.len();
    let words: Vec<Word> = left
        .terms
        .iter()
        .chain(&right.terms)
        .map(|t| t.representative.reduced())
        .collect();
    let signed: Vec<BigInt> = left
        .terms
        .iter()
        .map(|t| t.coefficient.clone())
        .chain(right.terms.iter().map(|t| -&t.coefficient))
        .collect();
    let n = words.len();
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if words[i] == words[j] {
                uf.union(i, j);
            }
        }
    }

    let mut decisions = Vec::new();
    let mut decided: Vec<(usize, usize)> = Vec::new();
    let mut distinct: Vec<(usize, usize)> = Vec::new();
    let separated = |uf: &mut UnionFind, distinct: &[(usize, usize)], x: usize, y: usize| {
        distinct.iter().any(|&(i, j)| {
            let (ri, rj) = (uf.find(i), uf.find(j));
            (ri, rj) == (x, y) || (ri, rj) == (y, x)
        })
    };
    let unbalanced = |uf: &mut UnionFind| {
        let mut diff: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (i, c) in signed.iter().enumerate() {
            *diff.entry(uf.find(i)).or_insert_with(BigInt::zero) += c;
        }
        diff.into_iter()
            .filter(|(_, d)| !d.is_zero())
            .map(|(r, _)| r)
            .collect::<Vec<_>>()
    };

    loop {
        let open = unbalanced(&mut uf);
        let mut next = None;
        'search: for i in 0..n {
            for j in i + 1..n {
                let (ri, rj) = (uf.find(i), uf.find(j));
                if ri != rj
                    && open.contains(&ri)
                    && open.contains(&rj)
                    && !decided.contains(&(i, j))
                    && !separated(&mut uf, &distinct, ri, rj)
                {
                    next = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((i, j)) = next else { break };
        decided.push((i, j));
        let outcome = tc.decide(&words[i], &words[j])?;
        match &outcome {
            DecisionOutcome::Equivalent { .. } => uf.union(i, j),
            DecisionOutcome::Distinct { .. } => distinct.push((i, j)),
            DecisionOutcome::Unknown => {}
        }
        decisions.push(PairDecision {
            left: words[i].clone(),
            right: words[j].clone(),
            outcome,
        });
    }

    let open = unbalanced(&mut uf);
    let mut unknown_pairs = 0;
    let mut isolated = vec![true; open.len()];
    for x in 0..open.len() {
        for y in x + 1..open.len() {
            if !separated(&mut uf, &distinct, open[x], open[y]) {
                unknown_pairs += 1;
                isolated[x] = false;
                isolated[y] = false;
            }
        }
    }
    let verdict = if open.is_empty() {
        Verdict::Match
    } else if isolated.iter().any(|&b| b) {
        Verdict::Mismatch
    } else {
        Verdict::Inconclusive
    };

    let mut by_root: BTreeMap<usize, ClassPairing> = BTreeMap::new();
    for i in 0..n {
        let entry = by_root.entry(uf.find(i)).or_insert_with(|| ClassPairing {
            left: Vec::new(),
            right: Vec::new(),
            left_sum: BigInt::zero(),
            right_sum: BigInt::zero(),
        });
        if i < nl {
            entry.left.push(i);
            entry.left_sum += &left.terms[i].coefficient;
        } else {
            entry.right.push(i - nl);
            entry.right_sum += &right.terms[i - nl].coefficient;
        }
    }
    Ok(TraceComparison {
        verdict,
        classes: by_root.into_values().collect(),
        unknown_pairs,
        decisions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> (Alphabet, Endomorphism, Endomorphism) {
        let al = Alphabet::new(["a", "b", "c"]).unwrap();
        let phi = Endomorphism::parse(&al, &["a c b^-1", "a b", "b"]).unwrap();
        let psi = Endomorphism::parse(&al, &["a^-1 c b^-1", "c", "b^-1 a"]).unwrap();
        (al, phi, psi)
    }

    fn circle(n: i64, m: i64) -> (Alphabet, Endomorphism, Endomorphism) {
        let al = Alphabet::new(["a"]).unwrap();
        let phi = Endomorphism::new(al.clone(), vec![Word::generator_power(0, n)]).unwrap();
        let psi = Endomorphism::new(al.clone(), vec![Word::generator_power(0, m)]).unwrap();
        (al, phi, psi)
    }

    fn elt(al: &Alphabet, pairs: &[(i64, &str)]) -> GroupRingElement {
        let mut x = GroupRingElement::zero();
        for &(c, s) in pairs {
            x.add_term(BigInt::from(c), &al.parse_word(s).unwrap());
        }
        x
    }

    fn big(k: i64) -> BigInt {
        BigInt::from(k)
    }

    #[test]
    fn circle_raw_traces() {
        let (al, phi, psi) = circle(3, 1);
        assert_eq!(raw_trace(&phi, &psi).unwrap(), elt(&al, &[(-1, "a"), (-1, "a^2")]));
        assert_eq!(
            raw_trace_delta(&phi, &psi).unwrap(),
            elt(&al, &[(1, "1"), (-1, "a"), (-2, "a^2")])
        );
        let (_, id, _) = circle(1, 1);
        assert!(raw_trace(&id, &id).unwrap().is_zero());
        assert!(raw_trace_delta(&id, &id).unwrap().is_zero());
    }

    #[test]
    fn delta_form_for_circles_matches_closed_form() {
        for n in 0..=5 {
            for m in 0..=n {
                let (al, phi, psi) = circle(n, m);
                // 1 - (1 + … + a^{n-1}) + (1 + … + a^{m-1}) - a^{n-m}
                let mut expected = GroupRingElement::one();
                for k in 0..n {
                    expected -= &GroupRingElement::from_word(&Word::generator_power(0, k));
                }
                for k in 0..m {
                    expected += &GroupRingElement::from_word(&Word::generator_power(0, k));
                }
                expected -= &GroupRingElement::from_word(&Word::generator_power(0, n - m));
                assert_eq!(raw_trace_delta(&phi, &psi).unwrap(), expected, "n={n} m={m}");
                let _ = al;
            }
        }
    }

    #[test]
    fn example_raw_traces() {
        let (al, phi, psi) = example();
        assert_eq!(
            raw_trace(&phi, &psi).unwrap(),
            elt(
                &al,
                &[
                    (-1, "a"),
                    (-1, "a^2"),
                    (-1, "a c b^-1"),
                    (-1, "a b c^-1"),
                    (-1, "b a^-1 b")
                ]
            )
        );
        // 1 - (1 + a^-1cb^-1 + a^2) - (a + abc^-1) - ba^-1b
        assert_eq!(
            raw_trace_delta(&phi, &psi).unwrap(),
            elt(
                &al,
                &[
                    (-1, "a"),
                    (-1, "a^2"),
                    (-1, "a^-1 c b^-1"),
                    (-1, "a b c^-1"),
                    (-1, "b a^-1 b")
                ]
            )
        );
    }

    #[test]
    fn identity_twist_reduces_to_fixed_point_formula() {
        let (al, phi, _) = example();
        let id = Endomorphism::identity(al);
        assert_eq!(raw_trace(&phi, &id).unwrap(), fixed_point_raw(&phi));
    }

    #[test]
    fn circle_reduction() {
        let cfg = DecisionConfig::default();
        let (al, phi, psi) = circle(3, 1);
        let t = reduce_trace(&raw_trace(&phi, &psi).unwrap(), &phi, &psi, &cfg).unwrap();
        assert!(t.is_resolved());
        assert_eq!(t.to_element(), elt(&al, &[(-1, "a"), (-1, "a^2")]));
        assert_eq!(nielsen_bound(&t), (2, 2));

        // 1 - a - 2a^2: 1 and a^2 merge, and 1 is the shortlex-least member
        let d = reduce_trace(&raw_trace_delta(&phi, &psi).unwrap(), &phi, &psi, &cfg).unwrap();
        assert!(d.is_resolved());
        assert_eq!(d.to_element(), elt(&al, &[(-1, "1"), (-1, "a")]));
        assert_eq!(
            compare_traces(&t, &d, &phi, &psi, &cfg).unwrap().verdict,
            Verdict::Match
        );
    }

    #[test]
    fn example_reduction() {
        let cfg = DecisionConfig::default();
        let (al, phi, psi) = example();
        let t = reduce_trace(&raw_trace(&phi, &psi).unwrap(), &phi, &psi, &cfg).unwrap();
        assert!(t.is_resolved());
        assert_eq!(t.coefficients(), vec![big(-3), big(-1), big(-1)]);
        assert_eq!(t.to_element(), elt(&al, &[(-1, "a"), (-3, "a^2"), (-1, "a c b^-1")]));
        assert_eq!(nielsen_bound(&t), (3, 3));
        assert_eq!(t.display(&al).to_string(), "-1·[a] -3·[a^2] -1·[a c b^-1]");

        let d = reduce_trace(&raw_trace_delta(&phi, &psi).unwrap(), &phi, &psi, &cfg).unwrap();
        let cmp = compare_traces(&t, &d, &phi, &psi, &cfg).unwrap();
        assert_eq!(cmp.verdict, Verdict::Match);
        assert_eq!(cmp.unknown_pairs, 0);
    }

    #[test]
    fn zero_reduces_to_empty() {
        let (_, phi, psi) = example();
        let t = reduce_trace(&GroupRingElement::zero(), &phi, &psi, &DecisionConfig::default()).unwrap();
        assert_eq!(t, ReidemeisterTrace::empty());
        assert_eq!(nielsen_bound(&t), (0, 0));
        assert_eq!(t.display(phi.alphabet()).to_string(), "0");
    }

    #[test]
    fn degree_two_circle_map() {
        let (al, phi, _) = circle(2, 1);
        let t = fixed_point_trace(&phi, &DecisionConfig::default()).unwrap();
        assert_eq!(t.to_element(), elt(&al, &[(-1, "a")]));
        assert_eq!(nielsen_bound(&t), (1, 1));
        let (_, id, _) = circle(1, 1);
        assert!(fixed_point_trace(&id, &DecisionConfig::default()).unwrap().is_empty());
    }

    #[test]
    fn compare_detects_mismatch() {
        let cfg = DecisionConfig::default();
        let (al, phi, psi) = circle(3, 1);
        let t = reduce_trace(&raw_trace(&phi, &psi).unwrap(), &phi, &psi, &cfg).unwrap();
        let other = reduce_trace(&elt(&al, &[(-2, "a")]), &phi, &psi, &cfg).unwrap();
        let cmp = compare_traces(&t, &other, &phi, &psi, &cfg).unwrap();
        assert_eq!(cmp.verdict, Verdict::Mismatch);
        assert_eq!(
            compare_traces(&t, &t, &phi, &psi, &cfg).unwrap().verdict,
            Verdict::Match
        );
    }

    #[test]
    fn partial_traces_bound_the_nielsen_number() {
        let t = ReidemeisterTrace {
            terms: vec![
                TraceTerm {
                    coefficient: big(1),
                    representative: Word::generator_power(0, 1),
                },
                TraceTerm {
                    coefficient: big(-1),
                    representative: Word::generator_power(0, 2),
                },
                TraceTerm {
                    coefficient: big(2),
                    representative: Word::generator_power(0, 3),
                },
            ],
            merge_status: MergeStatus::PartiallyResolved,
            unresolved: vec![(0, 1), (1, 2)],
        };
        // best: merge 0 and 1 (sum zero), leaving term 2
        assert_eq!(nielsen_bound(&t), (1, 3));
        let t = ReidemeisterTrace {
            unresolved: vec![(0, 2)],
            ..t
        };
        assert_eq!(nielsen_bound(&t), (2, 3));
    }
}
