//! Geometric evaluation of the coincidence Reidemeister trace.
//!
//! A pair of endomorphisms is realised by a *regular pair* of piecewise
//! affine maps `f, g` of the bouquet, each circle parameterised by `[0, 1)`
//! with the wedge point at `0`. Every coincidence point is found exactly
//! with rational arithmetic, given its index (the sign of the slope
//! difference) and its Reidemeister class word, and the signed sum is the
//! trace. It agrees with [`crate::trace::raw_trace`] term for term.
//!
//! Construction on the circle `|a|`, from the unreduced words
//! `u_a = φ(a) a^-1 a` and `v_a = a a^-1 ψ(a) a^-1 a` of lengths `n` and `m`:
//!
//! * `g`: `(0, 1/2)` labelled by the first letter of `v_a`, then `m - 1`
//!   equal intervals over `(1/2, 1)` carrying the remaining letters;
//! * `f`: `(0, ε)` constant, `n - 1` equal intervals over `(ε, 1/2 - ε)`
//!   carrying all letters of `u_a` but the last, `(1/2 - ε, 1/2 + ε)`
//!   constant, `(1/2 + ε, 1 - ε)` carrying the last letter, `(1 - ε, 1)`
//!   constant.
//!
//! An interval labelled `x` maps affinely onto the circle `|x|`, forwards
//! for a generator and backwards for an inverse.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::freegroup::{Alphabet, Endomorphism, GroupRingElement, Letter, Word};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledInterval {
    pub circle: usize,
    pub lo: BigRational,
    pub hi: BigRational,
    /// `None` for the trivial label: the map is constant at the wedge point
    pub label: Option<Letter>,
}

impl LabeledInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo < x && x < &self.hi
    }

    /// Position on the target circle at `x`.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let l = self.label?;
        Some(if l.is_inverted() {
            (&self.hi - x) / self.width()
        } else {
            (x - &self.lo) / self.width()
        })
    }

    /// Derivative of the restriction: `±1/w`, zero on trivial intervals.
    pub fn slope(&self) -> BigRational {
        match self.label {
            None => BigRational::zero(),
            Some(l) if l.is_inverted() => -self.width().recip(),
            Some(_) => self.width().recip(),
        }
    }
}

/// Per-circle interval partitions of `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularMap {
    circles: Vec<Vec<LabeledInterval>>,
}

impl RegularMap {
    pub fn circles(&self) -> &[Vec<LabeledInterval>] {
        &self.circles
    }

    pub fn intervals(&self, circle: usize) -> &[LabeledInterval] {
        &self.circles[circle]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularPair {
    f: RegularMap,
    g: RegularMap,
    epsilon: BigRational,
    u: Vec<Word>,
    v: Vec<Word>,
}

impl RegularPair {
    pub fn f(&self) -> &RegularMap {
        &self.f
    }

    pub fn g(&self) -> &RegularMap {
        &self.g
    }

    pub fn epsilon(&self) -> &BigRational {
        &self.epsilon
    }

    /// The unreduced word `u_a` driving `f` on circle `a`.
    pub fn u(&self, circle: usize) -> &Word {
        &self.u[circle]
    }

    /// The unreduced word `v_a` driving `g` on circle `a`.
    pub fn v(&self, circle: usize) -> &Word {
        &self.v[circle]
    }

    pub fn rank(&self) -> usize {
        self.u.len()
    }

    /// Line-oriented dump: `<circle> <map> <lo> <hi> <label>` per interval.
    pub fn interval_table(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        for (map, name) in [(&self.f, "f"), (&self.g, "g")] {
            for (c, ivs) in map.circles.iter().enumerate() {
                for iv in ivs {
                    let label = match iv.label {
                        Some(l) => alphabet.word(&Word::letter(l)).to_string(),
                        None => "1".to_string(),
                    };
                    let _ = writeln!(out, "{} {} {} {} {}", alphabet.name(c), name, iv.lo, iv.hi, label);
                }
            }
        }
        out
    }
}

/// `u_a = φ(a) a^-1 a`, unreduced.
pub fn padded_phi_word(phi: &Endomorphism, a: usize) -> Word {
    phi.image(a)
        .concat(&Word::from_letters([Letter::negative(a), Letter::positive(a)]))
}

/// `v_a = a a^-1 ψ(a) a^-1 a`, unreduced.
pub fn padded_psi_word(psi: &Endomorphism, a: usize) -> Word {
    Word::from_letters([Letter::positive(a), Letter::negative(a)])
        .concat(psi.image(a))
        .concat(&Word::from_letters([Letter::negative(a), Letter::positive(a)]))
}

/// Exclusive upper bound on admissible `ε`: `1/(4 max n_a)`, tightened to
/// the narrowest `g` interval `1/(2(m_a - 1))` so that no `g` breakpoint
/// other than `1/2` falls in a constant zone of `f`.
pub fn epsilon_bound(phi: &Endomorphism, psi: &Endomorphism) -> Result<BigRational> {
    phi.ensure_compatible(psi)?;
    let mut bound: Option<BigRational> = None;
    for a in 0..phi.rank() {
        let n = padded_phi_word(phi, a).len() as i64;
        let m = padded_psi_word(psi, a).len() as i64;
        for b in [rat(1, 4 * n), rat(1, 2 * (m - 1))] {
            bound = Some(match bound {
                Some(c) if c <= b => c,
                _ => b,
            });
        }
    }
    Ok(bound.unwrap_or_else(|| rat(1, 4)))
}

/// `1/(8 (k + 2))` with `k` the longest padded word.
pub fn default_epsilon(phi: &Endomorphism, psi: &Endomorphism) -> Result<BigRational> {
    phi.ensure_compatible(psi)?;
    let k = (0..phi.rank())
        .map(|a| padded_phi_word(phi, a).len().max(padded_psi_word(psi, a).len()))
        .max()
        .unwrap_or(0) as i64;
    Ok(rat(1, 8 * (k + 2)))
}

fn even_split(circle: usize, lo: &BigRational, hi: &BigRational, labels: &[Letter]) -> Vec<LabeledInterval> {
    let k = labels.len() as i64;
    let step = (hi - lo) / BigInt::from(k);
    labels
        .iter()
        .enumerate()
        .map(|(i, &l)| {
            let a = lo + &step * BigInt::from(i as i64);
            let b = if i as i64 == k - 1 { hi.clone() } else { &a + &step };
            LabeledInterval {
                circle,
                lo: a,
                hi: b,
                label: Some(l),
            }
        })
        .collect()
}

pub fn build_regular_pair(phi: &Endomorphism, psi: &Endomorphism, epsilon: &BigRational) -> Result<RegularPair> {
    let bound = epsilon_bound(phi, psi)?;
    if !epsilon.is_positive() || epsilon >= &bound {
        return Err(Error::EpsilonOutOfRange {
            epsilon: epsilon.to_string(),
            bound: bound.to_string(),
        });
    }
    let eps = epsilon.clone();
    let half = rat(1, 2);
    let one = BigRational::one();
    let zero = BigRational::zero();
    let (mut fc, mut gc, mut us, mut vs) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for a in 0..phi.rank() {
        let u = padded_phi_word(phi, a);
        let v = padded_psi_word(psi, a);
        let (ul, vl) = (u.letters(), v.letters());
        let n = ul.len();

        let trivial = |lo: &BigRational, hi: &BigRational| LabeledInterval {
            circle: a,
            lo: lo.clone(),
            hi: hi.clone(),
            label: None,
        };
        let mut f = vec![trivial(&zero, &eps)];
        f.extend(even_split(a, &eps, &(&half - &eps), &ul[..n - 1]));
        f.push(trivial(&(&half - &eps), &(&half + &eps)));
        f.push(LabeledInterval {
            circle: a,
            lo: &half + &eps,
            hi: &one - &eps,
            label: Some(ul[n - 1]),
        });
        f.push(trivial(&(&one - &eps), &one));

        let mut g = vec![LabeledInterval {
            circle: a,
            lo: zero.clone(),
            hi: half.clone(),
            label: Some(vl[0]),
        }];
        g.extend(even_split(a, &half, &one, &vl[1..]));

        fc.push(f);
        gc.push(g);
        us.push(u);
        vs.push(v);
    }
    Ok(RegularPair {
        f: RegularMap { circles: fc },
        g: RegularMap { circles: gc },
        epsilon: eps,
        u: us,
        v: vs,
    })
}

/// Where a coincidence point came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoincidenceSource {
    /// the wedge point, with index `+1`
    Wedge,
    /// the interior of `f`'s interval `f_interval` and `g`'s `g_interval`
    Intervals { f_interval: usize, g_interval: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoincidencePoint {
    pub circle: usize,
    pub coordinate: BigRational,
    pub index: i32,
    pub class_word: Word,
    pub source: CoincidenceSource,
}

/// Position of the letter carried by `f`'s interval `k` within `u_a`
/// (1-based), if non-trivial.
fn f_letter_position(n: usize, k: usize) -> Option<usize> {
    match k {
        0 => None,
        k if k < n => Some(k),
        k if k == n => None,
        k if k == n + 1 => Some(n),
        _ => None,
    }
}

/// Every isolated coincidence point of the pair except those inside `f`'s
/// constant interval around `1/2` (whose total index is zero), in circle
/// then coordinate order; the wedge point comes first.
pub fn enumerate_coincidences(p: &RegularPair) -> Vec<CoincidencePoint> {
    let mut out = vec![CoincidencePoint {
        circle: 0,
        coordinate: BigRational::zero(),
        index: 1,
        class_word: Word::identity(),
        source: CoincidenceSource::Wedge,
    }];
    for a in 0..p.rank() {
        let (u, v) = (&p.u[a], &p.v[a]);
        let n = u.len();
        let mut points = Vec::new();
        for (fi, fiv) in p.f.circles[a].iter().enumerate() {
            let Some(h) = fiv.label else { continue };
            let i = f_letter_position(n, fi).expect("labelled f interval");
            for (gj, giv) in p.g.circles[a].iter().enumerate() {
                let l = giv.label.expect("g intervals are labelled");
                if l.generator() != h.generator() {
                    continue;
                }
                let lo = (&fiv.lo).max(&giv.lo);
                let hi = (&fiv.hi).min(&giv.hi);
                if lo >= hi {
                    continue;
                }
                let (sf, sg) = (fiv.slope(), giv.slope());
                if sf == sg {
                    continue;
                }
                // f(x) = f(lo) + sf (x - lo), likewise g
                let flo = fiv.eval(lo).expect("labelled");
                let glo = giv.eval(lo).expect("labelled");
                let x = lo + (&glo - &flo) / (&sf - &sg);
                if !(&x > lo && &x < hi) {
                    continue;
                }
                let j = gj + 1;
                let taken = if h == l { j - 1 } else { j };
                let class_word = u.prefix(i - 1).mul(&v.prefix(taken).inverse());
                points.push(CoincidencePoint {
                    circle: a,
                    coordinate: x,
                    index: if sg > sf { 1 } else { -1 },
                    class_word,
                    source: CoincidenceSource::Intervals {
                        f_interval: fi,
                        g_interval: gj,
                    },
                });
            }
        }
        points.sort_by(|x, y| x.coordinate.cmp(&y.coordinate));
        out.extend(points);
    }
    out
}

/// `Σ index · [class word]` over all coincidence points.
pub fn geometric_trace(p: &RegularPair) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    for c in enumerate_coincidences(p) {
        out.add_term(BigInt::from(c.index), &c.class_word);
    }
    out
}

/// Coordinates in the interior of a constant zone of `f` where `g` passes
/// through the wedge point, i.e. coincidences not covered by the interval
/// enumeration. For an admissible `ε` this is exactly `1/2` on every circle.
pub fn constant_zone_coincidences(p: &RegularPair) -> Vec<(usize, BigRational)> {
    let mut out = Vec::new();
    for a in 0..p.rank() {
        let breaks: Vec<&BigRational> = p.g.circles[a].iter().map(|iv| &iv.lo).skip(1).collect();
        for fiv in p.f.circles[a].iter().filter(|iv| iv.label.is_none()) {
            for &b in &breaks {
                if fiv.contains(b) {
                    out.push((a, b.clone()));
                }
            }
        }
    }
    out
}

/// Which half-circle lemma a prediction comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaZone {
    /// an `f` interval inside `(0, 1/2)`
    TopHalf { f_interval: usize },
    /// a `g` interval inside `(1/2, 1)`
    BottomHalf { g_interval: usize },
}

/// Predicted and observed trace contribution of one interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaCheck {
    pub circle: usize,
    pub zone: LemmaZone,
    pub predicted: GroupRingElement,
    pub observed: GroupRingElement,
}

impl LemmaCheck {
    pub fn holds(&self) -> bool {
        self.predicted == self.observed
    }
}

/// Per-interval predictions of the half-circle lemmas against the
/// enumerated coincidences.
///
/// * `f` interval in `(0, 1/2)` labelled `h_i`, with `l_1` the first letter
///   of `v_a`: `-[h_1…h_{i-1}]` if `h_i = l_1`, `+[h_1…h_i]` if
///   `h_i = l_1^-1`, else nothing.
/// * `g` interval in `(1/2, 1)` labelled `l_i`, with `h_n` the last letter
///   of `u_a`: `+[h_1…h_{n-1} (l_1…l_{i-1})^-1]` if `l_i = h_n`,
///   `-[h_1…h_{n-1} (l_1…l_i)^-1]` if `l_i = h_n^-1`, else nothing. The
///   last `g` interval overlaps the final constant zone of `f` and carries
///   no coincidence, so its prediction is zero.
pub fn lemma_checks(p: &RegularPair) -> Vec<LemmaCheck> {
    let points = enumerate_coincidences(p);
    let mut checks = Vec::new();
    for a in 0..p.rank() {
        let (u, v) = (&p.u[a], &p.v[a]);
        let (ul, vl) = (u.letters(), v.letters());
        let (n, m) = (ul.len(), vl.len());
        let observed = |keep: &dyn Fn(usize, usize) -> bool| {
            let mut x = GroupRingElement::zero();
            for c in points.iter().filter(|c| c.circle == a) {
                if let CoincidenceSource::Intervals { f_interval, g_interval } = c.source {
                    if keep(f_interval, g_interval) {
                        x.add_term(BigInt::from(c.index), &c.class_word);
                    }
                }
            }
            x
        };

        let l1 = vl[0];
        for fi in 1..n {
            let h = ul[fi - 1];
            let predicted = if h == l1 {
                GroupRingElement::from_terms([(-1, &u.prefix(fi - 1))])
            } else if h == l1.inverse() {
                GroupRingElement::from_terms([(1, &u.prefix(fi))])
            } else {
                GroupRingElement::zero()
            };
            checks.push(LemmaCheck {
                circle: a,
                zone: LemmaZone::TopHalf { f_interval: fi },
                predicted,
                observed: observed(&|f, _| f == fi),
            });
        }

        let hn = ul[n - 1];
        let head = u.prefix(n - 1);
        for (gj, &l) in vl.iter().enumerate().take(m).skip(1) {
            let i = gj + 1;
            let predicted = if gj == m - 1 {
                GroupRingElement::zero()
            } else if l == hn {
                GroupRingElement::from_terms([(1, &head.concat(&v.prefix(i - 1).inverse()))])
            } else if l == hn.inverse() {
                GroupRingElement::from_terms([(-1, &head.concat(&v.prefix(i).inverse()))])
            } else {
                GroupRingElement::zero()
            };
            checks.push(LemmaCheck {
                circle: a,
                zone: LemmaZone::BottomHalf { g_interval: gj },
                predicted,
                observed: observed(&|_, g| g == gj),
            });
        }
    }
    checks
}
