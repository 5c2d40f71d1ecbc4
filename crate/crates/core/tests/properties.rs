mod common;

use bouquet::conjugacy::{
    smith_normal_form, solve_integer_system, verify_witness, DecisionConfig, DecisionOutcome, IntMatrix, Nil2Element,
    Nil2Endo, TwistedConjugacy,
};
use bouquet::freegroup::{Alphabet, Endomorphism, GroupRingElement, Letter, Word};
use bouquet::trace::{compare_traces_with, raw_trace, raw_trace_delta, reduce_trace_with, Verdict};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn letters(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..rank, any::<bool>()), 0..=max_len).prop_map(|v| {
        v.into_iter()
            .map(|(g, inv)| Letter::new(g, if inv { -1 } else { 1 }))
            .collect()
    })
}

fn reduced(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    letters(rank, max_len).prop_map(|w| w.reduced())
}

fn endo(rank: usize, max_len: usize) -> impl Strategy<Value = Endomorphism> {
    prop::collection::vec(reduced(rank, max_len), rank)
        .prop_map(move |images| Endomorphism::new(Alphabet::standard(rank), images).unwrap())
}

fn element(rank: usize) -> impl Strategy<Value = GroupRingElement> {
    prop::collection::vec((-3i64..=3, reduced(rank, 3)), 0..4).prop_map(|terms| {
        let mut x = GroupRingElement::zero();
        for (c, w) in terms {
            x.add_term(BigInt::from(c), &w);
        }
        x
    })
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, c), r).prop_map(|rows| IntMatrix::from_rows(&rows))
    })
}

fn big_product(a: &IntMatrix, b: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..a.rows())
        .map(|i| {
            (0..b.cols())
                .map(|j| (0..a.cols()).map(|k| BigInt::from(a[(i, k)]) * b[(k, j)]).sum())
                .collect()
        })
        .collect()
}

fn determinant(m: &IntMatrix) -> BigInt {
    // cofactor expansion, fine for the small sizes used here
    fn det(rows: &[Vec<BigInt>]) -> BigInt {
        if rows.is_empty() {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for (j, x) in rows[0].iter().enumerate() {
            let minor: Vec<Vec<BigInt>> = rows[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = x * det(&minor);
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }
    let rows: Vec<Vec<BigInt>> = m
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    det(&rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn smith_form_postconditions(m in matrix(4, 4)) {
        let s = smith_normal_form(&m).unwrap();
        let d: Vec<Vec<BigInt>> = s.d.to_rows().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
        let um = IntMatrix::from_rows(&big_product(&s.u, &m).into_iter()
            .map(|r| r.into_iter().map(|x| i64::try_from(x).unwrap()).collect()).collect::<Vec<_>>());
        prop_assert_eq!(big_product(&um, &s.v), d);
        prop_assert!(determinant(&s.u).magnitude().is_one());
        prop_assert!(determinant(&s.v).magnitude().is_one());
        let diag = s.diagonal();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if i != j {
                    prop_assert_eq!(s.d[(i, j)], 0);
                }
            }
        }
        for w in diag.windows(2) {
            prop_assert!(w[0] >= 0);
            if w[0] == 0 {
                prop_assert_eq!(w[1], 0);
            } else {
                prop_assert_eq!(w[1] % w[0], 0);
            }
        }
    }

    #[test]
    fn integer_systems(m in matrix(3, 4), x in prop::collection::vec(-5i64..=5, 4), t in prop::collection::vec(-3i64..=3, 4)) {
        let x = &x[..m.cols()];
        let b = m.checked_mul_vec(x).unwrap();
        let lattice = solve_integer_system(&m, &b).unwrap().expect("b = M x is solvable");
        let point = lattice.point(&t[..lattice.kernel.len()]).unwrap();
        prop_assert_eq!(m.checked_mul_vec(&point).unwrap(), b);
        for k in &lattice.kernel {
            prop_assert!(m.checked_mul_vec(k).unwrap().iter().all(|&v| v == 0));
        }
    }

    #[test]
    fn word_group_axioms(u in letters(3, 8), v in letters(3, 8), w in letters(3, 8)) {
        prop_assert_eq!(u.mul(&v).mul(&w), u.mul(&v.mul(&w)));
        prop_assert!(u.mul(&u.inverse()).is_empty());
        prop_assert_eq!(u.concat(&v).reduced(), u.mul(&v));
        prop_assert_eq!(u.mul(&v).inverse(), v.inverse().mul(&u.inverse()));
        prop_assert!(u.mul(&v).is_reduced());
    }

    #[test]
    fn group_ring_axioms(x in element(2), y in element(2), z in element(2)) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&(y.clone() + z.clone())), x.mul(&y) + x.mul(&z));
        prop_assert_eq!(x.mul(&y).involution(), y.involution().mul(&x.involution()));
        prop_assert_eq!(x.involution().involution(), x.clone());
        prop_assert_eq!(x.mul(&y).augmentation(), x.augmentation() * y.augmentation());
        prop_assert!((x.clone() - x.clone()).is_zero());
    }

    #[test]
    fn nil2_embedding_is_a_homomorphism(u in letters(3, 10), v in letters(3, 10)) {
        let e = |w: &Word| Nil2Element::embed(w, 3).unwrap();
        prop_assert_eq!(e(&u.concat(&v)), e(&u).mul(&e(&v)).unwrap());
        prop_assert_eq!(e(&u.inverse()), e(&u).inverse().unwrap());
        prop_assert_eq!(e(&u), e(&u.reduced()));
        // commutators are central
        let c = e(&u).commutator(&e(&v)).unwrap();
        prop_assert!(c.is_central());
    }

    #[test]
    fn nil2_induced_map(phi in endo(3, 4), w in letters(3, 8)) {
        let induced = Nil2Endo::new(&phi).unwrap();
        let lhs = induced.apply(&Nil2Element::embed(&w, 3).unwrap()).unwrap();
        prop_assert_eq!(lhs, Nil2Element::embed(&phi.apply(&w).unwrap(), 3).unwrap());
    }

    #[test]
    fn fox_agrees_with_closed_form(w in letters(3, 12), g in 0usize..3) {
        prop_assert_eq!(bouquet::fox::fox_derivative(g, &w), common::naive_fox(g, &w));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn derivative_forms_have_equal_totals(phi in endo(2, 4), psi in endo(2, 4)) {
        let d = raw_trace(&phi, &psi).unwrap();
        let delta = raw_trace_delta(&phi, &psi).unwrap();
        prop_assert_eq!(d.augmentation(), delta.augmentation());
    }

    #[test]
    fn derivative_forms_never_disagree(phi in endo(2, 3), psi in endo(2, 3)) {
        let tc = TwistedConjugacy::new(&phi, &psi, DecisionConfig::default()).unwrap();
        let raw = raw_trace(&phi, &psi).unwrap();
        let (left, _) = reduce_trace_with(&raw, &tc).unwrap();
        let (right, _) = reduce_trace_with(&raw_trace_delta(&phi, &psi).unwrap(), &tc).unwrap();
        prop_assert_eq!(left.coefficient_sum(), raw.augmentation());
        let cmp = compare_traces_with(&left, &right, &tc).unwrap();
        prop_assert_ne!(cmp.verdict, Verdict::Mismatch);
        if cmp.verdict == Verdict::Inconclusive {
            prop_assert!(cmp.unknown_pairs > 0);
        }
    }

    #[test]
    fn decisions_are_sound(
        phi in endo(2, 3),
        psi in endo(2, 3),
        beta in reduced(2, 4),
        gamma in reduced(2, 3),
        other in reduced(2, 3),
    ) {
        let tc = TwistedConjugacy::new(&phi, &psi, DecisionConfig::default()).unwrap();
        let alpha = phi.apply(&gamma).unwrap().mul(&beta).mul(&psi.apply(&gamma).unwrap().inverse());
        match tc.decide(&alpha, &beta).unwrap() {
            DecisionOutcome::Distinct { level } => prop_assert!(false, "separated a conjugate pair at {level:?}"),
            DecisionOutcome::Equivalent { witness } => {
                prop_assert!(verify_witness(&alpha, &beta, &phi, &psi, &witness));
            }
            DecisionOutcome::Unknown => {}
        }
        match tc.decide(&other, &beta).unwrap() {
            DecisionOutcome::Distinct { .. } => {
                prop_assert!(!common::reachable(&other, &beta, &phi, &psi, 2));
            }
            DecisionOutcome::Equivalent { witness } => {
                prop_assert!(verify_witness(&other, &beta, &phi, &psi, &witness));
            }
            DecisionOutcome::Unknown => {}
        }
    }
}
