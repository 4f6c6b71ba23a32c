//! Randomized invariants over exterior algebra elements and random rank-3
//! point-line configurations.

use num_rational::BigRational;
use proptest::prelude::*;

use osx_core::criteria::{
    graph_component_check, implication_chain, is_p_independent_matroid, is_partition_p_independent,
    is_partition_p_independent_by_transversals,
};
use osx_core::exterior::{pure_from_factors, ExtElement, LinearForm, Monomial};
use osx_core::ideal::{hilbert_series, hilbert_series_from_ideal, os_ideal};
use osx_core::linalg::Subspace;
use osx_core::matroid::{GroundSubset, Matroid, Partition};
use osx_core::presentation::{gamma_tree, nbc_prime, t_tree, verify_expansion, verify_relation_basis};
use osx_core::zelements::{groebner_verify, z_of_flag, z_of_nbc};

const N: usize = 6;

fn element(degree: Option<usize>) -> impl Strategy<Value = ExtElement> {
    let mono = (0u32..(1 << N)).prop_filter_map("degree", move |bits| {
        let s = GroundSubset::from_bits(bits);
        degree.is_none_or(|d| s.len() == d).then_some(Monomial::new(s))
    });
    prop::collection::vec((mono, -3i64..=3), 0..5).prop_map(|terms| {
        ExtElement::from_terms(terms.into_iter().map(|(m, c)| (m, BigRational::from_integer(c.into()))))
    })
}

fn linear_form() -> impl Strategy<Value = LinearForm> {
    prop::collection::vec(-2i64..=2, N).prop_map(|cs| {
        let e = ExtElement::from_terms(
            cs.into_iter()
                .enumerate()
                .map(|(i, c)| (Monomial::from_indices([i + 1]), BigRational::from_integer(c.into()))),
        );
        LinearForm::new(e).unwrap()
    })
}

/// Three-point lines on `n` points, kept greedily so that any two share at most one point.
fn configuration() -> impl Strategy<Value = Matroid> {
    (5usize..=8).prop_flat_map(|n| {
        let triple = prop::sample::subsequence((1..=n).collect::<Vec<_>>(), 3);
        prop::collection::vec(triple, 0..8).prop_map(move |cands| {
            let mut lines: Vec<Vec<usize>> = Vec::new();
            for c in cands {
                let s = GroundSubset::from_points(c.iter().copied());
                if lines.iter().all(|l| GroundSubset::from_points(l.iter().copied()).intersection(s).len() <= 1) {
                    lines.push(c);
                }
            }
            Matroid::from_lines(n, &lines).expect("greedy lines are admissible")
        })
    })
}

fn partition_of(n: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..n, n).prop_map(move |labels| {
        let mut parts = vec![GroundSubset::EMPTY; n];
        for (i, &b) in labels.iter().enumerate() {
            parts[b] = parts[b].with(i + 1);
        }
        Partition::new(n, parts.into_iter().filter(|p| !p.is_empty()).collect()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wedge_is_associative(a in element(None), b in element(None), c in element(None)) {
        prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
    }

    #[test]
    fn wedge_is_graded_commutative(a in element(Some(2)), b in element(Some(3)), c in element(Some(1))) {
        prop_assert_eq!(a.wedge(&b), b.wedge(&a));
        prop_assert_eq!(b.wedge(&c), -c.wedge(&b));
        prop_assert!(c.wedge(&c).is_zero());
    }

    #[test]
    fn boundary_is_a_derivation(a in element(Some(2)), b in element(None)) {
        let lhs = a.wedge(&b).boundary();
        let rhs = a.boundary().wedge(&b) + a.wedge(&b.boundary());
        prop_assert_eq!(lhs, rhs);
        prop_assert!(b.boundary().boundary().is_zero());
    }

    #[test]
    fn relabel_is_multiplicative(a in element(None), b in element(None), perm in Just((1..=N).collect::<Vec<_>>()).prop_shuffle()) {
        prop_assert_eq!(a.wedge(&b).relabel(&perm), a.relabel(&perm).wedge(&b.relabel(&perm)));
    }

    #[test]
    fn products_of_linear_forms_are_pure(fs in prop::collection::vec(linear_form(), 1..4)) {
        let r = pure_from_factors(&fs);
        prop_assume!(!r.is_zero());
        prop_assert!(r.is_pure(N).unwrap());
        for f in &fs {
            prop_assert!(f.as_element().wedge(&r).is_zero());
        }
    }

    #[test]
    fn subspace_dimensions(xs in prop::collection::vec(element(Some(2)), 0..6), ys in prop::collection::vec(element(Some(2)), 0..6)) {
        let a = Subspace::span(N, 2, xs.iter()).unwrap();
        let b = Subspace::span(N, 2, ys.iter()).unwrap();
        let meet = a.intersection(&b).unwrap();
        let join = a.sum(&b).unwrap();
        prop_assert_eq!(meet.dim() + join.dim(), a.dim() + b.dim());
        prop_assert!(meet.is_subspace_of(&a) && meet.is_subspace_of(&b));
        prop_assert!(a.orthogonal_complement().orthogonal_complement().equals(&a));
        for x in &xs {
            prop_assert!(a.contains(x));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hilbert_series_two_ways(m in configuration()) {
        let os = os_ideal(&m);
        prop_assert_eq!(hilbert_series(&m), hilbert_series_from_ideal(&m, &os).unwrap());
        let alternating: i64 = hilbert_series(&m).iter().enumerate().map(|(p, &h)| if p % 2 == 0 { h as i64 } else { -(h as i64) }).sum();
        prop_assert_eq!(alternating, 0);
        for p in 0..=m.rank_total() {
            for s in GroundSubset::all_of_size(m.n(), p) {
                prop_assert_eq!(m.is_nbc(s), m.is_nbc_by_closure(s));
            }
        }
    }

    #[test]
    fn z_elements_are_normalized(m in configuration()) {
        let top = ExtElement::basis(m.ground());
        for f in m.maximal_flags() {
            let z = z_of_flag(&m, &f).value;
            let u = m.phi(&f);
            prop_assert_eq!(ExtElement::ordered_monomial(u.as_slice()).wedge(&z), top.clone());
            prop_assert!(is_partition_p_independent(&m, &m.partition_of_flag(&f).unwrap(), m.rank_total() + 1).unwrap());
        }
        for &t in m.nbc_sets(m.rank_total()) {
            prop_assert!(z_of_nbc(&m, t).unwrap().value.is_pure(m.n()).unwrap());
        }
    }

    #[test]
    fn groebner_and_chain(m in configuration()) {
        let os = os_ideal(&m);
        prop_assert!(groebner_verify(&m, &os).unwrap().pass);
        prop_assert!(implication_chain(&m, &os, 12).unwrap().holds);
    }

    #[test]
    fn graph_check_matches_partitions(m in configuration()) {
        prop_assume!(m.rank_total() == 3);
        let graph = graph_component_check(&m, 12).unwrap();
        let partitions = is_p_independent_matroid(&m, 3, 12).unwrap();
        prop_assert_eq!(graph.verdict, partitions.verdict);
    }

    #[test]
    fn p_independence_matches_transversals(
        (m, pi) in configuration().prop_flat_map(|m| { let n = m.n(); (Just(m), partition_of(n)) })
    ) {
        for p in 3..=m.rank_total() + 1 {
            prop_assert_eq!(
                is_partition_p_independent(&m, &pi, p).unwrap(),
                is_partition_p_independent_by_transversals(&m, &pi, p).unwrap()
            );
        }
    }

    #[test]
    fn presentation_invariants(m in configuration()) {
        for e in nbc_prime(&m) {
            let g = gamma_tree(&m, e.s).unwrap();
            let t = t_tree(&m, e.s).unwrap();
            prop_assert_eq!(t.edges.len() + 1, e.neighbors.len());
            for v in &g.vertices {
                prop_assert!(verify_expansion(&m, e.s, v.a, v.k).unwrap());
                prop_assert!(m.is_nbc(v.ordered().set()));
            }
        }
        let r = verify_relation_basis(&m).unwrap();
        prop_assert!(r.pass, "{:?}", r);
    }
}
