use cambrian_core::fan::{self, DEFAULT_LOOKAHEAD};
use cambrian_core::verify::{self, Axiom};
use cambrian_core::{linalg, ExchangeMatrix, RootSpace, DEFAULT_NODE_CAP};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn space(b: Vec<Vec<i64>>) -> RootSpace {
    RootSpace::build(&ExchangeMatrix::validate(b).unwrap()).unwrap()
}

fn g2t() -> RootSpace {
    space(vec![vec![0, 1, 1], vec![-3, 0, 0], vec![-1, 0, 0]])
}

fn a1t() -> RootSpace {
    space(vec![vec![0, 2], vec![-2, 0]])
}

fn m344() -> RootSpace {
    space(vec![vec![0, -1, -2], vec![1, 0, -2], vec![1, 1, 0]])
}

#[test]
fn axioms_hold_on_affine_and_finite_inputs() {
    for rs in [g2t(), a1t(), space(vec![vec![0, 1], vec![-1, 0]])] {
        let fg = fan::doubled_graph(&rs, 8, DEFAULT_LOOKAHEAD, DEFAULT_NODE_CAP).unwrap();
        let rep = verify::check_axioms(&rs, &fg);
        assert!(rep.all_passed(), "{:?}", rep.failures);
        assert_eq!(rep.scope.len(), fg.core().len());
    }
}

#[test]
fn every_corruption_is_caught_and_replays() {
    let rs = g2t();
    let fg = fan::doubled_graph(&rs, 4, DEFAULT_LOOKAHEAD, DEFAULT_NODE_CAP).unwrap();
    for v in fg.core() {
        for e in 0..rs.rank() {
            let bad = verify::corrupt_label(&fg, v, e);
            let rep = verify::check_axioms(&rs, &bad);
            assert!(!rep.passed(Axiom::E1) || !rep.passed(Axiom::Reflection));
            for w in &rep.failures {
                assert!(verify::replay(&rs, w), "{w:?}");
            }
        }
    }
}

#[test]
fn indefinite_input_keeps_its_deficits() {
    let rs = m344();
    let rep = verify::completeness_scan(&rs, 6, DEFAULT_LOOKAHEAD, DEFAULT_NODE_CAP).unwrap();
    assert!(!rep.complete());
    assert!(!rep.persistent.is_empty());
    let fg = fan::doubled_graph(&rs, 6, DEFAULT_LOOKAHEAD, DEFAULT_NODE_CAP).unwrap();
    let axioms = verify::check_axioms(&rs, &fg);
    assert!(!axioms.passed(Axiom::Completeness));
    for a in [Axiom::Root, Axiom::E1, Axiom::E2, Axiom::E3, Axiom::Reflection] {
        assert!(axioms.passed(a));
    }
}

#[test]
fn affine_scan_is_clean() {
    for rs in [g2t(), a1t()] {
        let rep = verify::completeness_scan(&rs, 8, DEFAULT_LOOKAHEAD, DEFAULT_NODE_CAP).unwrap();
        assert!(rep.complete());
    }
}

#[test]
fn matching_ignores_expansion_order() {
    let rs = g2t();
    let fg = fan::doubled_graph(&rs, 12, DEFAULT_LOOKAHEAD, DEFAULT_NODE_CAP).unwrap();
    let base = verify::cross_check(&rs, &fg, 6, DEFAULT_NODE_CAP).unwrap();
    assert!(base.passed());
    for seed in [1, 2] {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut order = |_v: usize| {
            let mut o: Vec<usize> = (0..3).collect();
            o.shuffle(&mut rng);
            o
        };
        let other = verify::cross_check_with(&rs, &fg, 6, DEFAULT_NODE_CAP, &mut order).unwrap();
        assert!(other.passed());
        assert_eq!(other.vertex_bijection(), base.vertex_bijection());
    }
}

#[test]
fn finite_and_rank_two_dictionaries() {
    let a2 = space(vec![vec![0, 1], vec![-1, 0]]);
    let fg = fan::doubled_graph(&a2, 8, DEFAULT_LOOKAHEAD, DEFAULT_NODE_CAP).unwrap();
    let rep = verify::cross_check(&a2, &fg, 7, DEFAULT_NODE_CAP).unwrap();
    assert!(rep.passed());
    assert_eq!((rep.matching.len(), rep.exchange_classes), (5, 5));
    assert!(rep.unmatched_classes.is_empty());

    let rs = a1t();
    let fg = fan::doubled_graph(&rs, 8, DEFAULT_LOOKAHEAD, DEFAULT_NODE_CAP).unwrap();
    let rep = verify::cross_check(&rs, &fg, 6, DEFAULT_NODE_CAP).unwrap();
    assert!(rep.passed(), "{:?}", rep.mismatches);
    assert_eq!(rep.matching.len(), 13);
    assert!(rep.unmatched_classes.is_empty());
}

#[test]
fn indefinite_dictionary_agrees_where_matched() {
    let rs = m344();
    let fg = fan::doubled_graph(&rs, 8, DEFAULT_LOOKAHEAD, DEFAULT_NODE_CAP).unwrap();
    let rep = verify::cross_check(&rs, &fg, 4, DEFAULT_NODE_CAP).unwrap();
    assert!(rep.passed(), "{:?}", rep.mismatches);
    assert!(!rep.matching.is_empty());
}

#[test]
fn green_sequences_run_from_plus_to_minus() {
    for (rs, len) in [(g2t(), 3), (a1t(), 2)] {
        let fg = fan::doubled_graph(&rs, 8, DEFAULT_LOOKAHEAD, DEFAULT_NODE_CAP).unwrap();
        let path = verify::find_green_sequence(&rs, &fg).unwrap();
        assert_eq!(path.len(), len + 1);
        let n = rs.rank();
        let mut first = fg.vertices[path[0]].key();
        let mut last = fg.vertices[*path.last().unwrap()].key();
        first.sort();
        last.sort();
        let mut pi: Vec<Vec<i64>> = (0..n).map(|i| linalg::unit(n, i)).collect();
        pi.sort();
        assert_eq!(first, pi);
        let mut neg: Vec<Vec<i64>> = pi.iter().map(|r| linalg::neg(r)).collect();
        neg.sort();
        assert_eq!(last, neg);
    }
    let rs = g2t();
    let tiny = fan::doubled_graph(&rs, 0, 0, DEFAULT_NODE_CAP).unwrap();
    assert!(verify::find_green_sequence(&rs, &tiny).is_err());
}
