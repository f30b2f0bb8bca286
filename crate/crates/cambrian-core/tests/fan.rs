use cambrian_core::fan::{self, Meet, Provenance, StarKind, DEFAULT_LOOKAHEAD};
use cambrian_core::rootsys::RankTwoType;
use cambrian_core::sortable;
use cambrian_core::{linalg, CoxeterGroup, ExchangeMatrix, FrameworkGraph, RootSpace};

fn space(b: Vec<Vec<i64>>) -> RootSpace {
    RootSpace::build(&ExchangeMatrix::validate(b).unwrap()).unwrap()
}

fn g2t() -> RootSpace {
    space(vec![vec![0, 1, 1], vec![-3, 0, 0], vec![-1, 0, 0]])
}

fn doubled(rs: &RootSpace, max_len: usize) -> FrameworkGraph {
    fan::doubled_graph(rs, max_len, DEFAULT_LOOKAHEAD, 100_000).unwrap()
}

#[test]
fn adjacent_cones_share_a_facet() {
    let rs = g2t();
    let fg = doubled(&rs, 8);
    for (v, _, w, _) in fg.full_edges() {
        let (a, b) = (fg.cone(&rs.sys, v).unwrap(), fg.cone(&rs.sys, w).unwrap());
        let shared: Vec<_> = a.rays.iter().filter(|r| b.rays.contains(r)).collect();
        assert_eq!(shared.len(), rs.rank() - 1);
        let wall = a.normals.iter().find(|n| b.normals.contains(&linalg::neg(n))).unwrap();
        let ra = a.rays.iter().find(|r| !b.rays.contains(r)).unwrap();
        let rb = b.rays.iter().find(|r| !a.rays.contains(r)).unwrap();
        assert!(rs.sys.pair(ra, wall) > 0 && rs.sys.pair(rb, wall) < 0);
        assert_eq!(fan::meets_nicely(&rs.sys, &a, &b).dim(), Some(rs.rank() - 1));
    }
}

#[test]
fn cones_sit_above_or_below_simple_walls() {
    let rs = g2t();
    let g = CoxeterGroup::new(&rs.sys);
    let c = rs.coxeter_word();
    for v in sortable::enumerate_sortables(&g, &c, 8, 100_000).unwrap() {
        let cone = fan::cone_of(&rs.sys, &v.labels, Provenance::FromC).unwrap();
        for s in 0..rs.rank() {
            let a = rs.sys.simple_root(s);
            let below = cone.rays.iter().all(|r| rs.sys.pair(r, &a) <= 0);
            let above = cone.rays.iter().all(|r| rs.sys.pair(r, &a) >= 0);
            assert_eq!(below, g.geq_s(&v.element, s));
            assert!(above || below);
        }
    }
    let fg = doubled(&rs, 8);
    for s in c.initial_letters() {
        let a = rs.sys.simple_root(s);
        for cone in fg.cones(&rs.sys).unwrap() {
            let signs: Vec<i64> = cone.rays.iter().map(|r| rs.sys.pair(r, &a).signum()).collect();
            assert!(signs.iter().all(|&x| x >= 0) || signs.iter().all(|&x| x <= 0));
        }
    }
}

#[test]
fn no_facet_lies_in_the_boundary() {
    let rs = g2t();
    let delta = rs.sys.affine_data().unwrap().delta;
    let fg = doubled(&rs, 8);
    for cone in fg.cones(&rs.sys).unwrap() {
        let flat = cone.rays.iter().filter(|r| rs.sys.pair(r, &delta) == 0).count();
        assert!(flat < rs.rank() - 1);
    }
}

#[test]
fn affine_doubled_graphs_are_complete() {
    for b in [
        vec![vec![0, 1, 1], vec![-3, 0, 0], vec![-1, 0, 0]],
        vec![vec![0, 2], vec![-2, 0]],
        vec![vec![0, 1], vec![-4, 0]],
    ] {
        let rs = space(b);
        let fg = doubled(&rs, 8);
        assert!(fg.conflicts.is_empty());
        assert!(fg.core().iter().all(|&v| fg.vertices[v].is_complete()));
    }
}

#[test]
fn boundary_crossing_cones_stabilize() {
    let rs = g2t();
    let delta = rs.sys.affine_data().unwrap().delta;
    let count = |l: usize| {
        let fg = doubled(&rs, l);
        let core: Vec<_> = fg.core().into_iter().map(|v| fg.cone(&rs.sys, v).unwrap()).collect();
        fan::cones_crossing_boundary(&rs.sys, &delta, &core)
    };
    let (a, b) = (count(8), count(9));
    assert!(a > 0);
    assert_eq!(a, b);
}

#[test]
fn a2_fan_has_five_cones_and_rejects_a_flipped_normal() {
    let rs = space(vec![vec![0, 1], vec![-1, 0]]);
    let fg = doubled(&rs, 3);
    let mut cones = fg.cones(&rs.sys).unwrap();
    assert_eq!(cones.len(), 5);
    assert!(fan::fan_check(&rs.sys, &cones).passed());
    let mut flips = 0;
    for k in 0..cones.len() {
        for e in 0..2 {
            let mut flipped = cones[k].normals.clone();
            flipped[e] = linalg::neg(&flipped[e]);
            let bad = fan::cone_of(&rs.sys, &flipped, Provenance::FromC).unwrap();
            let key = |r: &[Vec<i64>]| {
                let mut k = r.to_vec();
                k.sort();
                k
            };
            if cones.iter().any(|c| key(&c.rays) == key(&bad.rays)) {
                continue;
            }
            flips += 1;
            let mut all = cones.clone();
            all.push(bad);
            let rep = fan::fan_check(&rs.sys, &all);
            assert!(!rep.passed());
            let (i, j, x) = &rep.violations[0];
            for m in [*i, *j] {
                assert!(all[m].normals.iter().all(|b| rs.sys.pair_q(x, b) >= 0.into()));
            }
        }
    }
    assert!(flips > 0);
    cones.clear();
}

#[test]
fn antipodal_cones_meet_only_in_faces() {
    let rs = g2t();
    let fg = doubled(&rs, 7);
    let cones = fg.cones(&rs.sys).unwrap();
    for a in cones.iter().filter(|c| c.provenance == Provenance::FromC) {
        for b in cones.iter().filter(|c| c.provenance == Provenance::FromAntiCinv) {
            assert!(matches!(fan::meets_nicely(&rs.sys, a, b), Meet::SharedFace { .. }));
        }
    }
}

#[test]
fn rank_one_affine_graph_is_a_path() {
    let rs = space(vec![vec![0, 2], vec![-2, 0]]);
    let fg = doubled(&rs, 6);
    let core = fg.core();
    let degrees: Vec<usize> = core.iter().map(|&v| fg.vertices[v].slots.iter().flatten().count()).collect();
    assert!(degrees.iter().all(|&d| d == 2));
    let star = fan::rank_two_star(&rs, &fg, fg.base(1).unwrap(), 0, 1).unwrap();
    assert!(matches!(star.kind, StarKind::Open { .. }));
    assert_eq!(star.subsystem, RankTwoType::Affine);
}

#[test]
fn finite_stars_close_with_predicted_length() {
    let rs = g2t();
    let fg = doubled(&rs, 8);
    for v in fg.interior() {
        for e in 0..3 {
            for f in e + 1..3 {
                let star = fan::rank_two_star(&rs, &fg, v, e, f).unwrap();
                assert!(star.face_shared);
                if let StarKind::Cycle { length } = star.kind {
                    assert_eq!(star.subsystem, RankTwoType::Finite);
                    assert_eq!(Some(length), star.expected_length);
                }
            }
        }
    }
}

#[test]
fn maxlen_zero_is_a_single_vertex() {
    let rs = g2t();
    let fg = fan::doubled_graph(&rs, 0, 0, 100_000).unwrap();
    assert_eq!(fg.vertices.len(), 2);
    assert_eq!(fg.core().len(), 2);
    let c_only = fan::camb_graph(&rs, 0, 0, 100_000).unwrap();
    assert_eq!(c_only.vertices.len(), 1);
}
