//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cambrian_core::fan::{self, FrameworkGraph, StarKind, DEFAULT_LOOKAHEAD};
use cambrian_core::rootsys::RankTwoType;
use cambrian_core::verify::{self, Axiom, AXIOMS};
use cambrian_core::{
    linalg, sortable, Classification, CoxeterGroup, ExchangeMatrix, RootSpace, RootSystem, Vector, DEFAULT_NODE_CAP, Q,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

const CAP: usize = DEFAULT_NODE_CAP;

fn space(b: Vec<Vec<i64>>) -> RootSpace {
    RootSpace::build(&ExchangeMatrix::validate(b).expect("valid matrix")).expect("root space")
}

fn g2t() -> RootSpace {
    space(vec![vec![0, 1, 1], vec![-3, 0, 0], vec![-1, 0, 0]])
}

fn a1t() -> RootSpace {
    space(vec![vec![0, 2], vec![-2, 0]])
}

fn a2() -> RootSpace {
    space(vec![vec![0, 1], vec![-1, 0]])
}

fn graph(rs: &RootSpace, max_len: usize) -> Result<FrameworkGraph, String> {
    fan::doubled_graph(rs, max_len, DEFAULT_LOOKAHEAD, CAP).map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn sorted(mut v: Vec<Vector>) -> Vec<Vector> {
    v.sort();
    v
}

fn neg(v: &[i64]) -> Vector {
    v.iter().map(|x| -x).collect()
}

fn g2_constants() -> Check {
    let rs = g2t();
    let Classification::Affine(a) = rs.sys.classify() else { return Err("not affine".into()) };
    ensure(a.delta == vec![2, 3, 1], format!("delta {:?}", a.delta))?;
    let s = rs.phi0_split().map_err(|e| e.to_string())?;
    ensure(sorted(s.zero.clone()) == sorted(vec![vec![1, 2, 0], vec![-1, -2, 0]]), format!("zero {:?}", s.zero))?;
    let plus = vec![vec![2, 3, 0], vec![1, 1, 0], vec![1, 0, 0], vec![0, -1, 0], vec![-1, -3, 0]];
    ensure(sorted(s.plus.clone()) == sorted(plus), format!("plus {:?}", s.plus))?;
    ensure(s.xc == vec![-4, 6], format!("x_c {:?}", s.xc))?;
    Ok(format!("delta={:?} x_c={:?} |plus|={}", a.delta, s.xc, s.plus.len()))
}

fn alignment_values() -> Check {
    let rs = g2t();
    let x = [3, 1, 3];
    let y = [1, 2, 0];
    let w = rs.omega_coroot(&x, &y);
    let k = rs.sys.k_coroot(&x, &y);
    ensure(w == 0 && k == -2, format!("omega={w} K={k}"))?;
    Ok("omega=0 K=-2".into())
}

fn nonstandard_a1() -> Check {
    let sys = RootSystem::from_cartan(vec![vec![2, -1], vec![-4, 2]]).map_err(|e| e.to_string())?;
    let a = sys.affine_data().map_err(|e| e.to_string())?;
    ensure(a.delta == vec![1, 2], format!("delta {:?}", a.delta))?;
    ensure(a.theta == vec![1, 0], format!("theta {:?}", a.theta))?;
    let c2 = sys.coroot_in_root_basis(&[0, 1], &a.normalized_symmetrizer);
    ensure(c2 == vec![Q::from(0), Q::from(4)], format!("coroot {c2:?}"))?;
    Ok("delta=(1,2) theta=(1,0) coroot2=4*alpha2".into())
}

fn fan_property() -> Check {
    let rs = g2t();
    let fg = graph(&rs, 8)?;
    let cones = fg.cones(&rs.sys).map_err(|e| e.to_string())?;
    let both = [fan::Provenance::FromC, fan::Provenance::FromAntiCinv]
        .iter()
        .all(|p| cones.iter().any(|c| c.provenance == *p || c.provenance == fan::Provenance::Both));
    ensure(both, "missing a provenance")?;
    let rep = fan::fan_check(&rs.sys, &cones);
    ensure(rep.passed(), format!("{} violations", rep.violations.len()))?;
    Ok(format!("{} cones, {} pairs, 0 violations", rep.cones, rep.pairs))
}

fn framework_axioms() -> Check {
    let rs = g2t();
    let fg = graph(&rs, 8)?;
    let rep = verify::check_axioms(&rs, &fg);
    let failed: Vec<Axiom> = AXIOMS.into_iter().filter(|a| !rep.passed(*a)).collect();
    ensure(failed.is_empty(), format!("failed {failed:?}"))?;
    ensure(!fg.interior().is_empty() && fg.interior().len() == fg.core().len(), "core has frontier vertices")?;
    let scan = verify::completeness_scan(&rs, 8, DEFAULT_LOOKAHEAD, CAP).map_err(|e| e.to_string())?;
    ensure(scan.complete(), format!("deficits {:?}", scan.deficits))?;
    Ok(format!("{} interior vertices, {} edges, deficits {:?}", fg.interior().len(), rep.edges_checked, scan.deficits))
}

fn dictionary() -> Check {
    let mut parts = Vec::new();
    for (name, rs, max_len, expect) in [("A2", a2(), 8, Some(5)), ("A1~", a1t(), 8, None), ("G2~", g2t(), 20, None)] {
        let fg = graph(&rs, max_len)?;
        let rep = verify::cross_check(&rs, &fg, 7, CAP).map_err(|e| e.to_string())?;
        ensure(rep.passed(), format!("{name}: {:?}", rep.mismatches))?;
        ensure(!rep.matching.is_empty(), format!("{name}: nothing matched"))?;
        if let Some(k) = expect {
            ensure(rep.matching.len() == k && rep.exchange_classes == k, format!("{name}: {} matched", rep.matching.len()))?;
        }
        ensure(rep.unmatched_classes.is_empty(), format!("{name}: {} classes unmatched", rep.unmatched_classes.len()))?;
        parts.push(format!("{name} {}", rep.matching.len()));
    }
    Ok(format!("matched {}", parts.join(", ")))
}

fn boundary_support() -> Check {
    let rs = g2t();
    let aff = rs.sys.affine_data().map_err(|e| e.to_string())?;
    let fg = graph(&rs, 8)?;
    let bs = fan::boundary_support(&rs, &fg).map_err(|e| e.to_string())?;
    ensure(!bs.complement_rays.is_empty(), "complement empty")?;
    ensure(bs.complement_is_open(), "complement not open")?;
    for r in &bs.complement_rays {
        ensure(bs.plus.iter().all(|b| rs.sys.pair(r, b) <= 0), format!("ray {r:?} outside the halfspaces"))?;
    }
    let meets = fg.vertices.iter().filter(|v| fan::cone_meets_complement(&rs.sys, &aff, &bs.plus, &v.labels)).count();
    ensure(meets == 0, format!("{meets} cones meet the complement"))?;
    let with_xc: Vec<_> = bs.chambers.iter().filter(|c| c.contains_xc).collect();
    ensure(!with_xc.is_empty(), "no chamber contains x_c")?;
    for c in &bs.chambers {
        let covered = c.covered_by_c || c.covered_by_cinv;
        ensure(c.contains_xc == c.in_complement_closure, format!("chamber {:?} disagrees", c.rays))?;
        ensure(c.contains_xc != covered, format!("chamber {:?} coverage", c.rays))?;
    }
    let split = rs.phi0_split().map_err(|e| e.to_string())?;
    ensure(split.zero.iter().all(|b| rs.sys.pair_q(&split.xc_full, b) == Q::from(0)), "x_c pairs with zero roots")?;
    ensure(split.xc_full.iter().any(|x| *x != Q::from(0)), "x_c is zero")?;
    Ok(format!("complement rays {:?}, {} of {} chambers contain x_c", bs.complement_rays, with_xc.len(), bs.chambers.len()))
}

fn rank_two_dichotomy() -> Check {
    let rs = g2t();
    let delta = rs.sys.affine_data().map_err(|e| e.to_string())?.delta;
    let fg = graph(&rs, 8)?;
    let (mut cycles, mut paths) = (0, 0);
    for v in fg.interior() {
        for e in 0..rs.rank() {
            for f in e + 1..rs.rank() {
                let star = fan::rank_two_star(&rs, &fg, v, e, f).map_err(|x| x.to_string())?;
                let in_boundary = star.face.iter().all(|r| rs.sys.pair(r, &delta) == 0);
                let finite = star.subsystem == RankTwoType::Finite;
                let tag = format!("star at v{v} slots {e},{f}");
                ensure(star.face_shared, format!("{tag}: face not shared"))?;
                match star.kind {
                    StarKind::Cycle { length } => {
                        cycles += 1;
                        ensure(finite && Some(length) == star.expected_length, format!("{tag}: cycle {length}"))?;
                        ensure(!in_boundary, format!("{tag}: cycle in the boundary"))?;
                    }
                    StarKind::Open { .. } => {
                        paths += 1;
                        ensure(!finite, format!("{tag}: finite subsystem but open"))?;
                    }
                }
                if in_boundary {
                    ensure(matches!(star.kind, StarKind::Open { .. }) && star.subsystem == RankTwoType::Affine, format!("{tag}: boundary"))?;
                }
            }
        }
    }
    Ok(format!("{cycles} finite cycles, {paths} affine paths"))
}

fn green_sequences() -> Check {
    let mut parts = Vec::new();
    for (name, rs) in [("A1~", a1t()), ("G2~", g2t())] {
        let fg = graph(&rs, 8)?;
        let path = verify::find_green_sequence(&rs, &fg).map_err(|e| format!("{name}: {e}"))?;
        let first = &fg.vertices[path[0]].labels;
        let last = &fg.vertices[*path.last().expect("nonempty")].labels;
        ensure(first.iter().all(|l| linalg::sign(l) > 0), format!("{name}: start {first:?}"))?;
        ensure(last.iter().all(|l| linalg::sign(l) < 0), format!("{name}: end {last:?}"))?;
        for p in path.windows(2) {
            let x = &fg.vertices[p[0]];
            let e = x.slots.iter().position(|s| s.is_some_and(|(w, _)| w == p[1])).ok_or("not adjacent")?;
            ensure(linalg::sign(&x.labels[e]) > 0, format!("{name}: red crossing {:?}", x.labels[e]))?;
            let y = &fg.vertices[p[1]];
            ensure(y.labels.contains(&neg(&x.labels[e])), format!("{name}: crossing label not negated"))?;
        }
        parts.push(format!("{name} length {}", path.len() - 1));
    }
    Ok(parts.join(", "))
}

fn negative_controls() -> Check {
    let rs = space(vec![vec![0, -1, -2], vec![1, 0, -2], vec![1, 1, 0]]);
    ensure(rs.sys.classify() == Classification::Indefinite, "344 not indefinite")?;
    let scan = verify::completeness_scan(&rs, 6, DEFAULT_LOOKAHEAD, CAP).map_err(|e| e.to_string())?;
    ensure(!scan.persistent.is_empty(), format!("no persistent deficit, deficits {:?}", scan.deficits))?;
    let g = g2t();
    let fg = graph(&g, 4)?;
    let bad = verify::corrupt_label(&fg, fg.core()[1], 0);
    let rep = verify::check_axioms(&g, &bad);
    ensure(!rep.all_passed(), "corruption not detected")?;
    ensure(rep.failures.iter().all(|w| verify::replay(&g, w)), "witness does not replay")?;
    Ok(format!(
        "344 deficits {:?} with {} persistent; corruption caught by {:?}",
        scan.deficits,
        scan.persistent.len(),
        rep.failures[0].axiom
    ))
}

fn sortable_is_aligned() -> Check {
    let mut parts = Vec::new();
    for (name, rs, len) in [("G2~", g2t(), 7), ("A1~", a1t(), 10)] {
        let g = CoxeterGroup::new(&rs.sys);
        let c = rs.coxeter_word();
        let els = g.elements_up_to(len, CAP).map_err(|e| e.to_string())?;
        let h = els.iter().flat_map(|w| g.inversions(w)).map(|r| linalg::abs_sum(&r)).max().unwrap_or(1);
        let positive = rs.sys.positive_roots(h);
        let mut sortables = 0;
        for w in &els {
            let s = sortable::is_sortable(&g, w, &c);
            let a = sortable::is_aligned_with(&rs, &g, w, &positive);
            ensure(s == a, format!("{name}: {:?} sortable={s} aligned={a}", g.reduced_word(w)))?;
            sortables += s as usize;
        }
        parts.push(format!("{name} {} elements ({sortables} sortable)", els.len()));
    }
    Ok(parts.join(", "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("1 G2~ constants", g2_constants, Duration::from_secs(1)),
        ("2 alignment form values", alignment_values, Duration::from_secs(1)),
        ("3 nonstandard A1~", nonstandard_a1, Duration::from_secs(1)),
        ("4 fan property", fan_property, Duration::from_secs(60)),
        ("5 framework axioms", framework_axioms, Duration::from_secs(120)),
        ("6 dictionary cross-check", dictionary, Duration::from_secs(300)),
        ("7 boundary support", boundary_support, Duration::from_secs(120)),
        ("8 rank-two dichotomy", rank_two_dichotomy, Duration::from_secs(120)),
        ("9 green sequences", green_sequences, Duration::from_secs(120)),
        ("10 negative controls", negative_controls, Duration::from_secs(120)),
        ("11 sortable = aligned", sortable_is_aligned, Duration::from_secs(120)),
    ];
    let mut failures = 0;
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let result = match result {
            Ok(m) if took > budget => Err(format!("{m}; took {took:.2?}, budget {budget:?}")),
            r => r,
        };
        match result {
            Ok(m) => println!("PASS {name} ({took:.2?}): {m}"),
            Err(m) => {
                failures += 1;
                println!("FAIL {name} ({took:.2?}): {m}");
            }
        }
    }
    println!("{} of 11 criteria passed", 11 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
