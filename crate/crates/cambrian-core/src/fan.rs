//! Cones of sortable elements, the Cambrian framework graph and its doubled
//! version, exact fan verification, rank-two stars and the affine boundary.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::coxeter::CoxeterGroup;
use crate::linalg::{self, q, Q};
use crate::lp::{Rel, System};
use crate::rootsys::{AffineData, RankTwoType, RootSpace, RootSystem};
use crate::sortable::{self, CoxeterWord, SortableVertex};
use crate::{Error, Result, Vector};

/// Extra sortable length enumerated beyond `max_len` to resolve slots.
pub const DEFAULT_LOOKAHEAD: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    FromC,
    FromAntiCinv,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialCone {
    /// Inward facet normals (roots).
    pub normals: Vec<Vector>,
    /// `rays[e]` is dual to `normals[e]∨`: pairs to 1 with it and 0 with the others.
    pub rays: Vec<Vector>,
    pub provenance: Provenance,
}

/// Builds the cone `{x : ⟨x,β⟩ ≥ 0, β ∈ labels}` with its dual rays.
pub fn cone_of(sys: &RootSystem, labels: &[Vector], provenance: Provenance) -> Result<SimplicialCone> {
    let n = sys.rank();
    let corts: Vec<Vector> = labels
        .iter()
        .map(|b| sys.coroot(b).ok_or(Error::SingularLabels))
        .collect::<Result<_>>()?;
    // M has the coroots as columns; rays are the rows of M⁻¹.
    let m: Vec<Vec<Q>> = (0..n).map(|i| corts.iter().map(|c| q(c[i])).collect()).collect();
    let inv = linalg::inverse_q(&m).ok_or(Error::SingularLabels)?;
    let rays = inv.iter().map(|r| linalg::primitive(r)).collect();
    Ok(SimplicialCone { normals: labels.to_vec(), rays, provenance })
}

impl SimplicialCone {
    pub fn contains(&self, sys: &RootSystem, x: &[i64]) -> bool {
        self.normals.iter().all(|b| sys.pair(x, b) >= 0)
    }
}

/// A vertex of a (doubled) Cambrian framework graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameworkVertex {
    /// Labels in slot order.
    pub labels: Vec<Vector>,
    pub provenance: Provenance,
    /// c-sorting word when the vertex comes from `F_c`.
    pub c_word: Option<Vec<usize>>,
    /// c⁻¹-sorting word when the vertex comes from `−F_{c⁻¹}`.
    pub cinv_word: Option<Vec<usize>>,
    /// `slots[e] = Some((v', e'))` for a full edge.
    pub slots: Vec<Option<(usize, usize)>>,
}

impl FrameworkVertex {
    /// Shortest length over the sides the vertex comes from.
    pub fn length(&self) -> usize {
        let a = self.c_word.as_ref().map_or(usize::MAX, |w| w.len());
        let b = self.cinv_word.as_ref().map_or(usize::MAX, |w| w.len());
        a.min(b)
    }

    pub fn is_complete(&self) -> bool {
        self.slots.iter().all(|s| s.is_some())
    }

    pub fn slot_of(&self, label: &[i64]) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn key(&self) -> Vec<Vector> {
        let mut k = self.labels.clone();
        k.sort();
        k
    }
}

#[derive(Clone, Debug, Default)]
pub struct FrameworkGraph {
    pub n: usize,
    pub vertices: Vec<FrameworkVertex>,
    /// Vertices of length at most `max_len` form the core.
    pub max_len: usize,
    /// Extra enumeration depth used only to resolve slots of core vertices.
    pub lookahead: usize,
    /// Slots that two different edges tried to occupy.
    pub conflicts: Vec<(usize, usize)>,
    index: BTreeMap<Vec<Vector>, usize>,
}

impl FrameworkGraph {
    pub fn find(&self, labels: &[Vector]) -> Option<usize> {
        let mut k = labels.to_vec();
        k.sort();
        self.index.get(&k).copied()
    }

    pub fn in_core(&self, v: usize) -> bool {
        self.vertices[v].length() <= self.max_len
    }

    /// Core vertex with every slot resolved as a full edge.
    pub fn is_interior(&self, v: usize) -> bool {
        self.in_core(v) && self.vertices[v].is_complete()
    }

    pub fn is_frontier(&self, v: usize) -> bool {
        self.in_core(v) && !self.vertices[v].is_complete()
    }

    pub fn interior(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.is_interior(v)).collect()
    }

    pub fn core(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.in_core(v)).collect()
    }

    /// Full edges `(v, e, v', e')` with `v < v'`.
    pub fn full_edges(&self) -> Vec<(usize, usize, usize, usize)> {
        let mut out = Vec::new();
        for (v, x) in self.vertices.iter().enumerate() {
            for (e, s) in x.slots.iter().enumerate() {
                if let Some((w, f)) = *s {
                    if v < w {
                        out.push((v, e, w, f));
                    }
                }
            }
        }
        out
    }

    pub fn cone(&self, sys: &RootSystem, v: usize) -> Result<SimplicialCone> {
        cone_of(sys, &self.vertices[v].labels, self.vertices[v].provenance)
    }

    pub fn cones(&self, sys: &RootSystem) -> Result<Vec<SimplicialCone>> {
        (0..self.vertices.len()).map(|v| self.cone(sys, v)).collect()
    }

    /// The vertex whose labels are `±Π`.
    pub fn base(&self, sign: i64) -> Option<usize> {
        let labels: Vec<Vector> = (0..self.n).map(|i| linalg::scale(&linalg::unit(self.n, i), sign)).collect();
        self.find(&labels)
    }

    fn insert(&mut self, labels: Vec<Vector>, prov: Provenance, word: Vec<usize>) -> usize {
        let mut key = labels.clone();
        key.sort();
        if let Some(&v) = self.index.get(&key) {
            let x = &mut self.vertices[v];
            match prov {
                Provenance::FromC => x.c_word = Some(word),
                _ => x.cinv_word = Some(word),
            }
            if x.provenance != prov {
                x.provenance = Provenance::Both;
            }
            return v;
        }
        let v = self.vertices.len();
        let n = labels.len();
        let (c_word, cinv_word) = match prov {
            Provenance::FromC => (Some(word), None),
            _ => (None, Some(word)),
        };
        self.vertices.push(FrameworkVertex { labels, provenance: prov, c_word, cinv_word, slots: vec![None; n] });
        self.index.insert(key, v);
        v
    }

    fn connect(&mut self, a: usize, la: &[i64], b: usize, lb: &[i64]) {
        let (Some(ea), Some(eb)) = (self.vertices[a].slot_of(la), self.vertices[b].slot_of(lb)) else {
            self.conflicts.push((a, b));
            return;
        };
        for (x, ex, y, ey) in [(a, ea, b, eb), (b, eb, a, ea)] {
            match self.vertices[x].slots[ex] {
                None => self.vertices[x].slots[ex] = Some((y, ey)),
                Some(t) if t == (y, ey) => {}
                Some(_) => self.conflicts.push((x, y)),
            }
        }
    }

    /// Adds one side: `F_c` with `sign = 1`, or `−F_{c⁻¹}` with `sign = −1`.
    fn add_side(&mut self, g: &CoxeterGroup, c: &CoxeterWord, sign: i64, limit: usize, cap: usize) -> Result<()> {
        let prov = if sign > 0 { Provenance::FromC } else { Provenance::FromAntiCinv };
        let sortables = sortable::enumerate_sortables(g, c, limit, cap)?;
        let signed = |l: &Vector| linalg::scale(l, sign);
        let ids: Vec<usize> = sortables
            .iter()
            .map(|v| self.insert(v.labels.iter().map(signed).collect(), prov, v.word.clone()))
            .collect();
        for (k, v) in sortables.iter().enumerate() {
            for beta in &v.covers {
                let tv = g.reflect_left(beta, &v.element);
                let down = sortable::pi_down_in(g, &tv, &sortables)?;
                let j = sortables.iter().position(|x| x == down).expect("enumerated");
                self.connect(ids[k], &signed(&linalg::neg(beta)), ids[j], &signed(beta));
            }
        }
        Ok(())
    }
}

fn new_graph(n: usize, max_len: usize, lookahead: usize) -> FrameworkGraph {
    FrameworkGraph { n, max_len, lookahead, ..Default::default() }
}

/// `Camb_c` on c-sortable elements of length at most `max_len + lookahead`.
pub fn camb_graph(rs: &RootSpace, max_len: usize, lookahead: usize, cap: usize) -> Result<FrameworkGraph> {
    let g = CoxeterGroup::new(&rs.sys);
    let mut fg = new_graph(rs.rank(), max_len, lookahead);
    fg.add_side(&g, &rs.coxeter_word(), 1, max_len + lookahead, cap)?;
    Ok(fg)
}

/// `DCamb_c`: `Camb_c` glued to `−Camb_{c⁻¹}` along equal label sets.
pub fn doubled_graph(rs: &RootSpace, max_len: usize, lookahead: usize, cap: usize) -> Result<FrameworkGraph> {
    let g = CoxeterGroup::new(&rs.sys);
    let c = rs.coxeter_word();
    let mut fg = new_graph(rs.rank(), max_len, lookahead);
    fg.add_side(&g, &c, 1, max_len + lookahead, cap)?;
    fg.add_side(&g, &c.inverse(), -1, max_len + lookahead, cap)?;
    Ok(fg)
}

/// `((w₀)_J, (w₀)_{S∖J})` where `S∖J` is the first `split` letters of `c`.
pub fn overlap_witness(rs: &RootSpace, split: usize) -> Result<(SortableVertex, SortableVertex)> {
    let g = CoxeterGroup::new(&rs.sys);
    let c = rs.coxeter_word();
    let head: Vec<usize> = c.letters()[..split].to_vec();
    let tail: Vec<usize> = c.letters()[split..].to_vec();
    if !rs.sys.is_finite_type(&head) || !rs.sys.is_finite_type(&tail) {
        return Err(Error::InfiniteParabolicBlock);
    }
    let u = g.longest_element(&tail)?;
    let v = g.longest_element(&head)?;
    let uc = sortable::vertex(&g, &u, &c)?;
    let vc = sortable::vertex(&g, &v, &c.inverse())?;
    let mut a = uc.labels.clone();
    let mut b: Vec<Vector> = vc.labels.iter().map(|l| linalg::neg(l)).collect();
    a.sort();
    b.sort();
    if a != b {
        return Err(Error::NotFound);
    }
    Ok((uc, vc))
}

/// Smallest split whose two parabolic blocks are finite.
pub fn first_finite_split(rs: &RootSpace) -> Option<usize> {
    let c = rs.coxeter_word();
    (1..rs.rank()).find(|&i| {
        rs.sys.is_finite_type(&c.letters()[..i]) && rs.sys.is_finite_type(&c.letters()[i..])
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Meet {
    /// The cones meet in the face spanned by these common rays.
    SharedFace { rays: Vec<Vector> },
    /// A point of `F1 ∩ F2` outside the cone on the common rays.
    Violation { witness: Vec<Q> },
}

impl Meet {
    pub fn is_ok(&self) -> bool {
        matches!(self, Meet::SharedFace { .. })
    }

    pub fn dim(&self) -> Option<usize> {
        match self {
            Meet::SharedFace { rays } => Some(rays.len()),
            Meet::Violation { .. } => None,
        }
    }
}

/// Exact test that two simplicial cones meet in a common face.
pub fn meets_nicely(sys: &RootSystem, f1: &SimplicialCone, f2: &SimplicialCone) -> Meet {
    let n = sys.rank();
    let common: Vec<Vector> = f1.rays.iter().filter(|r| f2.rays.contains(r)).cloned().collect();
    // λ with μ_i = d_i λ_i, so ⟨r, λ⟩ = r · μ.
    let mut s = System::new(n).all_free();
    let row = |r: &Vector| r.iter().map(|&x| q(x)).collect::<Vec<Q>>();
    for r in &f1.rays {
        let rel = if common.contains(r) { (Rel::Eq, Q::zero()) } else { (Rel::Ge, Q::one()) };
        s.add(row(r), rel.0, rel.1);
    }
    for r in f2.rays.iter().filter(|r| !common.contains(r)) {
        s.add(row(r), Rel::Le, -Q::one());
    }
    if s.solve().is_some() {
        return Meet::SharedFace { rays: common };
    }
    let (n1, n2) = (f1.rays.len(), f2.rays.len());
    let mut w = System::new(n1 + n2);
    for i in 0..n {
        let mut coefs: Vec<Q> = f1.rays.iter().map(|r| q(r[i])).collect();
        coefs.extend(f2.rays.iter().map(|r| q(-r[i])));
        w.add(coefs, Rel::Eq, Q::zero());
    }
    let mut norm: Vec<Q> = f1.rays.iter().map(|r| if common.contains(r) { Q::zero() } else { Q::one() }).collect();
    norm.extend(f2.rays.iter().map(|r| if common.contains(r) { Q::zero() } else { Q::one() }));
    w.add(norm, Rel::Eq, Q::one());
    let sol = w.solve().expect("Farkas alternative must be feasible");
    let witness = (0..n).map(|i| (0..n1).map(|k| sol[k] * q(f1.rays[k][i])).sum()).collect();
    Meet::Violation { witness }
}

#[derive(Clone, Debug, Default)]
pub struct FanReport {
    pub cones: usize,
    pub pairs: usize,
    pub violations: Vec<(usize, usize, Vec<Q>)>,
}

impl FanReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn fan_check(sys: &RootSystem, cones: &[SimplicialCone]) -> FanReport {
    let mut rep = FanReport { cones: cones.len(), ..Default::default() };
    for i in 0..cones.len() {
        for j in i + 1..cones.len() {
            rep.pairs += 1;
            if let Meet::Violation { witness } = meets_nicely(sys, &cones[i], &cones[j]) {
                rep.violations.push((i, j, witness));
            }
        }
    }
    rep
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StarKind {
    /// The rank-two sequence closes after `length` steps.
    Cycle { length: usize },
    /// Both directions run into unresolved slots after the given numbers of steps.
    Open { forward: usize, backward: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Star {
    pub kind: StarKind,
    /// Cycle length predicted by the type of `Φ'` when it is finite.
    pub expected_length: Option<usize>,
    pub vertices: Vec<usize>,
    /// Rays of the starting cone other than those dual to the two slots.
    pub face: Vec<Vector>,
    pub subsystem: RankTwoType,
    /// Every visited vertex contains the face rays.
    pub face_shared: bool,
}

/// The slot at `v'` reached through slot `cross` of `v` that corresponds to
/// slot `other` of `v` under the reflection rule.
pub fn mu(rs: &RootSpace, fg: &FrameworkGraph, v: usize, cross: usize, other: usize) -> Option<(usize, usize, usize)> {
    let (w, arrival) = fg.vertices[v].slots[cross]?;
    let beta = &fg.vertices[v].labels[cross];
    let beta_pos = if linalg::sign(beta) > 0 { beta.clone() } else { linalg::neg(beta) };
    let gamma = &fg.vertices[v].labels[other];
    let image = if other == cross {
        linalg::neg(gamma)
    } else if !rs.omega_check(&beta_pos, gamma).is_negative() {
        let k = rs.sys.k_check(&beta_pos, gamma).to_integer() as i64;
        linalg::sub(gamma, &linalg::scale(&beta_pos, k))
    } else {
        gamma.clone()
    };
    let slot = fg.vertices[w].slot_of(&image)?;
    Some((w, arrival, slot))
}

/// `h + 2` for a finite rank-two subsystem with Coxeter number `h`:
/// 4, 5, 6, 8 for `A₁×A₁`, `A₂`, `B₂`, `G₂`.
pub fn finite_cycle_length(sys: &RootSystem, beta: &[i64], gamma: &[i64]) -> Option<usize> {
    let p = sys.k_check(beta, gamma) * sys.k_check(gamma, beta);
    if !p.is_integer() {
        return None;
    }
    match p.to_integer() {
        0 => Some(4),
        1 => Some(5),
        2 => Some(6),
        3 => Some(8),
        _ => None,
    }
}

const STAR_STEP_CAP: usize = 10_000;

/// Walks the rank-two sequence through slots `e`, `f` of `v`.
pub fn rank_two_star(rs: &RootSpace, fg: &FrameworkGraph, v: usize, e: usize, f: usize) -> Result<Star> {
    let walk = |cross0: usize, other0: usize| -> (Vec<usize>, bool) {
        let mut state = (v, cross0, other0);
        let mut seen = vec![v];
        for _ in 0..STAR_STEP_CAP {
            let Some((w, arrival, next)) = mu(rs, fg, state.0, state.1, state.2) else {
                return (seen, false);
            };
            state = (w, next, arrival);
            if state == (v, cross0, other0) {
                return (seen, true);
            }
            seen.push(w);
        }
        (seen, false)
    };
    let (fwd, closed) = walk(e, f);
    let cone = fg.cone(&rs.sys, v)?;
    let face: Vec<Vector> = (0..fg.n).filter(|&k| k != e && k != f).map(|k| cone.rays[k].clone()).collect();
    let (kind, vertices) = if closed {
        (StarKind::Cycle { length: fwd.len() }, fwd)
    } else {
        let (bwd, _) = walk(f, e);
        let kind = StarKind::Open { forward: fwd.len() - 1, backward: bwd.len() - 1 };
        let mut all = fwd;
        all.extend(bwd.into_iter().skip(1));
        (kind, all)
    };
    let face_shared = vertices
        .iter()
        .all(|&u| face.iter().all(|r| fg.vertices[u].labels.iter().all(|b| rs.sys.pair(r, b) >= 0)));
    let labels = &fg.vertices[v].labels;
    let subsystem = rs.sys.plane_type(&labels[e], &labels[f]);
    let expected_length = finite_cycle_length(&rs.sys, &labels[e], &labels[f]);
    Ok(Star { kind, expected_length, vertices, face, subsystem, face_shared })
}

/// The boundary region `∂Tits ∖ |DF_c|` and its relation to the finite
/// Coxeter fan of `W₀`, computed exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundarySupport {
    pub plus: Vec<Vector>,
    pub xc: Vec<Q>,
    /// Extreme rays of the closure of the complement cone inside `δ⊥`.
    pub complement_rays: Vec<Vector>,
    pub chambers: Vec<Chamber>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    pub rays: Vec<Vector>,
    pub contains_xc: bool,
    /// Chamber lies in the closure of the complement cone.
    pub in_complement_closure: bool,
    pub covered_by_c: bool,
    pub covered_by_cinv: bool,
}

impl BoundarySupport {
    pub fn complement_is_open(&self) -> bool {
        let n = self.xc.len();
        linalg::rank(&self.complement_rays) == n - 1
    }
}

fn delta_row(sys: &RootSystem, delta: &[i64]) -> Vec<Q> {
    delta.iter().zip(sys.symmetrizer()).map(|(&a, &d)| q(a * d)).collect()
}

fn root_row(sys: &RootSystem, beta: &[i64]) -> Vec<Q> {
    delta_row(sys, beta)
}

/// Extreme rays of `{x ∈ δ⊥ : ⟨x,β⟩ ≤ 0 for β ∈ normals}`.
fn extreme_rays_le(sys: &RootSystem, delta: &[i64], normals: &[Vector]) -> Vec<Vector> {
    let n = sys.rank();
    let mut out: Vec<Vector> = Vec::new();
    let k = n - 2;
    let m = normals.len();
    let mut idx: Vec<usize> = (0..k).collect();
    if m < k {
        return out;
    }
    loop {
        let mut rows = vec![delta_row(sys, delta)];
        rows.extend(idx.iter().map(|&i| root_row(sys, &normals[i])));
        let ker = linalg::nullspace_q(&rows, n);
        if ker.len() == 1 {
            let r = linalg::primitive(&ker[0]);
            for cand in [r.clone(), linalg::neg(&r)] {
                if normals.iter().all(|b| sys.pair(&cand, b) <= 0) && !out.contains(&cand) {
                    out.push(cand);
                }
            }
        }
        // next k-subset
        let mut p = k;
        loop {
            if p == 0 {
                out.sort();
                return out;
            }
            p -= 1;
            if idx[p] < m - k + p {
                idx[p] += 1;
                for t in p + 1..k {
                    idx[t] = idx[t - 1] + 1;
                }
                break;
            }
        }
        if k == 0 {
            out.sort();
            return out;
        }
    }
}

/// Elements of the finite parabolic `W_J` as action matrices.
fn parabolic_elements(g: &CoxeterGroup, j: &[usize]) -> Vec<crate::GroupElement> {
    let mut seen = alloc::collections::BTreeSet::new();
    let mut stack = vec![g.identity()];
    seen.insert(g.identity());
    while let Some(w) = stack.pop() {
        for &s in j {
            let ws = g.mul_right(&w, s);
            if seen.insert(ws.clone()) {
                stack.push(ws);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn boundary_support(rs: &RootSpace, fg: &FrameworkGraph) -> Result<BoundarySupport> {
    let sys = &rs.sys;
    let aff = sys.affine_data()?;
    let split = rs.phi0_split()?;
    let n = sys.rank();
    let g = CoxeterGroup::new(sys);
    let complement_rays = extreme_rays_le(sys, &aff.delta, &split.plus);
    let mut chambers = Vec::new();
    for u in parabolic_elements(&g, &aff.s0) {
        let walls: Vec<Vector> = aff.s0.iter().map(|&s| g.act_root(&u, &sys.simple_root(s))).collect();
        let mut rays = Vec::new();
        for k in 0..walls.len() {
            let mut rows = vec![delta_row(sys, &aff.delta)];
            rows.extend((0..walls.len()).filter(|&t| t != k).map(|t| root_row(sys, &walls[t])));
            let ker = linalg::nullspace_q(&rows, n);
            let mut r = linalg::primitive(&ker[0]);
            if sys.pair(&r, &walls[k]) < 0 {
                r = linalg::neg(&r);
            }
            rays.push(r);
        }
        let contains_xc = walls.iter().all(|w| !sys.pair_q(&split.xc_full, w).is_negative());
        let in_closure = rays.iter().all(|r| split.plus.iter().all(|b| sys.pair(r, b) <= 0));
        let covered = |prov: Provenance| {
            fg.vertices.iter().any(|v| {
                (v.provenance == prov || v.provenance == Provenance::Both)
                    && rays.iter().all(|r| v.labels.iter().all(|b| sys.pair(r, b) >= 0))
            })
        };
        chambers.push(Chamber {
            covered_by_c: covered(Provenance::FromC),
            covered_by_cinv: covered(Provenance::FromAntiCinv),
            rays,
            contains_xc,
            in_complement_closure: in_closure,
        });
    }
    Ok(BoundarySupport { plus: split.plus, xc: split.xc_full, complement_rays, chambers })
}

/// Whether the cone of `v` meets the open complement cone.
pub fn cone_meets_complement(sys: &RootSystem, aff: &AffineData, plus: &[Vector], labels: &[Vector]) -> bool {
    let n = sys.rank();
    let mut s = System::new(n).all_free();
    s.add(delta_row(sys, &aff.delta), Rel::Eq, Q::zero());
    for b in labels {
        s.add(root_row(sys, b), Rel::Ge, Q::zero());
    }
    for b in plus {
        s.add(root_row(sys, b), Rel::Le, -Q::one());
    }
    s.solve().is_some()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointKind {
    Point,
    Direction,
}

/// Exact points and recession directions of `cone ∩ {⟨x,δ⟩ = level}`.
pub fn slice(sys: &RootSystem, delta: &[i64], cone: &SimplicialCone, level: i64) -> Vec<(PointKind, Vec<Q>)> {
    let t: Vec<i64> = cone.rays.iter().map(|r| sys.pair(r, delta)).collect();
    let mut out = Vec::new();
    let k = cone.rays.len();
    for i in 0..k {
        if level != 0 && t[i].signum() == level.signum() {
            let s = Q::new(level as i128, t[i] as i128);
            out.push((PointKind::Point, cone.rays[i].iter().map(|&x| q(x) * s).collect()));
        }
        if t[i] == 0 {
            out.push((PointKind::Direction, cone.rays[i].iter().map(|&x| q(x)).collect()));
        }
    }
    for i in 0..k {
        for j in 0..k {
            if t[i] > 0 && t[j] < 0 {
                let d: Vector = (0..sys.rank()).map(|m| -t[j] * cone.rays[i][m] + t[i] * cone.rays[j][m]).collect();
                let d = linalg::primitive_int(&d);
                out.push((PointKind::Direction, d.iter().map(|&x| q(x)).collect()));
            }
        }
    }
    out
}

/// Number of cones whose interior meets `δ⊥`.
pub fn cones_crossing_boundary(sys: &RootSystem, delta: &[i64], cones: &[SimplicialCone]) -> usize {
    cones
        .iter()
        .filter(|c| {
            let t: Vec<i64> = c.rays.iter().map(|r| sys.pair(r, delta)).collect();
            t.iter().any(|&x| x > 0) && t.iter().any(|&x| x < 0)
        })
        .count()
}
