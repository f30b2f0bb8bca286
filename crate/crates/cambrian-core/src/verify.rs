//! Checks of the framework axioms, the dictionary with principal-coefficient
//! seeds, green sequences and completeness on truncated graphs.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Signed;

use crate::coxeter::CoxeterGroup;
use crate::exchange::{self, ExchangeMatrix, Seed};
use crate::fan::{self, FrameworkGraph};
use crate::linalg;
use crate::rootsys::RootSpace;
use crate::sortable;
use crate::{Error, Result, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Base,
    Root,
    E1,
    E2,
    E3,
    Reflection,
    FullEdge,
    Completeness,
}

pub const AXIOMS: [Axiom; 8] = [
    Axiom::Base,
    Axiom::Root,
    Axiom::E1,
    Axiom::E2,
    Axiom::E3,
    Axiom::Reflection,
    Axiom::FullEdge,
    Axiom::Completeness,
];

/// Self-contained counterexample; `replay` re-evaluates it from the data alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub axiom: Axiom,
    pub vertex: usize,
    pub labels: Vec<Vector>,
    /// Slot indices involved: `[e]`, `[e, f]` or a cycle of slots for E3.
    pub slots: Vec<usize>,
    /// Neighbor labels for Reflection.
    pub neighbor: Option<Vec<Vector>>,
}

#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    /// Interior vertices.
    pub scope: Vec<usize>,
    pub vertices_checked: usize,
    pub edges_checked: usize,
    pub failures: Vec<Witness>,
}

impl AxiomReport {
    pub fn passed(&self, a: Axiom) -> bool {
        self.failures.iter().all(|w| w.axiom != a)
    }

    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn e3_cycle(rs: &RootSpace, labels: &[Vector]) -> Option<Vec<usize>> {
    let n = labels.len();
    let adj = |a: usize, b: usize| a != b && rs.euler(&labels[a], &labels[b]) != 0;
    // 0 = new, 1 = on stack, 2 = done
    let mut state = vec![0u8; n];
    let mut stack: Vec<usize> = Vec::new();
    fn dfs(u: usize, n: usize, adj: &dyn Fn(usize, usize) -> bool, state: &mut [u8], stack: &mut Vec<usize>) -> Option<Vec<usize>> {
        state[u] = 1;
        stack.push(u);
        for w in 0..n {
            if !adj(u, w) {
                continue;
            }
            if state[w] == 1 {
                let p = stack.iter().position(|&x| x == w).unwrap();
                return Some(stack[p..].to_vec());
            }
            if state[w] == 0 {
                if let Some(c) = dfs(w, n, adj, state, stack) {
                    return Some(c);
                }
            }
        }
        stack.pop();
        state[u] = 2;
        None
    }
    for u in 0..n {
        if state[u] == 0 {
            if let Some(c) = dfs(u, n, &adj, &mut state, &mut stack) {
                return Some(c);
            }
        }
    }
    None
}

/// Image of `γ` across a wall labelled `±β_t`.
pub fn reflection_image(rs: &RootSpace, beta: &[i64], gamma: &[i64]) -> Vector {
    let bt = if linalg::sign(beta) > 0 { beta.to_vec() } else { linalg::neg(beta) };
    if rs.omega_check(&bt, gamma).is_negative() {
        gamma.to_vec()
    } else {
        let k = rs.sys.k_check(&bt, gamma).to_integer() as i64;
        linalg::sub(gamma, &linalg::scale(&bt, k))
    }
}

fn check_vertex(rs: &RootSpace, v: usize, labels: &[Vector], out: &mut Vec<Witness>) {
    let w = |axiom, slots: Vec<usize>| Witness { axiom, vertex: v, labels: labels.to_vec(), slots, neighbor: None };
    let n = labels.len();
    for e in 0..n {
        let s = linalg::sign(&labels[e]);
        if s == 0 || !rs.sys.is_real_root(&labels[e]) {
            out.push(w(Axiom::Root, vec![e]));
        }
    }
    for e in 0..n {
        for f in 0..n {
            if e == f {
                continue;
            }
            let (se, sf) = (linalg::sign(&labels[e]), linalg::sign(&labels[f]));
            let ev = rs.euler(&labels[e], &labels[f]);
            if se > 0 && sf < 0 && ev != 0 {
                out.push(w(Axiom::E1, vec![e, f]));
            }
            if se == sf && se != 0 && ev > 0 {
                out.push(w(Axiom::E2, vec![e, f]));
            }
        }
    }
    if let Some(c) = e3_cycle(rs, labels) {
        out.push(w(Axiom::E3, c));
    }
}

/// Re-evaluates a witness; `true` means it still fails.
pub fn replay(rs: &RootSpace, w: &Witness) -> bool {
    let l = &w.labels;
    match w.axiom {
        Axiom::Base => {
            let mut k = l.clone();
            k.sort();
            let mut pi: Vec<Vector> = (0..rs.rank()).map(|i| linalg::unit(rs.rank(), i)).collect();
            pi.sort();
            k != pi
        }
        Axiom::Root => {
            let b = &l[w.slots[0]];
            linalg::sign(b) == 0 || !rs.sys.is_real_root(b)
        }
        Axiom::E1 => {
            let (b, g) = (&l[w.slots[0]], &l[w.slots[1]]);
            linalg::sign(b) > 0 && linalg::sign(g) < 0 && rs.euler(b, g) != 0
        }
        Axiom::E2 => {
            let (b, g) = (&l[w.slots[0]], &l[w.slots[1]]);
            linalg::sign(b) == linalg::sign(g) && rs.euler(b, g) > 0
        }
        Axiom::E3 => {
            let c = &w.slots;
            c.len() >= 2 && (0..c.len()).all(|i| rs.euler(&l[c[i]], &l[c[(i + 1) % c.len()]]) != 0)
        }
        Axiom::Reflection => {
            let (e, f) = (w.slots[0], w.slots[1]);
            let image = if e == f { linalg::neg(&l[e]) } else { reflection_image(rs, &l[e], &l[f]) };
            w.neighbor.as_ref().is_none_or(|nb| !nb.contains(&image))
        }
        Axiom::FullEdge | Axiom::Completeness => w.neighbor.is_none(),
    }
}

/// Axiom checks. Label axioms run on every enumerated vertex; Reflection on
/// every full edge; Full edge and Completeness on core vertices.
pub fn check_axioms(rs: &RootSpace, fg: &FrameworkGraph) -> AxiomReport {
    let mut rep = AxiomReport { scope: fg.interior(), ..Default::default() };
    if fg.base(1).is_none() {
        rep.failures.push(Witness {
            axiom: Axiom::Base,
            vertex: 0,
            labels: fg.vertices.first().map(|v| v.labels.clone()).unwrap_or_default(),
            slots: vec![],
            neighbor: None,
        });
    }
    for (v, x) in fg.vertices.iter().enumerate() {
        rep.vertices_checked += 1;
        check_vertex(rs, v, &x.labels, &mut rep.failures);
        for (e, slot) in x.slots.iter().enumerate() {
            match *slot {
                Some((w, _)) => {
                    rep.edges_checked += 1;
                    let nb = &fg.vertices[w].labels;
                    for f in 0..x.labels.len() {
                        let image = if e == f {
                            linalg::neg(&x.labels[e])
                        } else {
                            reflection_image(rs, &x.labels[e], &x.labels[f])
                        };
                        if !nb.contains(&image) {
                            rep.failures.push(Witness {
                                axiom: Axiom::Reflection,
                                vertex: v,
                                labels: x.labels.clone(),
                                slots: vec![e, f],
                                neighbor: Some(nb.clone()),
                            });
                        }
                    }
                }
                None if fg.in_core(v) => {
                    let axiom = if linalg::sign(&x.labels[e]) < 0 { Axiom::FullEdge } else { Axiom::Completeness };
                    rep.failures.push(Witness { axiom, vertex: v, labels: x.labels.clone(), slots: vec![e], neighbor: None });
                }
                None => {}
            }
        }
    }
    rep
}

/// Flips the sign of one label, for negative controls.
pub fn corrupt_label(fg: &FrameworkGraph, v: usize, e: usize) -> FrameworkGraph {
    let mut g = fg.clone();
    g.vertices[v].labels[e] = linalg::neg(&g.vertices[v].labels[e]);
    g
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mismatch {
    BMatrix { vertex: usize, e: usize, f: usize, seed: i64, framework: i64 },
    CVector { vertex: usize, e: usize },
    SignCoherence { vertex: usize, column: usize },
    GVector { vertex: usize, e: usize },
    NotInjective { vertex: usize, node: usize },
    Divergent { vertex: usize },
    Missing { vertex: usize, e: usize },
}

#[derive(Clone, Debug, Default)]
pub struct CrossCheckReport {
    /// `matching[v] = (node, slot→column)` for matched framework vertices.
    pub matching: BTreeMap<usize, (usize, Vec<usize>)>,
    pub mismatches: Vec<Mismatch>,
    pub depth: usize,
    /// Exchange-graph classes within `depth`.
    pub exchange_classes: usize,
    /// Exchange-graph classes with every neighbor resolved.
    pub exchange_interior: usize,
    /// Exchange-graph classes within `depth` that no framework vertex reached.
    pub unmatched_classes: Vec<usize>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn vertex_bijection(&self) -> BTreeMap<usize, usize> {
        self.matching.iter().map(|(&v, (n, _))| (v, *n)).collect()
    }
}

fn check_seed(rs: &RootSpace, fg: &FrameworkGraph, v: usize, seed: &Seed, perm: &[usize], out: &mut Vec<Mismatch>) {
    let labels = &fg.vertices[v].labels;
    let n = labels.len();
    let cone = match fg.cone(&rs.sys, v) {
        Ok(c) => c,
        Err(_) => {
            out.push(Mismatch::Divergent { vertex: v });
            return;
        }
    };
    let cvec = seed.c_vectors();
    for e in 0..n {
        let ce = rs.sys.coroot(&labels[e]).unwrap_or_default();
        for f in 0..n {
            let b = seed.matrix.top[perm[e]][perm[f]];
            let w = rs.omega_coroot(&ce, &labels[f]);
            if b != w {
                out.push(Mismatch::BMatrix { vertex: v, e, f, seed: b, framework: w });
            }
        }
        if cvec[perm[e]] != labels[e] {
            out.push(Mismatch::CVector { vertex: v, e });
        }
        if seed.gvectors[perm[e]] != cone.rays[e] {
            out.push(Mismatch::GVector { vertex: v, e });
        }
    }
    for (k, c) in cvec.iter().enumerate() {
        if !exchange::is_sign_coherent(c) {
            out.push(Mismatch::SignCoherence { vertex: v, column: k });
        }
    }
}

/// Lockstep breadth-first matching of the framework graph with the exchange
/// graph. `order(v)` gives the slot order in which `v` is expanded.
pub fn cross_check_with(
    rs: &RootSpace,
    fg: &FrameworkGraph,
    depth: usize,
    cap: usize,
    order: &mut dyn FnMut(usize) -> Vec<usize>,
) -> Result<CrossCheckReport> {
    let b: &ExchangeMatrix = &rs.b;
    let ex = exchange::exchange_graph(b, depth, cap)?;
    let mut rep = CrossCheckReport {
        depth,
        exchange_classes: ex.len(),
        exchange_interior: (0..ex.len()).filter(|&i| !ex.is_frontier(i)).count(),
        ..Default::default()
    };
    let start = fg.base(1).ok_or(Error::NotFound)?;
    let n = rs.rank();
    let id: Vec<usize> = (0..n).collect();
    check_seed(rs, fg, start, &ex.nodes[0].seed, &id, &mut rep.mismatches);
    rep.matching.insert(start, (0, id));
    let mut used: BTreeMap<usize, usize> = BTreeMap::new();
    used.insert(0, start);
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((v, dist)) = queue.pop_front() {
        if dist >= depth {
            continue;
        }
        let (node, perm) = rep.matching[&v].clone();
        for e in order(v) {
            let Some((w, _)) = fg.vertices[v].slots[e] else {
                continue;
            };
            let Some((node2, _)) = ex.nodes[node].edges[perm[e]] else {
                rep.mismatches.push(Mismatch::Missing { vertex: v, e });
                continue;
            };
            let mutated = ex.nodes[node].seed.mutate(perm[e], b)?;
            let lambda = exchange::seeds_equivalent(&mutated, &ex.nodes[node2].seed)?;
            let mut perm2 = vec![usize::MAX; n];
            for f in 0..n {
                let Some((_, _, f2)) = fan::mu(rs, fg, v, e, f) else {
                    rep.mismatches.push(Mismatch::Divergent { vertex: w });
                    continue;
                };
                perm2[f2] = lambda[perm[f]];
            }
            if perm2.contains(&usize::MAX) {
                continue;
            }
            match rep.matching.get(&w) {
                Some((n0, p0)) => {
                    if *n0 != node2 || *p0 != perm2 {
                        rep.mismatches.push(Mismatch::Divergent { vertex: w });
                    }
                }
                None => {
                    if let Some(&other) = used.get(&node2) {
                        rep.mismatches.push(Mismatch::NotInjective { vertex: w, node: other });
                    }
                    used.insert(node2, w);
                    check_seed(rs, fg, w, &ex.nodes[node2].seed, &perm2, &mut rep.mismatches);
                    rep.matching.insert(w, (node2, perm2));
                    queue.push_back((w, dist + 1));
                }
            }
        }
    }
    rep.unmatched_classes = (0..ex.len()).filter(|k| !used.contains_key(k)).collect();
    Ok(rep)
}

pub fn cross_check(rs: &RootSpace, fg: &FrameworkGraph, depth: usize, cap: usize) -> Result<CrossCheckReport> {
    let n = rs.rank();
    cross_check_with(rs, fg, depth, cap, &mut |_| (0..n).collect())
}

/// Maximal green sequence through an overlap witness: up `Camb_c` to
/// `(w₀)_J`, then down `−Camb_{c⁻¹}` from `−(w₀)_{S∖J}` to `−Π`.
pub fn find_green_sequence(rs: &RootSpace, fg: &FrameworkGraph) -> Result<Vec<usize>> {
    let split = fan::first_finite_split(rs).ok_or(Error::InfiniteParabolicBlock)?;
    let (u, v) = fan::overlap_witness(rs, split)?;
    let g = CoxeterGroup::new(&rs.sys);
    let c = rs.coxeter_word();
    let ci = c.inverse();
    let mut path = Vec::new();
    for k in 0..=u.word.len() {
        let p = g.from_word(&u.word[..k]);
        let labels = sortable::labels(&g, &p, &c)?;
        path.push(fg.find(&labels).ok_or(Error::NotFound)?);
    }
    for k in (0..v.word.len()).rev() {
        let p = g.from_word(&v.word[..k]);
        let labels: Vec<Vector> = sortable::labels(&g, &p, &ci)?.iter().map(|l| linalg::neg(l)).collect();
        path.push(fg.find(&labels).ok_or(Error::NotFound)?);
    }
    if path.first() != fg.base(1).as_ref() || path.last() != fg.base(-1).as_ref() {
        return Err(Error::NotFound);
    }
    for pair in path.windows(2) {
        let x = &fg.vertices[pair[0]];
        let e = x.slots.iter().position(|s| s.is_some_and(|(w, _)| w == pair[1])).ok_or(Error::NotFound)?;
        if linalg::sign(&x.labels[e]) <= 0 {
            return Err(Error::NotFound);
        }
    }
    Ok(path)
}

/// Open slots on core vertices, as `(labels, open label)`.
pub fn deficits(fg: &FrameworkGraph) -> Vec<(Vec<Vector>, Vector)> {
    let mut out = Vec::new();
    for v in fg.core() {
        let x = &fg.vertices[v];
        for (e, s) in x.slots.iter().enumerate() {
            if s.is_none() {
                out.push((x.key(), x.labels[e].clone()));
            }
        }
    }
    out.sort();
    out
}

#[derive(Clone, Debug, Default)]
pub struct CompletenessReport {
    pub bounds: (usize, usize),
    pub lookahead: usize,
    pub deficits: (usize, usize),
    /// Deficits present at both bounds.
    pub persistent: Vec<(Vec<Vector>, Vector)>,
}

impl CompletenessReport {
    pub fn complete(&self) -> bool {
        self.deficits == (0, 0)
    }
}

/// Deficits of the doubled graph at `max_len` and `max_len + 1`.
pub fn completeness_scan(rs: &RootSpace, max_len: usize, lookahead: usize, cap: usize) -> Result<CompletenessReport> {
    let a = deficits(&fan::doubled_graph(rs, max_len, lookahead, cap)?);
    let b = deficits(&fan::doubled_graph(rs, max_len + 1, lookahead, cap)?);
    let persistent = a.iter().filter(|d| b.contains(d)).cloned().collect();
    Ok(CompletenessReport { bounds: (max_len, max_len + 1), lookahead, deficits: (a.len(), b.len()), persistent })
}
