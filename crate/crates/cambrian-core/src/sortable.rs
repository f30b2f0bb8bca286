//! c-sortable elements, their label sets `C_c(v)`, the projection `π↓^c`,
//! and the alignment characterization.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::coxeter::{CoxeterGroup, GroupElement};
use crate::linalg::{self, Matrix};
use crate::rootsys::{RankTwoType, RootSpace};
use crate::{Error, Result, Vector};

/// A word for a Coxeter element: every index of the parabolic it lives in
/// appears exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterWord {
    word: Vec<usize>,
    cartan: Matrix,
}

impl CoxeterWord {
    pub fn new(word: Vec<usize>, cartan: Matrix) -> Self {
        CoxeterWord { word, cartan }
    }

    pub fn letters(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    fn with(&self, word: Vec<usize>) -> Self {
        CoxeterWord { word, cartan: self.cartan.clone() }
    }

    fn commute(&self, a: usize, b: usize) -> bool {
        self.cartan[a][b] == 0
    }

    pub fn inverse(&self) -> Self {
        let mut w = self.word.clone();
        w.reverse();
        self.with(w)
    }

    /// Letters that can be brought to the front by commutations.
    pub fn initial_letters(&self) -> Vec<usize> {
        (0..self.word.len())
            .filter(|&p| self.word[..p].iter().all(|&a| self.commute(a, self.word[p])))
            .map(|p| self.word[p])
            .collect()
    }

    pub fn final_letters(&self) -> Vec<usize> {
        self.inverse().initial_letters()
    }

    pub fn is_initial(&self, s: usize) -> bool {
        self.initial_letters().contains(&s)
    }

    /// The word with an initial letter `s` moved to the front.
    pub fn move_to_front(&self, s: usize) -> Self {
        assert!(self.is_initial(s));
        let mut w: Vec<usize> = self.word.iter().copied().filter(|&a| a != s).collect();
        w.insert(0, s);
        self.with(w)
    }

    /// `s c s` for `s` initial.
    pub fn conjugate_initial(&self, s: usize) -> Self {
        assert!(self.is_initial(s));
        let mut w: Vec<usize> = self.word.iter().copied().filter(|&a| a != s).collect();
        w.push(s);
        self.with(w)
    }

    /// `s c` for `s` initial, or `c s` for `s` final: the word with `s` removed.
    pub fn remove(&self, s: usize) -> Self {
        self.with(self.word.iter().copied().filter(|&a| a != s).collect())
    }

    pub fn restrict(&self, j: &[usize]) -> Self {
        self.with(self.word.iter().copied().filter(|a| j.contains(a)).collect())
    }
}

/// A c-sortable element with its sorting word, labels and cover reflections.
///
/// `labels[k]` is the label attached to the letter `letters[k]` of `c`, in
/// increasing letter order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SortableVertex {
    pub element: GroupElement,
    pub word: Vec<usize>,
    pub labels: Vec<Vector>,
    pub covers: Vec<Vector>,
}

impl SortableVertex {
    pub fn length(&self) -> usize {
        self.word.len()
    }
}

/// Chooses the initial letter to peel off; receives the initial letters.
pub trait Chooser {
    fn choose(&mut self, initial: &[usize]) -> usize;
}

struct First;

impl Chooser for First {
    fn choose(&mut self, _initial: &[usize]) -> usize {
        0
    }
}

impl<F: FnMut(&[usize]) -> usize> Chooser for F {
    fn choose(&mut self, initial: &[usize]) -> usize {
        self(initial)
    }
}

/// Runs the sortability recursion. Calls `take(s, prefix)` whenever `w ≥ s`
/// and `drop(s, prefix)` when `s` is removed from `c`; `prefix` is the
/// product of the letters taken so far. Returns whether `w` is sortable.
fn recurse(
    g: &CoxeterGroup,
    w: &GroupElement,
    c: &CoxeterWord,
    chooser: &mut dyn Chooser,
    mut take: impl FnMut(usize),
    mut drop: impl FnMut(usize, &GroupElement),
) -> bool {
    let mut w = w.clone();
    let mut c = c.clone();
    let mut prefix = g.identity();
    let mut support = g.support(&w);
    loop {
        if c.is_empty() {
            return g.is_identity(&w);
        }
        let initial = c.initial_letters();
        let s = initial[chooser.choose(&initial) % initial.len()];
        if g.geq_s(&w, s) {
            take(s);
            w = g.mul_left(s, &w);
            prefix = g.mul_right(&prefix, s);
            c = c.conjugate_initial(s);
            support = g.support(&w);
        } else {
            drop(s, &prefix);
            c = c.remove(s);
            if !support.iter().all(|x| c.letters().contains(x)) {
                return false;
            }
        }
    }
}

pub fn is_sortable(g: &CoxeterGroup, w: &GroupElement, c: &CoxeterWord) -> bool {
    recurse(g, w, c, &mut First, |_| {}, |_, _| {})
}

/// Sortability with initial letters picked by `chooser`.
pub fn is_sortable_with(g: &CoxeterGroup, w: &GroupElement, c: &CoxeterWord, chooser: &mut dyn Chooser) -> bool {
    recurse(g, w, c, chooser, |_| {}, |_, _| {})
}

/// The c-sorting word: the leftmost reduced subword of `c c c …`.
pub fn sorting_word(g: &CoxeterGroup, w: &GroupElement, c: &CoxeterWord) -> Result<Vec<usize>> {
    let mut word = Vec::new();
    if recurse(g, w, c, &mut First, |s| word.push(s), |_, _| {}) {
        Ok(word)
    } else {
        Err(Error::NotSortable)
    }
}

/// `C_c(v)`, ordered by letter index of `c`.
pub fn labels(g: &CoxeterGroup, v: &GroupElement, c: &CoxeterWord) -> Result<Vec<Vector>> {
    labels_with(g, v, c, &mut First)
}

pub fn labels_with(
    g: &CoxeterGroup,
    v: &GroupElement,
    c: &CoxeterWord,
    chooser: &mut dyn Chooser,
) -> Result<Vec<Vector>> {
    let sys = g.root_system();
    let mut out: BTreeMap<usize, Vector> = BTreeMap::new();
    let ok = recurse(g, v, c, chooser, |_| {}, |s, prefix| {
        out.insert(s, g.act_root(prefix, &sys.simple_root(s)));
    });
    if !ok {
        return Err(Error::NotSortable);
    }
    Ok(out.into_values().collect())
}

pub fn vertex(g: &CoxeterGroup, v: &GroupElement, c: &CoxeterWord) -> Result<SortableVertex> {
    Ok(SortableVertex {
        element: v.clone(),
        word: sorting_word(g, v, c)?,
        labels: labels(g, v, c)?,
        covers: g.cover_reflections(v),
    })
}

/// Sortable elements of length at most `max_len`, grown upward through
/// sortable elements only (prefixes of sorting words are sortable).
pub fn enumerate_sortables(
    g: &CoxeterGroup,
    c: &CoxeterWord,
    max_len: usize,
    cap: usize,
) -> Result<Vec<SortableVertex>> {
    let mut seen = BTreeSet::new();
    seen.insert(g.identity());
    let mut layer = vec![g.identity()];
    let mut out = vec![vertex(g, &g.identity(), c)?];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for s in 0..g.rank() {
                if g.is_right_descent(w, s) {
                    continue;
                }
                let ws = g.mul_right(w, s);
                if seen.contains(&ws) || !is_sortable(g, &ws, c) {
                    continue;
                }
                seen.insert(ws.clone());
                if seen.len() > cap {
                    return Err(Error::ResourceLimit(cap));
                }
                out.push(vertex(g, &ws, c)?);
                next.push(ws);
            }
        }
        layer = next;
    }
    out.sort_by(|a, b| (a.length(), &a.word).cmp(&(b.length(), &b.word)));
    Ok(out)
}

/// `π↓^c(w)` by cone membership: the sortable `v` with `w⁻¹β` positive for
/// all `β ∈ C_c(v)`.
pub fn pi_down_in<'a>(g: &CoxeterGroup, w: &GroupElement, sortables: &'a [SortableVertex]) -> Result<&'a SortableVertex> {
    let len = g.length(w);
    sortables
        .iter()
        .filter(|v| v.length() <= len)
        .find(|v| v.labels.iter().all(|b| linalg::sign(&g.act_root_inverse(w, b)) > 0))
        .ok_or(Error::SearchExhausted)
}

pub fn pi_down(g: &CoxeterGroup, w: &GroupElement, c: &CoxeterWord, search_bound: usize) -> Result<SortableVertex> {
    let sortables = enumerate_sortables(g, c, search_bound, crate::DEFAULT_NODE_CAP)?;
    pi_down_in(g, w, &sortables).cloned()
}

/// Maximal sortable element below `w` by exhaustive search.
pub fn pi_down_brute_force(g: &CoxeterGroup, w: &GroupElement, c: &CoxeterWord) -> Result<GroupElement> {
    let below: Vec<GroupElement> = g
        .elements_up_to(g.length(w), crate::DEFAULT_NODE_CAP)?
        .into_iter()
        .filter(|u| g.weak_leq(u, w) && is_sortable(g, u, c))
        .collect();
    let max: Vec<&GroupElement> = below.iter().filter(|u| below.iter().all(|x| g.weak_leq(x, u))).collect();
    match max.as_slice() {
        [m] => Ok((*m).clone()),
        _ => Err(Error::SearchExhausted),
    }
}

/// c-alignment of `w`, given a list of positive roots containing every root
/// of height up to the largest inversion height.
pub fn is_aligned_with(rs: &RootSpace, g: &CoxeterGroup, w: &GroupElement, positive: &[Vector]) -> bool {
    let sys = &rs.sys;
    let inv: Vec<Vector> = g.inversions(w).into_iter().collect();
    let mut planes: BTreeSet<(Vector, Vector)> = BTreeSet::new();
    for a in 0..inv.len() {
        for b in a + 1..inv.len() {
            let Ok(r2) = sys.rank_two_from(positive, &inv[a], &inv[b]) else { continue };
            let (beta, gamma) = r2.canonical.clone();
            if !planes.insert((beta.clone(), gamma.clone())) {
                continue;
            }
            let in_plane: BTreeSet<&Vector> = inv.iter().filter(|r| r2.positive_roots.contains(r)).collect();
            let contains_all = r2.kind == RankTwoType::Finite
                && finite_plane_roots(rs, &beta, &gamma).iter().all(|r| in_plane.contains(r));
            let has = |r: &Vector| in_plane.contains(r);
            let only = |r: &Vector| in_plane.len() == 1 && has(r);
            let ok = match rs.omega(&beta, &gamma).signum() {
                0 => in_plane.iter().all(|r| **r == beta || **r == gamma),
                1 => !has(&gamma) || only(&gamma) || contains_all,
                _ => !has(&beta) || only(&beta) || contains_all,
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

pub fn is_aligned(rs: &RootSpace, g: &CoxeterGroup, w: &GroupElement) -> bool {
    let h = g.inversions(w).iter().map(|r| linalg::abs_sum(r)).max().unwrap_or(1);
    let positive = rs.sys.positive_roots(h);
    is_aligned_with(rs, g, w, &positive)
}

/// Positive roots of a finite rank-two system with simple roots `β`, `γ`.
fn finite_plane_roots(rs: &RootSpace, beta: &Vector, gamma: &Vector) -> Vec<Vector> {
    let sys = &rs.sys;
    let refl = |x: &Vector, r: &Vector| -> Vector {
        let c = sys.k_check(x, r).to_integer() as i64;
        linalg::sub(r, &linalg::scale(x, c))
    };
    let mut seen: BTreeSet<Vector> = [beta.clone(), gamma.clone()].into_iter().collect();
    let mut stack: Vec<Vector> = seen.iter().cloned().collect();
    while let Some(r) = stack.pop() {
        for x in [beta, gamma] {
            let t = refl(x, &r);
            if linalg::sign(&t) > 0 && seen.len() < 64 && seen.insert(t.clone()) {
                stack.push(t);
            }
        }
    }
    seen.into_iter().collect()
}
