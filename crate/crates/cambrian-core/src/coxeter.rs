//! Coxeter group elements as integer action matrices on the root lattice.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::{self, Matrix};
use crate::rootsys::RootSystem;
use crate::{Error, Result, Vector};

const DESCENT_CAP: usize = 100_000;

/// `action` is row-major with column `j` equal to `w(α_j)`; `inverse` is the
/// action of `w⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    action: Vec<i64>,
    inverse: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug)]
pub struct CoxeterGroup {
    n: usize,
    cartan: Matrix,
    sys: RootSystem,
}

impl GroupElement {
    pub fn action_matrix(&self, n: usize) -> Matrix {
        (0..n).map(|i| self.action[i * n..(i + 1) * n].to_vec()).collect()
    }
}

impl CoxeterGroup {
    pub fn new(sys: &RootSystem) -> Self {
        CoxeterGroup { n: sys.rank(), cartan: sys.cartan().clone(), sys: sys.clone() }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.sys
    }

    pub fn identity(&self) -> GroupElement {
        let n = self.n;
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        GroupElement { action: a.clone(), inverse: a }
    }

    pub fn is_identity(&self, w: &GroupElement) -> bool {
        *w == self.identity()
    }

    pub fn generator(&self, s: usize) -> GroupElement {
        self.apply(&self.identity(), s, Side::Right)
    }

    /// `w s` on the right or `s w` on the left.
    pub fn apply(&self, w: &GroupElement, s: usize, side: Side) -> GroupElement {
        match side {
            Side::Right => GroupElement {
                action: self.right_mul(&w.action, s),
                inverse: self.left_mul(&w.inverse, s),
            },
            Side::Left => GroupElement {
                action: self.left_mul(&w.action, s),
                inverse: self.right_mul(&w.inverse, s),
            },
        }
    }

    pub fn mul_right(&self, w: &GroupElement, s: usize) -> GroupElement {
        self.apply(w, s, Side::Right)
    }

    pub fn mul_left(&self, s: usize, w: &GroupElement) -> GroupElement {
        self.apply(w, s, Side::Left)
    }

    // Column j of M·s is M(α_j) − a_sj M(α_s).
    fn right_mul(&self, m: &[i64], s: usize) -> Vec<i64> {
        let n = self.n;
        let mut out = m.to_vec();
        for j in 0..n {
            let a = self.cartan[s][j];
            if a == 0 {
                continue;
            }
            for i in 0..n {
                out[i * n + j] -= a * m[i * n + s];
            }
        }
        out
    }

    fn left_mul(&self, m: &[i64], s: usize) -> Vec<i64> {
        let n = self.n;
        let mut out = m.to_vec();
        for j in 0..n {
            let col: i64 = (0..n).map(|k| self.cartan[s][k] * m[k * n + j]).sum();
            out[s * n + j] -= col;
        }
        out
    }

    pub fn mul(&self, u: &GroupElement, w: &GroupElement) -> GroupElement {
        let mut r = u.clone();
        for s in self.reduced_word(w) {
            r = self.mul_right(&r, s);
        }
        r
    }

    pub fn inverse(&self, w: &GroupElement) -> GroupElement {
        GroupElement { action: w.inverse.clone(), inverse: w.action.clone() }
    }

    pub fn from_word(&self, word: &[usize]) -> GroupElement {
        word.iter().fold(self.identity(), |w, &s| self.mul_right(&w, s))
    }

    fn act(&self, m: &[i64], v: &[i64]) -> Vector {
        let n = self.n;
        (0..n).map(|i| (0..n).map(|j| m[i * n + j] * v[j]).sum()).collect()
    }

    /// `w(β)`.
    pub fn act_root(&self, w: &GroupElement, v: &[i64]) -> Vector {
        self.act(&w.action, v)
    }

    /// `w⁻¹(β)`.
    pub fn act_root_inverse(&self, w: &GroupElement, v: &[i64]) -> Vector {
        self.act(&w.inverse, v)
    }

    /// Image of `α_s`, i.e. column `s` of the action matrix.
    fn column(&self, m: &[i64], s: usize) -> Vector {
        (0..self.n).map(|i| m[i * self.n + s]).collect()
    }

    pub fn is_right_descent(&self, w: &GroupElement, s: usize) -> bool {
        linalg::sign(&self.column(&w.action, s)) < 0
    }

    pub fn right_descents(&self, w: &GroupElement) -> Vec<usize> {
        (0..self.n).filter(|&s| self.is_right_descent(w, s)).collect()
    }

    /// `w ≥ s` in the weak order: `w⁻¹(α_s)` is negative.
    pub fn geq_s(&self, w: &GroupElement, s: usize) -> bool {
        linalg::sign(&self.column(&w.inverse, s)) < 0
    }

    /// Reduced word from greedy right descents, smallest index first.
    pub fn try_reduced_word(&self, w: &GroupElement) -> Result<Vec<usize>> {
        let mut word = Vec::new();
        let mut u = w.clone();
        let id = self.identity();
        while u != id {
            if word.len() > DESCENT_CAP {
                return Err(Error::NonTerminating);
            }
            let s = (0..self.n).find(|&s| self.is_right_descent(&u, s)).ok_or(Error::NonTerminating)?;
            word.push(s);
            u = self.mul_right(&u, s);
        }
        word.reverse();
        Ok(word)
    }

    pub fn reduced_word(&self, w: &GroupElement) -> Vec<usize> {
        self.try_reduced_word(w).expect("group elements have finite length")
    }

    pub fn length(&self, w: &GroupElement) -> usize {
        self.reduced_word(w).len()
    }

    /// Set of letters in any reduced word.
    pub fn support(&self, w: &GroupElement) -> BTreeSet<usize> {
        self.reduced_word(w).into_iter().collect()
    }

    pub fn in_parabolic(&self, w: &GroupElement, j: &[usize]) -> bool {
        self.support(w).iter().all(|s| j.contains(s))
    }

    /// Inversion roots along the reduced word, in reflection order.
    pub fn inversions_ordered(&self, w: &GroupElement) -> Vec<Vector> {
        let mut prefix = self.identity();
        let mut out = Vec::new();
        for s in self.reduced_word(w) {
            out.push(self.act_root(&prefix, &self.sys.simple_root(s)));
            prefix = self.mul_right(&prefix, s);
        }
        out
    }

    pub fn inversions(&self, w: &GroupElement) -> BTreeSet<Vector> {
        self.inversions_ordered(w).into_iter().collect()
    }

    /// `β` positive is an inversion of `w` iff `w⁻¹β` is negative.
    pub fn is_inversion(&self, w: &GroupElement, beta: &[i64]) -> bool {
        linalg::sign(beta) > 0 && linalg::sign(&self.act_root_inverse(w, beta)) < 0
    }

    pub fn weak_leq(&self, u: &GroupElement, w: &GroupElement) -> bool {
        self.inversions_ordered(u).iter().all(|b| self.is_inversion(w, b))
    }

    pub fn parabolic_project(&self, w: &GroupElement, j: &[usize]) -> GroupElement {
        let mut u = self.identity();
        loop {
            let next = j.iter().copied().find(|&s| {
                let r = self.column(&u.action, s);
                linalg::sign(&r) > 0 && self.is_inversion(w, &r)
            });
            match next {
                Some(s) => u = self.mul_right(&u, s),
                None => return u,
            }
        }
    }

    /// Positive roots of the reflections `w s w⁻¹` for right descents `s`.
    pub fn cover_reflections(&self, w: &GroupElement) -> Vec<Vector> {
        self.right_descents(w).into_iter().map(|s| linalg::neg(&self.column(&w.action, s))).collect()
    }

    /// The reflection `t` with root `β`, applied on the left: `t w`.
    pub fn reflect_left(&self, beta: &[i64], w: &GroupElement) -> GroupElement {
        // t = u s u⁻¹ where β = u(α_s); find u by descending β to a simple root.
        let (u, s) = self.root_to_simple(beta);
        let ui = self.inverse(&u);
        let r = self.mul(&ui, w);
        let r = self.mul_left(s, &r);
        self.mul(&u, &r)
    }

    /// `(u, s)` with `u(α_s) = β` for a positive real root `β`.
    pub fn root_to_simple(&self, beta: &[i64]) -> (GroupElement, usize) {
        let mut v = beta.to_vec();
        let mut word = Vec::new();
        loop {
            if linalg::abs_sum(&v) == 1 {
                let s = v.iter().position(|&x| x == 1).expect("positive simple root");
                return (self.from_word(&word), s);
            }
            let i = (0..self.n)
                .find(|&i| linalg::dot(&self.cartan[i], &v) > 0)
                .expect("positive real root");
            v = self.sys.reflect(&v, i);
            word.push(i);
        }
    }

    pub fn longest_element(&self, j: &[usize]) -> Result<GroupElement> {
        if !self.sys.is_finite_type(j) {
            return Err(Error::InfiniteParabolic);
        }
        let mut u = self.identity();
        while let Some(s) = j.iter().copied().find(|&s| !self.is_right_descent(&u, s)) {
            u = self.mul_right(&u, s);
        }
        Ok(u)
    }

    /// Elements of length at most `max_len`, by length then word.
    pub fn elements_up_to(&self, max_len: usize, cap: usize) -> Result<Vec<GroupElement>> {
        let mut seen = BTreeSet::new();
        let mut layer = vec![self.identity()];
        seen.insert(self.identity());
        let mut out = layer.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for s in 0..self.n {
                    if self.is_right_descent(w, s) {
                        continue;
                    }
                    let ws = self.mul_right(w, s);
                    if seen.insert(ws.clone()) {
                        next.push(ws);
                        if seen.len() > cap {
                            return Err(Error::ResourceLimit(cap));
                        }
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        Ok(out)
    }

    /// Unique minimal common upper bound of `u` and `v` among elements of
    /// length at most `bound`.
    pub fn join_bounded(&self, u: &GroupElement, v: &GroupElement, bound: usize) -> Result<GroupElement> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([u.clone()]);
        seen.insert(u.clone());
        let mut uppers = Vec::new();
        while let Some(w) = queue.pop_front() {
            if self.weak_leq(v, &w) {
                uppers.push(w);
                continue;
            }
            if self.length(&w) >= bound {
                continue;
            }
            for s in 0..self.n {
                if !self.is_right_descent(&w, s) {
                    let ws = self.mul_right(&w, s);
                    if seen.insert(ws.clone()) {
                        queue.push_back(ws);
                    }
                }
            }
        }
        let minimal: Vec<&GroupElement> =
            uppers.iter().filter(|a| uppers.iter().all(|b| self.weak_leq(a, b))).collect();
        match minimal.as_slice() {
            [m] => Ok((*m).clone()),
            _ => Err(Error::NoBoundedJoin),
        }
    }
}
