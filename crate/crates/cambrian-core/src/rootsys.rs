//! Root systems of symmetrizable Cartan matrices and the forms `K`, `ω_c`,
//! `E_c` attached to an acyclic exchange matrix.
//!
//! Roots are integer vectors in the simple-root basis, coroots integer
//! vectors in the simple-coroot basis `α_i∨ = α_i / d_i`, and weights
//! integer (or rational) vectors in the fundamental-weight basis dual to the
//! simple coroots.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::exchange::{symmetrizer, ExchangeMatrix};
use crate::linalg::{self, q, Matrix, Q};
use crate::sortable::CoxeterWord;
use crate::{Error, Result, Vector};

/// Default 1-norm bound for root enumeration.
pub const DEFAULT_HEIGHT_BOUND: i64 = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    cartan: Matrix,
    d: Vector,
    sym: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Finite,
    Affine(AffineData),
    /// Everything that is neither finite nor affine, including
    /// decomposable matrices with an affine component.
    Indefinite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineData {
    pub delta: Vector,
    pub s_aff: usize,
    pub s0: Vec<usize>,
    pub theta: Vector,
    /// All roots of the finite system on `S₀`, both signs.
    pub phi0: Vec<Vector>,
    /// Symmetrizer rescaled so that `K(θ,θ) = 2`.
    pub normalized_symmetrizer: Vec<Q>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankTwoType {
    Finite,
    Affine,
    Indefinite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTwo {
    /// Positive roots of `Φ ∩ span(β,γ)` found within the bound.
    pub positive_roots: Vec<Vector>,
    pub kind: RankTwoType,
    pub canonical: (Vector, Vector),
}

impl RootSystem {
    pub fn from_cartan(a: Matrix) -> Result<Self> {
        let n = a.len();
        if a.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        if (0..n).any(|i| a[i][i] != 2) || (0..n).any(|i| (0..n).any(|j| i != j && a[i][j] > 0)) {
            return Err(Error::NotSymmetrizable);
        }
        let d = symmetrizer(&a, |i, j| a[i][j], false)?;
        let sym = (0..n).map(|i| (0..n).map(|j| d[i] * a[i][j]).collect()).collect();
        Ok(RootSystem { cartan: a, d, sym })
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &Matrix {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &Vector {
        &self.d
    }

    /// Gram matrix `K(α_i, α_j) = d_i a_ij`.
    pub fn sym_matrix(&self) -> &Matrix {
        &self.sym
    }

    pub fn simple_root(&self, i: usize) -> Vector {
        linalg::unit(self.rank(), i)
    }

    pub fn k(&self, x: &[i64], y: &[i64]) -> i64 {
        linalg::bilinear(&self.sym, x, y)
    }

    /// `K(x∨, y)` with `x∨` in coroot coordinates.
    pub fn k_coroot(&self, x: &[i64], y: &[i64]) -> i64 {
        linalg::bilinear(&self.cartan, x, y)
    }

    /// `s_i(β) = β − K(α_i∨, β) α_i`.
    pub fn reflect(&self, beta: &[i64], i: usize) -> Vector {
        let mut v = beta.to_vec();
        v[i] -= linalg::dot(&self.cartan[i], beta);
        v
    }

    /// `β∨ = 2β / K(β,β)` in simple-coroot coordinates, if integral.
    pub fn coroot(&self, beta: &[i64]) -> Option<Vector> {
        let kk = self.k(beta, beta);
        if kk <= 0 {
            return None;
        }
        let v: Vec<Q> = beta
            .iter()
            .zip(&self.d)
            .map(|(&b, &d)| Q::new(2 * (b * d) as i128, kk as i128))
            .collect();
        linalg::to_int(&v)
    }

    /// `β∨` in the simple-root basis for an arbitrary rescaled symmetrizer.
    pub fn coroot_in_root_basis(&self, beta: &[i64], d: &[Q]) -> Vec<Q> {
        let n = self.rank();
        let mut kk = Q::zero();
        for i in 0..n {
            for j in 0..n {
                kk += d[i] * q(self.cartan[i][j]) * q(beta[i]) * q(beta[j]);
            }
        }
        beta.iter().map(|&b| q(2 * b) / kk).collect()
    }

    /// `K(β∨, γ)` for roots `β`, `γ`.
    pub fn k_check(&self, beta: &[i64], gamma: &[i64]) -> Q {
        Q::new(2 * self.k(beta, gamma) as i128, self.k(beta, beta) as i128)
    }

    /// `⟨x, β⟩` for a weight `x` and root `β`.
    pub fn pair(&self, x: &[i64], beta: &[i64]) -> i64 {
        x.iter().zip(beta).zip(&self.d).map(|((a, b), d)| a * b * d).sum()
    }

    pub fn pair_q(&self, x: &[Q], beta: &[i64]) -> Q {
        x.iter().zip(beta).zip(&self.d).map(|((a, &b), &d)| a * q(b * d)).sum()
    }

    /// Reduces `β` to a simple root by height-decreasing reflections.
    pub fn is_real_root(&self, beta: &[i64]) -> bool {
        let mut v = match linalg::sign(beta) {
            1 => beta.to_vec(),
            -1 => linalg::neg(beta),
            _ => return false,
        };
        loop {
            if linalg::abs_sum(&v) == 1 {
                return true;
            }
            let Some(i) = (0..self.rank()).find(|&i| linalg::dot(&self.cartan[i], &v) > 0) else {
                return false;
            };
            v = self.reflect(&v, i);
            if linalg::sign(&v) != 1 {
                return false;
            }
        }
    }

    /// All real roots with 1-norm at most `bound`, sorted by height then
    /// coordinates.
    pub fn generate_roots(&self, bound: i64) -> Vec<Vector> {
        let all: Vec<usize> = (0..self.rank()).collect();
        self.closure(&all, Some(bound))
    }

    pub fn positive_roots(&self, bound: i64) -> Vec<Vector> {
        self.generate_roots(bound).into_iter().filter(|r| linalg::sign(r) == 1).collect()
    }

    /// Closure of `±α_j` (`j ∈ J`) under `s_j` (`j ∈ J`).
    fn closure(&self, j: &[usize], bound: Option<i64>) -> Vec<Vector> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        for &i in j {
            for s in [1, -1] {
                let r = linalg::scale(&self.simple_root(i), s);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        while let Some(r) = queue.pop_front() {
            for &i in j {
                let t = self.reflect(&r, i);
                if bound.is_some_and(|b| linalg::abs_sum(&t) > b) {
                    continue;
                }
                if seen.insert(t.clone()) {
                    assert!(linalg::sign(&t) != 0, "root is not sign-coherent");
                    queue.push_back(t);
                }
            }
        }
        let mut out: Vec<Vector> = seen.into_iter().collect();
        out.sort_by_key(|r| (linalg::abs_sum(r), r.clone()));
        out
    }

    /// Roots of the parabolic subsystem on `J`; only call when finite.
    pub fn parabolic_roots(&self, j: &[usize]) -> Vec<Vector> {
        self.closure(j, None)
    }

    fn principal_sym(&self, j: &[usize]) -> Vec<Vec<Q>> {
        j.iter().map(|&a| j.iter().map(|&b| q(self.sym[a][b])).collect()).collect()
    }

    /// Positive definiteness of the symmetrized block on `J`.
    pub fn is_finite_type(&self, j: &[usize]) -> bool {
        (1..=j.len()).all(|k| linalg::det_q(&self.principal_sym(&j[..k])).is_positive())
    }

    pub fn classify(&self) -> Classification {
        let n = self.rank();
        let all: Vec<usize> = (0..n).collect();
        if self.is_finite_type(&all) {
            return Classification::Finite;
        }
        if !linalg::det_q(&self.principal_sym(&all)).is_zero() {
            return Classification::Indefinite;
        }
        let proper_pd = (0..n).all(|s| {
            let j: Vec<usize> = all.iter().copied().filter(|&i| i != s).collect();
            self.is_finite_type(&j)
        });
        if !proper_pd {
            return Classification::Indefinite;
        }
        let kernel = linalg::nullspace(&self.sym, n);
        if kernel.len() != 1 {
            return Classification::Indefinite;
        }
        let mut delta = linalg::primitive(&kernel[0]);
        if delta.iter().any(|&x| x < 0) {
            delta = linalg::neg(&delta);
        }
        if delta.iter().any(|&x| x <= 0) {
            return Classification::Indefinite;
        }
        for s_aff in (0..n).rev() {
            let s0: Vec<usize> = all.iter().copied().filter(|&i| i != s_aff).collect();
            let mut theta = delta.clone();
            theta[s_aff] = 0;
            let phi0 = self.parabolic_roots(&s0);
            if !phi0.contains(&theta) {
                continue;
            }
            let kt = self.k(&theta, &theta);
            let normalized_symmetrizer = self.d.iter().map(|&d| Q::new(2 * d as i128, kt as i128)).collect();
            return Classification::Affine(AffineData {
                delta,
                s_aff,
                s0,
                theta,
                phi0,
                normalized_symmetrizer,
            });
        }
        Classification::Indefinite
    }

    pub fn affine_data(&self) -> Result<AffineData> {
        match self.classify() {
            Classification::Affine(a) => Ok(a),
            _ => Err(Error::NotAffine),
        }
    }

    /// `s_aff(x) = t_θ(x) + ⟨θ∨, x⟩ δ`.
    pub fn simplified_saff_action(&self, aff: &AffineData, x: &[i64]) -> Vector {
        let c = self.k_check(&aff.theta, x);
        assert!(c.is_integer());
        let c = c.to_integer() as i64;
        let t = linalg::sub(x, &linalg::scale(&aff.theta, c));
        linalg::add(&t, &linalg::scale(&aff.delta, c))
    }

    /// The rank-two subsystem `Φ ∩ span(β, γ)` enumerated to `bound`.
    pub fn rank_two_subsystem(&self, beta: &[i64], gamma: &[i64], bound: i64) -> Result<RankTwo> {
        let roots = self.positive_roots(bound);
        self.rank_two_from(&roots, beta, gamma)
    }

    /// As [`rank_two_subsystem`](Self::rank_two_subsystem) with a
    /// precomputed list of positive roots.
    pub fn rank_two_from(&self, positive: &[Vector], beta: &[i64], gamma: &[i64]) -> Result<RankTwo> {
        let n = self.rank();
        let (i, j) = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| beta[i] * gamma[j] - beta[j] * gamma[i] != 0)
            .ok_or(Error::DependentRoots)?;
        let in_plane = |r: &Vector| linalg::rank(&[beta.to_vec(), gamma.to_vec(), r.clone()]) == 2;
        let mut found: Vec<Vector> = positive.iter().filter(|r| in_plane(r)).cloned().collect();
        for r in [beta, gamma] {
            let p = if linalg::sign(r) == 1 { r.to_vec() } else { linalg::neg(r) };
            if !found.contains(&p) {
                found.push(p);
            }
        }
        let cross = |a: &Vector, b: &Vector| a[i] * b[j] - a[j] * b[i];
        let lo = found.iter().find(|a| found.iter().all(|b| cross(a, b) >= 0)).cloned();
        let hi = found.iter().find(|a| found.iter().all(|b| cross(a, b) <= 0)).cloned();
        let (lo, hi) = (lo.ok_or(Error::DependentRoots)?, hi.ok_or(Error::DependentRoots)?);
        let prod = self.k_check(&lo, &hi) * self.k_check(&hi, &lo);
        let kind = if prod < q(4) {
            RankTwoType::Finite
        } else if prod == q(4) {
            RankTwoType::Affine
        } else {
            RankTwoType::Indefinite
        };
        found.sort_by_key(|r| (linalg::abs_sum(r), r.clone()));
        Ok(RankTwo { positive_roots: found, kind, canonical: (lo, hi) })
    }

    /// Type of the plane through two roots via the sign of the Gram
    /// determinant of `K` restricted to it.
    pub fn plane_type(&self, beta: &[i64], gamma: &[i64]) -> RankTwoType {
        let g = self.k(beta, beta) * self.k(gamma, gamma) - self.k(beta, gamma).pow(2);
        match g.signum() {
            1 => RankTwoType::Finite,
            0 => RankTwoType::Affine,
            _ => RankTwoType::Indefinite,
        }
    }
}

/// An acyclic exchange matrix together with its root system and forms.
#[derive(Clone, Debug)]
pub struct RootSpace {
    pub sys: RootSystem,
    pub b: ExchangeMatrix,
    order: Vec<usize>,
    omega: Matrix,
    euler: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Phi0Split {
    pub plus: Vec<Vector>,
    pub zero: Vec<Vector>,
    pub minus: Vec<Vector>,
    /// `x_c` in fundamental-weight coordinates of `V₀*`, indexed like `S₀`.
    pub xc: Vector,
    /// `x_c` as a point of `δ⊥ ⊂ V*` in fundamental-weight coordinates.
    pub xc_full: Vec<Q>,
}

impl RootSpace {
    pub fn build(b: &ExchangeMatrix) -> Result<Self> {
        let order = b.acyclic_order()?;
        let sys = RootSystem::from_cartan(b.cartan_companion())?;
        let n = b.rank();
        let d = b.symmetrizer();
        let omega = (0..n).map(|i| (0..n).map(|j| d[i] * b.get(i, j)).collect()).collect();
        let euler = (0..n)
            .map(|i| (0..n).map(|j| d[i] * euler_entry(b, i, j)).collect())
            .collect();
        Ok(RootSpace { sys, b: b.clone(), order, omega, euler })
    }

    pub fn rank(&self) -> usize {
        self.sys.rank()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn coxeter_word(&self) -> CoxeterWord {
        CoxeterWord::new(self.order.clone(), self.sys.cartan().clone())
    }

    pub fn omega(&self, x: &[i64], y: &[i64]) -> i64 {
        linalg::bilinear(&self.omega, x, y)
    }

    /// `ω_c(x∨, y)` with `x∨` in coroot coordinates.
    pub fn omega_coroot(&self, x: &[i64], y: &[i64]) -> i64 {
        linalg::bilinear(self.b.entries(), x, y)
    }

    pub fn euler(&self, x: &[i64], y: &[i64]) -> i64 {
        linalg::bilinear(&self.euler, x, y)
    }

    pub fn euler_coroot(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += x[i] * euler_entry(&self.b, i, j) * y[j];
            }
        }
        s
    }

    /// `ω_c(β∨, γ)` for roots.
    pub fn omega_check(&self, beta: &[i64], gamma: &[i64]) -> Q {
        Q::new(2 * self.omega(beta, gamma) as i128, self.sys.k(beta, beta) as i128)
    }

    pub fn phi0_split(&self) -> Result<Phi0Split> {
        let aff = self.sys.affine_data()?;
        let delta = &aff.delta;
        let (mut plus, mut zero, mut minus) = (Vec::new(), Vec::new(), Vec::new());
        for r in &aff.phi0 {
            match self.omega(r, delta).signum() {
                1 => plus.push(r.clone()),
                0 => zero.push(r.clone()),
                _ => minus.push(r.clone()),
            }
        }
        let bd = linalg::mat_vec(self.b.entries(), delta);
        let xc: Vector = aff.s0.iter().map(|&i| -bd[i]).collect();
        let d = self.sys.symmetrizer();
        let mut xc_full = vec![Q::zero(); self.rank()];
        let mut acc = Q::zero();
        for (k, &i) in aff.s0.iter().enumerate() {
            xc_full[i] = q(xc[k]);
            acc += q(xc[k] * d[i] * delta[i]);
        }
        xc_full[aff.s_aff] = -acc / q(d[aff.s_aff] * delta[aff.s_aff]);
        Ok(Phi0Split { plus, zero, minus, xc, xc_full })
    }
}

fn euler_entry(b: &ExchangeMatrix, i: usize, j: usize) -> i64 {
    if i == j {
        1
    } else {
        b.get(i, j).min(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g2t() -> RootSpace {
        let b = ExchangeMatrix::validate(vec![vec![0, 1, 1], vec![-3, 0, 0], vec![-1, 0, 0]]).unwrap();
        RootSpace::build(&b).unwrap()
    }

    #[test]
    fn g2_forms() {
        let rs = g2t();
        let (a1, a2) = (linalg::unit(3, 0), linalg::unit(3, 1));
        assert_eq!(rs.omega_coroot(&a1, &a2), 1);
        assert_eq!(rs.euler_coroot(&a1, &a2), 0);
        assert_eq!(rs.euler_coroot(&a2, &a1), -3);
        assert_eq!(rs.euler_coroot(&a1, &a1), 1);
        for i in 0..3 {
            let e = linalg::unit(3, i);
            assert_eq!(rs.omega_coroot(&e, &e), 0);
        }
        assert_eq!(rs.sys.reflect(&a1, 1), vec![1, 3, 0]);
        assert_eq!(rs.sys.reflect(&a1, 0), vec![-1, 0, 0]);
    }

    #[test]
    fn forms_decompose() {
        let rs = g2t();
        for i in 0..3 {
            for j in 0..3 {
                let (x, y) = (linalg::unit(3, i), linalg::unit(3, j));
                assert_eq!(rs.sys.k(&x, &y), rs.euler(&x, &y) + rs.euler(&y, &x));
                assert_eq!(rs.omega(&x, &y), rs.euler(&x, &y) - rs.euler(&y, &x));
            }
        }
    }

    #[test]
    fn root_generation() {
        let a2 = RootSystem::from_cartan(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(a2.generate_roots(2).len(), 6);
        assert_eq!(a2.generate_roots(1).len(), 4);
        let ns = RootSystem::from_cartan(vec![vec![2, -1], vec![-4, 2]]).unwrap();
        assert!(!ns.generate_roots(4).contains(&vec![1, 4]));
        assert!(ns.generate_roots(5).contains(&vec![1, 4]));
        let at = RootSystem::from_cartan(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert_eq!(at.reflect(&[0, 1], 0), vec![2, 1]);
    }

    #[test]
    fn classification() {
        let at = RootSystem::from_cartan(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        let Classification::Affine(a) = at.classify() else { panic!() };
        assert_eq!((a.delta, a.theta), (vec![1, 1], vec![1, 0]));
        let ns = RootSystem::from_cartan(vec![vec![2, -1], vec![-4, 2]]).unwrap();
        let a = ns.affine_data().unwrap();
        assert_eq!((a.delta.clone(), a.theta.clone(), a.s_aff), (vec![1, 2], vec![1, 0], 1));
        let c2 = ns.coroot_in_root_basis(&[0, 1], &a.normalized_symmetrizer);
        assert_eq!(c2, vec![q(0), q(4)]);
        assert_eq!(ns.simplified_saff_action(&a, &[1, 0]), vec![1, 4]);
        assert_eq!(ns.simplified_saff_action(&a, &[1, 0]), ns.reflect(&[1, 0], 1));
        let tr = RootSystem::from_cartan(vec![vec![2, -4], vec![-1, 2]]).unwrap();
        assert_eq!(tr.affine_data().unwrap().delta, vec![2, 1]);
        let i344 = RootSystem::from_cartan(vec![vec![2, -1, -2], vec![-1, 2, -2], vec![-1, -1, 2]]).unwrap();
        assert_eq!(i344.classify(), Classification::Indefinite);
        let a2 = RootSystem::from_cartan(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(a2.classify(), Classification::Finite);
    }

    #[test]
    fn g2_phi0() {
        let rs = g2t();
        let a = rs.sys.affine_data().unwrap();
        assert_eq!(a.delta, vec![2, 3, 1]);
        assert_eq!(a.s_aff, 2);
        assert_eq!(a.theta, vec![2, 3, 0]);
        let sp = rs.phi0_split().unwrap();
        assert_eq!(sp.xc, vec![-4, 6]);
        assert_eq!(sp.xc_full, vec![q(-4), q(6), q(2)]);
        let mut zero = sp.zero.clone();
        zero.sort();
        assert_eq!(zero, vec![vec![-1, -2, 0], vec![1, 2, 0]]);
        let mut plus = sp.plus.clone();
        plus.sort();
        let mut expect = vec![vec![2, 3, 0], vec![1, 1, 0], vec![1, 0, 0], vec![0, -1, 0], vec![-1, -3, 0]];
        expect.sort();
        assert_eq!(plus, expect);
    }

    #[test]
    fn rank_two() {
        let a2 = RootSystem::from_cartan(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        let r = a2.rank_two_subsystem(&[1, 0], &[0, 1], 10).unwrap();
        assert_eq!(r.positive_roots.len(), 3);
        assert_eq!(r.kind, RankTwoType::Finite);
        let at = RootSystem::from_cartan(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert_eq!(at.rank_two_subsystem(&[1, 0], &[0, 1], 10).unwrap().kind, RankTwoType::Affine);
        assert_eq!(at.rank_two_subsystem(&[1, 0], &[2, 0], 10), Err(Error::DependentRoots));
    }
}
