//! Exact feasibility linear programming: two-phase simplex, phase one only,
//! with Bland's rule on rationals.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::linalg::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Le,
    Ge,
    Eq,
}

/// A system of linear constraints over variables that are nonnegative
/// unless marked free.
#[derive(Clone, Debug)]
pub struct System {
    nvars: usize,
    free: Vec<bool>,
    rows: Vec<(Vec<Q>, Rel, Q)>,
}

impl System {
    pub fn new(nvars: usize) -> Self {
        System { nvars, free: vec![false; nvars], rows: Vec::new() }
    }

    pub fn free(mut self, i: usize) -> Self {
        self.free[i] = true;
        self
    }

    pub fn all_free(mut self) -> Self {
        self.free = vec![true; self.nvars];
        self
    }

    pub fn add(&mut self, coefs: Vec<Q>, rel: Rel, rhs: Q) {
        assert_eq!(coefs.len(), self.nvars);
        self.rows.push((coefs, rel, rhs));
    }

    /// A feasible point, or `None` if the system is infeasible.
    pub fn solve(&self) -> Option<Vec<Q>> {
        // column layout: for each variable x⁺ (and x⁻ if free), then slacks
        let mut col_of: Vec<(usize, Option<usize>)> = Vec::new();
        let mut ncols = 0;
        for i in 0..self.nvars {
            if self.free[i] {
                col_of.push((ncols, Some(ncols + 1)));
                ncols += 2;
            } else {
                col_of.push((ncols, None));
                ncols += 1;
            }
        }
        let nslack = self.rows.iter().filter(|r| r.1 != Rel::Eq).count();
        let m = self.rows.len();
        let total = ncols + nslack + m;
        let mut t = vec![vec![Q::zero(); total + 1]; m];
        let mut slack = ncols;
        for (r, (coefs, rel, rhs)) in self.rows.iter().enumerate() {
            for (i, a) in coefs.iter().enumerate() {
                let (p, n) = col_of[i];
                t[r][p] = *a;
                if let Some(n) = n {
                    t[r][n] = -*a;
                }
            }
            match rel {
                Rel::Le => {
                    t[r][slack] = Q::one();
                    slack += 1;
                }
                Rel::Ge => {
                    t[r][slack] = -Q::one();
                    slack += 1;
                }
                Rel::Eq => {}
            }
            t[r][total] = *rhs;
            if rhs.is_negative() {
                for x in t[r].iter_mut() {
                    *x = -*x;
                }
            }
            t[r][ncols + nslack + r] = Q::one();
        }
        let art = ncols + nslack;
        let mut basis: Vec<usize> = (art..art + m).collect();
        let cost = |j: usize| if j >= art { Q::one() } else { Q::zero() };
        loop {
            let entering = (0..total).find(|&j| {
                if basis.contains(&j) {
                    return false;
                }
                let mut rc = cost(j);
                for i in 0..m {
                    rc -= cost(basis[i]) * t[i][j];
                }
                rc.is_negative()
            });
            let Some(e) = entering else { break };
            let mut best: Option<(usize, Q)> = None;
            for i in 0..m {
                if t[i][e].is_positive() {
                    let ratio = t[i][total] / t[i][e];
                    best = match best {
                        None => Some((i, ratio)),
                        Some((bi, br)) => {
                            if ratio < br || (ratio == br && basis[i] < basis[bi]) {
                                Some((i, ratio))
                            } else {
                                Some((bi, br))
                            }
                        }
                    };
                }
            }
            let (p, _) = best.expect("phase-one objective is bounded below");
            let inv = t[p][e].recip();
            for x in t[p].iter_mut() {
                *x *= inv;
            }
            for i in 0..m {
                if i != p && !t[i][e].is_zero() {
                    let f = t[i][e];
                    for j in 0..=total {
                        let v = t[p][j] * f;
                        t[i][j] -= v;
                    }
                }
            }
            basis[p] = e;
        }
        let infeas: Q = (0..m).filter(|&i| basis[i] >= art).map(|i| t[i][total]).sum();
        if infeas.is_positive() {
            return None;
        }
        let mut val = vec![Q::zero(); total];
        for i in 0..m {
            val[basis[i]] = t[i][total];
        }
        Some(
            col_of
                .iter()
                .map(|&(p, n)| val[p] - n.map_or(Q::zero(), |n| val[n]))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn small_systems() {
        let mut s = System::new(2);
        s.add(vec![q(1), q(1)], Rel::Eq, q(1));
        s.add(vec![q(1), q(-1)], Rel::Ge, q(0));
        let x = s.solve().unwrap();
        assert_eq!(x[0] + x[1], q(1));
        assert!(x[0] >= x[1]);

        let mut s = System::new(1).all_free();
        s.add(vec![q(1)], Rel::Ge, q(1));
        s.add(vec![q(1)], Rel::Le, q(0));
        assert!(s.solve().is_none());

        let mut s = System::new(1).all_free();
        s.add(vec![q(1)], Rel::Le, q(-3));
        assert!(s.solve().unwrap()[0] <= q(-3));
    }
}
