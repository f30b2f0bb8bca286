//! Laurent polynomials with integer coefficients in `x_1..x_n, y_1..y_n`.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, which is already a
//! canonical form: equality is structural equality. Variables `0..n` are the
//! initial cluster variables, `n..2n` the principal coefficients.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result, Vector};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Laurent {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, i128>,
}

impl Laurent {
    pub fn zero(nvars: usize) -> Self {
        Laurent { nvars, terms: BTreeMap::new() }
    }

    pub fn monomial(exps: Vec<i32>, coef: i128) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if coef != 0 {
            terms.insert(exps, coef);
        }
        Laurent { nvars, terms }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], 1)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &i128)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Vec<i32>, c: i128) -> Result<()> {
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                if c != 0 {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = o.get().checked_add(c).ok_or(Error::ArithmeticOverflow)?;
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Laurent) -> Result<Laurent> {
        let mut r = self.clone();
        for (e, &c) in &other.terms {
            r.add_term(e.clone(), c)?;
        }
        Ok(r)
    }

    pub fn sub(&self, other: &Laurent) -> Result<Laurent> {
        let mut r = self.clone();
        for (e, &c) in &other.terms {
            r.add_term(e.clone(), -c)?;
        }
        Ok(r)
    }

    pub fn mul(&self, other: &Laurent) -> Result<Laurent> {
        let mut r = Laurent::zero(self.nvars);
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let c = c1.checked_mul(c2).ok_or(Error::ArithmeticOverflow)?;
                r.add_term(e, c)?;
            }
        }
        Ok(r)
    }

    pub fn pow(&self, k: u32) -> Result<Laurent> {
        let mut r = Laurent::one(self.nvars);
        for _ in 0..k {
            r = r.mul(self)?;
        }
        Ok(r)
    }

    fn leading(&self) -> Option<(&Vec<i32>, &i128)> {
        self.terms.iter().next_back()
    }

    fn exponent_bounds(&self) -> (Vec<i32>, Vec<i32>) {
        let mut lo = vec![i32::MAX; self.nvars];
        let mut hi = vec![i32::MIN; self.nvars];
        for e in self.terms.keys() {
            for i in 0..self.nvars {
                lo[i] = lo[i].min(e[i]);
                hi[i] = hi[i].max(e[i]);
            }
        }
        (lo, hi)
    }

    /// Exact quotient in the Laurent ring; `NonLaurentResult` if `d` does not
    /// divide `self`.
    pub fn div_exact(&self, d: &Laurent) -> Result<Laurent> {
        if d.is_zero() {
            return Err(Error::NonLaurentResult);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let (dlo, dhi) = self.exponent_bounds();
        let (llo, lhi) = d.exponent_bounds();
        let lo: Vec<i32> = (0..self.nvars).map(|i| dlo[i] - lhi[i]).collect();
        let hi: Vec<i32> = (0..self.nvars).map(|i| dhi[i] - llo[i]).collect();
        let (lm, &lc) = d.leading().expect("nonzero divisor");
        let mut quot = Laurent::zero(self.nvars);
        let mut rem = self.clone();
        while let Some((rm, &rc)) = rem.leading() {
            if rc % lc != 0 {
                return Err(Error::NonLaurentResult);
            }
            let m: Vec<i32> = rm.iter().zip(lm).map(|(a, b)| a - b).collect();
            if (0..self.nvars).any(|i| m[i] < lo[i] || m[i] > hi[i]) {
                return Err(Error::NonLaurentResult);
            }
            let t = Laurent::monomial(m, rc / lc);
            rem = rem.sub(&t.mul(d)?)?;
            quot = quot.add(&t)?;
        }
        Ok(quot)
    }

    /// True when the first `nx` variables may carry any exponent and the
    /// remaining ones only nonnegative exponents.
    pub fn is_laurent_in_first(&self, nx: usize) -> bool {
        self.terms.keys().all(|e| e[nx..].iter().all(|&x| x >= 0))
    }

    /// Common degree of all terms under a grading assigning `grading[i]` to
    /// variable `i`; `None` if not homogeneous.
    pub fn degree(&self, grading: &[Vector]) -> Option<Vector> {
        let dim = grading.first().map_or(0, |g| g.len());
        let mut out: Option<Vector> = None;
        for e in self.terms.keys() {
            let mut deg = vec![0i64; dim];
            for (i, &k) in e.iter().enumerate() {
                for (j, g) in grading[i].iter().enumerate() {
                    deg[j] += k as i64 * g;
                }
            }
            match &out {
                None => out = Some(deg),
                Some(d) if *d != deg => return None,
                _ => {}
            }
        }
        out
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let half = self.nvars / 2;
        let mut first = true;
        for (e, &c) in self.terms.iter().rev() {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            let is_const = e.iter().all(|&k| k == 0);
            if a != 1 || is_const {
                write!(f, "{a}")?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut sep = false;
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if sep {
                    write!(f, "*")?;
                }
                sep = true;
                let (name, idx) = if i < half { ('x', i + 1) } else { ('y', i - half + 1) };
                if k == 1 {
                    write!(f, "{name}{idx}")?;
                } else {
                    write!(f, "{name}{idx}^{k}")?;
                }
            }
        }
        Ok(())
    }
}
