//! Small dense exact linear algebra over `i64` and `Ratio<i128>`.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::Vector;

pub type Q = Ratio<i128>;

pub type Matrix = Vec<Vec<i64>>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n as i128)
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `xᵀ M y`.
pub fn bilinear(m: &Matrix, x: &[i64], y: &[i64]) -> i64 {
    let mut s = 0;
    for (i, row) in m.iter().enumerate() {
        if x[i] == 0 {
            continue;
        }
        s += x[i] * dot(row, y);
    }
    s
}

pub fn mat_vec(m: &Matrix, v: &[i64]) -> Vector {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn transpose(m: &Matrix) -> Matrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|r| r[j]).collect()).collect()
}

pub fn neg(v: &[i64]) -> Vector {
    v.iter().map(|x| -x).collect()
}

pub fn add(a: &[i64], b: &[i64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[i64], k: i64) -> Vector {
    a.iter().map(|x| k * x).collect()
}

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

pub fn is_zero(v: &[i64]) -> bool {
    v.iter().all(|&x| x == 0)
}

/// +1 if all coordinates are ≥ 0 and some is > 0, −1 for the mirror case,
/// 0 for the zero vector or mixed signs.
pub fn sign(v: &[i64]) -> i32 {
    let pos = v.iter().any(|&x| x > 0);
    let neg = v.iter().any(|&x| x < 0);
    match (pos, neg) {
        (true, false) => 1,
        (false, true) => -1,
        _ => 0,
    }
}

pub fn to_q(m: &Matrix) -> Vec<Vec<Q>> {
    m.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

/// Row echelon form in place; returns pivot columns.
fn echelon(a: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c];
                for j in 0..cols {
                    let t = a[r][j] * f;
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_q(rows: &[Vec<Q>]) -> usize {
    let mut a = rows.to_vec();
    echelon(&mut a).len()
}

pub fn rank(rows: &[Vector]) -> usize {
    rank_q(&to_q(&rows.to_vec()))
}

pub fn det_q(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c];
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = a[i][c] / a[c][c];
                for j in c..n {
                    let t = a[c][j] * f;
                    a[i][j] -= t;
                }
            }
        }
    }
    det
}

pub fn det(m: &Matrix) -> Q {
    det_q(&to_q(m))
}

pub fn inverse_q(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    let piv = echelon(&mut a);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Basis of the right kernel `{x : M x = 0}`.
pub fn nullspace_q(m: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut a = m.to_vec();
    let piv = echelon(&mut a);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !piv.contains(c)) {
        let mut x = vec![Q::zero(); cols];
        x[free] = Q::one();
        for (r, &pc) in piv.iter().enumerate() {
            x[pc] = -a[r][free];
        }
        basis.push(x);
    }
    basis
}

pub fn nullspace(m: &Matrix, cols: usize) -> Vec<Vec<Q>> {
    nullspace_q(&to_q(m), cols)
}

/// Clears denominators and divides by the content.
pub fn primitive(v: &[Q]) -> Vector {
    let l = v.iter().fold(1i128, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i128> = v.iter().map(|x| (x * l).to_integer()).collect();
    let g = ints.iter().fold(0i128, |acc, x| acc.gcd(x));
    if g == 0 {
        return vec![0; v.len()];
    }
    ints.iter().map(|x| (x / g) as i64).collect()
}

pub fn primitive_int(v: &[i64]) -> Vector {
    let g = v.iter().fold(0i64, |acc, x| acc.gcd(x));
    if g == 0 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}

pub fn is_integral(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_integer())
}

pub fn to_int(v: &[Q]) -> Option<Vector> {
    v.iter()
        .map(|x| x.is_integer().then(|| x.to_integer() as i64))
        .collect()
}

pub fn abs_sum(v: &[i64]) -> i64 {
    v.iter().map(|x| x.abs()).sum()
}

pub fn q_sign(x: &Q) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_det() {
        let m = vec![vec![2, 1], vec![1, 1]];
        assert_eq!(det(&m), q(1));
        let inv = inverse_q(&to_q(&m)).unwrap();
        assert_eq!(inv, to_q(&vec![vec![1, -1], vec![-1, 2]]));
        assert!(inverse_q(&to_q(&vec![vec![1, 2], vec![2, 4]])).is_none());
    }

    #[test]
    fn kernel_of_affine_g2() {
        let s = vec![vec![6, -3, -3], vec![-3, 2, 0], vec![-3, 0, 6]];
        let k = nullspace(&s, 3);
        assert_eq!(k.len(), 1);
        let p = primitive(&k[0]);
        assert!(p == vec![2, 3, 1] || p == vec![-2, -3, -1]);
    }
}
