//! Principal-coefficient cluster mutation: exchange matrices, seeds,
//! g-vectors and truncated exchange graphs.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::laurent::Laurent;
use crate::linalg::{self, Matrix, Q};
use crate::{Error, Result, Vector};

/// Square skew-symmetrizable integer matrix with its integer symmetrizer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExchangeMatrix {
    b: Matrix,
    d: Vector,
}

impl ExchangeMatrix {
    /// Checks skew-symmetrizability and computes the symmetrizer `d`,
    /// normalized to positive integers with gcd 1 on every connected block.
    pub fn validate(rows: Matrix) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        let d = symmetrizer(&rows, |i, j| rows[i][j], true)?;
        Ok(ExchangeMatrix { b: rows, d })
    }

    pub fn rank(&self) -> usize {
        self.b.len()
    }

    pub fn entries(&self) -> &Matrix {
        &self.b
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.b[i][j]
    }

    pub fn symmetrizer(&self) -> &Vector {
        &self.d
    }

    pub fn cartan_companion(&self) -> Matrix {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { 2 } else { -self.b[i][j].abs() }).collect())
            .collect()
    }

    /// Topological order of `i → j` for `b_ij > 0`, smallest index first.
    pub fn acyclic_order(&self) -> Result<Vec<usize>> {
        let n = self.rank();
        let mut indeg = vec![0usize; n];
        for i in 0..n {
            for j in 0..n {
                if self.b[i][j] > 0 {
                    indeg[j] += 1;
                }
            }
        }
        let mut order = Vec::with_capacity(n);
        let mut done = vec![false; n];
        while order.len() < n {
            let Some(i) = (0..n).find(|&i| !done[i] && indeg[i] == 0) else {
                return Err(Error::NotAcyclic);
            };
            done[i] = true;
            order.push(i);
            for j in 0..n {
                if self.b[i][j] > 0 {
                    indeg[j] -= 1;
                }
            }
        }
        Ok(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.acyclic_order().is_ok()
    }

    /// Matrix mutation at `k` (ordinary, without coefficient rows).
    pub fn mutate(&self, k: usize) -> ExchangeMatrix {
        let ext = ExtendedExchangeMatrix { top: self.b.clone(), bottom: Vec::new() };
        ExchangeMatrix { b: ext.mutate(k).top, d: self.d.clone() }
    }

    pub fn negated(&self) -> ExchangeMatrix {
        ExchangeMatrix {
            b: self.b.iter().map(|r| linalg::neg(r)).collect(),
            d: self.d.clone(),
        }
    }

    pub fn is_skew_symmetrized_by(m: &Matrix, d: &[i64]) -> bool {
        let n = m.len();
        (0..n).all(|i| m[i][i] == 0 && (0..n).all(|j| d[i] * m[i][j] == -d[j] * m[j][i]))
    }
}

/// Solves `d_i m(i,j) = ± d_j m(j,i)` (sign −1 when `skew`) for positive `d`.
pub(crate) fn symmetrizer(
    rows: &Matrix,
    m: impl Fn(usize, usize) -> i64,
    skew: bool,
) -> Result<Vector> {
    let n = rows.len();
    let err = if skew { Error::NotSkewSymmetrizable } else { Error::NotSymmetrizable };
    for i in 0..n {
        if skew && m(i, i) != 0 {
            return Err(err);
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            let (a, b) = (m(i, j), m(j, i));
            if (a == 0) != (b == 0) {
                return Err(err);
            }
            let same_sign = a * b > 0;
            if a != 0 && same_sign == skew {
                return Err(err);
            }
        }
    }
    let mut d: Vec<Option<Q>> = vec![None; n];
    let mut out = vec![0i64; n];
    for root in 0..n {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some(Q::from_integer(1));
        let mut comp = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if j == i || m(i, j) == 0 {
                    continue;
                }
                // d_j = d_i |m(i,j)| / |m(j,i)|
                let dj = d[i].unwrap() * Q::new(m(i, j).abs() as i128, m(j, i).abs() as i128);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        comp.push(j);
                        queue.push_back(j);
                    }
                    Some(x) if x != dj => return Err(err),
                    _ => {}
                }
            }
        }
        let vals: Vec<Q> = comp.iter().map(|&i| d[i].unwrap()).collect();
        let p = linalg::primitive(&vals);
        for (k, &i) in comp.iter().enumerate() {
            out[i] = p[k];
        }
    }
    Ok(out)
}

/// `B̃ = [B; H]` with rows of `H` indexed by the coefficient variables and
/// columns by the cluster positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtendedExchangeMatrix {
    pub top: Matrix,
    pub bottom: Matrix,
}

impl ExtendedExchangeMatrix {
    pub fn principal(b: &ExchangeMatrix) -> Self {
        let n = b.rank();
        let bottom = (0..n).map(|i| linalg::unit(n, i)).collect();
        ExtendedExchangeMatrix { top: b.b.clone(), bottom }
    }

    pub fn rank(&self) -> usize {
        self.top.len()
    }

    fn row(&self, p: usize) -> &Vector {
        let n = self.rank();
        if p < n {
            &self.top[p]
        } else {
            &self.bottom[p - n]
        }
    }

    fn rows(&self) -> usize {
        self.top.len() + self.bottom.len()
    }

    /// Mutation at column `e` applied to every row.
    pub fn mutate(&self, e: usize) -> Self {
        let n = self.rank();
        let mut all: Matrix = Vec::with_capacity(self.rows());
        for p in 0..self.rows() {
            let r = self.row(p);
            let row = (0..n)
                .map(|qi| {
                    if p == e || qi == e {
                        -r[qi]
                    } else {
                        let bpe = r[e];
                        let beq = self.top[e][qi];
                        r[qi] + bpe.signum() * (bpe * beq).max(0)
                    }
                })
                .collect();
            all.push(row);
        }
        let bottom = all.split_off(n);
        ExtendedExchangeMatrix { top: all, bottom }
    }

    /// Columns of `H`.
    pub fn c_vectors(&self) -> Vec<Vector> {
        let n = self.rank();
        (0..n).map(|j| self.bottom.iter().map(|r| r[j]).collect()).collect()
    }
}

/// A principal-coefficient seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    pub matrix: ExtendedExchangeMatrix,
    pub cluster: Vec<Laurent>,
    pub gvectors: Vec<Vector>,
    pub depth: usize,
}

impl Seed {
    pub fn initial(b: &ExchangeMatrix) -> Self {
        let n = b.rank();
        Seed {
            matrix: ExtendedExchangeMatrix::principal(b),
            cluster: (0..n).map(|i| Laurent::var(2 * n, i)).collect(),
            gvectors: (0..n).map(|i| linalg::unit(n, i)).collect(),
            depth: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.cluster.len()
    }

    /// Seed mutation at `e`; `initial` supplies the columns `𝐛_i` for the
    /// g-vector recurrence.
    pub fn mutate(&self, e: usize, initial: &ExchangeMatrix) -> Result<Seed> {
        let n = self.rank();
        if e >= n {
            return Err(Error::IndexOutOfRange(e));
        }
        let nv = 2 * n;
        let mut pos = Laurent::one(nv);
        let mut negm = Laurent::one(nv);
        for p in 0..2 * n {
            let bpe = self.matrix.row(p)[e];
            if bpe == 0 {
                continue;
            }
            let var = if p < n { self.cluster[p].clone() } else { Laurent::var(nv, p) };
            let power = var.pow(bpe.unsigned_abs() as u32)?;
            if bpe > 0 {
                pos = pos.mul(&power)?;
            } else {
                negm = negm.mul(&power)?;
            }
        }
        let new_var = pos.add(&negm)?.div_exact(&self.cluster[e])?;
        if !new_var.is_laurent_in_first(n) {
            return Err(Error::NonLaurentResult);
        }
        let mut cluster = self.cluster.clone();
        cluster[e] = new_var;
        Ok(Seed {
            gvectors: g_vector_mutate(&self.gvectors, &self.matrix, e, initial),
            matrix: self.matrix.mutate(e),
            cluster,
            depth: self.depth + 1,
        })
    }

    pub fn c_vectors(&self) -> Vec<Vector> {
        self.matrix.c_vectors()
    }

    /// Grading `deg x_i = ρ_i`, `deg y_j = −𝐛_j` in weight coordinates.
    pub fn grading(initial: &ExchangeMatrix) -> Vec<Vector> {
        let n = initial.rank();
        let mut g: Vec<Vector> = (0..n).map(|i| linalg::unit(n, i)).collect();
        for j in 0..n {
            g.push((0..n).map(|i| -initial.b[i][j]).collect());
        }
        g
    }

    /// Canonical key: the sorted cluster.
    pub fn cluster_key(&self) -> Vec<Laurent> {
        let mut k = self.cluster.clone();
        k.sort();
        k
    }
}

/// g-vector recurrence at column `q` of the source matrix `bt`.
pub fn g_vector_mutate(
    g: &[Vector],
    bt: &ExtendedExchangeMatrix,
    q: usize,
    initial: &ExchangeMatrix,
) -> Vec<Vector> {
    let n = bt.rank();
    let mut out = g.to_vec();
    let mut gq = linalg::neg(&g[q]);
    for p in 0..n {
        let k = (-bt.top[p][q]).max(0);
        if k != 0 {
            gq = linalg::add(&gq, &linalg::scale(&g[p], k));
        }
    }
    for i in 0..n {
        let k = (-bt.bottom[i][q]).max(0);
        if k != 0 {
            let bi: Vector = (0..n).map(|r| initial.b[r][i]).collect();
            gq = linalg::sub(&gq, &linalg::scale(&bi, k));
        }
    }
    out[q] = gq;
    out
}

/// Bijection `λ` with `s2.cluster[λ[i]] = s1.cluster[i]`, checked against
/// the exchange matrices and coefficient rows.
pub fn seeds_equivalent(s1: &Seed, s2: &Seed) -> Result<Vec<usize>> {
    let n = s1.rank();
    if s2.rank() != n {
        return Err(Error::NotEquivalent);
    }
    let mut idx2: Vec<usize> = (0..n).collect();
    idx2.sort_by(|&a, &b| s2.cluster[a].cmp(&s2.cluster[b]));
    let mut idx1: Vec<usize> = (0..n).collect();
    idx1.sort_by(|&a, &b| s1.cluster[a].cmp(&s1.cluster[b]));
    let mut lambda = vec![0; n];
    for k in 0..n {
        if s1.cluster[idx1[k]] != s2.cluster[idx2[k]] {
            return Err(Error::NotEquivalent);
        }
        lambda[idx1[k]] = idx2[k];
    }
    for i in 0..n {
        for j in 0..n {
            if s1.matrix.top[i][j] != s2.matrix.top[lambda[i]][lambda[j]] {
                return Err(Error::NotEquivalent);
            }
        }
        for r in 0..s1.matrix.bottom.len() {
            if s1.matrix.bottom[r][i] != s2.matrix.bottom[r][lambda[i]] {
                return Err(Error::NotEquivalent);
            }
        }
    }
    Ok(lambda)
}

#[derive(Clone, Debug)]
pub struct ExchangeNode {
    pub seed: Seed,
    pub depth: usize,
    /// `edges[i] = Some((node, j))`: mutating this node's seed at column `i`
    /// gives a seed equivalent to `node` with column `i` landing on `j`.
    pub edges: Vec<Option<(usize, usize)>>,
}

#[derive(Clone, Debug)]
pub struct ExchangeGraphSlice {
    pub nodes: Vec<ExchangeNode>,
    pub max_depth: usize,
}

impl ExchangeGraphSlice {
    pub fn is_frontier(&self, i: usize) -> bool {
        self.nodes[i].edges.iter().any(|e| e.is_none())
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        let half: usize = self.nodes.iter().map(|n| n.edges.iter().flatten().count()).sum();
        half / 2
    }

    /// Node order sorted by canonical cluster encoding.
    pub fn canonical_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.nodes.len()).collect();
        idx.sort_by_cached_key(|&i| self.nodes[i].seed.cluster_key());
        idx
    }

    pub fn find(&self, seed: &Seed) -> Option<usize> {
        let key = seed.cluster_key();
        self.nodes.iter().position(|n| n.seed.cluster_key() == key)
    }
}

/// Breadth-first exploration of the exchange graph up to `depth`.
pub fn exchange_graph(b: &ExchangeMatrix, depth: usize, cap: usize) -> Result<ExchangeGraphSlice> {
    let n = b.rank();
    let mut nodes = vec![ExchangeNode { seed: Seed::initial(b), depth: 0, edges: vec![None; n] }];
    let mut index: BTreeMap<Vec<Laurent>, usize> = BTreeMap::new();
    index.insert(nodes[0].seed.cluster_key(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(a) = queue.pop_front() {
        if nodes[a].depth >= depth {
            continue;
        }
        for i in 0..n {
            if nodes[a].edges[i].is_some() {
                continue;
            }
            let s = nodes[a].seed.mutate(i, b)?;
            let key = s.cluster_key();
            let target = match index.get(&key) {
                Some(&t) => t,
                None => {
                    if nodes.len() >= cap {
                        return Err(Error::ResourceLimit(cap));
                    }
                    let t = nodes.len();
                    let mut seed = s.clone();
                    seed.depth = nodes[a].depth + 1;
                    nodes.push(ExchangeNode { seed, depth: nodes[a].depth + 1, edges: vec![None; n] });
                    index.insert(key, t);
                    queue.push_back(t);
                    t
                }
            };
            let lambda = seeds_equivalent(&s, &nodes[target].seed)?;
            let j = lambda[i];
            nodes[a].edges[i] = Some((target, j));
            nodes[target].edges[j] = Some((a, i));
        }
    }
    Ok(ExchangeGraphSlice { nodes, max_depth: depth })
}

/// Entrywise sign coherence of a vector.
pub fn is_sign_coherent(v: &[i64]) -> bool {
    v.iter().all(|&x| x >= 0) || v.iter().all(|&x| x <= 0)
}
