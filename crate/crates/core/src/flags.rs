//! Subspaces, partial flags and their relative positions over a finite
//! field, enumerated through reduced row echelon patterns.

use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfq::{FqElem, FqField, FqMatrix};

/// The row space of a matrix, stored as its canonical RREF basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: FqMatrix,
}

impl Hash for Subspace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.basis.cols().hash(state);
        self.basis.data().hash(state);
    }
}

impl Subspace {
    /// Row space of an arbitrary spanning matrix.
    pub fn span(m: &FqMatrix) -> Self {
        let red = m.rref();
        Subspace {
            basis: red.matrix.block(0, red.rank, 0, m.cols()),
        }
    }

    pub fn zero(field: &FqField, n: usize) -> Self {
        Subspace {
            basis: FqMatrix::zeros(field, 0, n),
        }
    }

    pub fn full(field: &FqField, n: usize) -> Self {
        Subspace {
            basis: FqMatrix::identity(field, n),
        }
    }

    pub fn basis(&self) -> &FqMatrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn field(&self) -> &FqField {
        self.basis.field()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(&self.basis.vstack(&other.basis))
    }

    pub fn intersection_dim(&self, other: &Subspace) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.sum(other).dim() == self.dim()
    }

    /// Image under `v -> v g` (row vectors).
    pub fn image(&self, g: &FqMatrix) -> Result<Subspace> {
        Ok(Subspace::span(&self.basis.mul(g)?))
    }

    /// Pivot columns of the canonical basis.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|r| {
                (0..self.ambient())
                    .find(|&c| !self.basis.get(r, c).is_zero())
                    .unwrap()
            })
            .collect()
    }
}

/// `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Every `k`-dimensional subspace of `F^n` exactly once.
pub fn enum_subspaces(field: &FqField, n: usize, k: usize) -> Vec<Subspace> {
    let scalars: Vec<FqElem> = field.elements().collect();
    enum_subspaces_over(field, &scalars, n, k)
}

/// Like [`enum_subspaces`], with free RREF entries drawn from `scalars`.
/// When `scalars` is a subfield `F_0` of `field`, this lists the
/// `k`-subspaces of `F_0^n`, written inside `field^n`.
pub fn enum_subspaces_over(field: &FqField, scalars: &[FqElem], n: usize, k: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    for pivots in combinations(n, k) {
        let mut free = Vec::new();
        for (r, &p) in pivots.iter().enumerate() {
            for c in p + 1..n {
                if !pivots.contains(&c) {
                    free.push((r, c));
                }
            }
        }
        let mut base = FqMatrix::zeros(field, k, n);
        for (r, &p) in pivots.iter().enumerate() {
            base.set(r, p, FqElem::ONE);
        }
        let mut idx = vec![0usize; free.len()];
        loop {
            let mut m = base.clone();
            for (slot, &(r, c)) in free.iter().enumerate() {
                m.set(r, c, scalars[idx[slot]]);
            }
            out.push(Subspace { basis: m });
            let mut pos = 0;
            loop {
                if pos == idx.len() {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] < scalars.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == idx.len() {
                break;
            }
        }
    }
    out
}

/// The `k`-dimensional subspaces of `u`.
pub fn enum_subspaces_of(u: &Subspace, scalars: &[FqElem], k: usize) -> Vec<Subspace> {
    enum_subspaces_over(u.field(), scalars, u.dim(), k)
        .into_iter()
        .map(|w| Subspace::span(&w.basis.mul(&u.basis).expect("shapes agree")))
        .collect()
}

/// A partial flag `0 = F_0 ⊆ F_1 ⊆ ... ⊆ F_n = V`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Flag {
    steps: Vec<Subspace>,
}

impl Flag {
    pub fn new(steps: Vec<Subspace>) -> Result<Self> {
        if steps.len() < 2 || steps[0].dim() != 0 {
            return Err(Error::InvalidInput("a flag starts at the zero space".into()));
        }
        for w in steps.windows(2) {
            if w[0].ambient() != w[1].ambient() || !w[1].contains(&w[0]) {
                return Err(Error::InvalidInput("flag steps are not nested".into()));
            }
        }
        let last = steps.last().unwrap();
        if last.dim() != last.ambient() {
            return Err(Error::InvalidInput("a flag ends at the whole space".into()));
        }
        Ok(Flag { steps })
    }

    /// `F_0, ..., F_n`.
    pub fn steps(&self) -> &[Subspace] {
        &self.steps
    }

    /// Number of steps `n`.
    pub fn len(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn ambient(&self) -> usize {
        self.steps[0].ambient()
    }

    /// `(a_1, ..., a_n)` with `a_i = dim F_i - dim F_{i-1}`.
    pub fn dim_type(&self) -> Vec<usize> {
        self.steps.windows(2).map(|w| w[1].dim() - w[0].dim()).collect()
    }

    pub fn image(&self, g: &FqMatrix) -> Result<Flag> {
        Ok(Flag {
            steps: self.steps.iter().map(|s| s.image(g)).collect::<Result<_>>()?,
        })
    }

    /// The standard flag of the given type: `F_i` spanned by the first
    /// `a_1 + ... + a_i` unit vectors.
    pub fn standard(field: &FqField, dims: &[usize]) -> Flag {
        let n: usize = dims.iter().sum();
        Flag::from_vector_order(field, dims, &(0..n).collect::<Vec<_>>())
    }

    /// The coordinate flag whose `F_i` is spanned by unit vectors
    /// `order[0..a_1 + ... + a_i]`.
    pub fn from_vector_order(field: &FqField, dims: &[usize], order: &[usize]) -> Flag {
        let n = order.len();
        let mut steps = vec![Subspace::zero(field, n)];
        let mut acc = 0;
        for &a in dims {
            acc += a;
            let mut m = FqMatrix::zeros(field, acc, n);
            for (r, &c) in order[..acc].iter().enumerate() {
                m.set(r, c, FqElem::ONE);
            }
            steps.push(Subspace::span(&m));
        }
        Flag { steps }
    }
}

/// Every flag of type `dims` in `F^n`, `n = sum dims`, built top-down by
/// choosing each step inside the one above it.
pub fn enum_flags(field: &FqField, dims: &[usize]) -> Vec<Flag> {
    let scalars: Vec<FqElem> = field.elements().collect();
    enum_flags_over(field, &scalars, dims)
}

pub fn enum_flags_over(field: &FqField, scalars: &[FqElem], dims: &[usize]) -> Vec<Flag> {
    let n: usize = dims.iter().sum();
    let mut out = Vec::new();
    let mut stack = vec![Subspace::full(field, n)];
    flags_below(scalars, dims, &mut stack, &mut out);
    out
}

fn flags_below(scalars: &[FqElem], dims: &[usize], stack: &mut Vec<Subspace>, out: &mut Vec<Flag>) {
    let m = dims.len() - (stack.len() - 1);
    if m == 0 {
        let mut steps = stack.clone();
        steps.reverse();
        out.push(Flag { steps });
        return;
    }
    let top = stack.last().unwrap().clone();
    let target = top.dim() - dims[m - 1];
    if m == 1 {
        stack.push(Subspace::zero(top.field(), top.ambient()));
        flags_below(scalars, dims, stack, out);
        stack.pop();
        return;
    }
    for w in enum_subspaces_of(&top, scalars, target) {
        stack.push(w);
        flags_below(scalars, dims, stack, out);
        stack.pop();
    }
}

/// An `n x n` matrix of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ThetaMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl ThetaMatrix {
    pub fn new(n: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::InvalidInput(format!("expected {} entries, got {}", n * n, entries.len())));
        }
        Ok(ThetaMatrix { n, entries })
    }

    pub fn from_rows(rows: &[&[u32]]) -> Self {
        let n = rows.len();
        let entries: Vec<u32> = rows.iter().flat_map(|r| {
            assert_eq!(r.len(), n, "theta matrices are square");
            r.iter().copied()
        }).collect();
        ThetaMatrix { n, entries }
    }

    pub fn diag(dims: &[u32]) -> Self {
        let n = dims.len();
        let mut entries = vec![0; n * n];
        for (i, &a) in dims.iter().enumerate() {
            entries[i * n + i] = a;
        }
        ThetaMatrix { n, entries }
    }

    /// The matrix with a single `1` at `(i, j)`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut entries = vec![0; n * n];
        entries[i * n + j] = 1;
        ThetaMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn size(&self) -> u32 {
        self.entries.iter().sum()
    }

    pub fn row_sums(&self) -> Vec<u32> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j)).sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<u32> {
        (0..self.n).map(|j| (0..self.n).map(|i| self.get(i, j)).sum()).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        ThetaMatrix {
            n,
            entries: (0..n * n).map(|k| self.get(k % n, k / n)).collect(),
        }
    }

    pub fn scale(&self, ell: u32) -> Self {
        ThetaMatrix {
            n: self.n,
            entries: self.entries.iter().map(|a| a * ell).collect(),
        }
    }

    /// `A / l` when every entry is divisible by `l`.
    pub fn divide(&self, ell: u32) -> Option<Self> {
        self.entries.iter().all(|a| a % ell == 0).then(|| ThetaMatrix {
            n: self.n,
            entries: self.entries.iter().map(|a| a / ell).collect(),
        })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j) == 0))
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.n.max(1)).map(|c| c.to_vec()).collect()
    }
}

/// `a_ij = d(i,j) - d(i-1,j) - d(i,j-1) + d(i-1,j-1)` with
/// `d(i,j) = dim(F_i ∩ F'_j)`.
pub fn relative_position(f: &Flag, g: &Flag) -> Result<ThetaMatrix> {
    if f.ambient() != g.ambient() || f.len() != g.len() {
        return Err(Error::Mismatch(format!(
            "flags of lengths {} and {} in dimensions {} and {}",
            f.len(),
            g.len(),
            f.ambient(),
            g.ambient()
        )));
    }
    let n = f.len();
    let mut d = vec![vec![0i64; n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=n {
            d[i][j] = f.steps[i].intersection_dim(&g.steps[j]) as i64;
        }
    }
    let mut entries = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            let a = d[i][j] - d[i - 1][j] - d[i][j - 1] + d[i - 1][j - 1];
            entries.push(a as u32);
        }
    }
    Ok(ThetaMatrix { n, entries })
}

/// One summand of a graded space: `k`-subspaces of `field^n` with
/// coefficients in `scalars`.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub field: FqField,
    pub scalars: Vec<FqElem>,
    pub n: usize,
}

/// All tuples `(W_i)` of subspaces with `dim W_i = dims[i]`. `keep` sees
/// every prefix and may reject it, pruning all of its extensions.
pub fn enum_graded_subspaces<P>(pieces: &[GradedPiece], dims: &[usize], keep: P) -> Vec<Vec<Subspace>>
where
    P: Fn(&[Subspace]) -> bool,
{
    assert_eq!(pieces.len(), dims.len());
    let options: Vec<Vec<Subspace>> = pieces
        .iter()
        .zip(dims)
        .map(|(p, &k)| {
            if k > p.n {
                Vec::new()
            } else {
                enum_subspaces_over(&p.field, &p.scalars, p.n, k)
            }
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(dims.len());
    fn go<P: Fn(&[Subspace]) -> bool>(
        options: &[Vec<Subspace>],
        keep: &P,
        cur: &mut Vec<Subspace>,
        out: &mut Vec<Vec<Subspace>>,
    ) {
        if cur.len() == options.len() {
            out.push(cur.clone());
            return;
        }
        for s in &options[cur.len()] {
            cur.push(s.clone());
            if keep(cur) {
                go(options, keep, cur, out);
            }
            cur.pop();
        }
    }
    if keep(&cur) {
        go(&options, &keep, &mut cur, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::gauss_binom;
    use crate::gfq::make_field;
    use num_bigint::BigInt;

    // q-binomial at q from the balanced form: [n k]_{v} at v^2 = q equals
    // v^{k(n-k)} times the ordinary Gaussian coefficient.
    fn qbinom(n: i64, k: i64, q: u64) -> BigInt {
        gauss_binom(n, k, 1)
            .shift(k * (n - k))
            .eval_at_square(&BigInt::from(q))
            .unwrap()
    }

    #[test]
    fn subspace_counts() {
        let f2 = make_field(2, 1).unwrap();
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(enum_subspaces(&f2, 2, 1).len(), 3);
        assert_eq!(enum_subspaces(&f3, 2, 1).len(), 4);
        let zero = enum_subspaces(&f3, 3, 0);
        assert_eq!(zero, vec![Subspace::zero(&f3, 3)]);
        for q in [2u64, 3, 4, 5] {
            let f = crate::gfq::field_of_order(q, 64).unwrap();
            for n in 0..=3 {
                for k in 0..=n {
                    let count = enum_subspaces(&f, n, k).len();
                    assert_eq!(BigInt::from(count), qbinom(n as i64, k as i64, q));
                }
            }
        }
    }

    #[test]
    fn subspaces_over_a_subfield() {
        let f4 = make_field(2, 2).unwrap();
        let f2: Vec<FqElem> = f4.subfield_elements(1).unwrap();
        assert_eq!(enum_subspaces_over(&f4, &f2, 3, 1).len(), 7);
    }

    #[test]
    fn flag_counts() {
        let f2 = make_field(2, 1).unwrap();
        assert_eq!(enum_flags(&f2, &[3]).len(), 1);
        assert_eq!(enum_flags(&f2, &[1, 1]).len(), 3);
        assert_eq!(enum_flags(&f2, &[1, 1, 1]).len(), 21);
        assert_eq!(enum_flags(&f2, &[1, 0, 2]).len(), 7);
        for fl in enum_flags(&f2, &[1, 2, 1]) {
            assert_eq!(fl.dim_type(), vec![1, 2, 1]);
        }
    }

    #[test]
    fn relative_position_examples() {
        let f3 = make_field(3, 1).unwrap();
        let flags = enum_flags(&f3, &[1, 1]);
        let f = &flags[0];
        assert_eq!(relative_position(f, f).unwrap(), ThetaMatrix::diag(&[1, 1]));
        assert_eq!(
            relative_position(&flags[0], &flags[1]).unwrap(),
            ThetaMatrix::from_rows(&[&[0, 1], &[1, 0]])
        );
        for a in &flags {
            for b in &flags {
                let p = relative_position(a, b).unwrap();
                assert_eq!(relative_position(b, a).unwrap(), p.transpose());
                assert_eq!(p.row_sums(), vec![1, 1]);
            }
        }
    }

    #[test]
    fn graded_enumeration() {
        let f2 = make_field(2, 1).unwrap();
        let piece = GradedPiece {
            field: f2.clone(),
            scalars: f2.elements().collect(),
            n: 2,
        };
        assert_eq!(enum_graded_subspaces(&[piece.clone()], &[1], |_| true).len(), 3);
        assert_eq!(enum_graded_subspaces(&[piece.clone()], &[0], |_| true).len(), 1);
        assert_eq!(enum_graded_subspaces(&[piece.clone()], &[2], |_| true).len(), 1);
        let two = enum_graded_subspaces(&[piece.clone(), piece.clone()], &[1, 1], |_| true);
        assert_eq!(two.len(), 9);
        let pruned = enum_graded_subspaces(&[piece.clone(), piece], &[1, 1], |w| {
            w.len() < 2 || w[0] == w[1]
        });
        assert_eq!(pruned.len(), 3);
    }
}
