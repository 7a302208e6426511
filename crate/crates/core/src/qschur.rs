//! Convolution algebras of pairs of partial flags: structure constants by
//! point counting, restriction along `F_q`-linear forgetting, and
//! interpolation of structure constants as polynomials in `q`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{cyclotomic_poly, IntPoly};
use crate::flags::{enum_flags, relative_position, Flag, Subspace, ThetaMatrix};
use crate::gfq::{field_of_order, Embedding, FqElem, FqField, FqMatrix};

/// All `n x n` nonnegative integer matrices with entry sum `r`, in
/// lexicographic order of their row-major entries.
pub fn enum_theta(n: usize, r: u32) -> Vec<ThetaMatrix> {
    let cells = n * n;
    let mut out = Vec::new();
    let mut cur = vec![0u32; cells];
    fn go(k: usize, left: u32, cur: &mut Vec<u32>, n: usize, out: &mut Vec<ThetaMatrix>) {
        if k + 1 == cur.len() {
            cur[k] = left;
            out.push(ThetaMatrix::new(n, cur.clone()).unwrap());
            return;
        }
        for a in (0..=left).rev() {
            cur[k] = a;
            go(k + 1, left - a, cur, n, out);
        }
        cur[k] = 0;
    }
    if cells > 0 {
        go(0, r, &mut cur, n, &mut out);
    }
    out.sort();
    out
}

/// The standard pair of flags in relative position `c`: basis vectors
/// `e_{ij,k}` (`k < c_ij`), with `F0_i` spanned by blocks with row `<= i`
/// and `F1_j` by blocks with column `<= j`. `block` groups each vector into
/// `block` consecutive coordinates, which makes the pair stable under a
/// block-diagonal scalar action.
pub fn standard_pair(field: &FqField, c: &ThetaMatrix, block: usize) -> (Flag, Flag) {
    let n = c.n();
    let mut by_row = Vec::new();
    let mut idx = 0;
    let mut index = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            for _ in 0..c.get(i, j) {
                for _ in 0..block {
                    index[i][j].push(idx);
                    by_row.push(idx);
                    idx += 1;
                }
            }
        }
    }
    let mut by_col = Vec::new();
    for j in 0..n {
        for row in &index {
            by_col.extend_from_slice(&row[j]);
        }
    }
    let rows: Vec<usize> = c.row_sums().iter().map(|&a| a as usize * block).collect();
    let cols: Vec<usize> = c.col_sums().iter().map(|&a| a as usize * block).collect();
    (
        Flag::from_vector_order(field, &rows, &by_row),
        Flag::from_vector_order(field, &cols, &by_col),
    )
}

fn compatible(a: &ThetaMatrix, b: &ThetaMatrix, c: &ThetaMatrix) -> bool {
    a.n() == b.n()
        && b.n() == c.n()
        && a.col_sums() == b.row_sums()
        && c.row_sums() == a.row_sums()
        && c.col_sums() == b.col_sums()
}

/// For a base pair `(f0, f1)`, the number of flags `F` of type `middle`
/// in each pair of relative positions `(rel(f0, F), rel(F, f1))`.
pub fn position_histogram(
    field: &FqField,
    f0: &Flag,
    f1: &Flag,
    middle: &[usize],
) -> Result<HashMap<(ThetaMatrix, ThetaMatrix), u64>> {
    let mut hist = HashMap::new();
    for f in enum_flags(field, middle) {
        let a = relative_position(f0, &f)?;
        let b = relative_position(&f, f1)?;
        *hist.entry((a, b)).or_insert(0) += 1;
    }
    Ok(hist)
}

/// `c_{A,B}^C` over `field`: flags `F` with `rel(F0, F) = A` and
/// `rel(F, F1) = B` for the standard pair `(F0, F1)` of class `C`.
pub fn structure_constant(a: &ThetaMatrix, b: &ThetaMatrix, c: &ThetaMatrix, field: &FqField) -> Result<u64> {
    let (f0, f1) = standard_pair(field, c, 1);
    structure_constant_at(a, b, c, field, &f0, &f1)
}

/// As [`structure_constant`] for a caller-supplied base pair in class `C`.
pub fn structure_constant_at(
    a: &ThetaMatrix,
    b: &ThetaMatrix,
    c: &ThetaMatrix,
    field: &FqField,
    f0: &Flag,
    f1: &Flag,
) -> Result<u64> {
    if !compatible(a, b, c) {
        return Ok(0);
    }
    if relative_position(f0, f1)? != *c {
        return Err(Error::InvalidInput("base pair is not in the requested class".into()));
    }
    let middle: Vec<usize> = a.col_sums().iter().map(|&x| x as usize).collect();
    let mut count = 0;
    for f in enum_flags(field, &middle) {
        if relative_position(f0, &f)? == *a && relative_position(&f, f1)? == *b {
            count += 1;
        }
    }
    Ok(count)
}

/// An element of the convolution algebra on `n`-step flags in dimension
/// `r` over `F_q`, in the orbit basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurElt {
    n: usize,
    r: u32,
    q: u64,
    coeffs: BTreeMap<ThetaMatrix, BigInt>,
}

impl SchurElt {
    pub fn zero(n: usize, r: u32, q: u64) -> Self {
        SchurElt { n, r, q, coeffs: BTreeMap::new() }
    }

    pub fn basis(a: &ThetaMatrix, q: u64) -> Self {
        let mut e = SchurElt::zero(a.n(), a.size(), q);
        e.coeffs.insert(a.clone(), BigInt::one());
        e
    }

    /// The unit `sum_D 1_D` over diagonal `D`.
    pub fn unit(n: usize, r: u32, q: u64) -> Self {
        let mut e = SchurElt::zero(n, r, q);
        for d in enum_theta(n, r).into_iter().filter(|t| t.is_diagonal()) {
            e.coeffs.insert(d, BigInt::one());
        }
        e
    }

    pub fn params(&self) -> (usize, u32, u64) {
        (self.n, self.r, self.q)
    }

    pub fn coeffs(&self) -> &BTreeMap<ThetaMatrix, BigInt> {
        &self.coeffs
    }

    pub fn coeff(&self, a: &ThetaMatrix) -> BigInt {
        self.coeffs.get(a).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, a: ThetaMatrix, c: BigInt) {
        let slot = self.coeffs.entry(a.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&a);
        }
    }

    pub fn add(&self, other: &SchurElt) -> Result<SchurElt> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (a, c) in &other.coeffs {
            out.add_term(a.clone(), c.clone());
        }
        Ok(out)
    }

    fn check_same(&self, other: &SchurElt) -> Result<()> {
        if self.params() != other.params() {
            return Err(Error::Mismatch(format!(
                "(n, r, q) = {:?} vs {:?}",
                self.params(),
                other.params()
            )));
        }
        Ok(())
    }

    /// Convolution product.
    pub fn multiply(&self, other: &SchurElt, cap: u64) -> Result<SchurElt> {
        self.check_same(other)?;
        let field = field_of_order(self.q, cap)?;
        let mut out = SchurElt::zero(self.n, self.r, self.q);
        let mut cache: HashMap<(ThetaMatrix, ThetaMatrix), Vec<(ThetaMatrix, u64)>> = HashMap::new();
        let thetas = enum_theta(self.n, self.r);
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                if a.col_sums() != b.row_sums() {
                    continue;
                }
                let terms = match cache.get(&(a.clone(), b.clone())) {
                    Some(t) => t.clone(),
                    None => {
                        let mut t = Vec::new();
                        for c in &thetas {
                            let k = structure_constant(a, b, c, &field)?;
                            if k > 0 {
                                t.push((c.clone(), k));
                            }
                        }
                        cache.insert((a.clone(), b.clone()), t.clone());
                        t
                    }
                };
                for (c, k) in terms {
                    out.add_term(c, x * y * BigInt::from(k));
                }
            }
        }
        Ok(out)
    }
}

/// `1_D -> 1_{D/l}` when `l` divides every entry of `D`, else `0`; the
/// result lives over `F_{q^l}` in dimension `r / l`.
pub fn frobenius_restrict(f: &SchurElt, ell: u32) -> Result<SchurElt> {
    if ell == 0 || f.r % ell != 0 {
        return Err(Error::InvalidInput(format!("size {} is not divisible by l = {ell}", f.r)));
    }
    let mut out = SchurElt::zero(f.n, f.r / ell, f.q.pow(ell));
    for (d, c) in &f.coeffs {
        if let Some(d1) = d.divide(ell) {
            out.add_term(d1, c.clone());
        }
    }
    Ok(out)
}

/// The `F_q`-matrix (acting on row vectors) of multiplication by `gamma`
/// on `F_q^{l r}`, viewed as `r` copies of `F_{q^l}` in the power basis of
/// `gamma`, which must generate `F_{q^l}` over `F_q`.
fn scalar_action(small: &FqField, big: &FqField, emb: &Embedding, gamma: FqElem, ell: usize, r: usize) -> Result<FqMatrix> {
    // minimal polynomial prod_j (x - gamma^{q^j}), coefficients in F_q
    let q = small.order();
    let mut poly = vec![FqElem::ONE];
    let mut conj = gamma;
    for _ in 0..ell {
        let mut next = vec![FqElem::ZERO; poly.len() + 1];
        for (k, &c) in poly.iter().enumerate() {
            next[k + 1] = big.add(next[k + 1], c);
            next[k] = big.sub(next[k], big.mul(c, conj));
        }
        poly = next;
        conj = big.pow(conj, q);
    }
    let coeffs: Vec<FqElem> = poly
        .iter()
        .map(|&c| emb.preimage(c).ok_or_else(|| Error::Hypothesis("minimal polynomial not over F_q".into())))
        .collect::<Result<_>>()?;
    // row k is gamma * gamma^k in the basis gamma^0..gamma^{l-1}
    let mut comp = FqMatrix::zeros(small, ell, ell);
    for k in 0..ell - 1 {
        comp.set(k, k + 1, FqElem::ONE);
    }
    for k in 0..ell {
        comp.set(ell - 1, k, small.neg(coeffs[k]));
    }
    let mut m = FqMatrix::zeros(small, ell * r, ell * r);
    for b in 0..r {
        for i in 0..ell {
            for j in 0..ell {
                m.set(b * ell + i, b * ell + j, comp.get(i, j));
            }
        }
    }
    Ok(m)
}

fn is_stable(s: &Subspace, g: &FqMatrix) -> bool {
    s.image(g).map(|t| t == *s).unwrap_or(false)
}

/// One triple `(A, B, l C')` of the congruence check.
#[derive(Clone, Debug, Serialize)]
pub struct FrobTriple {
    pub a: ThetaMatrix,
    pub b: ThetaMatrix,
    pub c_prime: ThetaMatrix,
    /// `|S|`, the structure constant over `F_q`
    pub count: String,
    /// `|S^T|`, flags fixed by the scalar torus
    pub fixed: String,
    /// `c_{A',B'}^{C'}` over `F_{q^l}`, or `0`
    pub expected: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FrobReport {
    pub n: usize,
    pub r: u32,
    pub ell: u32,
    pub q: u64,
    pub modulus: String,
    pub checked: usize,
    pub violations: usize,
    pub triples: Vec<FrobTriple>,
}

impl FrobReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// For all `A, B` of size `l r` and `C'` of size `r`, checks
/// `c_{A,B}^{l C'} ≡ c_{A',B'}^{C'}` (or `0`) modulo `Phi_l(q)`, and the
/// pointwise torus congruence `|S| ≡ |S^T|` with `|S^T| = c_{A',B'}^{C'}`.
/// Incompatible triples have every count zero and are not listed.
pub fn check_frobenius_hom(n: usize, r: u32, ell: u32, q: u64, cap: u64) -> Result<FrobReport> {
    if ell < 2 {
        return Err(Error::InvalidInput("l must be at least 2".into()));
    }
    let small = field_of_order(q, cap)?;
    let big = field_of_order(q.pow(ell), cap)?;
    let emb = Embedding::new(&small, &big)?;
    let gamma = big.primitive();
    let s = cyclotomic_poly(ell as u64).eval(&BigInt::from(q));
    let l = ell as usize;
    let act = scalar_action(&small, &big, &emb, gamma, l, r as usize)?;
    let c_primes = enum_theta(n, r);
    let per_c: Vec<Result<Vec<FrobTriple>>> = c_primes
        .par_iter()
        .map(|cp| {
            let c = cp.scale(ell);
            let (f0, f1) = standard_pair(&small, cp, l);
            debug_assert_eq!(relative_position(&f0, &f1).ok().as_ref(), Some(&c));
            let (g0, g1) = standard_pair(&big, cp, 1);
            let mut triples = Vec::new();
            for middle in compositions(n, ell * r) {
                let mid: Vec<usize> = middle.iter().map(|&x| x as usize).collect();
                let mut hist: BTreeMap<(ThetaMatrix, ThetaMatrix), (u64, u64)> = BTreeMap::new();
                for fl in enum_flags(&small, &mid) {
                    let a = relative_position(&f0, &fl)?;
                    let b = relative_position(&fl, &f1)?;
                    let fixed = fl.steps().iter().all(|st| is_stable(st, &act));
                    let e = hist.entry((a, b)).or_insert((0, 0));
                    e.0 += 1;
                    if fixed {
                        e.1 += 1;
                    }
                }
                let small_mid: Option<Vec<usize>> = mid
                    .iter()
                    .map(|&x| (x % l == 0).then_some(x / l))
                    .collect();
                let expected_hist = match &small_mid {
                    Some(sm) => position_histogram(&big, &g0, &g1, sm)?,
                    None => HashMap::new(),
                };
                for ((a, b), (count, fixed)) in hist {
                    let expected = match (a.divide(ell), b.divide(ell)) {
                        (Some(a1), Some(b1)) => *expected_hist.get(&(a1, b1)).unwrap_or(&0),
                        _ => 0,
                    };
                    let diff = BigInt::from(count) - BigInt::from(expected);
                    let pass = (&diff % &s).is_zero() && fixed == expected;
                    triples.push(FrobTriple {
                        a,
                        b,
                        c_prime: cp.clone(),
                        count: count.to_string(),
                        fixed: fixed.to_string(),
                        expected: expected.to_string(),
                        pass,
                    });
                }
            }
            Ok(triples)
        })
        .collect();
    let mut triples = Vec::new();
    for t in per_c {
        triples.extend(t?);
    }
    triples.sort_by(|x, y| (&x.c_prime, &x.a, &x.b).cmp(&(&y.c_prime, &y.a, &y.b)));
    let violations = triples.iter().filter(|t| !t.pass).count();
    Ok(FrobReport {
        n,
        r,
        ell,
        q,
        modulus: s.to_string(),
        checked: triples.len(),
        violations,
        triples,
    })
}

/// Compositions of `total` into `n` nonnegative parts.
pub fn compositions(n: usize, total: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    fn go(k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k + 1 == cur.len() {
            cur[k] = left;
            out.push(cur.clone());
            return;
        }
        for a in 0..=left {
            cur[k] = a;
            go(k + 1, left - a, cur, out);
        }
    }
    if n > 0 {
        go(0, total, &mut cur, &mut out);
    }
    out
}

/// Result of [`interpolate_structure_poly`].
#[derive(Clone, Debug, Serialize)]
pub struct InterpolatedConstant {
    pub a: ThetaMatrix,
    pub b: ThetaMatrix,
    pub c: ThetaMatrix,
    pub coeffs: Vec<String>,
    pub degree_bound: usize,
    pub validated_at: Vec<u64>,
}

/// Lagrange interpolation over `Q` through `(x_k, y_k)`.
pub fn lagrange(points: &[(BigInt, BigInt)]) -> Vec<BigRational> {
    let m = points.len();
    let mut result = vec![BigRational::zero(); m.max(1)];
    for (k, (xk, yk)) in points.iter().enumerate() {
        // basis polynomial prod_{j != k} (x - x_j) / (x_k - x_j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if j == k {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c.clone();
                next[d] -= c * BigRational::from_integer(xj.clone());
            }
            basis = next;
            denom *= BigRational::from_integer(xk - xj);
        }
        let scale = BigRational::from_integer(yk.clone()) / denom;
        for (d, c) in basis.iter().enumerate() {
            result[d] += c * &scale;
        }
    }
    result
}

/// Fits `c_{A,B}^C` as a polynomial in `q` from `train` and checks it on
/// `held_out`. The degree bound starts at `r^2` and grows while validation
/// fails and training points remain.
pub fn interpolate_structure_poly(
    a: &ThetaMatrix,
    b: &ThetaMatrix,
    c: &ThetaMatrix,
    train: &[u64],
    held_out: &[u64],
    cap: u64,
) -> Result<(IntPoly, InterpolatedConstant)> {
    if train.is_empty() {
        return Err(Error::Interpolation("no interpolation points".into()));
    }
    let count = |q: u64| -> Result<BigInt> {
        let f = field_of_order(q, cap)?;
        Ok(BigInt::from(structure_constant(a, b, c, &f)?))
    };
    let train_vals: Vec<(BigInt, BigInt)> =
        train.iter().map(|&q| Ok((BigInt::from(q), count(q)?))).collect::<Result<_>>()?;
    let held_vals: Vec<(BigInt, BigInt)> =
        held_out.iter().map(|&q| Ok((BigInt::from(q), count(q)?))).collect::<Result<_>>()?;
    let r = c.size() as usize;
    let mut degree = (r * r).min(train.len() - 1);
    loop {
        let coeffs = lagrange(&train_vals[..=degree]);
        let integral = coeffs.iter().all(|x| x.is_integer());
        if integral {
            let poly = IntPoly::from_coeffs(coeffs.iter().map(|x| x.to_integer()).collect());
            let fits = train_vals[degree + 1..]
                .iter()
                .chain(&held_vals)
                .all(|(x, y)| poly.eval(x) == *y);
            if fits {
                let nonneg = train_vals.iter().chain(&held_vals).all(|(x, _)| !poly.eval(x).is_negative());
                if !nonneg {
                    return Err(Error::Interpolation("negative value at a tested prime power".into()));
                }
                let summary = InterpolatedConstant {
                    a: a.clone(),
                    b: b.clone(),
                    c: c.clone(),
                    coeffs: (0..=poly.degree().unwrap_or(0)).map(|k| poly.coeff(k).to_string()).collect(),
                    degree_bound: degree,
                    validated_at: held_out.to_vec(),
                };
                return Ok((poly, summary));
            }
        }
        if degree + 1 >= train.len() {
            return Err(Error::Interpolation(format!(
                "no integral polynomial of degree <= {degree} fits the data"
            )));
        }
        degree += 1;
    }
}

/// `{(A, B, C)}` with all three compatible, over `n`-step flags in
/// dimension `r`, in deterministic order.
pub fn compatible_triples(n: usize, r: u32) -> Vec<(ThetaMatrix, ThetaMatrix, ThetaMatrix)> {
    let thetas = enum_theta(n, r);
    let mut out = Vec::new();
    for a in &thetas {
        for b in &thetas {
            if a.col_sums() != b.row_sums() {
                continue;
            }
            for c in &thetas {
                if compatible(a, b, c) {
                    out.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfq::make_field;
    use num_traits::ToPrimitive;

    #[test]
    fn theta_enumeration() {
        assert_eq!(enum_theta(1, 5), vec![ThetaMatrix::from_rows(&[&[5]])]);
        assert_eq!(enum_theta(2, 1).len(), 4);
        assert_eq!(enum_theta(2, 2).len(), 10);
        assert_eq!(enum_theta(3, 2).len(), 45);
    }

    #[test]
    fn standard_pair_has_the_requested_position() {
        let f = make_field(3, 1).unwrap();
        for c in enum_theta(3, 2).into_iter().chain(enum_theta(2, 3)) {
            let (f0, f1) = standard_pair(&f, &c, 1);
            assert_eq!(relative_position(&f0, &f1).unwrap(), c);
            let (g0, g1) = standard_pair(&f, &c, 2);
            assert_eq!(relative_position(&g0, &g1).unwrap(), c.scale(2));
        }
    }

    #[test]
    fn structure_constant_examples() {
        for q in [2u64, 3] {
            let f = field_of_order(q, 64).unwrap();
            let d = ThetaMatrix::diag(&[1, 2]);
            assert_eq!(structure_constant(&d, &d, &d, &f).unwrap(), 1);
            let e12 = ThetaMatrix::unit(2, 0, 1);
            let e21 = ThetaMatrix::unit(2, 1, 0);
            let e11 = ThetaMatrix::unit(2, 0, 0);
            let e22 = ThetaMatrix::unit(2, 1, 1);
            assert_eq!(structure_constant(&e12, &e21, &e11, &f).unwrap(), 1);
            // brute force over all pairs of middle flags (only one of type (0,1))
            assert_eq!(structure_constant(&e12, &e21, &e22, &f).unwrap(), 0);
            assert_eq!(structure_constant(&e12, &e12, &e11, &f).unwrap(), 0);
        }
    }

    #[test]
    fn multiply_examples() {
        let e12 = ThetaMatrix::unit(2, 0, 1);
        let e21 = ThetaMatrix::unit(2, 1, 0);
        let e11 = ThetaMatrix::unit(2, 0, 0);
        let prod = SchurElt::basis(&e12, 2).multiply(&SchurElt::basis(&e21, 2), 64).unwrap();
        assert_eq!(prod, SchurElt::basis(&e11, 2));
        let d = ThetaMatrix::diag(&[1, 1]);
        let d2 = ThetaMatrix::diag(&[2, 0]);
        let bd = SchurElt::basis(&d, 3);
        assert_eq!(bd.multiply(&bd, 64).unwrap(), bd);
        assert!(bd.multiply(&SchurElt::basis(&d2, 3), 64).unwrap().is_zero());
        assert!(bd.multiply(&SchurElt::basis(&d, 2), 64).is_err());
    }

    #[test]
    fn restriction_examples() {
        let d = ThetaMatrix::from_rows(&[&[2, 0], &[2, 0]]);
        let out = frobenius_restrict(&SchurElt::basis(&d, 2), 2).unwrap();
        assert_eq!(out, SchurElt::basis(&ThetaMatrix::from_rows(&[&[1, 0], &[1, 0]]), 4));
        let odd = ThetaMatrix::from_rows(&[&[1, 1], &[2, 0]]);
        assert!(frobenius_restrict(&SchurElt::basis(&odd, 2), 2).unwrap().is_zero());
        assert!(frobenius_restrict(&SchurElt::zero(2, 4, 2), 2).unwrap().is_zero());
    }

    #[test]
    fn frobenius_congruences_small() {
        let rep = check_frobenius_hom(2, 1, 2, 2, 64).unwrap();
        assert_eq!(rep.modulus, "3");
        assert!(rep.passed(), "{rep:?}");
        assert!(rep.checked > 0);
        let rep = check_frobenius_hom(2, 1, 3, 2, 64).unwrap();
        assert_eq!(rep.modulus, "7");
        assert!(rep.passed());
    }

    #[test]
    fn interpolation_examples() {
        let e12 = ThetaMatrix::unit(2, 0, 1);
        let e21 = ThetaMatrix::unit(2, 1, 0);
        let e11 = ThetaMatrix::unit(2, 0, 0);
        let (p, _) = interpolate_structure_poly(&e12, &e21, &e11, &[2, 3, 4, 5], &[7], 64).unwrap();
        assert_eq!(p, IntPoly::one());
        // a constant that genuinely depends on q
        let a = ThetaMatrix::from_rows(&[&[0, 1], &[0, 1]]);
        let b = ThetaMatrix::from_rows(&[&[0, 0], &[1, 1]]);
        let c = ThetaMatrix::from_rows(&[&[0, 1], &[0, 1]]);
        let direct: Vec<u64> = [2u64, 3, 4, 5]
            .iter()
            .map(|&q| structure_constant(&a, &b, &c, &field_of_order(q, 64).unwrap()).unwrap())
            .collect();
        let (p, _) = interpolate_structure_poly(&a, &b, &c, &[2, 3, 4, 5], &[7], 64).unwrap();
        for (q, v) in [2u64, 3, 4, 5].iter().zip(direct) {
            assert_eq!(p.eval(&BigInt::from(*q)), BigInt::from(v));
        }
    }

    #[test]
    fn lagrange_recovers_a_cubic() {
        let f = |x: i64| 2 * x * x * x - x + 7;
        let pts: Vec<(BigInt, BigInt)> = [1, 2, 4, 5].iter().map(|&x| (BigInt::from(x), BigInt::from(f(x)))).collect();
        let c = lagrange(&pts);
        let ints: Vec<i64> = c.iter().map(|x| x.to_integer().to_i64().unwrap()).collect();
        assert_eq!(ints, vec![7, -1, 0, 2]);
    }

    #[test]
    fn base_pair_independence() {
        let f = make_field(3, 1).unwrap();
        // a fixed non-identity invertible map
        let g = FqMatrix::from_vecs(&f, 2, &[vec![FqElem(1), FqElem(2)], vec![FqElem(1), FqElem(0)]]);
        for (a, b, c) in compatible_triples(2, 2) {
            let (f0, f1) = standard_pair(&f, &c, 1);
            let (h0, h1) = (f0.image(&g).unwrap(), f1.image(&g).unwrap());
            assert_eq!(
                structure_constant_at(&a, &b, &c, &f, &f0, &f1).unwrap(),
                structure_constant_at(&a, &b, &c, &f, &h0, &h1).unwrap()
            );
        }
    }
}
