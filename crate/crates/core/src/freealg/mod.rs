//! The free algebra on generators `theta_i` over `Q(v)`, its twisted
//! coproduct and bilinear form, and the dimensions of the quotient by the
//! radical.

pub mod ratfunc;

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{cap_check, Error, Result};
use crate::exactalg::{bareiss_rank, gauss_binom, IntPoly};
use crate::hall::{indicator_fn, words_with_content, CartanDatum, QuiverWithAut, RepModel};
pub use ratfunc::RatFunc;

pub const DEFAULT_WORD_CAP: usize = 200;

/// A word in the letters `0..rank`.
pub type Letters = Vec<usize>;

/// One term `v^e (left ⊗ right)` of a coproduct.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CoproductTerm {
    pub left: Letters,
    pub right: Letters,
    pub exponent: i64,
}

pub struct FreeAlgebra {
    cartan: CartanDatum,
    memo: Mutex<HashMap<(Letters, Letters), RatFunc>>,
}

impl std::fmt::Debug for FreeAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FreeAlgebra({:?})", self.cartan.dot)
    }
}

impl FreeAlgebra {
    pub fn new(cartan: &CartanDatum) -> Result<Self> {
        cartan.validate()?;
        Ok(FreeAlgebra { cartan: cartan.clone(), memo: Mutex::new(HashMap::new()) })
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    fn dot(&self, i: usize, j: usize) -> i64 {
        self.cartan.dot[i][j]
    }

    pub fn content(&self, w: &[usize]) -> Vec<usize> {
        let mut nu = vec![0; self.rank()];
        for &i in w {
            nu[i] += 1;
        }
        nu
    }

    /// All words of content `nu`, in lexicographic order.
    pub fn words(&self, nu: &[usize]) -> Vec<Letters> {
        let mut out = Vec::new();
        let mut rest = nu.to_vec();
        let mut cur = Vec::new();
        fn go(rest: &mut Vec<usize>, cur: &mut Letters, out: &mut Vec<Letters>) {
            if rest.iter().all(|&r| r == 0) {
                out.push(cur.clone());
                return;
            }
            for i in 0..rest.len() {
                if rest[i] > 0 {
                    rest[i] -= 1;
                    cur.push(i);
                    go(rest, cur, out);
                    cur.pop();
                    rest[i] += 1;
                }
            }
        }
        go(&mut rest, &mut cur, &mut out);
        out
    }

    /// `r(w)`, summed over the set `L` of positions sent to the left factor;
    /// the exponent is `sum w_m . w_k` over `m < k`, `m` right, `k` left.
    pub fn coproduct_r(&self, w: &[usize]) -> Vec<CoproductTerm> {
        let n = w.len();
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0u64..(1u64 << n) {
            let left_at = |k: usize| mask >> k & 1 == 1;
            let mut e = 0;
            for k in 0..n {
                if left_at(k) {
                    for m in 0..k {
                        if !left_at(m) {
                            e += self.dot(w[m], w[k]);
                        }
                    }
                }
            }
            out.push(CoproductTerm {
                left: (0..n).filter(|&k| left_at(k)).map(|k| w[k]).collect(),
                right: (0..n).filter(|&k| !left_at(k)).map(|k| w[k]).collect(),
                exponent: e,
            });
        }
        out
    }

    /// `(theta_i, theta_i) = 1/(1 - v_i^2)`.
    fn generator_pairing(&self, i: usize) -> RatFunc {
        let d = self.cartan.d(i) as usize;
        let mut den = vec![0i64; 2 * d + 1];
        den[0] = 1;
        den[2 * d] = -1;
        RatFunc::new(IntPoly::one(), IntPoly::from_i64s(&den))
    }

    /// The bilinear form, by peeling the first letter of `x` against
    /// `r(y)`.
    pub fn inner_product(&self, x: &[usize], y: &[usize]) -> RatFunc {
        if x.len() != y.len() || self.content(x) != self.content(y) {
            return RatFunc::zero();
        }
        if x.is_empty() {
            return RatFunc::one();
        }
        let key = (x.to_vec(), y.to_vec());
        if let Some(r) = self.memo.lock().unwrap().get(&key) {
            return r.clone();
        }
        let i = x[0];
        let mut total = RatFunc::zero();
        let mut e = 0;
        for k in 0..y.len() {
            if y[k] == i {
                let rest: Letters = y[..k].iter().chain(&y[k + 1..]).copied().collect();
                let term = self.inner_product(&x[1..], &rest);
                if !term.is_zero() {
                    total = total.add(&term.mul(&RatFunc::v_pow(e)));
                }
            }
            e += self.dot(y[k], i);
        }
        let value = total.mul(&self.generator_pairing(i));
        self.memo.lock().unwrap().insert(key, value.clone());
        value
    }

    pub fn gram_matrix(&self, nu: &[usize], cap: usize) -> Result<(Vec<Letters>, Vec<Vec<RatFunc>>)> {
        let words = self.words(nu);
        cap_check("words in the graded piece", words.len() as u128, cap as u128)?;
        let g = words
            .iter()
            .map(|a| words.iter().map(|b| self.inner_product(a, b)).collect())
            .collect();
        Ok((words, g))
    }

    /// `dim f_nu`: rank of the Gram matrix, by fraction-free elimination
    /// after clearing denominators.
    pub fn f_dimension(&self, nu: &[usize], cap: usize) -> Result<usize> {
        let (_, g) = self.gram_matrix(nu, cap)?;
        Ok(rank_fraction_free(&g))
    }
}

/// Rank over `Q(v)` by Bareiss elimination on `Z[v]` entries.
pub fn rank_fraction_free(m: &[Vec<RatFunc>]) -> usize {
    let mut den = IntPoly::one();
    for e in m.iter().flatten() {
        let g = den.gcd(e.den());
        den = (&den * e.den()).div_exact(&g).expect("gcd divides");
    }
    let mut rows: Vec<Vec<IntPoly>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| (e.num() * &den).div_exact(e.den()).expect("common denominator"))
                .collect()
        })
        .collect();
    bareiss_rank(&mut rows)
}

/// Rank over `Q(v)` by Gaussian elimination with field division.
pub fn rank_by_elimination(m: &[Vec<RatFunc>]) -> usize {
    let mut a: Vec<Vec<RatFunc>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][c].inv().unwrap();
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let f = a[r][c].mul(&inv);
                for k in c..cols {
                    let x = a[r][k].sub(&f.mul(&a[rank][k]));
                    a[r][k] = x;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// A homogeneous element of the free algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordVector {
    pub nu: Vec<usize>,
    pub terms: BTreeMap<Letters, RatFunc>,
}

impl WordVector {
    pub fn new(nu: Vec<usize>) -> Self {
        WordVector { nu, terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, alg: &FreeAlgebra, w: Letters, c: RatFunc) -> Result<()> {
        if alg.content(&w) != self.nu {
            return Err(Error::Mismatch(format!("word {w:?} outside content {:?}", self.nu)));
        }
        let e = self.terms.entry(w).or_insert_with(RatFunc::zero);
        *e = e.add(&c);
        Ok(())
    }

    /// `(self, y)`.
    pub fn pair(&self, alg: &FreeAlgebra, y: &[usize]) -> RatFunc {
        self.terms
            .iter()
            .fold(RatFunc::zero(), |acc, (w, c)| acc.add(&c.mul(&alg.inner_product(w, y))))
    }
}

/// `sum_k (-1)^k [N k]_i theta_i^k theta_j theta_i^{N-k}`, `N = 1 - a_ij`.
pub fn serre_element(alg: &FreeAlgebra, i: usize, j: usize) -> Result<WordVector> {
    if i == j {
        return Err(Error::InvalidInput("need distinct letters".into()));
    }
    let n = (1 - alg.cartan().a(i, j)) as usize;
    let mut nu = vec![0; alg.rank()];
    nu[i] = n;
    nu[j] = 1;
    let mut v = WordVector::new(nu);
    for k in 0..=n {
        let mut w = vec![i; k];
        w.push(j);
        w.extend(std::iter::repeat(i).take(n - k));
        let mut c = RatFunc::from_laurent(&gauss_binom(n as i64, k as i64, alg.cartan().d(i) as u32));
        if k % 2 == 1 {
            c = c.neg();
        }
        v.add_term(alg, w, c)?;
    }
    Ok(v)
}

#[derive(Clone, Debug, Serialize)]
pub struct DimRow {
    pub q: u64,
    pub words: usize,
    pub hall_rank: usize,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DimReport {
    pub nu: Vec<usize>,
    pub f_dimension: usize,
    pub rows: Vec<DimRow>,
}

impl DimReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }
}

/// Rank of the span of `{1_w : |w| = nu}` over `Q` at each `q`, beside
/// `dim f_nu`.
pub fn compare_dims_with_hall(quiver: &QuiverWithAut, nu: &[usize], qs: &[u64], cap: usize) -> Result<DimReport> {
    let cartan = crate::hall::cartan_from_quiver(quiver)?;
    let alg = FreeAlgebra::new(&cartan)?;
    let f_dimension = alg.f_dimension(nu, cap)?;
    let mut rows = Vec::new();
    for &q in qs {
        let model = RepModel::new(quiver, q)?;
        let words = words_with_content(nu);
        cap_check("Hall words", words.len() as u128, cap as u128)?;
        let mut table: Vec<Vec<BigInt>> = words
            .iter()
            .map(|w| indicator_fn(&model, w, nu).map(|f| f.values().to_vec()))
            .collect::<Result<_>>()?;
        let hall_rank = bareiss_rank(&mut table);
        rows.push(DimRow { q, words: words.len(), hall_rank, matches: hall_rank == f_dimension });
    }
    Ok(DimReport { nu: nu.to_vec(), f_dimension, rows })
}

pub fn gram_to_json(words: &[Letters], g: &[Vec<RatFunc>]) -> Value {
    json!({
        "words": words,
        "gram": g.iter().map(|r| r.iter().map(|e| e.to_json()).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hall::preset;

    fn a2() -> FreeAlgebra {
        FreeAlgebra::new(&CartanDatum::new(vec![vec![2, -1], vec![-1, 2]]).unwrap()).unwrap()
    }

    fn one_minus_v2() -> RatFunc {
        RatFunc::from_poly(IntPoly::from_i64s(&[1, 0, -1]))
    }

    #[test]
    fn coproduct_examples() {
        let alg = a2();
        let r = alg.coproduct_r(&[0]);
        assert_eq!(r.len(), 2);
        assert!(r.contains(&CoproductTerm { left: vec![0], right: vec![], exponent: 0 }));
        assert!(r.contains(&CoproductTerm { left: vec![], right: vec![0], exponent: 0 }));
        assert_eq!(alg.coproduct_r(&[]), vec![CoproductTerm { left: vec![], right: vec![], exponent: 0 }]);
        // theta_j theta_i: the term theta_i ⊗ theta_j carries v^{j.i}
        let r = alg.coproduct_r(&[1, 0]);
        assert!(r.contains(&CoproductTerm { left: vec![0], right: vec![1], exponent: -1 }));
    }

    #[test]
    fn pairing_examples() {
        let alg = a2();
        let g = one_minus_v2().inv().unwrap();
        assert_eq!(alg.inner_product(&[0], &[0]), g);
        assert_eq!(alg.inner_product(&[0, 1], &[0, 1]), g.mul(&g));
        assert_eq!(alg.inner_product(&[0, 1], &[1, 0]), RatFunc::v_pow(-1).mul(&g).mul(&g));
        assert_eq!(alg.inner_product(&[0], &[1]), RatFunc::zero());
        let b2 = FreeAlgebra::new(&CartanDatum::new(vec![vec![4, -2], vec![-2, 2]]).unwrap()).unwrap();
        let v4 = RatFunc::from_poly(IntPoly::from_i64s(&[1, 0, 0, 0, -1]));
        assert_eq!(b2.inner_product(&[0], &[0]), v4.inv().unwrap());
    }

    #[test]
    fn gram_examples() {
        let alg = a2();
        let (w, g) = alg.gram_matrix(&[0, 0], DEFAULT_WORD_CAP).unwrap();
        assert_eq!((w.len(), g[0][0].clone()), (1, RatFunc::one()));
        let (_, g) = alg.gram_matrix(&[1, 0], DEFAULT_WORD_CAP).unwrap();
        assert_eq!(g, vec![vec![one_minus_v2().inv().unwrap()]]);
    }

    #[test]
    fn dimensions() {
        let alg = a2();
        for (nu, d) in [(vec![1, 1], 2), (vec![2, 1], 2), (vec![2, 2], 3), (vec![3, 0], 1)] {
            assert_eq!(alg.f_dimension(&nu, DEFAULT_WORD_CAP).unwrap(), d, "{nu:?}");
            let (_, g) = alg.gram_matrix(&nu, DEFAULT_WORD_CAP).unwrap();
            assert_eq!(rank_by_elimination(&g), d);
        }
        // B2 roots a, b, a+b, a+2b: three partitions of a+2b
        let b2 = FreeAlgebra::new(&CartanDatum::new(vec![vec![4, -2], vec![-2, 2]]).unwrap()).unwrap();
        assert_eq!(b2.f_dimension(&[1, 2], DEFAULT_WORD_CAP).unwrap(), 3);
        assert!(matches!(alg.f_dimension(&[4, 4], 10), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn serre_element_is_in_the_radical() {
        let alg = a2();
        let s = serre_element(&alg, 0, 1).unwrap();
        assert_eq!(s.terms.len(), 3);
        for w in alg.words(&[2, 1]) {
            assert!(s.pair(&alg, &w).is_zero());
        }
        let b2 = FreeAlgebra::new(&CartanDatum::new(vec![vec![4, -2], vec![-2, 2]]).unwrap()).unwrap();
        for (i, j, nu) in [(0, 1, vec![2, 1]), (1, 0, vec![1, 3])] {
            let s = serre_element(&b2, i, j).unwrap();
            for w in b2.words(&nu) {
                assert!(s.pair(&b2, &w).is_zero());
            }
        }
    }

    #[test]
    fn hall_comparison() {
        let r = compare_dims_with_hall(&preset("A2").unwrap(), &[2, 1], &[2, 3, 5], DEFAULT_WORD_CAP).unwrap();
        assert!(r.all_match() && r.f_dimension == 2, "{r:?}");
        let r = compare_dims_with_hall(&preset("A1").unwrap(), &[3], &[2], DEFAULT_WORD_CAP).unwrap();
        assert_eq!((r.f_dimension, r.rows[0].hall_rank), (1, 1));
    }
}
