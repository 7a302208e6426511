//! Invariant functions on representation spaces, their convolution product
//! and the twisted, renormalized monomials.

use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::model::{RepModel, RepPoint};
use super::word::Word;
use crate::error::{Error, Result};
use crate::exactalg::{Scalar, Twist};

/// A class function at dimension vector `nu`, one value per class of
/// `model.classes(nu)`.
#[derive(Clone, Debug)]
pub struct HallFn<S> {
    model: Arc<RepModel>,
    nu: Vec<usize>,
    values: Vec<S>,
}

impl<S: Scalar> HallFn<S> {
    pub fn from_values(model: &Arc<RepModel>, nu: &[usize], values: Vec<S>) -> Result<Self> {
        let n = model.classes(nu)?.len();
        if values.len() != n {
            return Err(Error::Mismatch(format!("{} values for {n} classes", values.len())));
        }
        Ok(HallFn { model: model.clone(), nu: nu.to_vec(), values })
    }

    pub fn model(&self) -> &Arc<RepModel> {
        &self.model
    }

    pub fn nu(&self) -> &[usize] {
        &self.nu
    }

    /// Values per class representative.
    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn value_at(&self, x: &RepPoint) -> Result<S> {
        if x.nu != self.nu {
            return Err(Error::Mismatch("point of another dimension".into()));
        }
        Ok(self.values[self.model.class_of(x)?].clone())
    }

    /// The full table over `model.enum_points(nu)`.
    pub fn dense(&self) -> Result<Vec<S>> {
        self.model
            .enum_points(&self.nu)?
            .iter()
            .map(|x| self.value_at(x))
            .collect()
    }

    pub fn map<T: Scalar>(&self, g: impl Fn(&S) -> T) -> HallFn<T> {
        HallFn {
            model: self.model.clone(),
            nu: self.nu.clone(),
            values: self.values.iter().map(g).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|v| v.times(c))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        if self.nu != other.nu {
            return Err(Error::Mismatch(format!("adding functions at {:?} and {:?}", self.nu, other.nu)));
        }
        Ok(HallFn {
            model: self.model.clone(),
            nu: self.nu.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.plus(b)).collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if !Arc::ptr_eq(&self.model, &other.model) {
            return Err(Error::Mismatch("functions on different representation models".into()));
        }
        Ok(())
    }

    /// First class where the function is nonzero.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.values.iter().position(|v| !v.is_zero())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "nu": self.nu,
            "q": self.model.q(),
            "values": self.values.iter().map(|v| v.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// Number of `x`-stable flags of type `w`, `x` the representative of
/// `class` at `nu`.
pub fn flag_count(model: &RepModel, nu: &[usize], class: usize, w: &[(usize, u32)]) -> Result<u128> {
    if w.is_empty() {
        return Ok(u128::from(nu.iter().all(|&n| n == 0)));
    }
    let key = (nu.to_vec(), class, w.to_vec());
    if let Some(&v) = model.flag_memo.lock().unwrap().get(&key) {
        return Ok(v);
    }
    let (i, c) = w[0];
    let value = if nu[i] < c as usize {
        0
    } else {
        let mut sub = nu.to_vec();
        sub[i] -= c as usize;
        let mut total = 0u128;
        for &(_, sc, cnt) in model.split_hist(nu, class, &sub)?.iter() {
            total += cnt as u128 * flag_count(model, &sub, sc, &w[1..])?;
        }
        total
    };
    model.flag_memo.lock().unwrap().insert(key, value);
    Ok(value)
}

/// `1_w` at `nu`.
pub fn indicator_fn(model: &Arc<RepModel>, w: &Word, nu: &[usize]) -> Result<HallFn<BigInt>> {
    let content = w.content(model.rank());
    if content != nu {
        return Err(Error::Mismatch(format!("word content {content:?} differs from {nu:?}")));
    }
    let n = model.classes(nu)?.len();
    let values = (0..n)
        .into_par_iter()
        .map(|c| flag_count(model, nu, c, w.blocks()).map(BigInt::from))
        .collect::<Result<Vec<_>>>()?;
    HallFn::from_values(model, nu, values)
}

/// The unit: the constant 1 at `nu = 0`.
pub fn unit<S: Scalar>(model: &Arc<RepModel>, one: &S) -> HallFn<S> {
    HallFn::from_values(model, &vec![0; model.rank()], vec![one.one_like()]).expect("one class at zero")
}

/// `(f1 * f2)(x) = sum_W f1(V/W) f2(W)` over `x`-stable `W` with `|W| = |f2|`.
pub fn convolve<S: Scalar>(f1: &HallFn<S>, f2: &HallFn<S>) -> Result<HallFn<S>> {
    f1.compatible(f2)?;
    let model = &f1.model;
    let nu: Vec<usize> = f1.nu.iter().zip(&f2.nu).map(|(a, b)| a + b).collect();
    let zero = f1
        .values
        .first()
        .or(f2.values.first())
        .map(|v| v.zero_like())
        .ok_or_else(|| Error::Mismatch("empty value table".into()))?;
    let n = model.classes(&nu)?.len();
    let values = (0..n)
        .into_par_iter()
        .map(|c| {
            let hist = model.split_hist(&nu, c, &f2.nu)?;
            let mut acc = zero.clone();
            for &(qc, sc, cnt) in hist.iter() {
                let term = f1.values[qc].times(&f2.values[sc]);
                if !term.is_zero() {
                    acc = acc.plus(&term.times(&zero.from_int_like(&BigInt::from(cnt))));
                }
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>>>()?;
    HallFn::from_values(model, &nu, values)
}

/// `m(nu, mu) = sum_j nu_[j] mu_[j] + sum_h nu_[s(h)] mu_[t(h)]`.
pub fn m_form(model: &RepModel, nu: &[usize], mu: &[usize]) -> i64 {
    let mut m = 0i64;
    for i in 0..model.rank() {
        m += model.orbits()[i].d as i64 * (nu[i] * mu[i]) as i64;
    }
    for e in model.edge_orbits() {
        m += e.o as i64 * (nu[e.s] * mu[e.t]) as i64;
    }
    m
}

/// `N(i, c) = sum_{r < r'} c_r c_r' (#{h : s(h) in i_r, t(h) in i_r'} + [i_r = i_r'] d)`.
pub fn n_form(model: &RepModel, w: &Word) -> i64 {
    let b = w.blocks();
    let mut n = 0i64;
    for r in 0..b.len() {
        for s in r + 1..b.len() {
            let (i, c) = b[r];
            let (j, c2) = b[s];
            let mut weight = model.arrows(i, j) as i64;
            if i == j {
                weight += model.orbits()[i].d as i64;
            }
            n += weight * c as i64 * c2 as i64;
        }
    }
    n
}

/// `eps^{-m(|f1|, |f2|)} f1 * f2`.
pub fn twisted_mul<S: Scalar>(f1: &HallFn<S>, f2: &HallFn<S>, tw: &Twist<S>) -> Result<HallFn<S>> {
    check_twist(&f1.model, tw)?;
    let m = m_form(&f1.model, &f1.nu, &f2.nu);
    Ok(convolve(f1, f2)?.scale(&tw.eps_pow(-m)))
}

fn check_twist<S: Scalar>(model: &RepModel, tw: &Twist<S>) -> Result<()> {
    if tw.q() != model.q() {
        return Err(Error::Mismatch(format!(
            "square root of {} used over F_{}",
            tw.q(),
            model.q()
        )));
    }
    Ok(())
}

/// `theta_w = eps^{-N(w)} 1_w`.
pub fn theta_normalized<S: Scalar>(model: &Arc<RepModel>, w: &Word, tw: &Twist<S>) -> Result<HallFn<S>> {
    check_twist(model, tw)?;
    let ind = indicator_fn(model, w, &w.content(model.rank()))?;
    let c = tw.eps_pow(-n_form(model, w));
    Ok(ind.map(|v| c.from_int_like(v).times(&c)))
}

/// `theta_i^{(n)}`, the unit for `n = 0`.
pub fn divided_power<S: Scalar>(model: &Arc<RepModel>, i: usize, n: u32, tw: &Twist<S>) -> Result<HallFn<S>> {
    if n == 0 {
        Ok(unit(model, tw.eps()))
    } else {
        theta_normalized(model, &Word::letter(i, n), tw)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SerreReport {
    pub i: usize,
    pub j: usize,
    pub a_ij: i64,
    pub nu: Vec<usize>,
    pub classes: usize,
    pub passed: bool,
    pub witness: Option<Value>,
}

/// `sum_k (-1)^k theta_i^{(k)} theta_j theta_i^{(1 - a_ij - k)} = 0`.
pub fn serre_check<S: Scalar>(model: &Arc<RepModel>, i: usize, j: usize, tw: &Twist<S>) -> Result<SerreReport> {
    if i == j || i >= model.rank() || j >= model.rank() {
        return Err(Error::InvalidInput(format!("need distinct orbits, got {i} and {j}")));
    }
    let di = model.orbits()[i].d as i64;
    let ij = -((model.arrows(i, j) + model.arrows(j, i)) as i64);
    let a_ij = 2 * ij / (2 * di);
    let top = (1 - a_ij) as u32;
    let theta_j = divided_power(model, j, 1, tw)?;
    let mut total: Option<HallFn<S>> = None;
    for k in 0..=top {
        let left = divided_power(model, i, k, tw)?;
        let right = divided_power(model, i, top - k, tw)?;
        let mut term = twisted_mul(&twisted_mul(&left, &theta_j, tw)?, &right, tw)?;
        if k % 2 == 1 {
            term = term.map(|v| v.negate());
        }
        total = Some(match total {
            None => term,
            Some(t) => t.add(&term)?,
        });
    }
    let total = total.expect("at least one term");
    let witness = total.first_nonzero().map(|c| {
        let table = model.classes(total.nu()).expect("cached");
        json!({"point": model.point_to_json(&table.reps[c]), "value": total.values()[c].to_json()})
    });
    Ok(SerreReport {
        i,
        j,
        a_ij,
        nu: total.nu().to_vec(),
        classes: total.values().len(),
        passed: witness.is_none(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::SurdElt;
    use crate::hall::quiver::preset;
    use crate::hall::word::words_with_content;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn single_vertex_indicators() {
        for q in [2, 3, 4] {
            let m = RepModel::new(&preset("A1").unwrap(), q).unwrap();
            let one = indicator_fn(&m, &Word::letter(0, 3), &[3]).unwrap();
            assert_eq!(one.values(), &[int(1)]);
            let lines = indicator_fn(&m, &Word(vec![(0, 1), (0, 1)]), &[2]).unwrap();
            assert_eq!(lines.values(), &[int(q as i64 + 1)]);
            let a = indicator_fn(&m, &Word::letter(0, 1), &[1]).unwrap();
            assert_eq!(convolve(&a, &a).unwrap().values(), lines.values());
        }
        let m = RepModel::new(&preset("A2").unwrap(), 2).unwrap();
        assert!(matches!(indicator_fn(&m, &Word::letter(0, 1), &[1, 1]), Err(Error::Mismatch(_))));
    }

    #[test]
    fn normalization_exponents() {
        let a1 = RepModel::new(&preset("A1").unwrap(), 2).unwrap();
        assert_eq!(n_form(&a1, &Word::letter(0, 5)), 0);
        assert_eq!(n_form(&a1, &Word(vec![(0, 1), (0, 1)])), 1);
        let a2 = RepModel::new(&preset("A2").unwrap(), 2).unwrap();
        assert_eq!(m_form(&a2, &[1, 0], &[0, 1]), 1);
        assert_eq!(m_form(&a2, &[0, 1], &[1, 0]), 0);
        let b2 = RepModel::new(&preset("A3-folded").unwrap(), 2).unwrap();
        // d = 2 on the flipped orbit
        assert_eq!(m_form(&b2, &[1, 0], &[1, 0]), 2);
        for w in words_with_content(&[2, 1]) {
            assert_eq!(n_form(&a2, &w.scale(3)), 9 * n_form(&a2, &w));
            let (x, y) = (Word(w.0[..1].to_vec()), Word(w.0[1..].to_vec()));
            assert_eq!(
                n_form(&a2, &w),
                n_form(&a2, &x) + n_form(&a2, &y) + m_form(&a2, &x.content(2), &y.content(2))
            );
        }
    }

    #[test]
    fn twisted_square_of_a_letter() {
        let q = 3;
        let m = RepModel::new(&preset("A1").unwrap(), q).unwrap();
        let tw = SurdElt::twist(q);
        let t = theta_normalized(&m, &Word::letter(0, 1), &tw).unwrap();
        let sq = twisted_mul(&t, &t, &tw).unwrap();
        let t2 = theta_normalized(&m, &Word::letter(0, 2), &tw).unwrap();
        // eps + eps^{-1} = [2]
        let two = tw.eps().plus(&tw.eps_pow(-1));
        assert_eq!(sq.values(), t2.scale(&two).values());
    }

    #[test]
    fn serre_relations() {
        for q in [2, 3] {
            let m = RepModel::new(&preset("A2").unwrap(), q).unwrap();
            let r = serre_check(&m, 0, 1, &SurdElt::twist(q)).unwrap();
            assert!(r.passed, "{r:?}");
            assert_eq!((r.a_ij, r.nu.clone()), (-1, vec![2, 1]));
            let r = serre_check(&m, 1, 0, &SurdElt::twist(q)).unwrap();
            assert!(r.passed);
        }
        let m = RepModel::new(&preset("A1xA1").unwrap(), 2).unwrap();
        assert!(serre_check(&m, 0, 1, &SurdElt::twist(2)).unwrap().passed);
        let b2 = RepModel::new(&preset("A3-folded").unwrap(), 2).unwrap();
        let r = serre_check(&b2, 1, 0, &SurdElt::twist(2)).unwrap();
        assert_eq!(r.a_ij, -2);
        assert!(r.passed, "{r:?}");
        assert!(serre_check(&b2, 0, 1, &SurdElt::twist(2)).unwrap().passed);
    }

    #[test]
    fn a_wrong_relation_is_caught() {
        let m = RepModel::new(&preset("A2").unwrap(), 2).unwrap();
        let tw = SurdElt::twist(2);
        let x = divided_power(&m, 0, 1, &tw).unwrap();
        let y = divided_power(&m, 1, 1, &tw).unwrap();
        let xy = twisted_mul(&x, &y, &tw).unwrap();
        let yx = twisted_mul(&y, &x, &tw).unwrap();
        assert!(!xy.add(&yx.map(|v| v.negate())).unwrap().is_zero());
    }
}
