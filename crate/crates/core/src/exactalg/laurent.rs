//! Laurent polynomials in `v` over `Z`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::intpoly::IntPoly;

/// An element of `Z[v, v^-1]`, stored sparsely by exponent with no zero
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The generator `v`.
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * v^e`
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(e, c.into());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn from_intpoly(p: &IntPoly) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (k as i64, c.clone())),
        )
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, a)| (e, a * c)))
    }

    /// Substitute `v -> v^k` for a nonzero integer `k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "substitution v -> v^0 is not a ring automorphism");
        Self::from_terms(self.terms.iter().map(|(&e, c)| (e * k, c.clone())))
    }

    /// The bar involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        self.substitute_power(-1)
    }

    /// Write `self = v^shift * p(v)` with `p` an honest polynomial and
    /// `shift` the lowest exponent.
    pub fn to_shifted_intpoly(&self) -> (i64, IntPoly) {
        let Some(lo) = self.min_exp() else {
            return (0, IntPoly::zero());
        };
        let hi = self.max_exp().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (&e, c) in &self.terms {
            coeffs[(e - lo) as usize] = c.clone();
        }
        (lo, IntPoly::from_coeffs(coeffs))
    }

    /// Exact quotient in `Z[v, v^-1]`, if it exists.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let (sa, a) = self.to_shifted_intpoly();
        let (sb, b) = divisor.to_shifted_intpoly();
        let q = a.div_exact(&b)?;
        Some(LaurentPoly::from_intpoly(&q).shift(sa - sb))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = LaurentPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Evaluate at an integer point `v = x`; `None` if a negative exponent
    /// would require division by a non-unit.
    pub fn eval_int(&self, x: &BigInt) -> Option<BigInt> {
        let mut acc = BigInt::zero();
        for (&e, c) in &self.terms {
            if e < 0 {
                if x.abs().is_one() {
                    acc += c * x.pow((-e) as u32);
                    continue;
                }
                return None;
            }
            acc += c * x.pow(e as u32);
        }
        Some(acc)
    }

    /// Evaluate a polynomial in `v^2` at `v^2 = q`. Returns `None` if some
    /// exponent is odd or negative.
    pub fn eval_at_square(&self, q: &BigInt) -> Option<BigInt> {
        let mut acc = BigInt::zero();
        for (&e, c) in &self.terms {
            if e < 0 || e % 2 != 0 {
                return None;
            }
            acc += c * q.pow((e / 2) as u32);
        }
        Some(acc)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let abs = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "v")?,
                (_, true) => write!(f, "v^{e}")?,
                (1, false) => write!(f, "{abs}*v")?,
                (_, false) => write!(f, "{abs}*v^{e}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(i64, String)> = self
            .terms
            .iter()
            .map(|(&e, c)| (e, c.to_string()))
            .collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs: Vec<(i64, String)> = Vec::deserialize(d)?;
        let mut terms = Vec::with_capacity(pairs.len());
        for (e, c) in pairs {
            let c: BigInt = c
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient {c:?}")))?;
            terms.push((e, c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_uses_decimal_strings() {
        let p = LaurentPoly::from_terms([(-2, BigInt::from(3)), (5, BigInt::from(-7))]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"[[-2,"3"],[5,"-7"]]"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a = LaurentPoly::v() + LaurentPoly::monomial(1, -1);
        let b = &a - &LaurentPoly::v();
        assert_eq!(b, LaurentPoly::monomial(1, -1));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division() {
        // (v^2 - v^-2) / (v - v^-1) = v + v^-1
        let num = LaurentPoly::monomial(1, 2) - LaurentPoly::monomial(1, -2);
        let den = LaurentPoly::v() - LaurentPoly::monomial(1, -1);
        assert_eq!(
            num.div_exact(&den),
            Some(LaurentPoly::v() + LaurentPoly::monomial(1, -1))
        );
    }
}
