//! Rational functions in `v` with integer coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::exactalg::{IntPoly, LaurentPoly};

/// `num / den` with `gcd(num, den) = 1` over `Z[v]` and a positive leading
/// coefficient on `den`. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides");
        let mut den = den.div_exact(&g).expect("gcd divides");
        if den.leading().unwrap().is_negative() {
            num = -num;
            den = -den;
        }
        RatFunc { num, den }
    }

    pub fn zero() -> Self {
        RatFunc { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: IntPoly::one(), den: IntPoly::one() }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        RatFunc::new(IntPoly::constant(n), IntPoly::one())
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RatFunc::new(p, IntPoly::one())
    }

    /// `v^k` for any integer `k`.
    pub fn v_pow(k: i64) -> Self {
        if k >= 0 {
            RatFunc::from_poly(IntPoly::monomial(1, k as usize))
        } else {
            RatFunc::new(IntPoly::one(), IntPoly::monomial(1, (-k) as usize))
        }
    }

    pub fn from_laurent(p: &LaurentPoly) -> Self {
        let (shift, poly) = p.to_shifted_intpoly();
        RatFunc::from_poly(poly).mul(&RatFunc::v_pow(shift))
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, rhs: &RatFunc) -> RatFunc {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn inv(&self) -> Option<RatFunc> {
        (!self.is_zero()).then(|| RatFunc::new(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &RatFunc) -> Option<RatFunc> {
        Some(self.mul(&rhs.inv()?))
    }

    /// Value at an integer point where the denominator does not vanish.
    pub fn eval(&self, x: &BigInt) -> Option<num_rational::BigRational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| num_rational::BigRational::new(self.num.eval(x), d))
    }

    pub fn to_json(&self) -> Value {
        let c = |p: &IntPoly| p.coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>();
        json!({"num": c(&self.num), "den": c(&self.den)})
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}
