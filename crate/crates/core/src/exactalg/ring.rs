//! Coefficient rings for twisted Hall products: the real quadratic field
//! `Q(sqrt q)` and the finite ring `Z[t]/(t^2 - q, Phi_2l(t))`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::cyclo::cyclotomic_poly;
use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// A commutative ring whose elements carry their own context.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_int_like(&self, n: &BigInt) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn to_json(&self) -> Value;

    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negate())
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            e >>= 1;
        }
        acc
    }
}

impl Scalar for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn from_int_like(&self, n: &BigInt) -> Self {
        n.clone()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn to_json(&self) -> Value {
        json!(self.to_string())
    }
}

/// A chosen square root `eps` of `q` together with its inverse.
#[derive(Clone, Debug)]
pub struct Twist<S: Scalar> {
    q: u64,
    eps: S,
    eps_inv: S,
}

impl<S: Scalar> Twist<S> {
    /// Validates `eps^2 = q` and `eps * eps_inv = 1`.
    pub fn new(q: u64, eps: S, eps_inv: S) -> Result<Self> {
        if eps.times(&eps) != eps.from_int_like(&BigInt::from(q)) {
            return Err(Error::InvalidInput(format!("eps^2 != {q} in the coefficient ring")));
        }
        if eps.times(&eps_inv) != eps.one_like() {
            return Err(Error::InvalidInput("eps_inv is not an inverse of eps".into()));
        }
        Ok(Twist { q, eps, eps_inv })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn eps(&self) -> &S {
        &self.eps
    }

    /// `eps^k` for any integer `k`.
    pub fn eps_pow(&self, k: i64) -> S {
        if k >= 0 {
            self.eps.pow(k as u64)
        } else {
            self.eps_inv.pow(k.unsigned_abs())
        }
    }

    /// Image of a Laurent polynomial under `v -> eps`.
    pub fn eval_laurent(&self, p: &LaurentPoly) -> S {
        let mut acc = self.eps.zero_like();
        for (e, c) in p.terms() {
            acc = acc.plus(&self.eps_pow(e).times(&self.eps.from_int_like(c)));
        }
        acc
    }
}

/// `a + b sqrt(q)` with rational `a, b`. When `q` is a perfect square the
/// root is folded into `a` and `b` stays zero.
#[derive(Clone, PartialEq, Eq)]
pub struct SurdElt {
    q: u64,
    a: BigRational,
    b: BigRational,
}

impl SurdElt {
    pub fn new(q: u64, a: BigRational, b: BigRational) -> Self {
        assert!(q >= 1);
        let s = q.sqrt();
        if s * s == q {
            let a = a + b * BigRational::from_integer(BigInt::from(s));
            SurdElt {
                q,
                a,
                b: BigRational::zero(),
            }
        } else {
            SurdElt { q, a, b }
        }
    }

    pub fn from_int(q: u64, n: impl Into<BigInt>) -> Self {
        Self::new(q, BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn sqrt_q(q: u64) -> Self {
        Self::new(q, BigRational::zero(), BigRational::one())
    }

    /// The twist with `eps = +sqrt(q)`.
    pub fn twist(q: u64) -> Twist<SurdElt> {
        let eps = Self::sqrt_q(q);
        let eps_inv = eps
            .inverse()
            .expect("sqrt(q) is invertible for q >= 1");
        Twist::new(q, eps, eps_inv).expect("sqrt(q) squares to q")
    }

    pub fn parts(&self) -> (&BigRational, &BigRational) {
        (&self.a, &self.b)
    }

    /// Inverse via the conjugate; `None` for zero.
    pub fn inverse(&self) -> Option<SurdElt> {
        if self.is_zero() {
            return None;
        }
        let qr = BigRational::from_integer(BigInt::from(self.q));
        let norm = &self.a * &self.a - &self.b * &self.b * qr;
        Some(SurdElt::new(self.q, &self.a / &norm, -&self.b / &norm))
    }
}

impl fmt::Debug for SurdElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({})", self.a, self.b, self.q)
    }
}

impl Scalar for SurdElt {
    fn zero_like(&self) -> Self {
        SurdElt::from_int(self.q, 0)
    }
    fn one_like(&self) -> Self {
        SurdElt::from_int(self.q, 1)
    }
    fn from_int_like(&self, n: &BigInt) -> Self {
        SurdElt::from_int(self.q, n.clone())
    }
    fn plus(&self, rhs: &Self) -> Self {
        assert_eq!(self.q, rhs.q);
        SurdElt::new(self.q, &self.a + &rhs.a, &self.b + &rhs.b)
    }
    fn times(&self, rhs: &Self) -> Self {
        assert_eq!(self.q, rhs.q);
        let qr = BigRational::from_integer(BigInt::from(self.q));
        SurdElt::new(
            self.q,
            &self.a * &rhs.a + &self.b * &rhs.b * qr,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
    fn negate(&self) -> Self {
        SurdElt::new(self.q, -&self.a, -&self.b)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn to_json(&self) -> Value {
        json!({"rational": self.a.to_string(), "sqrt_coeff": self.b.to_string(), "q": self.q})
    }
}

#[derive(Debug, PartialEq, Eq)]
struct ResidueData {
    ell: u64,
    q: u64,
    // basis of the relation lattice: (r0, g) and (e1, 0), 0 <= r0 < e1
    r0: i64,
    g: i64,
    e1: i64,
}

/// The finite ring `Z[t]/(t^2 - q, Phi_2l(t))`. Its elements are `a + b t`
/// in a canonical Hermite-reduced form. `t` is a square root of `q` and a
/// root of `Phi_2l`, so this ring receives both `A_l` (via `v -> t`) and
/// integer point counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueRing(Arc<ResidueData>);

impl ResidueRing {
    pub fn new(ell: u64, q: u64) -> Result<Self> {
        if ell == 0 || q < 2 {
            return Err(Error::InvalidInput(format!("need l >= 1 and q >= 2, got l={ell}, q={q}")));
        }
        // Phi_2l(t) mod (t^2 - q) = alpha + beta t
        let phi = cyclotomic_poly(2 * ell);
        let (mut alpha, mut beta) = (BigInt::zero(), BigInt::zero());
        let mut qpow = BigInt::one();
        for (k, c) in phi.coeffs().iter().enumerate() {
            if k % 2 == 0 {
                alpha += c * &qpow;
            } else {
                beta += c * &qpow;
                qpow *= q;
            }
        }
        let det = (&alpha * &alpha - &beta * &beta * BigInt::from(q)).abs();
        let ext = alpha.extended_gcd(&beta);
        // ext.x * alpha + ext.y * beta = gcd; second coordinates of
        // x*(q beta, alpha) + y*(alpha, beta) give the gcd.
        let (x, y) = (ext.x.clone(), ext.y.clone());
        let mut g = ext.gcd.clone();
        let mut r0 = &x * &beta * BigInt::from(q) + &y * &alpha;
        if g.is_negative() {
            g = -g;
            r0 = -r0;
        }
        let e1 = &det / &g;
        let r0 = r0.mod_floor(&e1);
        let to = |v: &BigInt| {
            v.to_i64()
                .filter(|x| x.unsigned_abs() < (1 << 30))
                .ok_or_else(|| Error::CapExceeded {
                    what: "residue ring modulus".into(),
                    size: u128::MAX,
                    cap: 1 << 30,
                })
        };
        Ok(ResidueRing(Arc::new(ResidueData {
            ell,
            q,
            r0: to(&r0)?,
            g: to(&g)?,
            e1: to(&e1)?,
        })))
    }

    pub fn level(&self) -> u64 {
        self.0.ell
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    /// Number of elements.
    pub fn order(&self) -> u64 {
        (self.0.g * self.0.e1) as u64
    }

    pub fn elt(&self, a: i64, b: i64) -> Residue {
        let d = &self.0;
        let k = b.div_euclid(d.g);
        let b = b - k * d.g;
        let a = (a as i128 - k as i128 * d.r0 as i128).rem_euclid(d.e1 as i128) as i64;
        Residue {
            ring: self.clone(),
            a,
            b,
        }
    }

    pub fn from_int(&self, n: &BigInt) -> Residue {
        let a = n.mod_floor(&BigInt::from(self.0.e1)).to_i64().unwrap();
        self.elt(a, 0)
    }

    /// The image of `t`, a square root of `q`.
    pub fn eps(&self) -> Residue {
        self.elt(0, 1)
    }

    pub fn twist(&self) -> Twist<Residue> {
        let eps = self.eps();
        let eps_inv = eps.pow(2 * self.0.ell - 1);
        Twist::new(self.0.q, eps, eps_inv).expect("t is a unit square root of q")
    }

    /// `eps_l = (-1)^{l+1} eps^l`, a square root of `q^l`.
    pub fn twist_sharp(&self) -> Twist<Residue> {
        let ell = self.0.ell;
        let mut eps = self.eps().pow(ell);
        if ell % 2 == 0 {
            eps = eps.negate();
        }
        let eps_inv = eps.pow(2 * ell - 1);
        Twist::new(self.0.q.pow(ell as u32), eps, eps_inv)
            .expect("eps_l is a unit square root of q^l")
    }

    /// Image of a Laurent polynomial under `v -> t`.
    pub fn from_laurent(&self, p: &LaurentPoly) -> Residue {
        self.twist().eval_laurent(p)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Residue {
    ring: ResidueRing,
    a: i64,
    b: i64,
}

impl Residue {
    pub fn ring(&self) -> &ResidueRing {
        &self.ring
    }

    pub fn coords(&self) -> (i64, i64) {
        (self.a, self.b)
    }
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}t mod (t^2-{}, Phi_{})", self.a, self.b, self.ring.0.q, 2 * self.ring.0.ell)
    }
}

impl Scalar for Residue {
    fn zero_like(&self) -> Self {
        self.ring.elt(0, 0)
    }
    fn one_like(&self) -> Self {
        self.ring.elt(1, 0)
    }
    fn from_int_like(&self, n: &BigInt) -> Self {
        self.ring.from_int(n)
    }
    fn plus(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.ring, rhs.ring);
        self.ring.elt(self.a + rhs.a, self.b + rhs.b)
    }
    fn times(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.ring, rhs.ring);
        let d = &self.ring.0;
        let (a, b, c, e) = (self.a as i128, self.b as i128, rhs.a as i128, rhs.b as i128);
        let big = d.e1 as i128 * d.g as i128;
        let re = (a * c + (b * e).rem_euclid(big) * d.q as i128).rem_euclid(big);
        let im = a * e + b * c;
        // fold the t-coordinate first so the constant term stays small
        let k = im.div_euclid(d.g as i128);
        let im = im - k * d.g as i128;
        let re = (re - k * d.r0 as i128).rem_euclid(d.e1 as i128);
        Residue {
            ring: self.ring.clone(),
            a: re as i64,
            b: im as i64,
        }
    }
    fn negate(&self) -> Self {
        self.ring.elt(-self.a, -self.b)
    }
    fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }
    fn to_json(&self) -> Value {
        json!([self.a.to_string(), self.b.to_string()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::cyclo::{cyclo_norm_zeta2_minus_q, CycloRing};

    #[test]
    fn surd_arithmetic() {
        let r2 = SurdElt::sqrt_q(2);
        assert_eq!(r2.times(&r2), SurdElt::from_int(2, 2));
        let x = SurdElt::from_int(2, 3).plus(&r2);
        assert_eq!(x.times(&x.inverse().unwrap()), x.one_like());
        let r4 = SurdElt::sqrt_q(4);
        assert_eq!(r4, SurdElt::from_int(4, 2));
        assert!(SurdElt::twist(5).eps_pow(-2) == SurdElt::from_int(5, 1).times(&SurdElt::from_int(5, 5).inverse().unwrap()));
    }

    // The index of the relation lattice must be |Res(Phi_2l, t^2 - q)|.
    #[test]
    fn residue_ring_order_is_the_norm() {
        for ell in 1..=4u64 {
            for q in [2u64, 3, 4, 5, 7] {
                let ring = ResidueRing::new(ell, q).unwrap();
                let n = cyclo_norm_zeta2_minus_q(ell, q);
                assert_eq!(BigInt::from(ring.order()), n.abs(), "l={ell} q={q}");
            }
        }
    }

    #[test]
    fn residue_relations_hold() {
        for ell in 1..=4u64 {
            for q in [2u64, 3, 5, 9] {
                let ring = ResidueRing::new(ell, q).unwrap();
                let t = ring.eps();
                assert_eq!(t.times(&t), ring.from_int(&BigInt::from(q)));
                // Phi_2l(t) = 0
                let phi = LaurentPoly::from_intpoly(&cyclotomic_poly(2 * ell));
                assert!(ring.from_laurent(&phi).is_zero());
                // v^l = -1 transported from A_l
                assert_eq!(t.pow(ell), ring.from_int(&BigInt::from(-1)));
                let sharp = ring.twist_sharp();
                assert_eq!(
                    sharp.eps().times(sharp.eps()),
                    ring.from_int(&BigInt::from(q.pow(ell as u32)))
                );
            }
        }
    }

    #[test]
    fn a2_at_q2_is_z_mod_9_with_q_plus_one_zero() {
        let ring = ResidueRing::new(2, 2).unwrap();
        assert_eq!(ring.order(), 9);
        assert!(ring.from_int(&BigInt::from(3)).is_zero());
        // eps^{-1}(q+1) reduces to zero
        let tw = ring.twist();
        assert!(tw.eps_pow(-1).times(&ring.from_int(&BigInt::from(3))).is_zero());
    }

    #[test]
    fn laurent_map_factors_through_a_l() {
        let ring = ResidueRing::new(3, 4).unwrap();
        let cyc = CycloRing::new(3);
        let p = LaurentPoly::from_terms([(-5, BigInt::from(3)), (2, BigInt::from(-7)), (9, BigInt::from(1))]);
        let reduced = LaurentPoly::from_intpoly(cyc.reduce(&p).rep());
        assert_eq!(ring.from_laurent(&p), ring.from_laurent(&reduced));
    }
}
