//! Cyclotomic polynomials, the quotient rings `A_l = Z[v,v^-1]/(Phi_2l(v))`,
//! Gaussian binomials and their behaviour at roots of unity.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::bareiss::bareiss_det;
use super::intpoly::IntPoly;
use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// Möbius function by trial division.
pub fn mobius(mut n: u64) -> i32 {
    assert!(n >= 1);
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

/// `Phi_n(t) = prod_{d | n} (t^d - 1)^{mu(n/d)}`, assembled as a quotient
/// of two exact products.
pub fn cyclotomic_poly(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for d in divisors(n) {
        let factor = IntPoly::monomial(1, d as usize) - IntPoly::one();
        match mobius(n / d) {
            1 => num = &num * &factor,
            -1 => den = &den * &factor,
            _ => {}
        }
    }
    num.div_exact(&den)
        .expect("Möbius product of cyclotomic factors is exact")
}

/// `Phi_l(t^2) == Phi_2l(t)` for even `l`, `Phi_l(t^2) == Phi_l(t) Phi_2l(t)`
/// for odd `l`.
pub fn check_phi_square_identity(ell: u64) -> bool {
    let lhs = cyclotomic_poly(ell).compose_power(2);
    let rhs = if ell % 2 == 0 {
        cyclotomic_poly(2 * ell)
    } else {
        &cyclotomic_poly(ell) * &cyclotomic_poly(2 * ell)
    };
    lhs == rhs
}

/// Balanced Gaussian binomial `[m, k]_i` in `v_i = v^d`.
///
/// Zero when `k < 0` or `k > m`. Built from the recurrence
/// `[m, k] = v_i^{-k} [m-1, k] + v_i^{m-k} [m-1, k-1]`.
pub fn gauss_binom(m: i64, k: i64, d: u32) -> LaurentPoly {
    if m < 0 || k < 0 || k > m {
        return LaurentPoly::zero();
    }
    let d = d as i64;
    let mut row = vec![LaurentPoly::one()];
    for mm in 1..=m {
        let mut next = Vec::with_capacity(mm as usize + 1);
        for kk in 0..=mm {
            let mut entry = LaurentPoly::zero();
            if kk < mm {
                entry = &entry + &row[kk as usize].shift(-kk * d);
            }
            if kk > 0 {
                entry = &entry + &row[kk as usize - 1].shift((mm - kk) * d);
            }
            next.push(entry);
        }
        row = next;
    }
    row.swap_remove(k as usize)
}

/// Quantum integer `[n]_i = (v_i^n - v_i^-n)/(v_i - v_i^-1)`.
pub fn quantum_int(n: i64, d: u32) -> LaurentPoly {
    assert!(n >= 0);
    let d = d as i64;
    LaurentPoly::from_terms((0..n).map(|k| (d * (n - 1 - 2 * k), BigInt::one())))
}

/// The twist `rho: v -> (-1)^{l+1} v^l`.
pub fn rho_twist(p: &LaurentPoly, ell: u64) -> LaurentPoly {
    let ell = ell as i64;
    let negate_odd = ell % 2 == 0;
    LaurentPoly::from_terms(p.terms().map(|(e, c)| {
        let c = if negate_odd && e.rem_euclid(2) == 1 {
            -c
        } else {
            c.clone()
        };
        (e * ell, c)
    }))
}

/// The quotient ring `A_l`; holds `Phi_2l` so reductions do not recompute it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloRing {
    ell: u64,
    modulus: Arc<IntPoly>,
}

impl CycloRing {
    pub fn new(ell: u64) -> Self {
        assert!(ell >= 1, "level must be positive");
        CycloRing {
            ell,
            modulus: Arc::new(cyclotomic_poly(2 * ell)),
        }
    }

    pub fn level(&self) -> u64 {
        self.ell
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }

    /// Canonical image of a Laurent polynomial. Negative exponents are
    /// cleared with the unit `v^{2l}` before taking the remainder.
    pub fn reduce(&self, p: &LaurentPoly) -> CycloElt {
        let period = 2 * self.ell as i64;
        let shift = match p.min_exp() {
            Some(lo) if lo < 0 => period * ((-lo + period - 1) / period),
            _ => 0,
        };
        let (lo, poly) = p.shift(shift).to_shifted_intpoly();
        let poly = poly.shift(lo.max(0) as usize);
        let (_, rem) = poly.div_rem_monic(&self.modulus);
        CycloElt {
            ring: self.clone(),
            rep: rem,
        }
    }

    pub fn from_int(&self, n: impl Into<BigInt>) -> CycloElt {
        self.reduce(&LaurentPoly::constant(n))
    }

    pub fn zero(&self) -> CycloElt {
        CycloElt {
            ring: self.clone(),
            rep: IntPoly::zero(),
        }
    }

    pub fn one(&self) -> CycloElt {
        self.from_int(1)
    }

    /// Image of `v`.
    pub fn v(&self) -> CycloElt {
        self.reduce(&LaurentPoly::v())
    }
}

/// An element of `A_l`, stored as its remainder modulo `Phi_2l(v)`.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloElt {
    ring: CycloRing,
    rep: IntPoly,
}

impl CycloElt {
    pub fn rep(&self) -> &IntPoly {
        &self.rep
    }

    pub fn level(&self) -> u64 {
        self.ring.ell
    }

    pub fn ring(&self) -> &CycloRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    fn check_same(&self, other: &CycloElt) {
        assert_eq!(self.ring.ell, other.ring.ell, "elements of different A_l");
    }

    pub fn add(&self, other: &CycloElt) -> CycloElt {
        self.check_same(other);
        CycloElt {
            ring: self.ring.clone(),
            rep: &self.rep + &other.rep,
        }
    }

    pub fn sub(&self, other: &CycloElt) -> CycloElt {
        self.check_same(other);
        CycloElt {
            ring: self.ring.clone(),
            rep: &self.rep - &other.rep,
        }
    }

    pub fn mul(&self, other: &CycloElt) -> CycloElt {
        self.check_same(other);
        let (_, rem) = (&self.rep * &other.rep).div_rem_monic(&self.ring.modulus);
        CycloElt {
            ring: self.ring.clone(),
            rep: rem,
        }
    }

    pub fn neg(&self) -> CycloElt {
        CycloElt {
            ring: self.ring.clone(),
            rep: -&self.rep,
        }
    }

    pub fn pow(&self, mut e: u64) -> CycloElt {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for CycloElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] in A_{}", self.rep, self.ring.ell)
    }
}

pub fn reduce_mod_cyclo(p: &LaurentPoly, ell: u64) -> CycloElt {
    CycloRing::new(ell).reduce(p)
}

/// Which identity `check_binom_vanishing` applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BinomCase {
    /// `l | a`, `l ∤ t`: the image is zero.
    Vanishing,
    /// `l | a`, `l | t`: the image equals the twisted binomial at `a/l, t/l`.
    Twisted,
    /// `l ∤ a`: the general residue formula with `a = a1 l + s`,
    /// `t = t1 l + r`.
    Residue,
}

/// Check the root-of-unity behaviour of `[a, t]_i` (with `v_i = v^d`) in
/// `A_l`. Returns which identity was applied and whether it held.
pub fn check_binom_vanishing(a: i64, t: i64, d: u32, ell: u64) -> Result<(BinomCase, bool)> {
    if !(0 <= t && t <= a) {
        return Err(Error::InvalidInput(format!("need 0 <= t <= a, got t={t}, a={a}")));
    }
    if ell == 0 || d == 0 {
        return Err(Error::InvalidInput("l and d must be positive".into()));
    }
    if (d as u64).gcd(&ell) != 1 {
        return Err(Error::Hypothesis(format!(
            "gcd(l={ell}, d={d}) != 1 (divisible case)"
        )));
    }
    let ring = CycloRing::new(ell);
    let l = ell as i64;
    let lhs = ring.reduce(&gauss_binom(a, t, d));
    if a % l == 0 && t % l != 0 {
        return Ok((BinomCase::Vanishing, lhs.is_zero()));
    }
    if a % l == 0 {
        let rhs = ring.reduce(&rho_twist(&gauss_binom(a / l, t / l, d), ell));
        return Ok((BinomCase::Twisted, lhs == rhs));
    }
    let (a1, s) = (a / l, a % l);
    let (t1, r) = (t / l, t % l);
    let exponent = l * (t1 * s - a1 * r) + (a1 + 1) * t1 * l * l;
    let classical = binomial(a1 as u64, t1 as u64);
    let rhs = LaurentPoly::monomial(classical, exponent * d as i64)
        * gauss_binom(s, r, d);
    Ok((BinomCase::Residue, lhs == ring.reduce(&rhs)))
}

/// Ordinary binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Resultant of two integer polynomials via the Sylvester determinant.
/// For monic `f` this is `prod_{f(a)=0} g(a)`.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    let (Some(n), Some(m)) = (f.degree(), g.degree()) else {
        return BigInt::zero();
    };
    let size = n + m;
    if size == 0 {
        return BigInt::one();
    }
    let mut rows = Vec::with_capacity(size);
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (k, c) in f.coeffs().iter().enumerate() {
            row[i + n - k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (k, c) in g.coeffs().iter().enumerate() {
            row[i + m - k] = c.clone();
        }
        rows.push(row);
    }
    bareiss_det(rows)
}

/// Norm of `zeta^2 - q` from `Q(zeta)` to `Q`, `zeta` a primitive `2l`-th
/// root of unity: the resultant of `Phi_2l(t)` and `t^2 - q`.
pub fn cyclo_norm_zeta2_minus_q(ell: u64, q: u64) -> BigInt {
    let phi = cyclotomic_poly(2 * ell);
    let g = IntPoly::from_coeffs(vec![-BigInt::from(q), BigInt::zero(), BigInt::one()]);
    resultant(&phi, &g)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Oracle: Phi_n by repeated division of t^n - 1 by Phi_d for proper d | n.
    fn cyclotomic_by_division(n: u64) -> IntPoly {
        let mut p = IntPoly::monomial(1, n as usize) - IntPoly::one();
        for d in divisors(n) {
            if d < n {
                p = p.div_exact(&cyclotomic_by_division(d)).unwrap();
            }
        }
        p
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic_poly(1), IntPoly::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic_poly(4), IntPoly::from_i64s(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), IntPoly::from_i64s(&[1, -1, 1]));
        for n in 1..=40 {
            assert_eq!(cyclotomic_poly(n), cyclotomic_by_division(n), "n={n}");
            assert_eq!(cyclotomic_poly(n).degree(), Some(totient(n) as usize));
        }
    }

    #[test]
    fn phi_square_examples() {
        assert!(check_phi_square_identity(1));
        assert!(check_phi_square_identity(2));
        assert!(check_phi_square_identity(3));
        // Phi_2(t^2) = t^2 + 1 = Phi_4(t)
        assert_eq!(cyclotomic_poly(2).compose_power(2), cyclotomic_poly(4));
    }

    // Oracle: the factorial quotient [m]! / ([k]! [m-k]!).
    fn binom_by_factorials(m: i64, k: i64, d: u32) -> LaurentPoly {
        let fact = |n: i64| {
            (1..=n).fold(LaurentPoly::one(), |acc, j| &acc * &quantum_int(j, d))
        };
        fact(m).div_exact(&(&fact(k) * &fact(m - k))).unwrap()
    }

    #[test]
    fn gauss_binom_examples() {
        let v = LaurentPoly::v();
        let vinv = LaurentPoly::monomial(1, -1);
        assert_eq!(gauss_binom(2, 1, 1), &v + &vinv);
        assert_eq!(gauss_binom(5, 0, 3), LaurentPoly::one());
        let expected = LaurentPoly::from_terms(
            [(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)].map(|(e, c)| (e, BigInt::from(c))),
        );
        assert_eq!(gauss_binom(4, 2, 1), expected);
        assert!(gauss_binom(3, 4, 1).is_zero());
        assert!(gauss_binom(3, -1, 1).is_zero());
        for d in 1..=3 {
            for m in 0..=9 {
                for k in 0..=m {
                    assert_eq!(gauss_binom(m, k, d), binom_by_factorials(m, k, d));
                }
            }
        }
    }

    #[test]
    fn q_pascal_second_form_and_bar_symmetry() {
        for d in 1..=2u32 {
            let di = d as i64;
            for m in 1..=12 {
                for k in 0..=m {
                    let alt = &gauss_binom(m - 1, k, d).shift(k * di)
                        + &gauss_binom(m - 1, k - 1, d).shift((k - m) * di);
                    assert_eq!(gauss_binom(m, k, d), alt);
                    assert_eq!(gauss_binom(m, k, d).bar(), gauss_binom(m, k, d));
                }
            }
        }
    }

    #[test]
    fn reduction_examples() {
        for ell in 1..=7u64 {
            let ring = CycloRing::new(ell);
            let minus_one = ring.from_int(-1);
            assert_eq!(ring.reduce(&LaurentPoly::monomial(1, ell as i64)), minus_one);
            assert_eq!(ring.reduce(&LaurentPoly::monomial(1, 2 * ell as i64)), ring.one());
            assert_eq!(ring.reduce(&LaurentPoly::monomial(1, -(ell as i64))), minus_one);
            assert!(ring.reduce(&LaurentPoly::zero()).is_zero());
        }
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho_twist(&LaurentPoly::v(), 2), LaurentPoly::monomial(-1, 2));
        assert_eq!(rho_twist(&LaurentPoly::v(), 3), LaurentPoly::monomial(1, 3));
        assert_eq!(rho_twist(&LaurentPoly::one(), 5), LaurentPoly::one());
        assert_eq!(
            rho_twist(&LaurentPoly::monomial(1, -1), 2),
            LaurentPoly::monomial(-1, -2)
        );
    }

    #[test]
    fn binom_vanishing_examples() {
        assert_eq!(check_binom_vanishing(2, 1, 1, 2).unwrap(), (BinomCase::Vanishing, true));
        assert_eq!(check_binom_vanishing(3, 0, 1, 3).unwrap(), (BinomCase::Twisted, true));
        assert_eq!(check_binom_vanishing(4, 2, 1, 2).unwrap(), (BinomCase::Twisted, true));
        assert!(matches!(
            check_binom_vanishing(4, 2, 2, 2),
            Err(Error::Hypothesis(_))
        ));
        assert!(check_binom_vanishing(2, 3, 1, 2).is_err());
    }

    // Oracle for the norm: determinant of multiplication by (t^2 - q) on the
    // power basis of Z[t]/Phi_2l, by cofactor expansion.
    fn norm_by_multiplication_matrix(ell: u64, q: i64) -> BigInt {
        let phi = cyclotomic_poly(2 * ell);
        let n = phi.degree().unwrap();
        let elt = IntPoly::from_i64s(&[-q, 0, 1]);
        let cols: Vec<IntPoly> = (0..n)
            .map(|k| (&elt * &IntPoly::monomial(1, k)).div_rem_monic(&phi).1)
            .collect();
        let m: Vec<Vec<BigInt>> = (0..n)
            .map(|r| cols.iter().map(|c| c.coeff(r)).collect())
            .collect();
        fn cofactor(m: &[Vec<BigInt>]) -> BigInt {
            if m.len() == 1 {
                return m[0][0].clone();
            }
            let mut acc = BigInt::zero();
            for j in 0..m.len() {
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * cofactor(&minor);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        cofactor(&m)
    }

    #[test]
    fn norm_examples() {
        assert_eq!(cyclo_norm_zeta2_minus_q(2, 2), BigInt::from(9));
        assert_eq!(cyclo_norm_zeta2_minus_q(1, 3), BigInt::from(-2));
        // zeta^2 is a primitive cube root of unity: (w - 2)(w^2 - 2) = 7.
        assert_eq!(cyclo_norm_zeta2_minus_q(3, 2), BigInt::from(7));
        for ell in 1..=6 {
            for q in [2i64, 3, 4, 5, 7, 8, 9] {
                assert_eq!(
                    cyclo_norm_zeta2_minus_q(ell, q as u64),
                    norm_by_multiplication_matrix(ell, q),
                    "l={ell} q={q}"
                );
            }
        }
    }
}
