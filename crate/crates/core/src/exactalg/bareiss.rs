//! Fraction-free (Bareiss) elimination over integral domains with exact
//! division.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::intpoly::IntPoly;

/// The operations Bareiss elimination needs from an integral domain.
pub trait ExactRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / rhs`, known to be exact.
    fn div_exact(&self, rhs: &Self) -> Self;
}

impl ExactRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % rhs)));
        self / rhs
    }
}

impl ExactRing for IntPoly {
    fn zero() -> Self {
        IntPoly::zero()
    }
    fn one() -> Self {
        IntPoly::one()
    }
    fn is_zero(&self) -> bool {
        IntPoly::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        IntPoly::div_exact(self, rhs).expect("Bareiss step must divide exactly")
    }
}

/// Reduce `m` in place to fraction-free echelon form and return the rank.
/// Column pivoting is not needed: we scan columns left to right and swap rows.
pub fn bareiss_rank<T: ExactRing>(m: &mut [Vec<T>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let pivot = m[rank][col].clone();
        for r in rank + 1..rows {
            let factor = m[r][col].clone();
            for c in col..cols {
                let val = pivot
                    .mul(&m[r][c])
                    .sub(&factor.mul(&m[rank][c]))
                    .div_exact(&prev);
                m[r][c] = val;
            }
            // entries left of `col` in lower rows are already zero
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Determinant of a square matrix by Bareiss elimination.
pub fn bareiss_det<T: ExactRing>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    let mut sign_flip = false;
    let mut prev = T::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return T::zero();
        };
        if piv != k {
            m.swap(piv, k);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let val = m[k][k]
                    .mul(&m[i][j])
                    .sub(&m[i][k].mul(&m[k][j]))
                    .div_exact(&prev);
                m[i][j] = val;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn determinant_matches_hand_values() {
        assert_eq!(bareiss_det(bi(&[&[2, 1], &[7, 4]])), BigInt::from(1));
        assert_eq!(
            bareiss_det(bi(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]])),
            BigInt::from(-2)
        );
        assert_eq!(bareiss_det(bi(&[&[1, 2], &[2, 4]])), BigInt::from(0));
    }

    #[test]
    fn rank_of_degenerate_matrices() {
        let mut m = bi(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]]);
        assert_eq!(bareiss_rank(&mut m), 2);
        let mut z = bi(&[&[0, 0], &[0, 0]]);
        assert_eq!(bareiss_rank(&mut z), 0);
    }
}
