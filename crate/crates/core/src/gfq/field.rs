//! Table-driven finite fields `F_{p^e}`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::error::{cap_check, Error, Result};

/// Default bound on the field order.
pub const DEFAULT_FIELD_CAP: u64 = 64;
/// Hard bound imposed by the dense addition table.
pub const MAX_FIELD_ORDER: u64 = 1024;

/// An element, indexed by its coordinate vector `sum c_k p^k` in the power
/// basis of the defining modulus. `0` and `1` are the field's zero and one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FqElem(pub u16);

impl FqElem {
    pub const ZERO: FqElem = FqElem(0);
    pub const ONE: FqElem = FqElem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct FieldData {
    p: u64,
    e: u32,
    order: usize,
    /// monic, low degree first
    modulus: Vec<u64>,
    add: Vec<u16>,
    neg: Vec<u16>,
    exp: Vec<u16>,
    log: Vec<u32>,
}

/// A finite field; cheap to clone.
#[derive(Clone)]
pub struct FqField(Arc<FieldData>);

impl PartialEq for FqField {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.e == other.0.e
    }
}
impl Eq for FqField {}

impl fmt::Debug for FqField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}", self.0.p, self.0.e)
    }
}

#[derive(Serialize)]
pub struct FieldDescriptor {
    pub p: u64,
    pub e: u32,
    pub modulus: Vec<u64>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `(p, e)` with `q = p^e`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut e = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

fn digits(mut n: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = n % p;
        n /= p;
    }
    out
}

fn undigits(c: &[u64], p: u64) -> u64 {
    c.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Remainder of `a` modulo the monic `m`, coefficients mod `p`.
fn poly_rem(mut a: Vec<u64>, m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = a.pop().unwrap();
        if lead != 0 {
            let off = a.len() - dm;
            for k in 0..dm {
                a[off + k] = (a[off + k] + (p - lead) * m[k]) % p;
            }
        }
    }
    a
}

fn is_irreducible(m: &[u64], p: u64) -> bool {
    let e = m.len() - 1;
    for deg in 1..=e / 2 {
        for n in 0..p.pow(deg as u32) {
            let mut f = digits(n, p, deg);
            f.push(1);
            if poly_rem(m.to_vec(), &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The least monic irreducible polynomial of degree `e` over `F_p`, ordered
/// by the integer encoding of its lower coefficients.
pub fn least_irreducible(p: u64, e: u32) -> Vec<u64> {
    (0..p.pow(e))
        .map(|n| {
            let mut m = digits(n, p, e as usize);
            m.push(1);
            m
        })
        .find(|m| is_irreducible(m, p))
        .expect("irreducible polynomials exist in every degree")
}

fn registry() -> &'static Mutex<HashMap<(u64, u32), FqField>> {
    static FIELDS: OnceLock<Mutex<HashMap<(u64, u32), FqField>>> = OnceLock::new();
    FIELDS.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Construct (or fetch) `F_{p^e}` with the default cap.
pub fn make_field(p: u64, e: u32) -> Result<FqField> {
    make_field_capped(p, e, DEFAULT_FIELD_CAP)
}

pub fn make_field_capped(p: u64, e: u32, cap: u64) -> Result<FqField> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if e == 0 {
        return Err(Error::InvalidInput("extension degree must be positive".into()));
    }
    let order = p
        .checked_pow(e)
        .ok_or_else(|| Error::CapExceeded { what: "field order".into(), size: u128::MAX, cap: cap as u128 })?;
    cap_check("field order", order as u128, cap.min(MAX_FIELD_ORDER) as u128)?;
    let mut reg = registry().lock().unwrap();
    if let Some(f) = reg.get(&(p, e)) {
        return Ok(f.clone());
    }
    let field = FqField(Arc::new(build(p, e)));
    reg.insert((p, e), field.clone());
    Ok(field)
}

/// The field of order `q`.
pub fn field_of_order(q: u64, cap: u64) -> Result<FqField> {
    let (p, e) = prime_power(q).ok_or_else(|| Error::InvalidInput(format!("{q} is not a prime power")))?;
    make_field_capped(p, e, cap)
}

fn build(p: u64, e: u32) -> FieldData {
    let order = p.pow(e) as usize;
    let modulus = least_irreducible(p, e);
    let len = e as usize;
    let coords: Vec<Vec<u64>> = (0..order as u64).map(|n| digits(n, p, len)).collect();
    let mut add = vec![0u16; order * order];
    for a in 0..order {
        for b in 0..order {
            let s: Vec<u64> = coords[a].iter().zip(&coords[b]).map(|(x, y)| (x + y) % p).collect();
            add[a * order + b] = undigits(&s, p) as u16;
        }
    }
    let neg: Vec<u16> = coords
        .iter()
        .map(|c| undigits(&c.iter().map(|x| (p - x) % p).collect::<Vec<_>>(), p) as u16)
        .collect();
    let mul_poly = |a: usize, b: usize| -> usize {
        let mut prod = vec![0u64; 2 * len - 1];
        for (i, x) in coords[a].iter().enumerate() {
            for (j, y) in coords[b].iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        undigits(&poly_rem(prod, &modulus, p), p) as usize
    };
    // least element of multiplicative order q - 1
    let n = order - 1;
    let mut exp = Vec::new();
    for g in 1..order {
        let mut powers = Vec::with_capacity(n);
        let mut x = 1usize;
        loop {
            powers.push(x as u16);
            x = mul_poly(x, g);
            if x == 1 {
                break;
            }
        }
        if powers.len() == n {
            exp = powers;
            break;
        }
    }
    let mut log = vec![u32::MAX; order];
    for (k, &x) in exp.iter().enumerate() {
        log[x as usize] = k as u32;
    }
    let doubled: Vec<u16> = exp.iter().chain(exp.iter()).copied().collect();
    FieldData {
        p,
        e,
        order,
        modulus,
        add,
        neg,
        exp: doubled,
        log,
    }
}

impl FqField {
    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn e(&self) -> u32 {
        self.0.e
    }

    pub fn order(&self) -> u64 {
        self.0.order as u64
    }

    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.0.p,
            e: self.0.e,
            modulus: self.0.modulus.clone(),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElem> + Clone {
        (0..self.0.order as u16).map(FqElem)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = FqElem> + Clone {
        (1..self.0.order as u16).map(FqElem)
    }

    /// The least generator of the multiplicative group.
    pub fn primitive(&self) -> FqElem {
        FqElem(self.0.exp[1 % (self.0.order - 1).max(1)])
    }

    pub fn coords(&self, x: FqElem) -> Vec<u64> {
        digits(x.0 as u64, self.0.p, self.0.e as usize)
    }

    pub fn from_coords(&self, c: &[u64]) -> FqElem {
        FqElem(undigits(&c.iter().map(|x| x % self.0.p).collect::<Vec<_>>(), self.0.p) as u16)
    }

    pub fn from_int(&self, n: i64) -> FqElem {
        FqElem(n.rem_euclid(self.0.p as i64) as u16)
    }

    #[inline]
    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        FqElem(self.0.add[a.0 as usize * self.0.order + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: FqElem) -> FqElem {
        FqElem(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        if a.0 == 0 || b.0 == 0 {
            return FqElem::ZERO;
        }
        let d = &self.0;
        FqElem(d.exp[(d.log[a.0 as usize] + d.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: FqElem) -> Option<FqElem> {
        if a.is_zero() {
            return None;
        }
        let d = &self.0;
        let n = (d.order - 1) as u32;
        Some(FqElem(d.exp[((n - d.log[a.0 as usize]) % n) as usize]))
    }

    pub fn div(&self, a: FqElem, b: FqElem) -> Option<FqElem> {
        Some(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FqElem, k: u64) -> FqElem {
        if k == 0 {
            return FqElem::ONE;
        }
        if a.is_zero() {
            return FqElem::ZERO;
        }
        let d = &self.0;
        let n = (d.order - 1) as u64;
        FqElem(d.exp[((d.log[a.0 as usize] as u64 * (k % n)) % n) as usize])
    }

    /// Discrete logarithm to the base `primitive()`.
    pub fn log(&self, a: FqElem) -> Option<u32> {
        (!a.is_zero()).then(|| self.0.log[a.0 as usize])
    }

    /// `x^{q0}`; `q0` must be a power of the characteristic.
    pub fn frobenius_pow(&self, x: FqElem, q0: u64) -> Result<FqElem> {
        match prime_power(q0) {
            Some((p, _)) if p == self.0.p => Ok(self.pow(x, q0)),
            _ => Err(Error::InvalidInput(format!(
                "{q0} is not a power of the characteristic {}",
                self.0.p
            ))),
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: FqElem) -> Option<u64> {
        let l = self.log(a)? as u64;
        let n = self.order() - 1;
        Some(n / gcd(n, l))
    }

    /// The subfield of order `p^c`, if `c | e`.
    pub fn subfield_elements(&self, c: u32) -> Option<Vec<FqElem>> {
        if c == 0 || self.0.e % c != 0 {
            return None;
        }
        let q0 = self.0.p.pow(c);
        Some(self.elements().filter(|&x| self.pow(x, q0) == x).collect())
    }

    pub fn sum<I: IntoIterator<Item = FqElem>>(&self, it: I) -> FqElem {
        it.into_iter().fold(FqElem::ZERO, |acc, x| self.add(acc, x))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A fixed embedding `F_{p^a} -> F_{p^b}`, sending the generator of the
/// small power basis to the least root of its modulus in the big field.
#[derive(Clone, Debug)]
pub struct Embedding {
    src: FqField,
    dst: FqField,
    table: Vec<FqElem>,
}

impl Embedding {
    pub fn new(src: &FqField, dst: &FqField) -> Result<Self> {
        if src.p() != dst.p() {
            return Err(Error::Mismatch(format!("characteristics {} and {}", src.p(), dst.p())));
        }
        if dst.e() % src.e() != 0 {
            return Err(Error::Mismatch(format!(
                "degree {} does not divide {}",
                src.e(),
                dst.e()
            )));
        }
        let m = src.modulus();
        let eval = |y: FqElem| {
            m.iter().rev().fold(FqElem::ZERO, |acc, &c| {
                dst.add(dst.mul(acc, y), dst.from_int(c as i64))
            })
        };
        let root = dst
            .elements()
            .find(|&y| eval(y).is_zero())
            .expect("an extension of the right degree contains a root");
        let table = src
            .elements()
            .map(|x| {
                src.coords(x).iter().rev().fold(FqElem::ZERO, |acc, &c| {
                    dst.add(dst.mul(acc, root), dst.from_int(c as i64))
                })
            })
            .collect();
        Ok(Embedding {
            src: src.clone(),
            dst: dst.clone(),
            table,
        })
    }

    #[inline]
    pub fn apply(&self, x: FqElem) -> FqElem {
        self.table[x.0 as usize]
    }

    pub fn src(&self) -> &FqField {
        &self.src
    }

    pub fn dst(&self) -> &FqField {
        &self.dst
    }

    /// Preimage of an element of the image; `None` outside it.
    pub fn preimage(&self, y: FqElem) -> Option<FqElem> {
        self.table.iter().position(|&x| x == y).map(|k| FqElem(k as u16))
    }
}

/// `embed(x, target)` for a one-off embedding.
pub fn embed(x: FqElem, src: &FqField, target: &FqField) -> Result<FqElem> {
    Ok(Embedding::new(src, target)?.apply(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_and_small_extensions() {
        let f2 = make_field(2, 1).unwrap();
        assert_eq!(f2.order(), 2);
        let f4 = make_field(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let f9 = make_field(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        assert!(matches!(make_field(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(make_field(2, 7), Err(Error::CapExceeded { .. })));
        assert!(make_field_capped(2, 7, 128).is_ok());
    }

    // Oracle: the polynomial arithmetic from scratch, compared entrywise.
    #[test]
    fn field_axioms_and_cyclic_group() {
        for (p, e) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (2, 4), (7, 2)] {
            let f = make_field(p, e).unwrap();
            let q = f.order();
            let mut orders = std::collections::BTreeSet::new();
            for a in f.elements() {
                assert_eq!(f.pow(a, q), a);
                assert_eq!(f.add(a, f.neg(a)), FqElem::ZERO);
                if let Some(ai) = f.inv(a) {
                    assert_eq!(f.mul(a, ai), FqElem::ONE);
                    orders.insert(f.mult_order(a).unwrap());
                }
                for b in f.elements() {
                    let pa = f.coords(a);
                    let pb = f.coords(b);
                    let mut prod = vec![0u64; 2 * e as usize];
                    for (i, x) in pa.iter().enumerate() {
                        for (j, y) in pb.iter().enumerate() {
                            prod[i + j] = (prod[i + j] + x * y) % p;
                        }
                    }
                    let r = poly_rem(prod, f.modulus(), p);
                    assert_eq!(f.mul(a, b), f.from_coords(&r));
                }
            }
            assert_eq!(orders.iter().max(), Some(&(q - 1)));
            assert_eq!(f.mult_order(f.primitive()), Some(q - 1));
        }
    }

    #[test]
    fn embeddings() {
        let f2 = make_field(2, 1).unwrap();
        let f4 = make_field(2, 2).unwrap();
        let f16 = make_field(2, 4).unwrap();
        let e = Embedding::new(&f4, &f16).unwrap();
        assert_eq!(e.apply(FqElem::ZERO), FqElem::ZERO);
        assert_eq!(e.apply(FqElem::ONE), FqElem::ONE);
        assert_eq!(f16.mult_order(e.apply(FqElem(2))), Some(3));
        for a in f4.elements() {
            for b in f4.elements() {
                assert_eq!(e.apply(f4.mul(a, b)), f16.mul(e.apply(a), e.apply(b)));
                assert_eq!(e.apply(f4.add(a, b)), f16.add(e.apply(a), e.apply(b)));
            }
        }
        let e24 = Embedding::new(&f2, &f4).unwrap();
        for x in f2.elements() {
            assert_eq!(e.apply(e24.apply(x)), embed(x, &f2, &f16).unwrap());
        }
        assert!(Embedding::new(&f4, &make_field(2, 3).unwrap()).is_err());
    }

    #[test]
    fn frobenius_fixes_subfields() {
        let f4 = make_field(2, 2).unwrap();
        for x in f4.elements() {
            assert_eq!(f4.frobenius_pow(x, 4).unwrap(), x);
        }
        for x in [FqElem(2), FqElem(3)] {
            let c = f4.frobenius_pow(x, 2).unwrap();
            assert_ne!(c, x);
            assert_eq!(f4.frobenius_pow(c, 2).unwrap(), x);
        }
        let f16 = make_field(2, 4).unwrap();
        let fixed2 = f16.elements().filter(|&x| f16.frobenius_pow(x, 2).unwrap() == x).count();
        assert_eq!(fixed2, 2);
        let fixed4 = f16.elements().filter(|&x| f16.frobenius_pow(x, 4).unwrap() == x).count();
        assert_eq!(fixed4, 4);
        assert!(f16.frobenius_pow(FqElem(1), 3).is_err());
    }
}
