//! Restriction to torus-fixed points: the map `Q` from functions over `F_q`
//! to functions over `F_{q^l}`, and the checks that it is a ring map after
//! reduction.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::algebra::{flag_count, m_form, n_form, HallFn};
use super::model::{ambient_field, RepModel, RepPoint};
use super::quiver::QuiverWithAut;
use super::word::{contents_up_to, words_with_content, Word};
use crate::error::{Error, Result};
use crate::exactalg::{cyclo_norm_zeta2_minus_q, cyclotomic_poly, Residue, ResidueRing, Scalar};
use crate::gfq::{FqElem, FqField, FqMatrix};

/// Both sides of the restriction of scalars `R: Rep(F_{q^l}) -> Rep(F_q)`.
pub struct FrobeniusSetup {
    ell: u32,
    q: u64,
    small: Arc<RepModel>,
    big: Arc<RepModel>,
    ring: ResidueRing,
    /// generator of `F_{q^{l d_i}}` over `F_{q^{d_i}}`, per vertex orbit
    gamma: Vec<FqElem>,
    /// coordinates in powers of `gamma_i` over `F_{q^deg}`, keyed by `(i, deg)`
    coords: HashMap<(usize, u32), FqMatrix>,
    /// multiplication by a generator of `F_{q^l}^x`, per vertex orbit
    torus: Vec<FqMatrix>,
    restricted: Mutex<HashMap<Vec<usize>, Arc<Vec<usize>>>>,
    t_memo: Mutex<HashMap<(Vec<u16>, Vec<(usize, u32)>), u128>>,
}

impl std::fmt::Debug for FrobeniusSetup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FrobeniusSetup(l={}, q={}, field={:?})", self.ell, self.q, self.small.field())
    }
}

impl FrobeniusSetup {
    pub fn new(quiver: &QuiverWithAut, ell: u32, q: u64) -> Result<Arc<Self>> {
        if ell == 0 {
            return Err(Error::InvalidInput("l must be positive".into()));
        }
        let orbit_sizes: Vec<u32> = quiver.vertex_orbits().iter().map(|o| o.len() as u32).collect();
        if let Some(d) = orbit_sizes.iter().find(|&&d| d.gcd(&ell) != 1) {
            return Err(Error::Hypothesis(format!("gcd(l, d_i) = gcd({ell}, {d}) is not 1")));
        }
        let field = ambient_field(quiver, q, ell)?;
        let small = RepModel::with_field(quiver, q, &field)?;
        let big = RepModel::with_field(quiver, q.pow(ell), &field)?;
        if let Some(e) = small.edge_orbits().iter().find(|e| e.tau != 0) {
            return Err(Error::Hypothesis(format!(
                "edge orbit starting at edge {} does not end at an orbit representative",
                e.edges[0]
            )));
        }
        let ring = ResidueRing::new(ell as u64, q)?;
        let qf = |k: u32| q.pow(k);
        let n = field.order() - 1;
        let gamma: Vec<FqElem> = small
            .orbits()
            .iter()
            .map(|o| field.pow(field.primitive(), n / (qf(ell * o.d) - 1)))
            .collect();
        let mut coords = HashMap::new();
        for (i, o) in small.orbits().iter().enumerate() {
            let mut degs = vec![o.d];
            for e in small.edge_orbits().iter().filter(|e| e.t == i) {
                degs.push(e.o);
            }
            for deg in degs {
                coords
                    .entry((i, deg))
                    .or_insert_with(|| vandermonde_inverse(&field, gamma[i], ell as usize, qf(deg)));
            }
        }
        let t = field.pow(field.primitive(), n / (qf(ell) - 1));
        let mut setup = FrobeniusSetup {
            ell,
            q,
            small,
            big,
            ring,
            gamma,
            coords,
            torus: Vec::new(),
            restricted: Mutex::new(HashMap::new()),
            t_memo: Mutex::new(HashMap::new()),
        };
        setup.torus = (0..setup.small.rank())
            .map(|i| {
                let d = setup.small.orbits()[i].d;
                let l = ell as usize;
                let mut m = FqMatrix::zeros(&field, l, l);
                let mut g = FqElem::ONE;
                for r in 0..l {
                    let c = setup.coordinates(i, d, field.mul(t, g)).expect("t * gamma^r lies in F_{q^{l d}}");
                    for (k, x) in c.into_iter().enumerate() {
                        m.set(r, k, x);
                    }
                    g = field.mul(g, setup.gamma[i]);
                }
                m
            })
            .collect();
        Ok(Arc::new(setup))
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn small(&self) -> &Arc<RepModel> {
        &self.small
    }

    pub fn big(&self) -> &Arc<RepModel> {
        &self.big
    }

    pub fn ring(&self) -> &ResidueRing {
        &self.ring
    }

    /// `s = Phi_l(q)`.
    pub fn s(&self) -> BigInt {
        cyclotomic_poly(self.ell as u64).eval(&BigInt::from(self.q))
    }

    fn field(&self) -> &FqField {
        self.small.field()
    }

    /// `mu` with `lambda = sum_k mu_k gamma_i^k`, `mu_k` in `F_{q^deg}`;
    /// `None` when no such `mu` exists.
    fn coordinates(&self, i: usize, deg: u32, lambda: FqElem) -> Option<Vec<FqElem>> {
        let f = self.field();
        let inv = &self.coords[&(i, deg)];
        let l = self.ell as usize;
        let qd = self.q.pow(deg);
        let rhs: Vec<FqElem> = (0..l).map(|j| f.pow(lambda, qd.pow(j as u32))).collect();
        let mu: Vec<FqElem> = (0..l)
            .map(|k| f.sum((0..l).map(|j| f.mul(inv.get(k, j), rhs[j]))))
            .collect();
        mu.iter().all(|&m| f.pow(m, qd) == m).then_some(mu)
    }

    /// `l * nu` as a dimension vector.
    fn scaled(&self, nu: &[usize]) -> Vec<usize> {
        nu.iter().map(|&n| n * self.ell as usize).collect()
    }

    /// `nu / l` if every entry is divisible.
    pub fn divide(&self, nu: &[usize]) -> Option<Vec<usize>> {
        let l = self.ell as usize;
        nu.iter().all(|n| n % l == 0).then(|| nu.iter().map(|n| n / l).collect())
    }

    /// The restricted point `iota(y)` of a point over `F_{q^l}`.
    pub fn restrict_scalars(&self, y: &RepPoint) -> Result<RepPoint> {
        let f = self.field();
        let l = self.ell as usize;
        let mut maps = Vec::new();
        for (k, e) in self.small.edge_orbits().iter().enumerate() {
            let m = &y.maps[k];
            let mut out = FqMatrix::zeros(f, l * m.rows(), l * m.cols());
            for a in 0..m.rows() {
                let mut g = FqElem::ONE;
                for kappa in 0..l {
                    for b in 0..m.cols() {
                        let c = self
                            .coordinates(e.t, e.o, f.mul(g, m.get(a, b)))
                            .ok_or_else(|| Error::Mismatch("entry outside F_{q^{l o}}".into()))?;
                        for (kp, x) in c.into_iter().enumerate() {
                            out.set(a * l + kappa, b * l + kp, x);
                        }
                    }
                    g = f.mul(g, self.gamma[e.s]);
                }
            }
            maps.push(out);
        }
        Ok(RepPoint { nu: self.scaled(&y.nu), maps })
    }

    /// The torus generator on `W_i`, block diagonal of size `l * n`.
    pub fn torus_matrix(&self, i: usize, n: usize) -> FqMatrix {
        let l = self.ell as usize;
        let mut m = FqMatrix::zeros(self.field(), l * n, l * n);
        for b in 0..n {
            for r in 0..l {
                for c in 0..l {
                    m.set(b * l + r, b * l + c, self.torus[i].get(r, c));
                }
            }
        }
        m
    }

    /// Whether a point of `E_W` commutes with the torus.
    pub fn is_torus_fixed(&self, x: &RepPoint) -> Result<bool> {
        let l = self.ell as usize;
        for (k, e) in self.small.edge_orbits().iter().enumerate() {
            let ms = self.torus_matrix(e.s, x.nu[e.s] / l);
            let mt = self.torus_matrix(e.t, x.nu[e.t] / l);
            if ms.mul(&x.maps[k])? != x.maps[k].mul(&mt)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Small-side class of `iota(y)` for every big-side class `y` at `mu`.
    pub fn restricted_classes(&self, mu: &[usize]) -> Result<Arc<Vec<usize>>> {
        if let Some(v) = self.restricted.lock().unwrap().get(mu) {
            return Ok(v.clone());
        }
        let table = self.big.classes(mu)?;
        let v = table
            .reps
            .iter()
            .map(|y| self.small.class_of(&self.restrict_scalars(y)?))
            .collect::<Result<Vec<_>>>()?;
        let v = Arc::new(v);
        self.restricted.lock().unwrap().insert(mu.to_vec(), v.clone());
        Ok(v)
    }

    fn residue(&self, n: u128) -> Residue {
        self.ring.from_int(&BigInt::from(n))
    }

    /// `Q(theta_w)` at the big-side class `y` of `nu(w) / l`.
    fn q_theta(&self, w: &Word, mu: &[usize], y: usize) -> Result<Residue> {
        let nu = self.scaled(mu);
        let z = self.restricted_classes(mu)?[y];
        let count = flag_count(&self.small, &nu, z, w.blocks())?;
        Ok(self.ring.twist().eps_pow(-n_form(&self.small, w)).times(&self.residue(count)))
    }

    /// Number of flags of type `w` stable under both `x` and the torus,
    /// by direct enumeration.
    pub fn torus_fixed_flags(&self, x: &RepPoint, w: &[(usize, u32)]) -> Result<u128> {
        let torus: Vec<FqMatrix> = (0..self.small.rank())
            .map(|i| self.torus_matrix(i, x.nu[i] / self.ell as usize))
            .collect();
        self.t_count(x, &torus, w)
    }

    fn t_count(&self, x: &RepPoint, torus: &[FqMatrix], w: &[(usize, u32)]) -> Result<u128> {
        if w.is_empty() {
            return Ok(u128::from(x.nu.iter().all(|&n| n == 0)));
        }
        let mut key: Vec<u16> = x.nu.iter().map(|&n| n as u16).collect();
        for m in x.maps.iter().chain(torus) {
            key.extend(m.data().iter().map(|e| e.0));
        }
        let memo_key = (key, w.to_vec());
        if let Some(&v) = self.t_memo.lock().unwrap().get(&memo_key) {
            return Ok(v);
        }
        let (i, c) = w[0];
        let mut total = 0u128;
        if x.nu[i] >= c as usize {
            let mut sub_nu = x.nu.clone();
            sub_nu[i] -= c as usize;
            for bases in self.small.stable_subspaces(x, &sub_nu) {
                let b = &bases[i];
                let image = b.mul(&torus[i])?;
                if crate::flags::Subspace::span(&b.vstack(&image)).dim() != b.rows() {
                    continue;
                }
                let (sub, _) = self.small.restrict(x, &bases).expect("stable by construction");
                let piv = crate::flags::Subspace::span(b).pivots();
                let mut sub_torus = torus.to_vec();
                let mut r = FqMatrix::zeros(self.field(), b.rows(), b.rows());
                for row in 0..b.rows() {
                    for (k, &p) in piv.iter().enumerate() {
                        r.set(row, k, image.get(row, p));
                    }
                }
                sub_torus[i] = r;
                total += self.t_count(&sub, &sub_torus, &w[1..])?;
            }
        }
        self.t_memo.lock().unwrap().insert(memo_key, total);
        Ok(total)
    }
}

/// Inverse of `A[j][k] = sigma^j(gamma)^k`, `sigma = x -> x^{qd}`.
fn vandermonde_inverse(f: &FqField, gamma: FqElem, l: usize, qd: u64) -> FqMatrix {
    let mut a = FqMatrix::zeros(f, l, l);
    for j in 0..l {
        let g = f.pow(gamma, qd.pow(j as u32));
        for k in 0..l {
            a.set(j, k, f.pow(g, k as u64));
        }
    }
    a.inverse().expect("conjugates of a generator are distinct")
}

/// `Q(f)`: `None` is the zero function (when `nu` is not in `l NI`).
pub fn frobenius_q<S: Scalar>(setup: &FrobeniusSetup, f: &HallFn<S>) -> Result<Option<HallFn<S>>> {
    if !Arc::ptr_eq(f.model(), &setup.small) {
        return Err(Error::Mismatch("function is not on the small side of this setup".into()));
    }
    let Some(mu) = setup.divide(f.nu()) else {
        return Ok(None);
    };
    let map = setup.restricted_classes(&mu)?;
    let values = map.iter().map(|&z| f.values()[z].clone()).collect();
    Ok(Some(HallFn::from_values(&setup.big, &mu, values)?))
}

#[derive(Clone, Debug, Serialize)]
pub struct ResidueItem {
    pub word: String,
    pub trivial: bool,
    pub classes: usize,
    pub passed: bool,
    pub witness: Option<Value>,
}

fn word_label(model: &RepModel, w: &Word) -> String {
    w.display(|i| model.orbit_name(i).to_string())
}

/// `Q(theta_(i,c)) = theta#_(i,b)` if `c = l b`, else `0`, pointwise in the
/// residue ring, together with `|S_x| = |S_x^T| mod s` and
/// `|S_x^T| = 1_(i,b)(x)` over `F_{q^l}`.
pub fn check_residue(setup: &FrobeniusSetup, w: &Word) -> Result<ResidueItem> {
    let small = &setup.small;
    let nu = w.content(small.rank());
    let label = word_label(small, w);
    let Some(mu) = setup.divide(&nu) else {
        return Ok(ResidueItem { word: label, trivial: true, classes: 0, passed: true, witness: None });
    };
    let table = setup.big.classes(&mu)?;
    let s = setup.s();
    let b = w.divide(setup.ell);
    let sharp = setup.ring.twist_sharp();
    let mut witness = None;
    for (y, rep) in table.reps.iter().enumerate() {
        let lhs = setup.q_theta(w, &mu, y)?;
        let big_count = match &b {
            Some(b) => flag_count(&setup.big, &mu, y, b.blocks())?,
            None => 0,
        };
        let rhs = match &b {
            Some(b) => sharp.eps_pow(-n_form(&setup.big, b)).times(&setup.residue(big_count)),
            None => lhs.zero_like(),
        };
        let z = setup.restricted_classes(&mu)?[y];
        let count = flag_count(small, &nu, z, w.blocks())?;
        let x = setup.restrict_scalars(rep)?;
        let fixed = setup.torus_fixed_flags(&x, w.blocks())?;
        let congruent = (BigInt::from(count) - BigInt::from(fixed)).is_multiple_of(&s);
        if lhs != rhs || !congruent || fixed != big_count {
            witness = Some(json!({
                "point": setup.big.point_to_json(rep),
                "lhs": lhs.to_json(),
                "rhs": rhs.to_json(),
                "stable_flags": count.to_string(),
                "torus_fixed_flags": fixed.to_string(),
                "flags_over_extension": big_count.to_string(),
            }));
            break;
        }
    }
    Ok(ResidueItem {
        word: label,
        trivial: false,
        classes: table.len(),
        passed: witness.is_none(),
        witness,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct HomItem {
    pub left: String,
    pub right: String,
    pub trivial: bool,
    pub classes: usize,
    pub passed: bool,
    /// `Q(theta_w theta_w')` also equals `Q(theta_ww')`.
    pub expansion_ok: bool,
    pub witness: Option<Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomReport {
    pub ell: u32,
    pub q: u64,
    pub pairs: usize,
    pub nontrivial: usize,
    pub failures: usize,
    pub items: Vec<HomItem>,
}

impl HomReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// `Q(theta_w o theta_w') = Q(theta_w) o Q(theta_w')` for one pair.
pub fn check_q_pair(setup: &FrobeniusSetup, w1: &Word, w2: &Word) -> Result<HomItem> {
    let small = &setup.small;
    let big = &setup.big;
    let r = small.rank();
    let (nu1, nu2) = (w1.content(r), w2.content(r));
    let nu: Vec<usize> = nu1.iter().zip(&nu2).map(|(a, b)| a + b).collect();
    let mut item = HomItem {
        left: word_label(small, w1),
        right: word_label(small, w2),
        trivial: true,
        classes: 0,
        passed: true,
        expansion_ok: true,
        witness: None,
    };
    let Some(mu) = setup.divide(&nu) else {
        return Ok(item);
    };
    item.trivial = false;
    let tw = setup.ring.twist();
    let sharp = setup.ring.twist_sharp();
    let table = big.classes(&mu)?;
    item.classes = table.len();
    let restricted = setup.restricted_classes(&mu)?;
    let parts = setup.divide(&nu1).zip(setup.divide(&nu2));
    let w = w1.concat(w2);
    for y in 0..table.len() {
        let z = restricted[y];
        let mut conv = setup.ring.elt(0, 0);
        for &(qc, sc, cnt) in small.split_hist(&nu, z, &nu2)?.iter() {
            let a = flag_count(small, &nu1, qc, w1.blocks())?;
            let b = flag_count(small, &nu2, sc, w2.blocks())?;
            conv = conv.plus(&setup.residue(cnt as u128).times(&setup.residue(a)).times(&setup.residue(b)));
        }
        let e = m_form(small, &nu1, &nu2) + n_form(small, w1) + n_form(small, w2);
        let lhs = tw.eps_pow(-e).times(&conv);
        let rhs = match &parts {
            None => lhs.zero_like(),
            Some((mu1, mu2)) => {
                let mut acc = lhs.zero_like();
                for &(qc, sc, cnt) in big.split_hist(&mu, y, mu2)?.iter() {
                    let a = setup.q_theta(w1, mu1, qc)?;
                    let b = setup.q_theta(w2, mu2, sc)?;
                    acc = acc.plus(&setup.residue(cnt as u128).times(&a).times(&b));
                }
                sharp.eps_pow(-m_form(big, mu1, mu2)).times(&acc)
            }
        };
        let expansion = setup.q_theta(&w, &mu, y)?;
        if expansion != lhs {
            item.expansion_ok = false;
        }
        if lhs != rhs || expansion != lhs {
            item.passed = false;
            item.witness = Some(json!({
                "point": big.point_to_json(&table.reps[y]),
                "lhs": lhs.to_json(),
                "rhs": rhs.to_json(),
                "monomial": expansion.to_json(),
            }));
            break;
        }
    }
    Ok(item)
}

pub fn check_q_homomorphism(setup: &FrobeniusSetup, pairs: &[(Word, Word)]) -> Result<HomReport> {
    let items = pairs
        .par_iter()
        .map(|(a, b)| check_q_pair(setup, a, b))
        .collect::<Result<Vec<_>>>()?;
    Ok(HomReport {
        ell: setup.ell,
        q: setup.q,
        pairs: items.len(),
        nontrivial: items.iter().filter(|i| !i.trivial).count(),
        failures: items.iter().filter(|i| !i.passed).count(),
        items,
    })
}

/// Every pair `(w, w')` whose total content is at most `bound`.
pub fn word_pairs_up_to(bound: &[usize]) -> Vec<(Word, Word)> {
    contents_up_to(bound)
        .into_iter()
        .flat_map(|nu| words_with_content(&nu))
        .flat_map(|w| w.splits())
        .collect()
}

/// Every word whose content is at most `bound`.
pub fn words_up_to(bound: &[usize]) -> Vec<Word> {
    contents_up_to(bound)
        .into_iter()
        .flat_map(|nu| words_with_content(&nu))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct LiftRow {
    pub q: u64,
    pub pairs: usize,
    pub nontrivial: usize,
    pub failures: usize,
    /// `N(zeta^2 - q)` over the cyclotomic integers of level `2l`.
    pub norm: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct LiftEvidence {
    pub ell: u32,
    pub rows: Vec<LiftRow>,
    pub norms_increasing: bool,
    pub consistent: bool,
}

/// The homomorphism check at several `q`, with the norms that a vanishing
/// defect must be divisible by.
pub fn generic_lift_evidence(
    quiver: &QuiverWithAut,
    pairs: &[(Word, Word)],
    ell: u32,
    qs: &[u64],
) -> Result<LiftEvidence> {
    if qs.len() < 3 {
        return Err(Error::InvalidInput("need at least three prime powers".into()));
    }
    let mut rows = Vec::new();
    for &q in qs {
        if q.gcd(&(ell as u64)) != 1 {
            return Err(Error::Hypothesis(format!("gcd(q, l) = gcd({q}, {ell}) is not 1")));
        }
        let setup = FrobeniusSetup::new(quiver, ell, q)?;
        let report = check_q_homomorphism(&setup, pairs)?;
        rows.push(LiftRow {
            q,
            pairs: report.pairs,
            nontrivial: report.nontrivial,
            failures: report.failures,
            norm: cyclo_norm_zeta2_minus_q(ell as u64, q).to_string(),
        });
    }
    let norms: Vec<BigInt> = rows.iter().map(|r| r.norm.parse::<BigInt>().unwrap().magnitude().clone().into()).collect();
    let norms_increasing = norms.windows(2).all(|w| w[0] < w[1]);
    let consistent = rows.iter().all(|r| r.failures == 0);
    Ok(LiftEvidence { ell, rows, norms_increasing, consistent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hall::algebra::{indicator_fn, theta_normalized};
    use crate::hall::quiver::preset;

    #[test]
    fn hypotheses() {
        let b2 = preset("A3-folded").unwrap();
        assert!(matches!(FrobeniusSetup::new(&b2, 2, 3), Err(Error::Hypothesis(_))));
        assert!(FrobeniusSetup::new(&b2, 3, 2).is_ok());
    }

    #[test]
    fn restriction_lands_in_the_torus_fixed_locus() {
        for (name, ell, q, mu) in [("A2", 2, 2, vec![1, 1]), ("A2", 2, 3, vec![1, 1]), ("A2", 3, 2, vec![1, 1])] {
            let setup = FrobeniusSetup::new(&preset(name).unwrap(), ell, q).unwrap();
            let big = setup.big().uncompressed();
            let ys = big.enum_points(&mu).unwrap();
            let mut images = std::collections::HashSet::new();
            for y in &ys {
                let x = setup.restrict_scalars(y).unwrap();
                assert!(setup.is_torus_fixed(&x).unwrap());
                images.insert(x.maps.iter().flat_map(|m| m.data().iter().map(|e| e.0)).collect::<Vec<_>>());
            }
            assert_eq!(images.len(), ys.len());
            if ell == 2 && q == 2 {
                // every torus-fixed point is a restriction
                let small = setup.small().uncompressed();
                let nu = setup.scaled(&mu);
                let fixed = small
                    .enum_points(&nu)
                    .unwrap()
                    .iter()
                    .filter(|x| setup.is_torus_fixed(x).unwrap())
                    .count();
                assert_eq!(fixed, ys.len());
            }
        }
        let setup = FrobeniusSetup::new(&preset("A3-folded").unwrap(), 3, 2).unwrap();
        let big = setup.big().uncompressed();
        for y in big.enum_points(&[1, 1]).unwrap().iter().take(64) {
            assert!(setup.is_torus_fixed(&setup.restrict_scalars(y).unwrap()).unwrap());
        }
    }

    #[test]
    fn q_examples() {
        let a1 = preset("A1").unwrap();
        let setup = FrobeniusSetup::new(&a1, 2, 3).unwrap();
        let one = indicator_fn(setup.small(), &Word::letter(0, 2), &[2]).unwrap();
        let q1 = frobenius_q(&setup, &one).unwrap().unwrap();
        assert_eq!(q1.values(), &[BigInt::from(1)]);
        let odd = indicator_fn(setup.small(), &Word::letter(0, 1), &[1]).unwrap();
        assert!(frobenius_q(&setup, &odd).unwrap().is_none());
        let tw = setup.ring().twist();
        let th = theta_normalized(setup.small(), &Word(vec![(0, 1), (0, 1)]), &tw).unwrap();
        let qth = frobenius_q(&setup, &th).unwrap().unwrap();
        assert!(qth.is_zero());
    }

    #[test]
    fn residue_examples() {
        let a1 = preset("A1").unwrap();
        for (ell, q) in [(2, 2), (2, 3), (3, 2)] {
            let setup = FrobeniusSetup::new(&a1, ell, q).unwrap();
            for w in words_up_to(&[2 * ell as usize]) {
                let r = check_residue(&setup, &w).unwrap();
                assert!(r.passed, "{r:?}");
            }
        }
        let setup = FrobeniusSetup::new(&preset("A2").unwrap(), 2, 2).unwrap();
        let r = check_residue(&setup, &Word(vec![(0, 2), (1, 2)])).unwrap();
        assert!(r.passed && !r.trivial, "{r:?}");
    }

    #[test]
    fn homomorphism_on_small_words() {
        let setup = FrobeniusSetup::new(&preset("A1").unwrap(), 2, 2).unwrap();
        let rep = check_q_homomorphism(&setup, &word_pairs_up_to(&[4])).unwrap();
        assert!(rep.passed(), "{:?}", rep.items.iter().find(|i| !i.passed));
        assert!(rep.nontrivial > 0);
        let setup = FrobeniusSetup::new(&preset("A2").unwrap(), 2, 3).unwrap();
        let rep = check_q_homomorphism(&setup, &word_pairs_up_to(&[2, 2])).unwrap();
        assert!(rep.passed(), "{:?}", rep.items.iter().find(|i| !i.passed));
    }

    #[test]
    fn lift_evidence_norms() {
        let ev = generic_lift_evidence(&preset("A1").unwrap(), &word_pairs_up_to(&[4]), 2, &[3, 5, 7]).unwrap();
        assert!(ev.consistent && ev.norms_increasing);
        let norms: Vec<&str> = ev.rows.iter().map(|r| r.norm.as_str()).collect();
        assert_eq!(norms, vec!["16", "36", "64"]);
    }
}
