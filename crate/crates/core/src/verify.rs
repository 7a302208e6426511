//! The desk-scale verification suite: every check is an exact equality.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::Result;
use crate::exactalg::{
    check_binom_vanishing, check_phi_square_identity, cyclo_norm_zeta2_minus_q, cyclotomic_poly, gauss_binom, SurdElt,
};
use crate::flags::enum_subspaces;
use crate::freealg::{compare_dims_with_hall, FreeAlgebra, DEFAULT_WORD_CAP};
use crate::gfq::field_of_order;
use crate::hall::{
    cartan_from_quiver, check_q_homomorphism, check_residue, convolve, indicator_fn, preset, serre_check,
    word_pairs_up_to, words_up_to, FrobeniusSetup, HallFn, RepModel, Word,
};
use crate::qschur::{check_frobenius_hom, compatible_triples, interpolate_structure_poly};
use crate::report::{Check, Report};

pub const FIELD_CAP: u64 = 1 << 12;

pub const PRESETS: [&str; 2] = ["desk", "smoke"];

type Criterion = fn() -> Result<Check>;

fn guard(name: &str, f: Criterion) -> Check {
    f().unwrap_or_else(|e| Check::error(name, json!({}), &e))
}

fn q_binomial(n: i64, k: i64, q: u64) -> BigInt {
    gauss_binom(n, k, 1).shift(k * (n - k)).eval_at_square(&BigInt::from(q)).expect("even exponents")
}

pub fn grassmannian_counts() -> Result<Check> {
    let mut checked = 0;
    let mut witness = None;
    for q in [2u64, 3, 4, 5] {
        let field = field_of_order(q, FIELD_CAP)?;
        for n in 0..=4usize {
            for k in 0..=n {
                let count = BigInt::from(enum_subspaces(&field, n, k).len());
                let expected = q_binomial(n as i64, k as i64, q);
                checked += 1;
                if count != expected && witness.is_none() {
                    witness = Some(json!({"q": q, "n": n, "k": k, "count": count.to_string(), "expected": expected.to_string()}));
                }
            }
        }
    }
    Ok(Check::new("c01-grassmannian-counts", json!({"q": [2, 3, 4, 5], "n_max": 4}), witness.is_none())
        .with_witness(witness)
        .with_result(json!({"checked": checked})))
}

pub fn phi_square_identity() -> Result<Check> {
    let bad: Vec<u64> = (1..=50).filter(|&l| !check_phi_square_identity(l)).collect();
    Ok(Check::new("c02-phi-square-identity", json!({"ell_max": 50}), bad.is_empty())
        .with_witness((!bad.is_empty()).then(|| json!({"ell": bad}))))
}

pub fn binomial_identities() -> Result<Check> {
    let mut checked = 0;
    let mut witness = None;
    for ell in [2u64, 3, 5] {
        for d in [1u32, 2, 3] {
            if (d as u64).gcd(&ell) != 1 {
                continue;
            }
            for a in 0..=10 {
                for t in 0..=a {
                    let (case, ok) = check_binom_vanishing(a, t, d, ell)?;
                    checked += 1;
                    if !ok && witness.is_none() {
                        witness = Some(json!({"ell": ell, "d": d, "a": a, "t": t, "case": case}));
                    }
                }
            }
        }
    }
    Ok(Check::new("c03-binomial-identities", json!({"ell": [2, 3, 5], "d": [1, 2, 3], "a_max": 10}), witness.is_none())
        .with_witness(witness)
        .with_result(json!({"checked": checked})))
}

pub fn qschur_frobenius() -> Result<Check> {
    let cases = [(2usize, 1u32, 2u32, 2u64), (2, 1, 2, 3), (2, 1, 3, 2), (2, 2, 2, 2)];
    let mut rows = Vec::new();
    let mut witness = None;
    for (n, r, ell, q) in cases {
        let rep = check_frobenius_hom(n, r, ell, q, FIELD_CAP)?;
        if !rep.passed() && witness.is_none() {
            witness = rep.triples.iter().find(|t| !t.pass).map(|t| json!({"n": n, "r": r, "ell": ell, "q": q, "triple": t}));
        }
        rows.push(json!({"n": n, "r": r, "ell": ell, "q": q, "modulus": rep.modulus, "checked": rep.checked, "violations": rep.violations}));
    }
    Ok(Check::new("c04-qschur-frobenius", json!({"cases": cases}), witness.is_none())
        .with_witness(witness)
        .with_result(json!(rows)))
}

pub fn hall_polynomials() -> Result<Check> {
    let (train, held) = ([2u64, 3, 4, 5, 7], [8u64, 9]);
    let mut fitted = 0;
    let mut witness = None;
    for r in 1..=2 {
        for (a, b, c) in compatible_triples(2, r) {
            match interpolate_structure_poly(&a, &b, &c, &train, &held, FIELD_CAP) {
                Ok(_) => fitted += 1,
                Err(e) if witness.is_none() => {
                    witness = Some(json!({"a": a, "b": b, "c": c, "error": e.to_string()}));
                }
                Err(_) => {}
            }
        }
    }
    Ok(Check::new("c05-hall-polynomials", json!({"n": 2, "r_max": 2, "train": train, "held_out": held}), witness.is_none())
        .with_witness(witness)
        .with_result(json!({"triples": fitted})))
}

/// `1_w * 1_w' = 1_{ww'}` for every pair below `bound`.
pub fn concatenation_on(name: &str, bound: &[usize], q: u64) -> Result<(usize, Option<Value>)> {
    let model = RepModel::new(&preset(name)?, q)?;
    let rank = bound.len();
    let mut cache: HashMap<Word, HallFn<BigInt>> = HashMap::new();
    let mut ind = |w: &Word, model: &Arc<RepModel>| -> Result<HallFn<BigInt>> {
        if let Some(f) = cache.get(w) {
            return Ok(f.clone());
        }
        let f = indicator_fn(model, w, &w.content(rank))?;
        cache.insert(w.clone(), f.clone());
        Ok(f)
    };
    let pairs = word_pairs_up_to(bound);
    for (a, b) in &pairs {
        let lhs = convolve(&ind(a, &model)?, &ind(b, &model)?)?;
        let rhs = ind(&a.concat(b), &model)?;
        if lhs.values() != rhs.values() {
            let names = |i: usize| model.orbit_name(i).to_string();
            return Ok((pairs.len(), Some(json!({"quiver": name, "q": q, "left": a.display(names), "right": b.display(names)}))));
        }
    }
    Ok((pairs.len(), None))
}

pub fn concatenation_law() -> Result<Check> {
    let cases: [(&str, &[usize]); 2] = [("A2", &[3, 3]), ("A3", &[2, 2, 2])];
    let mut rows = Vec::new();
    let mut witness = None;
    for (name, bound) in cases {
        for q in [2u64, 3] {
            let (pairs, w) = concatenation_on(name, bound, q)?;
            rows.push(json!({"quiver": name, "q": q, "pairs": pairs}));
            witness = witness.or(w);
        }
    }
    Ok(Check::new("c06-concatenation-law", json!({"A2": [3, 3], "A3": [2, 2, 2], "q": [2, 3]}), witness.is_none())
        .with_witness(witness)
        .with_result(json!(rows)))
}

pub fn serre_relations() -> Result<Check> {
    let mut rows = Vec::new();
    let mut witness = None;
    let cases = [("A2", 2u64), ("A2", 3), ("A3-folded", 2)];
    for (name, q) in cases {
        let model = RepModel::new(&preset(name)?, q)?;
        for (i, j) in [(0, 1), (1, 0)] {
            let r = serre_check(&model, i, j, &SurdElt::twist(q))?;
            if !r.passed && witness.is_none() {
                witness = Some(json!({"quiver": name, "q": q, "report": r}));
            }
            rows.push(json!({"quiver": name, "q": q, "i": i, "j": j, "a_ij": r.a_ij, "nu": r.nu, "classes": r.classes}));
        }
    }
    Ok(Check::new("c07-serre-relations", json!({"cases": cases}), witness.is_none())
        .with_witness(witness)
        .with_result(json!(rows)))
}

pub fn residue_congruences() -> Result<Check> {
    let mut rows = Vec::new();
    let mut witness = None;
    for (ell, q) in [(2u32, 3u64), (3, 2)] {
        let l = ell as usize;
        for (name, bound) in [("A1", vec![4]), ("A2", vec![2 * l, 2 * l])] {
            let setup = FrobeniusSetup::new(&preset(name)?, ell, q)?;
            let items = words_up_to(&bound)
                .par_iter()
                .map(|w| check_residue(&setup, w))
                .collect::<Result<Vec<_>>>()?;
            let failed = items.iter().filter(|i| !i.passed).count();
            if failed > 0 && witness.is_none() {
                witness = items.iter().find(|i| !i.passed).map(|i| json!({"quiver": name, "ell": ell, "q": q, "item": i}));
            }
            rows.push(json!({
                "quiver": name, "ell": ell, "q": q, "bound": bound, "words": items.len(),
                "nontrivial": items.iter().filter(|i| !i.trivial).count(), "failures": failed,
            }));
        }
    }
    Ok(Check::new("c08-residue-congruences", json!({"A1": [4], "A2": "2 ell per vertex", "ell_q": [[2, 3], [3, 2]]}), witness.is_none())
        .with_witness(witness)
        .with_result(json!(rows)))
}

pub fn q_homomorphism() -> Result<Check> {
    let ell = 2u32;
    let mut rows = Vec::new();
    let mut witness = None;
    for q in [3u64, 5] {
        for (name, bound) in [("A1", vec![4]), ("A2", vec![4, 4])] {
            let setup = FrobeniusSetup::new(&preset(name)?, ell, q)?;
            let rep = check_q_homomorphism(&setup, &word_pairs_up_to(&bound))?;
            if !rep.passed() && witness.is_none() {
                witness = rep.items.iter().find(|i| !i.passed).map(|i| json!({"quiver": name, "q": q, "item": i}));
            }
            rows.push(json!({"quiver": name, "q": q, "pairs": rep.pairs, "nontrivial": rep.nontrivial, "failures": rep.failures}));
        }
    }
    Ok(Check::new("c09-q-homomorphism", json!({"ell": ell, "q": [3, 5], "A1": [4], "A2": [4, 4]}), witness.is_none())
        .with_witness(witness)
        .with_result(json!(rows)))
}

pub fn free_algebra_dimensions() -> Result<Check> {
    let quiver = preset("A2")?;
    let alg = FreeAlgebra::new(&cartan_from_quiver(&quiver)?)?;
    let mut rows = Vec::new();
    let mut ok = true;
    for (nu, expected) in [([1usize, 1], 2usize), ([2, 1], 2), ([2, 2], 3)] {
        let dim = alg.f_dimension(&nu, DEFAULT_WORD_CAP)?;
        let cmp = compare_dims_with_hall(&quiver, &nu, &[2, 3, 5], DEFAULT_WORD_CAP)?;
        ok &= dim == expected && cmp.all_match();
        rows.push(json!({"nu": nu, "dim": dim, "expected": expected, "hall": cmp.rows}));
    }
    Ok(Check::new("c10-free-algebra-dimensions", json!({"quiver": "A2", "q": [2, 3, 5]}), ok)
        .with_witness((!ok).then(|| json!(rows.clone())))
        .with_result(json!(rows)))
}

/// `Phi_l(q)^2` for even `l`, `Phi_2l(q)` up to sign for odd `l`.
pub fn norm_growth() -> Result<Check> {
    let qs = [2u64, 3, 4, 5, 7, 8, 9];
    let mut rows = Vec::new();
    let mut witness = Vec::new();
    for ell in [2u64, 3, 4] {
        let norms: Vec<BigInt> = qs.iter().map(|&q| cyclo_norm_zeta2_minus_q(ell, q)).collect();
        let increasing = norms.windows(2).all(|w| w[0] < w[1]);
        for (&q, n) in qs.iter().zip(&norms) {
            let x = BigInt::from(q);
            let (expected, matches) = if ell % 2 == 0 {
                let e = cyclotomic_poly(ell).eval(&x).pow(2);
                (e.clone(), *n == e)
            } else {
                let e = cyclotomic_poly(2 * ell).eval(&x);
                (e.clone(), n.abs() == e)
            };
            if !matches {
                witness.push(json!({"ell": ell, "q": q, "norm": n.to_string(), "expected": expected.to_string(),
                    "phi_ell": cyclotomic_poly(ell).eval(&x).to_string()}));
            }
        }
        if !increasing {
            witness.push(json!({"ell": ell, "not_increasing": norms.iter().map(|n| n.to_string()).collect::<Vec<_>>()}));
        }
        rows.push(json!({"ell": ell, "norms": norms.iter().map(|n| n.to_string()).collect::<Vec<_>>(), "increasing": increasing}));
    }
    Ok(Check::new("c11-norm-growth", json!({"ell": [2, 3, 4], "q": qs}), witness.is_empty())
        .with_witness((!witness.is_empty()).then(|| json!(witness)))
        .with_result(json!(rows)))
}

const DESK: [(&str, Criterion); 11] = [
    ("c01-grassmannian-counts", grassmannian_counts),
    ("c02-phi-square-identity", phi_square_identity),
    ("c03-binomial-identities", binomial_identities),
    ("c04-qschur-frobenius", qschur_frobenius),
    ("c05-hall-polynomials", hall_polynomials),
    ("c06-concatenation-law", concatenation_law),
    ("c07-serre-relations", serre_relations),
    ("c08-residue-congruences", residue_congruences),
    ("c09-q-homomorphism", q_homomorphism),
    ("c10-free-algebra-dimensions", free_algebra_dimensions),
    ("c11-norm-growth", norm_growth),
];

/// Indices into the desk list that are cheap enough to run twice.
const SMOKE: [usize; 5] = [0, 1, 2, 6, 9];

fn run_list(items: &[(&str, Criterion)]) -> Vec<Check> {
    items.par_iter().map(|&(name, f)| guard(name, f)).collect()
}

fn serialized(checks: &[Check]) -> String {
    serde_json::to_string(checks).expect("checks serialize")
}

/// Runs the named preset. `desk` ends with a determinism check that reruns
/// the smoke subset and compares serialized checks byte for byte.
pub fn run_preset(preset: &str) -> Result<Report> {
    let smoke: Vec<(&str, Criterion)> = SMOKE.iter().map(|&i| DESK[i]).collect();
    let mut report = Report::new(json!({"command": "verify", "preset": preset}));
    match preset {
        "desk" => {
            let checks = run_list(&DESK);
            let again = run_list(&smoke);
            let first: Vec<Check> = SMOKE.iter().map(|&i| checks[i].clone()).collect();
            let same = serialized(&first) == serialized(&again);
            report.checks = checks;
            report.push(Check::new("c12-determinism", json!({"rerun": smoke.iter().map(|s| s.0).collect::<Vec<_>>()}), same));
        }
        "smoke" => report.checks = run_list(&smoke),
        other => {
            return Err(crate::Error::InvalidInput(format!("unknown preset {other:?}; expected one of {PRESETS:?}")));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cheap_criteria_pass() {
        for f in [grassmannian_counts, phi_square_identity, binomial_identities] {
            let c = f().unwrap();
            assert!(c.passed(), "{c:?}");
        }
    }

    #[test]
    fn norm_check_reports_the_odd_case() {
        let c = norm_growth().unwrap();
        let w = c.witness.clone().unwrap();
        assert!(w.as_array().unwrap().iter().all(|x| x["ell"] == 3));
        assert_eq!(w[0]["norm"], "7");
    }

    #[test]
    fn unknown_preset() {
        assert!(run_preset("huge").is_err());
    }
}
