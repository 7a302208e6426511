//! Command-line front end. Every invocation writes one JSON report.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::{check_binom_vanishing, check_phi_square_identity, cyclo_norm_zeta2_minus_q, cyclotomic_poly, SurdElt};
use crate::flags::{enum_flags, relative_position, ThetaMatrix};
use crate::freealg::{compare_dims_with_hall, gram_to_json, FreeAlgebra, DEFAULT_WORD_CAP};
use crate::gfq::field_of_order;
use crate::hall::model::DEFAULT_POINT_CAP;
use crate::hall::{
    self, cartan_from_quiver, check_q_homomorphism, check_residue, convolve, generic_lift_evidence, indicator_fn,
    serre_check, word_pairs_up_to, words_up_to, FrobeniusSetup, QuiverWithAut, RepModel, Word,
};
use crate::qschur::{check_frobenius_hom, compatible_triples, compositions, enum_theta, interpolate_structure_poly, SchurElt};
use crate::report::{Check, Report};
use crate::verify::{self, FIELD_CAP};

#[derive(Parser, Debug, Serialize)]
#[command(name = "hallfrob", version, about = "Exact point-count checks for Hall and q-Schur algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Built-in quiver name or path to a quiver JSON file
    #[arg(long, global = true)]
    pub quiver: Option<String>,
    /// Number of flag steps
    #[arg(short = 'n', global = true)]
    pub n: Option<usize>,
    /// Flag dimension
    #[arg(short = 'r', global = true)]
    pub r: Option<u32>,
    #[arg(short = 'l', long = "ell", global = true)]
    pub ell: Option<u32>,
    /// Prime power; repeat for a sweep
    #[arg(short = 'q', global = true)]
    pub q: Vec<u64>,
    /// Size cap for enumerations
    #[arg(long, global = true)]
    pub cap: Option<u64>,
    #[arg(long, global = true)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub preset: Option<String>,
    /// Dimension vector, comma separated, indexed by vertex orbit
    #[arg(long, global = true)]
    pub nu: Option<String>,
    /// Content bound, comma separated
    #[arg(long, global = true)]
    pub bound: Option<String>,
    /// Word such as `1:2,2:1`; repeat for a product
    #[arg(long = "word", global = true)]
    pub words: Vec<String>,
    /// Relative-position matrix such as `1,0;1,0`; repeat for a product
    #[arg(long = "theta", global = true)]
    pub thetas: Vec<String>,
    #[arg(long = "held-out", global = true)]
    pub held_out: Vec<u64>,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Cyclotomic and quantum binomial identities
    Cyclo,
    Qschur {
        #[command(subcommand)]
        op: QschurOp,
    },
    Hall {
        #[command(subcommand)]
        op: HallOp,
    },
    Freealg {
        #[command(subcommand)]
        op: FreealgOp,
    },
    /// Run a verification preset
    Verify,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QschurOp {
    Orbits,
    Multiply,
    FrobCheck,
    Interpolate,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HallOp {
    Repspace,
    Multiply,
    Serre,
    FrobCheck,
    HomCheck,
    LiftEvidence,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FreealgOp {
    Gram,
    Dim,
    Compare,
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad integer {x:?} in {s:?}"))))
        .collect()
}

fn parse_theta(s: &str) -> Result<ThetaMatrix> {
    let rows: Vec<Vec<u32>> = s
        .split(';')
        .map(|r| parse_list(r).map(|v| v.into_iter().map(|x| x as u32).collect()))
        .collect::<Result<_>>()?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidInput(format!("matrix {s:?} is not square")));
    }
    ThetaMatrix::new(n, rows.concat())
}

pub fn load_quiver(source: &str) -> Result<QuiverWithAut> {
    if hall::PRESETS.contains(&source) {
        return hall::preset(source);
    }
    QuiverWithAut::from_json(&std::fs::read_to_string(source)?)
}

impl Cli {
    fn quiver(&self) -> Result<QuiverWithAut> {
        load_quiver(self.quiver.as_deref().ok_or_else(|| Error::InvalidInput("--quiver is required".into()))?)
    }

    fn qs(&self) -> Vec<u64> {
        if self.q.is_empty() {
            vec![2]
        } else {
            self.q.clone()
        }
    }

    fn n(&self) -> Result<usize> {
        self.n.ok_or_else(|| Error::InvalidInput("-n is required".into()))
    }

    fn r(&self) -> Result<u32> {
        self.r.ok_or_else(|| Error::InvalidInput("-r is required".into()))
    }

    fn ell(&self) -> Result<u32> {
        match self.ell {
            Some(0) => Err(Error::InvalidInput("l must be positive".into())),
            Some(l) => Ok(l),
            None => Err(Error::InvalidInput("-l is required".into())),
        }
    }

    fn cap(&self, default: u64) -> Result<u64> {
        match self.cap {
            Some(0) => Err(Error::InvalidInput("--cap must be positive".into())),
            Some(c) => Ok(c),
            None => Ok(default),
        }
    }

    fn model(&self, q: u64) -> Result<Arc<RepModel>> {
        Ok(RepModel::new(&self.quiver()?, q)?.with_point_cap(self.cap(DEFAULT_POINT_CAP as u64)? as u128))
    }

    fn nu(&self, rank: usize) -> Result<Vec<usize>> {
        let nu = parse_list(self.nu.as_deref().ok_or_else(|| Error::InvalidInput("--nu is required".into()))?)?;
        if nu.len() != rank {
            return Err(Error::Mismatch(format!("--nu has {} entries for {rank} vertex orbits", nu.len())));
        }
        Ok(nu)
    }

    fn bound(&self, rank: usize, default: usize) -> Result<Vec<usize>> {
        match &self.bound {
            None => Ok(vec![default; rank]),
            Some(s) => {
                let b = parse_list(s)?;
                if b.len() != rank {
                    return Err(Error::Mismatch(format!("--bound has {} entries for {rank} vertex orbits", b.len())));
                }
                Ok(b)
            }
        }
    }

    fn config(&self) -> Value {
        serde_json::to_value(self).expect("config serializes")
    }
}

fn cyclo(cli: &Cli) -> Result<Vec<Check>> {
    let ells: Vec<u64> = match cli.ell {
        Some(l) => vec![l as u64],
        None => vec![2, 3, 4, 5],
    };
    let a_max = cli.cap(10)? as i64;
    let mut out = Vec::new();
    for &ell in &ells {
        out.push(Check::new("phi-square-identity", json!({"ell": ell}), check_phi_square_identity(ell)));
        let mut bad = Vec::new();
        let mut checked = 0;
        for d in 1..=3u32 {
            if (d as u64).gcd(&ell) != 1 {
                continue;
            }
            for a in 0..=a_max {
                for t in 0..=a {
                    let (case, ok) = check_binom_vanishing(a, t, d, ell)?;
                    checked += 1;
                    if !ok {
                        bad.push(json!({"d": d, "a": a, "t": t, "case": case}));
                    }
                }
            }
        }
        out.push(
            Check::new("binomial-identities", json!({"ell": ell, "a_max": a_max}), bad.is_empty())
                .with_witness(bad.first().cloned())
                .with_result(json!({"checked": checked})),
        );
        if !cli.q.is_empty() {
            let norms: Vec<BigInt> = cli.q.iter().map(|&q| cyclo_norm_zeta2_minus_q(ell, q)).collect();
            let increasing = norms.windows(2).all(|w| w[0] < w[1]);
            let mismatches: Vec<Value> = cli
                .q
                .iter()
                .zip(&norms)
                .filter_map(|(&q, n)| {
                    let x = BigInt::from(q);
                    let expected = if ell % 2 == 0 {
                        cyclotomic_poly(ell).eval(&x).pow(2)
                    } else {
                        cyclotomic_poly(2 * ell).eval(&x)
                    };
                    (n.magnitude() != expected.magnitude())
                        .then(|| json!({"q": q, "norm": n.to_string(), "expected": expected.to_string()}))
                })
                .collect();
            out.push(
                Check::new("norm-growth", json!({"ell": ell, "q": cli.q}), increasing && mismatches.is_empty())
                    .with_witness((!mismatches.is_empty() || !increasing).then(|| json!({"increasing": increasing, "mismatches": mismatches})))
                    .with_result(json!(norms.iter().map(|n| n.to_string()).collect::<Vec<_>>())),
            );
        }
    }
    Ok(out)
}

fn qschur(cli: &Cli, op: &QschurOp) -> Result<Vec<Check>> {
    let (n, r) = (cli.n()?, cli.r()?);
    let cap = cli.cap(FIELD_CAP)?;
    let mut out = Vec::new();
    match op {
        QschurOp::Orbits => {
            let thetas = enum_theta(n, r);
            for q in cli.qs() {
                let field = field_of_order(q, cap)?;
                let mut sizes: BTreeMap<ThetaMatrix, u64> = BTreeMap::new();
                let comps = compositions(n, r);
                let mut total_flags = 0u64;
                for d in &comps {
                    let d: Vec<usize> = d.iter().map(|&x| x as usize).collect();
                    let flags = enum_flags(&field, &d);
                    total_flags += flags.len() as u64;
                    for e in &comps {
                        let e: Vec<usize> = e.iter().map(|&x| x as usize).collect();
                        for f in &flags {
                            for g in enum_flags(&field, &e) {
                                *sizes.entry(relative_position(f, &g)?).or_default() += 1;
                            }
                        }
                    }
                }
                let seen: BTreeSet<&ThetaMatrix> = sizes.keys().collect();
                let ok = seen == thetas.iter().collect() && sizes.values().sum::<u64>() == total_flags * total_flags;
                out.push(
                    Check::new("qschur-orbits", json!({"n": n, "r": r, "q": q}), ok).with_result(json!({
                        "orbits": thetas.len(),
                        "sizes": sizes.iter().map(|(t, s)| json!({"theta": t, "size": s.to_string()})).collect::<Vec<_>>(),
                    })),
                );
            }
        }
        QschurOp::Multiply => {
            if cli.thetas.len() != 2 {
                return Err(Error::InvalidInput("give exactly two --theta matrices".into()));
            }
            let (a, b) = (parse_theta(&cli.thetas[0])?, parse_theta(&cli.thetas[1])?);
            for q in cli.qs() {
                let prod = SchurElt::basis(&a, q).multiply(&SchurElt::basis(&b, q), cap)?;
                let terms: Vec<Value> =
                    prod.coeffs().iter().map(|(c, v)| json!({"theta": c, "coeff": v.to_string()})).collect();
                out.push(Check::new("qschur-multiply", json!({"a": a, "b": b, "q": q}), true).with_result(json!(terms)));
            }
        }
        QschurOp::FrobCheck => {
            let ell = cli.ell()?;
            for q in cli.qs() {
                let rep = check_frobenius_hom(n, r, ell, q, cap)?;
                out.push(
                    Check::new("qschur-frob-check", json!({"n": n, "r": r, "ell": ell, "q": q}), rep.passed())
                        .with_witness(rep.triples.iter().find(|t| !t.pass).map(|t| json!(t)))
                        .with_result(json!({"modulus": rep.modulus, "checked": rep.checked, "violations": rep.violations})),
                );
            }
        }
        QschurOp::Interpolate => {
            let train = if cli.q.is_empty() { vec![2, 3, 4, 5, 7] } else { cli.q.clone() };
            let held = if cli.held_out.is_empty() { vec![8, 9] } else { cli.held_out.clone() };
            for (a, b, c) in compatible_triples(n, r) {
                let params = json!({"a": a, "b": b, "c": c, "train": train, "held_out": held});
                out.push(match interpolate_structure_poly(&a, &b, &c, &train, &held, cap) {
                    Ok((_, summary)) => Check::new("qschur-interpolate", params, true).with_result(json!(summary)),
                    Err(e) => Check::error("qschur-interpolate", params, &e),
                });
            }
        }
    }
    Ok(out)
}

fn random_word(rng: &mut ChaCha8Rng, bound: &[usize]) -> Word {
    let mut rest = bound.to_vec();
    let mut blocks = Vec::new();
    while rng.gen_bool(0.75) {
        let i = rng.gen_range(0..rest.len());
        if rest[i] == 0 {
            continue;
        }
        let c = rng.gen_range(1..=rest[i]);
        rest[i] -= c;
        blocks.push((i, c as u32));
    }
    Word(blocks)
}

fn hall_cmd(cli: &Cli, op: &HallOp) -> Result<Vec<Check>> {
    let quiver = cli.quiver()?;
    let name = cli.quiver.clone().unwrap_or_default();
    let mut out = Vec::new();
    match op {
        HallOp::Repspace => {
            for q in cli.qs() {
                let m = cli.model(q)?;
                let nu = cli.nu(m.rank())?;
                let classes = m.classes(&nu)?;
                out.push(Check::new("hall-repspace", json!({"quiver": name, "q": q, "nu": nu}), true).with_result(json!({
                    "dimension": m.dimension(&nu),
                    "points": m.point_count(&nu).to_string(),
                    "classes": classes.len(),
                    "compressed": m.is_compressed(),
                })));
            }
        }
        HallOp::Multiply => {
            for q in cli.qs() {
                let m = cli.model(q)?;
                let rank = m.rank();
                let lookup = |s: &str| m.orbit_by_name(s);
                let pairs: Vec<(Word, Word)> = match cli.words.len() {
                    2 => vec![(Word::parse(&cli.words[0], lookup)?, Word::parse(&cli.words[1], lookup)?)],
                    0 => {
                        let mut rng = ChaCha8Rng::seed_from_u64(cli.seed.unwrap_or(0));
                        let bound = cli.bound(rank, 2)?;
                        (0..8).map(|_| (random_word(&mut rng, &bound), random_word(&mut rng, &bound))).collect()
                    }
                    _ => return Err(Error::InvalidInput("give two --word values or none".into())),
                };
                let names = |i: usize| m.orbit_name(i).to_string();
                for (a, b) in pairs {
                    let lhs = convolve(&indicator_fn(&m, &a, &a.content(rank))?, &indicator_fn(&m, &b, &b.content(rank))?)?;
                    let w = a.concat(&b);
                    let rhs = indicator_fn(&m, &w, &w.content(rank))?;
                    let ok = lhs.values() == rhs.values();
                    out.push(
                        Check::new("hall-multiply", json!({"quiver": name, "q": q, "left": a.display(names), "right": b.display(names)}), ok)
                            .with_result(lhs.to_json()),
                    );
                }
            }
        }
        HallOp::Serre => {
            for q in cli.qs() {
                let m = cli.model(q)?;
                for i in 0..m.rank() {
                    for j in 0..m.rank() {
                        if i == j {
                            continue;
                        }
                        let r = serre_check(&m, i, j, &SurdElt::twist(q))?;
                        out.push(
                            Check::new("hall-serre", json!({"quiver": name, "q": q, "i": m.orbit_name(i), "j": m.orbit_name(j)}), r.passed)
                                .with_witness(r.witness.clone())
                                .with_result(json!({"a_ij": r.a_ij, "nu": r.nu, "classes": r.classes})),
                        );
                    }
                }
            }
        }
        HallOp::FrobCheck => {
            let ell = cli.ell()?;
            for q in cli.qs() {
                let setup = FrobeniusSetup::new(&quiver, ell, q)?;
                let bound = cli.bound(setup.small().rank(), 2 * ell as usize)?;
                let items = words_up_to(&bound).iter().map(|w| check_residue(&setup, w)).collect::<Result<Vec<_>>>()?;
                let failures: Vec<_> = items.iter().filter(|i| !i.passed).collect();
                out.push(
                    Check::new("hall-frob-check", json!({"quiver": name, "ell": ell, "q": q, "bound": bound}), failures.is_empty())
                        .with_witness(failures.first().map(|i| json!(i)))
                        .with_result(json!({
                            "words": items.len(),
                            "nontrivial": items.iter().filter(|i| !i.trivial).count(),
                            "failures": failures.len(),
                        })),
                );
            }
        }
        HallOp::HomCheck => {
            let ell = cli.ell()?;
            for q in cli.qs() {
                let setup = FrobeniusSetup::new(&quiver, ell, q)?;
                let bound = cli.bound(setup.small().rank(), 2 * ell as usize)?;
                let rep = check_q_homomorphism(&setup, &word_pairs_up_to(&bound))?;
                out.push(
                    Check::new("hall-hom-check", json!({"quiver": name, "ell": ell, "q": q, "bound": bound}), rep.passed())
                        .with_witness(rep.items.iter().find(|i| !i.passed).map(|i| json!(i)))
                        .with_result(json!({"pairs": rep.pairs, "nontrivial": rep.nontrivial, "failures": rep.failures})),
                );
            }
        }
        HallOp::LiftEvidence => {
            let ell = cli.ell()?;
            let qs = if cli.q.is_empty() { vec![3, 5, 7] } else { cli.q.clone() };
            let rank = RepModel::new(&quiver, qs[0])?.rank();
            let bound = cli.bound(rank, 2 * ell as usize)?;
            let ev = generic_lift_evidence(&quiver, &word_pairs_up_to(&bound), ell, &qs)?;
            let ok = ev.consistent && ev.norms_increasing;
            out.push(Check::new("hall-lift-evidence", json!({"quiver": name, "ell": ell, "q": qs, "bound": bound}), ok).with_result(json!(ev)));
        }
    }
    Ok(out)
}

fn freealg_cmd(cli: &Cli, op: &FreealgOp) -> Result<Vec<Check>> {
    let quiver = cli.quiver()?;
    let name = cli.quiver.clone().unwrap_or_default();
    let alg = FreeAlgebra::new(&cartan_from_quiver(&quiver)?)?;
    let nu = cli.nu(alg.rank())?;
    let cap = cli.cap(DEFAULT_WORD_CAP as u64)? as usize;
    let params = json!({"quiver": name, "nu": nu});
    Ok(match op {
        FreealgOp::Gram => {
            let (words, g) = alg.gram_matrix(&nu, cap)?;
            vec![Check::new("freealg-gram", params, true).with_result(gram_to_json(&words, &g))]
        }
        FreealgOp::Dim => {
            let d = alg.f_dimension(&nu, cap)?;
            vec![Check::new("freealg-dim", params, true).with_result(json!({"dimension": d}))]
        }
        FreealgOp::Compare => {
            let rep = compare_dims_with_hall(&quiver, &nu, &cli.qs(), cap)?;
            vec![Check::new("freealg-compare", json!({"quiver": name, "nu": nu, "q": cli.qs()}), rep.all_match()).with_result(json!(rep))]
        }
    })
}

fn dispatch(cli: &Cli) -> Result<Report> {
    if let Command::Verify = cli.command {
        let mut rep = verify::run_preset(cli.preset.as_deref().unwrap_or("desk"))?;
        rep.config = cli.config();
        return Ok(rep);
    }
    let checks = match &cli.command {
        Command::Cyclo => cyclo(cli)?,
        Command::Qschur { op } => qschur(cli, op)?,
        Command::Hall { op } => hall_cmd(cli, op)?,
        Command::Freealg { op } => freealg_cmd(cli, op)?,
        Command::Verify => unreachable!(),
    };
    let mut rep = Report::new(cli.config());
    rep.checks = checks;
    Ok(rep)
}

fn emit(report: &Report, out: Option<&PathBuf>) -> i32 {
    let text = report.to_json_string();
    let written = match out {
        Some(p) => std::fs::write(p, &text).map_err(|e| eprintln!("cannot write {}: {e}", p.display())).is_ok(),
        None => {
            print!("{text}");
            true
        }
    };
    match (written, report.passed()) {
        (true, true) => 0,
        (true, false) => 1,
        (false, _) => 3,
    }
}

/// Parses `argv` (program name first), runs the command and returns the
/// exit code: 0 when every check passes, 1 on a failed check, 2 on invalid
/// input, 3 when the report cannot be written.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) => {
            print!("{e}");
            return 0;
        }
        Err(e) => {
            let mut rep = Report::new(json!({}));
            rep.push(Check::error("usage", json!({}), &Error::InvalidInput(e.to_string())));
            emit(&rep, None);
            return 2;
        }
    };
    match dispatch(&cli) {
        Ok(rep) => emit(&rep, cli.out.as_ref()),
        Err(e) => {
            let mut rep = Report::new(cli.config());
            rep.push(Check::error("input", json!({}), &e));
            match emit(&rep, cli.out.as_ref()) {
                3 => 3,
                _ => 2,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report_for(args: &[&str]) -> (i32, Value) {
        let dir = std::env::temp_dir().join(format!("hallfrob-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join(format!("{}.json", args.join("_").replace(['/', ' '], "")));
        let mut argv = vec!["hallfrob"];
        argv.extend_from_slice(args);
        let p = path.to_str().unwrap().to_string();
        argv.extend(["--out", &p]);
        let code = run(argv);
        let v = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        (code, v)
    }

    #[test]
    fn worked_commands() {
        let (code, v) = report_for(&["qschur", "frob-check", "-n", "2", "-r", "1", "-l", "2", "-q", "2"]);
        assert_eq!(code, 0, "{v}");
        assert_eq!(v["checks"][0]["status"], "pass");
        let (code, v) = report_for(&["hall", "serre", "--quiver", "A2", "-q", "2"]);
        assert_eq!(code, 0, "{v}");
        assert_eq!(v["checks"].as_array().unwrap().len(), 2);
        let (code, v) = report_for(&["freealg", "dim", "--quiver", "A2", "--nu", "2,2"]);
        assert_eq!((code, v["checks"][0]["result"]["dimension"].as_u64()), (0, Some(3)));
    }

    #[test]
    fn other_commands() {
        for args in [
            vec!["cyclo", "-l", "2", "-q", "3", "-q", "5"],
            vec!["qschur", "orbits", "-n", "2", "-r", "2", "-q", "2"],
            vec!["qschur", "multiply", "-n", "2", "-r", "1", "--theta", "0,1;0,0", "--theta", "0,0;1,0", "-q", "3"],
            vec!["qschur", "interpolate", "-n", "2", "-r", "1"],
            vec!["hall", "repspace", "--quiver", "A3-folded", "--nu", "1,1", "-q", "3"],
            vec!["hall", "multiply", "--quiver", "A2", "--word", "1:1", "--word", "2:1,1:1"],
            vec!["hall", "multiply", "--quiver", "A2", "--seed", "7", "-q", "3"],
            vec!["hall", "frob-check", "--quiver", "A2", "-l", "2", "-q", "3", "--bound", "2,2"],
            vec!["hall", "hom-check", "--quiver", "A1", "-l", "2", "-q", "3"],
            vec!["hall", "lift-evidence", "--quiver", "A1", "-l", "2", "--bound", "4"],
            vec!["freealg", "gram", "--quiver", "A2", "--nu", "1,1"],
            vec!["freealg", "compare", "--quiver", "A2", "--nu", "2,1", "-q", "2", "-q", "3"],
        ] {
            let (code, v) = report_for(&args);
            assert_eq!(code, 0, "{args:?}: {v}");
        }
    }

    #[test]
    fn odd_norm_is_reported_as_failure() {
        let (code, v) = report_for(&["cyclo", "-l", "3", "-q", "2"]);
        assert_eq!(code, 1);
        assert_eq!(v["checks"][2]["witness"]["mismatches"][0]["norm"], "7");
    }

    #[test]
    fn invalid_input_gives_error_object() {
        let (code, v) = report_for(&["hall", "serre", "--quiver", "A2", "-q", "6"]);
        assert_eq!(code, 2);
        assert_eq!(v["checks"][0]["status"], "fail");
        assert!(v["checks"][0]["witness"]["error"].is_string());
        let (code, v) = report_for(&["hall", "frob-check", "--quiver", "A3-folded", "-l", "2", "-q", "3"]);
        assert_eq!(code, 2, "{v}");
        assert_eq!(run(["hallfrob", "qschur", "bogus"]), 2);
        let (code, _) = report_for(&["verify", "--preset", "smoke"]);
        assert_eq!(code, 0);
    }
}
