//! Rational points of representation spaces of a quiver with automorphism.
//!
//! A point of `E_V^{F_a}` is stored by one matrix per edge orbit: for the
//! representative edge `h0` (with `s(h0)` the representative of its vertex
//! orbit) the matrix of `x_{h0}` over `F_{q^o}`, `o` the orbit length. The
//! other components are `x_{a^m(h0)} = F^m(x_{h0})`. Vectors are rows and act
//! by `v -> v X`, so the matrix has shape `n_s x n_t`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::quiver::QuiverWithAut;
use crate::error::{cap_check, Error, Result};
use crate::flags::enum_subspaces_over;
use crate::gfq::{make_field_capped, prime_power, FqElem, FqField, FqMatrix, MAX_FIELD_ORDER};

pub const DEFAULT_POINT_CAP: u128 = 1 << 20;

#[derive(Clone, Debug)]
pub struct VertexOrbit {
    pub vertices: Vec<usize>,
    pub d: u32,
}

#[derive(Clone, Debug)]
pub struct EdgeOrbit {
    /// `h0, a(h0), a^2(h0), ...`
    pub edges: Vec<usize>,
    pub s: usize,
    pub t: usize,
    pub o: u32,
    /// `t(h0) = a^tau(rep of t)`.
    pub tau: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepPoint {
    pub nu: Vec<usize>,
    pub maps: Vec<FqMatrix>,
}

/// Canonical class label of a point; equal labels mean equal values for
/// every invariant function.
pub type Key = Vec<u16>;

#[derive(Clone, Debug)]
enum KeyMode {
    /// Every point is its own class.
    Exact,
    /// Trivial `a`, a path with all edges pointing forward: ranks of
    /// composites classify points.
    Path { order: Vec<usize>, edge: Vec<usize> },
}

/// Representatives of the classes at one dimension vector.
#[derive(Debug)]
pub struct ClassTable {
    pub nu: Vec<usize>,
    pub reps: Vec<RepPoint>,
    index: HashMap<Key, usize>,
}

impl ClassTable {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn lookup(&self, key: &Key) -> Option<usize> {
        self.index.get(key).copied()
    }
}

#[derive(Clone, Debug)]
struct Sub {
    basis: FqMatrix,
    piv: Vec<usize>,
    free: Vec<usize>,
}

type SplitHist = Vec<(usize, usize, u64)>;

pub struct RepModel {
    quiver: QuiverWithAut,
    q: u64,
    field: FqField,
    orbits: Vec<VertexOrbit>,
    eorbits: Vec<EdgeOrbit>,
    vscalars: Vec<Vec<FqElem>>,
    escalars: Vec<Vec<FqElem>>,
    mode: KeyMode,
    point_cap: u128,
    tables: Mutex<HashMap<Vec<usize>, Arc<ClassTable>>>,
    subspaces: Mutex<HashMap<(usize, usize, usize), Arc<Vec<Sub>>>>,
    splits: Mutex<HashMap<(Vec<usize>, usize, Vec<usize>), Arc<SplitHist>>>,
    pub(crate) flag_memo: Mutex<HashMap<(Vec<usize>, usize, Vec<(usize, u32)>), u128>>,
}

impl std::fmt::Debug for RepModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RepModel(q={}, field={:?}, orbits={})", self.q, self.field, self.orbits.len())
    }
}

impl RepModel {
    /// The model over `F_q` inside `F_{q^D}`, `D` the least common multiple of
    /// all orbit lengths.
    pub fn new(quiver: &QuiverWithAut, q: u64) -> Result<Arc<Self>> {
        let (p, e) = prime_power(q).ok_or_else(|| Error::InvalidInput(format!("{q} is not a prime power")))?;
        let field = make_field_capped(p, e * lacing(quiver), MAX_FIELD_ORDER)?;
        Self::with_field(quiver, q, &field)
    }

    /// The model over `F_q`, with all arithmetic inside `field`.
    pub fn with_field(quiver: &QuiverWithAut, q: u64, field: &FqField) -> Result<Arc<Self>> {
        quiver.validate()?;
        let (p, e) = prime_power(q).ok_or_else(|| Error::InvalidInput(format!("{q} is not a prime power")))?;
        if p != field.p() || field.e() % (e * lacing(quiver)) != 0 {
            return Err(Error::Mismatch(format!(
                "{field:?} does not contain F_{{{q}^{}}}",
                lacing(quiver)
            )));
        }
        let orbit_of = quiver.vertex_orbit_index();
        let orbits: Vec<VertexOrbit> = quiver
            .vertex_orbits()
            .into_iter()
            .map(|v| VertexOrbit { d: v.len() as u32, vertices: v })
            .collect();
        let mut eorbits = Vec::new();
        for orbit in quiver.edge_orbits() {
            let s = orbit_of[quiver.edges[orbit[0]].s];
            let t = orbit_of[quiver.edges[orbit[0]].t];
            let start = orbit
                .iter()
                .position(|&h| quiver.edges[h].s == orbits[s].vertices[0])
                .expect("the source orbit is covered by the edge orbit");
            let edges: Vec<usize> = orbit[start..].iter().chain(&orbit[..start]).copied().collect();
            let th0 = quiver.edges[edges[0]].t;
            let tau = orbits[t].vertices.iter().position(|&v| v == th0).unwrap() as u32;
            eorbits.push(EdgeOrbit { o: edges.len() as u32, edges, s, t, tau });
        }
        let sub = |deg: u32| field.subfield_elements(e * deg).expect("degree divides the ambient degree");
        let vscalars = orbits.iter().map(|o| sub(o.d)).collect();
        let escalars = eorbits.iter().map(|o| sub(o.o)).collect();
        let mode = path_mode(quiver, &orbits, &eorbits);
        Ok(Arc::new(RepModel {
            quiver: quiver.clone(),
            q,
            field: field.clone(),
            orbits,
            eorbits,
            vscalars,
            escalars,
            mode,
            point_cap: DEFAULT_POINT_CAP,
            tables: Mutex::new(HashMap::new()),
            subspaces: Mutex::new(HashMap::new()),
            splits: Mutex::new(HashMap::new()),
            flag_memo: Mutex::new(HashMap::new()),
        }))
    }

    /// Same model with orbit compression switched off.
    pub fn uncompressed(&self) -> Arc<Self> {
        let mut m = RepModel::with_field(&self.quiver, self.q, &self.field).expect("already validated");
        Arc::get_mut(&mut m).unwrap().mode = KeyMode::Exact;
        m
    }

    pub fn with_point_cap(self: Arc<Self>, cap: u128) -> Arc<Self> {
        let mut m = RepModel::with_field(&self.quiver, self.q, &self.field).expect("already validated");
        let inner = Arc::get_mut(&mut m).unwrap();
        inner.mode = self.mode.clone();
        inner.point_cap = cap;
        m
    }

    pub fn quiver(&self) -> &QuiverWithAut {
        &self.quiver
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn field(&self) -> &FqField {
        &self.field
    }

    pub fn orbits(&self) -> &[VertexOrbit] {
        &self.orbits
    }

    pub fn edge_orbits(&self) -> &[EdgeOrbit] {
        &self.eorbits
    }

    pub fn rank(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_compressed(&self) -> bool {
        matches!(self.mode, KeyMode::Path { .. })
    }

    /// Index of the vertex orbit labelled by `name` (its first vertex).
    pub fn orbit_by_name(&self, name: &str) -> Result<usize> {
        self.orbits
            .iter()
            .position(|o| o.vertices.iter().any(|&v| self.quiver.vertices[v] == name))
            .ok_or_else(|| Error::InvalidInput(format!("no vertex named {name:?}")))
    }

    pub fn orbit_name(&self, i: usize) -> &str {
        &self.quiver.vertices[self.orbits[i].vertices[0]]
    }

    /// `#{h in H : s(h) in i, t(h) in j}`.
    pub fn arrows(&self, i: usize, j: usize) -> u64 {
        self.eorbits
            .iter()
            .filter(|e| e.s == i && e.t == j)
            .map(|e| e.o as u64)
            .sum()
    }

    /// `sum_h n_[s(h)] n_[t(h)]` in orbit-field units.
    pub fn dimension(&self, nu: &[usize]) -> u64 {
        self.eorbits
            .iter()
            .map(|e| e.o as u64 * (nu[e.s] * nu[e.t]) as u64)
            .sum()
    }

    /// Number of rational points of `E_V^{F_a}`.
    pub fn point_count(&self, nu: &[usize]) -> u128 {
        (self.q as u128).saturating_pow(self.dimension(nu) as u32)
    }

    fn check_nu(&self, nu: &[usize]) -> Result<()> {
        if nu.len() != self.rank() {
            return Err(Error::Mismatch(format!(
                "dimension vector of length {} for {} vertex orbits",
                nu.len(),
                self.rank()
            )));
        }
        Ok(())
    }

    pub(crate) fn frob(&self, x: FqElem, m: u32) -> FqElem {
        if m == 0 {
            x
        } else {
            self.field.pow(x, self.q.pow(m))
        }
    }

    /// Every point in a fixed mixed-radix order.
    pub fn enum_points(&self, nu: &[usize]) -> Result<Vec<RepPoint>> {
        self.check_nu(nu)?;
        cap_check("representation space", self.point_count(nu), self.point_cap)?;
        let shapes: Vec<(usize, usize)> = self.eorbits.iter().map(|e| (nu[e.s], nu[e.t])).collect();
        let slots: Vec<(usize, usize)> = shapes
            .iter()
            .enumerate()
            .flat_map(|(k, &(r, c))| (0..r * c).map(move |i| (k, i)))
            .collect();
        let mut idx = vec![0usize; slots.len()];
        let mut out = Vec::new();
        loop {
            let mut maps: Vec<FqMatrix> = shapes
                .iter()
                .map(|&(r, c)| FqMatrix::zeros(&self.field, r, c))
                .collect();
            for (slot, &(k, i)) in slots.iter().enumerate() {
                let cols = shapes[k].1;
                maps[k].set(i / cols, i % cols, self.escalars[k][idx[slot]]);
            }
            out.push(RepPoint { nu: nu.to_vec(), maps });
            let mut pos = 0;
            while pos < idx.len() {
                idx[pos] += 1;
                if idx[pos] < self.escalars[slots[pos].0].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == idx.len() {
                break;
            }
        }
        Ok(out)
    }

    /// All edge components `x_h`, `h in H`, of a stored point.
    pub fn expand(&self, x: &RepPoint) -> Vec<FqMatrix> {
        let mut out = vec![None; self.quiver.edges.len()];
        for (k, e) in self.eorbits.iter().enumerate() {
            for (m, &h) in e.edges.iter().enumerate() {
                out[h] = Some(x.maps[k].map(&self.field, |y| self.frob(y, m as u32)));
            }
        }
        out.into_iter().map(|m| m.unwrap()).collect()
    }

    pub fn key(&self, x: &RepPoint) -> Key {
        let mut key: Key = x.nu.iter().map(|&n| n as u16).collect();
        match &self.mode {
            KeyMode::Exact => {
                for m in &x.maps {
                    key.extend(m.data().iter().map(|e| e.0));
                }
            }
            KeyMode::Path { order, edge } => {
                for a in 0..order.len() {
                    let mut prod: Option<FqMatrix> = None;
                    for b in a + 1..order.len() {
                        let step = &x.maps[edge[b - 1]];
                        let next = match &prod {
                            None => step.clone(),
                            Some(p) => p.mul(step).expect("path shapes agree"),
                        };
                        key.push(next.rank() as u16);
                        prod = Some(next);
                    }
                }
            }
        }
        key
    }

    /// Class representatives at `nu`, cached.
    pub fn classes(&self, nu: &[usize]) -> Result<Arc<ClassTable>> {
        self.check_nu(nu)?;
        if let Some(t) = self.tables.lock().unwrap().get(nu) {
            return Ok(t.clone());
        }
        let reps = match &self.mode {
            KeyMode::Exact => self.enum_points(nu)?,
            KeyMode::Path { order, edge } => self.path_reps(nu, order, edge),
        };
        let mut index = HashMap::new();
        for (k, r) in reps.iter().enumerate() {
            index.insert(self.key(r), k);
        }
        let table = Arc::new(ClassTable { nu: nu.to_vec(), reps, index });
        self.tables.lock().unwrap().insert(nu.to_vec(), table.clone());
        Ok(table)
    }

    /// Class index of an arbitrary point.
    pub fn class_of(&self, x: &RepPoint) -> Result<usize> {
        let table = self.classes(&x.nu)?;
        table
            .lookup(&self.key(x))
            .ok_or_else(|| Error::Mismatch("point outside the class table".into()))
    }

    /// Direct sums of interval modules, one per multiplicity vector.
    fn path_reps(&self, nu: &[usize], order: &[usize], edge: &[usize]) -> Vec<RepPoint> {
        let n = order.len();
        let intervals: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
        let mut mults = Vec::new();
        let mut cur = vec![0usize; intervals.len()];
        let mut remaining: Vec<usize> = order.iter().map(|&v| nu[v]).collect();
        fn go(
            k: usize,
            intervals: &[(usize, usize)],
            cur: &mut Vec<usize>,
            remaining: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if k > 0 && (k == intervals.len() || intervals[k].0 != intervals[k - 1].0) {
                if remaining[intervals[k - 1].0] != 0 {
                    return;
                }
            }
            if k == intervals.len() {
                out.push(cur.clone());
                return;
            }
            let (a, b) = intervals[k];
            let cap = (a..=b).map(|m| remaining[m]).min().unwrap();
            for m in 0..=cap {
                cur[k] = m;
                for r in &mut remaining[a..=b] {
                    *r -= m;
                }
                go(k + 1, intervals, cur, remaining, out);
                for r in &mut remaining[a..=b] {
                    *r += m;
                }
            }
            cur[k] = 0;
        }
        go(0, &intervals, &mut cur, &mut remaining, &mut mults);
        mults
            .into_iter()
            .map(|mult| {
                // basis at each path position: (interval, copy) pairs
                let basis: Vec<Vec<(usize, usize)>> = (0..n)
                    .map(|m| {
                        intervals
                            .iter()
                            .enumerate()
                            .filter(|(_, &(a, b))| a <= m && m <= b)
                            .flat_map(|(k, _)| (0..mult[k]).map(move |c| (k, c)))
                            .collect()
                    })
                    .collect();
                let mut maps: Vec<FqMatrix> = self
                    .eorbits
                    .iter()
                    .map(|e| FqMatrix::zeros(&self.field, nu[e.s], nu[e.t]))
                    .collect();
                for m in 0..n.saturating_sub(1) {
                    let mat = &mut maps[edge[m]];
                    for (r, item) in basis[m].iter().enumerate() {
                        if let Some(c) = basis[m + 1].iter().position(|x| x == item) {
                            mat.set(r, c, FqElem::ONE);
                        }
                    }
                }
                RepPoint { nu: nu.to_vec(), maps }
            })
            .collect()
    }

    fn subspaces(&self, orbit: usize, n: usize, k: usize) -> Arc<Vec<Sub>> {
        let key = (orbit, n, k);
        if let Some(s) = self.subspaces.lock().unwrap().get(&key) {
            return s.clone();
        }
        let list: Vec<Sub> = enum_subspaces_over(&self.field, &self.vscalars[orbit], n, k)
            .into_iter()
            .map(|s| {
                let piv = s.pivots();
                let free = (0..n).filter(|c| !piv.contains(c)).collect();
                Sub { basis: s.basis().clone(), piv, free }
            })
            .collect();
        let list = Arc::new(list);
        self.subspaces.lock().unwrap().insert(key, list.clone());
        list
    }

    /// Sub and quotient blocks of edge orbit `k` for a choice of subspaces,
    /// or `None` if `U_s x` is not inside `F^tau(U_t)`.
    fn edge_blocks(&self, k: usize, x: &FqMatrix, us: &Sub, ut: &Sub) -> Option<(FqMatrix, FqMatrix)> {
        let f = &self.field;
        let e = &self.eorbits[k];
        let bt = if e.tau == 0 {
            ut.basis.clone()
        } else {
            ut.basis.map(f, |y| self.frob(y, e.tau))
        };
        let reduce = |row: &mut Vec<FqElem>| -> Vec<FqElem> {
            let coefs: Vec<FqElem> = ut.piv.iter().map(|&p| row[p]).collect();
            for (r, &c) in coefs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (col, y) in row.iter_mut().enumerate() {
                    let b = bt.get(r, col);
                    if !b.is_zero() {
                        *y = f.sub(*y, f.mul(c, b));
                    }
                }
            }
            coefs
        };
        let nt = x.cols();
        let mut sub = FqMatrix::zeros(f, us.basis.rows(), ut.basis.rows());
        for r in 0..us.basis.rows() {
            let mut row = vec![FqElem::ZERO; nt];
            for (c, &b) in us.basis.row(r).iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                for (j, y) in row.iter_mut().enumerate() {
                    *y = f.add(*y, f.mul(b, x.get(c, j)));
                }
            }
            let coefs = reduce(&mut row);
            if row.iter().any(|y| !y.is_zero()) {
                return None;
            }
            for (j, c) in coefs.into_iter().enumerate() {
                sub.set(r, j, c);
            }
        }
        let mut quot = FqMatrix::zeros(f, us.free.len(), ut.free.len());
        for (r, &c) in us.free.iter().enumerate() {
            let mut row = x.row(c).to_vec();
            reduce(&mut row);
            for (j, &fc) in ut.free.iter().enumerate() {
                quot.set(r, j, row[fc]);
            }
        }
        Some((sub, quot))
    }

    /// Visit every `x`-stable graded subspace with dimensions `dims`,
    /// passing the induced sub and quotient points.
    fn for_each_stable<F>(&self, x: &RepPoint, dims: &[usize], mut visit: F)
    where
        F: FnMut(&[&Sub], RepPoint, RepPoint),
    {
        let lists: Vec<Arc<Vec<Sub>>> = (0..self.rank())
            .map(|i| self.subspaces(i, x.nu[i], dims[i]))
            .collect();
        let mut chosen: Vec<&Sub> = Vec::with_capacity(self.rank());
        let mut blocks: Vec<Option<(FqMatrix, FqMatrix)>> = vec![None; self.eorbits.len()];
        let by_last: Vec<Vec<usize>> = (0..self.rank())
            .map(|i| {
                (0..self.eorbits.len())
                    .filter(|&k| self.eorbits[k].s.max(self.eorbits[k].t) == i)
                    .collect()
            })
            .collect();
        #[allow(clippy::too_many_arguments)]
        fn go<'a, F: FnMut(&[&Sub], RepPoint, RepPoint)>(
            m: &RepModel,
            x: &RepPoint,
            dims: &[usize],
            lists: &'a [Arc<Vec<Sub>>],
            by_last: &[Vec<usize>],
            chosen: &mut Vec<&'a Sub>,
            blocks: &mut Vec<Option<(FqMatrix, FqMatrix)>>,
            visit: &mut F,
        ) {
            let i = chosen.len();
            if i == lists.len() {
                let sub_nu = dims.to_vec();
                let quot_nu: Vec<usize> = x.nu.iter().zip(dims).map(|(n, k)| n - k).collect();
                let (subs, quots): (Vec<FqMatrix>, Vec<FqMatrix>) =
                    blocks.iter().map(|b| b.clone().unwrap()).unzip();
                visit(
                    chosen,
                    RepPoint { nu: sub_nu, maps: subs },
                    RepPoint { nu: quot_nu, maps: quots },
                );
                return;
            }
            'next: for u in lists[i].iter() {
                chosen.push(u);
                for &k in &by_last[i] {
                    let e = &m.eorbits[k];
                    match m.edge_blocks(k, &x.maps[k], chosen[e.s], chosen[e.t]) {
                        Some(b) => blocks[k] = Some(b),
                        None => {
                            chosen.pop();
                            continue 'next;
                        }
                    }
                }
                go(m, x, dims, lists, by_last, chosen, blocks, visit);
                chosen.pop();
            }
        }
        go(self, x, dims, &lists, &by_last, &mut chosen, &mut blocks, &mut visit);
    }

    /// Histogram of (quotient class, sub class) over the `x`-stable graded
    /// subspaces of dimension `sub_nu`, `x` the representative of `class`.
    pub fn split_hist(&self, nu: &[usize], class: usize, sub_nu: &[usize]) -> Result<Arc<SplitHist>> {
        self.check_nu(sub_nu)?;
        if sub_nu.iter().zip(nu).any(|(k, n)| k > n) {
            return Ok(Arc::new(Vec::new()));
        }
        let key = (nu.to_vec(), class, sub_nu.to_vec());
        if let Some(h) = self.splits.lock().unwrap().get(&key) {
            return Ok(h.clone());
        }
        let table = self.classes(nu)?;
        let quot_nu: Vec<usize> = nu.iter().zip(sub_nu).map(|(n, k)| n - k).collect();
        let sub_table = self.classes(sub_nu)?;
        let quot_table = self.classes(&quot_nu)?;
        let mut counts: HashMap<(usize, usize), u64> = HashMap::new();
        let mut failure = None;
        self.for_each_stable(&table.reps[class], sub_nu, |_, sub, quot| {
            match (quot_table.lookup(&self.key(&quot)), sub_table.lookup(&self.key(&sub))) {
                (Some(qc), Some(sc)) => *counts.entry((qc, sc)).or_default() += 1,
                _ => failure = Some(()),
            }
        });
        if failure.is_some() {
            return Err(Error::Mismatch("induced point outside the class table".into()));
        }
        let mut hist: SplitHist = counts.into_iter().map(|((a, b), c)| (a, b, c)).collect();
        hist.sort_unstable();
        let hist = Arc::new(hist);
        self.splits.lock().unwrap().insert(key, hist.clone());
        Ok(hist)
    }

    /// The `x`-stable graded subspaces themselves, as RREF bases per orbit.
    pub fn stable_subspaces(&self, x: &RepPoint, sub_nu: &[usize]) -> Vec<Vec<FqMatrix>> {
        let mut out = Vec::new();
        self.for_each_stable(x, sub_nu, |chosen, _, _| {
            out.push(chosen.iter().map(|s| s.basis.clone()).collect())
        });
        out
    }

    /// The induced sub and quotient points for a stable graded subspace.
    pub fn restrict(&self, x: &RepPoint, bases: &[FqMatrix]) -> Option<(RepPoint, RepPoint)> {
        let subs: Vec<Sub> = bases
            .iter()
            .map(|b| {
                let s = crate::flags::Subspace::span(b);
                let piv = s.pivots();
                let free = (0..b.cols()).filter(|c| !piv.contains(c)).collect();
                Sub { basis: s.basis().clone(), piv, free }
            })
            .collect();
        let mut sub_maps = Vec::new();
        let mut quot_maps = Vec::new();
        for (k, e) in self.eorbits.iter().enumerate() {
            let (s, q) = self.edge_blocks(k, &x.maps[k], &subs[e.s], &subs[e.t])?;
            sub_maps.push(s);
            quot_maps.push(q);
        }
        let sub_nu: Vec<usize> = subs.iter().map(|s| s.basis.rows()).collect();
        let quot_nu = x.nu.iter().zip(&sub_nu).map(|(n, k)| n - k).collect();
        Some((RepPoint { nu: sub_nu, maps: sub_maps }, RepPoint { nu: quot_nu, maps: quot_maps }))
    }

    /// Act by `g = (g_i)`, `g_i` invertible over `F_{q^{d_i}}`:
    /// `X -> g_s^{-1} X F^tau(g_t)`.
    pub fn act(&self, g: &[FqMatrix], x: &RepPoint) -> Result<RepPoint> {
        let mut maps = Vec::new();
        for (k, e) in self.eorbits.iter().enumerate() {
            let gs_inv = g[e.s]
                .inverse()
                .ok_or_else(|| Error::InvalidInput("group element is singular".into()))?;
            let gt = g[e.t].map(&self.field, |y| self.frob(y, e.tau));
            maps.push(gs_inv.mul(&x.maps[k])?.mul(&gt)?);
        }
        Ok(RepPoint { nu: x.nu.clone(), maps })
    }

    pub fn vertex_scalars(&self, i: usize) -> &[FqElem] {
        &self.vscalars[i]
    }

    pub fn edge_scalars(&self, k: usize) -> &[FqElem] {
        &self.escalars[k]
    }

    pub fn point_to_json(&self, x: &RepPoint) -> serde_json::Value {
        serde_json::json!({
            "nu": x.nu,
            "maps": x.maps.iter().map(|m| m.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// Least common multiple of all vertex and edge orbit lengths.
pub fn lacing(quiver: &QuiverWithAut) -> u32 {
    quiver.order() as u32
}

fn path_mode(quiver: &QuiverWithAut, orbits: &[VertexOrbit], eorbits: &[EdgeOrbit]) -> KeyMode {
    let n = orbits.len();
    if !quiver.is_trivial() || eorbits.len() + 1 != n {
        return KeyMode::Exact;
    }
    let mut out_edge = vec![None; n];
    let mut indeg = vec![0; n];
    for (k, e) in eorbits.iter().enumerate() {
        if out_edge[e.s].is_some() {
            return KeyMode::Exact;
        }
        out_edge[e.s] = Some(k);
        indeg[e.t] += 1;
    }
    let Some(start) = (0..n).find(|&v| indeg[v] == 0) else {
        return KeyMode::Exact;
    };
    if indeg.iter().any(|&d| d > 1) {
        return KeyMode::Exact;
    }
    let mut order = vec![start];
    let mut edge = Vec::new();
    while let Some(k) = out_edge[*order.last().unwrap()] {
        edge.push(k);
        order.push(eorbits[k].t);
        if order.len() > n {
            return KeyMode::Exact;
        }
    }
    if order.len() != n {
        return KeyMode::Exact;
    }
    KeyMode::Path { order, edge }
}

/// `F_{q^{l D}}` for a quiver and level `l`.
pub fn ambient_field(quiver: &QuiverWithAut, q: u64, ell: u32) -> Result<FqField> {
    let (p, e) = prime_power(q).ok_or_else(|| Error::InvalidInput(format!("{q} is not a prime power")))?;
    let deg = e * ell * lacing(quiver);
    make_field_capped(p, deg, MAX_FIELD_ORDER)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hall::quiver::preset;

    #[test]
    fn point_counts() {
        let a1 = RepModel::new(&preset("A1").unwrap(), 2).unwrap();
        assert_eq!(a1.enum_points(&[3]).unwrap().len(), 1);
        let a2 = RepModel::new(&preset("A2").unwrap(), 2).unwrap();
        assert_eq!(a2.enum_points(&[1, 1]).unwrap().len(), 2);
        let b2 = RepModel::new(&preset("A3-folded").unwrap(), 2).unwrap();
        assert_eq!(b2.enum_points(&[1, 1]).unwrap().len(), 4);
        assert_eq!(b2.enum_points(&[1, 2]).unwrap().len(), 16);
        let a3 = RepModel::new(&preset("A3").unwrap(), 3).unwrap();
        assert_eq!(a3.enum_points(&[1, 2, 1]).unwrap().len(), 81);
        for (m, nu) in [(&a2, vec![2, 1]), (&b2, vec![1, 2]), (&a3, vec![1, 2, 1])] {
            assert_eq!(m.enum_points(&nu).unwrap().len() as u128, m.point_count(&nu));
        }
    }

    /// All `(x_h)` over `F_{q^D}` with `x_{a(h)} = F(x_h)`, by brute force.
    fn fixed_points_brute(m: &RepModel, nu: &[usize]) -> Vec<Vec<FqMatrix>> {
        let quiver = m.quiver();
        let orbit = quiver.vertex_orbit_index();
        let f = m.field().clone();
        let shapes: Vec<(usize, usize)> = quiver
            .edges
            .iter()
            .map(|e| (nu[orbit[e.s]], nu[orbit[e.t]]))
            .collect();
        let total: usize = shapes.iter().map(|(r, c)| r * c).sum();
        let all: Vec<FqElem> = f.elements().collect();
        let mut out = Vec::new();
        let mut idx = vec![0usize; total];
        loop {
            let mut pos = 0;
            let mats: Vec<FqMatrix> = shapes
                .iter()
                .map(|&(r, c)| {
                    let data = idx[pos..pos + r * c].iter().map(|&i| all[i]).collect();
                    pos += r * c;
                    FqMatrix::from_rows(&f, r, c, data)
                })
                .collect();
            let fixed = (0..mats.len()).all(|h| {
                let ah = quiver.automorphism.edge_perm[h];
                mats[ah] == mats[h].map(&f, |y| m.frob(y, 1))
            });
            if fixed {
                out.push(mats);
            }
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < all.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
        out
    }

    #[test]
    fn stored_points_are_the_fixed_points() {
        for (name, q, nu) in [("A3-folded", 2, vec![1, 1]), ("A2", 3, vec![1, 1]), ("G2-folded", 2, vec![1, 1])] {
            let m = RepModel::new(&preset(name).unwrap(), q).unwrap();
            let mut ours: Vec<Vec<FqMatrix>> = m.enum_points(&nu).unwrap().iter().map(|x| m.expand(x)).collect();
            let mut brute = fixed_points_brute(&m, &nu);
            let sort = |v: &mut Vec<Vec<FqMatrix>>| v.sort_by_key(|ms| ms.iter().flat_map(|x| x.data().iter().map(|e| e.0)).collect::<Vec<_>>());
            sort(&mut ours);
            sort(&mut brute);
            assert_eq!(ours, brute, "{name}");
            assert_eq!(ours.len() as u128, m.point_count(&nu));
        }
    }

    #[test]
    fn path_classes_match_point_orbits() {
        let m = RepModel::new(&preset("A3").unwrap(), 2).unwrap();
        assert!(m.is_compressed());
        let nu = [1, 2, 1];
        let table = m.classes(&nu).unwrap();
        let mut seen = std::collections::HashSet::new();
        for x in m.enum_points(&nu).unwrap() {
            seen.insert(m.class_of(&x).unwrap());
        }
        assert_eq!(seen.len(), table.len());
        // interval multiplicities for (1,2,1)
        assert_eq!(table.len(), 5);
    }

    #[test]
    fn stable_subspaces_and_blocks() {
        let m = RepModel::new(&preset("A2").unwrap(), 2).unwrap().uncompressed();
        let pts = m.enum_points(&[1, 1]).unwrap();
        let iso = pts.iter().find(|x| !x.maps[0].is_zero()).unwrap();
        // subreps of 1 -> 1 of dims (1,0): none when the map is nonzero
        assert!(m.stable_subspaces(iso, &[1, 0]).is_empty());
        assert_eq!(m.stable_subspaces(iso, &[0, 1]).len(), 1);
        let zero = pts.iter().find(|x| x.maps[0].is_zero()).unwrap();
        assert_eq!(m.stable_subspaces(zero, &[1, 0]).len(), 1);
    }
}
