//! Graphs with automorphism, admissible orientations and Cartan data.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An oriented graph `(J, H)` with an automorphism `a` acting on vertices
/// and edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverWithAut {
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
    pub automorphism: Automorphism,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub s: usize,
    pub t: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Automorphism {
    pub vertex_perm: Vec<usize>,
    pub edge_perm: Vec<usize>,
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

fn orbits_of(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            orbit.push(x);
            x = p[x];
        }
        out.push(orbit);
    }
    out
}

impl QuiverWithAut {
    /// A quiver with trivial automorphism.
    pub fn plain(names: &[&str], edges: &[(usize, usize)]) -> Result<Self> {
        let q = QuiverWithAut {
            vertices: names.iter().map(|s| s.to_string()).collect(),
            edges: edges.iter().map(|&(s, t)| Edge { s, t }).collect(),
            automorphism: Automorphism {
                vertex_perm: (0..names.len()).collect(),
                edge_perm: (0..edges.len()).collect(),
            },
        };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        let nv = self.vertices.len();
        let a = &self.automorphism;
        if a.vertex_perm.len() != nv || !is_permutation(&a.vertex_perm) {
            return Err(Error::Quiver("vertex_perm is not a permutation of the vertices".into()));
        }
        if a.edge_perm.len() != self.edges.len() || !is_permutation(&a.edge_perm) {
            return Err(Error::Quiver("edge_perm is not a permutation of the edges".into()));
        }
        for (h, e) in self.edges.iter().enumerate() {
            if e.s >= nv || e.t >= nv {
                return Err(Error::Quiver(format!("edge {h} has an endpoint out of range")));
            }
            if e.s == e.t {
                return Err(Error::Quiver(format!("edge {h} is a loop")));
            }
            let ah = &self.edges[a.edge_perm[h]];
            if ah.s != a.vertex_perm[e.s] {
                return Err(Error::Quiver(format!("s(a(h)) = a(s(h)) fails for edge {h}")));
            }
            if ah.t != a.vertex_perm[e.t] {
                return Err(Error::Quiver(format!("t(a(h)) = a(t(h)) fails for edge {h}")));
            }
        }
        let orbit = self.vertex_orbit_index();
        for (h, e) in self.edges.iter().enumerate() {
            if orbit[e.s] == orbit[e.t] {
                return Err(Error::Quiver(format!("edge {h} joins two vertices of one orbit")));
            }
        }
        Ok(())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let q: QuiverWithAut = serde_json::from_str(s)?;
        q.validate()?;
        Ok(q)
    }

    /// Vertex orbits, each listed from its least vertex along `a`.
    pub fn vertex_orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(&self.automorphism.vertex_perm)
    }

    pub fn edge_orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(&self.automorphism.edge_perm)
    }

    /// Orbit number of each vertex.
    pub fn vertex_orbit_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.vertices.len()];
        for (k, o) in self.vertex_orbits().iter().enumerate() {
            for &v in o {
                idx[v] = k;
            }
        }
        idx
    }

    /// Order of the automorphism.
    pub fn order(&self) -> u64 {
        self.vertex_orbits()
            .iter()
            .chain(self.edge_orbits().iter())
            .fold(1u64, |acc, o| acc.lcm(&(o.len() as u64)))
    }

    pub fn is_trivial(&self) -> bool {
        self.automorphism.vertex_perm.iter().enumerate().all(|(i, &j)| i == j)
            && self.automorphism.edge_perm.iter().enumerate().all(|(i, &j)| i == j)
    }
}

/// A symmetric pairing on a finite index set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanDatum {
    pub dot: Vec<Vec<i64>>,
}

impl CartanDatum {
    pub fn new(dot: Vec<Vec<i64>>) -> Result<Self> {
        let c = CartanDatum { dot };
        c.validate()?;
        Ok(c)
    }

    pub fn rank(&self) -> usize {
        self.dot.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.dot.len();
        for (i, row) in self.dot.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Cartan(format!("row {i} has length {} instead of {n}", row.len())));
            }
            let ii = row[i];
            if ii <= 0 || ii % 2 != 0 {
                return Err(Error::Cartan(format!("i.i = {ii} at i = {i} is not in {{2, 4, 6, ...}}")));
            }
            for j in 0..n {
                if self.dot[i][j] != self.dot[j][i] {
                    return Err(Error::Cartan(format!("not symmetric at ({i}, {j})")));
                }
                if i != j {
                    let ij = self.dot[i][j];
                    if ij > 0 || (2 * ij) % ii != 0 {
                        return Err(Error::Cartan(format!(
                            "2 (i.j)/(i.i) = 2*{ij}/{ii} is not a nonpositive integer at ({i}, {j})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `d_i = (i.i)/2`.
    pub fn d(&self, i: usize) -> i64 {
        self.dot[i][i] / 2
    }

    /// `a_ij = 2 (i.j)/(i.i)`.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        2 * self.dot[i][j] / self.dot[i][i]
    }
}

/// Orbits become indices; `i.i = 2|i|`, `i.j = -#{edges joining i and j}`.
pub fn cartan_from_quiver(q: &QuiverWithAut) -> Result<CartanDatum> {
    q.validate()?;
    let orbits = q.vertex_orbits();
    let idx = q.vertex_orbit_index();
    let n = orbits.len();
    let mut dot = vec![vec![0i64; n]; n];
    for (i, o) in orbits.iter().enumerate() {
        dot[i][i] = 2 * o.len() as i64;
    }
    for e in &q.edges {
        let (i, j) = (idx[e.s], idx[e.t]);
        dot[i][j] -= 1;
        dot[j][i] -= 1;
    }
    CartanDatum::new(dot)
}

/// The standard unfolding: `d_i` vertices per index with cyclic `a`, and
/// `(-i.j)/lcm(d_i, d_j)` copies of each `a`-orbit on `D_i x D_j`, oriented
/// from the smaller index to the larger.
pub fn quiver_from_cartan(c: &CartanDatum) -> Result<QuiverWithAut> {
    c.validate()?;
    let n = c.rank();
    let mut vertices = Vec::new();
    let mut first = Vec::with_capacity(n);
    for i in 0..n {
        first.push(vertices.len());
        for k in 0..c.d(i) {
            vertices.push(format!("{i}.{k}"));
        }
    }
    let vertex_perm: Vec<usize> = (0..n)
        .flat_map(|i| {
            let d = c.d(i) as usize;
            let base = first[i];
            (0..d).map(move |k| base + (k + 1) % d)
        })
        .collect();
    let mut edges = Vec::new();
    let mut edge_perm = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if c.dot[i][j] >= 0 {
                continue;
            }
            let (di, dj) = (c.d(i), c.d(j));
            let l = di.lcm(&dj);
            if (-c.dot[i][j]) % l != 0 {
                return Err(Error::Cartan(format!(
                    "lcm(d_{i}, d_{j}) = {l} does not divide -i.j = {}",
                    -c.dot[i][j]
                )));
            }
            for _copy in 0..(-c.dot[i][j]) / l {
                let base = edges.len();
                for m in 0..l {
                    edges.push(Edge {
                        s: first[i] + (m % di) as usize,
                        t: first[j] + (m % dj) as usize,
                    });
                    edge_perm.push(base + ((m + 1) % l) as usize);
                }
            }
        }
    }
    let q = QuiverWithAut {
        vertices,
        edges,
        automorphism: Automorphism { vertex_perm, edge_perm },
    };
    q.validate()?;
    Ok(q)
}

/// Built-in quivers by name: `A1`, `A2`, `A3`, `A1xA1`, `A3-folded`,
/// `G2-folded`.
pub fn preset(name: &str) -> Result<QuiverWithAut> {
    match name {
        "A1" => QuiverWithAut::plain(&["1"], &[]),
        "A1xA1" => QuiverWithAut::plain(&["1", "2"], &[]),
        "A2" => QuiverWithAut::plain(&["1", "2"], &[(0, 1)]),
        "A3" => QuiverWithAut::plain(&["1", "2", "3"], &[(0, 1), (1, 2)]),
        "A3-folded" => {
            let q = QuiverWithAut {
                vertices: vec!["1".into(), "2".into(), "3".into()],
                edges: vec![Edge { s: 0, t: 1 }, Edge { s: 2, t: 1 }],
                automorphism: Automorphism {
                    vertex_perm: vec![2, 1, 0],
                    edge_perm: vec![1, 0],
                },
            };
            q.validate()?;
            Ok(q)
        }
        "G2-folded" => quiver_from_cartan(&CartanDatum::new(vec![vec![6, -3], vec![-3, 2]])?),
        other => Err(Error::InvalidInput(format!("unknown quiver preset {other:?}"))),
    }
}

pub const PRESETS: [&str; 6] = ["A1", "A1xA1", "A2", "A3", "A3-folded", "G2-folded"];
