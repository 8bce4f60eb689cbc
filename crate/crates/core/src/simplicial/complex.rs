use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use serde::{Serialize, Serializer};

use super::Vertex;
use crate::error::{Error, Result};
use crate::polyring::IntPolynomial;

/// Finite abstract simplicial complex given by its facets.
///
/// Vertices are kept sorted in canonical order; facets are strictly
/// increasing index lists into the vertex list, form an antichain, and are
/// sorted. Two complexes built from the same faces therefore compare equal.
/// The complex `{∅}` has a single empty facet; the void complex has none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<Vertex>,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `facets`; extra isolated `vertices` are
    /// kept as singleton faces.
    pub fn new(vertices: Vec<Vertex>, facets: Vec<Vec<Vertex>>) -> Self {
        let mut all: Vec<Vertex> = vertices;
        all.extend(facets.iter().flatten().cloned());
        all.sort();
        all.dedup();
        let index: BTreeMap<&Vertex, usize> = all.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut idx: Vec<Vec<usize>> = facets
            .iter()
            .map(|f| {
                let mut s: Vec<usize> = f.iter().map(|v| index[v]).collect();
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        let covered: HashSet<usize> = idx.iter().flatten().copied().collect();
        idx.extend((0..all.len()).filter(|i| !covered.contains(i)).map(|i| vec![i]));
        SimplicialComplex { facets: antichain(idx), vertices: all }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Facets as index lists into [`vertices`](Self::vertices).
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn facet_vertices(&self) -> impl Iterator<Item = Vec<&Vertex>> {
        self.facets.iter().map(|f| f.iter().map(|&i| &self.vertices[i]).collect())
    }

    pub fn index_of(&self, v: &Vertex) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    /// Dimension, `-1` for `{∅}`, `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Membership of a sorted index set.
    pub fn contains_face(&self, face: &[usize]) -> bool {
        self.facets.iter().any(|f| is_subset(face, f))
    }

    /// Every face including the empty one.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        for f in &self.facets {
            for mask in 0u64..(1u64 << f.len()) {
                let face: Vec<usize> =
                    f.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
                seen.insert(face);
            }
        }
        let mut faces: Vec<Vec<usize>> = seen.into_iter().collect();
        faces.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        faces
    }

    /// `(f_{-1}, f_0, ..., f_{d})`.
    pub fn f_vector(&self) -> Vec<u64> {
        let Some(d) = self.dim() else {
            return Vec::new();
        };
        let mut f = vec![0u64; (d + 2) as usize];
        for face in self.faces() {
            f[face.len()] += 1;
        }
        f
    }

    /// `h(Δ, t) = sum_i f_{i-1} t^i (1 - t)^(n - i)` with `n = dim + 1`.
    pub fn h_polynomial(&self) -> Result<IntPolynomial> {
        if self.facets.is_empty() {
            return Err(Error::domain("h-polynomial of the void complex"));
        }
        if !self.is_pure() {
            return Err(Error::domain("h-polynomial requires a pure complex"));
        }
        let f = self.f_vector();
        let n = f.len() - 1;
        let one_minus_t = IntPolynomial::from_i64s(&[1, -1]);
        Ok((0..=n).map(|i| one_minus_t.pow((n - i) as u32).shift(i).scale(&f[i].into())).sum())
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self
            .facets
            .iter()
            .flat_map(|f| f.iter().enumerate().flat_map(move |(i, &a)| f[i + 1..].iter().map(move |&b| (a, b))))
            .collect();
        e.sort_unstable();
        e.dedup();
        e
    }

    /// Every clique of the 1-skeleton is a face.
    pub fn is_flag(&self) -> bool {
        let mut adj = vec![vec![false; self.vertices.len()]; self.vertices.len()];
        for (a, b) in self.edges() {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        maximal_cliques(&adj).iter().all(|c| self.contains_face(c))
    }

    /// Every codimension-one face of a pure complex lies in exactly two facets.
    pub fn ridges_in_two_facets(&self) -> bool {
        if !self.is_pure() {
            return false;
        }
        let mut count: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for f in &self.facets {
            for skip in 0..f.len() {
                let ridge: Vec<usize> = f.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                *count.entry(ridge).or_default() += 1;
            }
        }
        count.values().all(|&c| c == 2)
    }

    /// `sum_{i >= 0} (-1)^i f_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().iter().skip(1).enumerate().map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
    }

    /// Subcomplex of faces all of whose vertices satisfy `keep`.
    pub fn induced_subcomplex(&self, keep: impl Fn(&Vertex) -> bool) -> SimplicialComplex {
        let vertices: Vec<Vertex> = self.vertices.iter().filter(|v| keep(v)).cloned().collect();
        let facets: Vec<Vec<Vertex>> = self
            .facets
            .iter()
            .map(|f| f.iter().map(|&i| &self.vertices[i]).filter(|v| keep(v)).cloned().collect())
            .collect();
        SimplicialComplex::new(vertices, facets)
    }

    /// One facet per line, vertices as canonical tokens separated by spaces.
    pub fn to_facet_text(&self) -> String {
        let mut out = String::new();
        for f in self.facet_vertices() {
            let tokens: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            writeln!(out, "{}", tokens.join(" ")).expect("writing to a String");
        }
        out
    }
}

#[derive(Serialize)]
struct ComplexRepr {
    vertices: Vec<String>,
    facets: Vec<Vec<String>>,
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexRepr {
            vertices: self.vertices.iter().map(|v| v.to_string()).collect(),
            facets: self.facet_vertices().map(|f| f.iter().map(|v| v.to_string()).collect()).collect(),
        }
        .serialize(s)
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for x in a {
        while j < b.len() && b[j] < *x {
            j += 1;
        }
        if j == b.len() || b[j] != *x {
            return false;
        }
    }
    true
}

/// Keeps the inclusion-maximal sets, sorted and deduplicated.
fn antichain(mut sets: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<Vec<usize>> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| is_subset(&s, k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// All maximal cliques of a graph given by a symmetric adjacency matrix
/// (Bron–Kerbosch with pivoting). The empty graph has the single clique `∅`.
pub(crate) fn maximal_cliques(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    fn expand(adj: &[Vec<bool>], r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() {
            if x.is_empty() {
                let mut c = r.clone();
                c.sort_unstable();
                out.push(c);
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| adj[u][v]).count())
            .expect("p is nonempty");
        let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
        let (mut p, mut x) = (p, x);
        for v in candidates {
            r.push(v);
            let np = p.iter().copied().filter(|&u| adj[v][u]).collect();
            let nx = x.iter().copied().filter(|&u| adj[v][u]).collect();
            expand(adj, r, np, nx, out);
            r.pop();
            p.retain(|&u| u != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    expand(adj, &mut Vec::new(), (0..adj.len()).collect(), Vec::new(), &mut out);
    out.sort();
    out
}

/// `sum_i f_{i-1} t^i (1-t)^{n-i}` computed via the binomial form of the
/// inverse transform, used as an independent check in tests.
#[cfg(test)]
pub(crate) fn h_from_f_binomial(f: &[u64]) -> IntPolynomial {
    use crate::util::binomial;
    let n = f.len() - 1;
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = num_bigint::BigInt::from(0);
        for (i, &fi) in f.iter().enumerate().take(k + 1) {
            let term = binomial(n - i, k - i) * num_bigint::BigInt::from(fi);
            if (k - i) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        coeffs.push(acc);
    }
    IntPolynomial::new(coeffs)
}
