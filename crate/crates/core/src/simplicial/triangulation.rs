use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;

use super::complex::maximal_cliques;
use super::{SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::polyring::IntPolynomial;

/// The simplex `2^V` on the ground set, vertices `Base(i)`.
pub fn simplex_on(ground: &[usize]) -> SimplicialComplex {
    SimplicialComplex::new(vec![], vec![ground.iter().map(|&i| Vertex::Base(i)).collect()])
}

/// Barycentric subdivision of the simplex on the ground set: chains of nonempty subsets.
pub fn barycentric_on(ground: &[usize]) -> SimplicialComplex {
    let facets = ground
        .iter()
        .copied()
        .permutations(ground.len())
        .map(|p| (1..=p.len()).map(|k| Vertex::chain(p[..k].iter().copied())).collect())
        .collect();
    SimplicialComplex::new(vec![], facets)
}

pub fn simplex(n: usize) -> SimplicialComplex {
    simplex_on(&(1..=n).collect::<Vec<_>>())
}

/// `Gamma_n`.
pub fn barycentric_subdivision(n: usize) -> SimplicialComplex {
    barycentric_on(&(1..=n).collect::<Vec<_>>())
}

/// `Gamma_{n,r} = esd_r(Gamma_n)`.
pub fn gamma_nr(n: usize, r: usize) -> Result<SimplicialComplex> {
    edgewise_subdivision(&barycentric_subdivision(n), r)
}

fn weak_compositions(r: usize, d: usize) -> Vec<Vec<usize>> {
    if d == 0 {
        return if r == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=r).rev() {
        for mut rest in weak_compositions(r - first, d - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Facets of `esd_r` of a `(d-1)`-simplex, as lists of compositions of `r` into `d` parts.
fn esd_simplex_facets(r: usize, d: usize) -> Vec<Vec<Vec<usize>>> {
    let comps = weak_compositions(r, d);
    let iota: Vec<Vec<i64>> = comps
        .iter()
        .map(|c| {
            c.iter()
                .scan(0i64, |s, &x| {
                    *s += x as i64;
                    Some(*s)
                })
                .collect()
        })
        .collect();
    let compatible = |a: &[i64], b: &[i64]| {
        let diff: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        diff.iter().all(|&x| x == 0 || x == 1) || diff.iter().all(|&x| x == 0 || x == -1)
    };
    let m = comps.len();
    let adj: Vec<Vec<bool>> =
        (0..m).map(|i| (0..m).map(|j| i != j && compatible(&iota[i], &iota[j])).collect()).collect();
    maximal_cliques(&adj).into_iter().map(|clique| clique.into_iter().map(|i| comps[i].clone()).collect()).collect()
}

/// The `r`-fold edgewise subdivision, using the canonical vertex order of `delta`.
///
/// Vertices are the maps `f: V -> N` summing to `r` with support a face; a
/// set of them is a face iff the union of supports is a face and all pairwise
/// differences of the prefix-sum vectors lie in `{0,1}^V` up to sign.
pub fn edgewise_subdivision(delta: &SimplicialComplex, r: usize) -> Result<SimplicialComplex> {
    if r == 0 {
        return Err(Error::domain("edgewise subdivision needs r >= 1"));
    }
    let mut by_dim: Vec<Option<Vec<Vec<Vec<usize>>>>> = Vec::new();
    let mut facets = Vec::new();
    for f in delta.facet_vertices() {
        let d = f.len();
        if by_dim.len() <= d {
            by_dim.resize(d + 1, None);
        }
        let local = by_dim[d].get_or_insert_with(|| esd_simplex_facets(r, d));
        for clique in local.iter() {
            facets.push(
                clique
                    .iter()
                    .map(|c| Vertex::mult(f.iter().map(|&v| v.clone()).zip(c.iter().copied())))
                    .collect::<Vec<_>>(),
            );
        }
    }
    Ok(SimplicialComplex::new(vec![], facets))
}

/// Builds the triangulation on an arbitrary face of the base simplex.
pub type RestrictionOracle = Arc<dyn Fn(&[usize]) -> Result<SimplicialComplex> + Send + Sync>;

/// A triangulation family that can be rebuilt on any face of the simplex.
#[derive(Clone)]
pub enum Family {
    Simplex,
    Barycentric,
    /// `esd_r(2^V)`.
    EdgewiseSimplex(usize),
    /// `esd_r(Gamma_V)`.
    EdgewiseBarycentric(usize),
    Custom(RestrictionOracle),
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Simplex => write!(f, "Simplex"),
            Family::Barycentric => write!(f, "Barycentric"),
            Family::EdgewiseSimplex(r) => write!(f, "EdgewiseSimplex({r})"),
            Family::EdgewiseBarycentric(r) => write!(f, "EdgewiseBarycentric({r})"),
            Family::Custom(_) => write!(f, "Custom"),
        }
    }
}

impl Family {
    pub fn build(&self, ground: &[usize]) -> Result<SimplicialComplex> {
        match self {
            Family::Simplex => Ok(simplex_on(ground)),
            Family::Barycentric => Ok(barycentric_on(ground)),
            Family::EdgewiseSimplex(r) => edgewise_subdivision(&simplex_on(ground), *r),
            Family::EdgewiseBarycentric(r) => edgewise_subdivision(&barycentric_on(ground), *r),
            Family::Custom(oracle) => oracle(ground),
        }
    }
}

/// A triangulation of the simplex on `[n]` together with its restrictions to faces.
#[derive(Clone, Debug)]
pub struct Triangulation {
    n: usize,
    family: Family,
    complex: SimplicialComplex,
}

impl Triangulation {
    pub fn new(n: usize, family: Family) -> Result<Self> {
        let complex = family.build(&(1..=n).collect::<Vec<_>>())?;
        Ok(Triangulation { n, family, complex })
    }

    pub fn simplex(n: usize) -> Self {
        Self::new(n, Family::Simplex).expect("infallible")
    }

    pub fn barycentric(n: usize) -> Self {
        Self::new(n, Family::Barycentric).expect("infallible")
    }

    /// `Gamma_{n,r}`.
    pub fn gamma_nr(n: usize, r: usize) -> Result<Self> {
        Self::new(n, Family::EdgewiseBarycentric(r))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    fn check_face(&self, face: &[usize]) -> Result<Vec<usize>> {
        let set: BTreeSet<usize> = face.iter().copied().collect();
        if set.iter().any(|&i| i == 0 || i > self.n) {
            return Err(Error::domain(format!("{face:?} is not a subset of [{}]", self.n)));
        }
        Ok(set.into_iter().collect())
    }

    /// `Gamma_F`, rebuilt from the family on the face `F` with the original labels.
    pub fn restriction(&self, face: &[usize]) -> Result<SimplicialComplex> {
        let face = self.check_face(face)?;
        self.family.build(&face)
    }

    /// `Gamma_F` as the subcomplex of faces whose carriers lie in `F`.
    pub fn restriction_by_carrier(&self, face: &[usize]) -> Result<SimplicialComplex> {
        let face: BTreeSet<usize> = self.check_face(face)?.into_iter().collect();
        Ok(self.complex.induced_subcomplex(|v| v.carrier().is_subset(&face)))
    }

    fn subsets(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0u32..(1 << self.n)).map(move |mask| (1..=self.n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
    }

    /// `l_V(Gamma, t) = sum_{F ⊆ V} (-1)^(n - |F|) h(Gamma_F, t)`.
    pub fn local_h(&self) -> Result<IntPolynomial> {
        self.local_h_of_face(&(1..=self.n).collect::<Vec<_>>())
    }

    /// `l_F(Gamma_F, t)`, the local h-polynomial of the restriction to `F`.
    pub fn local_h_of_face(&self, face: &[usize]) -> Result<IntPolynomial> {
        let face = self.check_face(face)?;
        let k = face.len();
        let mut acc = IntPolynomial::zero();
        for mask in 0u32..(1 << k) {
            let sub: Vec<usize> = (0..k).filter(|j| mask >> j & 1 == 1).map(|j| face[j]).collect();
            let h = self.family.build(&sub)?.h_polynomial()?;
            if (k - sub.len()).is_multiple_of(2) {
                acc += &h;
            } else {
                acc -= &h;
            }
        }
        Ok(acc)
    }

    /// `Delta(Gamma)`: the faces `{u_i : i ∈ I} ∪ G` with `G ∈ Gamma_{V \ I}`.
    pub fn delta_of(&self) -> Result<SimplicialComplex> {
        let mut facets = Vec::new();
        for face in self.subsets() {
            let antipodes: Vec<Vertex> = (1..=self.n).filter(|i| !face.contains(i)).map(Vertex::Antipode).collect();
            for g in self.restriction(&face)?.facet_vertices() {
                let mut facet = antipodes.clone();
                facet.extend(g.into_iter().cloned());
                facets.push(facet);
            }
        }
        Ok(SimplicialComplex::new(vec![], facets))
    }

    /// `sum_{F ⊆ V} t^(n - |F|) h(Gamma_F, t)`.
    pub fn delta_h_by_restrictions(&self) -> Result<IntPolynomial> {
        let mut acc = IntPolynomial::zero();
        for face in self.subsets() {
            acc += &self.restriction(&face)?.h_polynomial()?.shift(self.n - face.len());
        }
        Ok(acc)
    }

    /// `sum_{F ⊆ V} l_F(Gamma_F, t)`, which equals `h(Gamma, t)`.
    pub fn h_by_local_h(&self) -> Result<IntPolynomial> {
        let mut acc = IntPolynomial::zero();
        for face in self.subsets() {
            acc += &self.local_h_of_face(&face)?;
        }
        Ok(acc)
    }
}
