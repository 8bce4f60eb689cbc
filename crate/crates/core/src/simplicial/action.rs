use std::collections::BTreeSet;

use super::SimplicialComplex;
use crate::error::{Error, Result};

/// Vertex permutation of a complex induced by a permutation of the base set `[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexAction {
    map: Vec<usize>,
}

impl VertexAction {
    /// `map()[i]` is the index of the image of vertex `i`.
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn image(&self, face: &[usize]) -> Vec<usize> {
        let mut img: Vec<usize> = face.iter().map(|&i| self.map[i]).collect();
        img.sort_unstable();
        img
    }
}

/// The action of `w` (one-line notation on `[n]`) on the vertices of `complex`.
///
/// Fails if `w` is not a permutation, if some vertex is carried outside
/// `[n]`, or if the induced map does not send facets to facets.
pub fn act(w: &[usize], complex: &SimplicialComplex) -> Result<VertexAction> {
    let n = w.len();
    let values: BTreeSet<usize> = w.iter().copied().collect();
    if values.len() != n || values.iter().any(|&v| v == 0 || v > n) {
        return Err(Error::domain(format!("{w:?} is not a permutation of [{n}]")));
    }
    let mut map = Vec::with_capacity(complex.vertices().len());
    for v in complex.vertices() {
        if v.carrier().iter().any(|&i| i > n) {
            return Err(Error::domain(format!("vertex {v} is not carried by [{n}]")));
        }
        let image = v.permuted(w);
        let j =
            complex.index_of(&image).ok_or_else(|| Error::domain(format!("image {image} of {v} is not a vertex")))?;
        map.push(j);
    }
    let action = VertexAction { map };
    let facets: BTreeSet<&Vec<usize>> = complex.facets().iter().collect();
    for f in complex.facets() {
        if !facets.contains(&action.image(f)) {
            return Err(Error::domain(format!("{w:?} does not map facets to facets")));
        }
    }
    Ok(action)
}

/// The subcomplex `Delta^w` of faces fixed by the action.
///
/// Requires the action to be proper: a face that is fixed as a set must be
/// fixed pointwise, so that `Delta^w` is the subcomplex induced on the fixed
/// vertices.
pub fn fixed_subcomplex(complex: &SimplicialComplex, action: &VertexAction) -> Result<SimplicialComplex> {
    for face in complex.faces() {
        if action.image(&face) == face && face.iter().any(|&i| action.map[i] != i) {
            let labels: Vec<String> = face.iter().map(|&i| complex.vertices()[i].to_string()).collect();
            return Err(Error::domain(format!(
                "action is not proper: face {{{}}} is fixed but not pointwise",
                labels.join(", ")
            )));
        }
    }
    let fixed: BTreeSet<usize> = (0..action.map.len()).filter(|&i| action.map[i] == i).collect();
    let vertices = complex.vertices();
    Ok(complex.induced_subcomplex(|v| {
        let i = vertices.binary_search(v).expect("vertex of the complex");
        fixed.contains(&i)
    }))
}
