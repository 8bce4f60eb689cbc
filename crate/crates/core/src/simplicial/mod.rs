//! Abstract simplicial complexes over canonically labeled vertices.
//!
//! Complexes are stored as facet antichains over a sorted vertex list. The
//! constructions cover the simplex, its barycentric subdivision `Gamma_n`,
//! the `r`-fold edgewise subdivision, the sphere `Delta(Gamma)` obtained by
//! gluing a triangulation to an antipodal simplex, and the action of `S_n`
//! by relabelling the base set.

mod action;
mod complex;
mod triangulation;
mod vertex;

pub use action::{act, fixed_subcomplex, VertexAction};
pub use complex::SimplicialComplex;
pub use triangulation::{
    barycentric_on, barycentric_subdivision, edgewise_subdivision, gamma_nr, simplex, simplex_on, Family,
    RestrictionOracle, Triangulation,
};
pub use vertex::Vertex;
