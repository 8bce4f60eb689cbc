use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

/// Canonical vertex label.
///
/// Labels are totally ordered: first by kind (`Base < Antipode < Chain < Mult`),
/// then `Base`/`Antipode` by index, `Chain` by cardinality and then
/// lexicographically, and `Mult` lexicographically on the dense multiplicity
/// vector over the ordered parent vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Vertex {
    /// Vertex `v_i` of the simplex on `[n]`.
    Base(usize),
    /// Vertex `u_i` of the antipodal simplex in `Delta(Gamma)`.
    Antipode(usize),
    /// Barycentric-subdivision vertex for a nonempty subset (sorted, strictly increasing).
    Chain(Vec<usize>),
    /// Edgewise-subdivision vertex: a multiplicity map on parent vertices,
    /// stored sparsely with keys in increasing vertex order and positive values.
    Mult(Vec<(Vertex, usize)>),
}

impl Vertex {
    fn kind(&self) -> u8 {
        match self {
            Vertex::Base(_) => 0,
            Vertex::Antipode(_) => 1,
            Vertex::Chain(_) => 2,
            Vertex::Mult(_) => 3,
        }
    }

    pub fn chain(set: impl IntoIterator<Item = usize>) -> Self {
        let s: BTreeSet<usize> = set.into_iter().collect();
        Vertex::Chain(s.into_iter().collect())
    }

    /// Builds a `Mult` label, dropping zero multiplicities and sorting the keys.
    pub fn mult(entries: impl IntoIterator<Item = (Vertex, usize)>) -> Self {
        let mut m: Vec<(Vertex, usize)> = entries.into_iter().filter(|(_, c)| *c > 0).collect();
        m.sort_by(|a, b| a.0.cmp(&b.0));
        Vertex::Mult(m)
    }

    /// The smallest face of the base simplex containing this vertex.
    pub fn carrier(&self) -> BTreeSet<usize> {
        match self {
            Vertex::Base(i) | Vertex::Antipode(i) => BTreeSet::from([*i]),
            Vertex::Chain(s) => s.iter().copied().collect(),
            Vertex::Mult(m) => m.iter().flat_map(|(v, _)| v.carrier()).collect(),
        }
    }

    /// Image under the permutation `w` of `[n]` (one-line notation, 1-based).
    pub fn permuted(&self, w: &[usize]) -> Vertex {
        match self {
            Vertex::Base(i) => Vertex::Base(w[i - 1]),
            Vertex::Antipode(i) => Vertex::Antipode(w[i - 1]),
            Vertex::Chain(s) => Vertex::chain(s.iter().map(|i| w[i - 1])),
            Vertex::Mult(m) => Vertex::mult(m.iter().map(|(v, c)| (v.permuted(w), *c))),
        }
    }
}

fn dense_lex(a: &[(Vertex, usize)], b: &[(Vertex, usize)]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some((va, ca)), Some((vb, cb))) => match va.cmp(vb) {
                // a has a positive entry where b is zero
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {
                    if ca != cb {
                        return ca.cmp(cb);
                    }
                    i += 1;
                    j += 1;
                }
            },
        }
    }
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Vertex::Base(a), Vertex::Base(b)) | (Vertex::Antipode(a), Vertex::Antipode(b)) => a.cmp(b),
            (Vertex::Chain(a), Vertex::Chain(b)) => (a.len(), a).cmp(&(b.len(), b)),
            (Vertex::Mult(a), Vertex::Mult(b)) => dense_lex(a, b),
            _ => self.kind().cmp(&other.kind()),
        }
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Base(i) => write!(f, "v{i}"),
            Vertex::Antipode(i) => write!(f, "u{i}"),
            Vertex::Chain(s) => {
                let parts: Vec<String> = s.iter().map(|i| i.to_string()).collect();
                write!(f, "c{{{}}}", parts.join(","))
            }
            Vertex::Mult(m) => {
                let parts: Vec<String> = m.iter().map(|(v, c)| format!("{c}*{v}")).collect();
                write!(f, "m({})", parts.join(","))
            }
        }
    }
}
