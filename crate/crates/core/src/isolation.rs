//! Verifiers for isolating sets and the bad-edge classification of proper
//! 3-colorings.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, VertexSet};

/// `s` together with all neighbors of `s`.
pub fn closed_neighborhood(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    let mut out = VertexSet::new(g.n());
    for v in s.iter() {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange(v));
        }
        out.insert(v);
        for &u in g.neighbors(v) {
            out.insert(u);
        }
    }
    Ok(out)
}

/// Removing `N[s]` leaves no edge. The empty set isolates exactly the
/// edgeless graphs.
pub fn is_isolating(g: &Graph, s: &VertexSet) -> bool {
    match closed_neighborhood(g, s) {
        Ok(closed) => g
            .edges()
            .all(|(u, v)| closed.contains(u) || closed.contains(v)),
        Err(_) => false,
    }
}

pub fn is_independent_isolating(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| v < g.n()) && g.is_independent(s) && is_isolating(g, s)
}

/// Every vertex outside `s` has a neighbor in `s`.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    (0..g.n()).all(|v| s.contains(v) || g.neighbors(v).iter().any(|&u| s.contains(u)))
}

/// Every vertex, in `s` or not, has a neighbor in `s`.
pub fn is_total_dominating(g: &Graph, s: &VertexSet) -> bool {
    (0..g.n()).all(|v| g.neighbors(v).iter().any(|&u| s.contains(u)))
}

/// Vertices whose closed neighborhood sees every color `1..=k`.
pub fn fully_dominated_vertices(g: &Graph, c: &Coloring) -> VertexSet {
    let k = c.k();
    let mut out = VertexSet::new(g.n());
    let mut seen = vec![false; k + 1];
    for v in 0..g.n() {
        seen.iter_mut().for_each(|b| *b = false);
        let mut count = 0;
        for u in std::iter::once(v).chain(g.neighbors(v).iter().copied()) {
            if let Some(cu) = c.get(u) {
                if !seen[cu] {
                    seen[cu] = true;
                    count += 1;
                }
            }
        }
        if count == k {
            out.insert(v);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BadEdge {
    pub u: usize,
    pub v: usize,
    pub missing: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BadEdgeReport {
    /// Bad edges with `u < v`, ascending.
    pub edges: Vec<BadEdge>,
    /// `isolating[m - 1]`: whether color class `m` is an isolating set.
    pub isolating: [bool; 3],
}

impl BadEdgeReport {
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }
}

fn check_three_coloring(g: &Graph, c: &Coloring) -> Result<()> {
    if c.k() != 3 {
        return Err(Error::WrongK(c.k()));
    }
    if !c.is_total_proper(g) {
        return Err(Error::ImproperInput);
    }
    Ok(())
}

/// The color of `{1,2,3}` not used by either endpoint of an edge.
pub fn missing_color(a: usize, b: usize) -> usize {
    6 - a - b
}

pub fn is_bad_edge(g: &Graph, c: &Coloring, u: usize, v: usize) -> bool {
    let missing = missing_color(c.color(u), c.color(v));
    !g.neighbors(u)
        .iter()
        .chain(g.neighbors(v))
        .any(|&x| c.color(x) == missing)
}

/// Edge `uv` with missing color `m` is bad when no neighbor of `u` or `v`
/// has color `m`.
pub fn bad_edges(g: &Graph, c: &Coloring) -> Result<BadEdgeReport> {
    check_three_coloring(g, c)?;
    let edges: Vec<BadEdge> = g
        .edges()
        .filter(|&(u, v)| is_bad_edge(g, c, u, v))
        .map(|(u, v)| BadEdge {
            u,
            v,
            missing: missing_color(c.color(u), c.color(v)),
        })
        .collect();
    let mut isolating = [true; 3];
    for e in &edges {
        isolating[e.missing - 1] = false;
    }
    Ok(BadEdgeReport { edges, isolating })
}

/// Whether each color class `1..=k` is an isolating set.
pub fn classes_are_isolating(g: &Graph, c: &Coloring) -> Result<Vec<bool>> {
    if !c.is_total_proper(g) {
        return Err(Error::ImproperInput);
    }
    Ok(c.classes()
        .iter()
        .map(|class| is_isolating(g, class))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, e).unwrap()
    }

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        graph(n, &e)
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        graph(n, &e)
    }

    fn k(n: usize) -> Graph {
        let mut e = vec![];
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        graph(n, &e)
    }

    fn set(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::from_ids(n, ids.iter().copied()).unwrap()
    }

    fn col(k: usize, c: &[usize]) -> Coloring {
        Coloring::new(k, c.to_vec()).unwrap()
    }

    #[test]
    fn closed_neighborhoods() {
        assert_eq!(
            closed_neighborhood(&path(3), &set(3, &[1]))
                .unwrap()
                .to_vec(),
            vec![0, 1, 2]
        );
        assert!(closed_neighborhood(&cycle(5), &set(5, &[]))
            .unwrap()
            .is_empty());
        assert_eq!(closed_neighborhood(&k(4), &set(4, &[0])).unwrap().len(), 4);
        assert_eq!(
            closed_neighborhood(&path(3), &set(5, &[4])),
            Err(Error::VertexOutOfRange(4))
        );
    }

    #[test]
    fn isolating_examples() {
        assert!(is_isolating(&path(3), &set(3, &[1])));
        assert!(!is_isolating(&cycle(5), &set(5, &[0])));
        assert!(is_isolating(&k(2), &set(2, &[0])));
        assert!(is_independent_isolating(&cycle(5), &set(5, &[0, 2])));
        assert!(!is_independent_isolating(&path(3), &set(3, &[0, 1])));
        assert!(is_independent_isolating(&cycle(6), &set(6, &[0, 3])));
    }

    #[test]
    fn empty_set_isolates_only_edgeless() {
        assert!(is_isolating(&Graph::empty(4), &set(4, &[])));
        assert!(!is_isolating(&path(2), &set(2, &[])));
    }

    #[test]
    fn fully_dominated_examples() {
        assert_eq!(
            fully_dominated_vertices(&k(3), &col(3, &[1, 2, 3])).len(),
            3
        );
        assert!(fully_dominated_vertices(&path(3), &col(3, &[1, 2, 1])).is_empty());
        assert_eq!(
            fully_dominated_vertices(&path(4), &col(3, &[1, 2, 3, 1])).to_vec(),
            vec![1, 2]
        );
    }

    #[test]
    fn bad_edge_examples() {
        assert!(bad_edges(&k(3), &col(3, &[1, 2, 3])).unwrap().is_empty());
        let r = bad_edges(&path(4), &col(3, &[1, 2, 1, 2])).unwrap();
        assert_eq!(r.len(), 3);
        assert!(r.edges.iter().all(|e| e.missing == 3));
        assert_eq!(r.isolating, [true, true, false]);
        assert!(bad_edges(&path(4), &col(3, &[1, 2, 3, 1]))
            .unwrap()
            .is_empty());
        assert_eq!(bad_edges(&path(2), &col(2, &[1, 2])), Err(Error::WrongK(2)));
        assert_eq!(
            bad_edges(&path(2), &col(3, &[1, 1])),
            Err(Error::ImproperInput)
        );
    }

    #[test]
    fn class_isolation_examples() {
        assert_eq!(
            classes_are_isolating(&k(3), &col(3, &[1, 2, 3])).unwrap(),
            vec![true; 3]
        );
        assert!(!classes_are_isolating(&path(4), &col(3, &[1, 2, 1, 2])).unwrap()[2]);
        assert_eq!(
            classes_are_isolating(&cycle(6), &col(3, &[1, 2, 3, 1, 2, 3])).unwrap(),
            vec![true; 3]
        );
    }
}
