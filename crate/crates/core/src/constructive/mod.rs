//! Constructive upper bounds on the independent isolation number. Every
//! operation returns sets that have been re-verified.

mod grundy_bound;
mod sweep;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

pub use grundy_bound::{k_colorable_bound, verify_claim_bounds, Candidate, Claim, KColorableStats};
pub use sweep::{
    build_sweep, eliminate_bad_edges, eliminate_bad_edges_with, rotate, SweepOptions, SweepOutcome,
    SweepState,
};

use crate::coloring::{self, independent_dominating_set, independent_dominating_set_within};
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, VertexSet};
use crate::isolation::is_independent_isolating;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    TwoDisjoint,
    BipartiteMod3,
    RotationSweep,
    Grundy,
}

fn ratio_str<S: Serializer>(r: &Ratio<u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_ratio(r))
}

/// `p/q` in lowest terms, or `p` when the denominator is one.
pub fn format_ratio(r: &Ratio<u64>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A witness set together with the bound it is guaranteed to meet and the
/// algorithm that produced it.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub method: Method,
    pub witness: VertexSet,
    /// All sets built along the way (e.g. the three classes of a partition).
    pub sets: Vec<VertexSet>,
    #[serde(serialize_with = "ratio_str")]
    pub bound: Ratio<u64>,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<KColorableStats>,
    #[serde(skip)]
    pub sweep: Option<SweepOutcome>,
}

impl Certificate {
    pub fn size(&self) -> usize {
        self.witness.len()
    }

    pub fn within_bound(&self) -> bool {
        Ratio::from_integer(self.size() as u64) <= self.bound
    }
}

fn check_bound(size: usize, bound: &Ratio<u64>, what: &str) -> Result<()> {
    if Ratio::from_integer(size as u64) > *bound {
        return Err(Error::BoundViolated(format!(
            "{what}: size {size} exceeds {}",
            format_ratio(bound)
        )));
    }
    Ok(())
}

/// Smallest set, first one on ties. Empty sets are skipped.
fn smallest(sets: &[VertexSet]) -> Option<&VertexSet> {
    sets.iter()
        .filter(|s| !s.is_empty())
        .min_by_key(|s| s.len())
}

/// An independent dominating set `X` and an independent dominating set `Y`
/// of `G - X`; both are independent isolating sets of `G`.
pub fn two_disjoint(g: &Graph) -> (VertexSet, VertexSet) {
    let x = independent_dominating_set(g);
    let y = independent_dominating_set_within(g, &x.complement());
    (x, y)
}

/// The smaller of the two sets from [`two_disjoint`]; at most half the
/// vertices of a graph without isolated vertices.
pub(crate) fn smaller_of_two(g: &Graph) -> VertexSet {
    let (x, y) = two_disjoint(g);
    if y.len() < x.len() {
        y
    } else {
        x
    }
}

/// Union of `smaller_of_two` over every component of `g - closed` that has
/// an edge.
pub(crate) fn isolate_remainder(g: &Graph, closed: &VertexSet) -> VertexSet {
    let (rest, map) = g.induced(&closed.complement());
    let mut out = VertexSet::new(g.n());
    for comp in rest.components() {
        if comp.len() < 2 {
            continue;
        }
        let (sub, sub_map) = rest.induced(&comp);
        let part = smaller_of_two(&sub);
        for v in part.iter() {
            out.insert(map[sub_map[v]]);
        }
    }
    out
}

/// Partition of a connected bipartite graph into three independent
/// isolating sets: BFS distance modulo 3 from a root that is an end-vertex
/// when one exists.
pub fn bipartite_partition3(g: &Graph) -> Result<[VertexSet; 3]> {
    let n = g.n();
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let root = g.end_vertices().iter().next().unwrap_or(0);
    let layers = g.bfs_layers(root)?;
    let mut classes = [VertexSet::new(n), VertexSet::new(n), VertexSet::new(n)];
    for (v, d) in layers.dist.iter().enumerate() {
        classes[d % 3].insert(v);
    }
    Ok(classes)
}

pub fn bipartite_bound(g: &Graph) -> Result<Certificate> {
    let classes = bipartite_partition3(g)?;
    let witness = smallest(&classes)
        .cloned()
        .unwrap_or_else(|| VertexSet::new(g.n()));
    let verified = classes.iter().all(|c| is_independent_isolating(g, c));
    let bound = Ratio::new(g.n() as u64, 3);
    check_bound(
        witness.len(),
        &Ratio::from_integer(g.n() as u64 / 3),
        "bipartite",
    )?;
    Ok(Certificate {
        method: Method::BipartiteMod3,
        witness,
        sets: classes.to_vec(),
        bound,
        verified,
        stats: None,
        sweep: None,
    })
}

/// Proper coloring with at most three colors, carried as `k = 3`.
fn as_three_coloring(g: &Graph, c: &Coloring) -> Result<Coloring> {
    if !c.is_total_proper(g) {
        return Err(Error::ImproperInput);
    }
    if c.max_color() > 3 {
        return Err(Error::WrongK(c.k()));
    }
    Coloring::new(3, c.to_vec().expect("total"))
}

/// Runs the rotation-sweep and returns the smallest of the three resulting
/// independent isolating sets, whose size is at most `(n+1)/3`.
pub fn tripartite_bound(g: &Graph, c: Option<&Coloring>) -> Result<Certificate> {
    tripartite_bound_with(g, c, SweepOptions::default())
}

pub fn tripartite_bound_with(
    g: &Graph,
    c: Option<&Coloring>,
    options: SweepOptions,
) -> Result<Certificate> {
    let n = g.n();
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let start = match c {
        Some(c) => as_three_coloring(g, c)?,
        None => {
            coloring::find_coloring(g, 3, coloring::DEFAULT_BUDGET)?.ok_or(Error::Not3Colorable)?
        }
    };
    let outcome = eliminate_bad_edges_with(g, &start, options)?;
    let witness = smallest(&outcome.sets).cloned().expect("nonempty graph");
    let verified = outcome.sets.iter().all(|s| is_independent_isolating(g, s));
    let bound = Ratio::new(n as u64 + 1, 3);
    check_bound(witness.len(), &bound, "rotation sweep")?;
    Ok(Certificate {
        method: Method::RotationSweep,
        witness,
        sets: outcome.sets.to_vec(),
        bound,
        verified,
        stats: None,
        sweep: Some(outcome),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets;

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

    fn ids(s: &VertexSet) -> Vec<usize> {
        s.to_vec()
    }

    #[test]
    fn two_disjoint_examples() {
        let k3 = graph(3, &[(0, 1), (0, 2), (1, 2)]);
        let (x, y) = two_disjoint(&k3);
        assert_eq!((ids(&x), ids(&y)), (vec![0], vec![1]));

        let (x, y) = two_disjoint(&Graph::empty(2));
        assert_eq!(ids(&x), vec![0, 1]);
        assert!(y.is_empty());
        assert!(is_independent_isolating(&Graph::empty(2), &y));

        let (x, y) = two_disjoint(&cycle(4));
        assert_eq!((ids(&x), ids(&y)), (vec![0, 2], vec![1, 3]));
    }

    #[test]
    fn bipartite_examples() {
        let [a, b, c] = bipartite_partition3(&path(3)).unwrap();
        assert_eq!((ids(&a), ids(&b), ids(&c)), (vec![0], vec![1], vec![2]));

        let classes = bipartite_partition3(&cycle(6)).unwrap();
        let v: Vec<_> = classes.iter().map(ids).collect();
        assert_eq!(v, vec![vec![0, 3], vec![1, 5], vec![2, 4]]);
        assert!(classes
            .iter()
            .all(|c| is_independent_isolating(&cycle(6), c)));

        assert_eq!(
            bipartite_partition3(&path(2)).unwrap_err(),
            Error::TooSmall(2)
        );
        assert_eq!(
            bipartite_partition3(&cycle(5)).unwrap_err(),
            Error::NotBipartite
        );
        let two = graph(4, &[(0, 1), (2, 3)]);
        assert_eq!(bipartite_partition3(&two).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn bipartite_root_prefers_end_vertex() {
        // 0 is on the cycle, 5 is a pendant: root must be 5
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]);
        let classes = bipartite_partition3(&g).unwrap();
        assert!(classes[0].contains(5));
        assert!(classes.iter().all(|c| is_independent_isolating(&g, c)));
    }

    #[test]
    fn tripartite_examples() {
        let cert = tripartite_bound(&path(4), None).unwrap();
        assert_eq!(cert.size(), 1);
        assert!(cert.verified);

        let (j6, _) = gadgets::gen_jewel(6).unwrap();
        let cert = tripartite_bound(&j6, None).unwrap();
        assert_eq!(cert.size(), 6);
        assert_eq!(cert.bound, Ratio::from_integer(6));

        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(
            tripartite_bound(&k4, None).unwrap_err(),
            Error::Not3Colorable
        );
    }

    #[test]
    fn ratio_formatting() {
        assert_eq!(format_ratio(&Ratio::new(24u64, 14)), "12/7");
        assert_eq!(format_ratio(&Ratio::new(18u64, 3)), "6");
    }
}
