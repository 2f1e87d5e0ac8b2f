//! Graph constructions with fixed vertex layouts: the three-sets gadget
//! `J(G)`, the clone-and-path operation, and the extremal families.
//!
//! Layouts always keep the original vertices first and append new vertices
//! in the order documented on each function.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex images of a `J(G)` construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetMap {
    /// `base_vertices[v]` is the id of original vertex `v`.
    pub base_vertices: Vec<usize>,
    /// For each original edge `(u, v)` with `u < v`, in ascending order:
    /// the edge and its pair `(p_u, p_v)`, where `p_u ~ u` and `p_v ~ v`.
    pub pe_pairs: Vec<((usize, usize), (usize, usize))>,
    /// Three leaves attached to each original vertex.
    pub qw_trios: Vec<[usize; 3]>,
}

impl GadgetMap {
    /// Sidecar text form: one line per original vertex then per edge.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, (&img, trio)) in self.base_vertices.iter().zip(&self.qw_trios).enumerate() {
            out.push_str(&format!(
                "v {v} {img} {} {} {}\n",
                trio[0], trio[1], trio[2]
            ));
        }
        for &((u, v), (pu, pv)) in &self.pe_pairs {
            out.push_str(&format!("e {u} {v} {pu} {pv}\n"));
        }
        out
    }
}

/// Known invariant values of a generated graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnownValues {
    pub iota_independent: Option<usize>,
    pub iota: Option<usize>,
    pub source: &'static str,
}

/// `J(G)`: for each edge `uv` a new adjacent pair, one end joined to `u`
/// and the other to `v`; for each vertex three new leaves.
///
/// Layout: originals `0..n`, then pairs in edge order (`n + 2i` next to the
/// smaller endpoint), then trios in vertex order.
pub fn build_j(g: &Graph) -> (Graph, GadgetMap) {
    let n = g.n();
    let edges = g.edge_list();
    let m = edges.len();
    let mut out = edges.clone();
    let mut pe_pairs = Vec::with_capacity(m);
    for (i, &(u, v)) in edges.iter().enumerate() {
        let (pu, pv) = (n + 2 * i, n + 2 * i + 1);
        out.extend([(pu, pv), (u, pu), (v, pv)]);
        pe_pairs.push(((u, v), (pu, pv)));
    }
    let base = n + 2 * m;
    let mut qw_trios = Vec::with_capacity(n);
    for w in 0..n {
        let trio = [base + 3 * w, base + 3 * w + 1, base + 3 * w + 2];
        out.extend(trio.iter().map(|&q| (w, q)));
        qw_trios.push(trio);
    }
    let j = Graph::from_edge_list(4 * n + 2 * m, &out).expect("gadget is simple");
    let map = GadgetMap {
        base_vertices: (0..n).collect(),
        pe_pairs,
        qw_trios,
    };
    (j, map)
}

/// Adds `x'` (id `n`) with the neighborhood of `x`, and a path
/// `x - y - y' - x'` with `y = n + 1`, `y' = n + 2`.
pub fn operation_o(g: &Graph, x: usize) -> Result<Graph> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange(x));
    }
    let n = g.n();
    let (xc, y, yc) = (n, n + 1, n + 2);
    let mut edges = g.edge_list();
    edges.extend(g.neighbors(x).iter().map(|&u| (u, xc)));
    edges.extend([(x, y), (y, yc), (yc, xc)]);
    Graph::from_edge_list(n + 3, &edges)
}

/// `M_r`: the clique `K_r` with `r` pendant paths of length two at each
/// clique vertex. Vertex `i < r` is in the clique; its `j`-th path is
/// `i - (r + 2(ir + j)) - (r + 2(ir + j) + 1)`.
pub fn gen_m(r: usize) -> Result<(Graph, KnownValues)> {
    if r < 2 {
        return Err(Error::BadParameter(format!("M_r needs r >= 2, got {r}")));
    }
    let mut edges = Vec::new();
    for u in 0..r {
        for v in u + 1..r {
            edges.push((u, v));
        }
    }
    for i in 0..r {
        for j in 0..r {
            let mid = r + 2 * (i * r + j);
            edges.extend([(i, mid), (mid, mid + 1)]);
        }
    }
    let g = Graph::from_edge_list(2 * r * r + r, &edges)?;
    Ok((
        g,
        KnownValues {
            iota_independent: Some(r * (r - 1) + 1),
            iota: None,
            source: "r(r-1)+1",
        },
    ))
}

/// P₂-corona: vertex `v` gains the path `v - (n + 2v) - (n + 2v + 1)`.
/// For connected graphs the isolation number is one third of the order.
pub fn gen_p2_corona(g: &Graph) -> (Graph, KnownValues) {
    let n = g.n();
    let mut edges = g.edge_list();
    for v in 0..n {
        edges.extend([(v, n + 2 * v), (n + 2 * v, n + 2 * v + 1)]);
    }
    let out = Graph::from_edge_list(3 * n, &edges).expect("corona is simple");
    let iota = (g.is_connected() && n > 0).then_some(n);
    (
        out,
        KnownValues {
            iota_independent: None,
            iota,
            source: "n/3",
        },
    )
}

/// Jewel graph `J_m`: start from the edge `b_0 c_0` (ids 0, 1) and apply
/// [`operation_o`] to `b_0, ..., b_{m-2}`. The `i`-th application creates the
/// clone `a_i` and the path `b_{i-1} - b_i - c_i - a_i`, so `b_i` is always
/// the first interior vertex, adjacent to the previous `b`.
pub fn gen_jewel(m: usize) -> Result<(Graph, KnownValues)> {
    if m < 1 {
        return Err(Error::BadParameter("jewel graph needs m >= 1".into()));
    }
    let mut g = Graph::from_edge_list(2, &[(0, 1)])?;
    let mut b = 0;
    for _ in 1..m {
        let n = g.n();
        g = operation_o(&g, b)?;
        b = n + 1;
    }
    Ok((
        g,
        KnownValues {
            iota_independent: Some(m),
            iota: None,
            source: "m",
        },
    ))
}

pub fn complete(n: usize) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            e.push((u, v));
        }
    }
    Graph::from_edge_list(n, &e).expect("complete graph is simple")
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &e)
}

pub fn path(n: usize) -> Graph {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &e).expect("path is simple")
}

/// All connected labelled graphs on `n` vertices, by brute force over edge
/// subsets. Intended for `n <= 5`.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edge_list(n, &edges).expect("distinct pairs");
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::chromatic_number;

    #[test]
    fn j_counts() {
        let (j, map) = build_j(&complete(2));
        assert_eq!(j.n(), 10);
        assert_eq!(map.pe_pairs, vec![((0, 1), (2, 3))]);

        let (j, _) = build_j(&Graph::empty(1));
        assert_eq!(j.n(), 4);
        assert_eq!(j.degrees(), vec![3, 1, 1, 1]);

        let (j, map) = build_j(&complete(3));
        assert_eq!((j.n(), j.m()), (18, 21));
        for trio in &map.qw_trios {
            assert!(trio.iter().all(|&q| j.degree(q) == 1));
        }
        for &(_, (pu, pv)) in &map.pe_pairs {
            assert_eq!((j.degree(pu), j.degree(pv)), (2, 2));
        }
    }

    #[test]
    fn operation_o_examples() {
        let j2 = operation_o(&complete(2), 0).unwrap();
        assert_eq!(j2.n(), 5);
        assert_eq!(j2, gen_jewel(2).unwrap().0);

        let p = operation_o(&Graph::empty(1), 0).unwrap();
        assert_eq!(p.n(), 4);
        assert_eq!(p.edge_list(), vec![(0, 2), (1, 3), (2, 3)]);

        let c5 = cycle(5).unwrap();
        let g = operation_o(&c5, 2).unwrap();
        assert_eq!((g.n(), g.m()), (8, 5 + 2 + 3));
        assert_eq!(chromatic_number(&g).unwrap(), 3);
        assert_eq!(operation_o(&c5, 5), Err(Error::VertexOutOfRange(5)));
    }

    #[test]
    fn m_family_sizes() {
        let (m2, kv) = gen_m(2).unwrap();
        assert_eq!((m2.n(), m2.m(), kv.iota_independent), (10, 9, Some(3)));
        let (m3, kv) = gen_m(3).unwrap();
        assert_eq!((m3.n(), kv.iota_independent), (21, Some(7)));
        let (m4, kv) = gen_m(4).unwrap();
        assert_eq!((m4.n(), kv.iota_independent), (36, Some(13)));
        assert!(gen_m(1).is_err());
    }

    #[test]
    fn corona_shapes() {
        let (g, kv) = gen_p2_corona(&cycle(6).unwrap());
        assert_eq!((g.n(), kv.iota), (18, Some(6)));
        let (g, kv) = gen_p2_corona(&Graph::empty(1));
        assert_eq!(g, path(3));
        assert_eq!(kv.iota, Some(1));
        let (g, _) = gen_p2_corona(&complete(2));
        assert_eq!(g.n(), 6);
        assert_eq!(g.degrees().iter().filter(|&&d| d == 1).count(), 2);
    }

    #[test]
    fn jewel_sizes() {
        let (j6, kv) = gen_jewel(6).unwrap();
        assert_eq!((j6.n(), kv.iota_independent), (17, Some(6)));
        let (j1, _) = gen_jewel(1).unwrap();
        assert_eq!(j1, complete(2));
        assert_eq!(gen_jewel(3).unwrap().0.n(), 8);
        assert!(gen_jewel(0).is_err());
        assert!(chromatic_number(&j6).unwrap() <= 3);
    }

    #[test]
    fn small_connected_graphs() {
        // labelled connected graphs: 1, 1, 4, 38, 728
        let counts: Vec<_> = (1..=5).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
    }

    #[test]
    fn sidecar_text() {
        let (_, map) = build_j(&complete(2));
        assert_eq!(map.to_text(), "v 0 0 4 5 6\nv 1 1 7 8 9\ne 0 1 2 3\n");
    }
}
