//! Simple undirected graphs, vertex subsets, colorings and BFS layering.
//!
//! Vertex ids are always `0..n`. Neighbor lists are kept sorted and all set
//! outputs iterate in ascending id order, so every result in the crate is
//! deterministic.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A subset of `0..universe` with ascending iteration order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        Self { bits }
    }

    /// Builds a set from ids, failing on any id outside the universe.
    pub fn from_ids<I: IntoIterator<Item = usize>>(universe: usize, ids: I) -> Result<Self> {
        let mut s = Self::new(universe);
        for v in ids {
            if v >= universe {
                return Err(Error::VertexOutOfRange(v));
            }
            s.bits.insert(v);
        }
        Ok(s)
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Self { bits }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Self { bits }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        Self { bits }
    }

    pub fn complement(&self) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        Self { bits }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", ids.join(","))
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Self-loops, repeated edges (in
    /// either orientation) and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Graph {
            adj,
            m: edges.len(),
        })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter()
            .all(|u| self.adj[u].iter().all(|&v| !s.contains(v)))
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected components, each in ascending order, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = VertexSet::new(n);
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Sides of a proper 2-coloring; in each component the smallest vertex
    /// lands on the first side. `None` if there is an odd cycle.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &v in &self.adj[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut a = VertexSet::new(n);
        let mut b = VertexSet::new(n);
        for (v, s) in side.into_iter().enumerate() {
            if s == Some(false) {
                a.insert(v);
            } else {
                b.insert(v);
            }
        }
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn bfs_layers(&self, root: usize) -> Result<BfsLayers> {
        if root >= self.n() {
            return Err(Error::VertexOutOfRange(root));
        }
        let mut dist = vec![usize::MAX; self.n()];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        if dist.contains(&usize::MAX) {
            return Err(Error::Disconnected);
        }
        Ok(BfsLayers { root, dist })
    }

    /// Vertices of degree exactly one.
    pub fn end_vertices(&self) -> VertexSet {
        let mut s = VertexSet::new(self.n());
        for v in 0..self.n() {
            if self.degree(v) == 1 {
                s.insert(v);
            }
        }
        s
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in ascending
    /// order. The returned vector maps new ids back to ids of `self`.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.to_vec();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let mut adj = vec![Vec::new(); old.len()];
        let mut m = 0;
        for (i, &u) in old.iter().enumerate() {
            for &v in &self.adj[u] {
                if new_id[v] != usize::MAX {
                    adj[i].push(new_id[v]);
                    if new_id[v] > i {
                        m += 1;
                    }
                }
            }
        }
        (Graph { adj, m }, old)
    }

    /// Lifts a set on an induced subgraph back to this graph's ids.
    pub fn lift(&self, map: &[usize], s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n());
        for v in s.iter() {
            out.insert(map[v]);
        }
        out
    }
}

/// Hop distances from a root in a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfsLayers {
    pub root: usize,
    pub dist: Vec<usize>,
}

/// A total or partial assignment of colors `1..=k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    k: usize,
    colors: Vec<Option<usize>>,
}

impl Coloring {
    /// Total coloring from a color vector; every entry must lie in `1..=k`.
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Coloring> {
        Self::partial(k, colors.into_iter().map(Some).collect())
    }

    pub fn partial(k: usize, colors: Vec<Option<usize>>) -> Result<Coloring> {
        if k == 0 {
            return Err(Error::BadParameter("k must be at least 1".into()));
        }
        if let Some(c) = colors.iter().flatten().find(|&&c| c == 0 || c > k) {
            return Err(Error::BadParameter(format!("color {c} outside 1..={k}")));
        }
        Ok(Coloring { k, colors })
    }

    /// Coloring whose classes are the given disjoint sets, in order.
    pub fn from_classes(n: usize, classes: &[VertexSet]) -> Result<Coloring> {
        let mut colors = vec![None; n];
        for (i, class) in classes.iter().enumerate() {
            for v in class.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange(v));
                }
                if colors[v].is_some() {
                    return Err(Error::BadParameter(format!("vertex {v} in two classes")));
                }
                colors[v] = Some(i + 1);
            }
        }
        Coloring::partial(classes.len().max(1), colors)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.colors[v]
    }

    /// Color of `v` in a total coloring.
    pub fn color(&self, v: usize) -> usize {
        self.colors[v].expect("color() called on an unassigned vertex")
    }

    pub fn set(&mut self, v: usize, c: Option<usize>) {
        debug_assert!(c.is_none_or(|c| (1..=self.k).contains(&c)));
        self.colors[v] = c;
    }

    pub fn assignment(&self) -> &[Option<usize>] {
        &self.colors
    }

    /// Colors of a total coloring; `None` if any vertex is unassigned.
    pub fn to_vec(&self) -> Option<Vec<usize>> {
        self.colors.iter().copied().collect()
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// No edge joins two equal assigned colors.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && g.edges()
                .all(|(u, v)| match (self.colors[u], self.colors[v]) {
                    (Some(a), Some(b)) => a != b,
                    _ => true,
                })
    }

    pub fn is_total_proper(&self, g: &Graph) -> bool {
        self.is_total() && self.is_proper(g)
    }

    pub fn class(&self, c: usize) -> VertexSet {
        let mut s = VertexSet::new(self.colors.len());
        for (v, col) in self.colors.iter().enumerate() {
            if *col == Some(c) {
                s.insert(v);
            }
        }
        s
    }

    pub fn classes(&self) -> Vec<VertexSet> {
        (1..=self.k).map(|c| self.class(c)).collect()
    }

    /// Number of nonempty color classes.
    pub fn colors_used(&self) -> usize {
        let mut used = vec![false; self.k + 1];
        for c in self.colors.iter().flatten() {
            used[*c] = true;
        }
        used.iter().filter(|&&b| b).count()
    }

    pub fn max_color(&self) -> usize {
        self.colors.iter().flatten().copied().max().unwrap_or(0)
    }
}
