//! Seeded random instance families.
//!
//! Randomness comes from SplitMix64 so that instances are reproducible from
//! `(family, params, seed)` in any language:
//!
//! ```text
//! state  <- seed
//! next() : state += 0x9E3779B97F4A7C15
//!          z = state
//!          z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//!          z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//!          return z ^ (z >> 31)
//! below(b) = (next() * b) >> 64        (128-bit product)
//! unit()   = (next() >> 11) / 2^53
//! coin(p)  = unit() < p
//! ```
//!
//! All arithmetic wraps modulo 2^64. Families that must be connected are
//! redrawn from the continuing stream, up to [`MAX_RETRIES`] times.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_RETRIES: usize = 1000;

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.below(bound as u64) as usize
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.index(hi - lo + 1)
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.unit() < p
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    /// Uniformly relabelled random recursive tree.
    Tree { n: usize },
    /// Parts `0..left` and `left..left+right`; connected.
    Bipartite { left: usize, right: usize, p: f64 },
    /// Consecutive parts of the given sizes; connected. Each part is an
    /// independent set, so the part index is a proper coloring.
    KPartite { sizes: Vec<usize>, p: f64 },
    /// Erdős–Rényi `G(n, p)`, not necessarily connected.
    Gnp { n: usize, p: f64 },
    /// Erdős–Rényi `G(n, p)` conditioned on connectivity.
    ConnectedGnp { n: usize, p: f64 },
    /// Random ear-cutting triangulation of the cycle `0..n`: maximal
    /// outerplanar with `2n - 3` edges.
    TriangulatedPolygon { n: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Tree { .. } => "tree",
            Family::Bipartite { .. } => "bipartite",
            Family::KPartite { .. } => "kpartite",
            Family::Gnp { .. } => "gnp",
            Family::ConnectedGnp { .. } => "connected-gnp",
            Family::TriangulatedPolygon { .. } => "polygon",
        }
    }
}

fn check_p(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::BadParameter(format!(
            "edge probability {p} outside [0, 1]"
        )))
    }
}

fn random_edges(
    rng: &mut SplitMix64,
    n: usize,
    p: f64,
    allowed: impl Fn(usize, usize) -> bool,
) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if allowed(u, v) && rng.coin(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}

fn connected_draw(
    rng: &mut SplitMix64,
    n: usize,
    mut draw: impl FnMut(&mut SplitMix64) -> Vec<(usize, usize)>,
) -> Result<Graph> {
    for _ in 0..MAX_RETRIES {
        let g = Graph::from_edge_list(n, &draw(rng))?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::RetriesExhausted(MAX_RETRIES))
}

/// Deterministic instance for `(family, seed)`.
pub fn gen_random(family: &Family, seed: u64) -> Result<Graph> {
    let mut rng = SplitMix64::new(seed);
    match family {
        &Family::Tree { n } => {
            if n == 0 {
                return Err(Error::BadParameter("tree needs n >= 1".into()));
            }
            let mut perm: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                let j = rng.index(i + 1);
                perm.swap(i, j);
            }
            let edges: Vec<_> = (1..n).map(|i| (perm[rng.index(i)], perm[i])).collect();
            Graph::from_edge_list(n, &edges)
        }
        &Family::Bipartite { left, right, p } => {
            check_p(p)?;
            if left == 0 || right == 0 {
                return Err(Error::BadParameter("both sides must be nonempty".into()));
            }
            connected_draw(&mut rng, left + right, |r| {
                random_edges(r, left + right, p, |u, v| u < left && v >= left)
            })
        }
        Family::KPartite { sizes, p } => {
            check_p(*p)?;
            if sizes.is_empty() || sizes.contains(&0) {
                return Err(Error::BadParameter("part sizes must be positive".into()));
            }
            let part: Vec<usize> = sizes
                .iter()
                .enumerate()
                .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
                .collect();
            let n = part.len();
            connected_draw(&mut rng, n, |r| {
                random_edges(r, n, *p, |u, v| part[u] != part[v])
            })
        }
        &Family::Gnp { n, p } => {
            check_p(p)?;
            Graph::from_edge_list(n, &random_edges(&mut rng, n, p, |_, _| true))
        }
        &Family::ConnectedGnp { n, p } => {
            check_p(p)?;
            connected_draw(&mut rng, n, |r| random_edges(r, n, p, |_, _| true))
        }
        &Family::TriangulatedPolygon { n } => {
            if n < 3 {
                return Err(Error::BadParameter("polygon needs n >= 3".into()));
            }
            let mut edges: Vec<_> = (0..n)
                .map(|i| (i.min((i + 1) % n), i.max((i + 1) % n)))
                .collect();
            let mut polygon: Vec<usize> = (0..n).collect();
            while polygon.len() > 3 {
                let len = polygon.len();
                let i = rng.index(len);
                let prev = polygon[(i + len - 1) % len];
                let next = polygon[(i + 1) % len];
                edges.push((prev.min(next), prev.max(next)));
                polygon.remove(i);
            }
            Graph::from_edge_list(n, &edges)
        }
    }
}

/// Part index of each vertex for a k-partite layout.
pub fn kpartite_coloring(sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i + 1, s))
        .collect()
}
