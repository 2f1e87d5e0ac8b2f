//! Greedy, Grundy and exact colorings, plus greedy independent domination.

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, VertexSet};

/// Default node budget shared by the exact searches.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// First-fit coloring in ascending id order. The result is always Grundy.
pub fn greedy_grundy_coloring(g: &Graph) -> Coloring {
    let n = g.n();
    let mut colors = vec![0usize; n];
    let mut taken = vec![false; n + 2];
    for v in 0..n {
        for &u in g.neighbors(v) {
            if u < v {
                taken[colors[u]] = true;
            }
        }
        let c = (1..).find(|&c| !taken[c]).unwrap();
        colors[v] = c;
        for &u in g.neighbors(v) {
            if u < v {
                taken[colors[u]] = false;
            }
        }
    }
    let k = colors.iter().copied().max().unwrap_or(1);
    Coloring::new(k, colors).expect("greedy colors lie in 1..=k")
}

/// Every vertex of color `m` has a neighbor of each color below `m`.
pub fn is_grundy(g: &Graph, c: &Coloring) -> bool {
    if !c.is_total_proper(g) {
        return false;
    }
    (0..g.n()).all(|v| first_missing_below(g, c, v).is_none())
}

fn first_missing_below(g: &Graph, c: &Coloring, v: usize) -> Option<usize> {
    let cv = c.color(v);
    let mut seen = vec![false; cv];
    for &u in g.neighbors(v) {
        let cu = c.color(u);
        if cu < cv {
            seen[cu] = true;
        }
    }
    (1..cv).find(|&j| !seen[j])
}

/// Lowers colors until the Grundy property holds. Sweeps vertices in
/// ascending order, moving each vertex that lacks a neighbor in some lower
/// class into the smallest such class, until a full pass makes no move.
pub fn grundify(g: &Graph, c: &Coloring) -> Result<Coloring> {
    if !c.is_total_proper(g) {
        return Err(Error::ImproperInput);
    }
    let mut out = c.clone();
    loop {
        let mut moved = false;
        for v in 0..g.n() {
            if let Some(j) = first_missing_below(g, &out, v) {
                out.set(v, Some(j));
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    Ok(out)
}

/// Greedy maximal independent set over ascending ids.
pub fn independent_dominating_set(g: &Graph) -> VertexSet {
    independent_dominating_set_within(g, &g.vertices())
}

/// Greedy maximal independent set of the subgraph induced by `allowed`.
pub fn independent_dominating_set_within(g: &Graph, allowed: &VertexSet) -> VertexSet {
    let mut out = VertexSet::new(g.n());
    let mut blocked = allowed.complement();
    for v in 0..g.n() {
        if blocked.contains(v) {
            continue;
        }
        out.insert(v);
        blocked.insert(v);
        for &u in g.neighbors(v) {
            blocked.insert(u);
        }
    }
    out
}

/// Greedy clique, used as a lower bound on the chromatic number.
fn greedy_clique_size(g: &Graph) -> usize {
    let mut best = usize::from(g.n() > 0);
    for start in 0..g.n() {
        let mut clique = vec![start];
        let mut cands: Vec<usize> = g.neighbors(start).to_vec();
        cands.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        for v in cands {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<usize>,
    // sat_count[v][c] = number of colored neighbors of v with color c
    sat_count: Vec<Vec<u32>>,
    nodes: u64,
    budget: u64,
}

impl Dsatur<'_> {
    fn saturation(&self, v: usize) -> usize {
        self.sat_count[v][1..].iter().filter(|&&x| x > 0).count()
    }

    fn pick(&self) -> Option<usize> {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..self.g.n() {
            if self.colors[v] != 0 {
                continue;
            }
            let key = (self.saturation(v), self.g.degree(v));
            match best {
                Some((s, d, _)) if (s, d) >= key => {}
                _ => best = Some((key.0, key.1, v)),
            }
        }
        best.map(|b| b.2)
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for &u in self.g.neighbors(v) {
            self.sat_count[u][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        for &u in self.g.neighbors(v) {
            self.sat_count[u][c] -= 1;
        }
        self.colors[v] = 0;
    }

    fn search(&mut self, max_used: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { best: None });
        }
        let Some(v) = self.pick() else {
            return Ok(true);
        };
        // colors above max_used + 1 are symmetric to max_used + 1
        let limit = self.k.min(max_used + 1);
        for c in 1..=limit {
            if self.sat_count[v][c] > 0 {
                continue;
            }
            self.assign(v, c);
            if self.search(max_used.max(c))? {
                return Ok(true);
            }
            self.unassign(v);
        }
        Ok(false)
    }
}

/// Exact search for a proper coloring with at most `k` colors.
pub fn find_coloring(g: &Graph, k: usize, budget: u64) -> Result<Option<Coloring>> {
    if g.n() == 0 {
        return Ok(Some(Coloring::new(k.max(1), vec![])?));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut s = Dsatur {
        g,
        k,
        colors: vec![0; g.n()],
        sat_count: vec![vec![0; k + 1]; g.n()],
        nodes: 0,
        budget,
    };
    if s.search(0)? {
        Ok(Some(Coloring::new(k, s.colors)?))
    } else {
        Ok(None)
    }
}

/// Exact chromatic number using DSATUR branching between a greedy clique
/// lower bound and the first-fit upper bound.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_with_budget(g, DEFAULT_BUDGET)
}

pub fn chromatic_number_with_budget(g: &Graph, budget: u64) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    let upper = greedy_grundy_coloring(g).colors_used();
    let lower = greedy_clique_size(g);
    for k in lower..upper {
        if find_coloring(g, k, budget)
            .map_err(|_| Error::BudgetExceeded { best: Some(upper) })?
            .is_some()
        {
            return Ok(k);
        }
    }
    Ok(upper)
}
