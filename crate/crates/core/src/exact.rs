//! Exact solvers for the independent isolation number, the isolation number,
//! the total domination number, and disjoint independent isolating sets.
//!
//! All three minimisation problems are hitting-set problems over a family of
//! vertex masks:
//!
//! * isolation: every edge `uv` must meet `N[u] ∪ N[v]`;
//! * total domination: every vertex `v` must meet `N(v)`;
//! * independent isolation adds the constraint that chosen vertices are
//!   pairwise nonadjacent.
//!
//! The branch-and-bound search branches on the unhit target with the fewest
//! remaining candidates and prunes with a greedy packing of pairwise
//! disjoint unhit targets. Once the optimum is known, the canonical
//! (lexicographically least) witness is recovered by fixing one element at a
//! time with feasibility searches. Graphs are limited to 128 vertices so a
//! vertex set fits in a `u128`.

use serde::Serialize;

use crate::coloring::independent_dominating_set;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

type Mask = u128;

pub const MAX_VERTICES: usize = 128;

/// Upper end of the naive tier; larger graphs go to branch-and-bound.
pub const NAIVE_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactResult {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
}

fn bit(v: usize) -> Mask {
    1 << v
}

/// Vertices with ids strictly greater than `v`.
fn above(v: usize) -> Mask {
    if v + 1 >= MAX_VERTICES {
        0
    } else {
        !((1 << (v + 1)) - 1)
    }
}

fn full_mask(n: usize) -> Mask {
    if n == MAX_VERTICES {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

fn mask_to_set(n: usize, m: Mask) -> VertexSet {
    let mut s = VertexSet::new(n);
    let mut rest = m;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        s.insert(v);
        rest &= rest - 1;
    }
    s
}

fn set_to_mask(s: &VertexSet) -> Mask {
    s.iter().fold(0, |m, v| m | bit(v))
}

fn adjacency_masks(g: &Graph) -> Vec<Mask> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0, |m, &u| m | bit(u)))
        .collect()
}

fn check_size(g: &Graph) -> Result<()> {
    if g.n() > MAX_VERTICES {
        Err(Error::TooLarge(g.n()))
    } else {
        Ok(())
    }
}

/// Closed neighborhoods of edge endpoints: the sets an isolating set must hit.
fn edge_targets(g: &Graph, adj: &[Mask]) -> Vec<Mask> {
    g.edges()
        .map(|(u, v)| adj[u] | adj[v] | bit(u) | bit(v))
        .collect()
}

/// Minimum hitting set, optionally restricted to independent sets.
struct HittingSet {
    n: usize,
    targets: Vec<Mask>,
    conflicts: Option<Vec<Mask>>,
    nodes: u64,
    budget: u64,
}

impl HittingSet {
    fn new(n: usize, mut targets: Vec<Mask>, conflicts: Option<Vec<Mask>>, budget: u64) -> Self {
        // a target containing another target is implied by it
        targets.sort_by_key(|t| (t.count_ones(), *t));
        targets.dedup();
        let mut kept: Vec<Mask> = Vec::with_capacity(targets.len());
        for t in targets {
            if !kept.iter().any(|&k| k & !t == 0) {
                kept.push(t);
            }
        }
        Self {
            n,
            targets: kept,
            conflicts,
            nodes: 0,
            budget,
        }
    }

    fn blocked_by(&self, v: usize) -> Mask {
        match &self.conflicts {
            Some(adj) => adj[v] | bit(v),
            None => bit(v),
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(Error::BudgetExceeded { best: None })
        } else {
            Ok(())
        }
    }

    /// Searches for a hitting set `chosen ∪ T` with `T ⊆ allowed` and
    /// `|T| <= left`. Returns the first one found.
    fn find_within(&mut self, chosen: Mask, allowed: Mask, left: usize) -> Result<Option<Mask>> {
        self.tick()?;
        let mut best_target: Option<Mask> = None;
        let mut unhit: Vec<Mask> = Vec::new();
        for &t in &self.targets {
            if t & chosen != 0 {
                continue;
            }
            let cand = t & allowed;
            if cand == 0 {
                return Ok(None);
            }
            if best_target.is_none_or(|b: Mask| cand.count_ones() < b.count_ones()) {
                best_target = Some(cand);
            }
            unhit.push(cand);
        }
        let Some(mut cand) = best_target else {
            return Ok(Some(chosen));
        };
        if left <= 1 {
            // one more vertex must hit every remaining target
            let common = unhit.iter().fold(allowed, |acc, &c| acc & c);
            return Ok(if left == 1 && common != 0 {
                Some(chosen | (common & common.wrapping_neg()))
            } else {
                None
            });
        }
        if packing_bound(&mut unhit) > left {
            return Ok(None);
        }
        let mut allowed = allowed;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let next_allowed = allowed & !self.blocked_by(v);
            if let Some(found) = self.find_within(chosen | bit(v), next_allowed, left - 1)? {
                return Ok(Some(found));
            }
            allowed &= !bit(v);
        }
        Ok(None)
    }

    /// Optimum value by repeatedly asking for a strictly smaller solution.
    fn minimum(&mut self, initial: Mask) -> Result<Mask> {
        let mut best = initial;
        loop {
            let size = best.count_ones() as usize;
            if size == 0 {
                return Ok(best);
            }
            match self.find_within(0, full_mask(self.n), size - 1) {
                Ok(Some(found)) => best = found,
                Ok(None) => return Ok(best),
                Err(_) => {
                    return Err(Error::BudgetExceeded {
                        best: Some(best.count_ones() as usize),
                    })
                }
            }
        }
    }

    /// Lexicographically least hitting set of size `size` (which must be
    /// the optimum).
    fn canonical(&mut self, size: usize) -> Result<Mask> {
        let full = full_mask(self.n);
        let mut chosen: Mask = 0;
        let mut allowed = full;
        for placed in 0..size {
            let mut found = false;
            let mut cand = allowed;
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                let after_v = above(v) & full;
                let next_allowed = allowed & after_v & !self.blocked_by(v);
                let remaining = size - placed - 1;
                if self
                    .find_within(chosen | bit(v), next_allowed, remaining)?
                    .is_some()
                {
                    chosen |= bit(v);
                    allowed = next_allowed;
                    found = true;
                    break;
                }
            }
            if !found {
                unreachable!("optimal size {size} has no completion");
            }
        }
        Ok(chosen)
    }

    fn solve(mut self, initial: Mask) -> Result<(Mask, u64)> {
        let best = self.minimum(initial)?;
        let size = best.count_ones() as usize;
        let canonical = self
            .canonical(size)
            .map_err(|_| Error::BudgetExceeded { best: Some(size) })?;
        Ok((canonical, self.nodes))
    }
}

/// Greedy count of pairwise-disjoint candidate sets; a lower bound on the
/// number of vertices still needed.
fn packing_bound(unhit: &mut [Mask]) -> usize {
    unhit.sort_unstable_by_key(|c| c.count_ones());
    let mut used: Mask = 0;
    let mut count = 0;
    for &c in unhit.iter() {
        if c & used == 0 {
            used |= c;
            count += 1;
        }
    }
    count
}

fn result(n: usize, witness: Mask, nodes: u64) -> ExactResult {
    ExactResult {
        value: witness.count_ones() as usize,
        witness: mask_to_set(n, witness),
        nodes_explored: nodes,
    }
}

/// Naive tier: combinations in increasing size and lexicographic order.
/// The first hit is the canonical optimum.
fn naive_hitting(
    n: usize,
    targets: &[Mask],
    conflicts: Option<&[Mask]>,
    budget: u64,
) -> Result<(Mask, u64)> {
    let mut nodes = 0u64;
    let hits = |s: Mask| targets.iter().all(|&t| t & s != 0);
    let independent = |s: Mask| match conflicts {
        None => true,
        Some(adj) => {
            let mut rest = s;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                if adj[v] & s != 0 {
                    return false;
                }
                rest &= rest - 1;
            }
            true
        }
    };
    for size in 0..=n {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            nodes += 1;
            if nodes > budget {
                return Err(Error::BudgetExceeded { best: None });
            }
            let s = idx.iter().fold(0, |m, &v| m | bit(v));
            if hits(s) && independent(s) {
                return Ok((s, nodes));
            }
            // next combination
            let mut i = size;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if idx[i] < n - size + i {
                    idx[i] += 1;
                    for j in i + 1..size {
                        idx[j] = idx[j - 1] + 1;
                    }
                    i = usize::MAX;
                    break;
                }
            }
            if i != usize::MAX {
                break;
            }
        }
    }
    Err(Error::BudgetExceeded { best: None })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tier {
    Auto,
    Naive,
    BranchAndBound,
}

fn independent_problem(g: &Graph) -> (Vec<Mask>, Vec<Mask>) {
    let adj = adjacency_masks(g);
    (edge_targets(g, &adj), adj)
}

/// ι^i(G): minimum independent isolating set with canonical witness.
pub fn iota_independent(g: &Graph) -> Result<ExactResult> {
    iota_independent_with(g, Tier::Auto, crate::coloring::DEFAULT_BUDGET)
}

pub fn iota_independent_with(g: &Graph, tier: Tier, budget: u64) -> Result<ExactResult> {
    check_size(g)?;
    let (targets, adj) = independent_problem(g);
    let naive = match tier {
        Tier::Auto => g.n() <= NAIVE_LIMIT,
        Tier::Naive => true,
        Tier::BranchAndBound => false,
    };
    let (w, nodes) = if naive {
        naive_hitting(g.n(), &targets, Some(&adj), budget)?
    } else {
        let initial = set_to_mask(&independent_dominating_set(g));
        HittingSet::new(g.n(), targets, Some(adj), budget).solve(initial)?
    };
    Ok(result(g.n(), w, nodes))
}

/// ι(G): minimum isolating set, no independence required.
pub fn iota(g: &Graph) -> Result<ExactResult> {
    iota_with(g, Tier::Auto, crate::coloring::DEFAULT_BUDGET)
}

pub fn iota_with(g: &Graph, tier: Tier, budget: u64) -> Result<ExactResult> {
    check_size(g)?;
    let adj = adjacency_masks(g);
    let targets = edge_targets(g, &adj);
    let naive = match tier {
        Tier::Auto => g.n() <= NAIVE_LIMIT,
        Tier::Naive => true,
        Tier::BranchAndBound => false,
    };
    let (w, nodes) = if naive {
        naive_hitting(g.n(), &targets, None, budget)?
    } else {
        let initial = set_to_mask(&independent_dominating_set(g));
        HittingSet::new(g.n(), targets, None, budget).solve(initial)?
    };
    Ok(result(g.n(), w, nodes))
}

/// γ_t(G): minimum set that every vertex has a neighbor in.
pub fn total_domination_number(g: &Graph) -> Result<ExactResult> {
    total_domination_with(g, Tier::Auto, crate::coloring::DEFAULT_BUDGET)
}

pub fn total_domination_with(g: &Graph, tier: Tier, budget: u64) -> Result<ExactResult> {
    check_size(g)?;
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let adj = adjacency_masks(g);
    let naive = match tier {
        Tier::Auto => g.n() <= NAIVE_LIMIT,
        Tier::Naive => true,
        Tier::BranchAndBound => false,
    };
    let (w, nodes) = if naive {
        naive_hitting(g.n(), &adj, None, budget)?
    } else {
        HittingSet::new(g.n(), adj.clone(), None, budget).solve(full_mask(g.n()))?
    };
    Ok(result(g.n(), w, nodes))
}

/// Looks for an independent isolating set with fewer than `size` vertices.
/// `Ok(None)` means proven absent.
pub fn independent_isolating_below(
    g: &Graph,
    size: usize,
    budget: u64,
) -> Result<Option<VertexSet>> {
    check_size(g)?;
    let (targets, adj) = independent_problem(g);
    if size == 0 {
        return Ok(None);
    }
    let mut hs = HittingSet::new(g.n(), targets, Some(adj), budget);
    Ok(hs
        .find_within(0, full_mask(g.n()), size - 1)?
        .map(|m| mask_to_set(g.n(), m)))
}

/// Constraint-propagating label search for `k` disjoint independent
/// isolating sets. Each vertex takes a label in `1..=k`, or label 0 (in no
/// set) when a partition is not required.
struct LabelSearch {
    n: usize,
    k: usize,
    adj: Vec<Mask>,
    targets: Vec<Mask>,
    nodes: u64,
    budget: u64,
}

#[derive(Clone)]
struct LabelState {
    assigned: Vec<Mask>,
    possible: Vec<Mask>,
}

impl LabelState {
    fn unassigned(&self, full: Mask) -> Mask {
        full & !self.assigned.iter().fold(0, |a, &m| a | m)
    }
}

impl LabelSearch {
    fn assign(&self, st: &mut LabelState, v: usize, c: usize) -> bool {
        let b = bit(v);
        if st.possible[c] & b == 0 {
            return false;
        }
        if c != 0 && self.adj[v] & st.assigned[c] != 0 {
            return false;
        }
        st.assigned[c] |= b;
        for (other, p) in st.possible.iter_mut().enumerate() {
            if other != c {
                *p &= !b;
            }
        }
        if c != 0 {
            st.possible[c] &= !self.adj[v];
        }
        true
    }

    fn domain(&self, st: &LabelState, v: usize) -> u32 {
        let b = bit(v);
        (0..=self.k).fold(0u32, |d, c| {
            if st.possible[c] & b != 0 {
                d | (1 << c)
            } else {
                d
            }
        })
    }

    fn propagate(&self, st: &mut LabelState) -> bool {
        let full = full_mask(self.n);
        loop {
            let mut changed = false;
            let mut rest = st.unassigned(full);
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let d = self.domain(st, v);
                if d == 0 {
                    return false;
                }
                if d.count_ones() == 1 {
                    if !self.assign(st, v, d.trailing_zeros() as usize) {
                        return false;
                    }
                    changed = true;
                }
            }
            let free = st.unassigned(full);
            for &t in &self.targets {
                // labels still missing on t need distinct free vertices
                let mut missing = 0;
                let mut cover = 0;
                for c in 1..=self.k {
                    if t & st.assigned[c] == 0 {
                        missing += 1;
                        cover |= t & st.possible[c] & free;
                    }
                }
                if missing > cover.count_ones() {
                    return false;
                }
                for c in 1..=self.k {
                    if t & st.assigned[c] != 0 {
                        continue;
                    }
                    let p = t & st.possible[c];
                    if p == 0 {
                        return false;
                    }
                    if p.count_ones() == 1 {
                        if !self.assign(st, p.trailing_zeros() as usize, c) {
                            return false;
                        }
                        changed = true;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn search(&mut self, mut st: LabelState) -> Result<Option<LabelState>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { best: None });
        }
        if !self.propagate(&mut st) {
            return Ok(None);
        }
        let unassigned = st.unassigned(full_mask(self.n));
        if unassigned == 0 {
            return Ok(Some(st));
        }
        // smallest domain per unit of degree, then smallest id; leaves and
        // other low-degree vertices are cheap to fill in last
        let mut rest = unassigned;
        let mut pick = (u32::MAX, 0u32, 0usize);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let size = self.domain(&st, v).count_ones();
            let deg = self.adj[v].count_ones().max(1);
            if pick.0 == u32::MAX || size * pick.1 < pick.0 * deg {
                pick = (size, deg, v);
            }
        }
        let v = pick.2;
        let domain = self.domain(&st, v);
        let mut tried_unused = false;
        let labels = (1..=self.k).chain(std::iter::once(0));
        for c in labels {
            if domain & (1 << c) == 0 {
                continue;
            }
            if c != 0 && st.assigned[c] == 0 {
                // unused labels are interchangeable
                if tried_unused {
                    continue;
                }
                tried_unused = true;
            }
            let mut next = st.clone();
            if self.assign(&mut next, v, c) {
                if let Some(done) = self.search(next)? {
                    return Ok(Some(done));
                }
            }
        }
        Ok(None)
    }
}

/// `k` pairwise-disjoint independent isolating sets (a partition of V when
/// `require_partition`). `Ok(None)` means proven absent; running out of
/// budget is `Err(BudgetExceeded)`. Sets are ordered by smallest member,
/// empty sets last.
pub fn disjoint_independent_isolating_sets(
    g: &Graph,
    k: usize,
    require_partition: bool,
) -> Result<Option<Vec<VertexSet>>> {
    disjoint_with_budget(g, k, require_partition, crate::coloring::DEFAULT_BUDGET)
}

pub fn disjoint_with_budget(
    g: &Graph,
    k: usize,
    require_partition: bool,
    budget: u64,
) -> Result<Option<Vec<VertexSet>>> {
    check_size(g)?;
    if k == 0 {
        return Err(Error::BadParameter("k must be at least 1".into()));
    }
    let n = g.n();
    let adj = adjacency_masks(g);
    let targets = edge_targets(g, &adj);
    let full = full_mask(n);
    let mut possible = vec![full; k + 1];
    if require_partition {
        possible[0] = 0;
    }
    let st = LabelState {
        assigned: vec![0; k + 1],
        possible,
    };
    let mut search = LabelSearch {
        n,
        k,
        adj,
        targets,
        nodes: 0,
        budget,
    };
    let Some(done) = search.search(st)? else {
        return Ok(None);
    };
    let mut sets: Vec<VertexSet> = (1..=k).map(|c| mask_to_set(n, done.assigned[c])).collect();
    sets.sort_by_key(|s| s.iter().next().unwrap_or(usize::MAX));
    Ok(Some(sets))
}
