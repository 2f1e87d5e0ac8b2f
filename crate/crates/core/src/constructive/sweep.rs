//! Rotation sweeps on proper 3-colorings.
//!
//! A sweep out of a bad edge `vw` (with `c(w) = c(v) + 1` mod 3) grows a set
//! `D` from `v`: a vertex `y` outside `D` joins when
//!
//! 1. it has a neighbor in `D` other than through the edge `vw`,
//! 2. every neighbor in `D` has color `c(y) - 1`, and
//! 3. every neighbor outside `D` has color `c(y) + 1`.
//!
//! Each join records arcs into `y` from its `D`-neighbors. The smallest
//! eligible id joins first, and the scan restarts after every join. Rotating
//! `D` (decrementing each color cyclically) keeps the coloring proper and
//! repairs bad edges near `D`; repeating until no bad edge remains, or until
//! a sweep covers the whole graph, leaves every bad edge on one pivot vertex.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, VertexSet};
use crate::isolation::{bad_edges, closed_neighborhood, fully_dominated_vertices, is_bad_edge};

/// `c + 1` in the cyclic order 1 → 2 → 3 → 1.
fn up(c: usize) -> usize {
    c % 3 + 1
}

/// `c - 1` in the cyclic order; this is the rotation 1 → 3 → 2 → 1.
fn down(c: usize) -> usize {
    (c + 1) % 3 + 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepState {
    /// `(v, w)` with `c(w) = c(v) + 1` before the rotation.
    pub pivot_edge: (usize, usize),
    pub d_set: VertexSet,
    /// Insertion order of `d_set`, starting with `v`.
    pub order: Vec<usize>,
    pub arcs: Vec<(usize, usize)>,
    /// Vertices actually rotated; empty until the sweep is applied.
    pub rotated: VertexSet,
    pub bad_before: usize,
    pub bad_after: usize,
}

impl SweepState {
    pub fn v(&self) -> usize {
        self.pivot_edge.0
    }

    pub fn w(&self) -> usize {
        self.pivot_edge.1
    }

    /// Vertices of `D` with no outgoing arc.
    pub fn sinks(&self) -> VertexSet {
        let mut s = self.d_set.clone();
        for &(x, _) in &self.arcs {
            s.remove(x);
        }
        s
    }

    pub fn trace_line(&self) -> String {
        format!(
            "sweep edge={}-{} |D|={} bad={}->{}",
            self.pivot_edge.0,
            self.pivot_edge.1,
            self.d_set.len(),
            self.bad_before,
            self.bad_after
        )
    }
}

#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub final_coloring: Coloring,
    pub pivot: Option<usize>,
    pub trace: Vec<SweepState>,
    /// The three color classes, with the pivot (if any) added to the class
    /// of the color missing from its closed neighborhood.
    pub sets: [VertexSet; 3],
}

impl SweepOutcome {
    pub fn trace_text(&self) -> String {
        let mut out = String::new();
        for st in &self.trace {
            out.push_str(&st.trace_line());
            out.push('\n');
        }
        match self.pivot {
            Some(p) => out.push_str(&format!("pivot {p}\n")),
            None => out.push_str("pivot none\n"),
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    /// Check the structural invariants of every sweep at runtime.
    pub checked: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            checked: cfg!(debug_assertions),
        }
    }
}

fn check_input(g: &Graph, c: &Coloring) -> Result<()> {
    if c.k() != 3 {
        return Err(Error::WrongK(c.k()));
    }
    if !c.is_total_proper(g) {
        return Err(Error::ImproperInput);
    }
    Ok(())
}

fn eligible(g: &Graph, c: &Coloring, in_d: &[bool], y: usize, e: (usize, usize)) -> bool {
    let cy = c.color(y);
    let mut has_d_neighbor = false;
    for &x in g.neighbors(y) {
        if in_d[x] {
            if c.color(x) != down(cy) {
                return false;
            }
            if (x, y) != e && (y, x) != e {
                has_d_neighbor = true;
            }
        } else if c.color(x) != up(cy) {
            return false;
        }
    }
    has_d_neighbor
}

/// Builds `D_e` and `F_e` for the bad edge `e` without rotating.
pub fn build_sweep(g: &Graph, c: &Coloring, e: (usize, usize)) -> Result<SweepState> {
    check_input(g, c)?;
    let (a, b) = e;
    if a >= g.n() || b >= g.n() || !g.has_edge(a, b) || !is_bad_edge(g, c, a, b) {
        return Err(Error::NotBadEdge(a.min(b), a.max(b)));
    }
    let (v, w) = if c.color(b) == up(c.color(a)) {
        (a, b)
    } else {
        (b, a)
    };
    let n = g.n();
    let mut in_d = vec![false; n];
    in_d[v] = true;
    let mut order = vec![v];
    let mut arcs = Vec::new();
    'grow: loop {
        for y in 0..n {
            if in_d[y] || !eligible(g, c, &in_d, y, (v, w)) {
                continue;
            }
            for &x in g.neighbors(y) {
                if in_d[x] && !(x == v && y == w) {
                    arcs.push((x, y));
                }
            }
            in_d[y] = true;
            order.push(y);
            continue 'grow;
        }
        break;
    }
    let d_set = VertexSet::from_ids(n, order.iter().copied())?;
    Ok(SweepState {
        pivot_edge: (v, w),
        d_set,
        order,
        arcs,
        rotated: VertexSet::new(n),
        bad_before: 0,
        bad_after: 0,
    })
}

/// Decrements the colors of `s` cyclically (1 → 3, 3 → 2, 2 → 1).
pub fn rotate(c: &Coloring, s: &VertexSet) -> Result<Coloring> {
    let mut out = c.clone();
    for v in s.iter() {
        if v >= c.len() {
            return Err(Error::VertexOutOfRange(v));
        }
        let cv = c.get(v).ok_or(Error::Unassigned(v))?;
        out.set(v, Some(down(cv)));
    }
    Ok(out)
}

fn violated(reason: String) -> Error {
    Error::InvariantViolated(reason)
}

/// Arcs and boundary edges all go up by one color before rotation.
fn check_pre_rotation(g: &Graph, c: &Coloring, st: &SweepState) -> Result<()> {
    let (v, w) = st.pivot_edge;
    for &(x, y) in &st.arcs {
        if (x, y) == (w, v) || (x, y) == (v, w) {
            return Err(violated(format!("arc {x}->{y} uses the sweep edge")));
        }
        if c.color(y) != up(c.color(x)) {
            return Err(violated(format!("arc {x}->{y} does not step up a color")));
        }
    }
    for x in st.d_set.iter() {
        for &y in g.neighbors(x) {
            if !st.d_set.contains(y) && c.color(y) != up(c.color(x)) {
                return Err(violated(format!("boundary edge {x}-{y} does not step up")));
            }
        }
    }
    Ok(())
}

/// After rotation: the coloring stays proper, and the vertices the sweep
/// guarantees to be fully dominated are.
fn check_post_rotation(g: &Graph, after: &Coloring, st: &SweepState) -> Result<()> {
    if !after.is_proper(g) {
        return Err(violated("rotation produced an improper coloring".into()));
    }
    let full = fully_dominated_vertices(g, after);
    let mut has_in = VertexSet::new(g.n());
    let mut has_out = VertexSet::new(g.n());
    for &(x, y) in &st.arcs {
        has_out.insert(x);
        has_in.insert(y);
    }
    for x in has_in.intersection(&has_out).iter() {
        if !full.contains(x) {
            return Err(violated(format!("through-vertex {x} not fully dominated")));
        }
    }
    let (v, w) = st.pivot_edge;
    for y in 0..g.n() {
        if st.d_set.contains(y) {
            continue;
        }
        let via_d = g
            .neighbors(y)
            .iter()
            .any(|&x| st.d_set.contains(x) && !(y == w && x == v));
        if via_d && !full.contains(y) {
            return Err(violated(format!("boundary vertex {y} not fully dominated")));
        }
    }
    Ok(())
}

fn apply_sweep(
    g: &Graph,
    c: &mut Coloring,
    e: (usize, usize),
    options: SweepOptions,
) -> Result<SweepState> {
    let mut st = build_sweep(g, c, e)?;
    st.bad_before = bad_edges(g, c)?.len();
    if options.checked {
        check_pre_rotation(g, c, &st)?;
    }
    let after = rotate(c, &st.d_set)?;
    if options.checked {
        check_post_rotation(g, &after, &st)?;
    }
    st.rotated = st.d_set.clone();
    st.bad_after = bad_edges(g, &after)?.len();
    *c = after;
    Ok(st)
}

fn touches(edge: (usize, usize), region: &VertexSet) -> bool {
    region.contains(edge.0) || region.contains(edge.1)
}

fn stalled(reason: impl Into<String>, trace: &[SweepState]) -> Error {
    Error::AlgorithmStalled {
        reason: reason.into(),
        trace: trace.to_vec(),
    }
}

/// Repeated rotation sweeps until no bad edge remains or all bad edges share
/// a pivot vertex. See the module docs.
pub fn eliminate_bad_edges(g: &Graph, c: &Coloring) -> Result<SweepOutcome> {
    eliminate_bad_edges_with(g, c, SweepOptions::default())
}

pub fn eliminate_bad_edges_with(
    g: &Graph,
    c: &Coloring,
    options: SweepOptions,
) -> Result<SweepOutcome> {
    let n = g.n();
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    check_input(g, c)?;
    let mut c = c.clone();
    let mut trace: Vec<SweepState> = Vec::new();
    let mut pivot = None;

    'outer: loop {
        let report = bad_edges(g, &c)?;
        let Some(first) = report.edges.first() else {
            break;
        };
        let before = report.len();
        let e = (first.u, first.v);
        let st = apply_sweep(g, &mut c, e, options)?;
        let whole = st.d_set.len() == n;
        let region = closed_neighborhood(g, &st.d_set)?;
        let mut prev = st.clone();
        trace.push(st);
        if whole {
            pivot = Some(prev.v());
            break;
        }

        // repeat sweeps out of e until the original neighborhood is clean
        let mut repeats = 0;
        loop {
            let report = bad_edges(g, &c)?;
            if !report.edges.iter().any(|b| touches((b.u, b.v), &region)) {
                break;
            }
            if !is_bad_edge(g, &c, e.0, e.1) {
                break;
            }
            repeats += 1;
            if repeats > n {
                return Err(stalled("repeat phase exceeded n sweeps", &trace));
            }
            let covers_nbhd = g
                .neighbors(prev.v())
                .iter()
                .all(|&x| prev.d_set.contains(x));
            let next = build_sweep(g, &c, e)?;
            if covers_nbhd {
                if next.v() != prev.v() {
                    return Err(stalled("repeat sweep changed its root", &trace));
                }
                if !(next.d_set.is_subset(&prev.d_set) && next.d_set.len() < prev.d_set.len()) {
                    return Err(stalled("repeat sweep did not shrink D", &trace));
                }
            }
            let st = apply_sweep(g, &mut c, e, options)?;
            let whole = st.d_set.len() == n;
            prev = st.clone();
            trace.push(st);
            if whole {
                pivot = Some(prev.v());
                break 'outer;
            }
        }

        let after = bad_edges(g, &c)?.len();
        if after >= before {
            return Err(stalled(
                format!("bad edges did not decrease ({before} -> {after})"),
                &trace,
            ));
        }
    }

    let report = bad_edges(g, &c)?;
    if report.is_empty() {
        pivot = None;
    }
    if let Some(p) = pivot {
        if let Some(b) = report.edges.iter().find(|b| b.u != p && b.v != p) {
            return Err(stalled(
                format!("bad edge {}-{} avoids pivot {p}", b.u, b.v),
                &trace,
            ));
        }
    }

    let mut sets = [c.class(1), c.class(2), c.class(3)];
    if let Some(p) = pivot {
        let mut present = [false; 4];
        present[c.color(p)] = true;
        for &u in g.neighbors(p) {
            present[c.color(u)] = true;
        }
        let missing = (1..=3)
            .find(|&m| !present[m])
            .ok_or_else(|| stalled(format!("pivot {p} sees every color"), &trace))?;
        sets[missing - 1].insert(p);
    }
    Ok(SweepOutcome {
        final_coloring: c,
        pivot,
        trace,
        sets,
    })
}
