//! Per-instance property checks shared by `bench` and the test suites.

use std::fmt;

use crate::coloring::DEFAULT_BUDGET;
use crate::constructive::{
    bipartite_partition3, eliminate_bad_edges_with, k_colorable_bound, two_disjoint,
    verify_claim_bounds, SweepOptions,
};
use crate::error::{Error, Result};
use crate::exact::{self, Tier};
use crate::gadgets::operation_o;
use crate::generate::{gen_random, kpartite_coloring, Family, SplitMix64};
use crate::graph::{Coloring, Graph};
use crate::isolation::{bad_edges, is_dominating, is_independent_isolating};

/// Instances at or below this order also get compared with the exact optimum.
pub const EXACT_CROSSCHECK_LIMIT: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Check {
    /// Two disjoint sets: an independent dominating set and an independent isolating set.
    #[value(name = "two-sets", alias = "lemma1")]
    TwoSets,
    /// Bipartite: exact ι^i at most half the exact total domination number.
    #[value(name = "total-domination", alias = "thm2")]
    TotalDomination,
    /// Bipartite: distance-mod-3 classes partition V into independent isolating sets.
    #[value(name = "mod3-partition", alias = "thm3")]
    Mod3Partition,
    /// Bipartite: smallest distance class at most floor(n/3).
    #[value(name = "mod3-bound", alias = "thm4")]
    Mod3Bound,
    /// 3-colorable: rotation sweeps leave bad edges on one pivot; bound (n+1)/3.
    #[value(name = "sweep", alias = "thm5")]
    Sweep,
    /// k-colorable: Grundy candidates within (k+2)n/(2k+6).
    #[value(name = "grundy", alias = "thm9")]
    Grundy,
    /// Cloning a vertex with a 3-path raises ι^i by exactly one.
    #[value(name = "clone-path", alias = "lemma10")]
    ClonePath,
    /// Maximal outerplanar: partition into four independent isolating sets.
    #[value(name = "outerplanar", alias = "lemma11")]
    Outerplanar,
    /// Naive and branch-and-bound ι^i agree.
    #[value(name = "oracle")]
    Oracle,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Check::TwoSets => "two-sets",
            Check::TotalDomination => "total-domination",
            Check::Mod3Partition => "mod3-partition",
            Check::Mod3Bound => "mod3-bound",
            Check::Sweep => "sweep",
            Check::Grundy => "grundy",
            Check::ClonePath => "clone-path",
            Check::Outerplanar => "outerplanar",
            Check::Oracle => "oracle",
        };
        f.write_str(s)
    }
}

impl Check {
    /// Smallest order on which the check's statement applies.
    pub fn min_order(self) -> usize {
        match self {
            Check::Mod3Partition | Check::Mod3Bound | Check::Sweep => 3,
            Check::TotalDomination => 2,
            Check::Outerplanar => 4,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Stalled(String),
    Budget,
}

impl Outcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, Outcome::Pass)
    }

    fn from_error(err: Error) -> Outcome {
        match err {
            Error::BudgetExceeded { .. } => Outcome::Budget,
            Error::AlgorithmStalled { reason, trace } => {
                let lines: Vec<String> = trace.iter().map(|s| s.trace_line()).collect();
                Outcome::Stalled(format!("{reason}\n{}", lines.join("\n")))
            }
            other => Outcome::Fail(other.to_string()),
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Pass => f.write_str("pass"),
            Outcome::Fail(why) => write!(f, "FAIL ({why})"),
            Outcome::Stalled(why) => write!(f, "STALL ({})", why.lines().next().unwrap_or("")),
            Outcome::Budget => f.write_str("budget"),
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Outcome::Fail(format!($($msg)+));
        }
    };
}

macro_rules! attempt {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return Outcome::from_error(err),
        }
    };
}

/// Context an individual check may need beyond the graph.
#[derive(Clone, Debug, Default)]
pub struct Context {
    /// A known proper coloring (e.g. the part index of a k-partite draw).
    pub coloring: Option<Coloring>,
    /// Seed for checks that draw their own randomness.
    pub seed: u64,
}

pub fn run(check: Check, g: &Graph, ctx: &Context) -> Outcome {
    match check {
        Check::TwoSets => two_sets(g),
        Check::TotalDomination => total_domination(g),
        Check::Mod3Partition => mod3_partition(g),
        Check::Mod3Bound => mod3_bound(g),
        Check::Sweep => sweep(g, ctx.coloring.as_ref()),
        Check::Grundy => grundy(g, ctx.coloring.as_ref()),
        Check::ClonePath => clone_path(g, ctx.seed),
        Check::Outerplanar => outerplanar(g),
        Check::Oracle => oracle(g),
    }
}

pub fn two_sets(g: &Graph) -> Outcome {
    let (x, y) = two_disjoint(g);
    ensure!(x.is_disjoint(&y), "sets intersect");
    ensure!(
        g.is_independent(&x) && is_dominating(g, &x),
        "first set is not independent dominating"
    );
    ensure!(
        is_independent_isolating(g, &y),
        "second set is not independent isolating"
    );
    Outcome::Pass
}

pub fn total_domination(g: &Graph) -> Outcome {
    let ii = attempt!(exact::iota_independent(g));
    let gt = attempt!(exact::total_domination_number(g));
    ensure!(
        2 * ii.value <= gt.value,
        "iota_i = {} > gamma_t/2 = {}/2",
        ii.value,
        gt.value
    );
    Outcome::Pass
}

pub fn mod3_partition(g: &Graph) -> Outcome {
    let classes = attempt!(bipartite_partition3(g));
    let covered: usize = classes.iter().map(|c| c.len()).sum();
    ensure!(covered == g.n(), "classes do not partition V");
    ensure!(
        classes[0].is_disjoint(&classes[1])
            && classes[0].is_disjoint(&classes[2])
            && classes[1].is_disjoint(&classes[2]),
        "classes overlap"
    );
    for (i, c) in classes.iter().enumerate() {
        ensure!(
            is_independent_isolating(g, c),
            "class {i} is not independent isolating"
        );
    }
    Outcome::Pass
}

pub fn mod3_bound(g: &Graph) -> Outcome {
    let classes = attempt!(bipartite_partition3(g));
    let min = classes.iter().map(|c| c.len()).min().unwrap_or(0);
    ensure!(
        3 * min <= g.n(),
        "smallest class {min} exceeds n/3 for n = {}",
        g.n()
    );
    Outcome::Pass
}

pub fn sweep(g: &Graph, coloring: Option<&Coloring>) -> Outcome {
    let start = match coloring {
        Some(c) => c.clone(),
        None => match attempt!(crate::coloring::find_coloring(g, 3, DEFAULT_BUDGET)) {
            Some(c) => c,
            None => return Outcome::Fail("instance is not 3-colorable".into()),
        },
    };
    let out = attempt!(eliminate_bad_edges_with(
        g,
        &start,
        SweepOptions { checked: true }
    ));
    ensure!(
        out.final_coloring.is_total_proper(g),
        "final coloring improper"
    );
    let report = attempt!(bad_edges(g, &out.final_coloring));
    match out.pivot {
        None => ensure!(report.is_empty(), "bad edges remain without a pivot"),
        Some(p) => ensure!(
            report.edges.iter().all(|b| b.u == p || b.v == p),
            "bad edges do not share pivot {p}"
        ),
    }
    for (i, s) in out.sets.iter().enumerate() {
        ensure!(
            is_independent_isolating(g, s),
            "set {i} is not independent isolating"
        );
    }
    let all = out.sets[0].union(&out.sets[1]).union(&out.sets[2]);
    ensure!(all.len() == g.n(), "sets do not cover V");
    let total: usize = out.sets.iter().map(|s| s.len()).sum();
    ensure!(total <= g.n() + 1, "sets total {total} > n + 1");
    let min = out.sets.iter().map(|s| s.len()).min().unwrap();
    ensure!(3 * min <= g.n() + 1, "smallest set {min} exceeds (n+1)/3");
    if g.n() <= EXACT_CROSSCHECK_LIMIT {
        let opt = attempt!(exact::iota_independent(g));
        ensure!(
            min >= opt.value,
            "witness {min} below optimum {}",
            opt.value
        );
    }
    Outcome::Pass
}

pub fn grundy(g: &Graph, coloring: Option<&Coloring>) -> Outcome {
    let cert = attempt!(k_colorable_bound(g, coloring));
    ensure!(
        is_independent_isolating(g, &cert.witness),
        "witness does not verify"
    );
    ensure!(
        cert.within_bound(),
        "witness {} above bound {}",
        cert.size(),
        cert.bound
    );
    if let Some(stats) = &cert.stats {
        ensure!(
            verify_claim_bounds(g, stats),
            "claim bounds fail: {stats:?}"
        );
    }
    if g.n() <= EXACT_CROSSCHECK_LIMIT {
        let opt = attempt!(exact::iota_independent(g));
        ensure!(
            cert.size() >= opt.value,
            "witness below optimum {}",
            opt.value
        );
    }
    Outcome::Pass
}

pub fn clone_path(g: &Graph, seed: u64) -> Outcome {
    if g.n() == 0 {
        return Outcome::Fail("empty graph".into());
    }
    let x = SplitMix64::new(seed).index(g.n());
    let grown = attempt!(operation_o(g, x));
    let before = attempt!(exact::iota_independent(g)).value;
    let after = attempt!(exact::iota_independent(&grown)).value;
    ensure!(after == before + 1, "x = {x}: {before} -> {after}");
    Outcome::Pass
}

pub fn outerplanar(g: &Graph) -> Outcome {
    match attempt!(exact::disjoint_independent_isolating_sets(g, 4, true)) {
        Some(sets) => {
            for s in &sets {
                ensure!(
                    is_independent_isolating(g, s),
                    "returned set does not verify"
                );
            }
            Outcome::Pass
        }
        None => Outcome::Fail("no partition into four independent isolating sets".into()),
    }
}

pub fn oracle(g: &Graph) -> Outcome {
    let naive = attempt!(exact::iota_independent_with(g, Tier::Naive, DEFAULT_BUDGET));
    let bnb = attempt!(exact::iota_independent_with(
        g,
        Tier::BranchAndBound,
        DEFAULT_BUDGET
    ));
    ensure!(
        naive.value == bnb.value,
        "naive {} vs branch-and-bound {}",
        naive.value,
        bnb.value
    );
    ensure!(naive.witness == bnb.witness, "canonical witnesses differ");
    Outcome::Pass
}

/// Instance families for batch runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Sampler {
    Tree,
    Bipartite,
    Kpartite,
    Gnp,
    ConnectedGnp,
    Polygon,
}

#[derive(Clone, Debug)]
pub struct Sampled {
    pub family: Family,
    pub graph: Graph,
    pub ctx: Context,
}

/// Default edge probability when none is given: drawn per instance,
/// skewed toward the sparse end near the connectivity threshold, where
/// colorings have the most bad edges.
fn draw_p(rng: &mut SplitMix64, n: usize) -> f64 {
    let n = n.max(2) as f64;
    let lo = (n.ln() / n).min(1.0);
    let hi = lo.max(0.6);
    let u = rng.unit();
    lo + (hi - lo) * u * u
}

/// A random instance of order in `n_min..=n_max`, reproducible from `seed`.
/// `k` is the number of parts for [`Sampler::Kpartite`].
pub fn sample(
    kind: Sampler,
    n_min: usize,
    n_max: usize,
    k: usize,
    p: Option<f64>,
    seed: u64,
) -> Result<Sampled> {
    let floor = match kind {
        Sampler::Tree | Sampler::Gnp | Sampler::ConnectedGnp => 1,
        Sampler::Bipartite => 2,
        Sampler::Kpartite => k.max(1),
        Sampler::Polygon => 3,
    };
    if n_max < n_min.max(floor) {
        return Err(Error::BadParameter(format!(
            "order range {n_min}..={n_max} empty (need n >= {floor})"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let n = rng.range(n_min.max(floor), n_max);
    let mut p = p.unwrap_or_else(|| draw_p(&mut rng, n));
    let mut coloring = None;
    let family = match kind {
        Sampler::Tree => Family::Tree { n },
        Sampler::Polygon => Family::TriangulatedPolygon { n },
        Sampler::Gnp => Family::Gnp { n, p },
        Sampler::ConnectedGnp => Family::ConnectedGnp { n, p },
        Sampler::Bipartite => {
            let third = (n / 3).max(1);
            let left = rng.range(third, n - third);
            coloring = Some(layout_coloring(&[left, n - left])?);
            Family::Bipartite {
                left,
                right: n - left,
                p,
            }
        }
        Sampler::Kpartite => {
            let mut sizes = vec![1; k];
            for _ in k..n {
                sizes[rng.index(k)] += 1;
            }
            coloring = Some(layout_coloring(&sizes)?);
            Family::KPartite { sizes, p }
        }
    };
    let ctx_seed = rng.next_u64();
    let mut family = family;
    let graph = loop {
        match gen_random(&family, rng.next_u64()) {
            Ok(g) => break g,
            // too sparse to connect: move p halfway to one and redraw
            Err(Error::RetriesExhausted(_)) if p < 1.0 => {
                p = (p + 1.0) / 2.0;
                set_p(&mut family, p);
            }
            Err(e) => return Err(e),
        }
    };
    Ok(Sampled {
        family,
        graph,
        ctx: Context {
            coloring,
            seed: ctx_seed,
        },
    })
}

fn set_p(family: &mut Family, p: f64) {
    match family {
        Family::Bipartite { p: q, .. }
        | Family::KPartite { p: q, .. }
        | Family::Gnp { p: q, .. }
        | Family::ConnectedGnp { p: q, .. } => *q = p,
        Family::Tree { .. } | Family::TriangulatedPolygon { .. } => {}
    }
}

/// Part-index coloring, with at least three colors so that it can seed the
/// rotation sweep.
fn layout_coloring(sizes: &[usize]) -> Result<Coloring> {
    Coloring::new(sizes.len().max(3), kpartite_coloring(sizes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{cycle, gen_jewel};

    #[test]
    fn checks_pass_on_small_examples() {
        let c6 = cycle(6).unwrap();
        for check in [
            Check::TwoSets,
            Check::TotalDomination,
            Check::Mod3Partition,
            Check::Mod3Bound,
            Check::Sweep,
            Check::Oracle,
        ] {
            assert_eq!(
                run(check, &c6, &Context::default()),
                Outcome::Pass,
                "{check}"
            );
        }
        let (j3, _) = gen_jewel(3).unwrap();
        assert_eq!(grundy(&j3, None), Outcome::Pass);
        assert_eq!(clone_path(&j3, 5), Outcome::Pass);
    }

    #[test]
    fn bipartite_checks_reject_odd_cycles() {
        let c5 = cycle(5).unwrap();
        assert!(matches!(mod3_partition(&c5), Outcome::Fail(_)));
    }

    #[test]
    fn sampling_is_deterministic() {
        for kind in [
            Sampler::Tree,
            Sampler::Bipartite,
            Sampler::Kpartite,
            Sampler::Polygon,
        ] {
            let a = sample(kind, 5, 20, 3, None, 11).unwrap();
            let b = sample(kind, 5, 20, 3, None, 11).unwrap();
            assert_eq!(a.graph, b.graph);
            assert!(a.graph.is_connected());
            if let Some(c) = &a.ctx.coloring {
                assert!(c.is_total_proper(&a.graph));
            }
        }
        assert!(sample(Sampler::Polygon, 1, 2, 3, None, 0).is_err());
    }
}
