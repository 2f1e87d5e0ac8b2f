//! Bound for graphs colored with `k >= 4` colors, built from a Grundy
//! coloring `A_1, ..., A_k`.
//!
//! Three candidates are produced: the smaller of `A_1` and `A_2`; for each
//! `m >= 3` the class `A_m` extended to isolate `G - N[A_m]`; and a partition
//! class of each large component of `G[A_1 ∪ A_2]` extended to isolate the
//! rest. The smallest is at most `(k+2)n / (2k+6)`.

use num_rational::Ratio;
use serde::Serialize;

use super::{
    bipartite_bound, bipartite_partition3, check_bound, isolate_remainder, smallest,
    tripartite_bound_with, Certificate, Method, SweepOptions,
};
use crate::coloring::{greedy_grundy_coloring, grundify};
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, VertexSet};
use crate::isolation::{closed_neighborhood, is_independent_isolating};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// The smaller of the two lowest classes.
    LowClasses,
    /// `A_m` plus isolating sets of the components of `G - N[A_m]`.
    ClassExtension { m: usize },
    /// Partition classes of the large two-colored components, extended.
    TwoColoredCore,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub claim: Claim,
    pub set: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KColorableStats {
    pub n: usize,
    pub k: usize,
    /// Class sizes `a_1..a_k`.
    pub a: Vec<usize>,
    /// `a_1 + a_2`.
    pub h: usize,
    /// Order of the union of the components of `G[A_1 ∪ A_2]` with at least
    /// three vertices.
    pub x: usize,
    /// `|J_m|` for `m = 3..=k`.
    pub extension_sizes: Vec<usize>,
    /// Best candidate of each kind.
    pub candidates: Vec<Candidate>,
}

impl KColorableStats {
    fn candidate(&self, pick: impl Fn(&Claim) -> bool) -> Option<&Candidate> {
        self.candidates.iter().find(|c| pick(&c.claim))
    }
}

fn coloring_bound(k: usize, n: usize) -> Ratio<u64> {
    Ratio::new(((k + 2) * n) as u64, (2 * k + 6) as u64)
}

/// Checks each candidate against the bound its construction guarantees:
///
/// * low classes: `|S| <= h/2`;
/// * class extensions: mean of `|J_m|` is at most `n/2 + (n-2h+x)/(2k-4)`;
/// * two-colored core: `|S| <= n/2 - x/6`;
///
/// and that the least of the three claim bounds is within `(k+2)n/(2k+6)`.
pub fn verify_claim_bounds(g: &Graph, stats: &KColorableStats) -> bool {
    let n = g.n() as i64;
    let k = stats.k as i64;
    let h = stats.h as i64;
    let x = stats.x as i64;
    if stats.k < 4 || stats.n != g.n() || stats.extension_sizes.len() != stats.k - 2 {
        return false;
    }
    let claim_low = Ratio::new(h, 2);
    let claim_ext = Ratio::new(n, 2) + Ratio::new(n - 2 * h + x, 2 * k - 4);
    let claim_core = Ratio::new(n, 2) - Ratio::new(x, 6);

    let low_ok = stats
        .candidate(|c| *c == Claim::LowClasses)
        .is_none_or(|c| Ratio::from_integer(c.set.len() as i64) <= claim_low);
    let total: usize = stats.extension_sizes.iter().sum();
    let mean = Ratio::new(total as i64, k - 2);
    let ext_ok = mean <= claim_ext;
    let core_ok = stats
        .candidate(|c| *c == Claim::TwoColoredCore)
        .is_none_or(|c| Ratio::from_integer(c.set.len() as i64) <= claim_core);

    let least = claim_low.min(claim_ext).min(claim_core);
    let overall = Ratio::new((k + 2) * n, 2 * k + 6);
    low_ok && ext_ok && core_ok && least <= overall
}

/// Candidate for `A_m`: the class plus, for each component of `G - N[A_m]`
/// with an edge, the smaller of two disjoint independent isolating sets.
fn class_extension(g: &Graph, class: &VertexSet) -> Result<VertexSet> {
    let closed = closed_neighborhood(g, class)?;
    Ok(class.union(&isolate_remainder(g, &closed)))
}

/// Candidate from the large components of `G[A_1 ∪ A_2]`.
fn two_colored_core(g: &Graph, low: &VertexSet) -> Result<(VertexSet, usize)> {
    let (h, map) = g.induced(low);
    let mut core = VertexSet::new(g.n());
    let mut x = 0;
    for comp in h.components() {
        if comp.len() < 3 {
            continue;
        }
        x += comp.len();
        let (sub, sub_map) = h.induced(&comp);
        let classes = bipartite_partition3(&sub)?;
        let best = smallest(&classes).expect("component has vertices");
        for v in best.iter() {
            core.insert(map[sub_map[v]]);
        }
    }
    let closed = closed_neighborhood(g, &core)?;
    Ok((core.union(&isolate_remainder(g, &closed)), x))
}

/// Grundy-based bound. Colorings with at most three colors are handed to
/// the bipartite or rotation-sweep constructions.
pub fn k_colorable_bound(g: &Graph, c: Option<&Coloring>) -> Result<Certificate> {
    let n = g.n();
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let start = match c {
        Some(c) if !c.is_total_proper(g) => return Err(Error::ImproperInput),
        Some(c) => c.clone(),
        None => greedy_grundy_coloring(g),
    };
    let grundy = grundify(g, &start)?;
    let k = grundy.max_color();
    match k {
        0 | 1 => unreachable!("connected graph on {n} >= 3 vertices has an edge"),
        2 => return bipartite_bound(g),
        3 => {
            let three = Coloring::new(3, grundy.to_vec().expect("total"))?;
            return tripartite_bound_with(g, Some(&three), SweepOptions::default());
        }
        _ => {}
    }

    let classes = grundy.classes();
    let a: Vec<usize> = classes.iter().map(VertexSet::len).collect();
    let low_set = classes[0].union(&classes[1]);

    let mut candidates = Vec::new();
    let low = if classes[1].len() < classes[0].len() {
        classes[1].clone()
    } else {
        classes[0].clone()
    };
    if !low.is_empty() {
        candidates.push(Candidate {
            claim: Claim::LowClasses,
            set: low,
        });
    }

    let mut extension_sizes = Vec::with_capacity(k - 2);
    let mut best_ext: Option<Candidate> = None;
    for (m, class) in classes.iter().enumerate().skip(2) {
        if class.is_empty() {
            continue;
        }
        let set = class_extension(g, class)?;
        extension_sizes.push(set.len());
        if best_ext.as_ref().is_none_or(|b| set.len() < b.set.len()) {
            best_ext = Some(Candidate {
                claim: Claim::ClassExtension { m: m + 1 },
                set,
            });
        }
    }
    candidates.extend(best_ext);

    let (core, x) = two_colored_core(g, &low_set)?;
    candidates.push(Candidate {
        claim: Claim::TwoColoredCore,
        set: core,
    });

    for cand in &candidates {
        if !is_independent_isolating(g, &cand.set) {
            return Err(Error::BoundViolated(format!(
                "{:?} candidate is not an independent isolating set",
                cand.claim
            )));
        }
    }

    let witness = candidates
        .iter()
        .min_by_key(|c| c.set.len())
        .map(|c| c.set.clone())
        .expect("at least one candidate");
    let bound = coloring_bound(k, n);
    check_bound(witness.len(), &bound, "grundy")?;
    let stats = KColorableStats {
        n,
        k,
        a,
        h: classes[0].len() + classes[1].len(),
        x,
        extension_sizes,
        candidates: candidates.clone(),
    };
    Ok(Certificate {
        method: Method::Grundy,
        verified: is_independent_isolating(g, &witness),
        witness,
        sets: candidates.into_iter().map(|c| c.set).collect(),
        bound,
        stats: Some(stats),
        sweep: None,
    })
}
