//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any criterion fails.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::thread;
use std::time::{Duration, Instant};

use num_rational::Ratio;

use isoset::checks::{self, Check, Outcome, Sampler};
use isoset::coloring::{chromatic_number, DEFAULT_BUDGET};
use isoset::constructive::{bipartite_bound, tripartite_bound};
use isoset::exact::{
    disjoint_independent_isolating_sets, independent_isolating_below, iota, iota_independent,
};
use isoset::gadgets::{build_j, connected_graphs, cycle, gen_jewel, gen_m, gen_p2_corona};
use isoset::isolation::{is_independent_isolating, is_isolating};
use isoset::VertexSet;

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

/// Where stall traces are archived.
fn archive_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance")
}

struct Batch {
    pass: usize,
    problems: Vec<String>,
}

/// Runs `checks` on `count` sampled instances with seeds `seed..seed+count`.
fn batch(
    kind: Sampler,
    n: (usize, usize),
    k: usize,
    count: usize,
    seed: u64,
    list: &[Check],
) -> Batch {
    let mut out = Batch {
        pass: 0,
        problems: Vec::new(),
    };
    for i in 0..count as u64 {
        let s = seed + i;
        let inst = match checks::sample(kind, n.0, n.1, k, None, s) {
            Ok(inst) => inst,
            Err(e) => {
                out.problems.push(format!("seed {s}: sampling failed: {e}"));
                continue;
            }
        };
        let mut ok = true;
        for &c in list {
            let res = checks::run(c, &inst.graph, &inst.ctx);
            if let Outcome::Stalled(trace) = &res {
                let dir = archive_dir();
                let _ = std::fs::create_dir_all(&dir);
                let path = dir.join(format!("stall-{}-{s}.trace", kind_name(kind)));
                let body = format!("{}\n{trace}\n", isoset::io::write_edge_list(&inst.graph));
                let _ = std::fs::write(&path, body);
            }
            if !res.is_pass() {
                ok = false;
                out.problems
                    .push(format!("seed {s} n={} {c}: {res}", inst.graph.n()));
            }
        }
        if ok {
            out.pass += 1;
        }
    }
    out
}

fn kind_name(kind: Sampler) -> String {
    use clap::ValueEnum;
    kind.to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

fn summarize(batches: &[Batch], total: usize) -> Verdict {
    let pass: usize = batches.iter().map(|b| b.pass).sum();
    let problems: Vec<&String> = batches.iter().flat_map(|b| &b.problems).collect();
    let mut detail = format!("{pass}/{total} instances");
    if let Some(first) = problems.first() {
        let _ = write!(detail, "; {} problems, first: {first}", problems.len());
    }
    verdict(pass == total && problems.is_empty(), detail)
}

fn secs(d: Duration) -> String {
    format!("{:.1}s", d.as_secs_f64())
}

/// Extremal formulas for M_r and J_m.
fn c01_extremal() -> Verdict {
    let mut notes = Vec::new();
    let mut ok = true;
    for r in [2usize, 3] {
        let (g, known) = gen_m(r).unwrap();
        let t = Instant::now();
        let res = iota_independent(&g);
        let good = matches!(&res, Ok(x) if Some(x.value) == known.iota_independent
            && is_independent_isolating(&g, &x.witness));
        ok &= good;
        notes.push(format!(
            "M_{r}={} in {}",
            res.map(|x| x.value.to_string())
                .unwrap_or_else(|e| e.to_string()),
            secs(t.elapsed())
        ));
    }
    for m in 1..=5 {
        let (g, _) = gen_jewel(m).unwrap();
        let good = matches!(iota_independent(&g), Ok(x) if x.value == m);
        ok &= good;
        if !good {
            notes.push(format!("J_{m} wrong"));
        }
    }
    notes.push("J_1..J_5 exact".into());

    // larger members: a known witness must verify and nothing smaller may turn up
    let (m4, known) = gen_m(4).unwrap();
    let r = 4;
    let mut w = VertexSet::new(m4.n());
    w.insert(0);
    for i in 1..r {
        for j in 0..r {
            w.insert(r + 2 * (i * r + j));
        }
    }
    let target = known.iota_independent.unwrap();
    ok &= w.len() == target && is_independent_isolating(&m4, &w);
    notes.push(below_note(
        "M_4",
        independent_isolating_below(&m4, target, DEFAULT_BUDGET),
        &mut ok,
    ));
    for m in 6..=8 {
        let (g, _) = gen_jewel(m).unwrap();
        let cert = tripartite_bound(&g, None).unwrap();
        ok &= cert.size() == m && is_independent_isolating(&g, &cert.witness);
        notes.push(below_note(
            &format!("J_{m}"),
            independent_isolating_below(&g, m, DEFAULT_BUDGET),
            &mut ok,
        ));
    }
    verdict(ok, notes.join(", "))
}

fn below_note(name: &str, res: isoset::Result<Option<VertexSet>>, ok: &mut bool) -> String {
    match res {
        Ok(None) => format!("{name} optimal (proven)"),
        Err(isoset::Error::BudgetExceeded { .. }) => {
            format!("{name} budget hit, nothing smaller found")
        }
        Ok(Some(s)) => {
            *ok = false;
            format!("{name} smaller set found: {s}")
        }
        Err(e) => {
            *ok = false;
            format!("{name} error: {e}")
        }
    }
}

/// P2-corona of C6.
fn c02_corona() -> Verdict {
    let (g, known) = gen_p2_corona(&cycle(6).unwrap());
    let lower = iota(&g).unwrap();
    let upper = bipartite_bound(&g).unwrap();
    let exact_ii = iota_independent(&g).unwrap();
    let ok = Some(lower.value) == known.iota
        && lower.value == 6
        && is_isolating(&g, &lower.witness)
        && upper.size() <= g.n() / 3
        && is_independent_isolating(&g, &upper.witness)
        && exact_ii.value == 6;
    verdict(
        ok,
        format!(
            "n={} iota={} constructive ii={} exact ii={}",
            g.n(),
            lower.value,
            upper.size(),
            exact_ii.value
        ),
    )
}

/// Bipartite mod-3 partition over trees and random bipartite graphs.
fn c03_bipartite_partition() -> Verdict {
    let t = Instant::now();
    let list = [Check::Mod3Partition, Check::Mod3Bound];
    let a = batch(Sampler::Tree, (3, 40), 2, 250, 3_000, &list);
    let b = batch(Sampler::Bipartite, (3, 40), 2, 250, 3_500, &list);
    let took = t.elapsed();
    let mut v = summarize(&[a, b], 500);
    v.pass &= took < Duration::from_secs(120);
    v.detail.push_str(&format!(" in {}", secs(took)));
    v
}

/// Exact independent isolation against total domination on bipartite graphs.
fn c04_total_domination() -> Verdict {
    let a = batch(
        Sampler::Tree,
        (2, 14),
        2,
        100,
        4_000,
        &[Check::TotalDomination],
    );
    let b = batch(
        Sampler::Bipartite,
        (2, 14),
        2,
        100,
        4_500,
        &[Check::TotalDomination],
    );
    summarize(&[a, b], 200)
}

/// Rotation sweep on 3-partite graphs, checked mode.
fn c05_sweep() -> Verdict {
    let a = batch(Sampler::Kpartite, (3, 60), 3, 500, 5_000, &[Check::Sweep]);
    let mut v = summarize(&[a], 500);
    if !v.pass {
        v.detail
            .push_str(&format!("; traces in {}", archive_dir().display()));
    }
    v
}

/// Jewel graphs meet the sweep bound with equality.
fn c06_sharpness() -> Verdict {
    let mut ok = true;
    let mut sizes = Vec::new();
    for m in 2..=8 {
        let (g, _) = gen_jewel(m).unwrap();
        let cert = tripartite_bound(&g, None).unwrap();
        let good = cert.size() == m
            && cert.bound == Ratio::from_integer(m as u64)
            && (g.n() + 1) == 3 * m
            && is_independent_isolating(&g, &cert.witness);
        let exact_ok = m > 5 || iota_independent(&g).map(|x| x.value == m).unwrap_or(false);
        ok &= good && exact_ok;
        sizes.push(cert.size().to_string());
    }
    verdict(
        ok,
        format!("sizes for m=2..8: {}; exact for m<=5", sizes.join(",")),
    )
}

/// Three disjoint sets in J(G) exactly when G is 4-colorable.
fn c07_gadget() -> Verdict {
    let mut checked = 0;
    let mut bad = Vec::new();
    let mut k5_time = Duration::ZERO;
    for n in 1..=5 {
        for g in connected_graphs(n) {
            let colorable = chromatic_number(&g).unwrap() <= 4;
            let (j, _) = build_j(&g);
            let t = Instant::now();
            let res = disjoint_independent_isolating_sets(&j, 3, false);
            if g.m() == n * (n - 1) / 2 && n == 5 {
                k5_time = t.elapsed();
            }
            let good = match &res {
                Ok(Some(sets)) => colorable && sets.iter().all(|s| is_independent_isolating(&j, s)),
                Ok(None) => !colorable,
                Err(_) => false,
            };
            checked += 1;
            if !good {
                bad.push(format!(
                    "{:?}: {:?}",
                    g.edge_list(),
                    res.map(|r| r.is_some())
                ));
            }
        }
    }
    let ok = bad.is_empty() && k5_time < Duration::from_secs(120);
    let mut detail = format!("{checked} graphs, K5 proven absent in {}", secs(k5_time));
    if let Some(b) = bad.first() {
        detail = format!("{} mismatches, first {b}", bad.len());
    }
    verdict(ok, detail)
}

fn c08_operation_o() -> Verdict {
    summarize(
        &[batch(
            Sampler::ConnectedGnp,
            (1, 10),
            2,
            100,
            8_000,
            &[Check::ClonePath],
        )],
        100,
    )
}

fn c09_grundy() -> Verdict {
    let a = batch(Sampler::Kpartite, (4, 60), 4, 100, 9_000, &[Check::Grundy]);
    let b = batch(Sampler::Kpartite, (5, 60), 5, 100, 9_500, &[Check::Grundy]);
    summarize(&[a, b], 200)
}

fn c10_two_disjoint() -> Verdict {
    summarize(
        &[batch(
            Sampler::Gnp,
            (1, 40),
            2,
            500,
            10_000,
            &[Check::TwoSets],
        )],
        500,
    )
}

fn c11_outerplanar() -> Verdict {
    summarize(
        &[batch(
            Sampler::Polygon,
            (4, 16),
            2,
            50,
            11_000,
            &[Check::Outerplanar],
        )],
        50,
    )
}

fn c12_oracle() -> Verdict {
    summarize(
        &[batch(
            Sampler::Gnp,
            (1, 9),
            2,
            300,
            12_000,
            &[Check::Oracle],
        )],
        300,
    )
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("extremal formulas M_r and J_m", c01_extremal),
        ("P2-corona of C6", c02_corona),
        ("bipartite three-set partition", c03_bipartite_partition),
        ("bipartite ii <= gamma_t / 2", c04_total_domination),
        ("rotation sweep on 3-partite graphs", c05_sweep),
        ("jewel graphs meet (n+1)/3", c06_sharpness),
        ("J(G) gadget equivalence", c07_gadget),
        ("operation O adds one", c08_operation_o),
        ("Grundy bound on k-partite graphs", c09_grundy),
        ("two disjoint sets", c10_two_disjoint),
        ("outerplanar four-set partition", c11_outerplanar),
        ("naive and branch-and-bound agree", c12_oracle),
    ];
    let start = Instant::now();
    let results: Vec<(Verdict, Duration)> = thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|&(_, f)| {
                s.spawn(move || {
                    let t = Instant::now();
                    let v =
                        std::panic::catch_unwind(f).unwrap_or_else(|_| verdict(false, "panicked"));
                    (v, t.elapsed())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut failed = 0;
    for (i, ((name, _), (v, took))) in criteria.iter().zip(&results).enumerate() {
        let tag = if v.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {tag} {name} ({}) [{}]",
            i + 1,
            v.detail,
            secs(*took)
        );
        if !v.pass {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {}",
        criteria.len() - failed,
        secs(start.elapsed())
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
