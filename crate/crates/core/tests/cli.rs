use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

use isoset::gadgets::{complete, cycle, gen_jewel, gen_m, path};
use isoset::generate::{gen_random, Family};
use isoset::io::write_edge_list;
use isoset::Graph;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("isoset").chain(args.iter().copied());
    let code = isoset::cli::main_with(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let r = run(&full);
    let last = r.out.lines().last().expect("report line");
    (r.code, serde_json::from_str(last).unwrap())
}

fn write_graph(dir: &TempDir, name: &str, g: &Graph) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, write_edge_list(g)).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn exact_c5() {
    let dir = TempDir::new().unwrap();
    let f = write_graph(&dir, "c5.txt", &cycle(5).unwrap());
    let (code, v) = json(&["exact", "-i", s(&f), "--mode", "ii"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], 2);
    assert_eq!(v["witness"], serde_json::json!([0, 2]));
    assert_eq!(v["verdict"], true);

    let text = run(&["exact", "-i", s(&f), "--mode", "gt"]);
    assert_eq!(text.code, 0);
    assert!(text.out.contains("value: 3"), "{}", text.out);
}

#[test]
fn exact_disjoint_found_and_absent() {
    let dir = TempDir::new().unwrap();
    let m2 = write_graph(&dir, "m2.txt", &gen_m(2).unwrap().0);
    let (code, v) = json(&["exact", "-i", s(&m2), "--mode", "disjoint", "--k", "3"]);
    assert_eq!((code, v["status"].as_str()), (0, Some("ok")));
    assert_eq!(v["sets"].as_array().unwrap().len(), 3);

    let m4 = write_graph(&dir, "m4.txt", &gen_m(4).unwrap().0);
    let r = run(&["exact", "-i", s(&m4), "--mode", "disjoint", "--k", "3"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("absent (proven)"), "{}", r.out);
}

#[test]
fn input_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let f = dir.path().join("loop.txt");
    fs::write(&f, "p 3 2\n0 1\n2 2\n").unwrap();
    let r = run(&["exact", "-i", s(&f)]);
    assert_eq!(r.code, 1);
    assert!(
        r.err.contains("line 3") && r.err.contains("self-loop"),
        "{}",
        r.err
    );

    let r = run(&["exact", "-i", s(&dir.path().join("missing.txt"))]);
    assert_eq!(r.code, 1);
    assert_eq!(run(&["exact"]).code, 1);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn budget_exits_two() {
    let dir = TempDir::new().unwrap();
    let f = write_graph(&dir, "m3.txt", &gen_m(3).unwrap().0);
    let (code, v) = json(&["exact", "-i", s(&f), "--budget", "3"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "budget");
    assert_eq!(v["budget"]["exhausted"], true);
}

#[test]
fn bound_examples() {
    let dir = TempDir::new().unwrap();
    let j6 = write_graph(&dir, "j6.txt", &gen_jewel(6).unwrap().0);
    let trace = dir.path().join("j6.trace");
    let (code, v) = json(&[
        "bound",
        "-i",
        s(&j6),
        "--method",
        "sweep",
        "--trace",
        s(&trace),
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        (v["value"].as_u64(), v["bound"].as_str()),
        (Some(6), Some("6"))
    );
    assert!(trace.exists());

    let tree = gen_random(&Family::Tree { n: 30 }, 4).unwrap();
    let t = write_graph(&dir, "tree.txt", &tree);
    let (code, v) = json(&["bound", "-i", s(&t), "--method", "bipartite"]);
    assert_eq!(code, 0);
    assert!(v["value"].as_u64().unwrap() <= 10);
    assert_eq!(v["bound"], "10");

    let k4 = write_graph(&dir, "k4.txt", &complete(4));
    let (code, v) = json(&["bound", "-i", s(&k4), "--method", "grundy"]);
    assert_eq!(code, 0);
    assert_eq!(
        (v["value"].as_u64(), v["bound"].as_str()),
        (Some(1), Some("12/7"))
    );

    let (code, v) = json(&["bound", "-i", s(&k4), "--method", "auto"]);
    assert_eq!((code, v["method"].as_str()), (0, Some("grundy")));
}

#[test]
fn bound_preconditions_exit_three() {
    let dir = TempDir::new().unwrap();
    let k4 = write_graph(&dir, "k4.txt", &complete(4));
    assert_eq!(run(&["bound", "-i", s(&k4), "--method", "sweep"]).code, 3);
    let c5 = write_graph(&dir, "c5.txt", &cycle(5).unwrap());
    let r = run(&["bound", "-i", s(&c5), "--method", "bipartite"]);
    assert_eq!(r.code, 3);
    assert!(r.err.contains("not bipartite"));
}

#[test]
fn verify_examples() {
    let dir = TempDir::new().unwrap();
    let c5 = write_graph(&dir, "c5.txt", &cycle(5).unwrap());
    let set = dir.path().join("s.txt");
    fs::write(&set, "0\n2\n").unwrap();
    let r = run(&["verify", "-i", s(&c5), "--set", s(&set), "--claim", "both"]);
    assert_eq!(r.code, 0, "{}", r.out);

    let p3 = write_graph(&dir, "p3.txt", &path(3));
    fs::write(&set, "0\n1\n").unwrap();
    let r = run(&[
        "verify",
        "-i",
        s(&p3),
        "--set",
        s(&set),
        "--claim",
        "independent",
    ]);
    assert_eq!(r.code, 4);
    assert!(r.out.contains("claim independent: fail"));

    let c6 = write_graph(&dir, "c6.txt", &cycle(6).unwrap());
    let part = dir.path().join("p.txt");
    fs::write(&part, "0 3\n1 4\n2 5\n").unwrap();
    let (code, v) = json(&[
        "verify",
        "-i",
        s(&c6),
        "--partition",
        s(&part),
        "--claim",
        "partition",
        "--k",
        "3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["claims"][0]["pass"], true);
    let (code, _) = json(&[
        "verify",
        "-i",
        s(&c6),
        "--partition",
        s(&part),
        "--claim",
        "partition",
        "--k",
        "2",
    ]);
    assert_eq!(code, 4);

    fs::write(&set, "9\n").unwrap();
    assert_eq!(run(&["verify", "-i", s(&c6), "--set", s(&set)]).code, 1);
}

#[test]
fn partition_command() {
    let dir = TempDir::new().unwrap();
    let c6 = write_graph(&dir, "c6.txt", &cycle(6).unwrap());
    let out = dir.path().join("parts.txt");
    let (code, v) = json(&["partition", "-i", s(&c6), "-o", s(&out)]);
    assert_eq!(code, 0);
    assert_eq!(v["sets"], serde_json::json!([[0, 3], [1, 5], [2, 4]]));
    assert_eq!(fs::read_to_string(&out).unwrap(), "0 3\n1 5\n2 4\n");
    let (code, v) = json(&["partition", "-i", s(&c6), "--exact", "--k", "3"]);
    assert_eq!((code, v["value"].as_u64()), (0, Some(3)));
}

#[test]
fn gen_and_reduce() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g.txt");
    let r = run(&[
        "gen",
        "--family",
        "kpartite",
        "--sizes",
        "3,3,3",
        "--p",
        "0.5",
        "--seed",
        "7",
        "-o",
        s(&g),
    ]);
    assert_eq!(r.code, 0, "{}", r.err);
    let again = dir.path().join("g2.txt");
    run(&[
        "gen",
        "--family",
        "kpartite",
        "--sizes",
        "3,3,3",
        "--p",
        "0.5",
        "--seed",
        "7",
        "-o",
        s(&again),
    ]);
    assert_eq!(fs::read(&g).unwrap(), fs::read(&again).unwrap());

    let k2 = write_graph(&dir, "k2.txt", &complete(2));
    let j = dir.path().join("j.txt");
    let r = run(&["reduce", "--gadget", "J", "-i", s(&k2), "-o", s(&j)]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(fs::read_to_string(&j).unwrap().starts_with("p 10 "));
    let map = fs::read_to_string(dir.path().join("j.txt.map")).unwrap();
    assert_eq!(map, "v 0 0 4 5 6\nv 1 1 7 8 9\ne 0 1 2 3\n");

    let (code, v) = json(&["gen", "--family", "m", "--r", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["known"]["iota_independent"], 7);
    assert_eq!(run(&["gen", "--family", "tree"]).code, 1);
}

#[test]
fn bench_examples() {
    let r = run(&[
        "bench",
        "--family",
        "tree",
        "--n-max",
        "40",
        "--count",
        "500",
        "--checks",
        "mod3-partition,mod3-bound",
    ]);
    assert_eq!(r.code, 0, "{}", r.out);
    assert_eq!(r.out.lines().filter(|l| l.starts_with('#')).count(), 500);
    assert!(r.out.contains("pass=1000 fail=0"));

    let r = run(&[
        "bench",
        "--family",
        "connected-gnp",
        "--n-max",
        "10",
        "--count",
        "100",
        "--checks",
        "clone-path",
    ]);
    assert_eq!(r.code, 0, "{}", r.out);
    let (code, v) = json(&[
        "bench", "--family", "kpartite", "--k", "4", "--n-min", "4", "--n-max", "40", "--count",
        "200", "--checks", "grundy",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], true);

    // a bipartite-only check on odd cycles fails and says so
    let r = run(&[
        "bench",
        "--family",
        "polygon",
        "--n-min",
        "5",
        "--n-max",
        "5",
        "--count",
        "3",
        "--checks",
        "mod3-partition",
    ]);
    assert_eq!(r.code, 4);

    let r = run(&[
        "bench",
        "--family",
        "tree",
        "--n-max",
        "12",
        "--count",
        "5",
        "--checks",
        "thm4,lemma1",
    ]);
    assert_eq!(r.code, 0, "{}", r.out);
    assert!(r.out.contains("pass=10 fail=0"), "{}", r.out);
}

#[test]
fn binary_runs() {
    let dir = TempDir::new().unwrap();
    let f = write_graph(&dir, "c5.txt", &cycle(5).unwrap());
    let out = Command::new(env!("CARGO_BIN_EXE_isoset"))
        .args(["exact", "-i", s(&f)])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("witness: 0 2"));
}
