use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use lcais_cli::report::SolveReport;

const TABLE_ONE: &str = "3 1 4 5 2 4 5 1\n4 2 3 1 2 5 3 1\n";

fn lcais(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcais"))
        .args(args)
        .output()
        .unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn solve_json(args: &[&str]) -> SolveReport {
    let mut all = vec!["solve", "--json", "--verify"];
    all.extend_from_slice(args);
    let out = lcais(&all);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn worked_example_with_dc() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "t1.txt", TABLE_ONE);
    let out = lcais(&[
        "solve",
        "--instance",
        &inst,
        "--delta",
        "3",
        "--algo",
        "dc",
        "--verify",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("length     4"), "{text}");
}

#[test]
fn all_algorithms_agree_and_json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "t1.txt", TABLE_ONE);
    for algo in ["brute", "dp3", "dc", "sparse"] {
        let r = solve_json(&["--instance", &inst, "--delta", "3", "--algo", algo]);
        assert_eq!(r.length, 4, "{algo}");
        assert_eq!(r.delta, 3);
        assert_eq!(r.matches, 12);
        assert_eq!(r.witness.a_indices.len(), 4);
        assert!(r.witness.a_indices.iter().all(|&i| (1..=8).contains(&i)));
    }
}

#[test]
fn separate_sequence_files_and_empty_b() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.txt", "3 1 4\n5 2\n");
    let b = write(dir.path(), "b.txt", "# nothing here\n");
    for algo in ["brute", "dp3", "dc", "sparse"] {
        let r = solve_json(&["--a", &a, "--b", &b, "--delta", "0", "--algo", algo]);
        assert_eq!((r.n, r.m, r.length), (5, 0, 0));
        assert!(r.witness.values.is_empty());
    }
}

#[test]
fn usage_and_parse_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "good.txt", TABLE_ONE);
    let bad = write(dir.path(), "bad.txt", "1 2\n3 4z\n");

    let out = lcais(&["solve", "--instance", &bad, "--delta", "1", "--algo", "dc"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).contains("line 2, column 3"),
        "{}",
        stderr(&out)
    );

    let out = lcais(&["solve", "--instance", &good, "--algo", "dc"]);
    assert_eq!(out.status.code(), Some(1), "missing --delta");

    let out = lcais(&[
        "solve",
        "--instance",
        &good,
        "--delta",
        "-1",
        "--algo",
        "dc",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("non-negative"));

    let out = lcais(&[
        "solve",
        "--instance",
        &good,
        "--delta",
        "1",
        "--algo",
        "quick",
    ]);
    assert_eq!(out.status.code(), Some(1));

    let missing = dir.path().join("nope.txt");
    let out = lcais(&[
        "solve",
        "--instance",
        missing.to_str().unwrap(),
        "--delta",
        "1",
        "--algo",
        "dc",
    ]);
    assert_eq!(out.status.code(), Some(1));

    assert_eq!(lcais(&["--help"]).status.code(), Some(0));
}

#[test]
fn brute_cutoff_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let row = (1..=30)
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    let inst = write(dir.path(), "big.txt", &format!("{row}\n{row}\n"));
    let out = lcais(&[
        "solve",
        "--instance",
        &inst,
        "--delta",
        "0",
        "--algo",
        "brute",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("limit of 22"), "{}", stderr(&out));
}

#[test]
fn gen_is_deterministic_and_solvable() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("p1.txt");
    let p2 = dir.path().join("p2.txt");
    for p in [&p1, &p2] {
        let out = lcais(&[
            "gen",
            "--n",
            "100",
            "--m",
            "100",
            "--sigma",
            "100",
            "--dist",
            "permutation",
            "--seed",
            "1",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    }
    assert_eq!(fs::read(&p1).unwrap(), fs::read(&p2).unwrap());

    let out = lcais(&[
        "gen", "--n", "8", "--m", "8", "--sigma", "5", "--dist", "constant",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let inst = write(
        dir.path(),
        "c.txt",
        std::str::from_utf8(&out.stdout).unwrap(),
    );
    let r = solve_json(&["--instance", &inst, "--delta", "0", "--algo", "sparse"]);
    assert_eq!(r.matches, 64);
    assert_eq!(r.length, 1);

    let out = lcais(&[
        "gen",
        "--n",
        "8",
        "--m",
        "8",
        "--sigma",
        "5",
        "--dist",
        "permutation",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bench_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(
        dir.path(),
        "spec.toml",
        "repetitions = 2\n[[sweep]]\ndist = \"constant\"\nsigma = 1\ndelta = 1\nsizes = [10, 20]\nalgos = [\"dc\"]\n",
    );
    let csv_path = dir.path().join("out.csv");
    let out = lcais(&[
        "bench",
        "--spec",
        &spec,
        "--out",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = fs::read_to_string(&csv_path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "n,m,delta,sigma,M,C,ell,algo,inner_steps,edges_relaxed,live_tuples_peak,wall_millis"
    );
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("10,10,1,1,100,"));
    let drop_wall = |l: &str| l.rsplit_once(',').unwrap().0.to_string();
    assert_eq!(drop_wall(lines[1]), drop_wall(lines[2]));

    let bad = write(dir.path(), "bad.toml", "[[sweep]]\nnope = 1\n");
    assert_eq!(lcais(&["bench", "--spec", &bad]).status.code(), Some(1));
}
