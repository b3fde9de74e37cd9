use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn topolens(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_topolens"))
        .args(args)
        .env_remove("RUST_LOG")
        .output()
        .expect("binary runs")
}

fn write_edges(dir: &Path, name: &str, edges: &[(u32, u32)]) -> PathBuf {
    let path = dir.join(name);
    let body: String = edges.iter().map(|(u, v)| format!("{u} {v}\n")).collect();
    fs::write(&path, body).unwrap();
    path
}

fn complete(n: u32) -> Vec<(u32, u32)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn star(leaves: u32) -> Vec<(u32, u32)> {
    (1..=leaves).map(|i| (0, i)).collect()
}

/// summary.csv as header -> value.
fn summary(dir: &Path) -> BTreeMap<String, String> {
    let text = fs::read_to_string(dir.join("summary.csv")).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',');
    let row = lines.next().unwrap().split(',');
    header.map(str::to_string).zip(row.map(str::to_string)).collect()
}

fn read_csv_rows(path: &Path) -> Vec<Vec<String>> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn analyze_complete_graph() {
    let tmp = TempDir::new().unwrap();
    let input = write_edges(tmp.path(), "k5.txt", &complete(5));
    let out = tmp.path().join("out");
    let o = topolens(&["analyze", "--input", s(&input), "--out-dir", s(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let sm = summary(&out);
    assert_eq!(sm["nodes"], "5");
    assert_eq!(sm["links"], "10");
    assert_eq!(sm["mean_degree"], "4");
    assert_eq!(sm["density"], "1");
    assert_eq!(sm["alpha"], "NA");
    for f in ["pk.csv", "ccdf.csv", "knn.csv", "pathhist.csv", "richclub.csv"] {
        assert!(out.join(f).exists(), "{f} missing");
    }
    assert_eq!(fs::read_to_string(out.join("ccdf.csv")).unwrap(), "k,ccdf\n4,1\n");
}

#[test]
fn analyze_star() {
    let tmp = TempDir::new().unwrap();
    let input = write_edges(tmp.path(), "star.txt", &star(4));
    let out = tmp.path().join("out");
    let o = topolens(&["analyze", "--input", s(&input), "--out-dir", s(&out)]);
    assert!(o.status.success());
    let sm = summary(&out);
    assert_eq!(sm["alpha"], "-1");
    assert_eq!(sm["mean_path"], "1.6");
    assert_eq!(sm["diameter"], "2");
    assert_eq!(
        fs::read_to_string(out.join("pathhist.csv")).unwrap(),
        "d,pairs\n1,4\n2,6\n"
    );
    assert!(String::from_utf8_lossy(&o.stdout).contains("mean_path"));
}

#[test]
fn analyze_reads_as_rel_and_extracts_giant() {
    let tmp = TempDir::new().unwrap();
    let input = tmp.path().join("20240101.as-rel.txt");
    fs::write(&input, "# source: test\n1|2|-1\n2|3|0\n3|1|-1\n7|8|0\n").unwrap();
    let out = tmp.path().join("out");
    let o = topolens(&["analyze", "--input", s(&input), "--out-dir", s(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let sm = summary(&out);
    assert_eq!((sm["nodes"].as_str(), sm["links"].as_str()), ("5", "4"));
    assert_eq!(sm["giant_nodes"], "3");
    assert_eq!(sm["mean_path"], "1");
}

#[test]
fn malformed_input_exits_2_with_line_number() {
    let tmp = TempDir::new().unwrap();
    let input = tmp.path().join("bad.txt");
    fs::write(&input, "1 2\n3\n").unwrap();
    let o = topolens(&["analyze", "--input", s(&input), "--out-dir", s(&tmp.path().join("o"))]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains('2'));

    let o = topolens(&["analyze", "--input", "/nonexistent/x.txt", "--out-dir", s(tmp.path())]);
    assert_eq!(o.status.code(), Some(2));
    let o = topolens(&["analyze", "--bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(topolens(&["--help"]).status.code(), Some(0));
}

#[test]
fn help_documents_seed_offsets() {
    let o = topolens(&["--help"]);
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("seed+1") && text.contains("seed+i"));
}

#[test]
fn generate_er_complete() {
    let tmp = TempDir::new().unwrap();
    let out = tmp.path().join("er.txt");
    let o = topolens(&[
        "generate",
        "--model",
        "er",
        "--nodes",
        "10",
        "--links",
        "45",
        "--output",
        s(&out),
    ]);
    assert!(o.status.success());
    assert_eq!(fs::read_to_string(&out).unwrap().lines().count(), 45);
    let o = topolens(&[
        "generate",
        "--model",
        "er",
        "--nodes",
        "10",
        "--links",
        "46",
        "--output",
        s(&out),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn generate_ba_is_deterministic() {
    let tmp = TempDir::new().unwrap();
    let (a, b) = (tmp.path().join("a.txt"), tmp.path().join("b.txt"));
    for p in [&a, &b] {
        let o = topolens(&[
            "generate",
            "--model",
            "ba",
            "--nodes",
            "5",
            "--m",
            "1",
            "--seed",
            "7",
            "--output",
            s(p),
        ]);
        assert!(o.status.success());
    }
    let body = fs::read(&a).unwrap();
    assert_eq!(body, fs::read(&b).unwrap());
    assert_eq!(String::from_utf8(body).unwrap().lines().count(), 4);
}

#[test]
fn generate_plconfig_round_trips() {
    let tmp = TempDir::new().unwrap();
    let out = tmp.path().join("pl.txt");
    let args = [
        "generate", "--model", "plconfig", "--nodes", "100", "--gamma", "2.2", "--kmin", "2", "--output",
    ];
    let o = topolens(&[&args[..], &[s(&out)]].concat());
    assert!(o.status.success());
    let text = fs::read_to_string(&out).unwrap();
    let mut seen = std::collections::HashSet::new();
    for line in text.lines() {
        let mut t = line.split_whitespace();
        let (u, v): (u32, u32) = (t.next().unwrap().parse().unwrap(), t.next().unwrap().parse().unwrap());
        assert_ne!(u, v, "self-loop");
        assert!(seen.insert((u.min(v), u.max(v))), "duplicate {u} {v}");
    }
    let dir = tmp.path().join("a");
    let o = topolens(&["analyze", "--input", s(&out), "--out-dir", s(&dir)]);
    assert!(o.status.success());
    assert_eq!(summary(&dir)["links"], seen.len().to_string());
}

#[test]
fn paths_on_double_star() {
    let tmp = TempDir::new().unwrap();
    let input = write_edges(tmp.path(), "ds.txt", &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]);
    let out = tmp.path().join("out");
    let o = topolens(&["paths", "--input", s(&input), "--out-dir", s(&out), "--club-top", "2"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(
        fs::read_to_string(out.join("transit.csv")).unwrap(),
        "d,pairs\n2,2\n3,4\n"
    );
    let rows = read_csv_rows(&out.join("transit_summary.csv"));
    let header: Vec<String> = fs::read_to_string(out.join("transit_summary.csv"))
        .unwrap()
        .lines()
        .next()
        .unwrap()
        .split(',')
        .map(str::to_string)
        .collect();
    let get = |k: &str| rows[0][header.iter().position(|h| h == k).unwrap()].clone();
    assert_eq!(get("pairs"), "6");
    assert_eq!(get("interior_in_club"), "1");
    assert_eq!(get("strict_pattern"), "1");
    assert_eq!(get("mean_hops"), "2.66667");
}

#[test]
fn paths_rejects_unusable_clubs() {
    let tmp = TempDir::new().unwrap();
    let input = write_edges(tmp.path(), "star.txt", &star(4));
    let out = tmp.path().join("out");
    let o = topolens(&[
        "paths",
        "--input",
        s(&input),
        "--out-dir",
        s(&out),
        "--club-min-degree",
        "99",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = topolens(&["paths", "--input", s(&input), "--out-dir", s(&out), "--club-top", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = topolens(&[
        "paths",
        "--input",
        s(&input),
        "--out-dir",
        s(&out),
        "--club-top",
        "1",
        "--club-min-degree",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn attack_identity_and_hub_removal() {
    let tmp = TempDir::new().unwrap();
    let input = write_edges(tmp.path(), "star.txt", &star(4));
    let out = tmp.path().join("out");
    let o = topolens(&[
        "attack",
        "--input",
        s(&input),
        "--out-dir",
        s(&out),
        "--strategy",
        "targeted",
        "--fractions",
        "0,0.2",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let rows = read_csv_rows(&out.join("attack.csv"));
    assert_eq!(rows[0], ["0", "targeted-degree", "1", "1.6"]);
    assert_eq!(rows[1], ["0.2", "targeted-degree", "0.25", "NA"]);

    let o = topolens(&["attack", "--input", s(&input), "--out-dir", s(&out), "--fractions", "0"]);
    assert!(o.status.success());
    let rows = read_csv_rows(&out.join("attack.csv"));
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r[2] == "1"));
}

#[test]
fn attack_rejects_bad_fractions() {
    let tmp = TempDir::new().unwrap();
    let input = write_edges(tmp.path(), "star.txt", &star(4));
    for bad in ["0.2,0.1", "0,1", "x", "0.1,0.1"] {
        let o = topolens(&[
            "attack",
            "--input",
            s(&input),
            "--out-dir",
            s(tmp.path()),
            "--fractions",
            bad,
        ]);
        assert_eq!(o.status.code(), Some(2), "fractions {bad}");
    }
}

#[test]
fn attack_club_links() {
    let tmp = TempDir::new().unwrap();
    let input = write_edges(tmp.path(), "ds.txt", &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]);
    let out = tmp.path().join("out");
    let o = topolens(&[
        "attack",
        "--input",
        s(&input),
        "--out-dir",
        s(&out),
        "--club-top",
        "2",
        "--club-link-fraction",
        "0.5",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let rows = read_csv_rows(&out.join("clublinks.csv"));
    // internal_links, links_removed, connected (0/1), ...
    assert_eq!(rows[0][..3], ["1", "1", "0"]);
}

#[test]
fn outputs_are_byte_identical_across_runs_and_threads() {
    let tmp = TempDir::new().unwrap();
    let graph = tmp.path().join("g.txt");
    let o = topolens(&[
        "generate",
        "--model",
        "plconfig",
        "--nodes",
        "3000",
        "--gamma",
        "2.3",
        "--kmin",
        "2",
        "--seed",
        "5",
        "--output",
        s(&graph),
    ]);
    assert!(o.status.success());
    let run = |tag: &str, threads: &str| -> BTreeMap<String, Vec<u8>> {
        let mut files = BTreeMap::new();
        for cmd in ["analyze", "paths", "attack"] {
            let out = tmp.path().join(format!("{tag}-{cmd}"));
            let mut c = Command::new(env!("CARGO_BIN_EXE_topolens"));
            c.args([
                cmd,
                "--input",
                s(&graph),
                "--out-dir",
                s(&out),
                "--sample-sources",
                "200",
            ]);
            if cmd == "attack" {
                c.args(["--club-link-fraction", "0.3"]);
            }
            let o = c.env("TOPOLENS_THREADS", threads).output().unwrap();
            assert!(o.status.success(), "{cmd}: {}", String::from_utf8_lossy(&o.stderr));
            for e in fs::read_dir(&out).unwrap() {
                let e = e.unwrap();
                files.insert(
                    format!("{cmd}/{}", e.file_name().to_string_lossy()),
                    fs::read(e.path()).unwrap(),
                );
            }
        }
        files
    };
    let a = run("a", "1");
    let b = run("b", "1");
    let c = run("c", "4");
    assert!(a.len() >= 10);
    assert_eq!(a, b);
    assert_eq!(a, c);
}
