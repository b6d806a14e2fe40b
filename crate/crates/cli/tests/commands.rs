use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_agspectra")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv_rows(o: &Output) -> Vec<Vec<String>> {
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    r.records().map(|rec| rec.unwrap().iter().map(str::to_owned).collect()).collect()
}

#[test]
fn star_radius_is_half_order() {
    let o = run(&["radius", "--graph", "star:5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2.5");
}

#[test]
fn isolated_vertex_is_a_usage_error() {
    let o = run(&["radius", "--graph6", "B?"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn missing_source_is_rejected() {
    assert_eq!(run(&["radius"]).status.code(), Some(2));
}

#[test]
fn unicyclic_extremes_at_seven_report_maximum() {
    let o = run(&["verify", "unicyclic-extremes", "--n", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("3.4526"), "{}", stdout(&o));
}

#[test]
fn tables_match_known_extremes() {
    for (n, rows, last) in [(4, 2, 2.2536), (5, 5, 2.6035), (6, 13, 3.0113)] {
        let n_s = n.to_string();
        let o = run(&["--format", "csv", "tables", "--lo", &n_s, "--hi", &n_s]);
        assert_eq!(o.status.code(), Some(0));
        let table = csv_rows(&o);
        assert_eq!(table.len(), rows);
        let r: f64 = table.last().unwrap().last().unwrap().parse().unwrap();
        assert!((r - last).abs() <= 5e-5, "n={n}: {r}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "tables", "--lo", "6", "--hi", "6"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn output_file_and_io_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = run(&["--format", "json", "--output", path.to_str().unwrap(), "radius", "--graph", "cycle:6"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!((v["meta"]["value"].as_f64().unwrap() - 2.0).abs() <= 1e-9);

    let bad = dir.path().join("missing").join("r.json");
    let o = run(&["--output", bad.to_str().unwrap(), "radius", "--graph", "cycle:6"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn charpoly_of_ag_path() {
    // AG weights on P_4 are 3/(2√2), 1, 3/(2√2): λ⁴ − (13/4)λ² + 81/64.
    let o = run(&["--format", "csv", "charpoly", "--graph", "path:4"]);
    assert_eq!(o.status.code(), Some(0));
    let want = [81.0 / 64.0, 0.0, -13.0 / 4.0, 0.0, 1.0];
    let rows = csv_rows(&o);
    assert_eq!(rows.len(), want.len());
    for (row, w) in rows.iter().zip(want) {
        assert!((row[3].parse::<f64>().unwrap() - w).abs() <= 1e-9);
    }
}
