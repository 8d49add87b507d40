use std::path::PathBuf;
use std::process::{Command, Output};

fn poisson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poisson"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn check_quad3() {
    let o = poisson(&["check", "catalog:quad3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("valid: yes"));
    assert!(out.contains("homogeneity: degree 2"));
    assert!(out.contains("unimodular: yes"));
}

#[test]
fn shipped_document_matches_catalog() {
    let doc: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "docs", "quad3.json"]
        .iter()
        .collect();
    let a = stdout(&poisson(&["trace", "--tsv", doc.to_str().unwrap()]));
    let b = stdout(&poisson(&["trace", "--tsv", "catalog:quad3"]));
    assert_eq!(a, b);
    assert_eq!(a, "var\ttrace\nx\t0\ny\t0\nz\t0\n");
}

#[test]
fn unimodular_log_canonical_traces() {
    let o = poisson(&["trace", "catalog:logcan3u"]);
    let out = stdout(&o);
    assert_eq!(out.matches("= 0").count(), 3, "{out}");
    assert!(out.contains("unimodular: yes"));
    let out = stdout(&poisson(&["trace", "catalog:logcan3"]));
    assert!(out.contains("tr(dX1) = 3*X1"), "{out}");
    assert!(out.contains("unimodular: no"));
}

#[test]
fn single_cell_duality() {
    let o = poisson(&["duality", "catalog:trivial1", "--max-weight", "0", "--tsv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("# shift\t1"));
    let rows: Vec<&str> = out
        .lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .collect();
    assert_eq!(rows, vec!["0\t0\t1\t1\tok"]);
}

#[test]
fn jacobi_failure_exits_one_with_witness() {
    let o = poisson(&["check", &fixture("not_poisson.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("= -x - y - z"));
    let o = poisson(&["homology", &fixture("not_poisson.json")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    for args in [
        vec!["check".to_string(), fixture("bad_expr.json")],
        vec!["check".into(), "missing.json".into()],
        vec!["check".into(), "catalog:nope".into()],
        vec![
            "homology".into(),
            "catalog:quad3".into(),
            "--coeff".into(),
            "both".into(),
        ],
        vec!["frobnicate".into()],
    ] {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(poisson(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn homology_tsv_layout() {
    let out = stdout(&poisson(&[
        "homology",
        "catalog:plane",
        "--max-weight",
        "3",
        "--tsv",
    ]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n\tw\tdim");
    assert_eq!(lines.len(), 1 + 3 * 4);
    assert!(lines.contains(&"2\t2\t1"));
    assert!(lines.contains(&"0\t1\t0"));
}

#[test]
fn weighted_spec_duality() {
    let o = poisson(&["duality", &fixture("weighted.json"), "--max-weight", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("detected shift: 4"));
}

#[test]
fn reports_are_deterministic() {
    let args = ["catalog", "run", "duality", "--max-weight", "3", "--tsv"];
    let a = poisson(&args);
    let b = poisson(&args);
    assert_eq!(a.stdout, b.stdout);
    let mut seq = vec!["--sequential"];
    seq.extend(args);
    assert_eq!(a.stdout, poisson(&seq).stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn catalog_listing_and_run_check() {
    let out = stdout(&poisson(&["catalog"]));
    for id in [
        "trivial1", "plane", "so3", "quad3", "logcan2", "logcan3", "logcan3u",
    ] {
        assert!(out.lines().any(|l| l.starts_with(id)), "{id}");
    }
    let o = poisson(&["catalog", "run", "check"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).matches("valid: yes").count(),
        out.lines().count() - 1
    );
}

#[test]
fn shown_document_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for id in ["quad3", "logcan3", "jacobian"] {
        let json = poisson(&["catalog", "show", id]).stdout;
        let path = dir.path().join(format!("{id}.json"));
        std::fs::write(&path, json).unwrap();
        let from_file = stdout(&poisson(&[
            "homology",
            path.to_str().unwrap(),
            "--max-weight",
            "4",
            "--tsv",
        ]));
        let from_catalog = stdout(&poisson(&[
            "homology",
            &format!("catalog:{id}"),
            "--max-weight",
            "4",
            "--tsv",
        ]));
        assert_eq!(from_file, from_catalog, "{id}");
    }
}

#[test]
fn pbw_with_nu() {
    let o = poisson(&["pbw", "catalog:logcan2", "--nu", "--samples", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("nu: pass (shifts (1, -1)"), "{out}");
    let out = stdout(&poisson(&["pbw", "catalog:so3", "--nu", "--samples", "5"]));
    assert!(out.contains("nu: skipped"));
}
