use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const UCB: [(&str, u64); 6] = [("1", 933), ("2", 585), ("3", 918), ("4", 792), ("5", 584), ("6", 714)];

fn renyi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_renyi"))
        .args(args)
        .env_remove("RENYI_BASE")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn ucb_csv(dir: &Path) -> PathBuf {
    let body: String = UCB.iter().map(|(l, c)| format!("{l},{c}\n")).collect();
    write(dir, "ucb.csv", &format!("label,weight\n{body}"))
}

fn ucb_json(dir: &Path) -> PathBuf {
    let items: Vec<String> = UCB
        .iter()
        .map(|(l, c)| format!(r#"{{"label":"{l}","weight":{c}}}"#))
        .collect();
    write(dir, "ucb.json", &format!("[{}]", items.join(",")))
}

/// `(order, column)` pairs from a CSV table.
fn column(table: &str, name: &str) -> Vec<(String, f64)> {
    let mut lines = table.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let idx = header.iter().position(|h| *h == name).unwrap();
    lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[0].to_string(), f[idx].parse().unwrap())
        })
        .collect()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn named_spectrum_on_ucb() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&renyi(&["spectrum", s(&ucb_csv(dir.path())), "--orders", "named"]));
    let h = column(&out, "entropy");
    let orders: Vec<&str> = h.iter().map(|(o, _)| o.as_str()).collect();
    assert_eq!(orders, ["-inf", "-1", "0", "1", "inf"]);
    assert!((h[1].1 - 6f64.log2()).abs() < 1e-10);
    assert!((h[0].1 + (584.0f64 / 4526.0).log2()).abs() < 1e-10);
    assert!((h[4].1 + (933.0f64 / 4526.0).log2()).abs() < 1e-10);
    assert!(out.lines().skip(1).all(|l| l.ends_with(",6,4526,2")));
}

#[test]
fn uniform_input_gives_constant_entropy() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "u.csv", "a,2\nb,2\nc,2\nd,2\ne,2\nf,2\n");
    let out = stdout(&renyi(&["spectrum", s(&f), "--orders", "-10:10:21"]));
    for (_, h) in column(&out, "entropy") {
        assert!((h - 6f64.log2()).abs() < 1e-12);
    }
}

#[test]
fn base_change_is_a_scale() {
    let dir = tempfile::tempdir().unwrap();
    let f = ucb_csv(dir.path());
    let bits = column(&stdout(&renyi(&["spectrum", s(&f), "--base", "2"])), "entropy");
    let nats = column(&stdout(&renyi(&["spectrum", s(&f), "--base", "e"])), "entropy");
    for ((_, b), (_, n)) in bits.iter().zip(&nats) {
        assert!((n / b - std::f64::consts::LN_2).abs() < 1e-12);
    }
}

#[test]
fn base_from_environment_unless_flag_given() {
    let dir = tempfile::tempdir().unwrap();
    let f = ucb_csv(dir.path());
    let run = |extra: &[&str]| {
        let o = Command::new(env!("CARGO_BIN_EXE_renyi"))
            .args(["spectrum", s(&f), "--orders", "0"])
            .args(extra)
            .env("RENYI_BASE", "e")
            .output()
            .unwrap();
        stdout(&o)
    };
    assert!(run(&[]).lines().nth(1).unwrap().ends_with(",e"));
    assert!(run(&["--base", "2"]).lines().nth(1).unwrap().ends_with(",2"));
}

#[test]
fn csv_json_parity() {
    let dir = tempfile::tempdir().unwrap();
    let (c, j) = (ucb_csv(dir.path()), ucb_json(dir.path()));
    for format in ["csv", "json"] {
        let a = renyi(&["spectrum", s(&c), "--format", format, "--normalize"]);
        let b = renyi(&["spectrum", s(&j), "--format", format, "--normalize"]);
        assert_eq!(stdout(&a), stdout(&b));
    }
}

#[test]
fn json_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let f = ucb_csv(dir.path());
    let csv = column(&stdout(&renyi(&["spectrum", s(&f)])), "entropy");
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&renyi(&["spectrum", s(&f), "--format", "json"]))).unwrap();
    let rows = json.as_array().unwrap();
    assert_eq!(rows.len(), csv.len());
    assert_eq!(rows[0]["order"], "-inf");
    assert_eq!(rows.last().unwrap()["order"], "inf");
    for (row, (_, h)) in rows.iter().zip(&csv) {
        assert_eq!(row["entropy"].as_f64().unwrap(), *h);
    }
}

#[test]
fn normalize_reports_displaced_entropy() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&renyi(&[
        "spectrum",
        s(&ucb_csv(dir.path())),
        "--orders",
        "named",
        "--normalize",
    ]));
    let h = column(&out, "entropy");
    let d = column(&out, "displaced_entropy");
    for ((_, h), (_, d)) in h.iter().zip(&d) {
        assert!((h - 4526f64.log2() - d).abs() < 1e-9);
    }
    assert!((d[1].1 + 9.559_058_368_545_736).abs() < 1e-9);
}

#[test]
fn plot_files() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("fig");
    stdout(&renyi(&[
        "spectrum",
        s(&ucb_csv(dir.path())),
        "--plot-data",
        s(&prefix),
    ]));
    for suffix in ["_spectrum.dat", "_eqprob.dat"] {
        let text = std::fs::read_to_string(dir.path().join(format!("fig{suffix}"))).unwrap();
        let rows: Vec<Vec<f64>> = text
            .lines()
            .filter(|l| !l.starts_with('#'))
            .map(|l| l.split_whitespace().map(|t| t.parse().unwrap()).collect())
            .collect();
        assert!(rows.iter().all(|r| r.len() == 2 && r.iter().all(|v| v.is_finite())));
        assert_eq!(rows.first().unwrap()[0], -50.0);
        assert_eq!(rows.last().unwrap()[0], 50.0);
        assert_eq!(text.lines().filter(|l| l.contains("clamped")).count(), 2);
    }
}

#[test]
fn failures_leave_no_plot_files() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.csv", "a,1\nb,oops\n");
    let prefix = dir.path().join("fig");
    let o = renyi(&["spectrum", s(&bad), "--plot-data", s(&prefix)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let f = ucb_csv(dir.path());
    let code = |args: &[&str]| renyi(args).status.code().unwrap();
    assert_eq!(code(&["spectrum", s(&dir.path().join("missing.csv"))]), 1);
    assert_eq!(code(&["spectrum", s(&f), "--base", "1"]), 1);
    assert_eq!(code(&["spectrum", s(&f), "--orders", "1:2"]), 2);
    assert_eq!(code(&["spectrum", s(&f), "--orders", "0,0"]), 2);
    assert_eq!(code(&["invert", s(&f), "--target", "0.99"]), 5);
    assert_eq!(code(&["nonsense"]), 1);
}

#[test]
fn divergence_table() {
    let dir = tempfile::tempdir().unwrap();
    let p = ucb_csv(dir.path());
    let same = stdout(&renyi(&["divergence", s(&p), s(&p), "--orders", "named"]));
    assert!(column(&same, "divergence").iter().all(|(_, d)| d.abs() < 1e-12));
    assert!(!same.contains("log_n_minus_entropy"));

    let u = write(dir.path(), "u.csv", "6,1\n5,1\n4,1\n3,1\n2,1\n1,1\n");
    let out = stdout(&renyi(&["divergence", s(&p), s(&u), "--orders", "named"]));
    let d = column(&out, "divergence");
    let check = column(&out, "log_n_minus_entropy");
    let h = column(&stdout(&renyi(&["spectrum", s(&p), "--orders", "named"])), "entropy");
    for ((d, c), (_, h)) in d.iter().zip(&check).zip(&h) {
        assert!((d.1 - c.1).abs() < 1e-12);
        assert!((d.1 - (6f64.log2() - h)).abs() < 1e-12);
    }
}

#[test]
fn divergence_support_violation_names_label() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "p.csv", "a,1\nb,1\nc,1\n");
    let q = write(dir.path(), "q.csv", "a,1\nb,0\nc,1\n");
    let o = renyi(&["divergence", s(&p), s(&q)]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("\"b\""));
}

#[test]
fn invert_all_and_target() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&renyi(&["invert", s(&ucb_csv(dir.path())), "--all"]));
    let rows: Vec<Vec<&str>> = out.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 6);
    assert_eq!((rows[0][0], rows[0][2]), ("5", "-inf"));
    assert_eq!((rows[5][0], rows[5][2]), ("1", "inf"));
    for r in &rows {
        let (t, a): (f64, f64) = (r[1].parse().unwrap(), r[3].parse().unwrap());
        assert!((t - a).abs() <= 1e-9);
    }

    let u = write(dir.path(), "u.csv", "a,1\nb,1\nc,1\nd,1\ne,1\nf,1\n");
    let out = stdout(&renyi(&["invert", s(&u), "--target", "1/6"]));
    assert_eq!(out.lines().nth(1).unwrap().split(',').nth(2), Some("0"));
}
