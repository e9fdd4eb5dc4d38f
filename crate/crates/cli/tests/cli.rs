use std::process::Command;

fn tricomi(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_tricomi")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn table1_csv_header_and_round_trip() {
    let (code, out, _) = tricomi(&["table1", "--m", "100,1000", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("m,I1_oracle,I1_asym,I2_oracle,I2_asym"));
    assert!(lines.next().unwrap().starts_with("100,3.11609"));
    let table = tricomi_cli::Table::parse_csv(&out).unwrap();
    assert_eq!(table.render_csv().unwrap(), out);
}

#[test]
fn table1_markdown_row() {
    let (code, out, _) = tricomi(&["table1", "--m", "1000"]);
    assert_eq!(code, 0);
    assert!(out.contains("| 1000 | 4.058838(-3) | 4.060226(-3) | 9.413132(-3) | 9.414250(-3) |"), "{out}");
}

#[test]
fn table2_default_cells() {
    let (code, out, _) = tricomi(&["table2", "--precision", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("| 1 | 5.526(-3) | 3.686(-3) | 2.656(-3) |"), "{out}");
    assert!(out.contains("3 (closed-form C1)"));
}

#[test]
fn eval_j_all_routes() {
    let (code, out, _) = tricomi(&["eval", "J", "--n", "0", "--a", "0.5", "--mu", "0.5", "--method", "all"]);
    assert_eq!(code, 0);
    for tag in ["series", "accelerated", "pv"] {
        let line = out.lines().find(|l| l.contains(&format!("| {tag} |"))).unwrap();
        assert!(line.contains("3.141593(0)"), "{line}");
    }
}

#[test]
fn eval_scalars() {
    let (_, out, _) = tricomi(&["eval", "I", "--n", "0", "--m", "99", "--format", "csv"]);
    assert!(out.contains("oracle,1.772453850905516e-02"), "{out}");
    let (code, out, _) = tricomi(&["eval", "invert", "--y", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("| numeric | 0 |"), "{out}");
    let (_, out, _) = tricomi(&["eval", "profile", "--n", "1", "--x", "-0.5"]);
    assert!(out.contains("1.5"), "{out}");
    let (_, out, _) = tricomi(&["eval", "sigma", "--m", "1", "--mu", "0.5", "--method", "closed"]);
    assert!(out.contains("3.333333(-1)"), "{out}");
}

#[test]
fn exit_codes() {
    let (code, _, err) = tricomi(&["eval", "J", "--n", "0", "--a", "1.2", "--mu", "0.5"]);
    assert_eq!(code, 2, "{err}");
    assert_eq!(tricomi(&["table1", "--m", "1"]).0, 2);
    assert_eq!(tricomi(&["table1", "--precision", "20"]).0, 2);
    assert_eq!(tricomi(&["frobnicate"]).0, 2);
    // a single refinement level cannot meet the tolerance
    let (code, out, _) = tricomi(&["eval", "I", "--n", "1", "--m", "10", "--tol", "1e-300"]);
    assert_eq!(code, 3);
    assert!(out.contains("nc"), "{out}");
}

#[test]
fn writes_to_file() {
    let dir = std::env::temp_dir().join(format!("tricomi-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.csv");
    let (code, out, _) = tricomi(&["eval", "invert", "--y", "0.5", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("method,value,info\nnumeric,4.769362762044699e-01,"), "{text}");
    std::fs::remove_dir_all(dir).ok();
}
