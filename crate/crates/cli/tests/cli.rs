use std::fs;
use std::process::{Command, Output};

use revsense::families::{generate, FamilyId, FamilySpec};
use revsense::measures::{compute, MeasureId, MeasureOptions};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_revsense"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn csv_rows(path: &std::path::Path) -> Vec<Vec<String>> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn gen_prints_family_strings() {
    let out = stdout(&["gen", "--family", "u_k", "--param", "1", "--format", "tokens"]);
    assert_eq!(out.lines().last().unwrap(), "b a #_1 a &_1");
    let out = stdout(&["gen", "--family", "w_sigma", "--param", "6", "--format", "tokens"]);
    assert_eq!(out.lines().last().unwrap().split(' ').count(), 16);
    let out = stdout(&["gen", "--family", "t55"]);
    assert_eq!(out.trim_end().len(), 55);
    let rev = stdout(&["gen", "--family", "t55", "--reverse"]);
    assert_eq!(rev.trim_end(), out.trim_end().chars().rev().collect::<String>());
}

#[test]
fn gen_writes_to_file_and_measure_reads_it_back() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u3.txt");
    let p = path.to_str().unwrap();
    stdout(&["gen", "--family", "u_k", "--param", "3", "-o", p]);
    let out = stdout(&["measure", "--input", p, "--measures", "r,r_b"]);
    assert_eq!(out, "r=10\nr_b=11\n");
}

#[test]
fn measure_on_witness_and_its_reverse() {
    assert_eq!(stdout(&["measure", "--family", "t55", "--measures", "z"]), "z=14\n");
    assert_eq!(stdout(&["measure", "--family", "t55", "--measures", "z", "--reverse"]), "z=6\n");
}

#[test]
fn measure_on_input_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.txt");
    fs::write(&path, "baabaaba\n").unwrap();
    let out = stdout(&["measure", "--input", path.to_str().unwrap(), "--measures", "r,r_b"]);
    assert_eq!(out, "r=2\nr_b=4\n");
}

#[test]
fn measure_small_w_sigma() {
    let out = stdout(&["measure", "--family", "w_sigma", "--param", "2", "--measures", "z,v"]);
    assert_eq!(out, "z=3\nv=3\n");
}

#[test]
fn unknown_measure_exits_3() {
    let out = run(&["measure", "--family", "u_k", "--param", "1", "--measures", "foo"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn invalid_parameter_exits_2() {
    let out = run(&["verify", "--family", "w_sigma", "--range", "3:3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("σ must be even"));
    let out = run(&["gen", "--family", "nope", "--param", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_u_k_writes_600_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u.csv");
    stdout(&["sweep", "--family", "u_k", "--range", "1:100", "--measures", "r,r_dollar,r_b", "--csv", path.to_str().unwrap()]);
    let rows = csv_rows(&path);
    assert_eq!(rows.len(), 600);
    for row in rows.iter().filter(|r| r[0] == "u_k" && r[3] == "r") {
        assert_eq!(row[6], row[1], "additive r gap equals k");
    }
}

#[test]
fn sweep_t_p_rev_ratio_stays_below_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    stdout(&["sweep", "--family", "T_p_rev", "--range", "2:20", "--measures", "z", "--csv", path.to_str().unwrap()]);
    let ratios: Vec<f64> = csv_rows(&path)
        .iter()
        .filter(|r| r[0] == "T_p_rev")
        .map(|r| r[7].parse::<f64>().unwrap() / r[8].parse::<f64>().unwrap())
        .collect();
    assert_eq!(ratios.len(), 19);
    assert!(ratios.windows(2).all(|w| w[0] < w[1]));
    assert!(ratios.iter().all(|&r| r < 3.0));
}

#[test]
fn sweep_c_fib_rev_lex_is_constant() {
    let out = stdout(&["sweep", "--family", "c_fib_rev", "--range", "9:25:2", "--measures", "v"]);
    let fwd: Vec<&str> = out
        .lines()
        .skip(1)
        .filter(|l| l.starts_with("c_fib_rev,"))
        .map(|l| l.split(',').nth(4).unwrap())
        .collect();
    assert_eq!(fwd.len(), 9);
    assert!(fwd.iter().all(|v| *v == "6"));
}

#[test]
fn sweep_is_byte_deterministic() {
    let args = ["sweep", "--family", "w_sigma", "--range", "2:40:2", "--measures", "z,v,delta"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn verify_quick_grid_passes() {
    let out = run(&["verify", "--family", "all", "--quick"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_u_k_full_range() {
    let out = stdout(&["verify", "--family", "u_k", "--range", "1:100", "--failures-only"]);
    let summary = out.lines().last().unwrap();
    let (passed, total) = summary.split_once(" of ").unwrap();
    assert_eq!(passed, total.split(' ').next().unwrap());
}

#[test]
fn show_bwt_table_of_u_3() {
    let out = stdout(&["show", "--family", "u_k", "--param", "3", "--view", "bwt"]);
    let rows: Vec<&str> = out.lines().filter(|l| l.contains(" | ")).collect();
    assert_eq!(rows.len(), 15);
    let last: Vec<&str> = rows.iter().map(|r| r.rsplit(" | ").next().unwrap()).collect();
    assert_eq!(last.join(" "), "a a a a a a b #_1 b #_2 b #_3 &_3 &_1 &_2");
    assert!(out.ends_with("r=10\n"));
}

#[test]
fn show_parsings() {
    let out = stdout(&["show", "--family", "w_sigma", "--param", "6", "--view", "lz"]);
    assert!(out.ends_with("lz=13\n"));
    assert_eq!(out.lines().count(), 14);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.txt");
    fs::write(&path, "abracadabracabra").unwrap();
    let out = stdout(&["show", "--input", path.to_str().unwrap(), "--view", "lex"]);
    assert!(out.ends_with("lex=8\n"));
}

#[test]
fn show_refuses_long_strings() {
    let out = run(&["show", "--family", "T_p", "--param", "10", "--view", "lz"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cli_output_matches_library() {
    let opts = MeasureOptions::default();
    for (family, param) in [(FamilyId::Uk, 7), (FamilyId::TpRev, 3), (FamilyId::Fib, 12), (FamilyId::UnaryPlus, 30)] {
        let w = generate(&FamilySpec::new(family, param)).unwrap();
        let expected: String = MeasureId::ALL
            .iter()
            .map(|&m| format!("{}={}\n", m, compute(&w, m, opts).unwrap().value))
            .collect();
        let p = param.to_string();
        let got = stdout(&["measure", "--family", family.id(), "--param", &p, "--measures", "r,r_dollar,r_b,z,z_no,z_e,z_end,v,delta,e"]);
        assert_eq!(got, expected, "{family} {param}");
    }
}
