use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn iwasawa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iwasawa"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn matrix_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("iwasawa-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path
}

fn decompose(path: &Path) -> Output {
    iwasawa(&[
        "decompose",
        "--type",
        "A1",
        "--prime",
        "3",
        "--group-precision",
        "4",
        "--matrix",
        path.to_str().unwrap(),
    ])
}

#[test]
fn decompose_identity() {
    let path = matrix_file("identity.txt", "3 4 2\n1:^4 0:^4\n0:^4 1:^4\n");
    let out = decompose(&path);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("omega >=4\n"), "{text}");
    assert!(text.contains("  W1 0:^3\n"));
}

#[test]
fn decompose_opposite_root_product() {
    // x(3) x_-(3) = [[10, 3], [3, 1]]
    let path = matrix_file("product.txt", "3 4 2\n1,0,1:^4 0,1:^4\n0,1:^4 1:^4\n");
    let out = decompose(&path);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("omega 1\n"), "{text}");
    // 3 * 10^-1 = 57 mod 81, and 1 + v = 10.
    assert!(text.contains("  u(-1) 0,1,0,2:^4\n"), "{text}");
    assert!(text.contains("  w(1) 0,1,0,2:^4\n"), "{text}");
    assert!(text.contains("  v1 0,0,1:^4\n"), "{text}");
    // P = 12 mod 27
    assert!(text.contains("  W1 0,1,1:^3\n"), "{text}");
}

#[test]
fn decompose_rejects_matrix_outside_kernel() {
    let path = matrix_file("outside.txt", "3 4 2\n2:^4 1:^4\n1:^4 1:^4\n");
    let out = decompose(&path);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not in G(1)"));
}

#[test]
fn decompose_rejects_header_mismatch() {
    let path = matrix_file("header.txt", "5 4 2\n1:^4 0:^4\n0:^4 1:^4\n");
    assert_eq!(decompose(&path).status.code(), Some(2));
}

#[test]
fn present_rejects_two() {
    let out = iwasawa(&[
        "present",
        "--type",
        "A2",
        "--prime",
        "2",
        "--precision",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn present_writes_file() {
    let path = matrix_file("a1.json", "");
    let out = iwasawa(&[
        "present",
        "--type",
        "A1",
        "--prime",
        "5",
        "--precision",
        "4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(&path).unwrap();
    let doc = iwasawa_core::Presentation::from_json(&text).unwrap();
    assert_eq!(doc.constants.p_const, "0,1,3,1:^4");
    assert_eq!(doc.constants.q_const, "1,0,4,4:^4");
    assert_eq!(doc.generators.len(), 3);
}

#[test]
fn present_plain_lists_relations() {
    let out = iwasawa(&[
        "present",
        "--type",
        "A1",
        "--prime",
        "3",
        "--precision",
        "3",
        "--plain",
    ]);
    assert!(out.status.success());
    assert!(!stdout(&out).trim().is_empty());
}

#[test]
fn verify_small_system() {
    let out = iwasawa(&[
        "verify",
        "--type",
        "A1",
        "--prime",
        "3",
        "--degree",
        "4",
        "--precision",
        "3",
        "--seed",
        "7",
    ]);
    let text = stdout(&out);
    assert!(out.status.success(), "{text}");
    assert!(text.contains(" 0 failed"));
    assert!(!text.contains("[FAIL]"));
}

#[test]
fn verify_needs_a_realization() {
    let out = iwasawa(&[
        "verify",
        "--type",
        "G2",
        "--prime",
        "7",
        "--degree",
        "3",
        "--precision",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no realization"));
}
