use std::io::Write;
use std::process::{Command, Stdio};

fn euclid(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_euclid"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = args.to_vec();
    full.push("--json");
    serde_json::from_str(&euclid(&full).0).unwrap()
}

#[test]
fn bottom_of_z8_has_order_type_three() {
    let v = json(&["euclid-bottom", "Z/8"]);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["result"]["order_type"], "3");
    let values: Vec<&str> = v["result"]["table"]["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["value"].as_str().unwrap())
        .collect();
    assert_eq!(values, ["0", "1", "0", "2", "0", "1", "0"]);
}

#[test]
fn unicode_input_ascii_output() {
    let (out, _, code) = euclid(&["ordinal-eval", "ω^2·3 + ω"]);
    assert_eq!(code, 5, "middle dot is not part of the grammar");
    assert!(out.is_empty());
    let (out, _, code) = euclid(&["ordinal-eval", "ω^2*3 + ω + 1"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("w^2*3 + w + 1"));
    assert!(out.is_ascii());
}

#[test]
fn printed_ordinals_reparse_through_the_cli() {
    for src in ["w^(w+1)*2 + w^3 + 7", "(-w)+(w*2+1)", "2.w # 3", "w^w^w"] {
        let first = json(&["ordinal-eval", src])["result"]["ordinal"]
            .as_str()
            .unwrap()
            .to_string();
        let again = json(&["ordinal-eval", &first])["result"]["ordinal"]
            .as_str()
            .unwrap()
            .to_string();
        assert_eq!(first, again);
    }
}

#[test]
fn realized_specs_reparse_to_the_same_order_type() {
    for a in ["w", "w*3", "w*2 + 4", "9"] {
        let spec = json(&["realize", a])["result"]["spec"].as_str().unwrap().to_string();
        let analyzed = json(&["ring-analyze", &spec]);
        let e = json(&["ordinal-eval", a])["result"]["ordinal"].clone();
        assert_eq!(analyzed["result"]["order_type"], e, "{spec}");
    }
    assert_eq!(
        euclid(&["realize", "w*2+3"]).0.lines().next(),
        Some("GF(2)[t] x GF(2)[t] x Z/8")
    );
}

#[test]
fn exit_statuses_follow_the_finding_category() {
    assert_eq!(euclid(&["euclid-bottom", "Z/12"]).2, 0);
    assert_eq!(euclid(&["euclid-bottom", "GF(3)[x,y]/(x,y)^2"]).2, 3);
    assert_eq!(euclid(&["euclid-bottom", "Z/4", "--max-size", "3"]).2, 4);
    assert_eq!(euclid(&["euclid-bottom", "Z/"]).2, 5);
    assert_eq!(euclid(&["euclid-bottom"]).2, 5);
    assert_eq!(euclid(&["no-such-verb"]).2, 5);
    assert_eq!(euclid(&["realize", "0"]).2, 2);
    assert_eq!(euclid(&["--help"]).2, 0);
}

#[test]
fn not_euclidean_finding_carries_a_report() {
    let v = json(&["euclid-bottom", "GF(2)[x,y]/(x,y)^2"]);
    assert_eq!(v["status"], "not-euclidean");
    assert_eq!(v["result"]["principal"], false);
    assert_eq!(v["result"]["not_euclidean"]["stuck"].as_array().unwrap().len(), 3);
}

#[test]
fn localization_echoes_seed_and_is_reproducible() {
    let a = json(&["model-localize", "2,5", "--seed", "42", "--samples", "300"]);
    assert_eq!(a["input"]["seed"], 42);
    assert_eq!(a["result"]["check"]["seed"], 42);
    assert_eq!(a["result"]["check"]["passed"], 300);
    assert_eq!(a, json(&["model-localize", "2,5", "--seed", "42", "--samples", "300"]));
}

#[test]
fn poset_length_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_euclid"))
        .args(["poset-length", "-", "--json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"# diamond\na < b\na < c\nb < d\nc < d\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["length"], 2);
    assert_eq!(v["result"]["values"]["c"], 1);
}

#[test]
fn windowed_integers_count_binary_digits() {
    let v = json(&["model-z", "--window", "100"]);
    for e in v["result"]["windowed"]["entries"].as_array().unwrap() {
        let n = e["size"].as_u64().unwrap();
        assert_eq!(e["value"].as_u64().unwrap(), 63 - n.leading_zeros() as u64);
    }
}
