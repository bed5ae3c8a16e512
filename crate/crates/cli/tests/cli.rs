use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_multicore")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn count_rect() {
    assert_eq!(stdout(&["count", "rect", "--s", "3", "--t", "5"]), "7\n");
    assert_eq!(stdout(&["count", "rect", "--s", "5", "--t", "7"]), "66\n");
}

#[test]
fn count_json_uses_decimal_strings() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["count", "multi-catalan", "--s", "10", "--p", "2", "--format", "json"]))
            .unwrap();
    assert_eq!(v["value"], "2188");
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["count", "rect", "--s", "29", "--t", "31", "--format", "json"])).unwrap();
    assert!(v["value"].is_string());
}

#[test]
fn count_gd() {
    assert_eq!(stdout(&["count", "gd", "--n", "6", "--k", "2"]), "51\n");
    assert_eq!(stdout(&["count", "gd", "--n", "-3", "--k", "2"]), "1\n");
}

#[test]
fn cores_of_two_three() {
    assert_eq!(stdout(&["cores", "--gens", "2,3", "--list"]), "∅\n(1)\n");
    assert_eq!(stdout(&["cores", "--gens", "2,3"]), "∅\n(1)\n");
}

#[test]
fn cores_count_and_total_size() {
    assert_eq!(stdout(&["cores", "--gens", "5,7,13", "--count-only"]), "51\n");
    assert_eq!(stdout(&["cores", "--gens", "3,4", "--count-only"]), "5\n");
    assert_eq!(stdout(&["cores", "--gens", "3,4,5", "--total-size"]), "5\n");
    assert_eq!(stdout(&["cores", "--gens", "4,5,6", "--total-size"]), "25\n");
}

#[test]
fn cores_of_five_seven_thirteen_include_the_large_one() {
    let text = stdout(&["cores", "--gens", "5,7,13"]);
    assert_eq!(text.lines().count(), 51);
    assert!(text.lines().any(|l| l == "(8,4,3,1)"));
}

#[test]
fn poset_plain_json_dot() {
    let plain = stdout(&["poset", "--gens", "5,7,13"]);
    assert!(plain.contains("gaps (9): 1 2 3 4 6 8 9 11 16"));
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["poset", "--gens", "5,7,13", "--format", "json"])).unwrap();
    assert_eq!(v["gaps"], serde_json::json!([1, 2, 3, 4, 6, 8, 9, 11, 16]));
    assert!(v["covers"].as_array().unwrap().contains(&serde_json::json!([16, 3])));
    let dot = stdout(&["poset", "--gens", "5,7,13", "--format", "dot"]);
    assert!(dot.starts_with("digraph"));
    assert!(dot.trim_end().ends_with('}'));
}

#[test]
fn poset_rejects_common_divisor() {
    let out = run(&["poset", "--gens", "4,6"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("common divisor 2"));
}

#[test]
fn rect_requires_coprime() {
    let out = run(&["count", "rect", "--s", "4", "--t", "6"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("not coprime"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["cores", "--gens", "2,3", "--bogus"]).status.code(), Some(1));
    assert_eq!(run(&["cores"]).status.code(), Some(1));
    assert_eq!(run(&["poset", "--gens", "3,5", "--format", "svg"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "symmetry", "--max-s", "2"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn listing_cap_is_a_hard_error() {
    let out = run(&["ideals", "--gens", "5,7,13", "--max-items", "50"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("50"));
    assert_eq!(stdout(&["ideals", "--gens", "5,7,13", "--max-items", "51"]).lines().count(), 51);
}

#[test]
fn qdet_coefficients() {
    assert_eq!(stdout(&["qdet", "--shape", "2,1"]), "1 1 2 1\n");
    assert_eq!(stdout(&["qdet", "--shape", "1"]), "1 1\n");
    let v: serde_json::Value = serde_json::from_str(&stdout(&["qdet", "--shape", "2,1", "--format", "json"])).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!(["1", "1", "2", "1"]));
    let total: u64 =
        stdout(&["qdet", "--s", "3", "--t", "5"]).split_whitespace().map(|c| c.parse::<u64>().unwrap()).sum();
    assert_eq!(total, 7);
}

#[test]
fn hooks_rendering() {
    let text = stdout(&["hooks", "--shape", "8,4,3,1", "--core-for", "5,4"]);
    assert!(text.contains("first column hooks: 1 4 6 11"));
    assert!(text.contains("5-core: yes"));
    assert!(text.contains("4-core: no"));
}

#[test]
fn verify_conjecture_small() {
    let out = run(&["verify", "conjecture", "--max-s", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("s=3") && text.contains("lhs 5") && text.contains("rhs 5"));
    assert!(text.contains("s=4") && text.contains("lhs 25") && text.contains("rhs 25"));
}

#[test]
fn verify_output_does_not_depend_on_jobs() {
    let base = ["verify", "equinumerous", "--max-sum", "11", "--max-n", "5", "--max-k", "3", "--format", "json"];
    let one = stdout(&base);
    let four = stdout(&[&base[..], &["--jobs", "4"]].concat());
    assert_eq!(one, four);
    let v: serde_json::Value = serde_json::from_str(&one).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_each_target_small() {
    for args in [
        &["verify", "symmetry", "--max-s", "9"][..],
        &["verify", "popoviciu", "--max-t", "7"],
        &["verify", "identity", "--max-n", "12", "--hessenberg-max-n", "6"],
        &["verify", "gf", "--p", "1,2", "--terms", "8"],
        &["verify", "kreweras", "--box", "3"],
        &["verify", "qdet", "--box", "3", "--max-sum", "9"],
        &["verify", "multi-catalan", "--max-s", "8", "--max-p", "3"],
        &["verify", "gd", "--max-n", "6", "--max-k", "3", "--bijection-max-n", "5", "--bijection-max-k", "2"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn outputs_are_deterministic() {
    for args in
        [&["ideals", "--gens", "4,5,7", "--format", "json"][..], &["paths", "gd", "--n", "6", "--k", "3", "--ideals"]]
    {
        assert_eq!(stdout(args), stdout(args));
    }
}

fn round_trip(emit: &[&str], check: &[&str]) {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("list.json");
    fs::write(&file, stdout(emit)).unwrap();
    let mut args: Vec<&str> = check.to_vec();
    args.extend(["--from-file", file.to_str().unwrap()]);
    let text = stdout(&args);
    assert!(text.starts_with("ok: "), "{text}");
}

#[test]
fn json_listings_round_trip() {
    round_trip(&["ideals", "--gens", "5,7,13", "--format", "json"], &["ideals"]);
    round_trip(&["cores", "--gens", "4,5,6", "--format", "json"], &["cores"]);
    round_trip(&["paths", "rect", "--s", "5", "--t", "8", "--format", "json"], &["paths", "rect"]);
    round_trip(&["paths", "gd", "--n", "7", "--k", "3", "--format", "json"], &["paths", "gd"]);
    round_trip(&["paths", "gd", "--n", "6", "--k", "2", "--ideals", "--format", "json"], &["paths", "gd"]);
}

fn tampered(emit: &[&str], check: &[&str], edit: impl Fn(&mut serde_json::Value)) -> i32 {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("list.json");
    let mut v: serde_json::Value = serde_json::from_str(&stdout(emit)).unwrap();
    edit(&mut v);
    fs::write(&file, v.to_string()).unwrap();
    let mut args: Vec<&str> = check.to_vec();
    args.extend(["--from-file", file.to_str().unwrap()]);
    run(&args).status.code().unwrap()
}

#[test]
fn from_file_rejects_tampered_lists() {
    let ideals = ["ideals", "--gens", "3,5", "--format", "json"];
    let drop_last = |v: &mut serde_json::Value| {
        v["ideals"].as_array_mut().unwrap().pop();
        v["count"] = "6".into();
    };
    assert_eq!(tampered(&ideals, &["ideals"], drop_last), 2);
    let not_closed = |v: &mut serde_json::Value| v["ideals"][1] = serde_json::json!([4]);
    assert_eq!(tampered(&ideals, &["ideals"], not_closed), 2);
    let not_core = |v: &mut serde_json::Value| v["cores"][1] = serde_json::json!([5]);
    assert_eq!(tampered(&["cores", "--gens", "3,4", "--format", "json"], &["cores"], not_core), 2);
    let duplicate = |v: &mut serde_json::Value| v["paths"][1] = v["paths"][0].clone();
    assert_eq!(
        tampered(&["paths", "rect", "--s", "3", "--t", "4", "--format", "json"], &["paths", "rect"], duplicate),
        2
    );
    let wrong_ideal = |v: &mut serde_json::Value| v["paths"][0]["ideal"] = serde_json::json!([]);
    assert_eq!(
        tampered(
            &["paths", "gd", "--n", "4", "--k", "2", "--ideals", "--format", "json"],
            &["paths", "gd"],
            wrong_ideal
        ),
        2
    );
}

#[test]
fn svg_files() {
    let dir = tempfile::tempdir().unwrap();
    let all = dir.path().join("all.svg");
    let one = dir.path().join("one.svg");
    stdout(&["paths", "rect", "--s", "3", "--t", "5", "--count-only"]);
    stdout(&["paths", "rect", "--s", "3", "--t", "5", "--svg", all.to_str().unwrap()]);
    stdout(&["paths", "gd", "--n", "6", "--k", "3", "--svg", one.to_str().unwrap(), "--index", "2", "--labels"]);
    for f in [all, one] {
        let text = fs::read_to_string(f).unwrap();
        assert!(text.contains("<svg") && text.trim_end().ends_with("</svg>"));
    }
    let out = run(&["paths", "rect", "--s", "3", "--t", "5", "--svg", "/tmp/unused.svg", "--index", "7"]);
    assert_eq!(out.status.code(), Some(1));
}
