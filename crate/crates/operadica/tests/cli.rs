use operadica::io::{
    category_from_json, category_to_json, family_from_json, family_to_json, generators_from_json,
    hom_from_json, hom_to_json, operad_from_json, operad_to_json, parse_json,
    simplicial_from_json, simplicial_to_json, span_from_json, span_to_json,
};
use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("examples/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_operadica"))
        .args(args)
        .current_dir(Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data"))
        .output()
        .expect("binary runs")
}

fn stdout_of(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8 output")
}

fn code_of(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

/// The non-Segal fixture: the level-2 nerve of the two-element group with
/// its one non-degenerate 2-simplex removed, so the spine map misses the
/// composable pair (m, m).
fn non_segal_path() -> PathBuf {
    let p = Path::new(env!("CARGO_TARGET_TMPDIR")).join("non_segal.json");
    std::fs::write(
        &p,
        r#"{
  "degeneracies": [[[0]], [[0, 1], [0, 2]]],
  "faces": [[], [[0, 0], [0, 0]], [[0, 1, 0], [0, 1, 1], [0, 0, 1]]],
  "levels": [1, 2, 3]
}"#,
    )
    .expect("tmp write");
    p
}

#[test]
fn span_composition_prints_the_matrix_product() {
    let out = run(&["span", "compose", "span_a.json", "span_b.json"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "[[3,1],[1,1]]\n");
}

#[test]
fn exit_codes_follow_the_contract() {
    // 0: clean check
    assert_eq!(code_of(&run(&["operad", "check", "comm.json"])), 0);
    // 2: an arity bound beyond what the file declares
    let out = run(&["operad", "check", "comm.json", "--arity", "5"]);
    assert_eq!(code_of(&out), 2);
    assert!(stdout_of(&out).starts_with("error:"));
    // 3: composite grade over --bound
    let out = run(&[
        "span",
        "compose",
        "span_a.json",
        "span_b.json",
        "--bound",
        "3",
    ]);
    assert_eq!(code_of(&out), 3);
    // 2: unreadable input
    assert_eq!(code_of(&run(&["span", "factor", "no_such_file.json"])), 2);
    // 2: unknown subcommand; 0: help
    assert_eq!(code_of(&run(&["bogus"])), 2);
    assert_eq!(code_of(&run(&["--help"])), 0);

    let non_segal = non_segal_path();
    let ns = non_segal.to_str().unwrap();
    // 1: a failed property check
    assert_eq!(code_of(&run(&["segal", "check", ns])), 1);
    // 2: completeness is undefined off the Segal locus
    assert_eq!(code_of(&run(&["segal", "complete", ns])), 2);
    // 1: Segal but incomplete
    assert_eq!(code_of(&run(&["segal", "complete", "e_object.json"])), 1);

    // 0: a complete nerve, fed back through the JSON form
    let nerve = run(&["segal", "nerve", "walking_arrow.json", "--json"]);
    assert_eq!(code_of(&nerve), 0);
    let p = Path::new(env!("CARGO_TARGET_TMPDIR")).join("wa_nerve.json");
    std::fs::write(&p, stdout_of(&nerve)).unwrap();
    let p = p.to_str().unwrap().to_string();
    assert_eq!(code_of(&run(&["segal", "check", &p])), 0);
    assert_eq!(code_of(&run(&["segal", "complete", &p])), 0);
}

#[test]
fn law_and_roundtrip_subcommands_pass_on_shipped_data() {
    for file in ["comm.json", "assoc.json", "trivial.json", "walking_arrow_operad.json"] {
        assert_eq!(code_of(&run(&["operad", "check", file])), 0, "{file}");
        let laws = run(&["monad", "laws", file, "--bound", "1", "--degree", "2"]);
        assert_eq!(code_of(&laws), 0, "{file}: {}", stdout_of(&laws));
    }
    let rt = run(&["theory", "roundtrip", "assoc.json", "--degree", "3"]);
    assert_eq!(code_of(&rt), 0, "{}", stdout_of(&rt));
    for file in ["walking_arrow.json", "walking_arrow_pinned.json", "z2.json"] {
        let rt = run(&["segal", "roundtrip", file]);
        assert_eq!(code_of(&rt), 0, "{file}: {}", stdout_of(&rt));
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let invocations: Vec<Vec<&str>> = vec![
        vec!["span", "compose", "span_a.json", "span_b.json"],
        vec!["span", "compose", "span_a.json", "span_b.json", "--json"],
        vec!["span", "factor", "span_witness.json", "--json"],
        vec!["operad", "operators", "comm.json", "--terms", "--json"],
        vec!["operad", "free-algebra", "comm.json", "family_two.json", "--terms", "--json"],
        vec!["operad", "free-operad", "generators.json", "--terms"],
        vec!["monad", "linear", "z2.json", "z2_family.json", "--json"],
        vec!["theory", "of", "comm.json", "--terms", "--json"],
        vec!["theory", "factor", "comm.json", "hom_m2.json", "--json"],
        vec!["theory", "models", "comm.json", "family_two.json", "--json"],
        vec!["segal", "nerve", "z2.json", "--json"],
        vec!["segal", "roundtrip", "walking_arrow_pinned.json", "--json"],
    ];
    for args in invocations {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(code_of(&a), code_of(&b), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.is_empty(), "{args:?} printed nothing");
    }
}

#[test]
fn every_shipped_file_round_trips_through_parse_and_serialize() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    let comm = operad_from_json(&parse_json(&std::fs::read_to_string(data("comm.json")).unwrap()).unwrap())
        .unwrap();
    let mut names: Vec<String> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert!(names.len() >= 15, "shipped data went missing: {names:?}");
    for name in names {
        let text = std::fs::read_to_string(dir.join(&name)).unwrap();
        let v = parse_json(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let m = v.as_object().unwrap_or_else(|| panic!("{name}: not an object"));
        // one serialize from the first parse, a second from re-parsing it:
        // both must succeed and agree
        let (s1, s2): (Value, Value) = if m.contains_key("matrix") || m.contains_key("apex") {
            let a = span_from_json(&v).unwrap();
            let j = span_to_json(&a);
            (j.clone(), span_to_json(&span_from_json(&j).unwrap()))
        } else if m.contains_key("ops") {
            let a = operad_from_json(&v).unwrap();
            let j = operad_to_json(&a);
            (j.clone(), operad_to_json(&operad_from_json(&j).unwrap()))
        } else if m.contains_key("sets") {
            let labels: Vec<String> = if name.starts_with("z2") {
                vec!["p0_*".into()]
            } else {
                vec!["c".into()]
            };
            let a = family_from_json(&v, &labels).unwrap();
            let j = family_to_json(&a, &labels);
            (
                j.clone(),
                family_to_json(&family_from_json(&j, &labels).unwrap(), &labels),
            )
        } else if m.contains_key("objects") {
            let a = category_from_json(&v).unwrap();
            let j = category_to_json(&a);
            (j.clone(), category_to_json(&category_from_json(&j).unwrap()))
        } else if m.contains_key("levels") {
            let a = simplicial_from_json(&v).unwrap();
            let j = simplicial_to_json(&a);
            (j.clone(), simplicial_to_json(&simplicial_from_json(&j).unwrap()))
        } else if m.contains_key("terms") {
            let a = hom_from_json(&v, &comm).unwrap();
            let j = hom_to_json(&a, &comm);
            (j.clone(), hom_to_json(&hom_from_json(&j, &comm).unwrap(), &comm))
        } else if m.contains_key("generators") {
            let a = generators_from_json(&v).unwrap();
            let j = serde_json::json!({ "generators": a });
            (
                j.clone(),
                serde_json::json!({ "generators": generators_from_json(&j).unwrap() }),
            )
        } else {
            panic!("{name}: unrecognized shipped format");
        };
        assert_eq!(s1, s2, "{name} drifted across a parse/serialize cycle");
    }
}

#[test]
fn json_and_human_forms_carry_the_same_verdicts() {
    // law violations surface identically in both forms, with matching codes
    let human = run(&["segal", "complete", "e_object.json"]);
    let json = run(&["segal", "complete", "e_object.json", "--json"]);
    assert_eq!(code_of(&human), 1);
    assert_eq!(code_of(&json), 1);
    let v: Value = serde_json::from_str(&stdout_of(&json)).unwrap();
    assert_eq!(v["complete_via_invertibles"], Value::Bool(false));
    assert_eq!(v["complete_via_e_locality"], Value::Bool(false));

    let json = run(&["theory", "roundtrip", "comm.json", "--json"]);
    assert_eq!(code_of(&json), 0);
    let v: Value = serde_json::from_str(&stdout_of(&json)).unwrap();
    assert_eq!(v["pass"], Value::Bool(true));
}
