use lozenge::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["lozenge"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out.trim_end().to_string()
}

#[test]
fn count_examples() {
    assert_eq!(
        ok(&["count", "--family", "hexagon", "--a", "1", "--b", "1", "--c", "1"]),
        "2"
    );
    assert_eq!(
        ok(&["count", "--family", "D", "--x", "2", "--y", "1", "--z", "1", "--m", "1"]),
        "9"
    );
    assert_eq!(
        ok(&["count", "--family", "Dprime", "--x", "2", "--y", "1", "--z", "1", "--m", "1"]),
        "25/4"
    );
    for engine in ["dp", "strip", "oracle"] {
        let args = [
            "count", "--family", "P", "--a", "1", "--b", "1", "--c", "3", "--engine", engine,
        ];
        assert_eq!(ok(&args), "4");
    }
}

#[test]
fn count_json_record() {
    let out = ok(&[
        "count", "--family", "Dprime", "--x", "2", "--y", "1", "--z", "1", "--m", "1", "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["family"], "Dprime");
    assert_eq!(v["count_numerator"], "25");
    assert_eq!(v["count_denominator"], "4");
    assert_eq!(v["engine"], "dp");
    assert_eq!(v["params"]["x"], "2");
}

#[test]
fn formula_examples() {
    assert_eq!(
        ok(&["formula", "--id", "eq-4.2", "--a", "1", "--c", "3"]),
        "4"
    );
    let shifted = ok(&[
        "formula", "--id", "eq-2.4", "--x", "3/2", "--y", "1", "--z", "1", "--m", "1",
    ]);
    let weighted = ok(&[
        "formula", "--id", "eq-2.5", "--x", "2", "--y", "1", "--z", "1", "--m", "1",
    ]);
    assert_eq!(shifted, "25/4");
    assert_eq!(shifted, weighted);
    assert_eq!(
        ok(&["formula", "--id", "macmahon", "--a", "2", "--b", "2", "--c", "2"]),
        "20"
    );
    assert_eq!(
        ok(&["formula", "--id", "3f2", "--numer", "-2,1,1", "--denom", "1"]),
        "1"
    );
    let separate = ok(&[
        "formula", "--id", "eq-2.2", "--x", "3", "--y", "2", "--m", "2",
    ]);
    let joint = ok(&[
        "formula", "--id", "eq-2.2", "--x", "3", "--y", "2", "--m", "2", "--rule", "joint",
    ]);
    assert_eq!(separate, joint);
}

#[test]
fn singular_formula_names_the_factor() {
    let (code, _, err) = call(&[
        "formula", "--id", "eq-4.18", "--x", "0", "--a", "1", "--k", "1",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("(2c)_a"), "{err}");
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = call(&[
        "verify", "--suite", "eq-4.17", "--max-a", "3", "--max-c", "3",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("eq-4.17"));
    let (code, _, err) = call(&["verify", "--suite", "eq-0.0"]);
    assert_eq!(code, 2);
    assert!(err.contains("eq-0.0"));
}

#[test]
fn verify_json_schema() {
    let out = ok(&[
        "verify",
        "--suite",
        "eq-2.4,macmahon",
        "--max-x",
        "2",
        "--max-y",
        "1",
        "--max-m",
        "1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["suite"], "eq-2.4,macmahon");
    assert_eq!(v["pass"], true);
    let ids: Vec<&str> = v["identities"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["eq-2.4", "macmahon"]);
    for r in v["identities"].as_array().unwrap() {
        let keys: Vec<&String> = r.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["failures", "id", "tuples_checked"]);
    }
}

#[test]
fn parameter_errors_exit_2() {
    for args in [
        &[
            "count", "--family", "D", "--x", "0", "--y", "2", "--z", "0", "--m", "1",
        ][..],
        &["count", "--family", "hexagon", "--a", "1", "--b", "1"],
        &[
            "count", "--family", "hexagon", "--a", "-1", "--b", "1", "--c", "1",
        ],
        &["count", "--family", "P", "--a", "3", "--b", "1", "--c", "1"],
        &[
            "count",
            "--family",
            "cut-hexagon",
            "--a",
            "1",
            "--b",
            "1",
            "--c",
            "1",
        ],
        &[
            "count", "--family", "hexagon", "--a", "4", "--b", "4", "--c", "4", "--engine",
            "oracle",
        ],
        &["count", "--family", "nonsense"],
        &["formula", "--id", "eq-7.7"],
        &[
            "render", "--family", "hexagon", "--a", "1", "--b", "1", "--c", "1", "--scale", "0",
        ],
        &[],
    ] {
        let (code, _, err) = call(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn render_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.svg");
    let p = path.to_str().unwrap();
    ok(&[
        "render", "--family", "Dprime", "--x", "2", "--y", "1", "--z", "1", "--m", "1", "--out", p,
    ]);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert_eq!(svg.matches("<ellipse").count(), 2);
}

#[test]
fn render_tiling_is_deterministic() {
    let args = [
        "render", "--family", "hexagon", "--a", "1", "--b", "1", "--c", "1", "--tiling",
    ];
    let first = ok(&args);
    assert_eq!(first, ok(&args));
    assert_eq!(
        first.matches("<path class=\"up\"").count() + first.matches("<path class=\"down\"").count(),
        6
    );
    assert_eq!(first.matches("<g id=\"tiling\"").count(), 1);
}

#[test]
fn render_untileable_region_is_annotated() {
    // G(0,0,1) keeps three triangles
    let out = ok(&[
        "render", "--family", "G", "--x", "0", "--a", "0", "--k", "1", "--tiling",
    ]);
    assert!(out.contains("no tilings"), "{out}");
}
