use mwlinks::chord::{ChordDiagram, RawDiagram};
use mwlinks::degree::{refinements, DegreeChordDiagram, RawDegreeChord};
use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).display().to_string()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mwlinks-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mwlinks")).args(args).output().unwrap()
}

fn json_ok(args: &[&str]) -> Value {
    let o = run(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> (i32, Value) {
    let o = run(args);
    let err: Value = serde_json::from_slice(&o.stderr).unwrap_or(Value::Null);
    (o.status.code().unwrap(), err)
}

#[test]
fn classify_enumerate_d7_g2() {
    let v = json_ok(&["classify", "enumerate", "--d", "7", "--g", "2", "--delta", "0"]);
    assert_eq!(v["count"], 4);
    assert_eq!(v["classes"].as_array().unwrap().len(), 4);
}

#[test]
fn twisted_cubic_certified() {
    let v = json_ok(&["curve", "certify-mw", &data("twisted-cubic.json")]);
    assert_eq!(v["verdict"], true);
    assert_eq!(v["w"].as_i64().unwrap().abs(), 1);
}

#[test]
fn interleaved_chords_are_not_planar() {
    let (code, err) = exit_code(&["diagram", "check", &data("interleaved.json")]);
    assert_eq!(code, 2);
    assert_eq!(err["error"], "NotPlanar");
}

#[test]
fn schema_errors_exit_1() {
    let p = tmp("broken.json");
    std::fs::write(&p, r#"{"circles": "nope"}"#).unwrap();
    assert_eq!(exit_code(&["diagram", "check", p.to_str().unwrap()]).0, 1);
    let p = tmp("dup.json");
    std::fs::write(&p, r#"{"circles": [["a","a"]], "chords": []}"#).unwrap();
    assert_eq!(exit_code(&["diagram", "check", p.to_str().unwrap()]).0, 1);
    assert_eq!(exit_code(&["model", "wga", "--alpha", "x"]).0, 1);
}

#[test]
fn resource_cap_exits_3() {
    let (code, err) = exit_code(&["curve", "certify-mw", &data("twisted-cubic.json"), "--trials", "0"]);
    assert_eq!(code, 3);
    assert_eq!(err["error"], "NoGenericProjectionFound");
}

#[test]
fn math_precondition_exits_2() {
    assert_eq!(exit_code(&["model", "wga", "--alpha", "1,0"]).0, 2);
    assert_eq!(exit_code(&["curve", "chords", &data("twisted-cubic.json"), "--q", "1,0"]).0, 2);
}

#[test]
fn twisted_cubic_projections() {
    let v = json_ok(&["curve", "analyze", &data("twisted-cubic.json"), "--point", "1,0,1,0"]);
    assert_eq!(v["counts"]["real_crossing"], 1);
    assert_eq!(v["w"].as_i64().unwrap().abs(), 1);
    let v = json_ok(&["curve", "analyze", &data("twisted-cubic.json"), "--point", "0,1,-1,0"]);
    assert_eq!(v["counts"]["solitary"], 1);
    assert_eq!(v["w"], Value::Null);
}

#[test]
fn isolation_eps_controls_box_width() {
    let v = json_ok(&["curve", "analyze", &data("twisted-cubic.json"), "--isolation-eps", "1/1024"]);
    for n in v["nodes"].as_array().unwrap() {
        for p in n["params"].as_array().unwrap() {
            if p["type"] == "real" {
                let lo = mwlinks::algebra::parse_q(p["lo"].as_str().unwrap()).unwrap();
                let hi = mwlinks::algebra::parse_q(p["hi"].as_str().unwrap()).unwrap();
                assert!(hi - lo <= mwlinks::algebra::qr(1, 1024));
            }
        }
    }
}

#[test]
fn same_seed_same_output() {
    for args in [
        vec!["curve", "chords", &data("twisted-cubic.json") as &str, "--q", "1/2,3", "--seed", "7"],
        vec!["curve", "certify-mw", &data("twisted-cubic.json"), "--seed", "3"],
        vec!["curve", "analyze", &data("twisted-cubic.json"), "--seed", "11"],
    ] {
        let (a, b) = (run(&args), run(&args));
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn emitted_json_round_trips() {
    let outputs = [
        json_ok(&["diagram", "enumerate", "--l", "2", "--delta", "2"]),
        json_ok(&["classify", "link", &data("nested.json")]),
        json_ok(&["curve", "chords", &data("twisted-cubic.json")]),
        json_ok(&["model", "wga", "--alpha", "1,1"]),
        json_ok(&["diagram", "loops", &data("nested.json")]),
    ];
    for v in &outputs {
        let text = serde_json::to_string(v).unwrap();
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(&back, v);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
    for d in outputs[0]["diagrams"].as_array().unwrap() {
        let raw: RawDiagram = serde_json::from_value(d.clone()).unwrap();
        assert_eq!(ChordDiagram::validate(&raw).unwrap().to_raw(), raw);
    }
    let ex = &outputs[2]["diagram"];
    let raw: RawDegreeChord = serde_json::from_value(ex.clone()).unwrap();
    assert_eq!(DegreeChordDiagram::from_raw(&raw).unwrap().degree(), 3);
}

#[test]
fn out_and_svg_files() {
    let out = tmp("classify.json");
    let svg = tmp("nested.svg");
    let o = run(&["classify", "link", &data("nested.json"), "--out", out.to_str().unwrap(), "--svg", svg.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["class"]["chirality"], 1);
    let s = std::fs::read_to_string(&svg).unwrap();
    assert!(s.starts_with("<svg"));
    assert_eq!(s.matches("<line").count(), 2);
    assert!(s.contains(": 1<"));
}

#[test]
fn model_obj_export() {
    let obj = tmp("model.obj");
    let v = json_ok(&["model", "wga", "--alpha", "2,1", "--obj", obj.to_str().unwrap()]);
    assert_eq!(v["doubled_linking"], serde_json::json!([[8, 4], [2, 6]]));
    let text = std::fs::read_to_string(&obj).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("l ")).count(), 4);
}

#[test]
fn chord_move_path_between_triples() {
    let base = r#""circles": [["a","p","b","q","c","r","d","s"]], "chords": [["a","d"],["b","c"]]"#;
    let t1 = tmp("t1.json");
    let t2 = tmp("t2.json");
    std::fs::write(&t1, format!(r#"{{{base}, "marks": ["p","q","s"]}}"#)).unwrap();
    std::fs::write(&t2, format!(r#"{{{base}, "marks": ["r","q","s"]}}"#)).unwrap();
    let v = json_ok(&["moves", "path", t1.to_str().unwrap(), t2.to_str().unwrap()]);
    assert_eq!(v["length"].as_u64().unwrap() as usize, v["steps"].as_array().unwrap().len());
    let same = json_ok(&["moves", "path", t1.to_str().unwrap(), t1.to_str().unwrap()]);
    assert_eq!(same["length"], 0);
}

#[test]
fn slide_path_between_refinements() {
    let raw = RawDegreeChord {
        circles: vec![vec!["x".into()]],
        chords: vec![],
        degrees: [("x".to_string(), 4)].into(),
        chirality: None,
    };
    let dcd = DegreeChordDiagram::from_raw(&raw).unwrap();
    let rs = refinements(&dcd);
    assert!(!rs.is_empty());
    let (a, b) = (tmp("r0.json"), tmp("r1.json"));
    std::fs::write(&a, serde_json::to_string(&rs[0].to_raw()).unwrap()).unwrap();
    std::fs::write(&b, serde_json::to_string(&rs[rs.len() - 1].to_raw()).unwrap()).unwrap();
    let v = json_ok(&["moves", "slide-path", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert!(v["steps"].is_array());
}

#[test]
fn writhe_of_trefoil_diagram() {
    let p = tmp("trefoil.json");
    std::fs::write(&p, r#"{"components": [["X1+o","X2+u","X3+o","X1+u","X2+o","X3+u"]]}"#).unwrap();
    let v = json_ok(&["writhe", "compute", p.to_str().unwrap()]);
    assert_eq!(v["w"], 3);
}
