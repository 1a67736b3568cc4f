use std::process::{Command, Output};

fn hivecomb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hivecomb")).args(args).env_remove("HIVECOMB_SEED").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn lr_count_examples() {
    let o = hivecomb(&["lr-count", "-n", "3", "--lambda", "2,1,0", "--mu", "2,1,0", "--nu", "-1,-2,-3", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2");
    let o = hivecomb(&["lr-count", "-n", "1", "--lambda", "5", "--mu", "-2", "--nu", "-3"]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = hivecomb(&["lr-count", "-n", "2", "--lambda", "3,0", "--mu", "1,0", "--nu", "0,-1"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn invalid_input_exits_2() {
    for args in [
        vec!["lr-count", "-n", "3", "--lambda", "0,1,2", "--mu", "2,1,0", "--nu", "-1,-2,-3"],
        vec!["lr-count", "-n", "3", "--lambda", "2,1", "--mu", "2,1,0", "--nu", "-1,-2,-3"],
        vec!["decompose", "-n", "2", "--lambda", "1,x", "--mu", "1,0"],
        vec!["prv", "-n", "2", "--lambda", "1,0", "--mu", "1,0", "--w", "0,0", "--v", "0,1"],
        vec!["no-such-command"],
    ] {
        assert_eq!(hivecomb(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn decompose_examples() {
    let o = hivecomb(&["decompose", "-n", "2", "--lambda", "1,0", "--mu", "1,0"]);
    assert_eq!(stdout(&o), "(2,0): 1\n(1,1): 1\n");
    let o = hivecomb(&["decompose", "-n", "3", "--lambda", "2,1,0", "--mu", "2,1,0", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["(3,2,1)"], 2);
    assert_eq!(v.as_object().unwrap().len(), 5);
}

#[test]
fn lift_report_and_determinism() {
    let args = ["lift", "-n", "3", "--lambda", "4,1,0", "--mu", "4,2,0", "--nu", "-2,-3,-6", "--seed", "11"];
    let a = hivecomb(&args);
    assert_eq!(a.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["integral"], true);
    assert_eq!(v["acyclic"], true);
    assert_eq!(v["max_multiplicity"], 1);
    assert!(v["hive"]["entries"].as_array().unwrap().len() == 10);
    assert_eq!(hivecomb(&args).stdout, a.stdout);
    // The environment supplies the default seed.
    let env = Command::new(env!("CARGO_BIN_EXE_hivecomb"))
        .args(&args[..args.len() - 2])
        .env("HIVECOMB_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(env.stdout, a.stdout);

    let o = hivecomb(&["lift", "-n", "3", "--lambda", "2,0,0", "--mu", "0,0,0", "--nu", "0,-1,-1"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn gt_count_and_saturation() {
    let o = hivecomb(&["gt-count", "-n", "3", "--lambda", "2,1,0", "--verify"]);
    assert_eq!(stdout(&o).trim(), "8");
    let o = hivecomb(&["saturate-check", "-n", "2", "--max-entry", "4", "--N", "2,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pass"));
    let o = hivecomb(&["saturate-check", "-n", "3", "--max-entry", "4", "--N", "2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn nonintegral_search_small() {
    let o = hivecomb(&["find-nonintegral-vertex", "-n", "3", "--max-entry", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["vertex"].is_null());
    assert_eq!(v["scanned"], 586);
}

#[test]
fn prv_overlay_render_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let p = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    let o = hivecomb(&["prv", "-n", "3", "--lambda", "2,1,0", "--mu", "2,1,0", "--w", "0,1,2", "--v", "2,1,0", "-o", &p("a.json")]);
    assert_eq!(o.status.code(), Some(0));
    let o = hivecomb(&["prv", "-n", "3", "--lambda", "3,1,0", "--mu", "2,2,0", "--w", "0,1,2", "--v", "0,1,2", "-o", &p("b.json")]);
    assert_eq!(o.status.code(), Some(0));
    let o = hivecomb(&["overlay", &p("a.json"), &p("b.json"), "-o", &p("ab.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let h = hivecomb::cli::parse_honeycomb(&std::fs::read_to_string(p("ab.json")).unwrap()).unwrap();
    assert_eq!(h.ty(), [6, 0, 6, 0, 6, 0]);

    // Three tripods, three vertices, nine rays; coincident ones carry labels.
    let o = hivecomb(&["render", &p("a.json"), "-o", &p("a.svg")]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(p("a.svg")).unwrap();
    assert_eq!(svg.matches("<circle").count(), 3);
    assert!(svg.matches("<path").count() <= 9);
}

#[test]
fn render_standard_gl2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.json");
    let toy = std::sync::Arc::new(hivecomb::honeycomb::Tinkertoy::gl(2));
    let h = hivecomb::honeycomb::Honeycomb::standard(toy);
    std::fs::write(&path, serde_json::to_string(&h.to_json()).unwrap()).unwrap();
    let o = hivecomb(&["render", path.to_str().unwrap()]);
    let svg = stdout(&o);
    assert_eq!(svg.matches("<path").count(), 9);
    assert_eq!(svg.matches("<circle").count(), 4);
}

#[test]
fn malformed_diagrams_exit_5() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.json");
    std::fs::write(&path, r#"[{"base":["0","0","0"],"direction":"E","length":"1","multiplicity":"1"}]"#).unwrap();
    assert_eq!(hivecomb(&["render", path.to_str().unwrap()]).status.code(), Some(5));
    std::fs::write(&path, "{").unwrap();
    assert_eq!(hivecomb(&["render", path.to_str().unwrap()]).status.code(), Some(2));
}
