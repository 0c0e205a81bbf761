use std::process::{Command, Output};

fn bicover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicover")).args(args).output().expect("binary runs")
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

#[test]
fn verify_golden_exits_zero() {
    let o = bicover(&["verify", "--u", "2", "--conic", "alpha", "--lam", "1:2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["status"], "VERIFIED");
    assert_eq!(v["invariants"]["K2"], 7);
    assert_eq!(v["invariants"]["eigenspaces"], serde_json::json!([5, 2, 1, 0]));
    assert_eq!(v["invariants"]["k"], serde_json::json!([9, 7, 5]));
    assert_eq!(v["config"]["points"]["p0"], serde_json::json!(["5", "4", "9"]));
}

#[test]
fn verify_is_byte_stable_and_writes_file() {
    let dir = std::env::temp_dir().join(format!("bicover-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.json");
    let args = ["verify", "--u", "3/2", "--conic", "beta", "--lam", "1:3", "--out"];
    let o1 = bicover(&[&args[..], &[a.to_str().unwrap()]].concat());
    let first = std::fs::read(&a).unwrap();
    let o2 = bicover(&[&args[..], &[a.to_str().unwrap()]].concat());
    assert_eq!(o1.status.code(), o2.status.code());
    assert_eq!(first, std::fs::read(&a).unwrap());
    assert!(o1.stdout.is_empty());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn excluded_point_exits_one_with_witness() {
    let o = bicover(&["verify", "--u", "2", "--conic", "alpha", "--lam", "1:1"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    let reasons = v["status"]["FAILED"].as_array().unwrap();
    assert!(reasons[0].as_str().unwrap().contains("l_p0p4"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--u", "1", "--conic", "alpha", "--lam", "1:2"][..],
        &["verify", "--u", "0", "--conic", "beta", "--lam", "1:2"],
        &["verify", "--u", "2/0", "--conic", "alpha", "--lam", "1:2"],
        &["verify", "--u", "2", "--conic", "gamma", "--lam", "1:2"],
        &["verify", "--u", "2", "--conic", "alpha", "--lam", "0:0"],
        &["verify", "--u", "2", "--conic", "alpha"],
        &["search", "--u", "-1", "--lam-grid", "2"],
        &["params", "--u", "0"],
        &["frobnicate"],
    ] {
        assert_eq!(bicover(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn search_reports_hits_and_histogram() {
    let o = bicover(&["search", "--u", "2,5/2", "--lam-grid", "2", "--conic", "alpha"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let hits = v["hits"].as_array().unwrap().len() as u64;
    let fails: u64 = v["failures"].as_object().unwrap().values().map(|x| x.as_u64().unwrap()).sum();
    assert_eq!(hits + fails, v["points"].as_u64().unwrap());
    assert_eq!(v["points"], 2 * 8);
}

#[test]
fn catalog_and_params() {
    let o = bicover(&["catalog", "--json"]);
    let v = json(&o);
    let entries = v["entries"].as_array().unwrap();
    let l1 = entries.iter().find(|e| e["name"] == "Lambda1").unwrap();
    assert_eq!(l1["class"], serde_json::json!([3, -1, -1, 0, -1, -1, -1, 0, -1, -1, -2]));
    let text = String::from_utf8(bicover(&["catalog"]).stdout).unwrap();
    assert!(text.contains("Lambda1"));
    let p = json(&bicover(&["params", "--u", "2"]));
    assert_eq!(p["alpha"], "-5/8");
    assert_eq!(p["beta"], "-5/2");
}
