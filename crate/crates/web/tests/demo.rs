use serde_json::Value;

use ectarget_web::{density_demo, pipeline_demo, target_size};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn pipeline_verifies() {
    for (n, k, seed) in [(3, 2, 0), (20, 3, 1), (60, 5, 7), (500, 9, 2)] {
        let v = parse(pipeline_demo(n, k, seed));
        assert_eq!(v["verified"], true, "{v}");
        let n = v["n"].as_u64().unwrap() as usize;
        assert_eq!(v["positions"].as_array().unwrap().len(), n);
        assert_eq!(v["images"].as_array().unwrap().len(), n);
        assert_eq!(v["edges"].as_array().unwrap().len(), 3 * n - 6);
    }
}

#[test]
fn pipeline_is_deterministic() {
    assert_eq!(pipeline_demo(30, 3, 4), pipeline_demo(30, 3, 4));
}

#[test]
fn target_size_values() {
    let v = parse(target_size(2, 1, 2));
    assert_eq!(v["vertices"], "6");
    assert_eq!(v["bound"], "8");
    let v = parse(target_size(3, 9, 2));
    assert_eq!(v["d"], 3);
    assert!(parse(target_size(0, 1, 2))["error"].is_string());
}

#[test]
fn density_witness_is_dense() {
    let v = parse(density_demo(25, 2, 3));
    let witness = v["witness"].as_array().unwrap();
    assert!(!witness.is_empty());
    let density = v["density"].as_str().unwrap();
    let (num, den) = density.split_once('/').unwrap_or((density, "1"));
    let value = num.parse::<f64>().unwrap() / den.parse::<f64>().unwrap();
    assert!(value <= 3.0);
    assert!(v["lower_bound"].as_f64().unwrap() >= 1.0);
}
