use clap::Parser;
use rug::Rational;
use seifert_quantum::cli::{parse_config, rat_json, run, to_csv, Cli, Format, RunConfig};
use std::collections::BTreeMap;

fn resolve(args: &[&str], file: &str, env: Option<&str>) -> RunConfig {
    let cli = Cli::try_parse_from(args).unwrap();
    RunConfig::resolve(&cli, &parse_config(file).unwrap(), env).unwrap()
}

#[test]
fn precedence_flag_file_env_default() {
    assert_eq!(resolve(&["sq", "wrt"], "", None).precision, 256);
    assert_eq!(resolve(&["sq", "wrt"], "", Some("300")).precision, 300);
    assert_eq!(resolve(&["sq", "wrt"], "precision=200", Some("300")).precision, 200);
    assert_eq!(
        resolve(&["sq", "wrt", "--precision", "128"], "precision=200", Some("300")).precision,
        128
    );
    let c = resolve(&["sq", "wrt", "--p", "2,3,7"], "p=2,3,5,7\nk=3,5\nformat=csv", None);
    assert_eq!(c.p, vec![2, 3, 7]);
    assert_eq!(c.k, vec![3, 5]);
    assert_eq!(c.format, Format::Csv);
}

#[test]
fn config_errors() {
    assert!(parse_config("precision 128").is_err());
    let cli = Cli::try_parse_from(["sq", "wrt"]).unwrap();
    let mut f = BTreeMap::new();
    f.insert("colour".to_string(), "red".to_string());
    assert!(RunConfig::resolve(&cli, &f, None).is_err());
}

#[test]
fn exit_codes() {
    assert_eq!(run(["sq", "csvalues", "--p", "2,3,5"]), 0);
    assert_eq!(run(["sq", "nonsense"]), 2);
    assert_eq!(run(["sq", "csvalues", "--p", "2,4,5"]), 2);
    assert_eq!(run(["sq", "wrt", "--precision", "12"]), 2);
    assert_eq!(run(["sq", "verify-zhat-psi", "--p", "2,3,5", "--cutoff", "3"]), 1);
    assert_eq!(run(["sq", "verify-zhat-psi", "--p", "2,3,5,7", "--cutoff", "200"]), 0);
    assert_eq!(run(["sq", "acceptance", "--only", "99"]), 2);
}

#[test]
fn json_document_fields() {
    let dir = std::env::temp_dir().join(format!("sq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("z.json");
    let code = run([
        "sq",
        "zhat",
        "--p",
        "2,3,5",
        "--cutoff",
        "4",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    for key in ["tool_version", "p", "precision", "command", "timestamp"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["delta"]["num"], "181");
    assert_eq!(v["delta"]["den"], "120");
    assert_eq!(v["denominator"], 120);
    assert_eq!(v["terms"][0]["num"], 1);
    let out = dir.join("w.json");
    assert_eq!(
        run([
            "sq",
            "wrt",
            "--p",
            "2,3,5",
            "--k",
            "2",
            "--precision",
            "96",
            "--output",
            out.to_str().unwrap()
        ]),
        0
    );
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let z = &v["values"][0]["z_total"];
    assert_eq!(z["precision"], 96);
    assert!(z["re"].as_str().unwrap().starts_with("9.932"));
}

#[test]
fn csvalues_document() {
    let out = std::env::temp_dir().join(format!("sq-cs-{}.json", std::process::id()));
    assert_eq!(
        run(["sq", "csvalues", "--p", "2,3,5", "--json", "--output", out.to_str().unwrap()]),
        0
    );
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["W"].as_array().unwrap().len(), 2);
    assert_eq!(v["L_count"], 2);
    assert_eq!(v["bijection_ok"], true);
}

#[test]
fn csv_flattening() {
    let v = serde_json::json!({"a": {"b": [1, "x,y"]}, "c": true});
    assert_eq!(to_csv(&v), "key,value\na.b[0],1\na.b[1],\"x,y\"\nc,true\n");
    assert_eq!(
        rat_json(&Rational::from((-3, 9))),
        serde_json::json!({"num": "-1", "den": "3"})
    );
}
