use hyperlift::output::{emit_report, exit_status, report_json, Format};
use hyperlift::series_file::SeriesDescription;
use hyperlift::suite::{CaseError, Entry};
use hyperlift_core::arith::rat;
use hyperlift_core::hyperseries::series_coefficients;
use hyperlift_core::report::{Mode, VerificationReport};
use hyperlift_core::Error;
use serde_json::Value;

fn passing() -> VerificationReport {
    VerificationReport::new("thmA2", Mode::Exact)
        .with_k(0)
        .with_order(4)
        .with_param("a", &rat(1, 1))
        .with_param("b", &rat(1, 3))
        .compare(&[rat(1, 1), rat(2, 1)], &[rat(1, 1), rat(2, 1)])
}

fn failing() -> VerificationReport {
    VerificationReport::new("thmB2", Mode::Exact)
        .with_k(1)
        .with_order(4)
        .compare(&[rat(1, 1), rat(2, 1)], &[rat(1, 1), rat(5, 2)])
}

#[test]
fn empty_batch() {
    assert_eq!(emit_report(&[], Format::Json), "");
    assert_eq!(emit_report(&[], Format::Text), "");
    assert_eq!(exit_status(&[]), 0);
}

#[test]
fn single_pass_is_one_json_line() {
    let out = emit_report(&[Ok(passing())], Format::Json);
    assert_eq!(out.lines().count(), 1);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["params"]["b"], "1/3");
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert!(keys.contains(&"first_mismatch") && keys.contains(&"elapsed_ms"));
}

#[test]
fn field_order_is_stable() {
    let line = report_json(&passing());
    let identity = line.find("\"identity\"").unwrap();
    let params = line.find("\"params\"").unwrap();
    let pass = line.find("\"pass\"").unwrap();
    assert!(identity < params && params < pass, "{line}");
    assert!(line.find("\"a\"").unwrap() < line.find("\"b\"").unwrap());
}

#[test]
fn mixed_batch() {
    let entries: Vec<Entry> = vec![
        Ok(passing()),
        Ok(failing()),
        Err(CaseError { label: "thmC2/k=0".into(), error: Error::Domain("singular".into()), seed: Some(9) }),
    ];
    let out = emit_report(&entries, Format::Json);
    let lines: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[1]["pass"], false);
    assert_eq!(lines[1]["first_mismatch"]["index"], 1);
    assert_eq!(lines[1]["first_mismatch"]["rhs"], "5/2");
    assert_eq!(lines[2]["pass"], false);
    assert_eq!(lines[2]["seed"], 9);
    assert!(lines[2]["error"].as_str().unwrap().contains("singular"));
    assert_eq!(exit_status(&entries), 1);

    let text = emit_report(&entries, Format::Text);
    assert!(text.starts_with("PASS thmA2 k=0"));
    assert!(text.contains("FAIL thmB2 k=1"));
    assert!(text.contains("first mismatch at index 1"));
    assert!(text.contains("ERROR thmC2/k=0"));
}

#[test]
fn consistency_errors_dominate_status() {
    let entries: Vec<Entry> = vec![
        Ok(failing()),
        Err(CaseError { label: "x".into(), error: Error::Consistency("remainder".into()), seed: None }),
    ];
    assert_eq!(exit_status(&entries), 3);
}

#[test]
fn series_description_round_trip() {
    let text = r#"{"upper": ["1/2", "-3"], "lower": ["5/4"], "weight": ["1", "2/3"], "scale": "-1"}"#;
    let desc = SeriesDescription::from_json(text).unwrap();
    let s = desc.to_series().unwrap();
    let back = SeriesDescription::from_series(&s);
    assert_eq!(back, desc);
    let again = SeriesDescription::from_json(&back.to_json()).unwrap().to_series().unwrap();
    assert_eq!(series_coefficients(&again, 5).unwrap(), series_coefficients(&s, 5).unwrap());
}

#[test]
fn series_description_defaults_and_errors() {
    let desc = SeriesDescription::from_json(r#"{"upper": ["1"], "lower": []}"#).unwrap();
    assert_eq!(desc.weight, vec!["1".to_string()]);
    assert_eq!(desc.scale, "1");
    assert!(!desc.normalization_exempt);

    let unnormalized = SeriesDescription::from_json(r#"{"upper": ["1"], "lower": [], "weight": ["2"]}"#).unwrap();
    assert!(matches!(unnormalized.to_series(), Err(Error::Domain(_))));
    let exempt =
        SeriesDescription::from_json(r#"{"upper": ["1"], "lower": [], "weight": ["2"], "normalization_exempt": true}"#)
            .unwrap();
    assert!(exempt.to_series().is_ok());

    assert!(matches!(SeriesDescription::from_json(r#"{"upper": ["0.5"], "lower": []}"#).unwrap().to_series(), Err(Error::Parse(_))));
    assert!(matches!(SeriesDescription::from_json("[1, 2]"), Err(Error::Parse(_))));
}
