use codis::constructions::{cycle, gn_family, named_graph, orphan, Orphan};
use codis::io::{invariant_report, ReportOptions};
use codis::Graph;

fn schema() -> serde_json::Value {
    serde_json::from_str(include_str!("../schema/invariant_report.schema.json")).unwrap()
}

#[test]
fn emitted_reports_match_the_schema() {
    let validator = jsonschema::validator_for(&schema()).unwrap();
    let graphs: Vec<Graph> = vec![
        Graph::from_edges(0, &[]).unwrap(),
        Graph::from_edges(1, &[]).unwrap(),
        cycle(6).unwrap(),
        named_graph("doublestar", &[2, 3]).unwrap(),
        gn_family(1).unwrap(),
        orphan(Orphan::P10).unwrap(),
    ];
    for g in graphs {
        let report = invariant_report(&g, &ReportOptions::default(), None);
        let json = serde_json::to_value(&report).unwrap();
        let errors: Vec<String> = validator.iter_errors(&json).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{}: {errors:?}", report.input.graph6);
    }
}

#[test]
fn schema_rejects_unknown_fields() {
    let validator = jsonschema::validator_for(&schema()).unwrap();
    let mut json = serde_json::to_value(invariant_report(&cycle(5).unwrap(), &ReportOptions::default(), None)).unwrap();
    assert!(validator.is_valid(&json));
    json["cohen_macaulay"]["gf3"] = true.into();
    assert!(!validator.is_valid(&json));
}
