use hubpebble::verify::{
    exit_code, verify_books, verify_characterizations, verify_figure_counterexamples,
    verify_named_witnesses, verify_path_pebbling_numbers, verify_paths,
    verify_path_endpoint_strengthening, verify_stars, CaseStatus, ReportRow,
};
use hubpebble::EngineOptions;

fn main() {
    let opts = EngineOptions::default();
    let mut cases = Vec::new();

    cases.extend(verify_paths(6, &opts));
    cases.extend(verify_stars(10, &opts));
    cases.extend(verify_books(5, &opts));
    for n in 3..=5 {
        cases.push(verify_path_endpoint_strengthening(n, &opts));
    }
    cases.extend(verify_path_pebbling_numbers(6, &opts));
    cases.extend(verify_figure_counterexamples());
    cases.extend(verify_characterizations());
    cases.extend(verify_named_witnesses(&opts));

    for c in &cases {
        let status = match &c.status {
            CaseStatus::Pass => "PASS".to_string(),
            CaseStatus::Fail => "FAIL".to_string(),
            CaseStatus::Skipped(reason) => format!("SKIP ({reason})"),
        };
        println!(
            "{status:<8} {:<50} expected={:<12} computed={}",
            c.name,
            c.expected.as_deref().unwrap_or("-"),
            c.computed.as_deref().unwrap_or("-")
        );
    }

    let rows: Vec<ReportRow> = cases.into_iter().map(ReportRow::Case).collect();
    std::process::exit(exit_code(&rows, false));
}
