//! Acceptance gate: one line per criterion, each with its pinned wall-clock
//! limit. Run with `cargo test -p oddorient --test acceptance -- --nocapture`
//! to see the report.

use std::time::Duration;

use oddorient::cache::{ResultRecord, Verdict};
use oddorient::suite::{all_items, run_item};
use serde_json::Value;

struct Criterion {
    number: u32,
    item: &'static str,
    limit: Duration,
    /// Timeouts are reported, not failed.
    optional: bool,
    /// Extra pins on the certificate beyond the item's own verdict.
    pins: fn(&Value) -> bool,
}

const fn mins(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

fn no_pins(_: &Value) -> bool {
    true
}

fn family_counts(c: &Value) -> bool {
    c["kneser:6,2"] == serde_json::json!([15, 45])
        && c["schrijver:6,2"][0] == 9
        && c["clebsch"] == serde_json::json!([16, 40, 5, true])
        && c["grotzsch"] == serde_json::json!([11, 20])
}

fn chromatic_values(c: &Value) -> bool {
    let rows = c.as_array().unwrap();
    rows.len() == 5 && rows.iter().all(|r| r["kneser"] == r["expected"] && r["schrijver"] == r["expected"])
}

fn complete_searches(c: &Value) -> bool {
    c.as_array().unwrap().iter().all(|r| r["search"]["complete"] == true)
}

fn single_complete_search(c: &Value) -> bool {
    c["complete"] == true
}

fn petersen_cycles(c: &Value) -> bool {
    let rows = c.as_array().unwrap();
    rows[1]["shortest_odd_cycles"] == 12 && rows[1]["length"] == 5 && rows[2]["length"] == 7
}

fn clebsch_split(c: &Value) -> bool {
    c["partition"]["matching"] == 8 && c["partition"]["crossing"] == 32
}

fn corpus_counts(c: &Value) -> bool {
    c["violations"].as_array().unwrap().is_empty()
        && c["cycles"].as_u64().unwrap() + c["witnesses"].as_u64().unwrap() == 500
}

const CRITERIA: &[Criterion] = &[
    Criterion { number: 1, item: "families-invariants", limit: Duration::from_secs(1), optional: false, pins: family_counts },
    Criterion { number: 2, item: "chromatic-kneser-schrijver", limit: mins(5), optional: false, pins: chromatic_values },
    Criterion { number: 3, item: "odd-girth-formula", limit: mins(1), optional: false, pins: no_pins },
    Criterion { number: 4, item: "shift4-schrijver", limit: mins(1), optional: false, pins: no_pins },
    Criterion { number: 5, item: "shift4-kneser", limit: mins(10), optional: false, pins: complete_searches },
    Criterion { number: 6, item: "kneser62-shift5", limit: mins(30), optional: false, pins: single_complete_search },
    Criterion { number: 7, item: "mycielski-shift4", limit: mins(5), optional: false, pins: no_pins },
    Criterion { number: 8, item: "mycielski-unavoidable", limit: mins(5), optional: false, pins: no_pins },
    Criterion { number: 9, item: "rational-orientability", limit: mins(5), optional: false, pins: no_pins },
    Criterion { number: 10, item: "kneser-source-orientation", limit: mins(10), optional: false, pins: petersen_cycles },
    Criterion { number: 11, item: "clebsch-partition", limit: mins(10), optional: false, pins: clebsch_split },
    Criterion { number: 12, item: "schrijver-odd-partition", limit: mins(30), optional: false, pins: no_pins },
    Criterion { number: 13, item: "duality-corpus", limit: mins(10), optional: false, pins: corpus_counts },
    Criterion { number: 14, item: "rational-hom-order", limit: mins(10), optional: false, pins: no_pins },
    Criterion { number: 15, item: "clebsch-unavoidable", limit: mins(240), optional: true, pins: single_complete_search },
];

fn judge(c: &Criterion, r: &ResultRecord) -> (&'static str, bool) {
    let in_time = r.runtime_ms <= c.limit.as_millis();
    match r.verdict {
        Verdict::Pass if in_time && (c.pins)(&r.certificate) => ("PASS", true),
        Verdict::Timeout if c.optional => ("TIMEOUT", true),
        _ => ("FAIL", false),
    }
}

#[test]
fn acceptance() {
    let items = all_items();
    assert_eq!(CRITERIA.len(), 15);
    let mut failed = Vec::new();
    for c in CRITERIA {
        let item = items.iter().find(|i| i.id == c.item).expect("criterion maps to a suite item");
        let record = run_item(item, c.limit);
        let (tag, ok) = judge(c, &record);
        println!(
            "[{tag}] criterion {:>2} {:<28} {:>8} ms (limit {:>6} s)  {}",
            c.number,
            c.item,
            record.runtime_ms,
            c.limit.as_secs(),
            record.detail
        );
        if !ok {
            failed.push(c.number);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
