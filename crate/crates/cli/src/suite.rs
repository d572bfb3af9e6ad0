//! The check suite: named desk-scale checks with wall-clock limits, run in
//! parallel, with results cached by input hash.

use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::{mpsc, Arc, Mutex};
use std::time::{Duration, Instant};

use oddorient_core::{Budget, Error};
use serde::Serialize;
use serde_json::Value;

use crate::cache::{input_hash, Cache, ResultRecord, Verdict};

mod items;

pub use items::all_items;

pub struct Outcome {
    pub passed: bool,
    pub detail: String,
    pub certificate: Value,
}

impl Outcome {
    pub fn new(passed: bool, detail: impl Into<String>, certificate: Value) -> Outcome {
        Outcome { passed, detail: detail.into(), certificate }
    }
}

pub type ItemFn = fn(&Budget) -> oddorient_core::Result<Outcome>;

pub struct SuiteItem {
    pub id: &'static str,
    pub description: &'static str,
    /// Canonical description of the inputs, hashed for the cache key.
    pub inputs: &'static str,
    pub nodes: u64,
    pub timeout: Duration,
    /// A timeout here is reported but never counts as a failure.
    pub optional: bool,
    pub run: ItemFn,
}

impl SuiteItem {
    pub fn input_hash(&self) -> String {
        input_hash(&[self.id, self.inputs, &self.nodes.to_string(), env!("CARGO_PKG_VERSION")])
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub filter: Option<String>,
    pub jobs: usize,
    pub cache: Option<PathBuf>,
    /// Overrides every item's wall-clock limit.
    pub timeout: Option<Duration>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub records: Vec<ResultRecord>,
}

impl SuiteReport {
    /// 0 all passed, 1 any failure, 3 only timeouts besides passes.
    pub fn exit_code(&self) -> i32 {
        if self.records.iter().any(|r| r.verdict == Verdict::Fail) {
            1
        } else if self.records.iter().any(|r| r.verdict == Verdict::Timeout) {
            3
        } else {
            0
        }
    }
}

pub fn select(filter: Option<&str>) -> anyhow::Result<Vec<SuiteItem>> {
    let pattern = match filter {
        Some(f) if !f.is_empty() => Some(glob::Pattern::new(f)?),
        _ => None,
    };
    Ok(all_items().into_iter().filter(|i| pattern.as_ref().map_or(true, |p| p.matches(i.id))).collect())
}

/// Runs one item on a worker thread, cancelling it after `limit`.
pub fn run_item(item: &SuiteItem, limit: Duration) -> ResultRecord {
    let flag = Arc::new(AtomicBool::new(false));
    let budget = Budget::nodes(item.nodes).with_cancel(flag.clone());
    let (tx, rx) = mpsc::channel();
    let run = item.run;
    let start = Instant::now();
    std::thread::spawn(move || {
        let _ = tx.send(run(&budget));
    });
    let (verdict, detail, certificate) = match rx.recv_timeout(limit) {
        Ok(Ok(o)) => (if o.passed { Verdict::Pass } else { Verdict::Fail }, o.detail, o.certificate),
        Ok(Err(e @ (Error::BudgetExceeded { .. } | Error::Cancelled { .. }))) => {
            (Verdict::Timeout, e.to_string(), Value::Null)
        }
        Ok(Err(e)) => (Verdict::Fail, e.to_string(), Value::Null),
        Err(mpsc::RecvTimeoutError::Timeout) => {
            flag.store(true, Ordering::Relaxed);
            (Verdict::Timeout, format!("no result within {limit:?}"), Value::Null)
        }
        Err(mpsc::RecvTimeoutError::Disconnected) => (Verdict::Fail, "item panicked".into(), Value::Null),
    };
    ResultRecord {
        id: item.id.to_string(),
        verdict,
        detail,
        certificate,
        runtime_ms: start.elapsed().as_millis(),
        input_hash: item.input_hash(),
        cached: false,
    }
}

pub fn run_suite(opts: &SuiteOptions) -> anyhow::Result<SuiteReport> {
    let items = select(opts.filter.as_deref())?;
    let cache = opts.cache.as_ref().map(Cache::open).transpose()?;
    let slots: Mutex<Vec<Option<ResultRecord>>> = Mutex::new(vec![None; items.len()]);
    let next = AtomicUsize::new(0);
    let jobs = opts.jobs.max(1).min(items.len().max(1));
    std::thread::scope(|s| {
        for _ in 0..jobs {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(item) = items.get(i) else { break };
                let hash = item.input_hash();
                let record = match cache.as_ref().and_then(|c| c.load(item.id, &hash)) {
                    Some(mut r) => {
                        r.cached = true;
                        r
                    }
                    None => {
                        let r = run_item(item, opts.timeout.unwrap_or(item.timeout));
                        if let Some(c) = &cache {
                            if let Err(e) = c.store(&r) {
                                eprintln!("warning: could not cache {}: {e}", item.id);
                            }
                        }
                        r
                    }
                };
                slots.lock().unwrap()[i] = Some(record);
            });
        }
    });
    let records = slots.into_inner().unwrap().into_iter().map(Option::unwrap).collect();
    Ok(SuiteReport { records })
}
