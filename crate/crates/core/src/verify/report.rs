use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Outcome of one parameter instance of a check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub params: String,
    pub pass: bool,
    pub detail: String,
    /// A stated identity was contradicted, as opposed to an
    /// internal cross-check disagreeing.
    #[serde(default)]
    pub counterexample: bool,
}

impl Instance {
    pub fn new(params: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Instance { params: params.into(), pass, detail: detail.into(), counterexample: false }
    }

    pub fn counterexample(params: impl Into<String>, detail: impl Into<String>) -> Self {
        Instance { params: params.into(), pass: false, detail: detail.into(), counterexample: true }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    /// Human-readable description of the parameter range actually tested.
    pub range: String,
    pub instances: Vec<Instance>,
    /// Parameters and detail of the first failing instance.
    pub counterexample: Option<String>,
    pub duration_secs: f64,
}

impl CheckReport {
    /// True only if at least one instance ran and every instance passed.
    pub fn passed(&self) -> bool {
        !self.instances.is_empty() && self.instances.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Instance> {
        self.instances.iter().filter(|i| !i.pass)
    }

    /// Some failure is a contradiction of a stated claim.
    pub fn has_counterexample(&self) -> bool {
        self.instances.iter().any(|i| i.counterexample)
    }

    pub fn summary_line(&self) -> String {
        let passed = self.instances.iter().filter(|i| i.pass).count();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{status} {:<26} {passed}/{} instances  [{}]  {:.3}s",
            self.id,
            self.instances.len(),
            self.range,
            self.duration_secs
        );
        if let Some(c) = &self.counterexample {
            line.push_str(&format!("\n     first failure: {c}"));
        }
        line
    }
}

/// Runs `check` over `params` on a pool of `jobs` threads. Instance order in
/// the report follows `params` regardless of `jobs`.
pub fn run_check<P, F>(id: &str, range: impl Into<String>, params: Vec<P>, jobs: usize, check: F) -> CheckReport
where
    P: Send + Sync,
    F: Fn(&P) -> Instance + Send + Sync,
{
    let start = Instant::now();
    let instances: Vec<Instance> = if jobs <= 1 {
        params.iter().map(&check).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
        pool.install(|| params.par_iter().map(&check).collect())
    };
    let counterexample = instances.iter().find(|i| !i.pass).map(|i| format!("{}: {}", i.params, i.detail));
    CheckReport {
        id: id.to_string(),
        range: range.into(),
        instances,
        counterexample,
        duration_secs: start.elapsed().as_secs_f64(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_reports_never_pass() {
        let r = run_check::<u32, _>("none", "empty", vec![], 1, |_| Instance::new("x", true, ""));
        assert!(!r.passed());
    }

    #[test]
    fn order_is_independent_of_jobs() {
        let params: Vec<u32> = (0..200).collect();
        let f = |p: &u32| Instance::new(p.to_string(), p % 37 != 5, "");
        let a = run_check("a", "0..200", params.clone(), 1, f);
        let b = run_check("a", "0..200", params, 4, f);
        assert_eq!(a.instances, b.instances);
        assert_eq!(a.counterexample.as_deref(), Some("5: "));
        assert!(!a.passed());
        assert!(!a.has_counterexample());
    }
}
