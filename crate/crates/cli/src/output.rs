use num_bigint::BigInt;
use serde::Serialize;

use multicore::{LowerIdeal, Partition};

use crate::Failure;

pub fn json<T: Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| Failure::Usage(format!("cannot serialize output: {e}")))
}

pub fn big(n: &BigInt) -> String {
    n.to_string()
}

pub fn ideal(i: &LowerIdeal) -> String {
    if i.is_empty() {
        return "∅".to_string();
    }
    let body: Vec<String> = i.elements().iter().map(u64::to_string).collect();
    format!("{{{}}}", body.join(","))
}

pub fn partition(p: &Partition) -> String {
    if p.is_empty() {
        "∅".to_string()
    } else {
        p.to_string()
    }
}

pub fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    let mut out = String::new();
    for item in items {
        out.push_str(&item);
        out.push('\n');
    }
    out
}
