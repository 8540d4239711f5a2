//! Pass/fail reports for verification runs.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub check: String,
    pub instance: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub items: Vec<CheckItem>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, check: &str, instance: &str, counterexample: Option<String>) {
        self.items.push(CheckItem {
            check: check.to_string(),
            instance: instance.to_string(),
            pass: counterexample.is_none(),
            counterexample,
        });
    }

    /// Records a passing item, or the first failure among `failures`.
    pub fn record<I: IntoIterator<Item = String>>(&mut self, check: &str, instance: &str, failures: I) {
        self.push(check, instance, failures.into_iter().next());
    }

    pub fn extend(&mut self, other: Report) {
        self.items.extend(other.items);
    }

    pub fn pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> + '_ {
        self.items.iter().filter(|i| !i.pass)
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "pass": self.pass(),
            "items": self.items,
        })
    }

    /// One line per item, `PASS`/`FAIL` first.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in &self.items {
            out.push_str(if i.pass { "PASS " } else { "FAIL " });
            out.push_str(&format!("{} [{}]", i.check, i.instance));
            if let Some(c) = &i.counterexample {
                out.push_str(&format!(": {c}"));
            }
            out.push('\n');
        }
        out.push_str(if self.pass() { "overall: pass\n" } else { "overall: FAIL\n" });
        out
    }
}

/// Checks a JSON report against the fixed schema:
/// `{"pass": bool, "items": [{"check": str, "instance": str, "pass": bool, "counterexample"?: str}]}`
/// with `pass` equal to the conjunction of the item flags.
pub fn validate_report_json(v: &Value) -> Result<(), String> {
    let obj = v.as_object().ok_or("report is not an object")?;
    for k in obj.keys() {
        if k != "pass" && k != "items" {
            return Err(format!("unexpected key '{k}'"));
        }
    }
    let pass = obj
        .get("pass")
        .and_then(Value::as_bool)
        .ok_or("missing boolean 'pass'")?;
    let items = obj
        .get("items")
        .and_then(Value::as_array)
        .ok_or("missing array 'items'")?;
    let mut all = true;
    for (n, it) in items.iter().enumerate() {
        let o = it.as_object().ok_or(format!("item {n} is not an object"))?;
        for k in o.keys() {
            if !["check", "instance", "pass", "counterexample"].contains(&k.as_str()) {
                return Err(format!("item {n}: unexpected key '{k}'"));
            }
        }
        for k in ["check", "instance"] {
            o.get(k)
                .and_then(Value::as_str)
                .ok_or(format!("item {n}: missing string '{k}'"))?;
        }
        let p = o
            .get("pass")
            .and_then(Value::as_bool)
            .ok_or(format!("item {n}: missing boolean 'pass'"))?;
        match o.get("counterexample") {
            None => {}
            Some(Value::String(_)) if !p => {}
            Some(_) => return Err(format!("item {n}: bad 'counterexample'")),
        }
        all &= p;
    }
    if all != pass {
        return Err("overall 'pass' disagrees with the items".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schema_accepts_generated_reports() {
        let mut r = Report::new();
        r.push("relations", "A1 1|1", None);
        r.push("braid", "A2", Some("T1T2T1(E1) differs".into()));
        assert!(!r.pass());
        validate_report_json(&r.to_json()).unwrap();
        assert!(r.to_text().contains("FAIL braid [A2]: T1T2T1(E1) differs"));
    }

    #[test]
    fn schema_rejects_malformed_reports() {
        let bad = [
            serde_json::json!({"pass": true}),
            serde_json::json!({"pass": true, "items": [{"check": "x", "instance": "y"}]}),
            serde_json::json!({"pass": true, "items": [{"check": "x", "instance": "y", "pass": false}]}),
            serde_json::json!({"pass": true, "items": [], "extra": 1}),
            serde_json::json!({"pass": true, "items": [{"check": "x", "instance": "y", "pass": true, "counterexample": "z"}]}),
        ];
        for b in bad {
            assert!(validate_report_json(&b).is_err(), "{b}");
        }
    }
}
