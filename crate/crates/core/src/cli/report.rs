use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

/// One named boolean result. A false verdict always carries a witness.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

/// What a command prints on stdout.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub info: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            verdicts: Vec::new(),
            info: BTreeMap::new(),
            elapsed_ms: None,
        }
    }

    pub fn pass(&mut self, name: &str) {
        self.verdicts.push(Verdict {
            name: name.into(),
            holds: true,
            witness: None,
        });
    }

    pub fn fail(&mut self, name: &str, witness: impl Serialize) {
        self.verdicts.push(Verdict {
            name: name.into(),
            holds: false,
            witness: Some(serde_json::to_value(witness).expect("witnesses serialize")),
        });
    }

    /// Records `holds` unless a witness is present.
    pub fn verdict<W: Serialize>(&mut self, name: &str, witness: Option<W>) {
        match witness {
            None => self.pass(name),
            Some(w) => self.fail(name, w),
        }
    }

    pub fn info(&mut self, key: &str, value: impl Serialize) {
        self.info.insert(
            key.into(),
            serde_json::to_value(value).expect("info values serialize"),
        );
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
