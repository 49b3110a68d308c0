use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    OutOfDomain,
    Error,
}

impl Outcome {
    pub fn from_passed(passed: bool) -> Self {
        if passed {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

/// What every command prints. Payload fields sit at the top level next to the
/// bookkeeping fields.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub outcome: Outcome,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    #[serde(flatten)]
    pub payload: Map<String, Value>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}

/// Turns any serializable value into a payload map; non-objects go under `result`.
pub fn payload<T: Serialize>(value: &T) -> Map<String, Value> {
    match serde_json::to_value(value).expect("payload serializes") {
        Value::Object(m) => m,
        other => Map::from_iter([("result".to_string(), other)]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let r = RunReport {
            command: "cert".into(),
            inputs: Map::from_iter([("q".to_string(), Value::from(27))]),
            outcome: Outcome::Pass,
            seed: 0,
            elapsed_ms: None,
            payload: Map::from_iter([("holds".to_string(), Value::from(true))]),
        };
        let back: RunReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(r.to_json().contains("\"holds\": true"));
    }
}
