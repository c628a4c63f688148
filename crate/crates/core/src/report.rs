//! The JSON envelope shared by every command of the verification tool.

use serde::Serialize;
use serde_json::Value;

pub const ENGINE_VERSION: &str = concat!("g2hom ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    pub fn from_pass(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// `{command, inputs, status, body, engine_version}`; object keys inside
/// `inputs` and `body` are emitted in sorted order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportEnvelope {
    pub command: String,
    pub inputs: Value,
    pub status: Status,
    pub body: Value,
    pub engine_version: String,
}

impl ReportEnvelope {
    pub fn new<B: Serialize>(command: &str, inputs: Value, status: Status, body: &B) -> Self {
        ReportEnvelope {
            command: command.into(),
            inputs,
            status,
            body: serde_json::to_value(body).expect("report bodies serialize"),
            engine_version: ENGINE_VERSION.into(),
        }
    }

    pub fn to_json(&self, pretty: bool) -> String {
        if pretty {
            serde_json::to_string_pretty(self).expect("envelope serializes")
        } else {
            serde_json::to_string(self).expect("envelope serializes")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn stable_key_order() {
        let body = json!({"zeta": 1, "alpha": [1, 2]});
        let a = ReportEnvelope::new("x", json!({"b": 1, "a": 2}), Status::Info, &body).to_json(false);
        let b = ReportEnvelope::new("x", json!({"a": 2, "b": 1}), Status::Info, &body).to_json(false);
        assert_eq!(a, b);
        assert!(a.starts_with(r#"{"command":"x","inputs":{"a":2,"b":1},"status":"info","body":{"alpha""#));
    }
}
