//! The run report every CLI command emits: command line, a digest of the
//! inputs, named outputs, and checks with witnesses.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::verify::Check;

#[derive(Clone, Debug, Default)]
pub struct RunReport {
    pub command: String,
    pub inputs_digest: String,
    /// Named outputs in insertion order.
    pub outputs: Vec<(String, Value)>,
    pub checks: Vec<Check>,
    /// Seconds; only recorded on request so reports stay byte-identical.
    pub wall_time: Option<f64>,
}

/// Hex sha256 over the arguments and input file contents, each prefixed by
/// its length so that concatenations cannot collide.
pub fn digest_inputs<'a>(parts: impl IntoIterator<Item = &'a [u8]>) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p);
    }
    hex::encode(h.finalize())
}

impl RunReport {
    pub fn new(command: impl Into<String>, inputs_digest: String) -> Self {
        RunReport { command: command.into(), inputs_digest, ..Default::default() }
    }

    pub fn output(&mut self, name: &str, v: Value) {
        self.outputs.push((name.to_string(), v));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        let mut outputs = Map::new();
        for (k, v) in &self.outputs {
            outputs.insert(k.clone(), v.clone());
        }
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut m = Map::new();
                m.insert("name".into(), json!(c.name));
                m.insert("status".into(), json!(if c.passed { "pass" } else { "fail" }));
                if let Some(w) = &c.witness {
                    m.insert("witness".into(), json!(w));
                }
                Value::Object(m)
            })
            .collect();
        let mut top = Map::new();
        top.insert("command".into(), json!(self.command));
        top.insert("inputs_digest".into(), json!(self.inputs_digest));
        top.insert("outputs".into(), Value::Object(outputs));
        top.insert("checks".into(), Value::Array(checks));
        if let Some(t) = self.wall_time {
            top.insert("wall_time_s".into(), json!(t));
        }
        Value::Object(top)
    }

    /// One `PASS`/`FAIL` line per check, witnesses indented below.
    pub fn check_table(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            s.push_str(if c.passed { "PASS  " } else { "FAIL  " });
            s.push_str(&c.name);
            s.push('\n');
            if let Some(w) = &c.witness {
                s.push_str("      witness: ");
                s.push_str(w);
                s.push('\n');
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_separates_arguments() {
        let a = digest_inputs([b"ab".as_slice(), b"c".as_slice()]);
        let b = digest_inputs([b"a".as_slice(), b"bc".as_slice()]);
        assert_ne!(a, b);
        assert_eq!(a.len(), 64);
    }

    #[test]
    fn failed_checks_carry_witnesses() {
        let mut r = RunReport::new("verify bases", digest_inputs([b"x".as_slice()]));
        r.checks.push(Check::pass_unless("one", None));
        r.checks.push(Check::pass_unless("two", Some("alpha=[2,1]".into())));
        assert!(!r.passed());
        let v = r.to_json();
        assert_eq!(v["checks"][1]["witness"], "alpha=[2,1]");
        assert!(v["checks"][0].get("witness").is_none());
        assert!(v.get("wall_time_s").is_none());
        assert!(r.check_table().contains("FAIL  two\n      witness: alpha=[2,1]"));
    }
}
