use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// One emitted result line.
///
/// Counts are decimal strings so consumers with 64-bit number parsers never
/// see a truncated value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub function: String,
    pub set: Option<String>,
    pub n: Option<u64>,
    pub k: Option<u64>,
    pub m: Option<u64>,
    pub result: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_result: Option<String>,
    pub elapsed_ms: u64,
}

impl OutputRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn from_json(line: &str) -> serde_json::Result<Self> {
        serde_json::from_str(line)
    }

    /// `function  spec  n  k  m  result`, tab-separated, empty for absent fields.
    pub fn to_tsv(&self) -> String {
        let opt = |v: Option<u64>| v.map(|v| v.to_string()).unwrap_or_default();
        let mut line = String::new();
        write!(
            line,
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.function,
            self.set.as_deref().unwrap_or(""),
            opt(self.n),
            opt(self.k),
            opt(self.m),
            self.result
        )
        .expect("write to string");
        line
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> OutputRecord {
        OutputRecord {
            function: "phi".into(),
            set: Some("1..2 + 5..6".into()),
            n: Some(6),
            k: None,
            m: None,
            result: "12".into(),
            verified: None,
            oracle_result: None,
            elapsed_ms: 0,
        }
    }

    #[test]
    fn json_shape() {
        assert_eq!(
            sample().to_json(),
            r#"{"function":"phi","set":"1..2 + 5..6","n":6,"k":null,"m":null,"result":"12","elapsed_ms":0}"#
        );
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let mut r = sample();
        for verified in [None, Some(true), Some(false)] {
            r.verified = verified;
            r.oracle_result = verified.filter(|v| !v).map(|_| "13".into());
            r.result = "9".repeat(700);
            let line = r.to_json();
            let back = OutputRecord::from_json(&line).unwrap();
            assert_eq!(back, r);
            assert_eq!(back.to_json(), line);
        }
    }

    #[test]
    fn tsv_columns() {
        assert_eq!(sample().to_tsv(), "phi\t1..2 + 5..6\t6\t\t\t12");
    }
}
