use lacunary::{EngineReport, Kind};
use serde::{Deserialize, Serialize};

/// One evaluated sum as printed by `compute` and `bench`.
///
/// Values and moduli are decimal strings so exact results never pass
/// through a float.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub n: usize,
    pub r: usize,
    pub m: u64,
    pub kind: Kind,
    pub engine: String,
    pub value: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
    pub micros: u64,
}

impl OutputRecord {
    pub fn from_report(report: &EngineReport, micros: u64) -> Self {
        let p = &report.value.params;
        OutputRecord {
            n: p.n(),
            r: p.r(),
            m: p.m(),
            kind: p.kind(),
            engine: report.engine.to_string(),
            value: report.value.value.to_string(),
            modulus: report.value.modulus.as_ref().map(ToString::to_string),
            micros,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn human(&self) -> String {
        let star = if self.kind == Kind::Alternating { "*" } else { "" };
        let modulus = self.modulus.as_ref().map(|q| format!(" mod {q}")).unwrap_or_default();
        format!(
            "T{star}({}, {}, {}){modulus} = {}    [{}, {} us]",
            self.n, self.r, self.m, self.value, self.engine, self.micros
        )
    }
}
