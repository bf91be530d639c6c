use std::io::Read;
use std::path::Path;

use serde::Deserialize;

use crate::bd::BdState;
use crate::error::Result;

/// A state given either by Bell probabilities or by its correlation vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StateSpec {
    Probs([f64; 4]),
    Corr([f64; 3]),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    p: Option<Vec<f64>>,
    t: Option<Vec<f64>>,
}

impl StateSpec {
    /// Parses `{"p": [..4..]}` or `{"t": [..3..]}`.
    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        let raw: RawSpec = serde_json::from_str(text).map_err(|e| format!("invalid state spec: {e}"))?;
        match (raw.p, raw.t) {
            (Some(p), None) => p
                .as_slice()
                .try_into()
                .map(StateSpec::Probs)
                .map_err(|_| format!("\"p\" needs 4 probabilities, got {}", p.len())),
            (None, Some(t)) => t
                .as_slice()
                .try_into()
                .map(StateSpec::Corr)
                .map_err(|_| format!("\"t\" needs 3 correlations, got {}", t.len())),
            (Some(_), Some(_)) => Err("state spec must give exactly one of \"p\" or \"t\", not both".into()),
            (None, None) => Err("state spec must give one of \"p\" or \"t\"".into()),
        }
    }

    /// Reads a spec from a file, or from `stdin` when `path` is `-`.
    pub fn load(path: &Path, stdin: &mut dyn Read) -> std::result::Result<Self, String> {
        let text = if path.as_os_str() == "-" {
            let mut buf = String::new();
            stdin
                .read_to_string(&mut buf)
                .map_err(|e| format!("cannot read standard input: {e}"))?;
            buf
        } else {
            std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?
        };
        Self::parse(&text)
    }

    pub fn to_state(&self) -> Result<BdState<f64>> {
        match *self {
            StateSpec::Probs(p) => BdState::from_probs(p),
            StateSpec::Corr(t) => BdState::from_tvec(t),
        }
    }
}
