use std::fmt;
use std::str::FromStr;

use plucker_core::symfunc::Partition;

/// A partition as typed on the command line: `3,2,2`, `2^2,3` or `empty`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSpec {
    pub source: String,
    pub partition: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecError(pub String);

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for SpecError {}

fn number(tok: &str, src: &str) -> Result<u32, SpecError> {
    tok.trim()
        .parse()
        .map_err(|_| SpecError(format!("bad partition {src:?}: {tok:?} is not a number")))
}

impl FromStr for PartitionSpec {
    type Err = SpecError;

    fn from_str(src: &str) -> Result<Self, SpecError> {
        let s = src.trim();
        let mut parts = Vec::new();
        if !matches!(s, "" | "0" | "empty" | "()" | "∅") {
            for tok in s.trim_start_matches('(').trim_end_matches(')').split(',') {
                match tok.split_once('^') {
                    Some((base, exp)) => {
                        let base = number(base, src)?;
                        let exp = number(exp, src)?;
                        parts.extend(std::iter::repeat_n(base, exp as usize));
                    }
                    None => parts.push(number(tok, src)?),
                }
            }
        }
        if parts.contains(&0) {
            return Err(SpecError(format!("bad partition {src:?}: zero part")));
        }
        let partition =
            Partition::new(parts).map_err(|e| SpecError(format!("bad partition {src:?}: {e}")))?;
        Ok(Self {
            source: src.to_string(),
            partition,
        })
    }
}
