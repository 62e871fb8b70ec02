//! Line-delimited JSON corpus files.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Group, Limits};
use crate::perm::{format_cycles, parse_cycles};

/// Regression pins checked against the computed report.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u128>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub soluble: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class_count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub appendix_passes: Option<bool>,
    /// Number of hypothesis-holding normal subsets per prime.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypothesis_holding: Option<BTreeMap<u64, usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    /// `builtin` or the file the entry was read from.
    #[serde(skip)]
    pub source: String,
    pub degree: usize,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

impl CorpusEntry {
    /// Records a group under a name, generators in cycle text.
    pub fn from_group(name: &str, group: &Group, expected: Option<Expected>) -> Self {
        CorpusEntry {
            name: name.to_string(),
            source: "builtin".to_string(),
            degree: group.degree(),
            generators: group.generators().iter().map(format_cycles).collect(),
            expected,
        }
    }

    pub fn group(&self, limits: Limits) -> Result<Group> {
        let gens = self
            .generators
            .iter()
            .map(|g| parse_cycles(g, self.degree))
            .collect::<Result<Vec<_>>>()?;
        Group::with_limits(self.degree, gens, limits)
    }

    fn validate(&self) -> Result<()> {
        if self.degree == 0 {
            return Err(Error::ZeroDegree);
        }
        for g in &self.generators {
            parse_cycles(g, self.degree)?;
        }
        Ok(())
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("corpus entries serialise")
    }
}

/// Parses corpus text; blank lines are skipped. Errors carry the 1-based
/// line number.
pub fn parse_corpus(text: &str, source: &str) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fail = |reason: String| Error::CorpusParse {
            line: i + 1,
            reason,
        };
        let mut entry: CorpusEntry = serde_json::from_str(line).map_err(|e| fail(e.to_string()))?;
        entry
            .validate()
            .map_err(|e| fail(format!("{}: {e}", entry.name)))?;
        entry.source = source.to_string();
        out.push(entry);
    }
    Ok(out)
}

pub fn load_corpus(path: impl AsRef<Path>) -> Result<Vec<CorpusEntry>> {
    let path = path.as_ref();
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_corpus(&text, &path.display().to_string())
}
