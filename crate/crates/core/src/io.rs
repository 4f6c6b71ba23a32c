//! Matroid input files: `{"ground_set": n, "circuits": [[...], ...]}` or
//! `{"ground_set": n, "lines": [[...], ...]}`, 1-indexed, each list strictly increasing.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{OsxError, Result};
use crate::matroid::Matroid;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatroidFile {
    pub ground_set: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circuits: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lines: Option<Vec<Vec<usize>>>,
}

fn check_lists(field: &str, lists: &[Vec<usize>]) -> Result<()> {
    for (i, l) in lists.iter().enumerate() {
        if l.windows(2).any(|w| w[0] >= w[1]) {
            return Err(OsxError::Input(format!("{field}[{i}]: points must be strictly increasing")));
        }
    }
    Ok(())
}

impl MatroidFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| OsxError::Input(e.to_string()))
    }

    pub fn into_matroid(self) -> Result<Matroid> {
        let located = |field: &str, e: OsxError| OsxError::Input(format!("{field}: {e}"));
        match (self.circuits, self.lines) {
            (Some(c), None) => {
                check_lists("circuits", &c)?;
                Matroid::from_circuits(self.ground_set, &c).map_err(|e| located("circuits", e))
            }
            (None, Some(l)) => {
                check_lists("lines", &l)?;
                Matroid::from_lines(self.ground_set, &l).map_err(|e| located("lines", e))
            }
            _ => Err(OsxError::Input("exactly one of `circuits` and `lines` must be present".into())),
        }
    }

    pub fn from_matroid(m: &Matroid) -> Self {
        MatroidFile {
            ground_set: m.n(),
            circuits: Some(m.circuits().iter().map(|c| c.to_vec()).collect()),
            lines: None,
        }
    }
}

pub fn parse_matroid(text: &str) -> Result<Matroid> {
    MatroidFile::parse(text)?.into_matroid()
}

pub fn read_matroid(path: &Path) -> Result<Matroid> {
    let text = std::fs::read_to_string(path).map_err(|e| OsxError::Input(format!("{}: {e}", path.display())))?;
    parse_matroid(&text)
}
