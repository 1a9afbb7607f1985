//! Machine-readable certification reports (schema 1) and the verdict
//! exit-code contract.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;

use subdyn_core::measure_sets::Verdict;

pub const EXIT_VERIFIED: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;

/// Cap on per-section exception listings; verified items are summarized
/// by count only, so reports stay small on dense grids.
const MAX_EXCEPTIONS: usize = 32;

#[derive(Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub params: serde_json::Value,
    pub sections: Vec<Section>,
    pub summary: Summary,
    pub artifacts: BTreeMap<String, String>,
    pub exit_code: i32,
}

#[derive(Serialize)]
pub struct Section {
    pub name: String,
    pub total: usize,
    pub verified: usize,
    pub violated: usize,
    pub undecided: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub exceptions: Vec<Exception>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<serde_json::Value>,
}

#[derive(Serialize)]
pub struct Exception {
    pub at: String,
    pub verdict: String,
    pub info: String,
}

#[derive(Serialize, Default)]
pub struct Summary {
    pub verified: usize,
    pub violated: usize,
    pub undecided: usize,
}

impl Section {
    /// Aggregates labeled verdicts; non-verified items are listed (up to
    /// the cap) with their label and any extra context.
    pub fn from_verdicts<I>(name: &str, items: I) -> Self
    where
        I: IntoIterator<Item = (String, Verdict, String)>,
    {
        let mut section = Section {
            name: name.to_string(),
            total: 0,
            verified: 0,
            violated: 0,
            undecided: 0,
            exceptions: Vec::new(),
            detail: None,
        };
        for (at, verdict, info) in items {
            section.total += 1;
            match verdict {
                Verdict::Verified => section.verified += 1,
                Verdict::Violated => section.violated += 1,
                Verdict::Undecided { .. } => section.undecided += 1,
            }
            if !verdict.is_verified() && section.exceptions.len() < MAX_EXCEPTIONS {
                section.exceptions.push(Exception {
                    at,
                    verdict: verdict.label().to_string(),
                    info,
                });
            }
        }
        section
    }

    pub fn with_detail(mut self, detail: serde_json::Value) -> Self {
        self.detail = Some(detail);
        self
    }
}

impl Report {
    pub fn new(command: &str, params: serde_json::Value, sections: Vec<Section>) -> Self {
        let mut summary = Summary::default();
        for s in &sections {
            summary.verified += s.verified;
            summary.violated += s.violated;
            summary.undecided += s.undecided;
        }
        let exit_code = if summary.violated > 0 {
            EXIT_VIOLATED
        } else if summary.undecided > 0 {
            EXIT_UNDECIDED
        } else {
            EXIT_VERIFIED
        };
        Report {
            schema: 1,
            command: command.to_string(),
            params,
            sections,
            summary,
            artifacts: BTreeMap::new(),
            exit_code,
        }
    }

    pub fn add_artifact(&mut self, kind: &str, path: &Path) {
        self.artifacts
            .insert(kind.to_string(), path.display().to_string());
    }

    /// Writes `<command>.json` into the output directory and echoes the
    /// document to stdout; returns the exit code.
    pub fn emit(&self, out_dir: &Path) -> Result<i32> {
        let text = serde_json::to_string_pretty(self).context("report serialization")?;
        let path = out_dir.join(format!("{}.json", self.command.replace('-', "_")));
        std::fs::write(&path, &text)
            .with_context(|| format!("cannot write report {}", path.display()))?;
        let mut stdout = std::io::stdout().lock();
        stdout.write_all(text.as_bytes())?;
        stdout.write_all(b"\n")?;
        Ok(self.exit_code)
    }
}
