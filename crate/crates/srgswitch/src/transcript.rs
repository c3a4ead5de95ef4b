//! Switching transcripts as JSON:
//! `{"start": "sp3", "steps": [{"set": ["100000", ...], "rank": 8}, ...]}`.

use std::path::Path;

use serde::{Deserialize, Serialize};
use srgswitch_core::search::{SearchReport, TranscriptStep};
use srgswitch_core::{Graph, Transcript};

use crate::error::{IoError, IoResult};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub set: Vec<String>,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TranscriptRecord {
    pub start: String,
    pub steps: Vec<StepRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ones_in_colspace_final: Option<bool>,
}

impl TranscriptRecord {
    pub fn into_transcript(self) -> IoResult<Transcript> {
        let steps = self
            .steps
            .into_iter()
            .map(|s| TranscriptStep {
                labels: s.set,
                expected_rank: s.rank,
            })
            .collect();
        Ok(Transcript::new(&self.start, steps, self.ones_in_colspace_final)?)
    }

    pub fn from_transcript(t: &Transcript) -> Self {
        TranscriptRecord {
            start: t.start.as_str().to_string(),
            steps: t
                .steps
                .iter()
                .map(|s| StepRecord {
                    set: s.labels.clone(),
                    rank: s.expected_rank,
                })
                .collect(),
            ones_in_colspace_final: t.expected_final_ones_in_colspace,
        }
    }

    /// Records the path of a search from `start`, labelled by `graph`.
    pub fn from_report(start: &str, graph: &Graph, report: &SearchReport) -> Self {
        let label = |v: usize| graph.label(v).map_or_else(|| v.to_string(), str::to_string);
        TranscriptRecord {
            start: start.to_string(),
            steps: report
                .path
                .iter()
                .map(|p| StepRecord {
                    set: p.set.members().iter().map(|&v| label(v)).collect(),
                    rank: p.rank_after,
                })
                .collect(),
            ones_in_colspace_final: None,
        }
    }
}

pub fn parse(json: &str) -> IoResult<Transcript> {
    serde_json::from_str::<TranscriptRecord>(json)?.into_transcript()
}

pub fn to_json(t: &Transcript) -> String {
    serde_json::to_string_pretty(&TranscriptRecord::from_transcript(t)).expect("plain data")
}

pub fn load(path: &Path) -> IoResult<Transcript> {
    parse(&std::fs::read_to_string(path).map_err(|e| IoError::file(path, e))?)
}

pub fn save(path: &Path, t: &Transcript) -> IoResult<()> {
    std::fs::write(path, to_json(t) + "\n").map_err(|e| IoError::file(path, e))
}
