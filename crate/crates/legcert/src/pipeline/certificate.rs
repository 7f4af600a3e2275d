//! Machine-readable certificates and their offline verifier.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::braid::BraidWord;
use crate::diagram::DiagramJson;

pub const FORMAT: &str = "legcert-certificate/1";

pub const SURGERY_NOTE: &str = "Vanishing persists for contact 1/k surgery, k >= 1: it is realized by k contact +1 surgeries along k Legendrian push-offs, and contact homology vanishing is preserved by Liouville functoriality. Cited, not recomputed.";

/// The certified input, echoed so the verifier can rebuild the diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InputEcho {
    Braid { braid: BraidWord },
    Diagram { diagram: DiagramJson },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsRecord {
    pub tb: i64,
    pub seifert_genus: Option<u64>,
    pub slice_genus: Option<u64>,
    /// tb = 2 g_s - 1.
    pub slice_genus_equal: bool,
    pub tight: bool,
    pub criterion: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetRecord {
    pub word: Vec<String>,
    /// Face of the RSFT disk with only positive punctures realizing the word.
    pub disk_face: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttemptRecord {
    pub target: Vec<String>,
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParametersRecord {
    /// eps as a fraction of the minimum chord action.
    pub epsilon_factor: String,
    pub epsilon: String,
    pub gap: String,
    pub max_len: usize,
    /// Whether `max_len` covers every word allowed by the action bound.
    pub enumeration_complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignmentRecord {
    /// (chord label, action) in crossing order.
    pub actions: Vec<(String, String)>,
    /// (face label, area) in face order, bounded faces only.
    pub areas: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemRecord {
    pub rows: Vec<String>,
    pub columns: Vec<Vec<String>>,
    pub matrix: Vec<Vec<String>>,
    pub rhs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    /// "only_trivial" or "witness".
    pub kind: String,
    /// Per column: a rational, "unbounded" or "empty".
    pub maxima: Vec<String>,
    pub duals: Vec<Option<Vec<String>>>,
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRecord {
    pub box_bound: u64,
    pub kind: String,
    pub agreement: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationRecord {
    pub candidate: Vec<String>,
    /// A face where the target coefficient is <= 0 and the candidate's is positive.
    pub face: String,
    pub coefficient: String,
    /// Every candidate coefficient on that face is >= 0, so the face alone forces x = 0.
    pub conclusive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conclusion {
    pub ch_vanishes: bool,
    pub algebraically_overtwisted: bool,
    pub tight: bool,
    pub statement: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub format: String,
    pub input: InputEcho,
    pub fingerprint: String,
    pub invariants: InvariantsRecord,
    pub target: TargetRecord,
    pub attempts: Vec<AttemptRecord>,
    pub policy: String,
    pub parameters: ParametersRecord,
    pub constraints: Vec<String>,
    pub assignment: AssignmentRecord,
    pub candidates: Vec<Vec<String>>,
    pub system: SystemRecord,
    pub verdict: VerdictRecord,
    pub oracle: Option<OracleRecord>,
    pub eliminations: Vec<EliminationRecord>,
    pub conclusion: Conclusion,
    pub surgery_note: String,
    pub digest: String,
}

impl Certificate {
    /// sha256 over the canonical JSON with an empty digest field.
    pub fn compute_digest(&self) -> String {
        let mut c = self.clone();
        c.digest.clear();
        let body = serde_json::to_vec(&c).expect("certificates serialize");
        hex::encode(Sha256::digest(body))
    }

    pub fn seal(mut self) -> Self {
        self.digest = self.compute_digest();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Certified means both vanishing contact homology and tightness.
    pub fn is_certified(&self) -> bool {
        self.conclusion.ch_vanishes && self.conclusion.tight
    }
}
