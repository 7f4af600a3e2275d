//! End-to-end certification: input → diagram → target disk → candidates →
//! positivity system → verdict → certificate.

pub mod batch;
pub mod certificate;
mod explain;
mod verify;

use num_traits::{Signed, Zero};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::action::{
    ActionError, ActionSystem, AreaAssignment, Constraint, RealizeOptions, canonical_rotation, complete_length_bound,
    corner_relations, enumerate_candidates, parse_constraint, realize_areas, word_action,
};
use crate::braid::{BraidError, BraidWord, tightness_report};
use crate::diagram::{CrossingKind, DiagramError, LagrangianDiagram, RsftDisk};
use crate::diagram::{load_diagram, load_diagram_json};
use crate::feasibility::{
    Agreement, FeasibilityError, FeasibilitySystem, FeasibilityVerdict, Maximum, VerdictKind, build_system,
    compare_verdicts, integer_oracle, only_trivial,
};
use crate::grading::{GradingError, parse_word};
use crate::index::{GeneratorPolicy, degree_zero_generators};
use crate::rational::{Q, fmt_q, q};

pub use batch::{BatchItem, BatchOutcome, Family, batch, summary_table};
pub use certificate::Certificate;
use certificate::*;
pub use explain::explain;
pub use verify::{VerifyReport, verify};

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Feasibility(#[from] FeasibilityError),
    #[error("no RSFT disk with only positive punctures: {0}")]
    NoRsftDisk(String),
    #[error("{count} candidates exceed the limit of {limit}")]
    TooManyCandidates { count: usize, limit: usize },
    #[error("{0}")]
    Io(String),
    #[error("malformed certificate: {0}")]
    Json(String),
}

impl PipelineError {
    /// 3 for malformed or unusable input, 2 when the method cannot conclude.
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::NoRsftDisk(_)
            | PipelineError::TooManyCandidates { .. }
            | PipelineError::Feasibility(_)
            | PipelineError::Action(ActionError::Infeasible(_) | ActionError::BudgetExceeded(_)) => 2,
            _ => 3,
        }
    }
}

/// A parsed input together with the echo stored in certificates.
#[derive(Debug, Clone)]
pub struct Input {
    pub echo: InputEcho,
    pub diagram: LagrangianDiagram,
}

impl Input {
    pub fn from_braid(b: BraidWord) -> Result<Self, PipelineError> {
        let diagram = crate::diagram::rainbow_closure_diagram(&b)?;
        Ok(Input {
            echo: InputEcho::Braid { braid: b },
            diagram,
        })
    }

    /// `p=2;1,1,1`, `p=2 word=1,1,1` or `{"strands":2,"word":[1,1,1]}`.
    pub fn parse_braid(text: &str) -> Result<Self, PipelineError> {
        Self::from_braid(BraidWord::parse(text)?)
    }

    /// Diagram text format or its JSON mirror (detected by a leading `{`).
    pub fn parse_diagram(text: &str) -> Result<Self, PipelineError> {
        let d = if text.trim_start().starts_with('{') {
            load_diagram_json(text)?
        } else {
            load_diagram(text)?
        };
        Ok(Self::from_diagram(d))
    }

    pub fn from_diagram(d: LagrangianDiagram) -> Self {
        Input {
            echo: InputEcho::Diagram {
                diagram: d.to_json_value(),
            },
            diagram: d,
        }
    }

    pub fn from_echo(echo: &InputEcho) -> Result<Self, PipelineError> {
        match echo {
            InputEcho::Braid { braid } => {
                let b = crate::braid::validate_braid(
                    &braid.letters.iter().map(|&x| x as i64).collect::<Vec<_>>(),
                    braid.strands as i64,
                )?;
                Self::from_braid(b)
            }
            InputEcho::Diagram { diagram } => Ok(Input {
                echo: echo.clone(),
                diagram: diagram.to_diagram()?,
            }),
        }
    }
}

/// Tunable parameters of a certification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    /// Target word such as `α1`; chosen automatically when absent.
    pub target: Option<String>,
    /// eps = factor · (minimum chord action).
    pub epsilon_factor: Q,
    /// Gap factor G for `<<`.
    pub gap: Q,
    /// Cross-check with the integer oracle over [0, box]^n.
    pub oracle_box: Option<u64>,
    /// Extra constraints in the action mini-language.
    pub constraints: Vec<String>,
    /// Slice genus for loaded diagrams (braid closures compute it).
    pub slice_genus: Option<u64>,
    /// Longest candidate word enumerated under the action filter.
    pub max_len: usize,
    pub node_budget: u64,
    /// Targets whose candidate list is longer are skipped.
    pub max_candidates: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            target: None,
            epsilon_factor: Q::new(1.into(), 1000.into()),
            gap: q(100),
            oracle_box: None,
            constraints: Vec::new(),
            slice_genus: None,
            max_len: 8,
            node_budget: 200_000,
            max_candidates: 64,
        }
    }
}

impl Config {
    /// Stable text identifying every field, used for cache keys.
    pub fn canonical(&self) -> String {
        format!(
            "target={:?};eps={};gap={};box={:?};constraints={:?};slice={:?};max_len={};budget={};max_cands={}",
            self.target,
            fmt_q(&self.epsilon_factor),
            fmt_q(&self.gap),
            self.oracle_box,
            self.constraints,
            self.slice_genus,
            self.max_len,
            self.node_budget,
            self.max_candidates
        )
    }
}

pub(crate) fn labels(d: &LagrangianDiagram, w: &[usize]) -> Vec<String> {
    w.iter().map(|&c| d.crossings()[c].label.clone()).collect()
}

pub(crate) fn fingerprint_digest(d: &LagrangianDiagram) -> String {
    hex::encode(Sha256::digest(d.labeled_fingerprint().as_bytes()))
}

fn is_torus_braid(b: &BraidWord) -> bool {
    b.strands >= 2
        && b.letters.len().is_multiple_of(b.strands - 1)
        && BraidWord::torus(b.strands, b.letters.len() / (b.strands - 1)).is_ok_and(|t| t == *b)
}

fn alpha(d: &LagrangianDiagram, l: usize) -> Option<usize> {
    (0..d.crossings().len()).find(|&c| d.crossings()[c].kind == CrossingKind::Rainbow { level: l })
}

/// RSFT disks in the order they are tried.
fn target_order(
    d: &LagrangianDiagram,
    config: &Config,
    base: Option<&AreaAssignment>,
) -> Result<Vec<RsftDisk>, PipelineError> {
    let disks = d.rsft_disks();
    if let Some(t) = &config.target {
        let w = canonical_rotation(&parse_word(d, t)?);
        return disks
            .into_iter()
            .find(|k| canonical_rotation(&k.word) == w)
            .map(|k| vec![k])
            .ok_or_else(|| PipelineError::NoRsftDisk(format!("no disk realizes the requested target {t}")));
    }
    if disks.is_empty() {
        return Err(PipelineError::NoRsftDisk("the diagram has none".into()));
    }
    let preferred: Vec<usize> = match d.braid() {
        Some(b) if is_torus_braid(b) => [alpha(d, 1)].into_iter().flatten().collect(),
        Some(_) => [alpha(d, 2), alpha(d, 1)].into_iter().flatten().collect(),
        None => Vec::new(),
    };
    let rank = |k: &RsftDisk| {
        let pref = preferred.iter().position(|&c| k.word == [c]).unwrap_or(usize::MAX);
        let act = base.map_or_else(Q::zero, |a| word_action(a, &k.word));
        (pref, k.word.len(), act, k.face)
    };
    let mut disks = disks;
    disks.sort_by_key(rank);
    Ok(disks)
}

/// Everything computed for one target.
struct Attempt {
    disk: RsftDisk,
    constraints: Vec<Constraint>,
    assignment: AreaAssignment,
    eps: Q,
    max_len: usize,
    complete: bool,
    candidates: Vec<Vec<usize>>,
    system: FeasibilitySystem,
    verdict: FeasibilityVerdict,
    oracle: Option<OracleRecord>,
}

fn attempt(
    d: &LagrangianDiagram,
    sys: &ActionSystem,
    policy: GeneratorPolicy,
    disk: &RsftDisk,
    user: &[Constraint],
    config: &Config,
) -> Result<Attempt, PipelineError> {
    let mut constraints = user.to_vec();
    if let (Some(b), [t]) = (d.braid(), disk.word.as_slice()) {
        if let CrossingKind::Rainbow { level } = d.crossings()[*t].kind {
            for j in level + 1..=b.strands {
                constraints.push(parse_constraint(d, &format!("area(B{level}) << area(B{j})"))?);
            }
        }
    }
    let opts = RealizeOptions {
        gap: config.gap.clone(),
        eps: config.epsilon_factor.clone(),
    };
    let assignment = realize_areas(d, sys, &constraints, &opts)?;
    let eps = &config.epsilon_factor * assignment.min_action();
    let target = disk.word.clone();
    let (candidates, max_len, complete) = match policy {
        GeneratorPolicy::SingleChord => (single_chord_candidates(&assignment, &target, &eps), 1, true),
        GeneratorPolicy::ActionFilter => {
            let bound = complete_length_bound(&assignment, &target, &eps);
            let max_len = bound.map_or(config.max_len, |b| b.min(config.max_len));
            let complete = bound.is_some_and(|b| b <= config.max_len);
            (
                enumerate_candidates(&assignment, &target, &eps, max_len, config.node_budget)?,
                max_len,
                complete,
            )
        }
    };
    if candidates.len() > config.max_candidates {
        return Err(PipelineError::TooManyCandidates {
            count: candidates.len(),
            limit: config.max_candidates,
        });
    }
    let system = build_system(d, &target, &candidates)?;
    let verdict = only_trivial(&system);
    let oracle = config.oracle_box.map(|b| match integer_oracle(&system, b) {
        Ok(iv) => OracleRecord {
            box_bound: b,
            kind: kind_name(iv.kind).into(),
            agreement: match compare_verdicts(&system, &verdict, &iv, b) {
                Agreement::Agree => "agree".into(),
                Agreement::ScalingNote { reason, .. } => format!("scaling note: {reason}"),
                Agreement::Disagree(m) => format!("disagree: {m}"),
            },
        },
        Err(e) => OracleRecord {
            box_bound: b,
            kind: "skipped".into(),
            agreement: e.to_string(),
        },
    });
    Ok(Attempt {
        disk: disk.clone(),
        constraints,
        assignment,
        eps,
        max_len,
        complete,
        candidates,
        system,
        verdict,
        oracle,
    })
}

/// Single chords other than the target whose action meets the bound
/// A(c) < A(target) + 3·eps·(1 + wl(target)).
pub fn single_chord_candidates(a: &AreaAssignment, target: &[usize], eps: &Q) -> Vec<Vec<usize>> {
    let bound = word_action(a, target) + eps * q(3 * (1 + target.len() as i64));
    (0..a.actions.len())
        .filter(|&c| [c] != target && a.actions[c] < bound)
        .map(|c| vec![c])
        .collect()
}

fn kind_name(k: VerdictKind) -> &'static str {
    match k {
        VerdictKind::OnlyTrivial => "only_trivial",
        VerdictKind::Witness => "witness",
    }
}

fn invariants(input: &Input, config: &Config) -> Result<InvariantsRecord, PipelineError> {
    Ok(match &input.echo {
        InputEcho::Braid { braid } => {
            let k = tightness_report(braid)?;
            InvariantsRecord {
                tb: k.tb,
                seifert_genus: Some(k.seifert_genus),
                slice_genus: Some(k.seifert_genus),
                slice_genus_equal: k.slice_genus_equal,
                tight: k.tight_certified,
                criterion:
                    "tb = 2 g_s - 1 with tb = w - p and g_s = g_3 for positive braid closures; tight when tb != -1"
                        .into(),
            }
        }
        InputEcho::Diagram { .. } => {
            let tb = input.diagram.writhe();
            let equal = config.slice_genus.is_some_and(|g| tb == 2 * g as i64 - 1);
            InvariantsRecord {
                tb,
                seifert_genus: None,
                slice_genus: config.slice_genus,
                slice_genus_equal: equal,
                tight: equal && tb != -1,
                criterion: match config.slice_genus {
                    Some(_) => "tb = 2 g_s - 1 with g_s supplied by configuration; tight when tb != -1".into(),
                    None => "not applicable: no slice genus supplied".into(),
                },
            }
        }
    })
}

fn eliminations(d: &LagrangianDiagram, s: &FeasibilitySystem) -> Vec<EliminationRecord> {
    (0..s.cols())
        .filter_map(|j| {
            let rows: Vec<usize> = (0..s.rows.len())
                .filter(|&r| !s.rhs[r].is_positive() && s.matrix[r][j].is_positive())
                .collect();
            let conclusive = rows
                .iter()
                .copied()
                .find(|&r| s.matrix[r].iter().all(|x| !x.is_negative()));
            let r = conclusive.or(rows.first().copied())?;
            Some(EliminationRecord {
                candidate: labels(d, &s.variables[j]),
                face: d.faces()[s.rows[r]].label.clone(),
                coefficient: fmt_q(&s.matrix[r][j]),
                conclusive: conclusive.is_some(),
            })
        })
        .collect()
}

fn verdict_record(v: &FeasibilityVerdict) -> VerdictRecord {
    VerdictRecord {
        kind: kind_name(v.kind).into(),
        maxima: v
            .maxima
            .iter()
            .map(|m| match m {
                Maximum::Finite(x) => fmt_q(x),
                Maximum::Unbounded => "unbounded".into(),
                Maximum::Empty => "empty".into(),
            })
            .collect(),
        duals: v
            .duals
            .iter()
            .map(|y| y.as_ref().map(|y| y.iter().map(fmt_q).collect()))
            .collect(),
        witness: v.witness.as_ref().map(|w| w.iter().map(fmt_q).collect()),
    }
}

pub(crate) fn statement(ch: bool, tight: bool) -> String {
    match (ch, tight) {
        (true, true) => "Contact +1 surgery along this Legendrian knot has vanishing contact homology (algebraically overtwisted) and is tight.".into(),
        (true, false) => "Contact +1 surgery along this Legendrian knot has vanishing contact homology (algebraically overtwisted); tightness is not established by the tb = 2 g_s - 1 criterion.".into(),
        (false, _) => "Inconclusive by this method: the positivity system admits a nontrivial solution or the method's preconditions are unmet. No claim is made either way.".into(),
    }
}

/// Runs the whole pipeline and returns a sealed certificate.
pub fn certify(input: &Input, config: &Config) -> Result<Certificate, PipelineError> {
    let d = &input.diagram;
    let sys = corner_relations(d);
    let policy = degree_zero_generators(d);
    let user: Vec<Constraint> = config
        .constraints
        .iter()
        .map(|c| parse_constraint(d, c))
        .collect::<Result<_, _>>()?;
    let base_opts = RealizeOptions {
        gap: config.gap.clone(),
        eps: config.epsilon_factor.clone(),
    };
    let base = realize_areas(d, &sys, &user, &base_opts).ok();
    let mut attempts = Vec::new();
    let mut chosen: Option<Attempt> = None;
    let mut first_err = None;
    for disk in target_order(d, config, base.as_ref())? {
        match attempt(d, &sys, policy, &disk, &user, config) {
            Ok(a) => {
                attempts.push(AttemptRecord {
                    target: labels(d, &disk.word),
                    verdict: kind_name(a.verdict.kind).into(),
                });
                let done = a.verdict.kind == VerdictKind::OnlyTrivial;
                if done || chosen.is_none() {
                    chosen = Some(a);
                }
                if done {
                    break;
                }
            }
            Err(e) => {
                attempts.push(AttemptRecord {
                    target: labels(d, &disk.word),
                    verdict: format!("error: {e}"),
                });
                first_err.get_or_insert(e);
            }
        }
    }
    let Some(a) = chosen else {
        return Err(first_err.expect("at least one target was tried"));
    };

    let inv = invariants(input, config)?;
    let preconditions = match policy {
        GeneratorPolicy::SingleChord => d.is_braid_closure(),
        GeneratorPolicy::ActionFilter => a.complete,
    };
    let ch = a.verdict.kind == VerdictKind::OnlyTrivial && preconditions;
    let bounded: Vec<usize> = d.bounded_faces().collect();
    Ok(Certificate {
        format: FORMAT.into(),
        input: input.echo.clone(),
        fingerprint: fingerprint_digest(d),
        target: TargetRecord {
            word: labels(d, &a.disk.word),
            disk_face: d.faces()[a.disk.face].label.clone(),
        },
        attempts,
        policy: policy.name().into(),
        parameters: ParametersRecord {
            epsilon_factor: fmt_q(&config.epsilon_factor),
            epsilon: fmt_q(&a.eps),
            gap: fmt_q(&config.gap),
            max_len: a.max_len,
            enumeration_complete: a.complete,
        },
        constraints: a.constraints.iter().map(|c| c.text.clone()).collect(),
        assignment: AssignmentRecord {
            actions: (0..d.crossings().len())
                .map(|c| (d.crossings()[c].label.clone(), fmt_q(&a.assignment.actions[c])))
                .collect(),
            areas: bounded
                .iter()
                .map(|&f| (d.faces()[f].label.clone(), fmt_q(&a.assignment.areas[f])))
                .collect(),
        },
        candidates: a.candidates.iter().map(|w| labels(d, w)).collect(),
        system: SystemRecord {
            rows: a.system.rows.iter().map(|&f| d.faces()[f].label.clone()).collect(),
            columns: a.system.variables.iter().map(|w| labels(d, w)).collect(),
            matrix: a.system.matrix.iter().map(|r| r.iter().map(fmt_q).collect()).collect(),
            rhs: a.system.rhs.iter().map(fmt_q).collect(),
        },
        verdict: verdict_record(&a.verdict),
        oracle: a.oracle,
        eliminations: eliminations(d, &a.system),
        conclusion: Conclusion {
            ch_vanishes: ch,
            algebraically_overtwisted: ch,
            tight: inv.tight,
            statement: statement(ch, inv.tight),
        },
        invariants: inv,
        surgery_note: SURGERY_NOTE.into(),
        digest: String::new(),
    }
    .seal())
}
