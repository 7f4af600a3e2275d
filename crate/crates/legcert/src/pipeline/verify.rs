//! Offline re-check of a certificate: no LP is solved, every claim is
//! re-evaluated from the embedded input and the recorded numbers.

use num_traits::Signed;

use super::certificate::{Certificate, FORMAT, SURGERY_NOTE};
use super::{Config, Input, fingerprint_digest, invariants, labels, single_chord_candidates, statement};
use crate::action::{
    AreaAssignment, RealizeOptions, canonical_rotation, complete_length_bound, corner_relations, enumerate_candidates,
    parse_constraint,
};
use crate::feasibility::{FeasibilitySystem, build_system};
use crate::grading::parse_word;
use crate::index::{GeneratorPolicy, degree_zero_generators};
use crate::rational::{Q, fmt_q, parse_q};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

fn qs(xs: &[String]) -> Option<Vec<Q>> {
    xs.iter().map(|x| parse_q(x)).collect()
}

/// Checks every inequality, the disk provenance and the digest.
pub fn verify(cert: &Certificate) -> VerifyReport {
    let mut r = VerifyReport::default();
    if let Err(m) = check(cert, &mut r.failures) {
        r.failures.push(m);
    }
    r
}

fn check(c: &Certificate, fail: &mut Vec<String>) -> Result<(), String> {
    let mut expect = |ok: bool, m: &str| {
        if !ok {
            fail.push(m.to_string());
        }
    };
    expect(c.format == FORMAT, "unknown format");
    expect(c.digest == c.compute_digest(), "digest mismatch");
    expect(c.surgery_note == SURGERY_NOTE, "surgery note altered");

    let input = Input::from_echo(&c.input).map_err(|e| format!("input does not rebuild: {e}"))?;
    let d = &input.diagram;
    expect(c.fingerprint == fingerprint_digest(d), "diagram fingerprint mismatch");

    let config = Config {
        slice_genus: c.invariants.slice_genus,
        ..Config::default()
    };
    let inv = invariants(&input, &config).map_err(|e| e.to_string())?;
    expect(inv.tb == c.invariants.tb, "tb mismatch");
    expect(
        inv.slice_genus_equal == c.invariants.slice_genus_equal,
        "slice genus equality mismatch",
    );
    expect(inv.tight == c.invariants.tight, "tightness flag mismatch");

    // Target and disk provenance.
    let target = parse_word(d, &c.target.word.join(" ")).map_err(|e| format!("target: {e}"))?;
    let face = d.face_by_label(&c.target.disk_face).ok_or("disk face unknown")?;
    let disk_ok = d
        .rsft_disks()
        .iter()
        .any(|k| k.face == face && canonical_rotation(&k.word) == canonical_rotation(&target));
    expect(disk_ok, "no RSFT disk realizes the target at the recorded face");

    let policy = degree_zero_generators(d);
    expect(c.policy == policy.name(), "policy mismatch");

    // Assignment.
    let sys = corner_relations(d);
    let n = d.crossings().len();
    if c.assignment.actions.len() != n {
        return Err("assignment has the wrong number of chords".into());
    }
    let mut actions = Vec::with_capacity(n);
    for (k, (l, v)) in c.assignment.actions.iter().enumerate() {
        expect(*l == d.crossings()[k].label, "assignment chord order");
        actions.push(parse_q(v).ok_or("bad action value")?);
    }
    let a = AreaAssignment::from_actions(&sys, actions);
    expect(
        a.is_valid(&sys, d.unbounded_face()),
        "assignment is not positive and admissible",
    );
    let recorded_areas: Vec<(String, String)> = d
        .bounded_faces()
        .map(|f| (d.faces()[f].label.clone(), fmt_q(&a.areas[f])))
        .collect();
    expect(
        recorded_areas == c.assignment.areas,
        "recorded areas disagree with the relations",
    );
    let factor = parse_q(&c.parameters.epsilon_factor).ok_or("bad epsilon factor")?;
    let gap = parse_q(&c.parameters.gap).ok_or("bad gap")?;
    let eps = &factor * a.min_action();
    expect(fmt_q(&eps) == c.parameters.epsilon, "epsilon mismatch");
    let opts = RealizeOptions { gap, eps: factor };
    for t in &c.constraints {
        match parse_constraint(d, t) {
            Ok(k) => expect(a.satisfies(&k, &opts), &format!("constraint violated: {t}")),
            Err(e) => expect(false, &format!("constraint {t}: {e}")),
        }
    }

    // Candidates.
    let (cands, complete) = match policy {
        GeneratorPolicy::SingleChord => (single_chord_candidates(&a, &target, &eps), true),
        GeneratorPolicy::ActionFilter => {
            let complete = complete_length_bound(&a, &target, &eps).is_some_and(|b| b <= c.parameters.max_len);
            let w =
                enumerate_candidates(&a, &target, &eps, c.parameters.max_len, u64::MAX).map_err(|e| e.to_string())?;
            (w, complete)
        }
    };
    expect(
        cands.iter().map(|w| labels(d, w)).collect::<Vec<_>>() == c.candidates,
        "candidate set mismatch",
    );
    expect(
        complete == c.parameters.enumeration_complete,
        "enumeration completeness mismatch",
    );

    // System: recomputed gradings must equal the recorded matrix exactly.
    let fs = build_system(d, &target, &cands).map_err(|e| e.to_string())?;
    let rows: Vec<String> = fs.rows.iter().map(|&f| d.faces()[f].label.clone()).collect();
    expect(rows == c.system.rows, "system rows mismatch");
    expect(c.system.columns == c.candidates, "system columns mismatch");
    let matrix: Option<Vec<Vec<Q>>> = c.system.matrix.iter().map(|r| qs(r)).collect();
    let matrix = matrix.ok_or("bad matrix entry")?;
    let rhs = qs(&c.system.rhs).ok_or("bad rhs entry")?;
    expect(matrix == fs.matrix, "matrix disagrees with recomputed gradings");
    expect(rhs == fs.rhs, "right-hand side disagrees with the target grading");
    let recorded = FeasibilitySystem { matrix, rhs, ..fs };

    // Verdict.
    let only = match c.verdict.kind.as_str() {
        "only_trivial" => {
            expect(c.verdict.duals.len() == recorded.cols(), "dual count");
            for j in 0..recorded.cols() {
                let ok = c
                    .verdict
                    .duals
                    .get(j)
                    .and_then(|y| y.as_ref())
                    .and_then(|y| qs(y))
                    .is_some_and(|y| recorded.check_dual(j, &y));
                expect(ok, &format!("dual certificate for column {j} fails"));
            }
            true
        }
        "witness" => {
            let ok = c
                .verdict
                .witness
                .as_ref()
                .and_then(|w| qs(w))
                .is_some_and(|w| recorded.check_witness(&w) && w.iter().any(Signed::is_positive));
            expect(ok, "witness fails");
            false
        }
        _ => return Err("unknown verdict".into()),
    };

    // Conclusion flags never exceed what the verdict supports.
    let pre = match policy {
        GeneratorPolicy::SingleChord => d.is_braid_closure(),
        GeneratorPolicy::ActionFilter => complete,
    };
    let ch = only && pre && disk_ok;
    expect(c.conclusion.ch_vanishes == ch, "ch_vanishes flag unsupported");
    expect(
        c.conclusion.algebraically_overtwisted == ch,
        "overtwisted flag unsupported",
    );
    expect(c.conclusion.tight == inv.tight, "tight flag unsupported");
    expect(
        c.conclusion.statement == statement(ch, inv.tight),
        "conclusion statement mismatch",
    );
    Ok(())
}
