//! Human-readable proof narrative for a certificate.

use std::fmt::Write;

use super::certificate::{Certificate, InputEcho};

fn word(w: &[String]) -> String {
    if w.len() == 1 {
        w[0].clone()
    } else {
        format!("({})", w.join(" "))
    }
}

pub fn explain(c: &Certificate) -> String {
    let mut s = String::new();
    let input = match &c.input {
        InputEcho::Braid { braid } => format!("rainbow closure of braid {}", braid.to_text()),
        InputEcho::Diagram { diagram } => format!("diagram with {} crossings", diagram.crossings.len()),
    };
    let target = word(&c.target.word);
    if c.candidates.is_empty() {
        let _ = writeln!(
            s,
            "{input}: target {target} (disk {}) has no candidates below its action bound; {}",
            c.target.disk_face, c.conclusion.statement
        );
        return s;
    }
    let _ = writeln!(s, "Input: {input}");
    let _ = writeln!(
        s,
        "tb = {}; tightness: {} ({})",
        c.invariants.tb, c.invariants.tight, c.invariants.criterion
    );
    let _ = writeln!(s, "Target: {target}, realized by the RSFT disk {}", c.target.disk_face);
    for a in c.attempts.iter().filter(|a| a.target != c.target.word) {
        let _ = writeln!(s, "  also tried {}: {}", word(&a.target), a.verdict);
    }
    let _ = writeln!(
        s,
        "Policy: {}; eps = {} ({} of the smallest action); gap G = {}",
        c.policy, c.parameters.epsilon, c.parameters.epsilon_factor, c.parameters.gap
    );
    let _ = writeln!(s, "\nGradings (rows: faces; first column: target):");
    let heads: Vec<String> = std::iter::once(target.clone())
        .chain(c.system.columns.iter().map(|w| word(w)))
        .collect();
    let width = heads
        .iter()
        .map(|h| h.chars().count())
        .chain(c.system.matrix.iter().flatten().map(|x| x.len()))
        .max()
        .unwrap_or(1)
        + 1;
    let fw = c.system.rows.iter().map(|r| r.chars().count()).max().unwrap_or(1) + 1;
    let _ = write!(s, "{:fw$}", "");
    for h in &heads {
        let _ = write!(s, "{h:>width$}");
    }
    s.push('\n');
    for (i, r) in c.system.rows.iter().enumerate() {
        let _ = write!(s, "{r:fw$}{:>width$}", c.system.rhs[i]);
        for x in &c.system.matrix[i] {
            let _ = write!(s, "{x:>width$}");
        }
        s.push('\n');
    }
    let _ = writeln!(s, "\nCandidates:");
    for (j, w) in c.candidates.iter().enumerate() {
        let e = c.eliminations.iter().find(|e| &e.candidate == w);
        let line = match e {
            Some(e) if e.conclusive => format!(
                "forced to 0 by face {}: coefficient {} > 0, target coefficient <= 0, no negative entries",
                e.face, e.coefficient
            ),
            Some(e) => format!(
                "positive coefficient {} on face {} where the target has none",
                e.coefficient, e.face
            ),
            None => "no single-face elimination".into(),
        };
        let _ = writeln!(
            s,
            "  {}: max {}; {line}",
            word(w),
            c.verdict.maxima.get(j).map_or("?", String::as_str)
        );
    }
    let _ = writeln!(s, "\nVerdict: {}", c.verdict.kind.replace('_', " "));
    if let Some(w) = &c.verdict.witness {
        let _ = writeln!(s, "Witness x = ({})", w.join(", "));
    }
    if let Some(o) = &c.oracle {
        let _ = writeln!(s, "Integer oracle (box {}): {} ({})", o.box_bound, o.kind, o.agreement);
    }
    let _ = writeln!(s, "\n{}", c.conclusion.statement);
    if c.conclusion.ch_vanishes {
        let _ = writeln!(s, "{}", c.surgery_note);
    }
    s
}
