//! Constraint mini-language over chord actions and face areas.
//!
//! ```text
//! area(B1) <= eps
//! act(a8) == act(a9)
//! act(a4) << act(a7)
//! 2*act(a8) + area(B6) < 1/2 act(a4)
//! ```
//! Relations: `<=`, `>=`, `==` (or `=`), strict `<`, `>`, and the gap relations
//! `<<`, `>>` meaning `G·lhs <= rhs`.

use std::fmt;

use crate::diagram::LagrangianDiagram;
use crate::rational::{Q, parse_q, q};

use super::ActionError;

/// Comparison in a parsed constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Lt,
    Eq,
    /// `G·lhs <= rhs`.
    Much,
}

/// An atom of a linear expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    Act(usize),
    Area(usize),
    Eps,
    One,
}

/// `Σ coef · atom`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Expr(pub Vec<(Q, Atom)>);

/// `lhs rel rhs`, normalized so that the relation reads left-to-right as "smaller".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub text: String,
    pub lhs: Expr,
    pub rel: Relation,
    pub rhs: Expr,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl Expr {
    pub fn mentions_variable(&self) -> bool {
        self.0
            .iter()
            .any(|(c, a)| matches!(a, Atom::Act(_) | Atom::Area(_)) && *c != q(0))
    }
}

/// Parses one constraint against the labels of `d`.
pub fn parse_constraint(d: &LagrangianDiagram, text: &str) -> Result<Constraint, ActionError> {
    let ops = ["<<", ">>", "<=", ">=", "==", "<", ">", "="];
    let (pos, op) = ops
        .iter()
        .filter_map(|op| text.find(op).map(|p| (p, *op)))
        .min_by_key(|(p, op)| (*p, usize::MAX - op.len()))
        .ok_or_else(|| ActionError::BadConstraint(text.into(), "no relation operator".into()))?;
    let (l, r) = (&text[..pos], &text[pos + op.len()..]);
    let lhs = parse_expr(d, l, text)?;
    let rhs = parse_expr(d, r, text)?;
    let (lhs, rel, rhs) = match op {
        "<=" => (lhs, Relation::Le, rhs),
        ">=" => (rhs, Relation::Le, lhs),
        "<" => (lhs, Relation::Lt, rhs),
        ">" => (rhs, Relation::Lt, lhs),
        "==" | "=" => (lhs, Relation::Eq, rhs),
        "<<" => (lhs, Relation::Much, rhs),
        ">>" => (rhs, Relation::Much, lhs),
        _ => unreachable!(),
    };
    if !lhs.mentions_variable() && !rhs.mentions_variable() {
        return Err(ActionError::UnboundedRequest(text.into()));
    }
    Ok(Constraint {
        text: text.trim().to_string(),
        lhs,
        rel,
        rhs,
    })
}

fn parse_expr(d: &LagrangianDiagram, s: &str, whole: &str) -> Result<Expr, ActionError> {
    let bad = |m: &str| ActionError::BadConstraint(whole.into(), m.into());
    let mut terms = Vec::new();
    let mut sign = q(1);
    let mut rest = s.trim();
    if rest.is_empty() {
        return Err(bad("empty side"));
    }
    loop {
        rest = rest.trim_start();
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r;
            continue;
        }
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
            continue;
        }
        // Term: optional coefficient, optional '*', optional atom.
        let coef_end = rest
            .find(|c: char| !(c.is_ascii_digit() || c == '/' || c == '.'))
            .unwrap_or(rest.len());
        let mut coef = q(1);
        let mut had_coef = false;
        if coef_end > 0 {
            coef = parse_q(&rest[..coef_end]).ok_or_else(|| bad("bad coefficient"))?;
            had_coef = true;
            rest = rest[coef_end..].trim_start();
            if let Some(r) = rest.strip_prefix('*') {
                rest = r.trim_start();
            }
        }
        let atom = if let Some(r) = rest.strip_prefix("act(") {
            let close = r.find(')').ok_or_else(|| bad("missing )"))?;
            let name = r[..close].trim();
            rest = &r[close + 1..];
            Atom::Act(
                d.crossing_by_label(name)
                    .ok_or_else(|| ActionError::UnknownName(name.into()))?,
            )
        } else if let Some(r) = rest.strip_prefix("area(") {
            let close = r.find(')').ok_or_else(|| bad("missing )"))?;
            let name = r[..close].trim();
            rest = &r[close + 1..];
            Atom::Area(
                d.face_by_label(name)
                    .ok_or_else(|| ActionError::UnknownName(name.into()))?,
            )
        } else if let Some(r) = rest.strip_prefix("eps") {
            rest = r;
            Atom::Eps
        } else if had_coef {
            Atom::One
        } else {
            return Err(bad("expected act(..), area(..), eps or a number"));
        };
        terms.push((&sign * &coef, atom));
        sign = q(1);
        rest = rest.trim_start();
        if rest.is_empty() {
            break;
        }
        if !rest.starts_with(['+', '-']) {
            return Err(bad("expected + or - between terms"));
        }
    }
    Ok(Expr(terms))
}
