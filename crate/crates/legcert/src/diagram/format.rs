//! Line-oriented diagram interchange format and its JSON mirror.
//!
//! ```text
//! crossing <id> ends=<e0,e1,e2,e3> over=<ea,ec> sign=<+1|-1> label=<name>
//! edge <id> from=<crossing>.<slot> to=<crossing>.<slot>
//! unbounded <edge>:<L|R>
//! facelabel <edge>:<L|R> <name>
//! ```
//!
//! `ends` lists the edge at slots 0..3 counterclockwise. `over` names the two
//! over ends, either by edge id or by slot index. `#` starts a comment.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{
    CrossingKind, DiagramError, Edge, EdgeKind, EdgeSide, End, LagrangianDiagram, RawCrossing, RawDiagram, Side,
};

/// JSON mirror of the text format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub crossings: Vec<CrossingJson>,
    pub edges: Vec<EdgeJson>,
    pub unbounded: String,
    #[serde(default)]
    pub facelabels: Vec<FaceLabelJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingJson {
    pub id: String,
    pub ends: Vec<String>,
    pub over: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub id: String,
    pub from: String,
    pub to: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceLabelJson {
    pub side: String,
    pub name: String,
}

fn perr(line: usize, msg: impl Into<String>) -> DiagramError {
    DiagramError::ParseError { line, msg: msg.into() }
}

/// Parses the text format into its JSON mirror (line numbers are kept for errors).
fn parse_text(text: &str) -> Result<(DiagramJson, HashMap<String, usize>), DiagramError> {
    let mut dj = DiagramJson {
        crossings: Vec::new(),
        edges: Vec::new(),
        unbounded: String::new(),
        facelabels: Vec::new(),
    };
    let mut lines = HashMap::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let kv = |key: &str| -> Option<&str> { toks.iter().find_map(|t| t.strip_prefix(key)) };
        match toks[0] {
            "crossing" => {
                let id = toks.get(1).ok_or_else(|| perr(ln, "crossing without id"))?.to_string();
                let ends: Vec<String> = kv("ends=")
                    .ok_or_else(|| perr(ln, "crossing without ends="))?
                    .split(',')
                    .map(str::to_string)
                    .collect();
                let over: Vec<String> = kv("over=")
                    .ok_or_else(|| perr(ln, "crossing without over="))?
                    .split(',')
                    .map(str::to_string)
                    .collect();
                let sign = match kv("sign=") {
                    None => None,
                    Some(s) => Some(match s {
                        "+1" | "1" | "+" => 1,
                        "-1" | "-" => -1,
                        _ => return Err(perr(ln, format!("bad sign {s:?}"))),
                    }),
                };
                let label = kv("label=").map(str::to_string);
                lines.insert(format!("c:{id}"), ln);
                dj.crossings.push(CrossingJson {
                    id,
                    ends,
                    over,
                    sign,
                    label,
                });
            }
            "edge" => {
                let id = toks.get(1).ok_or_else(|| perr(ln, "edge without id"))?.to_string();
                let from = kv("from=").ok_or_else(|| perr(ln, "edge without from="))?.to_string();
                let to = kv("to=").ok_or_else(|| perr(ln, "edge without to="))?.to_string();
                lines.insert(format!("e:{id}"), ln);
                dj.edges.push(EdgeJson { id, from, to });
            }
            "unbounded" => {
                if toks.len() != 2 {
                    return Err(perr(ln, "expected `unbounded <edge>:<L|R>`"));
                }
                dj.unbounded = toks[1].to_string();
            }
            "facelabel" => {
                if toks.len() != 3 {
                    return Err(perr(ln, "expected `facelabel <edge>:<L|R> <name>`"));
                }
                dj.facelabels.push(FaceLabelJson {
                    side: toks[1].to_string(),
                    name: toks[2].to_string(),
                });
            }
            other => return Err(perr(ln, format!("unknown directive {other:?}"))),
        }
    }
    Ok((dj, lines))
}

/// Loads a diagram from the text format.
pub fn load_diagram(text: &str) -> Result<LagrangianDiagram, DiagramError> {
    let (dj, lines) = parse_text(text)?;
    build(&dj, &lines)
}

/// Loads a diagram from the JSON mirror.
pub fn load_diagram_json(text: &str) -> Result<LagrangianDiagram, DiagramError> {
    let dj: DiagramJson = serde_json::from_str(text).map_err(|e| perr(e.line(), e.to_string()))?;
    build(&dj, &HashMap::new())
}

impl DiagramJson {
    pub fn to_diagram(&self) -> Result<LagrangianDiagram, DiagramError> {
        build(self, &HashMap::new())
    }
}

fn build(dj: &DiagramJson, lines: &HashMap<String, usize>) -> Result<LagrangianDiagram, DiagramError> {
    let line_of = |key: String| lines.get(&key).copied().unwrap_or(0);
    let mut cidx = HashMap::new();
    for (i, c) in dj.crossings.iter().enumerate() {
        if cidx.insert(c.id.clone(), i).is_some() {
            return Err(DiagramError::DuplicateLabel(c.id.clone()));
        }
    }
    let mut eidx = HashMap::new();
    for (i, e) in dj.edges.iter().enumerate() {
        if eidx.insert(e.id.clone(), i).is_some() {
            return Err(DiagramError::DuplicateLabel(e.id.clone()));
        }
    }
    let parse_end = |s: &str, ln: usize| -> Result<End, DiagramError> {
        let (c, k) = s
            .rsplit_once('.')
            .ok_or_else(|| perr(ln, format!("expected <crossing>.<slot>, got {s:?}")))?;
        let c = *cidx
            .get(c)
            .ok_or_else(|| DiagramError::UnknownCrossing(c.to_string()))?;
        let k: usize = k.parse().map_err(|_| perr(ln, format!("bad slot in {s:?}")))?;
        if k > 3 {
            return Err(perr(ln, format!("slot {k} out of range 0..3")));
        }
        Ok(End::new(c, k))
    };
    let mut edges = Vec::with_capacity(dj.edges.len());
    for e in &dj.edges {
        let ln = line_of(format!("e:{}", e.id));
        edges.push(Edge {
            id: e.id.clone(),
            tail: parse_end(&e.from, ln)?,
            head: parse_end(&e.to, ln)?,
            kind: EdgeKind::Generic,
        });
    }
    let mut crossings = Vec::with_capacity(dj.crossings.len());
    for (ci, c) in dj.crossings.iter().enumerate() {
        let ln = line_of(format!("c:{}", c.id));
        if c.ends.len() != 4 {
            return Err(DiagramError::Arity {
                crossing: c.id.clone(),
                detail: format!("{} ends listed, crossings must be 4-valent", c.ends.len()),
            });
        }
        for (k, name) in c.ends.iter().enumerate() {
            let e = *eidx.get(name).ok_or_else(|| DiagramError::UnknownEdge(name.clone()))?;
            let here = End::new(ci, k);
            if edges[e].tail != here && edges[e].head != here {
                return Err(perr(
                    ln,
                    format!("edge {name} is listed at slot {k} of {} but does not end there", c.id),
                ));
            }
        }
        if c.over.len() != 2 {
            return Err(perr(ln, "over= needs exactly two entries"));
        }
        let slot_of = |tok: &str| -> Result<usize, DiagramError> {
            if let Ok(k) = tok.parse::<usize>() {
                if k < 4 {
                    return Ok(k);
                }
            }
            let hits: Vec<usize> = (0..4).filter(|&k| c.ends[k] == tok).collect();
            match hits.as_slice() {
                [k] => Ok(*k),
                [] => Err(perr(ln, format!("over end {tok:?} is not incident to {}", c.id))),
                _ => Err(perr(ln, format!("over end {tok:?} is ambiguous; use slot indices"))),
            }
        };
        let (a, b) = (slot_of(&c.over[0])?, slot_of(&c.over[1])?);
        if (a + 2) % 4 != b {
            return Err(perr(ln, format!("over ends of {} must be opposite slots", c.id)));
        }
        crossings.push(RawCrossing {
            id: c.id.clone(),
            label: c.label.clone().unwrap_or_else(|| c.id.clone()),
            over_parity: a % 2,
            declared_sign: c.sign,
            kind: CrossingKind::Generic,
        });
    }
    let parse_side = |s: &str| -> Result<EdgeSide, DiagramError> {
        let (e, side) = s
            .rsplit_once(':')
            .ok_or_else(|| perr(0, format!("expected <edge>:<L|R>, got {s:?}")))?;
        let edge = *eidx.get(e).ok_or_else(|| DiagramError::UnknownEdge(e.to_string()))?;
        let side = match side {
            "L" | "l" => Side::Left,
            "R" | "r" => Side::Right,
            _ => return Err(perr(0, format!("edge side must be L or R, got {side:?}"))),
        };
        Ok(EdgeSide { edge, side })
    };
    let unbounded = if dj.unbounded.is_empty() {
        None
    } else {
        Some(parse_side(&dj.unbounded)?)
    };
    let face_labels = dj
        .facelabels
        .iter()
        .map(|f| Ok((parse_side(&f.side)?, f.name.clone())))
        .collect::<Result<Vec<_>, DiagramError>>()?;
    LagrangianDiagram::assemble(RawDiagram {
        crossings,
        edges,
        unbounded,
        unbounded_label: None,
        face_labels,
        braid: None,
    })
}

fn side_text(d: &LagrangianDiagram, s: EdgeSide) -> String {
    format!(
        "{}:{}",
        d.edges()[s.edge].id,
        if s.side == Side::Left { "L" } else { "R" }
    )
}

impl LagrangianDiagram {
    /// JSON mirror of this diagram (over ends given as slot indices).
    pub fn to_json_value(&self) -> DiagramJson {
        let crossings = self
            .crossings()
            .iter()
            .map(|c| CrossingJson {
                id: c.id.clone(),
                ends: c.slots.iter().map(|&e| self.edges()[e].id.clone()).collect(),
                over: vec![c.over_parity.to_string(), (c.over_parity + 2).to_string()],
                sign: Some(c.sign),
                label: Some(c.label.clone()),
            })
            .collect();
        let cid = |e: End| format!("{}.{}", self.crossings()[e.crossing].id, e.slot);
        let edges = self
            .edges()
            .iter()
            .map(|e| EdgeJson {
                id: e.id.clone(),
                from: cid(e.tail),
                to: cid(e.head),
            })
            .collect();
        let facelabels = self
            .faces()
            .iter()
            .map(|f| FaceLabelJson {
                side: side_text(self, f.sides[0]),
                name: f.label.clone(),
            })
            .collect();
        DiagramJson {
            crossings,
            edges,
            unbounded: side_text(self, self.faces()[self.unbounded_face()].sides[0]),
            facelabels,
        }
    }

    /// Text interchange form.
    pub fn to_text(&self) -> String {
        let dj = self.to_json_value();
        let mut out = String::new();
        for c in &dj.crossings {
            out.push_str(&format!(
                "crossing {} ends={} over={} sign={:+} label={}\n",
                c.id,
                c.ends.join(","),
                c.over.join(","),
                c.sign.unwrap_or(0),
                c.label.as_deref().unwrap_or(&c.id)
            ));
        }
        for e in &dj.edges {
            out.push_str(&format!("edge {} from={} to={}\n", e.id, e.from, e.to));
        }
        out.push_str(&format!("unbounded {}\n", dj.unbounded));
        for f in &dj.facelabels {
            out.push_str(&format!("facelabel {} {}\n", f.side, f.name));
        }
        out
    }
}
