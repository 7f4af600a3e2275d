//! Certification over braid families with a content-addressed on-disk cache.

use std::fs;
use std::path::Path;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use super::certificate::Certificate;
use super::{Config, Input, certify};
use crate::braid::{BraidError, BraidWord};

/// An enumerable family of positive braids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// (p,q) torus knots with p, q coprime and 2 <= p < q, p <= pmax, q <= qmax.
    Torus { pmax: usize, qmax: usize },
    /// (σ1⋯σ_{p-1})^q (σ2⋯σ_{p-1})^r over the listed p, q, r.
    Twisted {
        ps: Vec<usize>,
        qs: Vec<usize>,
        rs: Vec<usize>,
    },
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

impl Family {
    pub fn members(&self) -> Vec<(String, Result<BraidWord, BraidError>)> {
        match self {
            Family::Torus { pmax, qmax } => (2..=*pmax)
                .flat_map(|p| (p + 1..=*qmax).filter(move |&q| gcd(p, q) == 1).map(move |q| (p, q)))
                .map(|(p, q)| (format!("torus({p},{q})"), BraidWord::torus(p, q)))
                .collect(),
            Family::Twisted { ps, qs, rs } => {
                let mut out = Vec::new();
                for &p in ps {
                    for &q in qs {
                        for &r in rs {
                            out.push((
                                format!("twisted({p},{q},{r})"),
                                BraidWord::twisted(p, &[(p, q), (p - 1, r)]),
                            ));
                        }
                    }
                }
                out
            }
        }
    }
}

#[derive(Debug, Clone)]
pub enum BatchOutcome {
    Certificate(Box<Certificate>),
    Error(String),
}

#[derive(Debug, Clone)]
pub struct BatchItem {
    pub name: String,
    pub outcome: BatchOutcome,
    pub cached: bool,
}

fn cache_key(input: &Input, config: &Config) -> String {
    let echo = serde_json::to_string(&input.echo).expect("echo serializes");
    hex::encode(Sha256::digest(format!("{echo}\n{}", config.canonical()).as_bytes()))
}

fn run_one(b: BraidWord, config: &Config, cache: Option<&Path>) -> (BatchOutcome, bool) {
    let input = match Input::from_braid(b) {
        Ok(i) => i,
        Err(e) => return (BatchOutcome::Error(e.to_string()), false),
    };
    let path = cache.map(|dir| dir.join(format!("{}.json", cache_key(&input, config))));
    if let Some(p) = &path {
        if let Some(c) = fs::read_to_string(p).ok().and_then(|t| Certificate::from_json(&t).ok()) {
            return (BatchOutcome::Certificate(Box::new(c)), true);
        }
    }
    match certify(&input, config) {
        Ok(c) => {
            if let Some(p) = &path {
                let tmp = p.with_extension(format!("json.tmp{}", std::process::id()));
                if fs::write(&tmp, c.to_json()).is_ok() {
                    let _ = fs::rename(&tmp, p);
                }
            }
            (BatchOutcome::Certificate(Box::new(c)), false)
        }
        Err(e) => (BatchOutcome::Error(e.to_string()), false),
    }
}

/// Certifies every member in parallel; per-member failures are recorded, not fatal.
pub fn batch(family: &Family, config: &Config, cache: Option<&Path>) -> Vec<BatchItem> {
    if let Some(dir) = cache {
        let _ = fs::create_dir_all(dir);
    }
    family
        .members()
        .into_par_iter()
        .map(|(name, b)| {
            let (outcome, cached) = match b {
                Ok(b) => run_one(b, config, cache),
                Err(e) => (BatchOutcome::Error(e.to_string()), false),
            };
            BatchItem { name, outcome, cached }
        })
        .collect()
}

/// One line per member.
pub fn summary_table(items: &[BatchItem]) -> String {
    let mut s = format!(
        "{:<20} {:>4} {:>8} {:>13} {:>11} {:>6} {:>5}\n",
        "member", "tb", "target", "verdict", "ch_vanishes", "tight", "cands"
    );
    for it in items {
        match &it.outcome {
            BatchOutcome::Certificate(c) => s.push_str(&format!(
                "{:<20} {:>4} {:>8} {:>13} {:>11} {:>6} {:>5}\n",
                it.name,
                c.invariants.tb,
                c.target.word.join(" "),
                c.verdict.kind,
                c.conclusion.ch_vanishes,
                c.conclusion.tight,
                c.candidates.len()
            )),
            BatchOutcome::Error(e) => s.push_str(&format!("{:<20} error: {e}\n", it.name)),
        }
    }
    s
}
