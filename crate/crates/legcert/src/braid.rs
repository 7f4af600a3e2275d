//! Positive braid words, closure components and classical invariants.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised while validating or parsing a braid word.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("letter {position} is {value}; only positive generators are accepted")]
    NonPositiveGenerator { position: usize, value: i64 },
    #[error("letter {position} is {value}; generators must lie in 1..={max}")]
    GeneratorOutOfRange { position: usize, value: i64, max: i64 },
    #[error("strand count must be at least 1, got {0}")]
    InvalidStrandCount(i64),
    #[error("empty word is only allowed on one strand")]
    EmptyWord,
    #[error("closure is not a knot: {components} components")]
    NotAKnot { components: usize },
    #[error("w - p + 1 = {0} is odd, so the closure cannot be a knot")]
    OddParityViolation(i64),
    #[error("cannot parse braid: {0}")]
    Parse(String),
}

/// A positive braid word on `strands` strands; letters are 1-based generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    pub strands: usize,
    #[serde(rename = "word")]
    pub letters: Vec<usize>,
}

/// Classical invariants of the rainbow closure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotInvariants {
    pub tb: i64,
    pub seifert_genus: u64,
    pub slice_genus_equal: bool,
    pub tight_certified: bool,
}

/// Cycles of the permutation induced by `letters` on `p` strands (0-based strand labels).
pub fn permutation_cycles(letters: &[usize], p: usize) -> Vec<Vec<usize>> {
    // perm[s] = position reached by the strand starting at position s.
    let mut at: Vec<usize> = (0..p).collect();
    for &i in letters {
        at.swap(i - 1, i);
    }
    let mut perm = vec![0; p];
    for (pos, &s) in at.iter().enumerate() {
        perm[s] = pos;
    }
    let mut seen = vec![false; p];
    let mut cycles = Vec::new();
    for s in 0..p {
        if seen[s] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            cyc.push(x);
            x = perm[x];
        }
        cycles.push(cyc);
    }
    cycles
}

/// Validates a positive braid word whose closure must be a knot.
pub fn validate_braid(letters: &[i64], p: i64) -> Result<BraidWord, BraidError> {
    if p < 1 {
        return Err(BraidError::InvalidStrandCount(p));
    }
    for (position, &value) in letters.iter().enumerate() {
        if value <= 0 {
            return Err(BraidError::NonPositiveGenerator { position, value });
        }
        if value > p - 1 {
            return Err(BraidError::GeneratorOutOfRange {
                position,
                value,
                max: p - 1,
            });
        }
    }
    if letters.is_empty() && p != 1 {
        return Err(BraidError::EmptyWord);
    }
    let letters: Vec<usize> = letters.iter().map(|&v| v as usize).collect();
    let components = permutation_cycles(&letters, p as usize).len();
    if components != 1 {
        return Err(BraidError::NotAKnot { components });
    }
    Ok(BraidWord {
        strands: p as usize,
        letters,
    })
}

impl BraidWord {
    /// The (p,q) torus braid (σ1⋯σ_{p-1})^q.
    pub fn torus(p: usize, q: usize) -> Result<Self, BraidError> {
        Self::twisted(p, &[(p, q)])
    }

    /// Concatenation of blocks (σ_{p-p_i+1}⋯σ_{p-1})^{q_i}.
    pub fn twisted(p: usize, blocks: &[(usize, usize)]) -> Result<Self, BraidError> {
        let mut letters = Vec::new();
        for &(pi, qi) in blocks {
            if pi < 2 || pi > p {
                return Err(BraidError::Parse(format!("block width {pi} outside 2..={p}")));
            }
            for _ in 0..qi {
                letters.extend((p - pi + 1..p).map(|i| i as i64));
            }
        }
        validate_braid(&letters, p as i64)
    }

    /// Number of letters w.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Cycles of the induced permutation.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        permutation_cycles(&self.letters, self.strands)
    }

    /// Parses `"p=4 word=1,2,3"`, `"p=2;1,1,1"` or the JSON object form.
    pub fn parse(text: &str) -> Result<Self, BraidError> {
        let t = text.trim();
        if t.starts_with('{') {
            let raw: RawBraid = serde_json::from_str(t).map_err(|e| BraidError::Parse(e.to_string()))?;
            return validate_braid(&raw.word, raw.strands);
        }
        let mut p = None;
        let mut word = None;
        for tok in t
            .split(|c: char| c == ';' || c.is_whitespace())
            .filter(|s| !s.is_empty())
        {
            if let Some(v) = tok.strip_prefix("p=") {
                p = Some(v.parse::<i64>().map_err(|e| BraidError::Parse(format!("p: {e}")))?);
            } else {
                let v = tok.strip_prefix("word=").unwrap_or(tok);
                word = Some(parse_letters(v)?);
            }
        }
        let p = p.ok_or_else(|| BraidError::Parse("missing p=".into()))?;
        validate_braid(&word.unwrap_or_default(), p)
    }

    /// Text form `p=<n> word=<letters>`.
    pub fn to_text(&self) -> String {
        let w: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        format!("p={} word={}", self.strands, w.join(","))
    }
}

#[derive(Deserialize)]
struct RawBraid {
    strands: i64,
    word: Vec<i64>,
}

fn parse_letters(s: &str) -> Result<Vec<i64>, BraidError> {
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|e| BraidError::Parse(format!("letter {x:?}: {e}")))
        })
        .collect()
}

/// tb of the rainbow closure: w - p.
pub fn thurston_bennequin(b: &BraidWord) -> i64 {
    b.letters.len() as i64 - b.strands as i64
}

/// Seifert genus from χ = p - w, slice genus equality and the tb ≠ -1 tightness criterion.
pub fn tightness_report(b: &BraidWord) -> Result<KnotInvariants, BraidError> {
    let tb = thurston_bennequin(b);
    let twice_genus = tb + 1;
    if twice_genus.rem_euclid(2) != 0 {
        return Err(BraidError::OddParityViolation(twice_genus));
    }
    Ok(KnotInvariants {
        tb,
        seifert_genus: (twice_genus / 2) as u64,
        slice_genus_equal: true,
        tight_certified: tb != -1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_and_link() {
        let t = validate_braid(&[1, 1, 1], 2).unwrap();
        assert_eq!(thurston_bennequin(&t), 1);
        assert_eq!(validate_braid(&[1, 1], 2), Err(BraidError::NotAKnot { components: 2 }));
    }

    #[test]
    fn rejects_bad_letters() {
        assert!(matches!(
            validate_braid(&[1, -1, 1], 2),
            Err(BraidError::NonPositiveGenerator { .. })
        ));
        assert!(matches!(
            validate_braid(&[1, 2], 2),
            Err(BraidError::GeneratorOutOfRange { .. })
        ));
        assert!(matches!(validate_braid(&[], 2), Err(BraidError::EmptyWord)));
    }

    #[test]
    fn parse_forms() {
        let a = BraidWord::parse("p=2;1,1,1").unwrap();
        let b = BraidWord::parse("p=2 word=1,1,1").unwrap();
        let c = BraidWord::parse(r#"{"strands": 2, "word": [1,1,1]}"#).unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(BraidWord::parse(&a.to_text()).unwrap(), a);
        assert_eq!(BraidWord::parse("p=1 word=").unwrap().letters.len(), 0);
    }

    #[test]
    fn unknot_not_tight() {
        let u = validate_braid(&[], 1).unwrap();
        let inv = tightness_report(&u).unwrap();
        assert_eq!(inv.tb, -1);
        assert!(!inv.tight_certified);
    }
}
