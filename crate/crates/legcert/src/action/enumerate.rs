//! Action-bounded enumeration of cyclic chord words.

use num_traits::{Signed, Zero};

use crate::rational::{Q, q};

use super::{ActionError, AreaAssignment};

/// Total action of a word.
pub fn word_action(a: &AreaAssignment, w: &[usize]) -> Q {
    w.iter().map(|&c| &a.actions[c]).sum()
}

/// Lexicographically minimal rotation.
pub fn canonical_rotation(w: &[usize]) -> Vec<usize> {
    (0..w.len().max(1))
        .map(|k| {
            w[k.min(w.len())..]
                .iter()
                .chain(&w[..k.min(w.len())])
                .copied()
                .collect::<Vec<_>>()
        })
        .min()
        .unwrap_or_default()
}

fn slack(a: &AreaAssignment, target: &[usize], eps: &Q) -> Q {
    word_action(a, target) + eps * q(3 * target.len() as i64)
}

/// Length beyond which no word can meet the bound, or `None` when some chord
/// has action at most `3·eps` (the bound then admits arbitrarily long words).
pub fn complete_length_bound(a: &AreaAssignment, target: &[usize], eps: &Q) -> Option<usize> {
    let step = a.actions.iter().min()? - eps * q(3);
    if !step.is_positive() {
        return None;
    }
    let n = (slack(a, target, eps) / step).floor();
    Some(n.to_integer().try_into().unwrap_or(usize::MAX))
}

/// Every cyclic word `w != target` of length `1..=max_len` with
/// `A(w) < A(target) + 3·eps·(len(w) + len(target))`, canonical rotations,
/// sorted by (length, letters).
pub fn enumerate_candidates(
    a: &AreaAssignment,
    target: &[usize],
    eps: &Q,
    max_len: usize,
    budget: u64,
) -> Result<Vec<Vec<usize>>, ActionError> {
    if !eps.is_positive() {
        return Err(ActionError::BadParameter);
    }
    let bound = slack(a, target, eps);
    let steps: Vec<Q> = a.actions.iter().map(|x| x - eps * q(3)).collect();
    let min_step = steps.iter().min().cloned().unwrap_or_else(Q::zero).min(Q::zero());
    let tcanon = canonical_rotation(target);
    let mut out = Vec::new();
    let mut nodes = 0u64;
    let mut word = Vec::new();
    dfs(
        &steps,
        &min_step,
        &bound,
        max_len,
        &tcanon,
        &mut word,
        Q::zero(),
        &mut nodes,
        budget,
        &mut out,
    )?;
    out.sort_by(|x: &Vec<usize>, y| (x.len(), x).cmp(&(y.len(), y)));
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    steps: &[Q],
    min_step: &Q,
    bound: &Q,
    max_len: usize,
    target: &[usize],
    word: &mut Vec<usize>,
    s: Q,
    nodes: &mut u64,
    budget: u64,
    out: &mut Vec<Vec<usize>>,
) -> Result<(), ActionError> {
    if word.len() == max_len {
        return Ok(());
    }
    for (c, st) in steps.iter().enumerate() {
        *nodes += 1;
        if *nodes > budget {
            return Err(ActionError::BudgetExceeded(budget));
        }
        let s2 = &s + st;
        let remaining = (max_len - word.len() - 1) as i64;
        // Best value reachable by any extension of this prefix.
        if &s2 + min_step * q(remaining) >= *bound {
            continue;
        }
        word.push(c);
        if s2 < *bound
            && word[0] == *word.iter().min().unwrap()
            && canonical_rotation(word) == *word
            && word.as_slice() != target
        {
            out.push(word.clone());
        }
        dfs(steps, min_step, bound, max_len, target, word, s2, nodes, budget, out)?;
        word.pop();
    }
    Ok(())
}
