//! The monomial reduction system
//!
//! ```text
//! q_i p_{i+1} -> s_i      p_i q_{i-1} -> s_i
//! s_i p_i -> p_i s_{i-1}  s_i q_i -> q_i s_{i+1}
//! ```
//!
//! and everything derived from it: normal forms by rewriting, the reduction
//! preorder and the turning number.

use std::collections::{BTreeSet, HashSet};

use crate::morphism::{compose, NormalMorphism};
use crate::path::{Arrow, ArrowKind, Path};

/// Right-hand side of the rule whose left-hand side is `left right`, if any.
pub fn rule(left: Arrow, right: Arrow) -> Option<Vec<Arrow>> {
    use ArrowKind::*;
    match (left.kind, right.kind) {
        (Q, P) if right.index == left.index + 1 => Some(vec![Arrow::s(left.index)]),
        (P, Q) if left.index == right.index + 1 => Some(vec![Arrow::s(left.index)]),
        (S, P) if right.index == left.index => Some(vec![Arrow::p(left.index), Arrow::s(left.index - 1)]),
        (S, Q) if right.index == left.index => Some(vec![Arrow::q(left.index), Arrow::s(left.index + 1)]),
        _ => None,
    }
}

/// Whether the two-letter word is the left-hand side of a rule.
pub fn is_redex(left: Arrow, right: Arrow) -> bool {
    rule(left, right).is_some()
}

fn rewrite_at(letters: &[Arrow], pos: usize) -> Option<Vec<Arrow>> {
    let rhs = rule(letters[pos], letters[pos + 1])?;
    let mut out = Vec::with_capacity(letters.len() + 1);
    out.extend_from_slice(&letters[..pos]);
    out.extend(rhs);
    out.extend_from_slice(&letters[pos + 2..]);
    Some(out)
}

/// All words obtained from `letters` by one rewriting step.
pub fn successors(letters: &[Arrow]) -> Vec<Vec<Arrow>> {
    (0..letters.len().saturating_sub(1))
        .filter_map(|pos| rewrite_at(letters, pos))
        .collect()
}

pub fn is_irreducible(letters: &[Arrow]) -> bool {
    letters.windows(2).all(|w| !is_redex(w[0], w[1]))
}

/// Reads the basis morphism off an irreducible word.
fn read_normal(path: &Path) -> NormalMorphism {
    let dots = path.letters().iter().filter(|a| a.kind == ArrowKind::S).count();
    debug_assert!(path
        .letters()
        .iter()
        .skip_while(|a| a.kind != ArrowKind::S)
        .all(|a| a.kind == ArrowKind::S));
    NormalMorphism::new(path.target(), path.source(), dots)
}

/// Normal form of a path by leftmost rewriting.
pub fn reduce(path: &Path) -> NormalMorphism {
    let mut letters = path.letters().to_vec();
    'outer: loop {
        for pos in 0..letters.len().saturating_sub(1) {
            if let Some(next) = rewrite_at(&letters, pos) {
                letters = next;
                continue 'outer;
            }
        }
        break;
    }
    if letters.is_empty() {
        return NormalMorphism::idempotent(path.source());
    }
    read_normal(&Path::from_trusted(letters, path.source(), path.target()))
}

/// Normal form of a path by folding the closed-form product over its letters.
pub fn evaluate(letters: &[Arrow], source: usize) -> NormalMorphism {
    letters.iter().rev().fold(NormalMorphism::idempotent(source), |acc, a| {
        let m = match a.kind {
            ArrowKind::P => NormalMorphism::p(a.index),
            ArrowKind::Q => NormalMorphism::q(a.index),
            ArrowKind::S => NormalMorphism::s(a.index),
        };
        compose(m, acc).expect("letters of a path compose")
    })
}

/// Every word reachable from `letters` by rewriting, `letters` included.
pub fn reachable(letters: &[Arrow]) -> BTreeSet<Vec<Arrow>> {
    let mut seen: HashSet<Vec<Arrow>> = HashSet::new();
    let mut stack = vec![letters.to_vec()];
    seen.insert(letters.to_vec());
    while let Some(w) = stack.pop() {
        for next in successors(&w) {
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// The reduction preorder: `lower ⪯ upper` when `lower` is reachable from
/// `upper`. Rewriting preserves `𝔮`, so words of different degree are never
/// comparable.
pub fn precedes(lower: &[Arrow], upper: &[Arrow]) -> bool {
    let qd = |w: &[Arrow]| w.iter().map(Arrow::qdeg).sum::<usize>();
    if qd(lower) != qd(upper) {
        return false;
    }
    if lower == upper {
        return true;
    }
    let mut seen: HashSet<Vec<Arrow>> = HashSet::new();
    let mut stack = vec![upper.to_vec()];
    while let Some(w) = stack.pop() {
        for next in successors(&w) {
            if next.as_slice() == lower {
                return true;
            }
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    false
}

/// Number of direction reversals of the strand once the dot loops are
/// removed.
pub fn turning_number(path: &Path) -> usize {
    let mut moves = path
        .letters()
        .iter()
        .rev()
        .filter(|a| a.kind != ArrowKind::S)
        .map(|a| a.kind);
    let Some(mut last) = moves.next() else {
        return 0;
    };
    let mut turns = 0;
    for m in moves {
        if m != last {
            turns += 1;
        }
        last = m;
    }
    turns
}
