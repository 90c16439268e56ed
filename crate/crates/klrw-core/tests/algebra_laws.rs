use std::collections::{BTreeSet, HashMap};

use klrw_core::path::{Arrow, Path};
use klrw_core::rewrite::{evaluate, is_irreducible, reduce, successors, turning_number};
use klrw_core::{compose, NormalMorphism, QuiverConfig};
use proptest::prelude::*;

/// All composable words with at most `max_len` letters.
fn words(cfg: &QuiverConfig, max_len: usize) -> Vec<Vec<Arrow>> {
    let arrows = Arrow::all(cfg);
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<Arrow>> = arrows.iter().map(|a| vec![*a]).collect();
    for _ in 1..=max_len {
        out.extend(frontier.iter().cloned());
        let mut next = Vec::new();
        for w in &frontier {
            let top = w[0].target();
            for a in arrows.iter().filter(|a| a.source() == top) {
                let mut v = Vec::with_capacity(w.len() + 1);
                v.push(*a);
                v.extend_from_slice(w);
                next.push(v);
            }
        }
        frontier = next;
    }
    out
}

fn normal_forms(w: &[Arrow], memo: &mut HashMap<Vec<Arrow>, BTreeSet<NormalMorphism>>) -> BTreeSet<NormalMorphism> {
    if let Some(s) = memo.get(w) {
        return s.clone();
    }
    let succ = successors(w);
    let out = if succ.is_empty() {
        let path = Path::new(w.to_vec()).unwrap();
        BTreeSet::from([reduce(&path)])
    } else {
        succ.iter().flat_map(|v| normal_forms(v, memo)).collect()
    };
    memo.insert(w.to_vec(), out.clone());
    out
}

#[test]
fn every_reduction_order_agrees_up_to_length_8() {
    for n in 1..=4 {
        let cfg = QuiverConfig::new(n).unwrap();
        let mut memo = HashMap::new();
        for w in words(&cfg, 8) {
            let source = w.last().unwrap().source();
            let nfs = normal_forms(&w, &mut memo);
            assert_eq!(nfs.len(), 1, "word {w:?} has several normal forms");
            let nf = *nfs.iter().next().unwrap();
            assert_eq!(nf, evaluate(&w, source));
            let path = Path::new(w.clone()).unwrap();
            assert_eq!(nf.qdeg(), path.qdeg());
            assert_eq!((nf.source, nf.target), (path.source(), path.target()));
        }
    }
}

#[test]
fn rewriting_steps_never_increase_turning() {
    let cfg = QuiverConfig::new(3).unwrap();
    for w in words(&cfg, 7) {
        let path = Path::new(w.clone()).unwrap();
        let t = turning_number(&path);
        for v in successors(&w) {
            let next = Path::new(v).unwrap();
            assert!(turning_number(&next) <= t);
        }
        if is_irreducible(&w) {
            assert_eq!(t, 0);
        }
    }
}

#[test]
fn closed_product_matches_rewriting() {
    for n in 1..=5 {
        let cfg = QuiverConfig::new(n).unwrap();
        let basis = NormalMorphism::all(&cfg, 3);
        for a2 in &basis {
            for a1 in basis.iter().filter(|a1| a1.target == a2.source) {
                let word = a2.word().concat(&a1.word()).unwrap();
                let by_rules = reduce(&word);
                let closed = compose(*a2, *a1).unwrap();
                assert_eq!(closed, by_rules, "{a2} ∘ {a1}");
                assert_eq!(closed.qdeg(), a2.qdeg() + a1.qdeg());
            }
        }
    }
}

#[test]
fn product_is_associative() {
    for n in 1..=5 {
        let cfg = QuiverConfig::new(n).unwrap();
        let basis = NormalMorphism::all(&cfg, 3);
        for c in &basis {
            for b in basis.iter().filter(|b| b.source == c.target) {
                let bc = compose(*b, *c).unwrap();
                for a in basis.iter().filter(|a| a.source == b.target) {
                    let left = compose(compose(*a, *b).unwrap(), *c);
                    let right = compose(*a, bc);
                    assert_eq!(left, right);
                }
            }
        }
    }
}

fn arb_path(max_n: usize, max_len: usize) -> impl Strategy<Value = (usize, Path)> {
    (1..=max_n, 0..=max_n, prop::collection::vec(0usize..64, 1..=max_len)).prop_map(|(n, start, choices)| {
        let cfg = QuiverConfig::new(n).unwrap();
        let mut at = start.min(n);
        let mut letters = Vec::new();
        for c in choices {
            let out = Arrow::leaving(&cfg, at);
            let a = out[c % out.len()];
            letters.insert(0, a);
            at = a.target();
        }
        (n, Path::new(letters).unwrap())
    })
}

proptest! {
    #[test]
    fn reduction_invariants((_n, path) in arb_path(6, 14)) {
        let nf = reduce(&path);
        prop_assert_eq!(nf.qdeg(), path.qdeg());
        prop_assert_eq!(nf, evaluate(path.letters(), path.source()));
        prop_assert_eq!(turning_number(&nf.word()), 0);
        prop_assert!(turning_number(&nf.word()) <= turning_number(&path));
        prop_assert_eq!(reduce(&nf.word()), nf);
    }

    #[test]
    fn concatenation_multiplies((_n, p1) in arb_path(5, 6), seed in 0usize..1000) {
        let cfg = QuiverConfig::new(_n).unwrap();
        let mut at = p1.target();
        let mut letters = Vec::new();
        for k in 0..(seed % 6) + 1 {
            let out = Arrow::leaving(&cfg, at);
            let a = out[(seed / (k + 1)) % out.len()];
            letters.insert(0, a);
            at = a.target();
        }
        let p2 = Path::new(letters).unwrap();
        let whole = p2.concat(&p1).unwrap();
        prop_assert_eq!(reduce(&whole), compose(reduce(&p2), reduce(&p1)).unwrap());
    }
}
