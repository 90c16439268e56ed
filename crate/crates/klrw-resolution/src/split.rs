use klrw_core::path::Path;
use klrw_core::rewrite::evaluate;
use klrw_core::{NormalMorphism, Q};
use num_traits::One;

use crate::ambiguity::Ambiguity;
use crate::element::{ResolutionElement, Tensor};

fn tensor_at(path: &Path, pos: usize, n: usize) -> Option<Tensor> {
    let letters = path.letters();
    let gen = Ambiguity::from_letters(&letters[pos..pos + n])?;
    let left = evaluate(&letters[..pos], gen.target());
    let right = evaluate(&letters[pos + n..], path.source());
    Some(Tensor::new(left, gen, right))
}

/// Every factorization `u · r · v` of `path` with `r ∈ S_n`, as
/// `π(u) ⊗ r ⊗ π(v)`. Requires `n ≥ 1`.
pub fn split(n: usize, path: &Path) -> ResolutionElement {
    assert!(n >= 1, "splitting into S_0 is not defined");
    let mut out = ResolutionElement::zero(n);
    if path.len() < n {
        return out;
    }
    for pos in 0..=path.len() - n {
        if let Some(t) = tensor_at(path, pos, n) {
            out.add_term(t, Q::one());
        }
    }
    out
}

/// The factorization through the leftmost subword in `S_n`.
pub fn split_left(n: usize, path: &Path) -> Option<Tensor> {
    if path.len() < n {
        return None;
    }
    (0..=path.len() - n).find_map(|pos| tensor_at(path, pos, n))
}

/// The factorization through the rightmost subword in `S_n`.
pub fn split_right(n: usize, path: &Path) -> Option<Tensor> {
    if path.len() < n {
        return None;
    }
    (0..=path.len() - n).rev().find_map(|pos| tensor_at(path, pos, n))
}

/// `split_n` applied to the word of `x` followed by the word of `gen`.
pub fn split_product(n: usize, x: NormalMorphism, gen: &Ambiguity) -> ResolutionElement {
    let path = x
        .word()
        .concat(&gen.word())
        .expect("left factor composes with generator");
    split(n, &path)
}
