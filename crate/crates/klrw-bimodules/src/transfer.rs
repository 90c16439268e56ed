//! The comparison map `G: B_• -> P_•` from the normalized bar complex to the
//! resolution, lifting the identity on the algebra.

use std::collections::{BTreeSet, HashMap};

use klrw_core::path::Path;
use klrw_core::rewrite::reachable;
use klrw_core::{NormalMorphism, Q};
use klrw_resolution::{split, Ambiguity, RecursiveResolution, ResolutionElement, Tensor};
use num_traits::One;

use crate::bar::{bar_boundary, BarElement, BarTensor};
use crate::error::BimoduleError;

fn middle_word(middle: &[NormalMorphism]) -> Path {
    let mut it = middle.iter();
    let first = it.next().expect("non-empty middle").word();
    it.fold(first, |acc, m| acc.concat(&m.word()).expect("bar entries compose"))
}

/// `G_n(1 ⊗ [y_n|...|y_1] ⊗ 1)`: every distinct factorization `u ⊗ r ⊗ v`,
/// `r ∈ S_n`, of every word reachable from `y_n ⋯ y_1`, each with
/// coefficient one. Zero when an entry is an idempotent, as in the
/// normalized complex.
pub fn transfer_unit(middle: &[NormalMorphism]) -> ResolutionElement {
    let n = middle.len();
    if n == 0 || middle.iter().any(NormalMorphism::is_idempotent) {
        return ResolutionElement::zero(0);
    }
    let word = middle_word(middle);
    let source = word.source();
    let mut seen = BTreeSet::new();
    for letters in reachable(word.letters()) {
        let path = Path::new(letters).expect("rewrites preserve composability");
        debug_assert_eq!(path.source(), source);
        for (t, _) in split(n, &path).terms() {
            seen.insert(*t);
        }
    }
    let mut out = ResolutionElement::zero(n);
    for t in seen {
        out.add_term(t, Q::one());
    }
    out
}

/// `G_n` on a single bar tensor.
pub fn transfer_tensor(t: &BarTensor) -> ResolutionElement {
    if t.middle.is_empty() {
        let v = t.left.source;
        return ResolutionElement::from_tensor(Tensor::new(t.left, Ambiguity::Vertex(v), t.right), Q::one());
    }
    transfer_unit(&t.middle).act(t.left, t.right)
}

/// `G_n` extended bilinearly.
pub fn transfer(x: &BarElement) -> ResolutionElement {
    let mut out = ResolutionElement::zero(x.degree());
    for (t, c) in x.terms() {
        out += &transfer_tensor(t).scale(*c);
    }
    out
}

/// `G` computed from its defining recursion
/// `G_n(a ⊗ y ⊗ b) = a · ρ_{n-1} G_{n-1} ∂̄_n(1 ⊗ y ⊗ b)`, with `G_0` the
/// identity onto `P_0`.
#[derive(Debug, Default)]
pub struct RecursiveTransfer {
    resolution: RecursiveResolution,
    cache: HashMap<Vec<NormalMorphism>, ResolutionElement>,
}

impl RecursiveTransfer {
    pub fn new() -> Self {
        Self::default()
    }

    /// `G_n(1 ⊗ y ⊗ 1)`.
    pub fn unit(&mut self, middle: &[NormalMorphism]) -> Result<ResolutionElement, BimoduleError> {
        if let Some(hit) = self.cache.get(middle) {
            return Ok(hit.clone());
        }
        let t = BarTensor::unit(middle.to_vec())?;
        let d = bar_boundary(&BarElement::from_tensor(t, Q::one()))?;
        let lower = self.apply(&d)?;
        let out = self.resolution.rho(&lower)?;
        self.cache.insert(middle.to_vec(), out.clone());
        Ok(out)
    }

    pub fn apply_tensor(&mut self, t: &BarTensor) -> Result<ResolutionElement, BimoduleError> {
        if t.middle.is_empty() {
            let v = t.left.source;
            return Ok(ResolutionElement::from_tensor(
                Tensor::new(t.left, Ambiguity::Vertex(v), t.right),
                Q::one(),
            ));
        }
        Ok(self.unit(&t.middle)?.act(t.left, t.right))
    }

    pub fn apply(&mut self, x: &BarElement) -> Result<ResolutionElement, BimoduleError> {
        let mut out = ResolutionElement::zero(x.degree());
        for (t, c) in x.terms() {
            out += &self.apply_tensor(t)?.scale(*c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use klrw_resolution::Family;

    #[test]
    fn degree_one_is_split() {
        let y = NormalMorphism::new(2, 0, 1);
        let got = transfer_unit(&[y]);
        let w = y.word();
        assert_eq!(got, split(1, &w));
    }

    #[test]
    fn degree_two_on_a_crossing_pair() {
        let got = transfer_unit(&[NormalMorphism::q(1), NormalMorphism::p(2)]);
        let gen = Ambiguity::chain(Family::Q, false, 1, 2);
        assert_eq!(got, ResolutionElement::generator(gen));
    }

    #[test]
    fn recursion_agrees_on_small_inputs() {
        let mut rec = RecursiveTransfer::new();
        let cases = [
            vec![NormalMorphism::new(2, 0, 0)],
            vec![NormalMorphism::q(1), NormalMorphism::p(2)],
            vec![NormalMorphism::new(1, 3, 1), NormalMorphism::new(3, 1, 0)],
        ];
        for middle in cases {
            assert_eq!(rec.unit(&middle).unwrap(), transfer_unit(&middle), "{middle:?}");
        }
    }
}
