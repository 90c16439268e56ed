//! The differential rebuilt from the reduction system alone: the leading map
//! `δ`, the right-linear contraction `γ`, and the homotopy `ρ` obtained by
//! summing `γ ∘ ((δ - ∂)γ)^k` until the iterate vanishes.

use std::collections::HashMap;

use klrw_core::Q;
use num_traits::One;

use crate::ambiguity::Ambiguity;
use crate::boundary::boundary_with;
use crate::element::{ResolutionElement, Tensor};
use crate::error::ResolutionError;
use crate::split::{split, split_left, split_product, split_right};

/// `δ_n(1 ⊗ w ⊗ 1)` for `n ≥ 1`.
pub fn delta_generator(gen: &Ambiguity) -> ResolutionElement {
    let n = gen.len();
    assert!(n >= 1);
    if n == 1 {
        return crate::boundary::boundary_generator(gen);
    }
    let word = gen.word();
    if n % 2 == 0 {
        return split(n - 1, &word);
    }
    let mut out = ResolutionElement::zero(n - 1);
    let left = split_left(n - 1, &word).expect("chains contain shorter chains");
    let right = split_right(n - 1, &word).expect("chains contain shorter chains");
    out.add_term(left, Q::one());
    out.add_term(right, -Q::one());
    out
}

/// `δ` extended as a bimodule map.
pub fn delta(x: &ResolutionElement) -> Result<ResolutionElement, ResolutionError> {
    boundary_with(x, delta_generator)
}

/// `γ_m(x ⊗ w ⊗ y) = (-1)^{m+1} split_{m+1}(x w) · y`, a right-module map
/// `P_m -> P_{m+1}`.
pub fn gamma(x: &ResolutionElement) -> ResolutionElement {
    let m = x.degree();
    let sign = if m % 2 == 0 { -Q::one() } else { Q::one() };
    let mut out = ResolutionElement::zero(m + 1);
    for (t, c) in x.terms() {
        let piece = split_product(m + 1, t.left, &t.gen);
        for (u, v) in piece.terms() {
            if let Some(right) = klrw_core::compose(u.right, t.right) {
                out.add_term(Tensor { right, ..*u }, *v * *c * sign);
            }
        }
    }
    out
}

/// The recursively defined differential, memoized per generator.
#[derive(Debug, Default)]
pub struct RecursiveResolution {
    cache: HashMap<Ambiguity, ResolutionElement>,
}

impl RecursiveResolution {
    pub fn new() -> Self {
        Self::default()
    }

    /// `∂_n(1 ⊗ w ⊗ 1) = δ_n(1 ⊗ w ⊗ 1) - ρ_{n-2} ∂_{n-1} δ_n(1 ⊗ w ⊗ 1)`.
    pub fn boundary_generator(&mut self, gen: &Ambiguity) -> Result<ResolutionElement, ResolutionError> {
        if let Some(hit) = self.cache.get(gen) {
            return Ok(hit.clone());
        }
        let d = delta_generator(gen);
        let out = if gen.len() == 1 {
            d
        } else {
            let image = self.boundary(&d)?;
            let correction = self.rho(&image)?;
            let mut out = d;
            out -= &correction;
            out
        };
        self.cache.insert(*gen, out.clone());
        Ok(out)
    }

    pub fn boundary(&mut self, x: &ResolutionElement) -> Result<ResolutionElement, ResolutionError> {
        if x.degree() == 0 {
            return Err(ResolutionError::DegreeMismatch { expected: 1, found: 0 });
        }
        let mut out = ResolutionElement::zero(x.degree() - 1);
        for (t, c) in x.terms() {
            let image = self.boundary_generator(&t.gen)?.act(t.left, t.right).scale(*c);
            out += &image;
        }
        Ok(out)
    }

    /// `ρ_m(z) = Σ_k γ_m(T^k z)` with `T = (δ_{m+1} - ∂_{m+1}) γ_m`. Every step
    /// removes a dot from the top, so the series is cut off after
    /// `𝔮(z)/2 + 2` steps.
    pub fn rho(&mut self, z: &ResolutionElement) -> Result<ResolutionElement, ResolutionError> {
        let cap = z.max_qdeg() / 2 + 2;
        let mut acc = ResolutionElement::zero(z.degree() + 1);
        let mut cur = z.clone();
        for _ in 0..=cap {
            if cur.is_zero() {
                return Ok(acc);
            }
            let g = gamma(&cur);
            acc += &g;
            if g.is_zero() {
                return Ok(acc);
            }
            let mut next = delta(&g)?;
            next -= &self.boundary(&g)?;
            cur = next;
        }
        if cur.is_zero() {
            return Ok(acc);
        }
        Err(ResolutionError::SeriesDidNotTerminate {
            iterations: cap,
            input: z.to_string(),
        })
    }
}
