//! Components `η^d` of the classified natural transformations and the
//! residual of the cocycle equation.

use klrw_braiding::{mu_delta1, mu_delta2, NegativeBraiding, TwComplex, TwMorphism, CENTER, LEFT, RIGHT};
use klrw_core::{compose, q, qf, sgn, AlgebraElement, NormalMorphism, QuiverConfig, Q};
use num_traits::Zero;

use crate::coefficients::{coeff_c, coeff_qq};
use crate::error::NatError;
use crate::params::{NatParams, Target};

/// A component value. Targets `id` give plain algebra elements, braiding
/// targets give morphisms into twisted complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NatValue {
    Algebra { arity: usize, value: AlgebraElement },
    Twisted { arity: usize, value: TwMorphism },
}

impl NatValue {
    pub fn arity(&self) -> usize {
        match self {
            NatValue::Algebra { arity, .. } | NatValue::Twisted { arity, .. } => *arity,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            NatValue::Algebra { value, .. } => value.is_zero(),
            NatValue::Twisted { value, .. } => value.is_zero(),
        }
    }
}

impl std::fmt::Display for NatValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NatValue::Algebra { value, .. } => write!(f, "{value}"),
            NatValue::Twisted { value, .. } => write!(f, "{value}"),
        }
    }
}

fn term(target: usize, source: usize, dots: usize, c: Q) -> AlgebraElement {
    AlgebraElement::term(NormalMorphism::new(target, source, dots), c)
}

fn parity(n: i64) -> Q {
    if n.rem_euclid(2) == 0 {
        q(1)
    } else {
        q(-1)
    }
}

/// A natural transformation `id ⇒ G` with `G` the identity or a negative
/// braiding, fixed by validated parameters.
#[derive(Clone, Debug)]
pub struct NatTransformation {
    params: NatParams,
    braiding: Option<NegativeBraiding>,
}

impl NatTransformation {
    pub fn new(cfg: &QuiverConfig, params: NatParams) -> Result<Self, NatError> {
        params.validate(cfg)?;
        let braiding = match params.target {
            Target::Identity => None,
            Target::Beta(i) => Some(NegativeBraiding::new(cfg, i)?),
        };
        Ok(Self { params, braiding })
    }

    pub fn params(&self) -> &NatParams {
        &self.params
    }

    /// `G(T_j)`.
    pub fn object(&self, j: usize) -> TwComplex {
        match self.braiding {
            Some(b) => b.object(j),
            None => TwComplex::single(j),
        }
    }

    /// `G^s` on `[a_s, ..., a_1]`.
    pub fn functor(&self, chain: &[NormalMorphism]) -> Result<TwMorphism, NatError> {
        let (Some(first), Some(last)) = (chain.first(), chain.last()) else {
            return Err(NatError::ChainLength(0));
        };
        check_composable(chain)?;
        let zero = || {
            TwMorphism::zero(
                self.object(last.source),
                self.object(first.target),
                1 - chain.len() as i64,
            )
        };
        match (self.braiding, chain) {
            (Some(b), [a]) => Ok(b.beta1(*a)),
            (Some(b), [a2, a1]) => Ok(b.beta2(*a2, *a1)?),
            (None, [a]) => {
                let mut f = zero();
                f.add_block(0, 0, &AlgebraElement::basis(*a))?;
                Ok(f)
            }
            _ => Ok(zero()),
        }
    }

    /// `η^d(a_d, ..., a_1)` as a morphism from `T_source` to `G(T_target)`
    /// of degree `g - d`. The chain is listed `[a_d, ..., a_1]` and must start
    /// at `source`; an empty chain asks for `η⁰(T_source)`.
    pub fn component(&self, source: usize, chain: &[NormalMorphism]) -> Result<TwMorphism, NatError> {
        check_chain(source, chain)?;
        let target = chain.first().map_or(source, |a| a.target);
        let g = self.params.degree as i64;
        let mut f = TwMorphism::zero(TwComplex::single(source), self.object(target), g - chain.len() as i64);
        match self.params.target {
            Target::Identity => self.fill_identity(&mut f, source, chain)?,
            Target::Beta(i) => self.fill_beta(&mut f, i, source, chain)?,
        }
        Ok(f)
    }

    /// [`Self::component`] wrapped by target type.
    pub fn eta(&self, source: usize, chain: &[NormalMorphism]) -> Result<NatValue, NatError> {
        let value = self.component(source, chain)?;
        let arity = chain.len();
        Ok(match self.params.target {
            Target::Identity => NatValue::Algebra {
                arity,
                value: value.block(0, 0),
            },
            Target::Beta(_) => NatValue::Twisted { arity, value },
        })
    }

    fn fill_identity(&self, f: &mut TwMorphism, source: usize, chain: &[NormalMorphism]) -> Result<(), NatError> {
        let p = &self.params;
        match (p.degree, chain) {
            (0, []) => {
                for (&ell, &c) in &p.epsilon {
                    f.add_block(0, 0, &term(source, source, ell, c))?;
                }
            }
            (1, [a]) => {
                let w = q(a.qdeg() as i64) * qf(1, 2);
                for (&ell, &c) in &p.sigma {
                    f.add_block(0, 0, &term(a.target, a.source, a.dots + ell, w * c))?;
                }
            }
            (2, [a2, a1]) => {
                let c = coeff_c(*a2, *a1, &p.theta)?;
                if !c.is_zero() {
                    let prod = compose(*a2, *a1).ok_or(NatError::NotComposable)?;
                    f.add_block(0, 0, &term(prod.target, prod.source, prod.dots - 1, c))?;
                }
            }
            _ => {}
        }
        Ok(())
    }

    fn fill_beta(&self, f: &mut TwMorphism, i: usize, source: usize, chain: &[NormalMorphism]) -> Result<(), NatError> {
        let p = &self.params;
        let half = qf(1, 2);
        // Side slot of the cone pointing towards object `j`.
        let side = |j: usize| if j > i { (RIGHT, i + 1) } else { (LEFT, i - 1) };
        match (p.degree, chain) {
            (0, []) => {
                for (&ell, &c) in p.epsilon.iter().filter(|(ell, _)| **ell > 0) {
                    if source != i {
                        f.add_block(0, 0, &term(source, source, ell, c))?;
                    } else {
                        f.add_block(LEFT, 0, &term(i - 1, i, ell - 1, half * c))?;
                        f.add_block(RIGHT, 0, &term(i + 1, i, ell - 1, half * c))?;
                    }
                }
            }
            (0, [a]) if a.target == i && a.source != i => {
                let s = q(sgn(i, a.source));
                for (&ell, &c) in p.epsilon.iter().filter(|(ell, _)| **ell > 0) {
                    f.add_block(CENTER, 0, &term(i, a.source, a.dots + ell - 1, s * half * c))?;
                }
            }
            (1, [a]) => {
                let w = q(a.qdeg() as i64) * half;
                let (j, k, alpha) = (a.source, a.target, a.dots);
                for (&ell, &c) in &p.sigma {
                    if k != i {
                        f.add_block(0, 0, &term(k, j, alpha + ell, w * c))?;
                    } else if j != i {
                        let (slot, obj) = side(j);
                        f.add_block(slot, 0, &term(obj, j, alpha + ell, w * c))?;
                    } else if alpha + ell > 0 {
                        let e = alpha + ell - 1;
                        f.add_block(LEFT, 0, &term(i - 1, i, e, w * half * c))?;
                        f.add_block(RIGHT, 0, &term(i + 1, i, e, w * half * c))?;
                    }
                }
            }
            (1, [a2, a1]) if a2.target == i => {
                let w = coeff_qq(i, *a2, *a1)?;
                let prod = compose(*a2, *a1).ok_or(NatError::NotComposable)?;
                for (&ell, &c) in &p.sigma {
                    if prod.dots + ell == 0 {
                        debug_assert!(w.is_zero());
                        continue;
                    }
                    f.add_block(CENTER, 0, &term(i, a1.source, prod.dots + ell - 1, w * half * c))?;
                }
            }
            (2, [a2, a1]) => {
                let c = coeff_c(*a2, *a1, &p.theta)?;
                if c.is_zero() {
                    return Ok(());
                }
                let prod = compose(*a2, *a1).ok_or(NatError::NotComposable)?;
                let (j, l) = (prod.source, prod.target);
                if l != i {
                    f.add_block(0, 0, &term(l, j, prod.dots - 1, c))?;
                } else if j != i {
                    let (slot, obj) = side(j);
                    f.add_block(slot, 0, &term(obj, j, prod.dots - 1, c))?;
                } else {
                    let e = prod.dots - 2;
                    f.add_block(LEFT, 0, &term(i - 1, i, e, half * c))?;
                    f.add_block(RIGHT, 0, &term(i + 1, i, e, half * c))?;
                }
            }
            (2, [a3, _, _]) if a3.target == i => {
                let x = self.solve_top(i, source, chain)?;
                f.add_block(CENTER, 0, &x)?;
            }
            _ => {}
        }
        Ok(())
    }

    /// The block of `η³(a₃, a₂, a₁)` into the degree `-1` slot of the cone,
    /// for a degree two transformation into `β_{i⁻}`. Zero unless `a₃` ends
    /// at `T_i`.
    pub fn eta3_solve(
        &self,
        a3: NormalMorphism,
        a2: NormalMorphism,
        a1: NormalMorphism,
    ) -> Result<AlgebraElement, NatError> {
        let chain = [a3, a2, a1];
        check_chain(a1.source, &chain)?;
        match self.params.target {
            Target::Beta(i) if self.params.degree == 2 && a3.target == i => self.solve_top(i, a1.source, &chain),
            _ => Ok(AlgebraElement::zero()),
        }
    }

    /// Solves `δ η³ = R` where `R` collects every other term of the cocycle
    /// equation on the chain. Left composition with `q_{i-1}` is injective on
    /// `Hom(T_j, T_i)`, so the block is read off the `T_{i-1}` slot and then
    /// checked against the whole of `R`.
    fn solve_top(&self, i: usize, source: usize, chain: &[NormalMorphism]) -> Result<AlgebraElement, NatError> {
        let rhs = self.partial_residual(source, chain)?;
        let shift = usize::from(source < i);
        let mut x = AlgebraElement::zero();
        for (m, c) in rhs.block(LEFT, 0).terms() {
            let dots = m
                .dots
                .checked_sub(shift)
                .ok_or_else(|| NatError::Unsolvable(chain_label(chain)))?;
            x.add_term(NormalMorphism::new(i, source, dots), *c);
        }
        let mut eta = TwMorphism::zero(TwComplex::single(source), self.object(i), -1);
        eta.add_block(CENTER, 0, &x)?;
        let check = eta.target().delta().compose(&eta)?;
        if check != rhs {
            return Err(NatError::Unsolvable(chain_label(chain)));
        }
        Ok(x)
    }

    /// The cocycle residual on `[a_d, ..., a_1]` starting at `source`, with
    /// `d ≤ 4`; zero iff the equation holds there.
    pub fn residual(&self, source: usize, chain: &[NormalMorphism]) -> Result<TwMorphism, NatError> {
        let top = mu_delta1(&self.component(source, chain)?)?;
        Ok(self.partial_residual(source, chain)?.try_add(&top)?)
    }

    /// [`Self::residual`] wrapped by target type.
    pub fn verify_cocycle(&self, source: usize, chain: &[NormalMorphism]) -> Result<NatValue, NatError> {
        let value = self.residual(source, chain)?;
        let arity = chain.len();
        Ok(match self.params.target {
            Target::Identity => NatValue::Algebra {
                arity,
                value: value.block(0, 0),
            },
            Target::Beta(_) => NatValue::Twisted { arity, value },
        })
    }

    /// Every term of the residual except `μ¹_δ(η^d)`.
    fn partial_residual(&self, source: usize, chain: &[NormalMorphism]) -> Result<TwMorphism, NatError> {
        check_chain(source, chain)?;
        let d = chain.len();
        let g = self.params.degree as i64;
        let target = chain.first().map_or(source, |a| a.target);
        let mut r = TwMorphism::zero(TwComplex::single(source), self.object(target), g - d as i64 + 1);
        for s in 1..=d {
            let (top, rest) = chain.split_at(s);
            let lower = self.component(source, rest)?;
            r = r.try_add(&mu_delta2(&self.functor(top)?, &lower)?)?;
        }
        if let Some((a1, upper)) = chain.split_last() {
            let mut first = TwMorphism::zero(TwComplex::single(source), TwComplex::single(a1.target), 0);
            first.add_block(0, 0, &AlgebraElement::basis(*a1))?;
            let eta = self.component(a1.target, upper)?;
            r = r.try_add(&mu_delta2(&eta, &first)?.scale(parity(g - 1)))?;
        }
        for n in 0..d.saturating_sub(1) {
            // a_{n+1} sits at index d-n-1 of the chain and a_{n+2} just before it.
            let at = d - n - 2;
            let prod = compose(chain[at], chain[at + 1]).ok_or(NatError::NotComposable)?;
            let mut merged = chain[..at].to_vec();
            merged.push(prod);
            merged.extend_from_slice(&chain[at + 2..]);
            r = r.try_add(&self.component(source, &merged)?.scale(parity(g - n as i64)))?;
        }
        Ok(r)
    }
}

fn check_composable(chain: &[NormalMorphism]) -> Result<(), NatError> {
    if chain.windows(2).any(|w| w[0].source != w[1].target) {
        return Err(NatError::NotComposable);
    }
    Ok(())
}

fn check_chain(source: usize, chain: &[NormalMorphism]) -> Result<(), NatError> {
    if chain.len() > 4 {
        return Err(NatError::ChainLength(chain.len()));
    }
    check_composable(chain)?;
    if let Some(a1) = chain.last() {
        if a1.source != source {
            return Err(NatError::SourceMismatch {
                expected: source,
                found: a1.source,
            });
        }
    }
    Ok(())
}

fn chain_label(chain: &[NormalMorphism]) -> String {
    let parts: Vec<String> = chain.iter().map(|m| m.to_string()).collect();
    format!("[{}]", parts.join(" | "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn cfg4() -> QuiverConfig {
        QuiverConfig::new(4).unwrap()
    }

    #[test]
    fn identity_transformation() {
        let nat = NatTransformation::new(
            &cfg4(),
            NatParams::epsilon(Target::Identity, BTreeMap::from([(0, q(1))])),
        )
        .unwrap();
        let v = nat.eta(3, &[]).unwrap();
        assert_eq!(
            v,
            NatValue::Algebra {
                arity: 0,
                value: AlgebraElement::idempotent(3)
            }
        );
    }

    #[test]
    fn degree_one_weight_is_half_the_grading() {
        let nat =
            NatTransformation::new(&cfg4(), NatParams::sigma(Target::Identity, BTreeMap::from([(0, q(1))]))).unwrap();
        let a = NormalMorphism::new(1, 3, 2);
        let v = nat.eta(3, &[a]).unwrap();
        assert_eq!(
            v,
            NatValue::Algebra {
                arity: 1,
                value: AlgebraElement::term(a, q(3))
            }
        );
    }

    #[test]
    fn degree_zero_into_the_braiding() {
        let params = NatParams::epsilon(Target::Beta(2), BTreeMap::from([(2, q(2))]));
        let nat = NatTransformation::new(&cfg4(), params).unwrap();
        let away = nat.component(4, &[]).unwrap();
        assert_eq!(away.block(0, 0), term(4, 4, 2, q(2)));
        let f = nat.component(4, &[NormalMorphism::new(2, 4, 1)]).unwrap();
        assert_eq!(f.block(CENTER, 0), term(2, 4, 2, q(-1)));
        let at = nat.component(2, &[]).unwrap();
        assert_eq!(at.block(LEFT, 0), term(1, 2, 1, q(1)));
        assert_eq!(at.block(RIGHT, 0), term(3, 2, 1, q(1)));
    }

    #[test]
    fn rejects_bad_chains() {
        let nat = NatTransformation::new(&cfg4(), NatParams::sigma(Target::Identity, BTreeMap::new())).unwrap();
        let chain = [NormalMorphism::p(2), NormalMorphism::p(2)];
        assert_eq!(nat.residual(1, &chain), Err(NatError::NotComposable));
        assert!(matches!(
            nat.residual(0, &[NormalMorphism::p(2)]),
            Err(NatError::SourceMismatch { .. })
        ));
        assert!(matches!(
            nat.residual(0, &[NormalMorphism::s(0); 5]),
            Err(NatError::ChainLength(5))
        ));
    }
}
