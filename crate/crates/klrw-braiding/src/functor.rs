//! The negative braiding functor `β_{i⁻}` on generators: objects, `β¹`, `β²`
//! (all higher components vanish), and the residual of the `A∞`-functor
//! equation.

use klrw_core::{compose, AlgebraElement, NormalMorphism, QuiverConfig, Q};

use crate::error::BraidingError;
use crate::twisted::{mu_delta1, mu_delta2, Slot, TwComplex, TwMorphism};

/// Slot of `T_i` in `β_{i⁻}T_i`, in homological degree `-1`.
pub const CENTER: usize = 0;
/// Slot of `T_{i-1}` in `β_{i⁻}T_i`.
pub const LEFT: usize = 1;
/// Slot of `T_{i+1}` in `β_{i⁻}T_i`.
pub const RIGHT: usize = 2;

/// The negative braiding at strand gap `i`, validated against a quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NegativeBraiding {
    i: usize,
}

impl NegativeBraiding {
    pub fn new(cfg: &QuiverConfig, i: usize) -> Result<Self, BraidingError> {
        cfg.check_braid_index(i)?;
        Ok(Self { i })
    }

    pub fn index(&self) -> usize {
        self.i
    }

    /// `β_{i⁻}T_j`: unchanged for `j ≠ i`, otherwise the cone
    /// `T_i → T_{i-1} ⊕ T_{i+1}` with differential `[q_{i-1}, -p_{i+1}]`.
    pub fn object(&self, j: usize) -> TwComplex {
        let i = self.i;
        if j != i {
            return TwComplex::single(j);
        }
        TwComplex::new(
            vec![
                Slot { object: i, degree: -1 },
                Slot {
                    object: i - 1,
                    degree: 0,
                },
                Slot {
                    object: i + 1,
                    degree: 0,
                },
            ],
            vec![
                (LEFT, CENTER, AlgebraElement::basis(NormalMorphism::q(i - 1))),
                (
                    RIGHT,
                    CENTER,
                    AlgebraElement::term(NormalMorphism::p(i + 1), Q::from_integer(-1)),
                ),
            ],
        )
        .expect("braiding cone is well formed")
    }

    /// `β¹(a)` for a basis morphism `a = a_{kj}s^α`.
    pub fn beta1(&self, a: NormalMorphism) -> TwMorphism {
        let i = self.i;
        let (j, k, alpha) = (a.source, a.target, a.dots);
        let mut f = TwMorphism::zero(self.object(j), self.object(k), 0);
        let put = |f: &mut TwMorphism, t, s, m: NormalMorphism| {
            f.add_block(t, s, &AlgebraElement::basis(m)).expect("β¹ block shape");
        };
        match (j == i, k == i) {
            (false, false) => put(&mut f, 0, 0, a),
            (false, true) => {
                if j > i {
                    put(&mut f, RIGHT, 0, NormalMorphism::new(i + 1, j, alpha));
                } else {
                    put(&mut f, LEFT, 0, NormalMorphism::new(i - 1, j, alpha));
                }
            }
            (true, false) => {
                let (left_dots, right_dots) = if k > i { (alpha, alpha + 1) } else { (alpha + 1, alpha) };
                put(&mut f, 0, LEFT, NormalMorphism::new(k, i - 1, left_dots));
                put(&mut f, 0, RIGHT, NormalMorphism::new(k, i + 1, right_dots));
            }
            (true, true) => {
                put(&mut f, CENTER, CENTER, NormalMorphism::new(i, i, alpha));
                put(&mut f, LEFT, LEFT, NormalMorphism::new(i - 1, i - 1, alpha));
                put(&mut f, RIGHT, RIGHT, NormalMorphism::new(i + 1, i + 1, alpha));
            }
        }
        f
    }

    /// `β²(a₂, a₁)` for `a₂ = a_{lk}s^β`, `a₁ = a_{kj}s^α`, a morphism of
    /// degree `-1`.
    pub fn beta2(&self, a2: NormalMorphism, a1: NormalMorphism) -> Result<TwMorphism, BraidingError> {
        if a2.source != a1.target {
            return Err(BraidingError::NotComposable);
        }
        let i = self.i as i64;
        let (j, k, l) = (a1.source, a1.target, a2.target);
        let mut f = TwMorphism::zero(self.object(j), self.object(l), -1);
        if l != self.i {
            return Ok(f);
        }
        let (ji, ki) = (j as i64, k as i64);
        let sk = (i - ki).signum();
        let dots = |span: i64| (a2.dots + a1.dots) as i64 + span - 1;
        if j != self.i {
            if (i - ji) * (i - ki) < 0 {
                let m = NormalMorphism::new(self.i, j, dots((i - ki).abs()) as usize);
                f.add_block(CENTER, 0, &AlgebraElement::term(m, Q::from_integer(sk)))?;
            }
        } else if sk != 0 {
            let from = (i + sk) as usize;
            let m = NormalMorphism::new(self.i, from, dots((i - ki).abs()) as usize);
            let slot = if sk < 0 { LEFT } else { RIGHT };
            f.add_block(CENTER, slot, &AlgebraElement::term(m, Q::from_integer(sk)))?;
        }
        Ok(f)
    }

    /// Residual of the `A∞`-functor equation on a composable chain
    /// `[a_d, ..., a_1]` (`a_1` acts first) of length 1, 2 or 3; zero iff the
    /// equation holds.
    pub fn functor_residual(&self, chain: &[NormalMorphism]) -> Result<TwMorphism, BraidingError> {
        check_chain(chain)?;
        match *chain {
            [a] => mu_delta1(&self.beta1(a)),
            [a2, a1] => {
                let prod = compose(a2, a1).ok_or(BraidingError::NotComposable)?;
                let b2 = self.beta2(a2, a1)?;
                mu_delta2(&self.beta1(a2), &self.beta1(a1))?
                    .try_add(&mu_delta1(&b2)?)?
                    .try_sub(&self.beta1(prod))
            }
            [a3, a2, a1] => {
                let a32 = compose(a3, a2).ok_or(BraidingError::NotComposable)?;
                let a21 = compose(a2, a1).ok_or(BraidingError::NotComposable)?;
                mu_delta2(&self.beta2(a3, a2)?, &self.beta1(a1))?
                    .try_add(&mu_delta2(&self.beta1(a3), &self.beta2(a2, a1)?)?)?
                    .try_sub(&self.beta2(a3, a21)?)?
                    .try_add(&self.beta2(a32, a1)?)
            }
            _ => Err(BraidingError::ChainLength(chain.len())),
        }
    }
}

fn check_chain(chain: &[NormalMorphism]) -> Result<(), BraidingError> {
    if chain.is_empty() || chain.len() > 3 {
        return Err(BraidingError::ChainLength(chain.len()));
    }
    if chain.windows(2).any(|w| w[0].source != w[1].target) {
        return Err(BraidingError::NotComposable);
    }
    Ok(())
}

/// Every composable chain of basis morphisms of length `len` with at most
/// `max_dots` dots per entry, listed as `[a_len, ..., a_1]`.
pub fn composable_chains(cfg: &QuiverConfig, len: usize, max_dots: usize) -> Vec<Vec<NormalMorphism>> {
    let basis = NormalMorphism::all(cfg, max_dots);
    let mut out: Vec<Vec<NormalMorphism>> = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for chain in &out {
            for m in &basis {
                if chain
                    .last()
                    .map_or(true, |last: &NormalMorphism| last.source == m.target)
                {
                    let mut c = chain.clone();
                    c.push(*m);
                    next.push(c);
                }
            }
        }
        out = next;
    }
    out
}
