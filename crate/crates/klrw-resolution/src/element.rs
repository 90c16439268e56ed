use std::collections::BTreeMap;
use std::fmt;
use std::ops::{AddAssign, SubAssign};

use klrw_core::{compose, AlgebraElement, NormalMorphism, Q};
use num_traits::{One, Signed, Zero};

use crate::ambiguity::Ambiguity;

/// A basis tensor `left ⊗ gen ⊗ right` of `A ⊗ kS_n ⊗ A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tensor {
    pub left: NormalMorphism,
    pub gen: Ambiguity,
    pub right: NormalMorphism,
}

impl Tensor {
    /// `1 ⊗ gen ⊗ 1`.
    pub fn unit(gen: Ambiguity) -> Self {
        Self {
            left: NormalMorphism::idempotent(gen.target()),
            gen,
            right: NormalMorphism::idempotent(gen.source()),
        }
    }

    pub fn new(left: NormalMorphism, gen: Ambiguity, right: NormalMorphism) -> Self {
        debug_assert_eq!(left.source, gen.target());
        debug_assert_eq!(right.target, gen.source());
        Self { left, gen, right }
    }

    /// `x · self · y`, or `None` when either product is not composable.
    pub fn act(&self, x: NormalMorphism, y: NormalMorphism) -> Option<Self> {
        Some(Self {
            left: compose(x, self.left)?,
            gen: self.gen,
            right: compose(self.right, y)?,
        })
    }

    pub fn qdeg(&self) -> usize {
        self.left.qdeg() + self.gen.qdeg() + self.right.qdeg()
    }

    /// Outer endpoints `(source, target)`.
    pub fn ends(&self) -> (usize, usize) {
        (self.right.source, self.left.target)
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {} ⊗ {}", self.left, self.gen, self.right)
    }
}

/// An element of `P_n = A ⊗ kS_n ⊗ A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResolutionElement {
    degree: usize,
    terms: BTreeMap<Tensor, Q>,
}

impl ResolutionElement {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_tensor(t: Tensor, coeff: Q) -> Self {
        let mut out = Self::zero(t.gen.len());
        out.add_term(t, coeff);
        out
    }

    /// `1 ⊗ gen ⊗ 1`.
    pub fn generator(gen: Ambiguity) -> Self {
        Self::from_tensor(Tensor::unit(gen), Q::one())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn add_term(&mut self, t: Tensor, coeff: Q) {
        debug_assert_eq!(t.gen.len(), self.degree);
        if coeff.is_zero() {
            return;
        }
        let e = self.terms.entry(t).or_insert_with(Q::zero);
        *e += coeff;
        if e.is_zero() {
            self.terms.remove(&t);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tensor, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &Tensor) -> Q {
        self.terms.get(t).copied().unwrap_or_else(Q::zero)
    }

    pub fn scale(&self, c: Q) -> Self {
        let mut out = Self::zero(self.degree);
        for (t, v) in &self.terms {
            out.add_term(*t, *v * c);
        }
        out
    }

    /// `x · self · y` for basis morphisms; incomposable terms vanish.
    pub fn act(&self, x: NormalMorphism, y: NormalMorphism) -> Self {
        let mut out = Self::zero(self.degree);
        for (t, c) in &self.terms {
            if let Some(u) = t.act(x, y) {
                out.add_term(u, *c);
            }
        }
        out
    }

    pub fn left_mul(&self, x: &AlgebraElement) -> Self {
        let mut out = Self::zero(self.degree);
        for (m, c) in x.terms() {
            for (t, v) in &self.terms {
                if let Some(u) = compose(*m, t.left) {
                    out.add_term(Tensor { left: u, ..*t }, *c * *v);
                }
            }
        }
        out
    }

    pub fn right_mul(&self, y: &AlgebraElement) -> Self {
        let mut out = Self::zero(self.degree);
        for (m, c) in y.terms() {
            for (t, v) in &self.terms {
                if let Some(u) = compose(t.right, *m) {
                    out.add_term(Tensor { right: u, ..*t }, *c * *v);
                }
            }
        }
        out
    }

    /// Largest `𝔮`-degree among the terms.
    pub fn max_qdeg(&self) -> usize {
        self.terms.keys().map(Tensor::qdeg).max().unwrap_or(0)
    }

    /// Largest dot count on any outer factor.
    pub fn max_dots(&self) -> usize {
        self.terms
            .keys()
            .map(|t| t.left.dots.max(t.right.dots))
            .max()
            .unwrap_or(0)
    }
}

impl AddAssign<&ResolutionElement> for ResolutionElement {
    fn add_assign(&mut self, rhs: &ResolutionElement) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            self.degree = rhs.degree;
        }
        debug_assert_eq!(self.degree, rhs.degree);
        for (t, c) in &rhs.terms {
            self.add_term(*t, *c);
        }
    }
}

impl SubAssign<&ResolutionElement> for ResolutionElement {
    fn sub_assign(&mut self, rhs: &ResolutionElement) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            self.degree = rhs.degree;
        }
        debug_assert_eq!(self.degree, rhs.degree);
        for (t, c) in &rhs.terms {
            self.add_term(*t, -*c);
        }
    }
}

impl fmt::Display for ResolutionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k > 0 || c.is_negative() {
                write!(f, "{}{sign} ", if k > 0 { " " } else { "" })?;
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write!(f, "({t})")?;
        }
        Ok(())
    }
}
