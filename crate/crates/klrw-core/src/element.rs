use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use crate::error::KlrwError;
use crate::morphism::{compose, NormalMorphism};
use crate::Q;

/// A finite rational combination of basis morphisms. Terms may live in
/// different hom-spaces; products of non-composable terms vanish.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraElement {
    terms: BTreeMap<NormalMorphism, Q>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(m: NormalMorphism) -> Self {
        Self::term(m, Q::one())
    }

    pub fn term(m: NormalMorphism, coeff: Q) -> Self {
        let mut out = Self::zero();
        out.add_term(m, coeff);
        out
    }

    pub fn idempotent(object: usize) -> Self {
        Self::basis(NormalMorphism::idempotent(object))
    }

    pub fn add_term(&mut self, m: NormalMorphism, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Q::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&m);
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

    pub fn coeff(&self, m: &NormalMorphism) -> Q {
        self.terms.get(m).copied().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalMorphism, &Q)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (*m, *v * c)).collect(),
        }
    }

    /// `(source, target)` shared by every term, if any.
    pub fn hom_space(&self) -> Result<Option<(usize, usize)>, KlrwError> {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Ok(None);
        };
        let ends = (first.source, first.target);
        if it.any(|m| (m.source, m.target) != ends) {
            return Err(KlrwError::MixedHomSpaces);
        }
        Ok(Some(ends))
    }

    /// Path-algebra product `self ∘ rhs`; non-composable pairs contribute 0.
    pub fn mul(&self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (m2, c2) in &self.terms {
            for (m1, c1) in &rhs.terms {
                if let Some(m) = compose(*m2, *m1) {
                    out.add_term(m, *c2 * *c1);
                }
            }
        }
        out
    }

    pub fn mul_basis_left(&self, left: NormalMorphism) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (m, c) in &self.terms {
            if let Some(p) = compose(left, *m) {
                out.add_term(p, *c);
            }
        }
        out
    }

    pub fn mul_basis_right(&self, right: NormalMorphism) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (m, c) in &self.terms {
            if let Some(p) = compose(*m, right) {
                out.add_term(p, *c);
            }
        }
        out
    }

    /// Every term gets `extra` more dots at the source.
    pub fn with_extra_dots(&self, extra: usize) -> AlgebraElement {
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.with_extra_dots(extra), *c)).collect(),
        }
    }

    /// Largest `𝔮`-degree among the terms.
    pub fn max_qdeg(&self) -> usize {
        self.terms.keys().map(NormalMorphism::qdeg).max().unwrap_or(0)
    }
}

/// `μ²(a2, a1)`, requiring every pair of terms to compose.
pub fn mu2(a2: &AlgebraElement, a1: &AlgebraElement) -> Result<AlgebraElement, KlrwError> {
    for m2 in a2.terms.keys() {
        for m1 in a1.terms.keys() {
            if m2.source != m1.target {
                return Err(KlrwError::NotComposable {
                    left: m2.to_string(),
                    right: m1.to_string(),
                    left_source: m2.source,
                    right_target: m1.target,
                });
            }
        }
    }
    Ok(a2.mul(a1))
}

impl From<NormalMorphism> for AlgebraElement {
    fn from(m: NormalMorphism) -> Self {
        Self::basis(m)
    }
}

impl FromIterator<(NormalMorphism, Q)> for AlgebraElement {
    fn from_iter<I: IntoIterator<Item = (NormalMorphism, Q)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in iter {
            out.add_term(m, c);
        }
        out
    }
}

impl AddAssign<&AlgebraElement> for AlgebraElement {
    fn add_assign(&mut self, rhs: &AlgebraElement) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, *c);
        }
    }
}

impl SubAssign<&AlgebraElement> for AlgebraElement {
    fn sub_assign(&mut self, rhs: &AlgebraElement) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -*c);
        }
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(-Q::one())
    }
}

impl fmt::Display for AlgebraElement {
    /// Canonical text form, e.g. `a(1,0)*s^1 - 1/2*e(2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qf};

    #[test]
    fn cancellation_drops_terms() {
        let mut x = AlgebraElement::basis(NormalMorphism::p(1));
        x.add_term(NormalMorphism::p(1), q(-1));
        assert!(x.is_zero());
    }

    #[test]
    fn products() {
        let x = AlgebraElement::basis(NormalMorphism::p(2));
        let y = AlgebraElement::basis(NormalMorphism::q(1));
        assert_eq!(mu2(&x, &y).unwrap(), AlgebraElement::basis(NormalMorphism::s(2)));
        assert!(mu2(&x, &x).is_err());
        assert!(x.mul(&x).is_zero());
        let e = AlgebraElement::idempotent(1);
        let a = AlgebraElement::basis(NormalMorphism::new(1, 3, 2));
        assert_eq!(mu2(&e, &a).unwrap(), a);
    }

    #[test]
    fn display() {
        let mut x = AlgebraElement::term(NormalMorphism::new(1, 0, 1), qf(-3, 2));
        x.add_term(NormalMorphism::idempotent(2), q(1));
        assert_eq!(x.to_string(), "-3/2*a(1,0)*s^1 + e(2)");
        assert_eq!(AlgebraElement::zero().to_string(), "0");
    }

    #[test]
    fn hom_space() {
        let mut x = AlgebraElement::basis(NormalMorphism::p(1));
        assert_eq!(x.hom_space().unwrap(), Some((0, 1)));
        x.add_term(NormalMorphism::q(0), q(1));
        assert!(x.hom_space().is_err());
    }
}
