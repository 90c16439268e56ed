use std::collections::BTreeMap;
use std::fmt;
use std::ops::AddAssign;

use klrw_core::{compose, AlgebraElement, NormalMorphism, Q};
use num_traits::{One, Signed, Zero};

use crate::error::BimoduleError;

/// A basis tensor `left ⊗ [y_n | ... | y_1] ⊗ right` of the normalized bar
/// complex. `middle[0]` is `y_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarTensor {
    pub left: NormalMorphism,
    pub middle: Vec<NormalMorphism>,
    pub right: NormalMorphism,
}

impl BarTensor {
    pub fn new(
        left: NormalMorphism,
        middle: Vec<NormalMorphism>,
        right: NormalMorphism,
    ) -> Result<Self, BimoduleError> {
        let t = Self { left, middle, right };
        t.check()?;
        Ok(t)
    }

    /// `1 ⊗ [y_n | ... | y_1] ⊗ 1`.
    pub fn unit(middle: Vec<NormalMorphism>) -> Result<Self, BimoduleError> {
        let (Some(first), Some(last)) = (middle.first(), middle.last()) else {
            return Err(BimoduleError::EmptyChain);
        };
        Self::new(
            NormalMorphism::idempotent(first.target),
            middle.clone(),
            NormalMorphism::idempotent(last.source),
        )
    }

    fn check(&self) -> Result<(), BimoduleError> {
        let mut chain = Vec::with_capacity(self.middle.len() + 2);
        chain.push(self.left);
        chain.extend(self.middle.iter().copied());
        chain.push(self.right);
        for pair in chain.windows(2) {
            if pair[0].source != pair[1].target {
                return Err(BimoduleError::NotComposable(pair[0].to_string(), pair[1].to_string()));
            }
        }
        if let Some(m) = self.middle.iter().find(|m| m.is_idempotent()) {
            return Err(BimoduleError::IdempotentEntry(m.to_string()));
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.middle.len()
    }

    pub fn qdeg(&self) -> usize {
        self.left.qdeg() + self.right.qdeg() + self.middle.iter().map(NormalMorphism::qdeg).sum::<usize>()
    }
}

impl fmt::Display for BarTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ [", self.left)?;
        for (k, m) in self.middle.iter().enumerate() {
            if k > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "] ⊗ {}", self.right)
    }
}

/// An element of the normalized bar complex in a fixed degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarElement {
    degree: usize,
    terms: BTreeMap<BarTensor, Q>,
}

impl BarElement {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_tensor(t: BarTensor, c: Q) -> Self {
        let mut out = Self::zero(t.degree());
        out.add_term(t, c);
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn add_term(&mut self, t: BarTensor, c: Q) {
        debug_assert_eq!(t.degree(), self.degree);
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(t.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&t);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BarTensor, &Q)> {
        self.terms.iter()
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
}

impl AddAssign<&BarElement> for BarElement {
    fn add_assign(&mut self, rhs: &BarElement) {
        for (t, c) in rhs.terms() {
            self.add_term(t.clone(), *c);
        }
    }
}

impl fmt::Display for BarElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
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

/// `∂̄_n(a ⊗ [y_n|...|y_1] ⊗ b)`: contract adjacent entries with alternating
/// signs; terms whose contracted entry is an idempotent vanish.
pub fn bar_boundary(x: &BarElement) -> Result<BarElement, BimoduleError> {
    let n = x.degree();
    if n == 0 {
        return Err(BimoduleError::DegreeZero);
    }
    let mut out = BarElement::zero(n - 1);
    for (t, c) in x.terms() {
        // position k contracts middle[k-1] with middle[k], where index -1 is
        // `left` and index n is `right`; sign (-1)^{n-k}.
        for k in 0..=n {
            let sign = if (n - k) % 2 == 0 { *c } else { -*c };
            let mut chain = Vec::with_capacity(n + 2);
            chain.push(t.left);
            chain.extend(t.middle.iter().copied());
            chain.push(t.right);
            let prod = compose(chain[k], chain[k + 1]).expect("bar tensors compose");
            chain.splice(k..k + 2, [prod]);
            let left = chain[0];
            let right = chain[chain.len() - 1];
            let middle = chain[1..chain.len() - 1].to_vec();
            if middle.iter().any(NormalMorphism::is_idempotent) {
                continue;
            }
            out.add_term(BarTensor { left, middle, right }, sign);
        }
    }
    Ok(out)
}

/// `∂̄_0(a ⊗ b) = ab`.
pub fn bar_multiply(x: &BarElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (t, c) in x.terms() {
        debug_assert!(t.middle.is_empty());
        out.add_term(compose(t.left, t.right).expect("bar tensors compose"), *c);
    }
    out
}
