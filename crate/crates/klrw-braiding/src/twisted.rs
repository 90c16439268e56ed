use std::collections::BTreeMap;
use std::fmt;

use klrw_core::{AlgebraElement, Q};

use crate::error::BraidingError;

/// One summand `T_object[-degree]` of a twisted complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub object: usize,
    pub degree: i64,
}

/// A twisted complex over the generators: summands with a degree one
/// differential. Since the category only has `μ²`, this is an ordinary chain
/// complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwComplex {
    slots: Vec<Slot>,
    delta: BTreeMap<(usize, usize), AlgebraElement>,
}

impl TwComplex {
    pub fn single(object: usize) -> Self {
        Self {
            slots: vec![Slot { object, degree: 0 }],
            delta: BTreeMap::new(),
        }
    }

    /// `delta` lists entries `(target slot, source slot, morphism)`.
    pub fn new(slots: Vec<Slot>, delta: Vec<(usize, usize, AlgebraElement)>) -> Result<Self, BraidingError> {
        let mut out = Self {
            slots,
            delta: BTreeMap::new(),
        };
        for (t, s, a) in delta {
            check_block(&out, &out, t, s, 1, &a)?;
            if !a.is_zero() {
                out.delta.insert((t, s), a);
            }
        }
        Ok(out)
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn delta_entries(&self) -> impl Iterator<Item = (&(usize, usize), &AlgebraElement)> {
        self.delta.iter()
    }

    /// The differential as a degree one endomorphism.
    pub fn delta(&self) -> TwMorphism {
        TwMorphism {
            source: self.clone(),
            target: self.clone(),
            degree: 1,
            blocks: self.delta.clone(),
        }
    }

    pub fn is_square_zero(&self) -> bool {
        let d = self.delta();
        d.compose(&d).map(|x| x.is_zero()).unwrap_or(false)
    }
}

impl fmt::Display for TwComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let slots: Vec<String> = self
            .slots
            .iter()
            .map(|s| format!("T{}[{}]", s.object, s.degree))
            .collect();
        write!(f, "{{{}}}", slots.join(", "))?;
        for ((t, s), a) in &self.delta {
            write!(f, " δ[{t}<-{s}]={a}")?;
        }
        Ok(())
    }
}

fn check_block(
    source: &TwComplex,
    target: &TwComplex,
    t: usize,
    s: usize,
    degree: i64,
    a: &AlgebraElement,
) -> Result<(), BraidingError> {
    let (Some(ts), Some(ss)) = (target.slots.get(t), source.slots.get(s)) else {
        return Err(BraidingError::SlotOutOfRange { to: t, from: s });
    };
    if ts.degree - ss.degree != degree {
        return Err(BraidingError::BlockDegree {
            expected: degree,
            found: ts.degree - ss.degree,
        });
    }
    for (m, _) in a.terms() {
        if m.source != ss.object || m.target != ts.object {
            return Err(BraidingError::BlockEnds {
                morphism: m.to_string(),
                from: ss.object,
                to: ts.object,
            });
        }
    }
    Ok(())
}

/// A morphism of twisted complexes of fixed cohomological degree: the block
/// `(t, s)` maps slot `s` of the source to slot `t` of the target and shifts
/// degree by `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwMorphism {
    source: TwComplex,
    target: TwComplex,
    degree: i64,
    blocks: BTreeMap<(usize, usize), AlgebraElement>,
}

impl TwMorphism {
    pub fn zero(source: TwComplex, target: TwComplex, degree: i64) -> Self {
        Self {
            source,
            target,
            degree,
            blocks: BTreeMap::new(),
        }
    }

    pub fn identity(x: &TwComplex) -> Self {
        let mut out = Self::zero(x.clone(), x.clone(), 0);
        for (k, s) in x.slots.iter().enumerate() {
            out.blocks.insert((k, k), AlgebraElement::idempotent(s.object));
        }
        out
    }

    pub fn source(&self) -> &TwComplex {
        &self.source
    }

    pub fn target(&self) -> &TwComplex {
        &self.target
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn blocks(&self) -> impl Iterator<Item = (&(usize, usize), &AlgebraElement)> {
        self.blocks.iter()
    }

    pub fn block(&self, t: usize, s: usize) -> AlgebraElement {
        self.blocks.get(&(t, s)).cloned().unwrap_or_default()
    }

    /// Adds `a` to the block from source slot `s` to target slot `t`.
    pub fn add_block(&mut self, t: usize, s: usize, a: &AlgebraElement) -> Result<(), BraidingError> {
        check_block(&self.source, &self.target, t, s, self.degree, a)?;
        let entry = self.blocks.entry((t, s)).or_default();
        *entry += a;
        if entry.is_zero() {
            self.blocks.remove(&(t, s));
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn scale(&self, c: Q) -> Self {
        let mut out = Self::zero(self.source.clone(), self.target.clone(), self.degree);
        for (k, a) in &self.blocks {
            let b = a.scale(c);
            if !b.is_zero() {
                out.blocks.insert(*k, b);
            }
        }
        out
    }

    fn check_parallel(&self, rhs: &Self) -> Result<(), BraidingError> {
        if self.source != rhs.source || self.target != rhs.target || self.degree != rhs.degree {
            return Err(BraidingError::NotParallel);
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, BraidingError> {
        self.check_parallel(rhs)?;
        let mut out = self.clone();
        for ((t, s), a) in &rhs.blocks {
            out.add_block(*t, *s, a)?;
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, BraidingError> {
        self.try_add(&rhs.scale(-Q::from_integer(1)))
    }

    /// Plain block composition `self ∘ rhs`, without signs.
    pub fn compose(&self, rhs: &Self) -> Result<Self, BraidingError> {
        if rhs.target != self.source {
            return Err(BraidingError::NotComposable);
        }
        let mut out = Self::zero(rhs.source.clone(), self.target.clone(), self.degree + rhs.degree);
        for ((t, m), a2) in &self.blocks {
            for ((m2, s), a1) in &rhs.blocks {
                if m == m2 {
                    out.add_block(*t, *s, &a2.mul(a1))?;
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for TwMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "0 (degree {})", self.degree);
        }
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|((t, s), a)| format!("[{t}<-{s}] {a}"))
            .collect();
        write!(f, "{} (degree {})", parts.join("; "), self.degree)
    }
}

fn sign(degree: i64) -> Q {
    if degree.rem_euclid(2) == 0 {
        Q::from_integer(1)
    } else {
        Q::from_integer(-1)
    }
}

/// `μ¹_δ(f) = (-1)^{|f|} δ_Y f - f δ_X`.
pub fn mu_delta1(f: &TwMorphism) -> Result<TwMorphism, BraidingError> {
    let left = f.target.delta().compose(f)?.scale(sign(f.degree));
    let right = f.compose(&f.source.delta())?;
    left.try_sub(&right)
}

/// `μ²_δ(f₂, f₁) = (-1)^{|f₁|} f₂ f₁`.
pub fn mu_delta2(f2: &TwMorphism, f1: &TwMorphism) -> Result<TwMorphism, BraidingError> {
    Ok(f2.compose(f1)?.scale(sign(f1.degree)))
}
