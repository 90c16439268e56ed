use std::collections::BTreeMap;
use std::fmt;

use klrw_core::{compose, AlgebraElement, KlrwError, NormalMorphism, QuiverConfig, Q};
use num_traits::Zero;

/// The three bimodules of the short exact sequence `0 -> 𝔅(i) -> Δ -> 𝔖(i) -> 0`.
///
/// `𝔅(i)` is modelled as the kernel of the projection to `𝔖(i)`: the span of
/// every basis morphism except `e_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bimodule {
    Diagonal,
    Braid(usize),
    Coker(usize),
}

/// A basis vector of one of the bimodules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModuleBasis {
    Morphism(NormalMorphism),
    /// The class `ę_i` spanning `𝔖(i)`.
    Class(usize),
}

impl ModuleBasis {
    pub fn qdeg(&self) -> usize {
        match self {
            ModuleBasis::Morphism(m) => m.qdeg(),
            ModuleBasis::Class(_) => 0,
        }
    }

    pub fn ends(&self) -> (usize, usize) {
        match *self {
            ModuleBasis::Morphism(m) => (m.source, m.target),
            ModuleBasis::Class(i) => (i, i),
        }
    }
}

impl fmt::Display for ModuleBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleBasis::Morphism(m) => write!(f, "{m}"),
            ModuleBasis::Class(i) => write!(f, "ę({i})"),
        }
    }
}

impl fmt::Display for Bimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bimodule::Diagonal => f.write_str("delta"),
            Bimodule::Braid(i) => write!(f, "braid({i})"),
            Bimodule::Coker(i) => write!(f, "coker({i})"),
        }
    }
}

impl Bimodule {
    pub fn validate(&self, cfg: &QuiverConfig) -> Result<(), KlrwError> {
        match *self {
            Bimodule::Diagonal => Ok(()),
            Bimodule::Braid(i) | Bimodule::Coker(i) => cfg.check_braid_index(i),
        }
    }

    /// The basis vector of `M(T_source, T_target)` in `𝔮`-degree `qdeg`, if any.
    pub fn basis_at(&self, source: usize, target: usize, qdeg: usize) -> Option<ModuleBasis> {
        match *self {
            Bimodule::Diagonal => NormalMorphism::with_qdeg(source, target, qdeg).map(ModuleBasis::Morphism),
            Bimodule::Braid(i) => NormalMorphism::with_qdeg(source, target, qdeg)
                .filter(|m| *m != NormalMorphism::idempotent(i))
                .map(ModuleBasis::Morphism),
            Bimodule::Coker(i) => (source == i && target == i && qdeg == 0).then_some(ModuleBasis::Class(i)),
        }
    }

    /// `u · m · v`; every action is monomial, so the result is a basis vector
    /// or zero.
    pub fn act(&self, u: NormalMorphism, m: ModuleBasis, v: NormalMorphism) -> Option<ModuleBasis> {
        match m {
            ModuleBasis::Morphism(x) => {
                let out = compose(compose(u, x)?, v)?;
                debug_assert!(self.basis_at(out.source, out.target, out.qdeg()).is_some());
                Some(ModuleBasis::Morphism(out))
            }
            ModuleBasis::Class(i) => {
                let e = NormalMorphism::idempotent(i);
                (u == e && v == e).then_some(m)
            }
        }
    }
}

/// A finite combination of basis vectors of one bimodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleElement {
    pub module: Bimodule,
    terms: BTreeMap<ModuleBasis, Q>,
}

impl ModuleElement {
    pub fn zero(module: Bimodule) -> Self {
        Self {
            module,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, b: ModuleBasis, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(b).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ModuleBasis, &Q)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `ι_i: 𝔅(i) -> Δ`.
pub fn iota(i: usize, x: &ModuleElement) -> Result<AlgebraElement, KlrwError> {
    if x.module != Bimodule::Braid(i) {
        return Err(KlrwError::Invariant(format!("ι_{i} expects an element of braid({i})")));
    }
    let mut out = AlgebraElement::zero();
    for (b, c) in x.terms() {
        match b {
            ModuleBasis::Morphism(m) => out.add_term(*m, *c),
            ModuleBasis::Class(_) => unreachable!("braid bimodule has no classes"),
        }
    }
    Ok(out)
}

/// `π_i: Δ -> 𝔖(i)`, sending `e_i` to `ę_i` and every other basis morphism to 0.
pub fn pi(i: usize, x: &AlgebraElement) -> ModuleElement {
    let mut out = ModuleElement::zero(Bimodule::Coker(i));
    out.add_term(ModuleBasis::Class(i), x.coeff(&NormalMorphism::idempotent(i)));
    out
}

/// Lifts an algebra element into `𝔅(i)`; fails if it involves `e_i`.
pub fn restrict_to_braid(i: usize, x: &AlgebraElement) -> Result<ModuleElement, KlrwError> {
    let mut out = ModuleElement::zero(Bimodule::Braid(i));
    for (m, c) in x.terms() {
        if *m == NormalMorphism::idempotent(i) {
            return Err(KlrwError::Invariant(format!("e_{i} is not in braid({i})")));
        }
        out.add_term(ModuleBasis::Morphism(*m), *c);
    }
    Ok(out)
}
