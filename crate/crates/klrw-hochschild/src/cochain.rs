use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use klrw_bimodules::{Bimodule, ModuleBasis};
use klrw_core::{QuiverConfig, Q};
use klrw_resolution::{boundary_generator, enumerate_s, Ambiguity};
use num_traits::{One, Signed, Zero};

use crate::error::HochschildError;

/// A coordinate of `Hom(P_n, M)`: the coefficient of basis vector `value` in
/// `φ(1 ⊗ gen ⊗ 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coordinate {
    pub gen: Ambiguity,
    pub value: ModuleBasis,
}

impl Coordinate {
    /// `D = 𝔮(gen) - 𝔮(value)`.
    pub fn internal_degree(&self) -> i64 {
        self.gen.qdeg() as i64 - self.value.qdeg() as i64
    }
}

impl fmt::Display for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ↦ {}", self.gen, self.value)
    }
}

/// A bimodule map `P_n -> M`, stored by its values on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    module: Bimodule,
    coeffs: BTreeMap<Coordinate, Q>,
}

impl Cochain {
    pub fn zero(module: Bimodule, degree: usize) -> Self {
        Self {
            degree,
            module,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn module(&self) -> Bimodule {
        self.module
    }

    /// Adds `c` at `(gen, value)`; a nonzero value must live in
    /// `M(source, target)` of the generator.
    pub fn add(&mut self, gen: Ambiguity, value: ModuleBasis, c: Q) -> Result<(), HochschildError> {
        if gen.len() != self.degree {
            return Err(HochschildError::DegreeMismatch {
                expected: self.degree,
                found: gen.len(),
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        let (s, t) = value.ends();
        if (s, t) != (gen.source(), gen.target()) || self.module.basis_at(s, t, value.qdeg()) != Some(value) {
            return Err(HochschildError::ValueOutsideModule {
                gen: gen.to_string(),
                value: value.to_string(),
                module: self.module.to_string(),
            });
        }
        self.add_unchecked(Coordinate { gen, value }, c);
        Ok(())
    }

    pub(crate) fn add_unchecked(&mut self, k: Coordinate, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(k).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn get(&self, k: &Coordinate) -> Q {
        self.coeffs.get(k).copied().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Coordinate, &Q)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: Q) -> Self {
        let mut out = Self::zero(self.module, self.degree);
        for (k, v) in &self.coeffs {
            out.add_unchecked(*k, *v * c);
        }
        out
    }

    /// The internal degrees present among the nonzero coordinates.
    pub fn internal_degrees(&self) -> BTreeSet<i64> {
        self.coeffs.keys().map(Coordinate::internal_degree).collect()
    }

    /// `φ(1 ⊗ gen ⊗ 1)` as a list of basis vectors with coefficients.
    pub fn value_on(&self, gen: &Ambiguity) -> Vec<(ModuleBasis, Q)> {
        self.coeffs.range(range_for(gen)).map(|(k, c)| (k.value, *c)).collect()
    }
}

fn range_for(gen: &Ambiguity) -> std::ops::RangeInclusive<Coordinate> {
    use klrw_core::NormalMorphism;
    let lo = Coordinate {
        gen: *gen,
        value: ModuleBasis::Morphism(NormalMorphism::new(0, 0, 0)),
    };
    let hi = Coordinate {
        gen: *gen,
        value: ModuleBasis::Class(usize::MAX),
    };
    lo..=hi
}

impl std::ops::AddAssign<&Cochain> for Cochain {
    fn add_assign(&mut self, rhs: &Cochain) {
        debug_assert_eq!((self.module, self.degree), (rhs.module, rhs.degree));
        for (k, c) in &rhs.coeffs {
            self.add_unchecked(*k, *c);
        }
    }
}

impl fmt::Display for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.coeffs.iter().enumerate() {
            if n > 0 {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write!(f, "[{k}]")?;
        }
        Ok(())
    }
}

/// `d_n φ = φ ∘ ∂_{n+1}`, evaluated on every generator of `S_{n+1}`.
pub fn induced_d(cfg: &QuiverConfig, phi: &Cochain) -> Cochain {
    let module = phi.module();
    let mut out = Cochain::zero(module, phi.degree() + 1);
    for gen in enumerate_s(phi.degree() + 1, cfg) {
        for (t, c) in boundary_generator(&gen).terms() {
            for (m, v) in phi.value_on(&t.gen) {
                if let Some(image) = module.act(t.left, m, t.right) {
                    out.add_unchecked(Coordinate { gen, value: image }, *c * v);
                }
            }
        }
    }
    out
}
