use std::fmt;

use crate::config::QuiverConfig;
use crate::error::KlrwError;
use crate::path::{Arrow, Path};

/// The basis morphism `a_{ji} s^α` of `Hom(T_i, T_j)`: a monotone strand from
/// `i` to `j` carrying `α` dots at the bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalMorphism {
    pub target: usize,
    pub source: usize,
    pub dots: usize,
}

impl NormalMorphism {
    pub fn new(target: usize, source: usize, dots: usize) -> Self {
        Self { target, source, dots }
    }

    pub fn idempotent(object: usize) -> Self {
        Self::new(object, object, 0)
    }

    pub fn p(i: usize) -> Self {
        Self::new(i, i - 1, 0)
    }

    pub fn q(i: usize) -> Self {
        Self::new(i, i + 1, 0)
    }

    pub fn s(i: usize) -> Self {
        Self::new(i, i, 1)
    }

    pub fn is_idempotent(&self) -> bool {
        self.target == self.source && self.dots == 0
    }

    pub fn span(&self) -> usize {
        self.target.abs_diff(self.source)
    }

    /// `2α + |i - j|`.
    pub fn qdeg(&self) -> usize {
        2 * self.dots + self.span()
    }

    pub fn with_extra_dots(&self, extra: usize) -> Self {
        Self::new(self.target, self.source, self.dots + extra)
    }

    pub fn validate(&self, cfg: &QuiverConfig) -> Result<(), KlrwError> {
        cfg.check_object(self.target)?;
        cfg.check_object(self.source)
    }

    /// The irreducible word: the monotone strand followed by dots at the
    /// source.
    pub fn word(&self) -> Path {
        let (j, i) = (self.target, self.source);
        let mut letters = Vec::with_capacity(self.span() + self.dots);
        if i < j {
            letters.extend((i + 1..=j).rev().map(Arrow::p));
        } else if i > j {
            letters.extend((j..i).map(Arrow::q));
        }
        letters.extend(std::iter::repeat(Arrow::s(i)).take(self.dots));
        if letters.is_empty() {
            Path::idempotent(i)
        } else {
            Path::from_trusted(letters, i, j)
        }
    }

    /// All basis morphisms `T_source -> T_target` of the given `𝔮`-degree.
    /// There is at most one.
    pub fn with_qdeg(source: usize, target: usize, qdeg: usize) -> Option<Self> {
        let span = source.abs_diff(target);
        if qdeg < span || (qdeg - span) % 2 != 0 {
            return None;
        }
        Some(Self::new(target, source, (qdeg - span) / 2))
    }

    /// Every basis morphism between objects of `cfg` with at most `max_dots`.
    pub fn all(cfg: &QuiverConfig, max_dots: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for j in cfg.objects() {
            for i in cfg.objects() {
                for a in 0..=max_dots {
                    out.push(Self::new(j, i, a));
                }
            }
        }
        out
    }
}

impl fmt::Display for NormalMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_idempotent() {
            return write!(f, "e({})", self.source);
        }
        write!(f, "a({},{})", self.target, self.source)?;
        if self.dots > 0 {
            write!(f, "*s^{}", self.dots)?;
        }
        Ok(())
    }
}

/// `0` when `i, j, k` are monotone, otherwise the length of the shorter leg.
pub fn delta_ijk(i: usize, j: usize, k: usize) -> usize {
    let up_then_down = (i < j && j > k) || (i > j && j < k);
    if up_then_down {
        i.abs_diff(j).min(j.abs_diff(k))
    } else {
        0
    }
}

/// `μ²(a_{kj}s^β, a_{ji}s^α) = a_{ki}s^{β+α+δ(i,j,k)}`; `None` when the pair
/// does not compose.
pub fn compose(a2: NormalMorphism, a1: NormalMorphism) -> Option<NormalMorphism> {
    if a2.source != a1.target {
        return None;
    }
    let (i, j, k) = (a1.source, a1.target, a2.target);
    Some(NormalMorphism::new(k, i, a2.dots + a1.dots + delta_ijk(i, j, k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_examples() {
        assert_eq!(delta_ijk(2, 1, 2), 1);
        assert_eq!(delta_ijk(3, 3, 3), 0);
        assert_eq!(delta_ijk(0, 2, 1), 1);
        assert_eq!(delta_ijk(0, 1, 2), 0);
        assert_eq!(delta_ijk(4, 1, 3), 2);
        assert_eq!(delta_ijk(1, 1, 3), 0);
    }

    #[test]
    fn product_examples() {
        let s2 = compose(NormalMorphism::p(2), NormalMorphism::q(1)).unwrap();
        assert_eq!(s2, NormalMorphism::s(2));
        let a12 = NormalMorphism::new(1, 2, 0);
        assert_eq!(compose(NormalMorphism::s(1), a12), Some(NormalMorphism::new(1, 2, 1)));
        let a20 = NormalMorphism::new(2, 0, 0);
        assert_eq!(compose(a12, a20), Some(NormalMorphism::new(1, 0, 1)));
        assert_eq!(compose(a12, a12), None);
    }

    #[test]
    fn words() {
        assert_eq!(NormalMorphism::new(3, 0, 0).word().to_string(), "p(3).p(2).p(1)");
        assert_eq!(
            NormalMorphism::new(0, 3, 2).word().to_string(),
            "q(0).q(1).q(2).s(3).s(3)"
        );
        assert_eq!(NormalMorphism::idempotent(2).word().to_string(), "e(2)");
        assert_eq!(NormalMorphism::new(1, 3, 2).qdeg(), 6);
        assert_eq!(NormalMorphism::new(1, 3, 2).word().qdeg(), 6);
    }

    #[test]
    fn qdeg_lookup() {
        assert_eq!(NormalMorphism::with_qdeg(0, 2, 4), Some(NormalMorphism::new(2, 0, 1)));
        assert_eq!(NormalMorphism::with_qdeg(0, 2, 3), None);
        assert_eq!(NormalMorphism::with_qdeg(0, 2, 1), None);
    }
}
