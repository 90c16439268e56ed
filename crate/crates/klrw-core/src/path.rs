use std::fmt;

use crate::config::QuiverConfig;
use crate::error::KlrwError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArrowKind {
    P,
    Q,
    S,
}

/// A quiver arrow: `p_i: i-1 -> i`, `q_i: i+1 -> i`, `s_i: i -> i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub kind: ArrowKind,
    pub index: usize,
}

impl Arrow {
    pub fn p(index: usize) -> Self {
        debug_assert!(index >= 1);
        Self {
            kind: ArrowKind::P,
            index,
        }
    }

    pub fn q(index: usize) -> Self {
        Self {
            kind: ArrowKind::Q,
            index,
        }
    }

    pub fn s(index: usize) -> Self {
        Self {
            kind: ArrowKind::S,
            index,
        }
    }

    pub fn source(&self) -> usize {
        match self.kind {
            ArrowKind::P => self.index - 1,
            ArrowKind::Q => self.index + 1,
            ArrowKind::S => self.index,
        }
    }

    pub fn target(&self) -> usize {
        self.index
    }

    pub fn qdeg(&self) -> usize {
        match self.kind {
            ArrowKind::P | ArrowKind::Q => 1,
            ArrowKind::S => 2,
        }
    }

    pub fn validate(&self, cfg: &QuiverConfig) -> Result<(), KlrwError> {
        let n = cfg.punctures();
        let ok = match self.kind {
            ArrowKind::P => self.index >= 1 && self.index <= n,
            ArrowKind::Q => self.index < n,
            ArrowKind::S => self.index <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(KlrwError::InvalidArrow {
                arrow: self.to_string(),
                punctures: n,
            })
        }
    }

    /// Every arrow of the quiver with `N` punctures.
    pub fn all(cfg: &QuiverConfig) -> Vec<Arrow> {
        let n = cfg.punctures();
        let mut out = Vec::with_capacity(3 * n + 1);
        out.extend((1..=n).map(Arrow::p));
        out.extend((0..n).map(Arrow::q));
        out.extend((0..=n).map(Arrow::s));
        out
    }

    /// Arrows whose source is `object`.
    pub fn leaving(cfg: &QuiverConfig, object: usize) -> Vec<Arrow> {
        Arrow::all(cfg).into_iter().filter(|a| a.source() == object).collect()
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            ArrowKind::P => 'p',
            ArrowKind::Q => 'q',
            ArrowKind::S => 's',
        };
        write!(f, "{c}({})", self.index)
    }
}

/// A composable word of arrows. `letters[0]` is applied last, matching
/// right-to-left composition; the empty word is the idempotent at `source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    letters: Vec<Arrow>,
    source: usize,
    target: usize,
}

impl Path {
    pub fn new(letters: Vec<Arrow>) -> Result<Self, KlrwError> {
        let (Some(first), Some(last)) = (letters.first(), letters.last()) else {
            return Err(KlrwError::Invariant("an empty path needs an explicit object".into()));
        };
        for pair in letters.windows(2) {
            if pair[0].source() != pair[1].target() {
                return Err(KlrwError::NotComposable {
                    left: pair[0].to_string(),
                    right: pair[1].to_string(),
                    left_source: pair[0].source(),
                    right_target: pair[1].target(),
                });
            }
        }
        let (source, target) = (last.source(), first.target());
        Ok(Self {
            letters,
            source,
            target,
        })
    }

    pub fn idempotent(object: usize) -> Self {
        Self {
            letters: Vec::new(),
            source: object,
            target: object,
        }
    }

    /// Builds a path from letters already known to compose.
    pub(crate) fn from_trusted(letters: Vec<Arrow>, source: usize, target: usize) -> Self {
        debug_assert!(letters.windows(2).all(|w| w[0].source() == w[1].target()));
        Self {
            letters,
            source,
            target,
        }
    }

    pub fn letters(&self) -> &[Arrow] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn qdeg(&self) -> usize {
        self.letters.iter().map(Arrow::qdeg).sum()
    }

    pub fn validate(&self, cfg: &QuiverConfig) -> Result<(), KlrwError> {
        cfg.check_object(self.source)?;
        cfg.check_object(self.target)?;
        self.letters.iter().try_for_each(|a| a.validate(cfg))
    }

    /// `self` after `rhs`.
    pub fn concat(&self, rhs: &Path) -> Result<Path, KlrwError> {
        if self.source != rhs.target {
            return Err(KlrwError::NotComposable {
                left: self.to_string(),
                right: rhs.to_string(),
                left_source: self.source,
                right_target: rhs.target,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        Ok(Path {
            letters,
            source: rhs.source,
            target: self.target,
        })
    }

    /// Vertices visited, starting at the source and ending at the target.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.letters.len() + 1);
        out.push(self.source);
        out.extend(self.letters.iter().rev().map(Arrow::target));
        out
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e({})", self.source);
        }
        for (k, a) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(".")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}
