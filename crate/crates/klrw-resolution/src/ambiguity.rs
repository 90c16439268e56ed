use std::fmt;

use klrw_core::path::{Arrow, ArrowKind, Path};
use klrw_core::QuiverConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    P,
    Q,
}

impl Family {
    pub fn mirror(self) -> Self {
        match self {
            Family::P => Family::Q,
            Family::Q => Family::P,
        }
    }
}

/// A generator of `S_n`.
///
/// Chains live on a strand `i`, the gap between objects `i` and `i+1`:
///
/// * `Q^n_i = q_i p_{i+1} q_i ...` and `P^n_{i+1} = p_{i+1} q_i p_{i+1} ...`
/// * `sQ^n_i = s_i Q^{n-1}_i` and `sP^n_{i+1} = s_{i+1} P^{n-1}_{i+1}`
///
/// each word having exactly `n` letters. Length-one chains are arrows and are
/// stored as such, so `s_j` has a single representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ambiguity {
    Vertex(usize),
    Arrow(Arrow),
    Chain {
        family: Family,
        dotted: bool,
        strand: usize,
        len: usize,
    },
}

impl Ambiguity {
    /// Canonical constructor for chains of length at least one.
    pub fn chain(family: Family, dotted: bool, strand: usize, len: usize) -> Self {
        assert!(len >= 1, "chains have at least one letter");
        if len == 1 {
            let a = match (family, dotted) {
                (Family::P, false) => Arrow::p(strand + 1),
                (Family::Q, false) => Arrow::q(strand),
                (Family::P, true) => Arrow::s(strand + 1),
                (Family::Q, true) => Arrow::s(strand),
            };
            return Ambiguity::Arrow(a);
        }
        Ambiguity::Chain {
            family,
            dotted,
            strand,
            len,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Ambiguity::Vertex(_) => 0,
            Ambiguity::Arrow(_) => 1,
            Ambiguity::Chain { len, .. } => *len,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn letters(&self) -> Vec<Arrow> {
        match *self {
            Ambiguity::Vertex(_) => Vec::new(),
            Ambiguity::Arrow(a) => vec![a],
            Ambiguity::Chain {
                family,
                dotted,
                strand,
                len,
            } => {
                let mut out = Vec::with_capacity(len);
                let (undotted_len, mut down) = (if dotted { len - 1 } else { len }, family == Family::Q);
                if dotted {
                    out.push(Arrow::s(if down { strand } else { strand + 1 }));
                }
                for _ in 0..undotted_len {
                    out.push(if down { Arrow::q(strand) } else { Arrow::p(strand + 1) });
                    down = !down;
                }
                out
            }
        }
    }

    pub fn word(&self) -> Path {
        match self {
            Ambiguity::Vertex(v) => Path::idempotent(*v),
            _ => Path::new(self.letters()).expect("ambiguity words compose"),
        }
    }

    pub fn target(&self) -> usize {
        match *self {
            Ambiguity::Vertex(v) => v,
            Ambiguity::Arrow(a) => a.target(),
            Ambiguity::Chain { family, strand, .. } => match family {
                Family::Q => strand,
                Family::P => strand + 1,
            },
        }
    }

    pub fn source(&self) -> usize {
        match *self {
            Ambiguity::Vertex(v) => v,
            Ambiguity::Arrow(a) => a.source(),
            Ambiguity::Chain {
                family,
                dotted,
                strand,
                len,
            } => {
                let moves = if dotted { len - 1 } else { len };
                let starts_low = family == Family::Q;
                if (moves % 2 == 0) == starts_low {
                    strand
                } else {
                    strand + 1
                }
            }
        }
    }

    /// `n` for type I chains, `n + 1` for dotted ones.
    pub fn qdeg(&self) -> usize {
        match *self {
            Ambiguity::Vertex(_) => 0,
            Ambiguity::Arrow(a) => a.qdeg(),
            Ambiguity::Chain { dotted, len, .. } => len + usize::from(dotted),
        }
    }

    /// Recognizes the `n`-ambiguity spelled by `letters`, `n = letters.len() ≥ 1`.
    pub fn from_letters(letters: &[Arrow]) -> Option<Self> {
        let (&first, rest) = letters.split_first()?;
        if rest.is_empty() {
            return Some(Ambiguity::Arrow(first));
        }
        let (family, dotted, strand) = match first.kind {
            ArrowKind::Q => (Family::Q, false, first.index),
            ArrowKind::P => (Family::P, false, first.index - 1),
            ArrowKind::S => match rest[0].kind {
                ArrowKind::Q if rest[0].index == first.index => (Family::Q, true, first.index),
                ArrowKind::P if rest[0].index == first.index => (Family::P, true, first.index - 1),
                _ => return None,
            },
        };
        let candidate = Ambiguity::chain(family, dotted, strand, letters.len());
        (candidate.letters() == letters).then_some(candidate)
    }

    /// Family, dottedness and strand of a chain of length at least two.
    pub fn family(&self) -> Option<(Family, bool, usize)> {
        match *self {
            Ambiguity::Chain {
                family, dotted, strand, ..
            } => Some((family, dotted, strand)),
            _ => None,
        }
    }
}

impl fmt::Display for Ambiguity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Ambiguity::Vertex(v) => write!(f, "e({v})"),
            Ambiguity::Arrow(a) => write!(f, "{a}"),
            Ambiguity::Chain {
                family,
                dotted,
                strand,
                len,
            } => {
                let s = if dotted { "s" } else { "" };
                match family {
                    Family::P => write!(f, "{s}P{len}({})", strand + 1),
                    Family::Q => write!(f, "{s}Q{len}({strand})"),
                }
            }
        }
    }
}

/// The generators of `S_n`, duplicate free, in a fixed order.
pub fn enumerate_s(n: usize, cfg: &QuiverConfig) -> Vec<Ambiguity> {
    let punctures = cfg.punctures();
    match n {
        0 => cfg.objects().map(Ambiguity::Vertex).collect(),
        1 => Arrow::all(cfg).into_iter().map(Ambiguity::Arrow).collect(),
        _ => {
            let mut out = Vec::with_capacity(4 * punctures);
            for strand in 0..punctures {
                for family in [Family::P, Family::Q] {
                    for dotted in [false, true] {
                        out.push(Ambiguity::chain(family, dotted, strand, n));
                    }
                }
            }
            out
        }
    }
}
