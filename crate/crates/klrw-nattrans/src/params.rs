use std::collections::BTreeMap;
use std::fmt;

use klrw_core::{QuiverConfig, Q};
use num_traits::Zero;

use crate::error::NatError;

/// Codomain functor of a natural transformation out of the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Identity,
    Beta(usize),
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Identity => f.write_str("id"),
            Target::Beta(i) => write!(f, "beta({i})"),
        }
    }
}

/// Parameters of a natural transformation of degree `g`. Only the map
/// matching the degree is read: `epsilon` for 0, `sigma` for 1, `theta` for 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatParams {
    pub target: Target,
    pub degree: usize,
    pub epsilon: BTreeMap<usize, Q>,
    pub sigma: BTreeMap<usize, Q>,
    /// Indexed by objects `0..=N`.
    pub theta: Vec<Q>,
}

impl NatParams {
    pub fn epsilon(target: Target, epsilon: BTreeMap<usize, Q>) -> Self {
        Self {
            target,
            degree: 0,
            epsilon,
            sigma: BTreeMap::new(),
            theta: Vec::new(),
        }
    }

    pub fn sigma(target: Target, sigma: BTreeMap<usize, Q>) -> Self {
        Self {
            target,
            degree: 1,
            epsilon: BTreeMap::new(),
            sigma,
            theta: Vec::new(),
        }
    }

    pub fn theta(target: Target, theta: Vec<Q>) -> Self {
        Self {
            target,
            degree: 2,
            epsilon: BTreeMap::new(),
            sigma: BTreeMap::new(),
            theta,
        }
    }

    pub fn scale(&self, c: Q) -> Self {
        let mul = |m: &BTreeMap<usize, Q>| m.iter().map(|(k, v)| (*k, *v * c)).collect();
        Self {
            target: self.target,
            degree: self.degree,
            epsilon: mul(&self.epsilon),
            sigma: mul(&self.sigma),
            theta: self.theta.iter().map(|v| *v * c).collect(),
        }
    }

    pub fn validate(&self, cfg: &QuiverConfig) -> Result<(), NatError> {
        if self.degree > 2 {
            return Err(NatError::Degree(self.degree));
        }
        if let Target::Beta(i) = self.target {
            cfg.check_braid_index(i)?;
        }
        match self.degree {
            0 if matches!(self.target, Target::Beta(_)) => {
                if self.epsilon.get(&0).is_some_and(|c| !c.is_zero()) {
                    return Err(NatError::EpsilonZero);
                }
            }
            2 => {
                let n = cfg.punctures();
                if self.theta.len() != n + 1 {
                    return Err(NatError::ThetaLength {
                        expected: n + 1,
                        found: self.theta.len(),
                    });
                }
                let mut forced = vec![0, n];
                if let Target::Beta(i) = self.target {
                    forced.push(i);
                }
                if let Some(&k) = forced.iter().find(|&&k| !self.theta[k].is_zero()) {
                    return Err(NatError::ThetaForced(k));
                }
            }
            _ => {}
        }
        Ok(())
    }
}
