//! Explicit cocycles spanning the Hochschild cohomology.
//!
//! For `Δ` and `𝔅(i)` in degrees 0, 1, 2 the classes are written down
//! directly; every other slice falls back to a kernel-modulo-image basis.

use std::collections::HashMap;

use klrw_bimodules::{Bimodule, ModuleBasis};
use klrw_core::linalg::{from_big, to_big, Echelon, SparseRow};
use klrw_core::path::Arrow;
use klrw_core::{q, qf, NormalMorphism, QuiverConfig, Q};
use klrw_resolution::{Ambiguity, Family};
use num_traits::Zero;

use crate::cochain::{induced_d, Cochain, Coordinate};
use crate::error::HochschildError;
use crate::slice::{d_matrix, slice_coordinates};

fn arrow_value(a: Arrow, extra_dots: usize) -> ModuleBasis {
    let m = klrw_core::rewrite::evaluate(&[a], a.source());
    ModuleBasis::Morphism(m.with_extra_dots(extra_dots))
}

fn diagonal_like(module: Bimodule) -> Result<(), HochschildError> {
    match module {
        Bimodule::Diagonal | Bimodule::Braid(_) => Ok(()),
        Bimodule::Coker(_) => Err(HochschildError::NoExplicitFamily(module.to_string())),
    }
}

/// Degree 0, internal degree `-2ℓ`: `φ(e_j) = s_j^ℓ` for every object.
pub fn epsilon_class(cfg: &QuiverConfig, module: Bimodule, ell: usize) -> Result<Cochain, HochschildError> {
    diagonal_like(module)?;
    if let (Bimodule::Braid(i), 0) = (module, ell) {
        return Err(HochschildError::ClassOutsideModule(format!(
            "e({i}) is not in {module}"
        )));
    }
    let mut phi = Cochain::zero(module, 0);
    for v in cfg.objects() {
        phi.add(
            Ambiguity::Vertex(v),
            ModuleBasis::Morphism(NormalMorphism::new(v, v, ell)),
            q(1),
        )?;
    }
    Ok(phi)
}

/// Degree 1, internal degree `-2ℓ`: `φ(s_j) = s_j^{ℓ+1}` and
/// `φ(q_j) = ½ q_j s^ℓ`, `φ(p_j) = ½ p_j s^ℓ`.
pub fn sigma_class(cfg: &QuiverConfig, module: Bimodule, ell: usize) -> Result<Cochain, HochschildError> {
    diagonal_like(module)?;
    let mut phi = Cochain::zero(module, 1);
    for a in Arrow::all(cfg) {
        let (dots, c) = match a.kind {
            klrw_core::ArrowKind::S => (ell, q(1)),
            _ => (ell, qf(1, 2)),
        };
        phi.add(Ambiguity::Arrow(a), arrow_value(a, dots), c)?;
    }
    Ok(phi)
}

/// Degree 2, internal degree 2: the class weighted by `theta`, indexed by
/// objects `0..=N`, with `theta[0] = theta[N] = 0`. For `𝔅(i)` also
/// `theta[i] = 0`.
pub fn theta_class(cfg: &QuiverConfig, module: Bimodule, theta: &[Q]) -> Result<Cochain, HochschildError> {
    diagonal_like(module)?;
    let n = cfg.punctures();
    if theta.len() != n + 1 {
        return Err(HochschildError::ThetaLength {
            expected: n + 1,
            found: theta.len(),
        });
    }
    let mut forced = vec![0, n];
    if let Bimodule::Braid(i) = module {
        forced.push(i);
    }
    if let Some(&k) = forced.iter().find(|&&k| !theta[k].is_zero()) {
        return Err(HochschildError::ClassOutsideModule(format!(
            "theta[{k}] must vanish for {module}"
        )));
    }
    let mut phi = Cochain::zero(module, 2);
    for i in 0..n {
        let (ti, tj) = (theta[i], theta[i + 1]);
        let e = |v| ModuleBasis::Morphism(NormalMorphism::idempotent(v));
        phi.add(Ambiguity::chain(Family::Q, false, i, 2), e(i), -ti)?;
        phi.add(Ambiguity::chain(Family::P, false, i, 2), e(i + 1), tj)?;
        phi.add(
            Ambiguity::chain(Family::Q, true, i, 2),
            arrow_value(Arrow::q(i), 0),
            ti + tj,
        )?;
        phi.add(
            Ambiguity::chain(Family::P, true, i, 2),
            arrow_value(Arrow::p(i + 1), 0),
            -(ti + tj),
        )?;
    }
    Ok(phi)
}

/// The basis class `𝔙_t`: [`theta_class`] with `theta` the indicator of `t`.
pub fn v_class(cfg: &QuiverConfig, module: Bimodule, t: usize) -> Result<Cochain, HochschildError> {
    let mut theta = vec![Q::zero(); cfg.punctures() + 1];
    if t < theta.len() {
        theta[t] = q(1);
    }
    theta_class(cfg, module, &theta)
}

fn to_row(phi: &Cochain, index: &HashMap<Coordinate, usize>) -> Result<SparseRow, HochschildError> {
    let mut row = SparseRow::new();
    for (k, c) in phi.terms() {
        let Some(&col) = index.get(k) else {
            return Err(HochschildError::NotHomogeneous);
        };
        row.insert(col, to_big(*c));
    }
    Ok(row)
}

fn image_echelon(cfg: &QuiverConfig, module: Bimodule, n: usize, d: i64) -> Echelon {
    let mut echelon = Echelon::default();
    if n > 0 {
        for row in d_matrix(cfg, module, n - 1, d).transpose().rows() {
            echelon.insert(row.clone());
        }
    }
    echelon
}

/// A kernel-modulo-image basis of `HH^n_d(M)`.
pub fn cohomology_basis(
    cfg: &QuiverConfig,
    module: Bimodule,
    n: usize,
    d: i64,
) -> Result<Vec<Cochain>, HochschildError> {
    let coords = slice_coordinates(cfg, module, n, d);
    let mut echelon = image_echelon(cfg, module, n, d);
    let mut out = Vec::new();
    for v in d_matrix(cfg, module, n, d).right_kernel() {
        if !echelon.insert(v.clone()) {
            continue;
        }
        let mut phi = Cochain::zero(module, n);
        for (col, x) in &v {
            let c = from_big(x).ok_or(HochschildError::Overflow)?;
            phi.add(coords[*col].gen, coords[*col].value, c)?;
        }
        out.push(phi);
    }
    Ok(out)
}

/// Explicit representatives of `HH^n_d(M)`, falling back to
/// [`cohomology_basis`] where no closed family is known.
pub fn representatives(
    cfg: &QuiverConfig,
    module: Bimodule,
    n: usize,
    d: i64,
) -> Result<Vec<Cochain>, HochschildError> {
    if module.validate(cfg).is_err() {
        return Err(HochschildError::InvalidModule(module.to_string()));
    }
    let ell = (d <= 0 && d % 2 == 0).then(|| (-d / 2) as usize);
    match (module, n) {
        (Bimodule::Coker(_), _) => cohomology_basis(cfg, module, n, d),
        (_, 0) => match ell {
            Some(0) if matches!(module, Bimodule::Braid(_)) => Ok(Vec::new()),
            Some(ell) => Ok(vec![epsilon_class(cfg, module, ell)?]),
            None => Ok(Vec::new()),
        },
        (_, 1) => match ell {
            Some(ell) => Ok(vec![sigma_class(cfg, module, ell)?]),
            None => Ok(Vec::new()),
        },
        (_, 2) if d == 2 => {
            let skip = match module {
                Bimodule::Braid(i) => Some(i),
                _ => None,
            };
            (1..cfg.punctures())
                .filter(|t| Some(*t) != skip)
                .map(|t| v_class(cfg, module, t))
                .collect()
        }
        (_, 2) => Ok(Vec::new()),
        _ => cohomology_basis(cfg, module, n, d),
    }
}

/// Whether `reps` are cocycles of degree `n`, homogeneous of internal degree
/// `d`, and linearly independent modulo coboundaries.
pub fn independent_classes(cfg: &QuiverConfig, module: Bimodule, n: usize, d: i64, reps: &[Cochain]) -> bool {
    let coords = slice_coordinates(cfg, module, n, d);
    let index: HashMap<Coordinate, usize> = coords.iter().enumerate().map(|(k, c)| (*c, k)).collect();
    let mut echelon = image_echelon(cfg, module, n, d);
    for phi in reps {
        if phi.module() != module || phi.degree() != n || !induced_d(cfg, phi).is_zero() {
            return false;
        }
        let Ok(row) = to_row(phi, &index) else {
            return false;
        };
        if !echelon.insert(row) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::slice::hh_dim;

    #[test]
    fn explicit_classes_are_closed_and_independent() {
        let cfg = QuiverConfig::new(4).unwrap();
        for module in [Bimodule::Diagonal, Bimodule::Braid(2)] {
            for n in 0..=2 {
                for d in -6..=3 {
                    let reps = representatives(&cfg, module, n, d).unwrap();
                    assert_eq!(reps.len(), hh_dim(&cfg, module, n, d), "{module} n={n} d={d}");
                    assert!(independent_classes(&cfg, module, n, d, &reps), "{module} n={n} d={d}");
                }
            }
        }
    }

    #[test]
    fn theta_must_vanish_at_the_braid_index() {
        let cfg = QuiverConfig::new(4).unwrap();
        assert!(v_class(&cfg, Bimodule::Braid(2), 2).is_err());
        assert!(v_class(&cfg, Bimodule::Braid(2), 3).is_ok());
        assert!(v_class(&cfg, Bimodule::Diagonal, 0).is_err());
    }
}
