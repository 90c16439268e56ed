//! The scalar weights `𝔠` and `𝔔` of the degree two components.

use klrw_core::{compose, q, qf, NormalMorphism, Q};
use num_traits::Zero;

use crate::error::NatError;

/// `𝔠(a₂, a₁)` for `a₂ = a_{kj}s^β`, `a₁ = a_{ji}s^α`, with `theta` indexed by
/// objects. Entries past the end of `theta` read as zero.
///
/// Slide the strand of `a₂a₁` across one red strand at a time: a passage
/// `p_t s^m` contributes `m(ϑ_t + ϑ_{t-1})`, an extra `q` above it adds
/// `ϑ_{t-1}`, and the total changes sign when the composite bends right.
/// When `a₂` turns back before reaching `T_i`, its `β + r` dots (with `r`
/// the length of the turn) slide on across every red strand up to `T_i`.
pub fn coeff_c(a2: NormalMorphism, a1: NormalMorphism, theta: &[Q]) -> Result<Q, NatError> {
    if a2.source != a1.target {
        return Err(NatError::NotComposable);
    }
    let (i, j, k) = (a1.source, a1.target, a2.target);
    let beta = a2.dots as i64;
    let th = |t: usize| theta.get(t).copied().unwrap_or_else(Q::zero);
    // Mirror image through `j`: step `t` away from `j` towards `i`.
    let toward = |t: usize| if j < i { j + t } else { j - t };
    let span = i.abs_diff(j);
    let c = if span == 0 {
        Q::zero()
    } else {
        let passes_source = if j < i { k >= i } else { k <= i };
        let turn = if passes_source {
            span
        } else if j < i {
            k.saturating_sub(j)
        } else {
            j.saturating_sub(k)
        };
        let mut c = q(beta) * th(j);
        for t in 1..=turn {
            c += q(2 * (beta + t as i64)) * th(toward(t));
        }
        let carried = q(beta + turn as i64);
        if passes_source {
            c -= carried * th(i);
        } else {
            for t in turn + 1..span {
                c += q(2) * carried * th(toward(t));
            }
            c += carried * th(i);
        }
        if j > i {
            -c
        } else {
            c
        }
    };
    Ok(c)
}

/// `𝔔(a₂, a₁)` at braid index `i` for `a₂ = a_{lk}s^β`, `a₁ = a_{kj}s^α`.
pub fn coeff_qq(i: usize, a2: NormalMorphism, a1: NormalMorphism) -> Result<Q, NatError> {
    let prod = compose(a2, a1).ok_or(NatError::NotComposable)?;
    let (j, k) = (a1.source, a1.target);
    let sgn = |a: usize, b: usize| q(klrw_core::sgn(a, b));
    let c = if (k < i && i < j) || (j < i && i < k) {
        sgn(i, k) * q(prod.qdeg() as i64)
    } else if k == i {
        sgn(j, i) * qf(a2.qdeg() as i64, 2)
    } else if j == i {
        sgn(i, k) * qf(prod.qdeg() as i64, 2)
    } else {
        Q::zero()
    };
    Ok(c)
}
