use std::collections::HashMap;

use klrw_bimodules::Bimodule;
use klrw_core::linalg::RationalMatrix;
use klrw_core::QuiverConfig;
use klrw_resolution::{boundary_generator, enumerate_s};

use crate::cochain::Coordinate;

/// Coordinates of `Hom(P_n, M)` in internal degree `d`. Every generator
/// contributes at most one, since each graded piece of `M(T_j, T_k)` is at
/// most one dimensional.
pub fn slice_coordinates(cfg: &QuiverConfig, module: Bimodule, n: usize, d: i64) -> Vec<Coordinate> {
    enumerate_s(n, cfg)
        .into_iter()
        .filter_map(|gen| {
            let qdeg = gen.qdeg() as i64 - d;
            if qdeg < 0 {
                return None;
            }
            let value = module.basis_at(gen.source(), gen.target(), qdeg as usize)?;
            Some(Coordinate { gen, value })
        })
        .collect()
}

/// The matrix of `d_n` on the degree `d` slice: columns indexed by
/// [`slice_coordinates`] in degree `n`, rows by those in degree `n + 1`.
pub fn d_matrix(cfg: &QuiverConfig, module: Bimodule, n: usize, d: i64) -> RationalMatrix {
    let cols = slice_coordinates(cfg, module, n, d);
    let index: HashMap<_, _> = cols.iter().enumerate().map(|(k, c)| (c.gen, (k, c.value))).collect();
    let mut m = RationalMatrix::new(cols.len());
    for row in slice_coordinates(cfg, module, n + 1, d) {
        let mut entries = Vec::new();
        for (t, c) in boundary_generator(&row.gen).terms() {
            let Some(&(k, value)) = index.get(&t.gen) else {
                continue;
            };
            if let Some(image) = module.act(t.left, value, t.right) {
                debug_assert_eq!(image, row.value);
                entries.push((k, *c));
            }
        }
        m.push_entries(entries);
    }
    m
}

/// `dim HH^n(M)` in internal degree `d`.
pub fn hh_dim(cfg: &QuiverConfig, module: Bimodule, n: usize, d: i64) -> usize {
    let dim = slice_coordinates(cfg, module, n, d).len();
    let outgoing = d_matrix(cfg, module, n, d).rank();
    let incoming = if n == 0 {
        0
    } else {
        d_matrix(cfg, module, n - 1, d).rank()
    };
    dim - outgoing - incoming
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HhEntry {
    pub n: usize,
    pub d: i64,
    pub dim: usize,
}

/// Every nonzero `dim HH^n_d(M)` for `n ≤ max_n` and `d` in `d_range`.
pub fn hh_table(
    cfg: &QuiverConfig,
    module: Bimodule,
    max_n: usize,
    d_range: std::ops::RangeInclusive<i64>,
) -> Vec<HhEntry> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for d in d_range.clone() {
            let dim = hh_dim(cfg, module, n, d);
            if dim > 0 {
                out.push(HhEntry { n, d, dim });
            }
        }
    }
    out
}

/// `Σ_d dim HH^n_d(M)` over `d_range`.
pub fn hh_total(cfg: &QuiverConfig, module: Bimodule, n: usize, d_range: std::ops::RangeInclusive<i64>) -> usize {
    d_range.map(|d| hh_dim(cfg, module, n, d)).sum()
}
