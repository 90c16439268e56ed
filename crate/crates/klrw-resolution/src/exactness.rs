use std::collections::HashMap;

use klrw_core::linalg::RationalMatrix;
use klrw_core::{NormalMorphism, QuiverConfig};

use crate::ambiguity::{enumerate_s, Ambiguity};
use crate::boundary::boundary_generator;
use crate::element::Tensor;

/// One homogeneous piece `(source, target, 𝔮)` of the resolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slice {
    pub source: usize,
    pub target: usize,
    pub qdeg: usize,
}

/// Homology data of `P_•` at one slice and one homological degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceReport {
    pub slice: Slice,
    pub degree: usize,
    /// `dim ker ∂_n`, with `∂_0` the multiplication map.
    pub rank_kernel: usize,
    /// `rank ∂_{n+1}`.
    pub rank_image: usize,
    /// For `n = 0` this also requires `∂_0` to hit all of `A` in the slice.
    pub exact: bool,
}

/// Basis tensors of `P_n` in a slice.
pub fn slice_basis(cfg: &QuiverConfig, n: usize, slice: Slice) -> Vec<Tensor> {
    let mut out = Vec::new();
    for gen in enumerate_s(n, cfg) {
        let Some(rest) = slice.qdeg.checked_sub(gen.qdeg()) else {
            continue;
        };
        for a in 0..=rest {
            let left = NormalMorphism::with_qdeg(gen.target(), slice.target, a);
            let right = NormalMorphism::with_qdeg(slice.source, gen.source(), rest - a);
            if let (Some(l), Some(r)) = (left, right) {
                out.push(Tensor::new(l, gen, r));
            }
        }
    }
    out
}

struct Differentials {
    cache: HashMap<Ambiguity, crate::element::ResolutionElement>,
}

impl Differentials {
    fn matrix(&mut self, domain: &[Tensor], codomain: &[Tensor]) -> RationalMatrix {
        let index: HashMap<&Tensor, usize> = codomain.iter().enumerate().map(|(k, t)| (t, k)).collect();
        let mut m = RationalMatrix::new(codomain.len());
        for t in domain {
            let d = self
                .cache
                .entry(t.gen)
                .or_insert_with(|| boundary_generator(&t.gen))
                .act(t.left, t.right);
            m.push_entries(d.terms().map(|(u, c)| (index[u], *c)));
        }
        m
    }
}

fn rank_of_multiplication(domain: &[Tensor], codomain: &[NormalMorphism]) -> usize {
    let mut m = RationalMatrix::new(codomain.len());
    for t in domain {
        let prod = klrw_core::compose(t.left, t.right).expect("tensor factors compose");
        let col = codomain
            .iter()
            .position(|c| *c == prod)
            .expect("product stays in the slice");
        m.push_entries([(col, klrw_core::q(1))]);
    }
    m.rank()
}

/// Checks `H_n(P_•) = 0` for `1 ≤ n < max_n` and `H_0(P_•) ≅ A` on every slice
/// with `𝔮 ≤ max_q`.
pub fn check_exactness(cfg: &QuiverConfig, max_n: usize, max_q: usize) -> Vec<SliceReport> {
    assert!(max_n >= 1);
    let mut diffs = Differentials { cache: HashMap::new() };
    let mut out = Vec::new();
    for source in cfg.objects() {
        for target in cfg.objects() {
            for qdeg in 0..=max_q {
                let slice = Slice { source, target, qdeg };
                let bases: Vec<Vec<Tensor>> = (0..=max_n).map(|n| slice_basis(cfg, n, slice)).collect();
                let ranks: Vec<usize> = (1..=max_n)
                    .map(|n| diffs.matrix(&bases[n], &bases[n - 1]).rank())
                    .collect();
                // ranks[n - 1] = rank ∂_n
                let algebra: Vec<NormalMorphism> =
                    NormalMorphism::with_qdeg(source, target, qdeg).into_iter().collect();
                let rank0 = rank_of_multiplication(&bases[0], &algebra);
                let kernel0 = bases[0].len() - rank0;
                out.push(SliceReport {
                    slice,
                    degree: 0,
                    rank_kernel: kernel0,
                    rank_image: ranks[0],
                    exact: kernel0 == ranks[0] && rank0 == algebra.len(),
                });
                for n in 1..max_n {
                    let kernel = bases[n].len() - ranks[n - 1];
                    out.push(SliceReport {
                        slice,
                        degree: n,
                        rank_kernel: kernel,
                        rank_image: ranks[n],
                        exact: kernel == ranks[n],
                    });
                }
            }
        }
    }
    out
}
