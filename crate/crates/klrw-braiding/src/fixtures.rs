//! Small mapping cones used as sanity checks for twisted complexes.

use klrw_core::{AlgebraElement, NormalMorphism, Q};

use crate::twisted::{Slot, TwComplex};

fn slot(object: usize, degree: i64) -> Slot {
    Slot { object, degree }
}

fn m(x: NormalMorphism) -> AlgebraElement {
    AlgebraElement::basis(x)
}

fn neg(x: NormalMorphism) -> AlgebraElement {
    AlgebraElement::term(x, Q::from_integer(-1))
}

/// `T_2 → T_1` along `q_1`.
pub fn standard_cone() -> TwComplex {
    TwComplex::new(vec![slot(2, -1), slot(1, 0)], vec![(1, 0, m(NormalMorphism::q(1)))]).expect("fixture")
}

/// `T_2 → T_1 ⊕ T_3` along `[q_1, -p_3]`.
pub fn braided_cone() -> TwComplex {
    TwComplex::new(
        vec![slot(2, -1), slot(1, 0), slot(3, 0)],
        vec![(1, 0, m(NormalMorphism::q(1))), (2, 0, neg(NormalMorphism::p(3)))],
    )
    .expect("fixture")
}

/// `T_1 ⊕ T_3 → T_2` along `[p_2, q_2]`.
pub fn merging_cone() -> TwComplex {
    TwComplex::new(
        vec![slot(1, 0), slot(3, 0), slot(2, 1)],
        vec![(2, 0, m(NormalMorphism::p(2))), (2, 1, m(NormalMorphism::q(2)))],
    )
    .expect("fixture")
}

/// The three-term complex `T_2 → T_1 ⊕ T_3 → T_2`.
pub fn i_brane() -> TwComplex {
    TwComplex::new(
        vec![slot(2, -1), slot(1, 0), slot(3, 0), slot(2, 1)],
        vec![
            (1, 0, m(NormalMorphism::q(1))),
            (2, 0, neg(NormalMorphism::p(3))),
            (3, 1, m(NormalMorphism::p(2))),
            (3, 2, m(NormalMorphism::q(2))),
        ],
    )
    .expect("fixture")
}

/// Every fixture, labelled.
pub fn all() -> Vec<(&'static str, TwComplex)> {
    vec![
        ("standard", standard_cone()),
        ("braided", braided_cone()),
        ("merging", merging_cone()),
        ("i-brane", i_brane()),
    ]
}
