use klrw_core::path::Arrow;
use klrw_core::{AlgebraElement, NormalMorphism, Q};

use crate::ambiguity::{Ambiguity, Family};
use crate::element::{ResolutionElement, Tensor};
use crate::error::ResolutionError;

fn arrow_morphism(a: Arrow) -> NormalMorphism {
    klrw_core::rewrite::evaluate(&[a], a.source())
}

/// Letters of a strand: `x` starts an undotted chain of the family, `y` is the
/// other crossing, `s` is the dot of the dotted chain.
struct Letters {
    x: NormalMorphism,
    y: NormalMorphism,
    s: NormalMorphism,
}

fn letters(family: Family, strand: usize) -> Letters {
    let (q, p) = (NormalMorphism::q(strand), NormalMorphism::p(strand + 1));
    match family {
        Family::Q => Letters {
            x: q,
            y: p,
            s: NormalMorphism::s(strand),
        },
        Family::P => Letters {
            x: p,
            y: q,
            s: NormalMorphism::s(strand + 1),
        },
    }
}

struct Builder(ResolutionElement);

impl Builder {
    fn push(&mut self, sign: i64, left: Option<NormalMorphism>, gen: Ambiguity, right: Option<NormalMorphism>) {
        let left = left.unwrap_or(NormalMorphism::idempotent(gen.target()));
        let right = right.unwrap_or(NormalMorphism::idempotent(gen.source()));
        self.0.add_term(Tensor::new(left, gen, right), Q::from_integer(sign));
    }
}

/// `∂_n(1 ⊗ gen ⊗ 1)` in closed form, for `n ≥ 1`.
pub fn boundary_generator(gen: &Ambiguity) -> ResolutionElement {
    let n = gen.len();
    assert!(n >= 1, "degree 0 generators map to the algebra");
    let mut b = Builder(ResolutionElement::zero(n - 1));
    match *gen {
        Ambiguity::Vertex(_) => unreachable!(),
        Ambiguity::Arrow(a) => {
            let w = arrow_morphism(a);
            b.push(1, None, Ambiguity::Vertex(a.target()), Some(w));
            b.push(-1, Some(w), Ambiguity::Vertex(a.source()), None);
        }
        Ambiguity::Chain {
            family,
            dotted,
            strand,
            len,
        } => {
            let m = len - 1;
            let l = letters(family, strand);
            let lm = letters(family.mirror(), strand);
            let same = Ambiguity::chain(family, false, strand, m);
            let same_dotted = Ambiguity::chain(family, true, strand, m);
            let other = Ambiguity::chain(family.mirror(), false, strand, m);
            let other_dotted = Ambiguity::chain(family.mirror(), true, strand, m);
            let even = len % 2 == 0;
            match (dotted, even) {
                (false, true) => {
                    b.push(1, None, same, Some(l.y));
                    b.push(1, Some(l.x), other, None);
                    b.push(-1, None, same_dotted, None);
                }
                (false, false) => {
                    b.push(1, None, same, Some(l.x));
                    b.push(-1, Some(l.x), other, None);
                    b.push(1, None, same_dotted, None);
                }
                (true, true) => {
                    b.push(1, None, same_dotted, Some(l.x));
                    b.push(1, Some(l.s), same, None);
                    b.push(-1, Some(l.x), other_dotted, None);
                    b.push(-1, None, same, Some(lm.s));
                }
                (true, false) => {
                    b.push(1, None, same_dotted, Some(l.y));
                    b.push(-1, Some(l.s), same, None);
                    b.push(1, Some(l.x), other_dotted, None);
                    b.push(1, None, same, Some(l.s));
                }
            }
        }
    }
    b.0
}

/// `∂_n` for `n ≥ 1`, extended as a bimodule map.
pub fn boundary(x: &ResolutionElement) -> Result<ResolutionElement, ResolutionError> {
    boundary_with(x, boundary_generator)
}

/// Extends a generator-level map bilinearly over `x`.
pub fn boundary_with<F>(x: &ResolutionElement, mut on_gen: F) -> Result<ResolutionElement, ResolutionError>
where
    F: FnMut(&Ambiguity) -> ResolutionElement,
{
    if x.degree() == 0 {
        return Err(ResolutionError::DegreeMismatch { expected: 1, found: 0 });
    }
    let mut out = ResolutionElement::zero(x.degree() - 1);
    for (t, c) in x.terms() {
        let image = on_gen(&t.gen).act(t.left, t.right).scale(*c);
        out += &image;
    }
    Ok(out)
}

/// `∂_0(x ⊗ e ⊗ y) = xy`.
pub fn multiply(x: &ResolutionElement) -> Result<AlgebraElement, ResolutionError> {
    if x.degree() != 0 {
        return Err(ResolutionError::DegreeMismatch {
            expected: 0,
            found: x.degree(),
        });
    }
    let mut out = AlgebraElement::zero();
    for (t, c) in x.terms() {
        let m = klrw_core::compose(t.left, t.right).expect("tensor factors compose");
        out.add_term(m, *c);
    }
    Ok(out)
}
