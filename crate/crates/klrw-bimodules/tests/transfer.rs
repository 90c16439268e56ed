use klrw_bimodules::{bar_boundary, bar_multiply, transfer, transfer_unit, BarElement, BarTensor, RecursiveTransfer};
use klrw_core::rewrite::precedes;
use klrw_core::{q, NormalMorphism, QuiverConfig};
use klrw_resolution::{boundary, multiply, Ambiguity, Family, ResolutionElement, Tensor};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn a(target: usize, source: usize, dots: usize) -> NormalMorphism {
    NormalMorphism::new(target, source, dots)
}

#[test]
fn four_fold_example_has_eleven_terms() {
    let middle = [a(3, 0, 1), a(0, 4, 0), a(4, 1, 2), a(1, 4, 1)];
    let got = transfer_unit(&middle);
    let sq = |i: usize| Ambiguity::chain(Family::Q, true, i, 4);
    let p = |i: usize| Ambiguity::chain(Family::P, false, i - 1, 4);
    let e = NormalMorphism::idempotent;
    let expected_terms = [
        (a(3, 1, 1), sq(1), a(2, 4, 5)),
        (a(3, 1, 0), sq(1), a(2, 4, 6)),
        (a(3, 2, 0), p(2), a(2, 4, 7)),
        (a(3, 2, 2), sq(2), a(3, 4, 5)),
        (a(3, 2, 1), sq(2), a(3, 4, 6)),
        (a(3, 2, 0), sq(2), a(3, 4, 7)),
        (e(3), p(3), a(3, 4, 8)),
        (a(3, 3, 3), sq(3), a(4, 4, 5)),
        (a(3, 3, 2), sq(3), a(4, 4, 6)),
        (a(3, 3, 1), sq(3), a(4, 4, 7)),
        (e(3), sq(3), a(4, 4, 8)),
    ];
    let mut expected = ResolutionElement::zero(4);
    for (l, g, r) in expected_terms {
        expected.add_term(Tensor::new(l, g, r), q(1));
    }
    assert_eq!(got, expected, "got {got}");
}

fn random_bar(rng: &mut ChaCha8Rng, punctures: usize, degree: usize, max_dots: usize) -> BarElement {
    let mut out = BarElement::zero(degree);
    for _ in 0..rng.gen_range(1..=3) {
        let mut objs: Vec<usize> = (0..=degree + 2).map(|_| rng.gen_range(0..=punctures)).collect();
        let mut middle = Vec::with_capacity(degree);
        for k in 1..=degree {
            let (t, s) = (objs[k], objs[k + 1]);
            let mut dots = rng.gen_range(0..=max_dots);
            if t == s && dots == 0 {
                dots = 1;
            }
            middle.push(a(t, s, dots));
        }
        let left = a(objs[0], objs[1], rng.gen_range(0..=max_dots));
        let right = a(objs[degree + 1], objs[degree + 2], rng.gen_range(0..=max_dots));
        objs.clear();
        let t = BarTensor::new(left, middle, right).unwrap();
        out.add_term(t, q(rng.gen_range(-3..=3)));
    }
    out
}

#[test]
fn transfer_is_a_chain_map() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for punctures in 1..=5 {
        for degree in 1..=4 {
            for _ in 0..12 {
                let x = random_bar(&mut rng, punctures, degree, 3);
                let lhs = boundary(&transfer(&x)).unwrap();
                let rhs = transfer(&bar_boundary(&x).unwrap());
                assert_eq!(lhs, rhs, "on {x}");
            }
        }
    }
}

#[test]
fn transfer_lifts_multiplication() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for punctures in 1..=4 {
        for _ in 0..20 {
            let x = random_bar(&mut rng, punctures, 0, 3);
            assert_eq!(multiply(&transfer(&x)).unwrap(), bar_multiply(&x));
        }
    }
}

#[test]
fn closed_form_matches_recursion() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut rec = RecursiveTransfer::new();
    for punctures in 1..=4 {
        for degree in 1..=4 {
            for _ in 0..10 {
                let x = random_bar(&mut rng, punctures, degree, 2);
                assert_eq!(transfer(&x), rec.apply(&x).unwrap(), "on {x}");
            }
        }
    }
}

#[test]
fn bar_boundary_squares_to_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for punctures in 1..=4 {
        for degree in 2..=5 {
            for _ in 0..10 {
                let x = random_bar(&mut rng, punctures, degree, 3);
                let dd = bar_boundary(&bar_boundary(&x).unwrap()).unwrap();
                assert!(dd.is_zero(), "on {x}: {dd}");
            }
        }
        for _ in 0..10 {
            let x = random_bar(&mut rng, punctures, 1, 3);
            assert!(bar_multiply(&bar_boundary(&x).unwrap()).is_zero());
        }
    }
}

#[test]
fn transfer_terms_lie_below_the_input_word() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let cfg = QuiverConfig::new(4).unwrap();
    for degree in 1..=4 {
        for _ in 0..10 {
            let x = random_bar(&mut rng, cfg.punctures(), degree, 2);
            for (t, _) in x.terms() {
                let mut top = Vec::new();
                for m in &t.middle {
                    top.extend(m.word().letters().iter().copied());
                }
                for (u, _) in transfer_unit(&t.middle).terms() {
                    let mut w = u.left.word().letters().to_vec();
                    w.extend(u.gen.letters());
                    w.extend(u.right.word().letters().iter().copied());
                    assert!(precedes(&w, &top), "{u} not below {}", t);
                }
            }
        }
    }
}
