use std::collections::BTreeSet;

use super::*;
use crate::words::{all_words, leq, Word};

fn w(s: &str, d: usize) -> Word {
    Word::parse(s, d).unwrap()
}

/// Every composable sequence of splitting generators from μ to λ, by
/// forward search, reduced to the set of distinct normal forms.
fn brute_up(mu: &Word, lambda: &Word) -> BTreeSet<Vec<ElementaryUp>> {
    let steps = lambda.degree_up() - mu.degree_up();
    let mut out = BTreeSet::new();
    if steps < 0 {
        return out;
    }
    let mut layer: Vec<(Word, Vec<ElementaryUp>)> = vec![(lambda.clone(), vec![])];
    for _ in 0..steps {
        let mut next = Vec::new();
        for (cur, seq) in layer {
            for g in up_generators_into(&cur) {
                let mut s = vec![g.clone()];
                s.extend(seq.iter().cloned());
                next.push((g.source(), s));
            }
        }
        layer = next;
    }
    for (cur, seq) in layer {
        if cur == *mu {
            out.insert(normal_form_up(&seq).unwrap());
        }
    }
    out
}

#[test]
fn parallel_splits_into_long_word() {
    let d = 2;
    let mu = w("r1*r1", d);
    let lambda = w("r1*r1*r2^-1*r1*r1", d);
    let gens = up_generators_into(&lambda);
    assert_eq!(gens.len(), 2);
    assert!(gens.iter().all(|g| g.source() == mu));
    assert_eq!(count_up(&mu, &lambda), 2);
    assert_eq!(enumerate_up(&mu, &lambda).len(), 2);
    // After the split r2 → r1 r1 the two become equal.
    let phi = ElementaryUp::new(Word::unit(d), 1, 1, Word::unit(d)).unwrap();
    let a = normal_form_up(&[phi.clone(), gens[0].clone()]).unwrap();
    let b = normal_form_up(&[phi, gens[1].clone()]).unwrap();
    assert_eq!(a, b);
}

#[test]
fn counts_agree_with_enumeration_and_brute_force() {
    for (d, len) in [(2, 4), (3, 3)] {
        let words = all_words(d, len);
        let mut counter = HomCounter::new();
        for mu in &words {
            for lambda in &words {
                let n = counter.count_up(mu, lambda);
                let e = enumerate_up(mu, lambda);
                assert_eq!(
                    n as usize,
                    e.len(),
                    "{} -> {}",
                    mu.display(),
                    lambda.display()
                );
                if lambda.len() <= 4 {
                    let b = brute_up(mu, lambda);
                    assert_eq!(
                        b.len(),
                        e.len(),
                        "brute {} -> {}",
                        mu.display(),
                        lambda.display()
                    );
                    assert_eq!(b, e.into_iter().collect());
                }
                assert_eq!(
                    n > 0,
                    leq(mu, lambda).unwrap() && up_sources(lambda).contains(mu)
                );
            }
        }
    }
}

#[test]
fn enumerated_sequences_are_normal() {
    let d = 3;
    let lambda = w("r1*r1*r1*r1", d);
    for mu in up_sources(&lambda) {
        for seq in enumerate_up(&mu, &lambda) {
            assert!(is_normal(Orientation::Standard, &seq));
            assert_eq!(normal_form_up(&seq).unwrap(), seq);
        }
    }
}

#[test]
fn standard_orientation_converges() {
    for d in 2..=3 {
        let r = confluence_check(d, 2, Orientation::Standard);
        assert!(r.overlaps > 0);
        assert!(r.is_convergent(), "{r:?}");
    }
}

#[test]
fn flipped_orientations_fail() {
    for o in [
        Orientation::FlippedAssociativity,
        Orientation::FlippedCommutation,
    ] {
        let r = confluence_check(3, 2, o);
        eprintln!("{o:?}: {r:?}");
        assert!(!r.is_convergent(), "{o:?}: {r:?}");
    }
}

#[test]
fn relations_hold_after_normalization() {
    for d in 2..=4 {
        let mut kinds = BTreeSet::new();
        for r in relation_instances(d, 1)
            .iter()
            .chain(snake_instances(d).iter())
        {
            let l = Morphism::from_generators(&r.source, &r.lhs).unwrap();
            let rr = Morphism::from_generators(&r.source, &r.rhs).unwrap();
            assert_eq!(l, rr, "{:?} at {}", r.kind, r.source.display());
            kinds.insert(format!("{:?}", r.kind));
        }
        if d >= 3 {
            assert_eq!(kinds.len(), 6, "{kinds:?}");
        }
    }
}

#[test]
fn generator_dualities_are_inverse() {
    for d in 2..=3 {
        for lambda in all_words(d, 4) {
            for g in up_generators_into(&lambda) {
                assert_eq!(g.dual_right().dual_left(), g);
                assert_eq!(g.dual_left().dual_right(), g);
                assert_eq!(g.dual_right().source(), g.target().dual_right());
                assert_eq!(g.dual_right().target(), g.source().dual_right());
            }
            for g in down_generators_outof(&lambda) {
                assert_eq!(g.dual_right().dual_left(), g);
                assert_eq!(g.dual_left().dual_right(), g);
                assert_eq!(g.dual_left().source(), g.target().dual_left());
            }
        }
    }
}

#[test]
fn hom_counts_match_enumeration_and_duality() {
    let d = 2;
    let words = all_words(d, 3);
    let mut counter = HomCounter::new();
    for mu in &words {
        for nu in &words {
            let n = counter.hom_count(mu, nu);
            let all = hom_enumerate(mu, nu).unwrap();
            assert_eq!(n as usize, all.len());
            assert_eq!(n, counter.hom_count(&nu.dual_right(), &mu.dual_right()));
            for f in &all {
                assert_eq!(f.source(), mu);
                assert_eq!(f.target(), nu);
                let g = f.dual_right();
                assert_eq!(g.dual_left(), *f);
            }
        }
    }
}

#[test]
fn small_hom_sets() {
    let d = 2;
    let one = Word::unit(d);
    // End(1) is trivial, Hom(1, r2^-1 r1 r1) = {η}, Hom(r1 r1, r2) is empty.
    assert_eq!(hom_count(&one, &one).unwrap(), 1);
    assert_eq!(hom_count(&one, &w("r2^-1*r1*r1", d)).unwrap(), 1);
    assert_eq!(hom_count(&w("r1*r1", d), &w("r2", d)).unwrap(), 0);
    assert_eq!(hom_count(&w("r2", d), &w("r1*r1", d)).unwrap(), 1);
    // End(r1 r1) is just the identity: nothing maps r1 r1 down to r2.
    assert_eq!(hom_count(&w("r1*r1", d), &w("r1*r1", d)).unwrap(), 1);
}

#[test]
fn composition_is_associative() {
    let d = 2;
    let words = all_words(d, 3);
    let mut maps = Vec::new();
    for mu in &words {
        for nu in &words {
            maps.extend(hom_enumerate(mu, nu).unwrap());
        }
    }
    let mut checked = 0;
    for f in &maps {
        for g in maps.iter().filter(|g| g.source() == f.target()).take(3) {
            for h in maps.iter().filter(|h| h.source() == g.target()).take(3) {
                let left = f.then(g).unwrap().then(h).unwrap();
                let right = f.then(&g.then(h).unwrap()).unwrap();
                assert_eq!(left, right);
                checked += 1;
            }
        }
    }
    assert!(checked > 50);
}

#[test]
fn fiber_product_legs_commute() {
    for d in 2..=3 {
        for lambda in all_words(d, 4) {
            let gens = up_generators_into(&lambda);
            for f in &gens {
                for g in &gens {
                    match fiber_product_up(f, g).unwrap() {
                        FiberProduct::Star => {
                            let (l, r) = if f.position() < g.position() {
                                (f, g)
                            } else {
                                (g, f)
                            };
                            assert_eq!(r.position(), l.position() + 1);
                            assert!(l.a() + l.b() + r.b() > d);
                        }
                        FiberProduct::Square {
                            source,
                            first_leg,
                            second_leg,
                        } => {
                            assert_eq!(first_leg.source(), &source);
                            let x = first_leg.then(&Morphism::from_up(f)).unwrap();
                            let y = second_leg.then(&Morphism::from_up(g)).unwrap();
                            assert_eq!(x, y);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn morphism_text_round_trip() {
    let d = 3;
    let mu = w("r2*r3^-1*r2", d);
    let nu = w("r1*r1*r1", d);
    for f in hom_enumerate(&mu, &nu).unwrap() {
        let text = f
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        assert_eq!(Morphism::parse(&mu, &text).unwrap(), f);
    }
}

#[test]
fn invalid_generators_are_rejected() {
    let d = 2;
    assert!(ElementaryUp::new(Word::unit(d), 2, 1, Word::unit(d)).is_err());
    assert!(ElementaryDown::new(Word::unit(d), 1, 0, Word::unit(d)).is_err());
    assert!(ElementaryDown::new(Word::unit(3), 1, 1, Word::unit(3)).is_err());
    let g = ElementaryUp::new(Word::unit(d), 1, 1, Word::unit(d)).unwrap();
    assert!(normal_form_up(&[g.clone(), g]).is_err());
}
