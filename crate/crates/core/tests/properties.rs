mod common;

use bwtrun_core::morphism::{compose, OrderClass};
use bwtrun_core::word::rotations;
use bwtrun_core::{
    bwt, bwt_of_power, commute, enumerate_necklaces, inverse_bwt, is_primitive, primitive_root,
    rle, run_count, Alphabet, BifixStatus, Morphism, Symbol, Word,
};
use common::{binary_words, fixtures, m, w};
use proptest::prelude::*;

fn word_strategy(alphabet: u8, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..alphabet, 0..=max_len).prop_map(|v| Word::from_raw(&v))
}

fn nonempty(alphabet: u8, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..alphabet, 1..=max_len).prop_map(|v| Word::from_raw(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn inverse_bwt_round_trips(x in nonempty(2, 64)) {
        let out = bwt(&x).unwrap();
        prop_assert_eq!(inverse_bwt(&out.transformed, out.primary_index).unwrap(), x);
    }

    #[test]
    fn rle_round_trips_long_words(x in word_strategy(3, 200)) {
        prop_assert_eq!(rle(&x).expand(), x);
    }

    #[test]
    fn bwt_keeps_parikh_vector(x in nonempty(3, 80)) {
        let alpha = Alphabet::range(3);
        prop_assert_eq!(bwt(&x).unwrap().transformed.parikh(&alpha), x.parikh(&alpha));
    }

    #[test]
    fn apply_distributes(u in word_strategy(2, 20), v in word_strategy(2, 20), i in 0usize..15) {
        let mu = &fixtures()[i].1;
        prop_assert_eq!(
            mu.apply(&u.concat(&v)).unwrap(),
            mu.apply(&u).unwrap().concat(&mu.apply(&v).unwrap())
        );
    }

    #[test]
    fn compose_then_apply(x in word_strategy(2, 20), i in 0usize..15, j in 0usize..15) {
        let (f, g) = (&fixtures()[i].1, &fixtures()[j].1);
        prop_assert_eq!(
            compose(f, g).unwrap().apply(&x).unwrap(),
            f.apply(&g.apply(&x).unwrap()).unwrap()
        );
    }
}

#[test]
fn rle_round_trips_exhaustively() {
    for n in 0..=16 {
        for x in binary_words(n) {
            let runs = rle(&x);
            assert_eq!(runs.expand(), x);
            assert!(runs.runs.windows(2).all(|p| p[0].0 != p[1].0));
        }
    }
}

#[test]
fn primitive_root_is_sound() {
    for n in 1..=12 {
        for x in binary_words(n) {
            let root = primitive_root(&x).unwrap();
            assert_eq!(root.root.pow(root.exponent), x);
            let z = &root.root;
            for d in 1..z.len() {
                if z.len().is_multiple_of(d) {
                    assert_ne!(z.slice(0, d).pow(z.len() / d), *z);
                }
            }
            let mut distinct = rotations(&x).unwrap();
            distinct.sort();
            distinct.dedup();
            assert_eq!(distinct.len(), x.len() / root.exponent);
            assert_eq!(is_primitive(&x), root.exponent == 1);
        }
    }
}

#[test]
fn commute_iff_same_root() {
    let words: Vec<Word> = (1..=8).flat_map(binary_words).collect();
    for u in &words {
        let ru = primitive_root(u).unwrap().root;
        for v in &words {
            let rv = primitive_root(v).unwrap().root;
            assert_eq!(commute(u, v).unwrap(), ru == rv);
        }
    }
}

#[test]
fn bwt_is_rotation_invariant() {
    for n in 1..=12 {
        for x in binary_words(n) {
            let t = bwt(&x).unwrap().transformed;
            for r in rotations(&x).unwrap() {
                assert_eq!(bwt(&r).unwrap().transformed, t);
            }
        }
    }
}

#[test]
fn powers_transform_letterwise() {
    for n in 1..=8 {
        for z in binary_words(n).filter(is_primitive) {
            for p in 1..=4 {
                let direct = bwt(&z.pow(p)).unwrap();
                assert_eq!(bwt_of_power(&z, p).unwrap(), direct);
                assert_eq!(direct.run_count(), run_count(&z).unwrap());
            }
        }
    }
    assert_eq!(run_count(&w("abaababa").pow(2)).unwrap(), 2);
}

#[test]
fn sturmian_images_have_two_runs() {
    let phi = Morphism::fibonacci();
    let phi_t = Morphism::fibonacci_tilde();
    let e = Morphism::exchange();
    let chain = [
        phi.clone(),
        phi_t.clone(),
        compose(&phi, &phi_t).unwrap(),
        compose(&e, &phi).unwrap(),
    ];
    for mu in &chain {
        for c in [w("a"), w("b")] {
            let img = mu.apply(&c).unwrap();
            if img.is_single_letter_power() {
                continue;
            }
            for l in 1..=3 {
                assert_eq!(run_count(&img.pow(l)).unwrap(), 2, "{mu:?} {img:?}");
            }
        }
    }
}

#[test]
fn necklaces_partition_small_lengths() {
    for n in 1..=10 {
        let total: usize = enumerate_necklaces(&Alphabet::binary(), n)
            .map(|x| x.len() / primitive_root(&x).unwrap().exponent)
            .sum();
        assert_eq!(total, 1 << n);
    }
}

#[test]
fn abelian_order_is_decisive() {
    let mut pairs = Vec::new();
    for n in 2..=10 {
        let words: Vec<Word> = binary_words(n).collect();
        for (i, x) in words.iter().enumerate() {
            for y in &words[i + 1..] {
                if x.count(Symbol(0)) == y.count(Symbol(0)) {
                    pairs.push((x.clone(), y.clone()));
                }
            }
        }
        if n >= 8 {
            // quadratic in 2ⁿ; thin out the longest lengths
            pairs.retain(|(x, _)| x.len() < n || x.as_slice()[..3] == [Symbol(0); 3]);
        }
    }
    for (name, mu) in fixtures() {
        if mu.is_cyclic().is_some() {
            continue;
        }
        let class = mu.abelian_order_class().unwrap();
        for (x, y) in &pairs {
            let (fx, fy) = (mu.apply(x).unwrap(), mu.apply(y).unwrap());
            match class {
                OrderClass::Preserving => assert!(fx < fy, "{name} {x:?} {y:?}"),
                OrderClass::Reversing => assert!(fx > fy, "{name} {x:?} {y:?}"),
            }
        }
    }
    assert_eq!(
        Morphism::rho(3).abelian_order_class().unwrap(),
        OrderClass::Preserving
    );
    assert_eq!(
        Morphism::exchange().abelian_order_class().unwrap(),
        OrderClass::Reversing
    );
    assert_eq!(
        Morphism::thue_morse().abelian_order_class().unwrap(),
        OrderClass::Preserving
    );
}

#[test]
fn peeling_round_trips() {
    for mu in common::injective_morphisms(8) {
        let bifix = mu.bifix_status().unwrap() == BifixStatus::Bifix;
        match mu.peel_elementary().unwrap() {
            Some(step) => {
                assert!(!bifix);
                let chi = step.elementary.morphism(mu.source()).unwrap();
                assert_eq!(compose(&step.outer, &chi).unwrap(), mu);
                assert!(step.outer.size() < mu.size());
            }
            None => assert!(bifix, "{mu:?}"),
        }
    }
}

#[test]
fn tau_factorisations_recompose() {
    let tau = Morphism::thue_morse();
    for mu in common::injective_morphisms(8) {
        if let Some(psi) = mu.factor_through_tau().unwrap() {
            let back = compose(&psi, &tau).unwrap();
            assert_eq!(back, mu);
        }
    }
    assert_eq!(m("baa", "abb").factor_through_tau().unwrap(), None);
}
