mod common;

use bwtrun_core::primitivity::is_recognizable;
use bwtrun_core::sync::{
    decide_sync_finite_delay, find_sync_pairs, sync_delay_for_word, sync_delay_for_word_in,
    sync_splits, LanguageDescriptor,
};
use bwtrun_core::{circular_factors, Morphism, Word};
use common::{binary_words, injective_morphisms, m, w};

/// Splits of `x` that fall on a codeword boundary in every occurrence of `x`
/// in `μ(f)`, `f` ranging over `contexts`.
fn brute_force_splits(x: &Word, mu: &Morphism, contexts: &[Word]) -> Vec<usize> {
    let mut alive = vec![true; x.len() + 1];
    for f in contexts {
        let image = mu.apply(f).unwrap();
        let mut boundary = vec![false; image.len() + 1];
        let mut pos = 0;
        boundary[0] = true;
        for c in f.iter() {
            pos += mu.image(c).unwrap().len();
            boundary[pos] = true;
        }
        let (s, xs) = (image.as_slice(), x.as_slice());
        if xs.len() > s.len() {
            continue;
        }
        for t in 0..=s.len() - xs.len() {
            if &s[t..t + xs.len()] == xs {
                for j in 0..=xs.len() {
                    alive[j] &= boundary[t + j];
                }
            }
        }
    }
    (0..=x.len()).filter(|&j| alive[j]).collect()
}

#[test]
fn splits_match_context_enumeration_over_all_words() {
    let mut mus = injective_morphisms(5);
    mus.extend([
        m("baa", "abb"),
        m("baa", "aba"),
        m("a", "bab"),
        m("abba", "b"),
    ]);
    for mu in &mus {
        let shortest = mu.images().iter().map(Word::len).min().unwrap();
        let max_x = 7;
        let contexts: Vec<Word> = (1..=max_x / shortest + 2).flat_map(binary_words).collect();
        for len in 1..=max_x {
            for x in binary_words(len) {
                let got = sync_splits(&x, mu, &LanguageDescriptor::FullBinary).unwrap();
                assert_eq!(got, brute_force_splits(&x, mu, &contexts), "{mu:?} {x:?}");
            }
        }
    }
}

#[test]
fn splits_match_context_enumeration_over_word_lists() {
    let lists = [
        vec![w("aab")],
        vec![w("abbaab"), w("aaab")],
        vec![w("ab").pow(3)],
    ];
    for mu in [
        Morphism::thue_morse(),
        m("baa", "aba"),
        Morphism::fibonacci(),
    ] {
        for list in &lists {
            let contexts: Vec<Word> = list
                .iter()
                .flat_map(|l| (1..=l.len()).flat_map(move |k| circular_factors(l, k).unwrap()))
                .collect();
            let scope = LanguageDescriptor::FiniteList(list.clone());
            for len in 1..=6 {
                for x in binary_words(len) {
                    let got = sync_splits(&x, &mu, &scope).unwrap();
                    assert_eq!(got, brute_force_splits(&x, &mu, &contexts), "{mu:?} {x:?}");
                }
            }
        }
    }
}

#[test]
fn bounded_runs_scope_matches_enumeration() {
    let scope = LanguageDescriptor::BoundedLetterRuns {
        max_a: Some(2),
        max_b: Some(2),
    };
    let contexts: Vec<Word> = (1..=7)
        .flat_map(binary_words)
        .filter(|f| !f.contains_factor(&w("aaa")) && !f.contains_factor(&w("bbb")))
        .collect();
    let tau = Morphism::thue_morse();
    for len in 1..=7 {
        for x in binary_words(len) {
            let got = sync_splits(&x, &tau, &scope).unwrap();
            assert_eq!(got, brute_force_splits(&x, &tau, &contexts), "{x:?}");
        }
    }
}

#[test]
fn delay_is_monotone_and_tight() {
    let words = [w("aab"), w("aaab"), w("abbaab"), w("aabab"), w("abb")];
    for mu in [
        Morphism::thue_morse(),
        m("baa", "abb"),
        m("baa", "aba"),
        Morphism::fibonacci(),
    ] {
        for x in &words {
            let image = mu.apply(x).unwrap();
            let Some(k) = sync_delay_for_word(&mu, x).unwrap() else {
                continue;
            };
            for len in k..=image.len() {
                for f in circular_factors(&image, len).unwrap() {
                    assert!(!find_sync_pairs(&f, &mu, &LanguageDescriptor::FullBinary)
                        .unwrap()
                        .is_empty());
                }
            }
            if k > 1 {
                let stuck = circular_factors(&image, k - 1)
                    .unwrap()
                    .into_iter()
                    .any(|f| {
                        find_sync_pairs(&f, &mu, &LanguageDescriptor::FullBinary)
                            .unwrap()
                            .is_empty()
                    });
                assert!(stuck, "{mu:?} {x:?}");
            }
        }
    }
}

#[test]
fn recognizable_codes_synchronize_within_a_codeword() {
    let mu = m("baa", "abb");
    for x in [w("a"), w("b")] {
        let own = LanguageDescriptor::FiniteList(vec![x.clone()]);
        let k = sync_delay_for_word_in(&mu, &x, &own).unwrap().unwrap();
        assert!(k <= 3, "{x:?}: {k}");
    }
    assert_eq!(
        sync_delay_for_word_in(&mu, &w("a"), &LanguageDescriptor::FiniteList(vec![w("a")]))
            .unwrap(),
        Some(2)
    );
    // over all contexts aab sits in (baa)(abb) and in (baa)(baa) with
    // different boundaries
    assert_eq!(sync_delay_for_word(&mu, &w("a")).unwrap(), None);
    for x in [w("ab"), w("aabb"), w("abaabb")] {
        assert!(sync_delay_for_word(&mu, &x).unwrap().is_some(), "{x:?}");
    }
}

#[test]
fn full_language_decision_is_recognizability() {
    for mu in injective_morphisms(7) {
        let d = decide_sync_finite_delay(&mu, &LanguageDescriptor::FullBinary).unwrap();
        assert_eq!(
            d.finite_delay,
            is_recognizable(&mu).unwrap().recognizable,
            "{mu:?}"
        );
    }
}

#[test]
fn thue_morse_figure_words() {
    let tau = Morphism::thue_morse();
    // (ab)⁵ba: the aa and bb boundaries synchronize
    let image = tau.apply(&w("aaaaab")).unwrap();
    assert_eq!(image, w("ab").pow(5).concat(&w("ba")));
    let bb = w("bb");
    assert_eq!(
        find_sync_pairs(&bb, &tau, &LanguageDescriptor::FullBinary).unwrap()[0].split,
        1
    );
    let abab = w("ab").pow(3);
    let list = LanguageDescriptor::FiniteList(vec![w("a").pow(6), w("b").pow(6)]);
    assert!(find_sync_pairs(&abab, &tau, &list).unwrap().is_empty());
}
