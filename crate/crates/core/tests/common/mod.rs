#![allow(dead_code)]

use bwtrun_core::{Morphism, Symbol, Word};

pub fn w(s: &str) -> Word {
    Word::from_letters(s)
}

pub fn m(a: &str, b: &str) -> Morphism {
    Morphism::from_letters(a, b)
}

/// All binary words of length `n`, in lexicographic order.
pub fn binary_words(n: usize) -> impl Iterator<Item = Word> {
    (0u32..(1 << n)).map(move |x| {
        (0..n)
            .map(|i| Symbol(((x >> (n - 1 - i)) & 1) as u8))
            .collect()
    })
}

/// Every injective morphism of `{a, b}` with `|μ(a)| + |μ(b)| ≤ max_size`.
pub fn injective_morphisms(max_size: usize) -> Vec<Morphism> {
    let mut out = Vec::new();
    for lu in 1..max_size {
        for lv in 1..=(max_size - lu) {
            for u in binary_words(lu) {
                for v in binary_words(lv) {
                    let mu = Morphism::binary(u.clone(), v).unwrap();
                    if mu.is_injective_binary().unwrap() {
                        out.push(mu);
                    }
                }
            }
        }
    }
    out
}

/// Morphisms used across the property tests.
pub fn fixtures() -> Vec<(&'static str, Morphism)> {
    vec![
        ("tau", Morphism::thue_morse()),
        ("phi", Morphism::fibonacci()),
        ("phi~", Morphism::fibonacci_tilde()),
        ("E", Morphism::exchange()),
        ("pi", Morphism::period_doubling()),
        ("rho2", Morphism::rho(2)),
        ("rho3", Morphism::rho(3)),
        ("abaa,aaab", m("abaa", "aaab")),
        ("abbaab,ababba", m("abbaab", "ababba")),
        ("a,bab", m("a", "bab")),
        ("ba,ababaa", m("ba", "ababaa")),
        ("abba,b", m("abba", "b")),
        ("baa,abb", m("baa", "abb")),
        ("baa,aba", m("baa", "aba")),
        ("tm12", Morphism::tm_like(1, 2)),
    ]
}
