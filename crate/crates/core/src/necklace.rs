//! Necklace enumeration (Fredricksen-Kessler-Maiorana successor rule).
//!
//! Each conjugacy class of `Σⁿ` is visited exactly once through its least
//! rotation, in increasing lexicographic order.

use alloc::vec;
use alloc::vec::Vec;

use crate::word::{Alphabet, Symbol, Word};

/// Iterator over the necklaces of length `n` over an alphabet.
#[derive(Clone, Debug)]
pub struct Necklaces {
    symbols: Vec<Symbol>,
    // 1-based digits; a[0] is a sentinel
    a: Vec<usize>,
    n: usize,
    pending: bool,
    period: usize,
}

/// A necklace together with its period, so callers can tell Lyndon words apart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Necklace {
    pub word: Word,
    pub period: usize,
}

impl Necklace {
    pub fn is_lyndon(&self) -> bool {
        self.period == self.word.len()
    }
}

impl Necklaces {
    pub fn new(alphabet: &Alphabet, n: usize) -> Self {
        Necklaces {
            symbols: alphabet.symbols().to_vec(),
            a: vec![0; n + 1],
            n,
            pending: n >= 1,
            period: 1,
        }
    }

    fn current(&self) -> Necklace {
        Necklace {
            word: self.a[1..].iter().map(|&d| self.symbols[d]).collect(),
            period: self.period,
        }
    }

    /// Advance to the next prenecklace; false when exhausted.
    fn advance(&mut self) -> bool {
        let k = self.symbols.len();
        let n = self.n;
        let mut i = n;
        while i > 0 && self.a[i] == k - 1 {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        self.a[i] += 1;
        for j in i + 1..=n {
            self.a[j] = self.a[j - i];
        }
        self.period = i;
        true
    }
}

impl Iterator for Necklaces {
    type Item = Necklace;

    fn next(&mut self) -> Option<Necklace> {
        if self.pending {
            self.pending = false;
            return Some(self.current());
        }
        if self.n == 0 {
            return None;
        }
        while self.advance() {
            if self.n.is_multiple_of(self.period) {
                return Some(self.current());
            }
        }
        self.n = 0;
        None
    }
}

/// Necklaces of length `n` (one canonical word per rotation class).
pub fn enumerate_necklaces(alphabet: &Alphabet, n: usize) -> impl Iterator<Item = Word> {
    Necklaces::new(alphabet, n).map(|nk| nk.word)
}

/// Lyndon words (primitive necklaces) of length `n`.
pub fn enumerate_lyndon(alphabet: &Alphabet, n: usize) -> impl Iterator<Item = Word> {
    Necklaces::new(alphabet, n)
        .filter(Necklace::is_lyndon)
        .map(|nk| nk.word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::canonical_rotation;
    use alloc::collections::BTreeSet;

    fn letters(ws: &[Word]) -> Vec<Word> {
        ws.to_vec()
    }

    #[test]
    fn binary_small_counts() {
        let b = Alphabet::binary();
        let two: Vec<_> = enumerate_necklaces(&b, 2).collect();
        assert_eq!(
            letters(&two),
            vec![
                Word::from_letters("aa"),
                Word::from_letters("ab"),
                Word::from_letters("bb")
            ]
        );
        let five: Vec<_> = enumerate_necklaces(&b, 5).collect();
        assert_eq!(five.len(), 8);
        let non_constant: Vec<_> = five
            .iter()
            .filter(|w| !w.is_single_letter_power())
            .cloned()
            .collect();
        let expected: Vec<_> = ["aaaab", "aaabb", "aabab", "aabbb", "ababb", "abbbb"]
            .iter()
            .map(|s| Word::from_letters(s))
            .collect();
        assert_eq!(non_constant, expected);
    }

    /// (1/n) Σ_{d|n} φ(n/d) k^d
    fn burnside(k: u64, n: u64) -> u64 {
        fn phi(mut m: u64) -> u64 {
            let mut r = m;
            let mut p = 2;
            while p * p <= m {
                if m.is_multiple_of(p) {
                    while m.is_multiple_of(p) {
                        m /= p;
                    }
                    r -= r / p;
                }
                p += 1;
            }
            if m > 1 {
                r -= r / m;
            }
            r
        }
        (1..=n)
            .filter(|d| n.is_multiple_of(*d))
            .map(|d| phi(n / d) * k.pow(d as u32))
            .sum::<u64>()
            / n
    }

    #[test]
    fn counts_match_burnside() {
        assert_eq!(burnside(2, 6), 14);
        for n in 1..=12 {
            let got = enumerate_necklaces(&Alphabet::binary(), n).count() as u64;
            assert_eq!(got, burnside(2, n as u64), "n = {n}");
        }
        for n in 1..=7 {
            let got = enumerate_necklaces(&Alphabet::range(3), n).count() as u64;
            assert_eq!(got, burnside(3, n as u64), "ternary n = {n}");
        }
    }

    #[test]
    fn partitions_binary_words_up_to_twelve() {
        for n in 1..=12usize {
            let listed: Vec<Word> = enumerate_necklaces(&Alphabet::binary(), n).collect();
            // ascending and canonical
            assert!(listed.windows(2).all(|p| p[0] < p[1]));
            let set: BTreeSet<Word> = listed.iter().cloned().collect();
            for x in 0u32..(1 << n) {
                let word: Word = (0..n)
                    .map(|i| Symbol(((x >> (n - 1 - i)) & 1) as u8))
                    .collect();
                assert!(set.contains(&canonical_rotation(&word)));
            }
            for nk in &listed {
                assert_eq!(&canonical_rotation(nk), nk);
            }
        }
    }

    #[test]
    fn lyndon_flag() {
        let lyndon: Vec<_> = enumerate_lyndon(&Alphabet::binary(), 4).collect();
        assert_eq!(
            lyndon,
            vec![
                Word::from_letters("aaab"),
                Word::from_letters("aabb"),
                Word::from_letters("abbb")
            ]
        );
    }

    #[test]
    fn respects_alphabet_symbols() {
        let alpha = Alphabet::new(vec![Symbol(3), Symbol(7)]).unwrap();
        let got: Vec<_> = enumerate_necklaces(&alpha, 2).collect();
        assert_eq!(got[1], Word::new(vec![Symbol(3), Symbol(7)]));
        assert_eq!(got.len(), 3);
    }
}
