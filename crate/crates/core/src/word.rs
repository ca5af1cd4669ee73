//! Finite words over ordered alphabets.
//!
//! Symbols are small integers whose numeric order is the alphabet order.
//! Turning symbols into printable letters is left to callers.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A letter, ordered by its numeric value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub u8);

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 < 26 {
            write!(f, "{}", (b'a' + self.0) as char)
        } else {
            write!(f, "#{}", self.0)
        }
    }
}

/// A finite, strictly ordered set of symbols.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
}

impl Alphabet {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.is_empty() || symbols.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidAlphabet);
        }
        Ok(Alphabet { symbols })
    }

    /// The alphabet `{0, 1, ..., size - 1}`.
    pub fn range(size: u8) -> Self {
        assert!(size > 0, "alphabet must be non-empty");
        Alphabet {
            symbols: (0..size).map(Symbol).collect(),
        }
    }

    /// `{a < b}` as symbols 0 and 1.
    pub fn binary() -> Self {
        Self::range(2)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.index_of(s).is_some()
    }

    /// Rank of `s` in the alphabet order.
    pub fn index_of(&self, s: Symbol) -> Option<usize> {
        self.symbols.binary_search(&s).ok()
    }

    pub fn check(&self, w: &Word) -> Result<()> {
        match w.iter().find(|s| !self.contains(*s)) {
            Some(s) => Err(Error::SymbolOutsideAlphabet(s.0)),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.symbols.iter()).finish()
    }
}

/// A finite word. Ordering is lexicographic, with a proper prefix sorting first.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_raw(raw: &[u8]) -> Self {
        Word(raw.iter().copied().map(Symbol).collect())
    }

    /// Lowercase ASCII letters, `'a'` being symbol 0. Panics on anything else;
    /// meant for fixtures and tests.
    pub fn from_letters(s: &str) -> Self {
        Word(
            s.bytes()
                .map(|c| {
                    assert!(c.is_ascii_lowercase(), "not a lowercase letter: {c}");
                    Symbol(c - b'a')
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Symbol> {
        self.0
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Symbol> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn push(&mut self, s: Symbol) {
        self.0.push(s);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, k: usize) -> Word {
        let mut v = Vec::with_capacity(self.len() * k);
        for _ in 0..k {
            v.extend_from_slice(&self.0);
        }
        Word(v)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// The rotation that starts at offset `i`: `w[i..] w[..i]`.
    pub fn rotation(&self, i: usize) -> Word {
        let n = self.len();
        if n == 0 {
            return Word::empty();
        }
        let i = i % n;
        let mut v = Vec::with_capacity(n);
        v.extend_from_slice(&self.0[i..]);
        v.extend_from_slice(&self.0[..i]);
        Word(v)
    }

    pub fn count(&self, s: Symbol) -> usize {
        self.0.iter().filter(|&&c| c == s).count()
    }

    /// Letter counts in alphabet order. Symbols outside `alphabet` are ignored.
    pub fn parikh(&self, alphabet: &Alphabet) -> Vec<usize> {
        let mut counts = alloc::vec![0; alphabet.len()];
        for s in self.iter() {
            if let Some(i) = alphabet.index_of(s) {
                counts[i] += 1;
            }
        }
        counts
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.0.ends_with(&suffix.0)
    }

    /// True when the word uses a single letter (and is non-empty).
    pub fn is_single_letter_power(&self) -> bool {
        match self.0.first() {
            Some(&c) => self.0.iter().all(|&s| s == c),
            None => false,
        }
    }

    /// Whether `pattern` occurs as a factor.
    pub fn contains_factor(&self, pattern: &Word) -> bool {
        pattern.is_empty()
            || self
                .0
                .windows(pattern.len())
                .any(|w| w == pattern.as_slice())
    }

    /// Length of the longest run of `s`, reading the word circularly.
    pub fn max_circular_run(&self, s: Symbol) -> usize {
        let n = self.len();
        if n == 0 {
            return 0;
        }
        if self.0.iter().all(|&c| c == s) {
            return n;
        }
        let start = self.0.iter().position(|&c| c != s).unwrap();
        let (mut best, mut cur) = (0, 0);
        for i in 0..n {
            if self.0[(start + i) % n] == s {
                cur += 1;
                best = best.max(cur);
            } else {
                cur = 0;
            }
        }
        best
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("\"")?;
        for s in &self.0 {
            write!(f, "{s:?}")?;
        }
        f.write_str("\"")
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Run-length encoding: maximal blocks of equal letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunLength {
    pub runs: Vec<(Symbol, usize)>,
}

impl RunLength {
    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn expand(&self) -> Word {
        let mut v = Vec::new();
        for &(s, l) in &self.runs {
            v.extend(core::iter::repeat_n(s, l));
        }
        Word(v)
    }
}

pub fn rle(w: &Word) -> RunLength {
    let mut runs: Vec<(Symbol, usize)> = Vec::new();
    for s in w.iter() {
        match runs.last_mut() {
            Some((c, l)) if *c == s => *l += 1,
            _ => runs.push((s, 1)),
        }
    }
    RunLength { runs }
}

/// Number of equal-letter runs, without materialising the encoding.
pub fn run_count_of(w: &[Symbol]) -> usize {
    if w.is_empty() {
        return 0;
    }
    1 + w.windows(2).filter(|p| p[0] != p[1]).count()
}

/// `w = root^exponent` with `root` primitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveRoot {
    pub root: Word,
    pub exponent: usize,
}

/// Smallest period of `w` via the prefix function.
fn smallest_period(w: &[Symbol]) -> usize {
    let n = w.len();
    let mut fail = alloc::vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && w[i] != w[k] {
            k = fail[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        fail[i] = k;
    }
    n - fail[n - 1]
}

pub fn primitive_root(w: &Word) -> Result<PrimitiveRoot> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = w.len();
    let p = smallest_period(w.as_slice());
    let p = if n.is_multiple_of(p) { p } else { n };
    Ok(PrimitiveRoot {
        root: w.slice(0, p),
        exponent: n / p,
    })
}

/// Primitivity test. The empty word is not primitive.
pub fn is_primitive(w: &Word) -> bool {
    if w.is_empty() {
        return false;
    }
    let n = w.len();
    let p = smallest_period(w.as_slice());
    p == n || !n.is_multiple_of(p)
}

/// The multiset of all `|w|` rotations, in offset order.
pub fn rotations(w: &Word) -> Result<Vec<Word>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok((0..w.len()).map(|i| w.rotation(i)).collect())
}

/// All length-`len` factors of all rotations of `w`.
pub fn circular_factors(w: &Word, len: usize) -> Result<BTreeSet<Word>> {
    let n = w.len();
    if len > n {
        return Err(Error::LengthOutOfRange { len, max: n });
    }
    let mut out = BTreeSet::new();
    if n == 0 || len == 0 {
        out.insert(Word::empty());
        return Ok(out);
    }
    let s = w.as_slice();
    for i in 0..n {
        out.insert((0..len).map(|j| s[(i + j) % n]).collect());
    }
    Ok(out)
}

/// Whether `u` is a circular factor of `w` (a factor of some rotation).
pub fn is_circular_factor(u: &Word, w: &Word) -> bool {
    let (m, n) = (u.len(), w.len());
    if m == 0 {
        return true;
    }
    if m > n {
        return false;
    }
    let (us, ws) = (u.as_slice(), w.as_slice());
    (0..n).any(|i| (0..m).all(|j| ws[(i + j) % n] == us[j]))
}

/// Longest common prefix and suffix lengths.
pub fn lcp_lcs(u: &Word, v: &Word) -> (usize, usize) {
    let lcp = u.iter().zip(v.iter()).take_while(|(a, b)| a == b).count();
    let lcs = u
        .iter()
        .rev()
        .zip(v.iter().rev())
        .take_while(|(a, b)| a == b)
        .count();
    (lcp, lcs)
}

pub fn commute(u: &Word, v: &Word) -> Result<bool> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(u.concat(v) == v.concat(u))
}

/// Offset of the lexicographically least rotation (first one on ties).
pub fn least_rotation_offset(w: &[Symbol]) -> usize {
    let n = w.len();
    if n < 2 {
        return 0;
    }
    // Two-candidate scan; at most 2n comparisons.
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let (a, b) = (w[(i + k) % n], w[(j + k) % n]);
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// The necklace representative: least rotation.
pub fn canonical_rotation(w: &Word) -> Word {
    w.rotation(least_rotation_offset(w.as_slice()))
}

pub fn are_conjugate_words(u: &Word, v: &Word) -> bool {
    u.len() == v.len() && (u.is_empty() || is_circular_factor(v, u))
}
