//! Circular factorizations over two-word codes, synchronization pairs, the
//! synchronization delay of a word, and the finite-delay decision.
//!
//! A split `x = u₁u₂` is a synchronization pair when every occurrence of `x`
//! inside an image `μ(f)`, `f` a circular factor of the language, puts a
//! codeword boundary between `u₁` and `u₂`. Occurrences are enumerated as
//! parses of `x`: a suffix of a codeword, whole codewords, a prefix of a
//! codeword. The letters a parse covers form the shortest admissible `f`, so
//! the quantifier over `f` is checked exactly.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::primitivity::{is_recognizable, mu_powers, NotRecognizable};
use crate::word::{circular_factors, is_circular_factor, Symbol, Word};

/// The language `L` whose circular factors provide the contexts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LanguageDescriptor {
    FiniteList(Vec<Word>),
    FullBinary,
    /// Longest circular run of each letter; `None` for unbounded.
    BoundedLetterRuns {
        max_a: Option<usize>,
        max_b: Option<usize>,
    },
}

impl LanguageDescriptor {
    fn validate(&self, m: &Morphism) -> Result<()> {
        if let LanguageDescriptor::FiniteList(words) = self {
            if words.is_empty() {
                return Err(Error::Precondition("empty word list"));
            }
            for w in words {
                m.source().check(w)?;
            }
        }
        Ok(())
    }

    /// Whether `g` is a circular factor of the language.
    fn admits(&self, g: &Word, (a, b): (Symbol, Symbol)) -> bool {
        match self {
            LanguageDescriptor::FullBinary => true,
            LanguageDescriptor::FiniteList(words) => words.iter().any(|w| is_circular_factor(g, w)),
            LanguageDescriptor::BoundedLetterRuns { max_a, max_b } => {
                let fits = |c: Symbol, bound: &Option<usize>| {
                    bound.is_none_or(|k| longest_run(g.as_slice(), c) <= k)
                };
                fits(a, max_a) && fits(b, max_b)
            }
        }
    }

    /// Longest circular runs `(a, b)` over the circular factors of `L`.
    pub fn run_bounds(&self, (a, b): (Symbol, Symbol)) -> (Option<usize>, Option<usize>) {
        match self {
            LanguageDescriptor::FullBinary => (None, None),
            LanguageDescriptor::BoundedLetterRuns { max_a, max_b } => (*max_a, *max_b),
            LanguageDescriptor::FiniteList(words) => {
                let most = |c| words.iter().map(|w| w.max_circular_run(c)).max();
                (most(a), most(b))
            }
        }
    }
}

fn longest_run(s: &[Symbol], c: Symbol) -> usize {
    s.split(|&x| x != c).map(<[Symbol]>::len).max().unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularFactorization {
    /// Position in `w` where the listed codeword sequence starts.
    pub rotation_offset: usize,
    /// Source letters whose images tile `w` from `rotation_offset` on.
    pub codeword_sequence: Vec<Symbol>,
}

/// Factorizations of the circular word `w` into images of `m`, one per
/// distinct set of cut points.
pub fn circular_factorizations(w: &Word, m: &Morphism) -> Result<Vec<CircularFactorization>> {
    m.require_injective_binary()?;
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let (a, b) = m.letters()?;
    let (x, y) = m.pair()?;
    let code = [(a, x.as_slice()), (b, y.as_slice())];
    let n = w.len();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    for start in 0..n {
        let rot = w.rotation(start);
        let Some(letters) = decode_linear(rot.as_slice(), &code) else {
            continue;
        };
        let mut cuts = Vec::with_capacity(letters.len());
        let mut pos = start;
        for &c in &letters {
            cuts.push(pos % n);
            pos += code.iter().find(|(s, _)| *s == c).unwrap().1.len();
        }
        let first = *cuts.iter().min().unwrap();
        let shift = cuts.iter().position(|&c| c == first).unwrap();
        cuts.sort_unstable();
        if seen.insert(cuts) {
            let mut seq = letters;
            seq.rotate_left(shift);
            out.push(CircularFactorization {
                rotation_offset: first,
                codeword_sequence: seq,
            });
        }
    }
    out.sort_by_key(|f| f.rotation_offset);
    Ok(out)
}

/// The factorization of `s` into codewords, unique because the images form
/// a code.
fn decode_linear(s: &[Symbol], code: &[(Symbol, &[Symbol]); 2]) -> Option<Vec<Symbol>> {
    let n = s.len();
    // back[i]: letter of the codeword ending at i on some full decoding
    let mut back: Vec<Option<Symbol>> = vec![None; n + 1];
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for i in 0..n {
        if !reach[i] {
            continue;
        }
        for &(c, img) in code {
            let j = i + img.len();
            if j <= n && &s[i..j] == img && !reach[j] {
                reach[j] = true;
                back[j] = Some(c);
            }
        }
    }
    if !reach[n] {
        return None;
    }
    let mut letters = Vec::new();
    let mut j = n;
    while j > 0 {
        let c = back[j]?;
        letters.push(c);
        j -= code.iter().find(|(s, _)| *s == c).unwrap().1.len();
    }
    letters.reverse();
    Some(letters)
}

/// One way `x` sits inside a codeword sequence.
#[derive(Clone, Debug)]
struct Parse {
    letters: Vec<Symbol>,
    /// Codeword boundaries inside `[0, |x|]`.
    bounds: Vec<usize>,
}

fn parses(x: &[Symbol], code: &[(Symbol, &[Symbol]); 2]) -> Vec<Parse> {
    fn walk(
        x: &[Symbol],
        code: &[(Symbol, &[Symbol]); 2],
        i: usize,
        cur: &mut Parse,
        out: &mut Vec<Parse>,
    ) {
        if i == x.len() {
            out.push(cur.clone());
            return;
        }
        for &(c, img) in code {
            let take = img.len().min(x.len() - i);
            if x[i..i + take] != img[..take] {
                continue;
            }
            cur.letters.push(c);
            if img.len() <= x.len() - i {
                cur.bounds.push(i + img.len());
                walk(x, code, i + img.len(), cur, out);
                cur.bounds.pop();
            } else {
                out.push(cur.clone());
            }
            cur.letters.pop();
        }
    }

    let mut out = Vec::new();
    let mut cur = Parse {
        letters: Vec::new(),
        bounds: vec![0],
    };
    walk(x, code, 0, &mut cur, &mut out);
    // starting strictly inside a codeword
    for &(c, img) in code {
        for o in 1..img.len() {
            let tail = &img[o..];
            let take = tail.len().min(x.len());
            if x[..take] != tail[..take] {
                continue;
            }
            let mut cur = Parse {
                letters: vec![c],
                bounds: Vec::new(),
            };
            if tail.len() <= x.len() {
                cur.bounds.push(tail.len());
                walk(x, code, tail.len(), &mut cur, &mut out);
            } else {
                out.push(cur);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyncPair {
    pub factor: Word,
    /// `factor = factor[..split] · factor[split..]`.
    pub split: usize,
}

/// Splits `j ∈ [0, |x|]` of `x` that are synchronization pairs in the scope.
/// Splits at either end count. A factor with no admissible occurrence has
/// every split.
pub fn sync_splits(factor: &Word, m: &Morphism, scope: &LanguageDescriptor) -> Result<Vec<usize>> {
    m.require_injective_binary()?;
    scope.validate(m)?;
    if factor.is_empty() {
        return Err(Error::EmptyWord);
    }
    let letters = m.letters()?;
    let (u, v) = m.pair()?;
    let code = [(letters.0, u.as_slice()), (letters.1, v.as_slice())];
    let mut alive = vec![true; factor.len() + 1];
    for p in parses(factor.as_slice(), &code) {
        if !scope.admits(&Word::new(p.letters), letters) {
            continue;
        }
        let mut here = vec![false; factor.len() + 1];
        for j in p.bounds {
            here[j] = true;
        }
        for (keep, hit) in alive.iter_mut().zip(here) {
            *keep &= hit;
        }
    }
    Ok((0..=factor.len()).filter(|&j| alive[j]).collect())
}

pub fn find_sync_pairs(
    factor: &Word,
    m: &Morphism,
    scope: &LanguageDescriptor,
) -> Result<Vec<SyncPair>> {
    Ok(sync_splits(factor, m, scope)?
        .into_iter()
        .map(|split| SyncPair {
            factor: factor.clone(),
            split,
        })
        .collect())
}

/// Least `k` such that every circular factor of `μ(w)` of length at least `k`
/// has a synchronization pair, contexts ranging over all binary words.
pub fn sync_delay_for_word(m: &Morphism, w: &Word) -> Result<Option<usize>> {
    sync_delay_for_word_in(m, w, &LanguageDescriptor::FullBinary)
}

/// As [`sync_delay_for_word`] with contexts drawn from `scope`. `None` when
/// even the full-length factors have no synchronization pair.
pub fn sync_delay_for_word_in(
    m: &Morphism,
    w: &Word,
    scope: &LanguageDescriptor,
) -> Result<Option<usize>> {
    let image = m.apply(w)?;
    if image.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut worst = 0;
    for len in 1..=image.len() {
        for f in circular_factors(&image, len)? {
            if sync_splits(&f, m, scope)?.is_empty() {
                worst = len;
                break;
            }
        }
    }
    Ok(if worst == image.len() {
        None
    } else {
        Some(worst + 1)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SyncReason {
    Recognizable,
    /// Conjugate images; decided by whether some letter run is bounded.
    ConjugateImages {
        max_a: Option<usize>,
        max_b: Option<usize>,
    },
    /// `P^μ` is non-empty; `unbounded` names a μ-power whose powers all occur.
    MuPowers {
        unbounded: Option<Word>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyncDecision {
    pub finite_delay: bool,
    pub reason: SyncReason,
}

/// Whether `m` is synchronizing with finite delay on the scope.
pub fn decide_sync_finite_delay(m: &Morphism, scope: &LanguageDescriptor) -> Result<SyncDecision> {
    scope.validate(m)?;
    let rec = is_recognizable(m)?;
    let letters = m.letters()?;
    let decision = match rec.reason {
        None => SyncDecision {
            finite_delay: true,
            reason: SyncReason::Recognizable,
        },
        Some(NotRecognizable::ConjugateImages) => {
            let (max_a, max_b) = scope.run_bounds(letters);
            SyncDecision {
                finite_delay: max_a.is_some() || max_b.is_some(),
                reason: SyncReason::ConjugateImages { max_a, max_b },
            }
        }
        Some(NotRecognizable::NotPrimitivityPreserving { .. }) => {
            let unbounded = unbounded_mu_power(m, scope, letters)?;
            SyncDecision {
                finite_delay: unbounded.is_none(),
                reason: SyncReason::MuPowers { unbounded },
            }
        }
    };
    Ok(decision)
}

/// A μ-power `w` with every `wⁿ` a circular factor of the scope.
fn unbounded_mu_power(
    m: &Morphism,
    scope: &LanguageDescriptor,
    (a, b): (Symbol, Symbol),
) -> Result<Option<Word>> {
    let p = mu_powers(m)?;
    let (max_a, max_b) = match scope {
        LanguageDescriptor::FiniteList(_) => return Ok(None),
        _ => scope.run_bounds((a, b)),
    };
    let bound = |c: Symbol| if c == a { max_a } else { max_b };
    for &c in &p.letter_witnesses {
        if bound(c).is_none() {
            return Ok(Some(Word::new(vec![c])));
        }
    }
    if let Some(w) = p.rotation_witness {
        let fits = [a, b]
            .into_iter()
            .all(|c| bound(c).is_none_or(|k| w.max_circular_run(c) <= k));
        if fits {
            return Ok(Some(w));
        }
    }
    Ok(None)
}
