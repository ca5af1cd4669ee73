//! Primitivity preservation of binary morphisms through the finite Holub test
//! set, the structure of the set `P^μ` of μ-powers, recognizability, and the
//! composition criterion.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::morphism::{compose, Morphism};
use crate::word::{
    are_conjugate_words, canonical_rotation, commute, is_primitive, primitive_root, rotations,
    Symbol, Word,
};

/// Images oriented so that `|u| ≥ |v|`, and the exponent pairs `(ℓ, m)` whose
/// products `u^ℓ v^m` have to be tested.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolubTestSet {
    pub u: Word,
    pub v: Word,
    /// True when `u` is the image of the second letter.
    pub swapped: bool,
    pub pairs: Vec<(usize, usize)>,
    long: Symbol,
    short: Symbol,
}

impl HolubTestSet {
    /// The source word `x^ℓ y^m`, `x` being the letter mapped to `u`.
    pub fn candidate(&self, (l, m): (usize, usize)) -> Word {
        let mut w = Word::new(vec![self.long; l]);
        w.extend_from(&Word::new(vec![self.short; m]));
        w
    }

    pub fn product(&self, (l, m): (usize, usize)) -> Word {
        self.u.pow(l).concat(&self.v.pow(m))
    }

    /// Largest `m` in the pairs `(1, m)`.
    pub fn max_m(&self) -> usize {
        self.pairs.iter().map(|&(_, m)| m).max().unwrap_or(1)
    }
}

pub fn holub_test_set(m: &Morphism) -> Result<HolubTestSet> {
    m.require_injective_binary()?;
    let (a, b) = m.letters()?;
    let (x, y) = m.pair()?;
    let swapped = x.len() < y.len();
    let (u, v, long, short) = if swapped {
        (y.clone(), x.clone(), b, a)
    } else {
        (x.clone(), y.clone(), a, b)
    };
    let bound = ((u.len() as i64 - 4).div_euclid(v.len() as i64) + 2).max(1) as usize;
    let mut pairs = vec![(2, 1)];
    pairs.extend((1..=bound).map(|k| (1, k)));
    Ok(HolubTestSet {
        u,
        v,
        swapped,
        pairs,
        long,
        short,
    })
}

/// A test-set product that is a proper power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolubHit {
    pub pair: (usize, usize),
    /// Least rotation of the source word.
    pub word: Word,
    pub z: Word,
    pub k: usize,
}

/// Every pair of the test set whose product is not primitive.
pub fn holub_hits(m: &Morphism) -> Result<Vec<HolubHit>> {
    let set = holub_test_set(m)?;
    let mut hits = Vec::new();
    for &pair in &set.pairs {
        let root = primitive_root(&set.product(pair))?;
        if root.exponent > 1 {
            let word = canonical_rotation(&set.candidate(pair));
            // the rotation's image is the matching rotation of z^k
            let z = primitive_root(&m.apply(&word)?)?.root;
            hits.push(HolubHit {
                pair,
                word,
                z,
                k: root.exponent,
            });
        }
    }
    Ok(hits)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PpVerdict {
    pub preserving: bool,
    /// A primitive word with non-primitive image.
    pub witness: Option<Word>,
}

/// Letters with non-primitive images first, then the test set.
pub fn is_primitivity_preserving(m: &Morphism) -> Result<PpVerdict> {
    let p = mu_powers(m)?;
    let witness = match p.letter_witnesses.first() {
        Some(&c) => Some(Word::new(vec![c])),
        None => p.rotation_witness,
    };
    Ok(PpVerdict {
        preserving: witness.is_none(),
        witness,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PMuCase {
    /// Case 1a: empty.
    Pp,
    /// Case 1b: one letter.
    OneLetterPower,
    /// Case 1c: both letters.
    TwoLetterPowers,
    /// Case 2a: one rotation class.
    RotationClass,
    /// Case 2b: a rotation class and a letter.
    RotationClassPlusLetter,
}

impl PMuCase {
    pub fn label(self) -> &'static str {
        match self {
            PMuCase::Pp => "1a",
            PMuCase::OneLetterPower => "1b",
            PMuCase::TwoLetterPowers => "1c",
            PMuCase::RotationClass => "2a",
            PMuCase::RotationClassPlusLetter => "2b",
        }
    }
}

/// Finite description of `P^μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PMuClassification {
    pub case_tag: PMuCase,
    pub letter_witnesses: Vec<Symbol>,
    /// Least rotation of the class, `μ(w) = z^k`.
    pub rotation_witness: Option<Word>,
    pub z: Option<Word>,
    pub k: Option<usize>,
}

impl PMuClassification {
    /// All elements: the letters, then the rotation class.
    pub fn elements(&self) -> Vec<Word> {
        let mut out: Vec<Word> = self
            .letter_witnesses
            .iter()
            .map(|&c| Word::new(vec![c]))
            .collect();
        if let Some(w) = &self.rotation_witness {
            let mut rots = rotations(w).unwrap_or_default();
            rots.sort();
            rots.dedup();
            out.extend(rots);
        }
        out
    }

    pub fn contains(&self, w: &Word) -> bool {
        if w.len() == 1 {
            return self.letter_witnesses.contains(&w.as_slice()[0]);
        }
        self.rotation_witness
            .as_ref()
            .is_some_and(|r| r.len() == w.len() && canonical_rotation(w) == *r)
    }
}

pub fn mu_powers(m: &Morphism) -> Result<PMuClassification> {
    let hits = holub_hits(m)?;
    let (a, b) = m.letters()?;
    let (x, y) = m.pair()?;
    let mut letter_witnesses = Vec::new();
    if !is_primitive(x) {
        letter_witnesses.push(a);
    }
    if !is_primitive(y) {
        letter_witnesses.push(b);
    }
    let hit = hits.into_iter().next();
    let case_tag = match (letter_witnesses.len(), hit.is_some()) {
        (0, false) => PMuCase::Pp,
        (1, false) => PMuCase::OneLetterPower,
        (_, false) => PMuCase::TwoLetterPowers,
        (0, true) => PMuCase::RotationClass,
        (_, true) => PMuCase::RotationClassPlusLetter,
    };
    Ok(match hit {
        Some(h) => PMuClassification {
            case_tag,
            letter_witnesses,
            rotation_witness: Some(h.word),
            z: Some(h.z),
            k: Some(h.k),
        },
        None => PMuClassification {
            case_tag,
            letter_witnesses,
            rotation_witness: None,
            z: None,
            k: None,
        },
    })
}

/// One of the four parametric shapes of a binary morphism (oriented so that
/// `|u| ≥ |v|`) whose test set contains a power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolubForm {
    pub case: u8,
    pub p: Word,
    pub q: Word,
    pub m: usize,
    pub n: usize,
    /// Exponent of `v` in the power; only meaningful for case 3.
    pub k: usize,
}

impl HolubForm {
    /// The oriented images `(u, v)`.
    pub fn reconstruct(&self) -> (Word, Word) {
        let (p, q) = (&self.p, &self.q);
        let pq = p.concat(q);
        match self.case {
            1 => (pq.pow(self.m).concat(p), q.concat(&pq.pow(self.n))),
            2 => (p.concat(&q.pow(self.n)).pow(self.m).concat(p), q.clone()),
            3 => {
                let v = q.concat(&pq.pow(self.m));
                let block = pq.concat(&v.pow(self.k - 1));
                let u = block
                    .pow(self.n)
                    .concat(&pq)
                    .concat(&v.pow(self.k - 2))
                    .concat(&q.concat(p));
                (u, v)
            }
            _ => (pq.pow(self.m).concat(p), q.concat(p).concat(p).concat(q)),
        }
    }
}

/// The Holub shape matching the morphism, found by searching `p` among the
/// prefixes of `u` and `q` among the prefixes of `v`. `None` when the test
/// set contains no power.
pub fn classify_holub_form(m: &Morphism) -> Result<Option<HolubForm>> {
    let set = holub_test_set(m)?;
    let hits = holub_hits(m)?;
    let Some(hit) = hits.first() else {
        return Ok(None);
    };
    let (u, v) = (&set.u, &set.v);
    let cases: &[u8] = match hit.pair {
        (2, 1) => &[4],
        (1, 1) => &[1],
        _ => &[2, 3],
    };
    let hit_exp = hit.pair.1;
    for &case in cases {
        for lp in 1..=u.len() {
            for lq in 1..=v.len() {
                let (p, q) = (u.slice(0, lp), v.slice(0, lq));
                if commute(&p, &q)? {
                    continue;
                }
                for form in candidate_forms(case, &p, &q, u.len(), v.len(), hit_exp) {
                    if form.reconstruct() == (u.clone(), v.clone()) {
                        return Ok(Some(form));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Parameter choices consistent with the image lengths.
fn candidate_forms(
    case: u8,
    p: &Word,
    q: &Word,
    lu: usize,
    lv: usize,
    hit_exp: usize,
) -> Vec<HolubForm> {
    let (lp, lq) = (p.len(), q.len());
    let s = lp + lq;
    let form = |m, n, k| HolubForm {
        case,
        p: p.clone(),
        q: q.clone(),
        m,
        n,
        k,
    };
    let mut out = Vec::new();
    match case {
        1 => {
            if lu >= lp && (lu - lp).is_multiple_of(s) && (lv - lq).is_multiple_of(s) {
                let (m, n) = ((lu - lp) / s, (lv - lq) / s);
                if m + n >= 1 {
                    out.push(form(m, n, 0));
                }
            }
        }
        2 => {
            let n = hit_exp;
            let block = lp + n * lq;
            if lv == lq && lu > lp && (lu - lp).is_multiple_of(block) {
                out.push(form((lu - lp) / block, n, 0));
            }
        }
        3 => {
            let k = hit_exp;
            if lv > lq && (lv - lq).is_multiple_of(s) && k >= 2 {
                let m = (lv - lq) / s;
                let tail = s + (k - 2) * lv + s;
                let block = s + (k - 1) * lv;
                if lu >= tail && (lu - tail).is_multiple_of(block) {
                    out.push(form(m, (lu - tail) / block, k));
                }
            }
        }
        _ => {
            if lv == 2 * s && lu >= lp && (lu - lp).is_multiple_of(s) {
                let m = (lu - lp) / s;
                if m >= 2 {
                    out.push(form(m, 0, 0));
                }
            }
        }
    }
    out
}

/// `|u| = |v|` and `v` occurs in `uu`.
pub fn are_conjugates(u: &Word, v: &Word) -> Result<bool> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(are_conjugate_words(u, v))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotRecognizable {
    NotPrimitivityPreserving { witness: Word },
    ConjugateImages,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recognizability {
    pub recognizable: bool,
    pub reason: Option<NotRecognizable>,
}

/// Primitivity-preserving with non-conjugate images.
pub fn is_recognizable(m: &Morphism) -> Result<Recognizability> {
    let pp = is_primitivity_preserving(m)?;
    let reason = if let Some(witness) = pp.witness {
        Some(NotRecognizable::NotPrimitivityPreserving { witness })
    } else {
        let (u, v) = m.pair()?;
        are_conjugates(u, v)?.then_some(NotRecognizable::ConjugateImages)
    };
    Ok(Recognizability {
        recognizable: reason.is_none(),
        reason,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PpDecomposition {
    pub holds: bool,
    pub inner_preserving: bool,
    /// An element of `P^outer` that factors over the inner images.
    pub offending: Option<Word>,
}

/// `outer ∘ inner` is primitivity-preserving iff `inner = (p, q)` is and no
/// μ-power of `outer` lies in `{p, q}⁺`.
pub fn check_pp_decomposition(outer: &Morphism, inner: &Morphism) -> Result<PpDecomposition> {
    if inner.target() != outer.source() {
        return Err(Error::AlphabetMismatch);
    }
    let inner_preserving = is_primitivity_preserving(inner)?.preserving;
    let (p, q) = inner.pair()?;
    let offending = mu_powers(outer)?
        .elements()
        .into_iter()
        .find(|w| decodes_over(w, p, q));
    Ok(PpDecomposition {
        holds: inner_preserving && offending.is_none(),
        inner_preserving,
        offending,
    })
}

/// Whether `w ∈ {p, q}⁺`.
pub fn decodes_over(w: &Word, p: &Word, q: &Word) -> bool {
    let s = w.as_slice();
    let mut reach = vec![false; s.len() + 1];
    reach[0] = true;
    for i in 0..s.len() {
        if !reach[i] {
            continue;
        }
        for c in [p, q] {
            let j = i + c.len();
            if j <= s.len() && &s[i..j] == c.as_slice() {
                reach[j] = true;
            }
        }
    }
    !s.is_empty() && reach[s.len()]
}

/// Cross-check for [`check_pp_decomposition`].
pub fn composition_preserves(outer: &Morphism, inner: &Morphism) -> Result<bool> {
    Ok(is_primitivity_preserving(&compose(outer, inner)?)?.preserving)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_letters(s)
    }

    fn m(a: &str, b: &str) -> Morphism {
        Morphism::from_letters(a, b)
    }

    #[test]
    fn test_set_examples() {
        let set = holub_test_set(&m("abba", "b")).unwrap();
        assert_eq!(set.pairs, vec![(2, 1), (1, 1), (1, 2)]);
        assert!(!set.swapped);
        let hits = holub_hits(&m("abba", "b")).unwrap();
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].pair, (1, 2));
        assert_eq!(hits[0].word, w("abb"));

        let set = holub_test_set(&m("ab", "ba")).unwrap();
        assert_eq!(set.pairs, vec![(2, 1), (1, 1)]);
        assert!(holub_hits(&m("ab", "ba")).unwrap().is_empty());

        let set = holub_test_set(&m("ba", "ababaa")).unwrap();
        assert!(set.swapped);
        assert_eq!(set.u, w("ababaa"));
        assert_eq!(set.product((1, 2)), w("ababa").pow(2));
        let hits = holub_hits(&m("ba", "ababaa")).unwrap();
        assert_eq!(hits[0].pair, (1, 2));
        assert_eq!(hits[0].word, w("aab"));
    }

    #[test]
    fn preservation_examples() {
        assert!(
            is_primitivity_preserving(&Morphism::thue_morse())
                .unwrap()
                .preserving
        );
        assert!(
            is_primitivity_preserving(&m("abaa", "aaab"))
                .unwrap()
                .preserving
        );
        let pi = is_primitivity_preserving(&Morphism::period_doubling()).unwrap();
        assert_eq!(pi.witness, Some(w("b")));
        let v = is_primitivity_preserving(&m("a", "bab")).unwrap();
        assert_eq!(v.witness, Some(w("ab")));
        assert!(is_primitivity_preserving(&m("ab", "ab")).is_err());
    }

    #[test]
    fn p_mu_examples() {
        let pi = mu_powers(&Morphism::period_doubling()).unwrap();
        assert_eq!(pi.case_tag, PMuCase::OneLetterPower);
        assert_eq!(pi.letter_witnesses, vec![Symbol(1)]);

        let c = mu_powers(&m("a", "bab")).unwrap();
        assert_eq!(c.case_tag, PMuCase::RotationClass);
        assert_eq!(c.rotation_witness, Some(w("ab")));
        assert_eq!(c.z, Some(w("ab")));
        assert_eq!(c.k, Some(2));
        assert!(c.contains(&w("ba")));
        assert!(!c.contains(&w("b")));

        assert_eq!(
            mu_powers(&Morphism::thue_morse()).unwrap().case_tag,
            PMuCase::Pp
        );
        let both = mu_powers(&m("aa", "bb")).unwrap();
        assert_eq!(both.case_tag, PMuCase::TwoLetterPowers);
    }

    #[test]
    fn holub_forms() {
        let f = classify_holub_form(&m("a", "bab")).unwrap().unwrap();
        assert_eq!(
            (f.case, f.p.clone(), f.q.clone(), f.m, f.n),
            (1, w("b"), w("a"), 1, 0)
        );
        assert_eq!(f.reconstruct(), (w("bab"), w("a")));

        let f = classify_holub_form(&m("abba", "b")).unwrap().unwrap();
        assert_eq!(
            (f.case, f.p.clone(), f.q.clone(), f.m, f.n),
            (2, w("a"), w("b"), 1, 2)
        );

        assert_eq!(classify_holub_form(&Morphism::thue_morse()).unwrap(), None);
    }

    #[test]
    fn case_three_shape() {
        // p = a, q = b, m = 1, k = 2, n = 0: u = ab·qp = abba, v = bab
        let form = HolubForm {
            case: 3,
            p: w("a"),
            q: w("b"),
            m: 1,
            n: 0,
            k: 2,
        };
        let (u, v) = form.reconstruct();
        assert_eq!((u.clone(), v.clone()), (w("abba"), w("bab")));
        assert!(!is_primitive(&u.concat(&v).concat(&v)));
        let got = classify_holub_form(&Morphism::binary(u, v).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(got.case, 3);
    }

    #[test]
    fn recognizability_examples() {
        assert!(is_recognizable(&m("baa", "abb")).unwrap().recognizable);
        assert_eq!(
            is_recognizable(&m("baa", "aba")).unwrap().reason,
            Some(NotRecognizable::ConjugateImages)
        );
        assert_eq!(
            is_recognizable(&Morphism::period_doubling())
                .unwrap()
                .reason,
            Some(NotRecognizable::NotPrimitivityPreserving { witness: w("b") })
        );
        assert!(are_conjugates(&w("baa"), &w("aba")).unwrap());
        assert!(!are_conjugates(&w("baa"), &w("abb")).unwrap());
        assert!(are_conjugates(&Word::empty(), &w("a")).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let tau = Morphism::thue_morse();
        let r = check_pp_decomposition(&Morphism::period_doubling(), &tau).unwrap();
        assert!(r.holds);
        assert!(composition_preserves(&Morphism::period_doubling(), &tau).unwrap());

        let r = check_pp_decomposition(&m("aba", "b"), &tau).unwrap();
        assert!(!r.holds);
        assert_eq!(r.offending, Some(w("ab")));
        assert_eq!(compose(&m("aba", "b"), &tau).unwrap(), m("abab", "baba"));

        let id = Morphism::identity(&crate::word::Alphabet::binary());
        assert!(
            check_pp_decomposition(&id, &Morphism::fibonacci())
                .unwrap()
                .holds
        );
    }
}
