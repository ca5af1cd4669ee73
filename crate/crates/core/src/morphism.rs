//! Non-erasing morphisms, composition, and the structural tests used for
//! binary morphisms: injectivity, cyclicity, abelian order, prefix/suffix
//! shape, elementary (Sturmian) peeling and factorisation through Thue-Morse.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::word::{primitive_root, Alphabet, Symbol, Word};

/// A morphism given by one non-empty image per source symbol.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    source: Alphabet,
    target: Alphabet,
    images: Vec<Word>,
}

impl core::fmt::Debug for Morphism {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_tuple("Morphism").field(&self.images).finish()
    }
}

impl Morphism {
    /// `images[i]` is the image of the `i`-th source symbol.
    pub fn new(source: Alphabet, target: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::ImageCountMismatch {
                expected: source.len(),
                found: images.len(),
            });
        }
        if images.iter().any(Word::is_empty) {
            return Err(Error::ErasingMorphism);
        }
        for img in &images {
            target.check(img)?;
        }
        Ok(Morphism {
            source,
            target,
            images,
        })
    }

    /// An endomorphism of `{a, b}` given by the images of `a` and `b`.
    pub fn binary(a: Word, b: Word) -> Result<Self> {
        Self::new(Alphabet::binary(), Alphabet::binary(), vec![a, b])
    }

    /// Shorthand over `{a, b}` using letter strings; panics on bad input.
    pub fn from_letters(a: &str, b: &str) -> Self {
        Self::binary(Word::from_letters(a), Word::from_letters(b)).expect("valid binary images")
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        let images = alphabet
            .symbols()
            .iter()
            .map(|&s| Word::new(vec![s]))
            .collect();
        Morphism {
            source: alphabet.clone(),
            target: alphabet.clone(),
            images,
        }
    }

    /// Fibonacci `φ = (ab, a)`.
    pub fn fibonacci() -> Self {
        Self::from_letters("ab", "a")
    }

    /// `φ̃ = (ba, a)`.
    pub fn fibonacci_tilde() -> Self {
        Self::from_letters("ba", "a")
    }

    /// Exchange `E = (b, a)`.
    pub fn exchange() -> Self {
        Self::from_letters("b", "a")
    }

    /// Thue-Morse `τ = (ab, ba)`.
    pub fn thue_morse() -> Self {
        Self::from_letters("ab", "ba")
    }

    /// Period-doubling `π = (ab, aa)`.
    pub fn period_doubling() -> Self {
        Self::from_letters("ab", "aa")
    }

    /// `ρ_p = (a, b^p)`.
    pub fn rho(p: usize) -> Self {
        assert!(p >= 1);
        Self::binary(Word::from_letters("a"), Word::from_letters("b").pow(p)).unwrap()
    }

    /// Thue-Morse-like `τ_{p,q} = (a b^p, b a^q)`.
    pub fn tm_like(p: usize, q: usize) -> Self {
        let a = Word::from_letters("a");
        let b = Word::from_letters("b");
        Self::binary(a.concat(&b.pow(p)), b.concat(&a.pow(q))).unwrap()
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, s: Symbol) -> Option<&Word> {
        self.source.index_of(s).map(|i| &self.images[i])
    }

    /// `|μ|`, the total image length.
    pub fn size(&self) -> usize {
        self.images.iter().map(Word::len).sum()
    }

    pub fn is_binary(&self) -> bool {
        self.source.len() == 2
    }

    /// The two source letters `a < b` of a binary morphism.
    pub fn letters(&self) -> Result<(Symbol, Symbol)> {
        if !self.is_binary() {
            return Err(Error::NotBinary);
        }
        let s = self.source.symbols();
        Ok((s[0], s[1]))
    }

    /// Images of `a` and `b`.
    pub fn pair(&self) -> Result<(&Word, &Word)> {
        if !self.is_binary() {
            return Err(Error::NotBinary);
        }
        Ok((&self.images[0], &self.images[1]))
    }

    /// Same source and target, new binary images.
    fn with_images(&self, a: Word, b: Word) -> Result<Morphism> {
        Morphism::new(self.source.clone(), self.target.clone(), vec![a, b])
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        let mut out = Vec::new();
        for s in w.iter() {
            let i = self
                .source
                .index_of(s)
                .ok_or(Error::SymbolOutsideAlphabet(s.0))?;
            out.extend_from_slice(self.images[i].as_slice());
        }
        Ok(Word::new(out))
    }

    pub fn is_injective_binary(&self) -> Result<bool> {
        let (u, v) = self.pair()?;
        Ok(u.concat(v) != v.concat(u))
    }

    /// Errors unless binary and injective.
    pub fn require_injective_binary(&self) -> Result<()> {
        if self.is_injective_binary()? {
            Ok(())
        } else {
            Err(Error::NotInjective)
        }
    }

    /// The primitive `z` with every image in `z⁺`, if there is one.
    pub fn is_cyclic(&self) -> Option<Word> {
        let z = primitive_root(&self.images[0]).ok()?.root;
        let all = self
            .images
            .iter()
            .all(|img| img.len() % z.len() == 0 && *img == z.pow(img.len() / z.len()));
        all.then_some(z)
    }

    /// Binary acyclic morphisms either preserve or reverse the order of
    /// words sharing a Parikh vector; `μ(ab)` against `μ(ba)` tells which.
    pub fn abelian_order_class(&self) -> Result<OrderClass> {
        let (u, v) = self.pair()?;
        let (ab, ba) = (u.concat(v), v.concat(u));
        if ab == ba {
            return Err(Error::NotInjective);
        }
        Ok(if ab < ba {
            OrderClass::Preserving
        } else {
            OrderClass::Reversing
        })
    }

    pub fn bifix_status(&self) -> Result<BifixStatus> {
        let (u, v) = self.pair()?;
        let prefix = !u.starts_with(v) && !v.starts_with(u);
        let suffix = !u.ends_with(v) && !v.ends_with(u);
        Ok(match (prefix, suffix) {
            (true, true) => BifixStatus::Bifix,
            (true, false) => BifixStatus::PrefixOnly,
            (false, true) => BifixStatus::SuffixOnly,
            (false, false) => BifixStatus::Neither,
        })
    }

    /// Write `self = outer ∘ χ` with `χ` elementary, trying `φ`, `φ∘E`, `φ̃`,
    /// `φ̃∘E` in that order. `None` exactly when the morphism is bifix.
    pub fn peel_elementary(&self) -> Result<Option<PeelStep>> {
        self.require_injective_binary()?;
        let (u, v) = self.pair()?;
        let (lu, lv) = (u.len(), v.len());
        let step = |outer_a: Word, outer_b: Word, elementary| -> Result<Option<PeelStep>> {
            Ok(Some(PeelStep {
                outer: self.with_images(outer_a, outer_b)?,
                elementary,
            }))
        };
        // φ: (ψ(a)ψ(b), ψ(a))
        if lv < lu && u.starts_with(v) {
            return step(v.clone(), u.slice(lv, lu), Elementary::Phi);
        }
        // φ∘E: (ψ(a), ψ(a)ψ(b))
        if lu < lv && v.starts_with(u) {
            return step(u.clone(), v.slice(lu, lv), Elementary::PhiE);
        }
        // φ̃: (ψ(b)ψ(a), ψ(a))
        if lv < lu && u.ends_with(v) {
            return step(v.clone(), u.slice(0, lu - lv), Elementary::PhiTilde);
        }
        // φ̃∘E: (ψ(a), ψ(b)ψ(a))
        if lu < lv && v.ends_with(u) {
            return step(u.clone(), v.slice(0, lv - lu), Elementary::PhiTildeE);
        }
        Ok(None)
    }

    /// Peel elementary factors until none is left; Sturmian when what
    /// remains is the identity or `E`.
    pub fn is_sturmian(&self) -> Result<bool> {
        Ok(self.sturmian_decomposition()?.is_some())
    }

    /// The elementary factors `χ_1, ..., χ_t` and terminal letter permutation
    /// with `self = ψ_end ∘ χ_t ∘ ... ∘ χ_1`, or `None` when not Sturmian.
    pub fn sturmian_decomposition(&self) -> Result<Option<SturmianDecomposition>> {
        self.require_injective_binary()?;
        if self.target != self.source {
            return Ok(None);
        }
        let (a, b) = self.letters()?;
        let mut current = self.clone();
        let mut steps = Vec::new();
        loop {
            let (u, v) = current.pair()?;
            if u.len() == 1 && v.len() == 1 {
                let (x, y) = (u.as_slice()[0], v.as_slice()[0]);
                let exchange = if (x, y) == (a, b) {
                    false
                } else if (x, y) == (b, a) {
                    true
                } else {
                    return Ok(None);
                };
                return Ok(Some(SturmianDecomposition { steps, exchange }));
            }
            match current.peel_elementary()? {
                Some(step) => {
                    steps.push(step.elementary);
                    current = step.outer;
                }
                None => return Ok(None),
            }
        }
    }

    /// `ψ` with `self = ψ ∘ τ`: splits `μ(a) = pq`, `μ(b) = qp` with `p, q`
    /// non-empty, shortest `p` first.
    pub fn factor_through_tau(&self) -> Result<Option<Morphism>> {
        let (u, v) = self.pair()?;
        if u.len() != v.len() {
            return Ok(None);
        }
        for i in 1..u.len() {
            let (p, q) = (u.slice(0, i), u.slice(i, u.len()));
            if q.concat(&p) == *v {
                return Ok(Some(self.with_images(p, q)?));
            }
        }
        Ok(None)
    }
}

/// `outer ∘ inner`: apply `inner` first.
pub fn compose(outer: &Morphism, inner: &Morphism) -> Result<Morphism> {
    if inner.target != outer.source {
        return Err(Error::AlphabetMismatch);
    }
    let images = inner
        .images
        .iter()
        .map(|img| outer.apply(img))
        .collect::<Result<Vec<_>>>()?;
    Morphism::new(inner.source.clone(), outer.target.clone(), images)
}

/// Compose a chain, outermost first: `chain[0] ∘ chain[1] ∘ ...`.
pub fn compose_all(chain: &[&Morphism]) -> Result<Morphism> {
    let (last, rest) = chain
        .split_last()
        .ok_or(Error::Precondition("empty chain"))?;
    rest.iter()
        .rev()
        .try_fold((*last).clone(), |acc, outer| compose(outer, &acc))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderClass {
    Preserving,
    Reversing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BifixStatus {
    PrefixOnly,
    SuffixOnly,
    Bifix,
    Neither,
}

/// The four elementary Sturmian morphisms used for peeling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Elementary {
    /// `φ = (ab, a)`
    Phi,
    /// `φ∘E = (a, ab)`
    PhiE,
    /// `φ̃ = (ba, a)`
    PhiTilde,
    /// `φ̃∘E = (a, ba)`
    PhiTildeE,
}

impl Elementary {
    /// The morphism over the given binary alphabet.
    pub fn morphism(self, alphabet: &Alphabet) -> Result<Morphism> {
        let s = alphabet.symbols();
        if s.len() != 2 {
            return Err(Error::NotBinary);
        }
        let (a, b) = (s[0], s[1]);
        let (x, y) = match self {
            Elementary::Phi => (vec![a, b], vec![a]),
            Elementary::PhiE => (vec![a], vec![a, b]),
            Elementary::PhiTilde => (vec![b, a], vec![a]),
            Elementary::PhiTildeE => (vec![a], vec![b, a]),
        };
        Morphism::new(
            alphabet.clone(),
            alphabet.clone(),
            vec![Word::new(x), Word::new(y)],
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            Elementary::Phi => "phi",
            Elementary::PhiE => "phi∘E",
            Elementary::PhiTilde => "phi~",
            Elementary::PhiTildeE => "phi~∘E",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelStep {
    pub outer: Morphism,
    pub elementary: Elementary,
}

/// `μ = P ∘ χ_t ∘ ... ∘ χ_1` where `P` is the identity or `E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmianDecomposition {
    /// Innermost first.
    pub steps: Vec<Elementary>,
    pub exchange: bool,
}
