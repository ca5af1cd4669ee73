//! Additive and multiplicative BWT-run sensitivity of morphisms, the
//! run-preservation decision, and the word families used in the experiments.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::bwt::{bwt, run_count};
use crate::error::{Error, Result};
use crate::morphism::{compose_all, Morphism};
use crate::necklace::Necklaces;
use crate::primitivity::is_primitivity_preserving;
use crate::word::{primitive_root, Alphabet, Symbol, Word};

/// `r(μ(w)) − r(w)`
pub fn delta_plus(m: &Morphism, w: &Word) -> Result<i64> {
    let (before, after) = runs_before_after(m, w)?;
    Ok(after as i64 - before as i64)
}

/// `r(μ(w)) / r(w)`
pub fn delta_times(m: &Morphism, w: &Word) -> Result<Ratio<u64>> {
    let (before, after) = runs_before_after(m, w)?;
    Ok(Ratio::new(after as u64, before as u64))
}

fn runs_before_after(m: &Morphism, w: &Word) -> Result<(usize, usize)> {
    Ok((run_count(w)?, run_count(&m.apply(w)?)?))
}

/// Which words of length `n` the maxima range over.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WordDomain {
    /// Everything except single-letter powers.
    #[default]
    NonConstant,
    All,
}

impl WordDomain {
    pub fn admits(self, w: &Word) -> bool {
        self == WordDomain::All || !w.is_single_letter_power()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SensitivityRow {
    pub n: usize,
    pub as_value: i64,
    pub ms_value: Ratio<u64>,
    pub as_witness: Word,
    pub ms_witness: Word,
}

/// Running maxima over a stream of words; ties go to the smaller word, so
/// merging partial results in any order gives the same row.
#[derive(Clone, Debug, Default)]
pub struct SensitivityAccumulator {
    best_as: Option<(i64, Word)>,
    best_ms: Option<(Ratio<u64>, Word)>,
}

impl SensitivityAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn observe(&mut self, m: &Morphism, w: &Word) -> Result<()> {
        let (before, after) = runs_before_after(m, w)?;
        self.offer(
            after as i64 - before as i64,
            Ratio::new(after as u64, before as u64),
            w,
        );
        Ok(())
    }

    fn offer(&mut self, d: i64, q: Ratio<u64>, w: &Word) {
        if better(&self.best_as, &d, w) {
            self.best_as = Some((d, w.clone()));
        }
        if better(&self.best_ms, &q, w) {
            self.best_ms = Some((q, w.clone()));
        }
    }

    pub fn merge(&mut self, other: SensitivityAccumulator) {
        if let Some((d, w)) = other.best_as {
            if better(&self.best_as, &d, &w) {
                self.best_as = Some((d, w));
            }
        }
        if let Some((q, w)) = other.best_ms {
            if better(&self.best_ms, &q, &w) {
                self.best_ms = Some((q, w));
            }
        }
    }

    /// `None` when nothing was observed.
    pub fn finish(self, n: usize) -> Option<SensitivityRow> {
        let (as_value, as_witness) = self.best_as?;
        let (ms_value, ms_witness) = self.best_ms?;
        Some(SensitivityRow {
            n,
            as_value,
            ms_value,
            as_witness,
            ms_witness,
        })
    }
}

fn better<T: Ord>(current: &Option<(T, Word)>, value: &T, w: &Word) -> bool {
    match current {
        None => true,
        Some((v, cw)) => value > v || (value == v && w < cw),
    }
}

/// Smallest admissible `n` for the source alphabet.
pub fn min_length(m: &Morphism) -> usize {
    if m.source().len() >= 2 {
        2
    } else {
        1
    }
}

/// `AS_μ(n)` and `MS_μ(n)` over non-constant words.
pub fn sensitivity(m: &Morphism, n: usize) -> Result<SensitivityRow> {
    sensitivity_in(m, n, WordDomain::NonConstant)
}

/// Exact maxima by visiting one word per rotation class.
pub fn sensitivity_in(m: &Morphism, n: usize, domain: WordDomain) -> Result<SensitivityRow> {
    let min = min_length(m);
    if n < min {
        return Err(Error::LengthOutOfRange { len: n, max: min });
    }
    let mut acc = SensitivityAccumulator::new();
    for nk in Necklaces::new(m.source(), n) {
        if domain.admits(&nk.word) {
            acc.observe(m, &nk.word)?;
        }
    }
    acc.finish(n)
        .ok_or(Error::Precondition("no admissible words of this length"))
}

/// A row of the table listing `w`, `bwt(w)`, `r(w)`, `μ(w)`, `bwt(μ(w))`,
/// `r(μ(w))` for every non-constant necklace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecklaceTableRow {
    pub word: Word,
    pub bwt: Word,
    pub r: usize,
    pub image: Word,
    pub image_bwt: Word,
    pub image_r: usize,
}

pub fn necklace_table(m: &Morphism, n: usize) -> Result<Vec<NecklaceTableRow>> {
    Necklaces::new(m.source(), n)
        .filter(|nk| !nk.word.is_single_letter_power())
        .map(|nk| {
            let w = nk.word;
            let b = bwt(&w)?;
            let image = m.apply(&w)?;
            let ib = bwt(&image)?;
            Ok(NecklaceTableRow {
                r: b.run_count(),
                bwt: b.transformed,
                image_r: ib.run_count(),
                image_bwt: ib.transformed,
                image,
                word: w,
            })
        })
        .collect()
}

/// `(r(z) − 2, r(z)/2)` for a cyclic morphism with images in `z⁺`.
pub fn cyclic_sensitivity_constants(m: &Morphism) -> Result<(i64, Ratio<u64>)> {
    let z = m.is_cyclic().ok_or(Error::NotCyclic)?;
    let r = run_count(&z)?;
    Ok((r as i64 - 2, Ratio::new(r as u64, 2)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RunPreservation {
    Preserving,
    /// A primitive word whose image is a power.
    NotPreserving {
        witness: Word,
    },
    /// Images share a primitive root; the additive sensitivity is the constant.
    Cyclic {
        additive: i64,
    },
}

impl RunPreservation {
    pub fn is_preserving(&self) -> bool {
        !matches!(self, RunPreservation::NotPreserving { .. })
    }
}

/// BWT-run preserving exactly when primitivity preserving.
pub fn is_bwt_run_preserving(m: &Morphism) -> Result<RunPreservation> {
    if m.pair().is_ok() && !m.is_injective_binary()? {
        let (additive, _) = cyclic_sensitivity_constants(m)?;
        return Ok(RunPreservation::Cyclic { additive });
    }
    let v = is_primitivity_preserving(m)?;
    Ok(match v.witness {
        None => RunPreservation::Preserving,
        Some(witness) => RunPreservation::NotPreserving { witness },
    })
}

/// `μ = (uᵖ, v^q) = η ∘ ρ_q ∘ E ∘ ρ_p ∘ E` with `η = (u, v)` on the roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerDecomposition {
    pub eta: Morphism,
    pub p: usize,
    pub q: usize,
}

impl PowerDecomposition {
    pub fn rebuild(&self) -> Result<Morphism> {
        let e = Morphism::exchange();
        compose_all(&[
            &self.eta,
            &Morphism::rho(self.q),
            &e,
            &Morphism::rho(self.p),
            &e,
        ])
    }
}

pub fn power_decomposition(m: &Morphism) -> Result<PowerDecomposition> {
    m.require_injective_binary()?;
    let (x, y) = m.pair()?;
    let (rx, ry) = (primitive_root(x)?, primitive_root(y)?);
    Ok(PowerDecomposition {
        eta: Morphism::new(
            m.source().clone(),
            m.target().clone(),
            vec![rx.root, ry.root],
        )?,
        p: rx.exponent,
        q: ry.exponent,
    })
}

/// `w_k = (Π_{i=2}^{k−1} s_i e_i) q_k` with `s_i = ab^i aa`,
/// `e_i = ab^i ab a^{i−2}` and `q_k = ab^k a`.
pub fn wk_word(k: usize) -> Result<Word> {
    if k <= 5 {
        return Err(Error::Precondition("w_k needs k > 5"));
    }
    let (a, b) = (Symbol(0), Symbol(1));
    let mut s = Vec::new();
    for i in 2..k {
        s.push(a);
        s.extend(core::iter::repeat_n(b, i));
        s.extend([a, a]);
        s.push(a);
        s.extend(core::iter::repeat_n(b, i));
        s.extend([a, b]);
        s.extend(core::iter::repeat_n(a, i - 2));
    }
    s.push(a);
    s.extend(core::iter::repeat_n(b, k));
    s.push(a);
    Ok(Word::new(s))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentRow {
    pub param: usize,
    pub length: usize,
    pub r_before: usize,
    pub r_after: usize,
    pub delta_plus: i64,
    pub delta_times: Ratio<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExperimentTable {
    pub rows: Vec<ExperimentRow>,
}

fn row(param: usize, before: &Word, after: &Word) -> Result<ExperimentRow> {
    let (rb, ra) = (run_count(before)?, run_count(after)?);
    Ok(ExperimentRow {
        param,
        length: before.len(),
        r_before: rb,
        r_after: ra,
        delta_plus: ra as i64 - rb as i64,
        delta_times: Ratio::new(ra as u64, rb as u64),
    })
}

/// `μ` applied to `w_k` for each `k`.
pub fn wk_experiment(m: &Morphism, ks: impl IntoIterator<Item = usize>) -> Result<ExperimentTable> {
    let rows = ks
        .into_iter()
        .map(|k| {
            let w = wk_word(k)?;
            row(k, &w, &m.apply(&w)?)
        })
        .collect::<Result<_>>()?;
    Ok(ExperimentTable { rows })
}

pub fn rho_experiment(p: usize, ks: impl IntoIterator<Item = usize>) -> Result<ExperimentTable> {
    if p < 2 {
        return Err(Error::Precondition("rho experiment needs p > 1"));
    }
    wk_experiment(&Morphism::rho(p), ks)
}

/// The ternary morphism `$ ↦ $, a ↦ ab, b ↦ a` over `$ < a < b`.
pub fn fibonacci_dollar() -> Morphism {
    let (d, a, b) = (Symbol(0), Symbol(1), Symbol(2));
    Morphism::new(
        Alphabet::range(3),
        Alphabet::range(3),
        vec![
            Word::new(vec![d]),
            Word::new(vec![a, b]),
            Word::new(vec![a]),
        ],
    )
    .expect("fixed images are valid")
}

/// `φʲ(a)$` over `$ < a < b`.
pub fn fibonacci_dollar_word(j: usize) -> Word {
    let (d, a, b) = (Symbol(0), Symbol(1), Symbol(2));
    let mut f = vec![a];
    for _ in 0..j {
        f = f
            .into_iter()
            .flat_map(|c| if c == a { vec![a, b] } else { vec![a] })
            .collect();
    }
    f.push(d);
    Word::new(f)
}

/// Rows `(k, r(f_{2k}$), r(f_{2k+1}$))`, after checking that the morphism
/// maps the first word onto the second.
pub fn fibonacci_dollar_experiment(ks: impl IntoIterator<Item = usize>) -> Result<ExperimentTable> {
    let m = fibonacci_dollar();
    let rows = ks
        .into_iter()
        .map(|k| {
            let before = fibonacci_dollar_word(2 * k);
            let after = fibonacci_dollar_word(2 * k + 1);
            if m.apply(&before)? != after {
                return Err(Error::Precondition("image is not the next Fibonacci word"));
            }
            row(k, &before, &after)
        })
        .collect::<Result<_>>()?;
    Ok(ExperimentTable { rows })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoBoundReport {
    pub holds: bool,
    pub checked: usize,
    pub counterexample: Option<Word>,
}

/// Number of distinct `i ≥ 1` with `ab^i a` a circular factor of `w`.
pub fn distinct_b_blocks(w: &Word) -> usize {
    let (a, b) = (Symbol(0), Symbol(1));
    let s = w.as_slice();
    let n = s.len();
    let Some(start) = s.iter().position(|&c| c == a) else {
        return 0;
    };
    let mut lens = Vec::new();
    let mut run = 0;
    for i in 1..=n {
        let c = s[(start + i) % n];
        if c == b {
            run += 1;
        } else {
            if run > 0 {
                lens.push(run);
            }
            run = 0;
        }
    }
    lens.sort_unstable();
    lens.dedup();
    lens.len()
}

/// Checks `Δ⁺ ≤ 2r(w)`, `Δ× ≤ 3` and `r(ρ_p(w)) ≤ r(w) + 2·#{i : ab^i a ∈ F̃(w)}`
/// on every binary necklace with at least two `a` and one `b`.
pub fn rho_ms_bound_check(p: usize, max_n: usize) -> Result<RhoBoundReport> {
    if p < 2 {
        return Err(Error::Precondition("rho bound needs p > 1"));
    }
    let m = Morphism::rho(p);
    let mut checked = 0;
    for n in 3..=max_n {
        for nk in Necklaces::new(&Alphabet::binary(), n) {
            let w = nk.word;
            if w.count(Symbol(0)) < 2 || w.count(Symbol(1)) < 1 {
                continue;
            }
            checked += 1;
            let (rb, ra) = runs_before_after(&m, &w)?;
            let ok = ra <= 3 * rb && ra <= rb + 2 * distinct_b_blocks(&w);
            if !ok {
                return Ok(RhoBoundReport {
                    holds: false,
                    checked,
                    counterexample: Some(w),
                });
            }
        }
    }
    Ok(RhoBoundReport {
        holds: true,
        checked,
        counterexample: None,
    })
}
