//! Parallel sensitivity sweeps over necklaces.

use bwtrun_core::necklace::Necklaces;
use bwtrun_core::sensitivity::{min_length, SensitivityAccumulator, SensitivityRow, WordDomain};
use bwtrun_core::{Error, Morphism};
use rayon::prelude::*;

/// Largest enumerated length by default: `σⁿ ≤ 2²⁰`, i.e. 20 for binary
/// and 12 for ternary sources.
pub fn default_cutoff(sigma: usize) -> usize {
    if sigma < 2 {
        return usize::MAX;
    }
    let mut n = 0;
    let mut size: u64 = 1;
    while size * sigma as u64 <= 1 << 20 {
        size *= sigma as u64;
        n += 1;
    }
    n
}

/// Same result as [`bwtrun_core::sensitivity::sensitivity_in`], with the
/// necklaces spread over the rayon pool.
pub fn sensitivity_par(
    m: &Morphism,
    n: usize,
    domain: WordDomain,
) -> Result<SensitivityRow, Error> {
    let min = min_length(m);
    if n < min {
        return Err(Error::LengthOutOfRange { len: n, max: min });
    }
    let acc = Necklaces::new(m.source(), n)
        .par_bridge()
        .filter(|nk| domain.admits(&nk.word))
        .try_fold(SensitivityAccumulator::new, |mut acc, nk| {
            acc.observe(m, &nk.word).map(|_| acc)
        })
        .try_reduce(SensitivityAccumulator::new, |mut a, b| {
            a.merge(b);
            Ok(a)
        })?;
    acc.finish(n)
        .ok_or(Error::Precondition("no admissible words of this length"))
}
