//! Burrows-Wheeler transform of a word (rotation sort, no end marker) and the
//! run count `r(w)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::word::{primitive_root, rle, run_count_of, RunLength, Symbol, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BwtOutput {
    pub transformed: Word,
    /// Row of the input among its sorted rotations. Equal rotations are
    /// ordered by offset, so this is the first row of its block.
    pub primary_index: usize,
}

impl BwtOutput {
    pub fn runs(&self) -> RunLength {
        rle(&self.transformed)
    }

    pub fn run_count(&self) -> usize {
        run_count_of(self.transformed.as_slice())
    }
}

/// Rotation offsets of `w` in ascending order; equal rotations by offset.
///
/// Cyclic prefix doubling: after round `k` the ranks order rotations by
/// their first `2^k` symbols.
pub fn rotation_order(w: &[Symbol]) -> Vec<usize> {
    let n = w.len();
    let mut order: Vec<usize> = (0..n).collect();
    if n <= 1 {
        return order;
    }
    let mut rank: Vec<usize> = w.iter().map(|s| s.0 as usize).collect();
    let mut next = vec![0usize; n];
    let mut len = 1;
    loop {
        {
            let rk = &rank;
            order.sort_unstable_by_key(|&i| (rk[i], rk[(i + len) % n]));
        }
        next[order[0]] = 0;
        for t in 1..n {
            let (p, c) = (order[t - 1], order[t]);
            let same = rank[p] == rank[c] && rank[(p + len) % n] == rank[(c + len) % n];
            next[c] = next[p] + usize::from(!same);
        }
        core::mem::swap(&mut rank, &mut next);
        if rank[order[n - 1]] == n - 1 || 2 * len >= n {
            break;
        }
        len *= 2;
    }
    order.sort_unstable_by_key(|&i| (rank[i], i));
    order
}

pub fn bwt(w: &Word) -> Result<BwtOutput> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let s = w.as_slice();
    let n = s.len();
    let order = rotation_order(s);
    let transformed = order.iter().map(|&i| s[(i + n - 1) % n]).collect();
    let primary_index = order
        .iter()
        .position(|&i| i == 0)
        .expect("offset 0 is sorted");
    Ok(BwtOutput {
        transformed,
        primary_index,
    })
}

/// `r(w)`: runs in the transformed word.
pub fn run_count(w: &Word) -> Result<usize> {
    Ok(bwt(w)?.run_count())
}

/// Invert by walking the last-to-first mapping from `primary_index`.
///
/// Fails with [`Error::NotABwt`] when `t` is not the last column of a rotation
/// matrix or when `primary_index` is not the first row of its block.
pub fn inverse_bwt(t: &Word, primary_index: usize) -> Result<Word> {
    let n = t.len();
    if primary_index >= n {
        return Err(Error::IndexOutOfRange {
            index: primary_index,
            len: n,
        });
    }
    let s = t.as_slice();
    let max = s.iter().map(|c| c.0 as usize).max().unwrap_or(0);
    let mut first = vec![0usize; max + 2];
    for c in s {
        first[c.0 as usize + 1] += 1;
    }
    for i in 1..first.len() {
        first[i] += first[i - 1];
    }
    let mut seen = vec![0usize; max + 1];
    let mut lf = vec![0usize; n];
    for (i, c) in s.iter().enumerate() {
        let c = c.0 as usize;
        lf[i] = first[c] + seen[c];
        seen[c] += 1;
    }
    let mut out = vec![Symbol(0); n];
    let mut row = primary_index;
    for k in (0..n).rev() {
        out[k] = s[row];
        row = lf[row];
    }
    let w = Word::new(out);
    let check = bwt(&w)?;
    if check.transformed != *t || check.primary_index != primary_index {
        return Err(Error::NotABwt);
    }
    Ok(w)
}

/// `bwt(z^p)` from `bwt(z)`: every letter of `bwt(z)` repeated `p` times.
pub fn bwt_of_power(z: &Word, p: usize) -> Result<BwtOutput> {
    if p == 0 {
        return Err(Error::Precondition("exponent must be at least 1"));
    }
    let base = bwt(z)?;
    let transformed = base
        .transformed
        .iter()
        .flat_map(|c| core::iter::repeat_n(c, p))
        .collect();
    Ok(BwtOutput {
        transformed,
        primary_index: base.primary_index * p,
    })
}

/// `r` through the primitive root, which has the same run count.
pub fn run_count_via_root(w: &Word) -> Result<usize> {
    let root = primitive_root(w)?;
    run_count(&root.root)
}
