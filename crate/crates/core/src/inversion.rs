//! Inversion factors of a factorizable double square.
//!
//! Positions here are local to `U²`: position 1 is the first symbol of `U²`.

use alloc::vec::Vec;

use crate::doublesq::Factorization;
use crate::{Error, Result};

/// Positions of the natural inversion factors and the intervals holding all
/// inversion factors, local to `U²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InvIntervals {
    pub n1: usize,
    pub n2: usize,
    pub l1: usize,
    pub r1: usize,
    pub l2: usize,
    pub r2: usize,
}

impl InvIntervals {
    /// Every position of `[l1, r1] ∪ [l2, r2]`, ascending.
    pub fn positions(&self) -> Vec<usize> {
        (self.l1..=self.r1).chain(self.l2..=self.r2).collect()
    }

    /// The same intervals moved to host coordinates for a `U²` starting at `start`.
    pub fn shifted(&self, start: usize) -> InvIntervals {
        let d = start - 1;
        InvIntervals {
            n1: self.n1 + d,
            n2: self.n2 + d,
            l1: self.l1 + d,
            r1: self.r1 + d,
            l2: self.l2 + d,
            r2: self.r2 + d,
        }
    }
}

/// `ū2 u2 u2 ū2`, the factor found at `N1` and `N2`.
pub fn natural_inversion_factor(f: &Factorization) -> Vec<u8> {
    let mut out = Vec::with_capacity(2 * f.u1_len());
    out.extend_from_slice(&f.u2_bar);
    out.extend_from_slice(&f.u2);
    out.extend_from_slice(&f.u2);
    out.extend_from_slice(&f.u2_bar);
    out
}

pub fn intervals(f: &Factorization) -> InvIntervals {
    let (a, b) = (f.u1_len(), f.u2_len());
    let (e1, e2) = (f.e1, f.e2);
    let (lcp, lcs) = (f.lcp(), f.lcs());
    let n1 = (e1 - 1) * a + b + 1;
    let n2 = (2 * e1 + e2 - 1) * a + 2 * b + 1;
    let square_len = 2 * f.long_len();
    InvIntervals {
        n1,
        n2,
        l1: n1.saturating_sub(lcs).max(1),
        r1: n1 + lcp,
        l2: n2 - lcs,
        r2: (square_len - 2 * a + 1).min(n2 + lcp),
    }
}

/// Largest position at which a factor of length `2|u1|` fits in `U²`.
pub fn last_position(f: &Factorization) -> usize {
    2 * f.long_len() - 2 * f.u1_len() + 1
}

fn matches_at(sq: &[u8], f: &Factorization, i: usize) -> bool {
    let (a, b, c) = (f.u1_len(), f.u2_len(), f.u2_bar.len());
    let i0 = i - 1;
    (0..c).all(|j| sq[i0 + j] == sq[i0 + j + a + b]) && (c..a).all(|j| sq[i0 + j] == sq[i0 + j + b])
}

/// Tests the two displacement conditions directly on `U²`.
pub fn is_inversion_factor_at(f: &Factorization, i: usize) -> Result<bool> {
    let max = last_position(f);
    if i == 0 || i > max {
        return Err(Error::PositionRange { position: i, max });
    }
    Ok(matches_at(&f.long_square(), f, i))
}

/// Every inversion-factor position found by scanning `U²`.
pub fn find_inversion_factors(f: &Factorization) -> Vec<usize> {
    let sq = f.long_square();
    (1..=last_position(f))
        .filter(|&i| matches_at(&sq, f, i))
        .collect()
}
