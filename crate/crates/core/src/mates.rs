//! Gap and tail of two double squares, and the classification of a later
//! FS-double square relative to an earlier one.
//!
//! All positions are 1-based host positions.

use core::fmt;

use crate::doublesq::{FsDoubleSquare, Factorization};
use crate::inversion::intervals;
use crate::squares::SquareOcc;
use crate::word::{are_conjugates, is_prefix_of_power};
use crate::{Error, Result};

/// `G = s(v) − s(u)` and `T = e(v) − e(u)` for the shorter generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GapTail {
    pub gap: usize,
    pub tail: isize,
}

fn same_host(u: &FsDoubleSquare<'_>, v: &FsDoubleSquare<'_>) -> Result<()> {
    let (a, b) = (u.square.host(), v.square.host());
    if a.as_ptr() != b.as_ptr() || a.len() != b.len() {
        return Err(Error::HostMismatch);
    }
    if u.start() >= v.start() {
        return Err(Error::Order {
            first: u.start(),
            second: v.start(),
        });
    }
    Ok(())
}

fn gap_tail_raw(su: usize, lu: usize, sv: usize, lv: usize) -> GapTail {
    GapTail {
        gap: sv - su,
        tail: (sv + lv) as isize - (su + lu) as isize,
    }
}

pub fn gap_tail(u: &FsDoubleSquare<'_>, v: &FsDoubleSquare<'_>) -> Result<GapTail> {
    same_host(u, v)?;
    Ok(gap_tail_raw(
        u.start(),
        u.square.short_len(),
        v.start(),
        v.square.short_len(),
    ))
}

/// Gap and tail from plain occurrences; `u.start < v.start` is required.
pub fn gap_tail_of(u: SquareOcc, v: SquareOcc) -> Result<GapTail> {
    if u.start >= v.start {
        return Err(Error::Order {
            first: u.start,
            second: v.start,
        });
    }
    Ok(gap_tail_raw(u.start, u.gen_len, v.start, v.gen_len))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MateKind {
    Alpha,
    Beta,
    Gamma,
    Delta,
    Epsilon,
    SuperEpsilon,
    Unclassified,
}

impl MateKind {
    pub fn name(&self) -> &'static str {
        match self {
            MateKind::Alpha => "alpha",
            MateKind::Beta => "beta",
            MateKind::Gamma => "gamma",
            MateKind::Delta => "delta",
            MateKind::Epsilon => "epsilon",
            MateKind::SuperEpsilon => "super_epsilon",
            MateKind::Unclassified => "unclassified",
        }
    }

    /// Epsilon and super-epsilon both satisfy the epsilon clause.
    pub fn is_epsilon(&self) -> bool {
        matches!(self, MateKind::Epsilon | MateKind::SuperEpsilon)
    }
}

impl fmt::Display for MateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which clauses hold, independently of evaluation order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MateFlags {
    pub alpha: bool,
    pub beta: bool,
    pub gamma: bool,
    pub delta: bool,
    pub epsilon: bool,
    pub super_epsilon: bool,
}

impl MateFlags {
    pub fn count(&self) -> usize {
        [self.alpha, self.beta, self.gamma, self.delta, self.epsilon]
            .iter()
            .filter(|&&b| b)
            .count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MateVerdict {
    pub kind: MateKind,
    pub flags: MateFlags,
}

impl MateVerdict {
    /// More than one clause held; the first in order won.
    pub fn overlaps(&self) -> bool {
        self.flags.count() > 1
    }
}

/// `x[s+t] == x[s+len+t]` for `t < k` (1-based `s`): the factor of length
/// `len` at `s` can be cyclically shifted right by `k`.
pub fn shifts_right(x: &[u8], s: usize, len: usize, k: usize) -> bool {
    let i0 = s - 1;
    i0 + len + k <= x.len() && (0..k).all(|t| x[i0 + t] == x[i0 + len + t])
}

/// `i` with `v = w1^i w2`, where `w1` is a conjugate of `u1`, `w2` its prefix
/// and `|w2| = |u2|`.
pub fn shifted_power_exponent(v: &[u8], f: &Factorization) -> Option<usize> {
    let a = f.u1_len();
    if v.len() < a || v.len() % a != f.u2_len() {
        return None;
    }
    let w1 = &v[..a];
    (are_conjugates(w1, &f.u1) && is_prefix_of_power(v, w1)).then_some(v.len() / a)
}

fn starts_with_parts(v: &[u8], parts: &[&[u8]]) -> bool {
    let mut i = 0;
    for p in parts {
        for &c in p.iter() {
            if i >= v.len() || v[i] != c {
                return false;
            }
            i += 1;
        }
    }
    true
}

fn repeat_part(v: &[u8], at: usize, part: &[u8], times: usize) -> Option<usize> {
    let mut i = at;
    for _ in 0..times {
        if i + part.len() > v.len() || v[i..i + part.len()] != *part {
            return None;
        }
        i += part.len();
    }
    Some(i)
}

/// One of the two prefix forms allowed for a longer `v`:
/// `s1 ū2 u2 u1^(e1+e2-1) u2` with `s1` a suffix of `u2`, or
/// `s1 u1^i u2 u1^(e1+e2-1) u2` with `s1` a suffix of `u1` and `i ≥ 1`.
pub fn has_long_prefix_form(v: &[u8], f: &Factorization) -> bool {
    let tail_pow = f.e1 + f.e2 - 1;
    let tail_ok = |at: usize| {
        repeat_part(v, at, &f.u1, tail_pow)
            .is_some_and(|j| j + f.u2_len() <= v.len() && v[j..j + f.u2_len()] == f.u2[..])
    };
    for s1_len in 0..=f.u2_len() {
        let s1 = &f.u2[f.u2_len() - s1_len..];
        if starts_with_parts(v, &[s1, &f.u2_bar, &f.u2]) {
            let at = s1_len + f.u2_bar.len() + f.u2_len();
            if tail_ok(at) {
                return true;
            }
        }
    }
    for s1_len in 0..f.u1_len() {
        let s1 = &f.u1[f.u1_len() - s1_len..];
        if !starts_with_parts(v, &[s1]) {
            continue;
        }
        let mut at = s1_len;
        // i ≥ 1 copies of u1, then u2 u1^(e1+e2-1) u2
        while let Some(next) = repeat_part(v, at, &f.u1, 1) {
            at = next;
            if starts_with_parts(&v[at..], &[&f.u2]) && tail_ok(at + f.u2_len()) {
                return true;
            }
        }
    }
    false
}

/// `R1` of `u` in host coordinates.
pub fn r1_host(u: &FsDoubleSquare<'_>) -> usize {
    u.start() - 1 + intervals(&u.factorization).r1
}

fn flags(u: &FsDoubleSquare<'_>, v: &FsDoubleSquare<'_>) -> MateFlags {
    let x = u.square.host();
    let f = &u.factorization;
    let (su, sv) = (u.start(), v.start());
    let (lu, big_u) = (u.square.short_len(), u.square.long_len());
    let (lv, big_v) = (v.square.short_len(), v.square.long_len());
    let k = sv - su;
    let r1 = r1_host(u);
    let short_v = v.square.short();

    let alpha = sv <= su + f.lcp()
        && lv == lu
        && big_v == big_u
        && shifts_right(x, su, 2 * lu, k)
        && shifts_right(x, su, 2 * big_u, k);
    let beta = big_v == big_u
        && shifted_power_exponent(short_v, f).is_some_and(|i| 1 < i && i < f.e1)
        && shifts_right(x, su, 2 * big_u, k);
    let gamma = sv < su + f.e1 * f.u1_len() && lv == big_u;
    let delta = sv < r1 && lv > big_u && has_long_prefix_form(short_v, f);
    let epsilon = r1 <= sv;
    let super_epsilon = epsilon && u.square.end_of_short_first() < sv;
    MateFlags {
        alpha,
        beta,
        gamma,
        delta,
        epsilon,
        super_epsilon,
    }
}

/// Evaluates every clause and reports the first that holds in the order
/// α, β, γ, δ, ε.
pub fn classify_mate_detailed(u: &FsDoubleSquare<'_>, v: &FsDoubleSquare<'_>) -> Result<MateVerdict> {
    same_host(u, v)?;
    let flags = flags(u, v);
    let kind = if flags.alpha {
        MateKind::Alpha
    } else if flags.beta {
        MateKind::Beta
    } else if flags.gamma {
        MateKind::Gamma
    } else if flags.delta {
        MateKind::Delta
    } else if flags.super_epsilon {
        MateKind::SuperEpsilon
    } else if flags.epsilon {
        MateKind::Epsilon
    } else {
        MateKind::Unclassified
    };
    Ok(MateVerdict { kind, flags })
}

pub fn classify_mate(u: &FsDoubleSquare<'_>, v: &FsDoubleSquare<'_>) -> Result<MateKind> {
    classify_mate_detailed(u, v).map(|m| m.kind)
}

pub fn is_alpha_mate(u: &FsDoubleSquare<'_>, v: &FsDoubleSquare<'_>) -> Result<bool> {
    same_host(u, v)?;
    Ok(flags(u, v).alpha)
}

pub fn is_beta_mate(u: &FsDoubleSquare<'_>, v: &FsDoubleSquare<'_>) -> Result<bool> {
    same_host(u, v)?;
    Ok(flags(u, v).beta)
}

pub fn is_gamma_mate(u: &FsDoubleSquare<'_>, v: &FsDoubleSquare<'_>) -> Result<bool> {
    same_host(u, v)?;
    Ok(flags(u, v).gamma)
}

/// The type `(p, q)` of a γ-mate `v` of `u`.
///
/// `v` is matched literally against `u1^(e1-t) u2 u1^(e2+t)` and
/// `s2 u1^(e1-t-1) u2 u1^(e2+t) s1` (`s1 s2 = u1`), i.e. against the left
/// rotations of `U` by less than `e1|u1|`.
pub fn gamma_type(u: &FsDoubleSquare<'_>, v: &FsDoubleSquare<'_>) -> Result<(usize, usize)> {
    if !is_gamma_mate(u, v)? {
        return Err(Error::NotGammaMate);
    }
    let f = &u.factorization;
    let big = u.square.long();
    let short_v = v.square.short();
    let m = big.len();
    let a = f.u1_len();
    let rot = (0..f.e1 * a).find(|&k| (0..m).all(|i| short_v[i] == big[(i + k) % m]));
    let Some(k) = rot else {
        return Err(Error::GammaForm { start: v.start() });
    };
    let (t, s1_len) = (k / a, k % a);
    Ok(if s1_len == 0 || s1_len <= a - f.lcs() {
        (f.e1 - t, f.e2 + t)
    } else {
        (f.e1 - t - 1, f.e2 + t + 1)
    })
}

/// Configuration of a single rightmost square relative to an FS-double square
/// starting at or before it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VCase {
    /// `|v| < |u|`, `v = w1^j w2` with `1 ≤ j < e1`.
    A1,
    /// `|v| = |u|`, `v = w1^e1 w2`.
    A2,
    /// `|v| = |U|` with non-negative tail.
    A4,
    /// `|v| > |U|` with non-negative tail and a prefix form.
    A5,
}

/// Case of `v` (a rightmost square with `s(u) ≤ s(v)`) or `None` if no case
/// applies, which includes every `|u| < |v| < |U|`.
pub fn v_case(u: &FsDoubleSquare<'_>, v: SquareOcc) -> Option<VCase> {
    let x = u.square.host();
    let f = &u.factorization;
    let (lu, big_u) = (u.square.short_len(), u.square.long_len());
    let gen = v.generator(x);
    let tail = (v.start + v.gen_len) as isize - (u.start() + lu) as isize;
    let lv = v.gen_len;
    if lv < lu {
        shifted_power_exponent(gen, f)
            .filter(|&j| 1 <= j && j < f.e1)
            .map(|_| VCase::A1)
    } else if lv == lu {
        shifted_power_exponent(gen, f)
            .filter(|&j| j == f.e1)
            .map(|_| VCase::A2)
    } else if lv < big_u {
        None
    } else if lv == big_u {
        (tail >= 0).then_some(VCase::A4)
    } else {
        (tail >= 0 && has_long_prefix_form(gen, f)).then_some(VCase::A5)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{FIGURE_2, FIGURE_4};
    use crate::doublesq::find_fs_double_squares;
    use crate::squares::SquareOcc;

    #[test]
    fn gap_tail_examples() {
        let g = gap_tail_of(SquareOcc::new(1, 3), SquareOcc::new(2, 3)).unwrap();
        assert_eq!(g, GapTail { gap: 1, tail: 1 });
        let g = gap_tail_of(SquareOcc::new(1, 5), SquareOcc::new(3, 3)).unwrap();
        assert_eq!(g, GapTail { gap: 2, tail: 0 });
        assert!(gap_tail_of(SquareOcc::new(2, 3), SquareOcc::new(2, 3)).is_err());

        let x = FIGURE_2.word();
        let fs = find_fs_double_squares(&x).unwrap();
        assert_eq!(gap_tail(&fs[0], &fs[3]).unwrap(), GapTail { gap: 3, tail: 3 });
        assert!(gap_tail(&fs[3], &fs[0]).is_err());
        assert_eq!(gap_tail(&fs[0], &fs[0]), Err(Error::Order { first: 1, second: 1 }));
    }

    #[test]
    fn host_mismatch() {
        let a = FIGURE_2.word();
        let b = FIGURE_2.word();
        let fa = find_fs_double_squares(&a).unwrap();
        let fb = find_fs_double_squares(&b).unwrap();
        assert_eq!(gap_tail(&fa[0], &fb[1]), Err(Error::HostMismatch));
    }

    #[test]
    fn figure2_alpha() {
        let x = FIGURE_2.word();
        let fs = find_fs_double_squares(&x).unwrap();
        for v in &fs[1..] {
            assert_eq!(classify_mate(&fs[0], v).unwrap(), MateKind::Alpha);
        }
    }

    #[test]
    fn figure4_beta() {
        let x = FIGURE_4.word();
        let fs = find_fs_double_squares(&x).unwrap();
        let kinds: alloc::vec::Vec<_> = fs[1..]
            .iter()
            .map(|v| classify_mate(&fs[0], v).unwrap())
            .collect();
        let first_beta = kinds.iter().position(|k| *k == MateKind::Beta).unwrap();
        assert!(kinds[..first_beta].iter().all(|k| *k == MateKind::Alpha));
        let v = &fs[first_beta + 1];
        assert_eq!(v.start() - fs[0].start(), 6);
    }

    #[test]
    fn gamma_and_super_epsilon() {
        let x = b"ababaababababaababababaababaababababaababbba";
        let fs = find_fs_double_squares(x).unwrap();
        let starts: alloc::vec::Vec<_> = fs.iter().map(|d| d.start()).collect();
        assert_eq!(starts, [8, 11, 24]);
        let u = &fs[0];
        assert_eq!(r1_host(u), 13);
        // |v| = |U| = 9 and 11 < 8 + 3·2
        assert_eq!(fs[1].square.short_len(), u.square.long_len());
        assert_eq!(classify_mate(u, &fs[1]).unwrap(), MateKind::Gamma);
        assert!(is_gamma_mate(u, &fs[1]).unwrap());
        assert!(!is_alpha_mate(u, &fs[1]).unwrap());
        assert_eq!(classify_mate(u, &fs[2]).unwrap(), MateKind::SuperEpsilon);
    }

    #[test]
    fn long_prefix_forms() {
        let f = Factorization::from_parts(b"aaabaa", 4, 2, 2);
        // s1 = "" , u1^1 u2 u1^3 u2
        let mut v = f.u1.clone();
        v.extend_from_slice(&f.u2);
        v.extend_from_slice(&f.u1.repeat(3));
        v.extend_from_slice(&f.u2);
        assert!(has_long_prefix_form(&v, &f));
        assert!(!has_long_prefix_form(&v[..v.len() - 1], &f));
    }
}
