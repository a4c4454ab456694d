//! FS-double squares and their canonical factorization
//! `u = u1^e1 u2`, `U = u1^e1 u2 u1^e2`.

use alloc::vec::Vec;

use crate::squares::{is_square_at, rightmost_table, RightmostTable, SquareOcc};
use crate::word::{is_prefix_of_power, is_primitive, lcp, lcs, power, primitive_root};
use crate::{Error, Result};

/// Two squares `u²` and `U²` starting at the same position of a host, with
/// `|u| < |U| < 2|u|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DoubleSquare<'a> {
    host: &'a [u8],
    start: usize,
    short_len: usize,
    long_len: usize,
}

impl<'a> DoubleSquare<'a> {
    /// Checks that both squares occur at `start` (1-based) and are balanced.
    /// Rightmost status is not checked here.
    pub fn new(host: &'a [u8], start: usize, short_len: usize, long_len: usize) -> Result<Self> {
        if start == 0
            || short_len == 0
            || !(short_len < long_len && long_len < 2 * short_len)
            || !is_square_at(host, start - 1, short_len)
            || !is_square_at(host, start - 1, long_len)
        {
            return Err(Error::NotBalanced);
        }
        Ok(DoubleSquare {
            host,
            start,
            short_len,
            long_len,
        })
    }

    pub fn host(&self) -> &'a [u8] {
        self.host
    }

    pub fn start(&self) -> usize {
        self.start
    }

    /// `|u|`.
    pub fn short_len(&self) -> usize {
        self.short_len
    }

    /// `|U|`.
    pub fn long_len(&self) -> usize {
        self.long_len
    }

    /// `u`.
    pub fn short(&self) -> &'a [u8] {
        &self.host[self.start - 1..self.start - 1 + self.short_len]
    }

    /// `U`.
    pub fn long(&self) -> &'a [u8] {
        &self.host[self.start - 1..self.start - 1 + self.long_len]
    }

    pub fn short_square(&self) -> SquareOcc {
        SquareOcc::new(self.start, self.short_len)
    }

    pub fn long_square(&self) -> SquareOcc {
        SquareOcc::new(self.start, self.long_len)
    }

    /// `e(u_[1])`: end of the first copy of `u`.
    pub fn end_of_short_first(&self) -> usize {
        self.start + self.short_len - 1
    }

    /// `e(U²)`.
    pub fn end(&self) -> usize {
        self.start + 2 * self.long_len - 1
    }
}

/// The unique `(u1, u2, e1, e2)` of a factorizable double square.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factorization {
    /// Primitive repeating part.
    pub u1: Vec<u8>,
    /// Non-trivial proper prefix of `u1` completing `u`.
    pub u2: Vec<u8>,
    /// Complement of `u2` in `u1`: `u1 = u2 · u2_bar`.
    pub u2_bar: Vec<u8>,
    /// The conjugate `u2_bar · u2` of `u1`.
    pub u1_hat: Vec<u8>,
    pub e1: usize,
    pub e2: usize,
}

impl Factorization {
    /// Builds from parts; `u2_len` must be in `1..|u1|`.
    pub fn from_parts(u1: &[u8], u2_len: usize, e1: usize, e2: usize) -> Self {
        debug_assert!(0 < u2_len && u2_len < u1.len());
        let (u2, u2_bar) = u1.split_at(u2_len);
        let mut u1_hat = u2_bar.to_vec();
        u1_hat.extend_from_slice(u2);
        Factorization {
            u1: u1.to_vec(),
            u2: u2.to_vec(),
            u2_bar: u2_bar.to_vec(),
            u1_hat,
            e1,
            e2,
        }
    }

    pub fn u1_len(&self) -> usize {
        self.u1.len()
    }

    pub fn u2_len(&self) -> usize {
        self.u2.len()
    }

    /// `|u| = e1|u1| + |u2|`.
    pub fn short_len(&self) -> usize {
        self.e1 * self.u1.len() + self.u2.len()
    }

    /// `|U| = (e1+e2)|u1| + |u2|`.
    pub fn long_len(&self) -> usize {
        (self.e1 + self.e2) * self.u1.len() + self.u2.len()
    }

    /// `u1^e1 u2`.
    pub fn short(&self) -> Vec<u8> {
        let mut u = power(&self.u1, self.e1);
        u.extend_from_slice(&self.u2);
        u
    }

    /// `u1^e1 u2 u1^e2`.
    pub fn long(&self) -> Vec<u8> {
        let mut big = self.short();
        big.extend_from_slice(&power(&self.u1, self.e2));
        big
    }

    /// `U²`.
    pub fn long_square(&self) -> Vec<u8> {
        let big = self.long();
        let mut sq = big.clone();
        sq.extend_from_slice(&big);
        sq
    }

    /// `lcp(u1, û1)`: how far the double square can be cyclically shifted right.
    pub fn lcp(&self) -> usize {
        lcp(&self.u1, &self.u1_hat)
    }

    /// `lcs(u1, û1)`: how far it can be shifted left.
    pub fn lcs(&self) -> usize {
        lcs(&self.u1, &self.u1_hat)
    }

    /// `(e1, e2)`.
    pub fn exponents(&self) -> (usize, usize) {
        (self.e1, self.e2)
    }
}

/// Which of the three factorizability conditions hold.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Conditions {
    /// `u` is primitive.
    pub a: bool,
    /// `U` is primitive.
    pub b: bool,
    /// `u²` has no further occurrence in `U²`.
    pub c: bool,
}

impl Conditions {
    pub fn any(&self) -> bool {
        self.a || self.b || self.c
    }
}

/// `u` is a proper prefix of `U`, `|u| < |U| < 2|u|` and `u²` is a prefix of `U²`.
fn is_balanced_pair(u: &[u8], big: &[u8]) -> bool {
    let (n, m) = (u.len(), big.len());
    if n == 0 || !(n < m && m < 2 * n) || big[..n] != *u {
        return false;
    }
    // u² prefix of U²: the second copy of u starts at |u| inside U U
    (0..n).all(|i| u[i] == big[(n + i) % m])
}

fn long_square_of(big: &[u8]) -> Vec<u8> {
    let mut sq = big.to_vec();
    sq.extend_from_slice(big);
    sq
}

pub fn check_factorizable(u: &[u8], big: &[u8]) -> Result<Conditions> {
    if !is_balanced_pair(u, big) {
        return Err(Error::NotBalanced);
    }
    let sq = long_square_of(big);
    let uu = &sq[..2 * u.len()];
    let c = !sq
        .windows(uu.len())
        .skip(1)
        .any(|w| w == uu);
    Ok(Conditions {
        a: is_primitive(u)?,
        b: is_primitive(big)?,
        c,
    })
}

/// Canonical factorization by the constructive route: `v1` is the part of `U`
/// past `u`, `u1` is the primitive root of `v1`, and `e1`, `u2` are read off
/// `u`, which has period `|u1|`.
pub fn factorize(u: &[u8], big: &[u8]) -> Result<Factorization> {
    if !check_factorizable(u, big)?.any() {
        return Err(Error::NotFactorizable);
    }
    factorize_unchecked(u, big)
}

/// [`factorize`] without the condition check, for pairs already known to be
/// balanced and FS (which implies condition (c)).
pub(crate) fn factorize_unchecked(u: &[u8], big: &[u8]) -> Result<Factorization> {
    let v1 = &big[u.len()..];
    let (u1, e2) = primitive_root(v1)?;
    let (e1, rest) = (u.len() / u1.len(), u.len() % u1.len());
    if rest == 0 || e1 < e2 || !is_prefix_of_power(u, u1) {
        return Err(Error::NotFactorizable);
    }
    let f = Factorization::from_parts(u1, rest, e1, e2);
    debug_assert_eq!(f.long(), big);
    Ok(f)
}

/// One solution `u = w1^f1 w2`, `U = w1^f1 w2 w1^f2` found by brute force.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub w1_len: usize,
    pub f1: usize,
    pub w2_len: usize,
    pub f2: usize,
}

/// Every `(w1, f1, w2, f2)` with `w1` primitive, `w2` a non-trivial proper
/// prefix of `w1`, `f1 ≥ f2 ≥ 1`, `u = w1^f1 w2` and `U = u w1^f2`.
///
/// Independent of [`factorize`]: it tries every candidate length of `w1` and
/// checks the two equations literally.
pub fn factorization_candidates(u: &[u8], big: &[u8]) -> Vec<Candidate> {
    let mut out = Vec::new();
    for m in 2..=u.len() {
        let w1 = &u[..m];
        if !is_primitive(w1).unwrap_or(false) {
            continue;
        }
        for f1 in 1..=u.len() / m {
            let w2_len = u.len() - f1 * m;
            if w2_len == 0 || w2_len >= m {
                continue;
            }
            let mut lhs = power(w1, f1);
            lhs.extend_from_slice(&w1[..w2_len]);
            if lhs != u {
                continue;
            }
            for f2 in 1..=f1 {
                let mut rhs = lhs.clone();
                rhs.extend_from_slice(&power(w1, f2));
                if rhs == big {
                    out.push(Candidate {
                        w1_len: m,
                        f1,
                        w2_len,
                        f2,
                    });
                }
            }
        }
    }
    out
}

/// Ways of writing `u = w1^f1 w2` with `w1` primitive, `w2` a non-trivial
/// proper prefix of `w1` and `f1 ≥ min_f1`; returned as `(|w1|, f1)`.
pub fn periodic_decompositions(u: &[u8], min_f1: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for m in 2..=u.len() {
        let (f1, r) = (u.len() / m, u.len() % m);
        if f1 >= min_f1.max(1)
            && r > 0
            && is_prefix_of_power(u, &u[..m])
            && is_primitive(&u[..m]).unwrap_or(false)
        {
            out.push((m, f1));
        }
    }
    out
}

/// `(left, right) = (lcs(u1, û1), lcp(u1, û1))`.
pub fn shift_budget(f: &Factorization) -> (usize, usize) {
    (f.lcs(), f.lcp())
}

/// Checks the structure forced when `u = v^k` with `k ≥ 2`: `e1 = e2 = 1`,
/// `U = v^(2k-1) v1` for a non-trivial proper prefix `v1` of `v`,
/// `u1 = v^(k-1) v1` and `v1 u2 = v`.
pub fn verify_nonprimitive_case(u: &[u8], big: &[u8]) -> Result<bool> {
    let f = factorize(u, big)?;
    let (v, k) = primitive_root(u)?;
    if k < 2 {
        return Err(Error::Precondition("shorter generator is primitive"));
    }
    if f.e1 != 1 || f.e2 != 1 {
        return Ok(false);
    }
    let v1_len = big.len() - (2 * k - 1) * v.len();
    if big.len() < (2 * k - 1) * v.len() || v1_len == 0 || v1_len >= v.len() {
        return Ok(false);
    }
    let v1 = &v[..v1_len];
    let mut expected_big = power(v, 2 * k - 1);
    expected_big.extend_from_slice(v1);
    let mut expected_u1 = power(v, k - 1);
    expected_u1.extend_from_slice(v1);
    let mut v1u2 = v1.to_vec();
    v1u2.extend_from_slice(&f.u2);
    Ok(expected_big == big && expected_u1 == f.u1 && v1u2 == v)
}

/// An FS-double square together with its factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FsDoubleSquare<'a> {
    pub square: DoubleSquare<'a>,
    pub factorization: Factorization,
}

impl<'a> FsDoubleSquare<'a> {
    pub fn start(&self) -> usize {
        self.square.start()
    }
}

/// Every FS-double square of the table's host, sorted by start.
///
/// A start holding three or more rightmost squares, or a rightmost pair that
/// does not factorize, is reported as a falsification error.
pub fn fs_double_squares_in<'a>(table: &RightmostTable<'a>) -> Result<Vec<FsDoubleSquare<'a>>> {
    let host = table.host();
    let mut out = Vec::new();
    for group in table.groups() {
        match group {
            [_] => {}
            [short, long] => {
                let unfactorizable = || Error::UnfactorizableFs {
                    start: short.start,
                    short_len: short.gen_len,
                    long_len: long.gen_len,
                };
                let square = DoubleSquare::new(host, short.start, short.gen_len, long.gen_len)
                    .map_err(|_| unfactorizable())?;
                let factorization = factorize_unchecked(square.short(), square.long())
                    .map_err(|_| unfactorizable())?;
                out.push(FsDoubleSquare {
                    square,
                    factorization,
                });
            }
            _ => {
                return Err(Error::ThreeRightmost {
                    start: group[0].start,
                    count: group.len(),
                })
            }
        }
    }
    Ok(out)
}

pub fn find_fs_double_squares(w: &[u8]) -> Result<Vec<FsDoubleSquare<'_>>> {
    fs_double_squares_in(&rightmost_table(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::construct::{double_square_word, FIGURE_U1, FIGURE_U2_LEN};
    use alloc::vec;

    #[test]
    fn minimal_example() {
        let fs = find_fs_double_squares(b"abaababaab").unwrap();
        assert_eq!(fs.len(), 1);
        let d = &fs[0];
        assert_eq!((d.start(), d.square.short_len(), d.square.long_len()), (1, 3, 5));
        let f = &d.factorization;
        assert_eq!((&f.u1[..], &f.u2[..], f.e1, f.e2), (&b"ab"[..], &b"a"[..], 1, 1));
        assert!(find_fs_double_squares(b"ab").unwrap().is_empty());
    }

    #[test]
    fn figure_two_has_four() {
        let x = double_square_word(FIGURE_U1, FIGURE_U2_LEN, 2, 2, 3);
        let starts: Vec<usize> = find_fs_double_squares(&x)
            .unwrap()
            .iter()
            .map(|d| d.start())
            .collect();
        assert_eq!(starts, vec![1, 2, 3, 4]);
    }

    #[test]
    fn factorize_examples() {
        let f = factorize(b"aba", b"abaab").unwrap();
        assert_eq!(f, Factorization::from_parts(b"ab", 1, 1, 1));

        let f1 = Factorization::from_parts(FIGURE_U1, FIGURE_U2_LEN, 4, 2);
        let f = factorize(&f1.short(), &f1.long()).unwrap();
        assert_eq!((f.e1, f.e2), (4, 2));
        assert_eq!(f.u1, b"aaabaa");
        assert_eq!(f.u2, b"aaab");

        // aabbaa² is not a prefix of (aabbaabba)²
        assert_eq!(factorize(b"aabbaa", b"aabbaabba"), Err(Error::NotBalanced));
        assert_eq!(Error::NotBalanced.to_string(), "not a balanced double square");
        // |U| == 2|u| is rejected
        assert_eq!(factorize(b"ab", b"abab"), Err(Error::NotBalanced));
        assert_eq!(factorize(b"aa", b"aaa"), Err(Error::NotFactorizable));
    }

    #[test]
    fn factorize_reassembles() {
        for (u, big) in [(&b"aba"[..], &b"abaab"[..]), (b"abaaba", b"abaabaabaab")] {
            let f = factorize(u, big).unwrap();
            assert_eq!(f.short(), u);
            assert_eq!(f.long(), big);
        }
    }

    #[test]
    fn condition_labels() {
        let c = check_factorizable(b"aba", b"abaab").unwrap();
        assert_eq!(c, Conditions { a: true, b: true, c: true });
        let c = check_factorizable(b"abab", b"ababab").unwrap();
        assert_eq!(c, Conditions::default());
        let c = check_factorizable(b"aa", b"aaa").unwrap();
        assert_eq!(c, Conditions::default());
        assert_eq!(check_factorizable(b"ab", b"abb"), Err(Error::NotBalanced));
    }

    #[test]
    fn shift_budgets() {
        let f = Factorization::from_parts(b"aaabaa", 4, 2, 2);
        assert_eq!(f.u1_hat, b"aaaaab");
        assert_eq!(shift_budget(&f), (0, 3));
        assert_eq!(shift_budget(&Factorization::from_parts(b"ab", 1, 1, 1)), (0, 0));
        let f = Factorization::from_parts(b"aab", 1, 1, 1);
        assert_eq!(f.u1_hat, b"aba");
        assert_eq!(shift_budget(&f), (0, 1));
    }

    #[test]
    fn nonprimitive_case() {
        // v = aba, k = 2: u = (aba)², U = (aba)³ ab, u1 = aba·ab, u2 = a
        assert_eq!(verify_nonprimitive_case(b"abaaba", b"abaabaabaab"), Ok(true));
        // (abab, abababa) is not a double square at all
        assert_eq!(
            verify_nonprimitive_case(b"abab", b"abababa"),
            Err(Error::NotBalanced)
        );
        // no balanced U makes aa factorizable
        assert!(verify_nonprimitive_case(b"aa", b"aaa").is_err());
        assert!(matches!(
            verify_nonprimitive_case(b"aba", b"abaab"),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn brute_force_candidates() {
        let c = factorization_candidates(b"aba", b"abaab");
        assert_eq!(c, vec![Candidate { w1_len: 2, f1: 1, w2_len: 1, f2: 1 }]);
        // the non-uniqueness example for exponent one
        let d = periodic_decompositions(b"aabbaabbaa", 1);
        assert!(d.contains(&(4, 2)) && d.contains(&(9, 1)));
        assert_eq!(periodic_decompositions(b"aabbaabbaa", 2), vec![(4, 2)]);
    }

    #[test]
    fn double_square_validation() {
        assert!(DoubleSquare::new(b"abaababaab", 1, 3, 5).is_ok());
        assert!(DoubleSquare::new(b"abaababaab", 1, 3, 6).is_err());
        assert!(DoubleSquare::new(b"abaababaab", 2, 3, 5).is_err());
    }
}
