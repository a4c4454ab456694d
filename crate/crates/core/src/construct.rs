//! Builders for words hosting a chosen double square, including the four
//! illustrated examples.

use alloc::vec::Vec;

use crate::doublesq::Factorization;

/// `u1` shared by all four illustrated examples.
pub const FIGURE_U1: &[u8] = b"aaabaa";
/// `|u2|` shared by all four illustrated examples (`u2 = aaab`).
pub const FIGURE_U2_LEN: usize = 4;

/// `U²` followed by the first `ext_len` symbols of `U` (the continuation that
/// keeps shifting both squares right).
pub fn double_square_word(u1: &[u8], u2_len: usize, e1: usize, e2: usize, ext_len: usize) -> Vec<u8> {
    let f = Factorization::from_parts(u1, u2_len, e1, e2);
    let big = f.long();
    let mut x = f.long_square();
    x.extend(big.iter().cycle().take(ext_len));
    x
}

/// Parameters of one illustrated example.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FigureSpec {
    pub number: u8,
    pub e1: usize,
    pub e2: usize,
    pub ext_len: usize,
}

impl FigureSpec {
    pub fn factorization(&self) -> Factorization {
        Factorization::from_parts(FIGURE_U1, FIGURE_U2_LEN, self.e1, self.e2)
    }

    pub fn word(&self) -> Vec<u8> {
        double_square_word(FIGURE_U1, FIGURE_U2_LEN, self.e1, self.e2, self.ext_len)
    }
}

/// Shifts of the inversion factor inside a bare `U²`.
pub const FIGURE_1: FigureSpec = FigureSpec { number: 1, e1: 4, e2: 2, ext_len: 0 };
/// An α-family with equal exponents.
pub const FIGURE_2: FigureSpec = FigureSpec { number: 2, e1: 2, e2: 2, ext_len: 3 };
/// An α-family with `e1 > e2`.
pub const FIGURE_3: FigureSpec = FigureSpec { number: 3, e1: 2, e2: 1, ext_len: 3 };
/// An (α+β)-family with one α-segment and two β-segments.
pub const FIGURE_4: FigureSpec = FigureSpec { number: 4, e1: 5, e2: 1, ext_len: 15 };

pub const FIGURES: [FigureSpec; 4] = [FIGURE_1, FIGURE_2, FIGURE_3, FIGURE_4];
