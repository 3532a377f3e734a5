//! The Demazure product on `W~`.
//!
//! `x * y` is the Bruhat-maximal element of `{uu' : u <= x, u' <= y}`. It is
//! evaluated by folding `x` along a reduced word of `y`: each letter `s` is
//! multiplied on if it makes the element longer and skipped otherwise.
//! Length-zero parts pass through: `x * (y'τ) = (x * y')τ`.

use crate::affine_weyl::{AffineElt, AffineWeylGroup};

/// Folds `x` along an arbitrary word in `S~`.
pub fn star_fold(g: &AffineWeylGroup, x: &AffineElt, word: &[usize]) -> AffineElt {
    let mut cur = x.clone();
    let mut len = g.length(&cur);
    for &i in word {
        let next = g.mul(&cur, g.s(i));
        let next_len = g.length(&next);
        if next_len > len {
            cur = next;
            len = next_len;
        }
    }
    cur
}

pub fn star(g: &AffineWeylGroup, x: &AffineElt, y: &AffineElt) -> AffineElt {
    let (word, tau) = g.reduced_word(y);
    g.mul(&star_fold(g, x, &word), &tau)
}
