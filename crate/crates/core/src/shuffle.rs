//! The shuffle bialgebra `(T(V), ⧢, Δ)`.
//!
//! Shuffles are built from the left-letter recursion
//! `xu ⧢ yv = x(u ⧢ yv) + y(xu ⧢ v)`, tabulated over suffix pairs for each
//! call. The half-shuffle is `xu ≺ v = x(u ⧢ v)`, extended to the unit by
//! `a ≺ 1 = a` and `1 ≺ a = 0`; `1 ≺ 1` is an error.

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::lincomb::{outer, tensor_product, LinComb, Pair, Tensor};
use crate::linear::LinMap;
use crate::scalar::Rational;
use crate::word::{left_concat_lin, Elem, Tensor2, Word};

/// `u ⧢ v` on two words.
pub fn shuffle_words(u: &[usize], v: &[usize]) -> LinComb<Word> {
    let (m, n) = (u.len(), v.len());
    if m == 0 {
        return LinComb::basis(Word::from(v));
    }
    if n == 0 {
        return LinComb::basis(Word::from(u));
    }
    // table[i][j] = u[i..] ⧢ v[j..], filled from the ends inwards
    let mut table: Vec<Vec<LinComb<Word>>> = vec![vec![LinComb::zero(); n + 1]; m + 1];
    for i in (0..=m).rev() {
        for j in (0..=n).rev() {
            table[i][j] = if i == m {
                LinComb::basis(Word::from(&v[j..]))
            } else if j == n {
                LinComb::basis(Word::from(&u[i..]))
            } else {
                let mut acc = prefix(u[i], &table[i + 1][j]);
                acc += &prefix(v[j], &table[i][j + 1]);
                acc
            };
        }
    }
    std::mem::take(&mut table[0][0])
}

fn prefix(x: usize, a: &LinComb<Word>) -> LinComb<Word> {
    a.iter().map(|(w, c)| (w.prepend(x), c.clone())).collect()
}

pub(crate) fn shuffle_lin(a: &LinComb<Word>, b: &LinComb<Word>) -> LinComb<Word> {
    a.bilinear(b, |u, v| shuffle_words(u.as_slice(), v.as_slice()))
}

/// `u ≺ v` on two words.
pub fn half_shuffle_words(u: &[usize], v: &[usize]) -> Result<LinComb<Word>> {
    match (u.split_first(), v.is_empty()) {
        (None, true) => Err(AlgebraError::Undefined11),
        (None, false) => Ok(LinComb::zero()),
        (Some((x, rest)), _) => Ok(prefix(*x, &shuffle_words(rest, v))),
    }
}

pub(crate) fn half_shuffle_lin(a: &LinComb<Word>, b: &LinComb<Word>) -> Result<LinComb<Word>> {
    a.try_bilinear(b, |u, v| half_shuffle_words(u.as_slice(), v.as_slice()))
}

/// `Δ(x_1...x_n) = Σ_i x_1...x_i ⊗ x_{i+1}...x_n`.
pub fn deconcat_word(w: &Word) -> Tensor<Word> {
    (0..=w.len())
        .map(|i| {
            let (l, r) = w.split_at(i);
            (Pair(l, r), Rational::one())
        })
        .collect()
}

pub(crate) fn deconcat_lin(a: &LinComb<Word>) -> Tensor<Word> {
    a.map_linear(deconcat_word)
}

/// `T(F)` on a word: letterwise substitution expanded multilinearly.
pub(crate) fn tensor_map_word(f: &LinMap, w: &Word) -> LinComb<Word> {
    w.as_slice()
        .iter()
        .rev()
        .fold(LinComb::basis(Word::empty()), |acc, &x| {
            left_concat_lin(&f.image(x), &acc)
        })
}

/// `u ⧢ v`.
pub fn shuffle(u: &Elem, v: &Elem) -> Result<Elem> {
    u.same_dim(v)?;
    Ok(Elem::from_lin_unchecked(u.dim(), shuffle_lin(u.lin(), v.lin())))
}

/// `u ≺ v`, with `a ≺ 1 = a` and `1 ≺ a = 0` on the augmentation ideal.
///
/// Fails with [`AlgebraError::Undefined11`] when both arguments have a
/// nonzero coefficient on the empty word.
pub fn half_shuffle(u: &Elem, v: &Elem) -> Result<Elem> {
    u.same_dim(v)?;
    if !counit(u).is_zero() && !counit(v).is_zero() {
        return Err(AlgebraError::Undefined11);
    }
    Ok(Elem::from_lin_unchecked(
        u.dim(),
        half_shuffle_lin(u.lin(), v.lin())?,
    ))
}

/// Deconcatenation coproduct.
pub fn deconcat(a: &Elem) -> Tensor2 {
    Tensor2::from_lin_unchecked(a.dim(), deconcat_lin(a.lin()))
}

/// `δ̃(a) = Δ(a) − a⊗1 − 1⊗a` on the augmentation ideal.
pub fn reduced_coproduct(a: &Elem) -> Result<Tensor2> {
    if !counit(a).is_zero() {
        return Err(AlgebraError::NotAugmentation);
    }
    Ok(Tensor2::from_lin_unchecked(
        a.dim(),
        reduced_lin(a.lin()),
    ))
}

pub(crate) fn reduced_lin(a: &LinComb<Word>) -> Tensor<Word> {
    let one = LinComb::basis(Word::empty());
    let mut t = deconcat_lin(a);
    t -= &outer(a, &one);
    t -= &outer(&one, a);
    t
}

/// Coefficient of the empty word.
pub fn counit(a: &Elem) -> Rational {
    a.coeff(&Word::empty())
}

/// `T(F)(a)`.
pub fn tensor_map(f: &LinMap, a: &Elem) -> Result<Elem> {
    if f.dim() != a.dim() {
        return Err(AlgebraError::DimensionMismatch {
            expected: a.dim(),
            found: f.dim(),
        });
    }
    Ok(Elem::from_lin_unchecked(
        a.dim(),
        a.lin().map_linear(|w| tensor_map_word(f, w)),
    ))
}

/// `x_{i1} ⧢ ... ⧢ x_{ik}`, the image of a monomial in `coS(V)`; the empty
/// multiset gives `1`.
pub fn symmetrize(dim: usize, letters: &[usize]) -> Result<Elem> {
    let lin = symmetrize_lin(letters);
    Elem::from_lin(dim, lin)
}

pub(crate) fn symmetrize_lin(letters: &[usize]) -> LinComb<Word> {
    letters
        .iter()
        .fold(LinComb::basis(Word::empty()), |acc, &x| {
            shuffle_lin(&acc, &LinComb::basis(Word::letter(x)))
        })
}

/// True iff `Δ(a) = a⊗1 + 1⊗a`.
pub fn is_primitive(a: &Elem) -> bool {
    counit(a).is_zero() && reduced_lin(a.lin()).is_zero()
}

/// Componentwise shuffle on tensor squares: `(a⊗b)⧢(c⊗d) = (a⧢c)⊗(b⧢d)`.
pub fn shuffle_tensor(s: &Tensor2, t: &Tensor2) -> Result<Tensor2> {
    if s.dim() != t.dim() {
        return Err(AlgebraError::DimensionMismatch {
            expected: s.dim(),
            found: t.dim(),
        });
    }
    Ok(Tensor2::from_lin_unchecked(
        s.dim(),
        tensor_product(s.lin(), t.lin(), |a, b| {
            shuffle_words(a.as_slice(), b.as_slice())
        }),
    ))
}
