//! Words, elements of `T(V)` and their tensor squares.
//!
//! A [`Word`] is a pure tensor `x_{i1} ... x_{in}` stored as its letter
//! indices; the empty word is the unit `1`. An [`Elem`] is a rational
//! linear combination of words that remembers the dimension of `V`, so
//! elements of different ambient spaces cannot be combined by accident.

use std::cmp::Ordering;
use std::fmt;

use num_traits::One;

use crate::error::{AlgebraError, Result};
use crate::lincomb::{Basis, LinComb, Pair, Tensor};
use crate::scalar::Rational;

/// A finite sequence of letter indices, ordered length-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: impl Into<Vec<usize>>) -> Self {
        Word(letters.into())
    }

    pub fn letter(x: usize) -> Self {
        Word(vec![x])
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `x · self`.
    pub fn prepend(&self, x: usize) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(x);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// First letter and the remaining suffix, `None` for the empty word.
    pub fn split_first(&self) -> Option<(usize, Word)> {
        self.0
            .split_first()
            .map(|(x, rest)| (*x, Word(rest.to_vec())))
    }

    /// `(prefix, suffix)` with the prefix of length `i`.
    pub fn split_at(&self, i: usize) -> (Word, Word) {
        let (a, b) = self.0.split_at(i);
        (Word(a.to_vec()), Word(b.to_vec()))
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.0.iter().copied().max()
    }

    /// All words of length `n` over `dim` letters, in lexicographic order.
    pub fn all(dim: usize, n: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..n {
            out = out
                .iter()
                .flat_map(|w| {
                    (0..dim).map(move |x| {
                        let mut v = w.0.clone();
                        v.push(x);
                        Word(v)
                    })
                })
                .collect();
        }
        out
    }
}

impl From<&[usize]> for Word {
    fn from(v: &[usize]) -> Self {
        Word(v.to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for x in &self.0 {
            write!(f, "x{x}")?;
        }
        Ok(())
    }
}

impl Basis for Word {
    fn degree(&self) -> usize {
        self.0.len()
    }

    fn letters(&self) -> Vec<usize> {
        self.0.clone()
    }
}

/// The ambient space `V = Vect(x_0, ..., x_{d-1})`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BialgebraContext {
    dim: usize,
}

impl BialgebraContext {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(AlgebraError::EmptyBasis);
        }
        Ok(BialgebraContext { dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn zero(&self) -> Elem {
        Elem::zero(self.dim)
    }

    pub fn one(&self) -> Elem {
        Elem::one(self.dim)
    }

    pub fn letter(&self, x: usize) -> Result<Elem> {
        Elem::word(self.dim, &[x])
    }

    pub fn word(&self, letters: &[usize]) -> Result<Elem> {
        Elem::word(self.dim, letters)
    }

    /// Basis words of length `n`.
    pub fn words(&self, n: usize) -> Vec<Word> {
        Word::all(self.dim, n)
    }
}

fn check_word(dim: usize, w: &Word) -> Result<()> {
    match w.max_letter() {
        Some(x) if x >= dim => Err(AlgebraError::LetterOutOfRange { letter: x, dim }),
        _ => Ok(()),
    }
}

fn check_dims(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(AlgebraError::DimensionMismatch {
            expected: a,
            found: b,
        });
    }
    Ok(())
}

/// A general element of `T(V)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Elem {
    dim: usize,
    terms: LinComb<Word>,
}

impl Elem {
    pub fn zero(dim: usize) -> Self {
        Elem {
            dim,
            terms: LinComb::zero(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Elem {
            dim,
            terms: LinComb::basis(Word::empty()),
        }
    }

    pub fn word(dim: usize, letters: &[usize]) -> Result<Self> {
        Self::from_lin(dim, LinComb::basis(Word::from(letters)))
    }

    /// Wraps a combination after checking every letter is below `dim`.
    pub fn from_lin(dim: usize, terms: LinComb<Word>) -> Result<Self> {
        for w in terms.keys() {
            check_word(dim, w)?;
        }
        Ok(Elem { dim, terms })
    }

    pub(crate) fn from_lin_unchecked(dim: usize, terms: LinComb<Word>) -> Self {
        Elem { dim, terms }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lin(&self) -> &LinComb<Word> {
        &self.terms
    }

    pub fn into_lin(self) -> LinComb<Word> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.coeff(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn checked_add(&self, other: &Elem) -> Result<Elem> {
        check_dims(self.dim, other.dim)?;
        Ok(Elem::from_lin_unchecked(self.dim, &self.terms + &other.terms))
    }

    pub fn checked_sub(&self, other: &Elem) -> Result<Elem> {
        check_dims(self.dim, other.dim)?;
        Ok(Elem::from_lin_unchecked(self.dim, &self.terms - &other.terms))
    }

    pub fn scale(&self, c: &Rational) -> Elem {
        Elem::from_lin_unchecked(self.dim, self.terms.scale(c))
    }

    pub fn neg(&self) -> Elem {
        Elem::from_lin_unchecked(self.dim, -&self.terms)
    }

    /// Replaces every word `w` by `x·w`.
    pub fn left_concat(&self, x: usize) -> Result<Elem> {
        if x >= self.dim {
            return Err(AlgebraError::LetterOutOfRange {
                letter: x,
                dim: self.dim,
            });
        }
        Ok(Elem::from_lin_unchecked(self.dim, left_concat(x, &self.terms)))
    }

    /// Sum of the terms of word length exactly `n`.
    pub fn degree_project(&self, n: usize) -> Elem {
        Elem::from_lin_unchecked(self.dim, self.terms.degree_part(n))
    }

    pub(crate) fn same_dim(&self, other: &Elem) -> Result<()> {
        check_dims(self.dim, other.dim)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.terms.fmt(f)
    }
}

/// `x·a` on raw combinations.
pub(crate) fn left_concat(x: usize, a: &LinComb<Word>) -> LinComb<Word> {
    a.iter().map(|(w, c)| (w.prepend(x), c.clone())).collect()
}

/// `u·a` for a degree-one combination `u` (the image of a letter).
pub(crate) fn left_concat_lin(u: &LinComb<Word>, a: &LinComb<Word>) -> LinComb<Word> {
    u.bilinear(a, |l, w| LinComb::basis(l.concat(w)))
}

/// An element of `T(V) ⊗ T(V)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor2 {
    dim: usize,
    terms: Tensor<Word>,
}

impl Tensor2 {
    pub fn zero(dim: usize) -> Self {
        Tensor2 {
            dim,
            terms: Tensor::zero(),
        }
    }

    pub fn from_lin(dim: usize, terms: Tensor<Word>) -> Result<Self> {
        for Pair(l, r) in terms.keys() {
            check_word(dim, l)?;
            check_word(dim, r)?;
        }
        Ok(Tensor2 { dim, terms })
    }

    pub(crate) fn from_lin_unchecked(dim: usize, terms: Tensor<Word>) -> Self {
        Tensor2 { dim, terms }
    }

    /// `c · (left ⊗ right)` on two words.
    pub fn pure(dim: usize, left: &[usize], right: &[usize], c: Rational) -> Result<Self> {
        Self::from_lin(
            dim,
            LinComb::term(Pair(Word::from(left), Word::from(right)), c),
        )
    }

    pub fn pure_one(dim: usize, left: &[usize], right: &[usize]) -> Result<Self> {
        Self::pure(dim, left, right, Rational::one())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lin(&self) -> &Tensor<Word> {
        &self.terms
    }

    pub fn into_lin(self) -> Tensor<Word> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn checked_add(&self, other: &Tensor2) -> Result<Tensor2> {
        check_dims(self.dim, other.dim)?;
        Ok(Tensor2::from_lin_unchecked(self.dim, &self.terms + &other.terms))
    }

    pub fn checked_sub(&self, other: &Tensor2) -> Result<Tensor2> {
        check_dims(self.dim, other.dim)?;
        Ok(Tensor2::from_lin_unchecked(self.dim, &self.terms - &other.terms))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Pair<Word>, &Rational)> {
        self.terms.iter()
    }
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.terms.fmt(f)
    }
}
