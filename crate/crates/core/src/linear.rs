//! Linear data on `V`: endomorphisms, linear forms and preLie structure
//! constants.

use num_traits::Zero;

use crate::error::{AlgebraError, Result};
use crate::lincomb::LinComb;
use crate::scalar::Rational;
use crate::word::{Elem, Word};

fn check_letter(x: usize, dim: usize) -> Result<()> {
    if x >= dim {
        return Err(AlgebraError::LetterOutOfRange { letter: x, dim });
    }
    Ok(())
}

/// An endomorphism of `V`, stored as the images of the basis letters:
/// `images[i][k]` is the coefficient of `x_k` in `F(x_i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinMap {
    images: Vec<Vec<Rational>>,
}

impl LinMap {
    pub fn new(images: Vec<Vec<Rational>>) -> Result<Self> {
        let d = images.len();
        if d == 0 {
            return Err(AlgebraError::EmptyBasis);
        }
        if let Some(row) = images.iter().find(|r| r.len() != d) {
            return Err(AlgebraError::Malformed(format!(
                "linear map is not square: row of length {} in dimension {d}",
                row.len()
            )));
        }
        Ok(LinMap { images })
    }

    pub fn zero(dim: usize) -> Self {
        LinMap {
            images: vec![vec![Rational::zero(); dim]; dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, Rational::from_integer(1.into()))
    }

    /// `c · id`.
    pub fn scalar(dim: usize, c: Rational) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.images[i][i] = c.clone();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Vec<Rational>] {
        &self.images
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().flatten().all(Zero::is_zero)
    }

    /// `F(x)` as a degree-one element.
    pub fn apply(&self, x: usize) -> Result<Elem> {
        check_letter(x, self.dim())?;
        Elem::from_lin(self.dim(), self.image(x))
    }

    pub(crate) fn image(&self, x: usize) -> LinComb<Word> {
        self.images[x]
            .iter()
            .enumerate()
            .map(|(k, c)| (Word::letter(k), c.clone()))
            .collect()
    }
}

/// A linear form on `V`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinForm {
    values: Vec<Rational>,
}

impl LinForm {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(AlgebraError::EmptyBasis);
        }
        Ok(LinForm { values })
    }

    pub fn zero(dim: usize) -> Self {
        LinForm {
            values: vec![Rational::zero(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn apply(&self, x: usize) -> Result<Rational> {
        check_letter(x, self.dim())?;
        Ok(self.values[x].clone())
    }

    pub(crate) fn at(&self, x: usize) -> &Rational {
        &self.values[x]
    }
}

/// Structure constants of a right preLie product on `V`:
/// `e_i ⋆ e_j = Σ_k c[i][j][k] e_k`.
///
/// Construction rejects tables whose associator is not symmetric in its
/// last two arguments, reporting the first offending basis triple.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PreLieConsts {
    c: Vec<Vec<Vec<Rational>>>,
}

impl PreLieConsts {
    pub fn new(c: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let d = c.len();
        if d == 0 {
            return Err(AlgebraError::EmptyBasis);
        }
        for row in &c {
            if row.len() != d || row.iter().any(|v| v.len() != d) {
                return Err(AlgebraError::Malformed(format!(
                    "structure constants must be {d}×{d}×{d}"
                )));
            }
        }
        let consts = PreLieConsts { c };
        if let Some((i, j, k)) = consts.first_violation() {
            return Err(AlgebraError::NotPreLie(i, j, k));
        }
        Ok(consts)
    }

    pub fn zero(dim: usize) -> Self {
        PreLieConsts {
            c: vec![vec![vec![Rational::zero(); dim]; dim]; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.c.len()
    }

    pub fn consts(&self) -> &[Vec<Vec<Rational>>] {
        &self.c
    }

    /// `e_i ⋆ e_j` as a coordinate vector.
    fn star_vec(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        let mut out = vec![Rational::zero(); d];
        for (ai, ci) in a.iter().zip(&self.c) {
            if ai.is_zero() {
                continue;
            }
            for (bj, cij) in b.iter().zip(ci) {
                if bj.is_zero() {
                    continue;
                }
                let ab = ai * bj;
                for (slot, c) in out.iter_mut().zip(cij) {
                    *slot += &ab * c;
                }
            }
        }
        out
    }

    fn first_violation(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        let e = |i: usize| {
            let mut v = vec![Rational::zero(); d];
            v[i] = Rational::from_integer(1.into());
            v
        };
        let assoc = |a: &[Rational], b: &[Rational], c: &[Rational]| -> Vec<Rational> {
            let l = self.star_vec(&self.star_vec(a, b), c);
            let r = self.star_vec(a, &self.star_vec(b, c));
            l.iter().zip(&r).map(|(x, y)| x - y).collect()
        };
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let (a, b, c) = (e(i), e(j), e(k));
                    if assoc(&a, &b, &c) != assoc(&a, &c, &b) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// `x_i ⋆ x_j` as a degree-one element.
    pub fn star(&self, i: usize, j: usize) -> Result<Elem> {
        check_letter(i, self.dim())?;
        check_letter(j, self.dim())?;
        Elem::from_lin(self.dim(), self.star_lin(i, j))
    }

    pub(crate) fn star_lin(&self, i: usize, j: usize) -> LinComb<Word> {
        self.c[i][j]
            .iter()
            .enumerate()
            .map(|(k, c)| (Word::letter(k), c.clone()))
            .collect()
    }
}
