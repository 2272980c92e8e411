//! PreLie products on `T(V)` and `S(V)`.
//!
//! * `T(V,f)` for an endomorphism `f`: `1 • w = 0`,
//!   `xv • w = x(v • w) + f(x)(v ⧢ w)`.
//! * `T(V,f,λ)` for a linear form `f`: `u • v = ∂(u) ⧢ φ(v)`.
//! * `T(V,⋆)` for a preLie product `⋆` on `V`:
//!   `xu • yv = (x⋆y)(u ⧢ v) + x(u • yv)`.
//! * `S(V,f,λ)` on monomials, a derivation in its first argument.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::lincomb::{Basis, LinComb, Pair, Tensor};
use crate::linear::{LinForm, LinMap, PreLieConsts};
use crate::polyx::{Poly, Power};
use crate::scalar::{binomial, binomial_q, factorial_q, int, pow, Rational};
use crate::shuffle::{shuffle_lin, shuffle_words};
use crate::word::{left_concat, left_concat_lin, Elem, Word};

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(AlgebraError::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// `T(V,f)` on words, unrolled from the right end of `u`.
pub(crate) fn tvf_words(f: &LinMap, u: &[usize], w: &[usize]) -> LinComb<Word> {
    let mut acc = LinComb::zero();
    for i in (0..u.len()).rev() {
        acc = left_concat(u[i], &acc);
        acc += &left_concat_lin(&f.image(u[i]), &shuffle_words(&u[i + 1..], w));
    }
    acc
}

/// The `T(V,f)` product.
pub fn tvf_product(f: &LinMap, u: &Elem, v: &Elem) -> Result<Elem> {
    u.same_dim(v)?;
    check_dim(u.dim(), f.dim())?;
    let lin = u
        .lin()
        .bilinear(v.lin(), |a, b| tvf_words(f, a.as_slice(), b.as_slice()));
    Ok(Elem::from_lin_unchecked(u.dim(), lin))
}

/// `∂(x_1…x_n) = f(x_1) x_2…x_n`, `∂(1) = 0`.
pub(crate) fn partial_word(f: &LinForm, u: &Word) -> LinComb<Word> {
    match u.split_first() {
        None => LinComb::zero(),
        Some((x, rest)) => LinComb::term(rest, f.at(x).clone()),
    }
}

/// `φ(x_1…x_n) = Σ_{i<n} λ^i f(x_1)…f(x_i) x_{i+1}…x_n`, `φ(1) = 0`.
pub(crate) fn phi_word(f: &LinForm, lambda: &Rational, u: &Word) -> LinComb<Word> {
    let letters = u.as_slice();
    let mut out = LinComb::zero();
    let mut c = Rational::one();
    for i in 0..letters.len() {
        if c.is_zero() {
            break;
        }
        out.add_term(Word::from(&letters[i..]), c.clone());
        c = c * lambda * f.at(letters[i]);
    }
    out
}

pub(crate) fn tvfl_words(f: &LinForm, lambda: &Rational, u: &Word, v: &Word) -> LinComb<Word> {
    shuffle_lin(&partial_word(f, u), &phi_word(f, lambda, v))
}

pub fn tvfl_partial(f: &LinForm, u: &Elem) -> Result<Elem> {
    check_dim(u.dim(), f.dim())?;
    Ok(Elem::from_lin_unchecked(
        u.dim(),
        u.lin().map_linear(|w| partial_word(f, w)),
    ))
}

pub fn tvfl_phi(f: &LinForm, lambda: &Rational, u: &Elem) -> Result<Elem> {
    check_dim(u.dim(), f.dim())?;
    Ok(Elem::from_lin_unchecked(
        u.dim(),
        u.lin().map_linear(|w| phi_word(f, lambda, w)),
    ))
}

/// The `T(V,f,λ)` product `∂(u) ⧢ φ(v)`.
pub fn tvfl_product(f: &LinForm, lambda: &Rational, u: &Elem, v: &Elem) -> Result<Elem> {
    u.same_dim(v)?;
    check_dim(u.dim(), f.dim())?;
    let lin = u.lin().bilinear(v.lin(), |a, b| tvfl_words(f, lambda, a, b));
    Ok(Elem::from_lin_unchecked(u.dim(), lin))
}

/// `x^m • x^n = ν Σ_{j=m}^{m+n−1} μ^{m+n−j−1} C(j, m−1) x^j`, as a polynomial
/// in the powers of `x`.
pub fn lemma8_closed_form(nu: &Rational, mu: &Rational, m: usize, n: usize) -> Poly {
    (m..m + n)
        .map(|j| {
            let c = nu * pow(mu, m + n - j - 1) * binomial_q(j as i64, m as i64 - 1);
            (Power(j), c)
        })
        .collect()
}

/// `T(V,⋆)` on words.
pub(crate) fn tvstar_words(c: &PreLieConsts, u: &[usize], v: &[usize]) -> LinComb<Word> {
    let Some((&y, rest)) = v.split_first() else {
        return LinComb::zero();
    };
    let mut acc = LinComb::zero();
    for i in (0..u.len()).rev() {
        acc = left_concat(u[i], &acc);
        acc += &left_concat_lin(&c.star_lin(u[i], y), &shuffle_words(&u[i + 1..], rest));
    }
    acc
}

/// The `T(V,⋆)` product.
pub fn tvstar_product(c: &PreLieConsts, u: &Elem, v: &Elem) -> Result<Elem> {
    u.same_dim(v)?;
    check_dim(u.dim(), c.dim())?;
    let lin = u
        .lin()
        .bilinear(v.lin(), |a, b| tvstar_words(c, a.as_slice(), b.as_slice()));
    Ok(Elem::from_lin_unchecked(u.dim(), lin))
}

/// A monomial of `S(V)`, stored as its sorted letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<usize>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(letters: impl Into<Vec<usize>>) -> Self {
        let mut v = letters.into();
        v.sort_unstable();
        Monomial(v)
    }

    pub fn from_exponents(exps: &BTreeMap<usize, usize>) -> Self {
        Monomial(
            exps.iter()
                .flat_map(|(&x, &e)| std::iter::repeat_n(x, e))
                .collect(),
        )
    }

    /// Letter multiplicities; zero multiplicities are not stored.
    pub fn exponents(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &x in &self.0 {
            *m.entry(x).or_insert(0) += 1;
        }
        m
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Monomial::new(v)
    }

    /// All monomials of degree `n` in `dim` letters.
    pub fn all(dim: usize, n: usize) -> Vec<Monomial> {
        fn go(dim: usize, n: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Monomial>) {
            if cur.len() == n {
                out.push(Monomial(cur.clone()));
                return;
            }
            for x in start..dim {
                cur.push(x);
                go(dim, n, x, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(dim, n, 0, &mut Vec::new(), &mut out);
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for x in &self.0 {
            write!(f, "x{x}")?;
        }
        Ok(())
    }
}

impl Basis for Monomial {
    fn degree(&self) -> usize {
        self.0.len()
    }

    fn letters(&self) -> Vec<usize> {
        self.0.clone()
    }
}

/// An element of `S(V)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SElem {
    dim: usize,
    terms: LinComb<Monomial>,
}

impl SElem {
    pub fn zero(dim: usize) -> Self {
        SElem {
            dim,
            terms: LinComb::zero(),
        }
    }

    pub fn one(dim: usize) -> Self {
        SElem {
            dim,
            terms: LinComb::basis(Monomial::unit()),
        }
    }

    pub fn monomial(dim: usize, letters: &[usize]) -> Result<Self> {
        Self::from_lin(dim, LinComb::basis(Monomial::new(letters)))
    }

    pub fn from_lin(dim: usize, terms: LinComb<Monomial>) -> Result<Self> {
        if dim == 0 {
            return Err(AlgebraError::EmptyBasis);
        }
        if let Some(&letter) = terms.keys().filter_map(|m| m.0.last()).max() {
            if letter >= dim {
                return Err(AlgebraError::LetterOutOfRange { letter, dim });
            }
        }
        Ok(SElem { dim, terms })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lin(&self) -> &LinComb<Monomial> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn checked_add(&self, other: &SElem) -> Result<SElem> {
        check_dim(self.dim, other.dim)?;
        Ok(SElem {
            dim: self.dim,
            terms: &self.terms + &other.terms,
        })
    }

    pub fn scale(&self, c: &Rational) -> SElem {
        SElem {
            dim: self.dim,
            terms: self.terms.scale(c),
        }
    }

    /// The commutative product of `S(V)`.
    pub fn mul(&self, other: &SElem) -> Result<SElem> {
        check_dim(self.dim, other.dim)?;
        Ok(SElem {
            dim: self.dim,
            terms: self
                .terms
                .bilinear(&other.terms, |a, b| LinComb::basis(a.mul(b))),
        })
    }
}

impl fmt::Display for SElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.terms, f)
    }
}

/// `x • y_1…y_k = Σ_{I ⊊ [k]} |I|! λ^{|I|} f(x) Π_{i∈I} f(y_i) Π_{i∉I} y_i`,
/// summed over sub-multisets with their multiplicities.
fn sfl_generator(f: &LinForm, lambda: &Rational, x: usize, b: &Monomial) -> LinComb<Monomial> {
    let fx = f.at(x);
    if fx.is_zero() {
        return LinComb::zero();
    }
    let exps: Vec<(usize, usize)> = b.exponents().into_iter().collect();
    let mut out = LinComb::zero();
    let mut chosen = vec![0usize; exps.len()];
    loop {
        let size: usize = chosen.iter().sum();
        if size < b.degree() {
            let mut c = fx * factorial_q(size as u64) * pow(lambda, size);
            let mut rest = BTreeMap::new();
            for (&(y, e), &k) in exps.iter().zip(&chosen) {
                c *= pow(f.at(y), k) * Rational::from_integer(binomial(e as i64, k as i64));
                if e > k {
                    rest.insert(y, e - k);
                }
            }
            out.add_term(Monomial::from_exponents(&rest), c);
        }
        // odometer over 0 ≤ chosen[t] ≤ exps[t].1
        let mut t = 0;
        loop {
            if t == exps.len() {
                return out;
            }
            if chosen[t] < exps[t].1 {
                chosen[t] += 1;
                break;
            }
            chosen[t] = 0;
            t += 1;
        }
    }
}

/// `S(V,f,λ)` on monomials: `1 • b = 0`, and a derivation in the first
/// argument.
pub(crate) fn sfl_monomials(
    f: &LinForm,
    lambda: &Rational,
    a: &Monomial,
    b: &Monomial,
) -> LinComb<Monomial> {
    let mut out = LinComb::zero();
    for (x, e) in a.exponents() {
        let mut rest = a.exponents();
        if e == 1 {
            rest.remove(&x);
        } else {
            rest.insert(x, e - 1);
        }
        let rest = Monomial::from_exponents(&rest);
        let g = sfl_generator(f, lambda, x, b);
        let term: LinComb<Monomial> = g.iter().map(|(m, c)| (m.mul(&rest), c.clone())).collect();
        out.add_scaled(&term, &int(e as i64));
    }
    out
}

pub fn sfl_product(f: &LinForm, lambda: &Rational, a: &SElem, b: &SElem) -> Result<SElem> {
    check_dim(a.dim, b.dim)?;
    check_dim(a.dim, f.dim())?;
    Ok(SElem {
        dim: a.dim,
        terms: a
            .terms
            .bilinear(&b.terms, |x, y| sfl_monomials(f, lambda, x, y)),
    })
}

/// `Δ(Π x^{e_x}) = Σ_{k ≤ e} Π C(e_x, k_x) x^{k} ⊗ x^{e−k}`, the coproduct
/// making letters primitive.
pub(crate) fn s_coproduct_monomial(m: &Monomial) -> Tensor<Monomial> {
    let exps: Vec<(usize, usize)> = m.exponents().into_iter().collect();
    let mut out = Tensor::zero();
    let mut chosen = vec![0usize; exps.len()];
    loop {
        let mut c = Rational::one();
        let (mut left, mut right) = (BTreeMap::new(), BTreeMap::new());
        for (&(y, e), &k) in exps.iter().zip(&chosen) {
            c *= Rational::from_integer(binomial(e as i64, k as i64));
            if k > 0 {
                left.insert(y, k);
            }
            if e > k {
                right.insert(y, e - k);
            }
        }
        out.add_term(
            Pair(Monomial::from_exponents(&left), Monomial::from_exponents(&right)),
            c,
        );
        let mut t = 0;
        loop {
            if t == exps.len() {
                return out;
            }
            if chosen[t] < exps[t].1 {
                chosen[t] += 1;
                break;
            }
            chosen[t] = 0;
            t += 1;
        }
    }
}

pub fn s_coproduct(a: &SElem) -> Tensor<Monomial> {
    a.terms.map_linear(s_coproduct_monomial)
}

/// Checks `C(j−l,k−1) C(j−1,j−l−1) + C(j−k,l−1) C(j−1,k−1) = C(j,k+l−1) C(k+l−1,k−1)`
/// for all `k, l ≥ 1` with `k + l ≤ j ≤ jmax`.
pub fn binomial_identity_check(jmax: usize) -> bool {
    let b = |n: usize, k: i64| binomial(n as i64, k);
    for j in 2..=jmax {
        for k in 1..j {
            for l in 1..=(j - k) {
                let (ki, li, ji) = (k as i64, l as i64, j as i64);
                let lhs = b(j - l, ki - 1) * b(j - 1, ji - li - 1) + b(j - k, li - 1) * b(j - 1, ki - 1);
                let rhs = b(j, ki + li - 1) * b(k + l - 1, ki - 1);
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}
