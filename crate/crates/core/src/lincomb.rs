//! Finite formal linear combinations over an ordered basis.
//!
//! [`LinComb`] is the single representation behind words, tensors,
//! monomials and powers of `X`. Zero coefficients are never stored, so two
//! combinations are equal exactly when their term maps are equal, and
//! iteration follows the basis order.

use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use crate::scalar::Rational;

/// A basis vector of a graded space.
///
/// The `Ord` impl must be degree-first so that iteration is
/// length-lexicographic.
pub trait Basis: Clone + Ord + Debug + Display + Send + Sync {
    fn degree(&self) -> usize;

    /// Letter-index encoding used by JSON output.
    fn letters(&self) -> Vec<usize>;

    fn is_unit(&self) -> bool {
        self.degree() == 0
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Rational>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `1 · b`.
    pub fn basis(b: B) -> Self {
        Self::term(b, Rational::one())
    }

    pub fn term(b: B, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    /// Adds `c · b` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, b: B, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `c · other` in place.
    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (b, x) in &other.terms {
            self.add_term(b.clone(), x * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &B) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Rational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(b, x)| (b.clone(), x * c))
                .collect(),
        }
    }

    /// Keeps the terms whose basis vector satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&B) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, x)| (b.clone(), x.clone()))
                .collect(),
        }
    }

    /// Linear extension of a map defined on basis vectors.
    pub fn map_linear<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, x) in &self.terms {
            out.add_scaled(&f(b), x);
        }
        out
    }

    /// Fallible linear extension.
    pub fn try_map_linear<C: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&B) -> Result<LinComb<C>, E>,
    ) -> Result<LinComb<C>, E> {
        let mut out = LinComb::zero();
        for (b, x) in &self.terms {
            out.add_scaled(&f(b)?, x);
        }
        Ok(out)
    }

    /// Bilinear extension of a map defined on pairs of basis vectors.
    pub fn bilinear<C: Ord + Clone, D: Ord + Clone>(
        &self,
        other: &LinComb<C>,
        mut f: impl FnMut(&B, &C) -> LinComb<D>,
    ) -> LinComb<D> {
        let mut out = LinComb::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_scaled(&f(a, b), &(x * y));
            }
        }
        out
    }

    /// Fallible bilinear extension.
    pub fn try_bilinear<C: Ord + Clone, D: Ord + Clone, E>(
        &self,
        other: &LinComb<C>,
        mut f: impl FnMut(&B, &C) -> Result<LinComb<D>, E>,
    ) -> Result<LinComb<D>, E> {
        let mut out = LinComb::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_scaled(&f(a, b)?, &(x * y));
            }
        }
        Ok(out)
    }
}

impl<B: Basis> LinComb<B> {
    /// Terms whose basis vector has degree exactly `n`.
    pub fn degree_part(&self, n: usize) -> Self {
        self.filter(|b| b.degree() == n)
    }

    /// Coefficient on the degree-0 basis vector(s).
    pub fn unit_coeff(&self) -> Rational {
        self.iter()
            .filter(|(b, _)| b.is_unit())
            .fold(Rational::zero(), |acc, (_, c)| acc + c)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.keys().map(Basis::degree).max()
    }
}

impl<B: Ord + Clone> FromIterator<(B, Rational)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

impl<B: Ord + Clone> AddAssign<&LinComb<B>> for LinComb<B> {
    fn add_assign(&mut self, rhs: &LinComb<B>) {
        for (b, x) in &rhs.terms {
            self.add_term(b.clone(), x.clone());
        }
    }
}

impl<B: Ord + Clone> SubAssign<&LinComb<B>> for LinComb<B> {
    fn sub_assign(&mut self, rhs: &LinComb<B>) {
        for (b, x) in &rhs.terms {
            self.add_term(b.clone(), -x);
        }
    }
}

impl<B: Ord + Clone> Add for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: Self) -> LinComb<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: Ord + Clone> Add for LinComb<B> {
    type Output = LinComb<B>;
    fn add(mut self, rhs: Self) -> LinComb<B> {
        self += &rhs;
        self
    }
}

impl<B: Ord + Clone> Sub for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: Self) -> LinComb<B> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<B: Ord + Clone> Sub for LinComb<B> {
    type Output = LinComb<B>;
    fn sub(mut self, rhs: Self) -> LinComb<B> {
        self -= &rhs;
        self
    }
}

impl<B: Ord + Clone> Neg for &LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        LinComb {
            terms: self.terms.iter().map(|(b, x)| (b.clone(), -x)).collect(),
        }
    }
}

impl<B: Ord + Clone> Neg for LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        -&self
    }
}

impl<B: Ord + Debug> Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(b, c)| (b, c.to_string()))).finish()
    }
}

/// Renders `c b` terms joined by ` + ` / ` - `; the unit basis vector is
/// shown as `1` and coefficients of magnitude one are omitted.
impl<B: Basis> Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let body = b.to_string();
            if mag.is_one() {
                f.write_str(&body)?;
            } else if b.is_unit() && body == "1" {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag} {body}")?;
            }
        }
        Ok(())
    }
}

/// A pure tensor `left ⊗ right` used as the basis of tensor squares.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Pair<B>(pub B, pub B);

impl<B: Basis> Display for Pair<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}", self.0, self.1)
    }
}

impl<B: Basis> Basis for Pair<B> {
    fn degree(&self) -> usize {
        self.0.degree() + self.1.degree()
    }

    fn letters(&self) -> Vec<usize> {
        let mut l = self.0.letters();
        l.extend(self.1.letters());
        l
    }

    // `1⊗1` is the only degree-0 pair, but it prints as a tensor.
    fn is_unit(&self) -> bool {
        false
    }
}

/// Element of the tensor square `A ⊗ A`.
pub type Tensor<B> = LinComb<Pair<B>>;

/// `a ⊗ b` expanded bilinearly.
pub fn outer<B: Ord + Clone>(a: &LinComb<B>, b: &LinComb<B>) -> Tensor<B> {
    a.bilinear(b, |x, y| LinComb::basis(Pair(x.clone(), y.clone())))
}

/// Applies `f ⊗ g` to a tensor.
pub fn tensor_map<B: Ord + Clone>(
    t: &Tensor<B>,
    mut f: impl FnMut(&B) -> LinComb<B>,
    mut g: impl FnMut(&B) -> LinComb<B>,
) -> Tensor<B> {
    t.map_linear(|Pair(l, r)| outer(&f(l), &g(r)))
}

/// Componentwise product `(a⊗b)(c⊗d) = (ac)⊗(bd)` on tensor squares.
pub fn tensor_product<B: Ord + Clone>(
    s: &Tensor<B>,
    t: &Tensor<B>,
    mut mul: impl FnMut(&B, &B) -> LinComb<B>,
) -> Tensor<B> {
    s.bilinear(t, |Pair(a, b), Pair(c, d)| outer(&mul(a, c), &mul(b, d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
    struct P(usize);
    impl Display for P {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if self.0 == 0 {
                f.write_str("1")
            } else {
                write!(f, "e{}", self.0)
            }
        }
    }
    impl Basis for P {
        fn degree(&self) -> usize {
            self.0
        }
        fn letters(&self) -> Vec<usize> {
            vec![0; self.0]
        }
    }

    #[test]
    fn cancellation_drops_terms() {
        let a = LinComb::term(P(1), int(1));
        let b = LinComb::term(P(1), int(-1));
        assert!((&a + &b).is_zero());
        assert_eq!((&a + &b).len(), 0);
    }

    #[test]
    fn scaling_by_zero_is_zero() {
        let a = LinComb::term(P(2), ratio(1, 2));
        assert!(a.scale(&int(0)).is_zero());
        assert_eq!(a.scale(&int(2)), LinComb::basis(P(2)));
    }

    #[test]
    fn display_forms() {
        let a: LinComb<P> = [(P(0), int(3)), (P(1), int(-1)), (P(2), ratio(1, 2))]
            .into_iter()
            .collect();
        assert_eq!(a.to_string(), "3 - e1 + 1/2 e2");
        assert_eq!(LinComb::<P>::zero().to_string(), "0");
        let t = outer(&LinComb::basis(P(0)), &LinComb::term(P(1), int(2)));
        assert_eq!(t.to_string(), "2 1⊗e1");
    }
}
