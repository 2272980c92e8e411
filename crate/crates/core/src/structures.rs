//! [`Structure`] adapters for the concrete constructions.

use crate::error::{AlgebraError, Result};
use crate::law::Structure;
use crate::lincomb::{LinComb, Tensor};
use crate::linear::{LinForm, LinMap, PreLieConsts};
use crate::polyx::{
    binom_power, gprime_product, graded_monomial, half_shuffle_kx, xpow, FamilySpec, LambdaSeq,
    Power,
};
use crate::prelie::{s_coproduct_monomial, sfl_monomials, tvf_words, tvfl_words, tvstar_words, Monomial};
use crate::scalar::Rational;
use crate::shuffle::{deconcat_word, half_shuffle_words, shuffle_words};
use crate::word::Word;

/// The preLie product carried by a [`TvStructure`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TvProduct {
    /// `T(V,f)` for an endomorphism.
    Endo(LinMap),
    /// `T(V,f,λ)` for a linear form.
    Form { f: LinForm, lambda: Rational },
    /// `T(V,⋆)`.
    Star(PreLieConsts),
}

/// `(T(V), ⧢, ≺, •, Δ)` with one of the three preLie products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TvStructure {
    dim: usize,
    product: TvProduct,
}

impl TvStructure {
    pub fn tvf(f: LinMap) -> Self {
        TvStructure {
            dim: f.dim(),
            product: TvProduct::Endo(f),
        }
    }

    pub fn tvfl(f: LinForm, lambda: Rational) -> Self {
        TvStructure {
            dim: f.dim(),
            product: TvProduct::Form { f, lambda },
        }
    }

    pub fn tvstar(c: PreLieConsts) -> Self {
        TvStructure {
            dim: c.dim(),
            product: TvProduct::Star(c),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn product(&self) -> &TvProduct {
        &self.product
    }
}

impl Structure for TvStructure {
    type B = Word;

    fn name(&self) -> String {
        let kind = match &self.product {
            TvProduct::Endo(_) => "T(V,f)".to_string(),
            TvProduct::Form { lambda, .. } => format!("T(V,f,λ={lambda})"),
            TvProduct::Star(_) => "T(V,⋆)".to_string(),
        };
        format!("{kind} d={}", self.dim)
    }

    fn basis(&self, degree: usize) -> Vec<Word> {
        Word::all(self.dim, degree)
    }

    fn unit(&self) -> Word {
        Word::empty()
    }

    fn mul(&self, a: &Word, b: &Word) -> Result<LinComb<Word>> {
        Ok(shuffle_words(a.as_slice(), b.as_slice()))
    }

    fn prelie(&self, a: &Word, b: &Word) -> Result<LinComb<Word>> {
        Ok(match &self.product {
            TvProduct::Endo(f) => tvf_words(f, a.as_slice(), b.as_slice()),
            TvProduct::Form { f, lambda } => tvfl_words(f, lambda, a, b),
            TvProduct::Star(c) => tvstar_words(c, a.as_slice(), b.as_slice()),
        })
    }

    fn has_half_shuffle(&self) -> bool {
        true
    }

    fn half_shuffle(&self, a: &Word, b: &Word) -> Result<LinComb<Word>> {
        half_shuffle_words(a.as_slice(), b.as_slice())
    }

    fn has_coproduct(&self) -> bool {
        true
    }

    fn coproduct(&self, a: &Word) -> Result<Tensor<Word>> {
        Ok(deconcat_word(a))
    }
}

/// `S(V,f,λ)` with its usual product and coproduct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SStructure {
    f: LinForm,
    lambda: Rational,
}

impl SStructure {
    pub fn new(f: LinForm, lambda: Rational) -> Self {
        SStructure { f, lambda }
    }

    pub fn dim(&self) -> usize {
        self.f.dim()
    }

    pub fn form(&self) -> &LinForm {
        &self.f
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }
}

impl Structure for SStructure {
    type B = Monomial;

    fn name(&self) -> String {
        format!("S(V,f,λ={}) d={}", self.lambda, self.f.dim())
    }

    fn basis(&self, degree: usize) -> Vec<Monomial> {
        Monomial::all(self.f.dim(), degree)
    }

    fn unit(&self) -> Monomial {
        Monomial::unit()
    }

    fn mul(&self, a: &Monomial, b: &Monomial) -> Result<LinComb<Monomial>> {
        Ok(LinComb::basis(a.mul(b)))
    }

    fn prelie(&self, a: &Monomial, b: &Monomial) -> Result<LinComb<Monomial>> {
        Ok(sfl_monomials(&self.f, &self.lambda, a, b))
    }

    fn has_coproduct(&self) -> bool {
        true
    }

    fn coproduct(&self, a: &Monomial) -> Result<Tensor<Monomial>> {
        Ok(s_coproduct_monomial(a))
    }
}

/// The preLie product carried by a [`KxStructure`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KxProduct {
    Graded(LambdaSeq),
    GPrime { lambda: Rational, mu: Rational },
}

/// `K[X]` with the ordinary product, the half-shuffle
/// `X^i ≺ X^j = i/(i+j) X^{i+j}`, the binomial coproduct and a preLie
/// product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KxStructure {
    product: KxProduct,
}

impl KxStructure {
    pub fn graded(seq: LambdaSeq) -> Self {
        KxStructure {
            product: KxProduct::Graded(seq),
        }
    }

    /// Any family, `GPrime` included.
    pub fn family(spec: FamilySpec) -> Result<Self> {
        spec.validate()?;
        Ok(match spec {
            FamilySpec::GPrime { lambda, mu } => KxStructure {
                product: KxProduct::GPrime { lambda, mu },
            },
            other => Self::graded(LambdaSeq::family(other)?),
        })
    }

    pub fn product(&self) -> &KxProduct {
        &self.product
    }

    /// The λ-sequence, if the product is graded.
    pub fn sequence(&self) -> Result<&LambdaSeq> {
        match &self.product {
            KxProduct::Graded(seq) => Ok(seq),
            KxProduct::GPrime { .. } => Err(AlgebraError::NotGraded),
        }
    }
}

impl Structure for KxStructure {
    type B = Power;

    fn name(&self) -> String {
        match &self.product {
            KxProduct::Graded(LambdaSeq::Family(spec)) => format!("K[X] {spec}"),
            KxProduct::Graded(LambdaSeq::Explicit(v)) => {
                let vals: Vec<String> = v.iter().map(ToString::to_string).collect();
                format!("K[X] λ=({})", vals.join(", "))
            }
            KxProduct::GPrime { lambda, mu } => format!("K[X] GPrime(lambda={lambda}, mu={mu})"),
        }
    }

    fn basis(&self, degree: usize) -> Vec<Power> {
        vec![Power(degree)]
    }

    fn unit(&self) -> Power {
        Power(0)
    }

    fn mul(&self, a: &Power, b: &Power) -> Result<LinComb<Power>> {
        Ok(xpow(a.0 + b.0))
    }

    fn prelie(&self, a: &Power, b: &Power) -> Result<LinComb<Power>> {
        match &self.product {
            KxProduct::Graded(seq) => graded_monomial(seq, a.0, b.0),
            KxProduct::GPrime { lambda, mu } => Ok(gprime_product(lambda, mu, a.0, b.0)),
        }
    }

    fn has_half_shuffle(&self) -> bool {
        true
    }

    fn half_shuffle(&self, a: &Power, b: &Power) -> Result<LinComb<Power>> {
        half_shuffle_kx(a.0, b.0)
    }

    fn has_coproduct(&self) -> bool {
        true
    }

    fn coproduct(&self, a: &Power) -> Result<Tensor<Power>> {
        Ok(binom_power(a.0))
    }
}
