//! `K[X]` as a Com-PreLie algebra.
//!
//! Graded products are given by a λ-sequence, `X^i • X^j = i λ_j X^{i+j}`,
//! and are preLie exactly when
//! `(j λ_k − k λ_j) λ_{j+k} = (j − k) λ_j λ_k` for all `j, k ≥ 1`.
//! The solutions form four families (`G1`..`G4`); [`classify`] recovers the
//! family from a finite prefix of the sequence. The non-graded `g′(λ,μ)`
//! product lives in [`gprime_product`].

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::lincomb::{Basis, LinComb, Pair, Tensor};
use crate::scalar::{binomial_q, divides, factorial_q, int, is_negative_integer, pow, Rational};
use crate::word::Elem;

/// The monomial `X^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Power(pub usize);

impl fmt::Display for Power {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "1"),
            1 => write!(f, "X"),
            n => write!(f, "X^{n}"),
        }
    }
}

impl Basis for Power {
    fn degree(&self) -> usize {
        self.0
    }

    fn letters(&self) -> Vec<usize> {
        vec![0; self.0]
    }
}

pub type Poly = LinComb<Power>;

/// `c X^n`.
pub fn monomial(n: usize, c: Rational) -> Poly {
    Poly::term(Power(n), c)
}

/// `X^n`.
pub fn xpow(n: usize) -> Poly {
    Poly::basis(Power(n))
}

/// The ordinary product of `K[X]`.
pub fn poly_mul(p: &Poly, q: &Poly) -> Poly {
    p.bilinear(q, |a, b| xpow(a.0 + b.0))
}

/// Parameters of one of the graded families, or of `g′(λ,μ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// `λ_j = a / (j/N + b)` when `N | j`, else 0.
    G1 {
        n: usize,
        lambda: Rational,
        a: Rational,
        b: Rational,
    },
    /// `λ_j = μ` for `j = N`, else 0.
    G2 {
        n: usize,
        lambda: Rational,
        mu: Rational,
    },
    /// `λ_j = μ` when `N | j`, else 0.
    G3 {
        n: usize,
        lambda: Rational,
        mu: Rational,
    },
    /// `λ_j = 0` for `j ≥ 1`.
    G4 { lambda: Rational },
    GPrime { lambda: Rational, mu: Rational },
}

impl FamilySpec {
    pub fn g1(n: usize, lambda: Rational, a: Rational, b: Rational) -> Result<Self> {
        let s = FamilySpec::G1 { n, lambda, a, b };
        s.validate()?;
        Ok(s)
    }

    /// The three-parameter form `g1(N, a, b) = G1(N, a/b, a, b)`.
    pub fn g1_ab(n: usize, a: Rational, b: Rational) -> Result<Self> {
        if b.is_zero() {
            return Err(AlgebraError::InvalidFamily("b must be nonzero in g1(N,a,b)".into()));
        }
        Self::g1(n, &a / &b, a, b)
    }

    pub fn g2(n: usize, lambda: Rational, mu: Rational) -> Result<Self> {
        let s = FamilySpec::G2 { n, lambda, mu };
        s.validate()?;
        Ok(s)
    }

    pub fn g3(n: usize, lambda: Rational, mu: Rational) -> Result<Self> {
        let s = FamilySpec::G3 { n, lambda, mu };
        s.validate()?;
        Ok(s)
    }

    pub fn g4(lambda: Rational) -> Self {
        FamilySpec::G4 { lambda }
    }

    pub fn gprime(lambda: Rational, mu: Rational) -> Self {
        FamilySpec::GPrime { lambda, mu }
    }

    /// Checks `N ≥ 1`, `a ≠ 0`, `μ ≠ 0` and that `b` is not a negative
    /// integer.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(AlgebraError::InvalidFamily(m.into()));
        match self {
            FamilySpec::G1 { n, a, b, .. } => {
                if *n == 0 {
                    return bad("N must be at least 1");
                }
                if a.is_zero() {
                    return bad("a must be nonzero");
                }
                if is_negative_integer(b) {
                    return bad("b must not be a negative integer");
                }
                Ok(())
            }
            FamilySpec::G2 { n, mu, .. } | FamilySpec::G3 { n, mu, .. } => {
                if *n == 0 {
                    return bad("N must be at least 1");
                }
                if mu.is_zero() {
                    return bad("μ must be nonzero");
                }
                Ok(())
            }
            FamilySpec::G4 { .. } | FamilySpec::GPrime { .. } => Ok(()),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::G1 { .. } => "G1",
            FamilySpec::G2 { .. } => "G2",
            FamilySpec::G3 { .. } => "G3",
            FamilySpec::G4 { .. } => "G4",
            FamilySpec::GPrime { .. } => "GPrime",
        }
    }

    /// Named parameters in a fixed order.
    pub fn parameters(&self) -> Vec<(&'static str, Rational)> {
        let nn = |n: &usize| int(*n as i64);
        match self {
            FamilySpec::G1 { n, lambda, a, b } => vec![
                ("N", nn(n)),
                ("lambda", lambda.clone()),
                ("a", a.clone()),
                ("b", b.clone()),
            ],
            FamilySpec::G2 { n, lambda, mu } | FamilySpec::G3 { n, lambda, mu } => {
                vec![("N", nn(n)), ("lambda", lambda.clone()), ("mu", mu.clone())]
            }
            FamilySpec::G4 { lambda } => vec![("lambda", lambda.clone())],
            FamilySpec::GPrime { lambda, mu } => {
                vec![("lambda", lambda.clone()), ("mu", mu.clone())]
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.tag())?;
        for (i, (k, v)) in self.parameters().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        write!(f, ")")
    }
}

/// `λ_j` for a graded family.
pub fn lambda_of(spec: &FamilySpec, j: usize) -> Result<Rational> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::GPrime { .. } => return Err(AlgebraError::NotGraded),
        FamilySpec::G1 { lambda, .. }
        | FamilySpec::G2 { lambda, .. }
        | FamilySpec::G3 { lambda, .. }
        | FamilySpec::G4 { lambda }
            if j == 0 =>
        {
            lambda.clone()
        }
        FamilySpec::G1 { n, a, b, .. } => {
            if divides(*n, j) {
                a / (int((j / n) as i64) + b)
            } else {
                Rational::zero()
            }
        }
        FamilySpec::G2 { n, mu, .. } => {
            if j == *n {
                mu.clone()
            } else {
                Rational::zero()
            }
        }
        FamilySpec::G3 { n, mu, .. } => {
            if divides(*n, j) {
                mu.clone()
            } else {
                Rational::zero()
            }
        }
        FamilySpec::G4 { .. } => Rational::zero(),
    })
}

/// A λ-sequence: an explicit prefix `(λ_0, …, λ_M)` or a graded family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaSeq {
    Explicit(Vec<Rational>),
    Family(FamilySpec),
}

impl LambdaSeq {
    pub fn explicit(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(AlgebraError::Malformed("λ-sequence needs at least λ_0".into()));
        }
        Ok(LambdaSeq::Explicit(values))
    }

    pub fn family(spec: FamilySpec) -> Result<Self> {
        spec.validate()?;
        if matches!(spec, FamilySpec::GPrime { .. }) {
            return Err(AlgebraError::NotGraded);
        }
        Ok(LambdaSeq::Family(spec))
    }

    pub fn get(&self, j: usize) -> Result<Rational> {
        match self {
            LambdaSeq::Explicit(v) => v.get(j).cloned().ok_or(AlgebraError::IndexBeyondPrefix {
                index: j,
                last: v.len() - 1,
            }),
            LambdaSeq::Family(spec) => lambda_of(spec, j),
        }
    }
}

/// `X^i • X^j = i λ_j X^{i+j}` on monomials.
pub fn graded_monomial(seq: &LambdaSeq, i: usize, j: usize) -> Result<Poly> {
    if i == 0 {
        return Ok(Poly::zero());
    }
    Ok(monomial(i + j, int(i as i64) * seq.get(j)?))
}

pub fn graded_product(seq: &LambdaSeq, p: &Poly, q: &Poly) -> Result<Poly> {
    p.try_bilinear(q, |a, b| graded_monomial(seq, a.0, b.0))
}

/// `X^k • X^l = λ k l! Σ_{i=k}^{k+l−1} μ^{k+l−i−1} / (i−k+1)! X^i`.
pub fn gprime_product(lambda: &Rational, mu: &Rational, k: usize, l: usize) -> Poly {
    if k == 0 || l == 0 {
        return Poly::zero();
    }
    let front = lambda * int(k as i64) * factorial_q(l as u64);
    (k..k + l)
        .map(|i| {
            let c = &front * pow(mu, k + l - i - 1) / factorial_q((i - k + 1) as u64);
            (Power(i), c)
        })
        .collect()
}

/// Pairs `(j, k)` with `1 ≤ j, k ≤ maxidx` violating the preLie condition,
/// in lexicographic order.
pub fn prelie_condition_check(seq: &LambdaSeq, maxidx: usize) -> Result<Vec<(usize, usize)>> {
    let lam: Vec<Rational> = (0..=2 * maxidx).map(|j| seq.get(j)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for j in 1..=maxidx {
        for k in 1..=maxidx {
            if !condition_holds(&lam, j, k) {
                out.push((j, k));
            }
        }
    }
    Ok(out)
}

fn condition_holds(lam: &[Rational], j: usize, k: usize) -> bool {
    let (jq, kq) = (int(j as i64), int(k as i64));
    let lhs = (&jq * &lam[k] - &kq * &lam[j]) * &lam[j + k];
    let rhs = (jq - kq) * &lam[j] * &lam[k];
    lhs == rhs
}

/// Outcome of [`classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassifyResult {
    Family(FamilySpec),
    /// The pair `(j, k)` violates the preLie condition.
    Inconsistent { j: usize, k: usize },
    /// The prefix must reach at least this index.
    InsufficientData { need: usize },
}

/// Identifies the graded family generating the prefix `(λ_0, …, λ_M)`.
///
/// With `N` the first index carrying a nonzero value, the branch is chosen
/// from `λ_{2N}`: zero gives `G2`, `λ_N` gives `G3`, anything else solves
/// for `(a, b)` in `G1`. Every remaining entry is then compared with the
/// family, and the first disagreement at index `i` is reported as the
/// violated pair `(i − N, N)`. Prefixes shorter than `3N` are not enough to
/// confirm a family.
pub fn classify(prefix: &[Rational]) -> ClassifyResult {
    let m = match prefix.len() {
        0 | 1 => return ClassifyResult::InsufficientData { need: 1 },
        len => len - 1,
    };
    let lambda = prefix[0].clone();
    let Some(n) = (1..=m).find(|&j| !prefix[j].is_zero()) else {
        return ClassifyResult::Family(FamilySpec::g4(lambda));
    };
    // non-multiples of N must vanish
    if let Some(i) = (n + 1..=m).find(|&i| !divides(n, i) && !prefix[i].is_zero()) {
        return ClassifyResult::Inconsistent { j: i - n, k: n };
    }
    if m < 3 * n {
        return ClassifyResult::InsufficientData { need: 3 * n };
    }
    let ln = prefix[n].clone();
    let l2n = &prefix[2 * n];
    let spec = if l2n.is_zero() {
        FamilySpec::G2 { n, lambda, mu: ln }
    } else if *l2n == ln {
        FamilySpec::G3 { n, lambda, mu: ln }
    } else {
        let mu2 = l2n / &ln;
        let one = Rational::one();
        let b = (int(2) * &mu2 - &one) / (&one - &mu2);
        let a = &ln * &mu2 / (&one - &mu2);
        if is_negative_integer(&b) {
            // b = −k: the pair ((k−1)N, N) fails whatever λ_{kN} is
            let k = (-&b).to_integer();
            let k: usize = k.try_into().unwrap_or(usize::MAX);
            return if k.saturating_mul(n) <= m {
                ClassifyResult::Inconsistent { j: (k - 1) * n, k: n }
            } else {
                ClassifyResult::InsufficientData { need: k.saturating_mul(n) }
            };
        }
        FamilySpec::G1 { n, lambda, a, b }
    };
    for (i, value) in prefix.iter().enumerate().skip(1) {
        let expect = lambda_of(&spec, i).expect("family validated by construction");
        if expect != *value {
            return ClassifyResult::Inconsistent { j: i - n, k: n };
        }
    }
    ClassifyResult::Family(spec)
}

/// `Δ(X^n) = Σ_i C(n,i) X^i ⊗ X^{n−i}`, extended linearly.
pub fn binom_coproduct(p: &Poly) -> Tensor<Power> {
    p.map_linear(|x| binom_power(x.0))
}

pub(crate) fn binom_power(n: usize) -> Tensor<Power> {
    (0..=n)
        .map(|i| (Pair(Power(i), Power(n - i)), binomial_q(n as i64, i as i64)))
        .collect()
}

/// `X^i ≺ X^j = i/(i+j) X^{i+j}`.
pub fn half_shuffle_kx(i: usize, j: usize) -> Result<Poly> {
    if i == 0 && j == 0 {
        return Err(AlgebraError::Undefined11);
    }
    Ok(monomial(i + j, int(i as i64) / int((i + j) as i64)))
}

/// `Θ(X^n) = n! x^n` in the one-letter shuffle algebra.
pub fn theta_iso(n: usize) -> Elem {
    Elem::word(1, &vec![0; n])
        .expect("letter 0 exists in dimension 1")
        .scale(&factorial_q(n as u64))
}
