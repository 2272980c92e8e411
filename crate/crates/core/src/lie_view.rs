//! The Lie bracket `[a, b] = a • b − b • a` and the semidirect-product
//! presentations of the graded `K[X]` brackets.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::law::{check_laws, collect_failures, Evaluate, Law, LawReport, Structure, StructureExt, Value};
use crate::lincomb::{Basis, LinComb};
use crate::polyx::{graded_product, monomial, FamilySpec, LambdaSeq, Poly, Power};
use crate::scalar::{factorial_q, int, pow, Rational};

/// `a • b − b • a`.
pub fn bracket<S: Structure>(s: &S, a: &LinComb<S::B>, b: &LinComb<S::B>) -> Result<LinComb<S::B>> {
    s.bracket_lin(a, b)
}

/// Jacobi identity over basis triples of total degree at most `cap`.
pub fn check_jacobi<S: Structure>(s: &S, cap: usize) -> Result<LawReport<S::B>> {
    check_laws(s, "jacobi", &[Law::Jacobi], cap)
}

pub fn check_antisymmetry<S: Structure>(s: &S, cap: usize) -> Result<LawReport<S::B>> {
    check_laws(s, "antisymmetry", &[Law::Antisymmetry], cap)
}

/// A basis vector of the semidirect product `g_FdB ⋉ ⊕_r V^{(r)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BracketBasisElem {
    E(usize),
    F { r: usize, i: usize },
}

impl fmt::Display for BracketBasisElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketBasisElem::E(i) => write!(f, "E_{i}"),
            BracketBasisElem::F { r, i } => write!(f, "F^({r})_{i}"),
        }
    }
}

impl Basis for BracketBasisElem {
    /// The index `i`.
    fn degree(&self) -> usize {
        match self {
            BracketBasisElem::E(i) | BracketBasisElem::F { i, .. } => *i,
        }
    }

    fn letters(&self) -> Vec<usize> {
        vec![0; self.degree()]
    }
}

/// The change of basis from `K[X]` to the `E_i`, `F_i^{(r)}` of a G1 or G3
/// family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FdbPresentation {
    n: usize,
    seq: LambdaSeq,
    /// Coefficient of `X^{Ni}` in `E_i`, indexed by `i`.
    scale: ScaleRule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum ScaleRule {
    /// `(i+b)/(Na)`
    G1 { a: Rational, b: Rational },
    /// `1/(Nμ)`
    G3 { mu: Rational },
    /// `1`, a deliberately wrong basis.
    Unscaled,
}

impl FdbPresentation {
    pub fn new(spec: &FamilySpec) -> Result<Self> {
        spec.validate()?;
        let (n, scale) = match spec {
            FamilySpec::G1 { n, a, b, .. } => (
                *n,
                ScaleRule::G1 {
                    a: a.clone(),
                    b: b.clone(),
                },
            ),
            FamilySpec::G3 { n, mu, .. } => (*n, ScaleRule::G3 { mu: mu.clone() }),
            other => {
                return Err(AlgebraError::WrongFamily(format!(
                    "{} has no Faà di Bruno presentation",
                    other.tag()
                )))
            }
        };
        Ok(FdbPresentation {
            n,
            seq: LambdaSeq::family(spec.clone())?,
            scale,
        })
    }

    /// Same family with `E_i = X^{Ni}`.
    pub fn unscaled(spec: &FamilySpec) -> Result<Self> {
        let mut p = Self::new(spec)?;
        p.scale = ScaleRule::Unscaled;
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn e_scale(&self, i: usize) -> Rational {
        let n = int(self.n as i64);
        match &self.scale {
            ScaleRule::G1 { a, b } => (int(i as i64) + b) / (n * a),
            ScaleRule::G3 { mu } => int(1) / (n * mu),
            ScaleRule::Unscaled => int(1),
        }
    }

    /// The polynomial a basis vector stands for.
    pub fn poly(&self, x: &BracketBasisElem) -> Poly {
        match *x {
            BracketBasisElem::E(i) => monomial(self.n * i, self.e_scale(i)),
            BracketBasisElem::F { r, i } => monomial(self.n * (i - 1) + r, int(1)),
        }
    }

    /// Rewrites a polynomial without constant term in the `E`, `F` basis.
    pub fn decode(&self, p: &Poly) -> Result<LinComb<BracketBasisElem>> {
        let mut out = LinComb::zero();
        for (Power(d), c) in p.iter() {
            let (d, n) = (*d, self.n);
            if d == 0 {
                return Err(AlgebraError::Malformed("constant term in a bracket".into()));
            }
            if d % n == 0 {
                let i = d / n;
                let s = self.e_scale(i);
                if s == int(0) {
                    return Err(AlgebraError::Malformed(format!("E_{i} vanishes")));
                }
                out.add_term(BracketBasisElem::E(i), c / s);
            } else {
                out.add_term(
                    BracketBasisElem::F {
                        r: d % n,
                        i: d / n + 1,
                    },
                    c.clone(),
                );
            }
        }
        Ok(out)
    }

    /// `[x, y]` computed in `K[X]` and rewritten in the `E`, `F` basis.
    pub fn bracket(&self, x: &BracketBasisElem, y: &BracketBasisElem) -> Result<LinComb<BracketBasisElem>> {
        let (p, q) = (self.poly(x), self.poly(y));
        let br = graded_product(&self.seq, &p, &q)? - graded_product(&self.seq, &q, &p)?;
        self.decode(&br)
    }

    /// The bracket the presentation predicts.
    pub fn expected(&self, law: Law, x: &BracketBasisElem, y: &BracketBasisElem) -> Result<LinComb<BracketBasisElem>> {
        use BracketBasisElem::{E, F};
        match (law, *x, *y) {
            (Law::FdbEE, E(i), E(j)) => Ok(LinComb::term(E(i + j), int(i as i64 - j as i64))),
            (Law::FdbFF, F { .. }, F { .. }) => Ok(LinComb::zero()),
            (Law::FdbFE, F { r, i }, E(j)) => {
                let n = int(self.n as i64);
                let c = int(i as i64) + (int(r as i64) - &n) / n;
                Ok(LinComb::term(F { r, i: i + j }, c))
            }
            _ => Err(AlgebraError::Malformed(format!("{law} does not apply to ({x}, {y})"))),
        }
    }

    fn cases(&self, law: Law, imax: usize) -> Vec<Vec<BracketBasisElem>> {
        use BracketBasisElem::{E, F};
        let rs = 1..self.n;
        let mut out = Vec::new();
        for total in 2..=imax {
            for i in 1..total {
                let j = total - i;
                match law {
                    Law::FdbEE => out.push(vec![E(i), E(j)]),
                    Law::FdbFF => {
                        for r in rs.clone() {
                            for s in rs.clone() {
                                out.push(vec![F { r, i }, F { r: s, i: j }]);
                            }
                        }
                    }
                    Law::FdbFE => {
                        for r in rs.clone() {
                            out.push(vec![F { r, i }, E(j)]);
                        }
                    }
                    _ => {}
                }
            }
        }
        out
    }
}

impl Evaluate<BracketBasisElem> for FdbPresentation {
    fn evaluate(&self, law: Law, inputs: &[BracketBasisElem]) -> Result<(Value<BracketBasisElem>, Value<BracketBasisElem>)> {
        let [x, y] = inputs else {
            return Err(AlgebraError::Malformed(format!("{law} takes two inputs")));
        };
        Ok((Value::Elem(self.bracket(x, y)?), Value::Elem(self.expected(law, x, y)?)))
    }
}

/// Checks `[E_i,E_j] = (i−j)E_{i+j}`, `[F,F] = 0` and
/// `[F_i^{(r)},E_j] = (i+(r−N)/N)F_{i+j}^{(r)}` for `i + j ≤ imax`.
pub fn check_fdb_presentation(spec: &FamilySpec, imax: usize) -> Result<LawReport<BracketBasisElem>> {
    check_presentation(&FdbPresentation::new(spec)?, spec, imax)
}

/// The same check against `E_i = X^{Ni}`, which must fail unless the scale is
/// already 1.
pub fn check_fdb_unscaled(spec: &FamilySpec, imax: usize) -> Result<LawReport<BracketBasisElem>> {
    check_presentation(&FdbPresentation::unscaled(spec)?, spec, imax)
}

fn check_presentation(p: &FdbPresentation, spec: &FamilySpec, imax: usize) -> Result<LawReport<BracketBasisElem>> {
    let mut report = LawReport {
        name: "fdb_presentation".into(),
        structure: format!("K[X] {spec}"),
        cap: imax,
        checked: 0,
        failures: Vec::new(),
    };
    for law in [Law::FdbEE, Law::FdbFF, Law::FdbFE] {
        let cases = p.cases(law, imax);
        report.checked += cases.len();
        report.failures.extend(collect_failures(p, law, &cases)?);
    }
    Ok(report)
}

/// The bracket table of `g^{(2)}(N,λ,μ)` and its `V^{(r)}` module vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct G2Presentation {
    n: usize,
    mu: Rational,
    seq: LambdaSeq,
}

impl G2Presentation {
    pub fn new(n: usize, mu: Rational) -> Result<Self> {
        let spec = FamilySpec::g2(n, int(0), mu.clone())?;
        Ok(G2Presentation {
            n,
            mu,
            seq: LambdaSeq::family(spec)?,
        })
    }

    fn bracket(&self, p: &Poly, q: &Poly) -> Result<Poly> {
        Ok(graded_product(&self.seq, p, q)? - graded_product(&self.seq, q, p)?)
    }

    /// `[X^i, X^j]` as the table predicts.
    pub fn expected_bracket(&self, i: usize, j: usize) -> Poly {
        let n = self.n;
        if i == j || (i != n && j != n) {
            Poly::zero()
        } else if j == n {
            monomial(i + n, &self.mu * int(i as i64))
        } else {
            monomial(j + n, -(&self.mu * int(j as i64)))
        }
    }

    /// The spanning vector of `V^{(r)}` or `V^{(N)}` of degree `d`:
    /// `μ^i Π_{j=0}^{i−1}(r+jN) X^{r+iN}` for `d = r + iN` with `0 < r < N`,
    /// and `μ^i N^i (i+1)! X^{(i+2)N}` for `d = (i+2)N`.
    pub fn module_vector(&self, d: usize) -> Result<Poly> {
        let n = self.n;
        let (r, i) = (d % n, d / n);
        if r == 0 {
            if i < 2 {
                return Err(AlgebraError::Malformed(format!("X^{d} spans no module vector")));
            }
            let i = i - 2;
            let c = pow(&(&self.mu * int(n as i64)), i) * factorial_q(i as u64 + 1);
            return Ok(monomial(d, c));
        }
        let prod = (0..i).fold(int(1), |acc, j| acc * int((r + j * n) as i64));
        Ok(monomial(d, pow(&self.mu, i) * prod))
    }

    /// Degrees `r + iN` and `(i+2)N` of the module vectors with `i ≤ imax`.
    pub fn module_degrees(&self, imax: usize) -> Vec<usize> {
        let n = self.n;
        let mut out: Vec<usize> = (1..n)
            .flat_map(|r| (0..=imax).map(move |i| r + i * n))
            .chain((0..=imax).map(|i| (i + 2) * n))
            .collect();
        out.sort_unstable();
        out
    }
}

impl Evaluate<Power> for G2Presentation {
    fn evaluate(&self, law: Law, inputs: &[Power]) -> Result<(Value<Power>, Value<Power>)> {
        match (law, inputs) {
            (Law::G2Bracket, [Power(i), Power(j)]) => {
                let lhs = self.bracket(&monomial(*i, int(1)), &monomial(*j, int(1)))?;
                Ok((Value::Elem(lhs), Value::Elem(self.expected_bracket(*i, *j))))
            }
            (Law::G2Module, [Power(d)]) => {
                let z = monomial(self.n, int(1));
                let lhs = self.bracket(&self.module_vector(*d)?, &z)?;
                Ok((Value::Elem(lhs), Value::Elem(self.module_vector(d + self.n)?)))
            }
            _ => Err(AlgebraError::Malformed(format!("{law} does not apply here"))),
        }
    }
}

/// Checks the bracket table for `1 ≤ i, j ≤ imax` and `[f_i, X^N] = f_{i+1}`
/// for the module vectors with `i ≤ imax`.
pub fn check_g2_presentation(n: usize, mu: Rational, imax: usize) -> Result<LawReport<Power>> {
    let p = G2Presentation::new(n, mu)?;
    let pairs: Vec<Vec<Power>> = (1..=imax)
        .flat_map(|i| (1..=imax).map(move |j| vec![Power(i), Power(j)]))
        .collect();
    let singles: Vec<Vec<Power>> = p.module_degrees(imax).into_iter().map(|d| vec![Power(d)]).collect();
    let mut failures = collect_failures(&p, Law::G2Bracket, &pairs)?;
    failures.extend(collect_failures(&p, Law::G2Module, &singles)?);
    Ok(LawReport {
        name: "g2_presentation".into(),
        structure: format!("K[X] G2(N={n}, mu={})", p.mu),
        cap: imax,
        checked: pairs.len() + singles.len(),
        failures,
    })
}
