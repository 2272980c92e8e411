//! Exhaustive verification of the Com-PreLie and Zinbiel-PreLie axioms.
//!
//! A [`Structure`] exposes its products on basis elements. Every law is
//! multilinear, so checking it on all tuples of basis elements up to a total
//! degree proves it at that truncation. Failing tuples are kept as
//! [`Witness`]es that can be replayed against the structure.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{AlgebraError, Result};
use crate::lincomb::{outer, tensor_product, Basis, LinComb, Pair, Tensor};
use crate::linear::LinMap;
use crate::scalar::Rational;

/// Basis-level handles of a candidate (bi)algebra.
pub trait Structure: Sync {
    type B: Basis;

    fn name(&self) -> String;

    /// Basis elements of the given degree, in increasing order.
    fn basis(&self, degree: usize) -> Vec<Self::B>;

    fn unit(&self) -> Self::B;

    /// The commutative product.
    fn mul(&self, a: &Self::B, b: &Self::B) -> Result<LinComb<Self::B>>;

    /// The preLie product.
    fn prelie(&self, a: &Self::B, b: &Self::B) -> Result<LinComb<Self::B>>;

    fn has_half_shuffle(&self) -> bool {
        false
    }

    fn half_shuffle(&self, _a: &Self::B, _b: &Self::B) -> Result<LinComb<Self::B>> {
        Err(AlgebraError::MissingHalfShuffle)
    }

    fn has_coproduct(&self) -> bool {
        false
    }

    fn coproduct(&self, _a: &Self::B) -> Result<Tensor<Self::B>> {
        Err(AlgebraError::MissingCoproduct)
    }
}

/// Linear extensions of the basis-level handles.
pub trait StructureExt: Structure {
    fn mul_lin(&self, a: &LinComb<Self::B>, b: &LinComb<Self::B>) -> Result<LinComb<Self::B>> {
        a.try_bilinear(b, |x, y| self.mul(x, y))
    }

    fn prelie_lin(&self, a: &LinComb<Self::B>, b: &LinComb<Self::B>) -> Result<LinComb<Self::B>> {
        a.try_bilinear(b, |x, y| self.prelie(x, y))
    }

    fn half_lin(&self, a: &LinComb<Self::B>, b: &LinComb<Self::B>) -> Result<LinComb<Self::B>> {
        a.try_bilinear(b, |x, y| self.half_shuffle(x, y))
    }

    fn coproduct_lin(&self, a: &LinComb<Self::B>) -> Result<Tensor<Self::B>> {
        a.try_map_linear(|x| self.coproduct(x))
    }

    /// `Δ(a) − a⊗1 − 1⊗a`.
    fn reduced_lin(&self, a: &LinComb<Self::B>) -> Result<Tensor<Self::B>> {
        let one = LinComb::basis(self.unit());
        let mut t = self.coproduct_lin(a)?;
        t -= &outer(a, &one);
        t -= &outer(&one, a);
        Ok(t)
    }

    fn counit_lin(&self, a: &LinComb<Self::B>) -> Rational {
        a.coeff(&self.unit())
    }

    /// `a • b − b • a`.
    fn bracket_lin(&self, a: &LinComb<Self::B>, b: &LinComb<Self::B>) -> Result<LinComb<Self::B>> {
        Ok(self.prelie_lin(a, b)? - self.prelie_lin(b, a)?)
    }

    /// Componentwise product on tensor squares.
    fn tensor_mul(&self, s: &Tensor<Self::B>, t: &Tensor<Self::B>) -> Result<Tensor<Self::B>> {
        let mut err = None;
        let out = tensor_product(s, t, |a, b| match self.mul(a, b) {
            Ok(v) => v,
            Err(e) => {
                err.get_or_insert(e);
                LinComb::zero()
            }
        });
        err.map_or(Ok(out), Err)
    }
}

impl<S: Structure + ?Sized> StructureExt for S {}

/// `Σ f(l) ⊗ g(r)` over the terms `l ⊗ r` of `t`.
fn map_pairs<B: Basis>(
    t: &Tensor<B>,
    mut f: impl FnMut(&B, &B) -> Result<Tensor<B>>,
) -> Result<Tensor<B>> {
    t.try_map_linear(|p| f(&p.0, &p.1))
}

/// Either side of a law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value<B: Ord> {
    Elem(LinComb<B>),
    Tensor(Tensor<B>),
}

impl<B: Basis> Value<B> {
    pub fn is_zero(&self) -> bool {
        match self {
            Value::Elem(e) => e.is_zero(),
            Value::Tensor(t) => t.is_zero(),
        }
    }
}

/// Left and right side of a law.
pub type Sides<B> = (Value<B>, Value<B>);

impl<B: Basis> fmt::Display for Value<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Elem(e) => fmt::Display::fmt(e, f),
            Value::Tensor(t) => fmt::Display::fmt(t, f),
        }
    }
}

/// A single identity between two multilinear expressions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    /// `a⧢b = b⧢a`
    Commutativity,
    /// `(a⧢b)⧢c = a⧢(b⧢c)`
    Associativity,
    /// `(a•b)•c − a•(b•c) = (a•c)•b − a•(c•b)`
    PreLie,
    /// `(a⧢b)•c = (a•c)⧢b + a⧢(b•c)`
    Derivation,
    /// `a≺b + b≺a = a⧢b`
    HalfShuffleSum,
    /// `(a≺b)≺c = a≺(b≺c + c≺b)`
    Zinbiel,
    /// `(a≺b)•c = (a•c)≺b + a≺(b•c)`
    ZinbielPreLie,
    /// `Δ(a⧢b) = Δ(a)⧢Δ(b)`
    CoproductMorphism,
    /// `Δ(a•b) = a⁽¹⁾⊗a⁽²⁾•b + a⁽¹⁾•b⁽¹⁾⊗a⁽²⁾⧢b⁽²⁾`
    BialgebraCompat,
    /// `δ̃(a≺b) = a′≺b′⊗a″⧢b″ + a′≺b⊗a″ + a′⊗a″⧢b + a≺b′⊗b″ + a⊗b`
    ZinbielCoproductCompat,
    /// `1•a = 0`
    UnitAnnihilates,
    /// `ε(a•b) = 0`
    CounitVanishes,
    /// `a•b` is primitive
    PrimClosure,
    /// `[[a,b],c] + [[b,c],a] + [[c,a],b] = 0`
    Jacobi,
    /// `[a,b] = −[b,a]`
    Antisymmetry,
    /// `[E_i,E_j] = (i−j)E_{i+j}`
    FdbEE,
    /// `[F_i,F_j] = 0`
    FdbFF,
    /// `[F_i^{(r)},E_j] = (i+(r−N)/N)F_{i+j}^{(r)}`
    FdbFE,
    /// the bracket table of `G2`
    G2Bracket,
    /// `[f_i, X^N] = f_{i+1}`
    G2Module,
}

impl Law {
    pub fn name(self) -> &'static str {
        match self {
            Law::Commutativity => "commutativity",
            Law::Associativity => "associativity",
            Law::PreLie => "prelie",
            Law::Derivation => "derivation",
            Law::HalfShuffleSum => "half_shuffle_sum",
            Law::Zinbiel => "zinbiel",
            Law::ZinbielPreLie => "zinbiel_prelie",
            Law::CoproductMorphism => "coproduct_morphism",
            Law::BialgebraCompat => "bialgebra_compat",
            Law::ZinbielCoproductCompat => "zinbiel_coproduct_compat",
            Law::UnitAnnihilates => "unit_annihilates",
            Law::CounitVanishes => "counit_vanishes",
            Law::PrimClosure => "prim_closure",
            Law::Jacobi => "jacobi",
            Law::Antisymmetry => "antisymmetry",
            Law::FdbEE => "fdb_e_e",
            Law::FdbFF => "fdb_f_f",
            Law::FdbFE => "fdb_f_e",
            Law::G2Bracket => "g2_bracket",
            Law::G2Module => "g2_module",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Law::UnitAnnihilates | Law::G2Module => 1,
            Law::Associativity
            | Law::PreLie
            | Law::Derivation
            | Law::Zinbiel
            | Law::ZinbielPreLie
            | Law::Jacobi => 3,
            _ => 2,
        }
    }

    /// Laws stated on the augmentation ideal only.
    pub fn needs_nonempty(self) -> bool {
        matches!(
            self,
            Law::HalfShuffleSum | Law::Zinbiel | Law::ZinbielPreLie | Law::ZinbielCoproductCompat
        )
    }

    /// Both sides of the law at a tuple of basis elements.
    pub fn evaluate<S: Structure + ?Sized>(
        self,
        s: &S,
        inputs: &[S::B],
    ) -> Result<Sides<S::B>> {
        if inputs.len() != self.arity() {
            return Err(AlgebraError::Malformed(format!(
                "{} takes {} inputs, got {}",
                self.name(),
                self.arity(),
                inputs.len()
            )));
        }
        let e = |i: usize| LinComb::basis(inputs[i].clone());
        let el = Value::Elem;
        let tn = Value::Tensor;
        let one = || LinComb::basis(s.unit());
        Ok(match self {
            Law::Commutativity => {
                let (a, b) = (e(0), e(1));
                (el(s.mul_lin(&a, &b)?), el(s.mul_lin(&b, &a)?))
            }
            Law::Associativity => {
                let (a, b, c) = (e(0), e(1), e(2));
                (
                    el(s.mul_lin(&s.mul_lin(&a, &b)?, &c)?),
                    el(s.mul_lin(&a, &s.mul_lin(&b, &c)?)?),
                )
            }
            Law::PreLie => {
                let (a, b, c) = (e(0), e(1), e(2));
                let assoc = |x: &LinComb<S::B>, y: &LinComb<S::B>, z: &LinComb<S::B>| {
                    Ok::<_, AlgebraError>(
                        s.prelie_lin(&s.prelie_lin(x, y)?, z)? - s.prelie_lin(x, &s.prelie_lin(y, z)?)?,
                    )
                };
                (el(assoc(&a, &b, &c)?), el(assoc(&a, &c, &b)?))
            }
            Law::Derivation => {
                let (a, b, c) = (e(0), e(1), e(2));
                let lhs = s.prelie_lin(&s.mul_lin(&a, &b)?, &c)?;
                let rhs = s.mul_lin(&s.prelie_lin(&a, &c)?, &b)? + s.mul_lin(&a, &s.prelie_lin(&b, &c)?)?;
                (el(lhs), el(rhs))
            }
            Law::HalfShuffleSum => {
                let (a, b) = (e(0), e(1));
                (
                    el(s.half_lin(&a, &b)? + s.half_lin(&b, &a)?),
                    el(s.mul_lin(&a, &b)?),
                )
            }
            Law::Zinbiel => {
                let (a, b, c) = (e(0), e(1), e(2));
                let lhs = s.half_lin(&s.half_lin(&a, &b)?, &c)?;
                let inner = s.half_lin(&b, &c)? + s.half_lin(&c, &b)?;
                (el(lhs), el(s.half_lin(&a, &inner)?))
            }
            Law::ZinbielPreLie => {
                let (a, b, c) = (e(0), e(1), e(2));
                let lhs = s.prelie_lin(&s.half_lin(&a, &b)?, &c)?;
                let rhs = s.half_lin(&s.prelie_lin(&a, &c)?, &b)?
                    + s.half_lin(&a, &s.prelie_lin(&b, &c)?)?;
                (el(lhs), el(rhs))
            }
            Law::CoproductMorphism => {
                let (a, b) = (e(0), e(1));
                let lhs = s.coproduct_lin(&s.mul_lin(&a, &b)?)?;
                let rhs = s.tensor_mul(&s.coproduct_lin(&a)?, &s.coproduct_lin(&b)?)?;
                (tn(lhs), tn(rhs))
            }
            Law::BialgebraCompat => {
                let (a, b) = (e(0), e(1));
                let lhs = s.coproduct_lin(&s.prelie_lin(&a, &b)?)?;
                let da = s.coproduct_lin(&a)?;
                let db = s.coproduct_lin(&b)?;
                let first = map_pairs(&da, |l, r| {
                    Ok(outer(&LinComb::basis(l.clone()), &s.prelie(r, &inputs[1])?))
                })?;
                let mut second = Tensor::zero();
                for (p, c) in da.iter() {
                    for (q, d) in db.iter() {
                        let left = s.prelie(&p.0, &q.0)?;
                        let right = s.mul(&p.1, &q.1)?;
                        second.add_scaled(&outer(&left, &right), &(c * d));
                    }
                }
                (tn(lhs), tn(first + second))
            }
            Law::ZinbielCoproductCompat => {
                let (a, b) = (e(0), e(1));
                let lhs = s.reduced_lin(&s.half_lin(&a, &b)?)?;
                let ra = s.reduced_lin(&a)?;
                let rb = s.reduced_lin(&b)?;
                let mut rhs = Tensor::zero();
                for (p, c) in ra.iter() {
                    for (q, d) in rb.iter() {
                        let t = outer(&s.half_shuffle(&p.0, &q.0)?, &s.mul(&p.1, &q.1)?);
                        rhs.add_scaled(&t, &(c * d));
                    }
                    let hb = s.half_shuffle(&p.0, &inputs[1])?;
                    rhs.add_scaled(&outer(&hb, &LinComb::basis(p.1.clone())), c);
                    let mb = s.mul(&p.1, &inputs[1])?;
                    rhs.add_scaled(&outer(&LinComb::basis(p.0.clone()), &mb), c);
                }
                for (q, d) in rb.iter() {
                    let ha = s.half_shuffle(&inputs[0], &q.0)?;
                    rhs.add_scaled(&outer(&ha, &LinComb::basis(q.1.clone())), d);
                }
                rhs += &outer(&a, &b);
                (tn(lhs), tn(rhs))
            }
            Law::UnitAnnihilates => (el(s.prelie_lin(&one(), &e(0))?), el(LinComb::zero())),
            Law::CounitVanishes => {
                let p = s.prelie_lin(&e(0), &e(1))?;
                let eps = s.counit_lin(&p);
                (el(LinComb::term(s.unit(), eps)), el(LinComb::zero()))
            }
            Law::PrimClosure => {
                let p = s.prelie_lin(&e(0), &e(1))?;
                (tn(s.reduced_lin(&p)?), tn(Tensor::zero()))
            }
            Law::Jacobi => {
                let (a, b, c) = (e(0), e(1), e(2));
                let br = |x: &LinComb<S::B>, y: &LinComb<S::B>| s.bracket_lin(x, y);
                let sum = br(&br(&a, &b)?, &c)? + br(&br(&b, &c)?, &a)? + br(&br(&c, &a)?, &b)?;
                (el(sum), el(LinComb::zero()))
            }
            Law::Antisymmetry => {
                let (a, b) = (e(0), e(1));
                (el(s.bracket_lin(&a, &b)?), el(-s.bracket_lin(&b, &a)?))
            }
            Law::FdbEE | Law::FdbFF | Law::FdbFE | Law::G2Bracket | Law::G2Module => {
                return Err(AlgebraError::Malformed(format!(
                    "{} is a presentation relation and needs its basis change",
                    self.name()
                )))
            }
        })
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Anything that can evaluate both sides of a law at basis inputs.
pub trait Evaluate<B: Basis> {
    fn evaluate(&self, law: Law, inputs: &[B]) -> Result<(Value<B>, Value<B>)>;
}

impl<S: Structure> Evaluate<S::B> for S {
    fn evaluate(&self, law: Law, inputs: &[S::B]) -> Result<Sides<S::B>> {
        law.evaluate(self, inputs)
    }
}

/// A tuple of basis elements on which a law fails, with both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness<B: Basis> {
    pub law: Law,
    pub inputs: Vec<B>,
    pub lhs: Value<B>,
    pub rhs: Value<B>,
}

impl<B: Basis> Witness<B> {
    /// Re-evaluates the law at the stored inputs; true iff both sides come out
    /// as recorded and still differ.
    pub fn reproduces(&self, ev: &impl Evaluate<B>) -> Result<bool> {
        let (l, r) = ev.evaluate(self.law, &self.inputs)?;
        Ok(l == self.lhs && r == self.rhs && l != r)
    }

    pub fn degree(&self) -> usize {
        self.inputs.iter().map(Basis::degree).sum()
    }
}

impl<B: Basis> fmt::Display for Witness<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at (", self.law)?;
        for (i, x) in self.inputs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "): {} ≠ {}", self.lhs, self.rhs)
    }
}

/// Outcome of one check: how many tuples were tested and every failure, in
/// the order of enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport<B: Basis> {
    pub name: String,
    pub structure: String,
    pub cap: usize,
    pub checked: usize,
    pub failures: Vec<Witness<B>>,
}

impl<B: Basis> LawReport<B> {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// The first failing tuple.
    pub fn witness(&self) -> Option<&Witness<B>> {
        self.failures.first()
    }

    /// The first failure at exactly these inputs.
    pub fn failure_at(&self, inputs: &[B]) -> Option<&Witness<B>> {
        self.failures.iter().find(|w| w.inputs == inputs)
    }
}

impl<B: Basis> fmt::Display for LawReport<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.witness() {
            None => write!(f, "{}: pass ({} cases, cap {})", self.name, self.checked, self.cap),
            Some(w) => write!(
                f,
                "{}: FAIL ({} of {} cases, cap {}); first: {w}",
                self.name,
                self.failures.len(),
                self.checked,
                self.cap
            ),
        }
    }
}

/// All `arity`-tuples of basis elements of total degree at most `cap`,
/// ordered by total degree and then lexicographically.
pub fn tuples<S: Structure + ?Sized>(
    s: &S,
    arity: usize,
    cap: usize,
    nonempty: bool,
) -> Vec<Vec<S::B>> {
    let levels: Vec<Vec<S::B>> = (0..=cap).map(|d| s.basis(d)).collect();
    let low = usize::from(nonempty);
    let mut out = Vec::new();
    for total in 0..=cap {
        let mut bucket = Vec::new();
        let mut degs = vec![0usize; arity];
        compositions(total, low, &mut degs, 0, &mut |degs| {
            let mut acc: Vec<Vec<S::B>> = vec![Vec::new()];
            for &d in degs {
                acc = acc
                    .into_iter()
                    .flat_map(|prefix| {
                        levels[d].iter().map(move |x| {
                            let mut p = prefix.clone();
                            p.push(x.clone());
                            p
                        })
                    })
                    .collect();
            }
            bucket.extend(acc);
        });
        bucket.sort();
        out.extend(bucket);
    }
    out
}

fn compositions(
    remaining: usize,
    low: usize,
    degs: &mut Vec<usize>,
    pos: usize,
    emit: &mut dyn FnMut(&[usize]),
) {
    if pos == degs.len() {
        if remaining == 0 {
            emit(degs);
        }
        return;
    }
    let slots_after = degs.len() - pos - 1;
    if remaining < low * (slots_after + 1) {
        return;
    }
    for d in low..=remaining - low * slots_after {
        degs[pos] = d;
        compositions(remaining - d, low, degs, pos + 1, emit);
    }
}

/// Evaluates each tuple in parallel, keeping enumeration order.
pub(crate) fn collect_failures<B: Basis, E: Evaluate<B> + Sync>(
    ev: &E,
    law: Law,
    cases: &[Vec<B>],
) -> Result<Vec<Witness<B>>> {
    let results: Vec<Result<Option<Witness<B>>>> = cases
        .par_iter()
        .map(|inputs| {
            let (lhs, rhs) = ev.evaluate(law, inputs)?;
            Ok((lhs != rhs).then(|| Witness {
                law,
                inputs: inputs.clone(),
                lhs,
                rhs,
            }))
        })
        .collect();
    let mut out = Vec::new();
    for r in results {
        if let Some(w) = r? {
            out.push(w);
        }
    }
    Ok(out)
}

/// Runs the given laws over all tuples up to `cap` and merges the failures in
/// law order.
pub fn check_laws<S: Structure>(s: &S, name: &str, laws: &[Law], cap: usize) -> Result<LawReport<S::B>> {
    let mut report = LawReport {
        name: name.to_string(),
        structure: s.name(),
        cap,
        checked: 0,
        failures: Vec::new(),
    };
    for &law in laws {
        let cases = tuples(s, law.arity(), cap, law.needs_nonempty());
        report.checked += cases.len();
        report.failures.extend(collect_failures(s, law, &cases)?);
    }
    Ok(report)
}

fn need_half<S: Structure>(s: &S) -> Result<()> {
    if !s.has_half_shuffle() {
        return Err(AlgebraError::MissingHalfShuffle);
    }
    Ok(())
}

fn need_coproduct<S: Structure>(s: &S) -> Result<()> {
    if !s.has_coproduct() {
        return Err(AlgebraError::MissingCoproduct);
    }
    Ok(())
}

/// Commutativity and associativity of the product.
pub fn check_com_assoc<S: Structure>(s: &S, cap: usize) -> Result<LawReport<S::B>> {
    check_laws(s, "com_assoc", &[Law::Commutativity, Law::Associativity], cap)
}

pub fn check_prelie<S: Structure>(s: &S, cap: usize) -> Result<LawReport<S::B>> {
    check_laws(s, "prelie", &[Law::PreLie], cap)
}

pub fn check_derivation<S: Structure>(s: &S, cap: usize) -> Result<LawReport<S::B>> {
    check_laws(s, "derivation", &[Law::Derivation], cap)
}

/// The Zinbiel identity and `a≺b + b≺a = a⧢b` on the augmentation ideal.
pub fn check_zinbiel<S: Structure>(s: &S, cap: usize) -> Result<LawReport<S::B>> {
    need_half(s)?;
    check_laws(s, "zinbiel", &[Law::HalfShuffleSum, Law::Zinbiel], cap)
}

pub fn check_zinbiel_prelie<S: Structure>(s: &S, cap: usize) -> Result<LawReport<S::B>> {
    need_half(s)?;
    check_laws(s, "zinbiel_prelie", &[Law::ZinbielPreLie], cap)
}

pub fn check_coproduct_morphism<S: Structure>(s: &S, cap: usize) -> Result<LawReport<S::B>> {
    need_coproduct(s)?;
    check_laws(s, "coproduct_morphism", &[Law::CoproductMorphism], cap)
}

pub fn check_bialgebra_compat<S: Structure>(s: &S, cap: usize) -> Result<LawReport<S::B>> {
    need_coproduct(s)?;
    check_laws(s, "bialgebra_compat", &[Law::BialgebraCompat], cap)
}

pub fn check_zinbiel_coproduct_compat<S: Structure>(s: &S, cap: usize) -> Result<LawReport<S::B>> {
    need_half(s)?;
    need_coproduct(s)?;
    check_laws(s, "zinbiel_coproduct_compat", &[Law::ZinbielCoproductCompat], cap)
}

/// `1•a = 0` and `ε(a•b) = 0`.
pub fn check_unit_counit<S: Structure>(s: &S, cap: usize) -> Result<LawReport<S::B>> {
    check_laws(s, "unit_counit", &[Law::UnitAnnihilates, Law::CounitVanishes], cap)
}

/// The matrix of `x ↦ x•1` on the degree-one basis, each image checked to be
/// primitive.
pub fn extract_fa<S: Structure>(s: &S) -> Result<LinMap> {
    need_coproduct(s)?;
    let letters = s.basis(1);
    let one = LinComb::basis(s.unit());
    let mut rows = Vec::with_capacity(letters.len());
    for x in &letters {
        let img = s.prelie_lin(&LinComb::basis(x.clone()), &one)?;
        if !s.reduced_lin(&img)?.is_zero() {
            return Err(AlgebraError::NonPrimitiveImage {
                input: x.to_string(),
                image: img.to_string(),
            });
        }
        rows.push(letters.iter().map(|y| img.coeff(y)).collect());
    }
    LinMap::new(rows)
}

/// `x•y` is primitive for all degree-one basis pairs; requires `f_A = 0`.
pub fn check_prim_closure<S: Structure>(s: &S) -> Result<LawReport<S::B>> {
    let fa = extract_fa(s)?;
    if !fa.is_zero() {
        return Err(AlgebraError::PreconditionFA(format!(
            "x•1 ≠ 0 on the degree-one basis of {}",
            s.name()
        )));
    }
    let letters = s.basis(1);
    let cases: Vec<Vec<S::B>> = letters
        .iter()
        .flat_map(|x| letters.iter().map(move |y| vec![x.clone(), y.clone()]))
        .collect();
    let failures = collect_failures(s, Law::PrimClosure, &cases)?;
    Ok(LawReport {
        name: "prim_closure".into(),
        structure: s.name(),
        cap: 2,
        checked: cases.len(),
        failures,
    })
}

/// Named groups of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// commutative algebra, preLie, derivation
    ComPreLie,
    /// half-shuffle laws and their compatibilities
    Zinbiel,
    /// coproduct compatibilities and the unit/counit consequences
    Bialgebra,
    All,
}

impl FromStr for Suite {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "comprelie" => Ok(Suite::ComPreLie),
            "zinbiel" => Ok(Suite::Zinbiel),
            "bialgebra" => Ok(Suite::Bialgebra),
            "all" => Ok(Suite::All),
            other => Err(AlgebraError::Malformed(format!(
                "unknown suite {other:?} (expected comprelie, zinbiel, bialgebra or all)"
            ))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::ComPreLie => "comprelie",
            Suite::Zinbiel => "zinbiel",
            Suite::Bialgebra => "bialgebra",
            Suite::All => "all",
        })
    }
}

/// Runs a suite. Laws with three inputs use `cap` as their total-degree
/// bound; laws with at most two inputs use `cap + 1`. `All` skips the suites
/// whose handles the structure lacks.
pub fn run_suite<S: Structure>(s: &S, suite: Suite, cap: usize) -> Result<Vec<LawReport<S::B>>> {
    let mut out = Vec::new();
    if matches!(suite, Suite::ComPreLie | Suite::All) {
        out.push(check_com_assoc(s, cap)?);
        out.push(check_prelie(s, cap)?);
        out.push(check_derivation(s, cap)?);
    }
    let all = suite == Suite::All;
    if suite == Suite::Zinbiel || (all && s.has_half_shuffle()) {
        out.push(check_zinbiel(s, cap)?);
        out.push(check_zinbiel_prelie(s, cap)?);
        out.push(check_zinbiel_coproduct_compat(s, cap + 1)?);
    }
    if suite == Suite::Bialgebra || (all && s.has_coproduct()) {
        out.push(check_coproduct_morphism(s, cap + 1)?);
        out.push(check_bialgebra_compat(s, cap + 1)?);
        out.push(check_unit_counit(s, cap + 1)?);
    }
    Ok(out)
}

/// Which handle of a [`Corrupted`] structure is perturbed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Mul,
    PreLie,
    HalfShuffle,
    Coproduct,
}

/// A structure with one output perturbed: `op(at.0, at.1)` gains `+1·bump`
/// (for the coproduct, `Δ(at.0)` gains `bump⊗bump`). Used to confirm that
/// the checker catches a single wrong coefficient.
pub struct Corrupted<S: Structure> {
    pub inner: S,
    pub op: Op,
    pub at: (S::B, S::B),
    pub bump: S::B,
}

impl<S: Structure> Corrupted<S> {
    fn hit(&self, op: Op, a: &S::B, b: &S::B) -> bool {
        self.op == op && *a == self.at.0 && *b == self.at.1
    }

    fn bumped(&self, mut v: LinComb<S::B>) -> LinComb<S::B> {
        v.add_term(self.bump.clone(), Rational::from_integer(1.into()));
        v
    }
}

impl<S: Structure> Structure for Corrupted<S> {
    type B = S::B;

    fn name(&self) -> String {
        format!("corrupted {}", self.inner.name())
    }

    fn basis(&self, degree: usize) -> Vec<S::B> {
        self.inner.basis(degree)
    }

    fn unit(&self) -> S::B {
        self.inner.unit()
    }

    fn mul(&self, a: &S::B, b: &S::B) -> Result<LinComb<S::B>> {
        let v = self.inner.mul(a, b)?;
        Ok(if self.hit(Op::Mul, a, b) { self.bumped(v) } else { v })
    }

    fn prelie(&self, a: &S::B, b: &S::B) -> Result<LinComb<S::B>> {
        let v = self.inner.prelie(a, b)?;
        Ok(if self.hit(Op::PreLie, a, b) { self.bumped(v) } else { v })
    }

    fn has_half_shuffle(&self) -> bool {
        self.inner.has_half_shuffle()
    }

    fn half_shuffle(&self, a: &S::B, b: &S::B) -> Result<LinComb<S::B>> {
        let v = self.inner.half_shuffle(a, b)?;
        Ok(if self.hit(Op::HalfShuffle, a, b) { self.bumped(v) } else { v })
    }

    fn has_coproduct(&self) -> bool {
        self.inner.has_coproduct()
    }

    fn coproduct(&self, a: &S::B) -> Result<Tensor<S::B>> {
        let mut t = self.inner.coproduct(a)?;
        if self.op == Op::Coproduct && *a == self.at.0 {
            t.add_term(
                Pair(self.bump.clone(), self.bump.clone()),
                Rational::from_integer(1.into()),
            );
        }
        Ok(t)
    }
}

/// Whether every report passed.
pub fn all_passed<B: Basis>(reports: &[LawReport<B>]) -> bool {
    reports.iter().all(LawReport::passed)
}
