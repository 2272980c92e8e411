//! Evaluation of parsed expressions in a configured structure.

use comprelie::law::{Structure, StructureExt};
use comprelie::lincomb::{LinComb, Tensor};
use comprelie::polyx::Power;
use comprelie::prelie::Monomial;
use comprelie::structures::{KxStructure, SStructure, TvStructure};
use comprelie::Word;
use num_traits::Zero;

use crate::expr::{Expr, Func, Pos};
use crate::CliError;

/// Turns source atoms into basis elements.
pub trait Atoms: Structure {
    fn word(&self, letters: &[usize]) -> Result<Self::B, String>;

    fn power(&self, _n: usize) -> Result<Self::B, String> {
        Err("X^n needs kind = kx_family".into())
    }
}

fn check_letters(letters: &[usize], dim: usize) -> Result<(), String> {
    match letters.iter().find(|&&x| x >= dim) {
        Some(x) => Err(format!("unknown letter x{x} (dim = {dim})")),
        None => Ok(()),
    }
}

impl Atoms for TvStructure {
    fn word(&self, letters: &[usize]) -> Result<Word, String> {
        check_letters(letters, self.dim())?;
        Ok(Word::new(letters.to_vec()))
    }
}

impl Atoms for SStructure {
    fn word(&self, letters: &[usize]) -> Result<Monomial, String> {
        check_letters(letters, self.dim())?;
        Ok(Monomial::new(letters.to_vec()))
    }
}

impl Atoms for KxStructure {
    fn word(&self, _letters: &[usize]) -> Result<Power, String> {
        Err("words need a T(V) or S(V) kind; write X^n in K[X]".into())
    }

    fn power(&self, n: usize) -> Result<Power, String> {
        Ok(Power(n))
    }
}

/// The value of an expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value<B: Ord> {
    Elem(LinComb<B>),
    Tensor(Tensor<B>),
}

fn at(pos: Pos, msg: impl std::fmt::Display) -> CliError {
    CliError::Eval {
        offset: pos.0,
        message: msg.to_string(),
    }
}

fn elem<B: Ord>(v: Value<B>, pos: Pos, func: Func) -> Result<LinComb<B>, CliError> {
    match v {
        Value::Elem(e) => Ok(e),
        Value::Tensor(_) => Err(at(pos, format!("{} expects an element, not a tensor", func.name()))),
    }
}

fn first_pos(e: &Expr) -> Pos {
    match e {
        Expr::Word(_, p) | Expr::Power(_, p) | Expr::Call(_, _, p) => *p,
        Expr::Scaled(_, inner) => first_pos(inner),
        Expr::Sum(v) => v.first().map_or(Pos(0), first_pos),
        Expr::Unit => Pos(0),
    }
}

pub fn eval<S: Atoms>(s: &S, e: &Expr) -> Result<Value<S::B>, CliError> {
    Ok(match e {
        Expr::Unit => Value::Elem(LinComb::basis(s.unit())),
        Expr::Word(l, p) => Value::Elem(LinComb::basis(s.word(l).map_err(|m| at(*p, m))?)),
        Expr::Power(n, p) => Value::Elem(LinComb::basis(s.power(*n).map_err(|m| at(*p, m))?)),
        Expr::Scaled(c, inner) => match eval(s, inner)? {
            Value::Elem(x) => Value::Elem(x.scale(c)),
            Value::Tensor(t) => Value::Tensor(t.scale(c)),
        },
        Expr::Sum(terms) => {
            let mut acc = eval(s, &terms[0])?;
            for t in &terms[1..] {
                acc = match (acc, eval(s, t)?) {
                    (Value::Elem(a), Value::Elem(b)) => Value::Elem(a + b),
                    (Value::Tensor(a), Value::Tensor(b)) => Value::Tensor(a + b),
                    _ => return Err(at(first_pos(t), "cannot add an element and a tensor")),
                };
            }
            acc
        }
        Expr::Call(func, args, p) => {
            let mut vals = Vec::with_capacity(args.len());
            for a in args {
                vals.push(elem(eval(s, a)?, *p, *func)?);
            }
            let lib = |r: comprelie::Result<LinComb<S::B>>| r.map_err(|err| at(*p, err));
            match func {
                Func::Sh => Value::Elem(lib(s.mul_lin(&vals[0], &vals[1]))?),
                Func::Hs => Value::Elem(lib(s.half_lin(&vals[0], &vals[1]))?),
                Func::Pl => Value::Elem(lib(s.prelie_lin(&vals[0], &vals[1]))?),
                Func::Br => Value::Elem(lib(s.bracket_lin(&vals[0], &vals[1]))?),
                Func::Eps => Value::Elem(LinComb::term(s.unit(), s.counit_lin(&vals[0]))),
                Func::Cop => Value::Tensor(s.coproduct_lin(&vals[0]).map_err(|err| at(*p, err))?),
                Func::Rcop => {
                    let x = &vals[0];
                    if !s.counit_lin(x).is_zero() {
                        return Err(at(*p, "rcop needs an argument with zero counit"));
                    }
                    Value::Tensor(s.reduced_lin(x).map_err(|err| at(*p, err))?)
                }
            }
        }
    })
}
