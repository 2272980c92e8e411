//! Element expressions.
//!
//! ```text
//! expr := term (('+' | '-') term)*
//! term := [rational '*'] atom | rational | ('+' | '-') term
//! atom := word | 'X' ['^' int] | '1' | '(' expr ')' | func '(' expr {',' expr} ')'
//! word := ('x' int)+
//! func := sh | hs | pl | cop | rcop | br | eps
//! ```
//!
//! Whitespace is ignored between tokens. A bare rational `q` stands for
//! `q·1`.

use std::fmt;

use comprelie::scalar::parse_rational;
use comprelie::Rational;
use num_traits::One;

/// A byte offset into the source. Ignored by equality so that re-parsing a
/// rendered expression compares equal to the original.
#[derive(Clone, Copy, Debug, Default)]
pub struct Pos(pub usize);

impl PartialEq for Pos {
    fn eq(&self, _: &Pos) -> bool {
        true
    }
}

impl Eq for Pos {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Sh,
    Hs,
    Pl,
    Cop,
    Rcop,
    Br,
    Eps,
}

impl Func {
    fn from_name(s: &str) -> Option<Func> {
        Some(match s {
            "sh" => Func::Sh,
            "hs" => Func::Hs,
            "pl" => Func::Pl,
            "cop" => Func::Cop,
            "rcop" => Func::Rcop,
            "br" => Func::Br,
            "eps" => Func::Eps,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Sh => "sh",
            Func::Hs => "hs",
            Func::Pl => "pl",
            Func::Cop => "cop",
            Func::Rcop => "rcop",
            Func::Br => "br",
            Func::Eps => "eps",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Sh | Func::Hs | Func::Pl | Func::Br => 2,
            Func::Cop | Func::Rcop | Func::Eps => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Unit,
    Word(Vec<usize>, Pos),
    Power(usize, Pos),
    Scaled(Rational, Box<Expr>),
    Sum(Vec<Expr>),
    Call(Func, Vec<Expr>, Pos),
}

impl Expr {
    fn negate(self) -> Expr {
        match self {
            Expr::Scaled(c, e) => Expr::Scaled(-c, e),
            other => Expr::Scaled(-Rational::one(), Box::new(other)),
        }
    }

    /// Largest letter index mentioned, if any.
    pub fn max_letter(&self) -> Option<usize> {
        match self {
            Expr::Word(l, _) => l.iter().copied().max(),
            Expr::Unit | Expr::Power(..) => None,
            Expr::Scaled(_, e) => e.max_letter(),
            Expr::Sum(v) | Expr::Call(_, v, _) => v.iter().filter_map(Expr::max_letter).max(),
        }
    }
}

fn fmt_atom(e: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match e {
        Expr::Sum(_) | Expr::Scaled(..) => write!(f, "({e})"),
        _ => write!(f, "{e}"),
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Unit => f.write_str("1"),
            Expr::Word(l, _) => l.iter().try_for_each(|x| write!(f, "x{x}")),
            Expr::Power(n, _) => write!(f, "X^{n}"),
            Expr::Scaled(c, e) if **e == Expr::Unit => write!(f, "{c}"),
            Expr::Scaled(c, e) => {
                write!(f, "{c}*")?;
                fmt_atom(e, f)
            }
            Expr::Sum(terms) => {
                for (i, t) in terms.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    match t {
                        Expr::Sum(_) => write!(f, "({t})")?,
                        _ => write!(f, "{t}")?,
                    }
                }
                Ok(())
            }
            Expr::Call(func, args, _) => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            offset,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += self.src[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = self.peek().map_or("end of input".to_string(), |d| format!("'{d}'"));
            self.err(self.pos, format!("expected '{c}', found {found}"))
        }
    }

    fn digits(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..].bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some((start, &self.src[start..start + len]))
    }

    fn index(&mut self, what: &str) -> Result<usize, ParseError> {
        let at = self.pos;
        match self.digits() {
            Some((start, d)) => d
                .parse()
                .or_else(|_| self.err(start, format!("{what} {d} is too large"))),
            None => self.err(at, format!("expected {what}")),
        }
    }

    fn rational(&mut self, negative: bool) -> Result<Rational, ParseError> {
        let (start, num) = self.digits().expect("caller checked for a digit");
        let mut text = num.to_string();
        let save = self.pos;
        if self.eat('/') {
            match self.digits() {
                Some((_, den)) => {
                    text.push('/');
                    text.push_str(den);
                }
                None => self.pos = save,
            }
        }
        let q = parse_rational(&text).or_else(|e| self.err(start, e.to_string()))?;
        Ok(if negative { -q } else { q })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![self.term()?];
        loop {
            if self.eat('+') {
                terms.push(self.term()?);
            } else if self.eat('-') {
                terms.push(self.term()?.negate());
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Expr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let sign = if self.eat('-') {
            Some(true)
        } else if self.eat('+') {
            Some(false)
        } else {
            None
        };
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let q = self.rational(sign == Some(true))?;
            let body = if self.eat('*') { self.atom()? } else { Expr::Unit };
            return Ok(Expr::Scaled(q, Box::new(body)));
        }
        match sign {
            Some(true) => Ok(self.term()?.negate()),
            Some(false) => self.term(),
            None => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let at = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some('x') => {
                let mut letters = Vec::new();
                while self.eat('x') {
                    letters.push(self.index("letter index")?);
                }
                Ok(Expr::Word(letters, Pos(at)))
            }
            Some('X') => {
                self.pos += 1;
                let n = if self.eat('^') { self.index("exponent")? } else { 1 };
                Ok(Expr::Power(n, Pos(at)))
            }
            Some('1') => {
                self.pos += 1;
                if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    return self.err(at, "only 1 may follow '*' as a number");
                }
                Ok(Expr::Unit)
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_lowercase() => {
                let len = self.src[at..].bytes().take_while(u8::is_ascii_lowercase).count();
                let name = &self.src[at..at + len];
                let Some(func) = Func::from_name(name) else {
                    return self.err(at, format!("unknown function '{name}'"));
                };
                self.pos += len;
                self.expect('(')?;
                let mut args = vec![self.expr()?];
                while self.eat(',') {
                    args.push(self.expr()?);
                }
                self.expect(')')?;
                if args.len() != func.arity() {
                    return self.err(
                        at,
                        format!("{name} takes {} argument(s), got {}", func.arity(), args.len()),
                    );
                }
                Ok(Expr::Call(func, args, Pos(at)))
            }
            Some(c) => self.err(at, format!("unexpected '{c}'")),
            None => self.err(at, "unexpected end of input"),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < src.len() {
        let c = src[p.pos..].chars().next().unwrap();
        return p.err(p.pos, format!("unexpected '{c}'"));
    }
    Ok(e)
}
