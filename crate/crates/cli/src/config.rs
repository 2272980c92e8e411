//! Structure configuration files.
//!
//! One `key = value` pair per line; `#` starts a comment. Lists of rationals
//! are separated by whitespace, and rows of a matrix by `;`.
//!
//! ```text
//! kind = tvf            # tvf | tvfl | tvstar | sfl | kx_family
//! dim = 2
//! f = 0 0 ; 1 0         # tvf: the images f(x0), f(x1)
//! form = 0 1            # tvfl, sfl: the values f(x0), f(x1)
//! lambda = 1/2          # tvfl, sfl, kx_family
//! star = 1 0 ; 0 1 ; 0 -1 ; 0 0    # tvstar: e_i ⋆ e_j for (i, j) in order
//! family = G1           # kx_family: G1 | G2 | G3 | G4 | GPrime | explicit
//! N = 1
//! a = 1
//! b = 1
//! mu = 2
//! sequence = 0 1 1/2    # kx_family explicit: λ_0, λ_1, ...
//! ```

use std::collections::BTreeMap;

use comprelie::polyx::{FamilySpec, LambdaSeq};
use comprelie::scalar::parse_rational;
use comprelie::structures::{KxStructure, SStructure, TvStructure};
use comprelie::{LinForm, LinMap, PreLieConsts, Rational};

use crate::CliError;

const KEYS: &[&str] = &[
    "kind", "dim", "f", "form", "lambda", "star", "family", "N", "a", "b", "mu", "sequence",
];

/// A configured structure.
#[derive(Clone, Debug)]
pub enum Configured {
    Tv(TvStructure),
    S(SStructure),
    Kx(KxStructure),
}

struct Entries {
    map: BTreeMap<String, (usize, String)>,
}

fn bad(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Config(format!("line {line}: {}", msg.into()))
}

impl Entries {
    fn parse(text: &str) -> Result<Self, CliError> {
        let mut map = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(bad(i + 1, format!("expected key = value, found '{line}'")));
            };
            let k = k.trim();
            if !KEYS.contains(&k) {
                return Err(bad(i + 1, format!("unknown key '{k}'")));
            }
            if map.insert(k.to_string(), (i + 1, v.trim().to_string())).is_some() {
                return Err(bad(i + 1, format!("duplicate key '{k}'")));
            }
        }
        Ok(Entries { map })
    }

    fn get(&self, key: &str) -> Result<(usize, &str), CliError> {
        self.map
            .get(key)
            .map(|(l, v)| (*l, v.as_str()))
            .ok_or_else(|| CliError::Config(format!("missing key '{key}'")))
    }

    fn rational(&self, key: &str) -> Result<Rational, CliError> {
        let (line, v) = self.get(key)?;
        parse_rational(v).map_err(|e| bad(line, e.to_string()))
    }

    fn rational_or_zero(&self, key: &str) -> Result<Rational, CliError> {
        if self.map.contains_key(key) {
            self.rational(key)
        } else {
            Ok(Rational::default())
        }
    }

    fn usize(&self, key: &str) -> Result<usize, CliError> {
        let (line, v) = self.get(key)?;
        v.parse()
            .map_err(|_| bad(line, format!("{key} must be a nonnegative integer, found '{v}'")))
    }

    fn list(&self, key: &str) -> Result<(usize, Vec<Rational>), CliError> {
        let (line, v) = self.get(key)?;
        let vals = v
            .split_whitespace()
            .map(|t| parse_rational(t).map_err(|e| bad(line, e.to_string())))
            .collect::<Result<_, _>>()?;
        Ok((line, vals))
    }

    fn rows(&self, key: &str, rows: usize, cols: usize) -> Result<Vec<Vec<Rational>>, CliError> {
        let (line, v) = self.get(key)?;
        let out: Vec<Vec<Rational>> = v
            .split(';')
            .map(|row| {
                row.split_whitespace()
                    .map(|t| parse_rational(t).map_err(|e| bad(line, e.to_string())))
                    .collect::<Result<_, _>>()
            })
            .collect::<Result<_, _>>()?;
        if out.len() != rows || out.iter().any(|r| r.len() != cols) {
            return Err(bad(line, format!("{key} needs {rows} rows of {cols} values")));
        }
        Ok(out)
    }

    fn form(&self, dim: usize) -> Result<LinForm, CliError> {
        let (line, vals) = self.list("form")?;
        if vals.len() != dim {
            return Err(bad(line, format!("form needs {dim} values, found {}", vals.len())));
        }
        Ok(LinForm::new(vals)?)
    }
}

pub fn parse_config(text: &str) -> Result<Configured, CliError> {
    let e = Entries::parse(text)?;
    let (line, kind) = e.get("kind")?;
    let dim = || e.usize("dim");
    Ok(match kind {
        "tvf" => {
            let d = dim()?;
            Configured::Tv(TvStructure::tvf(LinMap::new(e.rows("f", d, d)?)?))
        }
        "tvfl" => {
            let d = dim()?;
            Configured::Tv(TvStructure::tvfl(e.form(d)?, e.rational("lambda")?))
        }
        "sfl" => {
            let d = dim()?;
            Configured::S(SStructure::new(e.form(d)?, e.rational("lambda")?))
        }
        "tvstar" => {
            let d = dim()?;
            let flat = e.rows("star", d * d, d)?;
            let c = flat.chunks(d).map(<[_]>::to_vec).collect();
            Configured::Tv(TvStructure::tvstar(PreLieConsts::new(c)?))
        }
        "kx_family" => Configured::Kx(kx(&e)?),
        other => return Err(bad(line, format!("unknown kind '{other}'"))),
    })
}

fn kx(e: &Entries) -> Result<KxStructure, CliError> {
    let (line, family) = e.get("family")?;
    let lambda = || e.rational_or_zero("lambda");
    let spec = match family {
        "G1" => FamilySpec::g1(e.usize("N")?, lambda()?, e.rational("a")?, e.rational("b")?)?,
        "G2" => FamilySpec::g2(e.usize("N")?, lambda()?, e.rational("mu")?)?,
        "G3" => FamilySpec::g3(e.usize("N")?, lambda()?, e.rational("mu")?)?,
        "G4" => FamilySpec::g4(lambda()?),
        "GPrime" => FamilySpec::gprime(lambda()?, e.rational("mu")?),
        "explicit" => {
            let (_, vals) = e.list("sequence")?;
            return Ok(KxStructure::graded(LambdaSeq::explicit(vals)?));
        }
        other => return Err(bad(line, format!("unknown family '{other}'"))),
    };
    Ok(KxStructure::family(spec)?)
}
