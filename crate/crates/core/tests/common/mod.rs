//! Oracles shared by the integration tests and the acceptance runner.
#![allow(dead_code)]

use comprelie::lincomb::LinComb;
use comprelie::polyx::Power;
use comprelie::prelie::{lemma8_closed_form, tvfl_partial, tvfl_phi, tvfl_product, SElem};
use comprelie::shuffle::{shuffle, shuffle_words, symmetrize};
use comprelie::{Elem, LinForm, LinMap, Rational, Word};

pub fn words_upto(dim: usize, n: usize) -> Vec<Word> {
    (0..=n).flat_map(|k| Word::all(dim, k)).collect()
}

pub fn el(dim: usize, w: &Word) -> Elem {
    Elem::word(dim, w.as_slice()).unwrap()
}

/// `Σ_i x_1…x_{i−1} f(x_i)(x_{i+1}…x_n ⧢ w)`
pub fn tvf_closed_form(f: &LinMap, u: &Word, w: &Word) -> LinComb<Word> {
    let x = u.as_slice();
    let mut out = LinComb::zero();
    for i in 0..x.len() {
        let sh = shuffle_words(&x[i + 1..], w.as_slice());
        for (img, c) in f.apply(x[i]).unwrap().iter() {
            let mut prefix = x[..i].to_vec();
            prefix.extend_from_slice(img.as_slice());
            for (tail, d) in sh.iter() {
                let mut word = prefix.clone();
                word.extend_from_slice(tail.as_slice());
                out.add_term(Word::new(word), c * d);
            }
        }
    }
    out
}

/// `Σ_{i<n} λ^i f(x_1)f(y_1)…f(y_i) x_2…x_m ⧢ y_{i+1}…y_n`
pub fn tvfl_double_sum(f: &LinForm, lambda: &Rational, u: &Word, v: &Word) -> LinComb<Word> {
    let (x, y) = (u.as_slice(), v.as_slice());
    let mut out = LinComb::zero();
    let Some(&x1) = x.first() else {
        return out;
    };
    for i in 0..y.len() {
        let c = y[..i]
            .iter()
            .fold(f.apply(x1).unwrap(), |acc, &yj| acc * lambda * f.apply(yj).unwrap());
        out.add_scaled(&shuffle_words(&x[1..], &y[i..]), &c);
    }
    out
}

pub fn deconcat_pairs(w: &LinComb<Word>) -> LinComb<(Word, Word)> {
    let mut out = LinComb::zero();
    for (u, c) in w.iter() {
        for i in 0..=u.len() {
            out.add_term(u.split_at(i), c.clone());
        }
    }
    out
}

pub fn map_left(t: &LinComb<(Word, Word)>, g: impl Fn(&Word) -> LinComb<Word>) -> LinComb<(Word, Word)> {
    let mut out = LinComb::zero();
    for ((l, r), c) in t.iter() {
        for (gl, d) in g(l).iter() {
            out.add_term((gl.clone(), r.clone()), c * d);
        }
    }
    out
}

/// First pair of words of total degree ≤ `cap` where `∂(u⧢v) ≠ ∂u⧢v + u⧢∂v`.
pub fn partial_derivation_mismatch(f: &LinForm, dim: usize, cap: usize) -> Option<(Word, Word)> {
    let d = |e: &Elem| tvfl_partial(f, e).unwrap();
    for u in words_upto(dim, cap) {
        for v in words_upto(dim, cap - u.len()) {
            let (a, b) = (el(dim, &u), el(dim, &v));
            let lhs = d(&shuffle(&a, &b).unwrap());
            let rhs = shuffle(&d(&a), &b)
                .unwrap()
                .checked_add(&shuffle(&a, &d(&b)).unwrap())
                .unwrap();
            if lhs != rhs {
                return Some((u, v));
            }
        }
    }
    None
}

/// First pair where `∂φ(u)⧢φ(v) − φ(∂u⧢φ(v))` is not symmetric.
pub fn phi_symmetry_mismatch(f: &LinForm, lambda: &Rational, dim: usize, cap: usize) -> Option<(Word, Word)> {
    let d = |e: &Elem| tvfl_partial(f, e).unwrap();
    let phi = |e: &Elem| tvfl_phi(f, lambda, e).unwrap();
    let expr = |u: &Elem, v: &Elem| {
        let a = shuffle(&d(&phi(u)), &phi(v)).unwrap();
        a.checked_sub(&phi(&shuffle(&d(u), &phi(v)).unwrap())).unwrap()
    };
    for u in words_upto(dim, cap) {
        for v in words_upto(dim, cap - u.len()) {
            let (a, b) = (el(dim, &u), el(dim, &v));
            if expr(&a, &b) != expr(&b, &a) {
                return Some((u, v));
            }
        }
    }
    None
}

/// First word where `Δ∂ = (∂⊗id)Δ` or `Δφ = (φ⊗id)Δ + 1⊗φ` fails.
pub fn coproduct_identity_mismatch(f: &LinForm, lambda: &Rational, dim: usize, cap: usize) -> Option<Word> {
    let d = |w: &Word| tvfl_partial(f, &el(dim, w)).unwrap().lin().clone();
    let phi = |w: &Word| tvfl_phi(f, lambda, &el(dim, w)).unwrap().lin().clone();
    words_upto(dim, cap).into_iter().find(|u| {
        let du = deconcat_pairs(&LinComb::basis(u.clone()));
        let mut rhs = map_left(&du, phi);
        for (w, c) in phi(u).iter() {
            rhs.add_term((Word::empty(), w.clone()), c.clone());
        }
        deconcat_pairs(&d(u)) != map_left(&du, d) || deconcat_pairs(&phi(u)) != rhs
    })
}

/// First `(m, n)` with `m + n ≤ cap` where the closed form disagrees with
/// `T(V,f,λ)` on one letter.
pub fn closed_form_mismatch(nu: &Rational, lambda: &Rational, cap: usize) -> Option<(usize, usize)> {
    let f = LinForm::new(vec![nu.clone()]).unwrap();
    let mu = lambda * nu;
    for m in 0..=cap {
        for n in 0..=cap - m {
            let p = tvfl_product(&f, lambda, &el(1, &Word::new(vec![0; m])), &el(1, &Word::new(vec![0; n])))
                .unwrap();
            let as_poly: LinComb<Power> = p.iter().map(|(w, c)| (Power(w.len()), c.clone())).collect();
            if as_poly != lemma8_closed_form(nu, &mu, m, n) {
                return Some((m, n));
            }
        }
    }
    None
}

/// The image of `S(V)` in `coS(V)`.
pub fn theta(dim: usize, s: &SElem) -> Elem {
    s.lin().iter().fold(Elem::zero(dim), |acc, (m, c)| {
        acc.checked_add(&symmetrize(dim, m.as_slice()).unwrap().scale(c)).unwrap()
    })
}
