//! Exact computer algebra for Com-PreLie and Zinbiel-PreLie (bi)algebras.
//!
//! The crate builds the shuffle bialgebra `T(V)` and its preLie products,
//! the symmetric algebra `S(V,f,λ)`, the graded families on `K[X]`, and a
//! law checker that verifies every axiom exhaustively up to a degree cap.

pub mod error;
pub mod law;
pub mod lie_view;
pub mod lincomb;
pub mod linear;
pub mod polyx;
pub mod prelie;
pub mod scalar;
pub mod shuffle;
pub mod structures;
pub mod word;

pub use error::{AlgebraError, Result};
pub use lincomb::{Basis, LinComb, Pair, Tensor};
pub use linear::{LinForm, LinMap, PreLieConsts};
pub use scalar::Rational;
pub use word::{BialgebraContext, Elem, Tensor2, Word};

// The guide's snippets run as doc tests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/shuffle.md")]
    pub struct Shuffle;
    #[doc = include_str!("../../../book/src/prelie.md")]
    pub struct PreLie;
    #[doc = include_str!("../../../book/src/polyx.md")]
    pub struct Polyx;
    #[doc = include_str!("../../../book/src/laws.md")]
    pub struct Laws;
    #[doc = include_str!("../../../book/src/lie.md")]
    pub struct Lie;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
    #[doc = include_str!("../../../README.md")]
    pub struct Readme;
}
