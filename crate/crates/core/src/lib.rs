//! Turán numbers of edge blow-ups of trees.
//!
//! For a tree `T` and `p ≥ 3`, `T^{p+1}` replaces every edge of `T` with a
//! clique on `p + 1` vertices. This crate computes the invariants that
//! determine `ex(n, T^{p+1})` for large `n`, evaluates the closed forms,
//! builds the graphs realizing the lower bounds, and checks small
//! instances exhaustively.
//!
//! | module | contents |
//! |---|---|
//! | [`graph`] | the [`Graph`] type, canonical labeling, graph6/DOT/edge-list I/O |
//! | [`tree`] | bipartition, α, β, ν, independent covering number |
//! | [`blowup`] | the edge blow-up `H^{p+1}` |
//! | [`decomposition`] | vertex-split families and the forbidden apex family |
//! | [`formula`] | `t(n,p)`, `h`, `h'`, `g₁`, `g₂` and case classification |
//! | [`search`] | subgraph containment and exhaustive `ex(n, F)` |
//! | [`constructions`] | `H(n,p,q)`, `H'(n,p,q)` and the apex-embedded candidates |
//! | [`report`] | versioned JSON documents |
//!
//! ```
//! use turanlab::formula::predict;
//! use turanlab::Graph;
//!
//! let eval = predict(&Graph::double_broom(4, 2, 2)?, 3, 100, None)?;
//! assert_eq!(eval.value, 3398);
//! # Ok::<(), turanlab::Error>(())
//! ```
//!
//! A guide with one chapter per module lives in the repository's `book/`
//! directory; its snippets run as doc-tests of this crate.

pub mod blowup;
pub mod constructions;
pub mod decomposition;
pub mod error;
pub mod formula;
pub mod graph;
pub mod report;
pub mod search;
pub mod tree;

pub use error::{Error, Result};
pub use graph::Graph;

// Book chapters compiled as doc-tests so the guide cannot drift.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/trees.md")]
    mod trees {}
    #[doc = include_str!("../../../book/src/blowups.md")]
    mod blowups {}
    #[doc = include_str!("../../../book/src/decomposition.md")]
    mod decomposition {}
    #[doc = include_str!("../../../book/src/formulas.md")]
    mod formulas {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
