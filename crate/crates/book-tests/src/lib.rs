//! Compiles every chapter of the guide as documentation so that
//! `cargo test --doc` runs its snippets.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/permutations.md")]
pub mod permutations {}
#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}
#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}
#[doc = include_str!("../../../book/src/operad.md")]
pub mod operad {}
#[doc = include_str!("../../../book/src/pva.md")]
pub mod pva {}
#[doc = include_str!("../../../book/src/hochschild.md")]
pub mod hochschild {}
#[doc = include_str!("../../../book/src/morphism.md")]
pub mod morphism {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
