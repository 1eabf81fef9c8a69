//! The guide chapters, embedded so that every fenced code sample in the book
//! compiles and runs under `cargo test --doc`. The rendered book lives in
//! `book/` at the workspace root (`mdbook build book`).

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/hypergraphs.md")]
pub mod hypergraphs {}

#[doc = include_str!("../../../book/src/signless-laplacian.md")]
pub mod signless_laplacian {}

#[doc = include_str!("../../../book/src/principal-eigenpair.md")]
pub mod principal_eigenpair {}

#[doc = include_str!("../../../book/src/irregularity.md")]
pub mod irregularity {}

#[doc = include_str!("../../../book/src/bound-catalog.md")]
pub mod bound_catalog {}

#[doc = include_str!("../../../book/src/generators.md")]
pub mod generators {}

#[doc = include_str!("../../../book/src/cli-and-formats.md")]
pub mod cli_and_formats {}
