//! Compiles the guide's Rust snippets as doc-tests.

#[doc = include_str!("../../../book/src/overview.md")]
pub mod overview {}

#[doc = include_str!("../../../book/src/scalars.md")]
pub mod scalars {}

#[doc = include_str!("../../../book/src/hopf.md")]
pub mod hopf {}

#[doc = include_str!("../../../book/src/twist.md")]
pub mod twist {}

#[doc = include_str!("../../../book/src/families.md")]
pub mod families {}

#[doc = include_str!("../../../book/src/galois.md")]
pub mod galois {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
