//! Doc-test shim for the guide in `book/`.
//!
//! Each chapter is attached as module documentation, so every ```rust code
//! block in the book compiles and runs under `cargo test`. If the guide
//! drifts from the library's behaviour, this crate fails the build.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/partitions.md")]
pub mod partitions {}

#[doc = include_str!("../../../book/src/tableaux.md")]
pub mod tableaux {}

#[doc = include_str!("../../../book/src/spectrum.md")]
pub mod spectrum {}

#[doc = include_str!("../../../book/src/bounds.md")]
pub mod bounds {}

#[doc = include_str!("../../../book/src/oracle.md")]
pub mod oracle {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
