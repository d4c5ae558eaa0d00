//! The guide's chapters as doc-tests, so every snippet in `book/` runs
//! under `cargo test`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/clique-regular.md")]
pub mod clique_regular {}
#[doc = include_str!("../../../book/src/transforms.md")]
pub mod transforms {}
#[doc = include_str!("../../../book/src/spectra.md")]
pub mod spectra {}
#[doc = include_str!("../../../book/src/locally-linear.md")]
pub mod locally_linear {}
#[doc = include_str!("../../../book/src/critical-groups.md")]
pub mod critical_groups {}
#[doc = include_str!("../../../book/src/families.md")]
pub mod families {}
#[doc = include_str!("../../../book/src/command-line.md")]
pub mod command_line {}
