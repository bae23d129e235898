//! Symbolic classification of an infinite-but-tame class of Alexandroff
//! spaces: finite block posets whose blocks are finite preorders or the
//! chain order types ω, ω*, ζ, η. A dense countable chain stands in for
//! the real line: the predicates only see order-type features (density,
//! missing endpoints), not cardinality.

pub mod bridge;
pub mod classify;
pub mod error;
pub mod rng;
pub mod template;

pub use bridge::{add_generic_bottom, embed_finite, truncate};
pub use classify::{classify_template, classify_template_report, TemplateReport};
pub use error::TemplateError;
pub use rng::{random_fin_template, SplitMix64};
pub use template::{preset, BlockType, ChainTemplate, Preset};
