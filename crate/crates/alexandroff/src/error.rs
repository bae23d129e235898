use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TemplateError {
    #[error("invalid template: {0}")]
    InvalidTemplate(String),

    #[error("unknown preset `{0}` (expected X1..X7)")]
    UnknownPreset(String),

    #[error("template has an infinite block `{0}`")]
    HasInfiniteBlock(String),

    #[error(transparent)]
    Order(#[from] order_core::OrderError),
}
