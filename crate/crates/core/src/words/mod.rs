//! Transfinite words: ordinals, word expressions and homomorphic embeddings.

pub mod embed;
pub mod expr;
pub mod ordinal;

pub use embed::{embed_indices, embeds, embeds_flat, embeds_in, embeds_word, Embedding};
pub use expr::{complement_word, expr_length, unfold, Coord, FlatWord, Segment, WordExpr};
pub use ordinal::{ordinal_add, ordinal_cmp, Ordinal};
