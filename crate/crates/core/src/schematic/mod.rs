//! Schematic examples: union-free regular expressions over Boolean letter predicates.

pub mod expr;
pub mod fit;

pub use expr::{translate_schematic, BoolExpr, SchematicExpr};
pub use fit::{characterize_schematic, schematic_fit, schematic_fit_bounded, SchematicFit, DEFAULT_INSTANCE_LEN};
