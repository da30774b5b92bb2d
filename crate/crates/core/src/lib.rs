//! Finite characterizations of LTL formulas by labeled examples.

pub mod characterization;
pub mod error;
pub mod logic;
pub mod schematic;
pub mod verification;
pub mod words;

pub use error::{Error, Result};
