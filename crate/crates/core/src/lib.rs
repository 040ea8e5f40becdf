//! Primitive elements of the rank-two free group and the combinatorics of
//! primitive disk complexes of genus two Heegaard splittings of lens spaces.
//!
//! - [`words`]: free reduction, cyclic words, involutions, `z ↦ xy`.
//! - [`primitivity`]: Whitehead descent, `w(m, n)`, subword obstructions.
//! - [`pqseq`]: lens parameters and `(p, q)`-sequences.
//! - [`replacement`]: power forms, L/R-replacements and the disconnection
//!   witness strip.
//! - [`structure`]: classification reports and the disk sequence model.
//! - [`sweep`]: batch checks over parameter ranges and random corpora, run
//!   in parallel when the `parallel` feature is enabled.

pub mod error;
pub mod pqseq;
pub mod primitivity;
pub mod record;
pub mod replacement;
pub mod structure;
pub mod sweep;
pub mod words;

pub use error::{ParamsError, PrimitivityError, RecordError, ReplacementError, WordError};
pub use pqseq::{LensParams, PqSequence};
pub use primitivity::{is_primitive, Obstruction, WhiteheadTrace};
pub use replacement::{FareyLabel, PowerForm, StripGraph};
pub use structure::StructureReport;
pub use words::{Alphabet, CyclicWord, Generator, Letter, Word};
