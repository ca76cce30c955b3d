//! RSK-type correspondences on nonnegative integer matrices.
//!
//! Row insertion of the lexicographic biword gives a first row whose length
//! is the down-right last passage time. Column insertion, with the bump rule
//! and reading order described on [`column_insert_rsk`], gives a first row
//! whose length is the down-left last passage time on lower-triangular input.

mod biword;
mod insert;
mod subseq;
mod tableau;

pub use biword::{biword, Biword};
pub use insert::{column_insert_rsk, column_insert_word, row_insert_rsk, row_insert_word, ColumnReading};
pub use subseq::{lnds, lwds};
pub use tableau::Tableau;
