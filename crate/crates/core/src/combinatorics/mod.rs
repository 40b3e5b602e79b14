//! Partitions, tableaux, dimensions, characters and Schur-Weyl
//! multiplicities, all in exact arithmetic.

mod character;
mod partition;
mod tableau;

pub use character::{character, class_size, normalized_transposition_character};
pub use partition::{
    branching_down, branching_up, dimension, partitions_of, removed_cell, Cell, Partition,
};
pub use tableau::{ssyt_count, standard_tableaux, StandardTableau};

pub(crate) use partition::factorial;
