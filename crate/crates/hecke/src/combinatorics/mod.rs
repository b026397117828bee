//! Partitions, permutations, parabolic coset machinery, tableaux, and the
//! explicit elements used by the verification suites.

mod parabolic;
mod partition;
mod permutation;
mod tableau;
mod words;

pub use parabolic::{
    is_min_left_coset_rep, longest_element, min_double_coset_reps, min_left_coset_reps,
    parabolic_elements, parabolic_generators,
};
pub use partition::{dominance_ge, dominance_gt, partitions_of, Partition};
pub use permutation::Permutation;
pub use tableau::{rsk, same_left_cell, Tableau};
pub use words::{hook_word, lemma1_cell_pair, lemma1_z, lemma4_data, Lemma4Data};
