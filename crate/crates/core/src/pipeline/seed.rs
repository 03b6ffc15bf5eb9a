use serde::{Deserialize, Serialize};

use crate::rng::mix_words;

/// Coordinates that fully determine the randomness of one batch slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeedRecipe {
    pub master_seed: u64,
    pub epoch: u64,
    pub batch: u64,
    pub sample_slot: u64,
}

impl SeedRecipe {
    pub fn new(master_seed: u64, epoch: u64, batch: u64, sample_slot: u64) -> Self {
        Self {
            master_seed,
            epoch,
            batch,
            sample_slot,
        }
    }
}

/// Per-sample augmentation seed.
///
/// Frozen definition: starting from `h = 0`, fold in `master_seed`, `epoch`,
/// `batch` and `sample_slot` in that order with `h = splitmix64(h ^ word)`,
/// where `splitmix64` is the SplitMix64 output function including its
/// golden-ratio increment. See [`crate::rng::mix64`].
pub fn derive_seed(recipe: &SeedRecipe) -> u64 {
    mix_words(&[
        recipe.master_seed,
        recipe.epoch,
        recipe.batch,
        recipe.sample_slot,
    ])
}
