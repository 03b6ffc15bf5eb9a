//! Deterministic batch generation from a class-per-folder patch dataset.

mod batch;
mod index;
mod plan;
mod seed;

pub use batch::{next_batch, one_hot, Batch};
pub use index::{index_dataset, DatasetIndex, SampleEntry};
pub use plan::{cycle_permutation, epoch_plan};
pub use seed::{derive_seed, SeedRecipe};

use crate::error::Result;
use crate::transforms::AugmentConfig;

/// Sequential batch stream over epochs, for single-consumer training loops.
///
/// Yields exactly what [`next_batch`] yields for `(epoch, batch)` in order.
pub struct BatchStream {
    index: DatasetIndex,
    config: AugmentConfig,
    batch_size: usize,
    batches_per_epoch: usize,
    master_seed: u64,
    epoch: u64,
    batch: usize,
    plan: Vec<usize>,
}

impl BatchStream {
    pub fn new(
        index: DatasetIndex,
        config: AugmentConfig,
        batch_size: usize,
        batches_per_epoch: usize,
        master_seed: u64,
    ) -> Result<Self> {
        config.validate()?;
        let plan = epoch_plan(index.len(), batches_per_epoch, batch_size, master_seed, 0)?;
        Ok(Self {
            index,
            config,
            batch_size,
            batches_per_epoch,
            master_seed,
            epoch: 0,
            batch: 0,
            plan,
        })
    }

    pub fn index(&self) -> &DatasetIndex {
        &self.index
    }

    /// `(epoch, batch)` of the batch the next call returns.
    pub fn position(&self) -> (u64, usize) {
        (self.epoch, self.batch)
    }

    pub fn next_batch(&mut self) -> Result<Batch> {
        let out = next_batch(
            &self.index,
            &self.plan,
            self.batch,
            self.batch_size,
            &self.config,
            self.master_seed,
            self.epoch,
        )?;
        self.batch += 1;
        if self.batch == self.batches_per_epoch {
            self.batch = 0;
            self.epoch += 1;
            self.plan = epoch_plan(
                self.index.len(),
                self.batches_per_epoch,
                self.batch_size,
                self.master_seed,
                self.epoch,
            )?;
        }
        Ok(out)
    }
}

impl Iterator for BatchStream {
    type Item = Result<Batch>;

    fn next(&mut self) -> Option<Self::Item> {
        Some(BatchStream::next_batch(self))
    }
}
