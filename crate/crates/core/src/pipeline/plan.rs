use crate::error::{Error, Result};
use crate::rng::{mix_words, SeededRng};

// Keeps permutation seeds apart from per-sample augmentation seeds.
const PLAN_STREAM: u64 = 0x504c_414e_5045_524d;

/// The `cycle`-th shuffled permutation of `0..len` for `master_seed`.
pub fn cycle_permutation(len: usize, master_seed: u64, cycle: u64) -> Vec<usize> {
    let mut ids: Vec<usize> = (0..len).collect();
    SeededRng::new(mix_words(&[master_seed, PLAN_STREAM, cycle])).shuffle(&mut ids);
    ids
}

/// Sample ids drawn during one epoch.
///
/// The run draws from one endless stream made of successive shuffled
/// permutations of `0..dataset_len`; epoch `e` takes positions
/// `[e * n, (e + 1) * n)` with `n = batches_per_epoch * batch_size`. Every
/// sample is therefore used once per permutation, and usage counts over any
/// prefix of the run differ by at most one.
pub fn epoch_plan(
    dataset_len: usize,
    batches_per_epoch: usize,
    batch_size: usize,
    master_seed: u64,
    epoch: u64,
) -> Result<Vec<usize>> {
    if dataset_len == 0 {
        return Err(Error::invalid("cannot plan over an empty dataset"));
    }
    if batches_per_epoch == 0 || batch_size == 0 {
        return Err(Error::invalid(format!(
            "batches per epoch ({batches_per_epoch}) and batch size ({batch_size}) must be >= 1"
        )));
    }
    let draws = batches_per_epoch
        .checked_mul(batch_size)
        .ok_or_else(|| Error::invalid("epoch size overflows"))?;
    let start = (draws as u128) * (epoch as u128);
    let len = dataset_len as u128;
    let mut cycle = u64::try_from(start / len).map_err(|_| Error::invalid("epoch index too large"))?;
    let mut offset = (start % len) as usize;

    let mut plan = Vec::with_capacity(draws);
    while plan.len() < draws {
        let perm = cycle_permutation(dataset_len, master_seed, cycle);
        let take = (draws - plan.len()).min(dataset_len - offset);
        plan.extend_from_slice(&perm[offset..offset + take]);
        offset = 0;
        cycle += 1;
    }
    Ok(plan)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_sample_repeats() {
        assert_eq!(epoch_plan(1, 1, 4, 0, 0).unwrap(), [0, 0, 0, 0]);
    }

    #[test]
    fn deterministic() {
        assert_eq!(epoch_plan(50, 3, 7, 9, 2).unwrap(), epoch_plan(50, 3, 7, 9, 2).unwrap());
        assert_ne!(epoch_plan(50, 3, 7, 9, 2).unwrap(), epoch_plan(50, 3, 7, 10, 2).unwrap());
    }

    #[test]
    fn epochs_continue_the_stream() {
        let whole = epoch_plan(13, 1, 40, 5, 0).unwrap();
        let mut pieces = Vec::new();
        for e in 0..4 {
            pieces.extend(epoch_plan(13, 1, 10, 5, e).unwrap());
        }
        assert_eq!(whole, pieces);
    }

    #[test]
    fn balanced_usage() {
        let n = 37;
        let mut counts = vec![0u32; n];
        for e in 0..6 {
            for id in epoch_plan(n, 5, 9, 1, e).unwrap() {
                counts[id] += 1;
            }
            let lo = counts.iter().min().unwrap();
            let hi = counts.iter().max().unwrap();
            assert!(hi - lo <= 1, "epoch {e}: {counts:?}");
        }
    }

    #[test]
    fn zero_sizes_rejected() {
        assert!(epoch_plan(10, 0, 4, 0, 0).is_err());
        assert!(epoch_plan(10, 4, 0, 0, 0).is_err());
        assert!(epoch_plan(0, 4, 4, 0, 0).is_err());
    }
}
