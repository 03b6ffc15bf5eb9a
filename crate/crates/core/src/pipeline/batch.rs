use crate::error::{Error, Result};
use crate::hsb;
use crate::image::{HyperImage, LabeledSample};
use crate::transforms::{augment, AugmentConfig};

use super::{derive_seed, DatasetIndex, SeedRecipe};

/// One-hot encoding of `label_index` over `num_classes`.
pub fn one_hot(label_index: usize, num_classes: usize) -> Result<Vec<f32>> {
    if label_index >= num_classes {
        return Err(Error::invalid(format!(
            "label {label_index} is outside 0..{num_classes}"
        )));
    }
    let mut v = vec![0.0; num_classes];
    v[label_index] = 1.0;
    Ok(v)
}

/// A stack of equally shaped images with one-hot labels.
///
/// `images` is laid out `[batch, height, width, channels]` and `labels`
/// `[batch, num_classes]`, both row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Batch {
    pub batch_size: usize,
    pub height: usize,
    pub width: usize,
    pub channels: usize,
    pub num_classes: usize,
    pub images: Vec<f32>,
    pub labels: Vec<f32>,
    /// Dataset position of each slot.
    pub sample_ids: Vec<usize>,
}

impl Batch {
    /// Stacks samples; all images must share one shape.
    pub fn stack(samples: &[LabeledSample], sample_ids: Vec<usize>, num_classes: usize) -> Result<Self> {
        let first = samples
            .first()
            .ok_or_else(|| Error::invalid("a batch needs at least one sample"))?;
        let (height, width, channels) = first.image.shape();
        let mut images = Vec::with_capacity(samples.len() * first.image.data().len());
        let mut labels = Vec::with_capacity(samples.len() * num_classes);
        for (slot, s) in samples.iter().enumerate() {
            if !s.image.same_shape(&first.image) {
                return Err(Error::ShapeMismatch(format!(
                    "batch slot {slot} is {:?}, slot 0 is {:?}",
                    s.image.shape(),
                    first.image.shape()
                )));
            }
            images.extend_from_slice(s.image.data());
            labels.extend(one_hot(s.label_index, num_classes)?);
        }
        Ok(Self {
            batch_size: samples.len(),
            height,
            width,
            channels,
            num_classes,
            images,
            labels,
            sample_ids,
        })
    }

    pub fn image_len(&self) -> usize {
        self.height * self.width * self.channels
    }

    pub fn image(&self, slot: usize) -> HyperImage {
        let n = self.image_len();
        HyperImage::from_vec(
            self.height,
            self.width,
            self.channels,
            self.images[slot * n..(slot + 1) * n].to_vec(),
        )
        .expect("batch images are well formed")
    }

    pub fn label(&self, slot: usize) -> &[f32] {
        &self.labels[slot * self.num_classes..(slot + 1) * self.num_classes]
    }

    pub fn label_index(&self, slot: usize) -> usize {
        self.label(slot).iter().position(|&v| v == 1.0).expect("one-hot label")
    }

    /// All images as one `(batch * height) × width × channels` image, whose
    /// sample order equals `images`.
    pub fn images_stacked(&self) -> HyperImage {
        HyperImage::from_vec(
            self.batch_size * self.height,
            self.width,
            self.channels,
            self.images.clone(),
        )
        .expect("batch images are well formed")
    }
}

/// Loads, augments and stacks batch `batch` of `epoch`.
///
/// `plan` is the epoch's plan from [`super::epoch_plan`]; slot `s` uses
/// sample `plan[batch * batch_size + s]` augmented with the seed derived from
/// `(master_seed, epoch, batch, s)`. The result depends on nothing else, so
/// batches may be produced in any order on any number of threads.
pub fn next_batch(
    index: &DatasetIndex,
    plan: &[usize],
    batch: usize,
    batch_size: usize,
    config: &AugmentConfig,
    master_seed: u64,
    epoch: u64,
) -> Result<Batch> {
    if batch_size == 0 {
        return Err(Error::invalid("batch size must be >= 1"));
    }
    config.validate()?;
    let start = batch * batch_size;
    let ids = plan.get(start..start + batch_size).ok_or_else(|| {
        Error::invalid(format!(
            "plan of {} draws does not cover batch {batch} of size {batch_size}",
            plan.len()
        ))
    })?;
    let mut samples = Vec::with_capacity(batch_size);
    for (slot, &id) in ids.iter().enumerate() {
        let entry = index
            .samples()
            .get(id)
            .ok_or_else(|| Error::invalid(format!("plan refers to sample {id} of {}", index.len())))?;
        let image = hsb::read(&entry.path)?;
        let seed = derive_seed(&SeedRecipe::new(master_seed, epoch, batch as u64, slot as u64));
        samples.push(augment(&LabeledSample::new(image, entry.label_index), config, seed)?);
    }
    Batch::stack(&samples, ids.to_vec(), index.num_classes())
}
