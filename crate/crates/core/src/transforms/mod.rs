//! Label-preserving augmentations for N-channel images.
//!
//! [`augment`] applies, in order: the two flips, one fused affine warp
//! (rotation, shear, zoom and translation about the image center, resampled
//! once), and multiplicative speckle noise.

mod affine;
mod config;
mod flip;
mod noise;
mod warp;

pub use affine::{make_affine, AffineMatrix};
pub use config::{sample_params, AugmentConfig, AugmentParams};
pub use flip::{flip_h, flip_v};
pub use noise::speckle;
pub use warp::warp_affine;

use crate::error::Result;
use crate::image::{HyperImage, LabeledSample};
use crate::rng::mix_words;

// Separates the noise stream from the parameter stream of the same seed.
const SPECKLE_STREAM: u64 = 0x5350_4543_4b4c_4531;

/// Seed used for the speckle pass of [`augment`] under `seed`.
pub fn speckle_seed(seed: u64) -> u64 {
    mix_words(&[seed, SPECKLE_STREAM])
}

/// Applies one concrete parameter set.
pub fn apply_params(img: &HyperImage, params: &AugmentParams, noise_seed: u64) -> Result<HyperImage> {
    let mut out = match (params.flip_h, params.flip_v) {
        (false, false) => img.clone(),
        (true, false) => flip_h(img),
        (false, true) => flip_v(img),
        (true, true) => flip_v(&flip_h(img)),
    };
    let m = make_affine(params, out.width(), out.height())?;
    if !m.is_identity() {
        out = warp_affine(&out, &m);
    }
    if params.speckle_variance > 0.0 {
        out = speckle(&out, params.speckle_variance, noise_seed)?;
    }
    Ok(out)
}

/// Augments an image with parameters drawn from `config` under `seed`.
pub fn augment_image(img: &HyperImage, config: &AugmentConfig, seed: u64) -> Result<HyperImage> {
    let params = sample_params(config, img.width(), img.height(), seed)?;
    apply_params(img, &params, speckle_seed(seed))
}

/// Augments a labeled sample. The label is carried through unchanged.
pub fn augment(sample: &LabeledSample, config: &AugmentConfig, seed: u64) -> Result<LabeledSample> {
    Ok(LabeledSample {
        image: augment_image(&sample.image, config, seed)?,
        label_index: sample.label_index,
    })
}
