//! Augmentation, batch generation and patch extraction for hyperspectral
//! image patches with any number of channels.
//!
//! - [`image`]: the [`HyperImage`] raster type.
//! - [`transforms`]: flips, fused affine warps with edge replication, and
//!   multiplicative speckle noise.
//! - [`pipeline`]: dataset indexing and seeded, order-independent batches.
//! - [`geo`]: shapefile points, geotransforms and patch cropping.
//! - [`hsb`]: the on-disk patch format.

pub mod error;
pub mod geo;
pub mod hsb;
pub mod image;
pub mod pipeline;
pub mod rng;
pub mod transforms;

pub use error::{Error, Result, ShapefileError};
pub use image::{HyperImage, LabeledSample};
pub use transforms::{augment, AugmentConfig, AugmentParams};
