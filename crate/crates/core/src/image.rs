//! Dense N-channel raster used as the unit of augmentation.

use crate::error::{Error, Result};

/// An `height × width × channels` raster of `f32` samples.
///
/// Storage is row-major and channel-last: sample `(row, col, k)` lives at
/// `(row * width + col) * channels + k`, so the spectrum of one site is a
/// contiguous slice.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperImage {
    height: usize,
    width: usize,
    channels: usize,
    data: Vec<f32>,
}

impl HyperImage {
    /// Creates an image of the given shape with every sample set to `fill`.
    pub fn new(height: usize, width: usize, channels: usize, fill: f32) -> Result<Self> {
        check_dims(height, width, channels)?;
        Ok(Self {
            height,
            width,
            channels,
            data: vec![fill; height * width * channels],
        })
    }

    /// Wraps an existing buffer laid out row-major, channel-last.
    pub fn from_vec(height: usize, width: usize, channels: usize, data: Vec<f32>) -> Result<Self> {
        check_dims(height, width, channels)?;
        let expected = height * width * channels;
        if data.len() != expected {
            return Err(Error::ShapeMismatch(format!(
                "{height}x{width}x{channels} image needs {expected} samples, got {}",
                data.len()
            )));
        }
        Ok(Self {
            height,
            width,
            channels,
            data,
        })
    }

    /// Builds an image by evaluating `f(row, col, channel)` at every sample.
    pub fn from_fn(
        height: usize,
        width: usize,
        channels: usize,
        mut f: impl FnMut(usize, usize, usize) -> f32,
    ) -> Result<Self> {
        check_dims(height, width, channels)?;
        let mut data = Vec::with_capacity(height * width * channels);
        for r in 0..height {
            for c in 0..width {
                for k in 0..channels {
                    data.push(f(r, c, k));
                }
            }
        }
        Ok(Self {
            height,
            width,
            channels,
            data,
        })
    }

    /// Stacks single-channel bands into one image; band `k` becomes channel `k`.
    pub fn from_bands(bands: &[HyperImage]) -> Result<Self> {
        let first = bands
            .first()
            .ok_or_else(|| Error::invalid("cannot stack an empty list of bands"))?;
        let (height, width) = (first.height, first.width);
        for (k, band) in bands.iter().enumerate() {
            if band.channels != 1 {
                return Err(Error::ShapeMismatch(format!(
                    "band {k} has {} channels, expected 1",
                    band.channels
                )));
            }
            if band.height != height || band.width != width {
                return Err(Error::ShapeMismatch(format!(
                    "band {k} is {}x{}, band 0 is {height}x{width}",
                    band.height, band.width
                )));
            }
        }
        let channels = bands.len();
        let mut data = Vec::with_capacity(height * width * channels);
        for site in 0..height * width {
            data.extend(bands.iter().map(|b| b.data[site]));
        }
        Ok(Self {
            height,
            width,
            channels,
            data,
        })
    }

    /// Splits the image into `channels` single-channel images.
    pub fn to_bands(&self) -> Vec<HyperImage> {
        (0..self.channels)
            .map(|k| HyperImage {
                height: self.height,
                width: self.width,
                channels: 1,
                data: self.data.iter().skip(k).step_by(self.channels).copied().collect(),
            })
            .collect()
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    /// `(height, width, channels)`.
    pub fn shape(&self) -> (usize, usize, usize) {
        (self.height, self.width, self.channels)
    }

    pub fn same_shape(&self, other: &HyperImage) -> bool {
        self.shape() == other.shape()
    }

    pub fn data(&self) -> &[f32] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f32] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<f32> {
        self.data
    }

    #[inline]
    pub fn index(&self, row: usize, col: usize, channel: usize) -> usize {
        debug_assert!(row < self.height && col < self.width && channel < self.channels);
        (row * self.width + col) * self.channels + channel
    }

    /// Reads sample `(row, col, channel)`. Panics when out of range.
    #[inline]
    pub fn get(&self, row: usize, col: usize, channel: usize) -> f32 {
        self.data[self.index(row, col, channel)]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, channel: usize, value: f32) {
        let i = self.index(row, col, channel);
        self.data[i] = value;
    }

    /// The contiguous spectrum at one site.
    #[inline]
    pub fn pixel(&self, row: usize, col: usize) -> &[f32] {
        let start = (row * self.width + col) * self.channels;
        &self.data[start..start + self.channels]
    }

    #[inline]
    pub fn pixel_mut(&mut self, row: usize, col: usize) -> &mut [f32] {
        let start = (row * self.width + col) * self.channels;
        &mut self.data[start..start + self.channels]
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// `(min, max)` over every sample.
    pub fn value_range(&self) -> (f32, f32) {
        self.data
            .iter()
            .fold((f32::INFINITY, f32::NEG_INFINITY), |(lo, hi), &v| {
                (lo.min(v), hi.max(v))
            })
    }
}

fn check_dims(height: usize, width: usize, channels: usize) -> Result<()> {
    if height == 0 || width == 0 || channels == 0 {
        return Err(Error::invalid(format!(
            "image dimensions must be at least 1, got {height}x{width}x{channels}"
        )));
    }
    Ok(())
}

/// An image paired with its class index.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledSample {
    pub image: HyperImage,
    pub label_index: usize,
}

impl LabeledSample {
    pub fn new(image: HyperImage, label_index: usize) -> Self {
        Self { image, label_index }
    }
}
