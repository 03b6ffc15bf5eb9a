use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::SeededRng;

/// Ranges from which each augmentation draws its parameters.
///
/// The all-disabled value ([`AugmentConfig::identity`]) leaves images
/// untouched.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AugmentConfig {
    pub flip_horizontal: bool,
    pub flip_vertical: bool,
    /// Rotation angle is drawn from `[-max_rotation, max_rotation]` degrees.
    pub max_rotation: f64,
    /// Per-axis shift as a fraction of the image width (x) or height (y).
    pub max_translation: f64,
    /// Scale factor is drawn from `[1 / max_zoom, max_zoom]`. Must be at least 1.
    pub max_zoom: f64,
    /// Horizontal shear coefficient (`x' = x + shear * y`) is drawn from
    /// `[-max_shear, max_shear]`.
    pub max_shear: f64,
    /// Variance of the zero-mean Gaussian in the multiplicative noise model.
    pub speckle_variance: f64,
}

impl AugmentConfig {
    pub const fn identity() -> Self {
        Self {
            flip_horizontal: false,
            flip_vertical: false,
            max_rotation: 0.0,
            max_translation: 0.0,
            max_zoom: 1.0,
            max_shear: 0.0,
            speckle_variance: 0.0,
        }
    }

    /// Every technique enabled at the ranges of the EuroSAT experiments:
    /// both flips, 90° rotation, 25 % translation, 1.5x zoom, 5 % shear and
    /// speckle variance 0.010.
    pub const fn standard() -> Self {
        Self {
            flip_horizontal: true,
            flip_vertical: true,
            max_rotation: 90.0,
            max_translation: 0.25,
            max_zoom: 1.5,
            max_shear: 0.05,
            speckle_variance: 0.010,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("max_rotation", self.max_rotation),
            ("max_translation", self.max_translation),
            ("max_zoom", self.max_zoom),
            ("max_shear", self.max_shear),
            ("speckle_variance", self.speckle_variance),
        ];
        for (name, value) in fields {
            if !value.is_finite() {
                return Err(Error::invalid(format!("{name} must be finite, got {value}")));
            }
            if value < 0.0 {
                return Err(Error::invalid(format!("{name} must be >= 0, got {value}")));
            }
        }
        if self.max_zoom < 1.0 {
            return Err(Error::invalid(format!(
                "max_zoom must be >= 1, got {}",
                self.max_zoom
            )));
        }
        Ok(())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }
}

impl Default for AugmentConfig {
    fn default() -> Self {
        Self::identity()
    }
}

/// One concrete draw of augmentation parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AugmentParams {
    pub flip_h: bool,
    pub flip_v: bool,
    /// Degrees, counter-clockwise as displayed.
    pub angle: f64,
    /// Pixels; positive moves content right.
    pub dx: f64,
    /// Pixels; positive moves content down.
    pub dy: f64,
    /// Greater than 1 magnifies.
    pub zoom: f64,
    pub shear: f64,
    pub speckle_variance: f64,
}

impl AugmentParams {
    pub const fn identity() -> Self {
        Self {
            flip_h: false,
            flip_v: false,
            angle: 0.0,
            dx: 0.0,
            dy: 0.0,
            zoom: 1.0,
            shear: 0.0,
            speckle_variance: 0.0,
        }
    }
}

impl Default for AugmentParams {
    fn default() -> Self {
        Self::identity()
    }
}

/// Draws one parameter set for a `width × height` image.
///
/// Draw order is fixed (flip_h, flip_v, angle, dx, dy, zoom, shear) and every
/// draw is consumed even for a disabled technique, so enabling one technique
/// never changes the values drawn for another.
pub fn sample_params(
    config: &AugmentConfig,
    width: usize,
    height: usize,
    seed: u64,
) -> Result<AugmentParams> {
    config.validate()?;
    let mut rng = SeededRng::new(seed);
    let flip_h = rng.coin() && config.flip_horizontal;
    let flip_v = rng.coin() && config.flip_vertical;
    let angle = rng.uniform(-config.max_rotation, config.max_rotation);
    let max_dx = config.max_translation * width as f64;
    let max_dy = config.max_translation * height as f64;
    let dx = rng.uniform(-max_dx, max_dx);
    let dy = rng.uniform(-max_dy, max_dy);
    let zoom = rng.uniform(1.0 / config.max_zoom, config.max_zoom);
    let shear = rng.uniform(-config.max_shear, config.max_shear);
    Ok(AugmentParams {
        flip_h,
        flip_v,
        angle,
        dx,
        dy,
        zoom,
        shear,
        speckle_variance: config.speckle_variance,
    })
}
