use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// North-up, axis-aligned mapping between world coordinates and pixels.
///
/// `origin_*` is the world position of the raster's top-left corner; rows
/// grow southwards, so world `y` decreases as `row` increases.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeoTransform {
    pub origin_x: f64,
    pub origin_y: f64,
    pub pixel_width: f64,
    pub pixel_height: f64,
}

impl GeoTransform {
    pub fn new(origin_x: f64, origin_y: f64, pixel_width: f64, pixel_height: f64) -> Result<Self> {
        let gt = Self {
            origin_x,
            origin_y,
            pixel_width,
            pixel_height,
        };
        gt.validate()?;
        Ok(gt)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.origin_x.is_finite() && self.origin_y.is_finite()) {
            return Err(Error::invalid("geotransform origin must be finite"));
        }
        if !(self.pixel_width > 0.0 && self.pixel_width.is_finite())
            || !(self.pixel_height > 0.0 && self.pixel_height.is_finite())
        {
            return Err(Error::invalid(format!(
                "pixel size must be positive, got {} x {}",
                self.pixel_width, self.pixel_height
            )));
        }
        Ok(())
    }

    /// Pixel `(col, row)` containing world point `(x, y)`. May be negative or
    /// past the raster edge; callers check bounds.
    pub fn world_to_pixel(&self, x: f64, y: f64) -> (i64, i64) {
        let col = ((x - self.origin_x) / self.pixel_width).floor();
        let row = ((self.origin_y - y) / self.pixel_height).floor();
        (col as i64, row as i64)
    }

    /// World coordinates of the center of pixel `(col, row)`.
    pub fn pixel_to_world(&self, col: i64, row: i64) -> (f64, f64) {
        (
            self.origin_x + (col as f64 + 0.5) * self.pixel_width,
            self.origin_y - (row as f64 + 0.5) * self.pixel_height,
        )
    }
}
