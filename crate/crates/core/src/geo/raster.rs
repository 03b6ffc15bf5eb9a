use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hsb;
use crate::image::HyperImage;

use super::GeoTransform;

/// A geo-referenced raster that can be read by pixel window.
///
/// Implementations must tolerate concurrent reads and return identical data
/// for repeated reads of one window.
pub trait RasterSource: Sync {
    fn height(&self) -> usize;
    fn width(&self) -> usize;
    fn channels(&self) -> usize;
    fn geotransform(&self) -> GeoTransform;

    /// Reads rows `[row, row + height)` and columns `[col, col + width)`.
    /// The window must lie inside the raster.
    fn read_window(&self, row: usize, col: usize, height: usize, width: usize) -> Result<HyperImage>;
}

/// Raster held fully in memory.
#[derive(Debug, Clone)]
pub struct MemoryRaster {
    image: HyperImage,
    geotransform: GeoTransform,
}

impl MemoryRaster {
    pub fn new(image: HyperImage, geotransform: GeoTransform) -> Result<Self> {
        geotransform.validate()?;
        Ok(Self {
            image,
            geotransform,
        })
    }

    pub fn image(&self) -> &HyperImage {
        &self.image
    }
}

impl RasterSource for MemoryRaster {
    fn height(&self) -> usize {
        self.image.height()
    }

    fn width(&self) -> usize {
        self.image.width()
    }

    fn channels(&self) -> usize {
        self.image.channels()
    }

    fn geotransform(&self) -> GeoTransform {
        self.geotransform
    }

    fn read_window(&self, row: usize, col: usize, height: usize, width: usize) -> Result<HyperImage> {
        let (h, w, c) = self.image.shape();
        let fits = height >= 1
            && width >= 1
            && row.checked_add(height).is_some_and(|end| end <= h)
            && col.checked_add(width).is_some_and(|end| end <= w);
        if !fits {
            return Err(Error::invalid(format!(
                "window rows {row}+{height}, cols {col}+{width} is outside the {h}x{w} raster"
            )));
        }
        let src = self.image.data();
        let mut data = Vec::with_capacity(height * width * c);
        for r in row..row + height {
            let start = (r * w + col) * c;
            data.extend_from_slice(&src[start..start + width * c]);
        }
        HyperImage::from_vec(height, width, c, data)
    }
}

/// JSON sidecar describing a raster stored as one file per band.
///
/// ```json
/// {"origin_x": 300000.0, "origin_y": 5000000.0, "pixel_width": 10.0,
///  "pixel_height": 10.0, "bands": ["B01.hsb", "B02.hsb"]}
/// ```
///
/// Band paths are relative to the sidecar's directory and listed in channel
/// order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RasterSidecar {
    pub origin_x: f64,
    pub origin_y: f64,
    pub pixel_width: f64,
    pub pixel_height: f64,
    pub bands: Vec<String>,
}

impl RasterSidecar {
    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        serde_json::from_str(&text).map_err(|e| Error::Format {
            path: path.to_path_buf(),
            reason: e.to_string(),
        })
    }

    pub fn geotransform(&self) -> Result<GeoTransform> {
        GeoTransform::new(self.origin_x, self.origin_y, self.pixel_width, self.pixel_height)
    }
}

/// Raster assembled from per-band files listed in a [`RasterSidecar`].
///
/// Bands are decoded once on open and held in memory.
#[derive(Debug, Clone)]
pub struct BandDirRaster {
    sidecar_path: PathBuf,
    raster: MemoryRaster,
}

impl BandDirRaster {
    /// Opens a sidecar whose bands are single-channel HSB files.
    pub fn open(sidecar: impl AsRef<Path>) -> Result<Self> {
        Self::open_with(sidecar, |path| hsb::read(path))
    }

    /// Opens a sidecar, decoding each band file with `decode`.
    ///
    /// This is the hook for formats the crate does not read itself (for
    /// instance JPEG 2000 tiles turned into samples by an external tool).
    /// Each decoded band must be single-channel and all bands must agree in
    /// size.
    pub fn open_with<F>(sidecar: impl AsRef<Path>, decode: F) -> Result<Self>
    where
        F: Fn(&Path) -> Result<HyperImage>,
    {
        let sidecar_path = sidecar.as_ref().to_path_buf();
        let meta = RasterSidecar::read(&sidecar_path)?;
        let gt = meta.geotransform()?;
        if meta.bands.is_empty() {
            return Err(Error::invalid(format!(
                "{} lists no bands",
                sidecar_path.display()
            )));
        }
        let base = sidecar_path.parent().unwrap_or(Path::new(""));
        let bands = meta
            .bands
            .iter()
            .map(|name| decode(&base.join(name)))
            .collect::<Result<Vec<_>>>()?;
        let image = HyperImage::from_bands(&bands)?;
        Ok(Self {
            sidecar_path,
            raster: MemoryRaster::new(image, gt)?,
        })
    }

    pub fn sidecar_path(&self) -> &Path {
        &self.sidecar_path
    }
}

impl RasterSource for BandDirRaster {
    fn height(&self) -> usize {
        self.raster.height()
    }

    fn width(&self) -> usize {
        self.raster.width()
    }

    fn channels(&self) -> usize {
        self.raster.channels()
    }

    fn geotransform(&self) -> GeoTransform {
        self.raster.geotransform()
    }

    fn read_window(&self, row: usize, col: usize, height: usize, width: usize) -> Result<HyperImage> {
        self.raster.read_window(row, col, height, width)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ramp(h: usize, w: usize, c: usize) -> HyperImage {
        HyperImage::from_fn(h, w, c, |r, col, k| (r * w + col) as f32 + 1000.0 * k as f32).unwrap()
    }

    #[test]
    fn full_window_is_whole_raster() {
        let img = ramp(5, 7, 2);
        let src = MemoryRaster::new(img.clone(), GeoTransform::new(0.0, 0.0, 1.0, 1.0).unwrap()).unwrap();
        assert_eq!(src.read_window(0, 0, 5, 7).unwrap(), img);
        let a = src.read_window(1, 2, 3, 4).unwrap();
        assert_eq!(a, src.read_window(1, 2, 3, 4).unwrap());
        assert_eq!(a.get(0, 0, 1), 1000.0 + 9.0);
        assert!(src.read_window(3, 0, 3, 1).is_err());
        assert!(src.read_window(0, 0, 0, 1).is_err());
    }

    #[test]
    fn sidecar_with_hsb_bands() {
        let dir = tempfile::tempdir().unwrap();
        let img = ramp(4, 6, 3);
        let mut names = Vec::new();
        for (k, band) in img.to_bands().iter().enumerate() {
            let name = format!("B{k:02}.hsb");
            hsb::write(dir.path().join("bands").join(&name), band).unwrap();
            names.push(format!("bands/{name}"));
        }
        let sidecar = RasterSidecar {
            origin_x: 10.0,
            origin_y: 20.0,
            pixel_width: 2.0,
            pixel_height: 2.0,
            bands: names,
        };
        let path = dir.path().join("scene.json");
        fs::write(&path, serde_json::to_string(&sidecar).unwrap()).unwrap();
        let raster = BandDirRaster::open(&path).unwrap();
        assert_eq!((raster.height(), raster.width(), raster.channels()), (4, 6, 3));
        assert_eq!(raster.read_window(0, 0, 4, 6).unwrap(), img);
        assert_eq!(raster.geotransform(), sidecar.geotransform().unwrap());

        let seen = std::sync::Mutex::new(Vec::new());
        let hooked = BandDirRaster::open_with(&path, |p| {
            seen.lock().unwrap().push(p.to_path_buf());
            hsb::read(p)
        })
        .unwrap();
        assert_eq!(hooked.read_window(0, 0, 4, 6).unwrap(), img);
        assert_eq!(seen.into_inner().unwrap().len(), 3);
    }

    #[test]
    fn sidecar_errors() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.json");
        fs::write(&path, "{\"origin_x\": 0}").unwrap();
        assert!(matches!(BandDirRaster::open(&path), Err(Error::Format { .. })));
        fs::write(
            &path,
            r#"{"origin_x":0,"origin_y":0,"pixel_width":1,"pixel_height":1,"bands":["missing.hsb"]}"#,
        )
        .unwrap();
        assert!(matches!(BandDirRaster::open(&path), Err(Error::Io { .. })));
    }
}
