//! Point-driven patch extraction from geo-referenced rasters.
//!
//! Shapefile points are mapped to raster pixels through an axis-aligned
//! geotransform and a fixed-size patch is cropped around each one. Point
//! coordinates are assumed to be in the raster's coordinate reference
//! system; nothing here reprojects.

mod extract;
mod geotransform;
mod raster;
mod shapefile;

pub use extract::{
    attach_labels, extract_all, extract_patch, patch_file_name, read_labels_csv, window_start,
    BorderPolicy, ExtractReport, Extracted,
};
pub use geotransform::GeoTransform;
pub use raster::{BandDirRaster, MemoryRaster, RasterSidecar, RasterSource};
pub use shapefile::{
    parse_shapefile_points, write_point_shapefile, PointRecord, SHAPE_POINT, SHAPE_POINT_Z,
};

use std::path::Path;

use crate::error::{Error, Result};

/// Reads and parses a `.shp` main file.
pub fn read_shapefile_points(path: impl AsRef<Path>) -> Result<Vec<PointRecord>> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    Ok(parse_shapefile_points(&bytes)?)
}
