use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hsb;
use crate::image::HyperImage;

use super::{PointRecord, RasterSource};

/// What to do when a patch window crosses the raster edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BorderPolicy {
    /// Drop the point.
    Skip,
    /// Fill the missing margin by repeating the nearest edge pixels.
    EdgePad,
}

/// Result of cropping one patch.
#[derive(Debug, Clone, PartialEq)]
pub enum Extracted {
    Patch(HyperImage),
    /// The window `[row, row + size) × [col, col + size)` left the raster
    /// under [`BorderPolicy::Skip`].
    Skipped { row: i64, col: i64, size: usize },
}

/// First row (or column) of a `size`-wide window centered on `center`.
///
/// Even sizes put the center pixel at the top-left of the central 2×2.
pub fn window_start(center: i64, size: usize) -> i64 {
    center - (size / 2) as i64
}

/// Crops a `size × size` patch centered on pixel `(center_col, center_row)`.
pub fn extract_patch(
    src: &dyn RasterSource,
    center_col: i64,
    center_row: i64,
    size: usize,
    policy: BorderPolicy,
) -> Result<Extracted> {
    if size == 0 {
        return Err(Error::invalid("patch size must be >= 1"));
    }
    let (h, w) = (src.height() as i64, src.width() as i64);
    let row0 = window_start(center_row, size);
    let col0 = window_start(center_col, size);
    let n = size as i64;
    let inside = row0 >= 0 && col0 >= 0 && row0 + n <= h && col0 + n <= w;
    if inside {
        return src
            .read_window(row0 as usize, col0 as usize, size, size)
            .map(Extracted::Patch);
    }
    match policy {
        BorderPolicy::Skip => Ok(Extracted::Skipped {
            row: row0,
            col: col0,
            size,
        }),
        BorderPolicy::EdgePad => {
            let clamp_row = |r: i64| r.clamp(0, h - 1);
            let clamp_col = |c: i64| c.clamp(0, w - 1);
            let (r_lo, r_hi) = (clamp_row(row0), clamp_row(row0 + n - 1));
            let (c_lo, c_hi) = (clamp_col(col0), clamp_col(col0 + n - 1));
            let core = src.read_window(
                r_lo as usize,
                c_lo as usize,
                (r_hi - r_lo + 1) as usize,
                (c_hi - c_lo + 1) as usize,
            )?;
            let channels = core.channels();
            let mut data = Vec::with_capacity(size * size * channels);
            for r in row0..row0 + n {
                let rr = (clamp_row(r) - r_lo) as usize;
                for c in col0..col0 + n {
                    let cc = (clamp_col(c) - c_lo) as usize;
                    data.extend_from_slice(core.pixel(rr, cc));
                }
            }
            HyperImage::from_vec(size, size, channels, data).map(Extracted::Patch)
        }
    }
}

/// Accounting for one [`extract_all`] run.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ExtractReport {
    pub written: usize,
    /// Record numbers of points with no patch written, ascending.
    pub skipped: Vec<u32>,
    /// Files written, in record-number order.
    pub files: Vec<PathBuf>,
}

/// File name of the patch for `record_number`.
pub fn patch_file_name(record_number: u32) -> String {
    format!("point_{record_number:06}.hsb")
}

fn label_dir(label: &str) -> String {
    let cleaned: String = label
        .trim()
        .chars()
        .map(|ch| if matches!(ch, '/' | '\\' | '\0') { '_' } else { ch })
        .collect();
    match cleaned.as_str() {
        "" | "." | ".." => "_".to_owned(),
        _ => cleaned,
    }
}

/// Extracts one patch per point and writes it under `out_dir`.
///
/// Points are mapped through the raster's geotransform (no reprojection:
/// coordinates must already be in the raster's CRS). Labeled points go to
/// `out_dir/<label>/`, unlabeled ones to `out_dir/`. Points whose window is
/// skipped or cannot be read are listed in the report; only output I/O
/// failures abort the run. Points are processed in parallel; the report does
/// not depend on scheduling.
pub fn extract_all(
    src: &dyn RasterSource,
    points: &[PointRecord],
    size: usize,
    policy: BorderPolicy,
    out_dir: impl AsRef<Path>,
) -> Result<ExtractReport> {
    if size == 0 {
        return Err(Error::invalid("patch size must be >= 1"));
    }
    let out_dir = out_dir.as_ref();
    fs::create_dir_all(out_dir).map_err(|e| Error::io(out_dir, e))?;
    let gt = src.geotransform();

    let outcomes = points
        .par_iter()
        .map(|p| -> Result<(u32, Option<PathBuf>)> {
            let (col, row) = gt.world_to_pixel(p.x, p.y);
            let patch = match extract_patch(src, col, row, size, policy) {
                Ok(Extracted::Patch(patch)) => patch,
                Ok(Extracted::Skipped { .. }) => return Ok((p.record_number, None)),
                Err(e) => {
                    log::warn!("point {}: {e}", p.record_number);
                    return Ok((p.record_number, None));
                }
            };
            let dir = match &p.label {
                Some(label) => out_dir.join(label_dir(label)),
                None => out_dir.to_path_buf(),
            };
            let path = dir.join(patch_file_name(p.record_number));
            hsb::write(&path, &patch)?;
            Ok((p.record_number, Some(path)))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut outcomes = outcomes;
    outcomes.sort_by_key(|(n, _)| *n);
    let mut report = ExtractReport::default();
    for (number, file) in outcomes {
        match file {
            Some(path) => {
                report.written += 1;
                report.files.push(path);
            }
            None => report.skipped.push(number),
        }
    }
    Ok(report)
}

/// Reads a `record,label` CSV into a record-number lookup.
pub fn read_labels_csv(path: impl AsRef<Path>) -> Result<HashMap<u32, String>> {
    let path = path.as_ref();
    let bad = |reason: String| Error::Format {
        path: path.to_path_buf(),
        reason,
    };
    let mut reader = csv::Reader::from_path(path).map_err(|e| bad(e.to_string()))?;
    let headers = reader.headers().map_err(|e| bad(e.to_string()))?.clone();
    if headers.len() < 2 || headers[0].trim() != "record" || headers[1].trim() != "label" {
        return Err(bad(format!("expected header `record,label`, got {headers:?}")));
    }
    let mut labels = HashMap::new();
    for row in reader.records() {
        let row = row.map_err(|e| bad(e.to_string()))?;
        let number: u32 = row[0]
            .trim()
            .parse()
            .map_err(|e| bad(format!("record `{}`: {e}", &row[0])))?;
        if labels.insert(number, row[1].trim().to_owned()).is_some() {
            return Err(bad(format!("record {number} labeled twice")));
        }
    }
    Ok(labels)
}

/// Sets each point's label from `labels`; points without an entry keep `None`.
pub fn attach_labels(points: &mut [PointRecord], labels: &HashMap<u32, String>) {
    for p in points {
        p.label = labels.get(&p.record_number).cloned();
    }
}
