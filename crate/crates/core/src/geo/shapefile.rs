//! Reader for point geometries in ESRI `.shp` main files.
//!
//! Header (100 bytes): file code 9994 (i32 BE) at 0, file length in 16-bit
//! words (i32 BE) at 24, version (i32 LE) at 28, shape type (i32 LE) at 32,
//! bounding box doubles after that. Each record is an 8-byte big-endian
//! header (record number, content length in words) followed by content whose
//! first field is the shape type (i32 LE). Point content is `x, y` as f64 LE;
//! PointZ content is `x, y, z[, m]`.

use crate::error::ShapefileError;

pub const FILE_CODE: i32 = 9994;
pub const HEADER_LEN: usize = 100;
pub const SHAPE_NULL: i32 = 0;
pub const SHAPE_POINT: i32 = 1;
pub const SHAPE_POINT_Z: i32 = 11;

/// One point read from a shapefile.
#[derive(Debug, Clone, PartialEq)]
pub struct PointRecord {
    /// 1-based record number as stored in the file.
    pub record_number: u32,
    pub x: f64,
    pub y: f64,
    /// Attached from a labels CSV, never from the `.shp` itself.
    pub label: Option<String>,
}

impl PointRecord {
    pub fn new(record_number: u32, x: f64, y: f64) -> Self {
        Self {
            record_number,
            x,
            y,
            label: None,
        }
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
}

impl<'a> Cursor<'a> {
    fn take(&self, offset: usize, len: usize) -> Result<&'a [u8], ShapefileError> {
        let available = self.bytes.len().saturating_sub(offset);
        if available < len {
            return Err(ShapefileError::Truncated {
                offset,
                needed: len,
                available,
            });
        }
        Ok(&self.bytes[offset..offset + len])
    }

    fn i32_be(&self, offset: usize) -> Result<i32, ShapefileError> {
        Ok(i32::from_be_bytes(self.take(offset, 4)?.try_into().unwrap()))
    }

    fn i32_le(&self, offset: usize) -> Result<i32, ShapefileError> {
        Ok(i32::from_le_bytes(self.take(offset, 4)?.try_into().unwrap()))
    }

    fn f64_le(&self, offset: usize) -> Result<f64, ShapefileError> {
        Ok(f64::from_le_bytes(self.take(offset, 8)?.try_into().unwrap()))
    }
}

/// Parses every Point or PointZ record, in file order. Null-shape records
/// are skipped; Z and M values are dropped.
///
/// Records are read up to the file length declared in the header, so a file
/// cut short anywhere (including at a record boundary) is reported as
/// truncated. Bytes past the declared length are ignored.
pub fn parse_shapefile_points(bytes: &[u8]) -> Result<Vec<PointRecord>, ShapefileError> {
    let cur = Cursor { bytes };
    let code = cur.i32_be(0)?;
    if code != FILE_CODE {
        return Err(ShapefileError::NotAShapefile { found: code });
    }
    cur.take(0, HEADER_LEN)?;
    let shape_type = cur.i32_le(32)?;
    if shape_type != SHAPE_POINT && shape_type != SHAPE_POINT_Z {
        return Err(ShapefileError::UnsupportedGeometry { shape_type });
    }
    let declared_words = cur.i32_be(24)?;
    let declared = usize::try_from(declared_words)
        .ok()
        .and_then(|w| w.checked_mul(2))
        .filter(|&n| n >= HEADER_LEN)
        .ok_or_else(|| ShapefileError::Malformed {
            offset: 24,
            reason: format!("declared file length of {declared_words} words"),
        })?;

    let min_content = if shape_type == SHAPE_POINT { 20 } else { 28 };
    let mut points = Vec::new();
    let mut offset = HEADER_LEN;
    let mut last_number: Option<i32> = None;
    while offset < declared {
        let number = cur.i32_be(offset)?;
        let content_words = cur.i32_be(offset + 4)?;
        let content_len = usize::try_from(content_words)
            .ok()
            .map(|w| w * 2)
            .ok_or_else(|| ShapefileError::Malformed {
                offset: offset + 4,
                reason: format!("negative content length {content_words}"),
            })?;
        if last_number.is_some_and(|prev| number <= prev) || number < 1 {
            return Err(ShapefileError::Malformed {
                offset,
                reason: format!("record number {number} does not increase"),
            });
        }
        last_number = Some(number);

        let start = offset + 8;
        let end = start.checked_add(content_len).ok_or_else(|| ShapefileError::Malformed {
            offset: offset + 4,
            reason: "content length overflows".into(),
        })?;
        if end > declared {
            return Err(ShapefileError::Malformed {
                offset,
                reason: format!("record ends at {end}, past the declared file length {declared}"),
            });
        }
        cur.take(start, content_len)?;
        if content_len < 4 {
            return Err(ShapefileError::Malformed {
                offset: start,
                reason: format!("record content of {content_len} bytes has no shape type"),
            });
        }
        let record_type = cur.i32_le(start)?;
        if record_type != SHAPE_NULL {
            if record_type != shape_type {
                return Err(ShapefileError::Malformed {
                    offset: start,
                    reason: format!("record shape type {record_type} in a type {shape_type} file"),
                });
            }
            if content_len < min_content {
                return Err(ShapefileError::Malformed {
                    offset: start,
                    reason: format!("{content_len} content bytes, shape type {record_type} needs {min_content}"),
                });
            }
            points.push(PointRecord::new(
                number as u32,
                cur.f64_le(start + 4)?,
                cur.f64_le(start + 12)?,
            ));
        }
        offset = end;
    }
    Ok(points)
}

/// Encodes points as a Point (type 1) `.shp` main file.
pub fn write_point_shapefile(points: &[(f64, f64)]) -> Vec<u8> {
    let total = HEADER_LEN + points.len() * 28;
    let mut out = Vec::with_capacity(total);
    out.extend_from_slice(&FILE_CODE.to_be_bytes());
    out.extend_from_slice(&[0u8; 20]);
    out.extend_from_slice(&((total / 2) as i32).to_be_bytes());
    out.extend_from_slice(&1000i32.to_le_bytes());
    out.extend_from_slice(&SHAPE_POINT.to_le_bytes());
    let (mut x_min, mut y_min, mut x_max, mut y_max) = (0.0, 0.0, 0.0, 0.0);
    if let Some(&(x, y)) = points.first() {
        (x_min, y_min, x_max, y_max) = (x, y, x, y);
        for &(x, y) in points {
            x_min = f64::min(x_min, x);
            y_min = f64::min(y_min, y);
            x_max = f64::max(x_max, x);
            y_max = f64::max(y_max, y);
        }
    }
    for v in [x_min, y_min, x_max, y_max, 0.0, 0.0, 0.0, 0.0] {
        out.extend_from_slice(&f64::to_le_bytes(v));
    }
    for (i, &(x, y)) in points.iter().enumerate() {
        out.extend_from_slice(&(i as i32 + 1).to_be_bytes());
        out.extend_from_slice(&10i32.to_be_bytes());
        out.extend_from_slice(&SHAPE_POINT.to_le_bytes());
        out.extend_from_slice(&x.to_le_bytes());
        out.extend_from_slice(&y.to_le_bytes());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn header(shape_type: i32, words: i32) -> Vec<u8> {
        let mut h = vec![0u8; HEADER_LEN];
        h[0..4].copy_from_slice(&FILE_CODE.to_be_bytes());
        h[24..28].copy_from_slice(&words.to_be_bytes());
        h[28..32].copy_from_slice(&1000i32.to_le_bytes());
        h[32..36].copy_from_slice(&shape_type.to_le_bytes());
        h
    }

    fn record(number: i32, shape_type: i32, coords: &[f64]) -> Vec<u8> {
        let mut r = Vec::new();
        r.extend_from_slice(&number.to_be_bytes());
        r.extend_from_slice(&(((4 + 8 * coords.len()) / 2) as i32).to_be_bytes());
        r.extend_from_slice(&shape_type.to_le_bytes());
        for c in coords {
            r.extend_from_slice(&c.to_le_bytes());
        }
        r
    }

    fn file(shape_type: i32, records: &[Vec<u8>]) -> Vec<u8> {
        let len = HEADER_LEN + records.iter().map(Vec::len).sum::<usize>();
        let mut out = header(shape_type, (len / 2) as i32);
        records.iter().for_each(|r| out.extend_from_slice(r));
        out
    }

    #[test]
    fn null_records_are_skipped() {
        let bytes = file(
            SHAPE_POINT,
            &[
                record(1, SHAPE_POINT, &[1.0, 2.0]),
                record(2, SHAPE_NULL, &[]),
                record(3, SHAPE_POINT, &[3.0, 4.0]),
            ],
        );
        let pts = parse_shapefile_points(&bytes).unwrap();
        assert_eq!(pts, [PointRecord::new(1, 1.0, 2.0), PointRecord::new(3, 3.0, 4.0)]);
    }

    #[test]
    fn pointz_without_measure() {
        let bytes = file(SHAPE_POINT_Z, &[record(1, SHAPE_POINT_Z, &[1.0, 2.0, 9.0])]);
        assert_eq!(parse_shapefile_points(&bytes).unwrap(), [PointRecord::new(1, 1.0, 2.0)]);
    }

    #[test]
    fn structural_errors() {
        let mismatched = file(SHAPE_POINT, &[record(1, SHAPE_POINT_Z, &[1.0, 2.0, 3.0, 4.0])]);
        assert!(matches!(
            parse_shapefile_points(&mismatched),
            Err(ShapefileError::Malformed { offset: 108, .. })
        ));
        let repeated = file(
            SHAPE_POINT,
            &[record(2, SHAPE_POINT, &[0.0, 0.0]), record(2, SHAPE_POINT, &[0.0, 0.0])],
        );
        assert!(matches!(
            parse_shapefile_points(&repeated),
            Err(ShapefileError::Malformed { offset: 128, .. })
        ));
        let short = file(SHAPE_POINT, &[record(1, SHAPE_POINT, &[1.0])]);
        assert!(matches!(
            parse_shapefile_points(&short),
            Err(ShapefileError::Malformed { .. })
        ));
        let mut bad_len = file(SHAPE_POINT, &[]);
        bad_len[24..28].copy_from_slice(&(-4i32).to_be_bytes());
        assert!(matches!(
            parse_shapefile_points(&bad_len),
            Err(ShapefileError::Malformed { offset: 24, .. })
        ));
        assert!(matches!(
            parse_shapefile_points(&[0x00, 0x00]),
            Err(ShapefileError::Truncated { offset: 0, .. })
        ));
        assert!(matches!(
            parse_shapefile_points(&[0, 0, 0, 1, 0, 0]),
            Err(ShapefileError::NotAShapefile { found: 1 })
        ));
    }

    #[test]
    fn writer_round_trip() {
        let pts = [(1.0, 2.0), (-3.5, 1e6), (0.0, -0.0)];
        let parsed = parse_shapefile_points(&write_point_shapefile(&pts)).unwrap();
        let got: Vec<_> = parsed.iter().map(|p| (p.record_number, p.x, p.y)).collect();
        assert_eq!(got, [(1, 1.0, 2.0), (2, -3.5, 1e6), (3, 0.0, -0.0)]);
    }
}
