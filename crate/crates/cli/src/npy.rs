//! Minimal `.npy` (format version 1.0, with 2.0/3.0 read support) converter
//! for `(H, W)` and `(H, W, C)` arrays.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, ensure, Context, Result};
use hyperaug::HyperImage;

const MAGIC: &[u8; 6] = b"\x93NUMPY";

/// Serializes `img` as a C-ordered little-endian float32 `(H, W, C)` array,
/// byte-identical to `numpy.save` for the same array.
pub fn encode(img: &HyperImage) -> Vec<u8> {
    let (h, w, c) = img.shape();
    let mut header =
        format!("{{'descr': '<f4', 'fortran_order': False, 'shape': ({h}, {w}, {c}), }}");
    // magic + version + u16 length + header + '\n' is a multiple of 64
    let unpadded = MAGIC.len() + 2 + 2 + header.len() + 1;
    header.extend(std::iter::repeat_n(' ', (64 - unpadded % 64) % 64));
    header.push('\n');

    let mut out = Vec::with_capacity(10 + header.len() + 4 * img.data().len());
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&[1, 0]);
    out.extend_from_slice(&(header.len() as u16).to_le_bytes());
    out.extend_from_slice(header.as_bytes());
    for v in img.data() {
        out.extend_from_slice(&v.to_le_bytes());
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Kind {
    Float,
    Signed,
    Unsigned,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Dtype {
    kind: Kind,
    size: usize,
    big_endian: bool,
}

impl Dtype {
    fn parse(descr: &str) -> Result<Self> {
        let (order, rest) = descr.split_at(1.min(descr.len()));
        let big_endian = match order {
            "<" | "|" | "=" => false,
            ">" => true,
            _ => bail!("unsupported dtype `{descr}`"),
        };
        let (kind, size) = rest.split_at(1.min(rest.len()));
        let size: usize = size.parse().map_err(|_| anyhow!("unsupported dtype `{descr}`"))?;
        let kind = match (kind, size) {
            ("f", 4 | 8) => Kind::Float,
            ("i", 1 | 2 | 4 | 8) => Kind::Signed,
            ("u", 1 | 2 | 4 | 8) => Kind::Unsigned,
            _ => bail!("unsupported dtype `{descr}`"),
        };
        Ok(Self {
            kind,
            size,
            big_endian,
        })
    }

    fn read(&self, bytes: &[u8]) -> f32 {
        let mut buf = [0u8; 8];
        buf[..self.size].copy_from_slice(bytes);
        if self.big_endian {
            buf[..self.size].reverse();
        }
        let bits = u64::from_le_bytes(buf);
        match (self.kind, self.size) {
            (Kind::Float, 4) => f32::from_bits(bits as u32),
            (Kind::Float, _) => f64::from_bits(bits) as f32,
            (Kind::Unsigned, _) => bits as f32,
            (Kind::Signed, n) => {
                let shift = 64 - 8 * n as u32;
                (((bits << shift) as i64) >> shift) as f32
            }
        }
    }
}

/// Value of `'key': ...` in the header dict, up to the next top-level comma.
fn dict_value<'a>(header: &'a str, key: &str) -> Result<&'a str> {
    let pat = format!("'{key}':");
    let start = header
        .find(&pat)
        .ok_or_else(|| anyhow!("header has no `{key}`"))?
        + pat.len();
    let rest = header[start..].trim_start();
    let end = if rest.starts_with('(') {
        rest.find(')').map(|i| i + 1)
    } else {
        rest.find([',', '}'])
    }
    .ok_or_else(|| anyhow!("unterminated `{key}` in header"))?;
    Ok(rest[..end].trim())
}

/// Parses an `.npy` buffer holding a `(H, W)` or `(H, W, C)` numeric array.
/// Integer and float64 samples are converted to float32 without rescaling.
pub fn decode(bytes: &[u8]) -> Result<HyperImage> {
    ensure!(bytes.len() >= 10 && &bytes[..6] == MAGIC, "not an .npy file");
    let (header_len, body_start) = match bytes[6] {
        1 => (u16::from_le_bytes([bytes[8], bytes[9]]) as usize, 10),
        2 | 3 => {
            ensure!(bytes.len() >= 12, "truncated .npy header");
            (u32::from_le_bytes(bytes[8..12].try_into().unwrap()) as usize, 12)
        }
        v => bail!("unsupported .npy version {v}"),
    };
    let header_end = body_start + header_len;
    ensure!(bytes.len() >= header_end, "truncated .npy header");
    let header = std::str::from_utf8(&bytes[body_start..header_end])?;

    let descr = dict_value(header, "descr")?.trim_matches(|c| c == '\'' || c == '"');
    let dtype = Dtype::parse(descr)?;
    ensure!(
        dict_value(header, "fortran_order")? == "False",
        "Fortran-ordered arrays are not supported"
    );
    let shape: Vec<usize> = dict_value(header, "shape")?
        .trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|e| anyhow!("bad shape entry `{s}`: {e}")))
        .collect::<Result<_>>()?;
    let (h, w, c) = match shape[..] {
        [h, w] => (h, w, 1),
        [h, w, c] => (h, w, c),
        _ => bail!("expected a 2-D or 3-D array, got shape {shape:?}"),
    };
    let n = h
        .checked_mul(w)
        .and_then(|v| v.checked_mul(c))
        .ok_or_else(|| anyhow!("shape {shape:?} overflows"))?;
    let body = &bytes[header_end..];
    ensure!(
        body.len() == n * dtype.size,
        "shape {shape:?} of {descr} needs {} bytes, found {}",
        n * dtype.size,
        body.len()
    );
    let data = body.chunks_exact(dtype.size).map(|b| dtype.read(b)).collect();
    Ok(HyperImage::from_vec(h, w, c, data)?)
}

pub fn read(path: &Path) -> Result<HyperImage> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    decode(&bytes).with_context(|| format!("decoding {}", path.display()))
}

pub fn write(path: &Path, img: &HyperImage) -> Result<()> {
    fs::write(path, encode(img)).with_context(|| format!("writing {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const RAMP_F32: &[u8] = include_bytes!("../tests/fixtures/ramp_f32.npy");
    const RAMP_F64: &[u8] = include_bytes!("../tests/fixtures/ramp_f64.npy");
    const BAND_U16: &[u8] = include_bytes!("../tests/fixtures/band_u16.npy");
    const FORTRAN: &[u8] = include_bytes!("../tests/fixtures/fortran_f32.npy");

    fn ramp() -> HyperImage {
        HyperImage::from_fn(3, 4, 13, |r, c, k| (r * 100 + c * 10 + k) as f32 / 4.0).unwrap()
    }

    #[test]
    fn reads_numpy_output() {
        assert_eq!(decode(RAMP_F32).unwrap(), ramp());
        assert_eq!(decode(RAMP_F64).unwrap(), ramp());
        let band = decode(BAND_U16).unwrap();
        assert_eq!(band.shape(), (3, 4, 1));
        assert_eq!(band.get(2, 3, 0), 11000.0);
    }

    #[test]
    fn writes_numpy_bytes() {
        assert_eq!(encode(&ramp()), RAMP_F32);
    }

    #[test]
    fn rejects_unsupported() {
        assert!(decode(FORTRAN).is_err());
        assert!(decode(b"NUMPY").is_err());
        assert!(decode(&RAMP_F32[..RAMP_F32.len() - 2]).is_err());
        let mut odd = RAMP_F32.to_vec();
        let at = odd.windows(3).position(|w| w == b"<f4").unwrap();
        odd[at + 1] = b'c';
        assert!(decode(&odd).is_err());
    }

    #[test]
    fn signed_and_big_endian() {
        let d = Dtype::parse(">i2").unwrap();
        assert_eq!(d.read(&[0xff, 0xfe]), -2.0);
        let d = Dtype::parse("<i1").unwrap();
        assert_eq!(d.read(&[0x80]), -128.0);
        let d = Dtype::parse("|u1").unwrap();
        assert_eq!(d.read(&[0xff]), 255.0);
    }
}
