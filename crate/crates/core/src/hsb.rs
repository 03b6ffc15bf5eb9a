//! The "HSB v1" patch file format.
//!
//! ```text
//! offset  size  field
//! 0       4     magic "HSB1" (0x48 0x53 0x42 0x31)
//! 4       4     height   u32 LE
//! 8       4     width    u32 LE
//! 12      4     channels u32 LE
//! 16      4*N   samples  f32 LE, row-major channel-last, N = h*w*c
//! ```

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::image::HyperImage;

pub const MAGIC: [u8; 4] = *b"HSB1";
pub const HEADER_LEN: usize = 16;

pub fn encode(img: &HyperImage) -> Vec<u8> {
    let mut buf = Vec::with_capacity(HEADER_LEN + 4 * img.data().len());
    buf.extend_from_slice(&MAGIC);
    for dim in [img.height(), img.width(), img.channels()] {
        buf.extend_from_slice(&(dim as u32).to_le_bytes());
    }
    for v in img.data() {
        buf.extend_from_slice(&v.to_le_bytes());
    }
    buf
}

/// Decodes an HSB buffer. `origin` only labels errors.
pub fn decode(bytes: &[u8], origin: &Path) -> Result<HyperImage> {
    let bad = |reason: String| Error::Format {
        path: origin.to_path_buf(),
        reason,
    };
    if bytes.len() < HEADER_LEN {
        return Err(bad(format!("{} bytes is shorter than the header", bytes.len())));
    }
    if bytes[..4] != MAGIC {
        return Err(bad(format!("bad magic {:02x?}", &bytes[..4])));
    }
    let dim = |at: usize| u32::from_le_bytes(bytes[at..at + 4].try_into().unwrap()) as usize;
    let (h, w, c) = (dim(4), dim(8), dim(12));
    let n = h
        .checked_mul(w)
        .and_then(|v| v.checked_mul(c))
        .ok_or_else(|| bad(format!("dimensions {h}x{w}x{c} overflow")))?;
    let body = &bytes[HEADER_LEN..];
    if Some(body.len()) != n.checked_mul(4) {
        return Err(bad(format!(
            "{h}x{w}x{c} needs {} payload bytes, found {}",
            n.saturating_mul(4),
            body.len()
        )));
    }
    let data = body
        .chunks_exact(4)
        .map(|b| f32::from_le_bytes(b.try_into().unwrap()))
        .collect();
    HyperImage::from_vec(h, w, c, data).map_err(|e| bad(e.to_string()))
}

pub fn read(path: impl AsRef<Path>) -> Result<HyperImage> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    decode(&bytes, path)
}

/// Writes `img`, creating parent directories as needed.
pub fn write(path: impl AsRef<Path>, img: &HyperImage) -> Result<()> {
    let path = path.as_ref();
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
        }
    }
    fs::write(path, encode(img)).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn exact_layout() {
        let img = HyperImage::from_vec(1, 2, 1, vec![1.0, -2.5]).unwrap();
        let bytes = encode(&img);
        assert_eq!(
            bytes,
            [
                0x48, 0x53, 0x42, 0x31, // magic
                1, 0, 0, 0, // height
                2, 0, 0, 0, // width
                1, 0, 0, 0, // channels
                0x00, 0x00, 0x80, 0x3f, // 1.0
                0x00, 0x00, 0x20, 0xc0, // -2.5
            ]
        );
    }

    #[test]
    fn rejects_corrupt_buffers() {
        let img = HyperImage::new(2, 2, 3, 0.5).unwrap();
        let good = encode(&img);
        let p = Path::new("x.hsb");
        assert!(decode(&good[..10], p).is_err());
        assert!(decode(&good[..good.len() - 1], p).is_err());
        let mut magic = good.clone();
        magic[3] = b'2';
        assert!(decode(&magic, p).is_err());
        let mut zero = good.clone();
        zero[4..8].copy_from_slice(&0u32.to_le_bytes());
        assert!(decode(&zero, p).is_err());
        let mut huge = good;
        huge[4..8].copy_from_slice(&u32::MAX.to_le_bytes());
        huge[8..12].copy_from_slice(&u32::MAX.to_le_bytes());
        huge[12..16].copy_from_slice(&u32::MAX.to_le_bytes());
        assert!(decode(&huge, p).is_err());
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("a/b/patch.hsb");
        let img = HyperImage::from_fn(3, 4, 13, |r, c, k| (r * 100 + c * 10 + k) as f32).unwrap();
        write(&path, &img).unwrap();
        assert_eq!(read(&path).unwrap(), img);
        assert!(matches!(read(dir.path().join("missing.hsb")), Err(Error::Io { .. })));
    }

    proptest! {
        #[test]
        fn round_trip_is_bit_exact(h in 1usize..5, w in 1usize..5, c in 1usize..4, seed in any::<u32>()) {
            let img = HyperImage::from_fn(h, w, c, |r, col, k| {
                f32::from_bits(seed.wrapping_mul(2654435761).wrapping_add((r * 31 + col * 7 + k) as u32) & 0x7f7f_ffff)
            }).unwrap();
            let back = decode(&encode(&img), Path::new("p")).unwrap();
            prop_assert!(back.data().iter().zip(img.data()).all(|(a, b)| a.to_bits() == b.to_bits()));
        }
    }
}
