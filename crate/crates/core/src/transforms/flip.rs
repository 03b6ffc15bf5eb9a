use crate::image::HyperImage;

/// Mirrors columns: `out(r, c, k) = in(r, width - 1 - c, k)`.
pub fn flip_h(img: &HyperImage) -> HyperImage {
    let mut out = img.clone();
    let (h, w, _) = img.shape();
    for r in 0..h {
        for c in 0..w {
            out.pixel_mut(r, c).copy_from_slice(img.pixel(r, w - 1 - c));
        }
    }
    out
}

/// Mirrors rows: `out(r, c, k) = in(height - 1 - r, c, k)`.
pub fn flip_v(img: &HyperImage) -> HyperImage {
    let (h, w, ch) = img.shape();
    let row_len = w * ch;
    let src = img.data();
    let mut data = Vec::with_capacity(src.len());
    for r in (0..h).rev() {
        data.extend_from_slice(&src[r * row_len..(r + 1) * row_len]);
    }
    HyperImage::from_vec(h, w, ch, data).expect("shape preserved")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abcd() -> HyperImage {
        HyperImage::from_vec(2, 2, 1, vec![1.0, 2.0, 3.0, 4.0]).unwrap()
    }

    #[test]
    fn horizontal_reverses_columns() {
        assert_eq!(flip_h(&abcd()).data(), &[2.0, 1.0, 4.0, 3.0]);
    }

    #[test]
    fn vertical_reverses_rows() {
        assert_eq!(flip_v(&abcd()).data(), &[3.0, 4.0, 1.0, 2.0]);
    }

    #[test]
    fn every_channel_is_mirrored() {
        let img = HyperImage::from_fn(64, 64, 13, |r, c, k| (r * 10_000 + c * 100 + k) as f32).unwrap();
        let out = flip_h(&img);
        assert_eq!(out.shape(), (64, 64, 13));
        for r in 0..64 {
            for c in 0..64 {
                for k in 0..13 {
                    assert_eq!(out.get(r, c, k), img.get(r, 63 - c, k));
                }
            }
        }
    }

    #[test]
    fn flips_commute_on_non_square() {
        let img = HyperImage::from_fn(3, 5, 2, |r, c, k| (r * 31 + c * 7 + k) as f32).unwrap();
        assert_eq!(flip_v(&flip_h(&img)), flip_h(&flip_v(&img)));
        assert_eq!(flip_h(&flip_h(&img)), img);
        assert_eq!(flip_v(&flip_v(&img)), img);
    }
}
