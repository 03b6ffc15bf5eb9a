use crate::image::HyperImage;

use super::AffineMatrix;

/// Resamples `img` through `m` with bilinear interpolation.
///
/// Each output site `(row, col)` reads the input at `m.apply(col, row)`.
/// Coordinates are clamped to `[0, width - 1] × [0, height - 1]` before
/// interpolation, which replicates edge pixels into any region that leaves
/// the frame. All channels share the same sampling position and weights.
pub fn warp_affine(img: &HyperImage, m: &AffineMatrix) -> HyperImage {
    if m.is_identity() {
        return img.clone();
    }
    let (h, w, ch) = img.shape();
    let max_x = (w - 1) as f64;
    let max_y = (h - 1) as f64;
    let src = img.data();
    let mut out = Vec::with_capacity(src.len());
    let mut acc = vec![0f64; ch];

    for row in 0..h {
        for col in 0..w {
            let (x, y) = m.apply(col as f64, row as f64);
            let x = x.clamp(0.0, max_x);
            let y = y.clamp(0.0, max_y);
            let x0 = x.floor() as usize;
            let y0 = y.floor() as usize;
            let x1 = (x0 + 1).min(w - 1);
            let y1 = (y0 + 1).min(h - 1);
            let fx = x - x0 as f64;
            let fy = y - y0 as f64;

            let taps = [
                ((y0 * w + x0) * ch, (1.0 - fx) * (1.0 - fy)),
                ((y0 * w + x1) * ch, fx * (1.0 - fy)),
                ((y1 * w + x0) * ch, (1.0 - fx) * fy),
                ((y1 * w + x1) * ch, fx * fy),
            ];
            acc.iter_mut().for_each(|v| *v = 0.0);
            for (base, weight) in taps {
                for (a, &s) in acc.iter_mut().zip(&src[base..base + ch]) {
                    *a += weight * s as f64;
                }
            }
            out.extend(acc.iter().map(|&v| v as f32));
        }
    }
    HyperImage::from_vec(h, w, ch, out).expect("shape preserved")
}
