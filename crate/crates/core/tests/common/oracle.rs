//! Reference implementations used only by tests.
//!
//! Written for clarity, not speed, and without calling into the crate's
//! transform code.

use hyperaug::{AugmentParams, HyperImage};

/// Input coordinate sampled by output pixel `(x, y)`, obtained by undoing
/// each elementary step on the point itself.
pub fn map_point(p: &AugmentParams, width: usize, height: usize, x: f64, y: f64) -> (f64, f64) {
    let cx = (width as f64 - 1.0) / 2.0;
    let cy = (height as f64 - 1.0) / 2.0;
    // to the center
    let (mut u, mut v) = (x - cx, y - cy);
    // undo zoom
    u /= p.zoom;
    v /= p.zoom;
    // undo shear x' = x + s*y
    u -= p.shear * v;
    // undo the counter-clockwise (as displayed, y down) rotation
    let t = p.angle.to_radians();
    let (ru, rv) = (t.cos() * u - t.sin() * v, t.sin() * u + t.cos() * v);
    (ru + cx - p.dx, rv + cy - p.dy)
}

fn sample_clamped(img: &HyperImage, x: f64, y: f64, k: usize) -> f64 {
    let x = x.max(0.0).min((img.width() - 1) as f64);
    let y = y.max(0.0).min((img.height() - 1) as f64);
    let x0 = x.floor() as usize;
    let y0 = y.floor() as usize;
    let x1 = if x0 + 1 < img.width() { x0 + 1 } else { x0 };
    let y1 = if y0 + 1 < img.height() { y0 + 1 } else { y0 };
    let tx = x - x0 as f64;
    let ty = y - y0 as f64;
    let at = |r: usize, c: usize| img.get(r, c, k) as f64;
    let top = at(y0, x0) + tx * (at(y0, x1) - at(y0, x0));
    let bottom = at(y1, x0) + tx * (at(y1, x1) - at(y1, x0));
    top + ty * (bottom - top)
}

/// Per-output-pixel, per-channel double loop.
pub fn warp_reference(img: &HyperImage, p: &AugmentParams) -> Vec<f64> {
    let (h, w, ch) = img.shape();
    let mut out = Vec::with_capacity(h * w * ch);
    for row in 0..h {
        for col in 0..w {
            let (x, y) = map_point(p, w, h, col as f64, row as f64);
            for k in 0..ch {
                out.push(sample_clamped(img, x, y, k));
            }
        }
    }
    out
}

/// Max absolute difference between an image and a reference buffer.
pub fn max_abs_diff(img: &HyperImage, reference: &[f64]) -> f64 {
    assert_eq!(img.data().len(), reference.len());
    img.data()
        .iter()
        .zip(reference)
        .map(|(&a, &b)| (a as f64 - b).abs())
        .fold(0.0, f64::max)
}

/// Small deterministic generator so tests need no RNG crate.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn range(&mut self, lo: usize, hi_inclusive: usize) -> usize {
        lo + (self.next_u64() >> 33) as usize % (hi_inclusive - lo + 1)
    }

    pub fn image(&mut self, h: usize, w: usize, c: usize) -> HyperImage {
        HyperImage::from_fn(h, w, c, |_, _, _| (self.unit() * 2.0 - 0.5) as f32).unwrap()
    }
}
