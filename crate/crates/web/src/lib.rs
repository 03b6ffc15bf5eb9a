//! WebAssembly bindings for the browser demo in `www/`.
//!
//! The page works on a synthetic 13-band scene and exposes three operations:
//! a random augmentation draw, a warp with explicit parameters, and a
//! histogram of the speckle noise.

use hyperaug::transforms::{apply_params, sample_params, speckle, speckle_seed, AugmentConfig, AugmentParams};
use hyperaug::HyperImage;
use wasm_bindgen::prelude::*;

pub const SIDE: usize = 96;
pub const BANDS: usize = 13;

// Reflectance of each land cover in the 13 bands, roughly shaped like
// Sentinel-2 signatures (visible, red edge, NIR, SWIR).
const WATER: [f32; BANDS] = [0.09, 0.08, 0.06, 0.04, 0.03, 0.02, 0.02, 0.02, 0.01, 0.01, 0.01, 0.01, 0.01];
const FOREST: [f32; BANDS] = [0.03, 0.04, 0.06, 0.04, 0.10, 0.25, 0.30, 0.32, 0.33, 0.12, 0.01, 0.15, 0.07];
const CROP: [f32; BANDS] = [0.05, 0.07, 0.11, 0.09, 0.16, 0.30, 0.36, 0.40, 0.42, 0.14, 0.02, 0.24, 0.13];
const URBAN: [f32; BANDS] = [0.14, 0.15, 0.17, 0.19, 0.20, 0.21, 0.22, 0.23, 0.23, 0.08, 0.02, 0.28, 0.24];

fn cover(r: usize, c: usize) -> &'static [f32; BANDS] {
    let (y, x) = (r as f32, c as f32);
    // Land covers laid over a forest background.
    let river = 30.0 + 10.0 * (y * 0.08).sin();
    if (x - river).abs() < 4.0 {
        &WATER
    } else if (60.0..84.0).contains(&x) && (12.0..40.0).contains(&y) {
        &URBAN
    } else if y > 55.0 && x > 45.0 && (x as usize / 6).is_multiple_of(2) {
        &CROP
    } else {
        &FOREST
    }
}

/// The demo scene: `SIDE × SIDE × BANDS`, deterministic.
pub fn scene() -> HyperImage {
    HyperImage::from_fn(SIDE, SIDE, BANDS, |r, c, k| {
        let texture = 1.0 + 0.04 * ((r * 7 + c * 13) % 11) as f32 / 10.0;
        cover(r, c)[k] * texture
    })
    .expect("static shape")
}

/// Maps three bands of `img` to RGBA bytes with a fixed linear stretch of
/// `[0, max_value]`.
pub fn to_rgba(img: &HyperImage, bands: [usize; 3], max_value: f32) -> Vec<u8> {
    let mut out = Vec::with_capacity(img.height() * img.width() * 4);
    for r in 0..img.height() {
        for c in 0..img.width() {
            for &k in &bands {
                let v = img.get(r, c, k.min(img.channels() - 1)) / max_value;
                out.push((v.clamp(0.0, 1.0) * 255.0).round() as u8);
            }
            out.push(255);
        }
    }
    out
}

fn js_err(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

/// An augmented copy of the scene together with the parameters used.
#[wasm_bindgen]
pub struct Preview {
    rgba: Vec<u8>,
    params: AugmentParams,
}

#[wasm_bindgen]
impl Preview {
    pub fn side() -> usize {
        SIDE
    }

    /// RGBA bytes, row-major, `side × side × 4`.
    pub fn rgba(&self) -> Vec<u8> {
        self.rgba.clone()
    }

    #[wasm_bindgen(js_name = paramsJson)]
    pub fn params_json(&self) -> String {
        serde_json::to_string(&self.params).unwrap_or_default()
    }
}

fn render(img: &HyperImage, params: AugmentParams, bands: &[u32]) -> Result<Preview, JsError> {
    let bands: [usize; 3] = match bands {
        [r, g, b] => [*r as usize, *g as usize, *b as usize],
        _ => return Err(JsError::new("expected three band indices")),
    };
    Ok(Preview {
        rgba: to_rgba(img, bands, 0.45),
        params,
    })
}

/// The unmodified scene.
#[wasm_bindgen(js_name = originalScene)]
pub fn original_scene(bands: &[u32]) -> Result<Preview, JsError> {
    render(&scene(), AugmentParams::identity(), bands)
}

/// Draws parameters from the given ranges under `seed` and augments the scene.
#[allow(clippy::too_many_arguments)]
#[wasm_bindgen(js_name = randomAugment)]
pub fn random_augment(
    seed: u32,
    flip_h: bool,
    flip_v: bool,
    rotation: f64,
    translation: f64,
    zoom: f64,
    shear: f64,
    speckle_variance: f64,
    bands: &[u32],
) -> Result<Preview, JsError> {
    let config = AugmentConfig {
        flip_horizontal: flip_h,
        flip_vertical: flip_v,
        max_rotation: rotation,
        max_translation: translation,
        max_zoom: zoom,
        max_shear: shear,
        speckle_variance,
    };
    let img = scene();
    let seed = u64::from(seed);
    let params = sample_params(&config, img.width(), img.height(), seed).map_err(js_err)?;
    let out = apply_params(&img, &params, speckle_seed(seed)).map_err(js_err)?;
    render(&out, params, bands)
}

/// Warps the scene with explicit parameters (no flips, no noise).
#[wasm_bindgen(js_name = explicitWarp)]
pub fn explicit_warp(angle: f64, dx: f64, dy: f64, zoom: f64, shear: f64, bands: &[u32]) -> Result<Preview, JsError> {
    let params = AugmentParams {
        angle,
        dx,
        dy,
        zoom,
        shear,
        ..AugmentParams::identity()
    };
    let out = apply_params(&scene(), &params, 0).map_err(js_err)?;
    render(&out, params, bands)
}

/// Counts of `out - 1` over `samples` noisy copies of a constant 1.0 pixel,
/// in `bins` equal bins spanning ±4 standard deviations. The last two
/// entries are the sample mean and variance.
#[wasm_bindgen(js_name = speckleHistogram)]
pub fn speckle_histogram(variance: f64, seed: u32, samples: usize, bins: usize) -> Result<Vec<f64>, JsError> {
    if bins == 0 || samples == 0 {
        return Err(JsError::new("bins and samples must be positive"));
    }
    let ones = HyperImage::new(samples, 1, 1, 1.0).map_err(js_err)?;
    let noisy = speckle(&ones, variance, u64::from(seed)).map_err(js_err)?;
    let half = 4.0 * variance.sqrt().max(1e-12);
    let mut hist = vec![0.0; bins + 2];
    let (mut sum, mut sum_sq) = (0.0, 0.0);
    for &v in noisy.data() {
        let e = v as f64 - 1.0;
        sum += e;
        sum_sq += e * e;
        let bin = ((e + half) / (2.0 * half) * bins as f64).floor();
        if (0.0..bins as f64).contains(&bin) {
            hist[bin as usize] += 1.0;
        }
    }
    let n = samples as f64;
    let mean = sum / n;
    hist[bins] = mean;
    hist[bins + 1] = sum_sq / n - mean * mean;
    Ok(hist)
}
