use crate::error::{Error, Result};
use crate::image::HyperImage;
use crate::rng::SeededRng;

/// Multiplicative speckle: `out = in * (1 + n)` with `n ~ N(0, variance)`
/// drawn independently per sample, in storage order, from the stream seeded
/// by `seed`. Output is not clamped.
pub fn speckle(img: &HyperImage, variance: f64, seed: u64) -> Result<HyperImage> {
    if !variance.is_finite() || variance < 0.0 {
        return Err(Error::invalid(format!(
            "speckle variance must be a finite value >= 0, got {variance}"
        )));
    }
    if variance == 0.0 {
        return Ok(img.clone());
    }
    let sigma = variance.sqrt();
    let mut rng = SeededRng::new(seed);
    let mut out = img.clone();
    for v in out.data_mut() {
        let n = sigma * rng.standard_normal();
        *v = (*v as f64 * (1.0 + n)) as f32;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_variance_is_identity() {
        let img = HyperImage::from_fn(4, 4, 3, |r, c, k| (r + 2 * c) as f32 * 0.37 - k as f32).unwrap();
        assert_eq!(speckle(&img, 0.0, 123).unwrap(), img);
    }

    #[test]
    fn zeros_stay_zero() {
        let img = HyperImage::new(8, 8, 13, 0.0).unwrap();
        for seed in 0..5 {
            let out = speckle(&img, 0.5, seed).unwrap();
            assert!(out.data().iter().all(|&v| v == 0.0));
        }
    }

    #[test]
    fn negative_variance_rejected() {
        let img = HyperImage::new(2, 2, 1, 1.0).unwrap();
        assert!(matches!(speckle(&img, -0.1, 0), Err(Error::InvalidArgument(_))));
        assert!(speckle(&img, f64::NAN, 0).is_err());
    }

    #[test]
    fn seeded_and_distinct() {
        let img = HyperImage::new(16, 16, 4, 1.0).unwrap();
        let a = speckle(&img, 0.01, 9).unwrap();
        assert_eq!(a, speckle(&img, 0.01, 9).unwrap());
        assert_ne!(a, speckle(&img, 0.01, 10).unwrap());
    }

    #[test]
    fn noise_scales_with_sample() {
        let img = HyperImage::from_vec(1, 2, 1, vec![1.0, 3.0]).unwrap();
        let one = HyperImage::from_vec(1, 2, 1, vec![1.0, 1.0]).unwrap();
        let a = speckle(&img, 0.04, 1).unwrap();
        let b = speckle(&one, 0.04, 1).unwrap();
        assert_eq!(a.get(0, 0, 0), b.get(0, 0, 0));
        assert!((a.get(0, 1, 0) - 3.0 * b.get(0, 1, 0)).abs() < 1e-5);
    }
}
