use crate::error::{Error, Result};

use super::AugmentParams;

/// Output-to-input coordinate map:
///
/// ```text
/// x_in = a * x_out + b * y_out + tx
/// y_in = c * x_out + d * y_out + ty
/// ```
///
/// Coordinates are in pixels with pixel centers on integers, `x` along
/// columns and `y` along rows (downwards).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineMatrix {
    a: f64,
    b: f64,
    tx: f64,
    c: f64,
    d: f64,
    ty: f64,
}

impl AffineMatrix {
    pub const IDENTITY: AffineMatrix = AffineMatrix {
        a: 1.0,
        b: 0.0,
        tx: 0.0,
        c: 0.0,
        d: 1.0,
        ty: 0.0,
    };

    /// Entries must be finite and the linear part invertible.
    pub fn new(a: f64, b: f64, tx: f64, c: f64, d: f64, ty: f64) -> Result<Self> {
        let m = Self { a, b, tx, c, d, ty };
        if !m.coefficients().iter().all(|v| v.is_finite()) {
            return Err(Error::invalid(format!("non-finite affine entries {m:?}")));
        }
        if m.determinant() == 0.0 {
            return Err(Error::invalid("affine matrix is singular"));
        }
        Ok(m)
    }

    /// `[a, b, tx, c, d, ty]`
    pub fn coefficients(&self) -> [f64; 6] {
        [self.a, self.b, self.tx, self.c, self.d, self.ty]
    }

    pub fn determinant(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// Maps an output coordinate to the input coordinate it samples.
    #[inline]
    pub fn apply(&self, x: f64, y: f64) -> (f64, f64) {
        (
            self.a * x + self.b * y + self.tx,
            self.c * x + self.d * y + self.ty,
        )
    }
}

impl Default for AffineMatrix {
    fn default() -> Self {
        Self::IDENTITY
    }
}

/// Sine and cosine of an angle in degrees, exact at multiples of 90°.
pub(crate) fn sin_cos_deg(deg: f64) -> (f64, f64) {
    let r = deg.rem_euclid(360.0);
    if r == 0.0 {
        (0.0, 1.0)
    } else if r == 90.0 {
        (1.0, 0.0)
    } else if r == 180.0 {
        (0.0, -1.0)
    } else if r == 270.0 {
        (-1.0, 0.0)
    } else {
        deg.to_radians().sin_cos()
    }
}

/// Builds the single output-to-input map for rotation, shear, zoom and
/// translation of a `width × height` image.
///
/// The forward transform rotates, shears and zooms about the image center
/// `((width - 1) / 2, (height - 1) / 2)` and then shifts content by
/// `(dx, dy)`. The returned map is its inverse: shift to the center, undo the
/// zoom, the shear and the rotation, shift back, then subtract `(dx, dy)`.
pub fn make_affine(params: &AugmentParams, width: usize, height: usize) -> Result<AffineMatrix> {
    if !params.zoom.is_finite() || params.zoom <= 0.0 {
        return Err(Error::invalid(format!(
            "zoom must be a positive finite factor, got {}",
            params.zoom
        )));
    }
    for (name, v) in [
        ("angle", params.angle),
        ("dx", params.dx),
        ("dy", params.dy),
        ("shear", params.shear),
    ] {
        if !v.is_finite() {
            return Err(Error::invalid(format!("{name} must be finite, got {v}")));
        }
    }
    let (sin, cos) = sin_cos_deg(params.angle);
    let inv_zoom = 1.0 / params.zoom;
    let shear = params.shear;

    // Linear part: R^-1 * S^-1 * Z^-1 with R = [[cos, sin], [-sin, cos]]
    // and S = [[1, shear], [0, 1]].
    let a = cos * inv_zoom;
    let b = (-cos * shear - sin) * inv_zoom;
    let c = sin * inv_zoom;
    let d = (cos - sin * shear) * inv_zoom;

    let cx = (width as f64 - 1.0) / 2.0;
    let cy = (height as f64 - 1.0) / 2.0;
    let tx = cx - (a * cx + b * cy) - params.dx;
    let ty = cy - (c * cx + d * cy) - params.dy;
    AffineMatrix::new(a, b, tx, c, d, ty)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(angle: f64, dx: f64, dy: f64, zoom: f64, shear: f64) -> AugmentParams {
        AugmentParams {
            angle,
            dx,
            dy,
            zoom,
            shear,
            ..AugmentParams::identity()
        }
    }

    fn assert_close(m: AffineMatrix, expected: [f64; 6]) {
        for (got, want) in m.coefficients().iter().zip(expected) {
            assert!((got - want).abs() < 1e-12, "{:?} vs {expected:?}", m.coefficients());
        }
    }

    #[test]
    fn identity_params_give_identity_matrix() {
        let m = make_affine(&AugmentParams::identity(), 64, 64).unwrap();
        assert_eq!(m.coefficients(), [1.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
        assert!(m.is_identity());
    }

    #[test]
    fn zoom_fixes_the_center() {
        let m = make_affine(&params(0.0, 0.0, 0.0, 2.0, 0.0), 64, 64).unwrap();
        assert_eq!(m.apply(31.5, 31.5), (31.5, 31.5));
        let m = make_affine(&params(0.0, 0.0, 0.0, 2.0, 0.0), 5, 9).unwrap();
        assert_eq!(m.apply(2.0, 4.0), (2.0, 4.0));
    }

    // Expected values below come from multiplying the elementary 3x3
    // matrices T(-d) T(c) R^-1 S^-1 Z^-1 T(-c) explicitly in numpy.

    #[test]
    fn quarter_turn_on_two_by_two() {
        let m = make_affine(&params(90.0, 0.0, 0.0, 1.0, 0.0), 2, 2).unwrap();
        assert_eq!(m.coefficients(), [0.0, -1.0, 1.0, 1.0, 0.0, 0.0]);
        // Output top-left samples the input top-right.
        assert_eq!(m.apply(0.0, 0.0), (1.0, 0.0));
    }

    #[test]
    fn pure_zoom_matches_products() {
        let m = make_affine(&params(0.0, 0.0, 0.0, 2.0, 0.0), 64, 64).unwrap();
        assert_close(m, [0.5, 0.0, 15.75, 0.0, 0.5, 15.75]);
    }

    #[test]
    fn general_composition_matches_products() {
        let m = make_affine(&params(30.0, 3.5, -2.25, 1.25, 0.05), 64, 48).unwrap();
        assert_close(
            m,
            [
                0.692820323027551,
                -0.43464101615137757,
                16.390223704189516,
                0.3999999999999999,
                0.672820323027551,
                -2.6612775911474458,
            ],
        );
        let m = make_affine(&params(-75.0, 0.0, 0.0, 0.8, -0.04), 13, 7).unwrap();
        assert_close(
            m,
            [
                0.3235238063781509,
                1.2203482351164614,
                0.39781245638171026,
                -1.2074072828613356,
                0.27522751506369747,
                9.41876115197692,
            ],
        );
    }

    #[test]
    fn determinant_is_inverse_zoom_squared() {
        for (zoom, shear) in [(0.5, 0.0), (1.5, 0.05), (2.0, -0.9)] {
            let m = make_affine(&params(37.0, 1.0, 2.0, zoom, shear), 16, 16).unwrap();
            assert!((m.determinant() - 1.0 / (zoom * zoom)).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_zoom() {
        for zoom in [0.0, -1.0, f64::NAN, f64::INFINITY] {
            assert!(matches!(
                make_affine(&params(0.0, 0.0, 0.0, zoom, 0.0), 8, 8),
                Err(Error::InvalidArgument(_))
            ));
        }
    }

    #[test]
    fn exact_quadrant_angles() {
        assert_eq!(sin_cos_deg(-90.0), (-1.0, 0.0));
        assert_eq!(sin_cos_deg(450.0), (1.0, 0.0));
        assert_eq!(sin_cos_deg(180.0), (0.0, -1.0));
    }

    #[test]
    fn singular_matrix_rejected() {
        assert!(AffineMatrix::new(1.0, 2.0, 0.0, 2.0, 4.0, 0.0).is_err());
        assert!(AffineMatrix::new(f64::NAN, 0.0, 0.0, 0.0, 1.0, 0.0).is_err());
    }
}
