//! MSE and PSNR between two equal-sized 8-bit images.
//!
//! Squared differences are summed exactly in `u64` and divided once, so the
//! MSE is the correctly rounded quotient in whichever float type is asked for.

use std::fmt;

use num_traits::{Float, FromPrimitive};

use crate::{Error, GrayImage, Result};

/// Peak intensity for 8-bit samples.
pub const PEAK: u32 = 255;

/// MSE/PSNR pair. `psnr` is `+∞` when the images are identical.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quality<F> {
    pub mse: F,
    pub psnr: F,
}

impl<F: Float + FromPrimitive> Quality<F> {
    pub fn from_mse(mse: F) -> Self {
        Self {
            mse,
            psnr: psnr_from_mse(mse),
        }
    }

    pub fn is_lossless(&self) -> bool {
        self.psnr.is_infinite()
    }
}

/// `10·log10(255²/mse)`, or `+∞` for a zero MSE.
pub fn psnr_from_mse<F: Float + FromPrimitive>(mse: F) -> F {
    if mse <= F::zero() {
        return F::infinity();
    }
    let peak_sq = F::from_u32(PEAK * PEAK).unwrap();
    F::from_u8(10).unwrap() * (peak_sq / mse).log10()
}

impl<F: Float + fmt::Display> fmt::Display for Quality<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mse={:.4} psnr=", self.mse)?;
        if self.psnr.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{:.4}", self.psnr)
        }
    }
}

fn check_dims(a: &GrayImage, b: &GrayImage) -> Result<()> {
    if a.same_dimensions(b) {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(
            a.width(),
            a.height(),
            b.width(),
            b.height(),
        ))
    }
}

/// Exact `Σ(aᵢ−bᵢ)²`.
pub fn squared_error_sum(a: &GrayImage, b: &GrayImage) -> Result<u64> {
    check_dims(a, b)?;
    Ok(a.pixels()
        .iter()
        .zip(b.pixels())
        .map(|(&x, &y)| {
            let d = u64::from(x.abs_diff(y));
            d * d
        })
        .sum())
}

pub fn mse<F: Float + FromPrimitive>(a: &GrayImage, b: &GrayImage) -> Result<F> {
    let sum = squared_error_sum(a, b)?;
    Ok(F::from_u64(sum).unwrap() / F::from_usize(a.len()).unwrap())
}

pub fn psnr_as<F: Float + FromPrimitive>(a: &GrayImage, b: &GrayImage) -> Result<Quality<F>> {
    Ok(Quality::from_mse(mse(a, b)?))
}

/// Double-precision [`psnr_as`].
pub fn psnr(a: &GrayImage, b: &GrayImage) -> Result<Quality<f64>> {
    psnr_as(a, b)
}
