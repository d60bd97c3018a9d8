//! Five modulus quantization: every intensity moves to its nearest multiple
//! of five, by at most two levels.

use crate::GrayImage;

/// Maps an intensity to the nearest multiple of five.
///
/// Residue 1 and 2 round down, residue 3 and 4 round up. The top of the range
/// stays in bounds because 255 is itself a multiple of five.
pub fn fmm_pixel(v: u8) -> u8 {
    match v % 5 {
        0 => v,
        1 => v - 1,
        2 => v - 2,
        3 => v + 2,
        _ => v + 1,
    }
}

/// Applies [`fmm_pixel`] to every pixel, margins included.
pub fn fmm_image(img: &GrayImage) -> GrayImage {
    let mut out = img.clone();
    fmm_in_place(&mut out);
    out
}

pub fn fmm_in_place(img: &mut GrayImage) {
    for p in img.pixels_mut() {
        *p = fmm_pixel(*p);
    }
}

/// True when every pixel is a multiple of five, i.e. the image carries no payload.
pub fn is_quantized(img: &GrayImage) -> bool {
    img.pixels().iter().all(|&p| p % 5 == 0)
}
