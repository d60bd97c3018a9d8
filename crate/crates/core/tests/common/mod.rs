#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stfmm::GrayImage;

/// 10×10 stego excerpt carrying "A St" with 5×5 windows and the printable
/// alphabet. Residue pixels: 117, 61, 113, 124.
pub const WINDOW5_EXCERPT: [[u8; 10]; 10] = [
    [35, 70, 60, 65, 65, 61, 50, 55, 55, 60],
    [50, 115, 110, 110, 110, 120, 105, 105, 110, 110],
    [35, 115, 120, 110, 110, 125, 115, 105, 110, 110],
    [35, 117, 115, 110, 105, 115, 105, 100, 105, 105],
    [50, 120, 120, 120, 115, 115, 110, 120, 115, 115],
    [65, 70, 75, 80, 80, 80, 90, 85, 85, 85],
    [113, 110, 110, 110, 105, 105, 105, 100, 100, 105],
    [110, 110, 110, 110, 105, 105, 110, 110, 110, 110],
    [105, 110, 110, 110, 110, 105, 115, 110, 105, 105],
    [115, 115, 115, 110, 110, 105, 124, 115, 110, 110],
];

/// 6×12 stego excerpt carrying "to be or" with 3×3 windows and the
/// lowercase alphabet, exactly as published. Row 3, column 10 holds 12,
/// which cannot be right: it would give the last window two residue pixels.
pub const WINDOW3_EXCERPT_AS_PRINTED: [[u8; 12]; 6] = [
    [50, 45, 45, 45, 45, 45, 55, 55, 60, 65, 75, 90],
    [53, 45, 40, 40, 35, 35, 40, 44, 45, 56, 85, 100],
    [45, 40, 35, 35, 37, 30, 30, 35, 35, 55, 80, 90],
    [95, 100, 115, 120, 95, 80, 65, 60, 55, 65, 12, 160],
    [110, 121, 130, 95, 84, 70, 55, 50, 50, 45, 95, 140],
    [95, 100, 85, 75, 65, 50, 45, 42, 40, 40, 65, 132],
];

/// [`WINDOW3_EXCERPT_AS_PRINTED`] with the stray 12 read as 120.
pub fn window3_excerpt() -> GrayImage {
    let mut rows = WINDOW3_EXCERPT_AS_PRINTED;
    assert_eq!(rows[3][10], 12);
    rows[3][10] = 120;
    GrayImage::from_rows(&rows).unwrap()
}

pub fn window5_excerpt() -> GrayImage {
    GrayImage::from_rows(&WINDOW5_EXCERPT).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_image(rng: &mut impl Rng, width: usize, height: usize) -> GrayImage {
    GrayImage::from_fn(width, height, |_, _| rng.gen())
}

/// Deterministic stand-in for a photograph: smooth low-frequency structure,
/// an edge, and mild sensor-like noise.
pub fn natural_like(width: usize, height: usize, seed: u64) -> GrayImage {
    let mut rng = rng(seed);
    GrayImage::from_fn(width, height, |x, y| {
        let (fx, fy) = (x as f64, y as f64);
        let mut v = 120.0
            + 55.0 * (fx / 41.0).sin() * (fy / 29.0).cos()
            + 30.0 * ((fx + 2.0 * fy) / 97.0).sin()
            + if (fx - 256.0).powi(2) + (fy - 230.0).powi(2) < 110.0f64.powi(2) {
                25.0
            } else {
                0.0
            };
        v += rng.gen_range(-6.0..6.0);
        v.round().clamp(0.0, 255.0) as u8
    })
}
