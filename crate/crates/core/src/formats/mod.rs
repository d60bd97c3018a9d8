//! Image container formats: Netpbm PGM (`P2`/`P5`) and 8-bit palette BMP.

use std::path::Path;

use crate::{FormatError, GrayImage, Result};

pub mod bmp;
pub mod pgm;

pub use pgm::PgmMode;

/// On-disk encoding of a grayscale image.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImageFormat {
    Pgm(PgmMode),
    Bmp,
}

impl ImageFormat {
    /// Infers the format from the first two bytes (`P2`, `P5` or `BM`).
    pub fn detect(bytes: &[u8]) -> std::result::Result<Self, FormatError> {
        match bytes {
            [b'P', b'5', ..] => Ok(ImageFormat::Pgm(PgmMode::Binary)),
            [b'P', b'2', ..] => Ok(ImageFormat::Pgm(PgmMode::Ascii)),
            [b'B', b'M', ..] => Ok(ImageFormat::Bmp),
            [a, b, ..] => Err(FormatError::UnknownMagic([*a, *b])),
            _ => Err(FormatError::Truncated {
                expected: 2,
                found: bytes.len(),
            }),
        }
    }
}

/// Decodes an image in whichever supported format the magic bytes announce.
pub fn decode(bytes: &[u8]) -> std::result::Result<(GrayImage, ImageFormat), FormatError> {
    let format = ImageFormat::detect(bytes)?;
    let img = match format {
        ImageFormat::Pgm(_) => pgm::load_pgm(bytes)?,
        ImageFormat::Bmp => bmp::load_bmp8(bytes)?,
    };
    Ok((img, format))
}

pub fn encode(img: &GrayImage, format: ImageFormat) -> Vec<u8> {
    match format {
        ImageFormat::Pgm(mode) => pgm::save_pgm(img, mode),
        ImageFormat::Bmp => bmp::save_bmp8(img),
    }
}

pub fn read_file(path: impl AsRef<Path>) -> Result<(GrayImage, ImageFormat)> {
    let bytes = std::fs::read(path)?;
    Ok(decode(&bytes)?)
}

pub fn write_file(path: impl AsRef<Path>, img: &GrayImage, format: ImageFormat) -> Result<()> {
    std::fs::write(path, encode(img, format))?;
    Ok(())
}
