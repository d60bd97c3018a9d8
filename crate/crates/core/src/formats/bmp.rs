//! Uncompressed 8-bit palette BMP.
//!
//! Files are written as a 14-byte file header, a 40-byte `BITMAPINFOHEADER`,
//! a 256-entry identity gray palette and bottom-up rows padded to a multiple
//! of four bytes. Loading accepts any palette whose entries are all gray and
//! maps each index through it.

use crate::{FormatError, GrayImage};

const FILE_HEADER_LEN: usize = 14;
const INFO_HEADER_LEN: usize = 40;
const PALETTE_LEN: usize = 256 * 4;
const PIXEL_OFFSET: usize = FILE_HEADER_LEN + INFO_HEADER_LEN + PALETTE_LEN;
/// 96 dpi, the resolution most tools stamp on new bitmaps.
const PIXELS_PER_METER: u32 = 3780;

/// Bytes per stored row for an 8-bit image of the given width.
pub fn row_stride(width: usize) -> usize {
    width.div_ceil(4) * 4
}

fn u16_at(bytes: &[u8], at: usize) -> u16 {
    u16::from_le_bytes([bytes[at], bytes[at + 1]])
}

fn u32_at(bytes: &[u8], at: usize) -> u32 {
    u32::from_le_bytes(bytes[at..at + 4].try_into().unwrap())
}

fn i32_at(bytes: &[u8], at: usize) -> i32 {
    i32::from_le_bytes(bytes[at..at + 4].try_into().unwrap())
}

fn need(bytes: &[u8], expected: usize) -> Result<(), FormatError> {
    if bytes.len() < expected {
        Err(FormatError::Truncated {
            expected,
            found: bytes.len(),
        })
    } else {
        Ok(())
    }
}

pub fn load_bmp8(bytes: &[u8]) -> Result<GrayImage, FormatError> {
    need(bytes, FILE_HEADER_LEN + INFO_HEADER_LEN)?;
    if &bytes[..2] != b"BM" {
        return Err(FormatError::UnknownMagic([bytes[0], bytes[1]]));
    }
    let data_offset = u32_at(bytes, 10) as usize;
    let header_len = u32_at(bytes, 14) as usize;
    if header_len < INFO_HEADER_LEN {
        return Err(FormatError::UnsupportedBmp(format!(
            "info header of {header_len} bytes"
        )));
    }
    let width = i32_at(bytes, 18);
    let height = i32_at(bytes, 22);
    let bit_count = u16_at(bytes, 28);
    let compression = u32_at(bytes, 30);
    let colors_used = u32_at(bytes, 46) as usize;

    if bit_count != 8 {
        return Err(FormatError::UnsupportedBmp(format!(
            "{bit_count} bits per pixel"
        )));
    }
    if compression != 0 {
        return Err(FormatError::UnsupportedBmp(format!(
            "compression method {compression}"
        )));
    }
    if width <= 0 || height == 0 {
        return Err(FormatError::ZeroDimensions {
            width: width.unsigned_abs().into(),
            height: height.unsigned_abs().into(),
        });
    }
    let top_down = height < 0;
    let width = width as usize;
    let height = height.unsigned_abs() as usize;

    let palette_len = match colors_used {
        0 => 256,
        n if n <= 256 => n,
        n => return Err(FormatError::UnsupportedBmp(format!("{n} palette entries"))),
    };
    let palette_start = FILE_HEADER_LEN + header_len;
    need(bytes, palette_start + palette_len * 4)?;
    let mut palette = Vec::with_capacity(palette_len);
    for (index, entry) in bytes[palette_start..palette_start + palette_len * 4]
        .chunks_exact(4)
        .enumerate()
    {
        let (b, g, r) = (entry[0], entry[1], entry[2]);
        if r != g || g != b {
            return Err(FormatError::NonGrayscalePalette { index, r, g, b });
        }
        palette.push(r);
    }

    let stride = row_stride(width);
    // The final row's padding is sometimes omitted by writers.
    let data_len = stride * (height - 1) + width;
    need(bytes, data_offset.saturating_add(data_len))?;
    let data = &bytes[data_offset..];

    let mut pixels = vec![0u8; width * height];
    for (y, row) in pixels.chunks_exact_mut(width).enumerate() {
        let stored = if top_down { y } else { height - 1 - y };
        let src = &data[stored * stride..stored * stride + width];
        for (dst, &index) in row.iter_mut().zip(src) {
            *dst = *palette
                .get(index as usize)
                .ok_or(FormatError::PaletteIndexOutOfRange {
                    index,
                    len: palette.len(),
                })?;
        }
    }
    GrayImage::new(width, height, pixels)
}

pub fn save_bmp8(img: &GrayImage) -> Vec<u8> {
    let stride = row_stride(img.width());
    let image_size = stride * img.height();
    let file_size = PIXEL_OFFSET + image_size;
    let mut out = Vec::with_capacity(file_size);

    out.extend_from_slice(b"BM");
    out.extend_from_slice(&(file_size as u32).to_le_bytes());
    out.extend_from_slice(&[0; 4]);
    out.extend_from_slice(&(PIXEL_OFFSET as u32).to_le_bytes());

    out.extend_from_slice(&(INFO_HEADER_LEN as u32).to_le_bytes());
    out.extend_from_slice(&(img.width() as i32).to_le_bytes());
    out.extend_from_slice(&(img.height() as i32).to_le_bytes());
    out.extend_from_slice(&1u16.to_le_bytes());
    out.extend_from_slice(&8u16.to_le_bytes());
    out.extend_from_slice(&0u32.to_le_bytes());
    out.extend_from_slice(&(image_size as u32).to_le_bytes());
    out.extend_from_slice(&PIXELS_PER_METER.to_le_bytes());
    out.extend_from_slice(&PIXELS_PER_METER.to_le_bytes());
    out.extend_from_slice(&256u32.to_le_bytes());
    out.extend_from_slice(&256u32.to_le_bytes());

    for i in 0..=255u8 {
        out.extend_from_slice(&[i, i, i, 0]);
    }

    let padding = [0u8; 3];
    for row in img.rows().rev() {
        out.extend_from_slice(row);
        out.extend_from_slice(&padding[..stride - img.width()]);
    }
    debug_assert_eq!(out.len(), file_size);
    out
}
