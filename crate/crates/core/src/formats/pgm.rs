//! Netpbm graymaps, plain (`P2`) and raw (`P5`), limited to maxval ≤ 255.
//!
//! Header comments (`#` to end of line) are skipped on load and never written.

use std::fmt::Write as _;

use crate::{FormatError, GrayImage};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgmMode {
    /// `P5`, one byte per sample.
    Binary,
    /// `P2`, decimal samples separated by whitespace.
    Ascii,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_whitespace_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.bytes.get(self.pos) {
                    self.pos += 1;
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    /// Next unsigned decimal token, or `None` at end of input.
    fn next_number(&mut self, what: &str) -> Result<Option<u32>, FormatError> {
        self.skip_whitespace_and_comments();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.bytes.get(self.pos) {
                None => Ok(None),
                Some(&b) => Err(FormatError::MalformedHeader(format!(
                    "expected {what}, found byte {b:#04x}"
                ))),
            };
        }
        if let Some(&b) = self.bytes.get(self.pos) {
            if !b.is_ascii_whitespace() && b != b'#' {
                return Err(FormatError::MalformedHeader(format!(
                    "unexpected byte {b:#04x} in {what}"
                )));
            }
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        text.parse::<u32>()
            .map(Some)
            .map_err(|_| FormatError::MalformedHeader(format!("{what} {text} is too large")))
    }

    fn header_number(&mut self, what: &str) -> Result<u32, FormatError> {
        self.next_number(what)?
            .ok_or_else(|| FormatError::MalformedHeader(format!("missing {what}")))
    }
}

/// Parses a `P5` or `P2` graymap.
pub fn load_pgm(bytes: &[u8]) -> Result<GrayImage, FormatError> {
    let mode = match bytes.get(..2) {
        Some(b"P5") => PgmMode::Binary,
        Some(b"P2") => PgmMode::Ascii,
        Some(&[a, b]) => return Err(FormatError::UnknownMagic([a, b])),
        _ => {
            return Err(FormatError::Truncated {
                expected: 2,
                found: bytes.len(),
            })
        }
    };
    let mut cur = Cursor { bytes, pos: 2 };
    if !cur
        .bytes
        .get(2)
        .is_some_and(|b| b.is_ascii_whitespace() || *b == b'#')
    {
        return Err(FormatError::MalformedHeader(
            "no separator after magic".into(),
        ));
    }
    let width = cur.header_number("width")?;
    let height = cur.header_number("height")?;
    let maxval = cur.header_number("maxval")?;
    if width == 0 || height == 0 {
        return Err(FormatError::ZeroDimensions {
            width: width.into(),
            height: height.into(),
        });
    }
    if maxval == 0 || maxval > 255 {
        return Err(FormatError::UnsupportedMaxval(maxval));
    }
    let (width, height) = (width as usize, height as usize);
    let count = width
        .checked_mul(height)
        .ok_or_else(|| FormatError::MalformedHeader("dimensions overflow".into()))?;

    let pixels = match mode {
        PgmMode::Binary => {
            // Exactly one whitespace byte separates maxval from the raster.
            let start = cur.pos + 1;
            let data = bytes.get(start..).unwrap_or_default();
            if data.len() < count {
                return Err(FormatError::Truncated {
                    expected: count,
                    found: data.len(),
                });
            }
            let data = &data[..count];
            if let Some(&v) = data.iter().find(|&&v| u32::from(v) > maxval) {
                return Err(FormatError::SampleOutOfRange {
                    value: v.into(),
                    maxval,
                });
            }
            data.to_vec()
        }
        PgmMode::Ascii => {
            let mut pixels = Vec::with_capacity(count);
            while pixels.len() < count {
                match cur.next_number("sample")? {
                    Some(v) if v > maxval => {
                        return Err(FormatError::SampleOutOfRange { value: v, maxval })
                    }
                    Some(v) => pixels.push(v as u8),
                    None => {
                        return Err(FormatError::Truncated {
                            expected: count,
                            found: pixels.len(),
                        })
                    }
                }
            }
            pixels
        }
    };
    GrayImage::new(width, height, pixels)
}

/// Serializes with maxval 255. Plain output wraps lines before 70 columns.
pub fn save_pgm(img: &GrayImage, mode: PgmMode) -> Vec<u8> {
    let magic = match mode {
        PgmMode::Binary => "P5",
        PgmMode::Ascii => "P2",
    };
    let mut out = format!("{magic}\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    match mode {
        PgmMode::Binary => out.extend_from_slice(img.pixels()),
        PgmMode::Ascii => {
            let mut text = String::new();
            for row in img.rows() {
                let mut line_len = 0;
                for &v in row {
                    if line_len > 0 {
                        if line_len + 4 > 70 {
                            text.push('\n');
                            line_len = 0;
                        } else {
                            text.push(' ');
                            line_len += 1;
                        }
                    }
                    let before = text.len();
                    write!(text, "{v}").unwrap();
                    line_len += text.len() - before;
                }
                text.push('\n');
            }
            out.extend_from_slice(text.as_bytes());
        }
    }
    out
}
