//! Alphabets, window sizing and the character ↔ (position, remainder) mapping.
//!
//! A character with 1-based alphabet index `i` is carried by a single pixel in
//! a `k×k` window: its column-wise position selects `((i-1) mod k²) + 1` and
//! its residue modulo five selects the band `((i-1) div k²) + 1`. Decoding
//! inverts this as `position + (remainder-1)·k² + (start_code-1)`.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Smallest window edge `k` with `4k² ≥ n`, i.e. `⌈√(n/4)⌉`.
pub fn window_size_for(n: usize) -> usize {
    let quarter = n.div_ceil(4);
    let k = quarter.isqrt();
    if k * k < quarter {
        k + 1
    } else {
        k
    }
}

/// A contiguous range of byte codes, optionally with space carried as a
/// residue-4 sentinel outside the range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Charset {
    name: &'static str,
    start_code: u8,
    size: usize,
    space_sentinel: bool,
}

/// Result of looking a character up in a [`Charset`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symbol {
    /// 1-based position in the alphabet.
    Index(usize),
    /// Space in a sentinel charset; written as remainder 4.
    Space,
}

/// Where a character lives inside its window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexEncoding {
    /// 1-based column-wise pixel index, `1..=k²`.
    pub position: usize,
    /// Pixel residue modulo five, `1..=4`.
    pub remainder: u8,
}

impl IndexEncoding {
    pub fn new(position: usize, remainder: u8) -> Self {
        Self {
            position,
            remainder,
        }
    }

    fn validate(self, k: usize) -> Result<Self> {
        if (1..=k * k).contains(&self.position) && (1..=4).contains(&self.remainder) {
            Ok(self)
        } else {
            Err(Error::InvalidEncoding {
                position: self.position,
                remainder: self.remainder,
                k,
            })
        }
    }

    /// The 1-based alphabet index this encoding denotes for window edge `k`.
    pub fn index(self, k: usize) -> usize {
        self.position + (usize::from(self.remainder) - 1) * k * k
    }
}

/// Splits a 1-based alphabet index into position and remainder.
pub fn encode_index(index: usize, k: usize) -> Result<IndexEncoding> {
    let area = k * k;
    let max = 4 * area;
    if index == 0 || index > max {
        return Err(Error::IndexOutOfRange { index, k, max });
    }
    Ok(IndexEncoding {
        position: (index - 1) % area + 1,
        remainder: ((index - 1) / area + 1) as u8,
    })
}

impl Charset {
    /// Codes 32–126.
    pub const PRINTABLE95: Charset = Charset::new("printable95", 32, 95, false);
    /// Codes 97–122; space rides on remainder 4 and uppercase folds to lowercase.
    pub const LOWER26: Charset = Charset::new("lower26", 97, 26, true);
    /// Codes 0–127.
    pub const ASCII128: Charset = Charset::new("ascii128", 0, 128, false);
    /// Every byte.
    pub const ASCII256: Charset = Charset::new("ascii256", 0, 256, false);

    pub const BUILTIN: [Charset; 4] = [
        Self::PRINTABLE95,
        Self::LOWER26,
        Self::ASCII128,
        Self::ASCII256,
    ];

    const fn new(name: &'static str, start_code: u8, size: usize, space_sentinel: bool) -> Self {
        Self {
            name,
            start_code,
            size,
            space_sentinel,
        }
    }

    pub fn by_name(name: &str) -> Option<Charset> {
        Self::BUILTIN.into_iter().find(|c| c.name == name)
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn start_code(&self) -> u8 {
        self.start_code
    }

    /// Number of alphabet characters, not counting a sentinel space.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn has_space_sentinel(&self) -> bool {
        self.space_sentinel
    }

    /// Default window edge for this alphabet.
    pub fn window_size(&self) -> usize {
        window_size_for(self.size)
    }

    /// Largest alphabet index a `k×k` window can carry for this charset.
    /// Sentinel charsets give up remainder 4 to the space.
    pub fn index_capacity(&self, k: usize) -> usize {
        let bands = if self.space_sentinel { 3 } else { 4 };
        bands * k * k
    }

    /// Every character this charset can carry, in code order.
    pub fn characters(&self) -> Vec<u8> {
        let mut chars: Vec<u8> = (0..self.size).map(|i| self.start_code + i as u8).collect();
        if self.space_sentinel {
            chars.insert(0, b' ');
        }
        chars
    }

    pub fn char_to_index(&self, c: u8) -> Option<Symbol> {
        if self.space_sentinel && c == b' ' {
            return Some(Symbol::Space);
        }
        let c = if self.space_sentinel {
            c.to_ascii_lowercase()
        } else {
            c
        };
        let offset = usize::from(c.checked_sub(self.start_code)?);
        (offset < self.size).then_some(Symbol::Index(offset + 1))
    }

    /// Position and remainder for character `c` in a `k×k` window.
    pub fn encode_char(&self, c: u8, k: usize) -> Option<Result<IndexEncoding>> {
        Some(match self.char_to_index(c)? {
            Symbol::Space => Ok(IndexEncoding::new((k * k).div_ceil(2), 4)),
            Symbol::Index(i) => encode_index(i, k),
        })
    }

    /// Recovers the character code from a window encoding.
    pub fn decode_index(&self, e: IndexEncoding, k: usize) -> Result<u8> {
        let e = e.validate(k)?;
        if self.space_sentinel && e.remainder == 4 {
            return Ok(b' ');
        }
        let index = e.index(k);
        if index > self.size {
            return Err(Error::IndexOutOfRange {
                index,
                k,
                max: self.size,
            });
        }
        let code = index as i64 + i64::from(self.start_code) - 1;
        Ok(code as u8)
    }
}

impl fmt::Display for Charset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

impl FromStr for Charset {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Charset::by_name(s).ok_or_else(|| {
            let names: Vec<_> = Charset::BUILTIN.iter().map(|c| c.name).collect();
            format!(
                "unknown charset `{s}` (expected one of {})",
                names.join(", ")
            )
        })
    }
}
