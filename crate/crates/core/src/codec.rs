//! Window tiling, embedding and extraction.
//!
//! The image is cut into `floor(w/k) × floor(h/k)` windows visited row-major.
//! Message character `n` goes into window `n` as the only pixel whose value
//! is not a multiple of five. Inside a window, pixels are numbered
//! column-wise from 1. There is no length header: the first window without
//! a residue pixel ends the message.

use crate::charset::Charset;
use crate::fmm::fmm_image;
use crate::{metrics, Error, GrayImage, QualityReport, Result};

/// Row-major tiling of an image into complete `k×k` windows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowGrid {
    k: usize,
    cols: usize,
    rows: usize,
    image_width: usize,
}

impl WindowGrid {
    /// # Panics
    ///
    /// Panics if `k` is zero.
    pub fn new(width: usize, height: usize, k: usize) -> Self {
        assert!(k > 0, "window edge must be positive");
        Self {
            k,
            cols: width / k,
            rows: height / k,
            image_width: width,
        }
    }

    pub fn for_image(img: &GrayImage, k: usize) -> Self {
        Self::new(img.width(), img.height(), k)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of complete windows.
    pub fn len(&self) -> usize {
        self.cols * self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// (window row, window column) of the `n`th window.
    pub fn coords(&self, n: usize) -> (usize, usize) {
        (n / self.cols, n % self.cols)
    }

    /// 1-based column-wise position of local pixel (`x`, `y`).
    pub fn position_of(&self, x: usize, y: usize) -> usize {
        x * self.k + y + 1
    }

    /// Flat pixel offset of `position` inside window `n`.
    pub fn pixel_index(&self, n: usize, position: usize) -> usize {
        let (row, col) = self.coords(n);
        let x = (position - 1) / self.k;
        let y = (position - 1) % self.k;
        (row * self.k + y) * self.image_width + col * self.k + x
    }

    /// `(position, flat offset)` for every pixel of window `n`, column-wise.
    pub fn window_pixels(&self, n: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.k * self.k).map(move |pos| (pos, self.pixel_index(n, pos)))
    }
}

/// Number of characters an image can carry with window edge `k`.
pub fn capacity(img: &GrayImage, k: usize) -> usize {
    WindowGrid::for_image(img, k).len()
}

/// The shared secret: window edge plus the alphabet both sides agreed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StegoParams {
    k: usize,
    charset: Charset,
}

impl StegoParams {
    /// Fails unless `k ≥ 2` and a `k×k` window can index every character.
    pub fn new(k: usize, charset: Charset) -> Result<Self> {
        if k < 2 || charset.size() > charset.index_capacity(k) {
            return Err(Error::InvalidWindow {
                k,
                charset: charset.name(),
                size: charset.size(),
            });
        }
        Ok(Self { k, charset })
    }

    /// Uses the smallest window that fits the charset.
    pub fn for_charset(charset: Charset) -> Result<Self> {
        Self::new(charset.window_size().max(2), charset)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn charset(&self) -> Charset {
        self.charset
    }
}

/// Writes residue `remainder` onto a multiple-of-five `base`, stepping down
/// instead of up when the result would pass 255.
pub fn carry(base: u8, remainder: u8) -> u8 {
    debug_assert!(base.is_multiple_of(5) && (1..=4).contains(&remainder));
    match base.checked_add(remainder) {
        Some(v) => v,
        None => base - (5 - remainder),
    }
}

/// Quantizes `cover` and hides `msg`, one character per window.
pub fn embed(cover: &GrayImage, msg: &[u8], params: &StegoParams) -> Result<GrayImage> {
    let grid = WindowGrid::for_image(cover, params.k);
    if msg.len() > grid.len() {
        return Err(Error::CapacityExceeded {
            needed: msg.len(),
            capacity: grid.len(),
        });
    }
    let encodings = msg
        .iter()
        .enumerate()
        .map(
            |(offset, &c)| match params.charset.encode_char(c, params.k) {
                Some(e) => e,
                None => Err(Error::UnsupportedCharacter {
                    code: c,
                    offset,
                    charset: params.charset.name(),
                }),
            },
        )
        .collect::<Result<Vec<_>>>()?;

    let mut stego = fmm_image(cover);
    let pixels = stego.pixels_mut();
    for (n, e) in encodings.into_iter().enumerate() {
        let at = grid.pixel_index(n, e.position);
        pixels[at] = carry(pixels[at], e.remainder);
    }
    Ok(stego)
}

/// Outcome of a lenient extraction.
#[derive(Debug, Default)]
pub struct Extraction {
    pub message: Vec<u8>,
    /// One [`Error::CorruptWindow`] per skipped window.
    pub skipped: Vec<Error>,
}

enum WindowRead {
    Empty,
    Char(u8),
    Corrupt(Error),
}

fn read_window(stego: &GrayImage, grid: &WindowGrid, n: usize, params: &StegoParams) -> WindowRead {
    let pixels = stego.pixels();
    let mut found = None;
    let mut count = 0;
    for (pos, at) in grid.window_pixels(n) {
        let r = pixels[at] % 5;
        if r != 0 {
            count += 1;
            found.get_or_insert(crate::IndexEncoding::new(pos, r));
        }
    }
    let (row, col) = grid.coords(n);
    let corrupt = |reason: String| WindowRead::Corrupt(Error::CorruptWindow { row, col, reason });
    match (found, count) {
        (None, _) => WindowRead::Empty,
        (Some(e), 1) => match params.charset.decode_index(e, params.k) {
            Ok(c) => WindowRead::Char(c),
            Err(err) => corrupt(err.to_string()),
        },
        (Some(_), count) => corrupt(format!("{count} pixels are not multiples of 5")),
    }
}

/// Reads the message back, failing on the first corrupt window.
pub fn extract(stego: &GrayImage, params: &StegoParams) -> Result<Vec<u8>> {
    let grid = WindowGrid::for_image(stego, params.k);
    let mut message = Vec::new();
    for n in 0..grid.len() {
        match read_window(stego, &grid, n, params) {
            WindowRead::Empty => break,
            WindowRead::Char(c) => message.push(c),
            WindowRead::Corrupt(e) => return Err(e),
        }
    }
    Ok(message)
}

/// Like [`extract`], but skips corrupt windows and reports them instead.
pub fn extract_lenient(stego: &GrayImage, params: &StegoParams) -> Extraction {
    let grid = WindowGrid::for_image(stego, params.k);
    let mut out = Extraction::default();
    for n in 0..grid.len() {
        match read_window(stego, &grid, n, params) {
            WindowRead::Empty => break,
            WindowRead::Char(c) => out.message.push(c),
            WindowRead::Corrupt(e) => out.skipped.push(e),
        }
    }
    out
}

/// [`embed`] followed by PSNR against the original cover.
pub fn embed_then_report(
    cover: &GrayImage,
    msg: &[u8],
    params: &StegoParams,
) -> Result<(GrayImage, QualityReport)> {
    let stego = embed(cover, msg, params)?;
    let report = metrics::psnr(cover, &stego)?;
    Ok((stego, report))
}
