//! # stfmm
//!
//! Hide text inside 8-bit grayscale images with the five modulus method.
//!
//! Every pixel of the cover is first quantized to its nearest multiple of
//! five ([`fmm::fmm_image`]). The image is then tiled into `k×k` windows and
//! each message character is written into one window as a single pixel whose
//! residue modulo five is non-zero: the pixel's column-wise position inside
//! the window and its residue together select the character
//! ([`charset`], [`codec`]). The window edge `k` is the only key needed to
//! read the message back.
//!
//! ```
//! use stfmm::{codec, Charset, GrayImage, StegoParams};
//!
//! let cover = GrayImage::from_fn(20, 10, |x, y| (x * 7 + y * 13) as u8);
//! let params = StegoParams::for_charset(Charset::PRINTABLE95).unwrap();
//! let stego = codec::embed(&cover, b"Hi there", &params).unwrap();
//! assert_eq!(codec::extract(&stego, &params).unwrap(), b"Hi there");
//! ```

pub mod charset;
pub mod cli;
pub mod codec;
mod error;
pub mod fmm;
pub mod formats;
mod image;
pub mod metrics;

pub use charset::{window_size_for, Charset, IndexEncoding, Symbol};
pub use codec::{StegoParams, WindowGrid};
pub use error::{Error, FormatError};
pub use formats::ImageFormat;
pub use image::GrayImage;

/// Quality report with double-precision PSNR; what the CLI prints.
pub type QualityReport = metrics::Quality<f64>;
/// Single-precision variant of [`QualityReport`].
pub type QualityReportF32 = metrics::Quality<f32>;

/// The result type used throughout this crate.
pub type Result<T> = std::result::Result<T, Error>;
