//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 I/O or format error, 3 capacity
//! exceeded, 4 unsupported character, 5 corrupt stego image.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::codec::{self, StegoParams};
use crate::formats::{self, ImageFormat};
use crate::{fmm, metrics, Charset, Error, GrayImage};

#[derive(Debug, Parser)]
#[command(
    name = "stfmm",
    version,
    about = "Hide text in grayscale images with the five modulus method"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Quantize every pixel to a multiple of five.
    Fmm { input: PathBuf, output: PathBuf },
    /// Hide text in a cover image. PSNR against the cover goes to stderr.
    Embed {
        cover: PathBuf,
        output: PathBuf,
        #[command(flatten)]
        text: TextSource,
        #[command(flatten)]
        key: KeyArgs,
    },
    /// Print the hidden text to stdout.
    Extract {
        stego: PathBuf,
        #[command(flatten)]
        key: KeyArgs,
        /// Skip corrupt windows with a warning instead of failing.
        #[arg(long)]
        lenient: bool,
    },
    /// Print how many characters an image can hold.
    Capacity {
        image: PathBuf,
        #[command(flatten)]
        key: KeyArgs,
    },
    /// Print MSE and PSNR between two images.
    Psnr { a: PathBuf, b: PathBuf },
    /// Embed generated text of each size and print `size_bytes,psnr_db` rows.
    Sweep {
        cover: PathBuf,
        /// Comma-separated payload sizes in bytes; a `K`/`KB` suffix means ×1024.
        #[arg(long, value_delimiter = ',', value_parser = parse_size, required = true)]
        sizes: Vec<usize>,
        #[command(flatten)]
        key: KeyArgs,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct TextSource {
    /// Message given inline.
    #[arg(long)]
    pub text: Option<String>,
    /// Message read from a file, byte for byte.
    #[arg(long)]
    pub text_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct KeyArgs {
    /// Window edge; this is the secret key. Defaults to the smallest window
    /// that fits the charset.
    #[arg(long)]
    pub window: Option<usize>,
    #[arg(long, default_value = "printable95")]
    pub charset: Charset,
}

/// Parses `1024`, `1K`, `10KB` (case-insensitive).
pub fn parse_size(s: &str) -> Result<usize, String> {
    let t = s.trim();
    let upper = t.to_ascii_uppercase();
    let (digits, scale) = if let Some(d) = upper.strip_suffix("KB") {
        (d, 1024)
    } else if let Some(d) = upper.strip_suffix('K') {
        (d, 1024)
    } else {
        (upper.as_str(), 1)
    };
    digits
        .trim()
        .parse::<usize>()
        .ok()
        .and_then(|n| n.checked_mul(scale))
        .ok_or_else(|| format!("invalid size `{s}`"))
}

/// Process exit status for each failure class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Usage = 1,
    Input = 2,
    Capacity = 3,
    Unsupported = 4,
    Corrupt = 5,
}

#[derive(Debug)]
pub struct CliError {
    pub status: Status,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Format(_) | Error::Io(_) | Error::DimensionMismatch(..) => Status::Input,
            Error::CapacityExceeded { .. } => Status::Capacity,
            Error::UnsupportedCharacter { .. } => Status::Unsupported,
            Error::CorruptWindow { .. }
            | Error::IndexOutOfRange { .. }
            | Error::InvalidEncoding { .. } => Status::Corrupt,
            Error::InvalidWindow { .. } => Status::Usage,
        };
        CliError {
            status,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e).into()
    }
}

fn read_image(path: &Path) -> Result<(GrayImage, ImageFormat), CliError> {
    formats::read_file(path).map_err(|e| CliError {
        message: format!("{}: {e}", path.display()),
        ..e.into()
    })
}

fn params(key: &KeyArgs, diag: &mut impl Write) -> Result<StegoParams, CliError> {
    let k = match key.window {
        Some(k) => k,
        None => {
            let k = key.charset.window_size();
            writeln!(diag, "window={k} (default for {})", key.charset)?;
            k
        }
    };
    Ok(StegoParams::new(k, key.charset)?)
}

const PANGRAM: &[u8] = b"The quick brown fox jumps over the lazy dog. ";

/// Repeating pangram cut to `len` bytes, restricted to what `charset` carries.
pub fn sweep_text(charset: Charset, len: usize) -> Vec<u8> {
    let base: Vec<u8> = PANGRAM
        .iter()
        .map(|&c| {
            if charset.has_space_sentinel() {
                c.to_ascii_lowercase()
            } else {
                c
            }
        })
        .filter(|&c| charset.char_to_index(c).is_some())
        .collect();
    base.iter().copied().cycle().take(len).collect()
}

/// Runs one parsed command. `out` receives results, `diag` receives
/// diagnostics and warnings.
pub fn run(cli: Cli, out: &mut impl Write, diag: &mut impl Write) -> Result<(), CliError> {
    match cli.command {
        Command::Fmm { input, output } => {
            let (img, format) = read_image(&input)?;
            formats::write_file(&output, &fmm::fmm_image(&img), format)?;
        }
        Command::Embed {
            cover,
            output,
            text,
            key,
        } => {
            let msg = match (text.text, text.text_file) {
                (Some(t), _) => t.into_bytes(),
                (None, Some(path)) => std::fs::read(&path).map_err(|e| CliError {
                    message: format!("{}: {e}", path.display()),
                    ..CliError::from(e)
                })?,
                (None, None) => unreachable!("clap enforces one text source"),
            };
            let p = params(&key, diag)?;
            let (img, format) = read_image(&cover)?;
            let (stego, report) = codec::embed_then_report(&img, &msg, &p)?;
            formats::write_file(&output, &stego, format)?;
            writeln!(
                diag,
                "embedded {} of {} characters; {report}",
                msg.len(),
                codec::capacity(&img, p.k())
            )?;
        }
        Command::Extract {
            stego,
            key,
            lenient,
        } => {
            let p = params(&key, diag)?;
            let (img, _) = read_image(&stego)?;
            let message = if lenient {
                let extraction = codec::extract_lenient(&img, &p);
                for e in &extraction.skipped {
                    writeln!(diag, "warning: {e}")?;
                }
                extraction.message
            } else {
                codec::extract(&img, &p)?
            };
            out.write_all(&message)?;
        }
        Command::Capacity { image, key } => {
            let p = params(&key, diag)?;
            let (img, _) = read_image(&image)?;
            writeln!(out, "{}", codec::capacity(&img, p.k()))?;
        }
        Command::Psnr { a, b } => {
            let (a, _) = read_image(&a)?;
            let (b, _) = read_image(&b)?;
            writeln!(out, "{}", metrics::psnr(&a, &b)?)?;
        }
        Command::Sweep { cover, sizes, key } => {
            let p = params(&key, diag)?;
            let (img, _) = read_image(&cover)?;
            let capacity = codec::capacity(&img, p.k());
            if let Some(&needed) = sizes.iter().find(|&&s| s > capacity) {
                return Err(Error::CapacityExceeded { needed, capacity }.into());
            }
            writeln!(out, "size_bytes,psnr_db")?;
            for size in sizes {
                let text = sweep_text(p.charset(), size);
                let (_, report) = codec::embed_then_report(&img, &text, &p)?;
                if report.is_lossless() {
                    writeln!(out, "{size},inf")?;
                } else {
                    writeln!(out, "{size},{:.4}", report.psnr)?;
                }
            }
        }
    }
    out.flush()?;
    Ok(())
}

/// Parses `args`, runs the command against the process's stdio and maps the
/// outcome to an exit code.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(Status::Usage as u8)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    match run(cli, &mut stdout.lock(), &mut stderr.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.status as u8)
        }
    }
}
