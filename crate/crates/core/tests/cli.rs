use std::path::Path;
use std::process::{Command, Output};

use stfmm::formats::{self, ImageFormat, PgmMode};
use stfmm::{codec, fmm, Charset, GrayImage, StegoParams};

mod common;

fn stfmm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stfmm"))
        .args(args)
        .output()
        .expect("run stfmm")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn write(dir: &Path, name: &str, img: &GrayImage, format: ImageFormat) -> std::path::PathBuf {
    let path = dir.join(name);
    formats::write_file(&path, img, format).unwrap();
    path
}

#[test]
fn embed_extract_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let cover_img = common::natural_like(120, 80, 5);
    let text = "A Steganography Algorithm for Hiding Text in Image Using Five Modulus Method.";
    let text_file = dir.path().join("msg.txt");
    std::fs::write(&text_file, text).unwrap();

    for (name, format) in [
        ("cover.pgm", ImageFormat::Pgm(PgmMode::Binary)),
        ("cover_ascii.pgm", ImageFormat::Pgm(PgmMode::Ascii)),
        ("cover.bmp", ImageFormat::Bmp),
    ] {
        let cover = write(dir.path(), name, &cover_img, format);
        let stego = dir.path().join(format!("stego_{name}"));
        let out = stfmm(&["embed", p(&cover), p(&stego), "--text-file", p(&text_file)]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        let diag = String::from_utf8_lossy(&out.stderr);
        assert!(diag.contains("window=5"), "{diag}");
        assert!(diag.contains("psnr="), "{diag}");

        let bytes = std::fs::read(&stego).unwrap();
        assert_eq!(ImageFormat::detect(&bytes).unwrap(), format);

        let out = stfmm(&["extract", p(&stego), "--window", "5"]);
        assert_eq!(code(&out), 0);
        assert_eq!(out.stdout, text.as_bytes());

        // Same result as the library.
        let params = StegoParams::for_charset(Charset::PRINTABLE95).unwrap();
        let expected = codec::embed(&cover_img, text.as_bytes(), &params).unwrap();
        assert_eq!(formats::decode(&bytes).unwrap().0, expected);
    }
}

#[test]
fn lower26_with_inline_text() {
    let dir = tempfile::tempdir().unwrap();
    let cover = write(
        dir.path(),
        "c.pgm",
        &common::natural_like(60, 30, 9),
        ImageFormat::Pgm(PgmMode::Binary),
    );
    let stego = dir.path().join("s.pgm");
    let out = stfmm(&[
        "embed",
        p(&cover),
        p(&stego),
        "--charset",
        "lower26",
        "--text",
        "To be or not to be",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let out = stfmm(&["extract", p(&stego), "--charset", "lower26"]);
    assert_eq!(out.stdout, b"to be or not to be");
}

#[test]
fn fmm_capacity_and_psnr() {
    let dir = tempfile::tempdir().unwrap();
    let img = common::natural_like(512, 512, 1);
    let input = write(dir.path(), "in.bmp", &img, ImageFormat::Bmp);
    let output = dir.path().join("out.bmp");
    assert_eq!(code(&stfmm(&["fmm", p(&input), p(&output)])), 0);
    let (quantized, format) = formats::read_file(&output).unwrap();
    assert_eq!(format, ImageFormat::Bmp);
    assert_eq!(quantized, fmm::fmm_image(&img));

    let out = stfmm(&["capacity", p(&input), "--window", "5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "10404");

    let out = stfmm(&["psnr", p(&input), p(&input)]);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "mse=0.0000 psnr=inf"
    );
    let out = stfmm(&["psnr", p(&input), p(&output)]);
    let line = String::from_utf8_lossy(&out.stdout).trim().to_string();
    let q = stfmm::metrics::psnr(&img, &quantized).unwrap();
    assert_eq!(line, format!("mse={:.4} psnr={:.4}", q.mse, q.psnr));
}

#[test]
fn sweep_emits_csv() {
    let dir = tempfile::tempdir().unwrap();
    let cover = write(
        dir.path(),
        "c.pgm",
        &common::natural_like(512, 512, 1),
        ImageFormat::Pgm(PgmMode::Binary),
    );
    let out = stfmm(&["sweep", p(&cover), "--sizes", "1K,2K,4K,6K,8K,10K"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("size_bytes,psnr_db"));
    let rows: Vec<(usize, f64)> = lines
        .map(|l| {
            let (s, v) = l.split_once(',').unwrap();
            assert_eq!(v.split_once('.').unwrap().1.len(), 4, "{l}");
            (s.parse().unwrap(), v.parse().unwrap())
        })
        .collect();
    let sizes: Vec<usize> = rows.iter().map(|r| r.0).collect();
    assert_eq!(sizes, [1024, 2048, 4096, 6144, 8192, 10240]);
    for w in rows.windows(2) {
        assert!(w[1].1 <= w[0].1, "{rows:?}");
    }

    // Byte-for-byte reproducible.
    let again = stfmm(&["sweep", p(&cover), "--sizes", "1K,2K,4K,6K,8K,10K"]);
    assert_eq!(String::from_utf8(again.stdout).unwrap(), text);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cover = write(
        dir.path(),
        "c.pgm",
        &common::natural_like(512, 512, 1),
        ImageFormat::Pgm(PgmMode::Binary),
    );
    let small = write(
        dir.path(),
        "s.pgm",
        &common::natural_like(10, 10, 1),
        ImageFormat::Pgm(PgmMode::Binary),
    );
    let out_path = dir.path().join("o.pgm");

    // Usage.
    assert_eq!(code(&stfmm(&[])), 1);
    assert_eq!(code(&stfmm(&["embed", p(&cover), p(&out_path)])), 1);
    assert_eq!(
        code(&stfmm(&["extract", p(&cover), "--charset", "klingon"])),
        1
    );
    assert_eq!(code(&stfmm(&["extract", p(&cover), "--window", "4"])), 1);
    assert_eq!(code(&stfmm(&["--help"])), 0);

    // I/O and format.
    assert_eq!(
        code(&stfmm(&["extract", p(&dir.path().join("missing.pgm"))])),
        2
    );
    let junk = dir.path().join("junk.pgm");
    std::fs::write(&junk, b"P6 1 1 255 000").unwrap();
    assert_eq!(code(&stfmm(&["capacity", p(&junk)])), 2);
    assert_eq!(code(&stfmm(&["psnr", p(&cover), p(&small)])), 2);

    // Capacity: 11 KB does not fit 10404 windows.
    let out = stfmm(&["sweep", p(&cover), "--sizes", "1K,11K"]);
    assert_eq!(code(&out), 3);
    assert!(out.stdout.is_empty());
    assert_eq!(
        code(&stfmm(&[
            "embed",
            p(&small),
            p(&out_path),
            "--text",
            "hello"
        ])),
        3
    );

    // Unsupported character.
    let out = stfmm(&["embed", p(&cover), p(&out_path), "--text", "tab\there"]);
    assert_eq!(code(&out), 4);
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset 3"));

    // Corrupt stego.
    let mut bad = GrayImage::new(10, 5, vec![100; 50]).unwrap();
    bad.set(0, 0, 101);
    bad.set(1, 1, 102);
    bad.set(5, 0, 101);
    let bad_path = write(
        dir.path(),
        "bad.pgm",
        &bad,
        ImageFormat::Pgm(PgmMode::Binary),
    );
    assert_eq!(code(&stfmm(&["extract", p(&bad_path)])), 5);
    let out = stfmm(&["extract", p(&bad_path), "--lenient"]);
    assert_eq!(code(&out), 0);
    assert_eq!(out.stdout, b" ");
    assert!(
        String::from_utf8_lossy(&out.stderr).contains("warning: corrupt window at row 0, column 0")
    );
}
