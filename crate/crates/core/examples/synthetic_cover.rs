//! Writes the deterministic synthetic 512×512 cover used by the test suite.
//!
//! `cargo run --example synthetic_cover -- cover.pgm`

#[path = "../tests/common/mod.rs"]
mod common;

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "cover.pgm".into());
    let img = common::natural_like(512, 512, 1);
    stfmm::formats::write_file(
        &path,
        &img,
        stfmm::ImageFormat::Pgm(stfmm::formats::PgmMode::Binary),
    )
    .expect("write cover");
}
