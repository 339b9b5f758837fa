//! Binary PGM (P5) reading and writing for 8-bit gray images.
//!
//! The reader accepts any whitespace layout and `#` comments in the header,
//! as Netpbm allows. The writer always emits the canonical header
//! `P5\n<w> <h>\n255\n`.

use std::io::Write;
use std::path::Path;

use crate::buffer::PixelBuffer;
use crate::error::{Error, Result};

fn malformed(offset: usize, message: impl Into<String>) -> Error {
    Error::Pgm {
        offset,
        message: message.into(),
    }
}

struct HeaderCursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl HeaderCursor<'_> {
    fn skip_blank(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while self.bytes.get(self.pos).is_some_and(|&c| c != b'\n' && c != b'\r') {
                    self.pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        self.skip_blank();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(malformed(start, format!("expected {what}")));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| malformed(start, format!("{what} out of range")))
    }
}

/// Decodes a P5 image held in memory.
pub fn decode_pgm(bytes: &[u8]) -> Result<PixelBuffer> {
    if !bytes.starts_with(b"P5") {
        return Err(malformed(0, "missing P5 magic number"));
    }
    let mut cur = HeaderCursor { bytes, pos: 2 };
    let width = cur.number("width")?;
    let height = cur.number("height")?;
    cur.skip_blank();
    let maxval_at = cur.pos;
    let maxval = cur.number("maxval")?;
    if maxval != 255 {
        return Err(malformed(maxval_at, format!("maxval {maxval} unsupported, only 255")));
    }
    // exactly one whitespace byte separates the header from the raster
    match bytes.get(cur.pos) {
        Some(b) if b.is_ascii_whitespace() => cur.pos += 1,
        _ => return Err(malformed(cur.pos, "expected whitespace after maxval")),
    }
    let n = width
        .checked_mul(height)
        .filter(|&n| n > 0)
        .ok_or_else(|| malformed(2, format!("invalid dimensions {width}x{height}")))?;
    let raster = &bytes[cur.pos..];
    if raster.len() < n {
        return Err(malformed(
            bytes.len(),
            format!("truncated raster: {} of {n} bytes", raster.len()),
        ));
    }
    PixelBuffer::new(raster[..n].to_vec(), width, height)
}

/// Encodes a buffer as canonical P5.
pub fn encode_pgm(buf: &PixelBuffer) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", buf.width(), buf.height()).into_bytes();
    out.extend_from_slice(buf.pixels());
    out
}

pub fn read_pgm(path: impl AsRef<Path>) -> Result<PixelBuffer> {
    decode_pgm(&std::fs::read(path)?)
}

pub fn write_pgm(buf: &PixelBuffer, path: impl AsRef<Path>) -> Result<()> {
    let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
    file.write_all(&encode_pgm(buf))?;
    file.flush()?;
    Ok(())
}
