//! Minimal PGM reader: ASCII `P2` and binary `P5`, 8-bit samples only.

use crate::error::{Error, Result};
use crate::matrix::SymbolMatrix;

struct Header {
    binary: bool,
    width: usize,
    height: usize,
    maxval: u32,
    /// Offset of the first payload byte.
    payload: usize,
}

/// Byte cursor that skips whitespace and `#` comments between tokens.
struct Tokens<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn skip_separators(&mut self) {
        while let Some(&c) = self.data.get(self.pos) {
            if c == b'#' {
                while let Some(&c) = self.data.get(self.pos) {
                    self.pos += 1;
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                }
            } else if c.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn next(&mut self) -> Option<&'a [u8]> {
        self.skip_separators();
        let start = self.pos;
        while self
            .data
            .get(self.pos)
            .is_some_and(|c| !c.is_ascii_whitespace() && *c != b'#')
        {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.data[start..self.pos])
    }

    fn number(&mut self, what: &str) -> Result<u32> {
        let tok = self
            .next()
            .ok_or_else(|| Error::MalformedHeader(format!("missing {what}")))?;
        std::str::from_utf8(tok)
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::MalformedHeader(format!("bad {what} {:?}", String::from_utf8_lossy(tok))))
    }
}

fn parse_header(data: &[u8]) -> Result<Header> {
    let binary = match data.get(..2) {
        Some(b"P2") => false,
        Some(b"P5") => true,
        _ => {
            let magic = String::from_utf8_lossy(&data[..data.len().min(2)]).into_owned();
            return Err(Error::UnsupportedMagic(magic));
        }
    };
    let mut tokens = Tokens { data, pos: 2 };
    let width = tokens.number("width")? as usize;
    let height = tokens.number("height")? as usize;
    let maxval = tokens.number("maxval")?;
    if maxval > 255 {
        return Err(Error::MaxvalTooLarge(maxval));
    }
    if maxval == 0 {
        return Err(Error::MalformedHeader("maxval must be positive".into()));
    }
    if width == 0 || height == 0 {
        return Err(Error::ZeroDimension {
            rows: height,
            cols: width,
        });
    }
    // a single whitespace byte separates maxval from binary data
    let payload = tokens.pos + 1;
    Ok(Header {
        binary,
        width,
        height,
        maxval,
        payload,
    })
}

/// Parses a PGM image into a matrix over `maxval + 1` symbols.
pub fn load_pgm(bytes: &[u8]) -> Result<SymbolMatrix> {
    let header = parse_header(bytes)?;
    let expected = header.width * header.height;
    let pixels: Vec<u32> = if header.binary {
        let payload = bytes.get(header.payload..).unwrap_or(&[]);
        if payload.len() < expected {
            return Err(Error::TruncatedPayload {
                expected,
                got: payload.len(),
            });
        }
        payload[..expected].iter().map(|&b| u32::from(b)).collect()
    } else {
        let mut tokens = Tokens {
            data: bytes,
            pos: header.payload - 1,
        };
        let mut out = Vec::with_capacity(expected);
        while out.len() < expected {
            match tokens.next() {
                Some(tok) => {
                    let v = std::str::from_utf8(tok)
                        .ok()
                        .and_then(|s| s.parse::<u32>().ok())
                        .ok_or_else(|| Error::InvalidToken {
                            line: 0,
                            token: String::from_utf8_lossy(tok).into_owned(),
                        })?;
                    out.push(v);
                }
                None => {
                    return Err(Error::TruncatedPayload {
                        expected,
                        got: out.len(),
                    })
                }
            }
        }
        out
    };
    if let Some(&pixel) = pixels.iter().find(|&&p| p > header.maxval) {
        return Err(Error::PixelExceedsMaxval {
            pixel,
            maxval: header.maxval,
        });
    }
    SymbolMatrix::new(header.height, header.width, header.maxval + 1, pixels)
}
