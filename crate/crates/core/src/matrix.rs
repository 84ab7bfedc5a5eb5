//! Square symbol matrices and the index conventions shared by every measure.
//!
//! External indices are 1-based. A side-`s` submatrix "anchored" at `(i, j)`
//! has `(i, j)` as its bottom-right corner and covers rows `i-s+1..=i` and
//! columns `j-s+1..=j`.

use crate::error::{Error, Result};

/// Integer code of a symbol, always `< alphabet_size`.
pub type Symbol = u32;

/// A grid of alphabet-coded symbols in row-major order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolMatrix {
    rows: usize,
    cols: usize,
    alphabet: u32,
    symbols: Vec<Symbol>,
}

impl SymbolMatrix {
    pub fn new(rows: usize, cols: usize, alphabet: u32, symbols: Vec<Symbol>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::ZeroDimension { rows, cols });
        }
        if alphabet == 0 {
            return Err(Error::EmptyAlphabet);
        }
        let expected = rows * cols;
        if symbols.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                got: symbols.len(),
            });
        }
        if let Some(&bad) = symbols.iter().find(|&&s| s >= alphabet) {
            return Err(Error::SymbolOutOfRange {
                symbol: bad.into(),
                alphabet,
            });
        }
        Ok(Self {
            rows,
            cols,
            alphabet,
            symbols,
        })
    }

    /// Builds a square matrix from nested rows; convenient in tests and examples.
    pub fn from_rows<R: AsRef<[Symbol]>>(alphabet: u32, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let symbols: Vec<Symbol> = rows.iter().flat_map(|r| r.as_ref().iter().copied()).collect();
        Self::new(rows.len(), cols, alphabet, symbols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn alphabet_size(&self) -> u32 {
        self.alphabet
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Side length, or an error when the matrix is rectangular.
    pub fn side(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Element at 1-based `(i, j)`.
    ///
    /// Panics when out of range.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Symbol {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "index ({i},{j}) outside {}×{}",
            self.rows,
            self.cols
        );
        self.symbols[(i - 1) * self.cols + (j - 1)]
    }

    /// Row `r` (0-based) as a slice.
    #[inline]
    pub(crate) fn row0(&self, r: usize) -> &[Symbol] {
        &self.symbols[r * self.cols..(r + 1) * self.cols]
    }

    /// Whether the side-`s` window anchored at 1-based `(i, j)` lies inside the matrix.
    pub fn window_fits(&self, i: usize, j: usize, s: usize) -> bool {
        s >= 1 && s <= i && s <= j && i <= self.rows && j <= self.cols
    }

    pub(crate) fn check_window(&self, i: usize, j: usize, s: usize) -> Result<()> {
        if self.window_fits(i, j, s) {
            Ok(())
        } else {
            Err(Error::WindowOutOfBounds {
                i,
                j,
                s,
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Copy of the side-`s` window anchored at `(i, j)`, row-major.
    pub fn window(&self, i: usize, j: usize, s: usize) -> Result<Vec<Symbol>> {
        self.check_window(i, j, s)?;
        let mut out = Vec::with_capacity(s * s);
        for r in (i - s)..i {
            out.extend_from_slice(&self.row0(r)[j - s..j]);
        }
        Ok(out)
    }

    /// Reinterprets the matrix over a larger alphabet. Codes are unchanged.
    pub fn widen_alphabet(mut self, alphabet: u32) -> Result<Self> {
        if alphabet < self.alphabet {
            let max = self.symbols.iter().copied().max().unwrap_or(0);
            if max >= alphabet {
                return Err(Error::SymbolOutOfRange {
                    symbol: max.into(),
                    alphabet,
                });
            }
        }
        if alphabet == 0 {
            return Err(Error::EmptyAlphabet);
        }
        self.alphabet = alphabet;
        Ok(self)
    }
}

/// Validates raw integer data into a [`SymbolMatrix`].
pub fn validate_matrix(rows: usize, cols: usize, alphabet: u32, symbols: &[i64]) -> Result<SymbolMatrix> {
    if rows == 0 || cols == 0 {
        return Err(Error::ZeroDimension { rows, cols });
    }
    if alphabet == 0 {
        return Err(Error::EmptyAlphabet);
    }
    if symbols.len() != rows * cols {
        return Err(Error::LengthMismatch {
            expected: rows * cols,
            got: symbols.len(),
        });
    }
    let mut codes = Vec::with_capacity(symbols.len());
    for &v in symbols {
        if v < 0 || v >= i64::from(alphabet) {
            return Err(Error::SymbolOutOfRange { symbol: v, alphabet });
        }
        codes.push(v as Symbol);
    }
    SymbolMatrix::new(rows, cols, alphabet, codes)
}

/// Largest side worth trying at position `(i, j)` of an `n×n` matrix against an `m×m` one.
///
/// The anchored window cannot exceed `min(i, j)` in A, and no square larger
/// than `m` fits in B.
pub fn index_bounds(i: usize, j: usize, n: usize, m: usize) -> usize {
    debug_assert!((1..=n).contains(&i) && (1..=n).contains(&j));
    i.min(j).min(m)
}

/// Smallest side whose area reaches `alpha`, i.e. `ceil(sqrt(alpha))`.
pub fn min_side(alpha: u64) -> usize {
    let mut s = (alpha as f64).sqrt() as u64;
    while s * s < alpha {
        s += 1;
    }
    while s > 0 && (s - 1) * (s - 1) >= alpha {
        s -= 1;
    }
    s.max(1) as usize
}
