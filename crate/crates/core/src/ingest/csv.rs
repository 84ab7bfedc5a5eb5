//! Integer grids separated by commas and/or whitespace. Lines starting with
//! `#` are comments; blank lines are ignored.

use crate::error::{Error, Result};
use crate::matrix::SymbolMatrix;

/// Parses a grid; the alphabet size is inferred as `max + 1`.
pub fn load_csv(text: &str) -> Result<SymbolMatrix> {
    let mut symbols = Vec::new();
    let mut cols = None;
    let mut rows = 0usize;
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut count = 0;
        for token in trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            let value: i64 = token.parse().map_err(|_| Error::InvalidToken {
                line: line_no,
                token: token.to_string(),
            })?;
            if value < 0 {
                return Err(Error::NegativeSymbol {
                    line: line_no,
                    token: token.to_string(),
                });
            }
            let value = u32::try_from(value).map_err(|_| Error::InvalidToken {
                line: line_no,
                token: token.to_string(),
            })?;
            symbols.push(value);
            count += 1;
        }
        rows += 1;
        match cols {
            None => cols = Some(count),
            Some(expected) if expected != count => {
                return Err(Error::JaggedRow {
                    row: rows,
                    got: count,
                    expected,
                })
            }
            Some(_) => {}
        }
    }
    let cols = cols.ok_or(Error::EmptyInput)?;
    let max = symbols.iter().copied().max().ok_or(Error::EmptyInput)?;
    let alphabet = max.checked_add(1).ok_or(Error::InvalidToken {
        line: 0,
        token: max.to_string(),
    })?;
    SymbolMatrix::new(rows, cols, alphabet, symbols)
}

/// Writes `matrix` as comma-separated rows, preceded by `# `-prefixed header lines.
pub fn render_csv(matrix: &SymbolMatrix, header: &[String]) -> String {
    let mut out = String::new();
    for line in header {
        out.push_str("# ");
        out.push_str(line);
        out.push('\n');
    }
    for row in matrix.symbols().chunks(matrix.cols()) {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    #[test]
    fn parses_commas_and_whitespace() {
        let m = load_csv("1,2\n3,4\n").unwrap();
        assert_eq!(m.symbols(), &[1, 2, 3, 4]);
        assert_eq!(m.alphabet_size(), 5);
        let m = load_csv("# meta\n\n1 2\t3\n4, 5 ,6\n\n").unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 3));
    }

    #[test]
    fn errors() {
        assert_eq!(
            load_csv("1,2\n3\n").unwrap_err().to_string(),
            "row 2 has 1 column, expected 2"
        );
        assert!(load_csv("1, -2\n")
            .unwrap_err()
            .to_string()
            .starts_with("negative symbol"));
        assert!(matches!(load_csv("1, 2.5\n"), Err(Error::InvalidToken { line: 1, .. })));
        assert!(matches!(load_csv("\n# only comments\n"), Err(Error::EmptyInput)));
        assert!(matches!(load_csv(""), Err(Error::EmptyInput)));
    }

    proptest! {
        #[test]
        fn render_then_load_round_trips(
            rows in 1usize..6,
            cols in 1usize..6,
            seed in proptest::collection::vec(0u32..20, 36),
        ) {
            let mut symbols: Vec<u32> = seed.into_iter().take(rows * cols).collect();
            symbols.resize(rows * cols, 0);
            let alphabet = symbols.iter().max().unwrap() + 1;
            let m = SymbolMatrix::new(rows, cols, alphabet, symbols).unwrap();
            let text = render_csv(&m, &["seed=1".to_string()]);
            prop_assert_eq!(load_csv(&text).unwrap(), m);
        }
    }
}
