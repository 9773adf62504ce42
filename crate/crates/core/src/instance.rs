//! Instance representation and the text format it is loaded from.
//!
//! The on-disk format is ASCII text: lines whose first non-blank character is
//! `#` are comments, the first significant line is `m p` (machine and part
//! counts) and the next `m` significant lines hold `p` whitespace-separated
//! `0`/`1` tokens each.

use thiserror::Error;

/// Errors produced while parsing or validating an instance.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("line {line}: invalid token {token:?} (expected 0 or 1)")]
    InvalidToken { line: usize, token: String },
    #[error("line {line}: expected {expected} columns, found {found}")]
    ColumnCount {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("matrix contains no ones")]
    AllZero,
}

/// An immutable 0/1 machine-part incidence matrix with cached totals.
///
/// `a[i][j] = 1` means part `j` is processed on machine `i`. Loading
/// canonicalizes the orientation: when a raw matrix has more rows than
/// columns it is transposed (grouping efficacy is symmetric in machines and
/// parts) and [`Instance::transposed`] records that solutions must be
/// reported with the roles swapped.
#[derive(Clone, Debug)]
pub struct Instance {
    m: usize,
    p: usize,
    bits: Vec<u8>,
    row_ones: Vec<usize>,
    n1: usize,
    transposed: bool,
}

impl Instance {
    /// Builds an instance from explicit rows, keeping the given orientation.
    pub fn from_rows(rows: Vec<Vec<u8>>) -> Result<Self, ParseError> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(ParseError::MalformedHeader(
                "matrix must have at least one row and one column".into(),
            ));
        }
        let m = rows.len();
        let p = rows[0].len();
        let mut bits = Vec::with_capacity(m * p);
        let mut row_ones = Vec::with_capacity(m);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != p {
                return Err(ParseError::ColumnCount {
                    line: i + 1,
                    expected: p,
                    found: row.len(),
                });
            }
            let mut ones = 0;
            for &v in row {
                if v > 1 {
                    return Err(ParseError::InvalidToken {
                        line: i + 1,
                        token: v.to_string(),
                    });
                }
                ones += v as usize;
                bits.push(v);
            }
            row_ones.push(ones);
        }
        let n1: usize = row_ones.iter().sum();
        if n1 == 0 {
            return Err(ParseError::AllZero);
        }
        Ok(Instance {
            m,
            p,
            bits,
            row_ones,
            n1,
            transposed: false,
        })
    }

    /// Parses the instance text format and canonicalizes the orientation.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut significant = text
            .lines()
            .enumerate()
            .map(|(idx, line)| (idx + 1, line.trim()))
            .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

        let (_, header) = significant
            .next()
            .ok_or_else(|| ParseError::MalformedHeader("empty input".into()))?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        if dims.len() != 2 {
            return Err(ParseError::MalformedHeader(format!(
                "expected two integers, got {header:?}"
            )));
        }
        let m: usize = dims[0]
            .parse()
            .map_err(|_| ParseError::MalformedHeader(format!("bad machine count {:?}", dims[0])))?;
        let p: usize = dims[1]
            .parse()
            .map_err(|_| ParseError::MalformedHeader(format!("bad part count {:?}", dims[1])))?;
        if m == 0 || p == 0 {
            return Err(ParseError::MalformedHeader(
                "dimensions must be positive".into(),
            ));
        }

        let mut rows = Vec::with_capacity(m);
        for (line_no, line) in significant {
            if rows.len() == m {
                return Err(ParseError::RowCount {
                    expected: m,
                    found: m + 1,
                });
            }
            let mut row = Vec::with_capacity(p);
            for token in line.split_whitespace() {
                match token {
                    "0" => row.push(0u8),
                    "1" => row.push(1u8),
                    _ => {
                        return Err(ParseError::InvalidToken {
                            line: line_no,
                            token: token.to_string(),
                        })
                    }
                }
            }
            if row.len() != p {
                return Err(ParseError::ColumnCount {
                    line: line_no,
                    expected: p,
                    found: row.len(),
                });
            }
            rows.push(row);
        }
        if rows.len() != m {
            return Err(ParseError::RowCount {
                expected: m,
                found: rows.len(),
            });
        }

        if m > p {
            let cols = (0..p)
                .map(|j| (0..m).map(|i| rows[i][j]).collect())
                .collect();
            let mut inst = Instance::from_rows(cols)?;
            inst.transposed = true;
            Ok(inst)
        } else {
            Instance::from_rows(rows)
        }
    }

    /// Machine (row) count in the canonical orientation.
    pub fn machines(&self) -> usize {
        self.m
    }

    /// Part (column) count in the canonical orientation.
    pub fn parts(&self) -> usize {
        self.p
    }

    /// Total number of ones.
    pub fn n1(&self) -> usize {
        self.n1
    }

    /// Total number of zeros.
    pub fn n0(&self) -> usize {
        self.m * self.p - self.n1
    }

    /// Maximum possible number of cells, `min(m, p)`.
    pub fn max_cells(&self) -> usize {
        self.m.min(self.p)
    }

    /// True if loading transposed the raw matrix to make rows <= columns.
    pub fn transposed(&self) -> bool {
        self.transposed
    }

    /// Dimensions in the orientation of the original input.
    pub fn original_dims(&self) -> (usize, usize) {
        if self.transposed {
            (self.p, self.m)
        } else {
            (self.m, self.p)
        }
    }

    #[inline]
    pub fn one(&self, machine: usize, part: usize) -> bool {
        self.bits[machine * self.p + part] == 1
    }

    /// Number of ones in a full row.
    pub fn row_ones(&self, machine: usize) -> usize {
        self.row_ones[machine]
    }
}

/// Loads an instance from its text form (the one ingestion format).
pub fn load_instance(text: &str) -> Result<Instance, ParseError> {
    Instance::parse(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_identity_two_by_two() {
        let inst = load_instance("2 2\n1 0\n0 1").unwrap();
        assert_eq!(inst.machines(), 2);
        assert_eq!(inst.parts(), 2);
        assert_eq!(inst.n1(), 2);
        assert_eq!(inst.n0(), 2);
        assert_eq!(inst.max_cells(), 2);
        assert!(!inst.transposed());
    }

    #[test]
    fn parses_comments_and_blank_lines() {
        let text = "# comment\n\n  3 3\n# rows\n1 1 0\n0 1 1\t\n1 0 1\n\n";
        let inst = load_instance(text).unwrap();
        assert_eq!(inst.machines(), 3);
        assert_eq!(inst.n1(), 6);
    }

    #[test]
    fn transposes_tall_matrices() {
        // 3 rows x 2 cols becomes 2 x 3 with the flag set.
        let inst = load_instance("3 2\n1 0\n0 1\n1 1").unwrap();
        assert!(inst.transposed());
        assert_eq!(inst.machines(), 2);
        assert_eq!(inst.parts(), 3);
        assert_eq!(inst.original_dims(), (3, 2));
        // Entry (i=0, j=2) of the transpose is raw (2, 0) = 1.
        assert!(inst.one(0, 2));
        assert!(!inst.one(1, 0));
    }

    #[test]
    fn distinct_parse_errors() {
        assert!(matches!(
            load_instance(""),
            Err(ParseError::MalformedHeader(_))
        ));
        assert!(matches!(
            load_instance("2"),
            Err(ParseError::MalformedHeader(_))
        ));
        assert!(matches!(
            load_instance("0 2\n"),
            Err(ParseError::MalformedHeader(_))
        ));
        assert!(matches!(
            load_instance("2 2\n1 0\n0 2"),
            Err(ParseError::InvalidToken { line: 3, .. })
        ));
        assert!(matches!(
            load_instance("2 2\n1 0 1\n0 1"),
            Err(ParseError::ColumnCount { line: 2, .. })
        ));
        assert!(matches!(
            load_instance("2 2\n1 0"),
            Err(ParseError::RowCount {
                expected: 2,
                found: 1
            })
        ));
        assert!(matches!(
            load_instance("2 2\n1 0\n0 1\n1 1"),
            Err(ParseError::RowCount { .. })
        ));
        assert!(matches!(
            load_instance("2 2\n0 0\n0 0"),
            Err(ParseError::AllZero)
        ));
    }

    #[test]
    fn table_examples_have_expected_totals() {
        // 5x8 worked example.
        let t1 = "5 8\n\
                  1 1 1 1 1 0 0 1\n\
                  1 1 0 1 0 0 0 1\n\
                  0 0 1 0 1 1 1 0\n\
                  1 0 1 1 1 0 1 0\n\
                  0 0 0 0 0 0 1 1";
        let inst = load_instance(t1).unwrap();
        assert_eq!((inst.machines(), inst.parts()), (5, 8));
        assert_eq!(inst.n1(), 21);
        assert_eq!(inst.n0(), 19);

        // 5x9 worked example.
        let t3 = "5 9\n\
                  1 1 1 1 1 0 0 0 0\n\
                  1 1 1 1 0 0 0 0 1\n\
                  0 0 0 0 0 1 1 0 0\n\
                  0 1 1 0 0 0 0 1 1\n\
                  0 0 0 0 1 1 0 0 1";
        let inst = load_instance(t3).unwrap();
        assert_eq!((inst.machines(), inst.parts()), (5, 9));
        assert_eq!(inst.n1(), 19);
        assert_eq!(inst.n0(), 26);
    }
}
