use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::partition::{branching_down, Cell, Partition};
use crate::error::{Error, Result};

/// A standard Young tableau: rows and columns strictly increasing, entries
/// exactly `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    // positions[k - 1] is the cell holding k
    positions: Vec<Cell>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.size();
        let mut positions = vec![None; n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &k) in row.iter().enumerate() {
                if k == 0 || k > n || positions[k - 1].is_some() {
                    return Err(Error::InvalidPartition(format!(
                        "tableau entries must be exactly 1..={n}"
                    )));
                }
                positions[k - 1] = Some(Cell::new(r + 1, c + 1));
                let left_ok = c == 0 || row[c - 1] < k;
                let above_ok = r == 0 || rows[r - 1][c] < k;
                if !left_ok || !above_ok {
                    return Err(Error::InvalidPartition(format!(
                        "tableau {rows:?} is not standard"
                    )));
                }
            }
        }
        let positions = positions
            .into_iter()
            .map(|p| p.expect("every entry placed"))
            .collect();
        Ok(StandardTableau {
            shape,
            rows,
            positions,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.positions.len()
    }

    /// Cell containing entry `k` (1-based).
    pub fn position(&self, k: usize) -> Cell {
        self.positions[k - 1]
    }

    pub fn content(&self, k: usize) -> i64 {
        self.position(k).content()
    }

    /// Removes the largest entry.
    pub fn restrict(&self) -> Option<StandardTableau> {
        let n = self.size();
        if n == 0 {
            return None;
        }
        let cell = self.position(n);
        let mut rows = self.rows.clone();
        rows[cell.row - 1].pop();
        if rows[cell.row - 1].is_empty() {
            rows.pop();
        }
        Some(StandardTableau {
            shape: self
                .shape
                .remove_cell(cell)
                .expect("largest entry sits in a corner"),
            rows,
            positions: self.positions[..n - 1].to_vec(),
        })
    }

    /// The tableau with `i` and `i + 1` exchanged, when that is still standard.
    pub fn swap_adjacent(&self, i: usize) -> Option<StandardTableau> {
        let (a, b) = (self.position(i), self.position(i + 1));
        if a.row == b.row || a.col == b.col {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[a.row - 1][a.col - 1] = i + 1;
        rows[b.row - 1][b.col - 1] = i;
        let mut positions = self.positions.clone();
        positions.swap(i - 1, i);
        Some(StandardTableau {
            shape: self.shape.clone(),
            rows,
            positions,
        })
    }

    fn with_entry(&self, cell: Cell, shape: Partition) -> StandardTableau {
        let k = self.size() + 1;
        let mut rows = self.rows.clone();
        if cell.row > rows.len() {
            rows.push(Vec::new());
        }
        rows[cell.row - 1].push(k);
        let mut positions = self.positions.clone();
        positions.push(cell);
        StandardTableau {
            shape,
            rows,
            positions,
        }
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// All standard tableaux of shape `mu` in last-letter order: grouped by the
/// shape left after deleting `n`, groups in [`branching_down`] order,
/// recursively. This is the PRIR block order used by the Young orthogonal
/// form.
pub fn standard_tableaux(mu: &Partition) -> Vec<StandardTableau> {
    if mu.is_empty() {
        return vec![StandardTableau {
            shape: Partition::empty(),
            rows: Vec::new(),
            positions: Vec::new(),
        }];
    }
    branching_down(mu)
        .into_iter()
        .flat_map(|(alpha, cell)| {
            standard_tableaux(&alpha)
                .into_iter()
                .map(move |t| t.with_entry(cell, mu.clone()))
        })
        .collect()
}

/// Number of semistandard tableaux of shape `mu` with entries in `1..=d`,
/// i.e. the Schur-Weyl multiplicity `m_μ` of `μ` in `(C^d)^{⊗n}`.
///
/// Hook-content formula: `∏ (d + c(□)) / h(□)`; vanishes when `μ` has more
/// than `d` rows.
pub fn ssyt_count(mu: &Partition, d: usize) -> u64 {
    if mu.num_rows() > d {
        return 0;
    }
    let value = mu.cells().fold(BigRational::one(), |acc, c| {
        acc * BigRational::new(
            BigInt::from(d as i64 + c.content()),
            BigInt::from(mu.hook_length(c)),
        )
    });
    debug_assert!(value.is_integer());
    value.to_integer().to_u64().expect("SSYT count exceeds u64")
}
