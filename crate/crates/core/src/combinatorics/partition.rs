use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A Young diagram `μ ⊢ n`, stored as weakly decreasing positive parts.
///
/// The empty partition (`n = 0`) is legal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box of a Young diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Cell { row, col }
    }

    /// `col - row`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not non-increasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `[n]` (empty for `n = 0`).
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `[1^n]`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `n`, the number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of 1-based row `row`, zero past the last row.
    pub fn row_length(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_length(cell.row)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.row_length(1);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
    }

    pub fn hook_length(&self, cell: Cell) -> usize {
        let arm = self.row_length(cell.row) - cell.col;
        let leg = self.parts[cell.row..]
            .iter()
            .filter(|&&p| p >= cell.col)
            .count();
        arm + leg + 1
    }

    /// Corner cells, ordered from the bottom row upwards.
    ///
    /// Removing them in this order yields the subgroup labels in
    /// reverse-lexicographic order.
    pub fn removable_cells(&self) -> Vec<Cell> {
        (1..=self.num_rows())
            .rev()
            .filter(|&r| self.row_length(r) > self.row_length(r + 1))
            .map(|r| Cell::new(r, self.row_length(r)))
            .collect()
    }

    /// Outer corners, ordered from the top row downwards.
    pub fn addable_cells(&self) -> Vec<Cell> {
        (1..=self.num_rows() + 1)
            .filter(|&r| r == 1 || self.row_length(r - 1) > self.row_length(r))
            .map(|r| Cell::new(r, self.row_length(r) + 1))
            .collect()
    }

    pub fn remove_cell(&self, cell: Cell) -> Result<Partition> {
        if !self.removable_cells().contains(&cell) {
            return Err(Error::InvalidPartition(format!(
                "{cell} is not a corner of {self}"
            )));
        }
        let mut parts = self.parts.clone();
        parts[cell.row - 1] -= 1;
        if parts[cell.row - 1] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn add_cell(&self, cell: Cell) -> Result<Partition> {
        if !self.addable_cells().contains(&cell) {
            return Err(Error::InvalidPartition(format!(
                "{cell} cannot be added to {self}"
            )));
        }
        let mut parts = self.parts.clone();
        if cell.row > parts.len() {
            parts.push(1);
        } else {
            parts[cell.row - 1] += 1;
        }
        Ok(Partition { parts })
    }

    /// Multiplicities `m_i` of each part size `i`, indexed from 1.
    pub(crate) fn part_multiplicities(&self) -> Vec<usize> {
        let mut mult = vec![0; self.row_length(1) + 1];
        for &p in &self.parts {
            mult[p] += 1;
        }
        mult
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses comma-separated parts such as `2,1` (brackets optional).
/// An empty string or `[]` is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s
            .trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn extend(
        remaining: usize,
        max_part: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in (1..=remaining.min(max_part)).rev() {
            prefix.push(first);
            extend(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, n, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `d_μ = n! / ∏ hooks`.
pub fn dimension(mu: &Partition) -> usize {
    let hooks = mu.cells().fold(BigUint::one(), |acc, c| {
        acc * BigUint::from(mu.hook_length(c))
    });
    (factorial(mu.size()) / hooks)
        .to_usize()
        .expect("irrep dimension exceeds usize")
}

/// Pairs `(α, removed cell)` for every `α = μ - □`, bottom corner first.
///
/// For `S(m-1) ⊂ S(m)` each `α` appears once: the restriction is
/// multiplicity-free.
pub fn branching_down(mu: &Partition) -> Vec<(Partition, Cell)> {
    mu.removable_cells()
        .into_iter()
        .map(|c| (mu.remove_cell(c).expect("corner is removable"), c))
        .collect()
}

/// Pairs `(μ, added cell)` for every `μ = β + □`, in reverse-lexicographic
/// order of `μ`.
pub fn branching_up(beta: &Partition) -> Vec<(Partition, Cell)> {
    beta.addable_cells()
        .into_iter()
        .map(|c| (beta.add_cell(c).expect("outer corner is addable"), c))
        .collect()
}

/// The cell `μ \ α`, if `α` is a one-cell restriction of `μ`.
pub fn removed_cell(mu: &Partition, alpha: &Partition) -> Result<Cell> {
    branching_down(mu)
        .into_iter()
        .find(|(a, _)| a == alpha)
        .map(|(_, c)| c)
        .ok_or_else(|| Error::NotABranch {
            mu: mu.clone(),
            alpha: alpha.clone(),
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn partitions_small() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(1), vec![p(&[1])]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(8).len(), 22);
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&p(&[4])), 1);
        assert_eq!(dimension(&p(&[2, 1])), 2);
        assert_eq!(dimension(&p(&[3, 2])), 5);
        assert_eq!(dimension(&Partition::empty()), 1);
    }

    #[test]
    fn branching() {
        let down = branching_down(&p(&[2, 1]));
        assert_eq!(
            down,
            vec![(p(&[2]), Cell::new(2, 1)), (p(&[1, 1]), Cell::new(1, 2))]
        );
        assert_eq!(branching_down(&p(&[5])), vec![(p(&[4]), Cell::new(1, 5))]);
        assert_eq!(
            branching_down(&p(&[2, 2])),
            vec![(p(&[2, 1]), Cell::new(2, 2))]
        );
        assert_eq!(
            branching_down(&p(&[1])),
            vec![(Partition::empty(), Cell::new(1, 1))]
        );

        let up: Vec<_> = branching_up(&p(&[2, 1]))
            .into_iter()
            .map(|(m, _)| m)
            .collect();
        assert_eq!(up, vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("2,1".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("[3, 1]".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 1, 1]).to_string(), "[3,1,1]");
    }

    #[test]
    fn conjugate_and_hooks() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[3, 1]).hook_length(Cell::new(1, 1)), 4);
        assert_eq!(
            removed_cell(&p(&[2, 1]), &p(&[2])).unwrap(),
            Cell::new(2, 1)
        );
        assert!(removed_cell(&p(&[2, 1]), &p(&[3])).is_err());
    }
}
