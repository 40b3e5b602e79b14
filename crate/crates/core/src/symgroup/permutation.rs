use std::fmt;
use std::ops::Mul;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// An element of `S(m)` in one-line notation.
///
/// Composition is right-to-left: `(p * q)(x) = p(q(x))`, i.e. `q` acts
/// first. Every matrix identity in the crate relies on this convention.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (0..m).collect(),
        }
    }

    /// From 1-based one-line notation, `images[i-1] = σ(i)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &x in images {
            if x == 0 || x > m || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 1..={m}"
                )));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&x| x - 1).collect(),
        })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x)
        });
        Permutation { images }
    }

    /// The transposition `(a b)` in `S(m)`, 1-based; `(a a)` is the identity.
    pub fn transposition(m: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > m || b > m {
            return Err(Error::InvalidPermutation(format!(
                "({a} {b}) is not in S({m})"
            )));
        }
        let mut p = Self::identity(m);
        p.images.swap(a - 1, b - 1);
        Ok(p)
    }

    /// The adjacent transposition `s_i = (i i+1)`, 1-based.
    pub fn adjacent(m: usize, i: usize) -> Result<Self> {
        Self::transposition(m, i, i + 1)
    }

    /// From disjoint cycles written 1-based, e.g. `&[&[1, 2, 3]]` for `(123)`.
    pub fn from_cycles(m: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=m).collect();
        let mut touched = vec![false; m];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x == 0 || x > m || touched[x - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "bad cycle {cycle:?} for S({m})"
                    )));
                }
                touched[x - 1] = true;
                images[x - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `σ(x)` for 1-based `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// 1-based one-line notation.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn cycle_type(&self) -> Partition {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut lengths = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lengths).expect("cycle lengths form a partition")
    }

    /// Restriction to `S(m-1)` when `σ(m) = m`.
    pub fn restrict(&self) -> Option<Permutation> {
        let m = self.degree();
        if m == 0 || self.images[m - 1] != m - 1 {
            return None;
        }
        Some(Permutation {
            images: self.images[..m - 1].to_vec(),
        })
    }

    /// Embeds into `S(m + 1)` fixing the new last point.
    pub fn extend(&self) -> Permutation {
        let mut images = self.images.clone();
        images.push(images.len());
        Permutation { images }
    }

    /// Embeds into `S(n)`, `n ≥ m`, fixing every point above `m`.
    pub fn extend_to(&self, n: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(images.len()..n.max(images.len()));
        Permutation { images }
    }

    /// A word `[i_1, …, i_k]` with `σ = s_{i_1} s_{i_2} ⋯ s_{i_k}`, found by
    /// bubble-sorting the one-line notation. Length equals the inversion count.
    pub fn adjacent_factorization(&self) -> Vec<usize> {
        let mut word = self.images.clone();
        let mut swaps = Vec::new();
        let m = word.len();
        for pass in 0..m {
            for i in 0..m.saturating_sub(pass + 1) {
                if word[i] > word[i + 1] {
                    // σ ← σ s_{i+1}
                    word.swap(i, i + 1);
                    swaps.push(i + 1);
                }
            }
        }
        swaps.reverse();
        swaps
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] for a checked
    /// product.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("permutation degrees must agree")
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, identity printed as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut wrote = false;
        for start in 0..m {
            if seen[start] || self.images[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.images[x];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "e")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}∈S({})", self.degree())
    }
}

/// Every element of `S(m)`, in lexicographic order of one-line notation.
pub fn all_permutations(m: usize) -> Vec<Permutation> {
    let mut current: Vec<usize> = (0..m).collect();
    let mut out = vec![Permutation::from_zero_based(current.clone())];
    // next_permutation
    while let Some(i) = (1..m).rev().find(|&i| current[i - 1] < current[i]) {
        let j = (i..m)
            .rev()
            .find(|&j| current[j] > current[i - 1])
            .expect("successor exists");
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(Permutation::from_zero_based(current.clone()));
    }
    out
}

/// The standard transversal `[(1 m), (2 m), …, (m-1 m), e]` of
/// `S(m-1) ⊂ S(m)`: entry `k` (0-based) is `(k+1 m)`, the last is the
/// identity.
pub fn transversal(m: usize) -> Vec<Permutation> {
    (1..=m)
        .map(|a| Permutation::transposition(m, a, m).expect("a ≤ m"))
        .collect()
}

/// The unique factorisation `g = t_p · h` with `t_p` in [`transversal`] and
/// `h(m) = m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetDecomposition {
    /// 0-based position of `t_p` in the transversal; equals `g(m) - 1`.
    pub index: usize,
    pub representative: Permutation,
    /// `h`, still as an element of `S(m)`.
    pub subgroup: Permutation,
}

pub fn coset_decompose(g: &Permutation) -> Result<CosetDecomposition> {
    let m = g.degree();
    if m == 0 {
        return Err(Error::TooSmall {
            what: "degree",
            min: 1,
            value: 0,
        });
    }
    let a = g.apply(m);
    let t = Permutation::transposition(m, a, m)?;
    let h = &t * g;
    debug_assert_eq!(h.apply(m), m);
    Ok(CosetDecomposition {
        index: a - 1,
        representative: t,
        subgroup: h,
    })
}
