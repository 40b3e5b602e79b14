use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::partition::{dimension, factorial, Partition};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Irreducible character `χ^μ` at the class of cycle type `cycle_type`,
/// by the Murnaghan–Nakayama rule.
///
/// Rim hooks are removed on the abacus: a bead at position `x` slides to
/// `x - k`, with sign `(-1)^(beads jumped)`.
pub fn character(mu: &Partition, cycle_type: &Partition) -> Result<BigInt> {
    if mu.size() != cycle_type.size() {
        return Err(Error::DegreeMismatch {
            expected: mu.size(),
            found: cycle_type.size(),
        });
    }
    let rows = mu.num_rows();
    let beads: Vec<usize> = mu
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + rows - 1 - i)
        .collect();
    let mut memo = HashMap::new();
    Ok(murnaghan_nakayama(beads, cycle_type.parts(), &mut memo))
}

fn murnaghan_nakayama(
    beads: Vec<usize>,
    cycles: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), BigInt>,
) -> BigInt {
    let Some((&k, rest)) = cycles.split_first() else {
        return BigInt::one();
    };
    let key = (beads, cycles.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let beads = &key.0;
    let mut total = BigInt::zero();
    for (idx, &x) in beads.iter().enumerate() {
        if x < k || beads.contains(&(x - k)) {
            continue;
        }
        let target = x - k;
        let jumped = beads.iter().filter(|&&b| b > target && b < x).count();
        let mut next = beads.clone();
        next[idx] = target;
        let value = murnaghan_nakayama(next, rest, memo);
        if jumped % 2 == 0 {
            total += value;
        } else {
            total -= value;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Number of permutations with cycle type `lambda`: `n! / z_λ`.
pub fn class_size(lambda: &Partition) -> BigUint {
    let mult = lambda.part_multiplicities();
    let z = mult
        .iter()
        .enumerate()
        .skip(1)
        .fold(BigUint::one(), |acc, (i, &m)| {
            acc * BigUint::from(i).pow(m as u32) * factorial(m)
        });
    factorial(lambda.size()) / z
}

/// `χ^μ((12)) / d_μ` as an exact rational.
pub fn normalized_transposition_character(mu: &Partition) -> Result<Rational> {
    let n = mu.size();
    if n < 2 {
        return Err(Error::TooSmall {
            what: "partition size",
            min: 2,
            value: n,
        });
    }
    let mut class = vec![2];
    class.extend(std::iter::repeat_n(1, n - 2));
    let chi = character(mu, &Partition::new(class)?)?;
    Ok(BigRational::new(chi, BigInt::from(dimension(mu))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_of;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_values() {
        for n in 1..=5 {
            for c in partitions_of(n) {
                assert_eq!(character(&p(&[n]), &c).unwrap(), BigInt::one());
            }
        }
        assert_eq!(
            character(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(character(&p(&[2, 1]), &p(&[3])).unwrap(), BigInt::from(-1));
        assert_eq!(
            character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            character(&Partition::empty(), &Partition::empty()).unwrap(),
            BigInt::one()
        );
        assert!(character(&p(&[2]), &p(&[1, 1, 1])).is_err());
    }

    #[test]
    fn identity_class_gives_dimension() {
        for n in 1..=8 {
            for mu in partitions_of(n) {
                let chi = character(&mu, &Partition::column(n)).unwrap();
                assert_eq!(chi, BigInt::from(dimension(&mu)));
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 0..=7 {
            let total: BigUint = partitions_of(n).iter().map(class_size).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn normalized_transposition() {
        assert_eq!(
            normalized_transposition_character(&p(&[2])).unwrap(),
            crate::rational::integer(1)
        );
        assert_eq!(
            normalized_transposition_character(&p(&[1, 1])).unwrap(),
            crate::rational::integer(-1)
        );
        assert_eq!(
            normalized_transposition_character(&p(&[2, 1])).unwrap(),
            crate::rational::integer(0)
        );
        assert!(normalized_transposition_character(&p(&[1])).is_err());
    }
}
