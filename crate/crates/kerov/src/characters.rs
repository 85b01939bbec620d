//! Ground-truth symmetric-group characters via the Murnaghan-Nakayama rule,
//! plus hook-length dimensions.
//!
//! This module is the independent oracle for the character identity: it
//! never touches the series machinery. Character values come from the
//! signed border-strip recursion, dimensions from the hook length formula,
//! and [`normalized_on_cycle`] packages the two into the falling-factorial
//! normalization that Kerov polynomials predict:
//! `(n)_k * chi(lambda, (k, 1^(n-k))) / dim(lambda)`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rat::{factorial, falling_factorial, Rat};
use crate::young::Partition;

/// A conjugacy class of the symmetric group, recorded by its cycle lengths.
/// Same shape rules as a partition of n.
pub type CycleType = Partition;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CharacterError {
    /// The shape and the cycle type partition different integers.
    SizeMismatch { shape: u64, cycle_type: u64 },
    /// Cycle length outside 1..=n, where the oracle is undefined.
    OutOfRange { k: u64, n: u64 },
}

impl fmt::Display for CharacterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterError::SizeMismatch { shape, cycle_type } => write!(
                f,
                "shape has {shape} boxes but the cycle type permutes {cycle_type} points"
            ),
            CharacterError::OutOfRange { k, n } => {
                write!(f, "cycle length {k} is outside 1..={n}")
            }
        }
    }
}

impl std::error::Error for CharacterError {}

/// Dimension of the irreducible representation indexed by `shape`:
/// n! divided by the product of hook lengths. Always a positive integer.
pub fn hook_dimension(shape: &Partition) -> BigInt {
    let parts = shape.parts();
    let conj = shape.conjugate();
    let cols = conj.parts();
    let mut hooks = BigInt::one();
    for (i, &row) in parts.iter().enumerate() {
        for j in 1..=row {
            // arm + leg + 1, all measured from box (i+1, j)
            let hook = row - j + cols[j as usize - 1] - (i as u64 + 1) + 1;
            hooks *= BigInt::from(hook);
        }
    }
    let fact = factorial(shape.size());
    debug_assert!((&fact % &hooks).is_zero());
    fact / hooks
}

/// The integer character value chi^shape(cycle_type), by the signed
/// border-strip recursion. Cycle lengths are consumed largest-first with
/// memoization on (remaining shape, position in the cycle type).
pub fn mn_character(shape: &Partition, cycle_type: &CycleType) -> Result<BigInt, CharacterError> {
    if shape.size() != cycle_type.size() {
        return Err(CharacterError::SizeMismatch {
            shape: shape.size(),
            cycle_type: cycle_type.size(),
        });
    }
    let mut memo = HashMap::new();
    Ok(strip_recursion(
        shape.parts(),
        cycle_type.parts(),
        0,
        &mut memo,
    ))
}

/// Border strips of length t removable from a shape correspond to beta
/// numbers b with b - t >= 0 and b - t not itself a beta number; the strip's
/// height is one more than the count of beta numbers that b jumps over.
fn strip_recursion(
    shape: &[u64],
    cycles: &[u64],
    idx: usize,
    memo: &mut HashMap<(Vec<u64>, usize), BigInt>,
) -> BigInt {
    if idx == cycles.len() {
        debug_assert!(shape.is_empty());
        return BigInt::one();
    }
    let key = (shape.to_vec(), idx);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }

    let t = cycles[idx];
    let len = shape.len() as u64;
    let beta: Vec<u64> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i as u64)
        .collect();

    let mut total = BigInt::zero();
    for (pos, &b) in beta.iter().enumerate() {
        if b < t {
            continue;
        }
        let nb = b - t;
        if beta.contains(&nb) {
            continue;
        }
        let crossings = beta.iter().filter(|&&x| nb < x && x < b).count();

        let mut new_beta = beta.clone();
        new_beta[pos] = nb;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let mut new_shape: Vec<u64> = new_beta
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i as u64))
            .collect();
        while new_shape.last() == Some(&0) {
            new_shape.pop();
        }

        let sub = strip_recursion(&new_shape, cycles, idx + 1, memo);
        if crossings % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// The normalized character on a single k-cycle, scaled by the falling
/// factorial: `(n)_k * chi^shape(k, 1^(n-k)) / dim(shape)`.
pub fn normalized_on_cycle(shape: &Partition, k: u64) -> Result<Rat, CharacterError> {
    let n = shape.size();
    if k < 1 || k > n {
        return Err(CharacterError::OutOfRange { k, n });
    }
    let mut cycle_parts = vec![k];
    cycle_parts.extend(std::iter::repeat_n(1, (n - k) as usize));
    let cycle_type = Partition::new(cycle_parts).expect("(k, 1^(n-k)) is a partition");
    let chi = mn_character(shape, &cycle_type)?;
    Ok(Rat::new(
        falling_factorial(n, k) * chi,
        hook_dimension(shape),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn hook_dimension_examples() {
        assert_eq!(hook_dimension(&p(&[7])), BigInt::one());
        // hooks of (2,1) are 3,1,1: dim = 3!/3 = 2
        assert_eq!(hook_dimension(&p(&[2, 1])), BigInt::from(2));
        // hooks of (4,3,1) multiply to 576: dim = 8!/576 = 70
        assert_eq!(hook_dimension(&p(&[4, 3, 1])), BigInt::from(70));
        assert_eq!(hook_dimension(&Partition::empty()), BigInt::one());
    }

    #[test]
    fn dimension_matches_character_at_identity() {
        for n in 1..=7u64 {
            let identity = p(&vec![1; n as usize]);
            for shape in Partition::all(n) {
                assert_eq!(
                    mn_character(&shape, &identity).unwrap(),
                    hook_dimension(&shape),
                    "{shape}"
                );
            }
        }
    }

    #[test]
    fn trivial_representation_is_constant() {
        for n in 1..=6u64 {
            for mu in Partition::all(n) {
                assert_eq!(mn_character(&p(&[n]), &mu).unwrap(), BigInt::one());
            }
        }
    }

    #[test]
    fn sign_representation_on_cycles() {
        // chi^(1^n)(k, 1^(n-k)) = (-1)^(k-1)
        for n in 2..=6u64 {
            let column = p(&vec![1; n as usize]);
            for k in 1..=n {
                let mut parts = vec![k];
                parts.extend(std::iter::repeat_n(1, (n - k) as usize));
                let mu = Partition::new(parts).unwrap();
                let expected = if k % 2 == 1 { 1 } else { -1 };
                assert_eq!(
                    mn_character(&column, &mu).unwrap(),
                    BigInt::from(expected),
                    "n = {n}, k = {k}"
                );
            }
        }
    }

    #[test]
    fn standard_representation_of_s3() {
        let shape = p(&[2, 1]);
        assert_eq!(mn_character(&shape, &p(&[1, 1, 1])).unwrap(), BigInt::from(2));
        assert_eq!(mn_character(&shape, &p(&[2, 1])).unwrap(), BigInt::zero());
        assert_eq!(mn_character(&shape, &p(&[3])).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn size_mismatch_is_rejected() {
        assert_eq!(
            mn_character(&p(&[2, 1]), &p(&[2, 2])),
            Err(CharacterError::SizeMismatch {
                shape: 3,
                cycle_type: 4
            })
        );
    }

    /// Number of permutations with the given cycle type:
    /// n! / prod(i^(m_i) m_i!).
    fn class_size(mu: &Partition) -> BigInt {
        let mut mult: HashMap<u64, u64> = HashMap::new();
        for &part in mu.parts() {
            *mult.entry(part).or_insert(0) += 1;
        }
        let mut denom = BigInt::one();
        for (i, m) in mult {
            for _ in 0..m {
                denom *= BigInt::from(i);
            }
            denom *= factorial(m);
        }
        factorial(mu.size()) / denom
    }

    #[test]
    fn column_orthogonality_up_to_n_5() {
        // sum over shapes of chi^2, weighted by the class size, is n!
        for n in 1..=5u64 {
            for mu in Partition::all(n) {
                let sum: BigInt = Partition::all(n)
                    .iter()
                    .map(|shape| {
                        let chi = mn_character(shape, &mu).unwrap();
                        &chi * &chi
                    })
                    .sum();
                assert_eq!(sum * class_size(&mu), factorial(n), "mu = {mu}");
            }
        }
    }

    #[test]
    fn normalized_on_cycle_examples() {
        // single row: the normalized character is 1, so the value is (n)_k
        assert_eq!(normalized_on_cycle(&p(&[6]), 3).unwrap(), rat(6 * 5 * 4));
        assert_eq!(normalized_on_cycle(&p(&[2, 1]), 2).unwrap(), rat(0));
        assert_eq!(normalized_on_cycle(&p(&[2, 1]), 1).unwrap(), rat(3));
        assert_eq!(
            normalized_on_cycle(&p(&[2, 1]), 4),
            Err(CharacterError::OutOfRange { k: 4, n: 3 })
        );
    }
}
