//! Exact irreducible character values of S_n along two independent routes:
//! two-row characters extracted as coefficients of a bivariate generating
//! polynomial, and a rim-hook recursion that works for every shape. Kostka
//! numbers and the decomposition of Young permutation modules complete the
//! character-level toolkit.

use std::collections::HashMap;

use num_rational::Ratio;

use crate::cycle_type::CycleType;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::perm::factorial;
use crate::poly::SparseBivariatePoly;

/// The generating polynomial `(x1 - x2) * prod_l (x1^l + x2^l)^{i_l}` of a
/// cycle type with multiplicities `i_l`. Every term is homogeneous of total
/// degree `n + 1`, so at most `n + 2` terms survive; the value of the
/// two-row character `(n-m, m)` on the class is the coefficient of
/// `x1^{n-m+1} * x2^m`.
///
/// Factors are multiplied in increasing cycle length with no pruning, so
/// the homogeneity invariant stays observable on the result.
pub fn frobenius_poly(ct: &CycleType) -> Result<SparseBivariatePoly> {
    let mut poly =
        SparseBivariatePoly::monomial(1, 0, 1).add(&SparseBivariatePoly::monomial(0, 1, -1))?;
    for len in 1..=ct.degree() {
        let factor = SparseBivariatePoly::monomial(len as u32, 0, 1)
            .add(&SparseBivariatePoly::monomial(0, len as u32, 1))?;
        for _ in 0..ct.multiplicity(len) {
            poly = poly.mul(&factor)?;
        }
    }
    Ok(poly)
}

/// Character of the two-row shape `(n - m, m)` on the class of `ct`,
/// read off [`frobenius_poly`]. Needs `0 <= m <= n/2`; `m = 0` is the
/// trivial character and returns 1.
pub fn two_row_char(ct: &CycleType, m: usize) -> Result<i64> {
    let n = ct.degree();
    if m > n / 2 {
        return Err(Error::InvalidTwoRowShape { n, m });
    }
    if m == 0 {
        return Ok(1);
    }
    let poly = frobenius_poly(ct)?;
    let coefficient = poly.coefficient((n - m + 1) as u32, m as u32);
    i64::try_from(coefficient).map_err(|_| Error::Overflow("character value"))
}

/// Single-coefficient fast path for [`two_row_char`]: terms whose
/// `x2`-degree already exceeds `m` can never reach `x2^m` again because
/// every factor only raises the `x2`-degree, so they are dropped after
/// each multiplication. Agrees with the full expansion on all inputs.
pub fn two_row_char_pruned(ct: &CycleType, m: usize) -> Result<i64> {
    let n = ct.degree();
    if m > n / 2 {
        return Err(Error::InvalidTwoRowShape { n, m });
    }
    if m == 0 {
        return Ok(1);
    }
    let mut poly =
        SparseBivariatePoly::monomial(1, 0, 1).add(&SparseBivariatePoly::monomial(0, 1, -1))?;
    poly.truncate_d2(m as u32);
    for len in 1..=n {
        let factor = SparseBivariatePoly::monomial(len as u32, 0, 1)
            .add(&SparseBivariatePoly::monomial(0, len as u32, 1))?;
        for _ in 0..ct.multiplicity(len) {
            poly = poly.mul(&factor)?;
            poly.truncate_d2(m as u32);
        }
    }
    let coefficient = poly.coefficient((n - m + 1) as u32, m as u32);
    i64::try_from(coefficient).map_err(|_| Error::Overflow("character value"))
}

/// Character of an arbitrary shape on the class of `ct`, by the signed
/// rim-hook recursion. Entirely independent of [`frobenius_poly`], which
/// makes it the oracle for the two-row route.
///
/// Cycles are consumed largest-first and partial results are memoized on
/// (remaining shape, recursion depth); the memo table lives inside a
/// single call, so concurrent calls share nothing.
pub fn mn_character(shape: &Partition, ct: &CycleType) -> i64 {
    assert_eq!(shape.n(), ct.degree(), "shape and cycle type must describe the same S_n");
    let cycles = ct.to_partition();
    let mut memo = HashMap::new();
    rim_hook_sum(shape.parts(), cycles.parts(), 0, &mut memo)
}

fn rim_hook_sum(
    shape: &[usize],
    cycles: &[usize],
    depth: usize,
    memo: &mut HashMap<(Vec<usize>, usize), i64>,
) -> i64 {
    if depth == cycles.len() {
        debug_assert!(shape.is_empty());
        return 1;
    }
    if shape.is_empty() {
        return 0;
    }
    let key = (shape.to_vec(), depth);
    if let Some(&cached) = memo.get(&key) {
        return cached;
    }
    let hook = cycles[depth];
    let rows = shape.len();
    // First-column hook lengths: distinct and strictly decreasing.
    // Removing a rim hook of size `hook` means lowering one of them by
    // `hook` without colliding; the sign is (-1)^(entries jumped over).
    let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &part)| part + rows - 1 - i).collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < hook {
            continue;
        }
        let target = b - hook;
        if beta.contains(&target) {
            continue;
        }
        let leg = beta.iter().filter(|&&c| target < c && c < b).count();
        let sign = if leg % 2 == 0 { 1 } else { -1 };
        let mut new_beta = beta.clone();
        new_beta[idx] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let remaining: Vec<usize> = new_beta
            .iter()
            .enumerate()
            .map(|(i, &v)| v - (rows - 1 - i))
            .filter(|&part| part > 0)
            .collect();
        total += sign * rim_hook_sum(&remaining, cycles, depth + 1, memo);
    }
    memo.insert(key, total);
    total
}

/// Kostka number `K_{mu,lam}`: the number of semistandard Young tableaux
/// of shape `mu` and content `lam`, counted by exhaustive row-weak,
/// column-strict filling. Panics if the partitions have different sums.
pub fn kostka(mu: &Partition, lam: &Partition) -> u64 {
    assert_eq!(mu.n(), lam.n(), "shape and content must partition the same n");
    let shape = mu.parts();
    let mut remaining: Vec<usize> = lam.parts().to_vec();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&width| vec![0; width]).collect();
    fill_cells(shape, &mut grid, &mut remaining, 0, 0)
}

fn fill_cells(
    shape: &[usize],
    grid: &mut Vec<Vec<usize>>,
    remaining: &mut Vec<usize>,
    row: usize,
    col: usize,
) -> u64 {
    if row == shape.len() {
        return 1;
    }
    let (next_row, next_col) = if col + 1 < shape[row] { (row, col + 1) } else { (row + 1, 0) };
    let min_value = {
        let left = if col > 0 { grid[row][col - 1] } else { 1 };
        let above = if row > 0 { grid[row - 1][col] + 1 } else { 1 };
        left.max(above)
    };
    let mut count = 0;
    for value in min_value..=remaining.len() {
        if remaining[value - 1] == 0 {
            continue;
        }
        remaining[value - 1] -= 1;
        grid[row][col] = value;
        count += fill_cells(shape, grid, remaining, next_row, next_col);
        remaining[value - 1] += 1;
    }
    grid[row][col] = 0;
    count
}

/// The permutation module of a shape written as irreducible constituents
/// with their Kostka multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDecomposition {
    pub shape: Partition,
    /// `(mu, K_{mu,shape})` for every `mu` with positive multiplicity, in
    /// the canonical reverse-lexicographic partition order.
    pub constituents: Vec<(Partition, u64)>,
}

/// Decomposes the permutation module of `shape` by computing every Kostka
/// number `K_{mu,shape}` and keeping the positive ones.
pub fn decompose_young_module(shape: &Partition) -> ModuleDecomposition {
    let constituents = partitions_of(shape.n())
        .into_iter()
        .filter_map(|mu| {
            let multiplicity = kostka(&mu, shape);
            (multiplicity > 0).then_some((mu, multiplicity))
        })
        .collect();
    ModuleDecomposition { shape: shape.clone(), constituents }
}

/// Dimension of the irreducible indexed by `shape`, by the hook-length
/// product formula.
pub fn dimension(shape: &Partition) -> u64 {
    let conjugate = shape.conjugate();
    let mut hooks: u128 = 1;
    for (i, &row) in shape.parts().iter().enumerate() {
        for j in 0..row {
            let hook = (row - j) + (conjugate.part(j) - i) - 1;
            hooks *= hook as u128;
        }
    }
    let order = factorial(shape.n()) as u128;
    debug_assert_eq!(order % hooks, 0);
    (order / hooks) as u64
}

/// The exact scalar `|X| * chi(x) / chi(1)` by which the sum over the
/// class `X` of `ct` acts on the isotypic block of `shape`.
pub fn class_sum_eigenvalue(ct: &CycleType, shape: &Partition) -> Ratio<i128> {
    assert_eq!(shape.n(), ct.degree(), "shape and cycle type must describe the same S_n");
    let class_size = ct.class_size() as i128;
    let value = mn_character(shape, ct) as i128;
    Ratio::new(class_size * value, dimension(shape) as i128)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(parts: &[usize]) -> CycleType {
        CycleType::from_partition(&Partition::new(parts.to_vec()).unwrap())
    }

    fn shape(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn frobenius_poly_hand_expansions() {
        // (x1 - x2)(x1 + x2)(x1^2 + x2^2) = x1^4 - x2^4
        let p = frobenius_poly(&ct(&[2, 1])).unwrap();
        assert_eq!(p.terms().collect::<Vec<_>>(), vec![((0, 4), -1), ((4, 0), 1)]);

        // (x1 - x2)(x1 + x2)(x1^2 + x2^2)(x1^3 + x2^3)
        let p = frobenius_poly(&ct(&[3, 2, 1])).unwrap();
        assert_eq!(
            p.terms().collect::<Vec<_>>(),
            vec![((0, 7), -1), ((3, 4), -1), ((4, 3), 1), ((7, 0), 1)]
        );

        // (x1 - x2)(x1 + x2)^2 = x1^3 + x1^2 x2 - x1 x2^2 - x2^3
        let p = frobenius_poly(&CycleType::identity(2)).unwrap();
        assert_eq!(
            p.terms().collect::<Vec<_>>(),
            vec![((0, 3), -1), ((1, 2), -1), ((2, 1), 1), ((3, 0), 1)]
        );
    }

    #[test]
    fn frobenius_poly_is_homogeneous_and_small() {
        for n in 1..=10 {
            for partition in partitions_of(n) {
                let t = CycleType::from_partition(&partition);
                let p = frobenius_poly(&t).unwrap();
                assert!(p.is_homogeneous((n + 1) as u32), "{partition}");
                assert!(p.num_terms() <= n + 2, "{partition}");
            }
        }
    }

    #[test]
    fn two_row_char_examples() {
        assert_eq!(two_row_char(&ct(&[2, 1]), 1).unwrap(), 0);
        assert_eq!(two_row_char(&ct(&[3, 2, 1]), 2).unwrap(), 0);
        for n in 2..=9 {
            assert_eq!(two_row_char(&CycleType::identity(n), 1).unwrap(), (n - 1) as i64);
        }
        assert_eq!(two_row_char(&ct(&[3, 2, 1]), 0).unwrap(), 1);
        assert!(two_row_char(&ct(&[2, 1]), 2).is_err());
    }

    #[test]
    fn pruned_path_agrees_with_full_path() {
        for n in 1..=10 {
            for partition in partitions_of(n) {
                let t = CycleType::from_partition(&partition);
                for m in 0..=n / 2 {
                    assert_eq!(
                        two_row_char_pruned(&t, m).unwrap(),
                        two_row_char(&t, m).unwrap(),
                        "{partition}, m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn rim_hook_examples() {
        for partition in partitions_of(5) {
            assert_eq!(mn_character(&shape(&[5]), &CycleType::from_partition(&partition)), 1);
        }
        assert_eq!(mn_character(&shape(&[2, 1]), &ct(&[3])), -1);
        assert_eq!(mn_character(&shape(&[2, 1]), &ct(&[2, 1])), 0);
        assert_eq!(mn_character(&shape(&[2, 1]), &CycleType::identity(3)), 2);
        // Sign character: parity of n minus the number of cycles.
        for partition in partitions_of(6) {
            let t = CycleType::from_partition(&partition);
            let parity = (6 - partition.len()) % 2;
            let expected = if parity == 0 { 1 } else { -1 };
            assert_eq!(mn_character(&shape(&[1; 6]), &t), expected, "{partition}");
        }
    }

    #[test]
    fn rim_hook_agrees_with_two_row_route() {
        for n in 1..=8 {
            for partition in partitions_of(n) {
                let t = CycleType::from_partition(&partition);
                for m in 0..=n / 2 {
                    let two_row = if m == 0 { shape(&[n]) } else { shape(&[n - m, m]) };
                    assert_eq!(
                        mn_character(&two_row, &t),
                        two_row_char(&t, m).unwrap(),
                        "{partition}, m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn kostka_examples() {
        for n in 1..=7 {
            for lam in partitions_of(n) {
                assert_eq!(kostka(&lam, &lam), 1, "{lam}");
            }
        }
        // Unique filling: second row all 2s, then 1s and leftover 2s on top.
        let n = 9;
        for k in 1..=n / 2 {
            for m in 1..=k {
                assert_eq!(kostka(&shape(&[n - m, m]), &shape(&[n - k, k])), 1);
            }
        }
        assert_eq!(kostka(&shape(&[3, 3]), &shape(&[4, 2])), 0);
    }

    #[test]
    fn kostka_positive_exactly_on_dominance() {
        for n in 1..=7 {
            let all = partitions_of(n);
            for mu in &all {
                for lam in &all {
                    assert_eq!(kostka(mu, lam) > 0, mu.dominates(lam), "K for mu={mu}, lam={lam}");
                }
            }
        }
    }

    #[test]
    fn kostka_counts_standard_tableaux() {
        // Content (1, ..., 1) makes every filling standard, so the count
        // must match the hook-length dimension.
        for n in 1..=7 {
            let column = shape(&vec![1; n]);
            for mu in partitions_of(n) {
                assert_eq!(kostka(&mu, &column), dimension(&mu), "{mu}");
            }
        }
    }

    #[test]
    fn young_module_decompositions() {
        let whole = decompose_young_module(&shape(&[6]));
        assert_eq!(whole.constituents, vec![(shape(&[6]), 1)]);

        let hook = decompose_young_module(&shape(&[2, 1, 1]));
        assert_eq!(
            hook.constituents,
            vec![
                (shape(&[4]), 1),
                (shape(&[3, 1]), 2),
                (shape(&[2, 2]), 1),
                (shape(&[2, 1, 1]), 1),
            ]
        );

        let two_row = decompose_young_module(&shape(&[4, 2]));
        assert_eq!(
            two_row.constituents,
            vec![(shape(&[6]), 1), (shape(&[5, 1]), 1), (shape(&[4, 2]), 1)]
        );
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(&shape(&[3])), 1);
        assert_eq!(dimension(&shape(&[2, 1])), 2);
        assert_eq!(dimension(&shape(&[2, 2])), 2);
        assert_eq!(dimension(&shape(&[1, 1, 1])), 1);
        for n in 2..=9 {
            assert_eq!(dimension(&shape(&[n - 1, 1])), (n - 1) as u64);
        }
        // Sum of squared dimensions is the group order.
        for n in 1..=8 {
            let total: u64 = partitions_of(n).iter().map(|p| dimension(p).pow(2)).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn class_sum_eigenvalue_examples() {
        for partition in partitions_of(5) {
            let t = CycleType::from_partition(&partition);
            assert_eq!(
                class_sum_eigenvalue(&t, &shape(&[5])),
                Ratio::from_integer(t.class_size() as i128)
            );
        }
        assert_eq!(class_sum_eigenvalue(&ct(&[2, 1]), &shape(&[2, 1])), Ratio::from_integer(0));
        assert_eq!(class_sum_eigenvalue(&ct(&[3]), &shape(&[2, 1])), Ratio::from_integer(-1));
    }
}
