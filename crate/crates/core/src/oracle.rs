//! Ground truth by direct multiplication: count, for every g in S_n, the
//! number of factorizations g = a*b with a in A and b in B, and decide
//! whether (A, B) tiles the group with a constant multiplicity r.
//!
//! Elements are ranked to dense indices, so the count map is a flat array
//! of n! counters. The A x B double loop is chunked over A; with the
//! `parallel` feature the chunks are tallied concurrently and merged by
//! exact addition, so the result never depends on the chunking.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::perm::{factorial, rank_images, Permutation};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Hard roof on the oracle degree: 12! counters is already 1.9 GiB.
pub const MAX_ORACLE_DEGREE: usize = 12;

/// Resource limits for the oracle.
#[derive(Clone, Copy, Debug)]
pub struct OracleLimits {
    /// Largest degree whose n! counters we are willing to allocate.
    pub max_degree: usize,
    /// Largest |A| * |B| we are willing to multiply out.
    pub max_products: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self { max_degree: 10, max_products: 100_000_000 }
    }
}

/// The product-count map: `counts[rank(g)]` factorizations for each g,
/// zero counts stored implicitly as zero entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    degree: usize,
    counts: Vec<u32>,
}

impl CountTable {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Counts indexed by permutation rank; length n!.
    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn get(&self, perm: &Permutation) -> u32 {
        assert_eq!(perm.degree(), self.degree, "count table is for S_{}", self.degree);
        self.counts[perm.rank() as usize]
    }

    /// Total over the group; always |A| * |B|.
    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    /// Map from observed count to the number of group elements attaining it.
    pub fn histogram(&self) -> BTreeMap<u32, u64> {
        let mut histogram = BTreeMap::new();
        for &count in &self.counts {
            *histogram.entry(count).or_insert(0u64) += 1;
        }
        histogram
    }
}

/// Verdict of the exact tiling check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TilingReport {
    pub is_code: bool,
    /// The constant multiplicity; present iff `is_code`.
    pub r: Option<u64>,
    /// A group element whose count deviates from the dominant count,
    /// with its observed count; present iff `is_code` is false.
    pub witness: Option<(Permutation, u32)>,
    /// Observed count -> number of group elements attaining it.
    pub histogram: BTreeMap<u32, u64>,
}

fn validate(a: &[Permutation], b: &[Permutation], limits: &OracleLimits) -> Result<usize> {
    if a.is_empty() {
        return Err(Error::EmptySet("A"));
    }
    if b.is_empty() {
        return Err(Error::EmptySet("B"));
    }
    let degree = a[0].degree();
    for p in a.iter().chain(b) {
        if p.degree() != degree {
            return Err(Error::DegreeMismatch { left: degree, right: p.degree() });
        }
    }
    let cap = limits.max_degree.min(MAX_ORACLE_DEGREE);
    if degree > cap {
        return Err(Error::DegreeCap { degree, max: cap });
    }
    let products = a.len() as u128 * b.len() as u128;
    if products > limits.max_products as u128 {
        return Err(Error::ProductBudget { products, budget: limits.max_products });
    }
    for (name, side) in [("A", a), ("B", b)] {
        let distinct: HashSet<&[u8]> = side.iter().map(|p| p.images()).collect();
        if distinct.len() != side.len() {
            return Err(Error::DuplicateElements(name));
        }
    }
    Ok(degree)
}

/// The inner loop: tally a*b over one chunk of A against all of B.
fn accumulate(a_chunk: &[Permutation], b: &[Permutation], counts: &mut [u32], degree: usize) {
    let mut buf = [0u8; MAX_ORACLE_DEGREE];
    let buf = &mut buf[..degree];
    for a in a_chunk {
        let a_images = a.images();
        for b_perm in b {
            let b_images = b_perm.images();
            for (slot, &point) in buf.iter_mut().zip(b_images) {
                *slot = a_images[point as usize];
            }
            counts[rank_images(buf) as usize] += 1;
        }
    }
}

/// Factorization counts over all of S_n, single-threaded reference path.
pub fn product_counts_sequential(
    a: &[Permutation],
    b: &[Permutation],
    limits: &OracleLimits,
) -> Result<CountTable> {
    let degree = validate(a, b, limits)?;
    let mut counts = vec![0u32; factorial(degree) as usize];
    accumulate(a, b, &mut counts, degree);
    Ok(CountTable { degree, counts })
}

/// Factorization counts over all of S_n, tallied in parallel over chunks
/// of A. Exact addition makes the merge independent of the chunking, so
/// this returns bit-identical results to the sequential path.
#[cfg(feature = "parallel")]
pub fn product_counts_parallel(
    a: &[Permutation],
    b: &[Permutation],
    limits: &OracleLimits,
) -> Result<CountTable> {
    let degree = validate(a, b, limits)?;
    let size = factorial(degree) as usize;
    let chunk = (a.len() / (rayon::current_num_threads() * 4)).max(1);
    let counts = a
        .par_chunks(chunk)
        .fold(
            || vec![0u32; size],
            |mut tally, part| {
                accumulate(part, b, &mut tally, degree);
                tally
            },
        )
        .reduce(
            || vec![0u32; size],
            |mut left, right| {
                for (l, r) in left.iter_mut().zip(&right) {
                    *l += r;
                }
                left
            },
        );
    Ok(CountTable { degree, counts })
}

/// Factorization counts over all of S_n. Uses the parallel path when the
/// `parallel` feature is enabled, the sequential path otherwise.
pub fn product_counts(
    a: &[Permutation],
    b: &[Permutation],
    limits: &OracleLimits,
) -> Result<CountTable> {
    #[cfg(feature = "parallel")]
    {
        product_counts_parallel(a, b, limits)
    }
    #[cfg(not(feature = "parallel"))]
    {
        product_counts_sequential(a, b, limits)
    }
}

/// Decides whether every group element has the same positive number of
/// factorizations a*b, reporting the multiplicity or a deviating witness.
pub fn verify_tiling(
    a: &[Permutation],
    b: &[Permutation],
    limits: &OracleLimits,
) -> Result<TilingReport> {
    let table = product_counts(a, b, limits)?;
    let histogram = table.histogram();
    if histogram.len() == 1 {
        let r = *histogram.keys().next().unwrap();
        // Nonempty factors put at least one product somewhere, so a
        // constant count is positive and r * n! = |A| * |B| follows.
        debug_assert!(r >= 1);
        debug_assert_eq!(table.total(), a.len() as u128 * b.len() as u128);
        return Ok(TilingReport { is_code: true, r: Some(r as u64), witness: None, histogram });
    }
    // Dominant count, ties toward the larger count; the witness is the
    // first element (by rank) that deviates from it.
    let dominant = histogram
        .iter()
        .max_by_key(|&(&count, &elements)| (elements, count))
        .map(|(&count, _)| count)
        .expect("histogram of a nonempty table is nonempty");
    let (rank, &count) = table
        .counts()
        .iter()
        .enumerate()
        .find(|&(_, &c)| c != dominant)
        .expect("a non-constant table deviates somewhere");
    Ok(TilingReport {
        is_code: false,
        r: None,
        witness: Some((Permutation::unrank(table.degree(), rank as u64), count)),
        histogram,
    })
}

/// Checks that a connection set contains no identity and is inverse-closed,
/// as required for an undirected Cayley graph.
pub fn validate_connection_set(a: &[Permutation]) -> Result<()> {
    let set: HashSet<&[u8]> = a.iter().map(|p| p.images()).collect();
    for p in a {
        if p.is_identity() {
            return Err(Error::IdentityInConnectionSet);
        }
        let inverse = p.inverse();
        if !set.contains(inverse.images()) {
            return Err(Error::NotInverseClosed(p.to_string()));
        }
    }
    Ok(())
}

/// Total-perfect-code check for Cay(S_n, A): does every vertex have
/// exactly one neighbor in B? This is [`verify_tiling`] with the
/// multiplicity pinned to 1; a uniform multiplicity r > 1 is reported as
/// a failure with the identity as witness.
pub fn total_perfect_code_check(
    a: &[Permutation],
    b: &[Permutation],
    limits: &OracleLimits,
) -> Result<TilingReport> {
    validate_connection_set(a)?;
    let report = verify_tiling(a, b, limits)?;
    match report.r {
        Some(r) if r != 1 => {
            let degree = a[0].degree();
            Ok(TilingReport {
                is_code: false,
                r: None,
                witness: Some((Permutation::identity(degree), r as u32)),
                histogram: report.histogram,
            })
        }
        _ => Ok(report),
    }
}

/// Perfect-code check for Cay(S_n, A): do the closed unit spheres around
/// B partition the group? Equivalent to a multiplicity-1 tiling by
/// A together with the identity.
pub fn perfect_code_check(
    a: &[Permutation],
    b: &[Permutation],
    limits: &OracleLimits,
) -> Result<bool> {
    validate_connection_set(a)?;
    let degree = a.first().map(|p| p.degree()).ok_or(Error::EmptySet("A"))?;
    let mut closed = Vec::with_capacity(a.len() + 1);
    closed.push(Permutation::identity(degree));
    closed.extend_from_slice(a);
    let report = verify_tiling(&closed, b, limits)?;
    Ok(report.is_code && report.r == Some(1))
}
