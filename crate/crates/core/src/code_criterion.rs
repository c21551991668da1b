//! The decision layer: when does a conjugacy class X of S_n tile the
//! group against the two-block Young subgroup Y_k = S_k x S_{n-k}, in the
//! sense that every group element has the same number r of factorizations
//! x = a*b with a in X, b in Y_k?
//!
//! Two routes are implemented and cross-checked everywhere:
//! * a closed cycle-type classification ([`theorem_classify`]), and
//! * vanishing of the two-row characters `(n-m, m)` for `1 <= m <= k`
//!   on the class ([`char_criterion`]).

use crate::characters::{decompose_young_module, frobenius_poly, mn_character};
use crate::cycle_type::CycleType;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::perm::{factorial, MAX_RANK_DEGREE};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// A validated classification query: degree `n`, block size `k` with
/// `n > 2k >= 2`, and the cycle type of the class representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeQuery {
    n: usize,
    k: usize,
    cycle_type: CycleType,
}

impl CodeQuery {
    pub fn new(n: usize, k: usize, cycle_type: CycleType) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidQuery { n, k, reason };
        if cycle_type.degree() != n {
            return Err(invalid(format!(
                "cycle type describes S_{}, not S_{n}",
                cycle_type.degree()
            )));
        }
        if k < 1 {
            return Err(invalid("block size k must be at least 1".into()));
        }
        if n == 2 * k {
            return Err(invalid(
                "n = 2k is out of range; the square shape (k, k) is not handled".into(),
            ));
        }
        if n < 2 * k {
            return Err(invalid("need n > 2k".into()));
        }
        if n > MAX_RANK_DEGREE {
            return Err(Error::DegreeCap { degree: n, max: MAX_RANK_DEGREE });
        }
        Ok(Self { n, k, cycle_type })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cycle_type(&self) -> &CycleType {
        &self.cycle_type
    }

    /// The unique `j` with `2^j <= k < 2^{j+1}`.
    pub fn j(&self) -> u32 {
        self.k.ilog2()
    }
}

/// Combined verdict of both criteria on one query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeVerdict {
    pub is_code: bool,
    /// The tiling multiplicity `|X| * |Y_k| / n!`; present iff `is_code`.
    pub r: Option<u64>,
    /// The exponent with `2^j <= k < 2^{j+1}`.
    pub j: u32,
    /// Smallest `m` in `1..=k` whose two-row character does not vanish on
    /// the class; present iff the character criterion fails.
    pub failing_m: Option<usize>,
}

/// The closed classification: the class tiles against Y_k exactly when
/// the cycle type has exactly one cycle of length `2^i` for each
/// `0 <= i <= j` and every other cycle is longer than `k`. Equivalently,
/// for lengths `l <= k` the multiplicity is 1 on powers of two and 0
/// elsewhere; lengths above `k` are unconstrained.
pub fn theorem_classify(query: &CodeQuery) -> bool {
    (1..=query.k).all(|len| {
        let required = usize::from(len.is_power_of_two());
        query.cycle_type.multiplicity(len) == required
    })
}

/// Smallest `m` in `1..=k` with a nonvanishing two-row character
/// `(n-m, m)` on the class; `None` when they all vanish.
pub fn first_failing_m(query: &CodeQuery) -> Result<Option<usize>> {
    let poly = frobenius_poly(&query.cycle_type)?;
    for m in 1..=query.k {
        if poly.coefficient((query.n - m + 1) as u32, m as u32) != 0 {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// The character-vanishing criterion: true iff the two-row character
/// `(n-m, m)` vanishes on the class for every `m` in `1..=k`. These
/// shapes are exactly the nontrivial irreducible constituents of the
/// permutation module on the cosets of Y_k.
pub fn char_criterion(query: &CodeQuery) -> Result<bool> {
    Ok(first_failing_m(query)?.is_none())
}

/// The tiling multiplicity `r = |X| * k! * (n-k)! / n!`. Counting pairs
/// over the whole group forces this value, so the division must be exact;
/// a nonzero remainder means the query is not a code and is reported as
/// an error.
pub fn compute_r(query: &CodeQuery) -> Result<u64> {
    let product = query.cycle_type.class_size() as u128
        * factorial(query.k) as u128
        * factorial(query.n - query.k) as u128;
    let order = factorial(query.n) as u128;
    if !product.is_multiple_of(order) {
        return Err(Error::NotACode { product, order });
    }
    Ok((product / order) as u64)
}

/// One unfolding of the induction that proves the classification:
/// the criterion at block size `k` holds iff the two-row character
/// `(n-k, k)` vanishes on the class and the criterion already holds at
/// block size `k - 1`. Exposed separately so the identity with
/// [`char_criterion`] can be exercised directly; requires `k >= 2`.
pub fn induction_step(query: &CodeQuery) -> Result<bool> {
    if query.k < 2 {
        return Err(Error::InvalidQuery {
            n: query.n,
            k: query.k,
            reason: "the induction step needs k >= 2".into(),
        });
    }
    let head = crate::characters::two_row_char(&query.cycle_type, query.k)? == 0;
    let smaller = CodeQuery::new(query.n, query.k - 1, query.cycle_type.clone())?;
    Ok(head && char_criterion(&smaller)?)
}

/// Runs both criteria and packages the verdict. A disagreement between
/// them is a bug (or a refutation) and comes back as
/// [`Error::CriteriaDisagree`].
pub fn verdict(query: &CodeQuery) -> Result<CodeVerdict> {
    let by_type = theorem_classify(query);
    let failing_m = first_failing_m(query)?;
    let by_characters = failing_m.is_none();
    if by_type != by_characters {
        return Err(Error::CriteriaDisagree(describe(query)));
    }
    let r = if by_characters { Some(compute_r(query)?) } else { None };
    Ok(CodeVerdict { is_code: by_characters, r, j: query.j(), failing_m })
}

/// Every cycle type of S_n whose class tiles against Y_k, with its
/// multiplicity r, in the canonical partition order. Each cycle type is
/// checked by both criteria as a built-in self-check even though the
/// classification alone would do.
pub fn search_codes(n: usize, k: usize, max_degree: usize) -> Result<Vec<(CycleType, u64)>> {
    if n > max_degree {
        return Err(Error::DegreeCap { degree: n, max: max_degree });
    }
    let shapes = partitions_of(n);
    let evaluate = |partition: &Partition| -> Result<Option<(CycleType, u64)>> {
        let cycle_type = CycleType::from_partition(partition);
        let query = CodeQuery::new(n, k, cycle_type.clone())?;
        let result = verdict(&query)?;
        Ok(result.r.map(|r| (cycle_type, r)))
    };
    #[cfg(feature = "parallel")]
    let evaluated: Result<Vec<_>> = shapes.par_iter().map(evaluate).collect();
    #[cfg(not(feature = "parallel"))]
    let evaluated: Result<Vec<_>> = shapes.iter().map(evaluate).collect();
    Ok(evaluated?.into_iter().flatten().collect())
}

/// The same character test for a Young subgroup of an arbitrary shape:
/// true iff the character of every nontrivial irreducible constituent of
/// the shape's permutation module vanishes on the class.
///
/// For two-row shapes this agrees with [`char_criterion`] and is backed
/// by the classification; for anything else it is an exploration tool
/// and its verdicts should be confirmed against the brute-force oracle
/// before being reported as codes.
pub fn young_criterion_general(shape: &Partition, ct: &CycleType) -> bool {
    assert_eq!(shape.n(), ct.degree(), "shape and cycle type must describe the same S_n");
    let n = shape.n();
    decompose_young_module(shape)
        .constituents
        .iter()
        .filter(|(mu, _)| mu.parts() != [n])
        .all(|(mu, _)| mn_character(mu, ct) == 0)
}

fn describe(query: &CodeQuery) -> String {
    format!(
        "n={}, k={}, cycle type {}",
        query.n,
        query.k,
        query.cycle_type.to_partition().parts_string()
    )
}
