//! Young subgroups on consecutive blocks: direct products of symmetric
//! groups acting on an interval partition of `{1, ..., n}`.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::{factorial, Permutation};

/// A Young subgroup described by the consecutive blocks it stabilizes.
/// The two-block instance on `{1..k}` and `{k+1..n}` is the subgroup
/// `S_k x S_{n-k}` that the code criterion is about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungSubgroupSpec {
    degree: usize,
    blocks: Vec<Range<usize>>,
    shape: Partition,
}

impl YoungSubgroupSpec {
    /// Consecutive blocks of the given sizes, in the given order.
    pub fn from_sizes(sizes: &[usize]) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::Parse {
                what: "young subgroup",
                detail: format!("block sizes {sizes:?} must be positive"),
            });
        }
        let degree: usize = sizes.iter().sum();
        let mut blocks = Vec::with_capacity(sizes.len());
        let mut offset = 0;
        for &size in sizes {
            blocks.push(offset..offset + size);
            offset += size;
        }
        let mut sorted = sizes.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let shape = Partition::new(sorted).expect("sorted positive sizes form a partition");
        Ok(Self { degree, blocks, shape })
    }

    /// The subgroup `S_k x S_{n-k}` with `S_k` on the first `k` points.
    pub fn two_block(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::Parse {
                what: "young subgroup",
                detail: format!("two-block split needs 1 <= k < n, got k={k}, n={n}"),
            });
        }
        Self::from_sizes(&[k, n - k])
    }

    /// A Young subgroup of the given shape, blocks in part order.
    pub fn of_shape(shape: &Partition) -> Self {
        Self::from_sizes(shape.parts()).expect("partition parts are positive")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn blocks(&self) -> &[Range<usize>] {
        &self.blocks
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Group order: the product of the block-size factorials.
    pub fn order(&self) -> u64 {
        self.blocks.iter().map(|b| factorial(b.len())).product()
    }

    /// True when the permutation maps every block into itself.
    pub fn contains(&self, perm: &Permutation) -> bool {
        perm.degree() == self.degree
            && self
                .blocks
                .iter()
                .all(|block| block.clone().all(|point| block.contains(&perm.apply(point))))
    }

    /// Streams every element exactly once, in lexicographic order of image
    /// tables. Fails if the degree exceeds `max_degree`.
    pub fn elements(&self, max_degree: usize) -> Result<YoungElements<'_>> {
        if self.degree > max_degree {
            return Err(Error::DegreeCap { degree: self.degree, max: max_degree });
        }
        Ok(YoungElements {
            spec: self,
            radixes: self.blocks.iter().map(|b| factorial(b.len())).collect(),
            next_index: 0,
            order: self.order(),
        })
    }
}

/// Iterator over a Young subgroup; see [`YoungSubgroupSpec::elements`].
pub struct YoungElements<'a> {
    spec: &'a YoungSubgroupSpec,
    radixes: Vec<u64>,
    next_index: u64,
    order: u64,
}

impl Iterator for YoungElements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.next_index == self.order {
            return None;
        }
        // Mixed-radix digits, one per block, earlier blocks most
        // significant, so the overall stream is lexicographic.
        let mut rest = self.next_index;
        self.next_index += 1;
        let mut digits = vec![0u64; self.radixes.len()];
        for (digit, &radix) in digits.iter_mut().zip(&self.radixes).rev() {
            *digit = rest % radix;
            rest /= radix;
        }
        let mut images = vec![0u8; self.spec.degree];
        for (block, &digit) in self.spec.blocks.iter().zip(&digits) {
            let local = Permutation::unrank(block.len(), digit);
            for (pos, point) in block.clone().enumerate() {
                images[point] = (block.start + local.apply(pos)) as u8;
            }
        }
        Some(Permutation::from_images(images).expect("blockwise images form a permutation"))
    }
}
