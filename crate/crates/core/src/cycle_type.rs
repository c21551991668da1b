//! Cycle types of permutations: the data that indexes a conjugacy class
//! of S_n, with the centralizer-order class-size formula and streaming
//! enumeration of the full class.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::{factorial, Permutation};

/// Cycle-length multiplicities `(i_1, ..., i_n)` of a degree-`n`
/// permutation: `i_l` cycles of length `l`, fixed points counted as
/// 1-cycles, so `sum(l * i_l) = n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycleType {
    degree: usize,
    multiplicities: Vec<usize>,
}

impl CycleType {
    pub fn new(degree: usize, multiplicities: Vec<usize>) -> Result<Self> {
        let weighted: usize = multiplicities.iter().enumerate().map(|(i, &m)| (i + 1) * m).sum();
        if degree == 0 || multiplicities.len() != degree || weighted != degree {
            return Err(Error::Parse {
                what: "cycle type",
                detail: format!("multiplicities {multiplicities:?} do not describe S_{degree}"),
            });
        }
        Ok(Self { degree, multiplicities })
    }

    /// The type of the identity: `n` fixed points.
    pub fn identity(degree: usize) -> Self {
        let mut multiplicities = vec![0; degree];
        multiplicities[0] = degree;
        Self { degree, multiplicities }
    }

    /// Reads a cycle type off a partition of cycle lengths, e.g. `3+2+1`.
    pub fn from_partition(partition: &Partition) -> Self {
        let degree = partition.n();
        let mut multiplicities = vec![0; degree];
        for &part in partition.parts() {
            multiplicities[part - 1] += 1;
        }
        Self { degree, multiplicities }
    }

    /// The sorted cycle lengths; inverse of [`CycleType::from_partition`].
    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (i, &m) in self.multiplicities.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(i + 1, m));
        }
        Partition::new(parts).expect("a cycle type always has at least one cycle")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of cycles of length `len`; 0 for lengths beyond the degree.
    pub fn multiplicity(&self, len: usize) -> usize {
        if len == 0 || len > self.degree {
            0
        } else {
            self.multiplicities[len - 1]
        }
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Size of the conjugacy class: `n! / prod(l^{i_l} * i_l!)`.
    pub fn class_size(&self) -> u64 {
        let mut centralizer: u128 = 1;
        for (i, &m) in self.multiplicities.iter().enumerate() {
            let len = (i + 1) as u128;
            for _ in 0..m {
                centralizer *= len;
            }
            centralizer *= factorial(m) as u128;
        }
        let order = factorial(self.degree) as u128;
        debug_assert_eq!(order % centralizer, 0);
        (order / centralizer) as u64
    }

    /// Streams every element of the class exactly once, in lexicographic
    /// order of image tables. Fails if the degree exceeds `max_degree`.
    pub fn elements(&self, max_degree: usize) -> Result<ClassElements> {
        if self.degree > max_degree {
            return Err(Error::DegreeCap { degree: self.degree, max: max_degree });
        }
        Ok(ClassElements {
            multiplicities: self.multiplicities.clone(),
            degree: self.degree,
            next_rank: 0,
            order: factorial(self.degree),
        })
    }
}

/// Iterator over a full conjugacy class; see [`CycleType::elements`].
pub struct ClassElements {
    multiplicities: Vec<usize>,
    degree: usize,
    next_rank: u64,
    order: u64,
}

impl ClassElements {
    fn matches(&self, perm: &Permutation) -> bool {
        // Count cycle lengths in place; one heap allocation per candidate
        // would dominate the scan otherwise.
        let images = perm.images();
        let mut seen = [false; crate::perm::MAX_RANK_DEGREE];
        let mut counts = [0usize; crate::perm::MAX_RANK_DEGREE];
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut point = start;
            loop {
                seen[point] = true;
                len += 1;
                point = images[point] as usize;
                if point == start {
                    break;
                }
            }
            counts[len - 1] += 1;
        }
        counts[..self.degree] == self.multiplicities[..]
    }
}

impl Iterator for ClassElements {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        while self.next_rank < self.order {
            let perm = Permutation::unrank(self.degree, self.next_rank);
            self.next_rank += 1;
            if self.matches(&perm) {
                return Some(perm);
            }
        }
        None
    }
}
