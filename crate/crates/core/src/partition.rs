//! Integer partitions, the dominance order, and the canonical
//! reverse-lexicographic enumeration.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition of `n`: weakly decreasing positive parts summing to `n`.
/// The canonical text form is `"6=3+2+1"`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ok = !parts.is_empty()
            && *parts.last().unwrap() >= 1
            && parts.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(Error::Parse {
                what: "partition",
                detail: format!("{parts:?} is not weakly decreasing positive"),
            });
        }
        Ok(Self { parts })
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(!parts.is_empty() && parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().copied().unwrap_or(0) >= 1);
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts (always at least one, so there is no `is_empty`).
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// `parts[i]` with missing parts read as 0.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The transposed Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts[0];
        let parts = (0..cols).map(|j| self.parts.iter().take_while(|&&p| p > j).count()).collect();
        Self::from_sorted_unchecked(parts)
    }

    /// Dominance: every prefix sum of `self` is at least the corresponding
    /// prefix sum of `other`. Panics if the two partition different integers.
    pub fn dominates(&self, other: &Partition) -> bool {
        assert_eq!(self.n(), other.n(), "dominance compares partitions of the same n");
        let rows = self.len().max(other.len());
        let mut self_sum = 0usize;
        let mut other_sum = 0usize;
        for i in 0..rows {
            self_sum += self.part(i);
            other_sum += other.part(i);
            if self_sum < other_sum {
                return false;
            }
        }
        true
    }

    /// Parts joined by `+`, without the leading `n=`; the form the CLI uses.
    pub fn parts_string(&self) -> String {
        self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("+")
    }

    /// Parses the bare `+`-separated form, e.g. `"3+2+1"`.
    pub fn parse_parts(text: &str) -> Result<Self> {
        let parse_err = |detail: String| Error::Parse { what: "partition", detail };
        let mut parts = Vec::new();
        for token in text.split('+') {
            let part: usize =
                token.trim().parse().map_err(|_| parse_err(format!("bad part {token:?}")))?;
            parts.push(part);
        }
        Self::new(parts)
    }
}

/// All partitions of `n` in reverse-lexicographic order: `(n)` first,
/// `(1, ..., 1)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    assert!(n >= 1, "partitions are defined for n >= 1");
    fn descend(
        remaining: usize,
        max_part: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition::from_sorted_unchecked(stack.clone()));
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            stack.push(part);
            descend(remaining - part, part, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    descend(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.n(), self.parts_string())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({})", self.parts_string())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the canonical `"6=3+2+1"` form and checks the stated sum.
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |detail: String| Error::Parse { what: "partition", detail };
        let (n_text, parts_text) =
            s.split_once('=').ok_or_else(|| parse_err(format!("{s:?} lacks the n= prefix")))?;
        let n: usize =
            n_text.trim().parse().map_err(|_| parse_err(format!("bad integer {n_text:?}")))?;
        let partition = Self::parse_parts(parts_text)?;
        if partition.n() != n {
            return Err(parse_err(format!("parts of {s:?} sum to {}, not {n}", partition.n())));
        }
        Ok(partition)
    }
}
