//! Permutations of `{0, ..., n-1}` as image tables, with Lehmer-code
//! ranking into `0..n!` and canonical cycle-notation text I/O.

use std::fmt;

use crate::cycle_type::CycleType;
use crate::error::{Error, Result};

/// Largest degree for which `n!` fits in a `u64` rank.
pub const MAX_RANK_DEGREE: usize = 20;

/// `n!` as `u64`. Panics if `n > 20`.
pub fn factorial(n: usize) -> u64 {
    assert!(n <= MAX_RANK_DEGREE, "factorial({n}) exceeds u64");
    (1..=n as u64).product()
}

/// An element of the symmetric group S_n, stored as the image table
/// `images[i] = p(i)` on 0-based points. All text I/O is 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from an image table, checking bijectivity.
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > MAX_RANK_DEGREE {
            return Err(Error::DegreeCap { degree: n, max: MAX_RANK_DEGREE });
        }
        let mut seen = [false; MAX_RANK_DEGREE];
        for &img in &images {
            if (img as usize) >= n || seen[img as usize] {
                return Err(Error::Parse {
                    what: "permutation",
                    detail: format!("image table {images:?} is not a bijection on 0..{n}"),
                });
            }
            seen[img as usize] = true;
        }
        Ok(Self { images })
    }

    /// The identity of S_n.
    pub fn identity(degree: usize) -> Self {
        assert!((1..=MAX_RANK_DEGREE).contains(&degree));
        Self { images: (0..degree as u8).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// Image of a single point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// Composition with the right factor acting first:
    /// `p.compose(&q)` maps `i` to `p(q(i))`. Every product in this crate,
    /// including the a*b products of the tiling oracle, uses this convention.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            other.degree(),
            "cannot compose permutations of different degree"
        );
        let images = other.images.iter().map(|&i| self.images[i as usize]).collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u8;
        }
        Permutation { images }
    }

    /// `q * self * q^{-1}`.
    pub fn conjugated_by(&self, q: &Permutation) -> Permutation {
        q.compose(self).compose(&q.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img as usize)
    }

    /// Cycles of length >= 2 in 0-based points, each cycle starting at its
    /// smallest point, cycles ordered by smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut point = self.apply(start);
            while point != start {
                seen[point] = true;
                cycle.push(point);
                point = self.apply(point);
            }
            if cycle.len() >= 2 {
                out.push(cycle);
            }
        }
        out
    }

    /// The multiset of cycle lengths, fixed points counted as 1-cycles.
    pub fn cycle_type(&self) -> CycleType {
        let n = self.degree();
        let mut multiplicities = vec![0usize; n];
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut point = start;
            loop {
                seen[point] = true;
                len += 1;
                point = self.apply(point);
                if point == start {
                    break;
                }
            }
            multiplicities[len - 1] += 1;
        }
        CycleType::new(n, multiplicities).expect("cycle lengths of a permutation sum to n")
    }

    /// Lehmer-code rank: the position of this image table in the
    /// lexicographic ordering of all of S_n, from 0.
    pub fn rank(&self) -> u64 {
        rank_images(&self.images)
    }

    /// Inverse of [`Permutation::rank`].
    pub fn unrank(degree: usize, rank: u64) -> Permutation {
        assert!((1..=MAX_RANK_DEGREE).contains(&degree));
        debug_assert!(rank < factorial(degree));
        // Factorial-base digits, most significant first.
        let mut digits = vec![0usize; degree];
        let mut rest = rank;
        for i in (0..degree).rev() {
            let base = (degree - i) as u64;
            digits[i] = (rest % base) as usize;
            rest /= base;
        }
        let mut available: Vec<u8> = (0..degree as u8).collect();
        let images = digits.iter().map(|&d| available.remove(d)).collect();
        Permutation { images }
    }

    /// All of S_n in lexicographic order of image tables.
    pub fn all(degree: usize) -> impl Iterator<Item = Permutation> {
        let order = factorial(degree);
        (0..order).map(move |r| Permutation::unrank(degree, r))
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)` with 1-based points;
    /// `()` is the identity. The degree cannot be recovered from the text,
    /// so it is supplied by the caller.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        if degree == 0 || degree > MAX_RANK_DEGREE {
            return Err(Error::DegreeCap { degree, max: MAX_RANK_DEGREE });
        }
        let parse_err = |detail: String| Error::Parse { what: "cycle notation", detail };
        let mut images: Vec<u8> = (0..degree as u8).collect();
        let mut moved = vec![false; degree];
        let body = text.trim();
        if body.is_empty() {
            return Err(parse_err("empty input".into()));
        }
        let mut rest = body;
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(parse_err(format!("expected '(' at {rest:?}")));
            }
            let close = rest.find(')').ok_or_else(|| parse_err("unbalanced parenthesis".into()))?;
            let inner = &rest[1..close];
            rest = &rest[close + 1..];
            let mut cycle = Vec::new();
            for token in inner.split_whitespace() {
                let point: usize =
                    token.parse().map_err(|_| parse_err(format!("bad point {token:?}")))?;
                if point == 0 || point > degree {
                    return Err(parse_err(format!("point {point} outside 1..={degree}")));
                }
                cycle.push(point - 1);
            }
            if cycle.len() == 1 {
                return Err(parse_err("singleton cycles must be omitted".into()));
            }
            for &p in &cycle {
                if moved[p] {
                    return Err(parse_err(format!("point {} repeated", p + 1)));
                }
                moved[p] = true;
            }
            for (i, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(i + 1) % cycle.len()] as u8;
            }
        }
        Ok(Permutation { images })
    }
}

/// Lehmer rank of a raw image table; shared with the oracle's inner loop.
pub(crate) fn rank_images(images: &[u8]) -> u64 {
    let n = images.len();
    let mut rank = 0u64;
    for i in 0..n {
        let mut smaller = 0u64;
        for j in i + 1..n {
            if images[j] < images[i] {
                smaller += 1;
            }
        }
        rank = rank * (n - i) as u64 + smaller;
    }
    rank
}

impl fmt::Display for Permutation {
    /// Canonical cycle notation: 1-based, fixed points omitted, each cycle
    /// starting at its smallest point, cycles ordered by smallest point,
    /// `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(text: &str, degree: usize) -> Permutation {
        Permutation::parse_cycles(text, degree).unwrap()
    }

    #[test]
    fn compose_identity_is_neutral() {
        let id = Permutation::identity(3);
        let t = p("(1 2)", 3);
        assert_eq!(id.compose(&t), t);
        assert_eq!(t.compose(&id), t);
    }

    #[test]
    fn compose_right_factor_first() {
        // (1 2) after (2 3) is the 3-cycle (1 2 3).
        assert_eq!(p("(1 2)", 3).compose(&p("(2 3)", 3)), p("(1 2 3)", 3));
        assert_eq!(p("(1 3)", 3).compose(&p("(2 3)", 3)), p("(1 3 2)", 3));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Permutation::parse_cycles("(1 2", 3).is_err());
        assert!(Permutation::parse_cycles("(1 4)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(Permutation::parse_cycles("(1)", 3).is_err());
        assert!(Permutation::parse_cycles("", 3).is_err());
    }

    #[test]
    fn display_examples() {
        assert_eq!(p("(1 2 3)(4 5)", 5).to_string(), "(1 2 3)(4 5)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
        // Non-canonical input renders canonically.
        assert_eq!(p("(5 4)(2 3 1)", 5).to_string(), "(1 2 3)(4 5)");
    }

    #[test]
    fn unrank_zero_is_identity_and_order_is_lex() {
        assert!(Permutation::unrank(4, 0).is_identity());
        let all: Vec<_> = Permutation::all(4).collect();
        assert_eq!(all.len(), 24);
        for w in all.windows(2) {
            assert!(w[0].images() < w[1].images());
        }
    }

    #[test]
    fn from_images_validates() {
        assert!(Permutation::from_images(vec![0, 0, 2]).is_err());
        assert!(Permutation::from_images(vec![0, 3]).is_err());
        assert!(Permutation::from_images(vec![1, 0, 2]).is_ok());
    }

    fn arb_perm_of(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n as u8).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|images| Permutation { images })
    }

    fn arb_perm(max_degree: usize) -> impl Strategy<Value = Permutation> {
        (1..=max_degree).prop_flat_map(arb_perm_of)
    }

    fn arb_perm_pair(max_degree: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
        (1..=max_degree).prop_flat_map(|n| (arb_perm_of(n), arb_perm_of(n)))
    }

    proptest! {
        #[test]
        fn compose_is_associative(
            (a, b, c) in (1..=7usize)
                .prop_flat_map(|n| (arb_perm_of(n), arb_perm_of(n), arb_perm_of(n)))
        ) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        }

        #[test]
        fn inverse_cancels(a in arb_perm(8)) {
            prop_assert!(a.compose(&a.inverse()).is_identity());
            prop_assert!(a.inverse().compose(&a).is_identity());
        }

        #[test]
        fn rank_round_trips(a in arb_perm(8)) {
            let r = a.rank();
            prop_assert!(r < factorial(a.degree()));
            prop_assert_eq!(Permutation::unrank(a.degree(), r), a);
        }

        #[test]
        fn display_parse_round_trips(a in arb_perm(9)) {
            let text = a.to_string();
            prop_assert_eq!(Permutation::parse_cycles(&text, a.degree()).unwrap(), a);
        }

        #[test]
        fn conjugation_preserves_cycle_type((a, q) in arb_perm_pair(7)) {
            prop_assert_eq!(a.conjugated_by(&q).cycle_type(), a.cycle_type());
        }
    }
}
