//! Integer partitions, their multiplicity view, conjugacy-class sizes in
//! the symmetric group, and colored-partition generating functions.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::plethystic;
use crate::series::{binomial, int, Series, SeriesRing};

/// A partition of `n`: weakly decreasing positive parts summing to `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts into weakly decreasing order. Returns `None` if a
    /// part is zero.
    pub fn new(mut parts: Vec<u32>) -> Option<Self> {
        if parts.contains(&0) {
            return None;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `m[j-1]` is the number of parts equal to `j`, for `j = 1..=n`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0; self.n() as usize];
        for &p in &self.parts {
            m[p as usize - 1] += 1;
        }
        m
    }

    /// `(j, m_j)` pairs for the part sizes that occur, ascending in `j`.
    pub fn part_counts(&self) -> Vec<(u32, u32)> {
        self.multiplicities()
            .into_iter()
            .enumerate()
            .filter(|(_, m)| *m > 0)
            .map(|(j, m)| (j as u32 + 1, m))
            .collect()
    }

    /// Number of permutations with this cycle type:
    /// `n! / prod_j (m_j! * j^m_j)`.
    pub fn class_size(&self) -> BigUint {
        let mut denom = BigUint::one();
        for (j, m) in self.part_counts() {
            denom *= factorial(m) * BigUint::from(j).pow(m);
        }
        factorial(self.n()) / denom
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Every partition of `n`, largest first part first (reverse lexicographic).
/// `partitions_of(0)` is the single empty partition.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// Generating function of partitions whose parts are colored with `colors`
/// colors, truncated at `x^cap`.
///
/// A part of size `k` made of `k` identical objects can be colored in
/// `C(k+c-1, k)` ways, so the series is `PE((1-x)^(-c) - 1)`.
pub fn colored_partition_series(colors: u32, cap: u32) -> Series {
    let ring = SeriesRing::of(&[("x", cap)]).expect("static ring");
    let c = int(colors.into());
    let coeffs: Vec<_> = (0..=cap)
        .map(|k| {
            if k == 0 {
                int(0)
            } else {
                binomial(&(int(k.into()) + &c - int(1)), k)
            }
        })
        .collect();
    let g = Series::from_coefficients(&ring, 0, &coeffs);
    plethystic::pe(&g).expect("no constant term")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Rational;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(5).len(), 7);
        let four: Vec<Vec<u32>> = partitions_of(4).iter().map(|q| q.parts().to_vec()).collect();
        assert_eq!(
            four,
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
    }

    #[test]
    fn multiplicity_view() {
        assert_eq!(p(&[3, 1, 1]).multiplicities(), vec![2, 0, 1, 0, 0]);
        assert_eq!(p(&[1, 1, 1]).multiplicities(), vec![3, 0, 0]);
        assert_eq!(p(&[4]).multiplicities(), vec![0, 0, 0, 1]);
        assert_eq!(Partition::empty().multiplicities(), Vec::<u32>::new());
        for n in 0..=12 {
            for q in partitions_of(n) {
                let weighted: u32 = q
                    .multiplicities()
                    .iter()
                    .enumerate()
                    .map(|(j, m)| (j as u32 + 1) * m)
                    .sum();
                assert_eq!(weighted, n);
            }
        }
    }

    #[test]
    fn rejects_zero_parts_and_sorts() {
        assert!(Partition::new(vec![2, 0]).is_none());
        assert_eq!(p(&[1, 3, 2]).parts(), &[3, 2, 1]);
    }

    #[test]
    fn class_sizes() {
        assert_eq!(p(&[1, 1, 1]).class_size(), BigUint::from(1u32));
        assert_eq!(p(&[3]).class_size(), BigUint::from(2u32));
        assert_eq!(p(&[2, 1]).class_size(), BigUint::from(3u32));
        for n in 0..=10 {
            let total: BigUint = partitions_of(n).iter().map(Partition::class_size).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn colored_series_matches_known_counts() {
        let one: Vec<Rational> = colored_partition_series(1, 6).coefficients_along(0);
        assert_eq!(one, [1, 1, 2, 3, 5, 7, 11].map(int).to_vec());
        let two = colored_partition_series(2, 6).coefficients_along(0);
        assert_eq!(two, [1, 2, 6, 14, 33, 70, 149].map(int).to_vec());
        let three = colored_partition_series(3, 2).coefficients_along(0);
        assert_eq!(three[2], int(12));
    }
}
