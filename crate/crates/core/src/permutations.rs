//! Permutations of `{1..n}`, cycle types, and characteristic polynomials
//! `det(I - x M_sigma)` computed both from the cycle type and from the
//! literal matrix.
//!
//! `M_sigma` has a 1 at `(sigma(i), i)`: it sends basis vector `e_i` to
//! `e_sigma(i)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::partitions::{factorial, partitions_of, Partition};
use crate::series::{int, Rational, Series, SeriesError, SeriesRing};

/// Largest `n` for which `enumerate_sn` lists `S_n` by default (`8! = 40320`).
pub const DEFAULT_ENUMERATION_CAP: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermutationError {
    #[error("n = {n} exceeds the enumeration cap {cap}; use the cycle-type route")]
    ExceedsEnumerationCap { n: u32, cap: u32 },
    #[error("images {0:?} do not form a bijection of 1..=n")]
    NotABijection(Vec<usize>),
    #[error("S_0 has no permutations to enumerate; n must be positive")]
    EmptyGroup,
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// A bijection of `{1..n}`; stored zero-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From one-based images: `images[i-1] = sigma(i)`.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermutationError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(PermutationError::NotABijection(images));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|v| v - 1).collect(),
        })
    }

    /// From disjoint one-based cycles; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, PermutationError> {
        let mut images: Vec<usize> = (1..=n).collect();
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                if a == 0 || a > n {
                    return Err(PermutationError::NotABijection(images));
                }
                images[a - 1] = b;
            }
        }
        Self::from_images(images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `sigma(i)` for one-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// Disjoint cycles in one-based notation, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(|c| c.len() as u32).collect()).expect("cycles are non-empty")
    }

    fn next_lexicographic(&mut self) -> bool {
        let a = &mut self.images;
        if a.len() < 2 {
            return false;
        }
        let mut i = a.len() - 1;
        while i > 0 && a[i - 1] >= a[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = a.len() - 1;
        while a[j] <= a[i - 1] {
            j -= 1;
        }
        a.swap(i - 1, j);
        a[i..].reverse();
        true
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.cycles() {
            let items: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", items.join(" "))?;
        }
        Ok(())
    }
}

/// All of `S_n` in lexicographic order of the image vectors.
pub fn enumerate_sn(n: u32) -> Result<Vec<Permutation>, PermutationError> {
    enumerate_sn_capped(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_sn_capped(n: u32, cap: u32) -> Result<Vec<Permutation>, PermutationError> {
    if n == 0 {
        return Err(PermutationError::EmptyGroup);
    }
    if n > cap {
        return Err(PermutationError::ExceedsEnumerationCap { n, cap });
    }
    let mut current = Permutation::identity(n as usize);
    let mut out = vec![current.clone()];
    while current.next_lexicographic() {
        out.push(current.clone());
    }
    Ok(out)
}

/// `prod_j (1 - v^(power*j))^(exponent * m_j)` for a cycle type with
/// multiplicities `m_j`, where `v` is the variable at `var`.
fn cycle_type_power(
    ring: &Arc<SeriesRing>,
    cycle_type: &Partition,
    var: usize,
    power: u32,
    exponent: &Rational,
) -> Result<Series, SeriesError> {
    let one = Series::one(ring);
    let mut acc = one.clone();
    for (j, m) in cycle_type.part_counts() {
        let factor = &one - &Series::var_power(ring, var, power * j);
        acc = &acc * &factor.pow(&(exponent * int(m.into())))?;
    }
    Ok(acc)
}

/// `det(I_n - v M_sigma)^r` from the cycle type of `sigma`.
pub fn char_poly(sigma: &Permutation, ring: &Arc<SeriesRing>, var: usize, r: &Rational) -> Result<Series, SeriesError> {
    cycle_type_power(ring, &sigma.cycle_type(), var, 1, r)
}

/// `det(I_n - v M_sigma)` by memoized Laplace expansion of the literal
/// matrix over integer polynomials; no division anywhere.
pub fn char_poly_det_oracle(
    sigma: &Permutation,
    ring: &Arc<SeriesRing>,
    var: usize,
) -> Result<Series, PermutationError> {
    let n = sigma.len();
    if n as u32 > DEFAULT_ENUMERATION_CAP {
        return Err(PermutationError::ExceedsEnumerationCap {
            n: n as u32,
            cap: DEFAULT_ENUMERATION_CAP,
        });
    }
    // entry (row, col) = delta(row, col) - x * [row == sigma(col)]
    let entry = |row: usize, col: usize| -> Vec<i64> {
        let constant = i64::from(row == col);
        let linear = -i64::from(sigma.images[col] == row);
        vec![constant, linear]
    };
    let mut memo: HashMap<u32, Vec<i64>> = HashMap::new();
    let full_mask = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let det = laplace(0, full_mask, n, &entry, &mut memo);
    let coeffs: Vec<Rational> = det.into_iter().map(int).collect();
    Ok(Series::from_coefficients(ring, var, &coeffs))
}

/// Determinant of the minor with rows `row..n` and the columns in `mask`.
fn laplace(
    row: usize,
    mask: u32,
    n: usize,
    entry: &dyn Fn(usize, usize) -> Vec<i64>,
    memo: &mut HashMap<u32, Vec<i64>>,
) -> Vec<i64> {
    if row == n {
        return vec![1];
    }
    if let Some(d) = memo.get(&mask) {
        return d.clone();
    }
    let mut total = vec![0i64; n - row + 1];
    let mut position = 0;
    for col in 0..n {
        if mask & (1 << col) == 0 {
            continue;
        }
        let a = entry(row, col);
        if a.iter().any(|&c| c != 0) {
            let minor = laplace(row + 1, mask & !(1 << col), n, entry, memo);
            let sign = if position % 2 == 0 { 1 } else { -1 };
            for (i, ai) in a.iter().enumerate() {
                for (j, mj) in minor.iter().enumerate() {
                    if i + j < total.len() {
                        total[i + j] += sign * ai * mj;
                    }
                }
            }
        }
        position += 1;
    }
    memo.insert(mask, total.clone());
    total
}

/// One factor `det(I - v^power M_sigma)^exponent` of an averaged product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetFactor {
    pub var: usize,
    pub power: u32,
    pub exponent: Rational,
}

impl DetFactor {
    pub fn new(var: usize, exponent: Rational) -> Self {
        DetFactor {
            var,
            power: 1,
            exponent,
        }
    }

    /// Substitutes `v -> v^power` inside the determinant.
    pub fn with_power(mut self, power: u32) -> Self {
        self.power = power;
        self
    }
}

/// How the average over `S_n` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AverageMode {
    /// Enumerate every permutation.
    Permutations,
    /// Sum over partitions weighted by class size.
    CycleTypes,
}

fn factor_product(
    ring: &Arc<SeriesRing>,
    cycle_type: &Partition,
    factors: &[DetFactor],
) -> Result<Series, SeriesError> {
    let mut acc = Series::one(ring);
    for f in factors {
        acc = &acc * &cycle_type_power(ring, cycle_type, f.var, f.power, &f.exponent)?;
    }
    Ok(acc)
}

/// `(1/n!) sum_(sigma in S_n) prod_i det(I - v_i^(p_i) M_sigma)^(r_i)`.
///
/// Both modes return identical series; `Permutations` is limited by
/// [`DEFAULT_ENUMERATION_CAP`].
pub fn average_power(
    n: u32,
    ring: &Arc<SeriesRing>,
    factors: &[DetFactor],
    mode: AverageMode,
) -> Result<Series, PermutationError> {
    if n == 0 {
        return Ok(Series::one(ring));
    }
    let n_fact = Rational::from_integer(factorial(n).into());
    let mut total = Series::zero(ring);
    match mode {
        AverageMode::Permutations => {
            let mut cache: HashMap<Partition, Series> = HashMap::new();
            for sigma in enumerate_sn(n)? {
                let ct = sigma.cycle_type();
                if !cache.contains_key(&ct) {
                    let value = factor_product(ring, &ct, factors)?;
                    cache.insert(ct.clone(), value);
                }
                total = &total + &cache[&ct];
            }
        }
        AverageMode::CycleTypes => {
            for lambda in partitions_of(n) {
                let weight = Rational::from_integer(lambda.class_size().into());
                total = &total + &factor_product(ring, &lambda, factors)?.scale(&weight);
            }
        }
    }
    Ok(total.scale(&n_fact.recip()))
}

/// Permutation-enumeration form of [`average_power`] for `Q_n^r` with
/// exponents `r_i` on variables `v_i`.
pub fn average_power_bruteforce(
    n: u32,
    ring: &Arc<SeriesRing>,
    exponents: &[(usize, Rational)],
) -> Result<Series, PermutationError> {
    let factors: Vec<DetFactor> = exponents.iter().map(|(v, r)| DetFactor::new(*v, r.clone())).collect();
    average_power(n, ring, &factors, AverageMode::Permutations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn ring(cap: u32) -> Arc<SeriesRing> {
        SeriesRing::of(&[("x", cap)]).unwrap()
    }

    fn poly(r: &Arc<SeriesRing>, c: &[i64]) -> Series {
        Series::from_coefficients(r, 0, &c.iter().map(|&v| int(v)).collect::<Vec<_>>())
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_sn(1).unwrap().len(), 1);
        assert_eq!(enumerate_sn(3).unwrap().len(), 6);
        assert_eq!(enumerate_sn(8).unwrap().len(), 40320);
        assert_eq!(
            enumerate_sn(9),
            Err(PermutationError::ExceedsEnumerationCap { n: 9, cap: 8 })
        );
        let s3 = enumerate_sn(3).unwrap();
        let mut dedup = s3.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), 6);
        assert_eq!(s3[0], Permutation::identity(3));
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(4).cycle_type().parts(), &[1, 1, 1, 1]);
        let c3 = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(c3.cycle_type().parts(), &[3]);
        let t = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        assert_eq!(t.cycle_type().parts(), &[2, 1]);
        assert_eq!(t.to_string(), "(1 2)(3)");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![1, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 1]).is_err());
        assert!(Permutation::from_images(vec![2, 3, 1]).is_ok());
    }

    #[test]
    fn char_poly_examples() {
        let r = ring(10);
        for n in 1..=5 {
            let id = Permutation::identity(n);
            let expected = poly(&r, &[1, -1]).pow_int(n as i64).unwrap();
            assert_eq!(char_poly(&id, &r, 0, &int(1)).unwrap(), expected);
        }
        for k in 1..=6usize {
            let cycle: Vec<usize> = (1..=k).collect();
            let g = Permutation::from_cycles(k, &[&cycle]).unwrap();
            let mut c = vec![0; k + 1];
            c[0] = 1;
            c[k] = -1;
            assert_eq!(char_poly(&g, &r, 0, &int(1)).unwrap(), poly(&r, &c));
        }
        let t = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        assert_eq!(char_poly(&t, &r, 0, &int(1)).unwrap(), poly(&r, &[1, -1, -1, 1]));
        assert_eq!(char_poly_det_oracle(&t, &r, 0).unwrap(), poly(&r, &[1, -1, -1, 1]));
    }

    #[test]
    fn oracle_small_cases() {
        let r = ring(10);
        let id2 = Permutation::identity(2);
        assert_eq!(char_poly_det_oracle(&id2, &r, 0).unwrap(), poly(&r, &[1, -2, 1]));
        let swap = Permutation::from_images(vec![2, 1]).unwrap();
        assert_eq!(char_poly_det_oracle(&swap, &r, 0).unwrap(), poly(&r, &[1, 0, -1]));
        for sigma in enumerate_sn(5).unwrap() {
            assert_eq!(
                char_poly_det_oracle(&sigma, &r, 0).unwrap(),
                char_poly(&sigma, &r, 0, &int(1)).unwrap(),
                "sigma = {sigma}"
            );
        }
    }

    #[test]
    fn average_examples() {
        let r = ring(8);
        let q1 = average_power_bruteforce(1, &r, &[(0, rat(1, 2))]).unwrap();
        assert_eq!(q1, poly(&r, &[1, -1]).pow(&rat(1, 2)).unwrap());
        let q2 = average_power_bruteforce(2, &r, &[(0, int(2))]).unwrap();
        assert_eq!(q2, poly(&r, &[1, -2, 2, -2, 1]));
        let q3 = average_power_bruteforce(3, &r, &[(0, int(1))]).unwrap();
        assert_eq!(q3, poly(&r, &[1, -1]));
        let zero = average_power_bruteforce(0, &r, &[(0, int(3))]).unwrap();
        assert_eq!(zero, Series::one(&r));
    }

    #[test]
    fn modes_agree_small() {
        let r = ring(8);
        for n in 1..=5 {
            for e in [-2, -1, 0, 1, 2, 3] {
                let f = [DetFactor::new(0, int(e))];
                assert_eq!(
                    average_power(n, &r, &f, AverageMode::Permutations).unwrap(),
                    average_power(n, &r, &f, AverageMode::CycleTypes).unwrap()
                );
            }
        }
    }
}
