//! Cycle index `Z_n` of the symmetric group, its evaluation at a series, and
//! the recursion `Z_n[g] = (1/n) sum_k g(v^k) Z_(n-k)[g]`.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::partitions::{factorial, partitions_of, Partition};
use crate::series::{int, render_rational, Rational, Series, SeriesError, SeriesRing};

/// `Z_n = (1/n!) sum_sigma prod_j p_j^(sigma_j)`, stored one term per cycle
/// type with coefficient `class_size / n!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleIndexPoly {
    n: u32,
    terms: Vec<(Partition, Rational)>,
}

impl CycleIndexPoly {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Terms in the order of [`partitions_of`].
    pub fn terms(&self) -> &[(Partition, Rational)] {
        &self.terms
    }

    pub fn coefficient(&self, lambda: &Partition) -> Rational {
        self.terms
            .iter()
            .find(|(p, _)| p == lambda)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Substitutes `p_j -> g(v^j)`.
    pub fn evaluate(&self, g: &Series) -> Result<Series, SeriesError> {
        let adams: Vec<Series> = (1..=self.n).map(|j| g.adams(j)).collect();
        let mut acc = Series::zero(g.ring());
        for (lambda, c) in &self.terms {
            let mut term = Series::one(g.ring());
            for (j, m) in lambda.part_counts() {
                term = &term * &adams[j as usize - 1].pow_int(m.into())?;
            }
            acc = &acc + &term.scale(c);
        }
        Ok(acc)
    }
}

impl fmt::Display for CycleIndexPoly {
    /// `1/6*p1^3 + 1/2*p1*p2 + 1/3*p3`, all-ones cycle type first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 0 {
            return write!(f, "1");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(lambda, c)| {
                let mono: Vec<String> = lambda
                    .part_counts()
                    .into_iter()
                    .map(|(j, m)| if m == 1 { format!("p{j}") } else { format!("p{j}^{m}") })
                    .collect();
                let mono = mono.join("*");
                if c == &int(1) {
                    mono
                } else {
                    format!("{}*{}", render_rational(c), mono)
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

pub fn zn(n: u32) -> CycleIndexPoly {
    let n_fact = Rational::from_integer(factorial(n).into());
    let terms = partitions_of(n)
        .into_iter()
        .map(|lambda| {
            let c = Rational::from_integer(lambda.class_size().into()) / &n_fact;
            (lambda, c)
        })
        .collect();
    CycleIndexPoly { n, terms }
}

/// `Z_n[g] = Z_n(g(v), g(v^2), ..., g(v^n))`.
pub fn zn_evaluate(n: u32, g: &Series) -> Result<Series, SeriesError> {
    zn(n).evaluate(g)
}

/// `[Z_0[g], Z_1[g], ..., Z_n[g]]` by the recursion, with `Z_0[g] = 1`.
pub fn cycle_index_sequence(g: &Series, n: u32) -> Vec<Series> {
    let ring = g.ring();
    let adams: Vec<Series> = (1..=n).map(|k| g.adams(k)).collect();
    let mut out = vec![Series::one(ring)];
    for m in 1..=n as usize {
        let mut acc = Series::zero(ring);
        for k in 1..=m {
            acc = &acc + &(&adams[k - 1] * &out[m - k]);
        }
        out.push(acc.scale(&Rational::new(1.into(), m.into())));
    }
    out
}

/// `h = prod_i (1 - v_i)^(r_i)` for exponents `(var index, r_i)`.
pub fn power_product(ring: &Arc<SeriesRing>, exponents: &[(usize, Rational)]) -> Result<Series, SeriesError> {
    let one = Series::one(ring);
    let mut h = one.clone();
    for (v, r) in exponents {
        h = &h * &(&one - &Series::var_power(ring, *v, 1)).pow(r)?;
    }
    Ok(h)
}

/// `Q_n^r` via the cycle-index recursion on `h = prod_i (1 - v_i)^(r_i)`.
pub fn qnr_recursive(n: u32, ring: &Arc<SeriesRing>, exponents: &[(usize, Rational)]) -> Result<Series, SeriesError> {
    let h = power_product(ring, exponents)?;
    Ok(cycle_index_sequence(&h, n).pop().expect("sequence is non-empty"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_cycle_indices() {
        let z1 = zn(1);
        assert_eq!(z1.terms(), &[(p(&[1]), int(1))]);
        assert_eq!(z1.to_string(), "p1");
        let z2 = zn(2);
        assert_eq!(z2.coefficient(&p(&[1, 1])), rat(1, 2));
        assert_eq!(z2.coefficient(&p(&[2])), rat(1, 2));
        let z3 = zn(3);
        assert_eq!(z3.coefficient(&p(&[1, 1, 1])), rat(1, 6));
        assert_eq!(z3.coefficient(&p(&[2, 1])), rat(1, 2));
        assert_eq!(z3.coefficient(&p(&[3])), rat(1, 3));
        assert_eq!(z3.to_string(), "1/6*p1^3 + 1/2*p1*p2 + 1/3*p3");
        assert_eq!(zn(0).to_string(), "1");
    }

    #[test]
    fn coefficients_sum_to_one() {
        for n in 0..=12 {
            let total: Rational = zn(n).terms().iter().map(|(_, c)| c.clone()).sum();
            assert_eq!(total, int(1));
        }
    }

    #[test]
    fn evaluation_examples() {
        let ring = SeriesRing::of(&[("x", 10)]).unwrap();
        for n in 1..=6 {
            assert_eq!(zn_evaluate(n, &Series::one(&ring)).unwrap(), Series::one(&ring));
        }
        let one_minus_x = power_product(&ring, &[(0, int(1))]).unwrap();
        let q22 = zn_evaluate(2, &one_minus_x.pow_int(2).unwrap()).unwrap();
        let expect = Series::from_coefficients(&ring, 0, &[1, -2, 2, -2, 1].map(int));
        assert_eq!(q22, expect);
        assert_eq!(zn_evaluate(5, &one_minus_x).unwrap(), one_minus_x);
    }

    #[test]
    fn recursion_examples() {
        let ring = SeriesRing::of(&[("x", 10)]).unwrap();
        assert_eq!(qnr_recursive(0, &ring, &[(0, int(2))]).unwrap(), Series::one(&ring));
        let one_minus_x = power_product(&ring, &[(0, int(1))]).unwrap();
        assert_eq!(qnr_recursive(3, &ring, &[(0, int(1))]).unwrap(), one_minus_x);
        let tail = Series::from_coefficients(&ring, 0, &[1, 0, 1, 0, 1, 0, 1].map(int));
        let expect = &one_minus_x.pow_int(2).unwrap() * &tail;
        assert_eq!(qnr_recursive(4, &ring, &[(0, int(2))]).unwrap(), expect);
    }

    #[test]
    fn recursion_matches_direct_evaluation() {
        let ring = SeriesRing::of(&[("x", 6), ("q", 6)]).unwrap();
        let exps = [(0, int(2)), (1, rat(-1, 2))];
        let h = power_product(&ring, &exps).unwrap();
        let seq = cycle_index_sequence(&h, 5);
        for (n, value) in seq.iter().enumerate() {
            assert_eq!(value, &zn_evaluate(n as u32, &h).unwrap());
        }
    }
}
