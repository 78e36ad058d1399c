//! Harmonic operator, plethystic exponential and logarithm, and the product
//! and partition-sum expansions of y-inserted exponentials.
//!
//! For `f` without constant term, `PE[f] = exp(sum_(m>=1) f(v^m)/m)` where
//! `v^m` raises every variable to the `m`-th power. `PL` is its inverse,
//! obtained by Moebius inversion of the harmonic sum applied to `log F`.

use thiserror::Error;

use crate::partitions::partitions_of;
use crate::series::{int, rat, Monomial, Rational, Series, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlethysticError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("series must not involve the inserted variable {0:?}")]
    InvolvesInsertedVariable(String),
}

/// `sum_(m>=1) f(v^m) / m`, summed until the substitution is truncated away.
pub fn harmonic(f: &Series) -> Result<Series, SeriesError> {
    let c = f.constant_term();
    if !num_traits::Zero::is_zero(&c) {
        return Err(SeriesError::NonzeroConstantTerm(c));
    }
    let mut acc = Series::zero(f.ring());
    for m in 1u32.. {
        let term = f.adams(m);
        if term.is_zero() {
            break;
        }
        acc = &acc + &term.scale(&rat(1, m.into()));
    }
    Ok(acc)
}

/// Plethystic exponential `exp(harmonic(f))`.
pub fn pe(f: &Series) -> Result<Series, SeriesError> {
    harmonic(f)?.exp()
}

/// Plethystic logarithm: the zero-constant-term `f` with `pe(f) = big_f`.
pub fn pl(big_f: &Series) -> Result<Series, SeriesError> {
    let log = big_f.log()?;
    let mut acc = Series::zero(big_f.ring());
    for m in 1u32.. {
        let term = log.adams(m);
        if term.is_zero() {
            break;
        }
        let mu = mobius(m);
        if mu != 0 {
            acc = &acc + &term.scale(&rat(mu, m.into()));
        }
    }
    Ok(acc)
}

/// Moebius function.
pub fn mobius(mut n: u32) -> i64 {
    assert!(n >= 1);
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn inserted_index(g: &Series, y: &str) -> Result<usize, PlethysticError> {
    let idx = g.ring().index_of(y)?;
    if g.involves(idx) {
        return Err(PlethysticError::InvolvesInsertedVariable(y.to_string()));
    }
    Ok(idx)
}

/// `PE(g*y)` as the truncated product `prod_k (1 - y v^k)^(-a_k)` over the
/// terms `a_k v^k` of `g`.
pub fn pe_product_form(g: &Series, y: &str) -> Result<Series, PlethysticError> {
    let y_idx = inserted_index(g, y)?;
    let ring = g.ring();
    let one = Series::one(ring);
    let y_mono = Monomial::var_power(ring.arity(), y_idx, 1);
    let mut acc = one.clone();
    for (m, a) in g.terms() {
        let factor = &one - &Series::monomial(ring, m.clone(), int(1)).shift(&y_mono);
        if factor == one {
            // y * v^k is truncated away entirely
            continue;
        }
        acc = &acc * &factor.pow(&-a)?;
    }
    Ok(acc)
}

/// `PE(g*y)` as `1 + sum_n y^n sum_(lambda |- n) prod_j g(v^j)^(m_j) / (m_j! j^(m_j))`.
pub fn pe_partition_sum(g: &Series, y: &str) -> Result<Series, PlethysticError> {
    let y_idx = inserted_index(g, y)?;
    let ring = g.ring();
    let max_n = ring.cap_of(y_idx);
    let adams: Vec<Series> = (1..=max_n.max(1)).map(|j| g.adams(j)).collect();
    let mut acc = Series::zero(ring);
    for n in 0..=max_n {
        let mut coeff = Series::zero(ring);
        for lambda in partitions_of(n) {
            let mut term = Series::one(ring);
            let mut weight = Rational::from_integer(1.into());
            for (j, m) in lambda.part_counts() {
                term = &term * &adams[j as usize - 1].pow_int(m.into())?;
                weight *= Rational::from_integer(crate::partitions::factorial(m).into()) * int(j.into()).pow(m as i32);
            }
            coeff = &coeff + &term.scale(&weight.recip());
        }
        acc = &acc + &coeff.shift(&Monomial::var_power(ring.arity(), y_idx, n));
    }
    Ok(acc)
}
