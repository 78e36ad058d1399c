//! Strategies and small constructors shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use num_bigint::BigInt;
use plethy::series::{Monomial, Rational, Series, SeriesRing};
use proptest::prelude::*;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn z(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ints(values: &[i64]) -> Vec<Rational> {
    values.iter().map(|&v| z(v)).collect()
}

/// The two rings random series are drawn from: one variable up to degree 8,
/// or two variables with caps (5, 4).
pub fn rings() -> Vec<Arc<SeriesRing>> {
    vec![
        SeriesRing::of(&[("x", 8)]).unwrap(),
        SeriesRing::of(&[("x", 5), ("y", 4)]).unwrap(),
    ]
}

fn build(ring: &Arc<SeriesRing>, raw: &[(u32, u32, i64, i64)], with_constant: bool) -> Series {
    let caps = ring.caps().as_slice().to_vec();
    let terms = raw.iter().filter_map(|&(a, b, n, d)| {
        let mut e = vec![a % (caps[0] + 1)];
        if caps.len() > 1 {
            e.push(b % (caps[1] + 1));
        }
        let m = Monomial::new(e);
        (with_constant || !m.is_one()).then(|| (m, q(n, d)))
    });
    Series::from_terms(ring, terms)
}

fn raw_terms(integer: bool) -> impl Strategy<Value = Vec<(u32, u32, i64, i64)>> {
    let denom = if integer { 1..2i64 } else { 1..5i64 };
    prop::collection::vec((0..9u32, 0..5u32, -4..5i64, denom), 0..6)
}

/// Sparse series with rational coefficients and zero constant term.
pub fn sparse_series() -> impl Strategy<Value = Series> {
    (0..2usize, raw_terms(false)).prop_map(|(i, raw)| build(&rings()[i], &raw, false))
}

/// Sparse series with integer coefficients and zero constant term.
pub fn sparse_integer_series() -> impl Strategy<Value = Series> {
    (0..2usize, raw_terms(true)).prop_map(|(i, raw)| build(&rings()[i], &raw, false))
}

/// Two sparse series in the same ring, constant terms allowed.
pub fn series_pair() -> impl Strategy<Value = (Series, Series)> {
    (0..2usize, raw_terms(false), raw_terms(false))
        .prop_map(|(i, a, b)| (build(&rings()[i], &a, true), build(&rings()[i], &b, true)))
}

/// Sparse rational series in `x` only, inside the ring `x <= 6, y <= 4`.
pub fn x_only_series() -> impl Strategy<Value = Series> {
    raw_terms(false).prop_map(|raw| {
        let ring = SeriesRing::of(&[("x", 6), ("y", 4)]).unwrap();
        let terms = raw
            .into_iter()
            .map(|(a, _, n, d)| (Monomial::new(vec![a % 7, 0]), q(n, d)));
        Series::from_terms(&ring, terms)
    })
}

/// Two sparse series without constant term in the same ring.
pub fn sparse_pair() -> impl Strategy<Value = (Series, Series)> {
    (0..2usize, raw_terms(false), raw_terms(false))
        .prop_map(|(i, a, b)| (build(&rings()[i], &a, false), build(&rings()[i], &b, false)))
}
