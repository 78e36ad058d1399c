//! Sparse truncated multivariate power series with exact rational coefficients.
//!
//! A [`Series`] lives in a [`SeriesRing`]: an ordered set of named variables
//! together with one truncation cap per variable. Arithmetic happens in the
//! quotient ring where every monomial exceeding some cap is zero, so results
//! are exact for every coefficient that is kept.
//!
//! Invariants maintained by every constructor and operation:
//! - no stored coefficient is zero;
//! - no stored monomial exceeds the caps;
//! - binary operations only combine series of equal rings.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Exact rational number backed by arbitrary-precision integers.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("a variable set needs at least one variable")]
    EmptyVariableSet,
    #[error("invalid variable name {0:?}")]
    InvalidVariableName(String),
    #[error("duplicate variable {0:?}")]
    DuplicateVariable(String),
    #[error("expected {expected} truncation caps, got {found}")]
    CapCount { expected: usize, found: usize },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("series live in different rings: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("monomial has {found} exponents but the ring has {expected} variables")]
    Arity { expected: usize, found: usize },
    #[error("monomial {0} lies outside the truncation caps; its coefficient is unknown")]
    OutsideCaps(String),
    #[error("series has nonzero constant term {0}")]
    NonzeroConstantTerm(Rational),
    #[error("constant term must be exactly 1, found {0}")]
    ConstantTermNotOne(Rational),
    #[error("series with zero constant term has no inverse")]
    NotInvertible,
}

pub type Result<T, E = SeriesError> = std::result::Result<T, E>;

/// `C(r, k) = r (r-1) ... (r-k+1) / k!`, with `C(r, 0) = 1`.
pub fn binomial(r: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc *= r - Rational::from_integer(BigInt::from(i));
        acc /= Rational::from_integer(BigInt::from(i + 1));
    }
    acc
}

/// Ordered, duplicate-free list of variable names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableSet {
    names: Vec<String>,
}

impl VariableSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(SeriesError::EmptyVariableSet);
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(SeriesError::InvalidVariableName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(SeriesError::DuplicateVariable(name.clone()));
            }
        }
        Ok(VariableSet { names })
    }

    /// `prefix1, prefix2, ..., prefix{count}`.
    pub fn indexed(prefix: &str, count: usize) -> Result<Self> {
        Self::new((1..=count).map(|i| format!("{prefix}{i}")))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| SeriesError::UnknownVariable(name.to_string()))
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Per-variable maximum exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncationCaps {
    caps: Vec<u32>,
}

impl TruncationCaps {
    pub fn new(caps: Vec<u32>) -> Self {
        TruncationCaps { caps }
    }

    pub fn uniform(count: usize, cap: u32) -> Self {
        TruncationCaps { caps: vec![cap; count] }
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.caps
    }

    pub fn len(&self) -> usize {
        self.caps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.caps.is_empty()
    }
}

/// Exponent vector, positional with respect to a [`VariableSet`].
///
/// Monomials are ordered graded-lexicographically: lower total degree first,
/// and within one degree the larger exponent of an earlier variable first
/// (`x^2 < x*y < y^2`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    /// `var^exp` in a ring with `arity` variables.
    pub fn var_power(arity: usize, var: usize, exp: u32) -> Self {
        let mut e = vec![0; arity];
        e[var] = exp;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The truncated ring `Q[[vars]] / (v_i^(cap_i + 1))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeriesRing {
    vars: VariableSet,
    caps: TruncationCaps,
}

impl SeriesRing {
    pub fn new(vars: VariableSet, caps: TruncationCaps) -> Result<Arc<Self>> {
        if vars.len() != caps.len() {
            return Err(SeriesError::CapCount {
                expected: vars.len(),
                found: caps.len(),
            });
        }
        Ok(Arc::new(SeriesRing { vars, caps }))
    }

    /// Shorthand for tests and examples: `SeriesRing::of(&[("x", 8), ("y", 4)])`.
    pub fn of(entries: &[(&str, u32)]) -> Result<Arc<Self>> {
        let vars = VariableSet::new(entries.iter().map(|(n, _)| *n))?;
        let caps = TruncationCaps::new(entries.iter().map(|(_, c)| *c).collect());
        Self::new(vars, caps)
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn caps(&self) -> &TruncationCaps {
        &self.caps
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.vars.index_of(name)
    }

    pub fn cap_of(&self, var: usize) -> u32 {
        self.caps.caps[var]
    }

    /// Largest total degree a surviving monomial can have.
    pub fn degree_bound(&self) -> u32 {
        self.caps.caps.iter().sum()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        m.0.len() == self.arity() && m.0.iter().zip(&self.caps.caps).all(|(e, c)| e <= c)
    }

    fn product(&self, a: &Monomial, b: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(a.0.len());
        for ((x, y), cap) in a.0.iter().zip(&b.0).zip(&self.caps.caps) {
            let s = x + y;
            if s > *cap {
                return None;
            }
            out.push(s);
        }
        Some(Monomial(out))
    }

    /// Renders `x^2*y`; the unit monomial renders as `1`.
    pub fn render_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = self
            .vars
            .names
            .iter()
            .zip(&m.0)
            .filter(|(_, &e)| e > 0)
            .map(|(n, &e)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    fn describe(&self) -> String {
        let parts: Vec<String> = self
            .vars
            .names
            .iter()
            .zip(&self.caps.caps)
            .map(|(n, c)| format!("{n}<={c}"))
            .collect();
        format!("[{}]", parts.join(", "))
    }
}

/// Truncated formal power series. Immutable; every operation returns a new value.
#[derive(Debug, Clone)]
pub struct Series {
    ring: Arc<SeriesRing>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Series {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) && self.terms == other.terms
    }
}

impl Eq for Series {}

impl Series {
    pub fn zero(ring: &Arc<SeriesRing>) -> Self {
        Series {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<SeriesRing>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Arc<SeriesRing>, c: Rational) -> Self {
        Self::monomial(ring, Monomial::one(ring.arity()), c)
    }

    pub fn from_int(ring: &Arc<SeriesRing>, c: i64) -> Self {
        Self::constant(ring, Rational::from_integer(c.into()))
    }

    /// `c * m`, or zero when `m` is outside the caps.
    ///
    /// Panics if `m` has the wrong number of exponents.
    pub fn monomial(ring: &Arc<SeriesRing>, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.0.len(), ring.arity(), "monomial arity does not match ring");
        let mut s = Self::zero(ring);
        if !c.is_zero() && ring.contains(&m) {
            s.terms.insert(m, c);
        }
        s
    }

    pub fn variable(ring: &Arc<SeriesRing>, name: &str) -> Result<Self> {
        let idx = ring.index_of(name)?;
        Ok(Self::var_power(ring, idx, 1))
    }

    /// `v^exp` for the variable at position `var`.
    pub fn var_power(ring: &Arc<SeriesRing>, var: usize, exp: u32) -> Self {
        Self::monomial(ring, Monomial::var_power(ring.arity(), var, exp), Rational::one())
    }

    /// Sums the given terms, dropping zeros and monomials beyond the caps.
    pub fn from_terms<I>(ring: &Arc<SeriesRing>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut out: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.0.len(), ring.arity(), "monomial arity does not match ring");
            if !ring.contains(&m) {
                continue;
            }
            *out.entry(m).or_insert_with(Rational::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        Series {
            ring: Arc::clone(ring),
            terms: out,
        }
    }

    /// Builds `sum c_k v^k` from a coefficient list in the variable at `var`.
    pub fn from_coefficients(ring: &Arc<SeriesRing>, var: usize, coeffs: &[Rational]) -> Self {
        Self::from_terms(
            ring,
            coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::var_power(ring.arity(), var, k as u32), c.clone())),
        )
    }

    pub fn ring(&self) -> &Arc<SeriesRing> {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one(self.ring.arity()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Stored coefficient, or zero when absent. Monomials beyond the caps are
    /// rejected: their coefficient is not known.
    pub fn coefficient_of(&self, m: &Monomial) -> Result<Rational> {
        if m.0.len() != self.ring.arity() {
            return Err(SeriesError::Arity {
                expected: self.ring.arity(),
                found: m.0.len(),
            });
        }
        if !self.ring.contains(m) {
            return Err(SeriesError::OutsideCaps(self.ring.render_monomial(m)));
        }
        Ok(self.terms.get(m).cloned().unwrap_or_else(Rational::zero))
    }

    /// Convenience form of [`Series::coefficient_of`] taking raw exponents.
    pub fn coefficient(&self, exponents: &[u32]) -> Result<Rational> {
        self.coefficient_of(&Monomial::new(exponents.to_vec()))
    }

    /// Coefficients of `v^0 .. v^cap` for the variable at `var`, assuming
    /// the other exponents are zero.
    pub fn coefficients_along(&self, var: usize) -> Vec<Rational> {
        (0..=self.ring.cap_of(var))
            .map(|k| {
                let m = Monomial::var_power(self.ring.arity(), var, k);
                self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
            })
            .collect()
    }

    /// True when some stored monomial has a positive exponent in `var`.
    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    fn check_ring(&self, other: &Series) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(SeriesError::RingMismatch {
                left: self.ring.describe(),
                right: other.ring.describe(),
            })
        }
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check_ring(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            match terms.get_mut(m) {
                Some(v) => {
                    *v += c;
                    if v.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        Ok(Series {
            ring: Arc::clone(&self.ring),
            terms,
        })
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.add(&other.negate())
    }

    pub fn negate(&self) -> Series {
        Series {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Series {
        if c.is_zero() {
            return Series::zero(&self.ring);
        }
        Series {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by a single monomial, dropping whatever leaves the caps.
    pub fn shift(&self, m: &Monomial) -> Series {
        Series {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .filter_map(|(k, c)| self.ring.product(k, m).map(|p| (p, c.clone())))
                .collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Series::zero(&self.ring));
        }
        let (a, da) = self.integral_terms();
        let (b, db) = other.integral_terms();
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                if let Some(m) = self.ring.product(ma, mb) {
                    *acc.entry(m).or_insert_with(BigInt::zero) += ca * cb;
                }
            }
        }
        let den = da * db;
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m, Rational::new(c, den.clone())))
            .collect();
        Ok(Series {
            ring: Arc::clone(&self.ring),
            terms,
        })
    }

    /// Numerators over a common denominator, so the product kernel only
    /// touches integers.
    fn integral_terms(&self) -> (Vec<(&Monomial, BigInt)>, BigInt) {
        let den = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m, c.numer() * (&den / c.denom())))
            .collect();
        (terms, den)
    }

    /// Substitutes every variable `v -> v^m`.
    pub fn adams(&self, m: u32) -> Series {
        assert!(m >= 1, "adams substitution needs m >= 1");
        Series {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .filter_map(|(k, c)| {
                    let scaled = Monomial(k.0.iter().map(|e| e * m).collect());
                    self.ring.contains(&scaled).then(|| (scaled, c.clone()))
                })
                .collect(),
        }
    }

    /// Homogeneous components by total degree, indexed `0..=degree_bound`.
    pub fn graded_parts(&self) -> Vec<Series> {
        let bound = self.ring.degree_bound() as usize;
        let mut parts = vec![BTreeMap::new(); bound + 1];
        for (m, c) in &self.terms {
            parts[m.degree() as usize].insert(m.clone(), c.clone());
        }
        parts
            .into_iter()
            .map(|terms| Series {
                ring: Arc::clone(&self.ring),
                terms,
            })
            .collect()
    }

    fn sum_parts(ring: &Arc<SeriesRing>, parts: Vec<Series>) -> Series {
        let mut terms = BTreeMap::new();
        for p in parts {
            terms.extend(p.terms);
        }
        Series {
            ring: Arc::clone(ring),
            terms,
        }
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    ///
    /// Solved degree by degree from `a * b = 1`.
    pub fn inverse(&self) -> Result<Series> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let c_inv = c.recip();
        let a = self.graded_parts();
        let mut b: Vec<Series> = Vec::with_capacity(a.len());
        b.push(Series::constant(&self.ring, c_inv.clone()));
        let neg_c_inv = -c_inv;
        for d in 1..a.len() {
            let mut acc = Series::zero(&self.ring);
            for k in 1..=d {
                if a[k].is_zero() || b[d - k].is_zero() {
                    continue;
                }
                acc = &acc + &(&a[k] * &b[d - k]);
            }
            b.push(acc.scale(&neg_c_inv));
        }
        Ok(Self::sum_parts(&self.ring, b))
    }

    /// Exact truncated `self^r`.
    ///
    /// Non-negative integer exponents work for any series; negative integers
    /// need an invertible series. Any other rational exponent needs constant
    /// term exactly 1 and expands the binomial series `sum C(r,k) u^k`.
    pub fn pow(&self, r: &Rational) -> Result<Series> {
        if r.is_integer() {
            let n = r.to_integer();
            if n.is_negative() {
                let inv = self.inverse()?;
                return Ok(inv.pow_uint(&(-n)));
            }
            return Ok(self.pow_uint(&n));
        }
        let c = self.constant_term();
        if !c.is_one() {
            return Err(SeriesError::ConstantTermNotOne(c));
        }
        let u = self.sub(&Series::one(&self.ring))?;
        let mut acc = Series::one(&self.ring);
        let mut u_k = Series::one(&self.ring);
        let mut k = 0u32;
        loop {
            k += 1;
            u_k = &u_k * &u;
            if u_k.is_zero() {
                break;
            }
            acc = &acc + &u_k.scale(&binomial(r, k));
        }
        Ok(acc)
    }

    pub fn pow_int(&self, n: i64) -> Result<Series> {
        self.pow(&Rational::from_integer(n.into()))
    }

    fn pow_uint(&self, n: &BigInt) -> Series {
        let mut result = Series::one(&self.ring);
        let mut base = self.clone();
        let mut e = n.clone();
        let two = BigInt::from(2);
        while !e.is_zero() {
            if e.is_odd() {
                result = &result * &base;
            }
            e /= &two;
            if !e.is_zero() {
                if base.is_zero() {
                    return Series::zero(&self.ring);
                }
                base = &base * &base;
            }
        }
        result
    }

    /// `exp(self)` for a series without constant term.
    ///
    /// Uses the Euler derivation `D = sum v_i d/dv_i`, which preserves the
    /// truncation ideal: `d E_d = sum_k k u_k E_(d-k)` on homogeneous parts.
    pub fn exp(&self) -> Result<Series> {
        let c = self.constant_term();
        if !c.is_zero() {
            return Err(SeriesError::NonzeroConstantTerm(c));
        }
        let u = self.graded_parts();
        let weighted: Vec<Series> = u
            .iter()
            .enumerate()
            .map(|(k, p)| p.scale(&Rational::from_integer(k.into())))
            .collect();
        let mut e: Vec<Series> = Vec::with_capacity(u.len());
        e.push(Series::one(&self.ring));
        for d in 1..u.len() {
            let mut acc = Series::zero(&self.ring);
            for k in 1..=d {
                if weighted[k].is_zero() || e[d - k].is_zero() {
                    continue;
                }
                acc = &acc + &(&weighted[k] * &e[d - k]);
            }
            e.push(acc.scale(&Rational::new(BigInt::one(), d.into())));
        }
        Ok(Self::sum_parts(&self.ring, e))
    }

    /// `log(self)` for a series with constant term 1.
    ///
    /// From `D F = F * D L`: `d L_d = d F_d - sum_(k<d) k L_k F_(d-k)`.
    pub fn log(&self) -> Result<Series> {
        let c = self.constant_term();
        if !c.is_one() {
            return Err(SeriesError::ConstantTermNotOne(c));
        }
        let f = self.graded_parts();
        let mut l: Vec<Series> = Vec::with_capacity(f.len());
        l.push(Series::zero(&self.ring));
        for d in 1..f.len() {
            let mut acc = Series::zero(&self.ring);
            for k in 1..d {
                if l[k].is_zero() || f[d - k].is_zero() {
                    continue;
                }
                let term = (&l[k] * &f[d - k]).scale(&Rational::from_integer(k.into()));
                acc = &acc + &term;
            }
            let ld = &f[d] - &acc.scale(&Rational::new(BigInt::one(), d.into()));
            l.push(ld);
        }
        Ok(Self::sum_parts(&self.ring, l))
    }

    /// First monomial (in graded-lex order) where the two series differ,
    /// with the coefficient on each side.
    pub fn first_difference(&self, other: &Series) -> Option<(Monomial, Rational, Rational)> {
        let mut keys: Vec<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|m| {
            let a = self.terms.get(m).cloned().unwrap_or_else(Rational::zero);
            let b = other.terms.get(m).cloned().unwrap_or_else(Rational::zero);
            (a != b).then(|| (m.clone(), a, b))
        })
    }

    /// Largest exponent of `var` among stored monomials.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }
}

pub(crate) fn render_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Series {
    /// Canonical rendering: graded-lex order, coefficients as `p/q`,
    /// e.g. `1 - 1/2*x + x^2*y`. The zero series renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            let body = if m.is_one() {
                render_rational(&magnitude)
            } else if magnitude.is_one() {
                self.ring.render_monomial(m)
            } else {
                format!("{}*{}", render_rational(&magnitude), self.ring.render_monomial(m))
            };
            match (i, negative) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

// Operator forms panic on ring mismatch; use the named methods for a Result.

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::add(self, rhs).expect("ring mismatch in series addition")
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::sub(self, rhs).expect("ring mismatch in series subtraction")
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs).expect("ring mismatch in series multiplication")
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.negate()
    }
}

/// Shorthand used throughout the crate.
pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub(crate) fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Converts an exact rational to `u32` when it is a non-negative integer that fits.
pub(crate) fn as_u32(r: &Rational) -> Option<u32> {
    if r.is_integer() {
        r.to_integer().to_u32()
    } else {
        None
    }
}
