//! Catalog of product-sum identities for averaged characteristic polynomials
//! of permutations, each evaluated along two independent routes and compared
//! coefficient by coefficient inside the truncation caps.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::cycle_index::{power_product, qnr_recursive};
use crate::permutations::{average_power, AverageMode, DetFactor, PermutationError, DEFAULT_ENUMERATION_CAP};
use crate::plethystic::{self, PlethysticError};
use crate::series::{
    as_u32, binomial, int, render_rational, Monomial, Rational, Series, SeriesError, SeriesRing, TruncationCaps,
    VariableSet,
};

/// Every identity in the catalog. The string form is the stable name used
/// on the command line and in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    AveragePowerProduct,
    AveragePowerFiniteProduct,
    DeterminantRatioProduct,
    MultivariateExponential,
    ResidueAtOne,
    QBinomial,
    Molien,
    Heine,
    OddPowerSubstitution,
    LowOrderClosedForms,
    StructuralProperties,
    LowExponentClosedForms,
}

impl IdentityId {
    pub const ALL: [IdentityId; 12] = [
        IdentityId::AveragePowerProduct,
        IdentityId::AveragePowerFiniteProduct,
        IdentityId::DeterminantRatioProduct,
        IdentityId::MultivariateExponential,
        IdentityId::ResidueAtOne,
        IdentityId::QBinomial,
        IdentityId::Molien,
        IdentityId::Heine,
        IdentityId::OddPowerSubstitution,
        IdentityId::LowOrderClosedForms,
        IdentityId::StructuralProperties,
        IdentityId::LowExponentClosedForms,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::AveragePowerProduct => "thm-1.1",
            IdentityId::AveragePowerFiniteProduct => "thm-1.1-finite",
            IdentityId::DeterminantRatioProduct => "thm-1.2",
            IdentityId::MultivariateExponential => "thm-3.1",
            IdentityId::ResidueAtOne => "cor-1.3",
            IdentityId::QBinomial => "q-binomial",
            IdentityId::Molien => "molien",
            IdentityId::Heine => "heine",
            IdentityId::OddPowerSubstitution => "remark-3.2",
            IdentityId::LowOrderClosedForms => "prop-3.7",
            IdentityId::StructuralProperties => "prop-3.8",
            IdentityId::LowExponentClosedForms => "prop-3.9",
        }
    }

    /// Parameter names the identity accepts. `r*` means `r1, r2, ...`.
    pub fn parameters(self) -> &'static [&'static str] {
        match self {
            IdentityId::AveragePowerProduct
            | IdentityId::AveragePowerFiniteProduct
            | IdentityId::ResidueAtOne
            | IdentityId::LowOrderClosedForms => &["r"],
            IdentityId::DeterminantRatioProduct => &["r", "s"],
            IdentityId::MultivariateExponential | IdentityId::OddPowerSubstitution => &["r*"],
            IdentityId::QBinomial | IdentityId::Molien => &["n"],
            IdentityId::Heine => &[],
            IdentityId::StructuralProperties | IdentityId::LowExponentClosedForms => &["r", "n"],
        }
    }

    /// One-line statement of what is compared.
    pub fn summary(self) -> &'static str {
        match self {
            IdentityId::AveragePowerProduct => {
                "1 + sum_n y^n Q_n^r(x) = prod_(k>=0) (1 - y x^k)^(-C(k-r-1,k)) for rational r"
            }
            IdentityId::AveragePowerFiniteProduct => {
                "for integer r >= 0 the product collapses to prod_(k=0..r) (1 - y x^k)^((-1)^(k+1) C(r,k))"
            }
            IdentityId::DeterminantRatioProduct => {
                "averages of prod_j det(I - x_j M) / prod_k det(I - q_k M) against a product over j in {0,1}^r and k in N^s"
            }
            IdentityId::MultivariateExponential => {
                "PE(y prod_i (1 - x_i)^(r_i)) = 1 + sum_n y^n Q_n^r(x_1, ..., x_s)"
            }
            IdentityId::ResidueAtOne => "Res_(y=1) of the average-power generating function is -prod_(k>=1) (1 - x^k)^(-C(k-r-1,k))",
            IdentityId::QBinomial => "(1/n!) sum_sigma det(I - x M)/det(I - q M) = (x;q)_n / (q;q)_n",
            IdentityId::Molien => "(1/n!) sum_sigma 1/det(I - q M) = prod_(k=1..n) 1/(1 - q^k)",
            IdentityId::Heine => "the q-Gauss sum with x_1, x_2 against its product form and the permutation average",
            IdentityId::OddPowerSubstitution => "PE(y prod_j (1 - x^(2j-1))^(r_j)) against averages of det(I - x^(2j-1) M)^(r_j)",
            IdentityId::LowOrderClosedForms => "closed forms of Q_n^r for n = 1..4 and rational r",
            IdentityId::StructuralProperties => {
                "Q_n^r(0) = 1, degree <= nr, divisibility by (1-x)^r, integrality, palindromic for even r"
            }
            IdentityId::LowExponentClosedForms => "closed forms of Q_n^r for r = 1, 2, 3 and every n",
        }
    }

    /// Reading and correction notes for identities whose commonly quoted form
    /// needs care.
    pub fn notes(self) -> Option<&'static str> {
        match self {
            IdentityId::DeterminantRatioProduct => Some(
                "The left side is read as the average of prod_j det(I - x_j M) / prod_k det(I - q_k M), one factor \
                 per variable, i.e. PE(y prod_j (1 - x_j) / prod_k (1 - q_k)). A display with the ratio under a double \
                 product over (j, k) would raise each numerator to the s-th power and each denominator to the r-th, \
                 which does not match the right side.",
            ),
            IdentityId::Heine => Some(
                "Checked formally: each summand prod_k (1 - q^(k-1)/x_1)(1 - q^(k-1)/x_2) (x_1 x_2)^n is rewritten as \
                 prod_k (x_1 - q^(k-1))(x_2 - q^(k-1)) before truncation, so only non-negative powers occur.",
            ),
            IdentityId::ResidueAtOne => Some(
                "The residue itself is returned, i.e. the negated product; for r = -c < 0 it is minus the generating \
                 function of partitions with c colors.",
            ),
            IdentityId::LowOrderClosedForms => Some(
                "Q_4^r = 1/24 (1-x)^(4r) + 1/4 (1-x^4)^r + 1/8 (1-x^2)^(2r) + 1/3 (1-x)^r (1-x^3)^r + \
                 1/4 (1-x^2)^r (1-x)^(2r). The variant with (1-x^3)^(3r) in the 1/3 term disagrees with the \
                 permutation average for every r = 1, 2, 3.",
            ),
            IdentityId::LowExponentClosedForms => Some(
                "Q_n^3 = (1-x)^3 (sum_(k=0..n-1) C(k+2,2) x^(2k) - sum_(k=1..n-2) C(k+1,2) x^(2k+1)) for all n >= 1. \
                 The form (1-x)^3 (1 + 3x^2) is exactly the n = 2 case. The form \
                 (1-x)^3 (C(n+1,2) x^(2n-2) + C(n,2) x^(2n-4) + sum_(k=0..n-3) (k+1) x^(2k)) fails for every n >= 3.",
            ),
            _ => None,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = IdentityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| IdentityError::UnknownIdentity(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("{id} requires parameter {name:?}")]
    MissingParameter { id: IdentityId, name: String },
    #[error("{id} does not take parameter {name:?}")]
    UnexpectedParameter { id: IdentityId, name: String },
    #[error("{id}: invalid {name} = {value}: {reason}")]
    InvalidParameter {
        id: IdentityId,
        name: String,
        value: String,
        reason: String,
    },
    #[error("{id} has no variable {name:?}")]
    UnknownCapVariable { id: IdentityId, name: String },
    #[error("{id}: cap on {name} is {cap}, but {reason}")]
    InvalidCap {
        id: IdentityId,
        name: String,
        cap: u32,
        reason: String,
    },
    #[error("malformed assignment {0:?}; expected name=value")]
    MalformedAssignment(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Permutation(#[from] PermutationError),
    #[error(transparent)]
    Plethystic(#[from] PlethysticError),
}

/// Named exact-rational parameters, e.g. `r = -1/2`.
pub type Params = BTreeMap<String, Rational>;

/// Parses `r=1/2,n=3`. The empty string yields no parameters.
pub fn parse_params(text: &str) -> Result<Params, IdentityError> {
    let mut out = Params::new();
    for (name, value) in assignments(text)? {
        let r = parse_rational(value).ok_or_else(|| IdentityError::MalformedAssignment(format!("{name}={value}")))?;
        out.insert(name.to_string(), r);
    }
    Ok(out)
}

/// Parses `x=8,y=5`.
pub fn parse_caps(text: &str) -> Result<BTreeMap<String, u32>, IdentityError> {
    let mut out = BTreeMap::new();
    for (name, value) in assignments(text)? {
        let cap = value
            .parse()
            .map_err(|_| IdentityError::MalformedAssignment(format!("{name}={value}")))?;
        out.insert(name.to_string(), cap);
    }
    Ok(out)
}

fn assignments(text: &str) -> Result<Vec<(&str, &str)>, IdentityError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| match item.split_once('=') {
            Some((n, v)) if !n.trim().is_empty() && !v.trim().is_empty() => Ok((n.trim(), v.trim())),
            _ => Err(IdentityError::MalformedAssignment(item.to_string())),
        })
        .collect()
}

/// Parses `p` or `p/q` with an optional leading minus; `q` must be positive.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let is_int = |s: &str, signed: bool| {
        let digits = if signed { s.strip_prefix('-').unwrap_or(s) } else { s };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_int(numer, true) || !is_int(denom, false) {
        return None;
    }
    let d: num_bigint::BigInt = denom.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(numer.parse().ok()?, d))
}

/// One comparison of two independently computed series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub lhs: Series,
    pub rhs: Series,
}

impl Check {
    fn new(label: impl Into<String>, lhs: Series, rhs: Series) -> Self {
        Check {
            label: label.into(),
            lhs,
            rhs,
        }
    }
}

/// Both sides of every check of an identity, before judging.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub lhs_route: String,
    pub rhs_route: String,
    pub checks: Vec<Check>,
}

/// The first coefficient at which a check fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub check: String,
    pub monomial: String,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    Unequal(Witness),
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal)
    }
}

/// Compares every check exactly; the witness is the smallest differing
/// monomial of the first failing check.
pub fn judge(checks: &[Check]) -> Verdict {
    for c in checks {
        if let Some((m, a, b)) = c.lhs.first_difference(&c.rhs) {
            return Verdict::Unequal(Witness {
                check: c.label.clone(),
                monomial: c.lhs.ring().render_monomial(&m),
                lhs: a,
                rhs: b,
            });
        }
    }
    Verdict::Equal
}

/// A validated identity together with the ring its sides live in.
#[derive(Debug, Clone)]
pub struct IdentityCase {
    id: IdentityId,
    params: Params,
    ring: Arc<SeriesRing>,
}

impl IdentityCase {
    /// Validates `params` and resolves caps, filling in defaults for any
    /// variable not mentioned in `caps`.
    pub fn new(id: IdentityId, params: Params, caps: &BTreeMap<String, u32>) -> Result<Self, IdentityError> {
        validate_params(id, &params)?;
        let (names, defaults) = default_caps(id, &params);
        for name in caps.keys() {
            if !names.contains(name) {
                return Err(IdentityError::UnknownCapVariable { id, name: name.clone() });
            }
        }
        let resolved: Vec<u32> = names
            .iter()
            .zip(&defaults)
            .map(|(n, d)| caps.get(n).copied().unwrap_or(*d))
            .collect();
        let ring = SeriesRing::new(VariableSet::new(names)?, TruncationCaps::new(resolved))?;
        let case = IdentityCase { id, params, ring };
        case.validate_caps()?;
        Ok(case)
    }

    pub fn id(&self) -> IdentityId {
        self.id
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn ring(&self) -> &Arc<SeriesRing> {
        &self.ring
    }

    /// `(variable, cap)` in ring order.
    pub fn caps(&self) -> Vec<(String, u32)> {
        self.ring
            .vars()
            .names()
            .iter()
            .cloned()
            .zip(self.ring.caps().as_slice().iter().copied())
            .collect()
    }

    fn param(&self, name: &str) -> &Rational {
        &self.params[name]
    }

    fn param_u32(&self, name: &str) -> u32 {
        as_u32(self.param(name)).expect("validated")
    }

    fn indexed_params(&self) -> Vec<Rational> {
        (1..)
            .map_while(|i| self.params.get(&format!("r{i}")).cloned())
            .collect()
    }

    fn var(&self, name: &str) -> usize {
        self.ring.index_of(name).expect("variable of this identity")
    }

    fn cap(&self, name: &str) -> u32 {
        self.ring.cap_of(self.var(name))
    }

    fn validate_caps(&self) -> Result<(), IdentityError> {
        let fail = |name: &str, reason: String| {
            Err(IdentityError::InvalidCap {
                id: self.id,
                name: name.to_string(),
                cap: self.cap(name),
                reason,
            })
        };
        let enumerates = matches!(
            self.id,
            IdentityId::DeterminantRatioProduct
                | IdentityId::MultivariateExponential
                | IdentityId::Heine
                | IdentityId::OddPowerSubstitution
        );
        if enumerates && self.cap("y") > DEFAULT_ENUMERATION_CAP {
            return fail(
                "y",
                format!("the permutation average enumerates S_n for n up to the y cap, limited to {DEFAULT_ENUMERATION_CAP}"),
            );
        }
        if matches!(
            self.id,
            IdentityId::StructuralProperties | IdentityId::LowExponentClosedForms
        ) {
            let need = self.param_u32("n") * self.param_u32("r");
            if self.cap("x") < need {
                return fail(
                    "x",
                    format!("the properties concern the whole polynomial of degree n*r = {need}"),
                );
            }
        }
        Ok(())
    }

    /// Computes both sides of every check.
    pub fn evaluate(&self) -> Result<Evaluation, IdentityError> {
        let ring = &self.ring;
        let (lhs_route, rhs_route, checks) = match self.id {
            IdentityId::AveragePowerProduct => {
                let r = self.param("r");
                let lhs = average_generating_function(
                    ring,
                    "y",
                    &[DetFactor::new(self.var("x"), r.clone())],
                    AverageMode::CycleTypes,
                )?;
                let rhs = average_power_product(ring, "x", "y", r)?;
                (
                    "sum over n of y^n Q_n^r, averaged over cycle types of S_n",
                    "prod_(k>=0) (1 - y x^k)^(-C(k-r-1,k)), truncated at the caps",
                    vec![Check::new("average = infinite product", lhs, rhs)],
                )
            }
            IdentityId::AveragePowerFiniteProduct => {
                let r = self.param_u32("r");
                let infinite = average_power_product(ring, "x", "y", self.param("r"))?;
                let finite = finite_product(ring, "x", "y", r)?;
                let average = average_generating_function(
                    ring,
                    "y",
                    &[DetFactor::new(self.var("x"), int(r.into()))],
                    AverageMode::CycleTypes,
                )?;
                (
                    "prod_(k>=0) (1 - y x^k)^(-C(k-r-1,k)), truncated at the caps",
                    "prod_(k=0..r) (1 - y x^k)^((-1)^(k+1) C(r,k))",
                    vec![
                        Check::new("infinite product = finite product", infinite, finite.clone()),
                        Check::new("average = finite product", average, finite),
                    ],
                )
            }
            IdentityId::DeterminantRatioProduct => {
                let (r, s) = (self.param_u32("r"), self.param_u32("s"));
                let factors: Vec<DetFactor> = (1..=r)
                    .map(|j| DetFactor::new(self.var(&format!("x{j}")), int(1)))
                    .chain((1..=s).map(|k| DetFactor::new(self.var(&format!("q{k}")), int(-1))))
                    .collect();
                let brute = average_generating_function(ring, "y", &factors, AverageMode::Permutations)?;
                let product = determinant_ratio_product(ring, r, s)?;
                let g = ratio_base(ring, r, s)?;
                let pe = plethystic::pe(&g.mul(&Series::variable(ring, "y")?)?)?;
                (
                    "average over every permutation of prod_j det(I - x_j M) / prod_k det(I - q_k M)",
                    "prod over j in {0,1}^r, k in N^s of (1 - y x^j q^k)^((-1)^(|j|+1))",
                    vec![
                        Check::new("permutation average = product", brute.clone(), product),
                        Check::new("permutation average = PE", brute, pe),
                    ],
                )
            }
            IdentityId::MultivariateExponential => {
                let rs = self.indexed_params();
                let exps: Vec<(usize, Rational)> = rs
                    .iter()
                    .enumerate()
                    .map(|(i, r)| (self.var(&format!("x{}", i + 1)), r.clone()))
                    .collect();
                let g = power_product(ring, &exps)?;
                let lhs = plethystic::pe(&g.mul(&Series::variable(ring, "y")?)?)?;
                let factors: Vec<DetFactor> = exps.iter().map(|(v, r)| DetFactor::new(*v, r.clone())).collect();
                let rhs = average_generating_function(ring, "y", &factors, AverageMode::Permutations)?;
                (
                    "PE(y prod_i (1 - x_i)^(r_i)) by exp of the harmonic sum",
                    "sum over n of y^n times the average over every permutation of prod_i det(I - x_i M)^(r_i)",
                    vec![Check::new("PE = permutation average", lhs, rhs)],
                )
            }
            IdentityId::ResidueAtOne => {
                let r = self.param("r");
                let cap = self.cap("x");
                let lhs = residue_phi(r, cap)?;
                let x_ring = SeriesRing::of(&[("x", cap)])?;
                let g = power_product(&x_ring, &[(0, r.clone())])?.sub(&Series::one(&x_ring))?;
                let rhs = plethystic::pe(&g)?.negate();
                (
                    "-prod_(k>=1) (1 - x^k)^(-C(k-r-1,k)), the product with the k = 0 pole removed and y = 1",
                    "-PE((1 - x)^r - 1)",
                    vec![Check::new("residue product = -PE", lhs, rhs)],
                )
            }
            IdentityId::QBinomial => {
                let n = self.param_u32("n");
                let factors = [
                    DetFactor::new(self.var("x"), int(1)),
                    DetFactor::new(self.var("q"), int(-1)),
                ];
                let lhs = average_power(n, ring, &factors, AverageMode::Permutations)?;
                let rhs = q_binomial_product(ring, "x", "q", n)?;
                (
                    "(1/n!) sum over S_n of det(I - x M)/det(I - q M)",
                    "prod_(k=1..n) (1 - x q^(k-1)) / (1 - q^k)",
                    vec![Check::new("average = (x;q)_n/(q;q)_n", lhs, rhs)],
                )
            }
            IdentityId::Molien => {
                let n = self.param_u32("n");
                let lhs = average_power(
                    n,
                    ring,
                    &[DetFactor::new(self.var("q"), int(-1))],
                    AverageMode::Permutations,
                )?;
                let rhs = molien_product(ring, "q", n)?;
                (
                    "(1/n!) sum over S_n of 1/det(I - q M)",
                    "prod_(k=1..n) 1/(1 - q^k)",
                    vec![Check::new("average = Molien product", lhs, rhs)],
                )
            }
            IdentityId::Heine => {
                let sum = heine_sum(ring)?;
                let product = heine_product(ring)?;
                let factors = [
                    DetFactor::new(self.var("x1"), int(1)),
                    DetFactor::new(self.var("x2"), int(1)),
                    DetFactor::new(self.var("q"), int(-1)),
                ];
                let average = average_generating_function(ring, "y", &factors, AverageMode::Permutations)?;
                (
                    "sum_n y^n prod_(k=1..n) (x_1 - q^(k-1))(x_2 - q^(k-1)) / ((1 - q^k)(1 - y q^(k-1)))",
                    "prod_(k>=0) (1 - y x_1 q^k)(1 - y x_2 q^k) / ((1 - y q^k)(1 - y x_1 x_2 q^k))",
                    vec![
                        Check::new("hypergeometric sum = product", sum, product.clone()),
                        Check::new("permutation average = product", average, product),
                    ],
                )
            }
            IdentityId::OddPowerSubstitution => {
                let rs = self.indexed_params();
                let x = self.var("x");
                let one = Series::one(ring);
                let mut g = one.clone();
                let mut factors = Vec::new();
                for (j, r) in rs.iter().enumerate() {
                    let power = 2 * j as u32 + 1;
                    g = g.mul(&one.sub(&Series::var_power(ring, x, power))?.pow(r)?)?;
                    factors.push(DetFactor::new(x, r.clone()).with_power(power));
                }
                let lhs = plethystic::pe(&g.mul(&Series::variable(ring, "y")?)?)?;
                let rhs = average_generating_function(ring, "y", &factors, AverageMode::Permutations)?;
                (
                    "PE(y prod_j (1 - x^(2j-1))^(r_j))",
                    "sum over n of y^n times the average over every permutation of prod_j det(I - x^(2j-1) M)^(r_j)",
                    vec![Check::new("PE = permutation average", lhs, rhs)],
                )
            }
            IdentityId::LowOrderClosedForms => {
                let r = self.param("r");
                let checks = (1..=4)
                    .map(|n| {
                        let oracle = qnr_recursive(n, ring, &[(0, r.clone())])?;
                        let closed = low_order_closed_form(ring, n, r)?;
                        Ok(Check::new(format!("Q_{n}^r closed form"), closed, oracle))
                    })
                    .collect::<Result<Vec<_>, IdentityError>>()?;
                (
                    "closed forms in (1 - x^j)^(r m_j) weighted by cycle-type proportions",
                    "Q_n^r by the cycle-index recursion",
                    checks,
                )
            }
            IdentityId::StructuralProperties => {
                let (r, n) = (self.param_u32("r"), self.param_u32("n"));
                let q = qnr_recursive(n, ring, &[(0, int(r.into()))])?;
                (
                    "property-specific transforms of Q_n^r",
                    "Q_n^r by the cycle-index recursion",
                    structural_checks(&q, n, r)?,
                )
            }
            IdentityId::LowExponentClosedForms => {
                let (r, n) = (self.param_u32("r"), self.param_u32("n"));
                let oracle = qnr_recursive(n, ring, &[(0, int(r.into()))])?;
                let closed = low_exponent_closed_form(ring, n, r)?;
                (
                    "closed form of Q_n^r for r in {1, 2, 3}",
                    "Q_n^r by the cycle-index recursion",
                    vec![Check::new(format!("Q_n^{r} closed form"), closed, oracle)],
                )
            }
        };
        Ok(Evaluation {
            lhs_route: lhs_route.to_string(),
            rhs_route: rhs_route.to_string(),
            checks,
        })
    }
}

fn param_error(id: IdentityId, name: &str, value: &Rational, reason: &str) -> IdentityError {
    IdentityError::InvalidParameter {
        id,
        name: name.to_string(),
        value: render_rational(value),
        reason: reason.to_string(),
    }
}

fn validate_params(id: IdentityId, params: &Params) -> Result<(), IdentityError> {
    let names = id.parameters();
    let indexed = names == ["r*"];
    if indexed {
        let count = (1..).take_while(|i| params.contains_key(&format!("r{i}"))).count();
        if count == 0 {
            return Err(IdentityError::MissingParameter { id, name: "r1".into() });
        }
        if let Some(extra) = params.keys().find(|k| {
            !(k.starts_with('r')
                && k[1..]
                    .parse::<usize>()
                    .is_ok_and(|i| (1..=count).contains(&i) && k[1..] == i.to_string()))
        }) {
            return Err(IdentityError::UnexpectedParameter {
                id,
                name: extra.clone(),
            });
        }
        if count > 4 {
            return Err(param_error(
                id,
                "r*",
                &int(count as i64),
                "at most 4 exponents are supported",
            ));
        }
    } else {
        for name in names {
            if !params.contains_key(*name) {
                return Err(IdentityError::MissingParameter {
                    id,
                    name: name.to_string(),
                });
            }
        }
        if let Some(extra) = params.keys().find(|k| !names.contains(&k.as_str())) {
            return Err(IdentityError::UnexpectedParameter {
                id,
                name: extra.clone(),
            });
        }
    }
    let non_negative_int = |name: &str, max: u32| -> Result<u32, IdentityError> {
        let v = &params[name];
        match as_u32(v) {
            Some(k) if k <= max => Ok(k),
            Some(_) => Err(param_error(id, name, v, &format!("must be at most {max}"))),
            None => Err(param_error(id, name, v, "must be a non-negative integer")),
        }
    };
    match id {
        IdentityId::AveragePowerFiniteProduct => {
            non_negative_int("r", 64)?;
        }
        IdentityId::DeterminantRatioProduct => {
            let r = non_negative_int("r", 4)?;
            let s = non_negative_int("s", 4)?;
            if r + s > 4 {
                return Err(param_error(id, "s", &params["s"], "r + s must be at most 4"));
            }
        }
        IdentityId::OddPowerSubstitution => {
            for (name, v) in params {
                if as_u32(v).is_none() {
                    return Err(param_error(id, name, v, "must be a non-negative integer"));
                }
            }
        }
        IdentityId::QBinomial | IdentityId::Molien => {
            let n = non_negative_int("n", DEFAULT_ENUMERATION_CAP)?;
            if n == 0 {
                return Err(param_error(id, "n", &params["n"], "must be positive"));
            }
        }
        IdentityId::StructuralProperties | IdentityId::LowExponentClosedForms => {
            let max_r = if id == IdentityId::LowExponentClosedForms {
                3
            } else {
                64
            };
            let r = non_negative_int("r", max_r)?;
            let n = non_negative_int("n", 64)?;
            if r == 0 {
                return Err(param_error(id, "r", &params["r"], "must be positive"));
            }
            if n == 0 {
                return Err(param_error(id, "n", &params["n"], "must be positive"));
            }
        }
        _ => {}
    }
    Ok(())
}

fn default_caps(id: IdentityId, params: &Params) -> (Vec<String>, Vec<u32>) {
    let named =
        |pairs: &[(&str, u32)]| -> (Vec<String>, Vec<u32>) { pairs.iter().map(|(n, c)| (n.to_string(), *c)).unzip() };
    match id {
        IdentityId::AveragePowerProduct | IdentityId::AveragePowerFiniteProduct => named(&[("x", 10), ("y", 6)]),
        IdentityId::DeterminantRatioProduct => {
            let get = |k: &str| params.get(k).and_then(as_u32).unwrap_or(0);
            let mut names: Vec<String> = (1..=get("r")).map(|j| format!("x{j}")).collect();
            names.extend((1..=get("s")).map(|k| format!("q{k}")));
            names.push("y".into());
            let caps = vec![5; names.len()];
            (names, caps)
        }
        IdentityId::MultivariateExponential => {
            let s = (1..).take_while(|i| params.contains_key(&format!("r{i}"))).count();
            let mut names: Vec<String> = (1..=s).map(|i| format!("x{i}")).collect();
            names.push("y".into());
            let caps = vec![5; names.len()];
            (names, caps)
        }
        IdentityId::ResidueAtOne | IdentityId::LowOrderClosedForms => named(&[("x", 10)]),
        IdentityId::QBinomial => named(&[("x", 10), ("q", 10)]),
        IdentityId::Molien => named(&[("q", 10)]),
        IdentityId::Heine => named(&[("x1", 4), ("x2", 4), ("q", 4), ("y", 4)]),
        IdentityId::OddPowerSubstitution => named(&[("x", 10), ("y", 4)]),
        IdentityId::StructuralProperties | IdentityId::LowExponentClosedForms => {
            let get = |k: &str| params.get(k).and_then(as_u32).unwrap_or(1);
            named(&[("x", get("n") * get("r"))])
        }
    }
}

/// Outcome of [`verify`], serializable to a stable JSON object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub id: IdentityId,
    pub params: Params,
    pub caps: Vec<(String, u32)>,
    pub lhs_route: String,
    pub rhs_route: String,
    pub checks: Vec<String>,
    pub verdict: Verdict,
    pub millis: u64,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    id: &'a str,
    params: BTreeMap<&'a str, String>,
    caps: BTreeMap<&'a str, u32>,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessJson<'a>>,
    lhs_route: &'a str,
    rhs_route: &'a str,
    millis: u64,
}

#[derive(Serialize)]
struct WitnessJson<'a> {
    check: &'a str,
    monomial: &'a str,
    lhs: String,
    rhs: String,
}

impl VerificationReport {
    /// Pretty-printed JSON with keys in a fixed order.
    pub fn to_json(&self) -> String {
        let witness = match &self.verdict {
            Verdict::Equal => None,
            Verdict::Unequal(w) => Some(WitnessJson {
                check: &w.check,
                monomial: &w.monomial,
                lhs: render_rational(&w.lhs),
                rhs: render_rational(&w.rhs),
            }),
        };
        let view = ReportJson {
            id: self.id.as_str(),
            params: self
                .params
                .iter()
                .map(|(k, v)| (k.as_str(), render_rational(v)))
                .collect(),
            caps: self.caps.iter().map(|(k, v)| (k.as_str(), *v)).collect(),
            verdict: if self.verdict.is_equal() { "equal" } else { "unequal" },
            witness,
            lhs_route: &self.lhs_route,
            rhs_route: &self.rhs_route,
            millis: self.millis,
        };
        serde_json::to_string_pretty(&view).expect("plain data serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={}", render_rational(v)))
            .collect();
        let caps: Vec<String> = self.caps.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(f, "identity: {}", self.id)?;
        writeln!(
            f,
            "params:   {}",
            if params.is_empty() {
                "-".into()
            } else {
                params.join(",")
            }
        )?;
        writeln!(f, "caps:     {}", caps.join(","))?;
        writeln!(f, "lhs:      {}", self.lhs_route)?;
        writeln!(f, "rhs:      {}", self.rhs_route)?;
        writeln!(f, "checks:   {}", self.checks.join("; "))?;
        match &self.verdict {
            Verdict::Equal => write!(f, "verdict:  equal"),
            Verdict::Unequal(w) => write!(
                f,
                "verdict:  unequal\nwitness:  [{}] coefficient of {}: lhs {} != rhs {}",
                w.check,
                w.monomial,
                render_rational(&w.lhs),
                render_rational(&w.rhs)
            ),
        }
    }
}

/// Evaluates and judges an identity.
pub fn verify(case: &IdentityCase) -> Result<VerificationReport, IdentityError> {
    let start = Instant::now();
    let evaluation = case.evaluate()?;
    let verdict = judge(&evaluation.checks);
    Ok(VerificationReport {
        id: case.id,
        params: case.params.clone(),
        caps: case.caps(),
        lhs_route: evaluation.lhs_route,
        rhs_route: evaluation.rhs_route,
        checks: evaluation.checks.into_iter().map(|c| c.label).collect(),
        verdict,
        millis: start.elapsed().as_millis() as u64,
    })
}

/// `1 + sum_(n=1..cap(y)) y^n (1/n!) sum_sigma prod_i det(I - v_i^(p_i) M_sigma)^(r_i)`.
pub fn average_generating_function(
    ring: &Arc<SeriesRing>,
    y: &str,
    factors: &[DetFactor],
    mode: AverageMode,
) -> Result<Series, IdentityError> {
    let y_idx = ring.index_of(y)?;
    let mut acc = Series::zero(ring);
    for n in 0..=ring.cap_of(y_idx) {
        let avg = average_power(n, ring, factors, mode)?;
        acc = acc.add(&avg.shift(&Monomial::var_power(ring.arity(), y_idx, n)))?;
    }
    Ok(acc)
}

fn one_minus(ring: &Arc<SeriesRing>, exponents: &[(usize, u32)], coefficient: Rational) -> Series {
    let mut e = vec![0; ring.arity()];
    for &(v, k) in exponents {
        e[v] += k;
    }
    Series::one(ring)
        .sub(&Series::monomial(ring, Monomial::new(e), coefficient))
        .expect("same ring")
}

/// `prod_(k=0..cap(x)) (1 - y x^k)^(-C(k-r-1,k))`; factors beyond the `x` cap
/// are truncated away.
pub fn average_power_product(ring: &Arc<SeriesRing>, x: &str, y: &str, r: &Rational) -> Result<Series, SeriesError> {
    let (xi, yi) = (ring.index_of(x)?, ring.index_of(y)?);
    let mut acc = Series::one(ring);
    for k in 0..=ring.cap_of(xi) {
        let a = binomial(&(int(k.into()) - r - int(1)), k);
        if a.is_zero() {
            continue;
        }
        acc = acc.mul(&one_minus(ring, &[(yi, 1), (xi, k)], int(1)).pow(&-a)?)?;
    }
    Ok(acc)
}

/// `prod_(k=0..r) (1 - y x^k)^((-1)^(k+1) C(r,k))` for integer `r >= 0`.
pub fn finite_product(ring: &Arc<SeriesRing>, x: &str, y: &str, r: u32) -> Result<Series, SeriesError> {
    let (xi, yi) = (ring.index_of(x)?, ring.index_of(y)?);
    let mut acc = Series::one(ring);
    for k in 0..=r {
        let sign = if k % 2 == 1 { int(1) } else { int(-1) };
        let e = sign * binomial(&int(r.into()), k);
        acc = acc.mul(&one_minus(ring, &[(yi, 1), (xi, k)], int(1)).pow(&e)?)?;
    }
    Ok(acc)
}

/// `prod_j (1 - x_j) / prod_k (1 - q_k)` in a ring with variables
/// `x1..xr, q1..qs`.
fn ratio_base(ring: &Arc<SeriesRing>, r: u32, s: u32) -> Result<Series, SeriesError> {
    let mut exps = Vec::new();
    for j in 1..=r {
        exps.push((ring.index_of(&format!("x{j}"))?, int(1)));
    }
    for k in 1..=s {
        exps.push((ring.index_of(&format!("q{k}"))?, int(-1)));
    }
    power_product(ring, &exps)
}

/// `prod_(j in {0,1}^r) prod_(k in N^s) (1 - y x^j q^k)^((-1)^(|j|+1))` over
/// variables `x1..xr, q1..qs, y`.
pub fn determinant_ratio_product(ring: &Arc<SeriesRing>, r: u32, s: u32) -> Result<Series, SeriesError> {
    let y = ring.index_of("y")?;
    let xs: Vec<usize> = (1..=r)
        .map(|j| ring.index_of(&format!("x{j}")))
        .collect::<Result<_, _>>()?;
    let qs: Vec<usize> = (1..=s)
        .map(|k| ring.index_of(&format!("q{k}")))
        .collect::<Result<_, _>>()?;
    let q_caps: Vec<u32> = qs.iter().map(|&q| ring.cap_of(q)).collect();
    let mut acc = Series::one(ring);
    for mask in 0u32..(1 << r) {
        let weight = mask.count_ones();
        let exponent = if weight % 2 == 0 { int(-1) } else { int(1) };
        let mut k = vec![0u32; s as usize];
        loop {
            let mut mono = vec![(y, 1)];
            mono.extend(
                xs.iter()
                    .enumerate()
                    .filter(|(j, _)| mask & (1 << j) != 0)
                    .map(|(_, &v)| (v, 1)),
            );
            mono.extend(qs.iter().zip(&k).map(|(&v, &e)| (v, e)));
            acc = acc.mul(&one_minus(ring, &mono, int(1)).pow(&exponent)?)?;
            // odometer over k in [0, cap]^s
            let mut i = 0;
            while i < k.len() && k[i] == q_caps[i] {
                k[i] = 0;
                i += 1;
            }
            if i == k.len() {
                break;
            }
            k[i] += 1;
        }
    }
    Ok(acc)
}

/// `(x;q)_n / (q;q)_n = prod_(k=1..n) (1 - x q^(k-1)) / (1 - q^k)`.
pub fn q_binomial_product(ring: &Arc<SeriesRing>, x: &str, q: &str, n: u32) -> Result<Series, SeriesError> {
    let (xi, qi) = (ring.index_of(x)?, ring.index_of(q)?);
    let mut acc = Series::one(ring);
    for k in 1..=n {
        acc = acc.mul(&one_minus(ring, &[(xi, 1), (qi, k - 1)], int(1)))?;
        acc = acc.mul(&one_minus(ring, &[(qi, k)], int(1)).inverse()?)?;
    }
    Ok(acc)
}

/// `prod_(k=1..n) 1 / (1 - q^k)`.
pub fn molien_product(ring: &Arc<SeriesRing>, q: &str, n: u32) -> Result<Series, SeriesError> {
    let qi = ring.index_of(q)?;
    let mut acc = Series::one(ring);
    for k in 1..=n {
        acc = acc.mul(&one_minus(ring, &[(qi, k)], int(1)).inverse()?)?;
    }
    Ok(acc)
}

/// `sum_n y^n prod_(k=1..n) (x1 - q^(k-1))(x2 - q^(k-1)) / ((1 - q^k)(1 - y q^(k-1)))`
/// in a ring with variables `x1, x2, q, y`.
pub fn heine_sum(ring: &Arc<SeriesRing>) -> Result<Series, SeriesError> {
    let (x1, x2, q, y) = (
        ring.index_of("x1")?,
        ring.index_of("x2")?,
        ring.index_of("q")?,
        ring.index_of("y")?,
    );
    let mut acc = Series::one(ring);
    let mut term = Series::one(ring);
    for k in 1..=ring.cap_of(y) {
        let q_pow = Series::var_power(ring, q, k - 1);
        let a = Series::var_power(ring, x1, 1).sub(&q_pow)?;
        let b = Series::var_power(ring, x2, 1).sub(&q_pow)?;
        let denom = one_minus(ring, &[(q, k)], int(1)).mul(&one_minus(ring, &[(y, 1), (q, k - 1)], int(1)))?;
        term = term
            .mul(&a.mul(&b)?)?
            .mul(&denom.inverse()?)?
            .shift(&Monomial::var_power(ring.arity(), y, 1));
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// `prod_(k>=0) (1 - y x1 q^k)(1 - y x2 q^k) / ((1 - y q^k)(1 - y x1 x2 q^k))`.
pub fn heine_product(ring: &Arc<SeriesRing>) -> Result<Series, SeriesError> {
    let (x1, x2, q, y) = (
        ring.index_of("x1")?,
        ring.index_of("x2")?,
        ring.index_of("q")?,
        ring.index_of("y")?,
    );
    let mut acc = Series::one(ring);
    for k in 0..=ring.cap_of(q) {
        acc = acc
            .mul(&one_minus(ring, &[(y, 1), (x1, 1), (q, k)], int(1)))?
            .mul(&one_minus(ring, &[(y, 1), (x2, 1), (q, k)], int(1)))?
            .mul(&one_minus(ring, &[(y, 1), (q, k)], int(1)).inverse()?)?
            .mul(&one_minus(ring, &[(y, 1), (x1, 1), (x2, 1), (q, k)], int(1)).inverse()?)?;
    }
    Ok(acc)
}

/// Residue at `y = 1` of `1 + sum_n y^n Q_n^r(x)`:
/// `-prod_(k=1..cap) (1 - x^k)^(-C(k-r-1,k))`, in the ring `x <= cap`.
pub fn residue_phi(r: &Rational, cap: u32) -> Result<Series, SeriesError> {
    let ring = SeriesRing::of(&[("x", cap)])?;
    let mut acc = Series::one(&ring);
    for k in 1..=cap {
        let a = binomial(&(int(k.into()) - r - int(1)), k);
        if a.is_zero() {
            continue;
        }
        acc = acc.mul(&one_minus(&ring, &[(0, k)], int(1)).pow(&-a)?)?;
    }
    Ok(acc.negate())
}

/// `(1 - x^j)^e` on variable 0.
fn cyc(ring: &Arc<SeriesRing>, j: u32, e: &Rational) -> Result<Series, SeriesError> {
    one_minus(ring, &[(0, j)], int(1)).pow(e)
}

fn weighted_sum(ring: &Arc<SeriesRing>, terms: &[(Rational, &[(u32, Rational)])]) -> Result<Series, SeriesError> {
    let mut acc = Series::zero(ring);
    for (w, factors) in terms {
        let mut t = Series::constant(ring, w.clone());
        for (j, e) in factors.iter() {
            t = t.mul(&cyc(ring, *j, e)?)?;
        }
        acc = acc.add(&t)?;
    }
    Ok(acc)
}

/// Closed form of `Q_n^r(x)` for `n = 1..=4` and rational `r`, on variable 0.
///
/// ```text
/// Q_1 = (1-x)^r
/// Q_2 = 1/2 (1-x)^(2r) + 1/2 (1-x^2)^r
/// Q_3 = 1/6 (1-x)^(3r) + 1/2 (1-x^2)^r (1-x)^r + 1/3 (1-x^3)^r
/// Q_4 = 1/24 (1-x)^(4r) + 1/4 (1-x^4)^r + 1/8 (1-x^2)^(2r)
///       + 1/3 (1-x)^r (1-x^3)^r + 1/4 (1-x^2)^r (1-x)^(2r)
/// ```
pub fn low_order_closed_form(ring: &Arc<SeriesRing>, n: u32, r: &Rational) -> Result<Series, SeriesError> {
    let k = |c: i64| r * int(c);
    let w = |a: i64, b: i64| Rational::new(a.into(), b.into());
    match n {
        1 => weighted_sum(ring, &[(int(1), &[(1, k(1))])]),
        2 => weighted_sum(ring, &[(w(1, 2), &[(1, k(2))]), (w(1, 2), &[(2, k(1))])]),
        3 => weighted_sum(
            ring,
            &[
                (w(1, 6), &[(1, k(3))]),
                (w(1, 2), &[(2, k(1)), (1, k(1))]),
                (w(1, 3), &[(3, k(1))]),
            ],
        ),
        4 => weighted_sum(
            ring,
            &[
                (w(1, 24), &[(1, k(4))]),
                (w(1, 4), &[(4, k(1))]),
                (w(1, 8), &[(2, k(2))]),
                (w(1, 3), &[(1, k(1)), (3, k(1))]),
                (w(1, 4), &[(2, k(1)), (1, k(2))]),
            ],
        ),
        _ => panic!("closed forms exist for n = 1..=4 only"),
    }
}

/// `Q_4^r` with the 1/3 term written `(1-x)^r (1-x^3)^(3r)`; not an identity.
pub fn q4_cubed_exponent_variant(ring: &Arc<SeriesRing>, r: &Rational) -> Result<Series, SeriesError> {
    let k = |c: i64| r * int(c);
    let w = |a: i64, b: i64| Rational::new(a.into(), b.into());
    weighted_sum(
        ring,
        &[
            (w(1, 24), &[(1, k(4))]),
            (w(1, 4), &[(4, k(1))]),
            (w(1, 8), &[(2, k(2))]),
            (w(1, 3), &[(1, k(1)), (3, k(3))]),
            (w(1, 4), &[(2, k(1)), (1, k(2))]),
        ],
    )
}

fn x_poly(ring: &Arc<SeriesRing>, coeffs: impl IntoIterator<Item = (u32, Rational)>) -> Series {
    Series::from_terms(
        ring,
        coeffs
            .into_iter()
            .map(|(e, c)| (Monomial::var_power(ring.arity(), 0, e), c)),
    )
}

fn c2(m: u32) -> Rational {
    int((m * m.saturating_sub(1) / 2).into())
}

/// Closed form of `Q_n^r` for `r = 1, 2, 3` and every `n >= 1`:
///
/// ```text
/// Q_n^1 = 1 - x
/// Q_n^2 = (1-x)^2 sum_(k=0..n-1) x^(2k)
/// Q_n^3 = (1-x)^3 (sum_(k=0..n-1) C(k+2,2) x^(2k) - sum_(k=1..n-2) C(k+1,2) x^(2k+1))
/// ```
pub fn low_exponent_closed_form(ring: &Arc<SeriesRing>, n: u32, r: u32) -> Result<Series, SeriesError> {
    let tail = match r {
        1 => x_poly(ring, [(0, int(1))]),
        2 => x_poly(ring, (0..n).map(|k| (2 * k, int(1)))),
        3 => {
            let even = (0..n).map(|k| (2 * k, c2(k + 2)));
            let odd = (1..n.saturating_sub(1)).map(|k| (2 * k + 1, -c2(k + 1)));
            x_poly(ring, even.chain(odd))
        }
        _ => panic!("closed forms exist for r = 1, 2, 3 only"),
    };
    cyc(ring, 1, &int(r.into()))?.mul(&tail)
}

/// `(1-x)^3 (1 + 3x^2)`; equals `Q_n^3` only for `n = 2`.
pub fn q3_fixed_form(ring: &Arc<SeriesRing>) -> Result<Series, SeriesError> {
    cyc(ring, 1, &int(3))?.mul(&x_poly(ring, [(0, int(1)), (2, int(3))]))
}

/// `(1-x)^3 (C(n+1,2) x^(2n-2) + C(n,2) x^(2n-4) + sum_(k=0..n-3) (k+1) x^(2k))`
/// for `n >= 3`; not an identity.
pub fn q3_binomial_variant(ring: &Arc<SeriesRing>, n: u32) -> Result<Series, SeriesError> {
    assert!(n >= 3);
    let mut terms = vec![(2 * n - 2, c2(n + 1)), (2 * n - 4, c2(n))];
    terms.extend((0..n - 2).map(|k| (2 * k, int((k + 1).into()))));
    cyc(ring, 1, &int(3))?.mul(&x_poly(ring, terms))
}

/// Each property as a comparison that holds exactly when the property does.
fn structural_checks(q: &Series, n: u32, r: u32) -> Result<Vec<Check>, SeriesError> {
    let ring = q.ring();
    let deg = n * r;
    let coeffs = q.coefficients_along(0);
    let truncated = |s: &Series, d: u32| {
        x_poly(
            ring,
            s.terms()
                .filter(|(m, _)| m.exponents()[0] <= d)
                .map(|(m, c)| (m.exponents()[0], c.clone())),
        )
    };
    let mut checks = vec![
        Check::new(
            "constant term is 1",
            Series::constant(ring, q.constant_term()),
            Series::one(ring),
        ),
        Check::new(format!("degree at most {deg}"), truncated(q, deg), q.clone()),
    ];
    let unit = cyc(ring, 1, &int(r.into()))?;
    let quotient = q.mul(&cyc(ring, 1, &-int(r.into()))?)?;
    checks.push(Check::new(
        format!("divisible by (1-x)^{r}"),
        unit.mul(&truncated(&quotient, deg - r))?,
        q.clone(),
    ));
    let floored = x_poly(ring, coeffs.iter().enumerate().map(|(e, c)| (e as u32, c.floor())));
    checks.push(Check::new("integer coefficients", floored, q.clone()));
    if r.is_multiple_of(2) {
        let reversed = x_poly(
            ring,
            coeffs
                .iter()
                .enumerate()
                .filter(|(e, _)| *e as u32 <= deg)
                .map(|(e, c)| (deg - e as u32, c.clone())),
        );
        checks.push(Check::new(format!("palindromic of degree {deg}"), reversed, q.clone()));
    }
    Ok(checks)
}
