//! Exact multivariate polynomial arithmetic over the rationals.
//!
//! Polynomials are the stand-in for smooth coefficient functions: every
//! identity the engine checks is multilinear in derivatives of coefficients,
//! so exactness over polynomials is exactness, full stop. Coefficients are
//! arbitrary-precision rationals (bracket composition triples degrees and
//! coefficients grow fast), and terms live in a `BTreeMap` keyed by graded
//! lexicographic order so that structural equality is mathematical equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Exact rational scalar; always reduced, denominator positive.
pub type Rational = BigRational;

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChartError {
    #[error("chart needs at least one variable")]
    Empty,
    #[error("duplicate variable name `{0}`")]
    Duplicate(String),
}

/// A fixed coordinate chart: an ordered list of distinct variable names.
///
/// Every value in the engine carries its chart; mixing charts in one
/// operation is a programming error and panics.
#[derive(Debug, Clone, Eq)]
pub struct Chart(Arc<Vec<String>>);

impl PartialEq for Chart {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Chart {
    pub fn new<I, S>(names: I) -> Result<Chart, ChartError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(ChartError::Empty);
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(ChartError::Duplicate(name.clone()));
            }
        }
        Ok(Chart(Arc::new(names)))
    }

    /// The chart `x1, ..., xn`.
    pub fn standard(n: usize) -> Chart {
        Chart::new((1..=n).map(|i| format!("x{i}"))).expect("standard chart is well formed")
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Variable name for 0-based index `i`.
    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    /// 0-based index of a variable name.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// The coordinate function for 0-based index `i`.
    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::var(self.clone(), i)
    }
}

/// Exponent vector of a single monomial.
///
/// Ordered by total degree first, then lexicographically, so `BTreeMap`
/// iteration is the canonical term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn constant(n: usize) -> Monomial {
        Monomial(vec![0; n].into_boxed_slice())
    }

    pub fn from_exponents(exps: Vec<u32>) -> Monomial {
        Monomial(exps.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over `Q` on a fixed chart.
///
/// Invariant: no stored coefficient is zero, so `==` on the term map is
/// exact mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    chart: Chart,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(chart: Chart) -> Polynomial {
        Polynomial {
            chart,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(chart: Chart) -> Polynomial {
        Polynomial::constant(chart, Rational::one())
    }

    pub fn constant(chart: Chart, c: Rational) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::constant(chart.dim()), c);
        }
        Polynomial { chart, terms }
    }

    pub fn from_int(chart: Chart, c: i64) -> Polynomial {
        Polynomial::constant(chart, rat(c, 1))
    }

    /// The coordinate function `x_{i+1}` (0-based index).
    pub fn var(chart: Chart, i: usize) -> Polynomial {
        assert!(i < chart.dim(), "variable index {i} out of range");
        let mut exps = vec![0u32; chart.dim()];
        exps[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::from_exponents(exps), Rational::one());
        Polynomial { chart, terms }
    }

    /// Build a polynomial from (exponents, coefficient) pairs; zeros dropped.
    pub fn from_terms(chart: Chart, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Polynomial {
        let mut p = Polynomial::zero(chart);
        for (exps, c) in terms {
            assert_eq!(exps.len(), p.chart.dim(), "exponent vector length mismatch");
            p.add_term(Monomial::from_exponents(exps), c);
        }
        p
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Some(c) when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.total_degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn assert_same_chart(&self, other: &Polynomial) {
        assert_eq!(self.chart, other.chart, "polynomial chart mismatch");
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_chart(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_chart(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            chart: self.chart.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_chart(other);
        let mut out = Polynomial::zero(self.chart.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.chart.clone());
        }
        Polynomial {
            chart: self.chart.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(self.chart.clone());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact partial derivative with respect to the 0-based variable `i`.
    pub fn partial(&self, i: usize) -> Polynomial {
        assert!(i < self.chart.dim(), "variable index {i} out of range");
        let mut out = Polynomial::zero(self.chart.clone());
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] = e - 1;
            out.add_term(Monomial::from_exponents(exps), c * Rational::from(BigInt::from(e)));
        }
        out
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, chart: &Chart, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", chart.name(i))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    /// Canonical text: terms in descending graded-lex order, coefficients as
    /// `num/den` (denominator omitted when 1), e.g. `3/2*x1^2*x2 - x3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            if m.total_degree() == 0 {
                write_rational(f, &abs)?;
            } else {
                if !abs.is_one() {
                    write_rational(f, &abs)?;
                    write!(f, "*")?;
                }
                write_monomial(f, &self.chart, m)?;
            }
        }
        Ok(())
    }
}

impl Polynomial {
    /// Render as a multiplicative prefix for a basis element, e.g. `x1*`,
    /// `-3/2*`, `(x1 + 1)*`; the unit coefficient renders as the empty
    /// prefix and `-1` as a bare minus.
    pub(crate) fn coefficient_prefix(&self) -> String {
        if let Some(c) = self.as_constant() {
            if c.is_one() {
                return String::new();
            }
            if (-c.clone()).is_one() {
                return "-".into();
            }
        }
        if self.terms.len() == 1 {
            format!("{self}*")
        } else {
            format!("({self})*")
        }
    }
}
