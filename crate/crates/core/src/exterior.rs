//! Antisymmetric tensor algebra: differential forms and multivector fields
//! with polynomial coefficients, wedge products and contraction.
//!
//! Components are stored on strictly increasing index tuples (0-based
//! internally, rendered 1-based), with all Koszul signs handled at the
//! component level. The contraction convention is pinned by the adjunction
//! `<gamma, contract(beta, P)> = <beta ^ gamma, P>` together with the
//! normalization `<dx1^...^dxp, e1^...^ep> = +1`; the brute-force oracle in
//! the test suite checks it slot by slot.

use crate::poly::{Chart, Polynomial, Rational};
use std::collections::BTreeMap;
use std::fmt;

/// Strictly increasing tuple of 0-based variable indices.
pub type IndexTuple = Vec<usize>;

type Components = BTreeMap<IndexTuple, Polynomial>;

/// Sort an index tuple in place, returning the sign of the permutation,
/// or `None` when an index repeats (the term dies by antisymmetry).
pub(crate) fn sort_signed(indices: &mut [usize]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..indices.len() {
        let mut j = i;
        while j > 0 && indices[j - 1] >= indices[j] {
            if indices[j - 1] == indices[j] {
                return None;
            }
            indices.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    Some(sign)
}

/// If `sub` is a subset of `sup` (both strictly increasing), return the
/// complement `sup \ sub` and the sign of the permutation sorting the
/// concatenation `(sub | sup \ sub)` back into `sup`.
fn split_subset(sup: &[usize], sub: &[usize]) -> Option<(IndexTuple, i32)> {
    let mut rest = Vec::with_capacity(sup.len() - sub.len());
    let mut it = sub.iter().peekable();
    for &s in sup {
        if it.peek() == Some(&&s) {
            it.next();
        } else {
            rest.push(s);
        }
    }
    if it.peek().is_some() {
        return None; // sub has an index not present in sup
    }
    let mut concat: Vec<usize> = sub.iter().chain(rest.iter()).copied().collect();
    let sign = sort_signed(&mut concat).expect("subset and complement are disjoint");
    Some((rest, sign))
}

fn insert_component(comps: &mut Components, key: IndexTuple, value: Polynomial) {
    if value.is_zero() {
        return;
    }
    match comps.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(value);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get().add(&value);
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

fn wedge_components(chart: &Chart, a: &Components, b: &Components) -> Components {
    let mut out = Components::new();
    for (ia, ca) in a {
        for (ib, cb) in b {
            let mut concat: Vec<usize> = ia.iter().chain(ib.iter()).copied().collect();
            if let Some(sign) = sort_signed(&mut concat) {
                let mut c = ca.mul(cb);
                if sign < 0 {
                    c = c.neg();
                }
                insert_component(&mut out, concat, c);
            }
        }
    }
    let _ = chart;
    out
}

macro_rules! alternating_impl {
    ($name:ident, $basis_doc:expr) => {
        impl $name {
            /// The zero element of the given degree (empty component map).
            pub fn zero(chart: Chart, degree: usize) -> $name {
                $name {
                    chart,
                    degree,
                    comps: Components::new(),
                }
            }

            /// Degree-0 element wrapping a polynomial.
            pub fn scalar(p: Polynomial) -> $name {
                let chart = p.chart().clone();
                let mut comps = Components::new();
                if !p.is_zero() {
                    comps.insert(Vec::new(), p);
                }
                $name {
                    chart,
                    degree: 0,
                    comps,
                }
            }

            #[doc = $basis_doc]
            pub fn basis(chart: Chart, indices: &[usize]) -> $name {
                $name::term(chart.clone(), indices, Polynomial::one(chart))
            }

            /// A single component `coeff * basis(indices)`.
            pub fn term(chart: Chart, indices: &[usize], coeff: Polynomial) -> $name {
                for w in indices.windows(2) {
                    assert!(w[0] < w[1], "index tuple must be strictly increasing");
                }
                if let Some(&last) = indices.last() {
                    assert!(last < chart.dim(), "index out of range for chart");
                }
                let mut comps = Components::new();
                if !coeff.is_zero() {
                    comps.insert(indices.to_vec(), coeff);
                }
                $name {
                    chart,
                    degree: indices.len(),
                    comps,
                }
            }

            pub fn chart(&self) -> &Chart {
                &self.chart
            }

            pub fn degree(&self) -> usize {
                self.degree
            }

            pub fn is_zero(&self) -> bool {
                self.comps.is_empty()
            }

            /// Component on a strictly increasing index tuple (zero if absent).
            pub fn component(&self, indices: &[usize]) -> Polynomial {
                self.comps
                    .get(indices)
                    .cloned()
                    .unwrap_or_else(|| Polynomial::zero(self.chart.clone()))
            }

            pub fn components(&self) -> impl Iterator<Item = (&IndexTuple, &Polynomial)> {
                self.comps.iter()
            }

            /// The polynomial of a degree-0 element.
            pub fn as_scalar(&self) -> Polynomial {
                assert_eq!(self.degree, 0, "as_scalar on nonzero degree");
                self.component(&[])
            }

            fn assert_compatible(&self, other: &$name) {
                assert_eq!(self.chart, other.chart, concat!(stringify!($name), " chart mismatch"));
                assert_eq!(
                    self.degree, other.degree,
                    concat!(stringify!($name), " degree mismatch")
                );
            }

            pub fn add(&self, other: &$name) -> $name {
                self.assert_compatible(other);
                let mut out = self.clone();
                for (i, c) in &other.comps {
                    insert_component(&mut out.comps, i.clone(), c.clone());
                }
                out
            }

            pub fn sub(&self, other: &$name) -> $name {
                self.add(&other.neg())
            }

            pub fn neg(&self) -> $name {
                $name {
                    chart: self.chart.clone(),
                    degree: self.degree,
                    comps: self.comps.iter().map(|(i, c)| (i.clone(), c.neg())).collect(),
                }
            }

            /// Multiply every component by a polynomial.
            pub fn scale(&self, f: &Polynomial) -> $name {
                assert_eq!(self.chart, f.chart().clone(), "scale chart mismatch");
                let mut out = $name::zero(self.chart.clone(), self.degree);
                for (i, c) in &self.comps {
                    insert_component(&mut out.comps, i.clone(), c.mul(f));
                }
                out
            }

            /// Multiply every component by a rational scalar.
            pub fn scale_rational(&self, r: &Rational) -> $name {
                self.scale(&Polynomial::constant(self.chart.clone(), r.clone()))
            }

            /// Graded-commutative wedge product. A result of degree above the
            /// chart dimension is the zero element capped at that dimension.
            pub fn wedge(&self, other: &$name) -> $name {
                assert_eq!(self.chart, other.chart, concat!(stringify!($name), " chart mismatch"));
                let degree = self.degree + other.degree;
                if degree > self.chart.dim() {
                    return $name::zero(self.chart.clone(), self.chart.dim());
                }
                $name {
                    chart: self.chart.clone(),
                    degree,
                    comps: wedge_components(&self.chart, &self.comps, &other.comps),
                }
            }

            /// Sum a collection of same-degree elements.
            pub fn sum(chart: Chart, degree: usize, items: impl IntoIterator<Item = $name>) -> $name {
                let mut out = $name::zero(chart, degree);
                for item in items {
                    out = out.add(&item);
                }
                out
            }
        }
    };
}

/// Degree-k differential form with polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    chart: Chart,
    degree: usize,
    comps: Components,
}

/// Degree-p antisymmetric contravariant tensor field with polynomial
/// coefficients; degree 1 is a vector field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiVector {
    chart: Chart,
    degree: usize,
    comps: Components,
}

alternating_impl!(Form, "Unit basis form `dx_{i1} ^ ... ^ dx_{ik}` (0-based indices).");
alternating_impl!(
    MultiVector,
    "Unit basis multivector `e_{i1} ^ ... ^ e_{ip}` (0-based indices)."
);

/// Full antisymmetric contraction of a k-form into the first k slots of a
/// p-vector, normalized so that `contract(dx1^...^dxp, e1^...^ep) = 1`.
///
/// For `k = p` the result is degree 0 and realizes the scalar pairing of a
/// p-form with a p-vector.
pub fn contract(beta: &Form, p: &MultiVector) -> MultiVector {
    assert_eq!(beta.chart, p.chart, "contract chart mismatch");
    let k = beta.degree;
    assert!(
        k <= p.degree,
        "cannot contract a degree-{k} form into a degree-{} multivector",
        p.degree
    );
    let mut out = MultiVector::zero(p.chart.clone(), p.degree - k);
    for (j, bj) in &beta.comps {
        for (i, ci) in &p.comps {
            if let Some((rest, sign)) = split_subset(i, j) {
                let mut c = bj.mul(ci);
                if sign < 0 {
                    c = c.neg();
                }
                insert_component(&mut out.comps, rest, c);
            }
        }
    }
    out
}

fn fmt_alternating(
    f: &mut fmt::Formatter<'_>,
    chart: &Chart,
    comps: &Components,
    basis_symbol: impl Fn(usize) -> String,
) -> fmt::Result {
    if comps.is_empty() {
        return write!(f, "0");
    }
    for (k, (idx, c)) in comps.iter().enumerate() {
        if idx.is_empty() {
            // degree 0: bare polynomial
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            continue;
        }
        let prefix = c.coefficient_prefix();
        if k == 0 {
            write!(f, "{prefix}")?;
        } else if let Some(stripped) = prefix.strip_prefix('-') {
            write!(f, " - {stripped}")?;
        } else {
            write!(f, " + {prefix}")?;
        }
        let basis = idx
            .iter()
            .map(|&i| basis_symbol(i))
            .collect::<Vec<_>>()
            .join("^");
        write!(f, "{basis}")?;
    }
    Ok(())
}

impl fmt::Display for Form {
    /// Canonical text, e.g. `x1*dx1^dx2 + 3/2*dx2^dx3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_alternating(f, &self.chart, &self.comps, |i| {
            format!("d{}", self.chart.name(i))
        })
    }
}

impl fmt::Display for MultiVector {
    /// Canonical text, e.g. `x3*e1^e2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_alternating(f, &self.chart, &self.comps, |i| format!("e{}", i + 1))
    }
}
