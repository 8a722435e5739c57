//! Cartan calculus and the Schouten–Nijenhuis bracket, plus Nambu-Poisson
//! structures with their certification defects.
//!
//! The Lie derivative on forms is the Cartan formula `L_X = i_X d + d i_X`;
//! on multivectors it is the derivation extension of the vector-field
//! commutator. The Schouten bracket is built from its defining axioms
//! (reduction to `[.,.]` and `L_X` on low degrees, graded antisymmetry,
//! graded Leibniz rule over the wedge) rather than a component formula;
//! the Jacobiator oracle in the tests pins the convention.

use crate::exterior::{contract, Form, MultiVector};
use crate::poly::{Chart, Polynomial};
use thiserror::Error;

/// Exterior derivative. For a top-degree form the result is the zero form
/// (degree capped at the chart dimension).
pub fn ext_d(a: &Form) -> Form {
    let chart = a.chart().clone();
    let n = chart.dim();
    if a.degree() >= n {
        return Form::zero(chart, n);
    }
    let mut out = Form::zero(chart.clone(), a.degree() + 1);
    for (idx, c) in a.components() {
        for j in 0..n {
            let dc = c.partial(j);
            if dc.is_zero() {
                continue;
            }
            let basis = Form::basis(chart.clone(), &[j]).wedge(&Form::basis(chart.clone(), idx));
            out = out.add(&basis.scale(&dc));
        }
    }
    out
}

/// Interior product: insertion of a vector field into the first slot of a
/// form of degree at least 1.
pub fn interior(x: &MultiVector, a: &Form) -> Form {
    assert_eq!(x.degree(), 1, "interior product needs a vector field");
    assert_eq!(x.chart(), a.chart(), "interior chart mismatch");
    assert!(a.degree() >= 1, "interior product undefined on degree 0");
    let chart = a.chart().clone();
    let mut out = Form::zero(chart.clone(), a.degree() - 1);
    for (jx, xj) in x.components() {
        let j = jx[0];
        for (idx, c) in a.components() {
            if let Some(pos) = idx.iter().position(|&i| i == j) {
                let rest: Vec<usize> = idx
                    .iter()
                    .copied()
                    .filter(|&i| i != j)
                    .collect();
                let mut coeff = xj.mul(c);
                if pos % 2 == 1 {
                    coeff = coeff.neg();
                }
                out = out.add(&Form::term(chart.clone(), &rest, coeff));
            }
        }
    }
    out
}

/// Apply a vector field to a function: `X(f) = sum_i X^i df/dx_i`.
pub fn apply_vf(x: &MultiVector, f: &Polynomial) -> Polynomial {
    assert_eq!(x.degree(), 1, "apply_vf needs a vector field");
    let mut out = Polynomial::zero(f.chart().clone());
    for (idx, xi) in x.components() {
        out = out.add(&xi.mul(&f.partial(idx[0])));
    }
    out
}

/// Lie derivative of a form along a vector field, by the Cartan formula
/// `L_X a = i_X(da) + d(i_X a)`; on degree 0 it is `X(f)`.
pub fn lie_form(x: &MultiVector, a: &Form) -> Form {
    if a.degree() == 0 {
        return Form::scalar(apply_vf(x, &a.as_scalar()));
    }
    interior(x, &ext_d(a)).add(&ext_d(&interior(x, a)))
}

/// Commutator of vector fields: `[X,Y]^j = sum_i (X^i di Y^j - Y^i di X^j)`.
pub fn vf_bracket(x: &MultiVector, y: &MultiVector) -> MultiVector {
    assert_eq!(x.degree(), 1, "vf_bracket needs vector fields");
    assert_eq!(y.degree(), 1, "vf_bracket needs vector fields");
    assert_eq!(x.chart(), y.chart(), "vf_bracket chart mismatch");
    let chart = x.chart().clone();
    let mut out = MultiVector::zero(chart.clone(), 1);
    for (jy, yj) in y.components() {
        out = out.add(&MultiVector::term(chart.clone(), jy, apply_vf(x, yj)));
    }
    for (jx, xj) in x.components() {
        out = out.sub(&MultiVector::term(chart.clone(), jx, apply_vf(y, xj)));
    }
    out
}

/// Lie derivative of a multivector along a vector field: the derivation
/// extension of `vf_bracket`, acting termwise on decomposables.
pub fn lie_mv(x: &MultiVector, p: &MultiVector) -> MultiVector {
    assert_eq!(x.degree(), 1, "lie_mv needs a vector field");
    assert_eq!(x.chart(), p.chart(), "lie_mv chart mismatch");
    let chart = p.chart().clone();
    let mut out = MultiVector::zero(chart.clone(), p.degree());
    for (idx, c) in p.components() {
        // X(c) e_I
        out = out.add(&MultiVector::term(chart.clone(), idx, apply_vf(x, c)));
        // c * sum_a e_{i1} ^ ... ^ [X, e_{ia}] ^ ... ^ e_{ip}
        for a in 0..idx.len() {
            let slot = vf_bracket(x, &MultiVector::basis(chart.clone(), &[idx[a]]));
            if slot.is_zero() {
                continue;
            }
            let prefix = MultiVector::basis(chart.clone(), &idx[..a]);
            let suffix = MultiVector::basis(chart.clone(), &idx[a + 1..]);
            out = out.add(&prefix.wedge(&slot).wedge(&suffix).scale(c));
        }
    }
    out
}

/// Schouten–Nijenhuis bracket of multivector fields.
///
/// Fixed by: agreement with `vf_bracket` on degree (1,1), `[X,Q] = L_X Q`,
/// `[f,Q] = -i_{df} Q`, graded antisymmetry
/// `[P,Q] = -(-1)^{(p-1)(q-1)} [Q,P]`, and the graded Leibniz rule over the
/// wedge. Results of degree above the chart dimension are zero.
pub fn schouten(p: &MultiVector, q: &MultiVector) -> MultiVector {
    assert_eq!(p.chart(), q.chart(), "schouten chart mismatch");
    let chart = p.chart().clone();
    let n = chart.dim();
    if p.degree() + q.degree() == 0 {
        return MultiVector::zero(chart, 0); // functions commute
    }
    let target = p.degree() + q.degree() - 1;
    if target > n {
        return MultiVector::zero(chart, n);
    }
    let mut out = MultiVector::zero(chart.clone(), target);
    for (idx, c) in p.components() {
        out = out.add(&schouten_term(&chart, c, idx, q));
    }
    out
}

/// `[c * e_I, Q]` for a single decomposable term, by peeling off the first
/// factor: `[P1 ^ P2, Q] = (-1)^{(q-1) deg P2} [P1,Q] ^ P2 + P1 ^ [P2,Q]`.
fn schouten_term(chart: &Chart, c: &Polynomial, idx: &[usize], q: &MultiVector) -> MultiVector {
    let dq = q.degree();
    match idx.len() {
        0 => {
            // [f, Q] = -i_{df} Q
            if dq == 0 {
                return MultiVector::zero(chart.clone(), 0);
            }
            let df = ext_d(&Form::scalar(c.clone()));
            contract(&df, q).neg()
        }
        1 => lie_mv(&MultiVector::term(chart.clone(), idx, c.clone()), q),
        _ => {
            let head = MultiVector::term(chart.clone(), &idx[..1], c.clone());
            let tail = &idx[1..];
            let tail_mv = MultiVector::basis(chart.clone(), tail);
            // (-1)^{(dq-1)(|tail|)}; note (-1)^{dq-1} = (-1)^{dq+1}
            let exponent = (dq + 1) * tail.len();
            let mut first = lie_mv(&head, q).wedge(&tail_mv);
            if exponent % 2 == 1 {
                first = first.neg();
            }
            let second = head.wedge(&schouten_term(
                chart,
                &Polynomial::one(chart.clone()),
                tail,
                q,
            ));
            first.add(&second)
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NambuError {
    #[error("Nambu structure order {order} out of bounds 2 <= p <= {dim}")]
    OrderOutOfBounds { order: usize, dim: usize },
    #[error("expected {expected} functions, got {got}")]
    Arity { expected: usize, got: usize },
}

/// A p-vector field regarded as a (candidate) Nambu-Poisson structure of
/// order `p`, `2 <= p <= n`. Whether it actually satisfies the fundamental
/// identity is what the defect functionals measure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NambuStructure {
    tensor: MultiVector,
}

impl NambuStructure {
    pub fn new(tensor: MultiVector) -> Result<NambuStructure, NambuError> {
        let order = tensor.degree();
        let dim = tensor.chart().dim();
        if order < 2 || order > dim {
            return Err(NambuError::OrderOutOfBounds { order, dim });
        }
        Ok(NambuStructure { tensor })
    }

    pub fn order(&self) -> usize {
        self.tensor.degree()
    }

    pub fn chart(&self) -> &Chart {
        self.tensor.chart()
    }

    pub fn tensor(&self) -> &MultiVector {
        &self.tensor
    }

    /// The anchor-defining contraction `Pi(beta) = i(beta) Lambda`; for a
    /// (p-1)-form the result is a vector field.
    pub fn apply(&self, beta: &Form) -> MultiVector {
        contract(beta, &self.tensor)
    }

    /// Scalar full contraction of a p-form with the tensor, `Pi(alpha)`.
    pub fn pair(&self, alpha: &Form) -> Polynomial {
        assert_eq!(alpha.degree(), self.order(), "pair needs a p-form");
        contract(alpha, &self.tensor).as_scalar()
    }

    fn check_arity(&self, fs: &[Polynomial], expected: usize) -> Result<(), NambuError> {
        if fs.len() != expected {
            return Err(NambuError::Arity {
                expected,
                got: fs.len(),
            });
        }
        Ok(())
    }

    fn d_wedge(&self, fs: &[Polynomial]) -> Form {
        let chart = self.chart().clone();
        let mut out = Form::scalar(Polynomial::one(chart));
        for f in fs {
            out = out.wedge(&ext_d(&Form::scalar(f.clone())));
        }
        out
    }

    /// The p-ary bracket `{f1,...,fp} = <df1 ^ ... ^ dfp, Lambda>`.
    pub fn nambu_bracket(&self, fs: &[Polynomial]) -> Result<Polynomial, NambuError> {
        self.check_arity(fs, self.order())?;
        Ok(self.pair(&self.d_wedge(fs)))
    }

    /// Hamiltonian vector field `Pi(df1 ^ ... ^ df_{p-1})`.
    pub fn hamiltonian_vf(&self, fs: &[Polynomial]) -> Result<MultiVector, NambuError> {
        self.check_arity(fs, self.order() - 1)?;
        Ok(self.apply(&self.d_wedge(fs)))
    }

    /// Invariance defect `L_{X_f}(Lambda)`; identically zero over all
    /// function tuples exactly when the tensor is invariant under its own
    /// Hamiltonian flows.
    pub fn invariance_defect(&self, fs: &[Polynomial]) -> Result<MultiVector, NambuError> {
        let x = self.hamiltonian_vf(fs)?;
        Ok(lie_mv(&x, &self.tensor))
    }

    /// Fundamental-identity defect
    /// `{f1..f_{p-1},{g1..gp}} - sum_i {g1,..,{f1..f_{p-1},g_i},..,gp}`.
    pub fn fi_defect(&self, fs: &[Polynomial], gs: &[Polynomial]) -> Result<Polynomial, NambuError> {
        let p = self.order();
        self.check_arity(fs, p - 1)?;
        self.check_arity(gs, p)?;
        let inner = self.nambu_bracket(gs)?;
        let mut args: Vec<Polynomial> = fs.to_vec();
        args.push(inner);
        let mut out = self.nambu_bracket(&args)?;
        for i in 0..p {
            let mut fg: Vec<Polynomial> = fs.to_vec();
            fg.push(gs[i].clone());
            let mixed = self.nambu_bracket(&fg)?;
            let mut modified = gs.to_vec();
            modified[i] = mixed;
            out = out.sub(&self.nambu_bracket(&modified)?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, Rational};

    fn chart(n: usize) -> Chart {
        Chart::standard(n)
    }

    #[test]
    fn d_of_coordinate() {
        let c = chart(3);
        let d = ext_d(&Form::scalar(c.var(0)));
        assert_eq!(d, Form::basis(c, &[0]));
    }

    #[test]
    fn d_of_one_form() {
        let c = chart(3);
        // d(x1 dx2) = dx1 ^ dx2
        let a = Form::term(c.clone(), &[1], c.var(0));
        assert_eq!(ext_d(&a), Form::basis(c, &[0, 1]));
    }

    #[test]
    fn d_squared_vanishes() {
        let c = chart(3);
        let a = Form::term(c.clone(), &[1], c.var(0).mul(&c.var(2)).add(&c.var(1).pow(2)));
        assert!(ext_d(&ext_d(&a)).is_zero());
    }

    #[test]
    fn d_of_top_form_is_zero() {
        let c = chart(2);
        let top = Form::term(c.clone(), &[0, 1], c.var(0));
        let d = ext_d(&top);
        assert!(d.is_zero());
        assert_eq!(d.degree(), 2);
    }

    #[test]
    fn interior_first_slot() {
        let c = chart(3);
        let dx12 = Form::basis(c.clone(), &[0, 1]);
        let e1 = MultiVector::basis(c.clone(), &[0]);
        let e2 = MultiVector::basis(c.clone(), &[1]);
        let e3 = MultiVector::basis(c.clone(), &[2]);
        assert_eq!(interior(&e1, &dx12), Form::basis(c.clone(), &[1]));
        assert!(interior(&e3, &dx12).is_zero());
        assert_eq!(interior(&e2, &dx12), Form::basis(c, &[0]).neg());
    }

    #[test]
    #[should_panic(expected = "undefined on degree 0")]
    fn interior_on_scalar_panics() {
        let c = chart(2);
        let e1 = MultiVector::basis(c.clone(), &[0]);
        let _ = interior(&e1, &Form::scalar(c.var(0)));
    }

    #[test]
    fn lie_form_examples() {
        let c = chart(3);
        let e1 = MultiVector::basis(c.clone(), &[0]);
        // L_{e1}(x1 dx2) = dx2
        let a = Form::term(c.clone(), &[1], c.var(0));
        assert_eq!(lie_form(&e1, &a), Form::basis(c.clone(), &[1]));
        // constant field, constant form
        let b = Form::basis(c.clone(), &[1, 2]);
        assert!(lie_form(&e1, &b).is_zero());
        // L_{x1 e1}(dx1) = d(x1) = dx1
        let x = MultiVector::term(c.clone(), &[0], c.var(0));
        assert_eq!(lie_form(&x, &Form::basis(c.clone(), &[0])), Form::basis(c, &[0]));
    }

    #[test]
    fn vf_bracket_examples() {
        let c = chart(3);
        let e1 = MultiVector::basis(c.clone(), &[0]);
        let e2 = MultiVector::basis(c.clone(), &[1]);
        assert!(vf_bracket(&e1, &e2).is_zero());
        // [x1 e2, e1] = -e2
        let x = MultiVector::term(c.clone(), &[1], c.var(0));
        assert_eq!(vf_bracket(&x, &e1), e2.neg());
        // [X, X] = 0
        let y = MultiVector::term(c.clone(), &[0], c.var(1)).add(&MultiVector::term(
            c.clone(),
            &[2],
            c.var(0).mul(&c.var(2)),
        ));
        assert!(vf_bracket(&y, &y).is_zero());
    }

    #[test]
    fn lie_mv_examples() {
        let c = chart(3);
        let e1 = MultiVector::basis(c.clone(), &[0]);
        let e23 = MultiVector::basis(c.clone(), &[1, 2]);
        assert!(lie_mv(&e1, &e23).is_zero());
        // L_{x2 e1}(e2 ^ e3) = [x2 e1, e2] ^ e3 = -e1 ^ e3
        let x = MultiVector::term(c.clone(), &[0], c.var(1));
        assert_eq!(lie_mv(&x, &e23), MultiVector::basis(c.clone(), &[0, 2]).neg());
        // on vector fields it is the commutator
        let y = MultiVector::term(c.clone(), &[1], c.var(0).pow(2));
        assert_eq!(lie_mv(&x, &y), vf_bracket(&x, &y));
    }

    #[test]
    fn schouten_constant_inputs_vanish() {
        let c = chart(3);
        let e1 = MultiVector::basis(c.clone(), &[0]);
        let e2 = MultiVector::basis(c.clone(), &[1]);
        assert!(schouten(&e1, &e2).is_zero());
        let e12 = MultiVector::basis(c, &[0, 1]);
        assert!(schouten(&e12, &e12).is_zero());
    }

    #[test]
    fn schouten_reduces_to_vf_bracket_and_lie() {
        let c = chart(3);
        let x = MultiVector::term(c.clone(), &[0], c.var(1))
            .add(&MultiVector::term(c.clone(), &[2], c.var(0)));
        let y = MultiVector::term(c.clone(), &[1], c.var(2).pow(2));
        assert_eq!(schouten(&x, &y), vf_bracket(&x, &y));
        let q = MultiVector::term(c.clone(), &[1, 2], c.var(0).mul(&c.var(1)));
        assert_eq!(schouten(&x, &q), lie_mv(&x, &q));
    }

    #[test]
    fn schouten_graded_antisymmetry() {
        let c = chart(4);
        let p = MultiVector::term(c.clone(), &[0, 1], c.var(2))
            .add(&MultiVector::term(c.clone(), &[1, 3], c.var(0).pow(2)));
        let q = MultiVector::term(c.clone(), &[0, 2, 3], c.var(1));
        // [P,Q] = -(-1)^{(p-1)(q-1)} [Q,P]; p=2, q=3 => sign -(-1)^2 = -1
        assert_eq!(schouten(&p, &q), schouten(&q, &p).neg());
    }

    #[test]
    fn schouten_graded_leibniz_over_wedge() {
        let c = chart(4);
        let p = MultiVector::term(c.clone(), &[0, 1], c.var(2));
        let q = MultiVector::term(c.clone(), &[2], c.var(0));
        let r = MultiVector::term(c.clone(), &[3], c.var(1));
        // [P, Q ^ R] = [P,Q] ^ R + (-1)^{(p-1) q} Q ^ [P,R]; p=2, q=1 => sign -1
        let lhs = schouten(&p, &q.wedge(&r));
        let rhs = schouten(&p, &q)
            .wedge(&r)
            .sub(&q.wedge(&schouten(&p, &r)));
        assert_eq!(lhs, rhs);
    }

    /// Independent Poisson-bracket oracle on a bivector: the function
    /// bracket route, bypassing `schouten` entirely.
    fn poisson(c: &Chart, pi: &MultiVector, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let df = ext_d(&Form::scalar(f.clone()));
        let dg = ext_d(&Form::scalar(g.clone()));
        let _ = c;
        contract(&df.wedge(&dg), pi).as_scalar()
    }

    fn jacobiator(c: &Chart, pi: &MultiVector, f: &Polynomial, g: &Polynomial, h: &Polynomial) -> Polynomial {
        poisson(c, pi, &poisson(c, pi, f, g), h)
            .add(&poisson(c, pi, &poisson(c, pi, g, h), f))
            .add(&poisson(c, pi, &poisson(c, pi, h, f), g))
    }

    /// The Schouten square of a bivector measures the Jacobiator:
    /// `<df^dg^dh, [Pi,Pi]> = -2 J(f,g,h)` under this crate's contraction
    /// convention. The constant is frozen here and exercised on a
    /// non-Poisson bivector with a nonzero witness.
    #[test]
    fn schouten_square_matches_jacobiator_oracle() {
        let c = chart(3);
        // Pi = x1 e1^e2 + x2 e2^e3 + x3 e3^e1 (non-Poisson)
        let pi = MultiVector::term(c.clone(), &[0, 1], c.var(0))
            .add(&MultiVector::term(c.clone(), &[1, 2], c.var(1)))
            .add(&MultiVector::term(c.clone(), &[0, 2], c.var(2).neg()));
        let sq = schouten(&pi, &pi);
        let samples: Vec<[Polynomial; 3]> = vec![
            [c.var(0), c.var(1), c.var(2)],
            [c.var(0).pow(2), c.var(1), c.var(2)],
            [c.var(0).mul(&c.var(1)), c.var(1), c.var(2).add(&c.var(0))],
            [
                c.var(0).add(&c.var(1).pow(2)),
                c.var(2).mul(&c.var(0)),
                c.var(1),
            ],
        ];
        let minus_two = Polynomial::constant(c.clone(), rat(-2, 1));
        let mut saw_nonzero = false;
        for [f, g, h] in &samples {
            let lhs = {
                let df = ext_d(&Form::scalar(f.clone()));
                let dg = ext_d(&Form::scalar(g.clone()));
                let dh = ext_d(&Form::scalar(h.clone()));
                contract(&df.wedge(&dg).wedge(&dh), &sq).as_scalar()
            };
            let j = jacobiator(&c, &pi, f, g, h);
            saw_nonzero |= !j.is_zero();
            assert_eq!(lhs, minus_two.mul(&j));
        }
        assert!(saw_nonzero, "witness family must certify a nonzero square");
        // and the canonical witness: J(x1,x2,x3) = -(x1 + x2 + x3)
        let j = jacobiator(&c, &pi, &c.var(0), &c.var(1), &c.var(2));
        assert_eq!(j, c.var(0).add(&c.var(1)).add(&c.var(2)).neg());
    }

    #[test]
    fn schouten_above_dimension_is_zero() {
        let c = chart(2);
        let p = MultiVector::term(c.clone(), &[0, 1], c.var(0));
        assert!(schouten(&p, &p).is_zero());
    }

    fn np3(c: &Chart) -> NambuStructure {
        NambuStructure::new(MultiVector::basis(c.clone(), &[0, 1, 2])).unwrap()
    }

    #[test]
    fn nambu_bracket_examples() {
        let c = chart(3);
        let s = np3(&c);
        let coords = [c.var(0), c.var(1), c.var(2)];
        assert_eq!(s.nambu_bracket(&coords).unwrap(), Polynomial::one(c.clone()));
        // antisymmetry: repeated argument
        let rep = [c.var(0), c.var(0), c.var(1)];
        assert!(s.nambu_bracket(&rep).unwrap().is_zero());
        // {x1 x2, x2, x3} = x2 (Jacobian determinant oracle)
        let args = [c.var(0).mul(&c.var(1)), c.var(1), c.var(2)];
        assert_eq!(s.nambu_bracket(&args).unwrap(), c.var(1));
    }

    #[test]
    fn nambu_bracket_is_jacobian_determinant() {
        // independent oracle: 3x3 Jacobian determinant expansion
        let c = chart(3);
        let s = np3(&c);
        let f = c.var(0).mul(&c.var(1)).add(&c.var(2).pow(2));
        let g = c.var(1).add(&c.var(0));
        let h = c.var(2).mul(&c.var(0));
        let jac = |f: &Polynomial, g: &Polynomial, h: &Polynomial| {
            let d = |p: &Polynomial, i: usize| p.partial(i);
            let term = |a: &Polynomial, b: &Polynomial, c_: &Polynomial| a.mul(b).mul(c_);
            term(&d(f, 0), &d(g, 1), &d(h, 2))
                .add(&term(&d(f, 1), &d(g, 2), &d(h, 0)))
                .add(&term(&d(f, 2), &d(g, 0), &d(h, 1)))
                .sub(&term(&d(f, 2), &d(g, 1), &d(h, 0)))
                .sub(&term(&d(f, 0), &d(g, 2), &d(h, 1)))
                .sub(&term(&d(f, 1), &d(g, 0), &d(h, 2)))
        };
        assert_eq!(s.nambu_bracket(&[f.clone(), g.clone(), h.clone()]).unwrap(), jac(&f, &g, &h));
    }

    #[test]
    fn hamiltonian_vf_examples() {
        let c = chart(3);
        let s = np3(&c);
        assert_eq!(
            s.hamiltonian_vf(&[c.var(0), c.var(1)]).unwrap(),
            MultiVector::basis(c.clone(), &[2])
        );
        assert!(s
            .hamiltonian_vf(&[c.var(0), c.var(0)])
            .unwrap()
            .is_zero());
        // p = 2 Poisson case
        let s2 = NambuStructure::new(MultiVector::basis(Chart::standard(2), &[0, 1])).unwrap();
        let c2 = s2.chart().clone();
        assert_eq!(
            s2.hamiltonian_vf(&[c2.var(0)]).unwrap(),
            MultiVector::basis(c2, &[1])
        );
    }

    #[test]
    fn poisson_case_reproduces_canonical_bracket() {
        let c = chart(2);
        let s = NambuStructure::new(MultiVector::basis(c.clone(), &[0, 1])).unwrap();
        let f = c.var(0).pow(2).mul(&c.var(1));
        let g = c.var(1).pow(3).add(&c.var(0));
        let canonical = f
            .partial(0)
            .mul(&g.partial(1))
            .sub(&f.partial(1).mul(&g.partial(0)));
        assert_eq!(s.nambu_bracket(&[f, g]).unwrap(), canonical);
    }

    #[test]
    fn invariance_defect_examples() {
        let c = chart(3);
        let s = np3(&c);
        // constant decomposable, linear functions
        assert!(s
            .invariance_defect(&[c.var(0), c.var(1)])
            .unwrap()
            .is_zero());
        // f * decomposable is Nambu-Poisson
        let scaled = NambuStructure::new(MultiVector::term(c.clone(), &[0, 1, 2], c.var(0))).unwrap();
        let fs = [c.var(0).mul(&c.var(1)), c.var(2).pow(2).add(&c.var(1))];
        assert!(scaled.invariance_defect(&fs).unwrap().is_zero());
    }

    #[test]
    fn sum_of_disjoint_decomposables_has_nonzero_defects() {
        let c = chart(6);
        let t = MultiVector::basis(c.clone(), &[0, 1, 2]).add(&MultiVector::basis(c.clone(), &[3, 4, 5]));
        let s = NambuStructure::new(t).unwrap();
        // cross-block witness: fs = (x1 x4, x2), gs = (x4 x1, x5, x6) style
        let fs = [c.var(0).mul(&c.var(3)), c.var(1)];
        let gs = [c.var(0), c.var(4), c.var(5)];
        let fi = s.fi_defect(&fs, &gs).unwrap();
        let inv = s.invariance_defect(&fs).unwrap();
        assert!(!fi.is_zero() || !inv.is_zero());
    }

    #[test]
    fn fi_defect_zero_on_decomposable() {
        let c = chart(3);
        let s = np3(&c);
        let fs = [c.var(0).mul(&c.var(1)), c.var(2)];
        let gs = [c.var(0).pow(2), c.var(1), c.var(2).mul(&c.var(0))];
        assert!(s.fi_defect(&fs, &gs).unwrap().is_zero());
    }

    #[test]
    fn arity_errors() {
        let c = chart(3);
        let s = np3(&c);
        assert_eq!(
            s.nambu_bracket(&[c.var(0)]).unwrap_err(),
            NambuError::Arity { expected: 3, got: 1 }
        );
        assert!(matches!(
            s.hamiltonian_vf(&[c.var(0), c.var(1), c.var(2)]).unwrap_err(),
            NambuError::Arity { .. }
        ));
    }

    #[test]
    fn order_bounds_enforced() {
        let c = chart(3);
        assert!(matches!(
            NambuStructure::new(MultiVector::basis(c.clone(), &[0])),
            Err(NambuError::OrderOutOfBounds { .. })
        ));
        let c2 = chart(2);
        assert!(matches!(
            NambuStructure::new(MultiVector::zero(c2, 2)),
            Ok(_)
        ));
        let _ = Rational::from(num_bigint::BigInt::from(1));
    }
}
