//! The concrete Courant algebroid on `TM (+) T*M`: pairing, D operator,
//! Dorfman and Courant brackets, the five Courant axioms as exact defects,
//! and the pieces of the redundancy argument for the anchor-morphism axiom.
//!
//! Convention set (certified by `tests`): the pairing carries no 1/2 factor,
//! `(X+xi, Y+eta) = i_X eta + i_Y xi`, and the public `d_operator` is
//! `f |-> (0, df)`, which makes the Dorfman/Courant relation
//! `x o y = [[x,y]]_c + 1/2 D(x,y)` exact. The `D` inside the axiom system
//! is `1/2 d_operator` (the printed `1/2 beta^{-1} rho* d` evaluated against
//! this pairing); with that single reading all five axioms hold exactly.

use crate::cartan::{apply_vf, ext_d, interior, lie_form, vf_bracket};
use crate::exterior::{Form, MultiVector};
use crate::poly::{rat, Chart, Polynomial};
use std::fmt;

/// Section of `TM (+) T*M`: a vector field plus a 1-form on one chart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedSection {
    vector: MultiVector,
    covector: Form,
}

impl GeneralizedSection {
    pub fn new(vector: MultiVector, covector: Form) -> GeneralizedSection {
        assert_eq!(vector.chart(), covector.chart(), "section chart mismatch");
        assert_eq!(vector.degree(), 1, "vector part must have degree 1");
        assert_eq!(covector.degree(), 1, "covector part must have degree 1");
        GeneralizedSection { vector, covector }
    }

    pub fn zero(chart: Chart) -> GeneralizedSection {
        GeneralizedSection {
            vector: MultiVector::zero(chart.clone(), 1),
            covector: Form::zero(chart, 1),
        }
    }

    pub fn from_vector(vector: MultiVector) -> GeneralizedSection {
        let chart = vector.chart().clone();
        GeneralizedSection::new(vector, Form::zero(chart, 1))
    }

    pub fn from_covector(covector: Form) -> GeneralizedSection {
        let chart = covector.chart().clone();
        GeneralizedSection::new(MultiVector::zero(chart, 1), covector)
    }

    pub fn chart(&self) -> &Chart {
        self.vector.chart()
    }

    /// The anchor `rho`: projection to the tangent part.
    pub fn rho(&self) -> &MultiVector {
        &self.vector
    }

    pub fn covector(&self) -> &Form {
        &self.covector
    }

    pub fn is_zero(&self) -> bool {
        self.vector.is_zero() && self.covector.is_zero()
    }

    pub fn add(&self, other: &GeneralizedSection) -> GeneralizedSection {
        GeneralizedSection {
            vector: self.vector.add(&other.vector),
            covector: self.covector.add(&other.covector),
        }
    }

    pub fn sub(&self, other: &GeneralizedSection) -> GeneralizedSection {
        GeneralizedSection {
            vector: self.vector.sub(&other.vector),
            covector: self.covector.sub(&other.covector),
        }
    }

    pub fn neg(&self) -> GeneralizedSection {
        GeneralizedSection {
            vector: self.vector.neg(),
            covector: self.covector.neg(),
        }
    }

    pub fn scale(&self, f: &Polynomial) -> GeneralizedSection {
        GeneralizedSection {
            vector: self.vector.scale(f),
            covector: self.covector.scale(f),
        }
    }

    pub fn scale_rational(&self, r: &crate::poly::Rational) -> GeneralizedSection {
        GeneralizedSection {
            vector: self.vector.scale_rational(r),
            covector: self.covector.scale_rational(r),
        }
    }
}

impl fmt::Display for GeneralizedSection {
    /// Canonical text `@(vector; covector)`, e.g. `@(e1; x1*dx2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@({}; {})", self.vector, self.covector)
    }
}

/// Nondegenerate symmetric pairing `(X+xi, Y+eta) = i_X eta + i_Y xi`.
pub fn pairing(x: &GeneralizedSection, y: &GeneralizedSection) -> Polynomial {
    assert_eq!(x.chart(), y.chart(), "pairing chart mismatch");
    let chart = x.chart().clone();
    let mut out = Polynomial::zero(chart);
    if !y.covector.is_zero() {
        out = out.add(&interior(&x.vector, &y.covector).as_scalar());
    }
    if !x.covector.is_zero() {
        out = out.add(&interior(&y.vector, &x.covector).as_scalar());
    }
    out
}

/// `D f = (0, df)`; satisfies `rho(Df) = 0` and `(Df, y) = rho(y) f`.
pub fn d_operator(f: &Polynomial) -> GeneralizedSection {
    GeneralizedSection::from_covector(ext_d(&Form::scalar(f.clone())))
}

/// The `D` of the axiom system: `1/2 beta^{-1} rho* d = 1/2 d_operator`.
fn d_axiom(f: &Polynomial) -> GeneralizedSection {
    d_operator(f).scale_rational(&rat(1, 2))
}

/// Dorfman bracket `(X+xi) o (Y+eta) = [X,Y] + L_X eta - i_Y d xi`.
pub fn dorfman(x: &GeneralizedSection, y: &GeneralizedSection) -> GeneralizedSection {
    assert_eq!(x.chart(), y.chart(), "dorfman chart mismatch");
    let vector = vf_bracket(&x.vector, &y.vector);
    let mut covector = lie_form(&x.vector, &y.covector);
    let dxi = ext_d(&x.covector);
    if !dxi.is_zero() {
        covector = covector.sub(&interior(&y.vector, &dxi));
    }
    GeneralizedSection::new(vector, covector)
}

/// Courant bracket: the antisymmetrization `1/2 (x o y - y o x)`.
pub fn courant_bracket(x: &GeneralizedSection, y: &GeneralizedSection) -> GeneralizedSection {
    dorfman(x, y).sub(&dorfman(y, x)).scale_rational(&rat(1, 2))
}

/// Leibniz-identity defect of the Dorfman bracket,
/// `x o (y o z) - (x o y) o z - y o (x o z)`.
pub fn dorfman_leibnizator(
    x: &GeneralizedSection,
    y: &GeneralizedSection,
    z: &GeneralizedSection,
) -> GeneralizedSection {
    dorfman(x, &dorfman(y, z))
        .sub(&dorfman(&dorfman(x, y), z))
        .sub(&dorfman(y, &dorfman(x, z)))
}

/// Anchor Leibniz-rule defect of the Dorfman bracket,
/// `x o (f y) - f (x o y) - (rho(x) f) y`; exact zero on `TM (+) T*M`.
pub fn dorfman_anchor_defect(
    x: &GeneralizedSection,
    f: &Polynomial,
    y: &GeneralizedSection,
) -> GeneralizedSection {
    dorfman(x, &y.scale(f))
        .sub(&dorfman(x, y).scale(f))
        .sub(&y.scale(&apply_vf(&x.vector, f)))
}

/// Anchor-morphism defect of the Dorfman bracket on a test function,
/// `rho(x o y) f - [rho x, rho y] f` - the conclusion the Leibniz identity
/// plus the anchor rule force.
pub fn dorfman_morphism_defect(
    x: &GeneralizedSection,
    y: &GeneralizedSection,
    f: &Polynomial,
) -> Polynomial {
    let lhs = apply_vf(dorfman(x, y).rho(), f);
    lhs.sub(&apply_vf(&vf_bracket(&x.vector, &y.vector), f))
}

/// The five Courant axioms evaluated as exact defects on one instance.
#[derive(Debug, Clone)]
pub struct CourantAxiomDefects {
    /// axiom 1: cyclic Jacobiator minus `D T(x,y,z)`
    pub jacobi: GeneralizedSection,
    /// axiom 2: `(rho[[x,y]]_c - [rho x, rho y]) f`
    pub morphism: Polynomial,
    /// axiom 3: `[[x,fy]]_c - f[[x,y]]_c - (rho(x)f) y + (x,y) Df`
    pub module_rule: GeneralizedSection,
    /// axiom 4: `rho(Df)`
    pub rho_d: MultiVector,
    /// axiom 5 (Dorfman form): `rho(x)(y,z) - (x o y, z) - (y, x o z)`
    pub invariance: Polynomial,
}

impl CourantAxiomDefects {
    pub fn all_zero(&self) -> bool {
        self.jacobi.is_zero()
            && self.morphism.is_zero()
            && self.module_rule.is_zero()
            && self.rho_d.is_zero()
            && self.invariance.is_zero()
    }

    pub fn nonzero_axioms(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.jacobi.is_zero() {
            out.push("axiom-1-jacobi");
        }
        if !self.morphism.is_zero() {
            out.push("axiom-2-morphism");
        }
        if !self.module_rule.is_zero() {
            out.push("axiom-3-module-rule");
        }
        if !self.rho_d.is_zero() {
            out.push("axiom-4-rho-d");
        }
        if !self.invariance.is_zero() {
            out.push("axiom-5-invariance");
        }
        out
    }
}

/// Evaluate all five Courant axiom defects on one instance.
pub fn courant_axiom_suite(
    x: &GeneralizedSection,
    y: &GeneralizedSection,
    z: &GeneralizedSection,
    f: &Polynomial,
) -> CourantAxiomDefects {
    let xy = courant_bracket(x, y);
    let yz = courant_bracket(y, z);
    let zx = courant_bracket(z, x);

    // axiom 1 with T = 1/3 (([[x,y]],z) + ([[y,z]],x) + ([[z,x]],y))
    let t = pairing(&xy, z)
        .add(&pairing(&yz, x))
        .add(&pairing(&zx, y))
        .scale(&rat(1, 3));
    let jacobi = courant_bracket(&xy, z)
        .add(&courant_bracket(&yz, x))
        .add(&courant_bracket(&zx, y))
        .sub(&d_axiom(&t));

    // axiom 2 on the test function
    let morphism = apply_vf(xy.rho(), f).sub(&apply_vf(&vf_bracket(&x.vector, &y.vector), f));

    // axiom 3
    let module_rule = courant_bracket(x, &y.scale(f))
        .sub(&xy.scale(f))
        .sub(&y.scale(&apply_vf(&x.vector, f)))
        .add(&d_axiom(f).scale(&pairing(x, y)));

    // axiom 4
    let rho_d = d_axiom(f).rho().clone();

    // axiom 5 in Dorfman form
    let invariance = apply_vf(&x.vector, &pairing(y, z))
        .sub(&pairing(&dorfman(x, y), z))
        .sub(&pairing(y, &dorfman(x, z)));

    CourantAxiomDefects {
        jacobi,
        morphism,
        module_rule,
        rho_d,
        invariance,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chart() -> Chart {
        Chart::standard(3)
    }

    fn sections() -> (GeneralizedSection, GeneralizedSection, GeneralizedSection, Polynomial) {
        let c = chart();
        let x = GeneralizedSection::new(
            MultiVector::term(c.clone(), &[0], c.var(1)).add(&MultiVector::basis(c.clone(), &[2])),
            Form::term(c.clone(), &[1], c.var(0).mul(&c.var(2))),
        );
        let y = GeneralizedSection::new(
            MultiVector::term(c.clone(), &[1], c.var(2).pow(2)),
            Form::term(c.clone(), &[0], c.var(1)).add(&Form::term(c.clone(), &[2], c.var(0))),
        );
        let z = GeneralizedSection::new(
            MultiVector::term(c.clone(), &[2], c.var(0).add(&c.var(1))),
            Form::term(c.clone(), &[1], c.var(1).pow(2)),
        );
        let f = c.var(0).mul(&c.var(1)).add(&c.var(2));
        (x, y, z, f)
    }

    #[test]
    fn pairing_examples() {
        let c = chart();
        let e1 = GeneralizedSection::from_vector(MultiVector::basis(c.clone(), &[0]));
        let dx1 = GeneralizedSection::from_covector(Form::basis(c.clone(), &[0]));
        assert_eq!(pairing(&e1, &dx1), Polynomial::one(c.clone()));
        let both = e1.add(&dx1);
        assert_eq!(pairing(&both, &both), Polynomial::from_int(c.clone(), 2));
        let e2 = GeneralizedSection::from_vector(MultiVector::basis(c, &[1]));
        assert!(pairing(&e1, &e2).is_zero()); // tangent directions are isotropic
    }

    #[test]
    fn d_operator_examples() {
        let c = chart();
        let d = d_operator(&c.var(0));
        assert!(d.rho().is_zero());
        assert_eq!(*d.covector(), Form::basis(c.clone(), &[0]));
        assert!(d_operator(&Polynomial::from_int(c.clone(), 5)).is_zero());
        // (Df, y) = rho(y) f
        let (_, y, _, f) = sections();
        assert_eq!(pairing(&d_operator(&f), &y), apply_vf(&y.vector, &f));
    }

    #[test]
    fn dorfman_examples() {
        let c = chart();
        let e1 = GeneralizedSection::from_vector(MultiVector::basis(c.clone(), &[0]));
        let e2 = GeneralizedSection::from_vector(MultiVector::basis(c.clone(), &[1]));
        assert!(dorfman(&e1, &e2).is_zero());
        // (e1) o (x1 dx2) = dx2
        let y = GeneralizedSection::from_covector(Form::term(c.clone(), &[1], c.var(0)));
        assert_eq!(
            dorfman(&e1, &y),
            GeneralizedSection::from_covector(Form::basis(c.clone(), &[1]))
        );
        // x o x with constant X and linear f
        let x = e1.add(&GeneralizedSection::from_covector(ext_d(&Form::scalar(
            c.var(1),
        ))));
        assert!(dorfman(&x, &x).is_zero());
    }

    #[test]
    fn courant_bracket_examples() {
        let (x, y, _, _) = sections();
        assert!(courant_bracket(&x, &x).is_zero());
        // purely tangent sections reduce to the vector-field commutator
        let xt = GeneralizedSection::from_vector(x.vector.clone());
        let yt = GeneralizedSection::from_vector(y.vector.clone());
        assert_eq!(
            courant_bracket(&xt, &yt),
            GeneralizedSection::from_vector(vf_bracket(&x.vector, &y.vector))
        );
        // dorfman - courant = 1/2 d_operator(pairing)
        let gap = dorfman(&x, &y).sub(&courant_bracket(&x, &y));
        assert_eq!(gap, d_operator(&pairing(&x, &y)).scale_rational(&rat(1, 2)));
    }

    #[test]
    fn symmetric_part_identity() {
        let (x, y, _, _) = sections();
        let sym = dorfman(&x, &y).add(&dorfman(&y, &x));
        assert_eq!(sym, d_operator(&pairing(&x, &y)));
    }

    #[test]
    fn dorfman_leibnizator_vanishes() {
        let (x, y, z, _) = sections();
        assert!(dorfman_leibnizator(&x, &y, &z).is_zero());
        let c = chart();
        let k = GeneralizedSection::from_vector(MultiVector::basis(c, &[0]));
        assert!(dorfman_leibnizator(&k, &k, &k).is_zero());
    }

    #[test]
    fn dorfman_anchor_rule_is_exact() {
        let (x, y, _, f) = sections();
        assert!(dorfman_anchor_defect(&x, &f, &y).is_zero());
    }

    #[test]
    fn dorfman_morphism_defect_vanishes() {
        let (x, y, _, f) = sections();
        assert!(dorfman_morphism_defect(&x, &y, &f).is_zero());
    }

    #[test]
    fn axioms_hold_on_constant_sections() {
        let c = chart();
        let x = GeneralizedSection::from_vector(MultiVector::basis(c.clone(), &[0]));
        let y = GeneralizedSection::from_covector(Form::basis(c.clone(), &[1]));
        let z = GeneralizedSection::from_vector(MultiVector::basis(c.clone(), &[2]));
        let f = c.var(0);
        let d = courant_axiom_suite(&x, &y, &z, &f);
        assert!(d.all_zero(), "nonzero axioms: {:?}", d.nonzero_axioms());
    }

    #[test]
    fn axioms_hold_on_polynomial_sections() {
        let (x, y, z, f) = sections();
        let d = courant_axiom_suite(&x, &y, &z, &f);
        assert!(d.all_zero(), "nonzero axioms: {:?}", d.nonzero_axioms());
    }

    #[test]
    fn antisymmetrization_step_of_redundancy_proof() {
        // rho([[x,y]]) f = 1/2 (rho(x o y) - rho(y o x)) f = [rho x, rho y] f
        let (x, y, _, f) = sections();
        let via_courant = apply_vf(courant_bracket(&x, &y).rho(), &f);
        let via_dorfman = apply_vf(dorfman(&x, &y).rho(), &f)
            .sub(&apply_vf(dorfman(&y, &x).rho(), &f))
            .scale(&rat(1, 2));
        assert_eq!(via_courant, via_dorfman);
        let commutator = apply_vf(&vf_bracket(&x.vector, &y.vector), &f);
        assert_eq!(via_courant, commutator);
    }
}
