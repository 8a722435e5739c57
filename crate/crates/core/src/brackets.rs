//! The bracket zoo on (p-1)-forms induced by a p-vector, and the generic
//! defect functionals: anchor Leibniz rule, Leibniz identity (Jacobi
//! anomaly), anchor morphism, derivation and antisymmetry defects.
//!
//! Every functional returns an exact tensor that is zero precisely when the
//! corresponding axiom holds on those inputs; the harness samples inputs and
//! the acceptance suite asserts the implications between the defects.

use crate::cartan::{apply_vf, ext_d, interior, lie_form, vf_bracket, NambuStructure};
use crate::exterior::{Form, MultiVector};
use crate::poly::Polynomial;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Which bracket on (p-1)-forms to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BracketKind {
    /// `[[a,b]] = L_{Pi(a)} b - i_{Pi(b)} da`
    Hagiwara,
    /// `[[a,b]] = L_{Pi(a)} b + (-1)^p (Pi(da)) b`
    Ibanez,
    /// `{a,b} = i_{Pi(b)} da + (-1)^p (Pi(da)) b`; equals Ibanez - Hagiwara
    Difference,
    /// `{a,b} = L_{Pi(a)} b - L_{Pi(b)} a - d(Pi(a,b))`; bivectors only
    Koszul,
}

impl BracketKind {
    pub const ALL: [BracketKind; 4] = [
        BracketKind::Hagiwara,
        BracketKind::Ibanez,
        BracketKind::Difference,
        BracketKind::Koszul,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BracketKind::Hagiwara => "hagiwara",
            BracketKind::Ibanez => "ibanez",
            BracketKind::Difference => "difference",
            BracketKind::Koszul => "koszul",
        }
    }

    /// Koszul is only defined for bivectors.
    pub fn admits_order(self, p: usize) -> bool {
        match self {
            BracketKind::Koszul => p == 2,
            _ => true,
        }
    }

    /// The anchor under which each bracket satisfies the Leibniz rule.
    pub fn natural_anchor(self) -> AnchorAssignment {
        match self {
            BracketKind::Difference => AnchorAssignment::ZeroMap,
            _ => AnchorAssignment::PiContraction,
        }
    }
}

impl fmt::Display for BracketKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How sections act on functions through the anchor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AnchorAssignment {
    /// `a(alpha) f = L_{Pi(alpha)} f`
    PiContraction,
    /// the zero map
    ZeroMap,
    /// projection to the vector part; only meaningful for Courant sections
    TangentProjection,
}

fn check_args(s: &NambuStructure, forms: &[&Form]) {
    let expect = s.order() - 1;
    for a in forms {
        assert_eq!(a.chart(), s.chart(), "bracket chart mismatch");
        assert_eq!(
            a.degree(),
            expect,
            "bracket argument degree mismatch: expected {expect}, got {}",
            a.degree()
        );
    }
}

/// Hagiwara bracket `[[a,b]] = L_{Pi(a)} b - i_{Pi(b)} da`.
pub fn hagiwara_bracket(s: &NambuStructure, a: &Form, b: &Form) -> Form {
    check_args(s, &[a, b]);
    let lie_part = lie_form(&s.apply(a), b);
    let da = ext_d(a);
    if da.is_zero() {
        return lie_part;
    }
    lie_part.sub(&interior(&s.apply(b), &da))
}

/// Ibanez bracket `[[a,b]] = L_{Pi(a)} b + (-1)^p (Pi(da)) b`, where
/// `Pi(da)` is the scalar full contraction of the p-form `da`.
pub fn ibanez_bracket(s: &NambuStructure, a: &Form, b: &Form) -> Form {
    check_args(s, &[a, b]);
    let lie_part = lie_form(&s.apply(a), b);
    let scalar = s.pair(&ext_d(a));
    let mut scaled = b.scale(&scalar);
    if s.order() % 2 == 1 {
        scaled = scaled.neg();
    }
    lie_part.add(&scaled)
}

/// Difference bracket `{a,b} = i_{Pi(b)} da + (-1)^p (Pi(da)) b` (equal to
/// Ibanez minus Hagiwara, which the suite checks as a structural identity).
pub fn difference_bracket(s: &NambuStructure, a: &Form, b: &Form) -> Form {
    check_args(s, &[a, b]);
    let da = ext_d(a);
    let scalar = s.pair(&da);
    let mut scaled = b.scale(&scalar);
    if s.order() % 2 == 1 {
        scaled = scaled.neg();
    }
    if da.is_zero() {
        return scaled;
    }
    interior(&s.apply(b), &da).add(&scaled)
}

/// Koszul bracket on 1-forms of a bivector:
/// `{a,b} = L_{Pi(a)} b - L_{Pi(b)} a - d(Pi(a,b))`.
pub fn koszul_bracket(s: &NambuStructure, a: &Form, b: &Form) -> Form {
    assert_eq!(s.order(), 2, "Koszul bracket needs a bivector");
    check_args(s, &[a, b]);
    let pi_ab = s.pair(&a.wedge(b));
    lie_form(&s.apply(a), b)
        .sub(&lie_form(&s.apply(b), a))
        .sub(&ext_d(&Form::scalar(pi_ab)))
}

/// Evaluate the bracket selected by `kind`.
pub fn bracket(kind: BracketKind, s: &NambuStructure, a: &Form, b: &Form) -> Form {
    match kind {
        BracketKind::Hagiwara => hagiwara_bracket(s, a, b),
        BracketKind::Ibanez => ibanez_bracket(s, a, b),
        BracketKind::Difference => difference_bracket(s, a, b),
        BracketKind::Koszul => koszul_bracket(s, a, b),
    }
}

/// Action of the anchor on a function: `(a(alpha)) f`.
pub fn anchor_apply(
    anchor: AnchorAssignment,
    s: &NambuStructure,
    alpha: &Form,
    f: &Polynomial,
) -> Polynomial {
    match anchor {
        AnchorAssignment::PiContraction => apply_vf(&s.apply(alpha), f),
        AnchorAssignment::ZeroMap => Polynomial::zero(f.chart().clone()),
        AnchorAssignment::TangentProjection => {
            panic!("TangentProjection anchor is only valid for Courant sections")
        }
    }
}

/// Anchor Leibniz-rule defect `[[a, f b]] - f [[a,b]] - (a(a)f) b`.
pub fn anchor_defect(
    kind: BracketKind,
    s: &NambuStructure,
    anchor: AnchorAssignment,
    a: &Form,
    f: &Polynomial,
    b: &Form,
) -> Form {
    let lhs = bracket(kind, s, a, &b.scale(f));
    let scaled = bracket(kind, s, a, b).scale(f);
    let anchor_term = b.scale(&anchor_apply(anchor, s, a, f));
    lhs.sub(&scaled).sub(&anchor_term)
}

/// Leibniz-identity defect `[[a,[[b,c]]]] - [[[[a,b]],c]] - [[b,[[a,c]]]]`.
pub fn leibnizator(kind: BracketKind, s: &NambuStructure, a: &Form, b: &Form, c: &Form) -> Form {
    bracket(kind, s, a, &bracket(kind, s, b, c))
        .sub(&bracket(kind, s, &bracket(kind, s, a, b), c))
        .sub(&bracket(kind, s, b, &bracket(kind, s, a, c)))
}

/// Morphism defect of the anchor evaluated on a test function:
/// `a([[a,b]]) f - [a(a), a(b)]_c f`.
pub fn morphism_defect(
    kind: BracketKind,
    s: &NambuStructure,
    anchor: AnchorAssignment,
    a: &Form,
    b: &Form,
    f: &Polynomial,
) -> Polynomial {
    match anchor {
        AnchorAssignment::ZeroMap => Polynomial::zero(f.chart().clone()),
        AnchorAssignment::PiContraction => {
            let ab = bracket(kind, s, a, b);
            let lhs = apply_vf(&s.apply(&ab), f);
            let xa = s.apply(a);
            let xb = s.apply(b);
            let commutator = apply_vf(&xa, &apply_vf(&xb, f)).sub(&apply_vf(&xb, &apply_vf(&xa, f)));
            lhs.sub(&commutator)
        }
        AnchorAssignment::TangentProjection => {
            panic!("TangentProjection anchor is only valid for Courant sections")
        }
    }
}

/// Derivation defect `a(a)(fg) - f a(a)g - g a(a)f` for the contraction
/// anchor; zero unconditionally (the Leibniz rule of a vector field).
pub fn derivation_defect(s: &NambuStructure, a: &Form, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let x = s.apply(a);
    apply_vf(&x, &f.mul(g))
        .sub(&f.mul(&apply_vf(&x, g)))
        .sub(&g.mul(&apply_vf(&x, f)))
}

/// Antisymmetry defect `(a([[a,b]]) + a([[b,a]])) f` for the contraction
/// anchor; zero whenever the morphism condition holds.
pub fn anchor_antisymmetry_defect(
    kind: BracketKind,
    s: &NambuStructure,
    a: &Form,
    b: &Form,
    f: &Polynomial,
) -> Polynomial {
    let ab = bracket(kind, s, a, b);
    let ba = bracket(kind, s, b, a);
    apply_vf(&s.apply(&ab), f).add(&apply_vf(&s.apply(&ba), f))
}
