//! Exact symbolic engine for bracket operators on differential forms and
//! multivector fields over a single coordinate chart.
//!
//! Everything is computed in exact rational arithmetic: coefficient
//! functions are multivariate polynomials over `Q`, so every algebraic
//! identity checked by the harness is a literal `== 0` on canonical forms,
//! never a floating-point tolerance.
//!
//! Module layout mirrors the mathematical stack:
//!
//! * [`poly`] — the coefficient ring (charts, rationals, polynomials)
//! * [`exterior`] — forms, multivector fields, wedge and contraction
//! * [`cartan`] — d, interior product, Lie derivatives, Schouten bracket,
//!   Nambu-Poisson structures and their certification defects
//! * [`brackets`] — the bracket zoo on (p-1)-forms and its defect functionals
//! * [`courant`] — the concrete Courant algebroid on `TM (+) T*M`
//! * [`library`] — the built-in corpus of certified tensors
//! * [`harness`] — seeded generation, experiments, reports
//! * [`expr`] — text parsing and rendering for every value kind

#![forbid(unsafe_code)]

pub mod brackets;
pub mod cartan;
pub mod courant;
pub mod expr;
pub mod exterior;
pub mod harness;
pub mod library;
pub mod poly;

pub use brackets::{AnchorAssignment, BracketKind};
pub use cartan::NambuStructure;
pub use courant::GeneralizedSection;
pub use exterior::{contract, Form, MultiVector};
pub use harness::{DefectReport, ExperimentId, GeneratorConfig, Verdict};
pub use library::{Certification, TensorLibrary};
pub use poly::{Chart, Polynomial, Rational};
