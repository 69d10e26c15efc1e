//! Exact finite-field algebra for plane curves `f(x) = g(y)` that are
//! Frobenius nonclassical, built around minimal value set polynomials.

pub mod bipoly;
pub mod census;
pub mod error;
pub mod field;
pub mod mvsp;
pub mod poly;
pub mod sepcurves;
pub mod superelliptic;

pub use bipoly::{BiPoly, BiRing, Monomial};
pub use error::{Error, Result};
pub use field::{Elem, FieldSpec, FieldTower, GaloisField, Level};
pub use sepcurves::{FncReport, SepCurve};
pub use superelliptic::{GenusReport, Irreducibility, SuperCurve};
pub use poly::{PolyRing, RootEntry, RootProfile, UniPoly, ValueSetReport};
