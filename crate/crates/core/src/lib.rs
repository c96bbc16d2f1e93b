//! Exact combinatorial invariants of central complex hyperplane
//! arrangements in C^3.
//!
//! The crate computes, from an arrangement's normals or from abstract
//! line combinatorics, the degree-<=2 invariants of the complement and of
//! the Milnor fiber of the defining polynomial:
//!
//! * the rank-2 intersection lattice, Moebius function and Betti numbers;
//! * the Orlik-Solomon algebra in degrees <= 2 and the Aomoto-Betti
//!   numbers beta_p over prime fields;
//! * multinets and k-nets (k = 3, 4), by verified symmetry-reduced search;
//! * the first resonance variety's local and essential components;
//! * the characteristic polynomial Delta_1(t) of the algebraic monodromy,
//!   with per-factor provenance, and the derived Milnor fiber numerology;
//! * a formality verdict for the Milnor fiber with a machine-checkable
//!   witness.
//!
//! All arithmetic is exact (arbitrary-precision rationals, cyclotomic
//! fields, prime fields); there is no floating point anywhere.

pub mod analysis;
pub mod arrangement;
pub mod exactmath;
pub mod milnor;
pub mod multinet;
pub mod oscomplex;
pub mod resonance;
pub mod verdict;

pub use analysis::{analyze_arrangement, analyze_incidence, corpus, Analysis, AnalysisOptions};
pub use arrangement::{
    Arrangement, ArrangementError, BettiNumbers, FamilyTag, FlatL2, IncidenceL2,
    MultiplicityHypothesis,
};
pub use exactmath::{aliases::*, cyclotomic_polynomial, CycloNum, ExactError, IntPoly};
pub use milnor::{ExponentEntry, MilnorInvariants, Provenance};
pub use multinet::{Multinet, MultinetError, NetCertificate};
pub use oscomplex::{aomoto_nullity, beta_p, OsAlgebra};
pub use resonance::{catalog, depth_stratification, isotropy_check, ResonanceComponent};
pub use verdict::{assess, FormalityVerdict, UnknownReason, VerdictStatus, Witness};
