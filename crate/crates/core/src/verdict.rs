//! The formality verdict engine.
//!
//! Verdicts are decided by the first matching rule:
//!
//! 0. rank <= 2: the projectivized complement is a punctured sphere and
//!    the Milnor fiber a punctured surface, hence formal (a classical
//!    fact, not one of the combinatorial criteria — the witness says so);
//! 1. two distinct reduced 3-multinets: not 1-formal;
//! 2. beta_3 = 2 with no flats of multiplicity 3r, r > 1: not 1-formal;
//! 3. Delta_1 known completely and equal to (t-1)^{n-1}: the monodromy
//!    acts trivially on degree-1 homology, the fiber is 1-formal, and in
//!    rank 3 a finite 2-complex is 1-formal iff formal — verdict FORMAL.
//!
//! Anything else is UNKNOWN, tagged with the open questions that apply.
//! Every decisive verdict carries a machine-checkable witness.

use std::fmt;

use thiserror::Error;

use crate::arrangement::{IncidenceL2, MultiplicityHypothesis};
use crate::exactmath::IntPoly;
use crate::milnor::MilnorInvariants;
use crate::multinet::Multinet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerdictError {
    #[error("inconsistent inputs: {0}")]
    InconsistentInputs(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictStatus {
    NotOneFormal,
    Formal,
    Unknown,
}

impl VerdictStatus {
    pub fn label(&self) -> &'static str {
        match self {
            VerdictStatus::NotOneFormal => "NOT_1_FORMAL",
            VerdictStatus::Formal => "FORMAL",
            VerdictStatus::Unknown => "UNKNOWN",
        }
    }
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Machine-checkable evidence for a decisive verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Rank <= 2; formality is classical, not a combinatorial criterion.
    PuncturedSurface { rank: usize },
    /// Two distinct reduced 3-multinets, by canonical class partition.
    TwoReducedThreeMultinets {
        first: Vec<Vec<u32>>,
        second: Vec<Vec<u32>>,
    },
    /// beta_3 = 2 together with the multiplicity hypothesis.
    Beta3Criterion { beta3: u64 },
    /// Complete Delta_1 equal to (t-1)^{n-1}.
    TrivialMonodromy { delta1: IntPoly },
}

/// Open-question tags attached to an UNKNOWN verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnknownReason {
    /// Exactly one reduced 3-multinet: no second component to pair it
    /// with, and whether such fibers can fail 1-formality is open.
    SingleEssentialNet,
    /// A non-trivial 4-net: the 3-net criteria do not apply and the
    /// 4-net case is open.
    FourNetCase,
    /// Delta_1 has undetermined exponents.
    PartialDelta1,
    /// Non-trivial monodromy is known, but no non-formality criterion
    /// applies.
    NontrivialMonodromyNoCriterion,
}

impl UnknownReason {
    pub fn tag(&self) -> &'static str {
        match self {
            UnknownReason::SingleEssentialNet => "SINGLE_ESSENTIAL_NET",
            UnknownReason::FourNetCase => "FOUR_NET_CASE",
            UnknownReason::PartialDelta1 => "PARTIAL_DELTA1",
            UnknownReason::NontrivialMonodromyNoCriterion => "NONTRIVIAL_MONODROMY_NO_CRITERION",
        }
    }
}

impl fmt::Display for UnknownReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalityVerdict {
    pub status: VerdictStatus,
    pub witness: Option<Witness>,
    pub reasons: Vec<UnknownReason>,
}

/// Decides the verdict from the upstream invariants. `multinets` is the
/// combined list discovered on this arrangement (3-multinets and 4-nets);
/// all inputs must have been computed from `inc`, which is enforced
/// through the incidence fingerprint.
pub fn assess(
    inc: &IncidenceL2,
    multinets: &[Multinet],
    beta3: u64,
    milnor: &MilnorInvariants,
    rank: usize,
) -> Result<FormalityVerdict, VerdictError> {
    let fp = inc.fingerprint();
    if multinets.iter().any(|m| m.fingerprint() != fp) {
        return Err(VerdictError::InconsistentInputs(
            "a multinet was verified against a different arrangement".into(),
        ));
    }
    if milnor.fingerprint() != fp {
        return Err(VerdictError::InconsistentInputs(
            "the monodromy data belongs to a different arrangement".into(),
        ));
    }

    if rank <= 2 {
        return Ok(FormalityVerdict {
            status: VerdictStatus::Formal,
            witness: Some(Witness::PuncturedSurface { rank }),
            reasons: vec![],
        });
    }

    let reduced_three: Vec<&Multinet> = multinets
        .iter()
        .filter(|m| m.k() == 3 && m.is_reduced())
        .collect();
    if reduced_three.len() >= 2 {
        return Ok(FormalityVerdict {
            status: VerdictStatus::NotOneFormal,
            witness: Some(Witness::TwoReducedThreeMultinets {
                first: reduced_three[0].classes().to_vec(),
                second: reduced_three[1].classes().to_vec(),
            }),
            reasons: vec![],
        });
    }

    if beta3 == 2 && inc.satisfies_hypothesis(3, MultiplicityHypothesis::ThreeR) {
        return Ok(FormalityVerdict {
            status: VerdictStatus::NotOneFormal,
            witness: Some(Witness::Beta3Criterion { beta3 }),
            reasons: vec![],
        });
    }

    if milnor.monodromy_is_trivial() == Some(true) {
        return Ok(FormalityVerdict {
            status: VerdictStatus::Formal,
            witness: Some(Witness::TrivialMonodromy {
                delta1: milnor.delta1.clone().expect("complete by the check above"),
            }),
            reasons: vec![],
        });
    }

    let mut reasons = Vec::new();
    if reduced_three.len() == 1 {
        reasons.push(UnknownReason::SingleEssentialNet);
    }
    if multinets.iter().any(|m| m.k() == 4 && m.weight() > 1) {
        reasons.push(UnknownReason::FourNetCase);
    }
    if !milnor.is_complete() {
        reasons.push(UnknownReason::PartialDelta1);
    }
    if milnor
        .entries
        .iter()
        .any(|e| e.exponent.is_some_and(|v| v > 0))
    {
        reasons.push(UnknownReason::NontrivialMonodromyNoCriterion);
    }
    debug_assert!(!reasons.is_empty(), "UNKNOWN always carries a reason");
    Ok(FormalityVerdict {
        status: VerdictStatus::Unknown,
        witness: None,
        reasons,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{Arrangement, FamilyTag};
    use crate::milnor::milnor_invariants;
    use crate::multinet::{enumerate_k_nets, enumerate_reduced_3_multinets, verify};
    use crate::oscomplex::beta_p;

    struct Setup {
        inc: IncidenceL2,
        multinets: Vec<Multinet>,
        beta3: u64,
        milnor: MilnorInvariants,
        rank: usize,
    }

    fn setup(arr: Arrangement, family: FamilyTag, with_four: bool) -> Setup {
        let rank = arr.rank();
        let inc = arr.intersection_lattice().unwrap();
        let mut multinets = enumerate_reduced_3_multinets(&inc);
        if with_four {
            multinets.extend(
                enumerate_k_nets(&inc, 4)
                    .unwrap()
                    .into_iter()
                    .map(|c| c.multinet),
            );
        }
        let beta3 = beta_p(&inc, 3).unwrap();
        let milnor = milnor_invariants(&inc, Some(family)).unwrap();
        Setup {
            inc,
            multinets,
            beta3,
            milnor,
            rank,
        }
    }

    fn run(s: &Setup) -> FormalityVerdict {
        assess(&s.inc, &s.multinets, s.beta3, &s.milnor, s.rank).unwrap()
    }

    #[test]
    fn ceva_not_one_formal_with_two_nets() {
        let s = setup(
            Arrangement::monomial(3).unwrap(),
            FamilyTag::Monomial(3),
            false,
        );
        let v = run(&s);
        assert_eq!(v.status, VerdictStatus::NotOneFormal);
        match v.witness.unwrap() {
            Witness::TwoReducedThreeMultinets { first, second } => {
                assert_ne!(first, second);
                // Witnesses replay through verify.
                let ones = vec![1u64; 9];
                assert!(verify(&s.inc, &first, &ones).is_ok());
                assert!(verify(&s.inc, &second, &ones).is_ok());
            }
            w => panic!("unexpected witness {w:?}"),
        }
    }

    #[test]
    fn ceva_beta3_criterion_without_enumeration() {
        let s = setup(
            Arrangement::monomial(3).unwrap(),
            FamilyTag::Monomial(3),
            false,
        );
        let v = assess(&s.inc, &[], s.beta3, &s.milnor, s.rank).unwrap();
        assert_eq!(v.status, VerdictStatus::NotOneFormal);
        assert_eq!(v.witness, Some(Witness::Beta3Criterion { beta3: 2 }));
    }

    #[test]
    fn monomial6_uses_rule_one_because_three_r_fails() {
        let s = setup(
            Arrangement::monomial(6).unwrap(),
            FamilyTag::Monomial(6),
            false,
        );
        assert_eq!(s.beta3, 2);
        let v = run(&s);
        assert_eq!(v.status, VerdictStatus::NotOneFormal);
        assert!(matches!(
            v.witness,
            Some(Witness::TwoReducedThreeMultinets { .. })
        ));
        // Without the enumerated witnesses the beta_3 route is blocked by
        // the multiplicity-6 flats, so the verdict degrades to UNKNOWN.
        let v = assess(&s.inc, &[], s.beta3, &s.milnor, s.rank).unwrap();
        assert_eq!(v.status, VerdictStatus::Unknown);
        assert!(v
            .reasons
            .contains(&UnknownReason::NontrivialMonodromyNoCriterion));
    }

    #[test]
    fn braid3_unknown() {
        let s = setup(Arrangement::braid3(), FamilyTag::Braid3, false);
        let v = run(&s);
        assert_eq!(v.status, VerdictStatus::Unknown);
        assert!(v
            .reasons
            .contains(&UnknownReason::NontrivialMonodromyNoCriterion));
        assert!(v.reasons.contains(&UnknownReason::SingleEssentialNet));
    }

    #[test]
    fn monomial2_unknown_single_net() {
        let s = setup(
            Arrangement::monomial(2).unwrap(),
            FamilyTag::Monomial(2),
            false,
        );
        let v = run(&s);
        assert_eq!(v.status, VerdictStatus::Unknown);
        assert!(v.reasons.contains(&UnknownReason::SingleEssentialNet));
    }

    #[test]
    fn hessian_unknown_four_net() {
        let s = setup(Arrangement::hessian(), FamilyTag::Hessian, true);
        let v = run(&s);
        assert_eq!(v.status, VerdictStatus::Unknown);
        assert!(v.reasons.contains(&UnknownReason::FourNetCase));
    }

    #[test]
    fn pencil_formal_by_rank() {
        let s = setup(Arrangement::pencil(5).unwrap(), FamilyTag::Pencil(5), false);
        let v = run(&s);
        assert_eq!(v.status, VerdictStatus::Formal);
        assert_eq!(v.witness, Some(Witness::PuncturedSurface { rank: 2 }));
    }

    #[test]
    fn trivial_monodromy_requires_complete_delta() {
        // Abstract near-pencil: one triple plus doubles; beta_3 = 0 and
        // all prime exponents certify to 0, and 6 has no composite
        // divisor issue (n = 4: divisors 2, 4).
        let inc = IncidenceL2::from_multiple_flats(4, &[vec![1, 2, 3]]).unwrap();
        let milnor = milnor_invariants(&inc, None).unwrap();
        let beta3 = beta_p(&inc, 3).unwrap();
        let v = assess(&inc, &[], beta3, &milnor, 3).unwrap();
        // Divisor 4 is composite with no family table: Delta_1 partial.
        assert_eq!(v.status, VerdictStatus::Unknown);
        assert_eq!(v.reasons, vec![UnknownReason::PartialDelta1]);
    }

    #[test]
    fn fingerprint_mismatch_rejected() {
        let s = setup(Arrangement::braid3(), FamilyTag::Braid3, false);
        let other = Arrangement::monomial(3)
            .unwrap()
            .intersection_lattice()
            .unwrap();
        let foreign = enumerate_reduced_3_multinets(&other);
        let err = assess(&s.inc, &foreign, s.beta3, &s.milnor, s.rank).unwrap_err();
        assert!(matches!(err, VerdictError::InconsistentInputs(_)));
    }

    #[test]
    fn never_formal_with_unknown_or_positive_exponents() {
        let s = setup(Arrangement::hessian(), FamilyTag::Hessian, true);
        let v = run(&s);
        assert_ne!(v.status, VerdictStatus::Formal);
        let s = setup(Arrangement::braid3(), FamilyTag::Braid3, false);
        let partial = milnor_invariants(&s.inc, None).unwrap();
        let v = assess(&s.inc, &[], s.beta3, &partial, s.rank).unwrap();
        assert_ne!(v.status, VerdictStatus::Formal);
    }
}
