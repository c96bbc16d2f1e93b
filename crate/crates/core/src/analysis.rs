//! The full pipeline: intersection lattice -> Aomoto-Betti numbers ->
//! multinet search -> resonance catalog -> Delta_1 -> formality verdict.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::arrangement::{Arrangement, ArrangementError, BettiNumbers, FamilyTag, IncidenceL2};
use crate::exactmath::ExactError;
use crate::milnor::{milnor_invariants, MilnorError, MilnorInvariants};
use crate::multinet::{
    certify, enumerate_k_nets, enumerate_reduced_3_multinets, Multinet, MultinetError,
    NetCertificate,
};
use crate::oscomplex::beta_p;
use crate::resonance::{catalog, ResonanceComponent};
use crate::verdict::{assess, FormalityVerdict, VerdictError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Multinet(#[from] MultinetError),
    #[error(transparent)]
    Milnor(#[from] MilnorError),
    #[error(transparent)]
    Verdict(#[from] VerdictError),
    #[error("max-k must be 3 or 4, got {0}")]
    BadMaxK(u8),
}

/// Pipeline switches. `max_k` defaults to 4 when 4 divides n, else 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub primes: Vec<u64>,
    pub enumerate: bool,
    pub max_k: Option<u8>,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            primes: vec![2, 3, 5],
            enumerate: true,
            max_k: None,
        }
    }
}

/// Everything the pipeline computes for one arrangement.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub name: String,
    pub family: Option<FamilyTag>,
    pub n: u32,
    pub rank: usize,
    pub inc: IncidenceL2,
    pub betti: BettiNumbers,
    pub profile: BTreeMap<u64, u64>,
    pub beta: BTreeMap<u64, u64>,
    /// All discovered multinets (reduced 3-multinets, then 4-nets),
    /// canonically ordered; empty when enumeration is off.
    pub multinets: Vec<Multinet>,
    pub components: Vec<ResonanceComponent>,
    pub milnor: MilnorInvariants,
    pub verdict: FormalityVerdict,
    pub enumerated: bool,
    pub max_k_used: u8,
}

impl Analysis {
    /// Classification flags for each discovered multinet.
    pub fn certificates(&self) -> Vec<NetCertificate> {
        self.multinets.iter().map(certify).collect()
    }
}

/// Runs the pipeline on a geometric arrangement.
pub fn analyze_arrangement(
    arr: &Arrangement,
    family: Option<FamilyTag>,
    opts: &AnalysisOptions,
) -> Result<Analysis, AnalysisError> {
    let inc = arr.intersection_lattice()?;
    analyze_incidence(arr.name(), inc, arr.rank(), family, opts)
}

/// Runs the pipeline on abstract line combinatorics. The rank is the
/// combinatorial one unless the caller got it from geometry.
pub fn analyze_incidence(
    name: &str,
    inc: IncidenceL2,
    rank: usize,
    family: Option<FamilyTag>,
    opts: &AnalysisOptions,
) -> Result<Analysis, AnalysisError> {
    let n = inc.n();
    let max_k = match opts.max_k {
        Some(k @ (3 | 4)) => k,
        Some(k) => return Err(AnalysisError::BadMaxK(k)),
        None => {
            if n.is_multiple_of(4) {
                4
            } else {
                3
            }
        }
    };

    let betti = inc.betti();
    let profile = inc.profile();

    let mut beta = BTreeMap::new();
    for &p in &opts.primes {
        beta.insert(p, beta_p(&inc, p)?);
    }
    let beta3 = match beta.get(&3) {
        Some(&b) => b,
        None => beta_p(&inc, 3)?,
    };

    let mut multinets = Vec::new();
    if opts.enumerate {
        multinets.extend(enumerate_reduced_3_multinets(&inc));
        if max_k == 4 {
            multinets.extend(enumerate_k_nets(&inc, 4)?.into_iter().map(|c| c.multinet));
        }
    }

    let components = catalog(&inc, &multinets);
    let milnor = milnor_invariants(&inc, family)?;
    let verdict = assess(&inc, &multinets, beta3, &milnor, rank)?;

    Ok(Analysis {
        name: name.to_string(),
        family,
        n,
        rank,
        betti,
        profile,
        beta,
        multinets,
        components,
        milnor,
        verdict,
        enumerated: opts.enumerate,
        max_k_used: max_k,
        inc,
    })
}

/// The named arrangements used throughout the tests and docs: pencils of
/// 3..6 lines, the rank-3 braid arrangement, the monomial family for
/// m = 1..6, and the Hessian arrangement.
pub fn corpus() -> Vec<(FamilyTag, Arrangement)> {
    let mut out = Vec::new();
    for n in 3..=6 {
        out.push((
            FamilyTag::Pencil(n),
            Arrangement::pencil(n).expect("corpus parameter is valid"),
        ));
    }
    out.push((FamilyTag::Braid3, Arrangement::braid3()));
    for m in 1..=6 {
        out.push((
            FamilyTag::Monomial(m),
            Arrangement::monomial(m).expect("corpus parameter is valid"),
        ));
    }
    out.push((FamilyTag::Hessian, Arrangement::hessian()));
    out
}
