//! The analysis report: one structured JSON document per run, plus a
//! text rendering of the same field values.

use std::collections::BTreeMap;

use arrcomb::analysis::Analysis;
use arrcomb::exactmath::{cyclotomic_polynomial, euler_phi};
use arrcomb::multinet::render_partition;
use arrcomb::resonance::ComponentKind;
use arrcomb::verdict::Witness;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub name: String,
    pub n: u32,
    pub rank: usize,
    /// Flat multiplicity -> number of flats.
    pub l2_profile: BTreeMap<u64, u64>,
    pub b1: u64,
    pub b2: u64,
    /// Aomoto-Betti numbers for the requested primes.
    pub beta: BTreeMap<u64, u64>,
    pub multinets: Vec<MultinetEntry>,
    pub resonance: ResonanceSection,
    pub delta1: Delta1Section,
    pub b1f: NatOrPartial,
    pub w1_dim: NatOrPartial,
    pub h10_dim: NatOrPartial,
    pub verdict: VerdictSection,
}

/// A number, or the string "partial" when Delta_1 is incomplete.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NatOrPartial {
    Known(u64),
    Partial(String),
}

impl NatOrPartial {
    fn from_option(v: Option<u64>) -> Self {
        match v {
            Some(x) => NatOrPartial::Known(x),
            None => NatOrPartial::Partial("partial".into()),
        }
    }

    fn render(&self) -> String {
        match self {
            NatOrPartial::Known(x) => x.to_string(),
            NatOrPartial::Partial(s) => s.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MultinetEntry {
    pub partition: Vec<Vec<u32>>,
    pub rendered: String,
    pub k: usize,
    pub weight: u64,
    pub reduced: bool,
    pub net: bool,
    pub trivial: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResonanceSection {
    pub local: usize,
    pub essential: usize,
    pub components: Vec<ComponentEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentEntry {
    pub kind: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flat: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Delta1Section {
    pub complete: bool,
    pub factors: Vec<FactorEntry>,
    /// Expanded polynomial, present when complete.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<String>,
    /// Factored form, present when complete.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factored: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactorEntry {
    /// Divisor j of n; j = 1 is the eigenvalue-1 block (t-1)^{n-1}.
    pub divisor: u64,
    pub cyclotomic: String,
    pub phi: u64,
    #[serde(default)]
    pub exponent: Option<u64>,
    pub provenance: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub annotation: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictSection {
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessEntry>,
    pub reasons: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum WitnessEntry {
    #[serde(rename = "PUNCTURED_SURFACE")]
    PuncturedSurface { rank: usize },
    #[serde(rename = "TWO_REDUCED_3MULTINETS")]
    TwoReducedThreeMultinets {
        first: Vec<Vec<u32>>,
        first_rendered: String,
        second: Vec<Vec<u32>>,
        second_rendered: String,
    },
    #[serde(rename = "BETA3_CRITERION")]
    Beta3Criterion { beta3: u64, hypothesis: String },
    #[serde(rename = "TRIVIAL_MONODROMY")]
    TrivialMonodromy { delta1: String },
}

impl Report {
    pub fn build(analysis: &Analysis) -> Report {
        let n = analysis.n;
        let multinets = analysis
            .certificates()
            .iter()
            .map(|cert| MultinetEntry {
                partition: cert.multinet.classes().to_vec(),
                rendered: cert.multinet.partition_string(),
                k: cert.multinet.k(),
                weight: cert.multinet.weight(),
                reduced: cert.reduced,
                net: cert.net,
                trivial: cert.trivial,
            })
            .collect();

        let mut local = 0;
        let mut essential = 0;
        let components = analysis
            .components
            .iter()
            .map(|c| match c.kind {
                ComponentKind::Local { flat } => {
                    local += 1;
                    ComponentEntry {
                        kind: "local".into(),
                        dim: c.dim,
                        flat: Some(analysis.inc.flat(flat).hyperplanes().to_vec()),
                        partition: None,
                    }
                }
                ComponentKind::Essential { multinet } => {
                    essential += 1;
                    ComponentEntry {
                        kind: "essential".into(),
                        dim: c.dim,
                        flat: None,
                        partition: Some(analysis.multinets[multinet].partition_string()),
                    }
                }
            })
            .collect();

        let mut factors = vec![FactorEntry {
            divisor: 1,
            cyclotomic: cyclotomic_polynomial(1).to_string(),
            phi: 1,
            exponent: Some(n as u64 - 1),
            provenance: "eigenvalue-1 block: the monodromy fixes H^1 of the projectivized \
                         complement, of dimension n - 1"
                .into(),
            annotation: None,
        }];
        for e in &analysis.milnor.entries {
            factors.push(FactorEntry {
                divisor: e.divisor,
                cyclotomic: cyclotomic_polynomial(e.divisor).to_string(),
                phi: euler_phi(e.divisor),
                exponent: e.exponent,
                provenance: e.provenance.describe(),
                annotation: e.annotation.clone(),
            });
        }
        let delta1 = Delta1Section {
            complete: analysis.milnor.is_complete(),
            factors,
            polynomial: analysis.milnor.delta1.as_ref().map(|p| p.to_string()),
            factored: analysis
                .milnor
                .is_complete()
                .then(|| analysis.milnor.factored_string()),
        };

        let witness = analysis.verdict.witness.as_ref().map(|w| match w {
            Witness::PuncturedSurface { rank } => WitnessEntry::PuncturedSurface { rank: *rank },
            Witness::TwoReducedThreeMultinets { first, second } => {
                WitnessEntry::TwoReducedThreeMultinets {
                    first: first.clone(),
                    first_rendered: render_partition(first, n),
                    second: second.clone(),
                    second_rendered: render_partition(second, n),
                }
            }
            Witness::Beta3Criterion { beta3 } => WitnessEntry::Beta3Criterion {
                beta3: *beta3,
                hypothesis: "no flat has multiplicity 3r with r > 1".into(),
            },
            Witness::TrivialMonodromy { delta1 } => WitnessEntry::TrivialMonodromy {
                delta1: delta1.to_string(),
            },
        });

        Report {
            schema_version: SCHEMA_VERSION,
            name: analysis.name.clone(),
            n,
            rank: analysis.rank,
            l2_profile: analysis.profile.clone(),
            b1: analysis.betti.b1,
            b2: analysis.betti.b2,
            beta: analysis.beta.clone(),
            multinets,
            resonance: ResonanceSection {
                local,
                essential,
                components,
            },
            delta1,
            b1f: NatOrPartial::from_option(analysis.milnor.b1f),
            w1_dim: NatOrPartial::from_option(analysis.milnor.w1_dim),
            h10_dim: NatOrPartial::from_option(analysis.milnor.h10_dim),
            verdict: VerdictSection {
                status: analysis.verdict.status.label().to_string(),
                witness,
                reasons: analysis
                    .verdict
                    .reasons
                    .iter()
                    .map(|r| r.tag().to_string())
                    .collect(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("arrangement: {}", self.name));
        line(format!("n: {}   rank: {}", self.n, self.rank));
        let profile = self
            .l2_profile
            .iter()
            .rev()
            .map(|(q, c)| format!("{q}^{c}"))
            .collect::<Vec<_>>()
            .join(" ");
        line(format!("L2 profile: {{{profile}}}"));
        line(format!("b1: {}   b2: {}", self.b1, self.b2));
        let beta = self
            .beta
            .iter()
            .map(|(p, b)| format!("beta_{p} = {b}"))
            .collect::<Vec<_>>()
            .join(", ");
        line(format!("aomoto-betti: {beta}"));
        line(format!("multinets ({}):", self.multinets.len()));
        for m in &self.multinets {
            line(format!(
                "  {}  k={} weight={}{}{}{}",
                m.rendered,
                m.k,
                m.weight,
                if m.reduced { " reduced" } else { "" },
                if m.net { " net" } else { "" },
                if m.trivial { " trivial" } else { "" },
            ));
        }
        line(format!(
            "resonance components: {} local + {} essential",
            self.resonance.local, self.resonance.essential
        ));
        for c in &self.resonance.components {
            let what = c
                .flat
                .as_ref()
                .map(|f| format!("{f:?}"))
                .or_else(|| c.partition.clone())
                .unwrap_or_default();
            line(format!("  {} dim {}  {}", c.kind, c.dim, what));
        }
        line(format!(
            "delta_1: {}",
            self.delta1
                .factored
                .clone()
                .unwrap_or_else(|| "partial".into())
        ));
        for f in &self.delta1.factors {
            let exp = f
                .exponent
                .map(|e| e.to_string())
                .unwrap_or_else(|| "?".into());
            line(format!(
                "  j={} ({})^{}  [{}]{}",
                f.divisor,
                f.cyclotomic,
                exp,
                f.provenance,
                f.annotation
                    .as_ref()
                    .map(|a| format!(" [{a}]"))
                    .unwrap_or_default()
            ));
        }
        line(format!(
            "b1(F): {}   dim W1(F): {}   dim H^{{1,0}}(F): {}",
            self.b1f.render(),
            self.w1_dim.render(),
            self.h10_dim.render()
        ));
        line(format!("verdict: {}", self.verdict.status));
        if let Some(w) = &self.verdict.witness {
            let text = match w {
                WitnessEntry::PuncturedSurface { rank } => format!(
                    "PUNCTURED_SURFACE: rank {rank} <= 2, the fiber is a punctured \
                     surface (classical formality, not a combinatorial criterion)"
                ),
                WitnessEntry::TwoReducedThreeMultinets {
                    first_rendered,
                    second_rendered,
                    ..
                } => format!("TWO_REDUCED_3MULTINETS: {first_rendered} and {second_rendered}"),
                WitnessEntry::Beta3Criterion { beta3, hypothesis } => {
                    format!("BETA3_CRITERION: beta_3 = {beta3}, {hypothesis}")
                }
                WitnessEntry::TrivialMonodromy { delta1 } => {
                    format!("TRIVIAL_MONODROMY: delta_1 = {delta1}")
                }
            };
            line(format!("  witness: {text}"));
        }
        if !self.verdict.reasons.is_empty() {
            line(format!("  reasons: {}", self.verdict.reasons.join(", ")));
        }
        out
    }
}
