//! The arrangement file format.
//!
//! An arrangement file is a JSON document with a `name` and exactly one
//! of two bodies:
//!
//! * `geometric`: a cyclotomic order m and one normal per hyperplane,
//!   each normal a triple of coordinates, each coordinate the list of
//!   phi(m) rational coefficients of zeta_m^0 .. zeta_m^{phi(m)-1},
//!   written as `[numerator, denominator]` pairs;
//! * `combinatorial`: the number of hyperplanes and the list of flats of
//!   multiplicity >= 3 as 1-based index lists (pairs not covered by a
//!   listed flat become implicit double flats).

use arrcomb::arrangement::{Arrangement, IncidenceL2};
use arrcomb::exactmath::{euler_phi, CycloNum, Rat};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::CliError;

// Schema examples live in docs/formats.md at the repository root.

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArrangementFile {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub geometric: Option<GeometricData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub combinatorial: Option<CombinatorialData>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeometricData {
    pub cyclotomic_order: u32,
    /// One entry per hyperplane: three coordinates, each a list of
    /// phi(m) `[numerator, denominator]` pairs.
    pub hyperplanes: Vec<[Vec<[i64; 2]>; 3]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CombinatorialData {
    pub n: u32,
    pub flats: Vec<Vec<u32>>,
}

/// A successfully validated input: either geometry or bare combinatorics.
#[derive(Debug)]
pub enum BuiltInput {
    Geometric(Arrangement),
    Combinatorial(IncidenceL2),
}

impl ArrangementFile {
    pub fn parse(json: &str) -> Result<Self, CliError> {
        serde_json::from_str(json)
            .map_err(|e| CliError::Validation(format!("malformed arrangement file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("file schema serializes")
    }

    /// Validates the schema and builds the arrangement or incidence
    /// structure, running the corresponding constructor's checks.
    pub fn build(&self) -> Result<BuiltInput, CliError> {
        match (&self.geometric, &self.combinatorial) {
            (Some(geo), None) => {
                let m = geo.cyclotomic_order;
                if m < 1 {
                    return Err(CliError::Validation("cyclotomic_order must be >= 1".into()));
                }
                let phi = euler_phi(m as u64) as usize;
                let mut normals = Vec::with_capacity(geo.hyperplanes.len());
                for (hi, triple) in geo.hyperplanes.iter().enumerate() {
                    let mut normal = Vec::with_capacity(3);
                    for coord in triple {
                        if coord.len() != phi {
                            return Err(CliError::Validation(format!(
                                "hyperplane {}: coordinate needs {phi} coefficient pairs \
                                 for order {m}, got {}",
                                hi + 1,
                                coord.len()
                            )));
                        }
                        let mut acc = CycloNum::zero(m);
                        for (e, &[num, den]) in coord.iter().enumerate() {
                            if den == 0 {
                                return Err(CliError::Validation(format!(
                                    "hyperplane {}: zero denominator",
                                    hi + 1
                                )));
                            }
                            let c = Rat::new(BigInt::from(num), BigInt::from(den));
                            let term = CycloNum::zeta_power(m, e as i64).scaled(&c);
                            acc = acc.add(&term).expect("orders agree");
                        }
                        normal.push(acc);
                    }
                    let normal: [CycloNum; 3] = normal.try_into().expect("three coordinates");
                    normals.push(normal);
                }
                let arr = Arrangement::new(self.name.clone(), m, normals)
                    .map_err(|e| CliError::Validation(e.to_string()))?;
                Ok(BuiltInput::Geometric(arr))
            }
            (None, Some(comb)) => {
                let inc = IncidenceL2::from_multiple_flats(comb.n, &comb.flats)
                    .map_err(|e| CliError::Validation(e.to_string()))?;
                Ok(BuiltInput::Combinatorial(inc))
            }
            (Some(_), Some(_)) => Err(CliError::Validation(
                "file must contain exactly one of `geometric` and `combinatorial`, got both".into(),
            )),
            (None, None) => Err(CliError::Validation(
                "file must contain exactly one of `geometric` and `combinatorial`".into(),
            )),
        }
    }

    /// Serializes an arrangement's normals into the file schema. The
    /// schema stores coefficients as i64 pairs; built-in families are far
    /// inside that range.
    pub fn from_arrangement(arr: &Arrangement) -> Result<Self, CliError> {
        let to_pair = |r: &Rat| -> Result<[i64; 2], CliError> {
            let num = r.numer().to_i64();
            let den = r.denom().to_i64();
            match (num, den) {
                (Some(n), Some(d)) => Ok([n, d]),
                _ => Err(CliError::Validation(
                    "coefficient exceeds the file format's integer range".into(),
                )),
            }
        };
        let mut hyperplanes = Vec::with_capacity(arr.n() as usize);
        for normal in arr.normals() {
            let mut triple: Vec<Vec<[i64; 2]>> = Vec::with_capacity(3);
            for coord in normal {
                triple.push(
                    coord
                        .coeffs()
                        .iter()
                        .map(to_pair)
                        .collect::<Result<_, _>>()?,
                );
            }
            hyperplanes.push([triple[0].clone(), triple[1].clone(), triple[2].clone()]);
        }
        Ok(ArrangementFile {
            name: arr.name().to_string(),
            geometric: Some(GeometricData {
                cyclotomic_order: arr.order(),
                hyperplanes,
            }),
            combinatorial: None,
        })
    }
}
