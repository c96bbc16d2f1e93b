//! Arrangement data model, built-in families, and the rank-2 intersection
//! lattice with its Moebius/Betti numbers and multiplicity predicates.
//!
//! An [`Arrangement`] is a list of hyperplane normals in C^3 over a
//! cyclotomic field Q(zeta_m). Its [`IncidenceL2`] records, for every
//! unordered pair of hyperplanes, the rank-2 flat (projective intersection
//! point) the pair lies on; flats are the blocks of that pair partition.
//! All hyperplane indices are 1-based, in files, reports and in this API.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::exactmath::{CycloField, CycloNum, Field, Mat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("arrangement must contain at least one hyperplane")]
    Empty,
    #[error("hyperplane {0} has a zero normal vector")]
    ZeroNormal(u32),
    #[error("hyperplanes {0} and {1} are projectively proportional")]
    ProportionalNormals(u32, u32),
    #[error("normal matrix has rank {0}; a plane arrangement needs rank 2 or 3")]
    BadRank(usize),
    #[error(
        "cyclotomic order mismatch: arrangement has order {expected}, normal entry has order {got}"
    )]
    OrderMismatch { expected: u32, got: u32 },
    #[error("hyperplane index {index} out of range 1..={n}")]
    IndexOutOfRange { index: u32, n: u32 },
    #[error("flat {0:?} must contain at least 3 hyperplanes")]
    FlatTooSmall(Vec<u32>),
    #[error("flat {0:?} repeats an index")]
    RepeatedIndex(Vec<u32>),
    #[error("duplicate flat {0:?}")]
    DuplicateFlat(Vec<u32>),
    #[error("pair {{{0}, {1}}} covered by two flats")]
    PairCoveredTwice(u32, u32),
    #[error("pair {{{0}, {1}}} covered by no flat")]
    PairUncovered(u32, u32),
    #[error("invalid family parameter: {0}")]
    BadFamilyParameter(String),
    #[error("relabeling is not a permutation of 1..={0}")]
    BadPermutation(u32),
}

/// A central arrangement of hyperplanes in C^3, given by normal vectors
/// with entries in Q(zeta_m).
///
/// Normals are pairwise projectively distinct and non-zero; these are the
/// construction invariants, checked by [`Arrangement::new`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    name: String,
    order: u32,
    normals: Vec<[CycloNum; 3]>,
}

impl Arrangement {
    pub fn new(
        name: impl Into<String>,
        order: u32,
        normals: Vec<[CycloNum; 3]>,
    ) -> Result<Self, ArrangementError> {
        if normals.is_empty() {
            return Err(ArrangementError::Empty);
        }
        for (i, normal) in normals.iter().enumerate() {
            for coord in normal {
                if coord.order() != order {
                    return Err(ArrangementError::OrderMismatch {
                        expected: order,
                        got: coord.order(),
                    });
                }
            }
            if normal.iter().all(CycloNum::is_zero) {
                return Err(ArrangementError::ZeroNormal(i as u32 + 1));
            }
        }
        for i in 0..normals.len() {
            for j in i + 1..normals.len() {
                if cross(&normals[i], &normals[j])
                    .iter()
                    .all(CycloNum::is_zero)
                {
                    return Err(ArrangementError::ProportionalNormals(
                        i as u32 + 1,
                        j as u32 + 1,
                    ));
                }
            }
        }
        Ok(Arrangement {
            name: name.into(),
            order,
            normals,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn n(&self) -> u32 {
        self.normals.len() as u32
    }

    pub fn normals(&self) -> &[[CycloNum; 3]] {
        &self.normals
    }

    /// Rank of the normal matrix over Q(zeta_m).
    pub fn rank(&self) -> usize {
        let field = CycloField::new(self.order);
        let rows = self.normals.iter().map(|n| n.to_vec()).collect();
        Mat::from_rows(field, rows)
            .expect("normals are triples")
            .rank()
    }

    /// The rank-2 intersection lattice: hyperplane pairs grouped by their
    /// projective intersection line. The line of a pair is the cross
    /// product of the two normals, scaled so its first non-zero coordinate
    /// is 1; pairs sharing that line share a flat.
    pub fn intersection_lattice(&self) -> Result<IncidenceL2, ArrangementError> {
        let rank = self.rank();
        if rank < 2 {
            return Err(ArrangementError::BadRank(rank));
        }
        let n = self.n();
        let mut groups: HashMap<[CycloNum; 3], BTreeSet<u32>> = HashMap::new();
        for i in 0..self.normals.len() {
            for j in i + 1..self.normals.len() {
                let line = normalize_line(cross(&self.normals[i], &self.normals[j]));
                let members = groups.entry(line).or_default();
                members.insert(i as u32 + 1);
                members.insert(j as u32 + 1);
            }
        }
        let flats = groups
            .into_values()
            .map(|m| FlatL2::new(m.into_iter().collect()))
            .collect();
        IncidenceL2::from_all_flats(n, flats)
    }

    // ----- built-in families -------------------------------------------

    /// A pencil of n >= 3 lines: normals (1, -zeta_n^j, 0) over Q(zeta_n).
    pub fn pencil(n: u32) -> Result<Self, ArrangementError> {
        if n < 3 {
            return Err(ArrangementError::BadFamilyParameter(format!(
                "pencil needs n >= 3, got {n}"
            )));
        }
        let one = CycloNum::one(n);
        let zero = CycloNum::zero(n);
        let normals = (0..n)
            .map(|j| {
                [
                    one.clone(),
                    CycloNum::zeta_power(n, j as i64).neg(),
                    zero.clone(),
                ]
            })
            .collect();
        Arrangement::new(format!("pencil({n})"), n, normals)
    }

    /// The rank-3 braid arrangement, with hyperplanes ordered as the
    /// factors of (x+y)(x-y)(x+z)(x-z)(y+z)(y-z).
    pub fn braid3() -> Self {
        let t = |a: i64, b: i64, c: i64| {
            [
                CycloNum::from_int(1, a),
                CycloNum::from_int(1, b),
                CycloNum::from_int(1, c),
            ]
        };
        let normals = vec![
            t(1, 1, 0),
            t(1, -1, 0),
            t(1, 0, 1),
            t(1, 0, -1),
            t(0, 1, 1),
            t(0, 1, -1),
        ];
        Arrangement::new("braid3", 1, normals).expect("built-in family is valid")
    }

    /// The monomial arrangement of 3m hyperplanes cut out by
    /// (z1^m - z2^m)(z1^m - z3^m)(z2^m - z3^m), over Q(zeta_m).
    ///
    /// Hyperplanes are ordered family by family: first (1, -zeta^a, 0) for
    /// a = 0..m-1, then (1, 0, -zeta^b), then (0, 1, -zeta^c). Within the
    /// second family the exponents run 0, m-1, m-2, .., 1, so that the
    /// triple (H_{1+a}, H_{m+1+b'}, H_{2m+1+c}) is concurrent exactly when
    /// a + b' + c = 0 (mod m) in slot order; this is the labeling in which
    /// the classical net partitions of the m = 3 case take their familiar
    /// printed form. The ordering is a convention of this generator.
    pub fn monomial(m: u32) -> Result<Self, ArrangementError> {
        if m < 1 {
            return Err(ArrangementError::BadFamilyParameter(format!(
                "monomial needs m >= 1, got {m}"
            )));
        }
        let one = CycloNum::one(m);
        let zero = CycloNum::zero(m);
        let mut normals = Vec::with_capacity(3 * m as usize);
        for a in 0..m {
            normals.push([
                one.clone(),
                CycloNum::zeta_power(m, a as i64).neg(),
                zero.clone(),
            ]);
        }
        for b in 0..m {
            normals.push([
                one.clone(),
                zero.clone(),
                CycloNum::zeta_power(m, -(b as i64)).neg(),
            ]);
        }
        for c in 0..m {
            normals.push([
                zero.clone(),
                one.clone(),
                CycloNum::zeta_power(m, c as i64).neg(),
            ]);
        }
        Arrangement::new(format!("monomial({m})"), m, normals)
    }

    /// The Hessian arrangement: the coordinate planes z1, z2, z3 together
    /// with the nine planes z1 + zeta_3^j z2 + zeta_3^k z3, (j, k) in
    /// lexicographic order, over Q(zeta_3).
    pub fn hessian() -> Self {
        let one = CycloNum::one(3);
        let zero = CycloNum::zero(3);
        let mut normals = vec![
            [one.clone(), zero.clone(), zero.clone()],
            [zero.clone(), one.clone(), zero.clone()],
            [zero.clone(), zero.clone(), one.clone()],
        ];
        for j in 0..3 {
            for k in 0..3 {
                normals.push([
                    one.clone(),
                    CycloNum::zeta_power(3, j),
                    CycloNum::zeta_power(3, k),
                ]);
            }
        }
        Arrangement::new("hessian", 3, normals).expect("built-in family is valid")
    }
}

fn cross(a: &[CycloNum; 3], b: &[CycloNum; 3]) -> [CycloNum; 3] {
    let f = CycloField::new(a[0].order());
    let minor = |i: usize, j: usize| f.sub(&f.mul(&a[i], &b[j]), &f.mul(&a[j], &b[i]));
    [minor(1, 2), f.neg(&minor(0, 2)), minor(0, 1)]
}

/// Scales a non-zero vector so its first non-zero coordinate is 1, giving
/// a canonical representative of the projective line it spans.
fn normalize_line(v: [CycloNum; 3]) -> [CycloNum; 3] {
    let field = CycloField::new(v[0].order());
    let pivot = v
        .iter()
        .find(|c| !c.is_zero())
        .expect("cross product of distinct hyperplanes is non-zero");
    let inv = field.inv(pivot).expect("pivot is non-zero");
    [
        field.mul(&v[0], &inv),
        field.mul(&v[1], &inv),
        field.mul(&v[2], &inv),
    ]
}

/// A rank-2 flat: the sorted set of (1-based) hyperplanes through one
/// projective intersection point. Its multiplicity is the set size.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlatL2 {
    hyperplanes: Vec<u32>,
}

impl FlatL2 {
    pub fn new(mut hyperplanes: Vec<u32>) -> Self {
        hyperplanes.sort_unstable();
        FlatL2 { hyperplanes }
    }

    pub fn hyperplanes(&self) -> &[u32] {
        &self.hyperplanes
    }

    pub fn multiplicity(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn contains(&self, h: u32) -> bool {
        self.hyperplanes.binary_search(&h).is_ok()
    }

    /// The anchor is the least hyperplane through the flat.
    pub fn anchor(&self) -> u32 {
        self.hyperplanes[0]
    }
}

impl fmt::Display for FlatL2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.hyperplanes.iter().map(u32::to_string).collect();
        if self.hyperplanes.last().is_some_and(|&h| h >= 10) {
            write!(f, "{{{}}}", parts.join(","))
        } else {
            write!(f, "{{{}}}", parts.join(""))
        }
    }
}

/// Moebius data of the rank-2 lattice: b_1 = n, b_2 = sum (q_X - 1), and
/// mu(X) = q_X - 1 per flat (in flat order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiNumbers {
    pub b1: u64,
    pub b2: u64,
    pub mu: Vec<i64>,
}

/// Multiplicity predicates consumed by the transfer theorems.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultiplicityHypothesis {
    /// No flat has multiplicity divisible by p^2.
    PSquared,
    /// No flat has multiplicity 3r with r > 1. Meaningful for p = 3.
    ThreeR,
}

/// The rank-2 incidence structure of an arrangement: a partition of the
/// hyperplane pairs into flats.
///
/// Invariants: every unordered pair of hyperplanes lies in exactly one
/// flat, two distinct flats share at most one hyperplane, and hence
/// sum_X C(q_X, 2) = C(n, 2). Flats are kept in lexicographic order of
/// their sorted index sets, so all derived outputs are deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceL2 {
    n: u32,
    flats: Vec<FlatL2>,
    pair_flat: HashMap<(u32, u32), usize>,
}

impl IncidenceL2 {
    /// Builds from the complete flat list (multiplicities >= 2), checking
    /// the pair-partition invariants.
    pub(crate) fn from_all_flats(n: u32, mut flats: Vec<FlatL2>) -> Result<Self, ArrangementError> {
        if n == 0 {
            return Err(ArrangementError::Empty);
        }
        flats.sort();
        for w in flats.windows(2) {
            if w[0] == w[1] {
                return Err(ArrangementError::DuplicateFlat(w[0].hyperplanes.clone()));
            }
        }
        let mut pair_flat = HashMap::new();
        for (fi, flat) in flats.iter().enumerate() {
            let hs = flat.hyperplanes();
            for (a, &h) in hs.iter().enumerate() {
                if h < 1 || h > n {
                    return Err(ArrangementError::IndexOutOfRange { index: h, n });
                }
                if a + 1 < hs.len() && hs[a + 1] == h {
                    return Err(ArrangementError::RepeatedIndex(flat.hyperplanes.clone()));
                }
                for &k in &hs[a + 1..] {
                    if pair_flat.insert((h, k), fi).is_some() {
                        return Err(ArrangementError::PairCoveredTwice(h, k));
                    }
                }
            }
        }
        for h in 1..=n {
            for k in h + 1..=n {
                if !pair_flat.contains_key(&(h, k)) {
                    return Err(ArrangementError::PairUncovered(h, k));
                }
            }
        }
        Ok(IncidenceL2 {
            n,
            flats,
            pair_flat,
        })
    }

    /// Builds an abstract incidence structure from the flats of
    /// multiplicity >= 3 alone; every pair not covered by a listed flat
    /// becomes an implicit double flat. No geometric-realizability check
    /// is performed beyond pair uniqueness.
    pub fn from_multiple_flats(n: u32, multiple: &[Vec<u32>]) -> Result<Self, ArrangementError> {
        if n == 0 {
            return Err(ArrangementError::Empty);
        }
        let mut flats = Vec::new();
        let mut covered: HashMap<(u32, u32), ()> = HashMap::new();
        let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
        for raw in multiple {
            let flat = FlatL2::new(raw.clone());
            if flat.multiplicity() < 3 {
                return Err(ArrangementError::FlatTooSmall(flat.hyperplanes.clone()));
            }
            let hs = flat.hyperplanes();
            for (a, &h) in hs.iter().enumerate() {
                if h < 1 || h > n {
                    return Err(ArrangementError::IndexOutOfRange { index: h, n });
                }
                if a + 1 < hs.len() && hs[a + 1] == h {
                    return Err(ArrangementError::RepeatedIndex(flat.hyperplanes.clone()));
                }
            }
            if !seen.insert(flat.hyperplanes.clone()) {
                return Err(ArrangementError::DuplicateFlat(flat.hyperplanes.clone()));
            }
            for (a, &h) in hs.iter().enumerate() {
                for &k in &hs[a + 1..] {
                    if covered.insert((h, k), ()).is_some() {
                        return Err(ArrangementError::PairCoveredTwice(h, k));
                    }
                }
            }
            flats.push(flat);
        }
        for h in 1..=n {
            for k in h + 1..=n {
                if !covered.contains_key(&(h, k)) {
                    flats.push(FlatL2::new(vec![h, k]));
                }
            }
        }
        IncidenceL2::from_all_flats(n, flats)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn flats(&self) -> &[FlatL2] {
        &self.flats
    }

    pub fn flat(&self, idx: usize) -> &FlatL2 {
        &self.flats[idx]
    }

    /// Index of the unique flat containing the pair {h, k}.
    pub fn flat_of_pair(&self, h: u32, k: u32) -> Option<usize> {
        let key = if h < k { (h, k) } else { (k, h) };
        self.pair_flat.get(&key).copied()
    }

    /// Multiset of flat multiplicities, as multiplicity -> count.
    pub fn profile(&self) -> BTreeMap<u64, u64> {
        let mut out = BTreeMap::new();
        for f in &self.flats {
            *out.entry(f.multiplicity() as u64).or_insert(0) += 1;
        }
        out
    }

    /// Betti numbers of the complement in degrees 1 and 2, from the
    /// Moebius function: mu(X) = q_X - 1 on rank-2 flats.
    pub fn betti(&self) -> BettiNumbers {
        let mu: Vec<i64> = self
            .flats
            .iter()
            .map(|f| f.multiplicity() as i64 - 1)
            .collect();
        BettiNumbers {
            b1: self.n as u64,
            b2: mu.iter().sum::<i64>() as u64,
            mu,
        }
    }

    /// First flat violating the hypothesis, if any.
    pub fn hypothesis_violation(
        &self,
        p: u64,
        hypothesis: MultiplicityHypothesis,
    ) -> Option<&FlatL2> {
        self.flats.iter().find(|f| {
            let q = f.multiplicity() as u64;
            match hypothesis {
                MultiplicityHypothesis::PSquared => q.is_multiple_of(p * p),
                MultiplicityHypothesis::ThreeR => q.is_multiple_of(3) && q > 3,
            }
        })
    }

    pub fn satisfies_hypothesis(&self, p: u64, hypothesis: MultiplicityHypothesis) -> bool {
        self.hypothesis_violation(p, hypothesis).is_none()
    }

    /// Rank of the underlying line combinatorics: 2 when all hyperplanes
    /// pass through one common point (a single flat), otherwise 3.
    pub fn combinatorial_rank(&self) -> usize {
        if self.n == 1 {
            return 1;
        }
        if self.flats.len() == 1 && self.flats[0].multiplicity() == self.n as usize {
            return 2;
        }
        3
    }

    /// A deterministic identity for this incidence structure, used to
    /// reject mixing derived data across arrangements.
    pub fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.n.hash(&mut h);
        self.flats.hash(&mut h);
        h.finish()
    }

    /// The same structure with hyperplane h renamed to perm[h - 1].
    pub fn relabeled(&self, perm: &[u32]) -> Result<IncidenceL2, ArrangementError> {
        let n = self.n;
        let valid = perm.len() == n as usize && {
            let mut seen = vec![false; n as usize + 1];
            perm.iter()
                .all(|&p| p >= 1 && p <= n && !std::mem::replace(&mut seen[p as usize], true))
        };
        if !valid {
            return Err(ArrangementError::BadPermutation(n));
        }
        let flats = self
            .flats
            .iter()
            .map(|f| {
                FlatL2::new(
                    f.hyperplanes()
                        .iter()
                        .map(|&h| perm[h as usize - 1])
                        .collect(),
                )
            })
            .collect();
        IncidenceL2::from_all_flats(n, flats)
    }
}

/// Tags for the built-in families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyTag {
    Pencil(u32),
    Braid3,
    Monomial(u32),
    Hessian,
}

impl FamilyTag {
    pub fn build(&self) -> Result<Arrangement, ArrangementError> {
        match self {
            FamilyTag::Pencil(n) => Arrangement::pencil(*n),
            FamilyTag::Braid3 => Ok(Arrangement::braid3()),
            FamilyTag::Monomial(m) => Arrangement::monomial(*m),
            FamilyTag::Hessian => Ok(Arrangement::hessian()),
        }
    }

    /// Number of hyperplanes the tag implies.
    pub fn expected_n(&self) -> u32 {
        match self {
            FamilyTag::Pencil(n) => *n,
            FamilyTag::Braid3 => 6,
            FamilyTag::Monomial(m) => 3 * m,
            FamilyTag::Hessian => 12,
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::Pencil(n) => write!(f, "pencil({n})"),
            FamilyTag::Braid3 => write!(f, "braid3"),
            FamilyTag::Monomial(m) => write!(f, "monomial({m})"),
            FamilyTag::Hessian => write!(f, "hessian"),
        }
    }
}
