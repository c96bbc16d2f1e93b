//! Multinet verification and symmetry-reduced enumeration of reduced
//! 3-multinets and k-nets.
//!
//! A multinet on an arrangement is a partition into k >= 3 classes with a
//! multiplicity m_H >= 1 per hyperplane, subject to four axioms:
//!
//! (i)   the class weight d = sum of m_H over a class is the same for
//!       every class;
//! (ii)  hyperplanes from different classes meet inside the base locus
//!       (which we always take to be the set of flats meeting >= 2
//!       classes, so this holds by construction and is kept as a
//!       consistency assertion);
//! (iii) for every base-locus flat X the count n_X = sum of m_H over the
//!       hyperplanes of one class through X is the same for every class,
//!       the sum running over all k classes — so every class meets every
//!       base-locus flat;
//! (iv)  each class is connected through flats outside the base locus.
//!
//! `reduced` means all m_H = 1; a `net` is reduced with exactly one
//! hyperplane per class through each base-locus flat; `trivial` means
//! weight d = 1.
//!
//! Enumeration searches class assignments hyperplane by hyperplane with
//! two symmetry pins (hyperplane 1 opens class 1, the first hyperplane
//! outside class 1 opens class 2) and prunes on partial violations of
//! axioms (i) and (iii) as flats fill up. The output is duplicate-free
//! modulo class relabeling and canonically ordered, and every result has
//! passed [`verify`].

use std::fmt;

use thiserror::Error;

use crate::arrangement::IncidenceL2;

/// Which multinet axiom a verification failure violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// (i) equal class weights.
    EqualWeights,
    /// (ii) cross-class pairs meet in the base locus.
    CrossPairsInBase,
    /// (iii) n_X independent of the class, for every base-locus flat.
    BalancedCounts,
    /// (iv) classes connected outside the base locus.
    ClassConnectivity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::EqualWeights => "(i) equal class weights",
            Axiom::CrossPairsInBase => "(ii) cross-class pairs in base locus",
            Axiom::BalancedCounts => "(iii) balanced base-locus counts",
            Axiom::ClassConnectivity => "(iv) class connectivity",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultinetError {
    #[error("classes must partition 1..={n}: {detail}")]
    MalformedPartition { n: u32, detail: String },
    #[error("a multinet needs at least 3 classes, got {0}")]
    TooFewClasses(usize),
    #[error("multiplicity of hyperplane {0} must be >= 1")]
    ZeroMultiplicity(u32),
    #[error("expected {expected} multiplicities, got {got}")]
    MultiplicityLength { expected: usize, got: usize },
    #[error("net enumeration supports k in {{3, 4}}, got {0}")]
    UnsupportedK(usize),
    #[error("axiom {axiom} violated: {detail}")]
    AxiomViolation { axiom: Axiom, detail: String },
}

/// A verified multinet: a class partition with multiplicities satisfying
/// the four axioms, together with its base locus and counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multinet {
    fingerprint: u64,
    n: u32,
    classes: Vec<Vec<u32>>,
    mults: Vec<u64>,
    weight: u64,
    base_locus: Vec<usize>,
    n_x: Vec<u64>,
}

impl Multinet {
    pub fn k(&self) -> usize {
        self.classes.len()
    }

    /// Classes ordered by least member, each sorted ascending.
    pub fn classes(&self) -> &[Vec<u32>] {
        &self.classes
    }

    /// Multiplicity of hyperplane h (1-based).
    pub fn multiplicity(&self, h: u32) -> u64 {
        self.mults[h as usize - 1]
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.mults
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Indices (into the incidence flat list) of the base-locus flats.
    pub fn base_locus(&self) -> &[usize] {
        &self.base_locus
    }

    /// n_X per base-locus flat, aligned with [`Multinet::base_locus`].
    pub fn base_counts(&self) -> &[u64] {
        &self.n_x
    }

    pub fn is_reduced(&self) -> bool {
        self.mults.iter().all(|&m| m == 1)
    }

    /// Fingerprint of the incidence structure this multinet was verified
    /// against.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Class of hyperplane h, as an index into [`Multinet::classes`].
    pub fn class_of(&self, h: u32) -> usize {
        self.classes
            .iter()
            .position(|c| c.binary_search(&h).is_ok())
            .expect("classes partition the hyperplanes")
    }

    /// Class labels per hyperplane, first-occurrence ordered; the
    /// canonical form modulo class relabeling.
    pub fn assignment(&self) -> Vec<u8> {
        (1..=self.n).map(|h| self.class_of(h) as u8).collect()
    }

    /// The partition in bar notation, classes separated by `|`. Indices
    /// are concatenated digits while n <= 9 and comma-separated once
    /// multi-digit indices appear, e.g. `(123|456|789)` and
    /// `(1,2,10|...)`.
    pub fn partition_string(&self) -> String {
        render_partition(&self.classes, self.n)
    }
}

/// Renders classes of 1-based indices in bar notation.
pub fn render_partition(classes: &[Vec<u32>], n: u32) -> String {
    let sep = if n >= 10 { "," } else { "" };
    let body = classes
        .iter()
        .map(|c| c.iter().map(u32::to_string).collect::<Vec<_>>().join(sep))
        .collect::<Vec<_>>()
        .join("|");
    format!("({body})")
}

/// A multinet together with its classification flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetCertificate {
    pub multinet: Multinet,
    /// All multiplicities equal to 1.
    pub reduced: bool,
    /// Reduced, and every base-locus flat meets exactly one hyperplane
    /// per class.
    pub net: bool,
    /// Weight d = 1.
    pub trivial: bool,
}

/// Classifies a verified multinet.
pub fn certify(multinet: &Multinet) -> NetCertificate {
    let reduced = multinet.is_reduced();
    let net = reduced && multinet.n_x.iter().all(|&c| c == 1);
    NetCertificate {
        trivial: multinet.weight == 1,
        reduced,
        net,
        multinet: multinet.clone(),
    }
}

/// Checks the multinet axioms for the given classes and multiplicities.
/// The base locus is the set of flats meeting at least two classes.
/// Returns the verified [`Multinet`], or the first violated axiom with a
/// witness.
pub fn verify(
    inc: &IncidenceL2,
    classes: &[Vec<u32>],
    mults: &[u64],
) -> Result<Multinet, MultinetError> {
    let n = inc.n();
    let k = classes.len();
    if k < 3 {
        return Err(MultinetError::TooFewClasses(k));
    }
    if mults.len() != n as usize {
        return Err(MultinetError::MultiplicityLength {
            expected: n as usize,
            got: mults.len(),
        });
    }
    if let Some(h) = mults.iter().position(|&m| m == 0) {
        return Err(MultinetError::ZeroMultiplicity(h as u32 + 1));
    }

    // Partition check: each of 1..=n in exactly one class, none empty.
    let mut class_of = vec![usize::MAX; n as usize];
    for (ci, class) in classes.iter().enumerate() {
        if class.is_empty() {
            return Err(MultinetError::MalformedPartition {
                n,
                detail: format!("class {} is empty", ci + 1),
            });
        }
        for &h in class {
            if h < 1 || h > n {
                return Err(MultinetError::MalformedPartition {
                    n,
                    detail: format!("index {h} out of range"),
                });
            }
            if class_of[h as usize - 1] != usize::MAX {
                return Err(MultinetError::MalformedPartition {
                    n,
                    detail: format!("hyperplane {h} appears in two classes"),
                });
            }
            class_of[h as usize - 1] = ci;
        }
    }
    if let Some(h) = class_of.iter().position(|&c| c == usize::MAX) {
        return Err(MultinetError::MalformedPartition {
            n,
            detail: format!("hyperplane {} is in no class", h + 1),
        });
    }

    // Axiom (i): equal class weights.
    let weights: Vec<u64> = classes
        .iter()
        .map(|c| c.iter().map(|&h| mults[h as usize - 1]).sum())
        .collect();
    let weight = weights[0];
    if weights.iter().any(|&w| w != weight) {
        return Err(MultinetError::AxiomViolation {
            axiom: Axiom::EqualWeights,
            detail: format!("class weights {:?} are not constant", weights),
        });
    }

    // Base locus: flats meeting >= 2 classes.
    let mut base_locus = Vec::new();
    let mut n_x = Vec::new();
    for (fi, flat) in inc.flats().iter().enumerate() {
        let mut counts = vec![0u64; k];
        for &h in flat.hyperplanes() {
            counts[class_of[h as usize - 1]] += mults[h as usize - 1];
        }
        let present = counts.iter().filter(|&&c| c > 0).count();
        if present < 2 {
            continue;
        }
        // Axiom (iii), over all k classes: in particular every class
        // meets every base-locus flat.
        let c0 = counts[0];
        if counts.iter().any(|&c| c != c0) {
            return Err(MultinetError::AxiomViolation {
                axiom: Axiom::BalancedCounts,
                detail: format!("flat {} has per-class counts {:?}", flat, counts),
            });
        }
        base_locus.push(fi);
        n_x.push(c0);
    }

    // Axiom (ii) holds by construction of the base locus; assert it.
    for (fi, flat) in inc.flats().iter().enumerate() {
        let mut it = flat.hyperplanes().iter();
        let first = class_of[*it.next().unwrap() as usize - 1];
        if it.any(|&h| class_of[h as usize - 1] != first) && base_locus.binary_search(&fi).is_err()
        {
            return Err(MultinetError::AxiomViolation {
                axiom: Axiom::CrossPairsInBase,
                detail: format!("cross-class flat {flat} missing from base locus"),
            });
        }
    }

    // Axiom (iv): each class connected through flats outside the base
    // locus.
    for (ci, class) in classes.iter().enumerate() {
        if !class_connected(inc, class, &base_locus) {
            return Err(MultinetError::AxiomViolation {
                axiom: Axiom::ClassConnectivity,
                detail: format!("class {} is disconnected outside the base locus", ci + 1),
            });
        }
    }

    let mut canonical: Vec<Vec<u32>> = classes
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.sort_unstable();
            c
        })
        .collect();
    canonical.sort_by_key(|c| c[0]);

    Ok(Multinet {
        fingerprint: inc.fingerprint(),
        n,
        classes: canonical,
        mults: mults.to_vec(),
        weight,
        base_locus,
        n_x,
    })
}

fn class_connected(inc: &IncidenceL2, class: &[u32], base_locus: &[usize]) -> bool {
    let m = class.len();
    if m <= 1 {
        return true;
    }
    let mut visited = vec![false; m];
    let mut stack = vec![0usize];
    visited[0] = true;
    let mut seen = 1;
    while let Some(i) = stack.pop() {
        for j in 0..m {
            if visited[j] {
                continue;
            }
            let fi = inc
                .flat_of_pair(class[i], class[j])
                .expect("every pair lies in a flat");
            if base_locus.binary_search(&fi).is_err() {
                visited[j] = true;
                seen += 1;
                stack.push(j);
            }
        }
    }
    seen == m
}

/// Enumerates the reduced 3-multinets of an incidence structure, in
/// canonical order, one representative per class-relabeling orbit.
pub fn enumerate_reduced_3_multinets(inc: &IncidenceL2) -> Vec<Multinet> {
    enumerate_reduced(inc, 3, false)
}

/// Enumerates the k-nets (k = 3 or 4), in canonical order, one per
/// relabeling orbit. Empty when k does not divide n.
pub fn enumerate_k_nets(inc: &IncidenceL2, k: usize) -> Result<Vec<NetCertificate>, MultinetError> {
    if !(k == 3 || k == 4) {
        return Err(MultinetError::UnsupportedK(k));
    }
    Ok(enumerate_reduced(inc, k, true)
        .iter()
        .map(certify)
        .collect())
}

/// Backtracking search over class assignments. In the reduced case the
/// class weight is the class size, so each class holds exactly n/k
/// hyperplanes; a flat that meets two classes must spread its
/// multiplicity q evenly, q/k per class (exactly one per class for
/// nets). Both facts prune partial assignments; axiom (iv) is left to
/// the final [`verify`].
fn enumerate_reduced(inc: &IncidenceL2, k: usize, nets_only: bool) -> Vec<Multinet> {
    let n = inc.n() as usize;
    if n < k || !n.is_multiple_of(k) {
        return Vec::new();
    }
    let quota = n / k;

    let flats = inc.flats();
    let flat_size: Vec<usize> = flats.iter().map(|f| f.multiplicity()).collect();
    let mut flats_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (fi, f) in flats.iter().enumerate() {
        for &h in f.hyperplanes() {
            flats_of[h as usize - 1].push(fi);
        }
    }

    struct Search<'s> {
        inc: &'s IncidenceL2,
        k: usize,
        quota: usize,
        nets_only: bool,
        flat_size: Vec<usize>,
        flats_of: Vec<Vec<usize>>,
        assign: Vec<u8>,
        class_count: Vec<usize>,
        used_classes: usize,
        flat_counts: Vec<Vec<u32>>,
        flat_assigned: Vec<u32>,
        flat_present: Vec<u32>,
        results: Vec<Multinet>,
    }

    impl Search<'_> {
        /// Would assigning class c to hyperplane h keep flat `fi`
        /// satisfiable?
        fn flat_admits(&self, fi: usize, c: usize) -> bool {
            let q = self.flat_size[fi];
            let counts = &self.flat_counts[fi];
            let present_new = self.flat_present[fi] as usize + usize::from(counts[c] == 0);
            if present_new < 2 {
                return true;
            }
            let (cap, cap_ok) = if self.nets_only {
                (1, q == self.k)
            } else {
                (q / self.k, q.is_multiple_of(self.k))
            };
            if !cap_ok {
                return false;
            }
            // Every class must end at exactly cap; no partial count may
            // exceed it once the flat is cross-class.
            if counts[c] as usize + 1 > cap {
                return false;
            }
            if counts.iter().any(|&x| x as usize > cap) {
                return false;
            }
            // Completion: all k classes must sit exactly at cap.
            if self.flat_assigned[fi] as usize + 1 == q {
                for (ci, &x) in counts.iter().enumerate() {
                    let val = x as usize + usize::from(ci == c);
                    if val != cap {
                        return false;
                    }
                }
            }
            true
        }

        fn place(&mut self, h: usize) {
            if h == self.assign.len() {
                let mut classes = vec![Vec::new(); self.k];
                for (i, &c) in self.assign.iter().enumerate() {
                    classes[c as usize].push(i as u32 + 1);
                }
                let mults = vec![1u64; self.assign.len()];
                if let Ok(m) = verify(self.inc, &classes, &mults) {
                    self.results.push(m);
                }
                return;
            }
            let limit = self.used_classes.min(self.k - 1);
            for c in 0..=limit {
                if self.class_count[c] == self.quota {
                    continue;
                }
                if !self.flats_of[h].iter().all(|&fi| self.flat_admits(fi, c)) {
                    continue;
                }
                self.assign[h] = c as u8;
                self.class_count[c] += 1;
                let opened = c == self.used_classes;
                if opened {
                    self.used_classes += 1;
                }
                for &fi in &self.flats_of[h] {
                    if self.flat_counts[fi][c] == 0 {
                        self.flat_present[fi] += 1;
                    }
                    self.flat_counts[fi][c] += 1;
                    self.flat_assigned[fi] += 1;
                }
                self.place(h + 1);
                for &fi in &self.flats_of[h] {
                    self.flat_counts[fi][c] -= 1;
                    if self.flat_counts[fi][c] == 0 {
                        self.flat_present[fi] -= 1;
                    }
                    self.flat_assigned[fi] -= 1;
                }
                if opened {
                    self.used_classes -= 1;
                }
                self.class_count[c] -= 1;
            }
        }
    }

    let mut search = Search {
        inc,
        k,
        quota,
        nets_only,
        flat_counts: vec![vec![0; k]; flats.len()],
        flat_assigned: vec![0; flats.len()],
        flat_present: vec![0; flats.len()],
        flat_size,
        flats_of,
        assign: vec![0; n],
        class_count: vec![0; k],
        used_classes: 0,
        results: Vec::new(),
    };
    search.place(0);
    search.results
}
