//! Shared helpers for the integration suites: a seeded random generator
//! of abstract incidence structures and a brute-force multinet oracle.
//
// Each test target compiles this module separately and uses a subset.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use arrcomb::arrangement::IncidenceL2;
use arrcomb::multinet::verify;
use rand::Rng;

/// A random abstract incidence structure with 3 <= n <= 8: a handful of
/// pairwise pair-disjoint flats of multiplicity >= 3, doubles implicit.
pub fn random_incidence(rng: &mut impl Rng) -> IncidenceL2 {
    let n: u32 = rng.random_range(3..=8);
    let attempts = rng.random_range(0..=4);
    let mut flats: Vec<Vec<u32>> = Vec::new();
    let mut covered: HashSet<(u32, u32)> = HashSet::new();
    for _ in 0..attempts {
        let size = rng.random_range(3..=n.min(5));
        let mut pool: Vec<u32> = (1..=n).collect();
        let mut members = Vec::with_capacity(size as usize);
        for _ in 0..size {
            let i = rng.random_range(0..pool.len());
            members.push(pool.swap_remove(i));
        }
        members.sort_unstable();
        let disjoint = members
            .iter()
            .enumerate()
            .all(|(i, &h)| members[i + 1..].iter().all(|&k| !covered.contains(&(h, k))));
        if disjoint {
            for (i, &h) in members.iter().enumerate() {
                for &k in &members[i + 1..] {
                    covered.insert((h, k));
                }
            }
            flats.push(members);
        }
    }
    IncidenceL2::from_multiple_flats(n, &flats).expect("generated flats are pair-disjoint")
}

/// A uniformly random permutation of 1..=n.
pub fn random_permutation(rng: &mut impl Rng, n: u32) -> Vec<u32> {
    let mut perm: Vec<u32> = (1..=n).collect();
    for i in (1..perm.len()).rev() {
        let j = rng.random_range(0..=i);
        perm.swap(i, j);
    }
    perm
}

/// Canonical form check for a class assignment: labels must appear in
/// first-occurrence order 0, 1, 2, .. so each relabeling orbit has
/// exactly one canonical member.
fn is_canonical(assign: &[u8]) -> bool {
    let mut next = 0;
    for &a in assign {
        if a > next {
            return false;
        }
        if a == next {
            next += 1;
        }
    }
    true
}

/// Brute force over all 3^n class assignments, filtered by [`verify`]:
/// the independent oracle for the pruned enumerator. Returns canonical
/// partition strings.
pub fn brute_force_reduced_3_multinets(inc: &IncidenceL2) -> BTreeSet<String> {
    let n = inc.n() as usize;
    let mults = vec![1u64; n];
    let mut found = BTreeSet::new();
    for code in 0..3u64.pow(n as u32) {
        let mut assign = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            assign.push((c % 3) as u8);
            c /= 3;
        }
        if !is_canonical(&assign) {
            continue;
        }
        if (0..3u8).any(|cl| !assign.contains(&cl)) {
            continue;
        }
        let mut classes: Vec<Vec<u32>> = vec![Vec::new(); 3];
        for (i, &cl) in assign.iter().enumerate() {
            classes[cl as usize].push(i as u32 + 1);
        }
        if let Ok(m) = verify(inc, &classes, &mults) {
            found.insert(m.partition_string());
        }
    }
    found
}
