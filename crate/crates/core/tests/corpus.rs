//! Corpus-wide invariants tying the modules together: the beta_3 / net
//! correspondence under the multiplicity hypothesis, resonance component
//! geometry, and the Milnor fiber dimension tables.

mod common;

use arrcomb::analysis::{analyze_arrangement, corpus, AnalysisOptions};
use arrcomb::arrangement::{Arrangement, FamilyTag, MultiplicityHypothesis};
use arrcomb::exactmath::rat_int;
use arrcomb::milnor::milnor_invariants;
use arrcomb::multinet::{certify, enumerate_reduced_3_multinets, Multinet};
use arrcomb::oscomplex::beta_p;
use arrcomb::resonance::{
    isotropy_check, spans_intersect_trivially, ComponentKind, ResonanceComponent,
};
use arrcomb::verdict::{assess, VerdictStatus};
use arrcomb::OsAlgebra;
use common::brute_force_reduced_3_multinets;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// Under the no-multiplicity-3r hypothesis: beta_3 <= 2, a 3-net exists
/// iff beta_3 != 0, every reduced 3-multinet is a net, and there are
/// exactly (3^beta_3 - 1)/2 of them.
#[test]
fn three_r_hypothesis_controls_net_counts() {
    for (tag, arr) in corpus() {
        let inc = arr.intersection_lattice().unwrap();
        if !inc.satisfies_hypothesis(3, MultiplicityHypothesis::ThreeR) {
            continue;
        }
        let beta3 = beta_p(&inc, 3).unwrap();
        assert!(beta3 <= 2, "{tag}: beta_3 = {beta3}");
        let nets = enumerate_reduced_3_multinets(&inc);
        assert_eq!(
            nets.len() as u64,
            (3u64.pow(beta3 as u32) - 1) / 2,
            "{tag}: net count vs beta_3 = {beta3}"
        );
        assert_eq!(!nets.is_empty(), beta3 != 0, "{tag}");
        for net in &nets {
            let cert = certify(net);
            assert!(
                cert.reduced && cert.net,
                "{tag}: {}",
                net.partition_string()
            );
        }
    }
}

#[test]
fn enumeration_matches_brute_force_on_named_arrangements() {
    for arr in [Arrangement::braid3(), Arrangement::monomial(3).unwrap()] {
        let inc = arr.intersection_lattice().unwrap();
        let pruned: BTreeSet<String> = enumerate_reduced_3_multinets(&inc)
            .iter()
            .map(Multinet::partition_string)
            .collect();
        assert_eq!(
            pruned,
            brute_force_reduced_3_multinets(&inc),
            "{}",
            arr.name()
        );
    }
}

/// Catalog components meet pairwise only at the origin (the pencil's
/// coincident local/essential pair is already deduplicated away).
#[test]
fn catalog_components_intersect_trivially() {
    for (tag, arr) in corpus() {
        let analysis = analyze_arrangement(&arr, Some(tag), &AnalysisOptions::default()).unwrap();
        let comps = &analysis.components;
        for (i, a) in comps.iter().enumerate() {
            for b in &comps[i + 1..] {
                assert!(spans_intersect_trivially(a, b), "{tag}");
            }
        }
    }
}

/// A random 2-plane of Q^n is almost surely not isotropic; sample with a
/// fixed seed and regenerate on the measure-zero chance of hitting an
/// isotropic one.
#[test]
fn random_planes_fail_isotropy() {
    let inc = Arrangement::braid3().intersection_lattice().unwrap();
    let os = OsAlgebra::new(&inc);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut rejected = 0;
    for _ in 0..20 {
        // Regenerate on the measure-zero chance of sampling an isotropic
        // plane (none expected at this seed).
        loop {
            let span: Vec<Vec<_>> = (0..2)
                .map(|_| {
                    (0..6)
                        .map(|_| rat_int(rng.random_range(-5i64..=5)))
                        .collect()
                })
                .collect();
            let comp = ResonanceComponent {
                kind: ComponentKind::Local { flat: 0 },
                dim: 2,
                span,
            };
            if !isotropy_check(&os, &comp).unwrap() {
                rejected += 1;
                break;
            }
        }
    }
    assert_eq!(rejected, 20);
}

/// dim W_1(F) for the monomial family: 4 when 3 | m, else 2.
#[test]
fn monomial_w1_table() {
    for m in 1..=6u32 {
        let inc = Arrangement::monomial(m)
            .unwrap()
            .intersection_lattice()
            .unwrap();
        let inv = milnor_invariants(&inc, Some(FamilyTag::Monomial(m))).unwrap();
        let want = if m % 3 == 0 { 4 } else { 2 };
        assert_eq!(inv.w1_dim, Some(want), "m = {m}");
        assert_eq!(inv.h10_dim, Some(want / 2), "m = {m}");
    }
}

/// Pencil numerology cross-check: b_1(F) = 2g + (punctures - 1) for the
/// genus-(n-1)(n-2)/2 fiber with n punctures, which equals (n-1)^2.
#[test]
fn pencil_b1_matches_surface_count() {
    for n in 3..=6u64 {
        let inc = Arrangement::pencil(n as u32)
            .unwrap()
            .intersection_lattice()
            .unwrap();
        let inv = milnor_invariants(&inc, Some(FamilyTag::Pencil(n as u32))).unwrap();
        let genus = (n - 1) * (n - 2) / 2;
        assert_eq!(inv.b1f, Some(2 * genus + n - 1), "n = {n}");
        assert_eq!(inv.b1f, Some((n - 1) * (n - 1)), "n = {n}");
    }
}

/// Discovering more multinets can only strengthen a NOT_1_FORMAL verdict.
#[test]
fn verdict_is_monotone_in_discovered_multinets() {
    let arr = Arrangement::monomial(3).unwrap();
    let inc = arr.intersection_lattice().unwrap();
    let nets = enumerate_reduced_3_multinets(&inc);
    let beta3 = beta_p(&inc, 3).unwrap();
    let milnor = milnor_invariants(&inc, Some(FamilyTag::Monomial(3))).unwrap();
    for take in 2..=nets.len() {
        let v = assess(&inc, &nets[..take], beta3, &milnor, 3).unwrap();
        assert_eq!(v.status, VerdictStatus::NotOneFormal);
    }
}

/// Every corpus report is reproducible: run the full pipeline twice and
/// compare the derived data.
#[test]
fn corpus_analyses_are_deterministic() {
    for (tag, arr) in corpus() {
        let opts = AnalysisOptions::default();
        let a = analyze_arrangement(&arr, Some(tag), &opts).unwrap();
        let b = analyze_arrangement(&arr, Some(tag), &opts).unwrap();
        assert_eq!(a.beta, b.beta);
        assert_eq!(a.profile, b.profile);
        assert_eq!(
            a.multinets
                .iter()
                .map(Multinet::partition_string)
                .collect::<Vec<_>>(),
            b.multinets
                .iter()
                .map(Multinet::partition_string)
                .collect::<Vec<_>>()
        );
        assert_eq!(a.milnor, b.milnor);
        assert_eq!(a.verdict, b.verdict);
    }
}
