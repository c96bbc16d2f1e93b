//! Property tests for the exact-arithmetic and combinatorial invariants.

mod common;

use arrcomb::arrangement::IncidenceL2;
use arrcomb::exactmath::{
    cyclotomic_polynomial, divisors, rat, CycloNum, IntPoly, Mat, PrimeField, Rationals,
};
use arrcomb::oscomplex::{beta_p, OsAlgebra};
use common::{random_incidence, random_permutation};
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

proptest! {
    #[test]
    fn cyclotomic_product_is_t_pow_minus_one(j in 1u64..=30) {
        let mut prod = IntPoly::one();
        for d in divisors(j) {
            prod = &prod * &cyclotomic_polynomial(d);
        }
        prop_assert_eq!(prod, IntPoly::t_power_minus_one(j as usize));
    }

    #[test]
    fn cyclo_inverse_roundtrips(m in 1u32..=12, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut x = CycloNum::zero(m);
        for e in 0..m.min(6) {
            let num = rng.random_range(-4i64..=4);
            if num == 0 {
                continue;
            }
            let den = rng.random_range(1i64..=3);
            let term = CycloNum::zeta_power(m, e as i64).scaled(&rat(num, den));
            x = x.add(&term).unwrap();
        }
        prop_assume!(!x.is_zero());
        let inv = x.inv().unwrap();
        prop_assert!(x.mul(&inv).unwrap().is_one());
    }

    #[test]
    fn fp_rank_nullity_and_kernel(
        p in prop::sample::select(vec![2u64, 3, 5, 7, 11]),
        rows in 1usize..=5,
        cols in 1usize..=5,
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let field = PrimeField::new(p).unwrap();
        let data: Vec<Vec<u64>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.random_range(0..p)).collect())
            .collect();
        let m = Mat::from_rows(field, data).unwrap();
        let (nullity, basis) = m.nullspace();
        prop_assert_eq!(m.rank() + nullity, cols);
        for v in &basis {
            prop_assert!(m.apply(v).unwrap().iter().all(|x| *x == 0));
        }
    }

    #[test]
    fn incidence_pair_coverage(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inc = random_incidence(&mut rng);
        let n = inc.n() as usize;
        let covered: usize = inc
            .flats()
            .iter()
            .map(|f| f.multiplicity() * (f.multiplicity() - 1) / 2)
            .sum();
        prop_assert_eq!(covered, n * (n - 1) / 2);
    }

    #[test]
    fn os_degree_two_dimension_is_b2(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inc = random_incidence(&mut rng);
        let os = OsAlgebra::new(&inc);
        prop_assert_eq!(os.dim2() as u64, inc.betti().b2);
    }

    #[test]
    fn beta_is_relabeling_invariant_and_bounded(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inc = random_incidence(&mut rng);
        let perm = random_permutation(&mut rng, inc.n());
        let relabeled = inc.relabeled(&perm).unwrap();
        for p in [2u64, 3, 5] {
            let b = beta_p(&inc, p).unwrap();
            prop_assert_eq!(b, beta_p(&relabeled, p).unwrap());
            prop_assert!(b < inc.n() as u64);
        }
    }

    #[test]
    fn aomoto_differential_squares_to_zero(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inc = random_incidence(&mut rng);
        let os = OsAlgebra::new(&inc);
        let n = inc.n() as usize;

        let a: Vec<_> = (0..n)
            .map(|_| rat(rng.random_range(-5i64..=5), rng.random_range(1i64..=3)))
            .collect();
        let m = os.delta_matrix(Rationals, &a).unwrap();
        prop_assert!(m.apply(&a).unwrap().iter().all(Zero::is_zero));

        for p in [2u64, 3, 5] {
            let field = PrimeField::new(p).unwrap();
            let a: Vec<u64> = (0..n).map(|_| rng.random_range(0..p)).collect();
            let m = os.delta_matrix(field, &a).unwrap();
            prop_assert!(m.apply(&a).unwrap().iter().all(|x| *x == 0));
        }
    }

    #[test]
    fn lattice_relabeling_roundtrip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inc = random_incidence(&mut rng);
        let perm = random_permutation(&mut rng, inc.n());
        let mut inverse = vec![0u32; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            inverse[p as usize - 1] = i as u32 + 1;
        }
        let back = inc.relabeled(&perm).unwrap().relabeled(&inverse).unwrap();
        prop_assert_eq!(inc, back);
    }
}

#[test]
fn abstract_single_flat_equals_pencil_combinatorics() {
    let inc = IncidenceL2::from_multiple_flats(5, &[vec![1, 2, 3, 4, 5]]).unwrap();
    assert_eq!(inc.combinatorial_rank(), 2);
    assert_eq!(beta_p(&inc, 5).unwrap(), 3);
}
