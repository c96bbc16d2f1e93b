//! First-resonance components: the local components attached to flats of
//! multiplicity >= 3 and the essential components attached to multinets
//! on the full arrangement.
//!
//! A component is stored by a spanning set of rational vectors in Q^n.
//! The local component of a flat X is spanned by e_H0 - e_K for the
//! anchor H0 of X and K in A_X \ {H0}; the essential component of a
//! multinet with classes A_1..A_k is spanned by u_i - u_1 for
//! u_i = sum over A_i of m_H e_H. Dimensions are verified by exact rank,
//! and components with equal row spaces are deduplicated (the pencil's
//! trivial-net component coincides with its unique local component).

use num_traits::Zero;
use thiserror::Error;

use crate::arrangement::IncidenceL2;
use crate::exactmath::{rank_of_rows, rat_int, ExactError, Rat, Rationals};
use crate::multinet::Multinet;
use crate::oscomplex::{OsAlgebra, OsError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResonanceError {
    #[error("component span vectors have length {got}, arrangement has {expected} hyperplanes")]
    DimensionMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Os(#[from] OsError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Origin of a resonance component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    /// Local component of the flat with this index (into the incidence
    /// flat list).
    Local { flat: usize },
    /// Essential component of the multinet with this index (into the
    /// catalog's input list).
    Essential { multinet: usize },
}

/// A first-resonance component: spanning vectors with verified dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct ResonanceComponent {
    pub kind: ComponentKind,
    pub dim: usize,
    pub span: Vec<Vec<Rat>>,
}

fn standard_basis_diff(n: usize, pos: u32, neg: u32) -> Vec<Rat> {
    let mut v = vec![rat_int(0); n];
    v[pos as usize - 1] = rat_int(1);
    v[neg as usize - 1] = rat_int(-1);
    v
}

/// The catalog of first-resonance components: one local component per
/// flat of multiplicity >= 3, one essential component per supplied
/// multinet, deduplicated by row-space equality. Locals come first, in
/// flat order; essentials follow in the multinet input order.
pub fn catalog(inc: &IncidenceL2, multinets: &[Multinet]) -> Vec<ResonanceComponent> {
    let n = inc.n() as usize;
    let mut components = Vec::new();
    for (fi, flat) in inc.flats().iter().enumerate() {
        if flat.multiplicity() < 3 {
            continue;
        }
        let anchor = flat.anchor();
        let span: Vec<Vec<Rat>> = flat.hyperplanes()[1..]
            .iter()
            .map(|&k| standard_basis_diff(n, anchor, k))
            .collect();
        let dim = rank_of_rows(Rationals, &span);
        debug_assert_eq!(dim, flat.multiplicity() - 1);
        components.push(ResonanceComponent {
            kind: ComponentKind::Local { flat: fi },
            dim,
            span,
        });
    }
    for (mi, multinet) in multinets.iter().enumerate() {
        let u: Vec<Vec<Rat>> = multinet
            .classes()
            .iter()
            .map(|class| {
                let mut v = vec![rat_int(0); n];
                for &h in class {
                    v[h as usize - 1] = rat_int(multinet.multiplicity(h) as i64);
                }
                v
            })
            .collect();
        let span: Vec<Vec<Rat>> = u[1..]
            .iter()
            .map(|ui| ui.iter().zip(&u[0]).map(|(a, b)| a - b).collect())
            .collect();
        let dim = rank_of_rows(Rationals, &span);
        debug_assert_eq!(dim, multinet.k() - 1);
        components.push(ResonanceComponent {
            kind: ComponentKind::Essential { multinet: mi },
            dim,
            span,
        });
    }
    // Deduplicate by subspace equality, keeping the earlier entry.
    let mut kept: Vec<ResonanceComponent> = Vec::new();
    for comp in components {
        if kept.iter().any(|other| same_rowspace(other, &comp)) {
            continue;
        }
        kept.push(comp);
    }
    kept
}

/// Whether two components span the same subspace of Q^n.
pub fn same_rowspace(a: &ResonanceComponent, b: &ResonanceComponent) -> bool {
    if a.dim != b.dim {
        return false;
    }
    let mut stacked = a.span.clone();
    stacked.extend(b.span.iter().cloned());
    rank_of_rows(Rationals, &stacked) == a.dim
}

/// Whether two components meet only at the origin.
pub fn spans_intersect_trivially(a: &ResonanceComponent, b: &ResonanceComponent) -> bool {
    let mut stacked = a.span.clone();
    stacked.extend(b.span.iter().cloned());
    rank_of_rows(Rationals, &stacked) == a.dim + b.dim
}

/// Components of the depth-s stratum: those of dimension >= s + 1.
pub fn depth_stratification(
    components: &[ResonanceComponent],
    s: usize,
) -> Vec<ResonanceComponent> {
    assert!(s >= 1, "depth starts at 1");
    components.iter().filter(|c| c.dim > s).cloned().collect()
}

/// True when every pairwise wedge of the component's spanning vectors
/// vanishes in the degree-2 Orlik-Solomon algebra over Q.
pub fn isotropy_check(
    os: &OsAlgebra<'_>,
    component: &ResonanceComponent,
) -> Result<bool, ResonanceError> {
    let n = os.dim1();
    for v in &component.span {
        if v.len() != n {
            return Err(ResonanceError::DimensionMismatch {
                expected: n,
                got: v.len(),
            });
        }
    }
    let zero = rat_int(0);
    for (i, v) in component.span.iter().enumerate() {
        for w in &component.span[i + 1..] {
            let mut acc = vec![rat_int(0); os.dim2()];
            for h in 1..=n as u32 {
                let vh = &v[h as usize - 1];
                if vh.is_zero() {
                    continue;
                }
                for k in 1..=n as u32 {
                    if h == k {
                        continue;
                    }
                    let wk = &w[k as usize - 1];
                    if wk.is_zero() {
                        continue;
                    }
                    let coeff = vh * wk;
                    for (idx, sign) in os.product(h, k)? {
                        if sign > 0 {
                            acc[idx] += &coeff;
                        } else {
                            acc[idx] -= &coeff;
                        }
                    }
                }
            }
            if acc.iter().any(|c| c != &zero) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Arrangement;
    use crate::multinet::{enumerate_k_nets, enumerate_reduced_3_multinets};

    #[test]
    fn ceva_catalog_counts() {
        let inc = Arrangement::monomial(3)
            .unwrap()
            .intersection_lattice()
            .unwrap();
        let nets = enumerate_reduced_3_multinets(&inc);
        let comps = catalog(&inc, &nets);
        let locals = comps
            .iter()
            .filter(|c| matches!(c.kind, ComponentKind::Local { .. }))
            .count();
        let essentials = comps.len() - locals;
        assert_eq!((locals, essentials), (12, 4));
        assert!(comps.iter().all(|c| c.dim == 2));
        assert_eq!(depth_stratification(&comps, 1).len(), 16);
        assert!(depth_stratification(&comps, 2).is_empty());
    }

    #[test]
    fn hessian_catalog_counts() {
        let inc = Arrangement::hessian().intersection_lattice().unwrap();
        let nets: Vec<Multinet> = enumerate_k_nets(&inc, 4)
            .unwrap()
            .into_iter()
            .map(|c| c.multinet)
            .collect();
        let comps = catalog(&inc, &nets);
        assert_eq!(comps.len(), 10);
        assert!(comps.iter().all(|c| c.dim == 3));
        assert_eq!(depth_stratification(&comps, 2).len(), 10);
    }

    #[test]
    fn pencil_components_coincide_and_dedup() {
        let inc = Arrangement::pencil(3)
            .unwrap()
            .intersection_lattice()
            .unwrap();
        let nets = enumerate_reduced_3_multinets(&inc);
        assert_eq!(nets.len(), 1);
        let comps = catalog(&inc, &nets);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].dim, 2);
        assert!(matches!(comps[0].kind, ComponentKind::Local { .. }));
    }

    #[test]
    fn braid3_isotropy_and_rejection() {
        let inc = Arrangement::braid3().intersection_lattice().unwrap();
        let os = OsAlgebra::new(&inc);
        let nets = enumerate_reduced_3_multinets(&inc);
        let comps = catalog(&inc, &nets);
        for comp in &comps {
            assert!(isotropy_check(&os, comp).unwrap());
        }
        // A plane that is not a resonance component fails the check.
        let fake = ResonanceComponent {
            kind: ComponentKind::Local { flat: 0 },
            dim: 2,
            span: vec![standard_basis_diff(6, 1, 2), standard_basis_diff(6, 3, 6)],
        };
        assert!(!isotropy_check(&os, &fake).unwrap());

        let bad = ResonanceComponent {
            kind: ComponentKind::Local { flat: 0 },
            dim: 1,
            span: vec![vec![rat_int(1); 3]],
        };
        assert!(matches!(
            isotropy_check(&os, &bad),
            Err(ResonanceError::DimensionMismatch {
                expected: 6,
                got: 3
            })
        ));
    }

    #[test]
    fn pairwise_trivial_intersections_on_braid3() {
        let inc = Arrangement::braid3().intersection_lattice().unwrap();
        let nets = enumerate_reduced_3_multinets(&inc);
        let comps = catalog(&inc, &nets);
        assert_eq!(comps.len(), 5);
        for (i, a) in comps.iter().enumerate() {
            for b in &comps[i + 1..] {
                assert!(spans_intersect_trivially(a, b));
            }
        }
    }
}
