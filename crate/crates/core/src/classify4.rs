//! Fixed-point homogeneous circle actions in dimension 4: fixed-point
//! configurations, the legal weight assignments they force, the pipeline
//! from configuration to intersection form to manifold, exhaustive
//! enumeration of single-segment arc cases, the Euler-characteristic
//! cross-check, and the structural case catalog.

use thiserror::Error;

use crate::catalog::{CatalogAnswer, FamilyExpr, Isotropy, NoSuchCase};
use crate::intform::{ClassifyError, IntSymMatrix, ReduceOutcome};
use crate::manifold::{ManifoldExpr, Summand};
use crate::orbit::{
    IsolatedFixedPoint, SeifertInvariant, Sign, WeightedArc, WeightedOrbitSpace, WeightedSphere,
};
use crate::plumbing::{assemble_chain, make_block_c, make_block_g, PlumbingChain, PlumbingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Classify4Error {
    #[error(transparent)]
    Plumbing(#[from] PlumbingError),
    #[error(transparent)]
    Form(#[from] ClassifyError),
}

/// The data attached to the two isolated fixed points of a configuration:
/// either a weighted arc of exceptional orbits joining them, or bare point
/// weights when no finite isotropy occurs. Exactly one of the two is
/// present by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoPointData {
    Arc(WeightedArc),
    Signs(Sign, Sign),
}

/// A fixed-point set configuration of a fixed-point homogeneous circle
/// action on a closed simply-connected 4-manifold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixedPointConfig {
    /// Fixed set a single 2-sphere.
    SphereOnly,
    /// A 2-sphere and one isolated point.
    SpherePlusPoint,
    /// Two 2-spheres; the parameter is the weight of the first.
    TwoSpheres { weight: i64 },
    /// A 2-sphere and two isolated points.
    SpherePlusTwoPoints(TwoPointData),
}

impl FixedPointConfig {
    /// Euler characteristic of the fixed-point set: 2 per sphere, 1 per
    /// isolated point. An arc with n segments joins n+1 fixed points.
    pub fn euler_characteristic(&self) -> i64 {
        match self {
            FixedPointConfig::SphereOnly => 2,
            FixedPointConfig::SpherePlusPoint => 3,
            FixedPointConfig::TwoSpheres { .. } => 4,
            FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Signs(..)) => 4,
            FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Arc(arc)) => {
                2 + arc.segments().len() as i64 + 1
            }
        }
    }
}

/// The legal weight assignment forced by a configuration: sphere weights
/// balance the point and arc contributions to zero. The point weight of
/// the one-point configuration is not determined by the configuration;
/// the positive choice is used, the other choice giving the
/// orientation-reversed action.
pub fn build_orbit_space(config: &FixedPointConfig) -> Result<WeightedOrbitSpace, Classify4Error> {
    let space = match config {
        FixedPointConfig::SphereOnly => {
            WeightedOrbitSpace::new(vec![WeightedSphere::new(0)], vec![], vec![], vec![])
        }
        FixedPointConfig::SpherePlusPoint => WeightedOrbitSpace::new(
            vec![WeightedSphere::new(-1)],
            vec![IsolatedFixedPoint::new(Sign::Plus)],
            vec![],
            vec![],
        ),
        FixedPointConfig::TwoSpheres { weight } => WeightedOrbitSpace::new(
            vec![WeightedSphere::new(*weight), WeightedSphere::new(-weight)],
            vec![],
            vec![],
            vec![],
        ),
        FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Signs(e1, e2)) => {
            WeightedOrbitSpace::new(
                vec![WeightedSphere::new(-e1.value() - e2.value())],
                vec![IsolatedFixedPoint::new(*e1), IsolatedFixedPoint::new(*e2)],
                vec![],
                vec![],
            )
        }
        FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Arc(arc)) => WeightedOrbitSpace::new(
            vec![WeightedSphere::new(-arc.c())],
            vec![],
            vec![arc.clone()],
            vec![],
        ),
    }
    .expect("configurations are nonempty")
    .with_simply_connected_target(true);

    let report = space.validate_legality();
    if !report.is_legal() {
        return Err(Classify4Error::Plumbing(PlumbingError::IllegalSpace {
            violations: report.violations,
        }));
    }
    Ok(space)
}

/// Everything the pipeline saw on the way to an identification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifyTrace {
    pub orbit_space: WeightedOrbitSpace,
    pub chain: PlumbingChain,
    pub intersection_matrix: IntSymMatrix,
    pub intersection_form: IntSymMatrix,
    /// Present for forms of size at most 3.
    pub reduction: Option<ReduceOutcome>,
    pub notes: Vec<String>,
}

/// Outcome of classifying a configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifyOutcome {
    pub manifold: ManifoldExpr,
    pub extendable: bool,
    pub trace: ClassifyTrace,
}

/// Full pipeline: weight assignment, chain assembly, intersection form,
/// identification. The action always extends to a torus action since no
/// weighted circles occur.
pub fn classify_config(config: &FixedPointConfig) -> Result<ClassifyOutcome, Classify4Error> {
    let orbit_space = build_orbit_space(config)?;
    let chain = assemble_chain(&orbit_space)?;
    let b0 = chain.intersection_matrix();
    let qm = chain.intersection_form();
    let mut manifold = qm.classify()?;
    let reduction = if qm.size() <= 3 {
        Some(qm.reduce_trace()?)
    } else {
        None
    };
    let mut notes = Vec::new();
    if matches!(config, FixedPointConfig::SpherePlusPoint) {
        // The sign of the single point weight is conventional; the two
        // choices give the two orientations of the same manifold.
        manifold = manifold.with_either_orientation();
        notes.push(
            "point weight chosen +1 by convention; the opposite choice reverses orientation"
                .to_string(),
        );
    }
    let extendable = orbit_space.circles().is_empty();
    Ok(ClassifyOutcome {
        manifold,
        extendable,
        trace: ClassifyTrace {
            orbit_space,
            chain,
            intersection_matrix: b0,
            intersection_form: qm,
            reduction,
            notes,
        },
    })
}

/// Does the Euler characteristic of the fixed-point set match that of the
/// identified manifold? True for every output of the pipeline; a mismatch
/// signals an internal error.
pub fn euler_check(config: &FixedPointConfig, result: &ManifoldExpr) -> bool {
    result.euler_characteristic4() == Some(config.euler_characteristic())
}

/// One enumerated single-segment arc case. The `family` field is the
/// (b', b'') pair the arc is traversed with; `alpha`/`beta` report the
/// Seifert pair in the orientation carrying the larger beta (the two
/// orientations carry beta and alpha - beta), which is the convention the
/// case tables are stated in. The oriented arc itself is `arc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcCase {
    pub family: (i64, i64),
    pub arc: WeightedArc,
    pub alpha: i64,
    pub beta: i64,
    pub eps_start: i64,
    pub eps_end: i64,
    pub omega1: i64,
    pub omega2: i64,
    pub intersection_form: IntSymMatrix,
    pub manifold: ManifoldExpr,
    /// The (b', b'') family this case is the orientation reverse of.
    pub orientation_partner: (i64, i64),
}

/// Enumerate every single-segment weighted arc with 2 <= alpha <= k_max
/// and beta in {1, alpha-1} passing the endpoint equations, grouped by
/// (b', b'') family and deduplicated up to arc equivalence within each
/// family, each case classified. Output order is fixed: families in the
/// order (0,0), (0,-1), (-1,0), (-1,-1), then increasing alpha.
pub fn enumerate_arc_cases(k_max: i64) -> Vec<ArcCase> {
    let families = [(0i64, 0i64), (0, -1), (-1, 0), (-1, -1)];
    // Reversing the ambient orientation complements both end weights.
    let partner = |f: (i64, i64)| -> (i64, i64) { (-1 - f.0, -1 - f.1) };
    let mut out = Vec::new();
    for family in families {
        let mut seen: Vec<WeightedArc> = Vec::new();
        for alpha in 2..=k_max.max(2) {
            for beta in [1, alpha - 1] {
                let Ok(inv) = SeifertInvariant::new(alpha, beta) else {
                    continue;
                };
                let arc = WeightedArc::new(family.0, vec![inv], family.1).expect("single segment");
                let canonical = arc.canonical();
                if seen.contains(&canonical) {
                    continue;
                }
                let Ok(c_block) = make_block_c(family.0, inv, family.1, Sign::Plus, 0) else {
                    continue;
                };
                let Ok(g_block) = make_block_g(family.1, inv, Sign::Plus, 0) else {
                    continue;
                };
                seen.push(canonical);
                let (eps_start, eps_end) = match c_block.params() {
                    crate::plumbing::BlockParams::C {
                        eps_start, eps_end, ..
                    } => (*eps_start, *eps_end),
                    _ => unreachable!(),
                };
                let qm =
                    IntSymMatrix::from_rows_i64(&[&[c_block.omega(), 1], &[1, g_block.omega()]])
                        .expect("symmetric");
                let manifold = qm.classify().expect("arc forms are unimodular");
                out.push(ArcCase {
                    family,
                    arc,
                    alpha,
                    beta: beta.max(alpha - beta),
                    eps_start,
                    eps_end,
                    omega1: c_block.omega(),
                    omega2: g_block.omega(),
                    intersection_form: qm,
                    manifold,
                    orientation_partner: partner(family),
                });
            }
        }
    }
    out
}

/// Acting group in the dimension-4 catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group4 {
    So4,
    Su2,
    So3,
    S1,
}

/// Closed surface shapes the set at maximal distance can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceKind {
    Sphere,
    ProjectivePlane,
    Torus,
    KleinBottle,
    Disk,
    Cylinder,
    MoebiusBand,
}

/// Sub-case data for a two-dimensional set at maximal distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceCase {
    /// The surface is a boundary component fixed pointwise.
    BoundaryFixed,
    /// The surface is a boundary component with cyclic order-2 isotropy.
    BoundaryCyclic2,
    /// Closed surface in the interior, principal isotropy; the fixed
    /// surface double-covers it.
    InteriorClosed,
    /// Surface with boundary, every boundary point with order-2 isotropy.
    BoundaryCircleCyclic2,
    /// Surface with boundary carrying the given number of isolated
    /// order-2 points.
    IsolatedCyclic2(u8),
    /// Cylinder with both boundary circles of order-2 isotropy.
    TwoBoundariesCyclic2,
    /// Cylinder with one boundary circle of order-2 isotropy.
    OneBoundaryCyclic2,
}

/// Structural case for the dimension-4 catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Catalog4Case {
    CohomogeneityOne,
    SoulPoint {
        isotropy: Isotropy,
    },
    SoulInterval {
        triple: (Isotropy, Isotropy, Isotropy),
    },
    SoulCircle {
        isotropy: Isotropy,
    },
    SoulSurface {
        kind: SurfaceKind,
        case: SurfaceCase,
    },
}

/// Look up the structural catalog of fixed-point homogeneous 4-manifolds.
pub fn catalog4_lookup(group: Group4, case: &Catalog4Case) -> Result<CatalogAnswer, NoSuchCase> {
    use CatalogAnswer::{Family, Manifolds};
    let sphere4 = ManifoldExpr::sphere4;
    let rp4 = || ManifoldExpr::single(Summand::Rp4);
    let cp2 = || ManifoldExpr::single(Summand::Cp2);
    let s2xs2 = || ManifoldExpr::connected_sum4(vec![Summand::S2xS2]);
    let cp2_pair = || ManifoldExpr::connected_sum4(vec![Summand::Cp2, Summand::Cp2]);
    let cp2_mixed = || ManifoldExpr::connected_sum4(vec![Summand::Cp2, Summand::Cp2Rev]);

    let answer = match (group, case) {
        (Group4::So4, Catalog4Case::CohomogeneityOne) => Manifolds(vec![sphere4(), rp4()]),
        (Group4::Su2, Catalog4Case::CohomogeneityOne) => Manifolds(vec![sphere4(), rp4(), cp2()]),

        (Group4::So3, Catalog4Case::SoulPoint { isotropy }) => match isotropy {
            Isotropy::Circle => Manifolds(vec![sphere4()]),
            Isotropy::Dihedral => Manifolds(vec![rp4()]),
            _ => return Err(NoSuchCase::new(format!("SO(3) soul point {isotropy}"))),
        },
        (Group4::So3, Catalog4Case::SoulInterval { triple }) => match ordered(triple) {
            (Isotropy::Circle, Isotropy::Circle, Isotropy::Circle) => Manifolds(vec![sphere4()]),
            (Isotropy::Circle, Isotropy::Circle, Isotropy::Dihedral) => Manifolds(vec![rp4()]),
            (Isotropy::Dihedral, Isotropy::Circle, Isotropy::Dihedral) => Manifolds(vec![
                ManifoldExpr::connected_sum4(vec![Summand::Rp4, Summand::Rp4]),
            ]),
            other => {
                return Err(NoSuchCase::new(format!(
                    "SO(3) soul interval {}...{}...{}",
                    other.0, other.1, other.2
                )))
            }
        },
        (Group4::So3, Catalog4Case::SoulCircle { isotropy }) => match isotropy {
            Isotropy::Full => Family(FamilyExpr {
                description: "S3-bundle over S1".into(),
                covered_by: Some("S3 x R".into()),
            }),
            Isotropy::Dihedral => Family(FamilyExpr {
                description: "RP3-bundle over S1".into(),
                covered_by: Some("S3 x R".into()),
            }),
            Isotropy::Circle => Family(FamilyExpr {
                description: "S3-bundle over S1".into(),
                covered_by: Some("S3 x R".into()),
            }),
            _ => return Err(NoSuchCase::new(format!("SO(3) soul circle {isotropy}"))),
        },

        (Group4::S1, Catalog4Case::SoulPoint { isotropy }) => match isotropy {
            Isotropy::Circle => Manifolds(vec![cp2()]),
            Isotropy::Trivial => Manifolds(vec![sphere4()]),
            Isotropy::Cyclic(2) => Manifolds(vec![rp4()]),
            _ => return Err(NoSuchCase::new(format!("S1 soul point {isotropy}"))),
        },
        (Group4::S1, Catalog4Case::SoulCircle { isotropy }) => match isotropy {
            Isotropy::Cyclic(q) if *q >= 2 => Family(FamilyExpr {
                description: "lens space bundle over S1".into(),
                covered_by: Some("S3 x R".into()),
            }),
            Isotropy::Trivial => Family(FamilyExpr {
                description: "S3-bundle over S1".into(),
                covered_by: Some("S3 x R".into()),
            }),
            _ => return Err(NoSuchCase::new(format!("S1 soul circle {isotropy}"))),
        },
        (Group4::S1, Catalog4Case::SoulInterval { triple }) => match ordered(triple) {
            (Isotropy::Trivial, Isotropy::Trivial, Isotropy::Trivial) => Manifolds(vec![sphere4()]),
            (Isotropy::Trivial, Isotropy::Trivial, Isotropy::Cyclic(2)) => Manifolds(vec![rp4()]),
            (Isotropy::Cyclic(2), Isotropy::Trivial, Isotropy::Cyclic(2)) => Manifolds(vec![
                ManifoldExpr::connected_sum4(vec![Summand::Rp4, Summand::Rp4]),
            ]),
            (Isotropy::Trivial, Isotropy::Trivial, Isotropy::Circle) => Manifolds(vec![cp2()]),
            (Isotropy::Circle, Isotropy::Trivial, Isotropy::Circle) => {
                Manifolds(vec![s2xs2(), cp2_pair(), cp2_mixed()])
            }
            (Isotropy::Cyclic(2), Isotropy::Trivial, Isotropy::Circle) => Family(FamilyExpr {
                description: "double-covered by CP2 # CP2 or CP2 # -CP2".into(),
                covered_by: None,
            }),
            (Isotropy::Circle, Isotropy::Cyclic(_), Isotropy::Circle) => {
                Manifolds(vec![s2xs2(), cp2_pair(), cp2_mixed()])
            }
            other => {
                return Err(NoSuchCase::new(format!(
                    "S1 soul interval {}...{}...{}",
                    other.0, other.1, other.2
                )))
            }
        },
        (Group4::S1, Catalog4Case::SoulSurface { kind, case }) => surface_case(*kind, *case)?,

        _ => return Err(NoSuchCase::new(format!("{group:?} {case:?}"))),
    };
    Ok(answer)
}

fn surface_case(kind: SurfaceKind, case: SurfaceCase) -> Result<CatalogAnswer, NoSuchCase> {
    use CatalogAnswer::{Family, Manifolds};
    let answer = match (kind, case) {
        (SurfaceKind::Sphere, SurfaceCase::BoundaryFixed) => Manifolds(vec![
            ManifoldExpr::connected_sum4(vec![Summand::S2xS2]),
            ManifoldExpr::connected_sum4(vec![Summand::Cp2, Summand::Cp2Rev]),
        ]),
        (SurfaceKind::ProjectivePlane, SurfaceCase::BoundaryFixed) => Family(FamilyExpr {
            description: "S2-bundle over RP2".into(),
            covered_by: Some("S2xS2 or CP2 # -CP2".into()),
        }),
        (SurfaceKind::Torus | SurfaceKind::KleinBottle, SurfaceCase::BoundaryFixed) => {
            Family(FamilyExpr {
                description: "S2-bundle over the fixed surface".into(),
                covered_by: Some("S2 x R2".into()),
            })
        }
        (_, SurfaceCase::BoundaryCyclic2) => Family(FamilyExpr {
            description: "RP2-bundle over the fixed surface".into(),
            covered_by: None,
        }),
        (
            SurfaceKind::Sphere | SurfaceKind::Torus | SurfaceKind::KleinBottle,
            SurfaceCase::InteriorClosed,
        ) => Family(FamilyExpr {
            description: "S2-bundle over the soul surface, double-covered by the fixed surface"
                .into(),
            covered_by: None,
        }),
        (SurfaceKind::Disk, SurfaceCase::IsolatedCyclic2(1)) => {
            Manifolds(vec![ManifoldExpr::single(Summand::Rp4)])
        }
        (SurfaceKind::Disk, SurfaceCase::IsolatedCyclic2(2)) => Manifolds(vec![
            ManifoldExpr::connected_sum4(vec![Summand::Rp4, Summand::Rp4]),
        ]),
        (SurfaceKind::Disk, SurfaceCase::BoundaryCircleCyclic2) => Family(FamilyExpr {
            description: "quotient of S2xS2".into(),
            covered_by: Some("S2xS2".into()),
        }),
        (SurfaceKind::Cylinder, SurfaceCase::TwoBoundariesCyclic2) => Family(FamilyExpr {
            description: "union of disk bundles over T2 and K2 x S1".into(),
            covered_by: Some("S2 x R2".into()),
        }),
        (SurfaceKind::Cylinder, SurfaceCase::OneBoundaryCyclic2) => Family(FamilyExpr {
            description: "RP3-bundle over S1".into(),
            covered_by: Some("S3 x R".into()),
        }),
        (SurfaceKind::MoebiusBand, SurfaceCase::BoundaryCircleCyclic2) => Family(FamilyExpr {
            description: "union of disk bundles over K2 and a twisted K2-bundle over S1".into(),
            covered_by: Some("S2 x T2".into()),
        }),
        other => return Err(NoSuchCase::new(format!("S1 soul surface {other:?}"))),
    };
    Ok(answer)
}

fn ordered(triple: &(Isotropy, Isotropy, Isotropy)) -> (Isotropy, Isotropy, Isotropy) {
    let (a, m, b) = *triple;
    if b < a {
        (b, m, a)
    } else {
        (a, m, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(b1: i64, alpha: i64, beta: i64, b2: i64) -> WeightedArc {
        WeightedArc::single(b1, alpha, beta, b2).unwrap()
    }

    #[test]
    fn orbit_space_assignments() {
        let s = build_orbit_space(&FixedPointConfig::SphereOnly).unwrap();
        assert_eq!(s.spheres(), &[WeightedSphere::new(0)]);

        let s = build_orbit_space(&FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Signs(
            Sign::Plus,
            Sign::Plus,
        )))
        .unwrap();
        assert_eq!(s.spheres(), &[WeightedSphere::new(-2)]);

        let s = build_orbit_space(&FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Arc(
            arc(0, 2, 1, -1),
        )))
        .unwrap();
        assert_eq!(s.spheres(), &[WeightedSphere::new(1)]);
        assert!(s.validate_legality().is_legal());
    }

    #[test]
    fn illegal_arc_rejected() {
        let err = build_orbit_space(&FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Arc(
            arc(0, 5, 4, 0),
        )));
        assert!(matches!(
            err,
            Err(Classify4Error::Plumbing(PlumbingError::IllegalSpace { .. }))
        ));
    }

    #[test]
    fn sphere_only_is_the_sphere() {
        let out = classify_config(&FixedPointConfig::SphereOnly).unwrap();
        assert_eq!(out.manifold, ManifoldExpr::sphere4());
        assert!(out.extendable);
        assert!(euler_check(&FixedPointConfig::SphereOnly, &out.manifold));
    }

    #[test]
    fn sphere_plus_point_is_projective_plane_either_orientation() {
        let out = classify_config(&FixedPointConfig::SpherePlusPoint).unwrap();
        assert_eq!(
            out.manifold,
            ManifoldExpr::single(Summand::Cp2).with_either_orientation()
        );
        assert!(euler_check(
            &FixedPointConfig::SpherePlusPoint,
            &out.manifold
        ));
    }

    #[test]
    fn two_spheres_parity_split() {
        for w in -10i64..=10 {
            let config = FixedPointConfig::TwoSpheres { weight: w };
            let out = classify_config(&config).unwrap();
            let expected = if w % 2 == 0 {
                ManifoldExpr::connected_sum4(vec![Summand::S2xS2])
            } else {
                ManifoldExpr::connected_sum4(vec![Summand::Cp2, Summand::Cp2Rev])
            };
            assert_eq!(out.manifold, expected, "weight {w}");
            assert!(euler_check(&config, &out.manifold));
        }
    }

    #[test]
    fn two_points_without_isotropy() {
        let config =
            FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Signs(Sign::Plus, Sign::Minus));
        let out = classify_config(&config).unwrap();
        assert_eq!(
            out.trace.intersection_form,
            IntSymMatrix::from_rows_i64(&[&[0, 1], &[1, 1]]).unwrap()
        );
        assert_eq!(
            out.manifold,
            ManifoldExpr::connected_sum4(vec![Summand::Cp2, Summand::Cp2Rev])
        );
        let qm = &out.trace.intersection_form;
        assert!(qm.congruent_brute_force(
            &IntSymMatrix::from_rows_i64(&[&[1, 0], &[0, -1]]).unwrap(),
            3
        ));
    }

    #[test]
    fn two_points_equal_signs_reduce_by_one_step() {
        use crate::intform::ElemOp;
        // Both-positive weights give [[-2,1],[1,-1]], reduced by (2,1;1);
        // both-negative give [[2,1],[1,1]], reduced by (2,1;-1).
        let out = classify_config(&FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Signs(
            Sign::Plus,
            Sign::Plus,
        )))
        .unwrap();
        assert_eq!(
            out.trace.intersection_form,
            IntSymMatrix::from_rows_i64(&[&[-2, 1], &[1, -1]]).unwrap()
        );
        let reduction = out.trace.reduction.unwrap();
        assert_eq!(reduction.steps, vec![ElemOp { i: 2, j: 1, k: 1 }]);
        assert_eq!(
            reduction.matrix,
            IntSymMatrix::from_rows_i64(&[&[-1, 0], &[0, -1]]).unwrap()
        );
        assert_eq!(
            out.manifold,
            ManifoldExpr::connected_sum4(vec![Summand::Cp2Rev, Summand::Cp2Rev])
        );

        let out = classify_config(&FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Signs(
            Sign::Minus,
            Sign::Minus,
        )))
        .unwrap();
        let reduction = out.trace.reduction.unwrap();
        assert_eq!(reduction.steps, vec![ElemOp { i: 2, j: 1, k: -1 }]);
        assert_eq!(
            reduction.matrix,
            IntSymMatrix::from_rows_i64(&[&[1, 0], &[0, 1]]).unwrap()
        );
        assert_eq!(
            out.manifold,
            ManifoldExpr::connected_sum4(vec![Summand::Cp2, Summand::Cp2])
        );
    }

    #[test]
    fn arc_cases_match_identifications() {
        let z2 = FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Arc(arc(0, 2, 1, -1)));
        assert_eq!(
            classify_config(&z2).unwrap().manifold,
            ManifoldExpr::connected_sum4(vec![Summand::Cp2, Summand::Cp2])
        );

        let z2_rev = FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Arc(arc(-1, 2, 1, 0)));
        assert_eq!(
            classify_config(&z2_rev).unwrap().manifold,
            ManifoldExpr::connected_sum4(vec![Summand::Cp2Rev, Summand::Cp2Rev])
        );

        for k in 2i64..=12 {
            for a in [arc(0, k, 1, 0), arc(-1, k, k - 1, -1)] {
                let config = FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Arc(a));
                let out = classify_config(&config).unwrap();
                let expected = if k % 2 == 0 {
                    ManifoldExpr::connected_sum4(vec![Summand::S2xS2])
                } else {
                    ManifoldExpr::connected_sum4(vec![Summand::Cp2, Summand::Cp2Rev])
                };
                assert_eq!(out.manifold, expected, "k = {k}");
                assert!(euler_check(&config, &out.manifold));
            }
        }
    }

    #[test]
    fn enumeration_matches_table() {
        let cases = enumerate_arc_cases(12);
        for c in &cases {
            let tuple = (c.eps_start, c.eps_end, c.omega1, c.omega2);
            match c.family {
                (0, 0) => {
                    assert_eq!(tuple, (1, -1, 0, -c.alpha));
                    assert_eq!(c.beta, c.alpha - 1);
                }
                (0, -1) => {
                    assert_eq!(tuple, (1, 1, 1, 2));
                    assert_eq!((c.alpha, c.beta), (2, 1));
                }
                (-1, 0) => {
                    assert_eq!(tuple, (-1, -1, -1, -2));
                    assert_eq!((c.alpha, c.beta), (2, 1));
                }
                (-1, -1) => {
                    assert_eq!(tuple, (-1, 1, 0, c.alpha));
                    assert_eq!(c.beta, c.alpha - 1);
                }
                other => panic!("unexpected family {other:?}"),
            }
        }
        // Eleven alpha values for each of the balanced families, one for
        // each mixed family.
        assert_eq!(cases.len(), 11 + 1 + 1 + 11);
    }

    #[test]
    fn enumeration_has_one_cp2_pair_case() {
        let cases = enumerate_arc_cases(12);
        let pair = ManifoldExpr::connected_sum4(vec![Summand::Cp2, Summand::Cp2]);
        let pair_rev = pair.orientation_reverse();
        let hits: Vec<_> = cases
            .iter()
            .filter(|c| c.manifold == pair || c.manifold == pair_rev)
            .collect();
        assert_eq!(hits.len(), 2);
        assert!(hits.iter().all(|c| c.alpha == 2));
        assert_eq!(hits[0].orientation_partner, hits[1].family);
    }

    #[test]
    fn enumeration_alpha_parity_rule() {
        for c in enumerate_arc_cases(12) {
            let s2xs2 = ManifoldExpr::connected_sum4(vec![Summand::S2xS2]);
            let mixed = ManifoldExpr::connected_sum4(vec![Summand::Cp2, Summand::Cp2Rev]);
            if c.alpha % 2 == 1 {
                assert_eq!(c.manifold, mixed);
            } else if c.alpha > 2 {
                assert_eq!(c.manifold, s2xs2);
            } else {
                let pair = ManifoldExpr::connected_sum4(vec![Summand::Cp2, Summand::Cp2]);
                assert!(
                    c.manifold == s2xs2
                        || c.manifold == pair
                        || c.manifold == pair.orientation_reverse()
                );
            }
            assert!(euler_check(
                &FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Arc(c.arc.clone())),
                &c.manifold
            ));
        }
    }

    #[test]
    fn euler_check_negative_case() {
        assert!(!euler_check(
            &FixedPointConfig::SpherePlusPoint,
            &ManifoldExpr::sphere4()
        ));
        let single = FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Arc(arc(0, 2, 1, -1)));
        assert_eq!(single.euler_characteristic(), 4);
        let multi = FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Arc(
            WeightedArc::new(
                0,
                vec![
                    SeifertInvariant::new(2, 1).unwrap(),
                    SeifertInvariant::new(3, 2).unwrap(),
                ],
                -1,
            )
            .unwrap(),
        ));
        assert_eq!(multi.euler_characteristic(), 5);
    }

    #[test]
    fn catalog_rows() {
        let ans = catalog4_lookup(
            Group4::So3,
            &Catalog4Case::SoulInterval {
                triple: (Isotropy::Dihedral, Isotropy::Circle, Isotropy::Dihedral),
            },
        )
        .unwrap();
        assert_eq!(
            ans,
            CatalogAnswer::Manifolds(vec![ManifoldExpr::connected_sum4(vec![
                Summand::Rp4,
                Summand::Rp4
            ])])
        );

        let ans = catalog4_lookup(
            Group4::S1,
            &Catalog4Case::SoulCircle {
                isotropy: Isotropy::Cyclic(5),
            },
        )
        .unwrap();
        match ans {
            CatalogAnswer::Family(f) => {
                assert_eq!(f.description, "lens space bundle over S1");
                assert_eq!(f.covered_by.as_deref(), Some("S3 x R"));
            }
            other => panic!("expected family, got {other:?}"),
        }

        let ans = catalog4_lookup(Group4::Su2, &Catalog4Case::CohomogeneityOne).unwrap();
        assert_eq!(
            ans,
            CatalogAnswer::Manifolds(vec![
                ManifoldExpr::sphere4(),
                ManifoldExpr::single(Summand::Rp4),
                ManifoldExpr::single(Summand::Cp2),
            ])
        );

        assert!(catalog4_lookup(
            Group4::So4,
            &Catalog4Case::SoulPoint {
                isotropy: Isotropy::Trivial
            }
        )
        .is_err());
    }
}
