//! Classification of closed 3-manifolds with a circle action with fixed
//! points from their orbit data, plus the structural case catalog for
//! fixed-point homogeneous actions in dimension 3.

use thiserror::Error;

use crate::catalog::{CatalogAnswer, FamilyExpr, Isotropy, NoSuchCase};
use crate::manifold::{ManifoldExpr, Summand};
use crate::orbit::SeifertInvariant;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Classify3Error {
    #[error("classification requires fixed points (no fixed boundary circles present)")]
    FixedPointFree,
    #[error("orbit data out of range: {detail}")]
    InvariantRange { detail: String },
}

/// Whether the orbit surface is orientable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrbitSurface {
    Orientable,
    NonOrientable,
}

/// Orbit data `{b; (eps, g, h, t), (a1,b1), ..., (an,bn)}` of a circle
/// action on a closed 3-manifold: obstruction term, orientability and
/// genus of the orbit surface, the number of boundary circles fixed
/// pointwise, the number of special exceptional boundary circles, and the
/// Seifert invariants of the exceptional orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertOrbitData {
    b: i64,
    surface: OrbitSurface,
    genus: u32,
    fixed_circles: u32,
    special_circles: u32,
    exceptional: Vec<SeifertInvariant>,
}

impl SeifertOrbitData {
    pub fn new(
        b: i64,
        surface: OrbitSurface,
        genus: u32,
        fixed_circles: u32,
        special_circles: u32,
        exceptional: Vec<SeifertInvariant>,
    ) -> Result<Self, Classify3Error> {
        if surface == OrbitSurface::NonOrientable {
            if genus == 0 {
                return Err(Classify3Error::InvariantRange {
                    detail: "non-orientable orbit surface requires genus >= 1".into(),
                });
            }
            for inv in &exceptional {
                // Non-orientable base restricts invariants to 0 < 2*beta < alpha.
                if 2 * inv.beta() >= inv.alpha() {
                    return Err(Classify3Error::InvariantRange {
                        detail: format!(
                            "Seifert invariant {inv} requires beta < alpha/2 over a non-orientable surface"
                        ),
                    });
                }
            }
        }
        if fixed_circles + special_circles != 0 && b != 0 {
            return Err(Classify3Error::InvariantRange {
                detail: format!("b must be 0 when boundary circles are present, got {b}"),
            });
        }
        if surface == OrbitSurface::NonOrientable
            && fixed_circles + special_circles == 0
            && !(b == 0 || (b == 1 && exceptional.iter().all(|i| i.alpha() != 2)))
        {
            return Err(Classify3Error::InvariantRange {
                detail: format!("b = {b} is out of range for the closed non-orientable case"),
            });
        }
        Ok(SeifertOrbitData {
            b,
            surface,
            genus,
            fixed_circles,
            special_circles,
            exceptional,
        })
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn surface(&self) -> OrbitSurface {
        self.surface
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn fixed_circles(&self) -> u32 {
        self.fixed_circles
    }

    pub fn special_circles(&self) -> u32 {
        self.special_circles
    }

    pub fn exceptional(&self) -> &[SeifertInvariant] {
        &self.exceptional
    }

    /// True for the non-orientable closed-sum case whose untwisted-copy
    /// count convention is recorded in reports.
    pub fn is_twisted_bundle_case(&self) -> bool {
        self.surface == OrbitSurface::NonOrientable && self.special_circles == 0
    }
}

/// Identify the closed 3-manifold with the given orbit data, which must
/// have at least one fixed boundary circle. The result is a connected sum
/// of sphere bundles over the circle, products of the projective plane and
/// the circle, and lens spaces:
///
/// - orientable surface: 2g + h - 1 untwisted bundles, t projective-plane
///   products, one lens space per exceptional orbit;
/// - non-orientable surface with special boundary: g + h - 1 untwisted
///   bundles plus the same tail;
/// - non-orientable surface without special boundary: one twisted bundle
///   and g + h - 2 untwisted ones plus the lens spaces.
pub fn raymond_classify(data: &SeifertOrbitData) -> Result<ManifoldExpr, Classify3Error> {
    if data.fixed_circles == 0 {
        return Err(Classify3Error::FixedPointFree);
    }
    let mut parts: Vec<Summand> = Vec::new();
    let g = data.genus as i64;
    let h = data.fixed_circles as i64;
    let t = data.special_circles as i64;

    let untwisted = match (data.surface, t > 0) {
        (OrbitSurface::Orientable, _) => 2 * g + h - 1,
        (OrbitSurface::NonOrientable, true) => g + h - 1,
        (OrbitSurface::NonOrientable, false) => {
            parts.push(Summand::S2xS1Twisted);
            g + h - 2
        }
    };
    debug_assert!(untwisted >= 0);
    parts.extend(std::iter::repeat_n(
        Summand::S2xS1,
        untwisted.max(0) as usize,
    ));
    parts.extend(std::iter::repeat_n(Summand::Rp2xS1, t as usize));
    parts.extend(
        data.exceptional
            .iter()
            .map(|i| Summand::lens(i.alpha(), i.beta())),
    );
    Ok(ManifoldExpr::connected_sum3(parts))
}

/// Structural case for the dimension-3 catalog: the shape of the set at
/// maximal distance from the fixed boundary circle, with its isotropy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Catalog3Case {
    /// One-dimensional orbit space.
    CohomogeneityOne,
    /// The set at maximal distance is a point.
    SoulPoint { isotropy: Isotropy },
    /// The set at maximal distance is an interval with the given isotropy
    /// triple (ends first and last).
    SoulInterval {
        triple: (Isotropy, Isotropy, Isotropy),
    },
    /// The set at maximal distance is a circle.
    SoulCircle { isotropy: Isotropy },
}

/// Acting group in the dimension-3 catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group3 {
    /// The rotation group SO(3), acting with one-dimensional orbit space.
    So3,
    /// The circle.
    S1,
}

/// Look up the structural catalog of fixed-point homogeneous 3-manifolds.
pub fn catalog3_lookup(group: Group3, case: &Catalog3Case) -> Result<CatalogAnswer, NoSuchCase> {
    use CatalogAnswer::Manifolds;
    let rp3 = || Summand::lens(2, 1);
    let answer = match (group, case) {
        (Group3::So3, Catalog3Case::CohomogeneityOne) => Manifolds(vec![
            ManifoldExpr::sphere3(),
            ManifoldExpr::connected_sum3(vec![rp3()]),
        ]),
        (Group3::S1, Catalog3Case::SoulPoint { isotropy }) => match isotropy {
            Isotropy::Trivial => Manifolds(vec![ManifoldExpr::sphere3()]),
            Isotropy::Cyclic(2) => Manifolds(vec![ManifoldExpr::connected_sum3(vec![rp3()])]),
            Isotropy::Cyclic(q) => CatalogAnswer::Family(FamilyExpr {
                description: format!("lens space L({q},q')"),
                covered_by: None,
            }),
            _ => return Err(NoSuchCase::new(format!("{group:?} soul point {isotropy}"))),
        },
        (Group3::S1, Catalog3Case::SoulInterval { triple }) => match normalize_triple(triple) {
            (Isotropy::Trivial, Isotropy::Trivial, Isotropy::Trivial) => {
                Manifolds(vec![ManifoldExpr::sphere3()])
            }
            (Isotropy::Trivial, Isotropy::Trivial, Isotropy::Cyclic(2)) => {
                Manifolds(vec![ManifoldExpr::connected_sum3(vec![rp3()])])
            }
            (Isotropy::Cyclic(2), Isotropy::Trivial, Isotropy::Cyclic(2)) => {
                Manifolds(vec![ManifoldExpr::connected_sum3(vec![rp3(), rp3()])])
            }
            other => {
                return Err(NoSuchCase::new(format!(
                    "{group:?} soul interval {}...{}...{}",
                    other.0, other.1, other.2
                )))
            }
        },
        (Group3::S1, Catalog3Case::SoulCircle { isotropy }) => match isotropy {
            Isotropy::Trivial => Manifolds(vec![ManifoldExpr::connected_sum3(vec![
                Summand::S2xS1Twisted,
            ])]),
            Isotropy::Cyclic(2) => {
                Manifolds(vec![ManifoldExpr::connected_sum3(vec![Summand::Rp2xS1])])
            }
            Isotropy::Full => Manifolds(vec![ManifoldExpr::connected_sum3(vec![Summand::S2xS1])]),
            _ => return Err(NoSuchCase::new(format!("{group:?} soul circle {isotropy}"))),
        },
        _ => return Err(NoSuchCase::new(format!("{group:?} {case:?}"))),
    };
    Ok(answer)
}

/// Intervals may be traversed from either end; order the endpoint isotropy
/// groups so lookups are orientation-free.
fn normalize_triple(triple: &(Isotropy, Isotropy, Isotropy)) -> (Isotropy, Isotropy, Isotropy) {
    let (a, m, b) = *triple;
    if b < a {
        (b, m, a)
    } else {
        (a, m, b)
    }
}
