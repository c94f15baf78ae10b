//! Shared vocabulary for the structural case catalogs: isotropy labels,
//! catalog answers, and the transitive-sphere-group table.

use std::fmt;

use thiserror::Error;

use crate::manifold::ManifoldExpr;

/// A case descriptor not covered by a catalog.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("no catalog case matches: {descriptor}")]
pub struct NoSuchCase {
    pub descriptor: String,
}

impl NoSuchCase {
    pub fn new(descriptor: impl Into<String>) -> Self {
        NoSuchCase {
            descriptor: descriptor.into(),
        }
    }
}

/// Isotropy label along the set at maximal distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Isotropy {
    /// Principal orbits.
    Trivial,
    /// A finite cyclic group of the given order.
    Cyclic(u32),
    /// A circle subgroup.
    Circle,
    /// The full orthogonal group in two variables.
    Dihedral,
    /// The whole acting group (a fixed set).
    Full,
}

impl fmt::Display for Isotropy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Isotropy::Trivial => write!(f, "1"),
            Isotropy::Cyclic(q) => write!(f, "Z{q}"),
            Isotropy::Circle => write!(f, "SO(2)"),
            Isotropy::Dihedral => write!(f, "O(2)"),
            Isotropy::Full => write!(f, "G"),
        }
    }
}

/// A manifold family that is only pinned down up to quotients, bundles or
/// coverings; printed verbatim in reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyExpr {
    pub description: String,
    pub covered_by: Option<String>,
}

impl fmt::Display for FamilyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.description)?;
        if let Some(cover) = &self.covered_by {
            write!(f, " (covered by {cover})")?;
        }
        Ok(())
    }
}

/// What a catalog row pins down: a short list of concrete manifolds, or a
/// family value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogAnswer {
    Manifolds(Vec<ManifoldExpr>),
    Family(FamilyExpr),
}

impl fmt::Display for CatalogAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogAnswer::Manifolds(list) => {
                let joined = list
                    .iter()
                    .map(|m| m.to_string())
                    .collect::<Vec<_>>()
                    .join(" or ");
                write!(f, "{joined}")
            }
            CatalogAnswer::Family(fam) => write!(f, "{fam}"),
        }
    }
}

/// A compact Lie group from the transitive-sphere-action table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LieGroup {
    SpecialOrthogonal(u32),
    SpecialUnitary(u32),
    Symplectic(u32),
    Spin(u32),
    G2,
}

impl fmt::Display for LieGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieGroup::SpecialOrthogonal(n) => write!(f, "SO({n})"),
            LieGroup::SpecialUnitary(n) => write!(f, "SU({n})"),
            LieGroup::Symplectic(n) => write!(f, "Sp({n})"),
            LieGroup::Spin(n) => write!(f, "Spin({n})"),
            LieGroup::G2 => write!(f, "G2"),
        }
    }
}

/// A pair (group, principal isotropy) acting transitively on a sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransitivePair {
    pub group: LieGroup,
    pub isotropy: LieGroup,
}

/// The groups acting transitively on the sphere of the given dimension,
/// with their principal isotropy subgroups. Up to passing to a subgroup
/// these exhaust the groups that can act fixed-point homogeneously with a
/// normal sphere of that dimension.
pub fn admissible_groups(sphere_dim: u32) -> Vec<TransitivePair> {
    use LieGroup::*;
    let k = sphere_dim;
    let mut out = Vec::new();
    if k >= 1 {
        out.push(TransitivePair {
            group: SpecialOrthogonal(k + 1),
            isotropy: SpecialOrthogonal(k),
        });
    }
    if k >= 3 && k % 2 == 1 {
        let m = (k - 1) / 2;
        out.push(TransitivePair {
            group: SpecialUnitary(m + 1),
            isotropy: SpecialUnitary(m),
        });
    }
    if k >= 7 && k % 4 == 3 {
        let m = (k - 3) / 4;
        out.push(TransitivePair {
            group: Symplectic(m + 1),
            isotropy: Symplectic(m),
        });
    }
    if k == 6 {
        out.push(TransitivePair {
            group: G2,
            isotropy: SpecialUnitary(3),
        });
    }
    if k == 7 {
        out.push(TransitivePair {
            group: Spin(7),
            isotropy: G2,
        });
    }
    if k == 15 {
        out.push(TransitivePair {
            group: Spin(9),
            isotropy: Spin(7),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use LieGroup::*;

    #[test]
    fn low_dimensions() {
        assert_eq!(
            admissible_groups(1),
            vec![TransitivePair {
                group: SpecialOrthogonal(2),
                isotropy: SpecialOrthogonal(1)
            }]
        );
        assert_eq!(
            admissible_groups(3),
            vec![
                TransitivePair {
                    group: SpecialOrthogonal(4),
                    isotropy: SpecialOrthogonal(3)
                },
                TransitivePair {
                    group: SpecialUnitary(2),
                    isotropy: SpecialUnitary(1)
                },
            ]
        );
        assert_eq!(
            admissible_groups(6),
            vec![
                TransitivePair {
                    group: SpecialOrthogonal(7),
                    isotropy: SpecialOrthogonal(6)
                },
                TransitivePair {
                    group: G2,
                    isotropy: SpecialUnitary(3)
                },
            ]
        );
    }

    #[test]
    fn exceptional_rows() {
        let k7 = admissible_groups(7);
        assert!(k7.contains(&TransitivePair {
            group: Symplectic(2),
            isotropy: Symplectic(1)
        }));
        assert!(k7.contains(&TransitivePair {
            group: Spin(7),
            isotropy: G2
        }));
        let k15 = admissible_groups(15);
        assert!(k15.contains(&TransitivePair {
            group: Spin(9),
            isotropy: Spin(7)
        }));
        assert!(!admissible_groups(5)
            .iter()
            .any(|p| matches!(p.group, Symplectic(_))));
    }

    #[test]
    fn display_labels() {
        assert_eq!(SpecialOrthogonal(4).to_string(), "SO(4)");
        assert_eq!(G2.to_string(), "G2");
        assert_eq!(Isotropy::Cyclic(2).to_string(), "Z2");
        assert_eq!(Isotropy::Dihedral.to_string(), "O(2)");
    }
}
