//! Symbolic connected-sum expressions over a fixed alphabet of prime
//! summands.
//!
//! Expressions are normalized multisets: summands are kept sorted and
//! identity summands (the 3- and 4-sphere) are dropped unless the
//! expression is exactly the identity. Orientation matters: the reversed
//! projective plane is a distinct summand, and an expression may be marked
//! as standing for either orientation of itself.

use std::fmt;

/// One prime summand of a connected-sum expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Summand {
    /// The 4-sphere, the identity for 4-dimensional sums.
    S4,
    /// The complex projective plane.
    Cp2,
    /// The complex projective plane with reversed orientation.
    Cp2Rev,
    /// The product of two 2-spheres.
    S2xS2,
    /// The 3-sphere, the identity for 3-dimensional sums.
    S3,
    /// The twisted 2-sphere bundle over the circle.
    S2xS1Twisted,
    /// The product of the 2-sphere and the circle.
    S2xS1,
    /// The product of the projective plane and the circle.
    Rp2xS1,
    /// A lens space; (2,1) is real projective 3-space.
    Lens { alpha: i64, beta: i64 },
    /// Real projective 4-space.
    Rp4,
}

impl Summand {
    pub fn lens(alpha: i64, beta: i64) -> Summand {
        Summand::Lens { alpha, beta }
    }

    fn is_identity(self) -> bool {
        matches!(self, Summand::S4 | Summand::S3)
    }

    /// The summand with reversed orientation.
    pub fn orientation_reverse(self) -> Summand {
        match self {
            Summand::Cp2 => Summand::Cp2Rev,
            Summand::Cp2Rev => Summand::Cp2,
            Summand::Lens { alpha, beta } => Summand::Lens {
                alpha,
                beta: alpha - beta,
            },
            other => other,
        }
    }

    /// Second Betti number of the closed simply-connected 4-manifolds in
    /// the alphabet; `None` for the 3-dimensional summands.
    fn b2(self) -> Option<i64> {
        match self {
            Summand::S4 => Some(0),
            Summand::Cp2 | Summand::Cp2Rev => Some(1),
            Summand::S2xS2 => Some(2),
            Summand::Rp4 => None,
            _ => None,
        }
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Summand::S4 => write!(f, "S4"),
            Summand::Cp2 => write!(f, "CP2"),
            Summand::Cp2Rev => write!(f, "-CP2"),
            Summand::S2xS2 => write!(f, "S2xS2"),
            Summand::S3 => write!(f, "S3"),
            Summand::S2xS1Twisted => write!(f, "S2x~S1"),
            Summand::S2xS1 => write!(f, "S2xS1"),
            Summand::Rp2xS1 => write!(f, "RP2xS1"),
            Summand::Lens { alpha: 2, beta: 1 } => write!(f, "RP3"),
            Summand::Lens { alpha, beta } => write!(f, "L({alpha},{beta})"),
            Summand::Rp4 => write!(f, "RP4"),
        }
    }
}

/// A normalized connected-sum expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ManifoldExpr {
    summands: Vec<Summand>,
    either_orientation: bool,
}

impl ManifoldExpr {
    fn normalized(mut parts: Vec<Summand>, identity: Summand) -> ManifoldExpr {
        parts.retain(|s| !s.is_identity());
        if parts.is_empty() {
            parts.push(identity);
        }
        parts.sort();
        ManifoldExpr {
            summands: parts,
            either_orientation: false,
        }
    }

    /// A sum of 4-manifold summands; empty input gives the 4-sphere.
    pub fn connected_sum4(parts: Vec<Summand>) -> ManifoldExpr {
        Self::normalized(parts, Summand::S4)
    }

    /// A sum of 3-manifold summands; empty input gives the 3-sphere.
    pub fn connected_sum3(parts: Vec<Summand>) -> ManifoldExpr {
        Self::normalized(parts, Summand::S3)
    }

    pub fn sphere4() -> ManifoldExpr {
        Self::connected_sum4(Vec::new())
    }

    pub fn sphere3() -> ManifoldExpr {
        Self::connected_sum3(Vec::new())
    }

    pub fn single(s: Summand) -> ManifoldExpr {
        ManifoldExpr {
            summands: vec![s],
            either_orientation: false,
        }
    }

    /// Mark the expression as standing for either orientation, normalizing
    /// the stored summands to the smaller of the two writings.
    pub fn with_either_orientation(self) -> ManifoldExpr {
        let reversed = self.orientation_reverse();
        let mut out = if reversed.summands < self.summands {
            reversed
        } else {
            self
        };
        out.either_orientation = true;
        out
    }

    pub fn either_orientation(&self) -> bool {
        self.either_orientation
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn count(&self, s: Summand) -> usize {
        self.summands.iter().filter(|&&x| x == s).count()
    }

    pub fn is_identity(&self) -> bool {
        self.summands.len() == 1 && self.summands[0].is_identity()
    }

    /// The expression for the orientation-reversed manifold.
    pub fn orientation_reverse(&self) -> ManifoldExpr {
        let mut parts: Vec<Summand> = self
            .summands
            .iter()
            .map(|s| s.orientation_reverse())
            .collect();
        parts.sort();
        ManifoldExpr {
            summands: parts,
            either_orientation: self.either_orientation,
        }
    }

    /// Euler characteristic when every summand is a closed
    /// simply-connected 4-manifold from the alphabet.
    pub fn euler_characteristic4(&self) -> Option<i64> {
        let mut b2 = 0i64;
        for s in &self.summands {
            b2 += s.b2()?;
        }
        Some(2 + b2)
    }
}

impl fmt::Display for ManifoldExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let joined = self
            .summands
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" # ");
        if self.either_orientation {
            write!(f, "+/-{joined}")
        } else {
            write!(f, "{joined}")
        }
    }
}
