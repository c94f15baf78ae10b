//! Weighted orbit spaces of circle actions on 4-manifolds.
//!
//! The quotient of a circle action on a closed simply-connected 4-manifold
//! is a 3-manifold carrying combinatorial weight data: an integer on each
//! boundary 2-sphere, a sign on each isolated fixed point, and Seifert
//! invariants along arcs and circles of exceptional orbits. This module
//! holds those types together with the legality conditions a weight system
//! must satisfy to come from an action, and the orientation-reversal and
//! canonicalization moves on arcs and circles.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

/// A sign, the only values the weight of an isolated fixed point (and the
/// various epsilon parameters of plumbing blocks) may take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn opposite(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl TryFrom<i64> for Sign {
    type Error = OrbitError;

    fn try_from(value: i64) -> Result<Self, OrbitError> {
        match value {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(OrbitError::NotASign { value: other }),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

/// Construction errors for the orbit-space domain types.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("Seifert invariant ({alpha},{beta}) is invalid: {reason}")]
    InvalidSeifert {
        alpha: i64,
        beta: i64,
        reason: &'static str,
    },
    #[error("weighted arc must carry at least one Seifert pair")]
    EmptyArc,
    #[error("weighted circle must carry at least one Seifert pair")]
    EmptyCircle,
    #[error("orbit space must carry at least one weighted set")]
    EmptySpace,
    #[error("{value} is not a sign (expected +1 or -1)")]
    NotASign { value: i64 },
}

/// A coprime pair (alpha, beta) labelling an exceptional orbit, with
/// `alpha >= 2` and `1 <= beta <= alpha - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeifertInvariant {
    alpha: i64,
    beta: i64,
}

impl SeifertInvariant {
    pub fn new(alpha: i64, beta: i64) -> Result<Self, OrbitError> {
        if alpha < 2 {
            return Err(OrbitError::InvalidSeifert {
                alpha,
                beta,
                reason: "alpha must be >= 2",
            });
        }
        if beta < 1 || beta >= alpha {
            return Err(OrbitError::InvalidSeifert {
                alpha,
                beta,
                reason: "beta must satisfy 1 <= beta <= alpha - 1",
            });
        }
        if alpha.gcd(&beta) != 1 {
            return Err(OrbitError::InvalidSeifert {
                alpha,
                beta,
                reason: "alpha and beta must be coprime",
            });
        }
        Ok(SeifertInvariant { alpha, beta })
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    pub fn pair(&self) -> (i64, i64) {
        (self.alpha, self.beta)
    }

    /// The invariant of the same orbit seen with reversed orientation:
    /// (alpha, beta) becomes (alpha, alpha - beta).
    pub fn complement(&self) -> SeifertInvariant {
        SeifertInvariant {
            alpha: self.alpha,
            beta: self.alpha - self.beta,
        }
    }
}

impl fmt::Display for SeifertInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.alpha, self.beta)
    }
}

/// Determinant of the 2x2 matrix stacking two Seifert pairs. Adjacent
/// segments of an arc or circle must have determinant +-1.
pub fn adjacency_det(first: &SeifertInvariant, second: &SeifertInvariant) -> i64 {
    first.alpha * second.beta - first.beta * second.alpha
}

/// A weighted arc `[b'; (a1,b1), ..., (an,bn); b'']` of exceptional orbits
/// joining two isolated fixed points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedArc {
    b_start: i64,
    segments: Vec<SeifertInvariant>,
    b_end: i64,
}

impl WeightedArc {
    pub fn new(
        b_start: i64,
        segments: Vec<SeifertInvariant>,
        b_end: i64,
    ) -> Result<Self, OrbitError> {
        if segments.is_empty() {
            return Err(OrbitError::EmptyArc);
        }
        Ok(WeightedArc {
            b_start,
            segments,
            b_end,
        })
    }

    /// Single-segment convenience constructor.
    pub fn single(b_start: i64, alpha: i64, beta: i64, b_end: i64) -> Result<Self, OrbitError> {
        Ok(WeightedArc {
            b_start,
            segments: vec![SeifertInvariant::new(alpha, beta)?],
            b_end,
        })
    }

    pub fn b_start(&self) -> i64 {
        self.b_start
    }

    pub fn b_end(&self) -> i64 {
        self.b_end
    }

    pub fn segments(&self) -> &[SeifertInvariant] {
        &self.segments
    }

    /// The balance contribution c = b'' - b' of the arc.
    pub fn c(&self) -> i64 {
        self.b_end - self.b_start
    }

    /// The same arc with reversed orientation:
    /// `[b';(a1,b1),...,(an,bn);b'']` becomes
    /// `[-1-b'';(an,an-bn),...,(a1,a1-b1);-1-b']`. An involution that
    /// leaves c unchanged.
    pub fn reversed(&self) -> WeightedArc {
        WeightedArc {
            b_start: -1 - self.b_end,
            segments: self
                .segments
                .iter()
                .rev()
                .map(SeifertInvariant::complement)
                .collect(),
            b_end: -1 - self.b_start,
        }
    }

    /// Ordering key used by canonicalization. End weights compare by
    /// absolute value first so that a 0 end wins over a -1 end.
    fn canonical_key(&self) -> (u64, Vec<(i64, i64)>, u64, i64, i64) {
        (
            self.b_start.unsigned_abs(),
            self.segments.iter().map(SeifertInvariant::pair).collect(),
            self.b_end.unsigned_abs(),
            self.b_start,
            self.b_end,
        )
    }

    /// The smaller of the arc and its reversal under the canonical ordering.
    pub fn canonical(&self) -> WeightedArc {
        let rev = self.reversed();
        if rev.canonical_key() < self.canonical_key() {
            rev
        } else {
            self.clone()
        }
    }

    /// True when the arc equals the given one up to orientation reversal.
    pub fn equivalent(&self, other: &WeightedArc) -> bool {
        self == other || &self.reversed() == other
    }
}

impl fmt::Display for WeightedArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};", self.b_start)?;
        for (i, s) in self.segments.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ";{}]", self.b_end)
    }
}

/// A weighted circle of exceptional orbits, a cyclic sequence of Seifert
/// pairs. Equality of weight systems is up to cyclic permutation and up to
/// simultaneous orientation reversal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedCircle {
    segments: Vec<SeifertInvariant>,
}

impl WeightedCircle {
    pub fn new(segments: Vec<SeifertInvariant>) -> Result<Self, OrbitError> {
        if segments.is_empty() {
            return Err(OrbitError::EmptyCircle);
        }
        Ok(WeightedCircle { segments })
    }

    pub fn segments(&self) -> &[SeifertInvariant] {
        &self.segments
    }

    /// Reversed orientation: order reversed and every pair complemented.
    pub fn reversed(&self) -> WeightedCircle {
        WeightedCircle {
            segments: self
                .segments
                .iter()
                .rev()
                .map(SeifertInvariant::complement)
                .collect(),
        }
    }

    /// Minimal rotation over both orientations.
    pub fn canonical(&self) -> WeightedCircle {
        let mut best: Option<Vec<SeifertInvariant>> = None;
        for candidate in [self.segments.clone(), self.reversed().segments] {
            let n = candidate.len();
            for shift in 0..n {
                let rotated: Vec<SeifertInvariant> =
                    (0..n).map(|i| candidate[(i + shift) % n]).collect();
                if best.as_ref().is_none_or(|b| rotated < *b) {
                    best = Some(rotated);
                }
            }
        }
        WeightedCircle {
            segments: best.expect("circle is nonempty"),
        }
    }

    pub fn equivalent(&self, other: &WeightedCircle) -> bool {
        self.canonical() == other.canonical()
    }
}

impl fmt::Display for WeightedCircle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.segments.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

/// A boundary 2-sphere with the Euler number of the circle bundle over it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightedSphere {
    pub euler: i64,
}

impl WeightedSphere {
    pub fn new(euler: i64) -> Self {
        WeightedSphere { euler }
    }
}

/// An isolated fixed point, weighted +-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IsolatedFixedPoint {
    pub weight: Sign,
}

impl IsolatedFixedPoint {
    pub fn new(weight: Sign) -> Self {
        IsolatedFixedPoint { weight }
    }
}

/// The full weight system of an orbit space: boundary spheres, isolated
/// fixed points, and arcs and circles of exceptional orbits. At least one
/// of the four collections must be nonempty.
///
/// Arcs and circles are stored purely combinatorially; the embedding in the
/// quotient 3-manifold plays no role in any downstream computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedOrbitSpace {
    spheres: Vec<WeightedSphere>,
    points: Vec<IsolatedFixedPoint>,
    arcs: Vec<WeightedArc>,
    circles: Vec<WeightedCircle>,
    simply_connected_target: bool,
}

impl WeightedOrbitSpace {
    pub fn new(
        spheres: Vec<WeightedSphere>,
        points: Vec<IsolatedFixedPoint>,
        arcs: Vec<WeightedArc>,
        circles: Vec<WeightedCircle>,
    ) -> Result<Self, OrbitError> {
        if spheres.is_empty() && points.is_empty() && arcs.is_empty() && circles.is_empty() {
            return Err(OrbitError::EmptySpace);
        }
        Ok(WeightedOrbitSpace {
            spheres,
            points,
            arcs,
            circles,
            simply_connected_target: false,
        })
    }

    /// Require the total space to be simply connected; legality then also
    /// forbids weighted circles.
    pub fn with_simply_connected_target(mut self, flag: bool) -> Self {
        self.simply_connected_target = flag;
        self
    }

    pub fn simply_connected_target(&self) -> bool {
        self.simply_connected_target
    }

    pub fn spheres(&self) -> &[WeightedSphere] {
        &self.spheres
    }

    pub fn points(&self) -> &[IsolatedFixedPoint] {
        &self.points
    }

    pub fn arcs(&self) -> &[WeightedArc] {
        &self.arcs
    }

    pub fn circles(&self) -> &[WeightedCircle] {
        &self.circles
    }

    /// Sum of sphere weights, point weights and arc balances c = b'' - b'.
    /// Legality requires zero.
    pub fn weight_sum(&self) -> i64 {
        let spheres: i64 = self.spheres.iter().map(|s| s.euler).sum();
        let points: i64 = self.points.iter().map(|p| p.weight.value()).sum();
        let arcs: i64 = self.arcs.iter().map(WeightedArc::c).sum();
        spheres + points + arcs
    }

    /// Check every legality condition and report all violations.
    ///
    /// The conditions are: adjacent Seifert pairs in any arc or circle have
    /// determinant +-1; each arc end satisfies the endpoint equation
    /// `b*alpha + beta = +-1`; the total weight sum vanishes; and, when the
    /// space is flagged simply connected, no weighted circles occur.
    pub fn validate_legality(&self) -> LegalityReport {
        let mut violations = Vec::new();

        for (ai, arc) in self.arcs.iter().enumerate() {
            for (pi, pair) in arc.segments.windows(2).enumerate() {
                let det = adjacency_det(&pair[0], &pair[1]);
                if det.abs() != 1 {
                    violations.push(Violation::AdjacencyDeterminant {
                        location: SegmentLocation::Arc { arc: ai, pair: pi },
                        first: pair[0].pair(),
                        second: pair[1].pair(),
                        det,
                    });
                }
            }
            let first = arc.segments.first().expect("arc is nonempty");
            let start = arc.b_start * first.alpha() + first.beta();
            if start.abs() != 1 {
                violations.push(Violation::EndpointCondition {
                    arc: ai,
                    end: ArcEnd::Start,
                    b: arc.b_start,
                    pair: first.pair(),
                    value: start,
                });
            }
            let last = arc.segments.last().expect("arc is nonempty");
            let end = arc.b_end * last.alpha() + last.beta();
            if end.abs() != 1 {
                violations.push(Violation::EndpointCondition {
                    arc: ai,
                    end: ArcEnd::End,
                    b: arc.b_end,
                    pair: last.pair(),
                    value: end,
                });
            }
        }

        for (ci, circle) in self.circles.iter().enumerate() {
            let n = circle.segments.len();
            // A single pair on a circle is a pure loop with no vertex, so
            // there is no adjacency to check.
            if n >= 2 {
                let pairs = if n == 2 { 1 } else { n };
                for pi in 0..pairs {
                    let first = &circle.segments[pi];
                    let second = &circle.segments[(pi + 1) % n];
                    let det = adjacency_det(first, second);
                    if det.abs() != 1 {
                        violations.push(Violation::AdjacencyDeterminant {
                            location: SegmentLocation::Circle {
                                circle: ci,
                                pair: pi,
                            },
                            first: first.pair(),
                            second: second.pair(),
                            det,
                        });
                    }
                }
            }
        }

        let sum = self.weight_sum();
        if sum != 0 {
            violations.push(Violation::WeightSum { sum });
        }

        if self.simply_connected_target {
            for ci in 0..self.circles.len() {
                violations.push(Violation::CircleForbidden { circle: ci });
            }
        }

        let report = LegalityReport { violations };
        if report.is_legal() {
            // Endpoint equations force the end weights into {0, -1}.
            debug_assert!(self
                .arcs
                .iter()
                .all(|a| matches!(a.b_start, 0 | -1) && matches!(a.b_end, 0 | -1)));
        }
        report
    }

    /// Deterministic representative of the equivalence class of the space:
    /// arcs and circles replaced by their canonical orientation, all four
    /// collections sorted. Idempotent.
    pub fn canonical_form(&self) -> WeightedOrbitSpace {
        let mut spheres = self.spheres.clone();
        spheres.sort();
        let mut points = self.points.clone();
        points.sort();
        let mut arcs: Vec<WeightedArc> = self.arcs.iter().map(WeightedArc::canonical).collect();
        arcs.sort_by_key(|a| a.canonical_key());
        let mut circles: Vec<WeightedCircle> =
            self.circles.iter().map(WeightedCircle::canonical).collect();
        circles.sort_by(|a, b| a.segments.cmp(&b.segments));
        WeightedOrbitSpace {
            spheres,
            points,
            arcs,
            circles,
            simply_connected_target: self.simply_connected_target,
        }
    }
}

/// Which end of an arc an endpoint violation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcEnd {
    Start,
    End,
}

/// Where an adjacency-determinant violation sits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentLocation {
    Arc { arc: usize, pair: usize },
    Circle { circle: usize, pair: usize },
}

/// A single violated legality condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Adjacent Seifert pairs with determinant different from +-1.
    AdjacencyDeterminant {
        location: SegmentLocation,
        first: (i64, i64),
        second: (i64, i64),
        det: i64,
    },
    /// An arc end with `b*alpha + beta` different from +-1.
    EndpointCondition {
        arc: usize,
        end: ArcEnd,
        b: i64,
        pair: (i64, i64),
        value: i64,
    },
    /// Nonzero total weight sum.
    WeightSum { sum: i64 },
    /// A weighted circle in a space flagged simply connected.
    CircleForbidden { circle: usize },
}

/// Coarse classification of a violation, used to assert that a mutant
/// breaks exactly one condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    AdjacencyDeterminant,
    EndpointCondition,
    WeightSum,
    CircleForbidden,
}

impl Violation {
    pub fn kind(&self) -> ViolationKind {
        match self {
            Violation::AdjacencyDeterminant { .. } => ViolationKind::AdjacencyDeterminant,
            Violation::EndpointCondition { .. } => ViolationKind::EndpointCondition,
            Violation::WeightSum { .. } => ViolationKind::WeightSum,
            Violation::CircleForbidden { .. } => ViolationKind::CircleForbidden,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::AdjacencyDeterminant {
                location,
                first,
                second,
                det,
            } => {
                let place = match location {
                    SegmentLocation::Arc { arc, pair } => {
                        format!("arc {} segments {}-{}", arc + 1, pair + 1, pair + 2)
                    }
                    SegmentLocation::Circle { circle, pair } => {
                        format!("circle {} segments {}-{}", circle + 1, pair + 1, pair + 2)
                    }
                };
                write!(
                    f,
                    "adjacency determinant at {place}: det[({},{});({},{})] = {det}, expected +-1",
                    first.0, first.1, second.0, second.1
                )
            }
            Violation::EndpointCondition {
                arc,
                end,
                b,
                pair,
                value,
            } => {
                let side = match end {
                    ArcEnd::Start => "b'",
                    ArcEnd::End => "b''",
                };
                write!(
                    f,
                    "endpoint condition at arc {}: {side}*{} + {} = {value}, expected +-1 (b = {b})",
                    arc + 1,
                    pair.0,
                    pair.1
                )
            }
            Violation::WeightSum { sum } => {
                write!(f, "weight sum must vanish, got {sum}")
            }
            Violation::CircleForbidden { circle } => {
                write!(
                    f,
                    "weighted circle {} is forbidden for a simply-connected total space",
                    circle + 1
                )
            }
        }
    }
}

/// Outcome of a legality check: empty means legal.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LegalityReport {
    pub violations: Vec<Violation>,
}

impl LegalityReport {
    pub fn is_legal(&self) -> bool {
        self.violations.is_empty()
    }
}
