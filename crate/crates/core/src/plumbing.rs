//! Equivariant plumbing of 2-disk bundles over the 2-sphere.
//!
//! Each catalog block is a disk bundle with a circle (or torus) action
//! realizing one basic orbit-space configuration: a whole weighted arc
//! (family C), two isolated fixed points (D), half an arc plus a fixed
//! disk (G), an isolated point plus a fixed disk (H), two fixed disks (I),
//! or a weighted boundary sphere (J). A legal orbit space without weighted
//! circles assembles into a linear chain of compatibly plumbed blocks whose
//! tridiagonal intersection matrix, with the last row and column removed,
//! is the intersection form of the total space.

use std::fmt;

use thiserror::Error;

use crate::intform::IntSymMatrix;
use crate::orbit::{SeifertInvariant, Sign, Violation, WeightedArc, WeightedOrbitSpace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlumbingError {
    #[error("illegal weights: {equation}")]
    IllegalWeights { equation: String },
    #[error("orbit space is not legally weighted: {}", format_violations(.violations))]
    IllegalSpace { violations: Vec<Violation> },
    #[error("unsupported configuration: {reason}")]
    UnsupportedConfiguration { reason: String },
    #[error("incompatible weights: {detail}")]
    IncompatibleWeights { detail: String },
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

/// Which catalog family a block belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockFamily {
    C,
    D,
    G,
    H,
    I,
    J,
}

impl fmt::Display for BlockFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            BlockFamily::C => 'C',
            BlockFamily::D => 'D',
            BlockFamily::G => 'G',
            BlockFamily::H => 'H',
            BlockFamily::I => 'I',
            BlockFamily::J => 'J',
        };
        write!(f, "{c}")
    }
}

/// The 2x4 integer matrix of rotation numbers determining the torus action
/// on a block, one (u, w / v, t) column pair per hemisphere. Stored for
/// completeness; classification uses only the Euler numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ActionMatrix {
    /// Row of u then w entries: [u1, u2, w1, w2].
    pub upper: [i64; 4],
    /// Row of v then t entries: [v1, v2, t1, t2].
    pub lower: [i64; 4],
}

impl ActionMatrix {
    /// det [[u_i, w_i], [v_i, t_i]] for hemisphere i in {0, 1}.
    pub fn hemisphere_det(&self, i: usize) -> i64 {
        let u = self.upper[i];
        let w = self.upper[2 + i];
        let v = self.lower[i];
        let t = self.lower[2 + i];
        u * t - w * v
    }

    fn checked(self) -> ActionMatrix {
        debug_assert_eq!(self.hemisphere_det(0).abs(), 1);
        debug_assert_eq!(self.hemisphere_det(1).abs(), 1);
        self
    }
}

/// Family-specific parameters of a block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockParams {
    C {
        b_start: i64,
        inv: SeifertInvariant,
        b_end: i64,
        eps_start: i64,
        eps_end: i64,
        eps: Sign,
        n: i64,
    },
    D {
        eps_start: Sign,
        eps_end: Sign,
        eps: Sign,
        n: i64,
    },
    G {
        b_start: i64,
        inv: SeifertInvariant,
        eps_prime: i64,
        eps: Sign,
        n: i64,
    },
    H {
        eps_prime: Sign,
        eps: Sign,
        n: i64,
    },
    I {
        eps: Sign,
        n: i64,
        delta: Sign,
    },
    J {
        eps: Sign,
        n: i64,
        delta: Sign,
    },
}

/// One disk bundle of the catalog, with its Euler number, its parameters
/// and the rotation numbers of the torus action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleBlock {
    family: BlockFamily,
    omega: i64,
    params: BlockParams,
    action: ActionMatrix,
}

impl BundleBlock {
    pub fn family(&self) -> BlockFamily {
        self.family
    }

    pub fn omega(&self) -> i64 {
        debug_assert_eq!(self.omega, self.omega_from_params());
        self.omega
    }

    pub fn params(&self) -> &BlockParams {
        &self.params
    }

    pub fn action(&self) -> &ActionMatrix {
        &self.action
    }

    /// Recompute the Euler number from the family formula.
    pub fn omega_from_params(&self) -> i64 {
        match &self.params {
            BlockParams::C {
                b_start,
                b_end,
                eps_start,
                eps_end,
                ..
            } => eps_start * eps_end * (b_end.abs() - b_start.abs()),
            BlockParams::D {
                eps_start, eps_end, ..
            } => -eps_start.value() - eps_end.value(),
            BlockParams::G { inv, eps_prime, .. } => eps_prime * inv.alpha(),
            BlockParams::H { eps_prime, .. } => -eps_prime.value(),
            BlockParams::I { .. } => 0,
            BlockParams::J { .. } => self.omega,
        }
    }
}

/// Endpoint sign of an arc end: `b*alpha + beta`, which legality forces to
/// be +-1.
fn endpoint_value(b: i64, inv: &SeifertInvariant) -> i64 {
    b * inv.alpha() + inv.beta()
}

/// Block realizing a whole single-segment weighted arc `[b';(a,b);b'']`.
/// Requires both endpoint equations to hold.
pub fn make_block_c(
    b_start: i64,
    inv: SeifertInvariant,
    b_end: i64,
    eps: Sign,
    n: i64,
) -> Result<BundleBlock, PlumbingError> {
    let start = endpoint_value(b_start, &inv);
    if start.abs() != 1 {
        return Err(PlumbingError::IllegalWeights {
            equation: format!(
                "b'*alpha + beta = {b_start}*{} + {} = {start}, expected +-1",
                inv.alpha(),
                inv.beta()
            ),
        });
    }
    let end = endpoint_value(b_end, &inv);
    if end.abs() != 1 {
        return Err(PlumbingError::IllegalWeights {
            equation: format!(
                "b''*alpha + beta = {b_end}*{} + {} = {end}, expected +-1",
                inv.alpha(),
                inv.beta()
            ),
        });
    }
    // With b in {0, -1}: eps' = beta - alpha|b'| and eps'' = alpha|b''| - beta.
    let eps_start = start;
    let eps_end = -end;
    let omega = eps_start * eps_end * (b_end.abs() - b_start.abs());
    let e = eps.value();
    let (alpha, beta) = inv.pair();
    let action = ActionMatrix {
        upper: [
            e * alpha,
            -e * alpha,
            e * (beta + n * alpha),
            -e * (beta + n * alpha),
        ],
        lower: [
            -e * eps_start,
            -e * eps_end,
            -e * eps_start * (b_start.abs() + n),
            -e * eps_end * (b_end.abs() + n),
        ],
    }
    .checked();
    Ok(BundleBlock {
        family: BlockFamily::C,
        omega,
        params: BlockParams::C {
            b_start,
            inv,
            b_end,
            eps_start,
            eps_end,
            eps,
            n,
        },
        action,
    })
}

/// Block carrying two isolated fixed points with the given weights.
pub fn make_block_d(eps_start: Sign, eps_end: Sign, eps: Sign, n: i64) -> BundleBlock {
    let e = eps.value();
    let e1 = eps_start.value();
    let e2 = eps_end.value();
    let omega = -e1 - e2;
    let action = ActionMatrix {
        upper: [e, -e, e * n, -e * n],
        lower: [-e * e1, e * e2, -e * e1 * (n + e1), e * e2 * (n - e2)],
    }
    .checked();
    BundleBlock {
        family: BlockFamily::D,
        omega,
        params: BlockParams::D {
            eps_start,
            eps_end,
            eps,
            n,
        },
        action,
    }
}

/// Block carrying a fixed disk and half a weighted arc with weights
/// `(alpha', beta')` and `b'`.
pub fn make_block_g(
    b_start: i64,
    inv: SeifertInvariant,
    eps: Sign,
    n: i64,
) -> Result<BundleBlock, PlumbingError> {
    let value = endpoint_value(b_start, &inv);
    if value.abs() != 1 {
        return Err(PlumbingError::IllegalWeights {
            equation: format!(
                "b'*alpha' + beta' = {b_start}*{} + {} = {value}, expected +-1",
                inv.alpha(),
                inv.beta()
            ),
        });
    }
    // eps' = alpha'|b'| - beta' = -(b'*alpha' + beta') for b' in {0, -1}.
    let eps_prime = -value;
    let omega = eps_prime * inv.alpha();
    let e = eps.value();
    let (alpha, beta) = inv.pair();
    let action = ActionMatrix {
        upper: [e, -e, -e * (b_start.abs() + n), -e * (b_start.abs() + n)],
        lower: [
            -e * eps_prime * alpha,
            0,
            e * eps_prime * (beta + n * alpha),
            -e,
        ],
    }
    .checked();
    Ok(BundleBlock {
        family: BlockFamily::G,
        omega,
        params: BlockParams::G {
            b_start,
            inv,
            eps_prime,
            eps,
            n,
        },
        action,
    })
}

/// Block carrying an isolated fixed point of the given weight and a fixed
/// disk.
pub fn make_block_h(eps_prime: Sign, eps: Sign, n: i64) -> BundleBlock {
    let e = eps.value();
    let e1 = eps_prime.value();
    let omega = -e1;
    let action = ActionMatrix {
        upper: [e, -e, e * n, e],
        lower: [-e * e1, 0, -e * e1 * (n + e1), -e],
    }
    .checked();
    BundleBlock {
        family: BlockFamily::H,
        omega,
        params: BlockParams::H { eps_prime, eps, n },
        action,
    }
}

/// Block carrying two fixed disks; always the trivial bundle.
pub fn make_block_i(eps: Sign, n: i64, delta: Sign) -> BundleBlock {
    let e = eps.value();
    let d = delta.value();
    let action = ActionMatrix {
        upper: [e, -e, n, -n],
        lower: [0, 0, d, d],
    }
    .checked();
    BundleBlock {
        family: BlockFamily::I,
        omega: 0,
        params: BlockParams::I { eps, n, delta },
        action,
    }
}

/// Block whose orbit space carries a weighted boundary sphere of weight
/// `omega`.
pub fn make_block_j(omega: i64, eps: Sign, n: i64, delta: Sign) -> BundleBlock {
    let e = eps.value();
    let d = delta.value();
    let action = ActionMatrix {
        upper: [0, 0, d, -d],
        lower: [e, e, n, -omega * d + n],
    }
    .checked();
    BundleBlock {
        family: BlockFamily::J,
        omega,
        params: BlockParams::J { eps, n, delta },
        action,
    }
}

/// A linear chain of compatibly plumbed blocks, all plumbings of sign +1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbingChain {
    blocks: Vec<BundleBlock>,
    /// Count of weighted boundary spheres consumed.
    m: usize,
    /// Count of isolated fixed points consumed (arc endpoints included).
    l: usize,
}

impl PlumbingChain {
    pub fn blocks(&self) -> &[BundleBlock] {
        &self.blocks
    }

    pub fn omegas(&self) -> Vec<i64> {
        self.blocks.iter().map(BundleBlock::omega).collect()
    }

    pub fn sphere_count(&self) -> usize {
        self.m
    }

    pub fn point_count(&self) -> usize {
        self.l
    }

    /// Chain length; always 2m + l - 1.
    pub fn t(&self) -> usize {
        self.blocks.len()
    }

    /// Tridiagonal intersection matrix of the plumbing: Euler numbers on
    /// the diagonal, 1 next to it.
    pub fn intersection_matrix(&self) -> IntSymMatrix {
        IntSymMatrix::tridiagonal_unit(&self.omegas())
    }

    /// Intersection form of the closed total space: the intersection
    /// matrix with its last row and column removed.
    pub fn intersection_form(&self) -> IntSymMatrix {
        self.intersection_matrix().drop_last()
    }

    fn shape_invariant_holds(&self) -> bool {
        self.blocks.len() == 2 * self.m + self.l - 1
    }
}

/// Interior vertex weight shared by two adjacent arc segments: the unique
/// value in {0, -1} satisfying the endpoint equation on both sides.
fn vertex_weight(left: &SeifertInvariant, right: &SeifertInvariant) -> Result<i64, PlumbingError> {
    let candidates: Vec<i64> = [0i64, -1]
        .into_iter()
        .filter(|&b| endpoint_value(b, left).abs() == 1 && endpoint_value(b, right).abs() == 1)
        .collect();
    match candidates.as_slice() {
        [b] => Ok(*b),
        [] => Err(PlumbingError::IncompatibleWeights {
            detail: format!("no interior vertex weight in {{0,-1}} fits both {left} and {right}"),
        }),
        _ => Err(PlumbingError::IncompatibleWeights {
            detail: format!("interior vertex weight between {left} and {right} is ambiguous"),
        }),
    }
}

/// Assemble a legal orbit space without weighted circles into its plumbing
/// chain. Supported configurations: a single sphere; a sphere with one or
/// two isolated points; two spheres; a sphere with one weighted arc.
/// Weighted boundary spheres come last in the chain; for two spheres the
/// chain is sphere-disk-sphere.
pub fn assemble_chain(space: &WeightedOrbitSpace) -> Result<PlumbingChain, PlumbingError> {
    if !space.circles().is_empty() {
        return Err(PlumbingError::UnsupportedConfiguration {
            reason: "weighted circles cannot be plumbed".into(),
        });
    }
    let report = space.validate_legality();
    if !report.is_legal() {
        return Err(PlumbingError::IllegalSpace {
            violations: report.violations,
        });
    }

    let spheres = space.spheres();
    let points = space.points();
    let arcs = space.arcs();
    let plus = Sign::Plus;

    let chain = match (spheres.len(), points.len(), arcs.len()) {
        (1, 0, 0) => PlumbingChain {
            blocks: vec![make_block_j(spheres[0].euler, plus, 0, plus)],
            m: 1,
            l: 0,
        },
        (1, 1, 0) => {
            let e = points[0].weight;
            PlumbingChain {
                blocks: vec![
                    make_block_h(e, plus, 0),
                    make_block_j(spheres[0].euler, plus, 0, plus),
                ],
                m: 1,
                l: 1,
            }
        }
        (1, 2, 0) => {
            let e1 = points[0].weight;
            let e2 = points[1].weight;
            // The point shared by the first two blocks must carry the same
            // weight on both, so the second block is built from e2.
            PlumbingChain {
                blocks: vec![
                    make_block_d(e1, e2, plus, 0),
                    make_block_h(e2, plus, 0),
                    make_block_j(spheres[0].euler, plus, 0, plus),
                ],
                m: 1,
                l: 2,
            }
        }
        (2, 0, 0) => PlumbingChain {
            blocks: vec![
                make_block_j(spheres[0].euler, plus, 0, plus),
                make_block_i(plus, 0, plus),
                make_block_j(spheres[1].euler, plus, 0, plus),
            ],
            m: 2,
            l: 0,
        },
        (1, 0, 1) => {
            let arc = &arcs[0];
            let blocks = arc_blocks(arc, spheres[0].euler)?;
            PlumbingChain {
                blocks,
                m: 1,
                l: arc.segments().len() + 1,
            }
        }
        (s, p, a) => {
            return Err(PlumbingError::UnsupportedConfiguration {
                reason: format!("no chain template for {s} sphere(s), {p} point(s), {a} arc(s)"),
            });
        }
    };

    debug_assert!(chain.shape_invariant_holds());
    debug_assert!(chain.intersection_matrix().is_symmetric_tridiagonal_unit());
    Ok(chain)
}

/// One C block per arc segment, adjacent blocks sharing their vertex
/// weight, then the half-arc block and the sphere block.
fn arc_blocks(arc: &WeightedArc, sphere_weight: i64) -> Result<Vec<BundleBlock>, PlumbingError> {
    let segments = arc.segments();
    let plus = Sign::Plus;
    let mut ends = Vec::with_capacity(segments.len() + 1);
    ends.push(arc.b_start());
    for pair in segments.windows(2) {
        ends.push(vertex_weight(&pair[0], &pair[1])?);
    }
    ends.push(arc.b_end());

    let mut blocks = Vec::with_capacity(segments.len() + 2);
    for (i, seg) in segments.iter().enumerate() {
        blocks.push(make_block_c(ends[i], *seg, ends[i + 1], plus, 0)?);
    }
    let last = *segments.last().expect("arc is nonempty");
    blocks.push(make_block_g(arc.b_end(), last, plus, 0)?);
    blocks.push(make_block_j(sphere_weight, plus, 0, plus));
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::{IsolatedFixedPoint, WeightedSphere};

    fn seifert(a: i64, b: i64) -> SeifertInvariant {
        SeifertInvariant::new(a, b).unwrap()
    }

    #[test]
    fn block_c_rows() {
        let b = make_block_c(0, seifert(2, 1), -1, Sign::Plus, 0).unwrap();
        assert_eq!(b.omega(), 1);
        match b.params() {
            BlockParams::C {
                eps_start, eps_end, ..
            } => {
                assert_eq!((*eps_start, *eps_end), (1, 1));
            }
            _ => unreachable!(),
        }

        let b = make_block_c(-1, seifert(2, 1), 0, Sign::Plus, 0).unwrap();
        assert_eq!(b.omega(), -1);
        match b.params() {
            BlockParams::C {
                eps_start, eps_end, ..
            } => {
                assert_eq!((*eps_start, *eps_end), (-1, -1));
            }
            _ => unreachable!(),
        }

        for k in 2..=12 {
            let b = make_block_c(0, seifert(k, 1), 0, Sign::Plus, 0).unwrap();
            assert_eq!(b.omega(), 0);
            match b.params() {
                BlockParams::C {
                    eps_start, eps_end, ..
                } => {
                    assert_eq!((*eps_start, *eps_end), (1, -1));
                }
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn block_c_accepts_exactly_the_endpoint_legal_weights() {
        use num_integer::Integer;
        // Exhaustive diff of the acceptance region against the endpoint
        // equations, alpha <= 12.
        for alpha in 2i64..=12 {
            for beta in 1..alpha {
                if alpha.gcd(&beta) != 1 {
                    continue;
                }
                let inv = seifert(alpha, beta);
                for b1 in -2i64..=1 {
                    for b2 in -2i64..=1 {
                        let expected =
                            (b1 * alpha + beta).abs() == 1 && (b2 * alpha + beta).abs() == 1;
                        let got = make_block_c(b1, inv, b2, Sign::Plus, 0).is_ok();
                        assert_eq!(got, expected, "({alpha},{beta}) b'={b1} b''={b2}");
                    }
                }
            }
        }
    }

    #[test]
    fn block_d_formula() {
        assert_eq!(
            make_block_d(Sign::Plus, Sign::Plus, Sign::Plus, 0).omega(),
            -2
        );
        assert_eq!(
            make_block_d(Sign::Plus, Sign::Minus, Sign::Plus, 0).omega(),
            0
        );
        assert_eq!(
            make_block_d(Sign::Minus, Sign::Minus, Sign::Plus, 0).omega(),
            2
        );
    }

    #[test]
    fn block_g_rows() {
        assert_eq!(
            make_block_g(-1, seifert(2, 1), Sign::Plus, 0)
                .unwrap()
                .omega(),
            2
        );
        assert_eq!(
            make_block_g(0, seifert(2, 1), Sign::Plus, 0)
                .unwrap()
                .omega(),
            -2
        );
        assert!(make_block_g(0, seifert(5, 4), Sign::Plus, 0).is_err());
        for k in 2..=12 {
            assert_eq!(
                make_block_g(0, seifert(k, 1), Sign::Plus, 0)
                    .unwrap()
                    .omega(),
                -k
            );
        }
    }

    #[test]
    fn block_h_and_composites() {
        assert_eq!(make_block_h(Sign::Plus, Sign::Plus, 0).omega(), -1);
        assert_eq!(make_block_h(Sign::Minus, Sign::Plus, 0).omega(), 1);
    }

    #[test]
    fn block_i_always_flat() {
        for n in [-3i64, 0, 7] {
            for d in [Sign::Plus, Sign::Minus] {
                assert_eq!(make_block_i(Sign::Plus, n, d).omega(), 0);
            }
        }
    }

    #[test]
    fn block_j_carries_weight() {
        for omega in [-1i64, 0, 5] {
            assert_eq!(
                make_block_j(omega, Sign::Plus, 0, Sign::Plus).omega(),
                omega
            );
        }
    }

    #[test]
    fn action_matrices_unimodular_per_hemisphere() {
        let blocks = vec![
            make_block_c(0, seifert(2, 1), -1, Sign::Minus, 3).unwrap(),
            make_block_c(-1, seifert(7, 6), -1, Sign::Plus, -2).unwrap(),
            make_block_d(Sign::Minus, Sign::Plus, Sign::Minus, 5),
            make_block_g(-1, seifert(9, 8), Sign::Plus, 4).unwrap(),
            make_block_g(0, seifert(11, 1), Sign::Minus, -1).unwrap(),
            make_block_h(Sign::Minus, Sign::Minus, 2),
            make_block_i(Sign::Minus, 7, Sign::Minus),
            make_block_j(5, Sign::Plus, -3, Sign::Minus),
        ];
        for b in blocks {
            assert_eq!(b.action().hemisphere_det(0).abs(), 1, "{:?}", b.family());
            assert_eq!(b.action().hemisphere_det(1).abs(), 1, "{:?}", b.family());
        }
    }

    fn space(spheres: &[i64], points: &[Sign], arcs: Vec<WeightedArc>) -> WeightedOrbitSpace {
        WeightedOrbitSpace::new(
            spheres.iter().map(|&e| WeightedSphere::new(e)).collect(),
            points.iter().map(|&s| IsolatedFixedPoint::new(s)).collect(),
            arcs,
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn two_sphere_chain() {
        let s = space(&[4, -4], &[], vec![]);
        let chain = assemble_chain(&s).unwrap();
        assert_eq!(chain.omegas(), vec![4, 0, -4]);
        assert_eq!(
            (chain.t(), chain.sphere_count(), chain.point_count()),
            (3, 2, 0)
        );
        assert_eq!(
            chain.intersection_matrix(),
            IntSymMatrix::from_rows_i64(&[&[4, 1, 0], &[1, 0, 1], &[0, 1, -4]]).unwrap()
        );
        assert_eq!(
            chain.intersection_form(),
            IntSymMatrix::from_rows_i64(&[&[4, 1], &[1, 0]]).unwrap()
        );
    }

    #[test]
    fn point_pair_chain_matches_shared_weight() {
        let s = space(&[-2], &[Sign::Plus, Sign::Plus], vec![]);
        let chain = assemble_chain(&s).unwrap();
        assert_eq!(chain.omegas(), vec![-2, -1, -2]);
        assert_eq!(
            (chain.t(), chain.sphere_count(), chain.point_count()),
            (3, 1, 2)
        );
    }

    #[test]
    fn single_sphere_chain() {
        let s = space(&[0], &[], vec![]);
        let chain = assemble_chain(&s).unwrap();
        assert_eq!(chain.omegas(), vec![0]);
        assert_eq!(chain.t(), 1);
        assert_eq!(chain.intersection_form(), IntSymMatrix::empty());
    }

    #[test]
    fn one_point_chain_gives_projective_plane_form() {
        for sign in [Sign::Plus, Sign::Minus] {
            let s = space(&[-sign.value()], &[sign], vec![]);
            let chain = assemble_chain(&s).unwrap();
            assert_eq!(chain.omegas(), vec![-sign.value(), -sign.value()]);
            assert_eq!(
                chain.intersection_form(),
                IntSymMatrix::from_rows_i64(&[&[-sign.value()]]).unwrap()
            );
        }
    }

    #[test]
    fn arc_chain_matches_table_row() {
        let arc = WeightedArc::single(0, 2, 1, -1).unwrap();
        let s = space(&[1], &[], vec![arc]);
        let chain = assemble_chain(&s).unwrap();
        assert_eq!(chain.omegas(), vec![1, 2, 1]);
        assert_eq!(
            (chain.t(), chain.sphere_count(), chain.point_count()),
            (3, 1, 2)
        );
        assert_eq!(
            chain.intersection_form(),
            IntSymMatrix::from_rows_i64(&[&[1, 1], &[1, 2]]).unwrap()
        );
    }

    #[test]
    fn multi_segment_arc_assembles() {
        let arc = WeightedArc::new(0, vec![seifert(2, 1), seifert(3, 2)], -1).unwrap();
        let s = space(&[1], &[], vec![arc]);
        let chain = assemble_chain(&s).unwrap();
        assert_eq!(chain.t(), 4);
        assert_eq!((chain.sphere_count(), chain.point_count()), (1, 3));
        assert!(chain.intersection_matrix().is_symmetric_tridiagonal_unit());
        assert_eq!(chain.omegas()[0], 1);
    }

    #[test]
    fn incompatible_interior_vertex_rejected() {
        // Legal arc whose interior vertex admits no weight in {0, -1}.
        let arc =
            WeightedArc::new(0, vec![seifert(2, 1), seifert(5, 2), seifert(2, 1)], -1).unwrap();
        let s = space(&[1], &[], vec![arc]);
        assert!(s.validate_legality().is_legal());
        assert!(matches!(
            assemble_chain(&s),
            Err(PlumbingError::IncompatibleWeights { .. })
        ));
    }

    #[test]
    fn unsupported_configurations_rejected() {
        let circle_space = WeightedOrbitSpace::new(
            vec![WeightedSphere::new(0)],
            vec![],
            vec![],
            vec![crate::orbit::WeightedCircle::new(vec![seifert(2, 1)]).unwrap()],
        )
        .unwrap();
        assert!(matches!(
            assemble_chain(&circle_space),
            Err(PlumbingError::UnsupportedConfiguration { .. })
        ));

        let two_arcs = space(
            &[2],
            &[],
            vec![
                WeightedArc::single(0, 2, 1, -1).unwrap(),
                WeightedArc::single(0, 2, 1, -1).unwrap(),
            ],
        );
        assert!(matches!(
            assemble_chain(&two_arcs),
            Err(PlumbingError::UnsupportedConfiguration { .. })
        ));
    }

    #[test]
    fn illegal_space_rejected() {
        let s = space(&[0], &[], vec![WeightedArc::single(0, 2, 1, -1).unwrap()]);
        assert!(matches!(
            assemble_chain(&s),
            Err(PlumbingError::IllegalSpace { .. })
        ));
    }

    #[test]
    fn family_c_omega_stays_small() {
        use num_integer::Integer;
        for alpha in 2i64..=12 {
            for beta in [1, alpha - 1] {
                if alpha.gcd(&beta) != 1 {
                    continue;
                }
                for b1 in [0i64, -1] {
                    for b2 in [0i64, -1] {
                        if let Ok(block) = make_block_c(b1, seifert(alpha, beta), b2, Sign::Plus, 0)
                        {
                            assert!(block.omega().abs() <= 1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn assembly_is_deterministic_on_canonical_spaces() {
        let arc = WeightedArc::single(0, 3, 1, 0).unwrap();
        let s1 = space(&[0], &[], vec![arc.clone()]).canonical_form();
        let s2 = space(&[0], &[], vec![arc.reversed()]).canonical_form();
        assert_eq!(s1, s2);
        assert_eq!(
            assemble_chain(&s1).unwrap().intersection_form(),
            assemble_chain(&s2).unwrap().intersection_form()
        );
    }
}
