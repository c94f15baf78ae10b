//! Exact arithmetic of integral symmetric bilinear forms.
//!
//! Matrices carry arbitrary-precision integers. Rank and signature come
//! from congruence diagonalization over the rationals, determinants from
//! exact elimination; nothing here touches floating point. The module also
//! provides the elementary congruence move (i,j;k), a bounded
//! breadth-first reduction to a diagonal or hyperbolic representative with
//! a replayable trace, and a brute-force congruence oracle used to
//! cross-check classifications.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::manifold::{ManifoldExpr, Summand};

/// Errors from matrix construction and index arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix rows must form a square symmetric array")]
    NotSymmetric,
    #[error("row index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("elementary operation requires two distinct indices, got {index} twice")]
    EqualIndices { index: usize },
}

/// Errors from classification against the connected-sum alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("form is not unimodular (determinant {det})")]
    NotUnimodular { det: BigInt },
    #[error(
        "no connected sum over the alphabet has an even form of signature ({positive},{negative})"
    )]
    NoSuchSum { positive: usize, negative: usize },
    #[error("trace reduction supports matrices of size at most 3, got {n}")]
    TooLarge { n: usize },
}

/// Parity (type) of a form: even when every diagonal entry is even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// A symmetric matrix of exact integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntSymMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntSymMatrix {
    /// The empty 0x0 matrix (rank 0, determinant 1 as the empty product).
    pub fn empty() -> Self {
        IntSymMatrix {
            n: 0,
            entries: Vec::new(),
        }
    }

    pub fn zeros(n: usize) -> Self {
        IntSymMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(MatrixError::NotSymmetric);
        }
        let m = IntSymMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        };
        for i in 0..n {
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return Err(MatrixError::NotSymmetric);
                }
            }
        }
        Ok(m)
    }

    pub fn from_rows_i64(rows: &[&[i64]]) -> Result<Self, MatrixError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    /// Tridiagonal matrix with the given diagonal and all off-diagonal
    /// entries adjacent to the diagonal equal to 1.
    pub fn tridiagonal_unit(diag: &[i64]) -> Self {
        let n = diag.len();
        let mut m = IntSymMatrix::zeros(n);
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, BigInt::from(d));
            if i + 1 < n {
                m.set(i, i + 1, BigInt::one());
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    /// Set entry (i, j) and its mirror (j, i).
    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.n + j] = value.clone();
        self.entries[j * self.n + i] = value;
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    /// The matrix with its last row and column removed.
    pub fn drop_last(&self) -> IntSymMatrix {
        if self.n == 0 {
            return IntSymMatrix::empty();
        }
        let n = self.n - 1;
        let mut m = IntSymMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn is_symmetric_tridiagonal_unit(&self) -> bool {
        for i in 0..self.n {
            for j in 0..self.n {
                let d = i.abs_diff(j);
                let e = self.get(i, j);
                if d == 1 && !e.is_one() {
                    return false;
                }
                if d > 1 && !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.entries
            .iter()
            .map(|e| e.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Exact determinant by rational Gaussian elimination. The empty
    /// matrix has determinant 1.
    #[allow(clippy::needless_range_loop)]
    pub fn determinant(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigRational>> = self
            .rows()
            .into_iter()
            .map(|r| r.into_iter().map(BigRational::from_integer).collect())
            .collect();
        let mut det = BigRational::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero());
            let Some(p) = pivot else {
                return BigInt::zero();
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            det *= a[col][col].clone();
            for r in col + 1..n {
                let f = &a[r][col] / &a[col][col];
                for c in col..n {
                    let sub = &f * &a[col][c];
                    a[r][c] -= sub;
                }
            }
        }
        debug_assert!(det.is_integer());
        det.to_integer()
    }

    /// Apply the elementary congruence operation (i,j;k): add k times row i
    /// to row j, then k times column i to column j. Indices are 1-based,
    /// matching the usual (i,j;k) notation for the move.
    pub fn elementary_op(&self, i: usize, j: usize, k: i64) -> Result<IntSymMatrix, MatrixError> {
        if i == j {
            return Err(MatrixError::EqualIndices { index: i });
        }
        for index in [i, j] {
            if index == 0 || index > self.n {
                return Err(MatrixError::IndexOutOfRange { index, n: self.n });
            }
        }
        let (i, j) = (i - 1, j - 1);
        let k = BigInt::from(k);
        let mut out = self.clone();
        for c in 0..self.n {
            let v = out.entries[j * self.n + c].clone() + &k * &out.entries[i * self.n + c];
            out.entries[j * self.n + c] = v;
        }
        for r in 0..self.n {
            let v = out.entries[r * self.n + j].clone() + &k * &out.entries[r * self.n + i];
            out.entries[r * self.n + j] = v;
        }
        Ok(out)
    }

    fn parity(&self) -> Parity {
        let even = (0..self.n).all(|i| (self.get(i, i) % 2u8).is_zero());
        if even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Complete congruence invariants: rank, signature, determinant and
    /// parity, computed by symmetric elimination over the rationals. When a
    /// diagonal pivot vanishes but its row is nonzero, a symmetric
    /// row-and-column addition first creates a nonzero pivot.
    #[allow(clippy::needless_range_loop)]
    pub fn invariants(&self) -> FormInvariants {
        let n = self.n;
        let mut a: Vec<Vec<BigRational>> = self
            .rows()
            .into_iter()
            .map(|r| r.into_iter().map(BigRational::from_integer).collect())
            .collect();
        let mut positive = 0usize;
        let mut negative = 0usize;
        for k in 0..n {
            if a[k][k].is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                    // Symmetric swap of rows and columns k and j.
                    a.swap(k, j);
                    for row in a.iter_mut() {
                        row.swap(k, j);
                    }
                } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                    // Whole remaining diagonal is zero; row k += row j and
                    // col k += col j makes the pivot 2*a[k][j].
                    for c in 0..n {
                        let add = a[j][c].clone();
                        a[k][c] += add;
                    }
                    for r in 0..n {
                        let add = a[r][j].clone();
                        a[r][k] += add;
                    }
                }
            }
            if a[k][k].is_zero() {
                continue;
            }
            let pivot = a[k][k].clone();
            if pivot.is_positive() {
                positive += 1;
            } else {
                negative += 1;
            }
            for r in k + 1..n {
                if a[r][k].is_zero() {
                    continue;
                }
                let f = &a[r][k] / &pivot;
                for c in 0..n {
                    let sub = &f * &a[k][c];
                    a[r][c] -= sub;
                }
                for c in 0..n {
                    let sub = &f * &a[c][k];
                    a[c][r] -= sub;
                }
            }
        }
        FormInvariants {
            rank: positive + negative,
            positive,
            negative,
            determinant: self.determinant(),
            parity: self.parity(),
        }
    }

    /// Identify the form among connected sums of the standard rank-<=2
    /// unimodular pieces. Requires |det| = 1; rank 0 gives the 4-sphere,
    /// odd forms give signature-many copies of the complex projective
    /// plane in each orientation, and even indefinite forms of balanced
    /// signature give copies of the sphere product.
    pub fn classify(&self) -> Result<ManifoldExpr, ClassifyError> {
        let inv = self.invariants();
        if !inv.determinant.abs().is_one() {
            return Err(ClassifyError::NotUnimodular {
                det: inv.determinant,
            });
        }
        if inv.rank == 0 {
            return Ok(ManifoldExpr::sphere4());
        }
        match inv.parity {
            Parity::Odd => {
                let mut parts = Vec::new();
                parts.extend(std::iter::repeat_n(Summand::Cp2, inv.positive));
                parts.extend(std::iter::repeat_n(Summand::Cp2Rev, inv.negative));
                Ok(ManifoldExpr::connected_sum4(parts))
            }
            Parity::Even => {
                if inv.positive != inv.negative {
                    return Err(ClassifyError::NoSuchSum {
                        positive: inv.positive,
                        negative: inv.negative,
                    });
                }
                Ok(ManifoldExpr::connected_sum4(vec![
                    Summand::S2xS2;
                    inv.positive
                ]))
            }
        }
    }

    fn is_reduced(&self) -> bool {
        if self.n == 2 && *self == hyperbolic() {
            return true;
        }
        for i in 0..self.n {
            for j in 0..self.n {
                let e = self.get(i, j);
                if i == j {
                    if !e.abs().is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Reduce a unimodular form of size at most 3 to a diagonal +-1 matrix
    /// or the hyperbolic pair, returning the replayable sequence of
    /// elementary operations. The search is a breadth-first walk over
    /// (i,j;k) moves with |k| <= 2 and entries bounded by four times the
    /// largest input entry; when it exhausts, the canonical matrix is
    /// derived from the invariants instead and the outcome is flagged.
    pub fn reduce_trace(&self) -> Result<ReduceOutcome, ClassifyError> {
        if self.n > 3 {
            return Err(ClassifyError::TooLarge { n: self.n });
        }
        let det = self.determinant();
        if !det.abs().is_one() {
            return Err(ClassifyError::NotUnimodular { det });
        }
        if self.is_reduced() {
            return Ok(ReduceOutcome {
                matrix: self.clone(),
                steps: Vec::new(),
                exhausted: false,
            });
        }

        let bound = {
            let m = self.max_abs_entry();
            let four = BigInt::from(4);
            if m.is_zero() {
                four
            } else {
                four * m
            }
        };
        let mut parents: HashMap<Vec<BigInt>, (Vec<BigInt>, ElemOp)> = HashMap::new();
        let mut queue: VecDeque<IntSymMatrix> = VecDeque::new();
        queue.push_back(self.clone());
        let start_key = self.entries.clone();
        parents.insert(start_key.clone(), (Vec::new(), ElemOp { i: 0, j: 0, k: 0 }));
        let cap = 200_000usize;

        while let Some(current) = queue.pop_front() {
            for i in 1..=self.n {
                for j in 1..=self.n {
                    if i == j {
                        continue;
                    }
                    for k in [-2i64, -1, 1, 2] {
                        let next = current.elementary_op(i, j, k).expect("indices in range");
                        if next.max_abs_entry() > bound {
                            continue;
                        }
                        if parents.contains_key(&next.entries) {
                            continue;
                        }
                        parents.insert(
                            next.entries.clone(),
                            (current.entries.clone(), ElemOp { i, j, k }),
                        );
                        if next.is_reduced() {
                            let mut steps = Vec::new();
                            let mut key = next.entries.clone();
                            while key != start_key {
                                let (prev, op) = parents[&key].clone();
                                steps.push(op);
                                key = prev;
                            }
                            steps.reverse();
                            return Ok(ReduceOutcome {
                                matrix: next,
                                steps,
                                exhausted: false,
                            });
                        }
                        queue.push_back(next);
                        if parents.len() >= cap {
                            queue.clear();
                        }
                    }
                }
            }
        }

        // Search exhausted: fall back to the invariant-determined
        // representative with an empty trace.
        let inv = self.invariants();
        let matrix = match inv.parity {
            Parity::Odd => {
                let mut diag = vec![1i64; inv.positive];
                diag.extend(vec![-1i64; inv.negative]);
                let mut m = IntSymMatrix::zeros(self.n);
                for (i, d) in diag.into_iter().enumerate() {
                    m.set(i, i, BigInt::from(d));
                }
                m
            }
            Parity::Even => hyperbolic(),
        };
        Ok(ReduceOutcome {
            matrix,
            steps: Vec::new(),
            exhausted: true,
        })
    }

    /// Replay a sequence of elementary operations from this matrix.
    pub fn apply_steps(&self, steps: &[ElemOp]) -> Result<IntSymMatrix, MatrixError> {
        let mut m = self.clone();
        for op in steps {
            m = m.elementary_op(op.i, op.j, op.k)?;
        }
        Ok(m)
    }

    /// True when some integer matrix P with det +-1 and entries bounded by
    /// `bound` in absolute value satisfies P^T A P = B. Exhaustive search;
    /// intended for sizes up to 2.
    pub fn congruent_brute_force(&self, other: &IntSymMatrix, bound: i64) -> bool {
        if self.n != other.n {
            return false;
        }
        let n = self.n;
        if n == 0 {
            return true;
        }
        match (self.to_i128(), other.to_i128()) {
            (Some(a), Some(b)) if bound < 1 << 20 => congruent_scan_i128(n, &a, &b, bound),
            _ => congruent_scan_big(n, self, other, bound),
        }
    }

    fn to_i128(&self) -> Option<Vec<i128>> {
        const LIMIT: i128 = 1 << 40;
        let mut out = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            let v = e.to_i128()?;
            if v.abs() > LIMIT {
                return None;
            }
            out.push(v);
        }
        Some(out)
    }
}

impl fmt::Display for IntSymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 0 {
            return write!(f, "[]");
        }
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// The hyperbolic pair, the even rank-2 representative.
pub fn hyperbolic() -> IntSymMatrix {
    IntSymMatrix::from_rows_i64(&[&[0, 1], &[1, 0]]).expect("symmetric")
}

fn congruent_scan_i128(n: usize, a: &[i128], b: &[i128], bound: i64) -> bool {
    let bound = bound as i128;
    let cells = n * n;
    let mut p = vec![-bound; cells];
    loop {
        let det = det_i128(n, &p);
        if (det == 1 || det == -1) && transform_matches_i128(n, a, &p, b) {
            return true;
        }
        // Odometer increment.
        let mut idx = 0;
        loop {
            if idx == cells {
                return false;
            }
            if p[idx] < bound {
                p[idx] += 1;
                break;
            }
            p[idx] = -bound;
            idx += 1;
        }
    }
}

fn det_i128(n: usize, p: &[i128]) -> i128 {
    match n {
        1 => p[0],
        2 => p[0] * p[3] - p[1] * p[2],
        3 => {
            p[0] * (p[4] * p[8] - p[5] * p[7]) - p[1] * (p[3] * p[8] - p[5] * p[6])
                + p[2] * (p[3] * p[7] - p[4] * p[6])
        }
        _ => det_general_i128(n, p),
    }
}

fn det_general_i128(n: usize, p: &[i128]) -> i128 {
    // Cofactor expansion; only reachable for n >= 4, which the oracle is
    // not intended for but must not get wrong.
    if n == 0 {
        return 1;
    }
    let mut det = 0i128;
    for col in 0..n {
        let minor: Vec<i128> = (1..n)
            .flat_map(|r| (0..n).filter(|&c| c != col).map(move |c| (r, c)))
            .map(|(r, c)| p[r * n + c])
            .collect();
        let term = p[col] * det_general_i128(n - 1, &minor);
        if col % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

fn transform_matches_i128(n: usize, a: &[i128], p: &[i128], b: &[i128]) -> bool {
    // (P^T A P)[i][j] = sum_{r,c} P[r][i] A[r][c] P[c][j]
    for i in 0..n {
        for j in i..n {
            let mut acc = 0i128;
            for r in 0..n {
                if p[r * n + i] == 0 {
                    continue;
                }
                let mut inner = 0i128;
                for c in 0..n {
                    inner += a[r * n + c] * p[c * n + j];
                }
                acc += p[r * n + i] * inner;
            }
            if acc != b[i * n + j] {
                return false;
            }
        }
    }
    true
}

fn congruent_scan_big(n: usize, a: &IntSymMatrix, b: &IntSymMatrix, bound: i64) -> bool {
    let cells = n * n;
    let mut p = vec![-bound; cells];
    loop {
        let pm: Vec<BigInt> = p.iter().map(|&v| BigInt::from(v)).collect();
        let det = det_big(n, &pm);
        if det.abs().is_one() && transform_matches_big(n, a, &pm, b) {
            return true;
        }
        let mut idx = 0;
        loop {
            if idx == cells {
                return false;
            }
            if p[idx] < bound {
                p[idx] += 1;
                break;
            }
            p[idx] = -bound;
            idx += 1;
        }
    }
}

fn det_big(n: usize, p: &[BigInt]) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut det = BigInt::zero();
    for col in 0..n {
        let minor: Vec<BigInt> = (1..n)
            .flat_map(|r| (0..n).filter(|&c| c != col).map(move |c| (r, c)))
            .map(|(r, c)| p[r * n + c].clone())
            .collect();
        let term = &p[col] * det_big(n - 1, &minor);
        if col % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

fn transform_matches_big(n: usize, a: &IntSymMatrix, p: &[BigInt], b: &IntSymMatrix) -> bool {
    for i in 0..n {
        for j in i..n {
            let mut acc = BigInt::zero();
            for r in 0..n {
                for c in 0..n {
                    acc += &p[r * n + i] * a.get(r, c) * &p[c * n + j];
                }
            }
            if &acc != b.get(i, j) {
                return false;
            }
        }
    }
    true
}

/// Complete congruence invariants of a form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormInvariants {
    pub rank: usize,
    pub positive: usize,
    pub negative: usize,
    pub determinant: BigInt,
    pub parity: Parity,
}

impl FormInvariants {
    pub fn signature(&self) -> (usize, usize) {
        (self.positive, self.negative)
    }
}

/// One elementary congruence operation (i,j;k) with 1-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElemOp {
    pub i: usize,
    pub j: usize,
    pub k: i64,
}

impl fmt::Display for ElemOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{})", self.i, self.j, self.k)
    }
}

/// Result of `reduce_trace`: the representative reached, the operations
/// that reach it, and whether the bounded search had to fall back to the
/// invariant-determined representative with an empty trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReduceOutcome {
    pub matrix: IntSymMatrix,
    pub steps: Vec<ElemOp>,
    pub exhausted: bool,
}
