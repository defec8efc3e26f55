//! Exact arithmetic over Z2 and Z4.
//!
//! Vectors of `Z2^alpha x Z4^beta` are stored as two digit sequences. All
//! values are immutable after construction; operations return new values.
//! The row reducer brings a quaternary matrix to the block shape
//!
//! ```text
//! ( 2T | 2I_gamma |   0     )
//! (  S |    R     | I_delta )
//! ```
//!
//! after a column permutation, with `T` and `R` binary and `S` over Z4.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// An element of Z4, stored as its residue in `0..4`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Z4(u8);

impl Z4 {
    pub const ZERO: Z4 = Z4(0);
    pub const ONE: Z4 = Z4(1);
    pub const TWO: Z4 = Z4(2);
    pub const THREE: Z4 = Z4(3);

    /// Reduces `value` modulo 4.
    pub const fn new(value: u8) -> Self {
        Z4(value & 3)
    }

    /// Accepts only residues already in `0..4`.
    pub const fn try_new(value: u8) -> Option<Self> {
        if value < 4 {
            Some(Z4(value))
        } else {
            None
        }
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub const fn is_unit(self) -> bool {
        self.0 & 1 == 1
    }

    pub const fn is_even(self) -> bool {
        self.0 & 1 == 0
    }

    /// Additive order: 1 for 0, 2 for 2, 4 for the units.
    pub const fn order(self) -> u8 {
        match self.0 {
            0 => 1,
            2 => 2,
            _ => 4,
        }
    }

    /// Lee weight: 0, 1, 2, 1.
    pub const fn lee_weight(self) -> usize {
        match self.0 {
            0 => 0,
            2 => 2,
            _ => 1,
        }
    }

    /// Embeds a bit as 0 or 1.
    pub const fn from_bit(bit: u8) -> Self {
        Z4(bit & 1)
    }

    /// Residue modulo 2.
    pub const fn to_bit(self) -> u8 {
        self.0 & 1
    }

    /// `k * self` for a non-negative integer `k`.
    pub const fn times(self, k: u64) -> Self {
        Z4(((k & 3) as u8 * self.0) & 3)
    }
}

impl fmt::Debug for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<Z4> for u8 {
    fn from(x: Z4) -> u8 {
        x.0
    }
}

impl Add for Z4 {
    type Output = Z4;
    fn add(self, rhs: Z4) -> Z4 {
        Z4((self.0 + rhs.0) & 3)
    }
}

impl Sub for Z4 {
    type Output = Z4;
    fn sub(self, rhs: Z4) -> Z4 {
        Z4((self.0 + 4 - rhs.0) & 3)
    }
}

impl Neg for Z4 {
    type Output = Z4;
    fn neg(self) -> Z4 {
        Z4((4 - self.0) & 3)
    }
}

impl Mul for Z4 {
    type Output = Z4;
    fn mul(self, rhs: Z4) -> Z4 {
        Z4((self.0 * rhs.0) & 3)
    }
}

impl AddAssign for Z4 {
    fn add_assign(&mut self, rhs: Z4) {
        *self = *self + rhs;
    }
}

impl SubAssign for Z4 {
    fn sub_assign(&mut self, rhs: Z4) {
        *self = *self - rhs;
    }
}

/// Converts raw digits to Z4, rejecting anything outside `0..4`.
pub fn z4_digits(digits: &[u8]) -> Result<Vec<Z4>> {
    digits
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            Z4::try_new(d).ok_or(Error::InvalidEntry {
                row: 0,
                column: i,
                value: d as u64,
                reason: "quaternary entries must be in 0..4",
            })
        })
        .collect()
}

/// Standard dot product of quaternary vectors of equal length.
pub fn quaternary_dot(a: &[Z4], b: &[Z4]) -> Z4 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Z4::ZERO, |acc, (&x, &y)| acc + x * y)
}

/// An element of `Z2^alpha x Z4^beta`.
///
/// Ordering is lexicographic on the binary part, then on the quaternary part.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MixedVector {
    binary: Vec<u8>,
    quaternary: Vec<Z4>,
}

impl MixedVector {
    /// Builds a vector, rejecting binary entries other than 0 and 1.
    pub fn new(binary: Vec<u8>, quaternary: Vec<Z4>) -> Result<Self> {
        if let Some((column, &value)) = binary.iter().enumerate().find(|(_, &b)| b > 1) {
            return Err(Error::InvalidEntry {
                row: 0,
                column,
                value: value as u64,
                reason: "binary entries must be 0 or 1",
            });
        }
        Ok(MixedVector { binary, quaternary })
    }

    /// Builds a vector from raw digits, validating both alphabets.
    pub fn from_digits(binary: &[u8], quaternary: &[u8]) -> Result<Self> {
        let quaternary = z4_digits(quaternary).map_err(|e| match e {
            Error::InvalidEntry {
                row,
                column,
                value,
                reason,
            } => Error::InvalidEntry {
                row,
                column: column + binary.len(),
                value,
                reason,
            },
            other => other,
        })?;
        Self::new(binary.to_vec(), quaternary)
    }

    pub(crate) fn from_parts_unchecked(binary: Vec<u8>, quaternary: Vec<Z4>) -> Self {
        debug_assert!(binary.iter().all(|&b| b < 2));
        MixedVector { binary, quaternary }
    }

    pub fn zero(alpha: usize, beta: usize) -> Self {
        MixedVector {
            binary: vec![0; alpha],
            quaternary: vec![Z4::ZERO; beta],
        }
    }

    pub fn alpha(&self) -> usize {
        self.binary.len()
    }

    pub fn beta(&self) -> usize {
        self.quaternary.len()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.alpha(), self.beta())
    }

    pub fn binary(&self) -> &[u8] {
        &self.binary
    }

    pub fn quaternary(&self) -> &[Z4] {
        &self.quaternary
    }

    /// All entries as plain digits, binary block first.
    pub fn digits(&self) -> Vec<u8> {
        self.binary
            .iter()
            .copied()
            .chain(self.quaternary.iter().map(|q| q.value()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.binary.iter().all(|&b| b == 0) && self.quaternary.iter().all(|q| q.is_zero())
    }

    /// Additive order: 4 iff some quaternary entry is odd.
    pub fn order(&self) -> u8 {
        if self.quaternary.iter().any(|q| q.is_unit()) {
            4
        } else if self.is_zero() {
            1
        } else {
            2
        }
    }

    pub(crate) fn ensure_shape(&self, alpha: usize, beta: usize) -> Result<()> {
        if self.shape() != (alpha, beta) {
            return Err(Error::shape(
                format!("(alpha, beta) = ({alpha}, {beta})"),
                format!("({}, {})", self.alpha(), self.beta()),
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        other.ensure_shape(self.alpha(), self.beta())?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        other.ensure_shape(self.alpha(), self.beta())?;
        Ok(self.add_unchecked(&other.negated()))
    }

    pub(crate) fn add_unchecked(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        out
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &Self) {
        debug_assert_eq!(self.shape(), other.shape());
        for (a, b) in self.binary.iter_mut().zip(&other.binary) {
            *a ^= b;
        }
        for (a, &b) in self.quaternary.iter_mut().zip(&other.quaternary) {
            *a += b;
        }
    }

    pub fn negated(&self) -> Self {
        MixedVector {
            binary: self.binary.clone(),
            quaternary: self.quaternary.iter().map(|&q| -q).collect(),
        }
    }

    /// The `k`-fold sum of `self`.
    pub fn scale(&self, k: u64) -> Self {
        MixedVector {
            binary: self.binary.iter().map(|&b| b * (k & 1) as u8).collect(),
            quaternary: self.quaternary.iter().map(|&q| q.times(k)).collect(),
        }
    }

    /// Reorders coordinates so that new binary position `k` holds old position
    /// `x_perm[k]`, and likewise for the quaternary block.
    pub fn permuted(&self, x_perm: &Permutation, y_perm: &Permutation) -> Self {
        MixedVector {
            binary: x_perm.apply(&self.binary),
            quaternary: y_perm.apply(&self.quaternary),
        }
    }
}

impl fmt::Debug for MixedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Compact form used throughout the literature, e.g. `(11|02)`.
impl fmt::Display for MixedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for b in &self.binary {
            write!(f, "{b}")?;
        }
        write!(f, "|")?;
        for q in &self.quaternary {
            write!(f, "{q}")?;
        }
        write!(f, ")")
    }
}

/// Group operation of `Z2^alpha x Z4^beta`.
pub fn add_vectors(u: &MixedVector, v: &MixedVector) -> Result<MixedVector> {
    u.checked_add(v)
}

pub fn scalar_multiple(k: u64, v: &MixedVector) -> MixedVector {
    v.scale(k)
}

/// An ordered list of mixed vectors sharing one shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedMatrix {
    alpha: usize,
    beta: usize,
    rows: Vec<MixedVector>,
}

impl MixedMatrix {
    pub fn new(alpha: usize, beta: usize, rows: Vec<MixedVector>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if row.shape() != (alpha, beta) {
                return Err(Error::shape(
                    format!("row {i} with (alpha, beta) = ({alpha}, {beta})"),
                    format!("({}, {})", row.alpha(), row.beta()),
                ));
            }
        }
        Ok(MixedMatrix { alpha, beta, rows })
    }

    pub(crate) fn new_unchecked(alpha: usize, beta: usize, rows: Vec<MixedVector>) -> Self {
        debug_assert!(rows.iter().all(|r| r.shape() == (alpha, beta)));
        MixedMatrix { alpha, beta, rows }
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn rows(&self) -> &[MixedVector] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn into_rows(self) -> Vec<MixedVector> {
        self.rows
    }
}

/// A matrix over Z4 with rows of one common width.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternaryMatrix {
    width: usize,
    rows: Vec<Vec<Z4>>,
}

impl QuaternaryMatrix {
    pub fn new(width: usize, rows: Vec<Vec<Z4>>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(Error::shape(
                    format!("row {i} of width {width}"),
                    format!("width {}", row.len()),
                ));
            }
        }
        Ok(QuaternaryMatrix { width, rows })
    }

    /// Builds a matrix from raw digit rows. All rows must have the same length.
    pub fn from_digits(rows: &[&[u8]]) -> Result<Self> {
        let width = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                z4_digits(r).map_err(|e| match e {
                    Error::InvalidEntry {
                        column,
                        value,
                        reason,
                        ..
                    } => Error::InvalidEntry {
                        row: i,
                        column,
                        value,
                        reason,
                    },
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(width, rows)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[Vec<Z4>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn permute_columns(&self, perm: &Permutation) -> Self {
        QuaternaryMatrix {
            width: self.width,
            rows: self.rows.iter().map(|r| perm.apply(r)).collect(),
        }
    }
}

/// A permutation of `0..n` acting on coordinates.
///
/// Stored as the list of source positions: applying it to `v` yields `w`
/// with `w[k] = v[self[k]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Validates that `sources` is a permutation of `0..len`.
    pub fn from_sources(sources: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; sources.len()];
        for &s in &sources {
            if s >= sources.len() || seen[s] {
                return Err(Error::InvalidParameters(format!(
                    "{sources:?} is not a permutation"
                )));
            }
            seen[s] = true;
        }
        Ok(Permutation(sources))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sources(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &s)| i == s)
    }

    pub fn apply<T: Clone>(&self, v: &[T]) -> Vec<T> {
        debug_assert_eq!(v.len(), self.0.len());
        self.0.iter().map(|&s| v[s].clone()).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (k, &s) in self.0.iter().enumerate() {
            inv[s] = k;
        }
        Permutation(inv)
    }

    /// The permutation equivalent to applying `self` first, then `then`.
    pub fn then(&self, then: &Permutation) -> Self {
        Permutation(then.0.iter().map(|&k| self.0[k]).collect())
    }

    /// Disjoint cycles of the map sending old position `i` to its new
    /// position, 0-based, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let dest = self.inverse();
        let mut seen = vec![false; self.0.len()];
        let mut cycles = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || dest.0[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = dest.0[start];
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = dest.0[i];
            }
            cycles.push(cycle);
        }
        cycles
    }
}

/// Cycle notation with 1-based coordinates, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Fully reduced generators of a quaternary code, in the original column order.
///
/// Every unit row has a 1 at its pivot column and every other row is zero there.
/// Every order-two row has a 2 at its pivot column; the other order-two rows are
/// zero there and the unit rows hold 0 or 1. Both lists are sorted by pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Echelon {
    pub width: usize,
    pub frozen: usize,
    pub order_two: Vec<(usize, Vec<Z4>)>,
    pub order_four: Vec<(usize, Vec<Z4>)>,
    /// Whether rows survived that are nonzero only on frozen columns.
    pub frozen_residue: bool,
}

fn sub_multiple(target: &mut [Z4], row: &[Z4], k: Z4) {
    for (t, &r) in target.iter_mut().zip(row) {
        *t -= k * r;
    }
}

/// Row reduction over Z4.
///
/// Columns `0..frozen` are never used as pivots. Unit pivots are taken first,
/// scanning columns right to left; order-two pivots are then taken the same
/// way among the columns left over.
pub(crate) fn echelon(rows: &[Vec<Z4>], width: usize, frozen: usize) -> Echelon {
    let mut rows: Vec<Vec<Z4>> = rows.to_vec();
    let mut used = vec![false; rows.len()];
    let mut is_unit_col = vec![false; width];
    let mut unit_pivots: Vec<(usize, usize)> = Vec::new();

    for col in (frozen..width).rev() {
        let Some(r) = (0..rows.len()).find(|&r| !used[r] && rows[r][col].is_unit()) else {
            continue;
        };
        if rows[r][col] == Z4::THREE {
            for x in rows[r].iter_mut() {
                *x = -*x;
            }
        }
        used[r] = true;
        is_unit_col[col] = true;
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            let a = row[col];
            if k != r && !a.is_zero() {
                sub_multiple(row, &pivot_row, a);
            }
        }
        unit_pivots.push((col, r));
    }

    let mut two_pivots: Vec<(usize, usize)> = Vec::new();
    for col in (frozen..width).rev().filter(|&c| !is_unit_col[c]) {
        let Some(r) = (0..rows.len()).find(|&r| !used[r] && rows[r][col] == Z4::TWO) else {
            continue;
        };
        used[r] = true;
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            // Remaining and order-two rows hold 0 or 2 here; unit rows are
            // brought down to 0 or 1.
            if k != r && row[col].value() >= 2 {
                sub_multiple(row, &pivot_row, Z4::ONE);
            }
        }
        two_pivots.push((col, r));
    }

    let frozen_residue = (0..rows.len()).any(|r| !used[r] && rows[r].iter().any(|x| !x.is_zero()));

    unit_pivots.sort();
    two_pivots.sort();
    Echelon {
        width,
        frozen,
        order_two: two_pivots
            .into_iter()
            .map(|(c, r)| (c, rows[r].clone()))
            .collect(),
        order_four: unit_pivots
            .into_iter()
            .map(|(c, r)| (c, rows[r].clone()))
            .collect(),
        frozen_residue,
    }
}

impl Echelon {
    /// Column order `[frozen | free | order-two pivots | unit pivots]`,
    /// each group in ascending original order.
    pub fn column_permutation(&self) -> Permutation {
        let mut is_pivot = vec![false; self.width];
        for (c, _) in self.order_two.iter().chain(&self.order_four) {
            is_pivot[*c] = true;
        }
        let mut sources: Vec<usize> = (0..self.frozen).collect();
        sources.extend((self.frozen..self.width).filter(|&c| !is_pivot[c]));
        sources.extend(self.order_two.iter().map(|(c, _)| *c));
        sources.extend(self.order_four.iter().map(|(c, _)| *c));
        Permutation(sources)
    }

    /// Reduces `v` against the rows; returns the residue, zero iff `v` is in the span.
    pub fn residue(&self, v: &[Z4]) -> Vec<Z4> {
        let mut w = v.to_vec();
        for (c, row) in &self.order_four {
            let a = w[*c];
            if !a.is_zero() {
                sub_multiple(&mut w, row, a);
            }
        }
        for (c, row) in &self.order_two {
            if w[*c] == Z4::TWO {
                sub_multiple(&mut w, row, Z4::ONE);
            }
        }
        w
    }
}

/// Result of [`quaternary_row_reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternaryReduction {
    /// Order-two rows followed by unit rows, in permuted column order.
    pub reduced: QuaternaryMatrix,
    /// Number of independent order-four generators (delta).
    pub order4_count: usize,
    /// Number of independent order-two generators (gamma).
    pub order2_count: usize,
    /// Column `k` of `reduced` is column `column_permutation.sources()[k]` of the input.
    pub column_permutation: Permutation,
}

/// Reduces a quaternary generator matrix to the standard shape
/// `(2T 2I 0 / S R I)`, dropping redundant rows.
pub fn quaternary_row_reduce(m: &QuaternaryMatrix) -> QuaternaryReduction {
    quaternary_row_reduce_frozen(m, 0)
}

/// As [`quaternary_row_reduce`], keeping columns `0..frozen` in place as the
/// leading columns and never pivoting on them.
///
/// The caller must ensure no generator of the span is supported only on the
/// frozen columns; such generators would be dropped.
pub fn quaternary_row_reduce_frozen(m: &QuaternaryMatrix, frozen: usize) -> QuaternaryReduction {
    let frozen = frozen.min(m.width());
    let ech = echelon(m.rows(), m.width(), frozen);
    reduction_from_echelon(&ech)
}

pub(crate) fn reduction_from_echelon(ech: &Echelon) -> QuaternaryReduction {
    let perm = ech.column_permutation();
    let rows = ech
        .order_two
        .iter()
        .chain(&ech.order_four)
        .map(|(_, r)| perm.apply(r))
        .collect();
    QuaternaryReduction {
        reduced: QuaternaryMatrix {
            width: ech.width,
            rows,
        },
        order4_count: ech.order_four.len(),
        order2_count: ech.order_two.len(),
        column_permutation: perm,
    }
}

/// Gauss-Jordan elimination over Z2 on `rows`, applying the same row
/// operations to `tags`. Pivots are chosen left to right.
///
/// Returns the pivot columns; rows `0..pivots.len()` of the output carry the
/// pivots in order, the remaining rows are zero.
pub(crate) fn binary_rref_with<T>(
    rows: &mut [Vec<u8>],
    tags: &mut [T],
    mut combine: impl FnMut(&mut T, &T),
) -> Vec<usize>
where
    T: Clone,
{
    let width = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..width {
        let Some(r) = (next..rows.len()).find(|&r| rows[r][col] == 1) else {
            continue;
        };
        rows.swap(next, r);
        tags.swap(next, r);
        let pivot_row = rows[next].clone();
        let pivot_tag = tags[next].clone();
        for k in 0..rows.len() {
            if k != next && rows[k][col] == 1 {
                for (a, b) in rows[k].iter_mut().zip(&pivot_row) {
                    *a ^= b;
                }
                combine(&mut tags[k], &pivot_tag);
            }
        }
        pivots.push(col);
        next += 1;
    }
    pivots
}

/// Rank over Z2.
pub fn binary_rank(rows: &[Vec<u8>]) -> usize {
    let mut rows = rows.to_vec();
    let mut tags = vec![(); rows.len()];
    binary_rref_with(&mut rows, &mut tags, |_, _| {}).len()
}
