//! Z2Z4-additive codes: subgroups of `Z2^alpha x Z4^beta` given by generators.
//!
//! A code is stored as the generator rows it was built from. On first use the
//! rows are lifted to Z4 through `chi` and fully reduced; the reduced rows
//! give gamma order-two and delta order-four generators such that every
//! codeword is uniquely `sum(l_i u_i) + sum(m_j v_j)` with `l_i` in Z2 and
//! `m_j` in Z4. Type, membership and enumeration all read that cache.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;

use crate::algebra::{
    binary_rank, binary_rref_with, echelon, Echelon, MixedMatrix, MixedVector, Permutation, Z4,
};
use crate::error::{check_cap, Error, Result};
use crate::graymap::{chi, chi_inverse};

/// Default upper bound on the number of codewords any enumeration may visit.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 24;

/// The parameters `(alpha, beta; gamma, delta; kappa)`.
///
/// The code is isomorphic to `Z2^gamma x Z4^delta`, and `kappa` is the
/// dimension of the binary projection of its order-two subcode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CodeType {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub delta: usize,
    pub kappa: usize,
}

impl CodeType {
    pub fn new(
        alpha: usize,
        beta: usize,
        gamma: usize,
        delta: usize,
        kappa: usize,
    ) -> Result<Self> {
        let t = CodeType {
            alpha,
            beta,
            gamma,
            delta,
            kappa,
        };
        if !t.is_valid() {
            return Err(Error::InvalidParameters(format!("{t} is not a valid type")));
        }
        Ok(t)
    }

    /// Whether some code of this type can exist.
    pub fn is_valid(&self) -> bool {
        // The quaternary block must hold I_delta, 2I_(gamma-kappa) and the free columns.
        self.kappa <= self.alpha.min(self.gamma)
            && self.gamma + self.delta <= self.beta + self.kappa
    }

    /// Length of the binary image, `alpha + 2 beta`.
    pub fn length(&self) -> usize {
        self.alpha + 2 * self.beta
    }

    pub fn log2_cardinality(&self) -> usize {
        self.gamma + 2 * self.delta
    }

    pub fn cardinality(&self) -> BigUint {
        BigUint::from(1u8) << self.log2_cardinality()
    }

    /// Number of codewords of order at most two, as a power of two.
    pub fn log2_order_two_count(&self) -> usize {
        self.gamma + self.delta
    }
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{};{},{};{})",
            self.alpha, self.beta, self.gamma, self.delta, self.kappa
        )
    }
}

#[derive(Clone, Debug)]
struct Reduced {
    echelon: Echelon,
    order_two: Vec<MixedVector>,
    order_four: Vec<MixedVector>,
    kappa: usize,
}

/// A subgroup of `Z2^alpha x Z4^beta`, the additive closure of its generators.
#[derive(Clone, Debug)]
pub struct Z2Z4Code {
    alpha: usize,
    beta: usize,
    generators: Vec<MixedVector>,
    reduced: OnceLock<Reduced>,
}

impl Z2Z4Code {
    /// The code spanned by `rows`. An empty list gives the zero code.
    pub fn new(alpha: usize, beta: usize, rows: Vec<MixedVector>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if row.shape() != (alpha, beta) {
                return Err(Error::shape(
                    format!("row {i} with (alpha, beta) = ({alpha}, {beta})"),
                    format!("({}, {})", row.alpha(), row.beta()),
                ));
            }
        }
        Ok(Self::new_unchecked(alpha, beta, rows))
    }

    pub(crate) fn new_unchecked(alpha: usize, beta: usize, rows: Vec<MixedVector>) -> Self {
        Z2Z4Code {
            alpha,
            beta,
            generators: rows,
            reduced: OnceLock::new(),
        }
    }

    /// Builds a code from rows of plain digits, binary block first.
    /// Errors name the offending row and column.
    pub fn from_digit_rows(alpha: usize, beta: usize, rows: &[Vec<u8>]) -> Result<Self> {
        let rows = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                if r.len() != alpha + beta {
                    return Err(Error::shape(
                        format!("row {i} with {} entries", alpha + beta),
                        format!("{} entries", r.len()),
                    ));
                }
                MixedVector::from_digits(&r[..alpha], &r[alpha..]).map_err(|e| match e {
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
        Self::new(alpha, beta, rows)
    }

    pub fn zero(alpha: usize, beta: usize) -> Self {
        Self::new_unchecked(alpha, beta, Vec::new())
    }

    /// The whole ambient group `Z2^alpha x Z4^beta`.
    pub fn full_space(alpha: usize, beta: usize) -> Self {
        let rows = (0..alpha + beta)
            .map(|i| {
                let mut v = MixedVector::zero(alpha, beta).digits();
                v[i] = 1;
                MixedVector::from_digits(&v[..alpha], &v[alpha..]).expect("unit vector")
            })
            .collect();
        Self::new_unchecked(alpha, beta, rows)
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    /// Length of the binary image, `alpha + 2 beta`.
    pub fn length(&self) -> usize {
        self.alpha + 2 * self.beta
    }

    pub fn generators(&self) -> &[MixedVector] {
        &self.generators
    }

    pub fn generator_matrix(&self) -> MixedMatrix {
        MixedMatrix::new_unchecked(self.alpha, self.beta, self.generators.clone())
    }

    fn reduced(&self) -> &Reduced {
        self.reduced.get_or_init(|| {
            let lifted: Vec<Vec<Z4>> = self.generators.iter().map(chi).collect();
            let echelon = echelon(&lifted, self.alpha + self.beta, 0);
            // Everything in the span of chi(C) is even on the binary block.
            let pull = |(_, r): &(usize, Vec<Z4>)| {
                chi_inverse(r, self.alpha).expect("span of chi(C) is even on X")
            };
            let order_two: Vec<MixedVector> = echelon.order_two.iter().map(pull).collect();
            let order_four: Vec<MixedVector> = echelon.order_four.iter().map(pull).collect();
            let kappa = binary_rank(
                &order_two
                    .iter()
                    .map(|u| u.binary().to_vec())
                    .collect::<Vec<_>>(),
            );
            Reduced {
                echelon,
                order_two,
                order_four,
                kappa,
            }
        })
    }

    pub fn code_type(&self) -> CodeType {
        let r = self.reduced();
        CodeType {
            alpha: self.alpha,
            beta: self.beta,
            gamma: r.order_two.len(),
            delta: r.order_four.len(),
            kappa: r.kappa,
        }
    }

    /// Independent order-two generators `u_1..u_gamma`.
    pub fn order_two_generators(&self) -> &[MixedVector] {
        &self.reduced().order_two
    }

    /// Independent order-four generators `v_1..v_delta`.
    pub fn order_four_generators(&self) -> &[MixedVector] {
        &self.reduced().order_four
    }

    /// Order-two generators followed by order-four generators.
    pub fn reduced_generators(&self) -> MixedMatrix {
        let r = self.reduced();
        let rows = r.order_two.iter().chain(&r.order_four).cloned().collect();
        MixedMatrix::new_unchecked(self.alpha, self.beta, rows)
    }

    pub fn log2_cardinality(&self) -> usize {
        self.code_type().log2_cardinality()
    }

    pub fn cardinality(&self) -> BigUint {
        self.code_type().cardinality()
    }

    /// Membership by reduction against the lifted generators.
    pub fn contains(&self, v: &MixedVector) -> Result<bool> {
        v.ensure_shape(self.alpha, self.beta)?;
        Ok(self
            .reduced()
            .echelon
            .residue(&chi(v))
            .iter()
            .all(|x| x.is_zero()))
    }

    /// Calls `f` on every codeword once, without storing them.
    pub fn for_each_codeword(&self, cap: u64, mut f: impl FnMut(&MixedVector)) -> Result<()> {
        check_cap(self.log2_cardinality(), cap)?;
        let r = self.reduced();
        let gens: Vec<(&MixedVector, u8)> = r
            .order_two
            .iter()
            .map(|g| (g, 2))
            .chain(r.order_four.iter().map(|g| (g, 4)))
            .collect();
        let mut digits = vec![0u8; gens.len()];
        let mut current = MixedVector::zero(self.alpha, self.beta);
        loop {
            f(&current);
            // Mixed-radix counter, last digit fastest; a digit wrapping around
            // adds its generator `radix` times in total, which is zero.
            let mut i = gens.len();
            loop {
                if i == 0 {
                    return Ok(());
                }
                i -= 1;
                let (g, radix) = gens[i];
                current.add_assign_unchecked(g);
                digits[i] += 1;
                if digits[i] == radix {
                    digits[i] = 0;
                } else {
                    break;
                }
            }
        }
    }

    /// All codewords, sorted lexicographically.
    pub fn enumerate_codewords(&self, cap: u64) -> Result<Vec<MixedVector>> {
        let mut out = Vec::with_capacity(1usize << self.log2_cardinality().min(24));
        self.for_each_codeword(cap, |c| out.push(c.clone()))?;
        out.sort();
        Ok(out)
    }

    /// The subcode of codewords of order at most two.
    pub fn order_two_subcode(&self) -> Z2Z4Code {
        let r = self.reduced();
        let rows = r
            .order_two
            .iter()
            .cloned()
            .chain(r.order_four.iter().map(|v| v.scale(2)))
            .collect();
        Self::new_unchecked(self.alpha, self.beta, rows)
    }

    /// Projection onto the binary coordinates, as a code with `beta = 0`.
    pub fn puncture_x(&self) -> Z2Z4Code {
        let rows = self
            .generators
            .iter()
            .map(|g| MixedVector::from_parts_unchecked(g.binary().to_vec(), Vec::new()))
            .collect();
        Self::new_unchecked(self.alpha, 0, rows)
    }

    /// Projection onto the quaternary coordinates, as a code with `alpha = 0`.
    pub fn puncture_y(&self) -> Z2Z4Code {
        let rows = self
            .generators
            .iter()
            .map(|g| MixedVector::from_parts_unchecked(Vec::new(), g.quaternary().to_vec()))
            .collect();
        Self::new_unchecked(0, self.beta, rows)
    }

    /// The image of the code under a coordinate permutation acting within
    /// each block; see [`MixedVector::permuted`].
    pub fn permuted(&self, x_perm: &Permutation, y_perm: &Permutation) -> Result<Z2Z4Code> {
        if x_perm.len() != self.alpha || y_perm.len() != self.beta {
            return Err(Error::shape(
                format!("permutations of sizes ({}, {})", self.alpha, self.beta),
                format!("({}, {})", x_perm.len(), y_perm.len()),
            ));
        }
        let rows = self
            .generators
            .iter()
            .map(|g| g.permuted(x_perm, y_perm))
            .collect();
        Ok(Self::new_unchecked(self.alpha, self.beta, rows))
    }

    /// Whether both codes have the same codewords. Codes of different shapes
    /// are an error, not unequal.
    pub fn equals(&self, other: &Z2Z4Code) -> Result<bool> {
        if (self.alpha, self.beta) != (other.alpha, other.beta) {
            return Err(Error::shape(
                format!("(alpha, beta) = ({}, {})", self.alpha, self.beta),
                format!("({}, {})", other.alpha, other.beta),
            ));
        }
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Canonical generator matrix and the coordinate permutations that lead to it.
    ///
    /// First the binary projections of the order-two generators are put in
    /// reduced echelon form, exposing `I_kappa`. The rest of the code, lifted
    /// through `chi` with the `alpha - kappa` remaining binary columns kept in
    /// front, is reduced over Z4. The `kappa` rows are then cleaned against
    /// the pivots of that reduction.
    pub fn standard_form(&self) -> Result<StandardFormDecomposition> {
        let t = self.code_type();
        let (alpha, beta, gamma, delta, kappa) = (t.alpha, t.beta, t.gamma, t.delta, t.kappa);
        let red = self.reduced();

        let mut xs: Vec<Vec<u8>> = red.order_two.iter().map(|u| u.binary().to_vec()).collect();
        let mut us = red.order_two.clone();
        let x_pivots = binary_rref_with(&mut xs, &mut us, |a, b| a.add_assign_unchecked(b));
        if x_pivots.len() != kappa {
            return Err(Error::Internal(format!(
                "binary rank {} differs from kappa = {kappa}",
                x_pivots.len()
            )));
        }
        let mut vs = red.order_four.clone();
        for v in &mut vs {
            for (i, &p) in x_pivots.iter().enumerate() {
                if v.binary()[p] == 1 {
                    v.add_assign_unchecked(&us[i]);
                }
            }
        }

        let mut is_x_pivot = vec![false; alpha];
        for &p in &x_pivots {
            is_x_pivot[p] = true;
        }
        let free_x: Vec<usize> = (0..alpha).filter(|&c| !is_x_pivot[c]).collect();
        let x_perm = Permutation::from_sources(
            x_pivots
                .iter()
                .copied()
                .chain(free_x.iter().copied())
                .collect(),
        )?;

        // The quaternary code generated by (0 | 2B4) and (2B2 | Q).
        let frozen = alpha - kappa;
        let minus_rows: Vec<Vec<Z4>> = us[kappa..]
            .iter()
            .chain(&vs)
            .map(|g| {
                free_x
                    .iter()
                    .map(|&c| Z4::new(2 * g.binary()[c]))
                    .chain(g.quaternary().iter().copied())
                    .collect()
            })
            .collect();
        let ech = echelon(&minus_rows, frozen + beta, frozen);
        if ech.frozen_residue
            || ech.order_two.len() != gamma - kappa
            || ech.order_four.len() != delta
        {
            return Err(Error::Internal(format!(
                "residual quaternary code reduced to ({}, {}) instead of ({}, {delta})",
                ech.order_two.len(),
                ech.order_four.len(),
                gamma - kappa
            )));
        }
        let perm = ech.column_permutation();
        let y_perm = Permutation::from_sources(
            perm.sources()[frozen..]
                .iter()
                .map(|&s| s - frozen)
                .collect(),
        )?;

        let lift_back = |row: &Vec<Z4>| -> Result<MixedVector> {
            let p = perm.apply(row);
            let tail = chi_inverse(&p[..frozen], frozen)?;
            let mut binary = vec![0u8; kappa];
            binary.extend_from_slice(tail.binary());
            Ok(MixedVector::from_parts_unchecked(
                binary,
                p[frozen..].to_vec(),
            ))
        };
        let two_rows = ech
            .order_two
            .iter()
            .map(|(_, r)| lift_back(r))
            .collect::<Result<Vec<_>>>()?;
        let unit_rows = ech
            .order_four
            .iter()
            .map(|(_, r)| lift_back(r))
            .collect::<Result<Vec<_>>>()?;

        let free_y = beta - (gamma - kappa) - delta;
        let mut kappa_rows = Vec::with_capacity(kappa);
        for u in &us[..kappa] {
            let mut g = u.permuted(&x_perm, &y_perm);
            for (j, v) in unit_rows.iter().enumerate() {
                if g.quaternary()[free_y + (gamma - kappa) + j] == Z4::TWO {
                    g.add_assign_unchecked(&v.scale(2));
                }
            }
            for (j, w) in two_rows.iter().enumerate() {
                if g.quaternary()[free_y + j] == Z4::TWO {
                    g.add_assign_unchecked(w);
                }
            }
            kappa_rows.push(g);
        }

        let half = |row: &[Z4]| row.iter().map(|x| x.value() / 2).collect::<Vec<u8>>();
        let bits = |row: &[Z4]| row.iter().map(|x| x.value()).collect::<Vec<u8>>();
        let decomposition = StandardFormDecomposition {
            code_type: t,
            t_b: kappa_rows
                .iter()
                .map(|g| g.binary()[kappa..].to_vec())
                .collect(),
            t_2: kappa_rows
                .iter()
                .map(|g| half(&g.quaternary()[..free_y]))
                .collect(),
            t_1: two_rows
                .iter()
                .map(|g| half(&g.quaternary()[..free_y]))
                .collect(),
            s_b: unit_rows
                .iter()
                .map(|g| g.binary()[kappa..].to_vec())
                .collect(),
            s_q: unit_rows
                .iter()
                .map(|g| g.quaternary()[..free_y].to_vec())
                .collect(),
            r: unit_rows
                .iter()
                .map(|g| bits(&g.quaternary()[free_y..free_y + gamma - kappa]))
                .collect(),
            canonical: MixedMatrix::new_unchecked(
                alpha,
                beta,
                kappa_rows
                    .into_iter()
                    .chain(two_rows)
                    .chain(unit_rows)
                    .collect(),
            ),
            x_permutation: x_perm,
            y_permutation: y_perm,
        };
        decomposition.verify_layout()?;
        Ok(decomposition)
    }
}

/// Free-function form of [`Z2Z4Code::equals`].
pub fn codes_equal(a: &Z2Z4Code, b: &Z2Z4Code) -> Result<bool> {
    a.equals(b)
}

/// A matrix over Z2 stored as rows of bits.
pub type BinaryBlock = Vec<Vec<u8>>;

/// The canonical generator matrix
///
/// ```text
/// ( I_kappa  T_b | 2T_2  0            0       )
/// ( 0        0   | 2T_1  2I_(gamma-kappa) 0   )
/// ( 0        S_b | S_q   R            I_delta )
/// ```
///
/// of the code permuted by `x_permutation` and `y_permutation`.
#[derive(Clone, Debug)]
pub struct StandardFormDecomposition {
    pub code_type: CodeType,
    pub canonical: MixedMatrix,
    pub t_b: BinaryBlock,
    pub t_1: BinaryBlock,
    pub t_2: BinaryBlock,
    pub r: BinaryBlock,
    pub s_b: BinaryBlock,
    pub s_q: Vec<Vec<Z4>>,
    pub x_permutation: Permutation,
    pub y_permutation: Permutation,
}

impl StandardFormDecomposition {
    /// The code generated by the canonical matrix.
    pub fn canonical_code(&self) -> Z2Z4Code {
        Z2Z4Code::new_unchecked(
            self.canonical.alpha(),
            self.canonical.beta(),
            self.canonical.rows().to_vec(),
        )
    }

    /// Width of the leading quaternary block, `beta - (gamma - kappa) - delta`.
    pub fn free_width(&self) -> usize {
        let t = &self.code_type;
        t.beta + t.kappa - t.gamma - t.delta
    }

    /// Checks every block of the canonical matrix entry by entry.
    pub fn verify_layout(&self) -> Result<()> {
        let t = &self.code_type;
        let (kappa, gk, delta) = (t.kappa, t.gamma - t.kappa, t.delta);
        let f = self.free_width();
        let rows = self.canonical.rows();
        if rows.len() != t.gamma + delta {
            return Err(Error::Internal(format!(
                "canonical matrix has {} rows, expected {}",
                rows.len(),
                t.gamma + delta
            )));
        }
        let bad = |what: &str, i: usize| Err(Error::Internal(format!("canonical row {i}: {what}")));
        for (i, g) in rows.iter().enumerate() {
            let (x, y) = (g.binary(), g.quaternary());
            if i < kappa {
                if (0..kappa).any(|c| x[c] != u8::from(c == i)) {
                    return bad("I_kappa block", i);
                }
                if x[kappa..] != self.t_b[i][..] {
                    return bad("T_b block", i);
                }
                if (0..f).any(|c| y[c].value() != 2 * self.t_2[i][c])
                    || y[f..].iter().any(|q| !q.is_zero())
                {
                    return bad("(2T_2 0 0) block", i);
                }
            } else if i < kappa + gk {
                let k = i - kappa;
                if x.iter().any(|&b| b != 0) {
                    return bad("binary part of an order-two row must vanish", i);
                }
                if (0..f).any(|c| y[c].value() != 2 * self.t_1[k][c])
                    || (0..gk).any(|c| y[f + c].value() != if c == k { 2 } else { 0 })
                    || y[f + gk..].iter().any(|q| !q.is_zero())
                {
                    return bad("(2T_1 2I 0) block", i);
                }
            } else {
                let j = i - kappa - gk;
                if x[..kappa].iter().any(|&b| b != 0) || x[kappa..] != self.s_b[j][..] {
                    return bad("(0 S_b) block", i);
                }
                if y[..f] != self.s_q[j][..]
                    || (0..gk).any(|c| y[f + c].value() != self.r[j][c] || self.r[j][c] > 1)
                    || (0..delta).any(|c| y[f + gk + c].value() != u8::from(c == j))
                {
                    return bad("(S_q R I_delta) block", i);
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn code(alpha: usize, beta: usize, rows: &[&[u8]]) -> Z2Z4Code {
        Z2Z4Code::from_digit_rows(
            alpha,
            beta,
            &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    fn mv(b: &[u8], q: &[u8]) -> MixedVector {
        MixedVector::from_digits(b, q).unwrap()
    }

    fn code_13121() -> Z2Z4Code {
        code(1, 3, &[&[1, 2, 2, 2], &[0, 1, 1, 0], &[1, 1, 2, 3]])
    }

    fn code_34313() -> Z2Z4Code {
        code(
            3,
            4,
            &[
                &[1, 0, 0, 2, 2, 0, 0],
                &[1, 1, 1, 2, 2, 2, 2],
                &[1, 1, 0, 2, 2, 0, 0],
                &[1, 1, 1, 1, 1, 1, 1],
            ],
        )
    }

    /// Closure by repeated addition, independent of the reduction.
    fn closure(c: &Z2Z4Code) -> BTreeSet<MixedVector> {
        let mut set = BTreeSet::from([MixedVector::zero(c.alpha(), c.beta())]);
        loop {
            let mut next = set.clone();
            for a in &set {
                for g in c.generators() {
                    next.insert(a.add_unchecked(g));
                }
            }
            if next.len() == set.len() {
                return set;
            }
            set = next;
        }
    }

    #[test]
    fn construction() {
        assert_eq!(code_13121().cardinality(), BigUint::from(32u32));
        let z = Z2Z4Code::new(2, 2, vec![]).unwrap();
        assert_eq!(z.cardinality(), BigUint::from(1u32));
        let err = Z2Z4Code::from_digit_rows(1, 2, &[vec![1, 0, 0], vec![0, 4, 0]]).unwrap_err();
        assert_eq!(
            err,
            Error::InvalidEntry {
                row: 1,
                column: 1,
                value: 4,
                reason: "quaternary entries must be in 0..4"
            }
        );
        assert!(Z2Z4Code::new(1, 1, vec![mv(&[1, 0], &[1])]).is_err());
    }

    #[test]
    fn types_of_examples() {
        assert_eq!(
            code_13121().code_type(),
            CodeType::new(1, 3, 1, 2, 1).unwrap()
        );
        assert_eq!(
            code_34313().code_type(),
            CodeType::new(3, 4, 3, 1, 3).unwrap()
        );
        assert_eq!(
            Z2Z4Code::zero(2, 2).code_type(),
            CodeType::new(2, 2, 0, 0, 0).unwrap()
        );
        assert_eq!(
            Z2Z4Code::full_space(2, 3).code_type(),
            CodeType::new(2, 3, 2, 3, 2).unwrap()
        );
    }

    #[test]
    fn enumeration_matches_closure() {
        let c = code(2, 1, &[&[1, 1, 0], &[0, 0, 2]]);
        let words = c.enumerate_codewords(DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(
            words,
            vec![
                mv(&[0, 0], &[0]),
                mv(&[0, 0], &[2]),
                mv(&[1, 1], &[0]),
                mv(&[1, 1], &[2])
            ]
        );
        assert_eq!(
            Z2Z4Code::zero(1, 1)
                .enumerate_codewords(DEFAULT_ENUMERATION_CAP)
                .unwrap(),
            vec![MixedVector::zero(1, 1)]
        );
        for c in [code_13121(), code_34313()] {
            let words = c.enumerate_codewords(DEFAULT_ENUMERATION_CAP).unwrap();
            assert_eq!(words.iter().cloned().collect::<BTreeSet<_>>(), closure(&c));
        }
    }

    #[test]
    fn enumeration_cap() {
        let c = code_13121();
        assert_eq!(
            c.enumerate_codewords(16).unwrap_err(),
            Error::CapExceeded {
                log2_requested: 5,
                cap: 16
            }
        );
        assert!(c.enumerate_codewords(32).is_ok());
    }

    #[test]
    fn membership() {
        let c = code_13121();
        assert!(c.contains(&mv(&[0], &[0, 2, 2])).unwrap());
        assert!(c.contains(&MixedVector::zero(1, 3)).unwrap());
        assert!(!Z2Z4Code::zero(1, 1).contains(&mv(&[0], &[1])).unwrap());
        assert!(c.contains(&mv(&[0], &[2])).is_err());
        let words = closure(&c);
        for b in 0..2u8 {
            for y in 0..64u8 {
                let v = mv(&[b], &[y & 3, (y >> 2) & 3, y >> 4]);
                assert_eq!(c.contains(&v).unwrap(), words.contains(&v), "{v}");
            }
        }
    }

    #[test]
    fn subcode_and_punctures() {
        let c = code(2, 2, &[&[1, 1, 2, 0], &[0, 1, 1, 1]]);
        let cb = c.order_two_subcode();
        assert_eq!(
            cb.enumerate_codewords(DEFAULT_ENUMERATION_CAP).unwrap(),
            vec![
                mv(&[0, 0], &[0, 0]),
                mv(&[0, 0], &[2, 2]),
                mv(&[1, 1], &[0, 2]),
                mv(&[1, 1], &[2, 0])
            ]
        );
        assert_eq!(
            Z2Z4Code::zero(2, 2).order_two_subcode().cardinality(),
            BigUint::from(1u8)
        );
        let cy = c.puncture_y();
        assert_eq!(cy.cardinality(), BigUint::from(8u8));
        assert!(cy.equals(&code(0, 2, &[&[2, 0], &[1, 1]])).unwrap());
        assert_eq!(
            Z2Z4Code::zero(3, 1).puncture_x().cardinality(),
            BigUint::from(1u8)
        );
        let cb_x = code_34313().order_two_subcode().puncture_x();
        assert_eq!(cb_x.code_type().gamma, 3);
    }

    #[test]
    fn canonical_form_of_code_13121() {
        let sf = code_13121().standard_form().unwrap();
        let expected = code(1, 3, &[&[1, 2, 0, 0], &[0, 1, 1, 0], &[0, 3, 0, 1]]);
        assert_eq!(sf.canonical.rows(), expected.generators());
        assert!(sf.x_permutation.is_identity());
        assert!(sf.y_permutation.is_identity());
        assert_eq!(sf.t_2, vec![vec![1]]);
        assert_eq!(sf.s_q, vec![vec![Z4::ONE], vec![Z4::THREE]]);
    }

    #[test]
    fn canonical_form_of_code_34313() {
        let c = code_34313();
        let sf = c.standard_form().unwrap();
        let expected = code(
            3,
            4,
            &[
                &[1, 0, 0, 2, 2, 0, 0],
                &[0, 1, 0, 0, 0, 0, 0],
                &[0, 0, 1, 2, 2, 0, 0],
                &[0, 0, 0, 1, 1, 1, 1],
            ],
        );
        let permuted = c.permuted(&sf.x_permutation, &sf.y_permutation).unwrap();
        assert!(permuted.equals(&sf.canonical_code()).unwrap());
        assert!(expected.equals(&sf.canonical_code()).unwrap());
        assert_eq!(sf.canonical.rows(), expected.generators());
    }

    #[test]
    fn canonical_form_is_idempotent() {
        for c in [
            code_13121(),
            code_34313(),
            code(2, 2, &[&[1, 1, 2, 0], &[0, 1, 1, 1]]),
        ] {
            let sf = c.standard_form().unwrap();
            let again = sf.canonical_code().standard_form().unwrap();
            assert_eq!(again.canonical, sf.canonical);
            assert!(again.x_permutation.is_identity());
            assert!(again.y_permutation.is_identity());
        }
    }

    #[test]
    fn degenerate_shapes() {
        let quaternary = code(0, 3, &[&[1, 2, 3], &[2, 2, 0]]);
        assert_eq!(quaternary.code_type().kappa, 0);
        quaternary.standard_form().unwrap();
        let binary = code(3, 0, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(binary.code_type(), CodeType::new(3, 0, 2, 0, 2).unwrap());
        binary.standard_form().unwrap();
        let empty = Z2Z4Code::zero(0, 0);
        assert_eq!(empty.cardinality(), BigUint::from(1u8));
        empty.standard_form().unwrap();
    }

    #[test]
    fn equality_requires_matching_shapes() {
        let a = code_13121();
        assert!(a.equals(&a).unwrap());
        let b = code(1, 3, &[&[1, 2, 2, 2], &[0, 1, 1, 0], &[0, 1, 0, 3]]);
        assert!(a.equals(&b).unwrap());
        assert!(!a.equals(&Z2Z4Code::zero(1, 3)).unwrap());
        let e61 = code(2, 1, &[&[1, 1, 0], &[0, 0, 2]]);
        let e62 = code(2, 2, &[&[1, 1, 2, 0], &[0, 1, 1, 1]]);
        assert!(matches!(codes_equal(&e61, &e62), Err(Error::Shape { .. })));
    }

    #[test]
    fn type_validity() {
        assert!(CodeType::new(1, 3, 1, 2, 1).is_ok());
        assert!(CodeType::new(0, 2, 1, 1, 1).is_err());
        assert!(CodeType::new(1, 1, 1, 2, 0).is_err());
        assert_eq!(
            CodeType::new(1, 3, 1, 2, 1).unwrap().to_string(),
            "(1,3;1,2;1)"
        );
    }
}
