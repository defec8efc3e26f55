//! Additive duals under the standard inner product
//! `<u, v> = 2 * sum(u_i v_i) + sum(u_j v_j)` (mod 4).
//!
//! The dual is computed three ways that share no code beyond the inner
//! product and the type computation:
//!
//! * [`dual_from_standard_form`] reads the parity-check matrix off the blocks
//!   of the canonical generator matrix;
//! * [`dual_via_lift`] takes the quaternary dual of `xi^-1(C)` and pulls it
//!   back through `chi^-1`;
//! * [`dual_brute_force`] scans the whole ambient group.

use std::collections::HashSet;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use crate::algebra::{
    quaternary_dot, quaternary_row_reduce, MixedMatrix, MixedVector, QuaternaryMatrix, Z4,
};
use crate::code::{CodeType, Z2Z4Code};
use crate::error::{check_cap, Error, Result};
use crate::graymap::{chi, chi_inverse, iota, lee_weight, xi};

/// Default upper bound on the size of the ambient group scanned by [`dual_brute_force`].
pub const DEFAULT_ORACLE_CAP: u64 = 1 << 22;

pub fn inner_product(u: &MixedVector, v: &MixedVector) -> Result<Z4> {
    v.ensure_shape(u.alpha(), u.beta())?;
    Ok(inner_product_unchecked(u, v))
}

pub(crate) fn inner_product_unchecked(u: &MixedVector, v: &MixedVector) -> Z4 {
    let binary = u
        .binary()
        .iter()
        .zip(v.binary())
        .filter(|(&a, &b)| a & b == 1)
        .count();
    Z4::new((2 * (binary & 1)) as u8) + quaternary_dot(u.quaternary(), v.quaternary())
}

/// Evaluates both sides of `<chi(u), v>_4 = <u, xi(v)>` and reports whether they agree.
pub fn lift_inner_product_identity_check(u: &MixedVector, v: &[Z4]) -> Result<bool> {
    if v.len() != u.alpha() + u.beta() {
        return Err(Error::shape(
            format!("length {}", u.alpha() + u.beta()),
            format!("length {}", v.len()),
        ));
    }
    let lifted = quaternary_dot(&chi(u), v);
    let reduced = inner_product_unchecked(u, &xi(v, u.alpha())?);
    Ok(lifted == reduced)
}

/// Type of the dual of a code of type `t`.
pub fn dual_type(t: &CodeType) -> CodeType {
    CodeType {
        alpha: t.alpha,
        beta: t.beta,
        gamma: t.alpha + t.gamma - 2 * t.kappa,
        delta: t.beta + t.kappa - t.gamma - t.delta,
        kappa: t.alpha - t.kappa,
    }
}

/// The dual of `c`; same as [`dual_from_standard_form`].
pub fn dual(c: &Z2Z4Code) -> Result<Z2Z4Code> {
    dual_from_standard_form(c)
}

/// A generator matrix of the dual, i.e. a parity-check matrix of `c`,
/// in the original coordinates of `c`.
pub fn parity_check_matrix(c: &Z2Z4Code) -> Result<MixedMatrix> {
    Ok(dual_from_standard_form(c)?.generator_matrix())
}

/// Builds the parity-check matrix from the canonical blocks:
///
/// ```text
/// ( T_b^t  I_(alpha-kappa) | 0  0           2 S_b^t          )
/// ( 0      0               | 0  2I          2 R^t            )
/// ( T_2^t  0               | I  T_1^t       -(S_q + R T_1)^t )
/// ```
///
/// then undoes the coordinate permutations of the canonical form.
pub fn dual_from_standard_form(c: &Z2Z4Code) -> Result<Z2Z4Code> {
    let sf = c.standard_form()?;
    let t = sf.code_type;
    let (alpha, beta, kappa, delta) = (t.alpha, t.beta, t.kappa, t.delta);
    let gk = t.gamma - kappa;
    let ak = alpha - kappa;
    let f = sf.free_width();
    let unit = |k: usize, n: usize| (0..n).map(move |i| u8::from(i == k));

    let mut rows = Vec::with_capacity(ak + gk + f);
    for i in 0..ak {
        let binary = (0..kappa)
            .map(|r| sf.t_b[r][i])
            .chain(unit(i, ak))
            .collect();
        let quaternary = std::iter::repeat_n(Z4::ZERO, f + gk)
            .chain((0..delta).map(|j| Z4::new(2 * sf.s_b[j][i])))
            .collect();
        rows.push(MixedVector::from_parts_unchecked(binary, quaternary));
    }
    for k in 0..gk {
        let quaternary = std::iter::repeat_n(Z4::ZERO, f)
            .chain(unit(k, gk).map(|b| Z4::new(2 * b)))
            .chain((0..delta).map(|j| Z4::new(2 * sf.r[j][k])))
            .collect();
        rows.push(MixedVector::from_parts_unchecked(
            vec![0; alpha],
            quaternary,
        ));
    }
    for l in 0..f {
        let binary = (0..kappa)
            .map(|r| sf.t_2[r][l])
            .chain(std::iter::repeat_n(0, ak))
            .collect();
        let quaternary = unit(l, f)
            .map(Z4::new)
            .chain((0..gk).map(|k| Z4::new(sf.t_1[k][l])))
            .chain((0..delta).map(|j| {
                let rt: Z4 =
                    (0..gk).fold(Z4::ZERO, |acc, k| acc + Z4::new(sf.r[j][k] * sf.t_1[k][l]));
                -(sf.s_q[j][l] + rt)
            }))
            .collect();
        rows.push(MixedVector::from_parts_unchecked(binary, quaternary));
    }

    let x_back = sf.x_permutation.inverse();
    let y_back = sf.y_permutation.inverse();
    let rows = rows.iter().map(|h| h.permuted(&x_back, &y_back)).collect();
    Z2Z4Code::new(alpha, beta, rows)
}

/// Computes the dual as `chi^-1( xi^-1(C)^perp )`.
///
/// `xi^-1(C)` is generated by `2 e_i` for each binary coordinate together
/// with `iota` of the generators of `c`. Its quaternary dual is read from
/// its standard form `(2T 2I 0 / S R I)` as `(0 2I 2R^t / I T^t -(S+RT)^t)`.
pub fn dual_via_lift(c: &Z2Z4Code) -> Result<Z2Z4Code> {
    let (alpha, beta) = (c.alpha(), c.beta());
    let n = alpha + beta;
    let mut lifted: Vec<Vec<Z4>> = (0..alpha)
        .map(|i| {
            (0..n)
                .map(|k| if k == i { Z4::TWO } else { Z4::ZERO })
                .collect()
        })
        .collect();
    lifted.extend(c.generators().iter().map(iota));
    let red = quaternary_row_reduce(&QuaternaryMatrix::new(n, lifted)?);
    let (g, d) = (red.order2_count, red.order4_count);
    let f = n - g - d;
    let rows = red.reduced.rows();
    let t = |k: usize, l: usize| rows[k][l].value() / 2;
    let r = |j: usize, k: usize| rows[g + j][f + k];
    let s = |j: usize, l: usize| rows[g + j][l];

    let mut dual_rows: Vec<Vec<Z4>> = Vec::with_capacity(g + f);
    for k in 0..g {
        dual_rows.push(
            (0..n)
                .map(|col| {
                    if col < f {
                        Z4::ZERO
                    } else if col < f + g {
                        if col - f == k {
                            Z4::TWO
                        } else {
                            Z4::ZERO
                        }
                    } else {
                        r(col - f - g, k) * Z4::TWO
                    }
                })
                .collect(),
        );
    }
    for l in 0..f {
        dual_rows.push(
            (0..n)
                .map(|col| {
                    if col < f {
                        Z4::from_bit(u8::from(col == l))
                    } else if col < f + g {
                        Z4::new(t(col - f, l))
                    } else {
                        let j = col - f - g;
                        let rt = (0..g).fold(Z4::ZERO, |acc, k| acc + r(j, k) * Z4::new(t(k, l)));
                        -(s(j, l) + rt)
                    }
                })
                .collect(),
        );
    }

    let back = red.column_permutation.inverse();
    let rows = dual_rows
        .iter()
        .map(|h| {
            chi_inverse(&back.apply(h), alpha).map_err(|e| {
                Error::Internal(format!(
                    "quaternary dual of xi^-1(C) is odd on the binary block: {e}"
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Z2Z4Code::new(alpha, beta, rows)
}

/// Scans all of `Z2^alpha x Z4^beta` and keeps the vectors orthogonal to
/// every generator. The returned generators are a greedy basis of that set.
pub fn dual_brute_force(c: &Z2Z4Code, cap: u64) -> Result<Z2Z4Code> {
    let (alpha, beta) = (c.alpha(), c.beta());
    check_cap(alpha + 2 * beta, cap)?;
    let mut generators = Vec::new();
    let mut span: HashSet<MixedVector> = HashSet::from([MixedVector::zero(alpha, beta)]);
    for_each_ambient(alpha, beta, |v| {
        if !c
            .generators()
            .iter()
            .all(|g| inner_product_unchecked(g, v).is_zero())
            || span.contains(v)
        {
            return;
        }
        let order = v.order() as u64;
        let mut grown = HashSet::with_capacity(span.len() * order as usize);
        for s in &span {
            for k in 0..order {
                grown.insert(s.add_unchecked(&v.scale(k)));
            }
        }
        span = grown;
        generators.push(v.clone());
    });
    Z2Z4Code::new(alpha, beta, generators)
}

fn for_each_ambient(alpha: usize, beta: usize, mut f: impl FnMut(&MixedVector)) {
    let mut binary = vec![0u8; alpha];
    let mut quaternary = vec![Z4::ZERO; beta];
    loop {
        f(&MixedVector::from_parts_unchecked(
            binary.clone(),
            quaternary.clone(),
        ));
        let mut carried = true;
        for q in quaternary.iter_mut().rev() {
            *q += Z4::ONE;
            if !q.is_zero() {
                carried = false;
                break;
            }
        }
        if carried {
            for b in binary.iter_mut().rev() {
                *b ^= 1;
                if *b == 1 {
                    carried = false;
                    break;
                }
            }
        }
        if carried {
            return;
        }
    }
}

/// Coefficients `A_0..A_n` of the Lee weight distribution, `n = alpha + 2 beta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    coefficients: Vec<BigUint>,
}

impl WeightEnumerator {
    pub fn new(coefficients: Vec<BigUint>) -> Self {
        WeightEnumerator { coefficients }
    }

    pub fn from_counts(counts: &[u64]) -> Self {
        WeightEnumerator {
            coefficients: counts.iter().map(|&c| BigUint::from(c)).collect(),
        }
    }

    /// The length `n`; there are `n + 1` coefficients.
    pub fn length(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coefficients
    }

    pub fn coefficient(&self, weight: usize) -> BigUint {
        self.coefficients.get(weight).cloned().unwrap_or_default()
    }

    /// Sum of all coefficients, the size of the code.
    pub fn total(&self) -> BigUint {
        self.coefficients.iter().sum()
    }

    /// `sum (-1)^i A_i`.
    pub fn alternating_sum(&self) -> BigInt {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let a = BigInt::from(a.clone());
                if i % 2 == 0 {
                    a
                } else {
                    -a
                }
            })
            .sum()
    }

    /// Smallest nonzero weight with a nonzero coefficient.
    pub fn minimum_weight(&self) -> Option<usize> {
        (1..self.coefficients.len()).find(|&i| !self.coefficients[i].is_zero())
    }
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.coefficients.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

pub fn weight_enumerator(c: &Z2Z4Code, cap: u64) -> Result<WeightEnumerator> {
    let mut counts = vec![0u64; c.length() + 1];
    c.for_each_codeword(cap, |w| counts[lee_weight(w)] += 1)?;
    Ok(WeightEnumerator::from_counts(&counts))
}

/// `(1/|C|) W(X + Y, X - Y)`, expanded exactly.
///
/// Fails when the result is not a vector of non-negative integers, which
/// means `w` was not the enumerator of a code of size `code_size`.
pub fn macwilliams_transform(
    w: &WeightEnumerator,
    code_size: &BigUint,
) -> Result<WeightEnumerator> {
    let n = w.length();
    if code_size.is_zero() || code_size.count_ones() != 1 || code_size.bits() > n as u64 + 1 {
        return Err(Error::Inconsistent(format!(
            "code size {code_size} does not divide 2^{n}"
        )));
    }
    if &w.total() != code_size {
        return Err(Error::Inconsistent(format!(
            "coefficients sum to {}, not to the code size {code_size}",
            w.total()
        )));
    }

    let mut binom = vec![vec![BigInt::one()]];
    for m in 1..=n {
        let prev = &binom[m - 1];
        let mut row = vec![BigInt::one(); m + 1];
        for k in 1..m {
            row[k] = &prev[k - 1] + &prev[k];
        }
        binom.push(row);
    }

    let mut out = vec![BigInt::zero(); n + 1];
    for (i, a) in w.coefficients().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let a = BigInt::from(a.clone());
        // (X+Y)^(n-i) (X-Y)^i, coefficient of X^(n-j) Y^j.
        for (s, bs) in binom[i].iter().enumerate() {
            let signed = if s % 2 == 0 { &a * bs } else { -(&a * bs) };
            for (t, bt) in binom[n - i].iter().enumerate() {
                out[s + t] += &signed * bt;
            }
        }
    }

    let size = BigInt::from(code_size.clone());
    out.into_iter()
        .enumerate()
        .map(|(j, b)| {
            if b.is_negative() || !(&b % &size).is_zero() {
                return Err(Error::Inconsistent(format!(
                    "coefficient {j} of the transform is {b}/{size}, not a non-negative integer"
                )));
            }
            let (sign, mag) = (b / &size).into_parts();
            debug_assert!(sign != Sign::Minus);
            Ok(mag)
        })
        .collect::<Result<Vec<_>>>()
        .map(WeightEnumerator::new)
}
