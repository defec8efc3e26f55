//! Self-orthogonality, self-duality and the structure of self-dual codes.
//!
//! A self-dual code of length `alpha + 2 beta` has `|C|^2 = 2^(alpha + 2 beta)`
//! and type `(2 kappa, beta; beta + kappa - 2 delta, delta; kappa)`. The
//! projections `C_X` and `C_Y` are judged with the classical binary and
//! quaternary dot products, not with the mixed inner product.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::algebra::{binary_rank, quaternary_dot, MixedVector, Z4};
use crate::code::{CodeType, Z2Z4Code};
use crate::duality::{dual, inner_product_unchecked, weight_enumerator};
use crate::error::{Error, Result};

/// Summary of the self-duality analysis of one code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfDualReport {
    pub is_self_orthogonal: bool,
    pub is_self_dual: bool,
    pub is_antipodal: bool,
    pub is_separable: bool,
    pub cx_self_dual: bool,
    /// Only computed for self-dual codes.
    pub replication_exponent_r: Option<usize>,
}

pub fn is_self_orthogonal(c: &Z2Z4Code) -> bool {
    let g = c.generators();
    (0..g.len()).all(|i| (i..g.len()).all(|j| inner_product_unchecked(&g[i], &g[j]).is_zero()))
}

pub fn is_self_dual(c: &Z2Z4Code) -> bool {
    2 * c.log2_cardinality() == c.alpha() + 2 * c.beta() && is_self_orthogonal(c)
}

/// Whether `t` has the shape `(2 kappa, beta; beta + kappa - 2 delta, delta; kappa)`.
pub fn self_dual_type_check(t: &CodeType) -> bool {
    t.alpha == 2 * t.kappa && t.gamma + 2 * t.delta == t.beta + t.kappa
}

/// Number of units (1 or 3) in a quaternary vector.
pub fn odd_coordinate_count(y: &[Z4]) -> usize {
    y.iter().filter(|q| q.is_unit()).count()
}

fn require_self_dual(c: &Z2Z4Code, what: &str) -> Result<()> {
    if is_self_dual(c) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{what} needs a self-dual code"
        )))
    }
}

/// Checks that every codeword `(x|y)` has `p(y) = 2 w(x)` mod 4, where `p`
/// counts odd coordinates, and that `(0|2...2)` is a codeword.
pub fn parity_law_check(c: &Z2Z4Code, cap: u64) -> Result<bool> {
    require_self_dual(c, "the parity law check")?;
    let mut ok = true;
    c.for_each_codeword(cap, |w| {
        let wx = w.binary().iter().filter(|&&b| b == 1).count();
        ok &= (odd_coordinate_count(w.quaternary()) + 2 * wx).is_multiple_of(4);
    })?;
    let all_two = MixedVector::new(vec![0; c.alpha()], vec![Z4::TWO; c.beta()])?;
    Ok(ok && c.contains(&all_two)?)
}

/// `(1...1|2...2)`, the Gray preimage of the all-ones vector.
pub fn antipodal_vector(alpha: usize, beta: usize) -> MixedVector {
    MixedVector::new(vec![1; alpha], vec![Z4::TWO; beta]).expect("bits are 0 or 1")
}

/// Whether the Gray image of `c` is closed under complement.
pub fn is_antipodal(c: &Z2Z4Code) -> bool {
    c.contains(&antipodal_vector(c.alpha(), c.beta()))
        .expect("shapes match")
}

/// Decides antipodality of a self-dual code from `sum (-1)^i A_i`, which
/// must be `|C|` or `0`, and checks it against [`is_antipodal`].
pub fn antipodality_from_enumerator(c: &Z2Z4Code, cap: u64) -> Result<bool> {
    require_self_dual(c, "the weight enumerator antipodality test")?;
    let s = weight_enumerator(c, cap)?.alternating_sum();
    let from_sum = if s == BigInt::from(c.cardinality()) {
        true
    } else if s.is_zero() {
        false
    } else {
        return Err(Error::Internal(format!(
            "alternating weight sum {s} of a self-dual code is neither 0 nor |C| = {}",
            c.cardinality()
        )));
    };
    if from_sum != is_antipodal(c) {
        return Err(Error::Internal(format!(
            "alternating weight sum says antipodal = {from_sum}, membership of (1|2) disagrees"
        )));
    }
    Ok(from_sum)
}

fn bit_dot(a: &[u8], b: &[u8]) -> u8 {
    a.iter().zip(b).fold(0, |acc, (x, y)| acc ^ (x & y))
}

fn x_rows(c: &Z2Z4Code) -> Vec<Vec<u8>> {
    c.generators().iter().map(|g| g.binary().to_vec()).collect()
}

fn y_rows(c: &Z2Z4Code) -> Vec<Vec<Z4>> {
    c.generators()
        .iter()
        .map(|g| g.quaternary().to_vec())
        .collect()
}

/// `log2 |C_X|`.
pub fn log2_cx(c: &Z2Z4Code) -> usize {
    binary_rank(&x_rows(c))
}

/// `log2 |C_Y|`.
pub fn log2_cy(c: &Z2Z4Code) -> usize {
    c.puncture_y().log2_cardinality()
}

/// `C_X` is self-orthogonal for the mod 2 dot product.
pub fn cx_self_orthogonal(c: &Z2Z4Code) -> bool {
    let rows = x_rows(c);
    rows.iter().all(|a| rows.iter().all(|b| bit_dot(a, b) == 0))
}

/// `C_X` is a binary self-dual code.
pub fn cx_self_dual(c: &Z2Z4Code) -> bool {
    2 * log2_cx(c) == c.alpha() && cx_self_orthogonal(c)
}

/// `C_Y` is self-orthogonal for the quaternary dot product.
pub fn cy_self_orthogonal(c: &Z2Z4Code) -> bool {
    let rows = y_rows(c);
    rows.iter()
        .all(|a| rows.iter().all(|b| quaternary_dot(a, b).is_zero()))
}

/// `C_Y` is a quaternary self-dual code.
pub fn cy_self_dual(c: &Z2Z4Code) -> bool {
    log2_cy(c) == c.beta() && cy_self_orthogonal(c)
}

/// Whether `C = C_X (+) C_Y`. Since `C` always sits inside the direct sum
/// of its projections, comparing sizes is enough.
pub fn is_separable(c: &Z2Z4Code) -> bool {
    c.log2_cardinality() == log2_cx(c) + log2_cy(c)
}

/// For a self-dual code the following are all equivalent: `C_X` binary
/// self-orthogonal, binary self-dual, `|C_X| = 2^kappa`, `C_Y` quaternary
/// self-orthogonal, quaternary self-dual, `|C_Y| = 2^beta`, and `C`
/// separable. Returns the common value; a disagreement is an internal error.
pub fn separability_chain(c: &Z2Z4Code) -> Result<bool> {
    require_self_dual(c, "the separability equivalences")?;
    let kappa = c.code_type().kappa;
    let flags = [
        ("C_X self-orthogonal", cx_self_orthogonal(c)),
        ("C_X self-dual", cx_self_dual(c)),
        ("|C_X| = 2^kappa", log2_cx(c) == kappa),
        ("C_Y self-orthogonal", cy_self_orthogonal(c)),
        ("C_Y self-dual", cy_self_dual(c)),
        ("|C_Y| = 2^beta", log2_cy(c) == c.beta()),
        ("separable", is_separable(c)),
    ];
    let value = flags[0].1;
    if let Some((name, v)) = flags.iter().find(|(_, v)| *v != value) {
        return Err(Error::Internal(format!(
            "separability equivalences disagree: {} is {value} but {name} is {v}",
            flags[0].0
        )));
    }
    Ok(value)
}

/// `r` such that every element of `C_Y` occurs `2^r` times in `C`, found by
/// counting the codewords `(x|0)`. Checks `r <= kappa` and
/// `|C_Y| = |C| / 2^r >= 2^beta`.
pub fn replication_exponent(c: &Z2Z4Code, cap: u64) -> Result<usize> {
    require_self_dual(c, "the replication exponent")?;
    let mut count = 0u64;
    c.for_each_codeword(cap, |w| {
        if w.quaternary().iter().all(|q| q.is_zero()) {
            count += 1;
        }
    })?;
    if !count.is_power_of_two() {
        return Err(Error::Internal(format!(
            "{count} codewords vanish on Y, not a power of two"
        )));
    }
    let r = count.trailing_zeros() as usize;
    let (log2_c, kappa) = (c.log2_cardinality(), c.code_type().kappa);
    if r > kappa || log2_c - r != log2_cy(c) || log2_c - r < c.beta() {
        return Err(Error::Internal(format!(
            "replication exponent {r} violates its bounds (kappa = {kappa}, log2 |C| = {log2_c}, log2 |C_Y| = {})",
            log2_cy(c)
        )));
    }
    Ok(r)
}

/// Whether the binary projection of the order-two subcode is a binary
/// self-dual code of length `2 kappa`. Holds for every self-dual code.
pub fn order_two_projection_self_dual(c: &Z2Z4Code) -> bool {
    let sub = c.order_two_subcode();
    cx_self_dual(&sub) && c.alpha() == 2 * c.code_type().kappa
}

/// Whether `C_X^perp (+) C_Y^perp` is contained in `C^perp`, with the duals
/// of the projections taken classically.
pub fn projection_duals_contained(c: &Z2Z4Code) -> Result<bool> {
    let (alpha, beta) = (c.alpha(), c.beta());
    let dx = dual(&c.puncture_x())?;
    let dy = dual(&c.puncture_y())?;
    let d = dual(c)?;
    for g in dx.generators() {
        if !d.contains(&MixedVector::new(
            g.binary().to_vec(),
            vec![Z4::ZERO; beta],
        )?)? {
            return Ok(false);
        }
    }
    for g in dy.generators() {
        if !d.contains(&MixedVector::new(vec![0; alpha], g.quaternary().to_vec())?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn report(c: &Z2Z4Code, cap: u64) -> Result<SelfDualReport> {
    let is_self_dual = is_self_dual(c);
    if !is_self_dual {
        return Ok(SelfDualReport {
            is_self_orthogonal: is_self_orthogonal(c),
            is_self_dual,
            is_antipodal: is_antipodal(c),
            is_separable: is_separable(c),
            cx_self_dual: cx_self_dual(c),
            replication_exponent_r: None,
        });
    }
    Ok(SelfDualReport {
        is_self_orthogonal: true,
        is_self_dual,
        is_antipodal: antipodality_from_enumerator(c, cap)?,
        is_separable: separability_chain(c)?,
        cx_self_dual: cx_self_dual(c),
        replication_exponent_r: Some(replication_exponent(c, cap)?),
    })
}

/// `C_X (+) C_Y` for a code with `beta = 0` and a code with `alpha = 0`.
pub fn direct_sum(cx: &Z2Z4Code, cy: &Z2Z4Code) -> Result<Z2Z4Code> {
    if cx.beta() != 0 || cy.alpha() != 0 {
        return Err(Error::shape(
            "a (alpha, 0) code and a (0, beta) code",
            format!(
                "({}, {}) and ({}, {})",
                cx.alpha(),
                cx.beta(),
                cy.alpha(),
                cy.beta()
            ),
        ));
    }
    let (alpha, beta) = (cx.alpha(), cy.beta());
    let mut rows = Vec::new();
    for g in cx.generators() {
        rows.push(MixedVector::new(g.binary().to_vec(), vec![Z4::ZERO; beta])?);
    }
    for g in cy.generators() {
        rows.push(MixedVector::new(vec![0; alpha], g.quaternary().to_vec())?);
    }
    Z2Z4Code::new(alpha, beta, rows)
}

struct RowBuilder {
    alpha: usize,
    beta: usize,
    rows: Vec<MixedVector>,
}

impl RowBuilder {
    fn new(alpha: usize, beta: usize) -> Self {
        RowBuilder {
            alpha,
            beta,
            rows: Vec::new(),
        }
    }

    /// Adds a row with ones at `ones` on X and the given `(column, value)` entries on Y.
    fn push(&mut self, ones: &[usize], y: impl IntoIterator<Item = (usize, u8)>) {
        let mut binary = vec![0u8; self.alpha];
        for &i in ones {
            binary[i] = 1;
        }
        let mut quaternary = vec![Z4::ZERO; self.beta];
        for (j, v) in y {
            quaternary[j] = Z4::new(v);
        }
        self.rows
            .push(MixedVector::from_parts_unchecked(binary, quaternary));
    }

    fn finish(self) -> Z2Z4Code {
        Z2Z4Code::new_unchecked(self.alpha, self.beta, self.rows)
    }
}

fn check_family(kappa: usize, delta: usize, beta: usize, strict: bool) -> Result<()> {
    let delta_ok = if strict {
        delta < kappa
    } else {
        delta <= kappa
    };
    if !delta_ok || 2 * delta > beta {
        let rel = if strict { "<" } else { "<=" };
        return Err(Error::InvalidParameters(format!(
            "need delta {rel} kappa and 2 delta <= beta, got kappa = {kappa}, delta = {delta}, beta = {beta}"
        )));
    }
    Ok(())
}

fn family_ab(kappa: usize, delta: usize, beta: usize, twisted: bool) -> Result<Z2Z4Code> {
    check_family(kappa, delta, beta, false)?;
    let mid = beta - 2 * delta;
    let mut b = RowBuilder::new(2 * kappa, beta);
    for i in 0..delta {
        b.push(&[i, kappa + i], [(i, 2)]);
    }
    for i in 0..kappa - delta {
        b.push(&[delta + i, kappa + delta + i], []);
    }
    for i in 0..mid {
        let column = if twisted { 0..delta } else { 0..0 };
        b.push(&[], column.map(|j| (j, 2)).chain([(delta + i, 2)]));
    }
    for i in 0..delta {
        let u = if twisted { delta..delta + mid } else { 0..0 };
        b.push(
            &[kappa + i],
            [(i, 1), (beta - delta + i, 1)]
                .into_iter()
                .chain(u.map(|j| (j, 1))),
        );
    }
    Ok(b.finish())
}

/// The self-dual code of type `(2 kappa, beta; beta + kappa - 2 delta, delta; kappa)`
/// generated by
///
/// ```text
/// ( I 0 I 0 | 2I 0  0 )
/// ( 0 I 0 I | 0  0  0 )
/// ( 0 0 0 0 | 0  2I 0 )
/// ( 0 0 I 0 | I  0  I )
/// ```
///
/// Requires `delta <= kappa` and `2 delta <= beta`.
pub fn build_family_a(kappa: usize, delta: usize, beta: usize) -> Result<Z2Z4Code> {
    family_ab(kappa, delta, beta, false)
}

/// Like [`build_family_a`] with an all-2 block under the first `2I` and an
/// all-ones block in the middle of the order-four rows:
///
/// ```text
/// ( I 0 I 0 | 2I 0  0 )
/// ( 0 I 0 I | 0  0  0 )
/// ( 0 0 0 0 | 2  2I 0 )
/// ( 0 0 I 0 | I  1  I )
/// ```
///
/// For `delta >= 1` it is self-dual exactly when `beta - 2 delta = 0` mod 4.
pub fn build_family_b(kappa: usize, delta: usize, beta: usize) -> Result<Z2Z4Code> {
    family_ab(kappa, delta, beta, true)
}

/// The code generated by
///
/// ```text
/// ( I 0 0 I 0 0 | 2I 0  0 )
/// ( 0 1 0 0 1 0 | 2  0  0 )
/// ( 0 0 I 0 0 I | 0  0  0 )
/// ( 0 0 0 0 0 0 | 2  2I 0 )
/// ( 0 0 0 I 1 0 | I  1  I )
/// ```
///
/// with binary column blocks of widths `delta, 1, kappa - delta - 1` repeated
/// twice and quaternary blocks of widths `delta, beta - 2 delta, delta`.
/// For `delta >= 1` it is self-dual exactly when `beta - 2 delta = 2` mod 4,
/// and then its Gray image is antipodal while `C_X` is not self-dual.
/// Requires `delta < kappa` and `2 delta <= beta`.
pub fn build_family_c(kappa: usize, delta: usize, beta: usize) -> Result<Z2Z4Code> {
    check_family(kappa, delta, beta, true)?;
    let mid = beta - 2 * delta;
    let mut b = RowBuilder::new(2 * kappa, beta);
    for i in 0..delta {
        b.push(&[i, kappa + i], [(i, 2)]);
    }
    b.push(&[delta, kappa + delta], (0..delta).map(|j| (j, 2)));
    for i in 0..kappa - delta - 1 {
        b.push(&[delta + 1 + i, kappa + delta + 1 + i], []);
    }
    for i in 0..mid {
        b.push(&[], (0..delta).map(|j| (j, 2)).chain([(delta + i, 2)]));
    }
    for i in 0..delta {
        let y = [(i, 1), (beta - delta + i, 1)]
            .into_iter()
            .chain((delta..delta + mid).map(|j| (j, 1)));
        b.push(&[kappa + i, kappa + delta], y);
    }
    Ok(b.finish())
}

/// `2^(kappa + beta)`, the size of a self-dual code with these parameters.
pub fn self_dual_cardinality(kappa: usize, beta: usize) -> BigUint {
    BigUint::one() << (kappa + beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_ENUMERATION_CAP as CAP;

    fn code(alpha: usize, beta: usize, rows: &[&[u8]]) -> Z2Z4Code {
        Z2Z4Code::from_digit_rows(
            alpha,
            beta,
            &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    fn self_dual_21201() -> Z2Z4Code {
        code(2, 1, &[&[1, 1, 0], &[0, 0, 2]])
    }

    fn self_dual_22111() -> Z2Z4Code {
        code(2, 2, &[&[1, 1, 2, 0], &[0, 1, 1, 1]])
    }

    fn self_dual_44412() -> Z2Z4Code {
        code(
            4,
            4,
            &[
                &[1, 0, 1, 0, 2, 0, 0, 0],
                &[0, 1, 0, 1, 2, 0, 0, 0],
                &[0, 0, 0, 0, 2, 2, 0, 0],
                &[0, 0, 0, 0, 2, 0, 2, 0],
                &[0, 0, 1, 1, 1, 1, 1, 1],
            ],
        )
    }

    #[test]
    fn predicates_on_examples() {
        for (c, t) in [
            (self_dual_21201(), (2, 1, 2, 0, 1)),
            (self_dual_22111(), (2, 2, 1, 1, 1)),
        ] {
            assert!(is_self_dual(&c));
            let t = CodeType::new(t.0, t.1, t.2, t.3, t.4).unwrap();
            assert_eq!(c.code_type(), t);
            assert!(self_dual_type_check(&t));
        }
        let zero = Z2Z4Code::zero(2, 1);
        assert!(is_self_orthogonal(&zero));
        assert!(!is_self_dual(&zero));
        assert!(self_dual_type_check(&CodeType::new(4, 4, 4, 1, 2).unwrap()));
        assert!(!self_dual_type_check(
            &CodeType::new(1, 3, 1, 2, 1).unwrap()
        ));
    }

    #[test]
    fn parity_laws() {
        assert!(parity_law_check(&self_dual_22111(), CAP).unwrap());
        assert!(parity_law_check(&self_dual_21201(), CAP).unwrap());
        assert_eq!(odd_coordinate_count(&[Z4::ZERO, Z4::TWO]), 0);
        assert_eq!(odd_coordinate_count(&[Z4::ONE, Z4::ONE]), 2);
        assert!(matches!(
            parity_law_check(&Z2Z4Code::zero(2, 1), CAP),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn antipodality() {
        assert!(is_antipodal(&self_dual_21201()));
        assert!(!is_antipodal(&self_dual_22111()));
        assert!(is_antipodal(&self_dual_44412()));
        assert!(antipodality_from_enumerator(&self_dual_21201(), CAP).unwrap());
        assert!(!antipodality_from_enumerator(&self_dual_22111(), CAP).unwrap());
        assert!(antipodality_from_enumerator(&self_dual_44412(), CAP).unwrap());
    }

    #[test]
    fn separability() {
        assert!(separability_chain(&self_dual_21201()).unwrap());
        assert!(!separability_chain(&self_dual_22111()).unwrap());
        assert!(!separability_chain(&self_dual_44412()).unwrap());
        assert!(!cx_self_dual(&self_dual_44412()));
        assert!(cx_self_dual(&self_dual_21201()));
        assert!(is_separable(&Z2Z4Code::zero(2, 2)));
        assert!(separability_chain(&Z2Z4Code::zero(2, 2)).is_err());
    }

    #[test]
    fn replication() {
        assert_eq!(replication_exponent(&self_dual_21201(), CAP).unwrap(), 1);
        assert_eq!(replication_exponent(&self_dual_22111(), CAP).unwrap(), 0);
        assert!(replication_exponent(&Z2Z4Code::zero(1, 1), CAP).is_err());
    }

    #[test]
    fn reports() {
        let r = report(&self_dual_22111(), CAP).unwrap();
        assert_eq!(
            r,
            SelfDualReport {
                is_self_orthogonal: true,
                is_self_dual: true,
                is_antipodal: false,
                is_separable: false,
                cx_self_dual: false,
                replication_exponent_r: Some(0),
            }
        );
        let r = report(&Z2Z4Code::zero(2, 1), CAP).unwrap();
        assert!(r.is_self_orthogonal && !r.is_self_dual && r.replication_exponent_r.is_none());
    }

    #[test]
    fn family_examples() {
        assert_eq!(
            build_family_a(1, 1, 2).unwrap().generators(),
            self_dual_22111().generators()
        );
        assert_eq!(
            build_family_a(1, 0, 1).unwrap().generators(),
            self_dual_21201().generators()
        );
        assert_eq!(
            build_family_c(2, 1, 4).unwrap().generators(),
            self_dual_44412().generators()
        );
        let a = build_family_a(3, 2, 6).unwrap();
        assert!(is_self_dual(&a));
        assert_eq!(a.code_type(), CodeType::new(6, 6, 5, 2, 3).unwrap());
        assert!(is_self_dual(&build_family_b(2, 1, 6).unwrap()));
        assert!(!is_self_dual(&build_family_b(2, 1, 4).unwrap()));
        assert!(is_self_dual(&build_family_b(1, 1, 2).unwrap()));
        assert!(!is_self_dual(&build_family_c(2, 1, 6).unwrap()));
    }

    #[test]
    fn family_parameter_checks() {
        assert!(matches!(
            build_family_a(1, 2, 4),
            Err(Error::InvalidParameters(_))
        ));
        assert!(build_family_b(2, 2, 3).is_err());
        assert!(build_family_c(2, 2, 4).is_err());
        assert!(build_family_c(0, 0, 0).is_err());
    }

    #[test]
    fn direct_sums() {
        let cx = code(2, 0, &[&[1, 1]]);
        let cy = code(0, 1, &[&[2]]);
        let c = direct_sum(&cx, &cy).unwrap();
        assert!(c.equals(&self_dual_21201()).unwrap());
        assert!(direct_sum(&cy, &cx).is_err());
    }

    #[test]
    fn structural_checks() {
        for c in [self_dual_21201(), self_dual_22111(), self_dual_44412()] {
            assert!(order_two_projection_self_dual(&c));
            assert!(projection_duals_contained(&c).unwrap());
        }
    }
}
