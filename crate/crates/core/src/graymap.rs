//! The Gray map and the alphabet-change maps between Z2 and Z4.
//!
//! `gray_extend` copies the binary block and replaces each quaternary
//! coordinate by two bits (0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10). It is an
//! isometry from Lee distance to Hamming distance.
//!
//! The maps `chi`, `xi` and `iota` move between `Z2^alpha x Z4^beta` and
//! `Z4^(alpha+beta)` by acting on the binary block only:
//! `chi` sends a bit `b` to `2b`, `iota` sends it to `b`, and `xi` reduces
//! a quaternary entry modulo 2.

use std::fmt;

use crate::algebra::{MixedVector, Z4};
use crate::error::{Error, Result};

/// A vector over Z2.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BinaryVector(Vec<u8>);

impl BinaryVector {
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        if let Some((column, &value)) = entries.iter().enumerate().find(|(_, &b)| b > 1) {
            return Err(Error::InvalidEntry {
                row: 0,
                column,
                value: value as u64,
                reason: "binary entries must be 0 or 1",
            });
        }
        Ok(BinaryVector(entries))
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }
}

impl fmt::Display for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

pub fn gray_scalar(y: Z4) -> (u8, u8) {
    match y.value() {
        0 => (0, 0),
        1 => (0, 1),
        2 => (1, 1),
        _ => (1, 0),
    }
}

pub fn gray_scalar_inverse(bits: (u8, u8)) -> Z4 {
    match (bits.0 & 1, bits.1 & 1) {
        (0, 0) => Z4::ZERO,
        (0, 1) => Z4::ONE,
        (1, 1) => Z4::TWO,
        _ => Z4::THREE,
    }
}

/// The extended Gray map onto `Z2^(alpha + 2 beta)`.
pub fn gray_extend(u: &MixedVector) -> BinaryVector {
    let mut out = Vec::with_capacity(u.alpha() + 2 * u.beta());
    out.extend_from_slice(u.binary());
    for &y in u.quaternary() {
        let (a, b) = gray_scalar(y);
        out.push(a);
        out.push(b);
    }
    BinaryVector(out)
}

/// Inverse of [`gray_extend`]; `alpha` says how many leading bits are binary coordinates.
pub fn gray_inverse(b: &BinaryVector, alpha: usize) -> Result<MixedVector> {
    let n = b.len();
    if alpha > n || !(n - alpha).is_multiple_of(2) {
        return Err(Error::shape(
            format!("length alpha + 2*beta with alpha = {alpha}"),
            format!("length {n}"),
        ));
    }
    let bits = b.entries();
    let quaternary = bits[alpha..]
        .chunks_exact(2)
        .map(|p| gray_scalar_inverse((p[0], p[1])))
        .collect();
    Ok(MixedVector::from_parts_unchecked(
        bits[..alpha].to_vec(),
        quaternary,
    ))
}

/// Hamming weight on the binary block plus Lee weight on the quaternary block.
pub fn lee_weight(u: &MixedVector) -> usize {
    u.binary().iter().filter(|&&b| b == 1).count()
        + u.quaternary().iter().map(|y| y.lee_weight()).sum::<usize>()
}

pub fn lee_distance(u: &MixedVector, v: &MixedVector) -> Result<usize> {
    Ok(lee_weight(&u.checked_sub(v)?))
}

pub fn hamming_weight(b: &BinaryVector) -> usize {
    b.weight()
}

pub fn hamming_distance(a: &BinaryVector, b: &BinaryVector) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::shape(
            format!("length {}", a.len()),
            format!("length {}", b.len()),
        ));
    }
    Ok(a.0.iter().zip(&b.0).filter(|(x, y)| x != y).count())
}

/// Doubles the binary block into Z4: 0 -> 0, 1 -> 2.
pub fn chi(u: &MixedVector) -> Vec<Z4> {
    u.binary()
        .iter()
        .map(|&b| Z4::new(2 * b))
        .chain(u.quaternary().iter().copied())
        .collect()
}

/// Inverse of [`chi`] on its image; fails if a leading entry is odd.
pub fn chi_inverse(v: &[Z4], alpha: usize) -> Result<MixedVector> {
    if alpha > v.len() {
        return Err(Error::shape(
            format!("length >= {alpha}"),
            format!("length {}", v.len()),
        ));
    }
    if let Some((column, x)) = v[..alpha].iter().enumerate().find(|(_, x)| x.is_unit()) {
        return Err(Error::InvalidEntry {
            row: 0,
            column,
            value: x.value() as u64,
            reason: "odd entry in a coordinate that must be the image of a bit",
        });
    }
    Ok(MixedVector::from_parts_unchecked(
        v[..alpha].iter().map(|x| x.value() / 2).collect(),
        v[alpha..].to_vec(),
    ))
}

/// Reduces the first `alpha` coordinates modulo 2.
pub fn xi(v: &[Z4], alpha: usize) -> Result<MixedVector> {
    if alpha > v.len() {
        return Err(Error::shape(
            format!("length >= {alpha}"),
            format!("length {}", v.len()),
        ));
    }
    Ok(MixedVector::from_parts_unchecked(
        v[..alpha].iter().map(|x| x.to_bit()).collect(),
        v[alpha..].to_vec(),
    ))
}

/// Embeds the binary block as 0/1 entries of Z4.
pub fn iota(u: &MixedVector) -> Vec<Z4> {
    u.binary()
        .iter()
        .map(|&b| Z4::from_bit(b))
        .chain(u.quaternary().iter().copied())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mv(b: &[u8], q: &[u8]) -> MixedVector {
        MixedVector::from_digits(b, q).unwrap()
    }

    fn z4s(d: &[u8]) -> Vec<Z4> {
        d.iter().map(|&x| Z4::new(x)).collect()
    }

    #[test]
    fn scalar_gray_map() {
        assert_eq!(gray_scalar(Z4::TWO), (1, 1));
        assert_eq!(gray_scalar(Z4::ZERO), (0, 0));
        assert_eq!(gray_scalar(Z4::ONE), (0, 1));
        assert_eq!(gray_scalar(Z4::THREE), (1, 0));
        for y in 0..4 {
            let y = Z4::new(y);
            assert_eq!(gray_scalar_inverse(gray_scalar(y)), y);
        }
    }

    #[test]
    fn extended_gray_map() {
        assert_eq!(gray_extend(&mv(&[1], &[3])).entries(), &[1, 1, 0]);
        assert_eq!(gray_extend(&mv(&[0, 0], &[2])).entries(), &[0, 0, 1, 1]);
        let b = BinaryVector::new(vec![1, 1, 0]).unwrap();
        assert_eq!(gray_inverse(&b, 1).unwrap(), mv(&[1], &[3]));
        let zero = BinaryVector::new(vec![0; 5]).unwrap();
        assert!(gray_inverse(&zero, 1).unwrap().is_zero());
        assert!(matches!(gray_inverse(&zero, 2), Err(Error::Shape { .. })));
        assert!(matches!(gray_inverse(&zero, 6), Err(Error::Shape { .. })));
    }

    #[test]
    fn lee_weights() {
        assert_eq!(lee_weight(&mv(&[1, 1], &[2])), 4);
        assert_eq!(lee_weight(&MixedVector::zero(3, 2)), 0);
        assert_eq!(lee_weight(&mv(&[0], &[1, 3])), 2);
    }

    #[test]
    fn alphabet_maps() {
        assert_eq!(chi(&mv(&[1], &[3])), z4s(&[2, 3]));
        assert_eq!(chi(&mv(&[1], &[2])), z4s(&[2, 2]));
        assert_eq!(chi(&MixedVector::zero(2, 2)), z4s(&[0, 0, 0, 0]));
        assert_eq!(xi(&z4s(&[2, 1, 3, 1]), 1).unwrap(), mv(&[0], &[1, 3, 1]));
        assert_eq!(xi(&z4s(&[1, 1, 3, 1]), 1).unwrap(), mv(&[1], &[1, 3, 1]));
        assert_eq!(xi(&z4s(&[3, 3]), 2).unwrap(), mv(&[1, 1], &[]));
        assert_eq!(iota(&mv(&[1], &[2])), z4s(&[1, 2]));
        assert_eq!(iota(&mv(&[0, 1], &[3])), z4s(&[0, 1, 3]));
        let u = mv(&[1, 0, 1], &[3, 2]);
        assert_eq!(xi(&chi(&u), 3).unwrap(), mv(&[0, 0, 0], &[3, 2]));
        assert_eq!(xi(&iota(&u), 3).unwrap(), u);
        assert_eq!(chi_inverse(&chi(&u), 3).unwrap(), u);
        assert!(chi_inverse(&z4s(&[1, 0]), 1).is_err());
    }

    #[test]
    fn distance_shapes() {
        assert!(lee_distance(&mv(&[1], &[]), &mv(&[], &[1])).is_err());
        let a = BinaryVector::new(vec![1, 0]).unwrap();
        let b = BinaryVector::new(vec![1]).unwrap();
        assert!(hamming_distance(&a, &b).is_err());
        assert!(BinaryVector::new(vec![2]).is_err());
    }
}
