use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ManifoldKind;

/// Lens space `L(p, q)`, the result of `p/q` surgery on the unknot. The sign
/// of `p` carries the orientation (`L(-p, q) = -L(p, q)`).
///
/// Stored with `|p| ≥ 2`, `1 ≤ q < |p|`, `gcd(p, q) = 1`, `q` the smaller of
/// `q` and `q⁻¹ mod |p|`, and `L(p, -1)` written as `L(-p, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LensSpace {
    p: BigInt,
    q: BigInt,
}

fn mod_inverse(q: &BigInt, m: &BigInt) -> BigInt {
    let e = q.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

impl LensSpace {
    /// `None` unless `|p| ≥ 2` and `gcd(p, q) = 1`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Option<LensSpace> {
        let (p, q) = (p.into(), q.into());
        let m = p.abs();
        if m < BigInt::from(2) || !p.gcd(&q).is_one() {
            return None;
        }
        let q = q.mod_floor(&m);
        let q = q.clone().min(mod_inverse(&q, &m));
        if m > BigInt::from(2) && q == &m - 1u32 {
            return Some(LensSpace { p: -p, q: BigInt::one() });
        }
        Some(LensSpace { p, q })
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// Whether this is `L(p, 1)` up to homeomorphism, i.e. `q ≡ ±1 mod p`.
    pub fn is_p1(&self) -> bool {
        self.q.is_one()
    }

    pub fn mirror(&self) -> LensSpace {
        LensSpace::new(-&self.p, self.q.clone()).expect("valid lens data")
    }

    /// Homeomorphism test from the classification of lens spaces:
    /// `L(p,q) ≅ L(p,q')` iff `q' ≡ ±q^{±1} mod p`, with the sign fixed when
    /// orientations must be preserved.
    pub fn is_homeomorphic(&self, other: &LensSpace, preserve_orientation: bool) -> bool {
        let m = self.p.abs();
        if m != other.p.abs() {
            return false;
        }
        let q = self.q.mod_floor(&m);
        let qi = mod_inverse(&q, &m);
        let target = other.q.mod_floor(&m);
        let same = target == q || target == qi;
        let flipped = target == (-&q).mod_floor(&m) || target == (-&qi).mod_floor(&m);
        if !preserve_orientation {
            return same || flipped;
        }
        if self.p.signum() == other.p.signum() {
            same
        } else {
            flipped
        }
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// Manifold obtained by `p/q` surgery on the unknot, `gcd(p, q) = 1`.
pub fn surgery_on_unknot(p: BigInt, q: BigInt) -> ManifoldKind {
    if p.is_zero() {
        return ManifoldKind::S1xS2;
    }
    if p.abs().is_one() {
        return ManifoldKind::S3;
    }
    let (p, q) = if q.is_negative() { (-p, -q) } else { (p, q) };
    ManifoldKind::Lens(LensSpace::new(p, q).expect("coprime surgery coefficient"))
}

/// `L(r, 1)`, with `L(0,1) = S¹×S²` and `L(±1,1) = S³`.
pub fn lens_r1(r: i64) -> ManifoldKind {
    surgery_on_unknot(BigInt::from(r), BigInt::one())
}

/// Numerator and denominator of `[a1, ..., an] = a1 - 1/(a2 - 1/(... - 1/an))`.
/// A linear chain of unknots with framings `a1..an` is `L(p, q)` for
/// `p/q = [a1, ..., an]`.
pub fn chain_fraction(framings: &[BigInt]) -> (BigInt, BigInt) {
    // continuants computed from the right: N() = 1, N(an) = an
    let (mut num, mut den) = (BigInt::one(), BigInt::zero());
    for a in framings.iter().rev() {
        let next = a * &num - &den;
        den = num;
        num = next;
    }
    (num, den)
}

pub fn linear_chain(framings: &[BigInt]) -> ManifoldKind {
    let (p, q) = chain_fraction(framings);
    surgery_on_unknot(p, q)
}
