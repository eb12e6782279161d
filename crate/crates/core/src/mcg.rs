//! Monodromy data for the two pages of Euler characteristic -1.
//!
//! The pair of pants `P` has mapping class group (fixing the boundary)
//! free abelian on the three boundary-parallel Dehn twists `t1, t2, t3`, so a
//! monodromy is an exponent triple. The once-punctured torus monodromy is a
//! word in the twists `t_a, t_b` about a dual curve pair, tracked through its
//! action on first homology.

use std::fmt;
use std::ops::{Add, Neg};
use std::str::FromStr;

use crate::braid::{unipotent_product, BraidWord, Generator};
use crate::error::{Error, Result};
use crate::exactalg::IntMatrix;

/// Monodromy `t1^r1 t2^r2 t3^r3` of the pair of pants.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct PantsMonodromy {
    pub r1: i64,
    pub r2: i64,
    pub r3: i64,
}

impl PantsMonodromy {
    pub const IDENTITY: PantsMonodromy = PantsMonodromy { r1: 0, r2: 0, r3: 0 };

    pub fn new(r1: i64, r2: i64, r3: i64) -> Self {
        PantsMonodromy { r1, r2, r3 }
    }

    pub fn exponents(&self) -> [i64; 3] {
        [self.r1, self.r2, self.r3]
    }

    pub fn from_exponents([r1, r2, r3]: [i64; 3]) -> Self {
        PantsMonodromy { r1, r2, r3 }
    }

    /// Group operation; twists about disjoint curves commute.
    pub fn compose(&self, other: &PantsMonodromy) -> PantsMonodromy {
        *self + *other
    }

    /// Relabels the boundary components: exponent `i` of the result is
    /// exponent `perm[i]` of `self`.
    pub fn permuted(&self, perm: [usize; 3]) -> PantsMonodromy {
        let e = self.exponents();
        Self::from_exponents([e[perm[0]], e[perm[1]], e[perm[2]]])
    }

    pub fn zero_count(&self) -> usize {
        self.exponents().iter().filter(|&&r| r == 0).count()
    }
}

impl Add for PantsMonodromy {
    type Output = PantsMonodromy;

    fn add(self, o: PantsMonodromy) -> PantsMonodromy {
        PantsMonodromy::new(self.r1 + o.r1, self.r2 + o.r2, self.r3 + o.r3)
    }
}

impl Neg for PantsMonodromy {
    type Output = PantsMonodromy;

    fn neg(self) -> PantsMonodromy {
        PantsMonodromy::new(-self.r1, -self.r2, -self.r3)
    }
}

impl fmt::Display for PantsMonodromy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.r1, self.r2, self.r3)
    }
}

impl FromStr for PantsMonodromy {
    type Err = Error;

    /// Parses `"r1,r2,r3"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("expected three comma-separated integers, got {s:?}")));
        }
        let mut e = [0i64; 3];
        for (slot, p) in e.iter_mut().zip(&parts) {
            *slot = p.parse().map_err(|_| Error::Parse(format!("bad exponent {p:?}")))?;
        }
        Ok(Self::from_exponents(e))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TorusTwist {
    /// `t_a`
    A,
    /// `t_a^{-1}`
    AInv,
    /// `t_b`
    B,
    /// `t_b^{-1}`
    BInv,
}

impl TorusTwist {
    pub fn symbol(self) -> char {
        match self {
            TorusTwist::A => 'a',
            TorusTwist::AInv => 'A',
            TorusTwist::B => 'b',
            TorusTwist::BInv => 'B',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            'a' => Some(TorusTwist::A),
            'A' => Some(TorusTwist::AInv),
            'b' => Some(TorusTwist::B),
            'B' => Some(TorusTwist::BInv),
            _ => None,
        }
    }

    fn generator(self) -> Generator {
        match self {
            TorusTwist::A => Generator::Upper(1),
            TorusTwist::AInv => Generator::Upper(-1),
            TorusTwist::B => Generator::Lower(1),
            TorusTwist::BInv => Generator::Lower(-1),
        }
    }
}

/// Word in the twists of the once-punctured torus. Equality is equality of
/// words; the homology action is [`TorusTwistWord::homology_action`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TorusTwistWord(pub Vec<TorusTwist>);

impl TorusTwistWord {
    pub fn letters(&self) -> &[TorusTwist] {
        &self.0
    }

    /// Action on `H1` in the basis dual to the twist curves:
    /// `t_a ↦ [[1,1],[0,1]]`, `t_b ↦ [[1,0],[-1,1]]`, composed left to right.
    pub fn homology_action(&self) -> IntMatrix {
        unipotent_product(self.0.iter().map(|t| t.generator()))
    }
}

impl fmt::Display for TorusTwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|t| write!(f, "{}", t.symbol()))
    }
}

impl FromStr for TorusTwistWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| TorusTwist::from_symbol(c).ok_or_else(|| Error::Parse(format!("bad twist symbol {c:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(TorusTwistWord)
    }
}

pub fn compose_pants(m1: &PantsMonodromy, m2: &PantsMonodromy) -> PantsMonodromy {
    m1.compose(m2)
}

pub fn torus_rep(w: &TorusTwistWord) -> IntMatrix {
    w.homology_action()
}

/// Lift of a three-strand braid to the monodromy of the once-punctured torus
/// page of its double branched cover: σ1 ↦ t_a, σ2 ↦ t_b.
pub fn birman_hilden_lift(w: &BraidWord) -> Result<TorusTwistWord> {
    w.require_strands(3)?;
    Ok(TorusTwistWord(
        w.letters()
            .iter()
            .map(|&l| match l {
                1 => TorusTwist::A,
                -1 => TorusTwist::AInv,
                2 => TorusTwist::B,
                _ => TorusTwist::BInv,
            })
            .collect(),
    ))
}
