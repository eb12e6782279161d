//! Recognition of the manifolds presented by small open books, and their
//! open book genus.
//!
//! Pair-of-pants monodromies split into two regimes. With every exponent
//! nonzero the manifold is Seifert fibered over `S²` with fibers
//! `(|ri|, sign ri)` and is prime. With an exponent zero, the fixed arc on the
//! corresponding boundary spans a sphere splitting the manifold as
//! `L(r1,1) # L(r2,1)`.
//!
//! Surgery conventions: `p/q` surgery on the unknot is `L(p,q)`, and the
//! twist `t_i^{r}` turns the `i`-th boundary into an `r`-framed unknot, so
//! `(P, t1^r1 t2^r2 t3^r3)` is the star-shaped plumbing with a 0-framed centre
//! and legs of framings `r1, r2, r3`.

mod lens;
mod obg;
mod presentation;
mod seifert;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::exactalg::{cokernel, AbelianGroup};
use crate::mcg::PantsMonodromy;
use crate::openbook::{Monodromy, OpenBook};

pub use lens::{chain_fraction, lens_r1, linear_chain, surgery_on_unknot, LensSpace};
pub use obg::{obg_eval, obg_eval_with_book, ObgResult, Witness};
pub use presentation::{annulus_heegaard_presentation, pants_heegaard_presentation, FreeWord, Presentation};
pub use seifert::{
    euler_number, reducibility_obstruction, seifert_from_pants, seifert_h1, Fiber, ReducibilityReport,
    SeifertInvariants, SphereVerdict,
};

/// Homeomorphism type, as far as it is recognized.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ManifoldKind {
    S3,
    S1xS2,
    Lens(LensSpace),
    /// Seifert fibered over `S²` with three exceptional fibers.
    SeifertPrime(SeifertInvariants),
    /// Prime summands in canonical order, at least two, none `S³`.
    ConnectedSum(Vec<ManifoldKind>),
    Unknown,
}

impl ManifoldKind {
    /// Connected sum with `S³` summands dropped, nesting flattened and
    /// summands ordered by `|p|`, positive before negative.
    pub fn connected_sum(parts: impl IntoIterator<Item = ManifoldKind>) -> ManifoldKind {
        let mut flat = Vec::new();
        for part in parts {
            match part {
                ManifoldKind::S3 => {}
                ManifoldKind::ConnectedSum(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        flat.sort_by_key(|a| a.sort_key());
        match flat.len() {
            0 => ManifoldKind::S3,
            1 => flat.pop().expect("one summand"),
            _ => ManifoldKind::ConnectedSum(flat),
        }
    }

    fn sort_key(&self) -> (u8, BigInt, bool, BigInt, Option<SeifertInvariants>) {
        let zero = BigInt::from(0);
        match self {
            ManifoldKind::S3 => (0, zero.clone(), false, zero, None),
            ManifoldKind::S1xS2 => (1, zero.clone(), false, zero, None),
            ManifoldKind::Lens(l) => (1, l.p().abs(), l.p().is_negative(), l.q().clone(), None),
            ManifoldKind::SeifertPrime(s) => (2, zero.clone(), false, zero, Some(s.canonical())),
            ManifoldKind::ConnectedSum(_) => (3, zero.clone(), false, zero, None),
            ManifoldKind::Unknown => (4, zero.clone(), false, zero, None),
        }
    }

    pub fn is_prime(&self) -> bool {
        !matches!(self, ManifoldKind::ConnectedSum(_))
    }

    /// `S³`, `S¹×S²` (read as `L(0,1)`) or `L(p,1)`: the manifolds of open
    /// book genus at most one.
    pub fn is_lens_p1(&self) -> bool {
        match self {
            ManifoldKind::S3 | ManifoldKind::S1xS2 => true,
            ManifoldKind::Lens(l) => l.is_p1(),
            _ => false,
        }
    }

    pub fn summands(&self) -> Vec<&ManifoldKind> {
        match self {
            ManifoldKind::ConnectedSum(parts) => parts.iter().collect(),
            ManifoldKind::S3 => Vec::new(),
            other => vec![other],
        }
    }

    /// First homology, when determined by the kind alone.
    pub fn h1(&self) -> Option<AbelianGroup> {
        match self {
            ManifoldKind::S3 => Some(AbelianGroup::trivial()),
            ManifoldKind::S1xS2 => Some(AbelianGroup::free(1)),
            ManifoldKind::Lens(l) => Some(AbelianGroup::from_cyclic_orders([l.p().clone()])),
            ManifoldKind::SeifertPrime(s) => Some(s.h1()),
            ManifoldKind::ConnectedSum(parts) => parts
                .iter()
                .map(ManifoldKind::h1)
                .try_fold(AbelianGroup::trivial(), |acc, h| h.map(|h| acc.direct_sum(&h))),
            ManifoldKind::Unknown => None,
        }
    }

    pub fn type_name(&self) -> &'static str {
        match self {
            ManifoldKind::S3 => "S3",
            ManifoldKind::S1xS2 => "S1xS2",
            ManifoldKind::Lens(_) => "Lens",
            ManifoldKind::SeifertPrime(_) => "SeifertPrime",
            ManifoldKind::ConnectedSum(_) => "ConnectedSum",
            ManifoldKind::Unknown => "Unknown",
        }
    }
}

impl fmt::Display for ManifoldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ManifoldKind::S3 => write!(f, "S3"),
            ManifoldKind::S1xS2 => write!(f, "S1xS2"),
            ManifoldKind::Lens(l) => write!(f, "{l}"),
            ManifoldKind::SeifertPrime(s) => write!(f, "{s}"),
            ManifoldKind::ConnectedSum(parts) => {
                let names: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "{}", names.join(" # "))
            }
            ManifoldKind::Unknown => write!(f, "unknown"),
        }
    }
}

/// Recognized kind together with first homology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldClass {
    pub kind: ManifoldKind,
    pub h1: AbelianGroup,
}

impl ManifoldClass {
    /// Class of a recognized kind; `None` for [`ManifoldKind::Unknown`].
    pub fn from_kind(kind: ManifoldKind) -> Option<ManifoldClass> {
        let h1 = kind.h1()?;
        Some(ManifoldClass { kind, h1 })
    }

    pub fn unknown(h1: AbelianGroup) -> ManifoldClass {
        ManifoldClass { kind: ManifoldKind::Unknown, h1 }
    }

    pub fn is_prime(&self) -> bool {
        self.kind.is_prime()
    }
}

impl fmt::Display for ManifoldClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (H1 = {})", self.kind, self.h1)
    }
}

/// `L(p,1) # L(q,1)` normalized; the sphere splitting for a vanishing pants
/// exponent and the double branched cover of `σ1^p σ2^q`.
pub fn lens_pair_sum(p: i64, q: i64) -> ManifoldClass {
    ManifoldClass::from_kind(ManifoldKind::connected_sum([lens_r1(p), lens_r1(q)])).expect("recognized")
}

/// Lens space of an all-nonzero pants monodromy with at most two exceptional
/// fibers, by blowing down a unit leg of the star plumbing: the legs `a, b`
/// and the centre become the chain `[a, -ε, b]`.
fn pants_lens_kind(m: &PantsMonodromy) -> Option<ManifoldKind> {
    let mut e = m.exponents();
    e.sort_by_key(|&r| (r.abs(), r));
    if e[0].abs() != 1 {
        return None;
    }
    let eps = e[0];
    let chain = [BigInt::from(e[1]), BigInt::from(-eps), BigInt::from(e[2])];
    Some(linear_chain(&chain))
}

pub fn classify_pants(m: &PantsMonodromy) -> ManifoldClass {
    let e = m.exponents();
    if let Some(zero) = e.iter().position(|&r| r == 0) {
        let rest: Vec<i64> = (0..3).filter(|&i| i != zero).map(|i| e[i]).collect();
        return lens_pair_sum(rest[0], rest[1]);
    }
    let inv = seifert_from_pants(m).expect("all exponents nonzero");
    let h1 = inv.h1();
    let kind = match pants_lens_kind(m) {
        Some(kind) => kind,
        None => ManifoldKind::SeifertPrime(inv.canonical()),
    };
    debug_assert_eq!(kind.h1().as_ref(), Some(&h1));
    ManifoldClass { kind, h1 }
}

pub fn is_prime_pants(m: &PantsMonodromy) -> bool {
    classify_pants(m).is_prime()
}

/// Double branched cover of the closure of a three-strand braid. Words
/// conjugate to `σ1^p σ2^q` close to a connected sum of two-bridge torus
/// links and are recognized; others are reported with their homology only.
pub fn classify_dbc_3braid(w: &BraidWord) -> Result<ManifoldClass> {
    w.require_strands(3)?;
    if let Some((p, q)) = w.as_torus_sum() {
        return Ok(lens_pair_sum(p, q));
    }
    let h1 = cokernel(&w.burau_neg1()?.minus_identity()?);
    Ok(ManifoldClass::unknown(h1))
}

/// Double branched cover of a braid closure on at most three strands.
pub fn classify_dbc(w: &BraidWord) -> Result<ManifoldClass> {
    match w.strands() {
        1 => Ok(ManifoldClass::from_kind(ManifoldKind::S3).expect("recognized")),
        2 => Ok(ManifoldClass::from_kind(lens_r1(w.exponent_sum())).expect("recognized")),
        3 => classify_dbc_3braid(w),
        n => Err(Error::UnsupportedStrands(n)),
    }
}

/// Classifies an open book with a tracked monodromy.
pub fn classify_open_book(ob: &OpenBook) -> Result<ManifoldClass> {
    match ob.monodromy() {
        Monodromy::DiskTrivial => Ok(ManifoldClass::from_kind(ManifoldKind::S3).expect("recognized")),
        Monodromy::Annulus(n) => Ok(ManifoldClass::from_kind(lens_r1(*n)).expect("recognized")),
        Monodromy::Pants(m) => Ok(classify_pants(m)),
        Monodromy::Torus(word) => {
            let letters = word
                .letters()
                .iter()
                .map(|t| match t.symbol() {
                    'a' => 1,
                    'A' => -1,
                    'b' => 2,
                    _ => -2,
                })
                .collect();
            classify_dbc_3braid(&BraidWord::new(3, letters)?)
        }
        Monodromy::Opaque => Err(Error::MonodromyMismatch(format!("{} with untracked monodromy", ob.page()))),
    }
}
