use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{cokernel, AbelianGroup, IntMatrix};
use crate::mcg::PantsMonodromy;

/// Fiber `(α, β)` with `α ≥ 1`; unnormalized invariant `β/α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fiber {
    pub multiplicity: u64,
    pub twist: i64,
}

/// Seifert fibered space over `S²` with at most three marked fibers and no
/// extra obstruction term, `M(0; β1/α1, β2/α2, β3/α3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeifertInvariants {
    fibers: Vec<Fiber>,
}

impl SeifertInvariants {
    pub fn new(fibers: Vec<Fiber>) -> Result<Self> {
        if fibers.len() > 3 {
            return Err(Error::DimensionMismatch(format!("{} fibers, at most 3 supported", fibers.len())));
        }
        if fibers.iter().any(|f| f.multiplicity == 0) {
            return Err(Error::DimensionMismatch("fiber multiplicity must be ≥ 1".into()));
        }
        Ok(SeifertInvariants { fibers })
    }

    pub fn fibers(&self) -> &[Fiber] {
        &self.fibers
    }

    /// Fibers sorted, for comparison up to relabelling.
    pub fn canonical(&self) -> SeifertInvariants {
        let mut fibers = self.fibers.clone();
        fibers.sort();
        SeifertInvariants { fibers }
    }

    pub fn exceptional_count(&self) -> usize {
        self.fibers.iter().filter(|f| f.multiplicity >= 2).count()
    }

    /// `Σ βi/αi`.
    pub fn euler_number(&self) -> BigRational {
        self.fibers
            .iter()
            .map(|f| BigRational::new(BigInt::from(f.twist), BigInt::from(f.multiplicity)))
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    /// Relation matrix of `H1`: generators `q1..qn, h` (rows), relations
    /// `αi·qi + βi·h` and `q1 + ... + qn` (columns).
    pub fn presentation_matrix(&self) -> IntMatrix {
        let n = self.fibers.len();
        let mut m = IntMatrix::zeros(n + 1, n + 1);
        for (i, f) in self.fibers.iter().enumerate() {
            m[(i, i)] = BigInt::from(f.multiplicity);
            m[(n, i)] = BigInt::from(f.twist);
            m[(i, n)] = BigInt::one();
        }
        m
    }

    pub fn h1(&self) -> AbelianGroup {
        cokernel(&self.presentation_matrix())
    }
}

impl fmt::Display for SeifertInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M(0;")?;
        for (i, fib) in self.fibers.iter().enumerate() {
            write!(f, "{}({},{})", if i == 0 { " " } else { ", " }, fib.multiplicity, fib.twist)?;
        }
        write!(f, ")")
    }
}

fn require_nonzero(m: &PantsMonodromy) -> Result<()> {
    match m.exponents().iter().position(|&r| r == 0) {
        Some(i) => Err(Error::ZeroExponent { index: i + 1 }),
        None => Ok(()),
    }
}

/// Fillings along the slopes `(ri, 1)` of `P'×S¹`: fibers `(|ri|, sign ri)`.
pub fn seifert_from_pants(m: &PantsMonodromy) -> Result<SeifertInvariants> {
    require_nonzero(m)?;
    let fibers = m.exponents().iter().map(|&r| Fiber { multiplicity: r.unsigned_abs(), twist: r.signum() }).collect();
    SeifertInvariants::new(fibers)
}

pub fn seifert_h1(inv: &SeifertInvariants) -> AbelianGroup {
    inv.h1()
}

pub fn euler_number(inv: &SeifertInvariants) -> BigRational {
    inv.euler_number()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SphereVerdict {
    /// Some `|ri| ≥ 2`: no essential sphere.
    NoEssentialSphere,
    /// All `|ri| = 1`: a sphere meeting each fiber once is the only
    /// candidate, which would make the manifold `S²×S¹`. Excluded when the
    /// Euler number is nonzero.
    UnitFibers { excludes_s2xs1: bool },
}

/// Check of the branched-cover Euler characteristic equation
/// `χ(S²) - χ(S)/n = Σ(1 - 1/|ri|)` for a horizontal essential sphere `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducibilityReport {
    /// `Σ(1 - 1/|ri|)`.
    pub cone_defect: BigRational,
    /// The degree `n ≥ 1` solving the equation with `χ(S) = 2`, if integral.
    pub cover_degree: Option<BigInt>,
    pub euler_number: BigRational,
    pub verdict: SphereVerdict,
}

impl ReducibilityReport {
    /// Irreducible or `S²×S¹`; prime either way.
    pub fn is_prime(&self) -> bool {
        true
    }

    pub fn describe(&self) -> String {
        match &self.verdict {
            SphereVerdict::NoEssentialSphere => "no essential sphere".to_string(),
            SphereVerdict::UnitFibers { excludes_s2xs1: true } => format!(
                "essential sphere only if all |r_i|=1; euler number {} != 0 excludes S2xS1, prime",
                self.euler_number
            ),
            SphereVerdict::UnitFibers { excludes_s2xs1: false } => {
                "essential sphere only if all |r_i|=1; manifold is S2xS1, prime".to_string()
            }
        }
    }
}

pub fn reducibility_obstruction(m: &PantsMonodromy) -> Result<ReducibilityReport> {
    let inv = seifert_from_pants(m)?;
    let two = BigRational::from_integer(BigInt::from(2));
    let cone_defect = m
        .exponents()
        .iter()
        .map(|r| BigRational::one() - BigRational::new(BigInt::one(), BigInt::from(r.unsigned_abs())))
        .fold(BigRational::zero(), |acc, x| acc + x);
    // 2 - 2/n = defect  =>  n = 2 / (2 - defect)
    let gap = &two - &cone_defect;
    let cover_degree = if gap.is_positive() {
        let n = &two / &gap;
        n.is_integer().then(|| n.to_integer())
    } else {
        None
    };
    let euler_number = inv.euler_number();
    let all_unit = m.exponents().iter().all(|r| r.abs() == 1);
    let verdict = if all_unit {
        SphereVerdict::UnitFibers { excludes_s2xs1: !euler_number.is_zero() }
    } else {
        SphereVerdict::NoEssentialSphere
    };
    Ok(ReducibilityReport { cone_defect, cover_degree, euler_number, verdict })
}
