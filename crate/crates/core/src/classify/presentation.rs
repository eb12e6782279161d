//! Finite group presentations read off the Heegaard splitting of an open
//! book.
//!
//! The splitting glues two copies of `Σ×I` by the identity on `Σ×{0}` and
//! `∂Σ×I` and by the monodromy on `Σ×{1}`. Generators are a free basis of
//! `π1(Σ)`; each arc `α` of a system cutting `Σ` into a disk bounds the
//! meridian disk `α×I`, whose image contributes the relator `φ(α)·α⁻¹`.

use std::fmt;

use num_bigint::BigInt;

use crate::exactalg::{cokernel, AbelianGroup, IntMatrix};
use crate::mcg::PantsMonodromy;

/// Word in a free group; letter `k > 0` is generator `k`, `-k` its inverse.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn new(letters: Vec<i32>) -> Self {
        FreeWord(letters).reduced()
    }

    pub fn generator(g: i32) -> Self {
        FreeWord(vec![g])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| -l).collect())
    }

    pub fn pow(&self, n: i64) -> FreeWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let letters = base.0.iter().copied().cycle().take(base.0.len() * n.unsigned_abs() as usize).collect();
        FreeWord(letters).reduced()
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        FreeWord(letters).reduced()
    }

    fn reduced(self) -> FreeWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.0.len());
        for l in self.0 {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord(out)
    }

    /// Exponent sum of each generator `1..=generators`.
    pub fn abelianized(&self, generators: usize) -> Vec<i64> {
        let mut v = vec![0i64; generators];
        for &l in &self.0 {
            v[l.unsigned_abs() as usize - 1] += i64::from(l.signum());
        }
        v
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let names = ['x', 'y', 'z', 'w'];
        for &l in &self.0 {
            let idx = l.unsigned_abs() as usize - 1;
            let name = names.get(idx).map_or(format!("g{}", idx + 1), |c| c.to_string());
            write!(f, "{name}{}", if l < 0 { "'" } else { "" })?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: usize,
    relators: Vec<FreeWord>,
}

impl Presentation {
    pub fn new(generators: usize, relators: Vec<FreeWord>) -> Self {
        debug_assert!(relators.iter().all(|r| r.letters().iter().all(|l| (l.unsigned_abs() as usize) <= generators)));
        Presentation { generators, relators }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    /// Relation matrix of the abelianization: rows are generators, columns
    /// are relators.
    pub fn relation_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.generators, self.relators.len());
        for (j, r) in self.relators.iter().enumerate() {
            for (i, e) in r.abelianized(self.generators).into_iter().enumerate() {
                m[(i, j)] = BigInt::from(e);
            }
        }
        m
    }

    pub fn abelianization(&self) -> AbelianGroup {
        cokernel(&self.relation_matrix())
    }

    /// When every relator is a power of a single generator and no generator
    /// carries two relators, the group is the free product of the cyclic
    /// groups `Z/n` (with `n = 0` read as `Z`); returns those orders.
    pub fn cyclic_free_factors(&self) -> Option<Vec<u64>> {
        let mut orders: Vec<Option<u64>> = vec![None; self.generators];
        for r in &self.relators {
            if r.letters().is_empty() {
                continue;
            }
            let g = r.letters()[0].unsigned_abs() as usize;
            if r.letters().iter().any(|l| l.unsigned_abs() as usize != g) {
                return None;
            }
            if orders[g - 1].is_some() {
                return None;
            }
            // reduced power of one generator
            orders[g - 1] = Some(r.letters().len() as u64);
        }
        Some(orders.into_iter().map(|o| o.unwrap_or(0)).collect())
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (1..=self.generators as i32).map(|g| FreeWord::generator(g).to_string()).collect();
        let rels: Vec<String> = self.relators.iter().map(FreeWord::to_string).collect();
        write!(f, "<{} | {}>", gens.join(", "), rels.join(", "))
    }
}

/// Heegaard presentation of `(P, t1^r1 t2^r2 t3^r3)`.
///
/// `x, y` are loops around the boundaries `d1, d2`; `d3` is `z = (xy)⁻¹`.
/// The arcs run from `d1` and from `d2` to the base point on `d3`, so the
/// relators are `x^r1 · z^-r3` and `y^r2 · z^-r3`.
pub fn pants_heegaard_presentation(m: &PantsMonodromy) -> Presentation {
    let x = FreeWord::generator(1);
    let y = FreeWord::generator(2);
    let z = x.mul(&y).inverse();
    let z3 = z.pow(-m.r3);
    Presentation::new(2, vec![x.pow(m.r1).mul(&z3), y.pow(m.r2).mul(&z3)])
}

/// Heegaard presentation of `(A, t^n)`: one arc across the annulus.
pub fn annulus_heegaard_presentation(twists: i64) -> Presentation {
    Presentation::new(1, vec![FreeWord::generator(1).pow(twists)])
}
