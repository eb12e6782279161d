//! Braid words, the combinatorics of their closures, and the reduced Burau
//! representation at `t = -1` on three strands.
//!
//! A letter `i > 0` stands for the generator σ_i and `-i` for its inverse.
//! Words are read left to right: strand permutations and Burau matrices of a
//! word are the left-to-right products of those of its letters.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactalg::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands) {
            return Err(Error::LetterOutOfRange { letter: bad, strands });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// Parses whitespace- or comma-separated signed generator indices. When
    /// `strands` is `None` it is inferred as `max |letter| + 1`.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let letters = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad braid letter {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let strands =
            strands.unwrap_or_else(|| letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0) + 1);
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::WrongStrandCount { expected: self.strands, found: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// Removes adjacent `i, -i` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i64> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    /// Free reduction followed by cancelling inverse pairs across the ends of
    /// the word. The result is conjugate to `self`.
    pub fn cyclic_reduce(&self) -> BraidWord {
        let mut letters = self.free_reduce().letters;
        let (mut lo, mut hi) = (0, letters.len());
        while hi - lo >= 2 && letters[lo] == -letters[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        letters.truncate(hi);
        letters.drain(..lo);
        BraidWord { strands: self.strands, letters }
    }

    /// Image in the symmetric group.
    pub fn permutation(&self) -> Permutation {
        let mut position: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            for p in position.iter_mut() {
                if *p == i {
                    *p = i + 1;
                } else if *p == i + 1 {
                    *p = i;
                }
            }
        }
        Permutation(position)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum()).sum()
    }

    pub fn closure_data(&self) -> ClosureData {
        ClosureData {
            components: self.permutation().cycle_count(),
            exponent_sum: self.exponent_sum(),
            strands: self.strands,
        }
    }

    /// Strand count, an upper bound for the braid index of the closure.
    pub fn braid_index_upper(&self) -> usize {
        self.strands
    }

    /// Exact braid index of the closure where it is known: at most two
    /// strands, or three-strand words conjugate to `σ1^p σ2^q` with `p, q`
    /// nonzero, where minus-one additivity of the braid index under connected
    /// sum applies to the two torus link factors.
    pub fn braid_index_exact(&self) -> Option<usize> {
        let two_strand = |e: i64| if e.abs() == 1 { 1 } else { 2 };
        match self.strands {
            1 => Some(1),
            2 => Some(two_strand(self.exponent_sum())),
            3 => match self.as_torus_sum() {
                Some((p, q)) if p != 0 && q != 0 => Some(two_strand(p) + two_strand(q) - 1),
                _ => None,
            },
            _ => None,
        }
    }

    /// Recognizes a three-strand word conjugate to `σ1^p σ2^q` by cyclic
    /// reduction and rotation.
    pub fn as_torus_sum(&self) -> Option<(i64, i64)> {
        if self.strands != 3 {
            return None;
        }
        let w = self.cyclic_reduce();
        let letters = &w.letters;
        if letters.is_empty() {
            return Some((0, 0));
        }
        // count runs of the generator index around the cyclic word
        let gen = |l: &i64| l.unsigned_abs();
        let changes =
            (0..letters.len()).filter(|&k| gen(&letters[k]) != gen(&letters[(k + 1) % letters.len()])).count();
        if changes > 2 {
            return None;
        }
        let sum = |g: u64| letters.iter().filter(|l| gen(l) == g).map(|l| l.signum()).sum::<i64>();
        Some((sum(1), sum(2)))
    }

    /// Burau matrix at `t = -1` of a three-strand word:
    /// σ1 ↦ [[1,1],[0,1]], σ2 ↦ [[1,0],[-1,1]].
    pub fn burau_neg1(&self) -> Result<IntMatrix> {
        self.require_strands(3)?;
        Ok(unipotent_product(self.letters.iter().map(|&l| match l {
            1 => Generator::Upper(1),
            -1 => Generator::Upper(-1),
            2 => Generator::Lower(1),
            _ => Generator::Lower(-1),
        })))
    }

    /// `|det(burau_neg1 - I)|`: the order of the first homology of the double
    /// branched cover of the closure, or 0 when that group is infinite.
    pub fn closure_determinant(&self) -> Result<BigInt> {
        Ok(self.burau_neg1()?.minus_identity()?.determinant()?.abs())
    }

    pub(crate) fn require_strands(&self, n: usize) -> Result<()> {
        if self.strands != n {
            return Err(Error::WrongStrandCount { expected: n, found: self.strands });
        }
        Ok(())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.letters.iter().map(i64::to_string).collect();
        write!(f, "{}", text.join(" "))
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, None)
    }
}

/// Same as [`BraidWord::closure_determinant`].
pub fn determinant_of_closure_3braid(w: &BraidWord) -> Result<BigInt> {
    w.closure_determinant()
}

/// The word `σ1^p σ2^q` on three strands. Its closure is the connected sum
/// of the `(2,p)` and `(2,q)` torus links.
pub fn connected_sum_braid(p: i64, q: i64) -> BraidWord {
    let letters = std::iter::repeat_n(p.signum(), p.unsigned_abs() as usize)
        .chain(std::iter::repeat_n(2 * q.signum(), q.unsigned_abs() as usize))
        .collect();
    BraidWord { strands: 3, letters }
}

/// Elementary unipotent 2×2 generators with a signed exponent.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Generator {
    /// [[1, k], [0, 1]]
    Upper(i64),
    /// [[1, 0], [-k, 1]]
    Lower(i64),
}

pub(crate) fn unipotent_product(gens: impl IntoIterator<Item = Generator>) -> IntMatrix {
    // running product [[a, b], [c, d]]
    let (mut a, mut b, mut c, mut d) = (BigInt::from(1), BigInt::from(0), BigInt::from(0), BigInt::from(1));
    for g in gens {
        match g {
            Generator::Upper(k) => {
                // right-multiply by [[1,k],[0,1]]
                b += &a * k;
                d += &c * k;
            }
            Generator::Lower(k) => {
                // right-multiply by [[1,0],[-k,1]]
                a -= &b * k;
                c -= &d * k;
            }
        }
    }
    IntMatrix::from_entries(2, 2, vec![a, b, c, d]).expect("2x2")
}

/// Permutation of strand positions; entry `i` is where the strand starting
/// at position `i` ends (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Cycles in 1-based notation, each starting at its smallest element,
    /// fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.0[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClosureData {
    pub components: usize,
    pub exponent_sum: i64,
    pub strands: usize,
}
