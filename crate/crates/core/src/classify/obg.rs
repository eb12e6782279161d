use std::fmt;

use super::{ManifoldClass, ManifoldKind};
use crate::openbook::OpenBook;

/// Named facts that justify a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Witness {
    /// obg = 0 exactly for S³, obg = 1 exactly for L(p,1), p ≠ ±1.
    LowGenusClassification,
    /// A non-prime manifold has obg 2 iff it is L(p,1) # L(q,1).
    NonPrimeGenusTwo,
    /// Open book genus is subadditive under connected sum (plumbing).
    Subadditivity,
    /// rank H1 ≤ Heegaard genus ≤ obg.
    HomologyRank,
    /// obg ≤ 1 - χ(page) of a given open book.
    PageBound,
    /// Seifert data with twists ±1 comes from a pair-of-pants open book.
    PantsRealization,
}

impl Witness {
    pub fn as_str(self) -> &'static str {
        match self {
            Witness::LowGenusClassification => "obg-low-genus-classification",
            Witness::NonPrimeGenusTwo => "obg-nonprime-genus-two",
            Witness::Subadditivity => "obg-subadditivity",
            Witness::HomologyRank => "heegaard-homology-rank-bound",
            Witness::PageBound => "page-euler-characteristic-bound",
            Witness::PantsRealization => "pants-open-book-realization",
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Bounds on the open book genus. `upper` is `None` when no open book is
/// known; `exact` is set only when the bounds meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObgResult {
    pub lower: u32,
    pub upper: Option<u32>,
    pub exact: Option<u32>,
    pub witnesses: Vec<Witness>,
}

impl ObgResult {
    fn new(lower: u32, upper: Option<u32>, mut witnesses: Vec<Witness>) -> Self {
        if let Some(u) = upper {
            assert!(lower <= u, "open book genus bounds crossed: {lower} > {u}");
        }
        witnesses.sort();
        witnesses.dedup();
        let exact = upper.filter(|&u| u == lower);
        ObgResult { lower, upper, exact, witnesses }
    }

    fn exact(value: u32, witnesses: Vec<Witness>) -> Self {
        Self::new(value, Some(value), witnesses)
    }
}

fn count(n: usize) -> u32 {
    u32::try_from(n).expect("small count")
}

pub fn obg_eval(class: &ManifoldClass) -> ObgResult {
    eval(class, None)
}

/// As [`obg_eval`], also using `1 - χ` of an open book of the manifold.
pub fn obg_eval_with_book(class: &ManifoldClass, book: &OpenBook) -> ObgResult {
    eval(class, Some(book))
}

fn eval(class: &ManifoldClass, book: Option<&OpenBook>) -> ObgResult {
    use Witness::*;

    let rank = count(class.h1.generator_count());
    let (lower, intrinsic_upper, mut witnesses) = match &class.kind {
        ManifoldKind::S3 => return ObgResult::exact(0, vec![LowGenusClassification]),
        ManifoldKind::S1xS2 => return ObgResult::exact(1, vec![LowGenusClassification]),
        ManifoldKind::Lens(l) if l.is_p1() => return ObgResult::exact(1, vec![LowGenusClassification]),
        // not S³ and not L(p,1)
        ManifoldKind::Lens(_) => (2.max(rank), None, vec![LowGenusClassification]),
        ManifoldKind::ConnectedSum(parts) if parts.len() == 2 && parts.iter().all(ManifoldKind::is_lens_p1) => {
            return ObgResult::exact(2, vec![NonPrimeGenusTwo, Subadditivity, HomologyRank]);
        }
        ManifoldKind::ConnectedSum(parts) => {
            let upper = parts.iter().all(ManifoldKind::is_lens_p1).then(|| count(parts.len()));
            (3.max(rank), upper, vec![NonPrimeGenusTwo, Subadditivity])
        }
        ManifoldKind::SeifertPrime(inv) => {
            let lower = if inv.exceptional_count() == 3 { 2.max(rank) } else { rank };
            let from_pants = inv.fibers().len() == 3 && inv.fibers().iter().all(|f| f.twist.abs() == 1);
            let mut w = vec![LowGenusClassification, HomologyRank];
            if from_pants {
                w.push(PantsRealization);
            }
            (lower, from_pants.then_some(2), w)
        }
        ManifoldKind::Unknown => (rank, None, vec![HomologyRank]),
    };

    let book_upper = book.map(OpenBook::obg_upper_bound);
    if book_upper.is_some() {
        witnesses.push(PageBound);
    }
    let upper = match (intrinsic_upper, book_upper) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    ObgResult::new(lower, upper, witnesses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify_pants, lens_r1, LensSpace, ManifoldKind};
    use crate::exactalg::AbelianGroup;
    use crate::mcg::PantsMonodromy;

    fn class(kind: ManifoldKind) -> ManifoldClass {
        ManifoldClass::from_kind(kind).unwrap()
    }

    #[test]
    fn low_genus_table() {
        assert_eq!(obg_eval(&class(ManifoldKind::S3)).exact, Some(0));
        for p in [2, 3, 5, -2, 0] {
            assert_eq!(obg_eval(&class(lens_r1(p))).exact, Some(1), "L({p},1)");
        }
    }

    #[test]
    fn rp3_sum() {
        let c = class(ManifoldKind::connected_sum([lens_r1(2), lens_r1(-2)]));
        let r = obg_eval(&c);
        assert_eq!(r.exact, Some(2));
        assert!(r.witnesses.contains(&Witness::NonPrimeGenusTwo));
    }

    #[test]
    fn seifert_prime_is_genus_two() {
        let c = classify_pants(&PantsMonodromy::new(2, 3, 5));
        let r = obg_eval(&c);
        assert_eq!((r.lower, r.upper, r.exact), (2, Some(2), Some(2)));
    }

    #[test]
    fn lens_not_p1_needs_a_book() {
        let c = class(ManifoldKind::Lens(LensSpace::new(5, 2).unwrap()));
        let r = obg_eval(&c);
        assert_eq!((r.lower, r.upper, r.exact), (2, None, None));
        let book = OpenBook::pants(PantsMonodromy::new(1, 1, 2));
        assert_eq!(classify_pants(&PantsMonodromy::new(1, 1, 2)), c);
        assert_eq!(obg_eval_with_book(&c, &book).exact, Some(2));
    }

    #[test]
    fn other_connected_sums_exceed_two() {
        let c = class(ManifoldKind::connected_sum([lens_r1(2), lens_r1(3), lens_r1(5)]));
        let r = obg_eval(&c);
        assert_eq!((r.lower, r.upper, r.exact), (3, Some(3), Some(3)));

        let c = class(ManifoldKind::connected_sum([lens_r1(2), ManifoldKind::Lens(LensSpace::new(5, 2).unwrap())]));
        let r = obg_eval(&c);
        assert_eq!((r.lower, r.upper), (3, None));
    }

    #[test]
    fn unknown_uses_homology_and_book() {
        let c = ManifoldClass::unknown(AbelianGroup::from_cyclic_orders([3]));
        let r = obg_eval(&c);
        assert_eq!((r.lower, r.upper, r.exact), (1, None, None));
        let book = OpenBook::punctured_torus("abab".parse().unwrap());
        let r = obg_eval_with_book(&c, &book);
        assert_eq!((r.lower, r.upper, r.exact), (1, Some(2), None));

        let c = ManifoldClass::unknown(AbelianGroup::from_cyclic_orders([2, 2]));
        assert_eq!(obg_eval_with_book(&c, &book).exact, Some(2));
    }
}
