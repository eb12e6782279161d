//! Abstract open books `(Σ, φ)`: page bookkeeping, the Heegaard genus they
//! induce, plumbing, and the open book of a double branched cover of a
//! braid closure.

use std::fmt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::exactalg::{cokernel, AbelianGroup};
use crate::mcg::{birman_hilden_lift, PantsMonodromy, TorusTwistWord};

/// Compact orientable surface with nonempty boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PageType {
    genus: u32,
    boundary: u32,
}

impl PageType {
    pub const DISK: PageType = PageType { genus: 0, boundary: 1 };
    pub const ANNULUS: PageType = PageType { genus: 0, boundary: 2 };
    pub const PANTS: PageType = PageType { genus: 0, boundary: 3 };
    pub const PUNCTURED_TORUS: PageType = PageType { genus: 1, boundary: 1 };

    pub fn new(genus: u32, boundary: u32) -> Result<Self> {
        if boundary == 0 {
            return Err(Error::InvalidPage { genus, boundary });
        }
        Ok(PageType { genus, boundary })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn boundary_components(&self) -> u32 {
        self.boundary
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * i64::from(self.genus) - i64::from(self.boundary)
    }

    /// Page of the double branched cover of the disk along `k` points.
    pub fn double_branched_cover_of_disk(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::NoStrands);
        }
        let k = u32::try_from(k).map_err(|_| Error::Parse(format!("too many strands: {k}")))?;
        if k % 2 == 1 {
            Ok(PageType { genus: (k - 1) / 2, boundary: 1 })
        } else {
            Ok(PageType { genus: (k - 2) / 2, boundary: 2 })
        }
    }
}

impl fmt::Display for PageType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.genus, self.boundary)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Monodromy {
    /// Pair of pants page.
    Pants(PantsMonodromy),
    /// Once-punctured torus page.
    Torus(TorusTwistWord),
    /// Annulus page, power of the core twist.
    Annulus(i64),
    /// Disk page.
    DiskTrivial,
    /// Any page; only the page topology is tracked.
    Opaque,
}

impl Monodromy {
    fn fits(&self, page: PageType) -> bool {
        match self {
            Monodromy::Pants(_) => page == PageType::PANTS,
            Monodromy::Torus(_) => page == PageType::PUNCTURED_TORUS,
            Monodromy::Annulus(_) => page == PageType::ANNULUS,
            Monodromy::DiskTrivial => page == PageType::DISK,
            Monodromy::Opaque => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OpenBook {
    page: PageType,
    monodromy: Monodromy,
}

/// Page produced by plumbing two annuli. Both choices have Euler
/// characteristic -1.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AnnulusPlumbing {
    /// Once-punctured torus (two Hopf bands).
    #[default]
    HopfBand,
    /// Pair of pants.
    Pants,
}

impl OpenBook {
    pub fn new(page: PageType, monodromy: Monodromy) -> Result<Self> {
        if !monodromy.fits(page) {
            return Err(Error::MonodromyMismatch(page.to_string()));
        }
        Ok(OpenBook { page, monodromy })
    }

    pub fn disk() -> Self {
        OpenBook { page: PageType::DISK, monodromy: Monodromy::DiskTrivial }
    }

    pub fn annulus(twists: i64) -> Self {
        OpenBook { page: PageType::ANNULUS, monodromy: Monodromy::Annulus(twists) }
    }

    pub fn pants(m: PantsMonodromy) -> Self {
        OpenBook { page: PageType::PANTS, monodromy: Monodromy::Pants(m) }
    }

    pub fn punctured_torus(w: TorusTwistWord) -> Self {
        OpenBook { page: PageType::PUNCTURED_TORUS, monodromy: Monodromy::Torus(w) }
    }

    pub fn opaque(page: PageType) -> Self {
        OpenBook { page, monodromy: Monodromy::Opaque }
    }

    pub fn page(&self) -> PageType {
        self.page
    }

    pub fn monodromy(&self) -> &Monodromy {
        &self.monodromy
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.page.euler_characteristic()
    }

    /// Genus `1 - χ(Σ)` of the Heegaard splitting `Σ×I ∪ Σ×I`.
    pub fn induced_heegaard_genus(&self) -> u32 {
        u32::try_from(1 - self.euler_characteristic()).expect("pages have χ ≤ 1")
    }

    /// Upper bound on the open book genus of the manifold.
    pub fn obg_upper_bound(&self) -> u32 {
        self.induced_heegaard_genus()
    }

    pub fn plumb(&self, other: &OpenBook) -> OpenBook {
        self.plumb_with(other, AnnulusPlumbing::default())
    }

    /// Plumbing along page rectangles: `χ = χ1 + χ2 - 1`. Genera add and the
    /// boundary count follows, except that two annuli may be recorded as a
    /// once-punctured torus. The glued monodromy is not tracked.
    pub fn plumb_with(&self, other: &OpenBook, annuli: AnnulusPlumbing) -> OpenBook {
        let chi = self.euler_characteristic() + other.euler_characteristic() - 1;
        let both_annuli = self.page == PageType::ANNULUS && other.page == PageType::ANNULUS;
        let page = if both_annuli && annuli == AnnulusPlumbing::HopfBand {
            PageType::PUNCTURED_TORUS
        } else {
            let genus = self.page.genus + other.page.genus;
            let boundary = 2 - 2 * i64::from(genus) - chi;
            PageType { genus, boundary: u32::try_from(boundary).expect("b1 + b2 - 1 ≥ 1") }
        };
        debug_assert_eq!(page.euler_characteristic(), chi);
        OpenBook::opaque(page)
    }

    /// `H1` of the manifold when the binding is connected: the cokernel of
    /// `φ_* - I` on `H1(Σ)`.
    pub fn h1_connected_binding(&self) -> Result<AbelianGroup> {
        if self.page.boundary != 1 {
            return Err(Error::DisconnectedBinding(self.page.boundary));
        }
        match &self.monodromy {
            Monodromy::DiskTrivial => Ok(AbelianGroup::trivial()),
            Monodromy::Torus(w) => Ok(cokernel(&w.homology_action().minus_identity()?)),
            _ => Err(Error::MonodromyMismatch(format!("{} with untracked monodromy", self.page))),
        }
    }
}

/// Open book of the double branched cover of the closure of `w`, lifted from
/// the disk open book of `S^3` whose binding is the braid axis.
pub fn dbc_open_book(w: &BraidWord) -> OpenBook {
    let page = PageType::double_branched_cover_of_disk(w.strands()).expect("braids have ≥ 1 strand");
    let monodromy = match w.strands() {
        1 => Monodromy::DiskTrivial,
        2 => Monodromy::Annulus(w.exponent_sum()),
        3 => Monodromy::Torus(birman_hilden_lift(w).expect("three strands")),
        _ => Monodromy::Opaque,
    };
    OpenBook { page, monodromy }
}

/// `k - 1` for a `k`-strand braid.
pub fn dbc_obg_bound(w: &BraidWord) -> u32 {
    u32::try_from(w.strands() - 1).expect("strand count fits in u32")
}
