//! Exact computations for closed orientable 3-manifolds presented by open
//! books with small pages.
//!
//! * [`exactalg`]: integer matrices, Smith normal form, abelian group invariants.
//! * [`braid`]: braid words, closures, Burau action at `t = -1` on three strands.
//! * [`mcg`]: monodromies of the pair of pants and the once-punctured torus.
//! * [`openbook`]: abstract open books, plumbing, genus bounds, double branched covers.
//! * [`classify`]: Seifert, lens and connected-sum recognition and open book genus evaluation.

pub mod braid;
pub mod classify;
pub mod error;
pub mod exactalg;
pub mod mcg;
pub mod openbook;

pub use error::{Error, Result};
