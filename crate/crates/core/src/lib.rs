//! Coincidence Reidemeister traces and Nielsen numbers for pairs of selfmaps
//! of a bouquet of circles, computed from the induced endomorphisms of the
//! free group.
//!
//! * [`freegroup`]: words, endomorphisms and the integral group ring.
//! * [`fox`]: Fox derivatives and the reversed derivative.
//! * [`conjugacy`]: doubly twisted conjugacy decisions.
//! * [`trace`]: the trace formula, class merging and Nielsen bounds.
//! * [`oracle`]: an exact geometric model of the maps that recomputes the
//!   trace from coincidence points.
//! * [`problem`] and [`cli`]: the text input format and command-line front end.

pub mod cli;
pub mod conjugacy;
pub mod error;
pub mod fox;
pub mod freegroup;
pub mod oracle;
pub mod problem;
pub mod trace;

pub use error::{Error, Result};
