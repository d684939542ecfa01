//! Exact combinatorial maps on orientable surfaces.
//!
//! This crate implements, with exact arithmetic throughout:
//!
//! * rotation-system maps ([`map`]): genus, duality, radial construction,
//!   corner navigation, canonical forms;
//! * edge orientations and half-orientations ([`orient`]): geodesic and
//!   dual-geodesic constructions, the face-flip / vertex-push lattice;
//! * blossoming maps ([`blossom`]): the opening and closing algorithms
//!   relating bicolorable maps to unicellular blossoming maps, their
//!   fractional extension, and the rerooting bijection;
//! * scheme decomposition of unicellular maps ([`scheme`]): pruning, branch
//!   merging into weighted Motzkin paths, offset graphs, and a complete
//!   census of genus-1 and genus-2 schemes;
//! * exact series arithmetic ([`series`]): truncated power series, rational
//!   functions in the lattice-path variable `D`, surjection identities, and
//!   the assembly of the genus-`g` map series as a rational function of the
//!   tree series `T`;
//! * brute-force enumeration oracles ([`oracle`]) used as ground truth.
//!
//! Conventions are fixed once and used everywhere:
//!
//! * darts are dense `0..n_darts` indices internally (1-indexed in JSON);
//! * `sigma` lists darts counterclockwise around each vertex;
//! * faces are the cycles of `phi = sigma . alpha`; the cycle of `phi`
//!   through a dart `d` is the face on the *right* of `d`, and iterating
//!   `phi` walks the clockwise contour of that face;
//! * the corner `c(d)` is the sector between `d` and `sigma(d)`; the root
//!   corner is `c(root)`.

pub mod blossom;
pub mod map;
pub mod oracle;
pub mod orient;
pub mod scheme;
pub mod series;

pub use blossom::{BlossomError, BlossomingMap, StemDir};
pub use map::{Dart, EdgeId, MapError, RotationMap};
pub use orient::{EdgeState, HalfOrientation, Orientation, OrientError};
