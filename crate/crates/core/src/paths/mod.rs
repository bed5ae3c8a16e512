//! Lattice paths: `(s,t)`-Dyck paths in a rectangle and generalized Dyck
//! paths with steps `(0,k)`, `(k,0)` and `(i,i)` for `i < k`.

mod gd;
mod rect;
mod svg;

use serde::{Deserialize, Serialize};

pub use gd::{cell_label, count_gd, count_gd_table, enumerate_gd, GdStep, GeneralizedDyckPath};
pub use rect::{count_rect_paths, diagonal_partition, enumerate_rect_paths, RectPath};
pub use svg::{panels_svg, LatticeDrawing};

/// Unit lattice step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    /// `(0, 1)`
    N,
    /// `(1, 0)`
    E,
}

/// Default cap on materialized paths.
pub const DEFAULT_PATH_CAP: usize = 1_000_000;
