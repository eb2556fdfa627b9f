//! Covers of bounded-diameter, well-separated pieces and the recursive
//! shell-cutting separator they drive.

mod cover;
mod cut;
mod growth;

pub use cover::{grid_cover, validate_cover, Cover, CoverReport, CoverViolation, GridPatch};
pub use cut::{asdim_cut, AsdimCutTrace, AsdimIteration};
pub use growth::{f_h, k_of_m, lattice_ball, sep_upper_asdim, GrowthModel};
