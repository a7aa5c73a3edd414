//! Finite-element lower bounds for the number of negative eigenvalues.

mod assemble;
mod inertia;
mod mesh;
mod ordering;
mod skyline;
mod sparse;

pub use assemble::{assemble_2d, assemble_2d_on, assemble_radial_1d, FormKind, FormMatrices, FormMeta, LeftEnd};
pub use inertia::{
    birman_schwinger_count, count_full, dense_negative_count, lowest_ritz_value, negative_inertia, split_counts,
    InertiaMethod, InertiaResult, RefinementStep, SplitCounts, DENSE_LIMIT, PIVOT_TOL,
};
pub use mesh::{Mesh, MeshSpec};
pub use ordering::{profile, reverse_cuthill_mckee};
pub use skyline::{Inertia, SkylineLdl};
pub use sparse::CsrMatrix;
