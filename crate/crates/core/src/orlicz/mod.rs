//! N-functions and Orlicz-type norms on finite weighted spaces.

mod nfunction;
mod norm;
mod space;

pub use nfunction::{
    eval_a, eval_b, inv_a, inv_b, AFunction, BFunction, DampedB, NFunction, NFunctionPair, NumericConjugate,
    PowerFunction,
};
pub use norm::{
    average_norm, luxemburg_norm, orlicz_dual_solution, orlicz_norm, orlicz_norm_dual, tau_average_norm, DualSolution,
};
pub use space::WeightedSampleSpace;
