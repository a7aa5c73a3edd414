//! Explicit potentials defeating any Orlicz condition weaker than `𝓑`, and
//! numerical checks of the asymptotics of `t·𝓑⁻¹(1/t)`.

mod asymptotics;
mod counterexample;

pub use asymptotics::{
    binv_asymptotics, lambert_check, lambert_w, phi, phi_asymptotics, rho, BinvReport, BinvRow, LambertCheck,
    PhiReport, PhiRow,
};
pub use counterexample::{
    beta, build_counterexample, check_weaker, finiteness_check, gradient_energy_quadrature, height, rayleigh_check,
    threshold_s0, Bump, ConstructionOptions, Counterexample, CounterexampleSpec, FinitenessReport, MeasureFamily,
    Patch, RayleighCheck, RayleighStatus, SeriesReport,
};
