//! Shifted Rényi information measures for discrete distributions and
//! unnormalized mass measures.
//!
//! Everything here is built on the weighted generalized power mean
//! `M_r(w, x)`. With the order shifted to `r = α − 1`:
//!
//! | quantity | in terms of the mean |
//! |----------|----------------------|
//! | entropy `H̃_r(P)` | `−log M_r(P, P)` |
//! | divergence `D̃_r(P‖Q)` | `log M_r(P, P/Q)` |
//! | cross-entropy `X̃_r(P, Q)` | `−log M_r(P, Q)` |
//! | equivalent probability `π_r(P)` | `M_r(P, P)` |
//! | information potential `Ṽ_r(P)` | `M_r(P, P)^r` |
//!
//! `r = 0` is Shannon / Kullback–Leibler, `r = −1` Hartley, `r = 1`
//! Rényi's quadratic entropy and `r = ±∞` the min- and max-entropies.
//!
//! ```
//! use renyi_core::{from_counts, shifted_entropy, ExtendedOrder, LogBase};
//!
//! let m = from_counts(["a", "b", "c"], &[2, 1, 1]).unwrap();
//! let p = m.normalize();
//! let shannon = shifted_entropy(&p, ExtendedOrder::Finite(0.0), LogBase::BITS);
//! assert!((shannon.value - 1.5).abs() < 1e-12);
//! let hartley = shifted_entropy(&p, ExtendedOrder::Finite(-1.0), LogBase::BITS);
//! assert!((hartley.value - 3f64.log2()).abs() < 1e-12);
//! ```

pub mod error;
pub mod info;
pub mod means;
pub mod measures;
pub mod spectrum;

pub use error::{Error, Result};
pub use info::{
    decomposition_gap, entropy_derivative, entropy_via_escort_rewrite, equivalent_probability, escort_measure,
    information_potential, mass_displacement_check, self_information_check, shifted_cross_entropy, shifted_divergence,
    shifted_entropy, skew_symmetric_divergence, standard_divergence, standard_entropy, EntropyValue, LogBase,
    DERIVATIVE_STEP,
};
pub use means::{
    escort_distribution, kn_mean, log_sum_exp, power_mean, power_mean_derivative, EscortDistribution, ExtendedOrder,
    Interval, KnFunctionPair, NonNegativeVector,
};
pub use measures::{from_counts, normalize, ratio, total_mass, Distribution, MassMeasure, NORMALIZATION_TOLERANCE};
pub use spectrum::{
    invert_probability, recover_distribution_probe, sample_spectrum, OrderGrid, ProbeRow, SpectrumRow, SpectrumTable,
};
