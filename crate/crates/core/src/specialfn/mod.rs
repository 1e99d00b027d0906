//! Special functions needed by the closed-form amplitude distributions.

mod bessel;
mod beta;
mod elliptic;
mod gamma;
mod hyp2f1;
mod hypergeometric;
mod meijer;
mod struve;

pub use bessel::{bessel_j, bessel_j_zero};
pub use beta::{complete_beta, inc_beta};
pub use elliptic::{elliptic_k, elliptic_k_complement};
pub use gamma::{digamma, gamma, ln_gamma_abs, ln_gamma_complex, pochhammer, rgamma};
pub use hyp2f1::hyp2f1;
pub use hypergeometric::{hyp0f1, hyp_pfq, hyp_pfq_eval, SeriesPolicy, SeriesValue, MAX_PRECISION_BITS};
pub use meijer::{meijer_g_4044, meijer_g_4044_with, MeijerG4044Params};
pub use struve::{struve_h0, STRUVE_CROSSOVER};
pub(crate) use bessel::j_nonneg;

