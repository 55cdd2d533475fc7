//! Exact and asymptotic computation of Garvan k-rank partition
//! statistics N_k(m,n).
//!
//! The family is defined by
//!
//!   sum_{n>=0} N_k(m,n) q^n
//!     = 1/(q;q)_inf * sum_{l>=1} (-1)^{l-1} q^{l((2k-1)l-1)/2 + |m|l} (1 - q^l);
//!
//! k = 1 is the Andrews-Garvan-Dyson crank, k = 2 is Dyson's rank. The
//! crate provides:
//!
//! - exact arbitrary-precision counts by three independent routes
//!   ([`krank`], [`partition`]);
//! - the uniform asymptotic expansion of N_k(m,n) built from exact
//!   rational coefficient tables and the logistic-kernel operator
//!   calculus ([`coeffs`], [`logistic`], [`upsilon`], [`asym`]);
//! - exact/asymptotic comparators for half-integer Bessel combinations,
//!   false theta sums and the euler product ([`bessel`], [`theta`],
//!   [`eta`]);
//! - exact-integer verification of log-concavity, unimodality and
//!   higher-order Turan inequalities with deterministic parallel scans
//!   ([`discriminant`], [`scans`], [`compare`]);
//! - the release acceptance suite ([`acceptance`]).

pub mod acceptance;
pub mod asym;
pub mod bessel;
pub mod coeffs;
pub mod compare;
pub mod discriminant;
pub mod error;
pub mod eta;
pub mod halfint;
pub mod hp;
pub mod krank;
pub mod logistic;
pub mod logreal;
pub mod numeric;
pub mod partition;
pub mod scans;
pub mod theta;
pub mod upsilon;

pub use asym::{
    asym_context, beta_of, disc_rhs, j_series, krank_asym, lc_rhs, mono_rhs, sech_ratio,
    AsymContext, LcVariant, TruncationOrder,
};
pub use bessel::{bessel_i_halfint, h_hat, HHatCompare};
pub use coeffs::{a_coeff, c_coeff, gamma_coeff, CoeffTables};
pub use compare::{compare_lc_table, delta2_log_exact, monotonicity_table, LcRow, MonoRow};
pub use discriminant::{discriminant_exact, ht_exact, ht_sign_changes, DiscriminantRecord, HTRecord};
pub use error::{Error, Result};
pub use eta::{eta_inv_compare, eta_trunc_for, EtaCompare};
pub use halfint::HalfInt;
pub use krank::{
    enumerate_stats_oracle, krank_count, krank_row, qseries_row_oracle, KRankRow, SeriesRow,
    Statistic,
};
pub use logistic::{logistic_deriv, logistic_value, LogisticDerivPoly};
pub use logreal::LogReal;
pub use partition::{for_each_partition, Partition, PartitionTable};
pub use scans::{
    edge_logconcavity, logconcavity_scan, pdiff_logconcave, unimodality_scan,
    unimodality_threshold, ScanReport, Violation,
};
pub use theta::{false_theta_compare, h_kmj_compare, HkmjCompare, ThetaCompare};
pub use upsilon::{build_upsilon, UpsilonOperator, UpsilonTerm};
