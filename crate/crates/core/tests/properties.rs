//! Property tests over randomly sampled arguments.

use krank::asym::{disc_rhs, lc_rhs, sech_ratio, LcVariant};
use krank::krank::krank_count;
use krank::logreal::LogReal;
use krank::partition::PartitionTable;
use proptest::prelude::*;
use std::sync::{Arc, OnceLock};

fn table() -> &'static Arc<PartitionTable> {
    static TABLE: OnceLock<Arc<PartitionTable>> = OnceLock::new();
    TABLE.get_or_init(|| Arc::new(PartitionTable::new(120).unwrap()))
}

proptest! {
    #[test]
    fn krank_symmetric_in_m(k in 1u32..=6, m in -120i64..=120, n in 0u64..=120) {
        let t = table();
        prop_assert_eq!(
            krank_count(k, m, n, t).unwrap(),
            krank_count(k, -m, n, t).unwrap()
        );
    }

    #[test]
    fn closed_forms_even_in_m(m in -500i64..=500, n in 600u64..=5000) {
        prop_assert_eq!(sech_ratio(m, n), sech_ratio(-m, n));
        prop_assert_eq!(disc_rhs(2, m, n), disc_rhs(2, -m, n));
        prop_assert_eq!(
            lc_rhs(m, n, LcVariant::Combined).unwrap(),
            lc_rhs(-m, n, LcVariant::Combined).unwrap()
        );
        prop_assert_eq!(
            lc_rhs(m, n, LcVariant::LargeM).unwrap(),
            lc_rhs(-m, n, LcVariant::LargeM).unwrap()
        );
    }

    #[test]
    fn logreal_field_ops_match_f64(a in -1e12f64..1e12, b in -1e12f64..1e12) {
        prop_assume!(a != 0.0 && b != 0.0);
        let la = LogReal::from_f64(a);
        let lb = LogReal::from_f64(b);
        let prod = la.mul(&lb).to_f64();
        prop_assert!((prod - a * b).abs() <= 1e-12 * (a * b).abs());
        let sum = la.add(&lb).to_f64();
        prop_assert!((sum - (a + b)).abs() <= 1e-9 * (a.abs() + b.abs()));
    }

    #[test]
    fn support_bound(k in 1u32..=6, n in 1u64..=100, extra in 1i64..=40) {
        let t = table();
        let m = n as i64 + extra;
        prop_assert_eq!(krank_count(k, m, n, t).unwrap(), num_bigint::BigInt::from(0));
    }
}
