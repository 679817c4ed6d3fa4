mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(config(2_000))]

    #[test]
    fn ring(x in (mpoly(), mpoly(), mpoly())) {
        ring_axioms(x)?;
    }

    #[test]
    fn gaussian(x in (0i64..16).prop_flat_map(|n| (Just(n), -1..=n + 1))) {
        gaussian_laws(x)?;
    }

    #[test]
    fn series(x in (unit_series(), 0usize..6)) {
        series_inverse(x)?;
    }

    #[test]
    fn rat_eq(x in (fraction(), mpoly(), mpoly())) {
        rat_eq_laws(x)?;
    }

    #[test]
    fn unimodal_accepted(seq in unimodal_seq()) {
        checker_accepts(seq)?;
    }

    #[test]
    fn valley_rejected(seq in valley_seq()) {
        checker_rejects(seq)?;
    }

    #[test]
    fn prefix_exchange(x in pair_with_indices()) {
        a_is_involution(x)?;
    }
}
