//! Randomized checks of the algebraic invariants.

mod common;

use proptest::prelude::*;

use common::*;

proptest! {
    #![proptest_config(config())]

    #[test]
    fn polynomial_ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
        ring_laws(&a, &b, &c)?;
    }

    #[test]
    fn symmetric_reduction_round_trips((n, q) in elementary_poly()) {
        symmetric_round_trip(n, &q)?;
    }

    #[test]
    fn resultant_is_multiplicative(f in param_univariate(3), g in param_univariate(3), h in param_univariate(3)) {
        resultant_multiplicative(&f, &g, &h)?;
    }

    #[test]
    fn resultant_agrees_with_roots(f in int_univariate(5), g in int_univariate(4)) {
        resultant_matches_roots(&f, &g)?;
    }

    #[test]
    fn orbit_times_stabilizer_is_group_order((i, exps) in group_and_monomial()) {
        orbit_stabilizer(&groups()[i], &exps)?;
    }

    #[test]
    fn conjugates_do_not_depend_on_transversal((setting, picks, order) in transversal_choice()) {
        transversal_independence(setting, &picks, &order)?;
    }
}
