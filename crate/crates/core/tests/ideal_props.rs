mod common;

use proptest::prelude::*;
use proptest::sample::select;
use sgr_core::oracle::enumerate_ideals;
use sgr_core::{build_catalog, FractionalIdeal, NumericalSemigroup};

use common::symmetric_semigroups;

/// Colon ideal computed straight from the definition on a wide window.
fn colon_by_definition(x: &FractionalIdeal, y: &FractionalIdeal) -> Vec<i64> {
    let h = x.semigroup();
    let lo = x.min_exponent() - y.min_exponent() - 5;
    let hi = x.min_exponent() - y.min_exponent() + h.conductor() + 3 * h.max_generator() + 5;
    let member = |z: i64| {
        // z + E_y ⊆ E_x, checked on every element of E_y in a window
        (y.min_exponent()..=y.min_exponent() + h.conductor() + h.max_generator())
            .filter(|&e| y.contains(e))
            .all(|e| x.contains(z + e))
    };
    (lo..=hi)
        .filter(|&z| member(z))
        .filter(|&z| !(1..=hi - lo).any(|s| h.contains(s) && member(z - s)))
        .collect()
}

fn small_symmetric() -> Vec<NumericalSemigroup> {
    symmetric_semigroups(12, 3)
}

proptest! {
    #[test]
    fn canonical_form_is_idempotent(
        h in select(small_symmetric()),
        gens in prop::collection::vec(-10i64..40, 1..6),
    ) {
        let i = FractionalIdeal::new(&h, &gens).unwrap();
        let again = FractionalIdeal::new(&h, i.generators()).unwrap();
        prop_assert_eq!(&again, &i);
        for (k, &g) in i.generators().iter().enumerate() {
            for &other in &i.generators()[..k] {
                prop_assert!(!h.contains(g - other));
            }
        }
        for &g in &gens {
            prop_assert!(i.contains(g));
        }
    }

    #[test]
    fn colon_matches_definition(
        h in select(symmetric_semigroups(7, 3)),
        xs in prop::collection::vec(-3i64..15, 1..4),
        ys in prop::collection::vec(-3i64..15, 1..4),
    ) {
        let x = FractionalIdeal::new(&h, &xs).unwrap();
        let y = FractionalIdeal::new(&h, &ys).unwrap();
        let got = x.colon(&y).unwrap();
        prop_assert_eq!(got.generators(), &colon_by_definition(&x, &y)[..]);
    }

    #[test]
    fn shift_preserves_mu_and_moves_a_invariant(
        h in select(small_symmetric()),
        gens in prop::collection::vec(1i64..30, 1..5),
        m in 0i64..20,
    ) {
        let i = FractionalIdeal::new(&h, &gens).unwrap();
        prop_assume!(i.is_integral() && !i.is_unit());
        let shifted = i.shift(m);
        prop_assert_eq!(shifted.mu(), i.mu());
        prop_assert_eq!(shifted.shift(-m), i.clone());
        // a_I + m stays outside t^m I; equality can fail, e.g. (t^6, t^7) in ⟨3,4⟩
        if shifted.is_integral() && h.contains(m) {
            prop_assert!(
                shifted.quotient_profile().unwrap().a_invariant
                    >= i.quotient_profile().unwrap().a_invariant + m
            );
        }
    }
}

#[test]
fn a_invariant_of_colon_ideals() {
    for h in symmetric_semigroups(20, 3) {
        let a = h.frobenius();
        for &m in h.gaps() {
            let below = FractionalIdeal::colon_into_ring(&h, m);
            assert_eq!(below.quotient_profile().unwrap().a_invariant, a - m, "{h} m={m}");
            assert_eq!(
                below.shift(m).quotient_profile().unwrap().a_invariant,
                a + m,
                "{h} m={m}"
            );
        }
    }
}

#[test]
fn double_colon_is_reflexive() {
    // every integral ideal whose complement lies in [0, B]
    let mut checked = 0;
    for h in symmetric_semigroups(12, 3) {
        if h.is_naturals() {
            continue;
        }
        let bound = h.frobenius() + h.multiplicity();
        if sgr_core::oracle::poset_size(&h, bound) > 22 {
            continue;
        }
        for i in enumerate_ideals(&h, bound) {
            assert_eq!(i.dual().dual(), i, "{h}: {i}");
            checked += 1;
        }
    }
    assert!(checked > 1000);
}

#[test]
fn dual_of_catalog_members_is_two_generated() {
    for h in symmetric_semigroups(12, 3) {
        let catalog = build_catalog(&h).unwrap();
        for e in catalog.entries() {
            assert_eq!(e.ideal.dual().mu(), 2, "{h}: {}", e.ideal);
        }
    }
}

#[test]
fn shift_can_move_a_invariant_further() {
    let h = NumericalSemigroup::new(&[3, 4]).unwrap();
    let m = FractionalIdeal::maximal(&h);
    assert_eq!(m.quotient_profile().unwrap().a_invariant, 0);
    assert_eq!(m.shift(3).quotient_profile().unwrap().a_invariant, 8);
}

#[test]
fn dual_of_maximal_ideal_over_non_symmetric() {
    // R : m = (1, t, t^2) picks up both pseudo-Frobenius numbers
    let h = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
    let m = FractionalIdeal::maximal(&h);
    assert_eq!(m.dual().generators(), &[0, 1, 2]);
}
