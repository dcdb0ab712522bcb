//! Randomized identities driven by proptest-chosen seeds and shapes.

use std::sync::Arc;

use proptest::prelude::*;

use vsecant::hopf::{
    delta_coinv, delta_then_left, delta_then_right, dot_coinv, frak_s, frak_s_inv, star_coinv,
    star_coinv_transported,
};
use vsecant::random::Sampler;
use vsecant::secant::SecantIdeals;
use vsecant::shuffle::{shuffle_product, Split};
use vsecant::GradedRing;

fn conic() -> GradedRing {
    GradedRing::from_json(r#"{"vars": 3, "relations": ["x0*x2 - x1^2"]}"#).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn shuffle_commutes_with_swapped_split(seed in any::<u64>(), n in 0usize..3, m in 0usize..3, d in 1u32..3) {
        let mut s = Sampler::new(seed);
        let k = GradedRing::free(2).hilbert(d);
        let (f, g) = (s.tensor(k, d, n, 3), s.tensor(k, d, m, 3));
        for sigma in Split::all(n, m) {
            prop_assert_eq!(shuffle_product(&f, &g, &sigma).unwrap(), shuffle_product(&g, &f, &sigma.swap()).unwrap());
        }
    }

    #[test]
    fn symmetrization_round_trips(seed in any::<u64>(), n in 0usize..4, d in 1u32..3) {
        let mut s = Sampler::new(seed);
        let x = s.sym(3, d, n, 4);
        prop_assert_eq!(frak_s_inv(&frak_s(&x)), x);
    }

    #[test]
    fn fast_star_matches_transport(seed in any::<u64>(), n in 0usize..4, d in 1u32..3, e in 1u32..3) {
        let ring = conic();
        let mut s = Sampler::new(seed);
        let f = s.sym(ring.hilbert(d), d, n, 3);
        let g = s.sym(ring.hilbert(e), e, n, 3);
        prop_assert_eq!(star_coinv(&ring, &f, &g).unwrap(), star_coinv_transported(&ring, &f, &g).unwrap());
    }

    #[test]
    fn coassociative(seed in any::<u64>(), n in 0usize..5) {
        let mut s = Sampler::new(seed);
        let delta = delta_coinv(&s.sym(3, 1, n, 4));
        prop_assert_eq!(delta_then_left(&delta), delta_then_right(&delta));
    }

    #[test]
    fn dot_is_commutative_on_coinvariants(seed in any::<u64>(), n in 0usize..3, m in 0usize..3) {
        let mut s = Sampler::new(seed);
        let (f, g) = (s.sym(4, 2, n, 3), s.sym(4, 2, m, 3));
        prop_assert_eq!(dot_coinv(&f, &g).unwrap(), dot_coinv(&g, &f).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn secant_chain_decreases(d in 1u32..5, n in 0usize..4, v in 1usize..3) {
        let ideals = SecantIdeals::new(Arc::new(GradedRing::free(v)));
        for r in 2..=3 {
            let (lower, higher) = (ideals.piece(r - 1, d, n), ideals.piece(r, d, n));
            prop_assert!(lower.contains_all(&higher).unwrap());
        }
    }

    #[test]
    fn veronese_first_piece_vanishes(d in 0u32..6, v in 1usize..4) {
        let ideals = SecantIdeals::new(Arc::new(GradedRing::free(v)));
        prop_assert!(ideals.piece(1, d, 1).is_zero());
    }
}
