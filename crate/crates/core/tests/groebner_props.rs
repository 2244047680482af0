mod common;

use common::*;
use idealcore::groebner::dimension_of_leading_terms;
use idealcore::{divide, eliminate, groebner_basis, normal_form, Ideal, Polynomial};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_ideal(seed: u64, vars: &str, ngens: usize) -> (Ideal, ChaCha8Rng) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = ring(vars);
    let gens: Vec<Polynomial> = (0..ngens).map(|_| random_poly(&mut rng, &r, 3, 3)).collect();
    (Ideal::new(&r, gens).unwrap(), rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn membership_matches_division(seed in any::<u64>(), ngens in 1usize..4) {
        let (i, mut rng) = small_ideal(seed, "x,y,z", ngens);
        let r = i.ring().clone();
        let gb = i.groebner();

        let combo = i.gens().iter().fold(Polynomial::zero(&r), |acc, g| {
            &acc + &(&random_poly(&mut rng, &r, 2, 2) * g)
        });
        prop_assert!(i.contains(&combo).unwrap());

        let f = random_poly(&mut rng, &r, 4, 4);
        let (qs, rem) = divide(&f, gb.elements()).unwrap();
        let back = qs.iter().zip(gb.elements()).fold(rem.clone(), |acc, (q, g)| &acc + &(q * g));
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(&rem, &normal_form(&f, gb.elements(), r.order()).unwrap());
        prop_assert_eq!(rem.is_zero(), i.contains(&f).unwrap());
    }

    #[test]
    fn basis_of_a_basis_is_itself(seed in any::<u64>(), ngens in 1usize..4) {
        let (i, _) = small_ideal(seed, "x,y,z", ngens);
        let gb = i.groebner();
        prop_assert!(s_pairs_reduce_to_zero(&gb));
        if !gb.is_zero() {
            let again = groebner_basis(gb.elements(), gb.order()).unwrap();
            prop_assert_eq!(again.elements(), gb.elements());
        }
    }

    #[test]
    fn monomial_dimension_matches_independent_sets(
        gens in prop::collection::vec(prop::collection::vec(0u32..3, 4), 1..5)
    ) {
        let r = ring("a,b,c,d");
        let i = monomial_ideal(&r, &gens);
        let expected = if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
            -1
        } else {
            (0u32..16)
                .filter(|s| gens.iter().all(|g| {
                    g.iter().enumerate().any(|(v, &e)| e > 0 && s & (1 << v) == 0)
                }))
                .map(|s| s.count_ones() as i64)
                .max()
                .unwrap()
        };
        prop_assert_eq!(i.dimension(), expected);
        let lms: Vec<_> = i.groebner().leading_monomials();
        prop_assert_eq!(dimension_of_leading_terms(&lms, 4), expected);
    }

    #[test]
    fn elimination_respects_equality(seed in any::<u64>(), ngens in 1usize..4, shift in -3i64..4) {
        let (i, _) = small_ideal(seed, "t,x,y", ngens);
        let r = i.ring().clone();
        let field = r.field();
        let mut gens: Vec<Polynomial> = i.gens().to_vec();
        gens.reverse();
        if gens.len() > 1 {
            let extra = gens[1].scale(&field.from_i64(shift));
            gens[0] = &gens[0] + &extra;
        }
        let j = Ideal::new(&r, gens).unwrap();
        prop_assert!(i.equals(&j).unwrap());
        let (ei, ej) = (eliminate(&i, 1).unwrap(), eliminate(&j, 1).unwrap());
        prop_assert!(ei.equals(&ej).unwrap());
        for g in ei.gens() {
            prop_assert!(i.contains(&g.embed(&r, &[1, 2])).unwrap());
        }
    }
}
