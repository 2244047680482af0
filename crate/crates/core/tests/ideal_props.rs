mod common;

use common::*;
use idealcore::{Ideal, Polynomial};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn monomial_gens(nvars: usize) -> impl Strategy<Value = Vec<Exps>> {
    prop::collection::vec(prop::collection::vec(0u32..5, nvars), 1..5)
}

fn random_ideal(rng: &mut ChaCha8Rng, vars: &str, max_gens: usize) -> Ideal {
    use rand::Rng;
    let r = ring(vars);
    let n = rng.gen_range(1..=max_gens);
    let gens: Vec<Polynomial> = (0..n).map(|_| random_poly(rng, &r, 3, 2)).collect();
    Ideal::new(&r, gens).unwrap()
}

fn monomial_power(gens: &[Exps], k: u32) -> Vec<Exps> {
    let mut acc = vec![vec![0u32; gens[0].len()]];
    for _ in 0..k {
        let mut next = Vec::new();
        for a in &acc {
            for g in gens {
                next.push(a.iter().zip(g).map(|(x, y)| x + y).collect());
            }
        }
        acc = minimize(&next);
    }
    minimize(&acc)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn monomial_intersection_matches_lcm_oracle(a in monomial_gens(3), b in monomial_gens(3)) {
        let r = ring("x,y,z");
        let got = monomial_ideal(&r, &a).intersect(&monomial_ideal(&r, &b)).unwrap();
        prop_assert_eq!(exponents_of(&got), monomial_intersect(&minimize(&a), &minimize(&b)));
    }

    #[test]
    fn monomial_colon_matches_divisibility_oracle(a in monomial_gens(3), b in monomial_gens(3)) {
        let r = ring("x,y,z");
        let got = monomial_ideal(&r, &a).colon(&monomial_ideal(&r, &b)).unwrap();
        prop_assert_eq!(exponents_of(&got), monomial_colon(&a, &b));
    }

    #[test]
    fn colon_times_divisor_is_contained(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = random_ideal(&mut rng, "x,y", 3);
        let j = Ideal::new(i.ring(), random_ideal(&mut rng, "x,y", 2).gens().iter().map(|g| g.in_ring(i.ring())).collect()).unwrap();
        prop_assume!(!j.is_zero());
        let q = i.colon(&j).unwrap();
        prop_assert!(i.contains_ideal(&q.product(&j).unwrap()).unwrap());
        prop_assert!(q.contains_ideal(&i).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn intersection_lattice_laws(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = random_ideal(&mut rng, "x,y", 2);
        let r = i.ring().clone();
        let lift = |k: Ideal| Ideal::new(&r, k.gens().iter().map(|g| g.in_ring(&r)).collect()).unwrap();
        let j = lift(random_ideal(&mut rng, "x,y", 2));
        let k = lift(random_ideal(&mut rng, "x,y", 2));
        let ij = i.intersect(&j).unwrap();
        prop_assert!(i.contains_ideal(&ij).unwrap());
        prop_assert!(j.contains_ideal(&ij).unwrap());
        let lhs = ij.sum(&i.intersect(&k).unwrap()).unwrap();
        let rhs = i.intersect(&j.sum(&k).unwrap()).unwrap();
        prop_assert!(rhs.contains_ideal(&lhs).unwrap());
    }

    #[test]
    fn monomial_powers_multiply(a in monomial_gens(3), j in 0u32..3, k in 0u32..3) {
        let r = ring("x,y,z");
        let i = monomial_ideal(&r, &a);
        let lhs = i.power(j).product(&i.power(k)).unwrap();
        prop_assert!(lhs.equals(&i.power(j + k)).unwrap());
        prop_assert_eq!(exponents_of(&lhs), monomial_power(&a, j + k));
    }

    #[test]
    fn equality_ignores_generator_presentation(seed in any::<u64>(), c in 1i64..50, perm in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = random_ideal(&mut rng, "x,y,z", 3);
        let r = i.ring().clone();
        let mut gens = i.gens().to_vec();
        let n = gens.len();
        gens.rotate_left(perm % n);
        if n > 1 {
            let extra = gens[1].scale(&r.field().from_i64(c));
            gens[0] = &gens[0] + &extra;
        }
        let j = Ideal::new(&r, gens).unwrap();
        prop_assert!(i.equals(&i).unwrap());
        prop_assert!(i.equals(&j).unwrap() && j.equals(&i).unwrap());
        let k = Ideal::new(&r, j.canonical_generators()).unwrap();
        prop_assert!(i.equals(&k).unwrap());
        prop_assert_eq!(i.canonical_generators(), j.canonical_generators());
    }
}

#[test]
fn heights_of_small_ideals() {
    let r = ring("x,y");
    assert_eq!(ideal(&r, "x, y").height().unwrap(), 2);
    let r = ring("x,y,z");
    assert_eq!(ideal(&r, "x").height().unwrap(), 1);
    assert_eq!(ideal(&r, "x*y, x*z").height().unwrap(), 1);
    assert_eq!(ideal(&r, "x*y, z").height().unwrap(), 2);
    assert!(ideal(&r, "1").height().is_err());
    assert!(ideal(&r, "0").height().is_err());
}

#[test]
fn colon_of_a_complete_intersection_by_the_square_of_the_maximal_ideal() {
    let r = ring("x,y");
    let q = ideal(&r, "x^2, y^2").colon(&ideal(&r, "(x, y)^2")).unwrap();
    assert!(q.equals(&ideal(&r, "x, y")).unwrap());
}
