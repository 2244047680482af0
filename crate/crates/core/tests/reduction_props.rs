mod common;

use common::*;
use idealcore::reductions::{
    analytic_spread, is_reduction, reduction_number, sample_reduction_stream, SamplerConfig,
};
use idealcore::{Ideal, Polynomial};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GORENSTEIN: &str =
    "x^2 - y^2 + x*z, x*y + x*z - y*z, x*z - 2*y*z + z^2, y^2 + y*z - z^2, z^2 - 2*y*z";

fn random_equigenerated(seed: u64) -> Ideal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = ring("x,y,z");
    let n = rng.gen_range(1..=4);
    let gens: Vec<Polynomial> = (0..n)
        .map(|_| {
            let terms = (0..rng.gen_range(1..=2))
                .map(|_| {
                    let mut e = [0u32; 3];
                    for _ in 0..2 {
                        e[rng.gen_range(0..3)] += 1;
                    }
                    (idealcore::ring::Monomial::from_exponents(&e), r.field().from_i64(rng.gen_range(1..4)))
                })
                .collect();
            Polynomial::from_terms(&r, terms)
        })
        .filter(|p| !p.is_zero())
        .collect();
    Ideal::new(&r, gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn spread_lies_between_height_and_dimension(seed in any::<u64>()) {
        let i = random_equigenerated(seed);
        prop_assume!(!i.is_zero());
        let ell = analytic_spread(&i).unwrap();
        prop_assert!(i.height().unwrap() <= ell);
        prop_assert!(ell <= 3);
        prop_assert!(ell <= i.minimized().gens().len());
    }

    #[test]
    fn enlarging_a_reduction_keeps_it(seed in any::<u64>(), j in 2u32..4, extra in 0usize..6) {
        let r = ring("x,y");
        let i = ideal(&r, &format!("(x, y)^{j}"));
        let s = sample_reduction_stream(&i, 2, &SamplerConfig::with_seed(seed), 30, 0).unwrap();
        let before = s.report.r.unwrap();
        let basis = i.minimized();
        let add = &basis.gens()[extra % (j as usize + 1)];
        let mut gens = s.ideal.gens().to_vec();
        gens.push(add.clone());
        let bigger = Ideal::new(&r, gens).unwrap();
        let rep = is_reduction(&bigger, &i, 30).unwrap();
        prop_assert!(rep.is_reduction);
        prop_assert!(rep.r.unwrap() <= before);
    }

    #[test]
    fn reduction_number_ignores_linear_changes(a in 1i64..100, b in 0i64..100, c in 1i64..100) {
        let r = ring("x,y");
        let i = ideal(&r, "x^7, x^6*y, x^2*y^5, y^7");
        let j = ideal(&r, "x^7, y^7");
        let f = r.field();
        let (g0, g1) = (&j.gens()[0], &j.gens()[1]);
        // [[a, b], [0, c]] is invertible for a, c nonzero.
        let changed = Ideal::new(&r, vec![
            &g0.scale(&f.from_i64(a)) + &g1.scale(&f.from_i64(b)),
            g1.scale(&f.from_i64(c)),
        ]).unwrap();
        prop_assert_eq!(reduction_number(&changed, &i, 30).unwrap(), 4);
    }
}

#[test]
fn spread_equals_height_for_primary_ideals() {
    let r2 = ring("x,y");
    let r3 = ring("x,y,z");
    for (r, text) in [
        (&r2, "(x, y)^3"),
        (&r2, "x^7, x^6*y, x^2*y^5, y^7"),
        (&r3, "(x, y, z)^2"),
        (&r3, GORENSTEIN),
    ] {
        let i = ideal(r, text);
        assert_eq!(analytic_spread(&i).unwrap(), i.height().unwrap(), "{text}");
    }
}

#[test]
fn samples_succeed_on_the_first_attempt() {
    let r2 = ring("x,y");
    let r3 = ring("x,y,z");
    let cases = [
        (ideal(&r2, "(x, y)^2"), 2, 40),
        (ideal(&r2, "(x, y)^4"), 2, 40),
        (ideal(&r2, "x^7, x^6*y, x^2*y^5, y^7"), 2, 40),
        (ideal(&r3, "(x, y, z)^2"), 3, 20),
        (ideal(&r3, GORENSTEIN), 3, 20),
    ];
    let (mut total, mut first) = (0usize, 0usize);
    for (i, ell, n) in &cases {
        for s in 0..*n {
            let got = sample_reduction_stream(i, *ell, &SamplerConfig::with_seed(11), 30, s).unwrap();
            let (_, stream) = got.source.unwrap();
            total += 1;
            first += usize::from(stream == SamplerConfig::stream(s, 0));
        }
    }
    assert!(first as f64 / total as f64 > 0.99, "{first} of {total} on the first attempt");
}

#[test]
fn non_reductions_are_rejected() {
    let r = ring("x,y");
    let i = ideal(&r, "(x, y)^2");
    assert!(!is_reduction(&ideal(&r, "x^2, x*y"), &i, 10).unwrap().is_reduction);
    assert!(is_reduction(&ideal(&r, "x"), &i, 10).is_err());
}
