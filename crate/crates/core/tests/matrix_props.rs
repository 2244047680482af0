mod common;

use common::*;
use idealcore::matrix::{g_s_check, minor_ideal, pfaffian_ideal, PolyMatrix};
use idealcore::Polynomial;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_matrix(seed: u64, rows: usize, cols: usize) -> PolyMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = ring("x,y,z");
    let entries = (0..rows * cols)
        .map(|_| {
            if rng.gen_bool(0.2) {
                Polynomial::zero(&r)
            } else {
                random_poly(&mut rng, &r, 2, 1)
            }
        })
        .collect();
    PolyMatrix::new(&r, rows, cols, entries).unwrap()
}

fn random_alternating(seed: u64, n: usize) -> PolyMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = ring("x,y,z");
    let mut entries = vec![Polynomial::zero(&r); n * n];
    for i in 0..n {
        for j in i + 1..n {
            let e = random_poly(&mut rng, &r, 2, 1);
            entries[j * n + i] = e.scale(&r.field().from_i64(-1));
            entries[i * n + j] = e;
        }
    }
    PolyMatrix::new(&r, n, n, entries).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laplace_and_bareiss_agree(seed in any::<u64>(), n in 1usize..6) {
        let m = random_matrix(seed, n, n);
        prop_assert_eq!(m.det_laplace().unwrap(), m.det_bareiss().unwrap());
    }

    #[test]
    fn pfaffian_squares_to_determinant(seed in any::<u64>(), half in 1usize..4) {
        let m = random_alternating(seed, 2 * half);
        prop_assert!(m.is_alternating());
        let pf = m.pfaffian().unwrap();
        prop_assert_eq!(&pf * &pf, m.determinant().unwrap());
    }

    #[test]
    fn minor_ideals_descend_and_survive_row_operations(
        seed in any::<u64>(), rows in 2usize..4, cols in 2usize..4, t in 1usize..3,
    ) {
        let m = random_matrix(seed, rows, cols);
        let big = minor_ideal(&m, t + 1).unwrap_or_else(|_| idealcore::Ideal::zero(m.ring()));
        let small = minor_ideal(&m, t).unwrap();
        prop_assert!(small.contains_ideal(&big).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
        let factor = random_poly(&mut rng, m.ring(), 2, 1);
        let moved = m.add_row_multiple(0, 1, &factor);
        prop_assert!(minor_ideal(&moved, t).unwrap().equals(&small).unwrap());
    }
}

#[test]
fn four_by_four_pfaffians_match_the_expansion_formula() {
    let r = ring("x,y,z,w");
    let phi = PolyMatrix::parse(
        "0, -x^2, -y^2, -z^2, -w^2; x^2, 0, -w^2, y^2, -z^2; y^2, w^2, 0, -x^2, -x^2; \
         z^2, -y^2, x^2, 0, -y^2; w^2, z^2, x^2, y^2, 0",
        &r,
    )
    .unwrap();
    let gens: Vec<Polynomial> = (0..5)
        .map(|skip| {
            let idx: Vec<usize> = (0..5).filter(|&k| k != skip).collect();
            let a = |i: usize, j: usize| phi.get(idx[i], idx[j]).clone();
            &(&(&a(0, 1) * &a(2, 3)) - &(&a(0, 2) * &a(1, 3))) + &(&a(0, 3) * &a(1, 2))
        })
        .collect();
    let oracle = idealcore::Ideal::new(&r, gens).unwrap();
    let i = pfaffian_ideal(&phi, 4).unwrap();
    assert!(i.equals(&oracle).unwrap());
    assert_eq!(i.height().unwrap(), 3);
}

#[test]
fn g_s_on_the_hilbert_burch_presentation_of_a_square() {
    let r = ring("x,y");
    let i = ideal(&r, "x^2, x*y, y^2");
    let phi = PolyMatrix::parse("y, 0; -x, y; 0, -x", &r).unwrap();
    assert!(g_s_check(&i, &phi, 2).unwrap().holds);
    let g3 = g_s_check(&i, &phi, 3).unwrap();
    assert!(!g3.holds);
    assert_eq!(g3.rows.last().unwrap().height, Some(2));
}
