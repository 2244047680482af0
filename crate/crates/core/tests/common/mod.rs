#![allow(dead_code)]

use std::sync::Arc;

use idealcore::ring::Monomial;
use idealcore::{normal_form, FieldSpec, GroebnerBasis, Ideal, PolyRing, Polynomial, TermOrder};
use rand::Rng;

pub fn ring(vars: &str) -> Arc<PolyRing> {
    PolyRing::parse(vars, FieldSpec::default()).unwrap()
}

pub fn ideal(ring: &Arc<PolyRing>, text: &str) -> Ideal {
    idealcore::corpus::parse_ideal_expr(text, ring).unwrap()
}

pub type Exps = Vec<u32>;

/// Drop generators divisible by another; sorted for comparison.
pub fn minimize(gens: &[Exps]) -> Vec<Exps> {
    let divides = |a: &Exps, b: &Exps| a.iter().zip(b).all(|(x, y)| x <= y);
    let mut out: Vec<Exps> = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        let redundant = gens.iter().enumerate().any(|(l, h)| {
            l != k && divides(h, g) && (h != g || l < k)
        });
        if !redundant {
            out.push(g.clone());
        }
    }
    out.sort();
    out
}

pub fn lcm(a: &Exps, b: &Exps) -> Exps {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn monomial_intersect(a: &[Exps], b: &[Exps]) -> Vec<Exps> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            out.push(lcm(x, y));
        }
    }
    minimize(&out)
}

/// `(a) : (m)` for a single monomial `m`.
pub fn monomial_colon_one(a: &[Exps], m: &Exps) -> Vec<Exps> {
    let gens: Vec<Exps> = a
        .iter()
        .map(|g| g.iter().zip(m).map(|(x, y)| x.saturating_sub(*y)).collect())
        .collect();
    minimize(&gens)
}

pub fn monomial_colon(a: &[Exps], b: &[Exps]) -> Vec<Exps> {
    let mut acc = monomial_colon_one(a, &b[0]);
    for m in &b[1..] {
        acc = monomial_intersect(&acc, &monomial_colon_one(a, m));
    }
    acc
}

pub fn monomial_ideal(ring: &Arc<PolyRing>, gens: &[Exps]) -> Ideal {
    let one = ring.field().one();
    let polys = gens
        .iter()
        .map(|e| Polynomial::monomial(ring, Monomial::from_exponents(e), one.clone()))
        .collect();
    Ideal::new(ring, polys).unwrap()
}

/// Minimal monomial generators read off the reduced basis of a monomial ideal.
pub fn exponents_of(i: &Ideal) -> Vec<Exps> {
    let gens: Vec<Exps> = i
        .canonical_generators()
        .iter()
        .map(|p| {
            assert_eq!(p.len(), 1, "basis element {p} is not a monomial");
            p.leading_monomial().unwrap().exponents().to_vec()
        })
        .collect();
    minimize(&gens)
}

pub fn random_monomial_gens(rng: &mut impl Rng, nvars: usize, max_gens: usize, max_exp: u32) -> Vec<Exps> {
    let n = rng.gen_range(1..=max_gens);
    (0..n)
        .map(|_| (0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect())
        .collect()
}

/// A polynomial with a few terms of degree at most `max_deg` and small coefficients.
pub fn random_poly(rng: &mut impl Rng, ring: &Arc<PolyRing>, max_terms: usize, max_deg: u32) -> Polynomial {
    let field = ring.field();
    let n = ring.nvars();
    let terms = (0..rng.gen_range(1..=max_terms))
        .map(|_| {
            let mut e = vec![0u32; n];
            for _ in 0..rng.gen_range(1..=max_deg) {
                e[rng.gen_range(0..n)] += 1;
            }
            (Monomial::from_exponents(&e), field.from_i64([-3, -2, -1, 1, 2, 3][rng.gen_range(0..6)]))
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// A random form of degree `deg` with every coefficient drawn from the field.
pub fn random_form(rng: &mut impl Rng, ring: &Arc<PolyRing>, deg: u32) -> Polynomial {
    let field = ring.field();
    let p = field.characteristic() as i64;
    let mut terms = Vec::new();
    let n = ring.nvars();
    let mut exps = vec![0u32; n];
    fn walk(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == exps.len() {
            exps[i] = left;
            out.push(exps.clone());
            return;
        }
        for k in 0..=left {
            exps[i] = k;
            walk(i + 1, left - k, exps, out);
        }
    }
    let mut monos = Vec::new();
    walk(0, deg, &mut exps, &mut monos);
    for e in monos {
        terms.push((Monomial::from_exponents(&e), field.from_i64(rng.gen_range(1..p))));
    }
    Polynomial::from_terms(ring, terms)
}

/// Every S-polynomial of the basis has normal form zero, computed from scratch.
pub fn s_pairs_reduce_to_zero(gb: &GroebnerBasis) -> bool {
    let elems = gb.elements();
    let order: &TermOrder = gb.order();
    let field = gb.ring().field();
    for a in 0..elems.len() {
        for b in a + 1..elems.len() {
            let (fa, fb) = (&elems[a], &elems[b]);
            let (ma, mb) = (fa.leading_monomial().unwrap(), fb.leading_monomial().unwrap());
            let l = ma.lcm(mb);
            let ca = field.inv(fa.leading_coeff().unwrap());
            let cb = field.inv(fb.leading_coeff().unwrap());
            let left = fa.mul_term(&ca, &ma.quotient_of(&l).unwrap());
            let s = left.sub_mul_term(&cb, &mb.quotient_of(&l).unwrap(), fb);
            if !normal_form(&s, elems, order).unwrap().is_zero() {
                return false;
            }
        }
    }
    true
}
