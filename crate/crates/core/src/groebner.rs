//! Buchberger's algorithm with Gebauer–Möller pair elimination and sugar selection.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ring::{sub_mul_terms, Monomial, PolyRing, Polynomial, Term, TermOrder};

/// A reduced Gröbner basis: monic, interreduced, sorted by decreasing leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    elements: Vec<Polynomial>,
    masks: Vec<u64>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring.order() == other.ring.order() && self.elements == other.elements
    }
}

impl GroebnerBasis {
    fn from_reduced(ring: Arc<PolyRing>, elements: Vec<Polynomial>) -> Self {
        let masks = elements
            .iter()
            .map(|g| g.leading_monomial().map_or(0, Monomial::support_mask))
            .collect();
        GroebnerBasis {
            ring,
            elements,
            masks,
        }
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> &TermOrder {
        self.ring.order()
    }

    pub fn is_zero(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .filter_map(|g| g.leading_monomial().cloned())
            .collect()
    }

    /// Normal form of `f` (expressed in this basis' ring).
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        let f = f.in_ring(&self.ring);
        let reducers = Reducers::new(&self.elements, &self.masks);
        reducers.reduce_full(f)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    /// Krull dimension of the quotient by this ideal; `-1` for the unit ideal.
    pub fn dimension(&self) -> i64 {
        dimension_of_leading_terms(&self.leading_monomials(), self.ring.nvars())
    }
}

/// Borrowed view of monic reducers with their support masks.
struct Reducers<'a> {
    polys: &'a [Polynomial],
    masks: &'a [u64],
}

impl<'a> Reducers<'a> {
    fn new(polys: &'a [Polynomial], masks: &'a [u64]) -> Self {
        Reducers { polys, masks }
    }

    #[inline]
    fn find(&self, m: &Monomial) -> Option<usize> {
        let mask = m.support_mask();
        self.polys.iter().zip(self.masks).position(|(g, gm)| {
            gm & !mask == 0 && g.leading_monomial().is_some_and(|lm| lm.divides(m))
        })
    }

    /// Full reduction; every reducer must be monic.
    fn reduce_full(&self, f: Polynomial) -> Polynomial {
        let ring = f.ring().clone();
        let field = ring.field().clone();
        let order = ring.order().clone();
        let mut done: Vec<Term> = Vec::new();
        let mut terms = f.into_terms();
        let mut start = 0;
        while start < terms.len() {
            let (m, c) = &terms[start];
            match self.find(m) {
                Some(k) => {
                    let g = &self.polys[k];
                    let q = g.leading_monomial().unwrap().quotient_of(m).unwrap();
                    let c = c.clone();
                    terms = sub_mul_terms(&terms[start..], &c, &q, g.terms(), &field, &order);
                    start = 0;
                }
                None => {
                    done.push(terms[start].clone());
                    start += 1;
                }
            }
        }
        Polynomial::from_sorted(&ring, done)
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Buchberger {
    ring: Arc<PolyRing>,
    polys: Vec<Polynomial>,
    sugars: Vec<u32>,
    masks: Vec<u64>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl Buchberger {
    fn new(ring: Arc<PolyRing>) -> Self {
        Buchberger {
            ring,
            polys: Vec::new(),
            sugars: Vec::new(),
            masks: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
        }
    }

    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().expect("nonzero basis element")
    }

    fn reduce(&self, f: Polynomial) -> Polynomial {
        // Inactive elements are still valid reducers: their leading terms lie in the ideal.
        Reducers::new(&self.polys, &self.masks).reduce_full(f)
    }

    /// Insert a nonzero fully reduced polynomial and update pairs.
    fn insert(&mut self, h: Polynomial, sugar: u32) {
        let h = h.monic();
        let h_idx = self.polys.len();
        self.masks.push(h.leading_monomial().unwrap().support_mask());
        self.polys.push(h);
        self.sugars.push(sugar);
        let h_lm = self.lm(h_idx).clone();

        let candidates: Vec<(usize, Monomial)> = self
            .active
            .iter()
            .map(|&g| (g, h_lm.lcm(self.lm(g))))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (k, (g1, l1)) in candidates.iter().enumerate() {
            let coprime = h_lm.is_coprime(self.lm(*g1));
            let dominated = candidates[k + 1..]
                .iter()
                .chain(kept.iter())
                .any(|(_, l2)| l2.divides(l1));
            if coprime || !dominated {
                kept.push((*g1, l1.clone()));
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !h_lm.is_coprime(self.lm(*g)))
            .map(|(g, lcm)| {
                let sugar = self.pair_sugar(g, h_idx, &lcm);
                Pair {
                    i: g,
                    j: h_idx,
                    lcm,
                    sugar,
                }
            })
            .collect();

        let old = std::mem::take(&mut self.pairs);
        self.pairs = old
            .into_iter()
            .filter(|p| {
                !h_lm.divides(&p.lcm)
                    || h_lm.lcm(self.lm(p.i)) == p.lcm
                    || h_lm.lcm(self.lm(p.j)) == p.lcm
            })
            .collect();
        self.pairs.extend(new_pairs);

        let polys = &self.polys;
        self.active.retain(|&g| {
            !h_lm.divides(polys[g].leading_monomial().unwrap())
        });
        self.active.push(h_idx);
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let si = self.sugars[i] + (lcm.degree() - self.lm(i).degree());
        let sj = self.sugars[j] + (lcm.degree() - self.lm(j).degree());
        si.max(sj)
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.ring.order();
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let ord = a
                .sugar
                .cmp(&b.sugar)
                .then_with(|| order.cmp_monomials(&a.lcm, &b.lcm))
                .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)));
            if ord == Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn s_polynomial(&self, p: &Pair) -> Polynomial {
        let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
        let one = self.ring.field().one();
        let qf = self.lm(p.i).quotient_of(&p.lcm).unwrap();
        let qg = self.lm(p.j).quotient_of(&p.lcm).unwrap();
        f.mul_term(&one, &qf).sub_mul_term(&one, &qg, g)
    }

    /// Returns `false` once the unit ideal has been detected.
    fn add_generator(&mut self, f: Polynomial, sugar: u32) -> bool {
        let h = self.reduce(f);
        if h.is_zero() {
            return true;
        }
        if h.is_constant() {
            return false;
        }
        let sugar = sugar.max(h.total_degree().unwrap_or(0));
        self.insert(h, sugar);
        true
    }

    fn run(mut self, gens: Vec<Polynomial>) -> Vec<Polynomial> {
        let order = self.ring.order().clone();
        let mut gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        gens.sort_by(|a, b| {
            a.total_degree()
                .cmp(&b.total_degree())
                .then_with(|| {
                    order.cmp_monomials(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
                })
        });
        for g in gens {
            let sugar = g.total_degree().unwrap_or(0);
            if !self.add_generator(g, sugar) {
                return vec![Polynomial::one(&self.ring)];
            }
        }
        while let Some(pair) = self.pop_pair() {
            let s = self.s_polynomial(&pair);
            if !self.add_generator(s, pair.sugar) {
                return vec![Polynomial::one(&self.ring)];
            }
        }
        self.finish()
    }

    fn finish(self) -> Vec<Polynomial> {
        let order = self.ring.order().clone();
        let mut basis: Vec<Polynomial> = self
            .active
            .iter()
            .map(|&i| self.polys[i].clone())
            .collect();
        basis.sort_by(|a, b| {
            order.cmp_monomials(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
        });
        // Tail-reduce each element against the others; leading terms are untouched because
        // the active leading monomials are pairwise non-divisible.
        for k in 0..basis.len() {
            let others: Vec<Polynomial> = basis
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, g)| g.clone())
                .collect();
            let masks: Vec<u64> = others
                .iter()
                .map(|g| g.leading_monomial().unwrap().support_mask())
                .collect();
            let reduced = Reducers::new(&others, &masks).reduce_full(basis[k].clone());
            basis[k] = reduced.monic();
        }
        basis
    }
}

fn common_ring(gens: &[Polynomial]) -> Result<Option<Arc<PolyRing>>> {
    let Some(first) = gens.first() else {
        return Ok(None);
    };
    let ring = first.ring().clone();
    if gens.iter().any(|g| !PolyRing::same(g.ring(), &ring)) {
        return Err(Error::RingMismatch);
    }
    Ok(Some(ring))
}

/// Reduced Gröbner basis of `gens` in `ring` under the ring's own order.
pub(crate) fn reduced_basis_in(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> GroebnerBasis {
    let gens: Vec<Polynomial> = gens.iter().map(|g| g.in_ring(ring)).collect();
    let elements = Buchberger::new(ring.clone()).run(gens);
    GroebnerBasis::from_reduced(ring.clone(), elements)
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
///
/// The result lives in a ring with the same variables as `gens` but ordered by `order`.
/// Zero generators are dropped; an empty or all-zero list gives the empty basis.
pub fn groebner_basis(gens: &[Polynomial], order: &TermOrder) -> Result<GroebnerBasis> {
    let Some(ring) = common_ring(gens)? else {
        return Err(Error::DegenerateIdeal(
            "cannot infer the ring of an empty generator list".into(),
        ));
    };
    let ring = if ring.order() == order {
        ring
    } else {
        ring.with_order(order.clone())
    };
    Ok(reduced_basis_in(&ring, gens))
}

/// Remainder of `f` on division by `basis` under `order`, returned in `f`'s ring.
///
/// When `basis` is not a Gröbner basis the remainder depends on the divisor order.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &TermOrder) -> Result<Polynomial> {
    if basis.iter().any(|g| !PolyRing::same(g.ring(), f.ring())) {
        return Err(Error::RingMismatch);
    }
    let ring = if f.ring().order() == order {
        f.ring().clone()
    } else {
        f.ring().with_order(order.clone())
    };
    let monic: Vec<Polynomial> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.in_ring(&ring).monic())
        .collect();
    let masks: Vec<u64> = monic
        .iter()
        .map(|g| g.leading_monomial().unwrap().support_mask())
        .collect();
    let r = Reducers::new(&monic, &masks).reduce_full(f.in_ring(&ring));
    Ok(r.in_ring(f.ring()))
}

/// Multivariate division with quotient bookkeeping: `f = sum(q_i * g_i) + r` in `f`'s ring.
pub fn divide(f: &Polynomial, divisors: &[Polynomial]) -> Result<(Vec<Polynomial>, Polynomial)> {
    if divisors.iter().any(|g| !PolyRing::same(g.ring(), f.ring())) {
        return Err(Error::RingMismatch);
    }
    let ring = f.ring();
    let field = ring.field();
    let mut quotients: Vec<Vec<Term>> = vec![Vec::new(); divisors.len()];
    let mut rem: Vec<Term> = Vec::new();
    let mut p = f.clone();
    while let Some((m, c)) = p.leading_term().cloned() {
        let hit = divisors.iter().enumerate().find_map(|(k, g)| {
            let (gm, gc) = g.leading_term()?;
            gm.quotient_of(&m).map(|q| (k, q, field.div(&c, gc)))
        });
        match hit {
            Some((k, q, coeff)) => {
                p = p.sub_mul_term(&coeff, &q, &divisors[k]);
                quotients[k].push((q, coeff));
            }
            None => {
                rem.push((m.clone(), c));
                p = Polynomial::from_sorted(ring, p.terms()[1..].to_vec());
            }
        }
    }
    let quotients = quotients
        .into_iter()
        .map(|t| Polynomial::from_terms(ring, t))
        .collect();
    Ok((quotients, Polynomial::from_sorted(ring, rem)))
}

/// Eliminate the first `drop_count` variables: generators of `I ∩ k[x_{drop_count+1}, ...]`
/// expressed in the smaller ring (grevlex).
pub fn eliminate(ideal: &Ideal, drop_count: usize) -> Result<Ideal> {
    let ring = ideal.ring();
    if drop_count == 0 || drop_count >= ring.nvars() {
        return Err(Error::OutOfRange(format!(
            "cannot eliminate {drop_count} of {} variables",
            ring.nvars()
        )));
    }
    let target = ring.drop_front(drop_count);
    let kept = elimination_gens(ideal.gens(), drop_count, &target);
    Ideal::new(&target, kept)
}

/// Elements of the elimination ideal, mapped into `target` (whose variables are the
/// trailing `nvars - drop_count` variables of the generators' ring).
pub(crate) fn elimination_gens(
    gens: &[Polynomial],
    drop_count: usize,
    target: &Arc<PolyRing>,
) -> Vec<Polynomial> {
    let Some(src) = gens.first().map(|g| g.ring().clone()) else {
        return Vec::new();
    };
    let elim_ring = src.with_order(TermOrder::elimination(drop_count));
    let gb = reduced_basis_in(&elim_ring, gens);
    let n = src.nvars();
    gb.elements()
        .iter()
        .filter(|g| {
            g.terms()
                .iter()
                .all(|(m, _)| m.exponents()[..drop_count].iter().all(|&e| e == 0))
        })
        .map(|g| {
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| (Monomial::from_exponents(&m.exponents()[drop_count..n]), c.clone()))
                .collect();
            Polynomial::from_terms(target, terms)
        })
        .collect()
}

/// Krull dimension of `k[x]/I` from the leading monomials of a Gröbner basis of `I`:
/// the size of a largest variable set containing the support of no leading monomial.
pub fn dimension_of_leading_terms(lms: &[Monomial], nvars: usize) -> i64 {
    if lms.iter().any(Monomial::is_one) {
        return -1;
    }
    assert!(nvars <= 63, "dimension search supports at most 63 variables");
    let supports: Vec<u64> = lms
        .iter()
        .map(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u64, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    let mut best = 0usize;
    independent_search(&supports, nvars, 0, 0, 0, &mut best);
    best as i64
}

fn independent_search(
    supports: &[u64],
    nvars: usize,
    next: usize,
    chosen: u64,
    size: usize,
    best: &mut usize,
) {
    if size + (nvars - next) <= *best {
        return;
    }
    if next == nvars {
        *best = size;
        return;
    }
    let with = chosen | (1 << next);
    if supports.iter().all(|s| s & !with != 0) {
        independent_search(supports, nvars, next + 1, with, size + 1, best);
    }
    independent_search(supports, nvars, next + 1, chosen, size, best);
}

/// Every S-polynomial of `basis` reduces to zero modulo `basis`.
pub fn satisfies_buchberger_criterion(basis: &GroebnerBasis) -> bool {
    let elems = basis.elements();
    let one = basis.ring().field().one();
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            let (li, lj) = (
                elems[i].leading_monomial().unwrap(),
                elems[j].leading_monomial().unwrap(),
            );
            let lcm = li.lcm(lj);
            let s = elems[i]
                .mul_term(&one, &li.quotient_of(&lcm).unwrap())
                .scale(&basis.ring().field().inv(elems[i].leading_coeff().unwrap()))
                .sub_mul_term(
                    &basis.ring().field().inv(elems[j].leading_coeff().unwrap()),
                    &lj.quotient_of(&lcm).unwrap(),
                    &elems[j],
                );
            if !basis.reduce(&s).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_poly, parse_poly_list, FieldSpec};

    fn ring(vars: &str) -> Arc<PolyRing> {
        PolyRing::parse(vars, FieldSpec::default()).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let r = ring("x,y");
        let p = |s| parse_poly(s, &r).unwrap();
        let g = TermOrder::GrevLex;
        assert!(normal_form(&p("x^2"), &[p("x")], &g).unwrap().is_zero());
        assert_eq!(normal_form(&p("y"), &[p("x")], &g).unwrap(), p("y"));
        assert_eq!(
            normal_form(&p("x^2*y + y^3"), &[p("x^2 - y")], &g).unwrap(),
            p("y^2 + y^3")
        );
    }

    #[test]
    fn basis_of_independent_variables() {
        let r = ring("x,y");
        let gb = groebner_basis(&parse_poly_list("x, y", &r).unwrap(), &TermOrder::GrevLex).unwrap();
        let printed: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
        assert_eq!(printed, ["x", "y"]);
    }

    #[test]
    fn lex_basis_contains_y_cubed() {
        let r = ring("x,y");
        let gens = parse_poly_list("x^2 - y, x^3", &r).unwrap();
        let gb = groebner_basis(&gens, &TermOrder::Lex).unwrap();
        let y3 = parse_poly("y^3", &r).unwrap();
        assert!(gb.contains(&y3));
        // Hand elimination: x^3 - x*(x^2 - y) = x*y, x*(x*y) - y*(x^2 - y) = y^2 ... so the
        // ideal is (x^2 - y, x*y, y^2) and its lex basis is {x^2 - y, x*y, y^2}.
        let printed: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
        assert_eq!(printed, ["x^2 - y", "x*y", "y^2"]);
        assert!(satisfies_buchberger_criterion(&gb));
    }

    #[test]
    fn monomial_power_basis() {
        let r = ring("x,y");
        let gens = parse_poly_list("x^4, x^3*y, x^2*y^2, x*y^3, y^4", &r).unwrap();
        let gb = groebner_basis(&gens, &TermOrder::GrevLex).unwrap();
        assert_eq!(gb.elements().len(), 5);
    }

    #[test]
    fn zero_and_unit() {
        let r = ring("x,y");
        let gb = groebner_basis(&[Polynomial::zero(&r)], &TermOrder::GrevLex).unwrap();
        assert!(gb.is_zero());
        let gens = parse_poly_list("x*y - 1, x", &r).unwrap();
        let gb = groebner_basis(&gens, &TermOrder::GrevLex).unwrap();
        assert!(gb.is_unit());
        assert_eq!(gb.elements()[0].to_string(), "1");
    }

    #[test]
    fn elimination_examples() {
        let r = ring("t,x,y");
        let elim = |s: &str| {
            let i = Ideal::parse(s, &r).unwrap();
            eliminate(&i, 1).unwrap()
        };
        assert!(elim("t - x").is_zero());
        let e = elim("t*x, t - y");
        assert_eq!(e.gens().len(), 1);
        assert_eq!(e.gens()[0].to_string(), "x*y");
        let e = elim("t*x - 1, t*y");
        assert_eq!(e.gens()[0].to_string(), "y");
        assert!(eliminate(&Ideal::parse("x", &r).unwrap(), 3).is_err());
    }

    #[test]
    fn dimension_examples() {
        let r = ring("x,y");
        let dim = |s: &str| Ideal::parse(s, &r).unwrap().dimension();
        assert_eq!(dim("x, y"), 0);
        assert_eq!(dim("x"), 1);
        assert_eq!(dim("x*y"), 1);
        assert_eq!(dim("1"), -1);
        assert_eq!(dim("0"), 2);
    }

    #[test]
    fn division_bookkeeping() {
        let r = ring("x,y,z");
        let f = parse_poly("x^3*y + x*z^2 - y^2*z + 3", &r).unwrap();
        let divs = parse_poly_list("x*y - z, x^2 + y", &r).unwrap();
        let (qs, rem) = divide(&f, &divs).unwrap();
        let back = qs
            .iter()
            .zip(&divs)
            .fold(rem.clone(), |acc, (q, g)| &acc + &(q * g));
        assert_eq!(back, f);
    }
}
