//! Row-echelon bases of finite-dimensional polynomial spans.
//!
//! For homogeneous ideals generated in a single degree `d`, the degree-`d` component is the
//! linear span of the generators, so containment and equality reduce to linear algebra here.

use std::collections::HashMap;

use crate::ring::{sub_mul_terms, Monomial, Polynomial, Term};

#[derive(Clone, Debug, Default)]
pub(crate) struct EchelonSpan {
    rows: Vec<Polynomial>,
    pivots: HashMap<Monomial, usize>,
}

impl EchelonSpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_polys<'a>(polys: impl IntoIterator<Item = &'a Polynomial>) -> Self {
        let mut span = EchelonSpan::new();
        for p in polys {
            span.insert(p);
        }
        span
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Polynomial] {
        &self.rows
    }

    /// Eliminate every pivot monomial from `p`.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        let ring = p.ring().clone();
        let field = ring.field().clone();
        let order = ring.order().clone();
        let mut done: Vec<Term> = Vec::new();
        let mut terms = p.terms().to_vec();
        let mut start = 0;
        while start < terms.len() {
            let (m, c) = &terms[start];
            match self.pivots.get(m) {
                Some(&k) => {
                    let row = &self.rows[k];
                    let one = Monomial::one(m.nvars());
                    let c = c.clone();
                    terms = sub_mul_terms(&terms[start..], &c, &one, row.terms(), &field, &order);
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

    /// Add `p` to the span; returns whether it was independent.
    pub fn insert(&mut self, p: &Polynomial) -> bool {
        let r = self.reduce(p);
        if r.is_zero() {
            return false;
        }
        let r = r.monic();
        let lm = r.leading_monomial().unwrap().clone();
        self.pivots.insert(lm, self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.reduce(p).is_zero()
    }

    pub fn contains_span(&self, other: &EchelonSpan) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }
}
