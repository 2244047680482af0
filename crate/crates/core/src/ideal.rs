//! Ideals and their arithmetic: sums, products, powers, intersections, colons.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::{elimination_gens, reduced_basis_in, GroebnerBasis};
use crate::ring::{parse_poly_list, PolyRing, Polynomial, TermOrder};
use crate::span::EchelonSpan;

/// An ideal given by generators, with memoized reduced Gröbner bases.
///
/// Equality via [`Ideal::equals`] is mathematical; `==` is not implemented on purpose
/// because generator lists differ between equal ideals.
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    canonical: OnceLock<Arc<GroebnerBasis>>,
    others: Mutex<HashMap<TermOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let canonical = OnceLock::new();
        if let Some(gb) = self.canonical.get() {
            let _ = canonical.set(gb.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            canonical,
            others: Mutex::new(HashMap::new()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.iter().any(|g| !PolyRing::same(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Self::new_unchecked(ring, gens))
    }

    fn new_unchecked(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            canonical: OnceLock::new(),
            others: Mutex::new(HashMap::new()),
        }
    }

    pub fn parse(text: &str, ring: &Arc<PolyRing>) -> Result<Self> {
        Ok(Self::new_unchecked(ring, parse_poly_list(text, ring)?))
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Self::new_unchecked(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Self {
        Self::new_unchecked(ring, vec![Polynomial::one(ring)])
    }

    pub fn principal(f: &Polynomial) -> Self {
        Self::new_unchecked(f.ring(), vec![f.clone()])
    }

    /// The ideal generated by all variables.
    pub fn variables(ring: &Arc<PolyRing>) -> Self {
        Self::new_unchecked(
            ring,
            (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect(),
        )
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if PolyRing::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Reduced Gröbner basis under grevlex in the declared variable order.
    pub fn groebner(&self) -> Arc<GroebnerBasis> {
        self.canonical
            .get_or_init(|| {
                let ring = if *self.ring.order() == TermOrder::GrevLex {
                    self.ring.clone()
                } else {
                    self.ring.with_order(TermOrder::GrevLex)
                };
                Arc::new(reduced_basis_in(&ring, &self.gens))
            })
            .clone()
    }

    /// Reduced Gröbner basis under an arbitrary order, memoized per order.
    pub fn groebner_in(&self, order: &TermOrder) -> Arc<GroebnerBasis> {
        if *order == TermOrder::GrevLex {
            return self.groebner();
        }
        if let Some(gb) = self.others.lock().unwrap().get(order) {
            return gb.clone();
        }
        // Computed outside the lock; racing duplicates are identical.
        let ring = self.ring.with_order(order.clone());
        let gb = Arc::new(reduced_basis_in(&ring, &self.gens));
        self.others
            .lock()
            .unwrap()
            .entry(order.clone())
            .or_insert(gb)
            .clone()
    }

    /// Generators of the canonical reduced basis, in this ideal's ring.
    pub fn canonical_generators(&self) -> Vec<Polynomial> {
        self.groebner()
            .elements()
            .iter()
            .map(|g| g.in_ring(&self.ring))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        if self.gens.iter().any(Polynomial::is_constant) {
            return true;
        }
        self.groebner().is_unit()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    /// The common degree of the generators when the ideal is homogeneous and equigenerated.
    pub fn generator_degree(&self) -> Option<u32> {
        let d = self.gens.first()?.homogeneous_degree()?;
        self.gens
            .iter()
            .all(|g| g.homogeneous_degree() == Some(d))
            .then_some(d)
    }

    /// Krull dimension of `R/I`, `-1` for the unit ideal.
    pub fn dimension(&self) -> i64 {
        self.groebner().dimension()
    }

    /// `numvars - dim(R/I)`. In a polynomial ring every prime satisfies
    /// `ht p + dim R/p = numvars`, so this is the height of `I` with no unmixedness caveat.
    pub fn height(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::DegenerateIdeal("height of the zero ideal".into()));
        }
        let dim = self.dimension();
        if dim < 0 {
            return Err(Error::DegenerateIdeal("height of the unit ideal".into()));
        }
        Ok(self.ring.nvars() - dim as usize)
    }

    /// Same ideal with fewer generators: homogeneous generators are replaced by an echelon
    /// basis of their span in each degree, others are deduplicated.
    pub fn minimized(&self) -> Ideal {
        if !self.is_homogeneous() {
            let mut out: Vec<Polynomial> = Vec::new();
            for g in &self.gens {
                let g = g.monic();
                if !out.contains(&g) {
                    out.push(g);
                }
            }
            return Ideal::new_unchecked(&self.ring, out);
        }
        let mut by_degree: Vec<(u32, EchelonSpan)> = Vec::new();
        for g in &self.gens {
            let d = g.homogeneous_degree().unwrap();
            match by_degree.iter_mut().find(|(e, _)| *e == d) {
                Some((_, span)) => {
                    span.insert(g);
                }
                None => by_degree.push((d, EchelonSpan::from_polys([g]))),
            }
        }
        by_degree.sort_by_key(|(d, _)| *d);
        let gens = by_degree
            .into_iter()
            .flat_map(|(_, span)| span.rows().to_vec())
            .collect();
        let out = Ideal::new_unchecked(&self.ring, gens);
        if let Some(gb) = self.canonical.get() {
            let _ = out.canonical.set(gb.clone());
        }
        out
    }

    fn span_of_gens(&self) -> EchelonSpan {
        EchelonSpan::from_polys(&self.gens)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if !PolyRing::same(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Ok(true);
        }
        if self.is_zero() {
            return Ok(false);
        }
        if let (Some(d), Some(e)) = (self.generator_degree(), f.homogeneous_degree()) {
            if e < d {
                return Ok(false);
            }
            if e == d {
                return Ok(self.span_of_gens().contains(f));
            }
        }
        Ok(self.groebner().contains(f))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        if other.is_zero() {
            return Ok(true);
        }
        if let (Some(d), Some(e)) = (self.generator_degree(), other.generator_degree()) {
            if e < d {
                return Ok(false);
            }
            if d == e {
                return Ok(self.span_of_gens().contains_span(&other.span_of_gens()));
            }
        }
        let gb = self.groebner();
        Ok(other.gens.iter().all(|g| gb.contains(g)))
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        if let (Some(d), Some(e)) = (self.generator_degree(), other.generator_degree()) {
            if d != e {
                return Ok(false);
            }
            let (a, b) = (self.span_of_gens(), other.span_of_gens());
            return Ok(a.dim() == b.dim() && a.contains_span(&b));
        }
        Ok(*self.groebner() == *other.groebner())
    }

    /// Equality through reduced Gröbner bases only, bypassing the graded shortcut.
    pub fn equals_by_groebner(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        Ok(*self.groebner() == *other.groebner())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Ideal::new_unchecked(&self.ring, gens))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f * g);
            }
        }
        Ok(Ideal::new_unchecked(&self.ring, gens).minimized())
    }

    pub fn power(&self, j: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..j {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// `I ∩ J` as the `t`-free part of `t·I + (1 - t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        if self.gens.iter().any(Polynomial::is_constant) {
            return Ok(other.clone());
        }
        if other.gens.iter().any(Polynomial::is_constant) {
            return Ok(self.clone());
        }
        let ext = self.ring.extend_front("t", 1, TermOrder::elimination(1));
        let positions: Vec<usize> = (1..=self.ring.nvars()).collect();
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for f in &self.gens {
            gens.push(&t * &f.embed(&ext, &positions));
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &g.embed(&ext, &positions));
        }
        let kept = elimination_gens(&gens, 1, &self.ring);
        Ok(Ideal::new_unchecked(&self.ring, kept).minimized())
    }

    /// `I : (g) = (I ∩ (g)) / g`.
    pub fn colon_element(&self, g: &Polynomial) -> Result<Ideal> {
        if !PolyRing::same(g.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Err(Error::ColonByZero);
        }
        if self.contains(g)? {
            return Ok(Ideal::unit(&self.ring));
        }
        let inter = self.intersect(&Ideal::principal(g))?;
        let gens = inter
            .gens
            .iter()
            .map(|h| h.div_exact(g).expect("intersection with (g) is divisible by g"))
            .collect();
        Ok(Ideal::new_unchecked(&self.ring, gens).minimized())
    }

    /// `I : J`, the intersection of `I : (g)` over generators `g` of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let divisors = other.minimized();
        if divisors.is_zero() {
            return Err(Error::ColonByZero);
        }
        let mut acc: Option<Ideal> = None;
        for g in &divisors.gens {
            let q = self.colon_element(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => {
                    if q.contains_ideal(&a)? {
                        a
                    } else if a.gens.iter().any(Polynomial::is_constant) {
                        q
                    } else {
                        a.intersect(&q)?
                    }
                }
            });
        }
        Ok(acc.expect("at least one divisor"))
    }
}

pub fn ideal_sum(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.sum(j)
}

pub fn ideal_product(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.product(j)
}

pub fn ideal_power(i: &Ideal, j: u32) -> Ideal {
    i.power(j)
}

pub fn ideal_intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.intersect(j)
}

pub fn ideal_colon(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.colon(j)
}

pub fn ideal_equal(i: &Ideal, j: &Ideal) -> Result<bool> {
    i.equals(j)
}

pub fn ideal_member(f: &Polynomial, i: &Ideal) -> Result<bool> {
    i.contains(f)
}

pub fn height(i: &Ideal) -> Result<usize> {
    i.height()
}
