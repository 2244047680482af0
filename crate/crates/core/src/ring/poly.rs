use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::One;

use super::field::{FieldSpec, Scalar, SignedCoeff};
use super::monomial::{Monomial, TermOrder};
use crate::error::{Error, Result};

/// A polynomial ring `k[x_1, ..., x_n]` with a fixed term order. Always handled through `Arc`.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<String>,
    field: FieldSpec,
    order: TermOrder,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new(vars: Vec<String>, field: FieldSpec, order: TermOrder) -> Result<Arc<Self>> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::InvalidRing(format!("bad variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if let FieldSpec::PrimeField(p) = field {
            FieldSpec::prime(p)?;
        }
        Ok(Arc::new(PolyRing { vars, field, order }))
    }

    /// Parse a comma separated variable list such as `"x,y,z"` into a grevlex ring.
    pub fn parse(vars: &str, field: FieldSpec) -> Result<Arc<Self>> {
        let names = vars
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
        PolyRing::new(names, field, TermOrder::GrevLex)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn with_order(&self, order: TermOrder) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            vars: self.vars.clone(),
            field: self.field.clone(),
            order,
        })
    }

    /// Ring with `count` fresh variables prepended, named so they cannot clash with ours.
    pub fn extend_front(&self, prefix: &str, count: usize, order: TermOrder) -> Arc<PolyRing> {
        let mut vars = Vec::with_capacity(count + self.nvars());
        let mut k = 0usize;
        while vars.len() < count {
            let name = format!("_{prefix}{k}");
            k += 1;
            if !self.vars.contains(&name) {
                vars.push(name);
            }
        }
        vars.extend(self.vars.iter().cloned());
        Arc::new(PolyRing {
            vars,
            field: self.field.clone(),
            order,
        })
    }

    /// Ring on the variables after the first `drop`, with grevlex.
    pub fn drop_front(&self, drop: usize) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            vars: self.vars[drop..].to_vec(),
            field: self.field.clone(),
            order: TermOrder::GrevLex,
        })
    }

    #[inline]
    pub fn same(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

pub type Term = (Monomial, Scalar);

/// A polynomial in canonical form: terms strictly decreasing in the ring's order, no zero
/// coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        PolyRing::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

/// Which arithmetic operation [`poly_arith`] performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Ring-checked arithmetic.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    if !PolyRing::same(&a.ring, &b.ring) {
        return Err(Error::RingMismatch);
    }
    Ok(match op {
        ArithOp::Add => a.add_poly(b),
        ArithOp::Sub => a.sub_poly(b),
        ArithOp::Mul => a.mul_poly(b),
    })
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Scalar) -> Self {
        let terms = if ring.field.is_zero(&c) {
            Vec::new()
        } else {
            vec![(Monomial::one(ring.nvars()), c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.nvars(), i, 1), ring.field.one())],
        }
    }

    pub fn monomial(ring: &Arc<PolyRing>, mono: Monomial, c: Scalar) -> Self {
        assert_eq!(mono.nvars(), ring.nvars());
        let terms = if ring.field.is_zero(&c) {
            Vec::new()
        } else {
            vec![(mono, c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Build from arbitrary terms: sorts, merges duplicates and drops zeros.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<Term>) -> Self {
        let order = ring.order();
        let field = ring.field();
        terms.sort_by(|a, b| order.cmp_monomials(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if field.is_zero(lc) {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if field.is_zero(lc) {
                out.pop();
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Trusted constructor: `terms` must already be canonical for `ring`.
    pub(crate) fn from_sorted(ring: &Arc<PolyRing>, terms: Vec<Term>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn field(&self) -> &FieldSpec {
        &self.ring.field
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.1)
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Degree when every term has the same total degree. Zero is homogeneous of no degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        let field = self.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), field.mul(a, c)))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if self.field().is_one(lc) => self.clone(),
            Some(lc) => self.scale(&self.field().inv(lc)),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Polynomial {
        let field = self.field();
        let terms = self
            .terms
            .iter()
            .map(|(tm, tc)| (tm.mul(m), field.mul(tc, c)))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let field = self.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let fix = |c: &Scalar| if negate_other { field.neg(c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match order.cmp_monomials(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), fix(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        field.sub(&a[i].1, &b[j].1)
                    } else {
                        field.add(&a[i].1, &b[j].1)
                    };
                    if !field.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), fix(c))));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn add_poly(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, false)
    }

    fn sub_poly(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, true)
    }

    fn mul_poly(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return large.mul_term(c, m);
        }
        let field = self.field();
        let mut prods = Vec::with_capacity(self.len() * other.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                prods.push((ma.mul(mb), field.mul(ca, cb)));
            }
        }
        Polynomial::from_terms(&self.ring, prods)
    }

    /// `self - c * m * g`, the elementary reduction step.
    pub fn sub_mul_term(&self, c: &Scalar, m: &Monomial, g: &Polynomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: sub_mul_terms(&self.terms, c, m, &g.terms, self.ring.field(), self.ring.order()),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let (dm, dc) = d.leading_term()?;
        let field = self.field();
        let dc_inv = field.inv(dc);
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let qm = dm.quotient_of(m)?;
            let qc = field.mul(c, &dc_inv);
            rem = rem.sub_mul_term(&qc, &qm, d);
            quot.push((qm, qc));
        }
        Some(Polynomial {
            ring: self.ring.clone(),
            terms: quot,
        })
    }

    /// Move into `target`, sending variable `i` to position `positions[i]`.
    pub fn embed(&self, target: &Arc<PolyRing>, positions: &[usize]) -> Polynomial {
        assert_eq!(positions.len(), self.ring.nvars());
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.remap(positions, n), c.clone()))
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Same variables, different order (or same ring under another handle).
    pub fn in_ring(&self, target: &Arc<PolyRing>) -> Polynomial {
        assert_eq!(target.nvars(), self.ring.nvars());
        if Arc::ptr_eq(target, &self.ring) {
            return self.clone();
        }
        if target.order() == self.ring.order() {
            return Polynomial {
                ring: target.clone(),
                terms: self.terms.clone(),
            };
        }
        Polynomial::from_terms(target, self.terms.clone())
    }

    /// Evaluate at a point of the coefficient field.
    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        let field = self.field();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (e, x) in m.exponents().iter().zip(point) {
                for _ in 0..*e {
                    t = field.mul(&t, x);
                }
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let field = self.field();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponents()[i] > 0)
            .map(|(m, c)| {
                let e = m.exponents()[i];
                let mut exps = m.exponents().to_vec();
                exps[i] -= 1;
                (
                    Monomial::from_exponents(&exps),
                    field.mul(c, &field.from_i64(e as i64)),
                )
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }
}

/// Canonical terms of `a - c * m * g` for canonical `a` and `g`.
pub(crate) fn sub_mul_terms(
    a: &[Term],
    c: &Scalar,
    m: &Monomial,
    g: &[Term],
    field: &FieldSpec,
    order: &TermOrder,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + g.len());
    let mut i = 0;
    for (gm, gc) in g {
        let pm = gm.mul(m);
        let pc = field.mul(gc, c);
        while i < a.len() && order.cmp_monomials(&a[i].0, &pm) == Ordering::Greater {
            out.push(a[i].clone());
            i += 1;
        }
        if i < a.len() && a[i].0 == pm {
            let s = field.sub(&a[i].1, &pc);
            if !field.is_zero(&s) {
                out.push((pm, s));
            }
            i += 1;
        } else {
            out.push((pm, field.neg(&pc)));
        }
    }
    out.extend(a[i..].iter().cloned());
    out
}

macro_rules! binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                assert!(
                    PolyRing::same(&self.ring, &rhs.ring),
                    "polynomials from different rings"
                );
                self.$inner(rhs)
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add_poly);
binop!(Sub, sub, sub_poly);
binop!(Mul, mul, mul_poly);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, vars: &[String], m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (name, &e) in vars.iter().zip(m.exponents()) {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    /// Prints in the input grammar: `x^2 - y^2 + x*z`, `3/2*x`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let sc = SignedCoeff::of(field, c);
            match (k, sc.negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{}", sc.abs)?;
            } else {
                if !sc.abs.is_one() {
                    write!(f, "{}*", sc.abs)?;
                }
                write_monomial(f, &self.ring.vars, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;
    use proptest::prelude::*;

    fn ring(field: FieldSpec) -> Arc<PolyRing> {
        PolyRing::parse("x,y,z", field).unwrap()
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        parse_poly(s, r).unwrap()
    }

    #[test]
    fn cancellation() {
        let r = ring(FieldSpec::Rationals);
        let sum = poly_arith(&p(&r, "x+y"), &p(&r, "x-y"), ArithOp::Add).unwrap();
        assert_eq!(sum, p(&r, "2*x"));
        assert_eq!(sum.to_string(), "2*x");
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(FieldSpec::default());
        let prod = poly_arith(&p(&r, "x+y"), &p(&r, "x-y"), ArithOp::Mul).unwrap();
        assert_eq!(prod.to_string(), "x^2 - y^2");
    }

    #[test]
    fn gf5_product() {
        let r = ring(FieldSpec::prime(5).unwrap());
        let prod = poly_arith(&p(&r, "2*x"), &p(&r, "3*x"), ArithOp::Mul).unwrap();
        assert_eq!(prod, p(&r, "x^2"));
    }

    #[test]
    fn ring_mismatch() {
        let r1 = ring(FieldSpec::default());
        let r2 = PolyRing::parse("x,y", FieldSpec::default()).unwrap();
        assert_eq!(
            poly_arith(&p(&r1, "x"), &p(&r2, "x"), ArithOp::Add),
            Err(Error::RingMismatch)
        );
    }

    #[test]
    fn exact_division() {
        let r = ring(FieldSpec::Rationals);
        let a = p(&r, "x^2 - y^2");
        assert_eq!(a.div_exact(&p(&r, "x+y")).unwrap(), p(&r, "x-y"));
        assert!(a.div_exact(&p(&r, "x+z")).is_none());
    }

    #[test]
    fn homogeneity() {
        let r = ring(FieldSpec::default());
        assert_eq!(p(&r, "x^2 - y*z").homogeneous_degree(), Some(2));
        assert!(!p(&r, "x^2 - y").is_homogeneous());
        assert!(Polynomial::zero(&r).is_homogeneous());
    }

    #[test]
    fn derivative_and_evaluation() {
        let r = ring(FieldSpec::Rationals);
        let f = p(&r, "x^3*y + 2*z");
        assert_eq!(f.derivative(0), p(&r, "3*x^2*y"));
        let field = r.field();
        let pt = [field.from_i64(2), field.from_i64(5), field.from_i64(-1)];
        assert_eq!(f.evaluate(&pt), field.from_i64(38));
    }

    fn arb_poly(r: Arc<PolyRing>) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -4i64..5), 0..5).prop_map(
            move |ts| {
                let f = r.field().clone();
                Polynomial::from_terms(
                    &r,
                    ts.into_iter()
                        .map(|((a, b, c), k)| (Monomial::from_exponents(&[a, b, c]), f.from_i64(k)))
                        .collect(),
                )
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_axioms_mod_p(
            (a, b, c) in {
                let r = ring(FieldSpec::prime(101).unwrap());
                (arb_poly(r.clone()), arb_poly(r.clone()), arb_poly(r))
            }
        ) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn ring_axioms_over_q(
            (a, b, c) in {
                let r = ring(FieldSpec::Rationals);
                (arb_poly(r.clone()), arb_poly(r.clone()), arb_poly(r))
            }
        ) {
            prop_assert_eq!(&a * &(&b - &c), &(&a * &b) - &(&a * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            if !b.is_zero() {
                prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
            }
        }

        #[test]
        fn canonical_form_is_order_independent(
            ts in prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -4i64..5), 0..6)
        ) {
            let r = ring(FieldSpec::default());
            let f = r.field().clone();
            let mk = |v: &[((u32, u32, u32), i64)]| Polynomial::from_terms(
                &r,
                v.iter().map(|((a, b, c), k)| (Monomial::from_exponents(&[*a, *b, *c]), f.from_i64(*k))).collect(),
            );
            let mut rev = ts.clone();
            rev.reverse();
            prop_assert_eq!(mk(&ts), mk(&rev));
            // term by term accumulation agrees too
            let folded = ts.iter().fold(Polynomial::zero(&r), |acc, t| &acc + &mk(std::slice::from_ref(t)));
            prop_assert_eq!(mk(&ts), folded);
        }
    }
}
