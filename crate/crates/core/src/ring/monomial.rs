use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponents = SmallVec<[u32; 8]>;

/// An exponent vector with its cached total degree.
///
/// Exponent arithmetic is checked: overflow panics instead of wrapping.
#[derive(Clone, Debug)]
pub struct Monomial {
    exps: Exponents,
    deg: u32,
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.deg == other.deg && self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            deg: 0,
        }
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        let deg = exps
            .iter()
            .try_fold(0u32, |acc, &e| acc.checked_add(e))
            .expect("exponent overflow");
        Monomial {
            exps: SmallVec::from_slice(exps),
            deg,
        }
    }

    pub fn var(nvars: usize, i: usize, power: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = power;
        m.deg = power;
        m
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Bit `i % 64` set when variable `i` occurs.
    #[inline]
    pub fn support_mask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << (i % 64);
            }
        }
        mask
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            deg: self.deg.checked_add(other.deg).expect("exponent overflow"),
        }
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.nvars() != other.nvars() {
            return Err(Error::LengthMismatch(self.nvars(), other.nvars()));
        }
        let mut exps = Exponents::with_capacity(self.nvars());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(
                a.checked_add(*b)
                    .ok_or_else(|| Error::OutOfRange("exponent overflow".into()))?,
            );
        }
        let deg = self
            .deg
            .checked_add(other.deg)
            .ok_or_else(|| Error::OutOfRange("exponent overflow".into()))?;
        Ok(Monomial { exps, deg })
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let exps = self
            .exps
            .iter()
            .map(|a| a.checked_mul(k).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            deg: self.deg.checked_mul(k).expect("exponent overflow"),
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Some(Monomial {
            exps,
            deg: other.deg - self.deg,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Reindex into a ring with `target_nvars` variables; variable `i` moves to `positions[i]`.
    pub fn remap(&self, positions: &[usize], target_nvars: usize) -> Monomial {
        let mut exps = Exponents::from_elem(0, target_nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            exps[positions[i]] = e;
        }
        Monomial { exps, deg: self.deg }
    }
}

/// Monomial order on exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    GrevLex,
    Lex,
    /// The first `elim` variables are compared with `outer`; ties go to `inner` on the rest.
    Block {
        elim: usize,
        inner: Box<TermOrder>,
        outer: Box<TermOrder>,
    },
}

impl TermOrder {
    /// Grevlex on both blocks, eliminating the first `elim` variables.
    pub fn elimination(elim: usize) -> Self {
        TermOrder::Block {
            elim,
            inner: Box::new(TermOrder::GrevLex),
            outer: Box::new(TermOrder::GrevLex),
        }
    }

    #[inline]
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::GrevLex => a
                .deg
                .cmp(&b.deg)
                .then_with(|| revlex_tail(&a.exps, &b.exps)),
            _ => self.cmp_slices(&a.exps, &b.exps),
        }
    }

    pub fn cmp_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            TermOrder::Lex => a.cmp(b),
            TermOrder::GrevLex => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                da.cmp(&db).then_with(|| revlex_tail(a, b))
            }
            TermOrder::Block { elim, inner, outer } => {
                let k = (*elim).min(a.len());
                outer
                    .cmp_slices(&a[..k], &b[..k])
                    .then_with(|| inner.cmp_slices(&a[k..], &b[k..]))
            }
        }
    }
}

/// Reverse-lexicographic tiebreak: the smaller exponent in the last differing variable wins.
#[inline]
fn revlex_tail(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// Compare two exponent vectors under `order`.
pub fn term_compare(e1: &[u32], e2: &[u32], order: &TermOrder) -> Result<Ordering> {
    if e1.len() != e2.len() {
        return Err(Error::LengthMismatch(e1.len(), e2.len()));
    }
    Ok(order.cmp_slices(e1, e2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn grevlex_prefers_x_squared() {
        assert_eq!(
            term_compare(&[2, 0], &[1, 1], &TermOrder::GrevLex).unwrap(),
            Ordering::Greater
        );
        // x*z < y^2 in grevlex(x,y,z)
        assert_eq!(
            term_compare(&[1, 0, 1], &[0, 2, 0], &TermOrder::GrevLex).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn lex_x_beats_y_squared() {
        assert_eq!(
            term_compare(&[1, 0], &[0, 2], &TermOrder::Lex).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn block_eliminates_first_variable() {
        let order = TermOrder::elimination(1);
        assert_eq!(
            term_compare(&[1, 0, 0], &[0, 9, 9], &order).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert_eq!(
            term_compare(&[1], &[1, 0], &TermOrder::Lex),
            Err(Error::LengthMismatch(1, 2))
        );
    }

    #[test]
    fn divisibility_and_quotient() {
        let a = Monomial::from_exponents(&[1, 2]);
        let b = Monomial::from_exponents(&[3, 2]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b).unwrap().exponents(), &[2, 0]);
        assert!(b.quotient_of(&a).is_none());
    }

    #[test]
    #[should_panic(expected = "exponent overflow")]
    fn overflow_is_fatal() {
        let a = Monomial::from_exponents(&[u32::MAX]);
        let _ = a.mul(&Monomial::from_exponents(&[1]));
    }

    fn orders() -> impl Strategy<Value = TermOrder> {
        prop_oneof![
            Just(TermOrder::GrevLex),
            Just(TermOrder::Lex),
            (0usize..=3).prop_map(TermOrder::elimination),
            (0usize..=3).prop_map(|k| TermOrder::Block {
                elim: k,
                inner: Box::new(TermOrder::Lex),
                outer: Box::new(TermOrder::GrevLex),
            }),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn orders_are_multiplicative_total_orders(
            order in orders(),
            a in prop::collection::vec(0u32..5, 3),
            b in prop::collection::vec(0u32..5, 3),
            c in prop::collection::vec(0u32..5, 3),
        ) {
            let ab = order.cmp_slices(&a, &b);
            prop_assert_eq!(ab, order.cmp_slices(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            let shift = |v: &[u32]| v.iter().zip(&c).map(|(x, y)| x + y).collect::<Vec<_>>();
            prop_assert_eq!(ab, order.cmp_slices(&shift(&a), &shift(&b)));
            // 1 is minimal
            prop_assert_ne!(order.cmp_slices(&a, &[0, 0, 0]), Ordering::Less);
            // transitivity
            if ab != Ordering::Greater && order.cmp_slices(&b, &c) != Ordering::Greater {
                prop_assert_ne!(order.cmp_slices(&a, &c), Ordering::Greater);
            }
            let (ma, mb) = (Monomial::from_exponents(&a), Monomial::from_exponents(&b));
            prop_assert_eq!(order.cmp_monomials(&ma, &mb), ab);
        }
    }
}
