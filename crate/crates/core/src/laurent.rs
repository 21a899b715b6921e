//! Sparse Laurent polynomials in `Z[X^±1, Y^±1]`.
//!
//! Coefficients are arbitrary precision. The monomial `X^i Y^j` is identified
//! with the unit square whose lower-left corner is `(i, j)`; a polynomial
//! drawn this way is a "piece".

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::word::Symmetry;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    // Invariant: no stored coefficient is zero.
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial(0, 0, 1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> LaurentPoly {
        LaurentPoly::monomial(0, 0, c)
    }

    pub fn monomial<C: Into<BigInt>>(i: i64, j: i64, c: C) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        p.add_term(i, j, c.into());
        p
    }

    /// `1 - X^a Y^b`
    pub fn one_minus_monomial(a: i64, b: i64) -> LaurentPoly {
        &LaurentPoly::one() - &LaurentPoly::monomial(a, b, 1)
    }

    pub fn from_terms<I, C>(terms: I) -> LaurentPoly
    where
        I: IntoIterator<Item = ((i64, i64), C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c.into());
        }
        p
    }

    /// Adds `c X^i Y^j` in place.
    pub fn add_term(&mut self, i: i64, j: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: i64, j: i64) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Nonzero terms in `(i, j)`-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same as [`LaurentPoly::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn scalar_mul<C: Into<BigInt>>(&self, k: C) -> LaurentPoly {
        let k = k.into();
        if k.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, c * &k)).collect(),
        }
    }

    /// Multiplication by `X^i Y^j`.
    pub fn translate(&self, (di, dj): (i64, i64)) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + di, j + dj), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        (0..k).fold(LaurentPoly::one(), |acc, _| &acc * self)
    }

    /// `P(1, 1)`, the sum of all coefficients.
    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Whether `1 - X^a Y^b` divides `self`.
    ///
    /// The quotient of the group ring `Z[Z^2]` by the ideal of `1 - X^a Y^b`
    /// is the group ring of `Z^2 / <(a, b)>`, so divisibility is the vanishing
    /// of every coset sum.
    pub fn divisible_by_one_minus_monomial(&self, (a, b): (i64, i64)) -> Result<bool> {
        if (a, b) == (0, 0) {
            return Err(Error::OutOfRange {
                what: "monomial exponent",
                value: 0,
                expected: "(a, b) != (0, 0)".into(),
            });
        }
        let g = a.gcd(&b);
        let (p, q) = (a / g, b / g);
        // p*s + q*t = 1, so (i, j) -> (q*i - p*j, s*i + t*j) is unimodular.
        let ext = p.extended_gcd(&q);
        let sign = ext.gcd.signum();
        let (s, t) = (ext.x * sign, ext.y * sign);
        debug_assert_eq!(p * s + q * t, 1);
        let mut sums: BTreeMap<(i64, i64), BigInt> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            let across = q * i - p * j;
            let along = (s * i + t * j).rem_euclid(g.abs());
            *sums.entry((across, along)).or_default() += c;
        }
        Ok(sums.values().all(Zero::is_zero))
    }

    /// Reduces exponents modulo `n` in both variables.
    pub fn reduce_mod_torus(&self, n: usize) -> TorusPiece {
        assert!(n >= 1, "torus size must be positive");
        let mut piece = TorusPiece::zero(n);
        for (&(i, j), c) in &self.terms {
            *piece.entry_mut(i, j) += c;
        }
        piece
    }

    /// Coordinate substitution on the support: `SwapXY` gives `P(Y, X)`,
    /// `InvX` gives `P(X^-1, Y)`, `InvY` gives `P(X, Y^-1)`.
    pub fn apply_symmetry(&self, sym: Symmetry) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| {
                    let e = match sym {
                        Symmetry::SwapXY => (j, i),
                        Symmetry::InvX => (-i, j),
                        Symmetry::InvY => (i, -j),
                    };
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// `(min_i, min_j, max_i, max_j)` of the support.
    pub fn bounding_box(&self) -> Option<(i64, i64, i64, i64)> {
        let mut it = self.terms.keys();
        let &(i0, j0) = it.next()?;
        Some(it.fold((i0, j0, i0, j0), |(a, b, c, d), &(i, j)| {
            (a.min(i), b.min(j), c.max(i), d.max(j))
        }))
    }

    /// `[[i, j, c], ...]` in the same order as the text form.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

pub fn apply_poly_symmetry(p: &LaurentPoly, sym: Symmetry) -> LaurentPoly {
    p.apply_symmetry(sym)
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (&(i, j), c) in &self.terms {
            seq.serialize_element(&(i, j, json_int(c)))?;
        }
        seq.end()
    }
}

/// JSON number when it fits in 64 bits, decimal string otherwise.
pub(crate) fn json_int(c: &BigInt) -> serde_json::Value {
    match i64::try_from(c) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::from(c.to_string()),
    }
}

impl fmt::Display for LaurentPoly {
    /// `c*X^i*Y^j + ...`, omitting zero exponents.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (&(i, j), c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            write!(f, "{mag}")?;
            if i != 0 {
                write!(f, "*X^{i}")?;
            }
            if j != 0 {
                write!(f, "*Y^{j}")?;
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

pub fn add(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    p + q
}

pub fn mul(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    p * q
}

pub fn negate(p: &LaurentPoly) -> LaurentPoly {
    -p
}

/// Dense `n x n` window of a polynomial with exponents reduced mod `n`,
/// stored row-major by `i` (`entries[i * n + j]` holds `X^i Y^j`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusPiece {
    n: usize,
    entries: Vec<BigInt>,
}

impl TorusPiece {
    pub fn zero(n: usize) -> TorusPiece {
        TorusPiece {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn from_entries(n: usize, entries: Vec<BigInt>) -> TorusPiece {
        assert_eq!(entries.len(), n * n, "torus piece needs n^2 entries");
        TorusPiece { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.entries
    }

    pub fn index(&self, i: i64, j: i64) -> usize {
        let n = self.n as i64;
        (i.rem_euclid(n) * n + j.rem_euclid(n)) as usize
    }

    pub fn get(&self, i: i64, j: i64) -> &BigInt {
        &self.entries[self.index(i, j)]
    }

    pub fn entry_mut(&mut self, i: i64, j: i64) -> &mut BigInt {
        let k = self.index(i, j);
        &mut self.entries[k]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Cyclic translation by `(di, dj)`.
    pub fn translate(&self, (di, dj): (i64, i64)) -> TorusPiece {
        let mut out = TorusPiece::zero(self.n);
        let n = self.n as i64;
        for i in 0..n {
            for j in 0..n {
                *out.entry_mut(i + di, j + dj) = self.get(i, j).clone();
            }
        }
        out
    }

    /// Smallest-support polynomial representing this window.
    pub fn to_poly(&self) -> LaurentPoly {
        let n = self.n as i64;
        LaurentPoly::from_terms(
            (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| ((i, j), self.get(i, j).clone())),
        )
    }

    pub fn add(&self, other: &TorusPiece) -> TorusPiece {
        assert_eq!(self.n, other.n);
        TorusPiece {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Reduces every entry into `[0, m)`.
    pub fn reduce_entries(&self, m: &BigInt) -> TorusPiece {
        TorusPiece {
            n: self.n,
            entries: self.entries.iter().map(|a| a.mod_floor(m)).collect(),
        }
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn y_minus_one() -> LaurentPoly {
        &LaurentPoly::monomial(0, 1, 1) - &LaurentPoly::one()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(
            LaurentPoly::one().translate((2, 3)),
            LaurentPoly::monomial(2, 3, 1)
        );
        let sq = &y_minus_one() * &y_minus_one();
        assert_eq!(
            sq,
            LaurentPoly::from_terms([((0, 2), 1), ((0, 1), -2), ((0, 0), 1)])
        );
        let p = LaurentPoly::from_terms([((1, -1), 3), ((0, 0), -1)]);
        assert_eq!(p.translate((0, 0)), p);
        assert!((&p - &p).is_zero());
        assert_eq!(p.scalar_mul(0), LaurentPoly::zero());
        assert_eq!(
            LaurentPoly::from_terms([((0, 0), 2), ((0, 0), -2)]),
            LaurentPoly::zero()
        );
    }

    #[test]
    fn eval_examples() {
        assert_eq!(LaurentPoly::zero().eval_at_ones(), BigInt::zero());
        assert_eq!(y_minus_one().pow(5).eval_at_ones(), BigInt::zero());
        assert_eq!(LaurentPoly::constant(7).eval_at_ones(), BigInt::from(7));
    }

    #[test]
    fn divisibility_examples() {
        let p = LaurentPoly::one_minus_monomial(2, 2);
        assert!(p.divisible_by_one_minus_monomial((1, 1)).unwrap());
        assert!(!LaurentPoly::one()
            .divisible_by_one_minus_monomial((1, 1))
            .unwrap());
        assert!(p.divisible_by_one_minus_monomial((0, 0)).is_err());
        // 1 - X^2 is divisible by 1 - X^2 but not 1 - X^4 or 1 - X^2 Y.
        let q = LaurentPoly::one_minus_monomial(2, 0);
        assert!(q.divisible_by_one_minus_monomial((2, 0)).unwrap());
        assert!(q.divisible_by_one_minus_monomial((-1, 0)).unwrap());
        assert!(!q.divisible_by_one_minus_monomial((4, 0)).unwrap());
        assert!(!q.divisible_by_one_minus_monomial((2, 1)).unwrap());
    }

    #[test]
    fn torus_examples() {
        let p = &LaurentPoly::monomial(0, 4, 1) - &LaurentPoly::one();
        assert!(p.reduce_mod_torus(4).is_zero());
        let t = LaurentPoly::monomial(-1, 3, 1).reduce_mod_torus(4);
        let mut want = TorusPiece::zero(4);
        *want.entry_mut(3, 3) = BigInt::one();
        assert_eq!(t, want);
        assert_eq!(t.to_poly(), LaurentPoly::monomial(3, 3, 1));
        assert_eq!(t.translate((1, 1)).get(0, 0), &BigInt::one());
    }

    #[test]
    fn symmetry_examples() {
        let p = LaurentPoly::monomial(2, 1, 1);
        assert_eq!(
            p.apply_symmetry(Symmetry::SwapXY),
            LaurentPoly::monomial(1, 2, 1)
        );
        let q = LaurentPoly::one_minus_monomial(5, 0);
        assert_eq!(
            q.apply_symmetry(Symmetry::InvX),
            LaurentPoly::one_minus_monomial(-5, 0)
        );
    }

    #[test]
    fn text_and_json_forms() {
        let p = LaurentPoly::from_terms([((-1, 3), -1), ((0, 0), 1), ((1, 0), 2)]);
        assert_eq!(p.to_string(), "-1*X^-1*Y^3 + 1 + 2*X^1");
        assert_eq!(p.to_json().to_string(), "[[-1,3,-1],[0,0,1],[1,0,2]]");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(8, 4), BigInt::from(70));
        assert_eq!(binomial(16, 8), BigInt::from(12870));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(((-4i64..4, -4i64..4), -5i64..6), 0..8)
            .prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
            prop_assert_eq!(&a + &(-&a), LaurentPoly::zero());
            prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn evaluation_is_a_ring_map(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).eval_at_ones(), a.eval_at_ones() * b.eval_at_ones());
            prop_assert_eq!((&a + &b).eval_at_ones(), a.eval_at_ones() + b.eval_at_ones());
        }

        #[test]
        fn multiples_are_divisible(a in arb_poly(), e in (-5i64..6, -5i64..6)) {
            prop_assume!(e != (0, 0));
            let m = &a * &LaurentPoly::one_minus_monomial(e.0, e.1);
            prop_assert!(m.divisible_by_one_minus_monomial(e).unwrap());
        }

        #[test]
        fn torus_reduction(a in arb_poly(), b in arb_poly(), n in 2usize..7) {
            prop_assert_eq!(a.translate((n as i64, 0)).reduce_mod_torus(n), a.reduce_mod_torus(n));
            prop_assert_eq!(
                (&a + &b).reduce_mod_torus(n),
                a.reduce_mod_torus(n).add(&b.reduce_mod_torus(n))
            );
        }
    }
}
