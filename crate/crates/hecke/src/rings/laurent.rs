//! Integer-exponent Laurent polynomials in q with exact rational coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A finitely supported map exponent -> coefficient, kept sorted by exponent
/// with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i64, BigRational)>,
}

impl LaurentPoly {
    pub fn zero_poly() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn from_terms(mut terms: Vec<(i64, BigRational)>) -> Self {
        terms.retain(|(_, c)| !c.is_zero());
        terms.sort_by_key(|&(e, _)| e);
        for w in terms.windows(2) {
            assert!(w[0].0 != w[1].0, "duplicate exponent");
        }
        LaurentPoly { terms }
    }

    pub fn monomial(exp: i64, coeff: BigRational) -> Self {
        if coeff.is_zero() {
            Self::zero_poly()
        } else {
            LaurentPoly { terms: vec![(exp, coeff)] }
        }
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, BigRational::from_integer(BigInt::from(c)))
    }

    /// The variable q.
    pub fn q() -> Self {
        Self::monomial(1, BigRational::one())
    }

    /// q^k, any integer k.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(k, BigRational::one())
    }

    pub fn terms(&self) -> &[(i64, BigRational)] {
        &self.terms
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        match self.terms.binary_search_by_key(&exp, |&(e, _)| e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigRational::zero(),
        }
    }

    /// Lowest exponent with nonzero coefficient; None when zero.
    pub fn low(&self) -> Option<i64> {
        self.terms.first().map(|&(e, _)| e)
    }

    /// Highest exponent with nonzero coefficient; None when zero.
    pub fn degree(&self) -> Option<i64> {
        self.terms.last().map(|&(e, _)| e)
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.terms.last().map(|(_, c)| c.clone()).unwrap_or_else(BigRational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Multiply by q^k (exponent shift).
    pub fn shifted(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero_poly();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.denom().is_one())
    }

    /// Evaluation at a rational point (q != 0 when negative exponents occur).
    pub fn eval_rational(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += c * rational_pow(q, *e);
        }
        acc
    }

    /// The positive rational c with self = c * primitive_part, where the
    /// primitive part has coprime integer coefficients. Zero for the zero poly.
    pub fn rational_content(&self) -> BigRational {
        if self.terms.is_empty() {
            return BigRational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        BigRational::new(num_gcd, den_lcm)
    }

    /// If self is exactly +/- q^m, the sign and exponent.
    pub fn monomial_form(&self) -> Option<(i8, i64)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = &self.terms[0];
        if c.is_one() {
            Some((1, *e))
        } else if (-c).is_one() {
            Some((-1, *e))
        } else {
            None
        }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => {
                    if a.0 == b.0 {
                        let c = if negate_other { &a.1 - &b.1 } else { &a.1 + &b.1 };
                        if !c.is_zero() {
                            out.push((a.0, c));
                        }
                        i += 1;
                        j += 1;
                        continue;
                    }
                    a.0 < b.0
                }
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => unreachable!(),
            };
            if take_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else {
                let (e, c) = &other.terms[j];
                out.push((*e, if negate_other { -c } else { c.clone() }));
                j += 1;
            }
        }
        LaurentPoly { terms: out }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.terms.is_empty() || other.terms.is_empty() {
            return Self::zero_poly();
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return other.shifted(*e).scaled_in_place(c);
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return self.shifted(*e).scaled_in_place(c);
        }
        let mut acc: std::collections::BTreeMap<i64, BigRational> = std::collections::BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let entry = acc.entry(e1 + e2).or_insert_with(BigRational::zero);
                *entry += c1 * c2;
            }
        }
        LaurentPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    fn scaled_in_place(mut self, c: &BigRational) -> Self {
        if c.is_one() {
            return self;
        }
        for (_, k) in &mut self.terms {
            *k *= c;
        }
        self
    }
}

fn rational_pow(q: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let base = if e < 0 {
        assert!(!q.is_zero(), "negative power of zero");
        q.recip()
    } else {
        q.clone()
    };
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        Self::zero_poly()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> Self {
        self.merge(&rhs, false)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.merge(rhs, false)
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: Self) {
        *self = self.merge(&rhs, false);
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> Self {
        self.merge(&rhs, true)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.merge(rhs, true)
    }
}

impl SubAssign for LaurentPoly {
    fn sub_assign(&mut self, rhs: Self) {
        *self = self.merge(&rhs, true);
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> Self {
        for (_, c) in &mut self.terms {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.mul_ref(rhs)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let a = c.abs();
            if *e == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}")?;
                }
                if *e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// [k] = q^{k-1} + ... + q + 1, with the convention [0] = 1.
pub fn quantum_integer(k: usize) -> LaurentPoly {
    if k == 0 {
        return LaurentPoly::one();
    }
    LaurentPoly::from_terms((0..k as i64).map(|e| (e, BigRational::one())).collect())
}

/// [k]! = [k][k-1]...[1], with [0]! = 1.
pub fn quantum_factorial(k: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for m in 2..=k {
        acc = acc.mul_ref(&quantum_integer(m));
    }
    acc
}

/// The literal sum over S_n of q^{l(w)}.
pub fn poincare_sum(n: usize) -> LaurentPoly {
    assert!(n <= 9, "poincare_sum bound exceeded");
    let mut acc = LaurentPoly::zero_poly();
    for w in crate::combinatorics::Permutation::all(n) {
        acc += LaurentPoly::q_pow(w.length() as i64);
    }
    acc
}

/// Exact division in the Laurent ring up to units: tests whether a = d * c
/// after shifting both lowest exponents to 0, and returns the exact Laurent
/// quotient c (so that a = d * c holds on the nose).
pub fn divides(d: &LaurentPoly, a: &LaurentPoly) -> Option<LaurentPoly> {
    assert!(!d.is_zero(), "division by the zero polynomial");
    if a.is_zero() {
        return Some(LaurentPoly::zero_poly());
    }
    let (la, ld) = (a.low().unwrap(), d.low().unwrap());
    let a0 = a.shifted(-la);
    let d0 = d.shifted(-ld);
    let q0 = poly_div_exact(&a0, &d0)?;
    Some(q0.shifted(la - ld))
}

/// Long division of ordinary polynomials (lowest exponent 0); Some(quotient)
/// iff the remainder vanishes.
fn poly_div_exact(a: &LaurentPoly, d: &LaurentPoly) -> Option<LaurentPoly> {
    let dd = d.degree().unwrap();
    let lead = d.leading_coeff();
    let mut rem = a.clone();
    let mut quot = LaurentPoly::zero_poly();
    while !rem.is_zero() {
        let rd = rem.degree().unwrap();
        if rd < dd || rem.low().unwrap() < 0 {
            return None;
        }
        let t = LaurentPoly::monomial(rd - dd, rem.leading_coeff() / &lead);
        rem = &rem - &t.mul_ref(d);
        quot += t;
    }
    Some(quot)
}

/// Monic-free gcd in Q[q] applied to the shifted polynomials, returned as a
/// primitive integer polynomial with positive leading coefficient and lowest
/// exponent 0. gcd(0, 0) = 0.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return primitive_normal(b);
    }
    if b.is_zero() {
        return primitive_normal(a);
    }
    let mut x = a.shifted(-a.low().unwrap());
    let mut y = b.shifted(-b.low().unwrap());
    while !y.is_zero() {
        let r = poly_rem(&x, &y);
        x = y;
        y = primitive_normal(&r);
    }
    primitive_normal(&x)
}

fn poly_rem(a: &LaurentPoly, d: &LaurentPoly) -> LaurentPoly {
    let dd = d.degree().unwrap();
    let lead = d.leading_coeff();
    let mut rem = a.clone();
    while !rem.is_zero() && rem.degree().unwrap() >= dd {
        let rd = rem.degree().unwrap();
        let t = LaurentPoly::monomial(rd - dd, rem.leading_coeff() / &lead);
        rem = &rem - &t.mul_ref(d);
    }
    rem
}

fn primitive_normal(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero_poly();
    }
    let mut out = p.shifted(-p.low().unwrap());
    let mut c = out.rational_content();
    if out.leading_coeff().is_negative() {
        c = -c;
    }
    out = out.scaled(&c.recip());
    out
}
