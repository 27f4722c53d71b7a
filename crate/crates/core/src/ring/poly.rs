use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Partition, Scalar};
use crate::error::{Error, Result};

/// `x1^a1 ... xm^am * t^b`, with a fixed number `m` of x-variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    x: Vec<u32>,
    t: u32,
}

impl Monomial {
    pub fn new(x: Vec<u32>, t: u32) -> Self {
        Monomial { x, t }
    }

    pub fn unit(nvars: usize) -> Self {
        Monomial { x: vec![0; nvars], t: 0 }
    }

    pub fn x_exponents(&self) -> &[u32] {
        &self.x
    }

    pub fn t_exponent(&self) -> u32 {
        self.t
    }

    pub fn degree(&self) -> u32 {
        self.x.iter().sum::<u32>() + self.t
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(), t: self.t + other.t }
    }

    /// Graded lexicographic order, `x1 > x2 > ... > t`; larger terms sort first.
    fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| other.x.cmp(&self.x)).then_with(|| other.t.cmp(&self.t))
    }
}

/// A polynomial with integer coefficients in `x1..x_m` and `t`.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        Self::monomial(Monomial::unit(nvars), c)
    }

    /// The variable `x_i`, 1-based.
    ///
    /// Panics unless `1 <= i <= nvars`.
    pub fn x(nvars: usize, i: usize) -> Self {
        assert!((1..=nvars).contains(&i), "x{i} is not among x1..x{nvars}");
        let mut m = Monomial::unit(nvars);
        m.x[i - 1] = 1;
        Self::monomial(m, BigInt::one())
    }

    pub fn t(nvars: usize) -> Self {
        let mut m = Monomial::unit(nvars);
        m.t = 1;
        Self::monomial(m, BigInt::one())
    }

    /// Panics if the monomial has the wrong number of x-exponents.
    pub fn monomial(m: Monomial, c: BigInt) -> Self {
        let nvars = m.x.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Result<Self> {
        let mut p = MultiPoly::zero(nvars);
        for (m, c) in terms {
            if m.x.len() != nvars {
                return Err(Error::VariableCountMismatch { left: nvars, right: m.x.len() });
            }
            p.add_term(m, &c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, m: Monomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn check(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::VariableCountMismatch { left: self.nvars, right: other.nvars })
        }
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        Ok(out)
    }

    fn add_assign_unchecked(&mut self, other: &MultiPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c);
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// Substitutes `x_i -> xs[i-1]` and `t -> t`.
    pub fn evaluate<S: Scalar>(&self, xs: &[S], t: &S) -> Result<S> {
        if xs.len() != self.nvars {
            return Err(Error::VariableCountMismatch { left: self.nvars, right: xs.len() });
        }
        let mut acc = t.zero_like();
        for (m, c) in &self.terms {
            let mut term = t.lift_bigint(c);
            for (x, &e) in xs.iter().zip(&m.x) {
                if e > 0 {
                    term = term.mul_ref(&x.pow_u32(e));
                }
            }
            if m.t > 0 {
                term = term.mul_ref(&t.pow_u32(m.t));
            }
            acc.add_assign_ref(&term);
        }
        Ok(acc)
    }

    /// Terms in canonical print order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.canonical_cmp(b.0));
        v
    }
}

impl Scalar for MultiPoly {
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.nvars)
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.nvars)
    }
    fn lift_bigint(&self, v: &BigInt) -> Self {
        MultiPoly::constant(self.nvars, v.clone())
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        self.add_assign_unchecked(rhs);
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("variable count mismatch")
    }
    fn cost(&self) -> u64 {
        self.terms.len().max(1) as u64
    }
}

// Operator impls panic on a variable-count mismatch; use the `try_*` forms
// when the operands come from different sources.
impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("variable count mismatch")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("variable count mismatch")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

/// Renders e.g. `3*x1^4 + 4*t*x1^3 + t^4`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut first = true;
            let mut factor = |f: &mut fmt::Formatter<'_>, name: &dyn fmt::Display, e: u32| {
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "{name}")
                } else {
                    write!(f, "{name}^{e}")
                }
            };
            if !mag.is_one() || m.degree() == 0 {
                factor(f, &mag, 1)?;
            }
            if m.t > 0 {
                factor(f, &"t", m.t)?;
            }
            for (j, &e) in m.x.iter().enumerate() {
                if e > 0 {
                    factor(f, &format_args!("x{}", j + 1), e)?;
                }
            }
        }
        Ok(())
    }
}

/// `x1^k + ... + x_m^k`.
pub fn power_sum(k: u32, nvars: usize) -> Result<MultiPoly> {
    if k == 0 {
        return Err(Error::InvalidDegree);
    }
    let terms = (0..nvars).map(|i| {
        let mut m = Monomial::unit(nvars);
        m.x[i] = k;
        (m, BigInt::one())
    });
    MultiPoly::from_terms(nvars, terms)
}

/// Product of the power sums over the parts of `lambda`; the empty partition gives 1.
pub fn power_sum_product(lambda: &Partition, nvars: usize) -> MultiPoly {
    lambda
        .parts()
        .iter()
        .fold(MultiPoly::one(nvars), |acc, &k| acc.mul_ref(&power_sum(k, nvars).expect("parts are positive")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn x(i: usize) -> MultiPoly {
        MultiPoly::x(2, i)
    }
    fn t() -> MultiPoly {
        MultiPoly::t(2)
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x(1) + &t()) * &(&x(1) - &t());
        let expect = &(&x(1) * &x(1)) - &(&t() * &t());
        assert_eq!(p, expect);
        assert_eq!(p.to_string(), "x1^2 - t^2");
        assert_eq!(&p + &MultiPoly::zero(2), p);
        assert_eq!((&t() * &t()).to_string(), "t^2");
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = MultiPoly::x(1, 1);
        let b = MultiPoly::x(2, 1);
        assert_eq!(a.try_add(&b), Err(Error::VariableCountMismatch { left: 1, right: 2 }));
        assert!(a.try_mul(&b).is_err());
        assert!(a.evaluate(&[BigInt::one(), BigInt::one()], &BigInt::zero()).is_err());
    }

    #[test]
    fn rendering() {
        let x1 = MultiPoly::x(1, 1);
        let t = MultiPoly::t(1);
        let p = MultiPoly::from_terms(
            1,
            [
                (Monomial::new(vec![0], 4), BigInt::one()),
                (Monomial::new(vec![3], 1), BigInt::from(4)),
                (Monomial::new(vec![4], 0), BigInt::from(3)),
            ],
        )
        .unwrap();
        assert_eq!(p.to_string(), "3*x1^4 + 4*t*x1^3 + t^4");
        assert_eq!((&x1 + &t).to_string(), "x1 + t");
        assert_eq!(MultiPoly::zero(1).to_string(), "0");
        assert_eq!(MultiPoly::constant(1, BigInt::from(-5)).to_string(), "-5");
        assert_eq!((&MultiPoly::one(1) - &x1).to_string(), "-x1 + 1");
    }

    #[test]
    fn power_sums() {
        assert_eq!(power_sum(1, 2).unwrap(), &x(1) + &x(2));
        assert_eq!(power_sum(3, 1).unwrap().to_string(), "x1^3");
        assert_eq!(power_sum(2, 3).unwrap().to_string(), "x1^2 + x2^2 + x3^2");
        assert_eq!(power_sum(0, 3), Err(Error::InvalidDegree));

        assert_eq!(power_sum_product(&Partition::empty(), 4), MultiPoly::one(4));
        assert_eq!(
            power_sum_product(&Partition::from([2, 1]), 2),
            &power_sum(2, 2).unwrap() * &power_sum(1, 2).unwrap()
        );
        assert_eq!(power_sum_product(&Partition::from([3]), 2).to_string(), "x1^3 + x2^3");
    }

    #[test]
    fn evaluation() {
        let q = |v: i64| BigRational::from_integer(BigInt::from(v));
        let p = &MultiPoly::x(1, 1) + &MultiPoly::t(1);
        assert_eq!(p.evaluate(&[q(1)], &q(0)).unwrap(), q(1));
        let p2 = power_sum(2, 2).unwrap();
        assert_eq!(p2.evaluate(&[q(1), q(-1)], &q(0)).unwrap(), q(2));
        let roots = [num_complex::Complex64::new(-1.0, 0.0), num_complex::Complex64::new(1.0, 0.0)];
        let v = p2.evaluate(&roots, &num_complex::Complex64::new(0.0, 0.0)).unwrap();
        assert!((v.re - 2.0).abs() < 1e-12 && v.im.abs() < 1e-12);
    }

    #[test]
    fn roots_of_unity_kill_lower_power_sums() {
        use core::f64::consts::PI;
        use num_complex::Complex64;
        for n in 1..=10u32 {
            let xs: Vec<Complex64> =
                (1..=n).map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / n as f64)).collect();
            let zero = Complex64::new(0.0, 0.0);
            for lambda in Partition::all_of(n) {
                let want = if lambda.parts() == [n] { n as f64 } else { 0.0 };
                // factor by factor: the expanded p_[1^n] cancels too much in f64 past n = 7
                let v: Complex64 = lambda
                    .parts()
                    .iter()
                    .map(|&k| power_sum(k, n as usize).unwrap().evaluate(&xs, &zero).unwrap())
                    .product();
                assert!((v - want).norm() < 1e-9, "n={n} lambda={lambda} got {v}");
                if n <= 7 {
                    let v = power_sum_product(&lambda, n as usize).evaluate(&xs, &zero).unwrap();
                    assert!((v - want).norm() < 1e-9, "n={n} lambda={lambda} expanded got {v}");
                }
            }
        }
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -5i64..5), 0..6).prop_map(|terms| {
            MultiPoly::from_terms(
                2,
                terms.into_iter().map(|((a, b, c), k)| (Monomial::new(vec![a, b], c), BigInt::from(k))),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn evaluate_is_a_homomorphism(
            a in arb_poly(), b in arb_poly(),
            vals in prop::collection::vec((-6i64..6, 1i64..4), 3),
        ) {
            let q: Vec<BigRational> = vals.iter().map(|&(n, d)| BigRational::new(n.into(), d.into())).collect();
            let ev = |p: &MultiPoly| p.evaluate(&q[..2], &q[2]).unwrap();
            prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
            prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
        }
    }
}
