//! Exact arithmetic in the rational function field `Q(q)`.
//!
//! Elements are stored as a reduced fraction of Laurent polynomials with a
//! canonical denominator: its lowest term is `1 * q^0`. Two values are equal
//! exactly when their representations are equal, so `Eq` and `Hash` are
//! structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("q-binomial [{m} choose {s}] needs s <= m")]
    BinomialRange { m: u32, s: u32 },
    #[error("cannot evaluate at q = 0")]
    ZeroParameter,
}

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// A Laurent polynomial in `q` with rational coefficients.
///
/// `coeffs[k]` is the coefficient of `q^(low + k)`; the first and last
/// entries are nonzero, and the zero polynomial has no entries.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: exp,
            coeffs: vec![c],
        }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(terms: I) -> Self {
        let terms: Vec<(i32, Rational)> = terms.into_iter().collect();
        let Some(low) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![Rational::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    fn from_dense(low: i32, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        LaurentPoly {
            low: low + lead_zeros as i32,
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low_exp(&self) -> i32 {
        self.low
    }

    pub fn high_exp(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    /// Width `high - low`, the degree of the polynomial after clearing `q`-powers.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, exp: i32) -> Rational {
        let k = exp - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            Rational::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &Rational)> + '_ {
        let low = self.low;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (low + k as i32, c))
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn lowest_coeff(&self) -> Option<&Rational> {
        self.coeffs.first()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Substitutes `q := v`.
    pub fn eval(&self, v: &Rational) -> Result<Rational, CoeffError> {
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        if v.is_zero() && self.low < 0 {
            return Err(CoeffError::ZeroParameter);
        }
        // Horner from the top.
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        Ok(acc * pow_rat(v, self.low))
    }

    /// `q^{-k} * self` evaluated as an ordinary polynomial `[c0, c1, ...]`.
    fn to_poly(&self) -> Vec<Rational> {
        self.coeffs.clone()
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high_exp().max(other.high_exp());
        let mut coeffs = vec![Rational::zero(); (high - low + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.low - low) as usize + k] += c;
        }
        Self::from_dense(low, coeffs)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.is_monomial() {
            return LaurentPoly {
                low: self.low + other.low,
                coeffs: self.coeffs.iter().map(|c| c * &other.coeffs[0]).collect(),
            };
        }
        if self.is_monomial() {
            return other.mul_ref(self);
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_dense(self.low + other.low, coeffs)
    }

    fn neg_ref(&self) -> Self {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

fn pow_rat(v: &Rational, e: i32) -> Rational {
    match e.cmp(&0) {
        Ordering::Equal => Rational::one(),
        Ordering::Greater => num_traits::pow(v.clone(), e as usize),
        Ordering::Less => num_traits::pow(v.recip(), (-e) as usize),
    }
}

// Dense polynomial helpers, index = degree.

fn poly_trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem: Vec<Rational> = a.to_vec();
    poly_trim(&mut rem);
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() * &lead_inv;
        for (k, bc) in b.iter().enumerate() {
            rem[shift + k] -= &c * bc;
        }
        quot[shift] = c;
        rem.pop();
        poly_trim(&mut rem);
    }
    (quot, rem)
}

/// Monic gcd of two nonzero polynomials.
fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    poly_trim(&mut x);
    poly_trim(&mut y);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = r;
    }
    let inv = x.last().unwrap().recip();
    x.iter().map(|c| c * &inv).collect()
}

fn poly_is_one(p: &[Rational]) -> bool {
    p.len() == 1 && p[0].is_one()
}

/// An element of `Q(q)` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: LaurentPoly,
    // low == 0, lowest coefficient 1, coprime to num.
    den: LaurentPoly,
}

pub type Coeff = RationalFunction;

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        RationalFunction {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl From<Rational> for RationalFunction {
    fn from(c: Rational) -> Self {
        LaurentPoly::constant(c).into()
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        rat_int(c).into()
    }
}

impl RationalFunction {
    pub fn zero() -> Self {
        LaurentPoly::zero().into()
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    pub fn q_pow(e: i32) -> Self {
        LaurentPoly::q_pow(e).into()
    }

    /// `num / den`, brought to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let s = den.low_exp();
        let mut den = den.shift(-s);
        let mut num = num.shift(-s);
        if den.span() > 0 {
            let nl = num.low_exp();
            let g = poly_gcd(&num.to_poly(), &den.to_poly());
            if !poly_is_one(&g) {
                let (nq, _) = poly_divrem(&num.to_poly(), &g);
                let (dq, _) = poly_divrem(&den.to_poly(), &g);
                num = LaurentPoly::from_dense(nl, nq);
                den = LaurentPoly::from_dense(0, dq);
            }
        }
        let c = den.lowest_coeff().unwrap().clone();
        if !c.is_one() {
            let inv = c.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFunction { num, den }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.is_laurent().then_some(&self.num)
    }

    /// Sign of the top coefficient once the denominator's top coefficient is
    /// made positive; used for printing.
    pub fn is_negative(&self) -> bool {
        let top_den = self.den.leading_coeff().is_some_and(|c| c.is_negative());
        self.num.leading_coeff().is_some_and(|c| c.is_negative()) != top_den
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i32) -> Result<Self, CoeffError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Substitutes `q := value`.
    pub fn eval_at(&self, value: &Rational) -> Result<Rational, CoeffError> {
        let d = self.den.eval(value)?;
        if d.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(self.num.eval(value)? / d)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = self.num.add_ref(&rhs.num);
            if self.den.is_one() {
                return num.into();
            }
            return RationalFunction::canonical(num, self.den.clone());
        }
        let (a, b) = (self.den.to_poly(), rhs.den.to_poly());
        let g = poly_gcd(&a, &b);
        let (a_red, b_red) = if poly_is_one(&g) {
            (self.den.clone(), rhs.den.clone())
        } else {
            (
                LaurentPoly::from_dense(0, poly_divrem(&a, &g).0),
                LaurentPoly::from_dense(0, poly_divrem(&b, &g).0),
            )
        };
        let num = self.num.mul_ref(&b_red).add_ref(&rhs.num.mul_ref(&a_red));
        let den = self.den.mul_ref(&b_red);
        RationalFunction::canonical(num, den)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return self.num.mul_ref(&rhs.num).into();
        }
        if self.num.is_monomial() && rhs.num.is_monomial() {
            // denominators are coprime to q, so only the constant parts can cancel
            return RationalFunction::canonical(
                self.num.mul_ref(&rhs.num),
                self.den.mul_ref(&rhs.den),
            );
        }
        RationalFunction::canonical(self.num.mul_ref(&rhs.num), self.den.mul_ref(&rhs.den))
    }
}

impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = Result<RationalFunction, CoeffError>;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RationalFunction) -> Self::Output {
        Ok(self * &rhs.inv()?)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

/// `[m]_x` with `x = q^d`.
pub fn q_int(m: i32, d: u32) -> RationalFunction {
    if m < 0 {
        return -q_int(-m, d);
    }
    let d = d as i32;
    // (x^m - x^-m)/(x - x^-1) = x^{m-1} + x^{m-3} + ... + x^{1-m}
    LaurentPoly::from_terms((0..m).map(|k| (d * (m - 1 - 2 * k), Rational::one()))).into()
}

/// `[m]!_x` with `x = q^d`.
pub fn q_factorial(m: u32, d: u32) -> RationalFunction {
    (1..=m as i32).fold(RationalFunction::one(), |acc, k| &acc * &q_int(k, d))
}

/// Gaussian binomial `[m choose s]_x` with `x = q^d`.
pub fn q_binomial(m: u32, s: u32, d: u32) -> Result<RationalFunction, CoeffError> {
    if s > m {
        return Err(CoeffError::BinomialRange { m, s });
    }
    let den = &q_factorial(s, d) * &q_factorial(m - s, d);
    &q_factorial(m, d) / &den
}

pub fn eval_at(f: &RationalFunction, value: &Rational) -> Result<Rational, CoeffError> {
    f.eval_at(value)
}

// ---------------------------------------------------------------- printing

fn fmt_rational_abs(c: &Rational) -> String {
    let c = c.abs();
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_q_power(e: i32) -> String {
    match e {
        1 => "q".to_string(),
        _ => format!("q^{e}"),
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in decreasing exponent order, e.g. `q^2 - 3/2 + q^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().rev() {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let abs = c.abs();
            if e == 0 {
                write!(f, "{}", fmt_rational_abs(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", fmt_q_power(e))?;
            } else {
                write!(f, "{}*{}", fmt_rational_abs(&abs), fmt_q_power(e))?;
            }
        }
        Ok(())
    }
}

fn wrap_sum(p: &LaurentPoly) -> String {
    if p.coeffs.iter().filter(|c| !c.is_zero()).count() > 1 {
        format!("({p})")
    } else {
        p.to_string()
    }
}

impl fmt::Display for RationalFunction {
    /// Laurent values print as polynomials; proper fractions are shown with a
    /// denominator balanced around `q^0`, e.g. `(q - q^-1)^-1` for `q/(q^2 - 1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let h = (self.den.span() / 2) as i32;
        let (mut num, mut den) = (self.num.shift(-h), self.den.shift(-h));
        if den.leading_coeff().is_some_and(|c| c.is_negative()) {
            num = num.neg_ref();
            den = den.neg_ref();
        }
        if num.is_one() {
            write!(f, "({den})^-1")
        } else if num.neg_ref().is_one() {
            write!(f, "-({den})^-1")
        } else {
            write!(f, "{}/({den})", wrap_sum(&num))
        }
    }
}

impl RationalFunction {
    /// Text suitable as a multiplicative prefix `coeff*word`; sums are parenthesized.
    pub fn factor_string(&self) -> String {
        if self.den.is_one() {
            wrap_sum(&self.num)
        } else {
            self.to_string()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, rat_int(c))))
    }

    fn rf(terms: &[(i32, i64)]) -> RationalFunction {
        lp(terms).into()
    }

    // Reference route: the defining quotient, reduced by the canonicaliser.
    fn q_int_by_division(m: i32, d: u32) -> RationalFunction {
        let d = d as i32;
        RationalFunction::new(lp(&[(d * m, 1), (-d * m, -1)]), lp(&[(d, 1), (-d, -1)])).unwrap()
    }

    #[test]
    fn q_int_examples() {
        assert_eq!(q_int(1, 1), RationalFunction::one());
        assert_eq!(q_int(0, 1), RationalFunction::zero());
        assert_eq!(q_int(2, 1), rf(&[(1, 1), (-1, 1)]));
        for m in -5..=7 {
            for d in 1..=3 {
                assert_eq!(q_int(m, d), q_int_by_division(m, d), "m={m} d={d}");
            }
        }
    }

    #[test]
    fn factorial_and_binomial_examples() {
        assert_eq!(q_factorial(0, 1), RationalFunction::one());
        assert_eq!(q_factorial(1, 2), RationalFunction::one());
        assert_eq!(q_factorial(2, 1), rf(&[(1, 1), (-1, 1)]));
        for m in 0..5 {
            for d in 1..3 {
                assert!(q_binomial(m, 0, d).unwrap().is_one());
            }
        }
        assert_eq!(q_binomial(2, 1, 1).unwrap(), rf(&[(1, 1), (-1, 1)]));
        assert_eq!(q_binomial(3, 1, 1).unwrap(), rf(&[(2, 1), (0, 1), (-2, 1)]));
        assert!(matches!(
            q_binomial(2, 3, 1),
            Err(CoeffError::BinomialRange { .. })
        ));
    }

    #[test]
    fn binomials_are_symmetric_laurent_polys() {
        for m in 0..=6 {
            for s in 0..=m {
                for d in 1..=3 {
                    let b = q_binomial(m, s, d).unwrap();
                    assert!(b.is_laurent());
                    assert_eq!(b, q_binomial(m, m - s, d).unwrap());
                }
            }
        }
    }

    #[test]
    fn evaluation() {
        let f = rf(&[(1, 1), (-1, 1)]);
        assert_eq!(f.eval_at(&rat_int(2)).unwrap(), rat(5, 2));
        assert_eq!(
            RationalFunction::one().eval_at(&rat(5, 3)).unwrap(),
            rat_int(1)
        );
        let g = rf(&[(1, 1), (-1, -1)]).inv().unwrap();
        assert_eq!(g.eval_at(&rat_int(1)), Err(CoeffError::DivisionByZero));
        assert_eq!(g.eval_at(&rat_int(2)).unwrap(), rat(2, 3));
    }

    #[test]
    fn canonical_form_is_unique() {
        // (q^2 - 1)/(q - 1) == q + 1
        let a = RationalFunction::new(lp(&[(2, 1), (0, -1)]), lp(&[(1, 1), (0, -1)])).unwrap();
        assert_eq!(a, rf(&[(1, 1), (0, 1)]));
        // 1/(q - q^-1) == q/(q^2 - 1), printed in balanced form
        let c = rf(&[(1, 1), (-1, -1)]).inv().unwrap();
        assert_eq!(c.numerator(), &lp(&[(1, -1)]));
        assert_eq!(c.denominator(), &lp(&[(2, -1), (0, 1)]));
        assert_eq!(c.to_string(), "(q - q^-1)^-1");
        assert_eq!((-&c).to_string(), "-(q - q^-1)^-1");
        let d = &rf(&[(1, 1), (-1, 1)]) * &c;
        assert_eq!(d.to_string(), "(q + q^-1)/(q - q^-1)");
        assert_eq!(rf(&[(2, 1), (0, 1), (-2, 1)]).to_string(), "q^2 + 1 + q^-2");
        assert_eq!(
            RationalFunction::from(rat(-3, 2)).scale(&rat_int(1)).to_string(),
            "-3/2"
        );
    }

    #[test]
    fn zero_division_is_rejected() {
        assert!(RationalFunction::zero().inv().is_err());
        assert!(RationalFunction::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }
}
