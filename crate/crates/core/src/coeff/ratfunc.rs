//! The coefficient field `Q(q,t)`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::int::Int;
use super::poly::Poly;
use super::upoly::UPoly;
use crate::error::Error;

/// `(coeff, qexp, texp)`.
type Term = (Int, i64, i64);

/// A reduced fraction of integer polynomials in `q` and `t`.
///
/// Canonical form: numerator and denominator coprime over `Q[q,t]`, joint
/// integer content 1, denominator leading coefficient positive (graded-lex,
/// `q > t`). Two values are equal iff their canonical forms coincide.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Hash for RatFunc {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        RatFunc {
            num: Poly::constant(Int::from(v)),
            den: Poly::one(),
        }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_int(n)
            .checked_div(&Self::from_int(d))
            .expect("nonzero integer denominator")
    }

    /// `c * q^a * t^b` with integer (possibly negative) exponents.
    pub fn monomial(c: i64, qexp: i64, texp: i64) -> Self {
        let (nq, dq) = split_exp(qexp);
        let (nt, dt) = split_exp(texp);
        Self::from_parts(
            Poly::monomial(Int::from(c), nq, nt),
            Poly::monomial(Int::ONE, dq, dt),
        )
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `q^a` for any integer `a`.
    pub fn q_pow(a: i64) -> Self {
        Self::monomial(1, a, 0)
    }

    /// `t^a` for any integer `a`.
    pub fn t_pow(a: i64) -> Self {
        Self::monomial(1, 0, a)
    }

    /// Quantum integer `{d} = q^d - q^{-d}`.
    pub fn qint(d: i64) -> Self {
        if d == 0 {
            return Self::zero();
        }
        let a = d.unsigned_abs() as usize;
        // (q^{2a} - 1) / q^a, negated for d < 0
        let mut c = vec![Int::ZERO; 2 * a + 1];
        c[0] = Int::from(-1);
        c[2 * a] = Int::ONE;
        let num = Poly::from_q(UPoly::from_coeffs(c));
        let r = RatFunc {
            num,
            den: Poly::monomial(Int::ONE, a, 0),
        };
        if d < 0 {
            -&r
        } else {
            r
        }
    }

    /// Builds a canonical value from an arbitrary numerator and nonzero denominator.
    pub fn from_parts(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::normalize_units(num, den)
    }

    fn normalize_units(num: Poly, den: Poly) -> Self {
        let mut c = num.int_content().gcd(&den.int_content());
        if den.lead_sign() < 0 {
            c = -c;
        }
        if c.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc {
                num: num.div_exact_scalar(&c),
                den: den.div_exact_scalar(&c),
            }
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as an integer, if it is one.
    pub fn as_integer(&self) -> Option<Int> {
        if !self.den.is_one() {
            return None;
        }
        if self.num.is_zero() {
            return Some(Int::ZERO);
        }
        match self.num.as_monomial() {
            Some((c, 0, 0)) => Some(c.clone()),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if self.den.is_one() {
                return Self::normalize_units(num, Poly::one());
            }
            return Self::from_parts(num, self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            let den = self.den.mul(&other.den);
            return Self::normalize_units(num, den);
        }
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = other.den.div_exact(&g).unwrap();
        let num = self.num.mul(&d1).add(&other.num.mul(&b1));
        if num.is_zero() {
            return Self::zero();
        }
        let den = b1.mul(&other.den);
        let h = num.gcd(&g);
        if h.is_one() {
            Self::normalize_units(num, den)
        } else {
            Self::normalize_units(num.div_exact(&h).unwrap(), den.div_exact(&h).unwrap())
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&-other)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let (a, d) = cancel(&self.num, &other.den, &g1);
        let (c, b) = cancel(&other.num, &self.den, &g2);
        Self::normalize_units(a.mul(&c), b.mul(&d))
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_units(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.mul(&Self::from_int(k))
    }

    pub fn pow(&self, e: i64) -> Result<Self, Error> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Writes the value as `m * N' / D'` with `N'`, `D'` Laurent polynomials,
    /// where the exponent ranges of `D'` are centred on zero. Returns the
    /// exponent-shifted terms of `N'` and `D'` as `(coeff, qexp, texp)`.
    pub(crate) fn laurent_parts(&self) -> (Vec<Term>, Vec<Term>) {
        let (dq, dt) = centre(&self.den);
        let shifted = |p: &Poly| -> Vec<Term> {
            let mut v: Vec<(Int, i64, i64)> = p
                .terms()
                .map(|(c, i, j)| (c.clone(), i as i64 - dq, j as i64 - dt))
                .collect();
            v.sort_by(|a, b| grlex_desc((a.1, a.2), (b.1, b.2)));
            v
        };
        (shifted(&self.num), shifted(&self.den))
    }
}

fn split_exp(e: i64) -> (usize, usize) {
    if e >= 0 {
        (e as usize, 0)
    } else {
        (0, e.unsigned_abs() as usize)
    }
}

fn cancel(a: &Poly, b: &Poly, g: &Poly) -> (Poly, Poly) {
    if g.is_one() {
        (a.clone(), b.clone())
    } else {
        (a.div_exact(g).unwrap(), b.div_exact(g).unwrap())
    }
}

/// Monomial `(q, t)` exponents that centre the denominator's exponent ranges.
fn centre(p: &Poly) -> (i64, i64) {
    let mut qlo = i64::MAX;
    let mut qhi = i64::MIN;
    let mut tlo = i64::MAX;
    let mut thi = i64::MIN;
    for (_, i, j) in p.terms() {
        qlo = qlo.min(i as i64);
        qhi = qhi.max(i as i64);
        tlo = tlo.min(j as i64);
        thi = thi.max(j as i64);
    }
    ((qlo + qhi).div_euclid(2), (tlo + thi).div_euclid(2))
}

fn grlex_desc(a: (i64, i64), b: (i64, i64)) -> Ordering {
    (b.0 + b.1).cmp(&(a.0 + a.1)).then(b.0.cmp(&a.0))
}

impl std::ops::Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl std::ops::Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl std::ops::$tr<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                self.$f(rhs)
            }
        }
        impl std::ops::$tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl From<i64> for RatFunc {
    fn from(v: i64) -> Self {
        RatFunc::from_int(v)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, qe: i64, te: i64) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("q", qe), ("t", te)] {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

/// Writes a Laurent polynomial; `negate` flips every sign.
fn write_laurent(
    f: &mut fmt::Formatter<'_>,
    terms: &[(Int, i64, i64)],
    negate: bool,
) -> fmt::Result {
    for (k, (c, qe, te)) in terms.iter().enumerate() {
        let c = if negate { -c } else { c.clone() };
        let neg = c.is_negative();
        let a = c.abs();
        if k == 0 {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        let unit = *qe == 0 && *te == 0;
        if unit {
            write!(f, "{a}")?;
        } else {
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write_monomial(f, *qe, *te)?;
        }
    }
    Ok(())
}

impl RatFunc {
    /// Formatting used when the value multiplies a basis symbol: multi-term
    /// values are parenthesized with any leading minus pulled outside.
    pub fn fmt_coeff(&self) -> String {
        struct C<'a>(&'a RatFunc);
        impl fmt::Display for C<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let (n, d) = self.0.laurent_parts();
                let lead_neg = n.first().is_some_and(|t| t.0.is_negative());
                if d.len() == 1 && d[0].0.is_one() && d[0].1 == 0 && d[0].2 == 0 {
                    if n.len() == 1 {
                        return write_laurent(f, &n, false);
                    }
                    if lead_neg {
                        f.write_str("-(")?;
                        write_laurent(f, &n, true)?;
                    } else {
                        f.write_str("(")?;
                        write_laurent(f, &n, false)?;
                    }
                    return f.write_str(")");
                }
                f.write_str("(")?;
                fmt::Display::fmt(self.0, f)?;
                f.write_str(")")
            }
        }
        C(self).to_string()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let (n, d) = self.laurent_parts();
        let d_trivial = d.len() == 1 && d[0].0.is_one() && d[0].1 == 0 && d[0].2 == 0;
        if d_trivial {
            return write_laurent(f, &n, false);
        }
        if n.len() == 1 {
            write_laurent(f, &n, false)?;
        } else {
            f.write_str("(")?;
            write_laurent(f, &n, false)?;
            f.write_str(")")?;
        }
        f.write_str("/")?;
        if d.len() == 1 && (d[0].1, d[0].2) == (0, 0) {
            write_laurent(f, &d, false)
        } else {
            f.write_str("(")?;
            write_laurent(f, &d, false)?;
            f.write_str(")")
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RatFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        super::parse::parse_ratfunc(s)
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn qint_values() {
        assert!(RatFunc::qint(0).is_zero());
        assert_eq!(RatFunc::qint(1).to_string(), "q - q^-1");
        assert_eq!(RatFunc::qint(-2), -RatFunc::qint(2));
        assert_eq!(RatFunc::qint(-2).to_string(), "-q^2 + q^-2");
    }

    #[test]
    fn quotient_and_square_of_quantum_integers() {
        let z = RatFunc::qint(1);
        assert!(z.checked_div(&z).unwrap().is_one());
        let ratio = RatFunc::qint(2).checked_div(&z).unwrap();
        assert_eq!(ratio.to_string(), "q + q^-1");
        assert_eq!(z.mul(&z).to_string(), "q^2 - 2 + q^-2");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            RatFunc::one().checked_div(&RatFunc::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn canonical_display_of_fractions() {
        let v = r("(t - t^-1)/(q - q^-1)");
        assert_eq!(v.to_string(), "(t - t^-1)/(q - q^-1)");
        assert_eq!(r("(q^2 - q^-2)/(q - q^-1)").to_string(), "q + q^-1");
        assert_eq!(r("1/2").to_string(), "1/2");
        assert_eq!(r("-3*t^-2/2").to_string(), "-3*t^-2/2");
        assert_eq!((-RatFunc::qint(2)).fmt_coeff(), "-(q^2 - q^-2)");
        assert_eq!((-RatFunc::t_pow(-1)).fmt_coeff(), "-t^-1");
    }

    #[test]
    fn denominator_sign_is_normalized() {
        let a = r("1/(1 - q)");
        let b = r("-1/(q - 1)");
        assert_eq!(a, b);
        assert!(a.denominator().lead_sign() > 0);
    }
}
