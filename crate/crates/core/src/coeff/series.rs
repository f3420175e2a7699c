//! Truncated Laurent expansions of rational functions in an auxiliary
//! variable `u`, either in increasing powers of `u` or of `u^-1`.

use std::fmt;

use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Direction {
    /// Expand in `k((u))`.
    U,
    /// Expand in `k((u^-1))`.
    UInv,
}

/// A Laurent polynomial `sum c_i u^(low + i)` with coefficients in `Q(q,t)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ULaurent {
    low: i64,
    c: Vec<RatFunc>,
}

impl ULaurent {
    pub fn new(low: i64, c: Vec<RatFunc>) -> Self {
        let mut p = ULaurent { low, c };
        p.trim();
        p
    }

    /// From coefficients listed by descending power ending at `u^0`, the way
    /// a monic polynomial `c_0 u^l + ... + c_l` is usually written.
    pub fn from_descending(c: &[RatFunc]) -> Self {
        Self::new(0, c.iter().rev().cloned().collect())
    }

    pub fn monomial(c: RatFunc, e: i64) -> Self {
        Self::new(e, vec![c])
    }

    fn trim(&mut self) {
        while matches!(self.c.last(), Some(v) if v.is_zero()) {
            self.c.pop();
        }
        let lead = self.c.iter().take_while(|v| v.is_zero()).count();
        if lead == self.c.len() {
            self.c.clear();
            self.low = 0;
        } else if lead > 0 {
            self.c.drain(..lead);
            self.low += lead as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn coeff(&self, e: i64) -> RatFunc {
        usize::try_from(e - self.low)
            .ok()
            .and_then(|i| self.c.get(i).cloned())
            .unwrap_or_default()
    }

    /// Lowest and highest exponents present.
    pub fn span(&self) -> Option<(i64, i64)> {
        (!self.is_zero()).then(|| (self.low, self.low + self.c.len() as i64 - 1))
    }

    pub fn add(&self, o: &Self) -> Self {
        let (Some((a0, a1)), Some((b0, b1))) = (self.span(), o.span()) else {
            return if self.is_zero() {
                o.clone()
            } else {
                self.clone()
            };
        };
        let lo = a0.min(b0);
        let hi = a1.max(b1);
        Self::new(
            lo,
            (lo..=hi).map(|e| self.coeff(e).add(&o.coeff(e))).collect(),
        )
    }

    pub fn neg(&self) -> Self {
        ULaurent {
            low: self.low,
            c: self.c.iter().map(|v| -v).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::default();
        }
        let mut c = vec![RatFunc::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        Self::new(self.low + o.low, c)
    }

    pub fn derivative(&self) -> Self {
        let c = self
            .c
            .iter()
            .enumerate()
            .map(|(i, v)| v.scale_int(self.low + i as i64))
            .collect();
        Self::new(self.low - 1, c)
    }

    /// Coefficients indexed by powers of the direction variable `w`
    /// (`w = u` or `w = u^-1`), as `(lowest w-exponent, coefficients)`.
    fn in_direction(&self, dir: Direction) -> (i64, Vec<RatFunc>) {
        match dir {
            Direction::U => (self.low, self.c.clone()),
            Direction::UInv => {
                let hi = self.low + self.c.len() as i64 - 1;
                (-hi, self.c.iter().rev().cloned().collect())
            }
        }
    }
}

/// Truncated expansion `sum_{e = start}^{order} c_e w^e` in the direction
/// variable `w`. Coefficients past `order` are unknown, not zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    pub direction: Direction,
    start: i64,
    coeffs: Vec<RatFunc>,
    order: i64,
}

impl LaurentSeries {
    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    /// Coefficient of `w^e`.
    pub fn coeff(&self, e: i64) -> Result<RatFunc> {
        if e > self.order {
            return Err(Error::BeyondOrder {
                exp: e,
                order: self.order,
            });
        }
        Ok(usize::try_from(e - self.start)
            .ok()
            .and_then(|i| self.coeffs.get(i).cloned())
            .unwrap_or_default())
    }

    /// Coefficient of `u^e`, whichever direction the series runs in.
    pub fn coeff_u(&self, e: i64) -> Result<RatFunc> {
        match self.direction {
            Direction::U => self.coeff(e),
            Direction::UInv => self.coeff(-e),
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.direction != o.direction {
            return Err(Error::DirectionMismatch);
        }
        let start = self.start + o.start;
        let order = (self.order + o.start).min(o.order + self.start);
        let mut coeffs = Vec::new();
        for e in start..=order {
            let mut acc = RatFunc::zero();
            for a in self.start..=e - o.start {
                acc = acc.add(&self.coeff(a)?.mul(&o.coeff(e - a)?));
            }
            coeffs.push(acc);
        }
        Ok(LaurentSeries {
            direction: self.direction,
            start,
            coeffs,
            order,
        })
    }
}

/// Expands `num/den` in direction `dir`, keeping exponents of the direction
/// variable up to `order` inclusive.
pub fn expand_series(
    num: &ULaurent,
    den: &ULaurent,
    dir: Direction,
    order: i64,
) -> Result<LaurentSeries> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (n0, nc) = num.in_direction(dir);
    let (d0, dc) = den.in_direction(dir);
    let lead_inv = dc[0].inv()?;
    let start = if num.is_zero() { order + 1 } else { n0 - d0 };
    let len = usize::try_from(order - start + 1).unwrap_or(0);
    let mut s: Vec<RatFunc> = Vec::with_capacity(len);
    for i in 0..len {
        let mut acc = nc.get(i).cloned().unwrap_or_default();
        for j in 1..=i.min(dc.len() - 1) {
            acc = acc.sub(&dc[j].mul(&s[i - j]));
        }
        s.push(acc.mul(&lead_inv));
    }
    Ok(LaurentSeries {
        direction: dir,
        start: start.min(order + 1),
        coeffs: s,
        order,
    })
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let w = self.start + i as i64;
            let ue = match self.direction {
                Direction::U => w,
                Direction::UInv => -w,
            };
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match ue {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{} u", c.fmt_coeff())?,
                _ => write!(f, "{} u^{ue}", c.fmt_coeff())?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        let tail = match self.direction {
            Direction::U => format!("u^{}", self.order + 1),
            Direction::UInv => format!("u^{}", -(self.order + 1)),
        };
        write!(f, " + O({tail})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    fn u_plus_t2() -> ULaurent {
        ULaurent::from_descending(&[RatFunc::one(), r("t^2")])
    }

    #[test]
    fn geometric_series_in_u() {
        let one = ULaurent::monomial(RatFunc::one(), 0);
        let s = expand_series(&one, &u_plus_t2(), Direction::U, 2).unwrap();
        assert_eq!(s.coeff(0).unwrap(), r("t^-2"));
        assert_eq!(s.coeff(1).unwrap(), r("-t^-4"));
        assert_eq!(s.coeff(2).unwrap(), r("t^-6"));
        assert!(matches!(s.coeff(3), Err(Error::BeyondOrder { .. })));
    }

    #[test]
    fn long_division_in_u_inverse() {
        // u^2/(u + t^2) - u = -t^2 u/(u + t^2)
        let num = ULaurent::monomial(r("-t^2"), 1);
        let s = expand_series(&num, &u_plus_t2(), Direction::UInv, 2).unwrap();
        assert_eq!(s.coeff(0).unwrap(), r("-t^2"));
        assert_eq!(s.coeff(1).unwrap(), r("t^4"));
        assert_eq!(s.coeff(2).unwrap(), r("-t^6"));
        assert_eq!(s.coeff_u(-1).unwrap(), r("t^4"));
    }

    #[test]
    fn constants_expand_to_themselves() {
        let c = ULaurent::monomial(r("q + t"), 0);
        let one = ULaurent::monomial(RatFunc::one(), 0);
        for dir in [Direction::U, Direction::UInv] {
            let s = expand_series(&c, &one, dir, 3).unwrap();
            assert_eq!(s.coeff(0).unwrap(), r("q + t"));
            for e in 1..=3 {
                assert!(s.coeff(e).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn zero_denominator_is_an_error() {
        let one = ULaurent::monomial(RatFunc::one(), 0);
        assert_eq!(
            expand_series(&one, &ULaurent::default(), Direction::U, 1),
            Err(Error::DivisionByZero)
        );
    }
}
