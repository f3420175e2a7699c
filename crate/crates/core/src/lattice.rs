//! Points of `Z^2`, the `GL_2(Z)` action on them, and linear forms.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The index `(r, n)` of the generator `w_{r,n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticePoint {
    pub r: i64,
    pub n: i64,
}

pub const fn pt(r: i64, n: i64) -> LatticePoint {
    LatticePoint { r, n }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Cone {
    Positive,
    Negative,
}

impl LatticePoint {
    pub const ZERO: LatticePoint = pt(0, 0);

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    pub fn nonzero(self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::ZeroPoint)
        } else {
            Ok(self)
        }
    }

    pub fn cone(self) -> Result<Cone> {
        match (self.n.signum(), self.r.signum()) {
            (0, 0) => Err(Error::ZeroPoint),
            (1, _) | (0, 1) => Ok(Cone::Positive),
            _ => Ok(Cone::Negative),
        }
    }

    /// Gcd of the coordinates; 0 only for the origin.
    pub fn content(self) -> i64 {
        gcd(self.r, self.n)
    }
}

impl std::ops::Add for LatticePoint {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        pt(self.r + o.r, self.n + o.n)
    }
}

impl std::ops::Neg for LatticePoint {
    type Output = Self;
    fn neg(self) -> Self {
        pt(-self.r, -self.n)
    }
}

impl std::ops::Mul<LatticePoint> for i64 {
    type Output = LatticePoint;
    fn mul(self, x: LatticePoint) -> LatticePoint {
        pt(self * x.r, self * x.n)
    }
}

/// Generator order: by `n`, then by `r`.
impl Ord for LatticePoint {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        (self.n, self.r).cmp(&(o.n, o.r))
    }
}

impl PartialOrd for LatticePoint {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.r, self.n)
    }
}

impl FromStr for LatticePoint {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(s);
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| Error::parse(0, format!("expected `r,n`, got `{s}`")))?;
        let p = |x: &str| {
            x.trim()
                .parse::<i64>()
                .map_err(|e| Error::parse(0, format!("bad coordinate `{}`: {e}", x.trim())))
        };
        Ok(pt(p(a)?, p(b)?))
    }
}

/// Parses a word of lattice points, either `r,n; r,n; ...` or the JSON form
/// `[[r,n],[r,n],...]`. Empty input is the empty word.
pub fn parse_word(s: &str) -> Result<Vec<LatticePoint>> {
    if s.trim_start().starts_with('[') {
        let v: Vec<[i64; 2]> =
            serde_json::from_str(s).map_err(|e| Error::parse(e.column(), e.to_string()))?;
        return Ok(v.into_iter().map(|[r, n]| pt(r, n)).collect());
    }
    s.split(';')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(str::parse)
        .collect()
}

pub fn det2(x: LatticePoint, y: LatticePoint) -> i64 {
    x.r * y.n - x.n * y.r
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `[[a, b], [c, d]]` acting on column vectors `(r, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gl2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Gl2 {
    pub const IDENTITY: Gl2 = Gl2 {
        a: 1,
        b: 0,
        c: 0,
        d: 1,
    };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let g = Gl2 { a, b, c, d };
        if g.det().abs() != 1 {
            return Err(Error::InvalidArgument(format!(
                "{g} has determinant {}, not ±1",
                g.det()
            )));
        }
        Ok(g)
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn apply(&self, x: LatticePoint) -> LatticePoint {
        pt(self.a * x.r + self.b * x.n, self.c * x.r + self.d * x.n)
    }

    pub fn inverse(&self) -> Gl2 {
        let e = self.det();
        Gl2 {
            a: e * self.d,
            b: -e * self.b,
            c: -e * self.c,
            d: e * self.a,
        }
    }

    pub fn compose(&self, o: &Gl2) -> Gl2 {
        Gl2 {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }
}

impl fmt::Display for Gl2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for Gl2 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let digits: String = s
            .chars()
            .filter(|c| !matches!(c, '[' | ']' | ' '))
            .collect();
        let v = digits
            .split(',')
            .map(|x| x.parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::parse(0, format!("bad matrix `{s}`: {e}")))?;
        match v[..] {
            [a, b, c, d] => Gl2::new(a, b, c, d),
            _ => Err(Error::parse(0, format!("expected four entries in `{s}`"))),
        }
    }
}

/// `lambda(r, n) = a*r + b*n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearForm {
    pub a: i64,
    pub b: i64,
}

impl LinearForm {
    /// `lambda_k(r, n) = k*n`.
    pub const fn charge(k: i64) -> Self {
        LinearForm { a: 0, b: k }
    }

    pub fn eval(&self, x: LatticePoint) -> i64 {
        self.a * x.r + self.b * x.n
    }

    /// `lambda ∘ g`.
    pub fn compose(&self, g: &Gl2) -> LinearForm {
        LinearForm {
            a: self.a * g.a + self.b * g.c,
            b: self.a * g.b + self.b * g.d,
        }
    }

    /// The charge `k` when this form is some `lambda_k`.
    pub fn as_charge(&self) -> Option<i64> {
        (self.a == 0).then_some(self.b)
    }
}

/// Extended Euclid: `(g, x, y)` with `a*x + b*y = g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// For `lam = (a, b)`, returns `(gamma, k)` with `k = gcd(a, b)` and
/// `lam ∘ gamma^-1 = lambda_k`. The Bezout pair `a*c + b*d = k` is the one
/// with smallest `|c|` (ties broken towards positive `c`).
pub fn violet_gamma(lam: LinearForm) -> (Gl2, i64) {
    let (a, b) = (lam.a, lam.b);
    if a == 0 && b == 0 {
        return (Gl2::IDENTITY, 0);
    }
    let (k, c0, d0) = ext_gcd(a, b);
    let (a1, b1) = (a / k, b / k);
    // all solutions: c = c0 + m*b1, d = d0 - m*a1
    let (c, d) = if b1 == 0 {
        (c0, d0)
    } else {
        let m0 = (-c0).div_euclid(b1.abs()) * b1.signum();
        (m0 - 1..=m0 + 1)
            .map(|m| (c0 + m * b1, d0 - m * a1))
            .min_by_key(|&(c, _)| (c.abs(), c < 0))
            .unwrap()
    };
    (
        Gl2 {
            a: d,
            b: -c,
            c: a1,
            d: b1,
        },
        k,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_examples() {
        assert_eq!(det2(pt(1, 0), pt(0, 1)), 1);
        assert_eq!(det2(pt(1, 1), pt(-1, -1)), 0);
        assert_eq!(det2(pt(2, 1), pt(1, 3)), 5);
    }

    #[test]
    fn cones() {
        assert_eq!(pt(3, 0).cone(), Ok(Cone::Positive));
        assert_eq!(pt(5, -1).cone(), Ok(Cone::Negative));
        assert_eq!(pt(0, 1).cone(), Ok(Cone::Positive));
        assert_eq!(pt(0, 0).cone(), Err(Error::ZeroPoint));
    }

    #[test]
    fn gl2_examples() {
        let rot = Gl2::new(0, -1, 1, 0).unwrap();
        assert_eq!(rot.apply(pt(1, 0)), pt(0, 1));
        let shear = Gl2::new(1, 1, 0, 1).unwrap();
        assert_eq!(shear.apply(pt(1, 1)), pt(2, 1));
        assert_eq!(Gl2::IDENTITY.apply(pt(-4, 7)), pt(-4, 7));
        assert!(Gl2::new(2, 0, 0, 1).is_err());
        assert_eq!(rot.compose(&rot.inverse()), Gl2::IDENTITY);
    }

    #[test]
    fn violet_examples() {
        let (g, k) = violet_gamma(LinearForm { a: 0, b: 1 });
        assert_eq!((g, k), (Gl2::IDENTITY, 1));
        let (g, k) = violet_gamma(LinearForm { a: 3, b: 0 });
        assert_eq!((g, k), (Gl2::new(0, -1, 1, 0).unwrap(), 3));
        let (_, k) = violet_gamma(LinearForm { a: 2, b: 4 });
        assert_eq!(k, 2);
        assert_eq!(violet_gamma(LinearForm { a: 0, b: 0 }), (Gl2::IDENTITY, 0));
    }

    #[test]
    fn serialization() {
        assert_eq!(pt(-2, 3).to_string(), "-2,3");
        assert_eq!("(-2, 3)".parse::<LatticePoint>(), Ok(pt(-2, 3)));
        assert_eq!(parse_word("1,0; 0,1").unwrap(), vec![pt(1, 0), pt(0, 1)]);
        assert!(parse_word("").unwrap().is_empty());
        assert_eq!(
            parse_word("[[0,1],[0,-1]]").unwrap(),
            vec![pt(0, 1), pt(0, -1)]
        );
        let g = Gl2::new(1, 1, 0, 1).unwrap();
        assert_eq!(g.to_string(), "[[1,1],[0,1]]");
        assert_eq!(g.to_string().parse::<Gl2>(), Ok(g));
    }
}
