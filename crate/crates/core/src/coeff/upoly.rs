//! Dense univariate polynomials over the integers.

use super::int::Int;

/// Coefficients from degree 0 upwards, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct UPoly {
    c: Vec<Int>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    pub fn constant(v: Int) -> Self {
        let mut p = UPoly { c: vec![v] };
        p.trim();
        p
    }

    pub fn one() -> Self {
        Self::constant(Int::ONE)
    }

    /// `coeff * x^deg`
    pub fn monomial(coeff: Int, deg: usize) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        let mut c = vec![Int::ZERO; deg + 1];
        c[deg] = coeff;
        UPoly { c }
    }

    pub fn from_coeffs(c: Vec<Int>) -> Self {
        let mut p = UPoly { c };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.c.last(), Some(v) if v.is_zero()) {
            self.c.pop();
        }
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> &Int {
        self.c
            .last()
            .expect("leading coefficient of zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> &Int {
        self.c.get(i).unwrap_or(&Int::ZERO)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|v| !v.is_zero())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut c = vec![Int::ZERO; k];
        c.extend(self.c.iter().cloned());
        UPoly { c }
    }

    /// Divides by `x^k`; the caller guarantees the low coefficients vanish.
    pub fn shift_down(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        debug_assert!(self.c.iter().take(k).all(Int::is_zero));
        UPoly {
            c: self.c.iter().skip(k).cloned().collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i) + other.coeff(i));
        }
        Self::from_coeffs(c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i) - other.coeff(i));
        }
        Self::from_coeffs(c)
    }

    pub fn neg(&self) -> Self {
        UPoly {
            c: self.c.iter().map(|v| -v).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        if let (Some(a), Some(b)) = (small(&self.c), small(&other.c)) {
            let mut acc = vec![0i128; a.len() + b.len() - 1];
            for (i, &x) in a.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b.iter().enumerate() {
                    acc[i + j] += x as i128 * y as i128;
                }
            }
            return Self::from_coeffs(acc.into_iter().map(Int::from_i128).collect());
        }
        let mut c = vec![Int::ZERO; self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        Self::from_coeffs(c)
    }

    pub fn scale(&self, s: &Int) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        if s.is_one() {
            return self.clone();
        }
        UPoly {
            c: self.c.iter().map(|v| v * s).collect(),
        }
    }

    pub fn div_exact_scalar(&self, s: &Int) -> Self {
        if s.is_one() {
            return self.clone();
        }
        UPoly {
            c: self.c.iter().map(|v| v.div_exact(s)).collect(),
        }
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for v in &self.c {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lead().is_negative() {
            g = -g;
        }
        self.div_exact_scalar(&g)
    }

    /// Pseudo-remainder `lc(d)^(deg a - deg d + 1) * a mod d`.
    pub fn prem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-remainder by zero");
        let mut r = self.c.clone();
        let lc = d.lead().clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let lr = r[top].clone();
            let shift = top - dd;
            for v in r.iter_mut() {
                *v = &*v * &lc;
            }
            for (j, dj) in d.c.iter().enumerate() {
                r[shift + j] = &r[shift + j] - &(&lr * dj);
            }
            debug_assert!(r[top].is_zero());
            while matches!(r.last(), Some(v) if v.is_zero()) {
                r.pop();
            }
        }
        Self::from_coeffs(r)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self` over Z.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_one() {
            return Some(self.clone());
        }
        let ds = self.degree().unwrap();
        if ds < dd {
            return None;
        }
        let mut r = self.c.clone();
        let mut q = vec![Int::ZERO; ds - dd + 1];
        let lc = d.lead();
        for top in (dd..=ds).rev() {
            if r[top].is_zero() {
                continue;
            }
            let f = r[top].checked_div_exact(lc)?;
            let shift = top - dd;
            for (j, dj) in d.c.iter().enumerate() {
                r[shift + j] = &r[shift + j] - &(&f * dj);
            }
            q[shift] = f;
        }
        if r.iter().any(|v| !v.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(q))
    }

    /// Gcd over Z, normalized with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_with_content();
        }
        if other.is_zero() {
            return self.primitive_with_content();
        }
        let ca = self.content();
        let cb = other.content();
        let c = ca.gcd(&cb);
        let va = self.valuation().unwrap();
        let vb = other.valuation().unwrap();
        let v = va.min(vb);
        let mut a = self.shift_down(va).primitive();
        let mut b = other.shift_down(vb).primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        let g = loop {
            if b.degree() == Some(0) {
                break UPoly::one();
            }
            if a.div_exact(&b).is_some() {
                break b;
            }
            let r = a.prem(&b);
            if r.is_zero() {
                break b;
            }
            a = b;
            b = r.primitive();
        };
        g.scale(&c).shift_up(v)
    }

    fn primitive_with_content(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        if self.lead().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

/// The coefficients as machine integers, when all are small enough that a
/// product sum cannot overflow `i128`.
fn small(c: &[Int]) -> Option<Vec<i64>> {
    const LIMIT: i64 = 1 << 40;
    c.iter()
        .map(|v| match v {
            Int::Small(x) if x.abs() < LIMIT => Some(*x),
            _ => None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> UPoly {
        UPoly::from_coeffs(v.iter().map(|&x| Int::from(x)).collect())
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (x^4 - 1) and (x^6 - 1) share x^2 - 1
        let a = p(&[-1, 0, 0, 0, 1]);
        let b = p(&[-1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 0, 1]));
    }

    #[test]
    fn gcd_keeps_content_and_power_of_x() {
        let a = p(&[0, 0, 6, 6]);
        let b = p(&[0, 4, 4]);
        assert_eq!(a.gcd(&b), p(&[0, 2, 2]));
    }

    #[test]
    fn exact_division_detects_remainders() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(a.div_exact(&p(&[1, 1])), Some(p(&[-1, 1])));
        assert_eq!(a.div_exact(&p(&[2, 1])), None);
        assert_eq!(p(&[1, 2]).div_exact(&p(&[0, 2])), None);
    }
}
