//! Bivariate integer polynomials in `q` and `t`, stored as polynomials in `t`
//! whose coefficients are dense polynomials in `q`.
//!
//! Denominators met in practice are products of quantum integers and powers of
//! `t`, so the gcd routine short-circuits whenever one side is free of `t`
//! or is a monomial, and falls back to a primitive remainder sequence over
//! `Z[q][t]` otherwise.

use std::cmp::Ordering;

use super::int::Int;
use super::upoly::UPoly;

#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Poly {
    /// `t`-coefficients from degree 0 upwards, no trailing zeros.
    t: Vec<UPoly>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { t: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Int::ONE)
    }

    pub fn constant(v: Int) -> Self {
        Self::from_t_coeffs(vec![UPoly::constant(v)])
    }

    /// `c * q^i * t^j`
    pub fn monomial(c: Int, qdeg: usize, tdeg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut t = vec![UPoly::zero(); tdeg + 1];
        t[tdeg] = UPoly::monomial(c, qdeg);
        Poly { t }
    }

    pub fn from_q(p: UPoly) -> Self {
        Self::from_t_coeffs(vec![p])
    }

    pub fn from_t_coeffs(t: Vec<UPoly>) -> Self {
        let mut p = Poly { t };
        p.trim();
        p
    }

    /// Builds from `(coefficient, q-exponent, t-exponent)` triples; repeated
    /// exponents accumulate.
    pub fn from_terms<I: IntoIterator<Item = (Int, usize, usize)>>(terms: I) -> Self {
        let mut acc: Vec<Vec<Int>> = Vec::new();
        for (c, i, j) in terms {
            if acc.len() <= j {
                acc.resize(j + 1, Vec::new());
            }
            let row = &mut acc[j];
            if row.len() <= i {
                row.resize(i + 1, Int::ZERO);
            }
            row[i] = &row[i] + &c;
        }
        Self::from_t_coeffs(acc.into_iter().map(UPoly::from_coeffs).collect())
    }

    fn trim(&mut self) {
        while matches!(self.t.last(), Some(p) if p.is_zero()) {
            self.t.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.t.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.t.len() == 1 && self.t[0].is_one()
    }

    pub fn t_coeffs(&self) -> &[UPoly] {
        &self.t
    }

    pub fn t_degree(&self) -> Option<usize> {
        self.t.len().checked_sub(1)
    }

    pub fn q_degree(&self) -> Option<usize> {
        self.t.iter().filter_map(UPoly::degree).max()
    }

    /// Nonzero terms as `(coefficient, q-exponent, t-exponent)`.
    pub fn terms(&self) -> impl Iterator<Item = (&Int, usize, usize)> + '_ {
        self.t.iter().enumerate().flat_map(|(j, p)| {
            p.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(i, c)| (c, i, j))
        })
    }

    pub fn term_count(&self) -> usize {
        self.terms().count()
    }

    /// Is this `c * q^i * t^j` for a single term?
    pub fn as_monomial(&self) -> Option<(&Int, usize, usize)> {
        let mut it = self.terms();
        let first = it.next()?;
        if it.next().is_some() {
            None
        } else {
            Some(first)
        }
    }

    /// Minimal `q` and `t` exponents over all terms.
    pub fn min_exponents(&self) -> Option<(usize, usize)> {
        let tv = self.t.iter().position(|p| !p.is_zero())?;
        let qv = self.t.iter().filter_map(UPoly::valuation).min()?;
        Some((qv, tv))
    }

    pub fn shift(&self, qk: usize, tk: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut t = vec![UPoly::zero(); tk];
        t.extend(self.t.iter().map(|p| p.shift_up(qk)));
        Poly { t }
    }

    pub fn unshift(&self, qk: usize, tk: usize) -> Self {
        Poly {
            t: self.t.iter().skip(tk).map(|p| p.shift_down(qk)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.t.len().max(other.t.len());
        let zero = UPoly::zero();
        let t = (0..n)
            .map(|j| {
                let a = self.t.get(j).unwrap_or(&zero);
                let b = other.t.get(j).unwrap_or(&zero);
                a.add(b)
            })
            .collect();
        Self::from_t_coeffs(t)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.t.len().max(other.t.len());
        let zero = UPoly::zero();
        let t = (0..n)
            .map(|j| {
                let a = self.t.get(j).unwrap_or(&zero);
                let b = other.t.get(j).unwrap_or(&zero);
                a.sub(b)
            })
            .collect();
        Self::from_t_coeffs(t)
    }

    pub fn neg(&self) -> Self {
        Poly {
            t: self.t.iter().map(UPoly::neg).collect(),
        }
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
        let mut t = vec![UPoly::zero(); self.t.len() + other.t.len() - 1];
        for (i, a) in self.t.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.t.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                t[i + j] = t[i + j].add(&a.mul(b));
            }
        }
        Self::from_t_coeffs(t)
    }

    pub fn mul_q(&self, p: &UPoly) -> Self {
        Self::from_t_coeffs(self.t.iter().map(|c| c.mul(p)).collect())
    }

    pub fn scale(&self, s: &Int) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Poly {
            t: self.t.iter().map(|p| p.scale(s)).collect(),
        }
    }

    pub fn div_exact_scalar(&self, s: &Int) -> Self {
        Poly {
            t: self.t.iter().map(|p| p.div_exact_scalar(s)).collect(),
        }
    }

    fn div_exact_q(&self, d: &UPoly) -> Option<Self> {
        let t = self
            .t
            .iter()
            .map(|p| p.div_exact(d))
            .collect::<Option<Vec<_>>>()?;
        Some(Poly { t })
    }

    /// Integer content (non-negative).
    pub fn int_content(&self) -> Int {
        let mut g = Int::ZERO;
        for p in &self.t {
            g = g.gcd(&p.content());
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Gcd of the `t`-coefficients, an element of `Z[q]` (with integer content).
    fn t_content(&self) -> UPoly {
        let mut g = UPoly::zero();
        for p in &self.t {
            if p.is_zero() {
                continue;
            }
            g = g.gcd(p);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact quotient in `Z[q,t]`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.t_degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_one() {
            return Some(self.clone());
        }
        if dd == 0 {
            return self.div_exact_q(&d.t[0]);
        }
        let ds = self.t_degree().unwrap();
        if ds < dd {
            return None;
        }
        let mut r = self.t.clone();
        let mut q = vec![UPoly::zero(); ds - dd + 1];
        let lc = &d.t[dd];
        for top in (dd..=ds).rev() {
            if r[top].is_zero() {
                continue;
            }
            let f = r[top].div_exact(lc)?;
            let shift = top - dd;
            for (j, dj) in d.t.iter().enumerate() {
                if dj.is_zero() {
                    continue;
                }
                r[shift + j] = r[shift + j].sub(&f.mul(dj));
            }
            q[shift] = f;
        }
        if r.iter().any(|p| !p.is_zero()) {
            return None;
        }
        Some(Self::from_t_coeffs(q))
    }

    /// Pseudo-remainder in `Z[q][t]`.
    fn prem_t(&self, d: &Self) -> Self {
        let dd = d.t_degree().expect("pseudo-remainder by zero");
        let lc = d.t[dd].clone();
        let mut r = self.t.clone();
        while r.len() > dd {
            let top = r.len() - 1;
            let lr = r[top].clone();
            let shift = top - dd;
            for v in r.iter_mut() {
                *v = v.mul(&lc);
            }
            for (j, dj) in d.t.iter().enumerate() {
                r[shift + j] = r[shift + j].sub(&lr.mul(dj));
            }
            while matches!(r.last(), Some(p) if p.is_zero()) {
                r.pop();
            }
        }
        Self::from_t_coeffs(r)
    }

    /// Primitive part with respect to `t` (divides out the `Z[q]` content).
    fn t_primitive(&self) -> Self {
        let c = self.t_content();
        if c.is_one() {
            return self.clone();
        }
        self.div_exact_q(&c).expect("content divides")
    }

    /// Sign of the leading coefficient under graded-lex order with `q > t`.
    pub fn lead_sign(&self) -> i32 {
        let mut best: Option<(usize, usize, &Int)> = None;
        for (c, i, j) in self.terms() {
            let better = match best {
                None => true,
                Some((bi, bj, _)) => match (i + j).cmp(&(bi + bj)) {
                    Ordering::Greater => true,
                    Ordering::Equal => i > bi,
                    Ordering::Less => false,
                },
            };
            if better {
                best = Some((i, j, c));
            }
        }
        best.map_or(0, |(_, _, c)| c.signum())
    }

    /// Gcd in `Z[q,t]`, including integer content, with positive leading
    /// coefficient. `gcd(0, 0) == 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalize_sign();
        }
        if other.is_zero() {
            return self.normalize_sign();
        }
        if self.is_one() || other.is_one() {
            return Self::one();
        }
        let (aq, at) = self.min_exponents().unwrap();
        let (bq, bt) = other.min_exponents().unwrap();
        let (mq, mt) = (aq.min(bq), at.min(bt));
        let a = self.unshift(aq, at);
        let b = other.unshift(bq, bt);

        if let Some((c, _, _)) = a.as_monomial() {
            return Self::constant(c.gcd(&b.int_content())).shift(mq, mt);
        }
        if let Some((c, _, _)) = b.as_monomial() {
            return Self::constant(c.gcd(&a.int_content())).shift(mq, mt);
        }

        // a q-only side seeds the content gcd, which keeps the degrees small
        if a.t_degree() == Some(0) || b.t_degree() == Some(0) {
            let (q, other) = if a.t_degree() == Some(0) {
                (&a, &b)
            } else {
                (&b, &a)
            };
            let mut g = q.t[0].clone();
            for p in other.t.iter().filter(|p| !p.is_zero()) {
                g = g.gcd(p);
                if g.is_one() {
                    break;
                }
            }
            return Self::from_q(g).normalize_sign().shift(mq, mt);
        }
        let ca = a.t_content();
        let cb = b.t_content();
        let c = ca.gcd(&cb);
        let g = {
            let mut p1 = a.div_exact_q(&ca).unwrap();
            let mut p2 = b.div_exact_q(&cb).unwrap();
            if p1.t_degree() < p2.t_degree() {
                std::mem::swap(&mut p1, &mut p2);
            }
            let h = loop {
                if p2.t_degree() == Some(0) {
                    break Self::one();
                }
                if p1.div_exact(&p2).is_some() {
                    break p2;
                }
                let r = p1.prem_t(&p2);
                if r.is_zero() {
                    break p2;
                }
                p1 = p2;
                p2 = r.t_primitive();
            };
            h.t_primitive().mul_q(&c)
        };
        g.normalize_sign().shift(mq, mt)
    }

    fn normalize_sign(&self) -> Self {
        if self.lead_sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, usize, usize)]) -> Poly {
        Poly::from_terms(terms.iter().map(|&(c, i, j)| (Int::from(c), i, j)))
    }

    #[test]
    fn gcd_mixed_variables() {
        // (q - t)(q + 1) and (q - t)(t + 2)
        let f = p(&[(1, 1, 0), (-1, 0, 1)]);
        let a = f.mul(&p(&[(1, 1, 0), (1, 0, 0)]));
        let b = f.mul(&p(&[(1, 0, 1), (2, 0, 0)]));
        assert_eq!(a.gcd(&b), f);
    }

    #[test]
    fn gcd_with_q_only_side() {
        // t^2 (q^2 - 1) q and (q - 1)
        let a = p(&[(1, 3, 2), (-1, 1, 2)]);
        let b = p(&[(1, 1, 0), (-1, 0, 0)]);
        assert_eq!(a.gcd(&b), b);
    }

    #[test]
    fn gcd_monomials_and_content() {
        let a = p(&[(6, 2, 1), (4, 3, 1)]);
        let b = p(&[(10, 1, 3)]);
        assert_eq!(a.gcd(&b), p(&[(2, 1, 1)]));
    }

    #[test]
    fn exact_division_in_two_variables() {
        let f = p(&[(1, 1, 0), (-1, 0, 1)]);
        let g = p(&[(3, 2, 1), (1, 0, 0)]);
        assert_eq!(f.mul(&g).div_exact(&f), Some(g.clone()));
        assert_eq!(g.div_exact(&f), None);
    }
}
