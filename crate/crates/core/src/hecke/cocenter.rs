//! Cocenters `C(A) = A / [A, A]` by exact row reduction over `Q(q,t)`.

use std::collections::HashMap;
use std::fmt;

use super::{perm, AkWord, Hecke, HeckeElement};
use crate::coeff::{fmt_sum, fmt_term, RatFunc};
use crate::error::{Error, Result};
use crate::par::Exec;

pub const DEFAULT_SIZE_CAP: usize = 64;

/// Largest algebra dimension for which cocenters are computed; the
/// `EHK_SIZE_CAP` environment variable overrides the default.
pub fn size_cap() -> usize {
    std::env::var("EHK_SIZE_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SIZE_CAP)
}

/// Reduced row echelon form, grown one row at a time.
#[derive(Clone, Debug, Default)]
pub(crate) struct Echelon {
    width: usize,
    /// `(pivot column, row)`; each row is 1 at its pivot and 0 at every other
    /// pivot column.
    rows: Vec<(usize, Vec<RatFunc>)>,
}

impl Echelon {
    pub(crate) fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
        }
    }

    pub(crate) fn reduce(&self, v: &mut [RatFunc]) {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = x.sub(&c.mul(y));
                }
            }
        }
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub(crate) fn insert(&mut self, mut v: Vec<RatFunc>) -> bool {
        debug_assert_eq!(v.len(), self.width);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().unwrap();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x = x.sub(&c.mul(y));
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    fn is_pivot(&self, c: usize) -> bool {
        self.rows.iter().any(|(p, _)| *p == c)
    }
}

/// The cocenter of `H_n^f` with a chosen complement of the commutator span.
#[derive(Clone, Debug)]
pub struct Cocenter {
    n: usize,
    columns: Vec<AkWord>,
    index: HashMap<AkWord, usize>,
    echelon: Echelon,
    free: Vec<usize>,
}

/// Coordinates of a class in the complement basis of [`Cocenter`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CocenterClass {
    pub n: usize,
    pub coords: Vec<RatFunc>,
}

impl CocenterClass {
    pub fn zero(n: usize, dim: usize) -> Self {
        CocenterClass {
            n,
            coords: vec![RatFunc::zero(); dim],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(RatFunc::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.n, o.n);
        CocenterClass {
            n: self.n,
            coords: self
                .coords
                .iter()
                .zip(&o.coords)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &RatFunc) -> Self {
        CocenterClass {
            n: self.n,
            coords: self.coords.iter().map(|a| a.mul(s)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&RatFunc::from_int(-1)))
    }
}

impl Cocenter {
    /// Spans `[b, g]` for basis words `b` and algebra generators
    /// `g ∈ {x_1, τ_1, ..., τ_{n-1}}`, which already span `[A, A]`.
    pub fn new(alg: &Hecke, exec: Exec) -> Result<Self> {
        let mut c = Self::empty(alg)?;
        let mut gens = Vec::new();
        if alg.rank() > 0 {
            gens.push(alg.x(0));
        }
        for i in 0..alg.rank().saturating_sub(1) {
            gens.push(alg.tau(i));
        }
        let pairs: Vec<(usize, usize)> = (0..c.columns.len())
            .flat_map(|b| (0..gens.len()).map(move |g| (b, g)))
            .collect();
        let rows = exec.map(&pairs, |&(b, g)| {
            let hb = HeckeElement::basis(c.columns[b].clone());
            alg.commutator(&hb, &gens[g]).expect("same rank")
        });
        c.absorb(rows);
        Ok(c)
    }

    /// Spans `[b, b']` over all pairs of basis words (slow; for cross-checks).
    pub fn from_all_pairs(alg: &Hecke, exec: Exec) -> Result<Self> {
        let mut c = Self::empty(alg)?;
        let m = c.columns.len();
        let pairs: Vec<(usize, usize)> = (0..m)
            .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
            .collect();
        let rows = exec.map(&pairs, |&(a, b)| {
            let ha = HeckeElement::basis(c.columns[a].clone());
            let hb = HeckeElement::basis(c.columns[b].clone());
            alg.commutator(&ha, &hb).expect("same rank")
        });
        c.absorb(rows);
        Ok(c)
    }

    fn empty(alg: &Hecke) -> Result<Self> {
        let cap = size_cap();
        if alg.dimension() > cap {
            return Err(Error::SizeCap {
                dim: alg.dimension(),
                cap,
            });
        }
        // complicated words first, so pivots land there and the complement
        // consists of the simplest words
        let mut columns = alg.basis();
        columns.sort_by(|a, b| {
            let ka = (
                perm::length(&a.g),
                a.x.iter().map(|&v| v as usize).sum::<usize>(),
            );
            let kb = (
                perm::length(&b.g),
                b.x.iter().map(|&v| v as usize).sum::<usize>(),
            );
            kb.cmp(&ka).then_with(|| b.cmp(a))
        });
        let index = columns
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        Ok(Cocenter {
            n: alg.rank(),
            echelon: Echelon::new(columns.len()),
            columns,
            index,
            free: Vec::new(),
        })
    }

    fn absorb(&mut self, rows: Vec<HeckeElement>) {
        for h in rows {
            if !h.is_zero() {
                let v = self.dense(&h);
                self.echelon.insert(v);
            }
        }
        self.free = (0..self.columns.len())
            .filter(|&c| !self.echelon.is_pivot(c))
            .collect();
    }

    fn dense(&self, h: &HeckeElement) -> Vec<RatFunc> {
        let mut v = vec![RatFunc::zero(); self.columns.len()];
        for (w, c) in h.terms() {
            v[self.index[w]] = c.clone();
        }
        v
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Rank of the commutator span.
    pub fn commutator_rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Basis words whose classes form the complement basis.
    pub fn representatives(&self) -> Vec<&AkWord> {
        self.free.iter().map(|&c| &self.columns[c]).collect()
    }

    pub fn project(&self, h: &HeckeElement) -> Result<CocenterClass> {
        if h.rank() != self.n {
            return Err(Error::RankMismatch(h.rank(), self.n));
        }
        let mut v = self.dense(h);
        self.echelon.reduce(&mut v);
        Ok(CocenterClass {
            n: self.n,
            coords: self.free.iter().map(|&c| v[c].clone()).collect(),
        })
    }

    /// A representative in `H_n^f`.
    pub fn lift(&self, c: &CocenterClass) -> HeckeElement {
        let mut h = HeckeElement::zero(self.n);
        for (&col, x) in self.free.iter().zip(&c.coords) {
            h.add_term(self.columns[col].clone(), x.clone());
        }
        h
    }

    pub fn unit_class(&self) -> CocenterClass {
        self.project(&HeckeElement::one(self.n)).unwrap()
    }

    pub fn display(&self, c: &CocenterClass) -> String {
        fmt_sum(
            self.free
                .iter()
                .zip(&c.coords)
                .filter(|(_, x)| !x.is_zero())
                .map(|(&col, x)| fmt_term(x, &format!("[{}]", self.columns[col]))),
        )
    }

    pub fn to_json(&self, c: &CocenterClass) -> serde_json::Value {
        serde_json::Value::Array(
            self.free
                .iter()
                .zip(&c.coords)
                .filter(|(_, x)| !x.is_zero())
                .map(|(&col, x)| {
                    serde_json::json!({ "class": self.columns[col].to_string(), "coeff": x.to_string() })
                })
                .collect(),
        )
    }
}

impl fmt::Display for Cocenter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let reps: Vec<String> = self
            .representatives()
            .iter()
            .map(|w| format!("[{w}]"))
            .collect();
        write!(f, "dim {}: {}", self.dim(), reps.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::CyclotomicPoly;

    fn poly(s: &str) -> CyclotomicPoly {
        s.parse().unwrap()
    }

    #[test]
    fn small_dimensions() {
        let cases = [
            (0, "1,t^2", 1),
            (1, "1,-(1+t^2),t^2", 2),
            (2, "1,t^2", 2),
            (3, "1,t^2", 3),
        ];
        for (n, f, d) in cases {
            let h = Hecke::new(n, poly(f));
            let c = Cocenter::new(&h, Exec::Sequential).unwrap();
            assert_eq!(c.dim(), d, "n={n} f={f}");
        }
    }

    #[test]
    fn generator_commutators_span_all_commutators() {
        for (n, f) in [(2, "1,t^2"), (2, "1,-(1+t^2),t^2"), (3, "1,t^2")] {
            let h = Hecke::new(n, poly(f));
            let a = Cocenter::new(&h, Exec::Sequential).unwrap();
            let b = Cocenter::from_all_pairs(&h, Exec::Sequential).unwrap();
            assert_eq!(a.dim(), b.dim());
            assert_eq!(a.representatives(), b.representatives());
        }
    }

    #[test]
    fn projection_kills_commutators_and_fixes_representatives() {
        let h = Hecke::new(2, poly("1,-(1+t^2),t^2"));
        let c = Cocenter::new(&h, Exec::Sequential).unwrap();
        let comm = h.commutator(&h.x(1), &h.tau(0)).unwrap();
        assert!(c.project(&comm).unwrap().is_zero());
        for w in c.representatives() {
            let cls = c.project(&HeckeElement::basis(w.clone())).unwrap();
            assert_eq!(c.lift(&cls), HeckeElement::basis(w.clone()));
        }
    }
}
