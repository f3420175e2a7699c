//! The module `V_f = ⊕_n C(H_n^f)` with induction and restriction operators.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use super::{perm, AkWord, Cocenter, CocenterClass, CyclotomicPoly, Hecke, HeckeElement};
use crate::coeff::{expand_series, fmt_sum, Direction, RatFunc, ULaurent};
use crate::error::{Error, Result};
use crate::par::Exec;

/// Which side the dot `x_{n+1}^r` sits on inside the conditional trace.
///
/// `Right` is the trace of right multiplication by `x_{n+1}^r h` on
/// `H_{n+1}` viewed as a free left `H_n`-module; `Left` inserts the dot to
/// the left of the basis element instead.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ResConvention {
    Right,
    #[default]
    Left,
}

/// A finitely supported vector in `⊕_n C(H_n^f)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VfVector {
    parts: BTreeMap<usize, CocenterClass>,
}

impl VfVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_class(c: CocenterClass) -> Self {
        let mut v = Self::zero();
        v.add_class(c);
        v
    }

    pub fn add_class(&mut self, c: CocenterClass) {
        let n = c.n;
        let sum = match self.parts.remove(&n) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.parts.insert(n, sum);
        }
    }

    pub fn component(&self, n: usize) -> Option<&CocenterClass> {
        self.parts.get(&n)
    }

    pub fn components(&self) -> impl Iterator<Item = &CocenterClass> {
        self.parts.values()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for c in o.parts.values() {
            out.add_class(c.clone());
        }
        out
    }

    pub fn scale(&self, s: &RatFunc) -> Self {
        let mut out = Self::zero();
        for c in self.parts.values() {
            out.add_class(c.scale(s));
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&RatFunc::from_int(-1)))
    }
}

/// Cocenters of `H_0^f, ..., H_N^f` together with the operators
/// `ind_dot(r)` (rank up) and `res_trace(r)` (rank down).
type Images = Arc<Vec<CocenterClass>>;

#[derive(Debug)]
pub struct Vf {
    f: CyclotomicPoly,
    conv: ResConvention,
    algebras: Vec<Hecke>,
    cocenters: Vec<Cocenter>,
    // images of the basis classes, keyed by (rank up?, dot, source rank)
    images: RwLock<HashMap<(bool, i64, usize), Images>>,
}

impl Vf {
    pub fn new(f: CyclotomicPoly, max_rank: usize, exec: Exec) -> Result<Self> {
        let mut algebras = Vec::new();
        let mut cocenters = Vec::new();
        for n in 0..=max_rank {
            let h = Hecke::new(n, f.clone());
            cocenters.push(Cocenter::new(&h, exec)?);
            algebras.push(h);
        }
        Ok(Vf {
            f,
            conv: ResConvention::default(),
            algebras,
            cocenters,
            images: RwLock::default(),
        })
    }

    pub fn with_convention(mut self, conv: ResConvention) -> Self {
        self.conv = conv;
        self.images = RwLock::default();
        self
    }

    pub fn poly(&self) -> &CyclotomicPoly {
        &self.f
    }

    pub fn max_rank(&self) -> usize {
        self.algebras.len() - 1
    }

    pub fn algebra(&self, n: usize) -> Result<&Hecke> {
        self.algebras.get(n).ok_or_else(|| self.too_big(n))
    }

    pub fn cocenter(&self, n: usize) -> Result<&Cocenter> {
        self.cocenters.get(n).ok_or_else(|| self.too_big(n))
    }

    fn too_big(&self, n: usize) -> Error {
        Error::InvalidArgument(format!(
            "rank {n} exceeds the prepared maximum {}",
            self.max_rank()
        ))
    }

    /// `v_f`, the unit of `C(H_0^f)`.
    pub fn vacuum(&self) -> VfVector {
        VfVector::from_class(self.cocenters[0].unit_class())
    }

    /// The class of an element of some `H_n^f`.
    pub fn class_of(&self, h: &HeckeElement) -> Result<VfVector> {
        Ok(VfVector::from_class(self.cocenter(h.rank())?.project(h)?))
    }

    /// Class of `x_{n+1}^r ι(h)`.
    pub fn ind_dot_class(&self, r: i64, c: &CocenterClass) -> Result<CocenterClass> {
        self.cocenter(c.n + 1)?;
        self.through(true, r, c)
    }

    /// The conditional trace of `x_{n+1}^r h` down to `C(H_n^f)`; `None` on
    /// rank 0.
    pub fn res_trace_class(&self, r: i64, c: &CocenterClass) -> Result<Option<CocenterClass>> {
        if c.n == 0 {
            return Ok(None);
        }
        self.through(false, r, c).map(Some)
    }

    /// Applies an operator through its cached matrix on the basis classes.
    fn through(&self, up: bool, r: i64, c: &CocenterClass) -> Result<CocenterClass> {
        let key = (up, r, c.n);
        let cached = self.images.read().unwrap().get(&key).cloned();
        let cols = match cached {
            Some(m) => m,
            None => {
                let dim = self.cocenters[c.n].dim();
                let mut cols = Vec::with_capacity(dim);
                for i in 0..dim {
                    let mut e = CocenterClass::zero(c.n, dim);
                    e.coords[i] = RatFunc::one();
                    cols.push(if up {
                        self.ind_direct(r, &e)?
                    } else {
                        self.res_direct(r, &e)?
                    });
                }
                let m = Arc::new(cols);
                self.images.write().unwrap().insert(key, m.clone());
                m
            }
        };
        let target = if up { c.n + 1 } else { c.n - 1 };
        let mut out = CocenterClass::zero(target, self.cocenters[target].dim());
        for (x, col) in c.coords.iter().zip(cols.iter()) {
            if !x.is_zero() {
                out = out.add(&col.scale(x));
            }
        }
        Ok(out)
    }

    fn ind_direct(&self, r: i64, c: &CocenterClass) -> Result<CocenterClass> {
        let n = c.n;
        let up = self.algebra(n + 1)?;
        let h = self.cocenter(n)?.lift(c).embed();
        let y = up.mul(&up.x_pow(n, r), &h)?;
        self.cocenters[n + 1].project(&y)
    }

    fn res_direct(&self, r: i64, c: &CocenterClass) -> Result<CocenterClass> {
        let n = c.n - 1;
        let top = self.algebra(c.n)?;
        let h = self.cocenters[c.n].lift(c);
        let dot = top.x_pow(n, r);
        let mut acc = HeckeElement::zero(n);
        for j in 0..=n {
            let d = coset_rep(n, j);
            for a in 0..top.level() {
                let mut x = vec![0u8; n + 1];
                x[n] = a as u8;
                let b = HeckeElement::basis(AkWord { x, g: d.clone() });
                let y = match self.conv {
                    ResConvention::Right => top.mul(&b, &top.mul(&dot, &h)?)?,
                    ResConvention::Left => top.mul(&dot, &top.mul(&b, &h)?)?,
                };
                for (w, coeff) in y.terms() {
                    let (low, a2, j2) = split(w);
                    if a2 == a && j2 == j {
                        acc.add_term(low, coeff.clone());
                    }
                }
            }
        }
        self.cocenters[n].project(&acc)
    }

    pub fn ind_dot(&self, r: i64, v: &VfVector) -> Result<VfVector> {
        let mut out = VfVector::zero();
        for c in v.components() {
            out.add_class(self.ind_dot_class(r, c)?);
        }
        Ok(out)
    }

    pub fn res_trace(&self, r: i64, v: &VfVector) -> Result<VfVector> {
        let mut out = VfVector::zero();
        for c in v.components() {
            if let Some(d) = self.res_trace_class(r, c)? {
                out.add_class(d);
            }
        }
        Ok(out)
    }

    /// Applies a word of `(r, ±1)` letters, rightmost first.
    pub fn act_word(&self, word: &[(i64, i64)], v: &VfVector) -> Result<VfVector> {
        let mut v = v.clone();
        for &(r, n) in word.iter().rev() {
            v = match n {
                1 => self.ind_dot(r, &v)?,
                -1 => self.res_trace(r, &v)?,
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "only levels ±1 act on cocenters, got ({r},{n})"
                    )))
                }
            };
        }
        Ok(v)
    }

    pub fn display(&self, v: &VfVector) -> String {
        if v.is_zero() {
            return "0".into();
        }
        fmt_sum(v.components().map(|c| {
            let s = self.cocenters[c.n].display(c);
            format!("C{}: {}", c.n, s)
        }))
    }

    pub fn to_json(&self, v: &VfVector) -> serde_json::Value {
        serde_json::Value::Array(
            v.components()
                .map(
                    |c| serde_json::json!({ "rank": c.n, "class": self.cocenters[c.n].to_json(c) }),
                )
                .collect(),
        )
    }
}

/// `d_j = s_{n-1} ⋯ s_j` in `S_{n+1}` (0-based), the minimal coset
/// representative with `d_j(j) = n`.
fn coset_rep(n: usize, j: usize) -> perm::Perm {
    let mut d = perm::identity(n + 1);
    for i in j..n {
        d = perm::mul_s_left(&d, i);
    }
    d
}

/// Splits `x^e τ_g ∈ H_{n+1}` as `(x^{e'} τ_{g'}) · (x_{n+1}^a τ_{d_j})`.
fn split(w: &AkWord) -> (AkWord, usize, usize) {
    let n = w.n() - 1;
    let j = perm::inverse(&w.g)[n] as usize;
    let d = coset_rep(n, j);
    let gp: Vec<u8> = {
        let dinv = perm::inverse(&d);
        dinv.iter().map(|&i| w.g[i as usize]).collect()
    };
    debug_assert_eq!(gp[n] as usize, n);
    (
        AkWord {
            x: w.x[..n].to_vec(),
            g: gp[..n].to_vec(),
        },
        w.x[n] as usize,
        j,
    )
}

/// `{r} w_{r,0} v_f` and `{r} w_{-r,0} v_f` for `1 ≤ r ≤ rmax`, entry `r-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoopScalars {
    pub plus: Vec<RatFunc>,
    pub minus: Vec<RatFunc>,
}

pub fn hoop_scalars(f: &CyclotomicPoly, rmax: usize) -> Result<HoopScalars> {
    let rmax = rmax as i64;
    let fu = f.as_laurent();
    let df = fu.derivative();
    let l = RatFunc::from_int(f.degree() as i64);
    // u^2 f' - l u f, over f, in powers of u^-1
    let num = ULaurent::monomial(RatFunc::one(), 2)
        .mul(&df)
        .sub(&ULaurent::monomial(l, 1).mul(&fu));
    let plus_series = expand_series(&num, &fu, Direction::UInv, rmax - 1)?;
    let minus_series = expand_series(&df, &fu, Direction::U, rmax - 1)?;
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for r in 1..=rmax {
        plus.push(plus_series.coeff_u(1 - r)?);
        minus.push(minus_series.coeff_u(r - 1)?);
    }
    Ok(HoopScalars { plus, minus })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vf(f: &str, n: usize) -> Vf {
        Vf::new(f.parse().unwrap(), n, Exec::Sequential).unwrap()
    }

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn split_inverts_the_product() {
        let h = Hecke::new(3, "1,t^2".parse().unwrap());
        for w in h.basis() {
            let (low, a, j) = split(&w);
            let mut lowx = low.x.clone();
            lowx.push(0);
            let mut lowg = low.g.clone();
            lowg.push(2);
            let left = HeckeElement::basis(AkWord { x: lowx, g: lowg });
            let mut bx = vec![0; 3];
            bx[2] = a as u8;
            let right = HeckeElement::basis(AkWord {
                x: bx,
                g: coset_rep(2, j),
            });
            assert_eq!(h.mul(&left, &right).unwrap(), HeckeElement::basis(w));
        }
    }

    #[test]
    fn scalars_for_linear_f() {
        let s = hoop_scalars(&"1,t^2".parse().unwrap(), 3).unwrap();
        assert_eq!(s.plus, vec![rf("-t^2"), rf("t^4"), rf("-t^6")]);
        assert_eq!(s.minus[0], rf("t^-2"));
    }

    #[test]
    fn unit_inclusion_and_first_dot() {
        let v = vf("1,t^2", 1);
        let one = v.ind_dot(0, &v.vacuum()).unwrap();
        assert_eq!(one, v.class_of(&HeckeElement::one(1)).unwrap());
        let x1 = v.ind_dot(1, &v.vacuum()).unwrap();
        assert_eq!(x1, one.scale(&rf("-t^2")));
    }

    #[test]
    fn trace_examples() {
        let v = vf("1,-(1+t^2),t^2", 1);
        let one = v.class_of(&HeckeElement::one(1)).unwrap();
        assert_eq!(
            v.res_trace(0, &one).unwrap(),
            v.vacuum().scale(&RatFunc::from_int(2))
        );
        let v = vf("1,t^2", 1);
        let one = v.class_of(&HeckeElement::one(1)).unwrap();
        assert_eq!(v.res_trace(1, &one).unwrap(), v.vacuum().scale(&rf("-t^2")));
        assert!(v.res_trace(3, &v.vacuum()).unwrap().is_zero());
    }
}
