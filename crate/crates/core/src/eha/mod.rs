//! The central reductions `E_lambda` of the elliptic Hall Lie algebra and
//! PBW normal forms in their enveloping algebras.
//!
//! Generators `w_x` are indexed by nonzero `x` in `Z^2` with
//! `[w_x, w_y] = {det(x,y)} w_{x+y} + delta_{x,-y} lambda(x)`, where
//! `lambda` is a linear form and `w_{0,0} = 0`. The charge-`k` algebra is
//! `lambda = LinearForm::charge(k)`.

mod express;
mod maps;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coeff::{fmt_sum, fmt_term, qint, RatFunc};
use crate::error::{Error, Result};
use crate::lattice::{det2, LatticePoint, LinearForm};

pub use express::{express_w, BracketExpr, Node};
pub use maps::{apply_gl2, apply_omega, apply_psi};

pub type Word = Vec<LatticePoint>;

/// Words awaiting straightening, keyed by length first so the longest word
/// is expanded next.
type Pending = BTreeMap<(usize, Word), RatFunc>;

/// A finite combination of PBW-sorted words. The empty word is the unit.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct EhElement {
    terms: BTreeMap<Word, RatFunc>,
}

/// Which out-of-order adjacent pair the straightening rewrites first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

impl EhElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(c: RatFunc) -> Self {
        let mut e = Self::zero();
        e.add_term(Vec::new(), c);
        e
    }

    pub fn one() -> Self {
        Self::scalar(RatFunc::one())
    }

    /// `w_x`, or zero for `x = (0,0)`.
    pub fn gen(x: LatticePoint) -> Self {
        Self::term(x, RatFunc::one())
    }

    pub fn term(x: LatticePoint, c: RatFunc) -> Self {
        if x.is_zero() {
            return Self::zero();
        }
        let mut e = Self::zero();
        e.add_term(vec![x], c);
        e
    }

    /// Adds `c * word`; the word must already be sorted.
    fn add_term(&mut self, word: Word, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        debug_assert!(is_sorted(&word));
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatFunc)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, word: &[LatticePoint]) -> RatFunc {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    /// Coefficient of the empty word.
    pub fn scalar_part(&self) -> RatFunc {
        self.coeff(&[])
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, s: &RatFunc) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        EhElement {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.mul(s)))
                .collect(),
        }
    }

    /// Product in the enveloping algebra, in PBW normal form.
    pub fn mul(&self, o: &Self, lam: LinearForm) -> Self {
        let mut pending = Pending::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                accumulate(&mut pending, w, ca.mul(cb));
            }
        }
        straighten(pending, lam, Strategy::Leftmost)
    }

    /// `ab - ba`.
    pub fn commutator(&self, o: &Self, lam: LinearForm) -> Self {
        self.mul(o, lam).sub(&o.mul(self, lam))
    }

    /// Whether every word has length at most one, i.e. the element lies in
    /// the Lie algebra plus scalars.
    pub fn is_linear(&self) -> bool {
        self.terms.keys().all(|w| w.len() <= 1)
    }

    /// Bracket of two elements of degree at most one, computed bilinearly
    /// from [`lie_bracket`]. Scalars are central and drop out.
    pub fn bracket_linear(&self, o: &Self, lam: LinearForm) -> Self {
        debug_assert!(self.is_linear() && o.is_linear());
        let mut out = Self::zero();
        for (a, ca) in self.terms.iter().filter(|(w, _)| w.len() == 1) {
            for (b, cb) in o.terms.iter().filter(|(w, _)| w.len() == 1) {
                let c = ca.mul(cb);
                let (x, y) = (a[0], b[0]);
                let d = det2(x, y);
                if d != 0 && !(x + y).is_zero() {
                    out.add_term(vec![x + y], c.mul(&qint(d)));
                }
                if (x + y).is_zero() {
                    out.add_term(Vec::new(), c.scale_int(lam.eval(x)));
                }
            }
        }
        out
    }

    /// Applies `f` letterwise, multiplying each word by the product of the
    /// returned signs, and straightens at `lam`.
    pub(crate) fn map_letters<F>(&self, lam: LinearForm, f: F) -> Self
    where
        F: Fn(LatticePoint) -> (i64, LatticePoint),
    {
        let mut pending = Pending::new();
        for (w, c) in &self.terms {
            let mut sign = 1;
            let mut nw = Vec::with_capacity(w.len());
            for &x in w {
                let (s, y) = f(x);
                sign *= s;
                nw.push(y);
            }
            accumulate(&mut pending, nw, c.scale_int(sign));
        }
        straighten(pending, lam, Strategy::Leftmost)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut rows: Vec<(String, serde_json::Value)> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word: Vec<[i64; 2]> = w.iter().map(|x| [x.r, x.n]).collect();
                let key = serde_json::to_string(&word).unwrap();
                (
                    key,
                    serde_json::json!({ "word": word, "coeff": c.to_string() }),
                )
            })
            .collect();
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        serde_json::Value::Array(rows.into_iter().map(|r| r.1).collect())
    }
}

fn accumulate(m: &mut Pending, w: Word, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    match m.entry((w.len(), w)) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get().add(&c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

fn is_sorted(w: &[LatticePoint]) -> bool {
    w.windows(2).all(|p| p[0] <= p[1])
}

fn first_inversion(w: &[LatticePoint], strategy: Strategy) -> Option<usize> {
    let mut it = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]);
    match strategy {
        Strategy::Leftmost => it.next(),
        Strategy::Rightmost => it.next_back(),
    }
}

/// Rewrites `w_x w_y -> w_y w_x + [w_x, w_y]` until every word is sorted.
/// Words are processed longest first, so identical intermediate words merge
/// before being expanded further.
fn straighten(mut pending: Pending, lam: LinearForm, strategy: Strategy) -> EhElement {
    let mut out = EhElement::zero();
    while let Some(((_, w), c)) = pending.pop_last() {
        let Some(i) = first_inversion(&w, strategy) else {
            out.add_term(w, c);
            continue;
        };
        let (x, y) = (w[i], w[i + 1]);
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        accumulate(&mut pending, swapped, c.clone());
        let d = det2(x, y);
        let s = x + y;
        if s.is_zero() {
            let mut shorter = w[..i].to_vec();
            shorter.extend_from_slice(&w[i + 2..]);
            accumulate(&mut pending, shorter, c.scale_int(lam.eval(x)));
        } else if d != 0 {
            let mut shorter = w[..i].to_vec();
            shorter.push(s);
            shorter.extend_from_slice(&w[i + 2..]);
            accumulate(&mut pending, shorter, c.mul(&qint(d)));
        }
    }
    out
}

/// `[w_x, w_y]` in `E_lambda`.
pub fn lie_bracket(x: LatticePoint, y: LatticePoint, lam: LinearForm) -> Result<EhElement> {
    x.nonzero()?;
    y.nonzero()?;
    Ok(EhElement::gen(x).bracket_linear(&EhElement::gen(y), lam))
}

/// PBW normal form of the product `w_{x_1} ... w_{x_m}`.
pub fn pbw_normalize(
    word: &[LatticePoint],
    lam: LinearForm,
    strategy: Strategy,
) -> Result<EhElement> {
    if word.iter().any(|x| x.is_zero()) {
        return Err(Error::ZeroPoint);
    }
    let mut pending = Pending::new();
    accumulate(&mut pending, word.to_vec(), RatFunc::one());
    Ok(straighten(pending, lam, strategy))
}

fn fmt_word(w: &[LatticePoint]) -> String {
    w.iter()
        .map(|x| format!("w[{},{}]", x.r, x.n))
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for EhElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_sum(
            self.terms.iter().map(|(w, c)| fmt_term(c, &fmt_word(w))),
        ))
    }
}

impl fmt::Debug for EhElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    word: Vec<[i64; 2]>,
    coeff: RatFunc,
}

impl Serialize for EhElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for EhElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<JsonTerm>::deserialize(d)?;
        let mut pending = Pending::new();
        for r in rows {
            let w = r
                .word
                .into_iter()
                .map(|[a, b]| crate::lattice::pt(a, b))
                .collect();
            accumulate(&mut pending, w, r.coeff);
        }
        // input words are expected sorted; anything else is straightened at charge 0
        Ok(straighten(
            pending,
            LinearForm::charge(0),
            Strategy::Leftmost,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::pt;

    fn k(c: i64) -> LinearForm {
        LinearForm::charge(c)
    }

    #[test]
    fn bracket_examples() {
        let b = lie_bracket(pt(1, 0), pt(0, 1), k(5)).unwrap();
        assert_eq!(b, EhElement::term(pt(1, 1), qint(1)));
        assert_eq!(b.to_string(), "(q - q^-1) w[1,1]");
        let c = lie_bracket(pt(0, 1), pt(0, -1), k(2)).unwrap();
        assert_eq!(c, EhElement::scalar(RatFunc::from_int(2)));
        assert!(lie_bracket(pt(1, 1), pt(2, 2), k(0)).unwrap().is_zero());
        assert_eq!(lie_bracket(pt(0, 0), pt(1, 0), k(0)), Err(Error::ZeroPoint));
    }

    #[test]
    fn normalize_examples() {
        let e = pbw_normalize(&[pt(0, 1), pt(1, 0)], k(0), Strategy::Leftmost).unwrap();
        let expected = EhElement::gen(pt(1, 0))
            .mul(&EhElement::gen(pt(0, 1)), k(0))
            .sub(&EhElement::term(pt(1, 1), qint(1)));
        assert_eq!(e, expected);
        assert_eq!(e.to_string(), "w[1,0] w[0,1] - (q - q^-1) w[1,1]");
        assert_eq!(
            pbw_normalize(&[pt(2, 3)], k(0), Strategy::Leftmost).unwrap(),
            EhElement::gen(pt(2, 3))
        );
        assert_eq!(
            pbw_normalize(&[], k(0), Strategy::Leftmost).unwrap(),
            EhElement::one()
        );
    }

    #[test]
    fn multiply_examples() {
        let a = EhElement::gen(pt(0, 1));
        let b = EhElement::gen(pt(0, -1));
        assert_eq!(
            a.commutator(&b, k(3)),
            EhElement::scalar(RatFunc::from_int(3))
        );
        let sq = EhElement::gen(pt(1, 0)).mul(&EhElement::gen(pt(1, 0)), k(0));
        assert_eq!(sq.terms().next().unwrap().0, &vec![pt(1, 0), pt(1, 0)]);
        assert_eq!(EhElement::one().mul(&a, k(1)), a);
    }

    #[test]
    fn json_round_trip() {
        let e = pbw_normalize(&[pt(0, 1), pt(1, 0)], k(0), Strategy::Leftmost).unwrap();
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(serde_json::from_str::<EhElement>(&s).unwrap(), e);
    }
}
