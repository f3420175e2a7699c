//! The action of `E_k` on `Sym ⊗ Sym` and on tensor products of such
//! modules.
//!
//! Level `±1` generators act by the explicit subpartition formulas, level 0
//! generators by multiplication by power sums. Every other generator is
//! evaluated through its bracket expression from [`crate::eha::express_w`]
//! as a commutator of operators. Results on basis vectors are memoized, so a
//! single [`Fock`] can be shared across threads during a sweep.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::coeff::{fmt_sum, fmt_term, qint, RatFunc};
use crate::eha::{express_w, EhElement, Node};
use crate::error::{Error, Result};
use crate::lattice::LatticePoint;
use crate::sym::{e_to_p, h_to_p, GenPartition, Side, Sym2};

type Cache = RwLock<HashMap<(LatticePoint, GenPartition), Arc<Sym2>>>;

/// The Fock module at charge `k`.
#[derive(Default)]
pub struct Fock {
    k: i64,
    cache: Cache,
}

impl fmt::Debug for Fock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Fock").field("k", &self.k).finish()
    }
}

fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Deletions `μ ⊴ λ` grouped by result, with multiplicities.
fn subpartitions(l: &GenPartition) -> BTreeMap<GenPartition, i64> {
    let mut m = BTreeMap::new();
    for mu in l.index_subsets() {
        *m.entry(mu).or_insert(0) += 1;
    }
    m
}

impl Fock {
    pub fn new(k: i64) -> Self {
        Fock {
            k,
            cache: RwLock::default(),
        }
    }

    pub fn charge(&self) -> i64 {
        self.k
    }

    /// `w_{r,1}` (`sign = +1`) or `w_{r,-1}` (`sign = -1`) on a basis vector.
    pub fn level1_basis(&self, r: i64, sign: i64, l: &GenPartition) -> Sym2 {
        let k = self.k;
        let t = RatFunc::t();
        let tinv = RatFunc::t_pow(-1);
        let zinv = qint(1).inv().unwrap();
        let mut out = Sym2::zero();
        for (mu, mult) in subpartitions(l) {
            let d = l.size() - mu.size();
            let factor = if sign > 0 {
                let mut f = h_to_p(r + d - k, Side::Plus).scale(&-&tinv);
                f.add_scaled(&h_to_p(-r - d, Side::Minus), &t);
                f
            } else {
                let s = sign_pow(r + l.len() as i64 - mu.len() as i64 + l.size() + mu.size());
                let mut f = e_to_p(r + d + k, Side::Plus).scale(&t.scale_int(sign_pow(k)));
                f.add_scaled(&e_to_p(-r - d, Side::Minus), &-&tinv);
                f.scale(&RatFunc::from_int(s))
            };
            out.add_scaled(&factor.mul(&Sym2::basis(mu)), &zinv.scale_int(mult));
        }
        out
    }

    /// `w_{r,±1}` on an arbitrary vector.
    pub fn act_level1(&self, r: i64, sign: i64, v: &Sym2) -> Result<Sym2> {
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidArgument(format!(
                "level sign must be ±1, got {sign}"
            )));
        }
        Ok(self.linear(v, |l| self.level1_basis(r, sign, l)))
    }

    /// `w_{r,0}` by its closed form: `-{r} P_{λ ∪ {r}}` on `P_λ`, either sign of `r`.
    pub fn act_level0(&self, r: i64, v: &Sym2) -> Result<Sym2> {
        if r == 0 {
            return Err(Error::ZeroPoint);
        }
        let s = qint(r).inv().unwrap().scale_int(-1);
        Ok(v.p_mult(r)?.scale(&s))
    }

    /// `w_x` on a basis vector, through the bracket expression of `x`.
    pub fn act_basis(&self, x: LatticePoint, l: &GenPartition) -> Arc<Sym2> {
        let key = (x, l.clone());
        if let Some(v) = self.cache.read().unwrap().get(&key) {
            return v.clone();
        }
        let v = Arc::new(self.compute_basis(x, l));
        self.cache.write().unwrap().insert(key, v.clone());
        v
    }

    fn compute_basis(&self, x: LatticePoint, l: &GenPartition) -> Sym2 {
        if x.n.abs() == 1 {
            return self.level1_basis(x.r, x.n, l);
        }
        let e = express_w(x.r, x.n).expect("nonzero point");
        let Node::Bracket(a, b) = &e.node else {
            unreachable!("only level ±1 generators are leaves")
        };
        // each side of the top bracket is itself (a multiple of) a generator
        let ya = a
            .leaves()
            .into_iter()
            .fold(LatticePoint::ZERO, |s, p| s + p);
        let yb = b
            .leaves()
            .into_iter()
            .fold(LatticePoint::ZERO, |s, p| s + p);
        let v = Sym2::basis(l.clone());
        let ab = self.apply(ya, &self.apply(yb, &v));
        let ba = self.apply(yb, &self.apply(ya, &v));
        ab.sub(&ba).scale(&e.coeff)
    }

    fn apply(&self, x: LatticePoint, v: &Sym2) -> Sym2 {
        let images: Vec<(Arc<Sym2>, &RatFunc)> =
            v.terms().map(|(l, c)| (self.act_basis(x, l), c)).collect();
        Sym2::lincomb(images.iter().map(|(img, c)| (&**img, *c)))
    }

    fn linear(&self, v: &Sym2, f: impl Fn(&GenPartition) -> Sym2) -> Sym2 {
        let images: Vec<(Sym2, &RatFunc)> = v.terms().map(|(l, c)| (f(l), c)).collect();
        Sym2::lincomb(images.iter().map(|(img, c)| (img, *c)))
    }

    /// `w_x · v` for any nonzero `x`.
    pub fn act_general(&self, x: LatticePoint, v: &Sym2) -> Result<Sym2> {
        x.nonzero()?;
        Ok(self.apply(x, v))
    }

    /// `w_{x_1} ⋯ w_{x_m} · v`, the rightmost letter acting first.
    pub fn act_word(&self, word: &[LatticePoint], v: &Sym2) -> Result<Sym2> {
        let mut cur = v.clone();
        for &x in word.iter().rev() {
            cur = self.act_general(x, &cur)?;
        }
        Ok(cur)
    }

    /// Action of an element of the enveloping algebra.
    pub fn act_element(&self, e: &EhElement, v: &Sym2) -> Result<Sym2> {
        let mut out = Sym2::zero();
        for (w, c) in e.terms() {
            out.add_scaled(&self.act_word(w, v)?, c);
        }
        Ok(out)
    }

    pub fn cache_len(&self) -> usize {
        self.cache.read().unwrap().len()
    }
}

/// A vector of `(Sym ⊗ Sym) ⊗ (Sym ⊗ Sym)` in the basis `P_α ⊗ P_β`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorVec {
    terms: BTreeMap<(GenPartition, GenPartition), RatFunc>,
}

impl TensorVec {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn pure(a: &Sym2, b: &Sym2) -> Self {
        let mut out = Self::zero();
        for (la, ca) in a.terms() {
            for (lb, cb) in b.terms() {
                out.add_term((la.clone(), lb.clone()), ca.mul(cb));
            }
        }
        out
    }

    pub fn add_term(&mut self, key: (GenPartition, GenPartition), c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_default();
        *e = e.add(&c);
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }

    pub fn scale(&self, s: &RatFunc) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.mul(s));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(GenPartition, GenPartition), &RatFunc)> {
        self.terms.iter()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|((a, b), c)| {
                    serde_json::json!({ "left": a.to_string(), "right": b.to_string(), "coeff": c.to_string() })
                })
                .collect(),
        )
    }
}

impl fmt::Display for TensorVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_sum(
            self.terms
                .iter()
                .map(|((a, b), c)| fmt_term(c, &format!("P{a} ⊗ P{b}"))),
        ))
    }
}

impl fmt::Debug for TensorVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Leibniz action `w_x (a ⊗ b) = (w_x a) ⊗ b + a ⊗ (w_x b)`; the result is a
/// module at charge `k1 + k2`.
pub fn tensor_act(x: LatticePoint, v: &TensorVec, m1: &Fock, m2: &Fock) -> Result<TensorVec> {
    x.nonzero()?;
    let mut out = TensorVec::zero();
    for ((a, b), c) in v.terms() {
        let wa = m1.act_basis(x, a);
        let wb = m2.act_basis(x, b);
        let left = TensorVec::pure(&wa, &Sym2::basis(b.clone()));
        let right = TensorVec::pure(&Sym2::basis(a.clone()), &wb);
        out = out.add(&left.add(&right).scale(c));
    }
    Ok(out)
}

/// Applies a word right to left under the Leibniz action.
pub fn tensor_act_word(
    word: &[LatticePoint],
    v: &TensorVec,
    m1: &Fock,
    m2: &Fock,
) -> Result<TensorVec> {
    let mut cur = v.clone();
    for &x in word.iter().rev() {
        cur = tensor_act(x, &cur, m1, m2)?;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eha::{apply_omega, pbw_normalize, Strategy};
    use crate::lattice::{det2, pt, LinearForm};

    fn gp(v: &[i64]) -> GenPartition {
        GenPartition::new(v.to_vec()).unwrap()
    }

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn vacuum_examples() {
        let f0 = Fock::new(0);
        let v = f0.act_level1(0, 1, &Sym2::vacuum()).unwrap();
        assert_eq!(v, Sym2::term(gp(&[]), r("(t - t^-1)/(q - q^-1)")));
        let fneg = Fock::new(-2);
        let v = fneg.act_level1(0, -1, &Sym2::vacuum()).unwrap();
        assert_eq!(v, Sym2::term(gp(&[]), r("-t^-1/(q - q^-1)")));
        let v = f0.act_general(pt(0, 2), &Sym2::vacuum()).unwrap();
        assert_eq!(v, Sym2::term(gp(&[]), r("(t^2 - t^-2)/(q^2 - q^-2)")));
    }

    #[test]
    fn level1_on_vacuum_is_h_formula() {
        for k in -2..=2 {
            let f = Fock::new(k);
            for rr in -3..=3 {
                let got = f.act_level1(rr, 1, &Sym2::vacuum()).unwrap();
                let zinv = qint(1).inv().unwrap();
                let mut want = h_to_p(rr - k, Side::Plus).scale(&r("-t^-1").mul(&zinv));
                want.add_scaled(&h_to_p(-rr, Side::Minus), &r("t").mul(&zinv));
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn level0_closed_form_and_commutator_agree() {
        for k in [-1, 0, 2] {
            let f = Fock::new(k);
            for rr in [-3, -2, -1, 1, 2, 3] {
                for l in [gp(&[]), gp(&[1]), gp(&[-1, 2])] {
                    let v = Sym2::basis(l);
                    assert_eq!(
                        f.act_general(pt(rr, 0), &v).unwrap(),
                        f.act_level0(rr, &v).unwrap(),
                        "r={rr} k={k}"
                    );
                }
            }
        }
        let f = Fock::new(0);
        let want = Sym2::term(gp(&[2]), -qint(2));
        assert_eq!(f.act_level0(2, &Sym2::vacuum()).unwrap(), want);
        // w_{-1,0} on the vacuum is +{1} P[-1]
        let want = Sym2::term(gp(&[-1]), qint(1));
        assert_eq!(f.act_level0(-1, &Sym2::vacuum()).unwrap(), want);
        assert!(f.act_level0(0, &Sym2::vacuum()).is_err());
    }

    #[test]
    fn central_term_on_the_vacuum() {
        let f = Fock::new(3);
        let v = Sym2::vacuum();
        let a = f.act_word(&[pt(0, 1), pt(0, -1)], &v).unwrap();
        let b = f.act_word(&[pt(0, -1), pt(0, 1)], &v).unwrap();
        assert_eq!(a.sub(&b), v.scale(&RatFunc::from_int(3)));
        assert_eq!(f.act_word(&[], &v).unwrap(), v);
    }

    #[test]
    fn relations_on_a_few_states() {
        let pts = [
            pt(1, 0),
            pt(0, 1),
            pt(-1, 1),
            pt(0, -1),
            pt(1, -1),
            pt(2, 1),
            pt(-1, 0),
        ];
        for k in [-1, 0, 1] {
            let f = Fock::new(k);
            for l in [gp(&[]), gp(&[1]), gp(&[-2])] {
                let v = Sym2::basis(l);
                for &x in &pts {
                    for &y in &pts {
                        let lhs = f
                            .act_general(x, &f.act_general(y, &v).unwrap())
                            .unwrap()
                            .sub(&f.act_general(y, &f.act_general(x, &v).unwrap()).unwrap());
                        let mut rhs = Sym2::zero();
                        if !(x + y).is_zero() {
                            rhs = f.act_general(x + y, &v).unwrap().scale(&qint(det2(x, y)));
                        } else {
                            rhs.add_scaled(&v, &RatFunc::from_int(k * x.n));
                        }
                        assert_eq!(lhs, rhs, "x={x} y={y} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn module_agrees_with_pbw_and_omega_twist() {
        let k = 1;
        let f = Fock::new(k);
        let lam = LinearForm::charge(k);
        let word = [pt(0, 1), pt(1, -1), pt(-1, 0)];
        let v = Sym2::basis(gp(&[1]));
        let e = pbw_normalize(&word, lam, Strategy::Leftmost).unwrap();
        let direct = f.act_word(&word, &v).unwrap();
        assert_eq!(f.act_element(&e, &v).unwrap(), direct);
        // an E_{-k} element acting through omega^-1 = omega
        let (e_minus, lam_minus) = apply_omega(&e, lam);
        let (back, _) = apply_omega(&e_minus, lam_minus);
        assert_eq!(f.act_element(&back, &v).unwrap(), direct);
    }

    #[test]
    fn tensor_examples() {
        let f0 = Fock::new(0);
        let one = TensorVec::pure(&Sym2::vacuum(), &Sym2::vacuum());
        let got = tensor_act(
            pt(2, 0),
            &TensorVec::pure(&Sym2::basis(gp(&[1])), &Sym2::vacuum()),
            &f0,
            &f0,
        )
        .unwrap();
        let mut want = TensorVec::zero();
        want.add_term((gp(&[1, 2]), gp(&[])), -qint(2));
        want.add_term((gp(&[1]), gp(&[2])), -qint(2));
        assert_eq!(got, want);

        let (f1, f2) = (Fock::new(1), Fock::new(2));
        let a = tensor_act_word(&[pt(0, 1), pt(0, -1)], &one, &f1, &f2).unwrap();
        let b = tensor_act_word(&[pt(0, -1), pt(0, 1)], &one, &f1, &f2).unwrap();
        assert_eq!(a.sub(&b), one.scale(&RatFunc::from_int(3)));
    }
}
