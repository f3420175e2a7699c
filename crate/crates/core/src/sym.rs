//! `Sym ⊗ Sym` in the basis `P_λ` indexed by generalized partitions.
//!
//! A generalized partition is a multiset of nonzero integers. Positive
//! parts index power sums in the first tensor factor, negative parts in the
//! second, and `P_λ = p_λ / {λ}^2` with `{λ} = Π {λ_i}`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::coeff::{fmt_sum, fmt_term, qint, RatFunc, RatSum};
use crate::error::{Error, Result};

/// Parts sorted ascending, all nonzero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GenPartition(Vec<i64>);

impl GenPartition {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(
                "partition parts must be nonzero".into(),
            ));
        }
        parts.sort_unstable();
        Ok(GenPartition(parts))
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn neg_len(&self) -> usize {
        self.0.iter().take_while(|&&p| p < 0).count()
    }

    pub fn pos_len(&self) -> usize {
        self.len() - self.neg_len()
    }

    /// Signed sum of the parts.
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Sum of absolute values of the parts.
    pub fn weight(&self) -> i64 {
        self.0.iter().map(|p| p.abs()).sum()
    }

    /// `{λ} = Π {λ_i}`.
    pub fn qprod(&self) -> RatFunc {
        self.0
            .iter()
            .fold(RatFunc::one(), |acc, &p| acc.mul(&qint(p)))
    }

    pub fn with_part(&self, r: i64) -> Self {
        debug_assert!(r != 0);
        let mut v = self.0.clone();
        let i = v.partition_point(|&p| p <= r);
        v.insert(i, r);
        GenPartition(v)
    }

    pub fn union(&self, o: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        v.sort_unstable();
        GenPartition(v)
    }

    /// All sub-multisets obtained by deleting parts, one per subset of
    /// indices, so equal parts give repeated entries; there are `2^len` of them.
    pub fn index_subsets(&self) -> impl Iterator<Item = GenPartition> + '_ {
        let n = self.0.len();
        (0u32..1 << n).map(move |mask| {
            GenPartition(
                (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }
}

impl fmt::Display for GenPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.neg_len();
        let join = |s: &[i64]| s.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        let (neg, pos) = self.0.split_at(k);
        if neg.is_empty() || pos.is_empty() {
            write!(f, "[{}]", join(&self.0))
        } else {
            write!(f, "[{}|{}]", join(neg), join(pos))
        }
    }
}

impl fmt::Debug for GenPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GenPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::parse(0, format!("expected `[...]`, got `{s}`")))?;
        let (neg, pos) = inner.split_once('|').unwrap_or(("", inner));
        let mut parts = Vec::new();
        for x in neg.split(',').chain(pos.split(',')) {
            let x = x.trim();
            if x.is_empty() {
                continue;
            }
            parts.push(
                x.parse::<i64>()
                    .map_err(|e| Error::parse(0, format!("bad part `{x}`: {e}")))?,
            );
        }
        if inner.contains('|')
            && (neg
                .split(',')
                .any(|x| x.trim().parse::<i64>().is_ok_and(|v| v > 0))
                || pos
                    .split(',')
                    .any(|x| x.trim().parse::<i64>().is_ok_and(|v| v < 0)))
        {
            return Err(Error::parse(
                0,
                format!("parts on the wrong side of `|` in `{s}`"),
            ));
        }
        GenPartition::new(parts)
    }
}

impl Serialize for GenPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GenPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// A vector of `Sym ⊗ Sym` in the `P_λ` basis.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct Sym2 {
    terms: BTreeMap<GenPartition, RatFunc>,
}

impl Sym2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(l: GenPartition) -> Self {
        Self::term(l, RatFunc::one())
    }

    pub fn vacuum() -> Self {
        Self::basis(GenPartition::empty())
    }

    pub fn term(l: GenPartition, c: RatFunc) -> Self {
        let mut v = Self::zero();
        v.add_term(l, c);
        v
    }

    pub fn add_term(&mut self, l: GenPartition, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(l) {
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

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GenPartition, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, l: &GenPartition) -> RatFunc {
        self.terms.get(l).cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (l, c) in &o.terms {
            self.add_term(l.clone(), c.clone());
        }
    }

    /// `self += s * o`.
    pub fn add_scaled(&mut self, o: &Self, s: &RatFunc) {
        if s.is_zero() {
            return;
        }
        for (l, c) in &o.terms {
            self.add_term(l.clone(), c.mul(s));
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(o, &RatFunc::from_int(-1));
        out
    }

    pub fn scale(&self, s: &RatFunc) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, s);
        out
    }

    /// Product in `Sym ⊗ Sym`: `P_α P_β = P_{α ∪ β}`.
    pub fn mul(&self, o: &Self) -> Self {
        let mut acc: BTreeMap<GenPartition, RatSum> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                acc.entry(a.union(b)).or_default().add_product(ca, cb);
            }
        }
        Self::collect(acc)
    }

    /// `Σ c_i v_i`.
    pub fn lincomb<'a>(items: impl IntoIterator<Item = (&'a Sym2, &'a RatFunc)>) -> Self {
        let mut acc: BTreeMap<GenPartition, RatSum> = BTreeMap::new();
        for (v, c) in items {
            for (l, x) in &v.terms {
                acc.entry(l.clone()).or_default().add_product(x, c);
            }
        }
        Self::collect(acc)
    }

    fn collect(acc: BTreeMap<GenPartition, RatSum>) -> Self {
        Sym2 {
            terms: acc
                .into_iter()
                .filter_map(|(l, s)| {
                    let c = s.finish();
                    (!c.is_zero()).then_some((l, c))
                })
                .collect(),
        }
    }

    /// Multiplication by `p_r^+` (`r > 0`) or `p_{-r}^-` (`r < 0`).
    pub fn p_mult(&self, r: i64) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArgument("p_0 is not a generator".into()));
        }
        let s = qint(r).mul(&qint(r));
        Ok(Sym2 {
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.with_part(r), c.mul(&s)))
                .collect(),
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(l, c)| serde_json::json!({ "partition": l.to_string(), "coeff": c.to_string() }))
                .collect(),
        )
    }
}

impl fmt::Display for Sym2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_sum(
            self.terms
                .iter()
                .map(|(l, c)| fmt_term(c, &format!("P{l}"))),
        ))
    }
}

impl fmt::Debug for Sym2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    partition: GenPartition,
    coeff: RatFunc,
}

impl Serialize for Sym2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Sym2 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let mut v = Sym2::zero();
        for t in Vec::<JsonTerm>::deserialize(d)? {
            v.add_term(t.partition, t.coeff);
        }
        Ok(v)
    }
}

/// Parses either a bare partition such as `[-1|2]` (the basis vector) or a
/// JSON list of `{partition, coeff}` objects.
impl FromStr for Sym2 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with("[{") || t == "[ ]" {
            return serde_json::from_str(t).map_err(|e| Error::parse(e.column(), e.to_string()));
        }
        Ok(Sym2::basis(t.parse()?))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn sign(self) -> i64 {
        match self {
            Side::Plus => 1,
            Side::Minus => -1,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    H,
    E,
}

type Table = RwLock<Vec<Sym2>>;

fn table(kind: Kind, side: Side) -> &'static Table {
    static TABLES: OnceLock<[Table; 4]> = OnceLock::new();
    let t = TABLES.get_or_init(|| std::array::from_fn(|_| RwLock::new(vec![Sym2::vacuum()])));
    &t[match (kind, side) {
        (Kind::H, Side::Plus) => 0,
        (Kind::H, Side::Minus) => 1,
        (Kind::E, Side::Plus) => 2,
        (Kind::E, Side::Minus) => 3,
    }]
}

/// Newton: `r h_r = Σ p_s h_{r-s}`, `r e_r = Σ (-1)^{s-1} p_s e_{r-s}`.
fn newton(kind: Kind, side: Side, r: i64) -> Sym2 {
    if r < 0 {
        return Sym2::zero();
    }
    let r = r as usize;
    let tab = table(kind, side);
    if let Some(v) = tab.read().unwrap().get(r) {
        return v.clone();
    }
    let mut w = tab.write().unwrap();
    while w.len() <= r {
        let m = w.len();
        let mut acc = Sym2::zero();
        for s in 1..=m {
            let sign = if kind == Kind::E && s % 2 == 0 { -1 } else { 1 };
            let term = w[m - s]
                .p_mult(side.sign() * s as i64)
                .expect("nonzero part");
            acc.add_scaled(&term, &RatFunc::from_int(sign));
        }
        w.push(acc.scale(&RatFunc::from_ratio(1, m as i64)));
    }
    w[r].clone()
}

/// `h_r^±` in the `P` basis; zero for `r < 0`.
pub fn h_to_p(r: i64, side: Side) -> Sym2 {
    newton(Kind::H, side, r)
}

/// `e_r^±` in the `P` basis; zero for `r < 0`.
pub fn e_to_p(r: i64, side: Side) -> Sym2 {
    newton(Kind::E, side, r)
}

/// Checks `Σ_{s=0}^n (-1)^s h_{n-s} e_s = 0` for `1 <= n <= order` on both
/// tensor factors.
pub fn verify_he_identity(order: i64) -> bool {
    [Side::Plus, Side::Minus].iter().all(|&side| {
        (1..=order).all(|n| {
            let mut acc = Sym2::zero();
            for s in 0..=n {
                let sign = RatFunc::from_int(if s % 2 == 0 { 1 } else { -1 });
                acc.add_scaled(&h_to_p(n - s, side).mul(&e_to_p(s, side)), &sign);
            }
            acc.is_zero()
        })
    })
}
