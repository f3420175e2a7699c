//! Cyclotomic Hecke algebras `H_n^f` in the Ariki–Koike basis
//! `x_1^{a_1} ⋯ x_n^{a_n} τ_g` with `0 <= a_i < l`.
//!
//! Relations: `τ_i^2 = z τ_i + 1` with `z = q - q^-1`, braid relations,
//! `τ_i x_i τ_i = x_{i+1}`, commuting `x`'s and `f(x_1) = 0`. Products are
//! formed by left multiplication with generators. Moving `τ_i` past a
//! polynomial uses
//!
//! `τ_i P = (s_i P) τ_i + z x_{i+1} (P - s_i P) / (x_{i+1} - x_i)`,
//!
//! and powers `x_j^l` are replaced by precomputed normal forms `E_j`.

pub(crate) mod cocenter;
pub mod perm;
mod vf;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use serde::Serialize;

use crate::coeff::{fmt_sum, fmt_term, qint, RatFunc, ULaurent};
use crate::error::{Error, Result};
use perm::Perm;

pub use cocenter::{size_cap, Cocenter, CocenterClass, DEFAULT_SIZE_CAP};
pub use vf::{hoop_scalars, HoopScalars, ResConvention, Vf, VfVector};

/// `f(u) = f_0 u^l + f_1 u^{l-1} + ... + f_l` with `f_0 = 1`, `f_l = t^2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclotomicPoly {
    c: Vec<RatFunc>,
}

impl CyclotomicPoly {
    pub fn new(c: Vec<RatFunc>) -> Result<Self> {
        if c.len() < 2 {
            return Err(Error::InvalidArgument(
                "cyclotomic polynomial must have degree l >= 1".into(),
            ));
        }
        if !c[0].is_one() {
            return Err(Error::InvalidArgument(
                "leading coefficient f_0 must be 1".into(),
            ));
        }
        if c[c.len() - 1] != RatFunc::t_pow(2) {
            return Err(Error::InvalidArgument(
                "constant coefficient f_l must be t^2".into(),
            ));
        }
        Ok(CyclotomicPoly { c })
    }

    pub fn degree(&self) -> usize {
        self.c.len() - 1
    }

    /// `f_i`.
    pub fn coeff(&self, i: usize) -> &RatFunc {
        &self.c[i]
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.c
    }

    pub fn as_laurent(&self) -> ULaurent {
        ULaurent::from_descending(&self.c)
    }
}

impl fmt::Display for CyclotomicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.c.iter().map(RatFunc::to_string).collect();
        f.write_str(&s.join(","))
    }
}

/// Parses `1,f_1,...,t^2`; commas inside parentheses do not split.
impl FromStr for CyclotomicPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        let mut depth = 0i32;
        let mut cur = String::new();
        for ch in s.chars() {
            match ch {
                '(' | '{' => depth += 1,
                ')' | '}' => depth -= 1,
                ',' if depth == 0 => {
                    parts.push(std::mem::take(&mut cur));
                    continue;
                }
                _ => {}
            }
            cur.push(ch);
        }
        parts.push(cur);
        let c = parts
            .iter()
            .map(|p| p.parse::<RatFunc>())
            .collect::<Result<Vec<_>>>()?;
        CyclotomicPoly::new(c)
    }
}

/// The basis word `x^x τ_g`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AkWord {
    pub x: Vec<u8>,
    pub g: Perm,
}

impl AkWord {
    pub fn one(n: usize) -> Self {
        AkWord {
            x: vec![0; n],
            g: perm::identity(n),
        }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    fn label(&self) -> String {
        let mut parts = Vec::new();
        for (i, &a) in self.x.iter().enumerate() {
            match a {
                0 => {}
                1 => parts.push(format!("x{}", i + 1)),
                _ => parts.push(format!("x{}^{a}", i + 1)),
            }
        }
        for i in perm::reduced_word(&self.g) {
            parts.push(format!("T{}", i + 1));
        }
        parts.join("*")
    }
}

impl fmt::Display for AkWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.label();
        f.write_str(if s.is_empty() { "1" } else { &s })
    }
}

/// An element of `H_n^f` in normal form.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<AkWord, RatFunc>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(AkWord::one(n))
    }

    pub fn basis(w: AkWord) -> Self {
        Self::term(w, RatFunc::one())
    }

    pub fn term(w: AkWord, c: RatFunc) -> Self {
        let mut e = Self::zero(w.n());
        e.add_term(w, c);
        e
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, w: AkWord, c: RatFunc) {
        debug_assert_eq!(w.n(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn add_scaled(&mut self, o: &Self, s: &RatFunc) {
        if s.is_zero() {
            return;
        }
        for (w, c) in &o.terms {
            self.add_term(w.clone(), c.mul(s));
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(o, &RatFunc::one());
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(o, &RatFunc::from_int(-1));
        out
    }

    pub fn scale(&self, s: &RatFunc) -> Self {
        let mut out = Self::zero(self.n);
        out.add_scaled(self, s);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AkWord, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &AkWord) -> RatFunc {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// The image under `H_n -> H_{n+1}`.
    pub fn embed(&self) -> Self {
        let mut out = Self::zero(self.n + 1);
        for (w, c) in &self.terms {
            let mut x = w.x.clone();
            x.push(0);
            let mut g = w.g.clone();
            g.push(self.n as u8);
            out.add_term(AkWord { x, g }, c.clone());
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(w, c)| {
                    let word: Vec<usize> = perm::reduced_word(&w.g).iter().map(|i| i + 1).collect();
                    serde_json::json!({
                        "word": { "exponents": w.x, "perm": word },
                        "coeff": c.to_string(),
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_sum(
            self.terms.iter().map(|(w, c)| fmt_term(c, &w.label())),
        ))
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for HeckeElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// The algebra `H_n^f` with its reduction tables.
pub struct Hecke {
    n: usize,
    l: usize,
    f: CyclotomicPoly,
    z: RatFunc,
    /// `E_j`, the normal form of `x_j^l`.
    e: Vec<HeckeElement>,
    overflow: RwLock<HashMap<Vec<u8>, HeckeElement>>,
}

impl fmt::Debug for Hecke {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H_{}^f with f = {}", self.n, self.f)
    }
}

impl Hecke {
    pub fn new(n: usize, f: CyclotomicPoly) -> Self {
        let l = f.degree();
        let mut h = Hecke {
            n,
            l,
            f,
            z: qint(1),
            e: Vec::new(),
            overflow: RwLock::default(),
        };
        h.build_e_tables();
        h
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &CyclotomicPoly {
        &self.f
    }

    pub fn level(&self) -> usize {
        self.l
    }

    /// `l^n n!`.
    pub fn dimension(&self) -> usize {
        dimension(self.n, self.l)
    }

    /// Basis words: exponent vectors in lexicographic order, then
    /// permutations in lexicographic order.
    pub fn basis(&self) -> Vec<AkWord> {
        let perms = perm::all(self.n);
        let mut out = Vec::with_capacity(self.dimension());
        let mut x = vec![0u8; self.n];
        loop {
            for g in &perms {
                out.push(AkWord {
                    x: x.clone(),
                    g: g.clone(),
                });
            }
            let Some(i) = (0..self.n).rev().find(|&i| (x[i] as usize) + 1 < self.l) else {
                return out;
            };
            x[i] += 1;
            for v in &mut x[i + 1..] {
                *v = 0;
            }
        }
    }

    fn build_e_tables(&mut self) {
        let n = self.n;
        let l = self.l;
        if n == 0 {
            return;
        }
        let id = perm::identity(n);
        let mut e1 = HeckeElement::zero(n);
        for m in 1..=l {
            let mut x = vec![0u8; n];
            x[0] = (l - m) as u8;
            e1.add_term(AkWord { x, g: id.clone() }, -self.f.coeff(m));
        }
        self.e.push(e1);
        for i in 0..n - 1 {
            // f(x_i) in normal form
            let mut fx = self.e[i].clone();
            for m in 1..=l {
                let mut x = vec![0u8; n];
                x[i] = (l - m) as u8;
                fx.add_term(AkWord { x, g: id.clone() }, self.f.coeff(m).clone());
            }
            let mut next = self.right_mul_tau(&self.left_mul_tau(i, &fx), i);
            // - F'(x_{i+1}) τ_i^2 with τ_i^2 = z τ_i + 1
            let si = perm::mul_s_right(&id, i);
            for m in 1..=l {
                let mut x = vec![0u8; n];
                x[i + 1] = (l - m) as u8;
                let c = self.f.coeff(m);
                next.add_term(
                    AkWord {
                        x: x.clone(),
                        g: si.clone(),
                    },
                    -c.mul(&self.z),
                );
                next.add_term(AkWord { x, g: id.clone() }, -c);
            }
            // - z D'(x_i, x_{i+1}) τ_i
            let mut dprime: BTreeMap<(u8, u8), RatFunc> = BTreeMap::new();
            let mut push = |a: usize, b: usize, c: RatFunc| {
                let e = dprime.entry((a as u8, b as u8)).or_default();
                *e = e.add(&c);
            };
            for j in 1..l {
                push(j, l - j, RatFunc::from_int(-1));
            }
            for m in 1..l {
                for j in 0..l - m {
                    push(j, l - m - j, -self.f.coeff(m));
                }
            }
            for ((a, b), c) in dprime {
                let mut x = vec![0u8; n];
                x[i] = a;
                x[i + 1] = b;
                next.add_term(AkWord { x, g: si.clone() }, -c.mul(&self.z));
            }
            self.e.push(next);
        }
    }

    /// `a τ_i`.
    pub fn right_mul_tau(&self, a: &HeckeElement, i: usize) -> HeckeElement {
        let mut out = HeckeElement::zero(self.n);
        for (w, c) in a.terms() {
            let gs = perm::mul_s_right(&w.g, i);
            if !perm::right_ascent(&w.g, i) {
                out.add_term(w.clone(), c.mul(&self.z));
            }
            out.add_term(
                AkWord {
                    x: w.x.clone(),
                    g: gs,
                },
                c.clone(),
            );
        }
        out
    }

    /// `τ_i a`.
    pub fn left_mul_tau(&self, i: usize, a: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero(self.n);
        for (w, c) in a.terms() {
            let mut sx = w.x.clone();
            sx.swap(i, i + 1);
            let sg = perm::mul_s_left(&w.g, i);
            if !perm::left_ascent(&w.g, i) {
                out.add_term(
                    AkWord {
                        x: sx.clone(),
                        g: w.g.clone(),
                    },
                    c.mul(&self.z),
                );
            }
            out.add_term(AkWord { x: sx, g: sg }, c.clone());
            let (p, q) = (w.x[i], w.x[i + 1]);
            if p == q {
                continue;
            }
            // z x_{i+1} (P - s_i P)/(x_{i+1} - x_i), exponents stay below l
            let (lo, hi, sign) = if p > q { (q, p, -1) } else { (p, q, 1) };
            let zc = c.mul(&self.z).scale_int(sign);
            for j in 0..hi - lo {
                let mut x = w.x.clone();
                x[i] = lo + j;
                x[i + 1] = hi - j;
                out.add_term(AkWord { x, g: w.g.clone() }, zc.clone());
            }
        }
        out
    }

    /// `x_j a`.
    pub fn left_mul_x(&self, j: usize, a: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero(self.n);
        for (w, c) in a.terms() {
            let mut x = w.x.clone();
            x[j] += 1;
            if (x[j] as usize) < self.l {
                out.add_term(AkWord { x, g: w.g.clone() }, c.clone());
                continue;
            }
            let mut y = self.reduce_overflow(&x);
            for i in perm::reduced_word(&w.g) {
                y = self.right_mul_tau(&y, i);
            }
            out.add_scaled(&y, c);
        }
        out
    }

    /// Normal form of `x^c` where exactly one exponent equals `l`. The power
    /// `x_j^l` becomes `E_j`, which only involves `x_1..x_j`, so any further
    /// overflow happens at a smaller index.
    fn reduce_overflow(&self, c: &[u8]) -> HeckeElement {
        if let Some(v) = self.overflow.read().unwrap().get(c) {
            return v.clone();
        }
        let j = c.iter().position(|&a| a as usize == self.l).unwrap();
        let mut y = self.e[j].clone();
        for (m, &a) in c.iter().enumerate() {
            if m == j {
                continue;
            }
            for _ in 0..a {
                y = self.left_mul_x(m, &y);
            }
        }
        self.overflow.write().unwrap().insert(c.to_vec(), y.clone());
        y
    }

    fn check_rank(&self, a: &HeckeElement) -> Result<()> {
        if a.n != self.n {
            return Err(Error::RankMismatch(a.n, self.n));
        }
        Ok(())
    }

    /// `w b` for a basis word `w`.
    fn mul_word(&self, w: &AkWord, b: &HeckeElement) -> HeckeElement {
        let mut y = b.clone();
        for i in perm::reduced_word(&w.g).into_iter().rev() {
            y = self.left_mul_tau(i, &y);
        }
        for (j, &a) in w.x.iter().enumerate() {
            for _ in 0..a {
                y = self.left_mul_x(j, &y);
            }
        }
        y
    }

    pub fn mul(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        self.check_rank(a)?;
        self.check_rank(b)?;
        let mut out = HeckeElement::zero(self.n);
        for (w, c) in a.terms() {
            out.add_scaled(&self.mul_word(w, b), c);
        }
        Ok(out)
    }

    /// `ab - ba`.
    pub fn commutator(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        Ok(self.mul(a, b)?.sub(&self.mul(b, a)?))
    }

    /// `x_j` (0-based `j`).
    pub fn x(&self, j: usize) -> HeckeElement {
        self.left_mul_x(j, &HeckeElement::one(self.n))
    }

    /// `τ_i` (0-based `i`, swapping strands `i` and `i+1`).
    pub fn tau(&self, i: usize) -> HeckeElement {
        HeckeElement::basis(AkWord {
            x: vec![0; self.n],
            g: perm::mul_s_right(&perm::identity(self.n), i),
        })
    }

    /// `τ_i^{-1} = τ_i - z`.
    pub fn tau_inv(&self, i: usize) -> HeckeElement {
        let mut t = self.tau(i);
        t.add_term(AkWord::one(self.n), -&self.z);
        t
    }

    /// `x_j^{-1}`.
    pub fn x_inv(&self, j: usize) -> HeckeElement {
        if j == 0 {
            // x_1^{-1} = -t^{-2} (x_1^{l-1} + f_1 x_1^{l-2} + ... + f_{l-1})
            let mut out = HeckeElement::zero(self.n);
            let s = RatFunc::t_pow(-2).scale_int(-1);
            for m in 0..self.l {
                let mut x = vec![0u8; self.n];
                x[0] = (self.l - 1 - m) as u8;
                out.add_term(
                    AkWord {
                        x,
                        g: perm::identity(self.n),
                    },
                    self.f.coeff(m).mul(&s),
                );
            }
            return out;
        }
        let ti = self.tau_inv(j - 1);
        let inner = self.mul(&self.x_inv(j - 1), &ti).unwrap();
        self.mul(&ti, &inner).unwrap()
    }

    /// `x_j^r` for any integer `r`.
    pub fn x_pow(&self, j: usize, r: i64) -> HeckeElement {
        let mut y = HeckeElement::one(self.n);
        if r >= 0 {
            for _ in 0..r {
                y = self.left_mul_x(j, &y);
            }
        } else {
            let inv = self.x_inv(j);
            for _ in 0..-r {
                y = self.mul(&inv, &y).unwrap();
            }
        }
        y
    }

    /// `f(x_j)` in normal form; zero for `j = 0`.
    pub fn f_of_x(&self, j: usize) -> HeckeElement {
        let mut out = HeckeElement::zero(self.n);
        for m in 0..=self.l {
            out.add_scaled(&self.x_pow(j, (self.l - m) as i64), self.f.coeff(m));
        }
        out
    }

    /// Parses a product of generators such as `x1^2 T1 x2^-1` or `T2^-1*x1`.
    /// `1` is the unit; an optional leading coefficient may be given in
    /// parentheses, e.g. `(q - q^-1) T1`.
    pub fn parse_word(&self, s: &str) -> Result<HeckeElement> {
        let mut s = s.trim();
        let mut coeff = RatFunc::one();
        if s.starts_with('(') {
            let mut depth = 0;
            let end = s
                .char_indices()
                .find(|&(_, ch)| {
                    match ch {
                        '(' => depth += 1,
                        ')' => depth -= 1,
                        _ => {}
                    }
                    depth == 0
                })
                .map(|(i, _)| i)
                .ok_or_else(|| Error::parse(0, "unbalanced parentheses"))?;
            coeff = s[..=end].parse()?;
            s = &s[end + 1..];
        }
        let mut acc = HeckeElement::one(self.n);
        for tok in s
            .split(|c: char| c == '*' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            if tok == "1" {
                continue;
            }
            let (name, exp) = match tok.split_once('^') {
                Some((a, e)) => (
                    a,
                    e.parse::<i64>()
                        .map_err(|_| Error::parse(0, format!("bad exponent in `{tok}`")))?,
                ),
                None => (tok, 1),
            };
            let (kind, idx) = name.split_at(1);
            let idx: usize = idx
                .parse()
                .map_err(|_| Error::parse(0, format!("bad generator `{tok}`")))?;
            let g = match kind {
                "x" | "X" if (1..=self.n).contains(&idx) => self.x_pow(idx - 1, exp),
                "T" | "t" if (1..self.n).contains(&idx) => {
                    let base = if exp >= 0 {
                        self.tau(idx - 1)
                    } else {
                        self.tau_inv(idx - 1)
                    };
                    let mut y = HeckeElement::one(self.n);
                    for _ in 0..exp.abs() {
                        y = self.mul(&y, &base)?;
                    }
                    y
                }
                _ => {
                    return Err(Error::parse(
                        0,
                        format!("no generator `{tok}` in rank {}", self.n),
                    ))
                }
            };
            acc = self.mul(&acc, &g)?;
        }
        Ok(acc.scale(&coeff))
    }

    /// Reads `{word: {exponents, perm}, coeff}` or a list of such terms;
    /// `perm` is a 1-based reduced word and exponents may be negative.
    pub fn element_from_json(&self, v: &serde_json::Value) -> Result<HeckeElement> {
        let bad = |m: &str| Error::parse(0, m.to_string());
        if let Some(items) = v.as_array() {
            let mut out = HeckeElement::zero(self.n);
            for it in items {
                out = out.add(&self.element_from_json(it)?);
            }
            return Ok(out);
        }
        let word = v.get("word").ok_or_else(|| bad("missing `word`"))?;
        let coeff: RatFunc = match v.get("coeff") {
            None => RatFunc::one(),
            Some(serde_json::Value::String(s)) => s.parse()?,
            Some(serde_json::Value::Number(x)) => {
                RatFunc::from_int(x.as_i64().ok_or_else(|| bad("non-integer coeff"))?)
            }
            Some(_) => return Err(bad("coeff must be a string")),
        };
        let exps: Vec<i64> = match word.get("exponents") {
            None => vec![0; self.n],
            Some(e) => serde_json::from_value(e.clone()).map_err(|e| bad(&e.to_string()))?,
        };
        let perm: Vec<usize> = match word.get("perm") {
            None => Vec::new(),
            Some(e) => serde_json::from_value(e.clone()).map_err(|e| bad(&e.to_string()))?,
        };
        if exps.len() != self.n {
            return Err(Error::RankMismatch(exps.len(), self.n));
        }
        let mut acc = HeckeElement::one(self.n);
        for (j, &e) in exps.iter().enumerate() {
            if e != 0 {
                acc = self.mul(&acc, &self.x_pow(j, e))?;
            }
        }
        for &i in &perm {
            if i == 0 || i >= self.n {
                return Err(bad(&format!("no generator T{i} in rank {}", self.n)));
            }
            acc = self.right_mul_tau(&acc, i - 1);
        }
        Ok(acc.scale(&coeff))
    }

    /// JSON (object or list) or the word syntax of [`Hecke::parse_word`].
    pub fn parse_element(&self, s: &str) -> Result<HeckeElement> {
        let s = s.trim();
        if s.starts_with('{') || s.starts_with('[') {
            let v: serde_json::Value =
                serde_json::from_str(s).map_err(|e| Error::parse(e.column(), e.to_string()))?;
            self.element_from_json(&v)
        } else {
            self.parse_word(s)
        }
    }
}

/// `l^n n!`.
pub fn dimension(n: usize, l: usize) -> usize {
    (1..=n).product::<usize>() * l.pow(n as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn poly(s: &str) -> CyclotomicPoly {
        s.parse().unwrap()
    }

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_validate_f() {
        let f = poly("1,-(1+t^2),t^2");
        assert_eq!(f.degree(), 2);
        assert_eq!(f.coeff(1), &r("-1 - t^2"));
        assert!("1".parse::<CyclotomicPoly>().is_err());
        assert!("2,t^2".parse::<CyclotomicPoly>().is_err());
        assert!("1,t".parse::<CyclotomicPoly>().is_err());
    }

    #[test]
    fn dimension_counts() {
        assert_eq!(dimension(0, 3), 1);
        assert_eq!(dimension(2, 2), 8);
        assert_eq!(dimension(3, 1), 6);
        for n in 0..=3 {
            for f in ["1,t^2", "1,-(1+t^2),t^2"] {
                let h = Hecke::new(n, poly(f));
                assert_eq!(h.basis().len(), h.dimension());
            }
        }
    }

    #[test]
    fn quadratic_and_cyclotomic_relations() {
        let h = Hecke::new(2, poly("1,t^2"));
        let t1 = h.tau(0);
        let mut want = t1.scale(&qint(1));
        want.add_term(AkWord::one(2), RatFunc::one());
        assert_eq!(h.mul(&t1, &t1).unwrap(), want);

        let h1 = Hecke::new(1, poly("1,t^2"));
        let x = h1.x(0);
        assert_eq!(x, HeckeElement::one(1).scale(&r("-t^2")));
        assert_eq!(
            h1.mul(&x, &x).unwrap(),
            HeckeElement::one(1).scale(&r("t^4"))
        );
        assert!(h1.f_of_x(0).is_zero());
    }

    #[test]
    fn defining_relations_hold() {
        for f in ["1,t^2", "1,-(1+t^2),t^2", "1,q,t^2"] {
            let h = Hecke::new(3, poly(f));
            let one = HeckeElement::one(3);
            assert!(h.f_of_x(0).is_zero(), "{f}");
            for i in 0..2 {
                // τ_i x_i τ_i = x_{i+1}
                let lhs = h
                    .mul(&h.mul(&h.tau(i), &h.x(i)).unwrap(), &h.tau(i))
                    .unwrap();
                assert_eq!(lhs, h.x(i + 1), "{f} i={i}");
                assert_eq!(h.mul(&h.tau(i), &h.tau_inv(i)).unwrap(), one);
            }
            for a in 0..3 {
                assert_eq!(h.mul(&h.x(a), &h.x_inv(a)).unwrap(), one, "{f} x{a}");
                for b in 0..3 {
                    assert_eq!(
                        h.commutator(&h.x(a), &h.x(b)).unwrap(),
                        HeckeElement::zero(3)
                    );
                }
            }
            let (t1, t2) = (h.tau(0), h.tau(1));
            let l = h.mul(&h.mul(&t1, &t2).unwrap(), &t1).unwrap();
            let rr = h.mul(&h.mul(&t2, &t1).unwrap(), &t2).unwrap();
            assert_eq!(l, rr);
            // x_1 commutes with τ_2; type B relation
            assert!(h.commutator(&h.x(0), &t2).unwrap().is_zero());
            let x1 = h.x(0);
            let a = h
                .mul(&h.mul(&h.mul(&x1, &t1).unwrap(), &x1).unwrap(), &t1)
                .unwrap();
            let b = h
                .mul(&h.mul(&h.mul(&t1, &x1).unwrap(), &t1).unwrap(), &x1)
                .unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn word_parser() {
        let h = Hecke::new(2, poly("1,-(1+t^2),t^2"));
        assert_eq!(h.parse_word("T1").unwrap(), h.tau(0));
        assert_eq!(h.parse_word("x2").unwrap(), h.x(1));
        assert_eq!(h.parse_word("x1^-1").unwrap(), h.x_inv(0));
        assert_eq!(h.parse_word("1").unwrap(), HeckeElement::one(2));
        assert_eq!(
            h.parse_word("(q) T1").unwrap(),
            h.tau(0).scale(&RatFunc::q())
        );
        assert!(h.parse_word("T2").is_err());
        assert_eq!(h.tau(0).to_string(), "T1");
        assert_eq!(h.x(1).to_string(), "x2");
    }
}
