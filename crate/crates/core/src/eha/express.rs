//! Writing an arbitrary generator as a nested bracket of the `w_{s,±1}`.

use std::fmt;

use super::EhElement;
use crate::coeff::{qint, RatFunc};
use crate::error::Result;
use crate::lattice::{pt, LatticePoint, LinearForm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    Leaf(LatticePoint),
    Bracket(Box<BracketExpr>, Box<BracketExpr>),
}

/// `coeff * node`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketExpr {
    pub coeff: RatFunc,
    pub node: Node,
}

impl BracketExpr {
    pub fn leaf(x: LatticePoint) -> Self {
        BracketExpr {
            coeff: RatFunc::one(),
            node: Node::Leaf(x),
        }
    }

    /// `{d}^-1 [a, b]`.
    fn over(d: i64, a: BracketExpr, b: BracketExpr) -> Self {
        BracketExpr {
            coeff: qint(d).inv().expect("nonzero quantum integer"),
            node: Node::Bracket(Box::new(a), Box::new(b)),
        }
    }

    pub fn leaves(&self) -> Vec<LatticePoint> {
        match &self.node {
            Node::Leaf(x) => vec![*x],
            Node::Bracket(a, b) => {
                let mut v = a.leaves();
                v.extend(b.leaves());
                v
            }
        }
    }

    pub fn depth(&self) -> usize {
        match &self.node {
            Node::Leaf(_) => 0,
            Node::Bracket(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Evaluates in `E_lambda` with the Lie bracket.
    pub fn eval(&self, lam: LinearForm) -> EhElement {
        let v = match &self.node {
            Node::Leaf(x) => EhElement::gen(*x),
            Node::Bracket(a, b) => a.eval(lam).bracket_linear(&b.eval(lam), lam),
        };
        v.scale(&self.coeff)
    }

    /// Evaluates with an arbitrary realization of the leaves and of the
    /// bracket (for instance as operators on a module).
    pub fn fold<T>(
        &self,
        leaf: &mut impl FnMut(LatticePoint) -> T,
        bracket: &mut impl FnMut(T, T) -> T,
        scale: &mut impl FnMut(T, &RatFunc) -> T,
    ) -> T {
        let v = match &self.node {
            Node::Leaf(x) => leaf(*x),
            Node::Bracket(a, b) => {
                let va = a.fold(leaf, bracket, scale);
                let vb = b.fold(leaf, bracket, scale);
                bracket(va, vb)
            }
        };
        if self.coeff.is_one() {
            v
        } else {
            scale(v, &self.coeff)
        }
    }
}

impl fmt::Display for BracketExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = match &self.node {
            Node::Leaf(x) => format!("w[{},{}]", x.r, x.n),
            Node::Bracket(a, b) => format!("[{a}, {b}]"),
        };
        f.write_str(&crate::coeff::fmt_term(&self.coeff, &body))
    }
}

/// A bracket expression for `w_{r,n}` with leaves in `{w_{s,1}, w_{s,-1}}`:
///
/// * `w_{r,0} = {r}^-1 [w_{0,-1}, w_{r,1}]`
/// * `w_{r,n} = {r}^-1 [w_{r,n-1}, w_{0,1}]` for `n >= 2`, `r != 0`
/// * `w_{0,n} = {n}^-1 [w_{1,n-1}, w_{-1,1}]` for `n >= 2`
///
/// and the mirror images for `n <= -2`.
pub fn express_w(r: i64, n: i64) -> Result<BracketExpr> {
    let x = pt(r, n).nonzero()?;
    Ok(express(x))
}

fn express(x: LatticePoint) -> BracketExpr {
    let (r, n) = (x.r, x.n);
    match n {
        1 | -1 => BracketExpr::leaf(x),
        0 => BracketExpr::over(r, BracketExpr::leaf(pt(0, -1)), BracketExpr::leaf(pt(r, 1))),
        n if n >= 2 && r != 0 => {
            BracketExpr::over(r, express(pt(r, n - 1)), BracketExpr::leaf(pt(0, 1)))
        }
        n if n >= 2 => BracketExpr::over(n, express(pt(1, n - 1)), BracketExpr::leaf(pt(-1, 1))),
        n if r != 0 => BracketExpr::over(-r, express(pt(r, n + 1)), BracketExpr::leaf(pt(0, -1))),
        n => BracketExpr::over(-n, express(pt(-1, n + 1)), BracketExpr::leaf(pt(1, -1))),
    }
}
