//! Suites on the Fock representation and the symmetric-function conversions.

use super::algebra::points;
use super::{too_large, SuiteParams, SuiteReport, Tally};
use crate::coeff::{qint, RatFunc};
use crate::error::Result;
use crate::fock::Fock;
use crate::lattice::{det2, pt};
use crate::sym::{e_to_p, h_to_p, GenPartition, Side, Sym2};

/// All `P_λ` with at most `len` parts drawn from `±1, ..., ±max_part`.
pub(crate) fn states(len: usize, max_part: i64) -> Vec<GenPartition> {
    let parts: Vec<i64> = (-max_part..=max_part).filter(|&p| p != 0).collect();
    let mut out = vec![GenPartition::empty()];
    let mut frontier = vec![Vec::<i64>::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for f in &frontier {
            let lo = f.last().copied().unwrap_or(i64::MIN);
            for &p in parts.iter().filter(|&&p| p >= lo) {
                let mut g = f.clone();
                g.push(p);
                out.push(GenPartition::new(g.clone()).expect("nonzero parts"));
                next.push(g);
            }
        }
        frontier = next;
    }
    out
}

/// The bracket relation as an identity of operators on small basis states,
/// plus the level-0/level-1 slide and the cyclicity witness.
pub fn fock_relations(p: &SuiteParams) -> Result<SuiteReport> {
    let b = p.bound.unwrap_or(2);
    too_large("bound", b, 3)?;
    let ks = p.ks();
    let pts = points(b);
    let basis = states(2, 2);
    let mut rep = SuiteReport::new("fock-relations")
        .bound("bound", b)
        .bound("k", &ks)
        .bound("states", basis.len());
    let modules: Vec<Fock> = ks.iter().map(|&k| Fock::new(k)).collect();
    let jobs: Vec<(usize, usize)> = (0..ks.len())
        .flat_map(|i| (0..pts.len()).map(move |j| (i, j)))
        .collect();
    let tallies = p.exec.map(&jobs, |&(ki, xi)| {
        let m = &modules[ki];
        let k = ks[ki];
        let x = pts[xi];
        let mut t = Tally::default();
        for &y in &pts {
            for l in &basis {
                let v = Sym2::basis(l.clone());
                let act = |z, v: &Sym2| m.act_general(z, v).expect("nonzero point");
                let lhs = act(x, &act(y, &v)).sub(&act(y, &act(x, &v)));
                let mut rhs = Sym2::zero();
                if !(x + y).is_zero() {
                    rhs = act(x + y, &v).scale(&qint(det2(x, y)));
                } else {
                    rhs.add_term(l.clone(), RatFunc::from_int(k * x.n));
                }
                t.check(|| format!("k={k} x={x} y={y} state={l}"), &lhs, &rhs);
            }
        }
        t
    });
    for t in tallies {
        rep.absorb(t);
    }

    // [w_{r,0}, w_{s,1}] = {r} w_{r+s,1}, from the closed forms
    let mut t = Tally::default();
    for m in &modules {
        let k = m.charge();
        for r in (-3..=3).filter(|&r| r != 0) {
            for s in -2..=2 {
                for l in &basis {
                    let v = Sym2::basis(l.clone());
                    let a = m.act_level0(r, &m.act_level1(s, 1, &v)?)?;
                    let c = m.act_level1(s, 1, &m.act_level0(r, &v)?)?;
                    let rhs = m.act_level1(s + r, 1, &v)?.scale(&qint(r));
                    t.check(
                        || format!("slide k={k} r={r} s={s} state={l}"),
                        &a.sub(&c),
                        &rhs,
                    );
                }
            }
        }
    }
    // every small P_λ is a multiple of a product of level-0 operators on 1
    let m = &modules[0];
    for l in states(3, 3) {
        let mut v = Sym2::vacuum();
        let mut c = RatFunc::one();
        for &part in l.parts() {
            v = m.act_level0(part, &v)?;
            c = c.mul(&qint(part).scale_int(-1));
        }
        t.check(
            || format!("cyclic state={l}"),
            &v,
            &Sym2::term(l.clone(), c),
        );
    }
    rep.absorb(t);
    Ok(rep.finish())
}

/// Eigenvalues of `w_{0,n}` on the vacuum.
pub fn mouse(_p: &SuiteParams) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("mouse");
    let mut t = Tally::default();
    let vac = Sym2::vacuum();
    let m0 = Fock::new(0);
    for n in (-4..=4).filter(|&n| n != 0) {
        let lhs = m0.act_general(pt(0, n), &vac)?;
        let c = RatFunc::t_pow(n)
            .sub(&RatFunc::t_pow(-n))
            .mul(&qint(n).inv()?);
        t.check(
            || format!("k=0 n={n}"),
            &lhs,
            &Sym2::term(GenPartition::empty(), c),
        );
    }
    for sign in [1, -1] {
        for k in 1..=3 {
            let m = Fock::new(sign * k);
            for n in 1..=3 {
                let n = sign * n;
                let lhs = m.act_general(pt(0, n), &vac)?;
                let c = RatFunc::t_pow(n).mul(&qint(n).inv()?);
                t.check(
                    || format!("k={} n={n}", sign * k),
                    &lhs,
                    &Sym2::term(GenPartition::empty(), c),
                );
            }
        }
    }
    rep.absorb(t);
    Ok(rep.finish())
}

fn p_power(r: i64, side: Side) -> Sym2 {
    Sym2::vacuum().p_mult(side.sign() * r).expect("nonzero")
}

/// `H(u)E(-u) = 1`, Newton's `p_r` in terms of `e` and `h`, degrees, and
/// commutation of the two tensor factors.
pub fn sym(p: &SuiteParams) -> Result<SuiteReport> {
    let order = p.bound.unwrap_or(8);
    too_large("order", order, 14)?;
    let mut rep = SuiteReport::new("sym").bound("order", order);
    let mut t = Tally::default();
    for side in [Side::Plus, Side::Minus] {
        for n in 1..=order {
            let mut acc = Sym2::zero();
            for s in 0..=n {
                let sign = RatFunc::from_int(if s % 2 == 0 { 1 } else { -1 });
                acc.add_scaled(&h_to_p(n - s, side).mul(&e_to_p(s, side)), &sign);
            }
            t.check(|| format!("he side={side:?} n={n}"), &acc, &Sym2::zero());
            for (name, v) in [("h", h_to_p(n, side)), ("e", e_to_p(n, side))] {
                let bad: Vec<String> = v
                    .terms()
                    .filter(|(l, _)| l.weight() != n)
                    .map(|(l, _)| l.to_string())
                    .collect();
                t.check(
                    || format!("degree {name} side={side:?} n={n}"),
                    &bad.join(" "),
                    &String::new(),
                );
            }
        }
        for r in 1..=order.min(6) {
            let mut acc = Sym2::zero();
            for s in 1..=r {
                let c = RatFunc::from_int(if s % 2 == 1 { s } else { -s });
                acc.add_scaled(&e_to_p(s, side).mul(&h_to_p(r - s, side)), &c);
            }
            t.check(
                || format!("newton side={side:?} r={r}"),
                &acc,
                &p_power(r, side),
            );
        }
    }
    for r in 1..=4 {
        for s in 1..=4 {
            for l in states(2, 2) {
                let v = Sym2::basis(l.clone());
                let a = v.p_mult(r)?.p_mult(-s)?;
                let b = v.p_mult(-s)?.p_mult(r)?;
                t.check(|| format!("commute r={r} s={s} state={l}"), &a, &b);
            }
        }
    }
    rep.absorb(t);
    Ok(rep.finish())
}
