//! Suites on the Lie bracket, `GL_2` reductions and PBW straightening.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{too_large, SuiteParams, SuiteReport, Tally};
use crate::coeff::{qint, RatFunc};
use crate::eha::{lie_bracket, pbw_normalize, EhElement, Strategy};
use crate::error::Result;
use crate::lattice::{pt, violet_gamma, LatticePoint, LinearForm};

pub(crate) fn points(bound: i64) -> Vec<LatticePoint> {
    let mut v = Vec::new();
    for n in -bound..=bound {
        for r in -bound..=bound {
            if (r, n) != (0, 0) {
                v.push(pt(r, n));
            }
        }
    }
    v
}

/// `c w_x`, with `w_{0,0} = 0`.
fn w(x: LatticePoint, c: RatFunc) -> EhElement {
    if x.is_zero() {
        EhElement::zero()
    } else {
        EhElement::term(x, c)
    }
}

fn central(c: i64) -> EhElement {
    EhElement::scalar(RatFunc::from_int(c))
}

fn br(x: LatticePoint, y: LatticePoint, lam: LinearForm) -> EhElement {
    lie_bracket(x, y, lam).expect("nonzero points")
}

/// Antisymmetry and the Jacobi identity on all triples in a box.
pub fn jacobi(p: &SuiteParams) -> Result<SuiteReport> {
    let bound = p.bound.unwrap_or(3);
    too_large("bound", bound, 6)?;
    let ks = p.ks();
    let pts = points(bound);
    let mut rep = SuiteReport::new("jacobi")
        .bound("bound", bound)
        .bound("k", &ks);
    for &k in &ks {
        let lam = LinearForm::charge(k);
        let inner: Vec<Vec<EhElement>> = p
            .exec
            .map(&pts, |&x| pts.iter().map(|&y| br(x, y, lam)).collect());
        let idx: Vec<usize> = (0..pts.len()).collect();
        let tallies = p.exec.map(&idx, |&i| {
            let mut t = Tally::default();
            let x = pts[i];
            let gx = EhElement::gen(x);
            for (j, &y) in pts.iter().enumerate() {
                let anti = inner[j][i].scale(&RatFunc::from_int(-1));
                t.check(
                    || format!("antisymmetry k={k} x={x} y={y}"),
                    &inner[i][j],
                    &anti,
                );
                let gy = EhElement::gen(y);
                for (l, &z) in pts.iter().enumerate() {
                    let j3 = gx
                        .bracket_linear(&inner[j][l], lam)
                        .add(&gy.bracket_linear(&inner[l][i], lam))
                        .add(&EhElement::gen(z).bracket_linear(&inner[i][j], lam));
                    t.check(
                        || format!("jacobi k={k} x={x} y={y} z={z}"),
                        &j3,
                        &EhElement::zero(),
                    );
                }
            }
            t
        });
        for t in tallies {
            rep.absorb(t);
        }
    }
    Ok(rep.finish())
}

/// The defining relations of the reduced algebra in terms of levels `0, ±1`,
/// the rank-one Heisenberg subalgebras and additivity of the central term.
pub fn biangular(p: &SuiteParams) -> Result<SuiteReport> {
    let b = p.bound.unwrap_or(4);
    too_large("bound", b, 12)?;
    let ks = p.ks();
    let mut rep = SuiteReport::new("biangular")
        .bound("bound", b)
        .bound("k", &ks);
    let tallies = p.exec.map(&ks, |&k| {
        let lam = LinearForm::charge(k);
        let mut t = Tally::default();
        for s in -b..=b {
            let lhs = br(pt(s, -1), pt(1, 1), lam);
            let mut rhs = w(pt(s + 1, 0), qint(s + 1));
            if s == -1 {
                rhs = rhs.sub(&central(k));
            }
            t.check(|| format!("bolt1 k={k} s={s}"), &lhs, &rhs);
            for r in 1..=b {
                let lhs = br(pt(s, 1), pt(-r, 0), lam);
                t.check(
                    || format!("bolt2+ k={k} s={s} r={r}"),
                    &lhs,
                    &w(pt(s - r, 1), qint(r)),
                );
                let lhs = br(pt(s, -1), pt(r, 0), lam);
                t.check(
                    || format!("bolt2- k={k} s={s} r={r}"),
                    &lhs,
                    &w(pt(s + r, -1), qint(r)),
                );
                if s >= 1 {
                    let lhs = br(pt(r, 0), pt(-s, 0), lam);
                    t.check(
                        || format!("bolt3 k={k} r={r} s={s}"),
                        &lhs,
                        &EhElement::zero(),
                    );
                }
            }
            for r in -b..=b {
                let lhs = br(pt(s, -1), pt(r, 1), lam);
                let mut rhs = w(pt(r + s, 0), qint(r + s));
                if r == -s {
                    rhs = rhs.add(&central(lam.eval(pt(s, -1))));
                }
                t.check(|| format!("cross k={k} s={s} r={r}"), &lhs, &rhs);
            }
        }
        // [w_{ix}, w_{jx}] = i δ_{i,-j} λ(x)
        for x in points(2).into_iter().filter(|x| x.content() == 1) {
            for i in (-3..=3).filter(|&i| i != 0) {
                for j in (-3..=3).filter(|&j| j != 0) {
                    let lhs = br(i * x, j * x, lam);
                    let rhs = if i == -j {
                        central(i * lam.eval(x))
                    } else {
                        EhElement::zero()
                    };
                    t.check(|| format!("heisenberg k={k} x={x} i={i} j={j}"), &lhs, &rhs);
                }
            }
        }
        let pts = points(2);
        for &x in &pts {
            for &y in &pts {
                let lhs = br(x, y, lam).sub(&br(x, y, LinearForm::charge(0)));
                let rhs = if (x + y).is_zero() {
                    central(k * x.n)
                } else {
                    EhElement::zero()
                };
                t.check(
                    || format!("charge-additivity k={k} x={x} y={y}"),
                    &lhs,
                    &rhs,
                );
            }
        }
        t
    });
    for t in tallies {
        rep.absorb(t);
    }
    Ok(rep.finish())
}

/// `lam ∘ gamma^-1 = lambda_k` for every form in a box, on the basis
/// vectors (a spanning set).
pub fn violet(p: &SuiteParams) -> Result<SuiteReport> {
    let b = p.bound.unwrap_or(5);
    too_large("bound", b, 1000)?;
    let mut rep = SuiteReport::new("violet").bound("bound", b);
    let mut t = Tally::default();
    for a in -b..=b {
        for c in -b..=b {
            let lam = LinearForm { a, b: c };
            let (g, k) = violet_gamma(lam);
            let reduced = lam.compose(&g.inverse());
            for e in [pt(1, 0), pt(0, 1)] {
                t.check(
                    || format!("lam=({a},{c}) gamma={g} k={k} at {e}"),
                    &reduced.eval(e),
                    &LinearForm::charge(k).eval(e),
                );
            }
            t.check(
                || format!("lam=({a},{c}) gcd"),
                &k,
                &crate::lattice::gcd(a, c),
            );
            t.check(|| format!("lam=({a},{c}) det"), &g.det().abs(), &1);
        }
    }
    rep.absorb(t);
    Ok(rep.finish())
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize, bound: i64) -> Vec<LatticePoint> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| loop {
            let x = pt(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
            if !x.is_zero() {
                break x;
            }
        })
        .collect()
}

fn fmt_letters(w: &[LatticePoint]) -> String {
    let s: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    format!("[{}]", s.join("; "))
}

/// Leftmost and rightmost straightening agree on seeded random words, and
/// the product is associative on random triples.
pub fn confluence(p: &SuiteParams) -> Result<SuiteReport> {
    let samples = p.samples.unwrap_or(200);
    let bound = p.bound.unwrap_or(2);
    too_large("bound", bound, 6)?;
    too_large("samples", samples as i64, 100_000)?;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut jobs = Vec::with_capacity(samples);
    for _ in 0..samples {
        let k = rng.gen_range(-2..=2);
        let words: [Vec<LatticePoint>; 4] = [
            random_word(&mut rng, 4, bound),
            random_word(&mut rng, 2, bound),
            random_word(&mut rng, 2, bound),
            random_word(&mut rng, 2, bound),
        ];
        jobs.push((k, words));
    }
    let mut rep = SuiteReport::new("confluence")
        .bound("samples", samples)
        .bound("bound", bound)
        .bound("seed", p.seed);
    let tallies = p.exec.map(&jobs, |(k, [w0, a, b, c])| {
        let lam = LinearForm::charge(*k);
        let mut t = Tally::default();
        let left = pbw_normalize(w0, lam, Strategy::Leftmost).expect("nonzero letters");
        let right = pbw_normalize(w0, lam, Strategy::Rightmost).expect("nonzero letters");
        t.check(
            || format!("strategies k={k} word={}", fmt_letters(w0)),
            &left,
            &right,
        );
        let norm = |w: &[LatticePoint]| {
            pbw_normalize(w, lam, Strategy::Leftmost).expect("nonzero letters")
        };
        let (ea, eb, ec) = (norm(a), norm(b), norm(c));
        let lhs = ea.mul(&eb, lam).mul(&ec, lam);
        let rhs = ea.mul(&eb.mul(&ec, lam), lam);
        t.check(
            || {
                format!(
                    "associativity k={k} a={} b={} c={}",
                    fmt_letters(a),
                    fmt_letters(b),
                    fmt_letters(c)
                )
            },
            &lhs,
            &rhs,
        );
        t
    });
    for t in tallies {
        rep.absorb(t);
    }
    Ok(rep.finish())
}
