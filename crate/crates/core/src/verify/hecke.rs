//! Suites on cyclotomic Hecke algebras and the module `V_f`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{SuiteParams, SuiteReport, Tally};
use crate::coeff::{qint, RatFunc};
use crate::error::Result;
use crate::hecke::cocenter::Echelon;
use crate::hecke::{
    dimension, hoop_scalars, size_cap, Cocenter, CocenterClass, CyclotomicPoly, Hecke,
    HeckeElement, Vf, VfVector,
};

pub(crate) fn default_polys() -> Vec<CyclotomicPoly> {
    ["1,t^2", "1,-(1+t^2),t^2"]
        .iter()
        .map(|s| s.parse().expect("valid polynomial"))
        .collect()
}

/// Basis size, associativity on random word triples, and the defining
/// relations after normal forming.
pub fn hecke(p: &SuiteParams) -> Result<SuiteReport> {
    let polys = match &p.f {
        Some(f) => vec![f.clone()],
        None => default_polys(),
    };
    let samples = p.samples.unwrap_or(12);
    let names: Vec<String> = polys.iter().map(|f| f.to_string()).collect();
    let mut rep = SuiteReport::new("hecke")
        .bound("f", &names)
        .bound("max_rank", 3)
        .bound("samples", samples)
        .bound("seed", p.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    for f in &polys {
        let l = f.degree();
        for n in 0..=3 {
            let h = Hecke::new(n, f.clone());
            let mut t = Tally::default();
            let basis = h.basis();
            let mut uniq = basis.clone();
            uniq.sort();
            uniq.dedup();
            t.check(
                || format!("f={f} n={n} basis size"),
                &basis.len(),
                &dimension(n, l),
            );
            t.check(
                || format!("f={f} n={n} distinct words"),
                &uniq.len(),
                &basis.len(),
            );
            if n == 0 {
                rep.absorb(t);
                continue;
            }
            let triples: Vec<[usize; 3]> = (0..samples)
                .map(|_| std::array::from_fn(|_| rng.gen_range(0..basis.len())))
                .collect();
            let tallies = p.exec.map(&triples, |ix| {
                let [a, b, c] = ix.map(|i| HeckeElement::basis(basis[i].clone()));
                let lhs = h.mul(&h.mul(&a, &b).unwrap(), &c).unwrap();
                let rhs = h.mul(&a, &h.mul(&b, &c).unwrap()).unwrap();
                let mut t = Tally::default();
                t.check(
                    || {
                        format!(
                            "f={f} n={n} associativity {} | {} | {}",
                            basis[ix[0]], basis[ix[1]], basis[ix[2]]
                        )
                    },
                    &lhs,
                    &rhs,
                );
                t
            });
            for x in tallies {
                t = t.merge(x);
            }
            relations(&h, &mut t)?;
            rep.absorb(t);
        }
    }
    for f in &polys {
        let dims: Vec<String> = (0..=3)
            .filter(|&n| dimension(n, f.degree()) <= size_cap())
            .map(|n| {
                let c = Cocenter::new(&Hecke::new(n, f.clone()), p.exec).map(|c| c.dim());
                format!(
                    "n={n}: {}",
                    c.map(|d| d.to_string()).unwrap_or_else(|e| e.to_string())
                )
            })
            .collect();
        rep.notes.push(format!(
            "cocenter dimensions for f={f}: {}",
            dims.join(", ")
        ));
    }
    Ok(rep.finish())
}

fn relations(h: &Hecke, t: &mut Tally) -> Result<()> {
    let n = h.rank();
    let f = h.poly();
    let one = HeckeElement::one(n);
    let z = qint(1);
    t.check(
        || format!("f={f} n={n} f(x1) = 0"),
        &h.f_of_x(0),
        &HeckeElement::zero(n),
    );
    let x1inv = h.x_inv(0);
    t.check(
        || format!("f={f} n={n} x1 x1^-1"),
        &h.mul(&h.x(0), &x1inv)?,
        &one,
    );
    for i in 0..n.saturating_sub(1) {
        let ti = h.tau(i);
        let sq = h.mul(&ti, &ti)?;
        let rhs = ti.scale(&z).add(&one);
        t.check(|| format!("f={f} n={n} T{}^2", i + 1), &sq, &rhs);
        let lhs = h.mul(&h.mul(&ti, &h.x(i))?, &ti)?;
        t.check(
            || format!("f={f} n={n} T{0} x{0} T{0}", i + 1),
            &lhs,
            &h.x(i + 1),
        );
        t.check(
            || format!("f={f} n={n} T{} inverse", i + 1),
            &h.mul(&ti, &h.tau_inv(i))?,
            &one,
        );
        for j in 0..n {
            if j != i && j != i + 1 {
                let a = h.mul(&ti, &h.x(j))?;
                let b = h.mul(&h.x(j), &ti)?;
                t.check(|| format!("f={f} n={n} T{} x{}", i + 1, j + 1), &a, &b);
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let a = h.mul(&h.x(i), &h.x(j))?;
            let b = h.mul(&h.x(j), &h.x(i))?;
            t.check(|| format!("f={f} n={n} x{} x{}", i + 1, j + 1), &a, &b);
        }
    }
    if n >= 2 {
        // τ_1 x_1 τ_1 x_1 = x_1 τ_1 x_1 τ_1
        let (t1, x1) = (h.tau(0), h.x(0));
        let a = h.mul(&h.mul(&t1, &x1)?, &h.mul(&t1, &x1)?)?;
        let b = h.mul(&h.mul(&x1, &t1)?, &h.mul(&x1, &t1)?)?;
        t.check(|| format!("f={f} n={n} T1 x1 T1 x1"), &a, &b);
    }
    if n >= 3 {
        let (t1, t2) = (h.tau(0), h.tau(1));
        let a = h.mul(&h.mul(&t1, &t2)?, &t1)?;
        let b = h.mul(&h.mul(&t2, &t1)?, &t2)?;
        t.check(|| format!("f={f} n={n} braid"), &a, &b);
    }
    Ok(())
}

/// `{m} W_{m,0} v_f` read off the hoop scalars; `m = 0` gives `l`.
fn vacuum_eigen(plus: &[RatFunc], minus: &[RatFunc], l: usize, m: i64) -> RatFunc {
    match m {
        0 => RatFunc::from_int(l as i64),
        m if m > 0 => plus[m as usize - 1].clone(),
        m => -&minus[(-m) as usize - 1],
    }
}

/// The relations of the algebra at charge `-l` acting on `V_f`, checked
/// through the induction and restriction operators.
pub fn hoops(p: &SuiteParams) -> Result<SuiteReport> {
    let f: CyclotomicPoly = match &p.f {
        Some(f) => f.clone(),
        None => "1,t^2".parse()?,
    };
    let l = f.degree();
    let rmax = p.rmax.unwrap_or(if l == 1 { 3 } else { 2 });
    let max_rank = if dimension(3, l) <= size_cap() { 3 } else { 2 };
    let vf = Vf::new(f.clone(), max_rank, p.exec)?;
    let mut rep = SuiteReport::new("hoops")
        .bound("f", f.to_string())
        .bound("rmax", rmax)
        .bound("max_rank", max_rank);
    let span = 2i64;
    let scal = hoop_scalars(&f, (rmax as i64).max(2 * span) as usize)?;
    let eig = |m: i64| vacuum_eigen(&scal.plus, &scal.minus, l, m);
    let vac = vf.vacuum();
    let ind = |r: i64, v: &VfVector| vf.ind_dot(r, v);
    let res = |r: i64, v: &VfVector| vf.res_trace(r, v);
    let show = |v: &VfVector| vf.display(v);
    let mut t = Tally::default();
    let check = |t: &mut Tally, inputs: String, a: VfVector, b: VfVector| {
        if a == b {
            t.pass();
        } else {
            t.fail(inputs, show(&a), show(&b));
        }
    };

    // hoop1: nothing below rank 0
    for s in -span..=span {
        check(
            &mut t,
            format!("hoop1 s={s}"),
            res(s, &vac)?,
            VfVector::zero(),
        );
    }
    // hoop2: Σ_i f_i x_1^{r-i} vanishes, alone and under a second strand
    for r in 0..=(l as i64 + 1) {
        let mut acc = VfVector::zero();
        for i in 0..=l {
            acc = acc.add(&ind(r - i as i64, &vac)?.scale(f.coeff(i)));
        }
        check(&mut t, format!("hoop2 rank 1 r={r}"), acc, VfVector::zero());
        for s in -1..=1 {
            let mut acc = VfVector::zero();
            for i in 0..=l {
                let v = ind(s, &ind(r - i as i64, &vac)?)?;
                acc = acc.add(&v.scale(f.coeff(i)));
            }
            check(
                &mut t,
                format!("hoop2 rank 2 r={r} s={s}"),
                acc,
                VfVector::zero(),
            );
        }
    }
    // hoop3/hoop4 through [w_{0,-1}, w_{±r,1}] = {±r} w_{±r,0}
    for r in 1..=rmax as i64 {
        check(
            &mut t,
            format!("hoop3 r={r}"),
            res(0, &ind(r, &vac)?)?,
            vac.scale(&eig(r)),
        );
        check(
            &mut t,
            format!("hoop4 r={r}"),
            res(0, &ind(-r, &vac)?)?,
            vac.scale(&eig(-r)),
        );
    }

    // inputs: v_f and every basis class of C(H_n) for 1 <= n < max_rank
    let mut inputs: Vec<(String, VfVector)> = vec![("v_f".into(), vac.clone())];
    for n in 1..max_rank {
        let c = vf.cocenter(n)?;
        for (i, w) in c.representatives().iter().enumerate() {
            let mut coords = vec![RatFunc::zero(); c.dim()];
            coords[i] = RatFunc::one();
            inputs.push((
                format!("[{w}] in C{n}"),
                VfVector::from_class(CocenterClass { n, coords }),
            ));
        }
    }
    let rank_of = |v: &VfVector| v.components().next().map(|c| c.n).unwrap_or(0);
    let comm = |s: i64, r: i64, v: &VfVector| -> Result<VfVector> {
        Ok(res(s, &ind(r, v)?)?.sub(&ind(r, &res(s, v)?)?))
    };
    // W_{m,0} := {m}^{-1} [W_{0,-1}, W_{m,1}]
    let w0 =
        |m: i64, v: &VfVector| -> Result<VfVector> { Ok(comm(0, m, v)?.scale(&qint(m).inv()?)) };

    for (name, v) in &inputs {
        let n = rank_of(v);
        for r in -span..=span {
            for s in -span..=span {
                let lhs = comm(s, r, v)?;
                let rhs = if r + s == 0 {
                    v.scale(&RatFunc::from_int(l as i64))
                } else if n == 0 {
                    v.scale(&eig(r + s))
                } else if s != 0 {
                    comm(0, r + s, v)?
                } else {
                    continue;
                };
                check(&mut t, format!("cross s={s} r={r} on {name}"), lhs, rhs);
            }
        }
        if n + 1 < max_rank {
            for r in 1..=2 {
                for s in -1..=1 {
                    let lhs = ind(s, &w0(-r, v)?)?;
                    let lhs = w0(-r, &ind(s, v)?)?.sub(&lhs).scale(&RatFunc::from_int(-1));
                    let rhs = ind(s - r, v)?.scale(&qint(r));
                    check(&mut t, format!("bolt2+ s={s} r={r} on {name}"), lhs, rhs);
                }
            }
        }
        for r in 1..=2 {
            for s in -1..=1 {
                let lhs = res(s, &w0(r, v)?)?.sub(&w0(r, &res(s, v)?)?);
                let rhs = res(s + r, v)?.scale(&qint(r));
                check(&mut t, format!("bolt2- s={s} r={r} on {name}"), lhs, rhs);
            }
            for s in 1..=2 {
                let lhs = w0(r, &w0(-s, v)?)?.sub(&w0(-s, &w0(r, v)?)?);
                check(
                    &mut t,
                    format!("bolt3 r={r} s={s} on {name}"),
                    lhs,
                    VfVector::zero(),
                );
            }
        }
    }
    rep.absorb(t);

    // cyclicity: do induction words alone span each C(H_n)?
    for n in 1..=max_rank {
        let c = vf.cocenter(n)?;
        let mut ech = Echelon::new(c.dim());
        let mut layer = vec![vac.clone()];
        for _ in 0..n {
            let mut next = Vec::new();
            // small dots first, so the span usually fills before the large
            // coefficients show up
            for v in &layer {
                for r in (0..=span).flat_map(|a| if a == 0 { vec![0] } else { vec![a, -a] }) {
                    next.push(ind(r, v)?);
                }
            }
            layer = next;
        }
        for v in &layer {
            if ech.rank() == c.dim() {
                break;
            }
            if let Some(cl) = v.component(n) {
                ech.insert(cl.coords.clone());
            }
        }
        rep.notes.push(format!(
            "induction words with dots in [-{span},{span}] span {} of {} dimensions of C(H_{n})",
            ech.rank(),
            c.dim()
        ));
    }
    Ok(rep.finish())
}
