//! Values checked against small independent computations: partition sums,
//! brute-force evaluation in a few variables, root power sums and
//! multipartition counts.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use ehk::coeff::RatFunc;
use ehk::hecke::{dimension, hoop_scalars, Cocenter, Hecke};
use ehk::par::Exec;
use ehk::qint;
use ehk::sym::{e_to_p, h_to_p, GenPartition, Side, Sym2};

fn rf(s: &str) -> RatFunc {
    s.parse().unwrap()
}

/// Partitions of `n` as weakly decreasing part lists.
fn partitions(n: i64) -> Vec<Vec<i64>> {
    fn go(n: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn z(mu: &[i64]) -> i64 {
    let mut mult: BTreeMap<i64, i64> = BTreeMap::new();
    for &p in mu {
        *mult.entry(p).or_default() += 1;
    }
    mult.iter()
        .map(|(&i, &m)| i.pow(m as u32) * (1..=m).product::<i64>())
        .product()
}

/// `Σ_μ ε_μ p_μ / z_μ` written in the `P` basis, where `P_μ = p_μ / Π{μ_i}^2`.
fn z_sum(n: i64, side: Side, signed: bool) -> Sym2 {
    let mut out = Sym2::zero();
    for mu in partitions(n) {
        let eps = if signed && (n - mu.len() as i64) % 2 == 1 {
            -1
        } else {
            1
        };
        let mut c = RatFunc::from_ratio(eps, z(&mu));
        for &p in &mu {
            c = c.mul(&qint(p)).mul(&qint(p));
        }
        let parts = mu.iter().map(|&p| side.sign() * p).collect();
        out.add_term(GenPartition::new(parts).unwrap(), c);
    }
    out
}

#[test]
fn complete_and_elementary_match_the_partition_sums() {
    for side in [Side::Plus, Side::Minus] {
        for n in 0..=8 {
            assert_eq!(h_to_p(n, side), z_sum(n, side, false), "h_{n} {side:?}");
            assert_eq!(e_to_p(n, side), z_sum(n, side, true), "e_{n} {side:?}");
        }
    }
}

fn to_rational(c: &RatFunc) -> BigRational {
    let part = |p: &ehk::coeff::Poly| -> BigInt {
        if p.is_zero() {
            return BigInt::zero();
        }
        let (c, i, j) = p.as_monomial().expect("constant");
        assert_eq!((i, j), (0, 0), "not a constant");
        c.to_string().parse().unwrap()
    };
    BigRational::new(part(c.numerator()), part(c.denominator()))
}

/// Evaluates a `P`-basis element of the first factor at the point `xs`.
fn eval_plus(v: &Sym2, xs: &[i64]) -> BigRational {
    let mut total = BigRational::zero();
    for (l, c) in v.terms() {
        let mut c = c.clone();
        let mut p = BigRational::one();
        for &part in l.parts() {
            assert!(part > 0);
            c = c.mul(&qint(part).pow(-2).unwrap());
            let s: BigInt = xs.iter().map(|&x| BigInt::from(x).pow(part as u32)).sum();
            p *= BigRational::from_integer(s);
        }
        total += to_rational(&c) * p;
    }
    total
}

/// Multisets (for `h`) or subsets (for `e`) of `n` indices, summed directly.
fn brute(xs: &[i64], n: usize, distinct: bool) -> BigRational {
    fn go(xs: &[i64], start: usize, left: usize, distinct: bool, acc: BigInt, out: &mut BigInt) {
        if left == 0 {
            *out += acc;
            return;
        }
        for i in start..xs.len() {
            let next = if distinct { i + 1 } else { i };
            go(xs, next, left - 1, distinct, &acc * xs[i], out);
        }
    }
    let mut out = BigInt::zero();
    go(xs, 0, n, distinct, BigInt::one(), &mut out);
    BigRational::from_integer(out)
}

#[test]
fn brute_force_evaluation_in_few_variables() {
    let points: [&[i64]; 3] = [
        &[1, 2, 3, 5, -1, 4],
        &[2, -3, 7, 1, 1, -2],
        &[0, 1, -1, 3, 2, 6],
    ];
    for xs in points {
        for n in 0..=6 {
            assert_eq!(
                eval_plus(&h_to_p(n, Side::Plus), xs),
                brute(xs, n as usize, false),
                "h_{n}"
            );
            assert_eq!(
                eval_plus(&e_to_p(n, Side::Plus), xs),
                brute(xs, n as usize, true),
                "e_{n}"
            );
        }
    }
}

#[test]
fn small_symmetric_functions_in_p_form() {
    let half = RatFunc::from_ratio(1, 2);
    let mut h2 = Sym2::zero();
    h2.add_term("[1,1]".parse().unwrap(), half.mul(&qint(1).pow(4).unwrap()));
    h2.add_term("[2]".parse().unwrap(), half.mul(&qint(2).pow(2).unwrap()));
    assert_eq!(h_to_p(2, Side::Plus), h2);
    let mut e2 = Sym2::zero();
    e2.add_term(
        "[-1,-1]".parse().unwrap(),
        half.mul(&qint(1).pow(4).unwrap()),
    );
    e2.add_term(
        "[-2]".parse().unwrap(),
        half.mul(&qint(2).pow(2).unwrap()).scale_int(-1),
    );
    assert_eq!(e_to_p(2, Side::Minus), e2);
}

#[test]
fn hoop_scalars_are_power_sums_of_the_roots() {
    // u + t^2 has the single root -t^2
    let s = hoop_scalars(&"1,t^2".parse().unwrap(), 4).unwrap();
    for r in 1..=4i64 {
        let root = rf("-t^2");
        assert_eq!(s.plus[r as usize - 1], root.pow(r).unwrap());
        assert_eq!(s.minus[r as usize - 1], root.pow(-r).unwrap().scale_int(-1));
    }
    // (u - 1)(u - t^2)
    let s = hoop_scalars(&"1,-(1+t^2),t^2".parse().unwrap(), 4).unwrap();
    for r in 1..=4i64 {
        let p = |e: i64| RatFunc::one().add(&RatFunc::t_pow(2 * e));
        assert_eq!(s.plus[r as usize - 1], p(r));
        assert_eq!(s.minus[r as usize - 1], p(-r).scale_int(-1));
    }
    let s = hoop_scalars(&"1,t^2".parse().unwrap(), 2).unwrap();
    assert_eq!(s.plus, vec![rf("-t^2"), rf("t^4")]);
    assert_eq!(s.minus[0], rf("t^-2"));
}

/// Number of `l`-tuples of partitions with total size `n`.
fn multipartitions(n: i64, l: usize) -> usize {
    let p: Vec<usize> = (0..=n).map(|k| partitions(k).len()).collect();
    let mut ways = vec![0usize; n as usize + 1];
    ways[0] = 1;
    for _ in 0..l {
        let mut next = vec![0usize; n as usize + 1];
        for (a, &w) in ways.iter().enumerate() {
            for b in 0..=(n as usize - a) {
                next[a + b] += w * p[b];
            }
        }
        ways = next;
    }
    ways[n as usize]
}

#[test]
fn hecke_dimensions_and_cocenter_ranks() {
    for (f, l) in [("1,t^2", 1usize), ("1,-(1+t^2),t^2", 2)] {
        for n in 0..=3usize {
            let h = Hecke::new(n, f.parse().unwrap());
            let fact: usize = (1..=n).product();
            assert_eq!(h.basis().len(), l.pow(n as u32) * fact);
            assert_eq!(dimension(n, l), l.pow(n as u32) * fact);
            let c = Cocenter::new(&h, Exec::Sequential).unwrap();
            assert_eq!(c.dim(), multipartitions(n as i64, l), "f={f} n={n}");
        }
    }
}

#[test]
fn quantum_integer_identities() {
    assert_eq!(qint(1), rf("q - q^-1"));
    assert_eq!(qint(-2), rf("-(q^2 - q^-2)"));
    assert_eq!(qint(2).checked_div(&qint(1)).unwrap(), rf("q + q^-1"));
    assert_eq!(qint(1).mul(&qint(1)), rf("q^2 - 2 + q^-2"));
    // {a+b} = q^b {a} + q^-a {b}
    for a in -4..=4 {
        for b in -4..=4 {
            let rhs = RatFunc::q_pow(b)
                .mul(&qint(a))
                .add(&RatFunc::q_pow(-a).mul(&qint(b)));
            assert_eq!(qint(a + b), rhs);
        }
    }
}

#[test]
fn level_zero_on_the_vacuum() {
    use ehk::fock::Fock;
    let f = Fock::new(0);
    let vac = Sym2::vacuum();
    let p = |s: &str| -> GenPartition { s.parse().unwrap() };
    assert_eq!(
        f.act_level0(2, &vac).unwrap(),
        Sym2::term(p("[2]"), qint(2).scale_int(-1))
    );
    assert_eq!(
        f.act_level0(1, &vac).unwrap(),
        Sym2::term(p("[1]"), qint(1).scale_int(-1))
    );
    // -{m} P with m = -1 gives +{1}; the commutator with w_{0,-1} agrees
    assert_eq!(
        f.act_level0(-1, &vac).unwrap(),
        Sym2::term(p("[-1]"), qint(1))
    );
    assert_eq!(
        f.act_level0(-1, &Sym2::basis(p("[-1]"))).unwrap(),
        Sym2::term(p("[-1,-1]"), qint(1))
    );
}
