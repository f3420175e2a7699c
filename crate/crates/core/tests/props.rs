use proptest::prelude::*;

use ehk::coeff::{expand_series, Direction, ULaurent};
use ehk::eha::{pbw_normalize, EhElement, Strategy as Rewrite};
use ehk::hecke::{Hecke, HeckeElement};
use ehk::lattice::{det2, pt, violet_gamma, Cone, LatticePoint, LinearForm};
use ehk::sym::GenPartition;
use ehk::{qint, RatFunc};

fn laurent_poly() -> impl Strategy<Value = RatFunc> {
    let mono = (-3i64..=3, -2i64..=2, -2i64..=2).prop_map(|(c, i, j)| RatFunc::monomial(c, i, j));
    prop::collection::vec(mono, 1..4)
        .prop_map(|ms| ms.iter().fold(RatFunc::zero(), |acc, m| acc.add(m)))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent_poly(), laurent_poly()).prop_map(|(n, d)| {
        if d.is_zero() {
            n
        } else {
            n.checked_div(&d).unwrap()
        }
    })
}

fn point(b: i64) -> impl Strategy<Value = LatticePoint> {
    (-b..=b, -b..=b)
        .prop_filter("nonzero", |&(r, n)| (r, n) != (0, 0))
        .prop_map(|(r, n)| pt(r, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn display_parse_round_trip(a in ratfunc()) {
        let back: RatFunc = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn qint_is_odd(d in -20i64..=20) {
        prop_assert_eq!(qint(-d), -qint(d));
    }

    #[test]
    fn series_times_denominator(
        num in prop::collection::vec(laurent_poly(), 1..4),
        unit in (prop::bool::ANY, -2i64..=2, -2i64..=2),
        den in prop::collection::vec(laurent_poly(), 0..3),
        order in 0i64..6,
    ) {
        // a unit leading term keeps every coefficient a Laurent polynomial
        let lead = RatFunc::monomial(if unit.0 { 1 } else { -1 }, unit.1, unit.2);
        let n = ULaurent::new(0, num.clone());
        let d = ULaurent::new(0, std::iter::once(lead).chain(den).collect());
        let s = expand_series(&n, &d, Direction::U, order).unwrap();
        let ds = expand_series(&d, &ULaurent::monomial(RatFunc::one(), 0), Direction::U, order).unwrap();
        let prod = s.mul(&ds).unwrap();
        for e in 0..=order {
            let want = num.get(e as usize).cloned().unwrap_or_default();
            prop_assert_eq!(prod.coeff_u(e).unwrap(), want);
        }
    }

    #[test]
    fn det_is_antisymmetric_and_bilinear(x in point(9), y in point(9), z in point(9)) {
        prop_assert_eq!(det2(x, y), -det2(y, x));
        let xz = pt(x.r + z.r, x.n + z.n);
        prop_assert_eq!(det2(xz, y), det2(x, y) + det2(z, y));
    }

    #[test]
    fn exactly_one_of_x_and_minus_x_is_positive(x in point(50)) {
        let neg = pt(-x.r, -x.n);
        let (a, b) = (x.cone().unwrap(), neg.cone().unwrap());
        prop_assert!((a == Cone::Positive) != (b == Cone::Positive));
    }

    #[test]
    fn violet_reduces_to_a_charge(a in -40i64..=40, b in -40i64..=40) {
        prop_assume!((a, b) != (0, 0));
        let lam = LinearForm { a, b };
        let (g, k) = violet_gamma(lam);
        prop_assert_eq!(g.det().abs(), 1);
        prop_assert_eq!(lam.compose(&g.inverse()), LinearForm::charge(k));
    }

    #[test]
    fn partition_round_trip(parts in prop::collection::vec((-6i64..=6).prop_filter("nonzero", |p| *p != 0), 0..6)) {
        let l = GenPartition::new(parts).unwrap();
        let back: GenPartition = l.to_string().parse().unwrap();
        prop_assert_eq!(back, l);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn eha_product_is_associative(x in point(2), y in point(2), z in point(2), k in -2i64..=2) {
        let lam = LinearForm::charge(k);
        let (a, b, c) = (EhElement::gen(x), EhElement::gen(y), EhElement::gen(z));
        prop_assert_eq!(a.mul(&b, lam).mul(&c, lam), a.mul(&b.mul(&c, lam), lam));
    }

    #[test]
    fn pbw_strategies_agree(w in prop::collection::vec(point(2), 1..5), k in -2i64..=2) {
        let lam = LinearForm::charge(k);
        prop_assert_eq!(
            pbw_normalize(&w, lam, Rewrite::Leftmost).unwrap(),
            pbw_normalize(&w, lam, Rewrite::Rightmost).unwrap()
        );
    }

    #[test]
    fn hecke_product_is_associative(
        case in 0usize..3,
        picks in prop::collection::vec((0usize..64, -2i64..=2), 9),
    ) {
        let (n, f) = [(1, "1,-(1+t^2),t^2"), (2, "1,t^2"), (2, "1,-(1+t^2),t^2")][case];
        let h = Hecke::new(n, f.parse().unwrap());
        let basis = h.basis();
        let elt = |ps: &[(usize, i64)]| {
            let mut e = HeckeElement::zero(n);
            for &(i, c) in ps {
                e.add_term(basis[i % basis.len()].clone(), RatFunc::from_int(c));
            }
            e
        };
        let (a, b, c) = (elt(&picks[0..3]), elt(&picks[3..6]), elt(&picks[6..9]));
        let left = h.mul(&h.mul(&a, &b).unwrap(), &c).unwrap();
        let right = h.mul(&a, &h.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}
