//! The isomorphisms `psi`, `omega` and the `GL_2(Z)` action, each carrying
//! `E_lambda` to the algebra with the transported central form.

use super::EhElement;
use crate::lattice::{pt, Gl2, LinearForm};

/// `w_x -> w_{-x}`, landing in `E_{-lambda}`.
pub fn apply_psi(e: &EhElement, lam: LinearForm) -> (EhElement, LinearForm) {
    let target = LinearForm {
        a: -lam.a,
        b: -lam.b,
    };
    (e.map_letters(target, |x| (1, -x)), target)
}

/// `w_{r,n} -> (-1)^{n+1} w_{r,-n}`; charge `k` goes to `-k`.
pub fn apply_omega(e: &EhElement, lam: LinearForm) -> (EhElement, LinearForm) {
    let target = LinearForm {
        a: lam.a,
        b: -lam.b,
    };
    let sign = |n: i64| if n.rem_euclid(2) == 0 { -1 } else { 1 };
    (
        e.map_letters(target, |x| (sign(x.n), pt(x.r, -x.n))),
        target,
    )
}

/// `w_x -> det(g) w_{gx}`, landing in `E_{lambda ∘ g^-1}`.
pub fn apply_gl2(g: &Gl2, e: &EhElement, lam: LinearForm) -> (EhElement, LinearForm) {
    let target = lam.compose(&g.inverse());
    let det = g.det();
    (e.map_letters(target, |x| (det, g.apply(x))), target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eha::{lie_bracket, pbw_normalize, Strategy};
    use crate::RatFunc;

    #[test]
    fn psi_and_omega_on_generators() {
        let k1 = LinearForm::charge(1);
        let (e, lam) = apply_psi(&EhElement::gen(pt(1, 2)), k1);
        assert_eq!(e, EhElement::gen(pt(-1, -2)));
        assert_eq!(lam, LinearForm::charge(-1));
        let (e, lam) = apply_omega(&EhElement::gen(pt(3, 0)), k1);
        assert_eq!(e, EhElement::gen(pt(3, 0)).scale(&RatFunc::from_int(-1)));
        assert_eq!(lam, LinearForm::charge(-1));
    }

    #[test]
    fn omega_is_an_involution_on_a_word() {
        let k = LinearForm::charge(2);
        let e = pbw_normalize(&[pt(1, 1), pt(0, -1), pt(2, 0)], k, Strategy::Leftmost).unwrap();
        let (once, k1) = apply_omega(&e, k);
        let (twice, k2) = apply_omega(&once, k1);
        assert_eq!((twice, k2), (e, k));
    }

    #[test]
    fn orientation_reversing_matrix_flips_sign() {
        let g = Gl2::new(0, 1, 1, 0).unwrap();
        let (e, _) = apply_gl2(&g, &EhElement::gen(pt(1, 0)), LinearForm::charge(0));
        assert_eq!(e, EhElement::gen(pt(0, 1)).scale(&RatFunc::from_int(-1)));
        let (id, _) = apply_gl2(
            &Gl2::IDENTITY,
            &EhElement::gen(pt(2, -1)),
            LinearForm::charge(3),
        );
        assert_eq!(id, EhElement::gen(pt(2, -1)));
    }

    #[test]
    fn gl2_is_bracket_equivariant() {
        let lam = LinearForm::charge(2);
        let gs = [
            Gl2::new(1, 1, 0, 1).unwrap(),
            Gl2::new(0, -1, 1, 0).unwrap(),
            Gl2::new(2, 1, 1, 1).unwrap(),
            Gl2::new(1, 0, 3, -1).unwrap(),
        ];
        let pts = [pt(1, 0), pt(0, 1), pt(-1, 2), pt(0, -1), pt(2, 1)];
        for g in &gs {
            let target = lam.compose(&g.inverse());
            for &x in &pts {
                for &y in &pts {
                    let lhs = apply_gl2(g, &lie_bracket(x, y, lam).unwrap(), lam).0;
                    let gx = apply_gl2(g, &EhElement::gen(x), lam).0;
                    let gy = apply_gl2(g, &EhElement::gen(y), lam).0;
                    assert_eq!(lhs, gx.bracket_linear(&gy, target), "{g} {x} {y}");
                }
            }
        }
    }
}
