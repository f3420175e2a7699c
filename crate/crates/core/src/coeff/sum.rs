//! Sums of products with deferred cancellation.

use std::collections::HashMap;

use super::{Poly, RatFunc};

/// Accumulates `Σ a_i b_i`, grouping terms by denominator so that most
/// additions are plain polynomial additions. Cancellation happens once per
/// group in [`RatSum::finish`].
#[derive(Clone, Debug, Default)]
pub struct RatSum {
    groups: HashMap<Poly, Poly>,
}

impl RatSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, a: &RatFunc) {
        if !a.is_zero() {
            self.push(a.numerator().clone(), a.denominator().clone());
        }
    }

    pub fn add_product(&mut self, a: &RatFunc, b: &RatFunc) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let num = a.numerator().mul(b.numerator());
        let (da, db) = (a.denominator(), b.denominator());
        let den = if da.is_one() {
            db.clone()
        } else if db.is_one() {
            da.clone()
        } else {
            da.mul(db)
        };
        self.push(num, den);
    }

    fn push(&mut self, num: Poly, den: Poly) {
        match self.groups.entry(den) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&num);
                *e.get_mut() = s;
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(num);
            }
        }
    }

    pub fn finish(self) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (den, num) in self.groups {
            if !num.is_zero() {
                acc = acc.add(&RatFunc::from_parts(num, den));
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_eager_arithmetic() {
        let xs: Vec<RatFunc> = [
            "q/(q^2 - 1)",
            "t^-1",
            "(q + t)/(q^4 - 1)",
            "-q^2/(q^2 - 1)",
            "3/2",
        ]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
        let mut lazy = RatSum::new();
        let mut eager = RatFunc::zero();
        for a in &xs {
            for b in &xs {
                lazy.add_product(a, b);
                eager = eager.add(&a.mul(b));
            }
        }
        assert_eq!(lazy.finish(), eager);
    }
}
