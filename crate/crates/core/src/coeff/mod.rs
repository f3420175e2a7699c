//! Exact arithmetic in the rational function field `Q(q,t)`.

mod combo;
mod int;
mod parse;
mod poly;
mod ratfunc;
mod series;
mod sum;
mod upoly;

pub use combo::{fmt_sum, fmt_term};
pub use int::Int;
pub use parse::parse_ratfunc;
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use series::{expand_series, Direction, LaurentSeries, ULaurent};
pub use sum::RatSum;
pub use upoly::UPoly;

/// `{d} = q^d - q^-d`.
pub fn qint(d: i64) -> RatFunc {
    RatFunc::qint(d)
}
