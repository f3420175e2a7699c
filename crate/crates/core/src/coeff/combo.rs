//! Printing of linear combinations `c_1 b_1 + c_2 b_2 + ...`.

use super::ratfunc::RatFunc;

/// One summand. An empty `basis` means a bare scalar.
pub fn fmt_term(c: &RatFunc, basis: &str) -> String {
    if basis.is_empty() {
        return c.to_string();
    }
    match c.fmt_coeff().as_str() {
        "1" => basis.to_string(),
        "-1" => format!("-{basis}"),
        s => format!("{s} {basis}"),
    }
}

/// Joins summands with ` + ` / ` - `; the empty sum prints as `0`.
pub fn fmt_sum<I: IntoIterator<Item = String>>(terms: I) -> String {
    let mut out = String::new();
    for t in terms {
        if out.is_empty() {
            out = t;
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
