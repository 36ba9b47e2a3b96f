//! Shared text rendering for linear combinations of monomials.

use std::fmt::{self, Write};

use crate::cyclotomic::CycNum;

/// `x^1·y^2`; factors with exponent zero are omitted, the empty product is `""`.
pub(crate) fn monomial(factors: &[(&str, usize)]) -> String {
    let mut out = String::new();
    for (name, e) in factors.iter().filter(|(_, e)| *e > 0) {
        if !out.is_empty() {
            out.push('·');
        }
        let _ = write!(out, "{name}^{e}");
    }
    out
}

/// `(coeff)·monomial + ...`, unit coefficients elided, `0` for the empty sum.
pub(crate) fn write_sum<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (&'a CycNum, String)>,
{
    let mut first = true;
    for (coeff, mono) in terms {
        if !first {
            f.write_str(" + ")?;
        }
        first = false;
        match (coeff.is_one(), mono.is_empty()) {
            (true, true) => f.write_str("1")?,
            (true, false) => f.write_str(&mono)?,
            (false, true) => write!(f, "({coeff})")?,
            (false, false) => write!(f, "({coeff})·{mono}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
