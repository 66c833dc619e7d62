//! Parameter lists and `start:stop:step` grids.

use crate::error::{Error, Result};
use crate::scalar::{parse_rational, Rational};

/// Canonical `num/den` text, also for integers.
pub fn fmt_rational(r: &Rational) -> String {
    format!("{}/{}", r.numerator(), r.denominator())
}

/// Expands `start:stop:step`, endpoints included when within `step/2`.
pub fn parse_grid(text: &str) -> Result<Vec<Rational>> {
    let parts: Vec<&str> = text.split(':').collect();
    let [a, b, h] = parts.as_slice() else {
        return Err(Error::Parse(format!("grid {text:?} is not start:stop:step")));
    };
    let (a, b, h) = (parse_rational(a)?, parse_rational(b)?, parse_rational(h)?);
    let zero = Rational::ZERO;
    if h == zero {
        return Err(Error::Parse(format!("grid {text:?} has zero step")));
    }
    let span = (b - &a) / &h;
    if span < zero {
        return Err(Error::Parse(format!("grid {text:?} steps away from its end point")));
    }
    // floor(span + 1/2)
    let n = (span + Rational::from(1) / Rational::from(2)).floor();
    let n: usize = usize::try_from(&n).map_err(|_| Error::Parse(format!("grid {text:?} is too long")))?;
    if n > 1_000_000 {
        return Err(Error::Parse(format!("grid {text:?} has more than a million points")));
    }
    Ok((0..=n).map(|k| a.clone() + &h * Rational::from(k)).collect())
}

/// Comma separated values, each a rational or a grid.
pub fn parse_values(text: &str) -> Result<Vec<Rational>> {
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim) {
        if item.contains(':') {
            out.extend(parse_grid(item)?);
        } else {
            out.push(parse_rational(item)?);
        }
    }
    Ok(out)
}
