//! Plain-text Laurent polynomials: `2*t^-1 - q*t + 1`.
//!
//! Terms are separated by `+`/`-`, factors by `*`; each factor is an integer or a
//! variable with an optional `^k`.

use num_bigint::BigInt;
use wrep_core::ring::{LaurentPoly, Vars};

use crate::error::{Result, WrepError};

fn bad(text: &str, why: &str) -> WrepError {
    WrepError::Core(wrep_core::Error::Parse(format!("`{text}`: {why}")))
}

fn parse_factor(vars: &Vars, f: &str) -> Result<LaurentPoly> {
    if let Ok(c) = f.parse::<BigInt>() {
        return Ok(LaurentPoly::constant(vars, c));
    }
    let (name, k) = match f.split_once('^') {
        Some((n, k)) => (n, k.parse::<i64>().map_err(|_| bad(f, "exponent is not an integer"))?),
        None => (f, 1),
    };
    Ok(LaurentPoly::var(vars, name)?.pow(k)?)
}

pub fn parse_poly(vars: &Vars, text: &str) -> Result<LaurentPoly> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad(text, "empty polynomial"));
    }
    // split on +/- that are not the sign of an exponent
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut prev = None;
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && prev != Some('^') {
            if !cur.is_empty() {
                terms.push((neg, std::mem::take(&mut cur)));
            } else if prev.is_some() {
                return Err(bad(text, "dangling operator"));
            }
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    if cur.is_empty() {
        return Err(bad(text, "dangling operator"));
    }
    terms.push((neg, cur));

    let mut acc = LaurentPoly::zero(vars);
    for (neg, term) in terms {
        let mut m = LaurentPoly::one(vars);
        for f in term.split('*') {
            if f.is_empty() {
                return Err(bad(text, "empty factor"));
            }
            m = m.checked_mul(&parse_factor(vars, f)?)?;
        }
        acc = if neg { acc.checked_sub(&m)? } else { acc.checked_add(&m)? };
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sums_and_exponents() {
        let v = Vars::new(&["t", "q"]);
        let t = LaurentPoly::var(&v, "t").unwrap();
        let q = LaurentPoly::var(&v, "q").unwrap();
        let one = LaurentPoly::one(&v);
        assert_eq!(parse_poly(&v, "t").unwrap(), t);
        assert_eq!(parse_poly(&v, "1 - t").unwrap(), &one - &t);
        assert_eq!(parse_poly(&v, "-q*t^-1").unwrap(), -&(&q * &t.unit_inverse().unwrap()));
        assert_eq!(parse_poly(&v, "2*t^2+t^-2").unwrap(), &(&t * &t).scale(&2.into()) + &t.pow(-2).unwrap());
    }

    #[test]
    fn rejects_garbage() {
        let v = Vars::new(&["t"]);
        for s in ["", "t+", "t**2", "x", "t^a", "--"] {
            assert!(parse_poly(&v, s).is_err(), "{s}");
        }
    }
}
