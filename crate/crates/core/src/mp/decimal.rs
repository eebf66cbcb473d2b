use rug::{Complex, Float, Integer, Rational};

use super::PrecisionContext;
use crate::error::{Error, Result};

/// Scientific decimal with exactly `digits` significant digits, e.g.
/// `3.14159e0`. Round to nearest.
pub fn format_sci(x: &Float, digits: u32) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x.is_sign_negative() { "-inf".into() } else { "inf".into() };
    }
    if x.is_zero() {
        return "0".into();
    }
    let (neg, mant, exp) = x.to_sign_string_exp(10, Some(digits.max(1) as usize));
    let exp = exp.unwrap_or(0) - 1;
    let mut out = String::with_capacity(mant.len() + 8);
    if neg {
        out.push('-');
    }
    out.push_str(&mant[..1]);
    if mant.len() > 1 {
        out.push('.');
        out.push_str(&mant[1..]);
    }
    out.push('e');
    out.push_str(&exp.to_string());
    out
}

/// Positional decimal for moderate exponents, scientific otherwise.
pub fn format_plain(x: &Float, digits: u32) -> String {
    if x.is_zero() || !x.is_finite() {
        return format_sci(x, digits);
    }
    let (neg, mant, exp) = x.to_sign_string_exp(10, Some(digits.max(1) as usize));
    let exp = exp.unwrap_or(0);
    if exp < -5 || exp > digits as i32 {
        return format_sci(x, digits);
    }
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if exp <= 0 {
        out.push_str("0.");
        out.extend(std::iter::repeat('0').take((-exp) as usize));
        out.push_str(&mant);
    } else {
        let e = exp as usize;
        out.push_str(&mant[..e]);
        if mant.len() > e {
            out.push('.');
            out.push_str(&mant[e..]);
        }
    }
    out
}

/// `re` when real, else `re+imi` / `re-imi`.
pub fn format_complex(z: &Complex, digits: u32) -> String {
    let re = format_sci(z.real(), digits);
    if z.imag().is_zero() {
        return re;
    }
    let im = format_sci(z.imag(), digits);
    if im.starts_with('-') {
        format!("{re}{im}i")
    } else {
        format!("{re}+{im}i")
    }
}

pub fn parse_real(s: &str, ctx: &PrecisionContext) -> Result<Float> {
    if s.contains('/') {
        return Ok(ctx.real(&parse_rational(s)?));
    }
    let parsed = Float::parse(s.trim()).map_err(|e| Error::Parse(format!("'{s}': {e}")))?;
    Ok(ctx.real(parsed))
}

/// Accepts `3`, `-2.5`, `3+0.5i`, `3-0.5i`, `0.5i`, `i`.
pub fn parse_complex(s: &str, ctx: &PrecisionContext) -> Result<Complex> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(ctx.complex((parse_real(&t, ctx)?, 0)));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    Ok(ctx.complex((parse_real(re, ctx)?, parse_real(im, ctx)?)))
}

/// Exact rational from `p/q`, an integer, or a finite decimal such as `1.25`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("'{s}' is not a rational number"));
    if let Some((p, q)) = t.split_once('/') {
        let p: Integer = p.trim().parse().map_err(|_| bad())?;
        let q: Integer = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        return Ok(Rational::from((p, q)));
    }
    let (neg, digits) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let num: Integer = format!("{int}{frac}").trim_start_matches('0').parse().unwrap_or_default();
    let den = Integer::from(Integer::u_pow_u(10, frac.len() as u32));
    let r = Rational::from((num, den));
    Ok(if neg { -r } else { r })
}
