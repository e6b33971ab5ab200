//! Text forms of tuples, divisor classes and monomials.

use anyhow::{bail, Context, Result};

use quadrangle_core::covers::named_representative;
use quadrangle_core::{DivClass, FVec2, Modulus, SixTuple};

/// Twelve comma-separated residues in `0..n`, or one of `U1..U4` when
/// `n = 5`.
pub fn parse_tuple(m: Modulus, s: &str) -> Result<SixTuple> {
    let s = s.trim();
    if s.starts_with('U') {
        if m != Modulus::FIVE {
            bail!("named tuples exist only for modulus 5");
        }
        return named_representative(s).with_context(|| format!("unknown tuple name {s:?}"));
    }
    let n = m.get() as i64;
    let residues = s
        .split(',')
        .map(|x| {
            let v: i64 = x.trim().parse().with_context(|| format!("bad residue {x:?}"))?;
            if !(0..n).contains(&v) {
                bail!("residue {v} is outside 0..{n}");
            }
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SixTuple::from_residues(m, &residues)?)
}

pub fn character(chi: FVec2) -> String {
    format!("({},{})", chi.x, chi.y)
}

/// Inverse of the `Display` form of [`DivClass`]: `3H - E0 - 2E1`, `0`,
/// `O_Y`, `H`, with optional spaces.
pub fn parse_class(s: &str) -> Result<DivClass> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "0" || compact == "O_Y" {
        return Ok(DivClass::ZERO);
    }
    let mut c = DivClass::ZERO;
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let sign = match rest.as_bytes()[0] {
            b'-' => {
                rest = &rest[1..];
                -1
            }
            b'+' => {
                rest = &rest[1..];
                1
            }
            _ => 1,
        };
        let end = rest[1..].find(['+', '-']).map_or(rest.len(), |i| i + 1);
        let term = &rest[..end];
        rest = &rest[end..];
        let split = term.find(['H', 'E']).with_context(|| format!("bad term {term:?} in {s:?}"))?;
        let coeff: i64 = match &term[..split] {
            "" => 1,
            k => k.parse().with_context(|| format!("bad coefficient in {term:?}"))?,
        };
        match &term[split..] {
            "H" => c.h += sign * coeff,
            e => {
                let i: usize = e[1..].parse().ok().filter(|&i| i < 4).with_context(|| format!("bad class {e:?}"))?;
                c.e[i] += sign * coeff;
            }
        }
    }
    Ok(c)
}

/// `x1^3 x2^3 x3 …`, variables numbered from 1, `1` for the empty product.
pub fn monomial(exponents: &[u8]) -> String {
    let parts: Vec<String> = exponents
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

pub fn parse_monomial(s: &str, len: usize) -> Result<Vec<u8>> {
    let mut out = vec![0u8; len];
    if s.trim() == "1" {
        return Ok(out);
    }
    for part in s.split_whitespace() {
        let body = part.strip_prefix('x').with_context(|| format!("bad factor {part:?}"))?;
        let (i, e) = match body.split_once('^') {
            Some((i, e)) => (i, e.parse()?),
            None => (body, 1),
        };
        let i: usize = i.parse()?;
        if i == 0 || i > len {
            bail!("variable x{i} out of range");
        }
        out[i - 1] += e;
    }
    Ok(out)
}

/// A markdown table with a header row.
pub fn md_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = format!("| {} |\n", header.join(" | "));
    out += &format!("|{}\n", "---|".repeat(header.len()));
    for r in rows {
        out += &format!("| {} |\n", r.join(" | "));
    }
    out
}
