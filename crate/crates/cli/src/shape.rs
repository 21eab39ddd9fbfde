//! The `outer[/inner]` shape grammar.

use skewchar::{Partition, SkewShape};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapeError {
    /// `pos` is the 1-based character column of the offending token.
    #[error("bad shape at column {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{inner} is not contained in {outer}")]
    Containment { outer: String, inner: String },
}

fn parse_list(s: &str, offset: usize) -> Result<Partition, ShapeError> {
    let err = |pos: usize, msg: String| ShapeError::Parse { pos: offset + pos + 1, msg };
    if s.trim().is_empty() || s.trim() == "0" {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    let mut start = 0;
    for tok in s.split(',') {
        let lead = tok.len() - tok.trim_start().len();
        let t = tok.trim();
        let v: usize = t.parse().map_err(|_| err(start + lead, format!("{t:?} is not a positive integer")))?;
        if v == 0 {
            return Err(err(start + lead, "parts must be positive".into()));
        }
        if parts.last().is_some_and(|&p| v > p) {
            return Err(err(start + lead, format!("{v} follows {}, parts must weakly decrease", parts.last().unwrap())));
        }
        parts.push(v);
        start += tok.len() + 1;
    }
    Ok(Partition::new(parts).expect("checked weakly decreasing"))
}

/// Parses `4,4,4,2,1/3,1`; an empty side may be written `0` or left blank.
pub fn parse_shape(s: &str) -> Result<SkewShape, ShapeError> {
    let (outer_s, inner_s, split) = match s.find('/') {
        Some(i) => (&s[..i], &s[i + 1..], i + 1),
        None => (s, "", s.len()),
    };
    if inner_s.contains('/') {
        let pos = split + inner_s.find('/').unwrap() + 1;
        return Err(ShapeError::Parse { pos, msg: "more than one '/'".into() });
    }
    let outer = parse_list(outer_s, 0)?;
    let inner = parse_list(inner_s, split)?;
    SkewShape::new(outer.clone(), inner.clone())
        .map_err(|_| ShapeError::Containment { outer: outer.to_string(), inner: inner.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use skewchar::partition::part;

    #[test]
    fn examples() {
        let s = parse_shape("4,4,4,2,1/3,1").unwrap();
        assert_eq!((s.outer, s.inner), (part(&[4, 4, 4, 2, 1]), part(&[3, 1])));
        let s = parse_shape("3").unwrap();
        assert_eq!((s.outer, s.inner), (part(&[3]), part(&[])));
        assert_eq!(parse_shape("0").unwrap().outer, part(&[]));
        assert_eq!(parse_shape("").unwrap().outer, part(&[]));
        assert_eq!(parse_shape("2, 1/0").unwrap().inner, part(&[]));
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse_shape("2,3"), Err(ShapeError::Parse { pos: 3, .. })));
        assert!(matches!(parse_shape("2,x"), Err(ShapeError::Parse { pos: 3, .. })));
        assert!(matches!(parse_shape("3,1/1,,"), Err(ShapeError::Parse { pos: 7, .. })));
        assert!(matches!(parse_shape("3/0,1"), Err(ShapeError::Parse { pos: 3, .. })));
        assert!(matches!(parse_shape("3/1/1"), Err(ShapeError::Parse { pos: 4, .. })));
        assert!(matches!(parse_shape("1/2"), Err(ShapeError::Containment { .. })));
    }
}
