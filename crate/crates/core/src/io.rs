//! Text formats.
//!
//! Edge lists:
//!
//! ```text
//! # comment lines start with '#'
//! n 3
//! 0 1
//! 1 2
//! ```
//!
//! Box CSV, one box per row, coordinates as decimals (`-1.25`) or
//! rationals (`5/4`):
//!
//! ```text
//! id,ix_lo,ix_hi,jy_lo,jy_hi
//! a,0,1,-2,2
//! ```

use std::fmt::Write as _;

use crate::boxes::{AxisBox, BoxFamily, Coord, Interval};
use crate::dag::Dag;
use crate::error::{Error, Result};

pub const BOX_CSV_HEADER: [&str; 5] = ["id", "ix_lo", "ix_hi", "jy_lo", "jy_hi"];

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn parse_edge_list(text: &str) -> Result<Dag> {
    let mut n = None;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match n {
            None => {
                let [key, count] = fields[..] else {
                    return Err(parse_err(line_no, "expected `n <count>` header"));
                };
                if key != "n" {
                    return Err(parse_err(line_no, "expected `n <count>` header"));
                }
                let count = count
                    .parse::<usize>()
                    .map_err(|_| parse_err(line_no, format!("invalid vertex count {count:?}")))?;
                n = Some(count);
            }
            Some(_) => {
                let [u, v] = fields[..] else {
                    return Err(parse_err(line_no, "expected `u v` edge"));
                };
                let vertex = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| parse_err(line_no, format!("invalid vertex {s:?}")))
                };
                pairs.push((vertex(u)?, vertex(v)?));
            }
        }
    }
    let n = n.ok_or_else(|| parse_err(1, "missing `n <count>` header"))?;
    Dag::from_edge_list(n, &pairs)
}

pub fn write_edge_list(g: &Dag) -> String {
    let mut out = format!("n {}\n", g.n());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses `p/q`, an integer, or a decimal with an optional fractional part.
pub fn parse_coord(s: &str) -> Option<Coord> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.trim().parse().ok()?;
        let q: i64 = q.trim().parse().ok()?;
        return (q != 0).then(|| Coord::new(p, q));
    }
    let (neg, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let scale = 10i64.checked_pow(frac_part.len() as u32)?;
    let whole: i64 = if int_part.is_empty() { 0 } else { int_part.parse().ok()? };
    let frac: i64 = if frac_part.is_empty() { 0 } else { frac_part.parse().ok()? };
    let num = whole.checked_mul(scale)?.checked_add(frac)?;
    Some(Coord::new(if neg { -num } else { num }, scale))
}

pub fn format_coord(c: &Coord) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_box_csv(text: &str) -> Result<BoxFamily> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| parse_err(1, e.to_string()))?
        .clone();
    if header.iter().ne(BOX_CSV_HEADER) {
        return Err(parse_err(1, format!("expected header `{}`", BOX_CSV_HEADER.join(","))));
    }
    let mut boxes = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            parse_err(line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let coord = |i: usize| {
            parse_coord(&record[i])
                .ok_or_else(|| parse_err(line, format!("invalid coordinate {:?}", &record[i])))
        };
        let h = Interval::new(coord(1)?, coord(2)?)?;
        let v = Interval::new(coord(3)?, coord(4)?)?;
        boxes.push((record[0].to_string(), AxisBox::new(h, v)));
    }
    BoxFamily::new(boxes)
}

pub fn write_box_csv(family: &BoxFamily) -> String {
    let mut out = BOX_CSV_HEADER.join(",");
    out.push('\n');
    for (id, b) in family.entries() {
        let _ = writeln!(
            out,
            "{id},{},{},{},{}",
            format_coord(&b.h.lo()),
            format_coord(&b.h.hi()),
            format_coord(&b.v.lo()),
            format_coord(&b.v.hi())
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_parsing() {
        let g = parse_edge_list("# chain\nn 3\n0 1\n\n1   2\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(write_edge_list(&g), "n 3\n0 1\n1 2\n");
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let err = parse_edge_list("n 3\n0 1\n1 x\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 3, message: "invalid vertex \"x\"".into() });
        assert!(matches!(parse_edge_list("# nothing\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("m 3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("n 3\n0 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("n 2\n0 1\n1 0\n"), Err(Error::CycleDetected(_))));
    }

    #[test]
    fn coordinates() {
        assert_eq!(parse_coord("3"), Some(Coord::from_integer(3)));
        assert_eq!(parse_coord("-1.25"), Some(Coord::new(-5, 4)));
        assert_eq!(parse_coord(".5"), Some(Coord::new(1, 2)));
        assert_eq!(parse_coord("7/14"), Some(Coord::new(1, 2)));
        assert_eq!(parse_coord("1/0"), None);
        assert_eq!(parse_coord("abc"), None);
        assert_eq!(parse_coord("-"), None);
        assert_eq!(format_coord(&Coord::new(-5, 4)), "-5/4");
        assert_eq!(format_coord(&Coord::from_integer(2)), "2");
    }

    #[test]
    fn box_csv() {
        let f = parse_box_csv("id,ix_lo,ix_hi,jy_lo,jy_hi\nR,1,2,-2,2\nS,0,3,-1,1\n").unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.id(1), "S");
        let again = parse_box_csv(&write_box_csv(&f)).unwrap();
        assert_eq!(again, f);

        let bad = parse_box_csv("id,ix_lo,ix_hi,jy_lo,jy_hi\nR,1,1,0,1\n");
        assert!(matches!(bad, Err(Error::DegenerateInterval { .. })));
        let bad = parse_box_csv("id,a,b,c,d\n");
        assert!(matches!(bad, Err(Error::Parse { line: 1, .. })));
        let bad = parse_box_csv("id,ix_lo,ix_hi,jy_lo,jy_hi\nR,1,2,0,1\nS,0,q,0,1\n");
        assert!(matches!(bad, Err(Error::Parse { line: 3, .. })));
    }
}
