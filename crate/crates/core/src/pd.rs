//! Text form of PD codes: `X(a,b,c,d)` terms separated by whitespace or
//! commas. Square brackets are accepted in place of parentheses.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::diagram::PlanarDiagram;
use crate::error::{KnotError, Result};

pub fn parse_pd(text: &str) -> Result<PlanarDiagram> {
    PlanarDiagram::from_pd_tuples(parse_pd_tuples(text)?)
}

pub fn parse_pd_tuples(text: &str) -> Result<Vec<[u32; 4]>> {
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut tuples = Vec::new();
    let err = |at: usize, message: &str| KnotError::PdSyntax { column: at + 1, message: message.to_string() };

    let skip_sep = |i: &mut usize| {
        while *i < bytes.len() && (bytes[*i].is_ascii_whitespace() || bytes[*i] == b',') {
            *i += 1;
        }
    };
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };

    loop {
        skip_sep(&mut i);
        if i >= bytes.len() {
            break;
        }
        if bytes[i] != b'X' {
            return Err(err(i, "expected `X(`"));
        }
        i += 1;
        skip_ws(&mut i);
        let close = match bytes.get(i) {
            Some(b'(') => b')',
            Some(b'[') => b']',
            _ => return Err(err(i, "expected `(` after `X`")),
        };
        i += 1;
        let mut tuple = [0u32; 4];
        for (k, slot) in tuple.iter_mut().enumerate() {
            skip_ws(&mut i);
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(err(start, "expected a positive arc label"));
            }
            let value: u32 = text[start..i].parse().map_err(|_| err(start, "arc label too large"))?;
            if value == 0 {
                return Err(err(start, "arc labels are positive"));
            }
            *slot = value;
            skip_ws(&mut i);
            if k < 3 {
                if bytes.get(i) != Some(&b',') {
                    return Err(err(i, "expected `,` between arc labels"));
                }
                i += 1;
            }
        }
        if bytes.get(i) != Some(&close) {
            return Err(err(i, "expected closing bracket after four labels"));
        }
        i += 1;
        tuples.push(tuple);
    }
    Ok(tuples)
}

/// Renders a diagram in the same grammar `parse_pd` reads. Arcs are
/// relabelled consecutively along each component so that orientation is
/// recovered on re-parse. Crossingless components are not representable and
/// are dropped; a crossingless diagram renders as the empty string.
pub fn render_pd(d: &PlanarDiagram) -> String {
    let ends = d.arc_ends();
    let mut relabel: BTreeMap<u32, u32> = BTreeMap::new();
    for comp in d.link_components() {
        let passes_under = comp.iter().any(|&a| ends[a as usize - 1].head.slot == 0);
        let start = if !passes_under && comp.len() == 2 {
            // orientation tie-break on re-parse compares head and tail of the smallest label
            comp.iter()
                .position(|&a| {
                    let e = ends[a as usize - 1];
                    e.head < e.tail
                })
                .unwrap_or(0)
        } else {
            0
        };
        for k in 0..comp.len() {
            let a = comp[(start + k) % comp.len()];
            let next = relabel.len() as u32 + 1;
            relabel.insert(a, next);
        }
    }
    let mut out = String::new();
    for (i, c) in d.crossings().iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let [a, b, x, y] = c.slots.map(|l| relabel[&l]);
        write!(out, "X({a},{b},{x},{y})").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_bracket_styles() {
        let a = parse_pd_tuples("X(1,4,2,5) X(3,6,4,1), X(5,2,6,3)").unwrap();
        let b = parse_pd_tuples("X[1, 4, 2, 5],X[3,6,4,1] X[5,2,6,3]").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 3);
    }

    #[test]
    fn syntax_errors_carry_column() {
        assert!(matches!(parse_pd_tuples("X(1,2,3)"), Err(KnotError::PdSyntax { column: 8, .. })));
        assert!(matches!(parse_pd_tuples("Y(1,2,3,4)"), Err(KnotError::PdSyntax { column: 1, .. })));
        assert!(matches!(parse_pd_tuples("X(1,0,3,4)"), Err(KnotError::PdSyntax { column: 5, .. })));
    }

    #[test]
    fn arc_used_three_times() {
        assert!(matches!(parse_pd("X(1,1,1,2) X(2,3,3,4)"), Err(KnotError::ArcMultiplicity { arc: 1, count: 3 })));
    }

    #[test]
    fn reducible_two_crossing_unknot() {
        // two nugatory kinks in a row
        let d = parse_pd("X(1,1,2,3) X(2,3,4,4)").unwrap();
        assert_eq!(d.crossing_count(), 2);
        assert!(d.is_knot());
    }

    #[test]
    fn round_trip_trefoil() {
        let d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let again = parse_pd(&render_pd(&d)).unwrap();
        assert!(d.is_isomorphic(&again));
        assert_eq!(again.writhe(), d.writhe());
    }

    #[test]
    fn empty_renders_empty() {
        assert_eq!(render_pd(&PlanarDiagram::unknot()), "");
        assert_eq!(parse_pd("").unwrap(), PlanarDiagram::unknot());
    }
}
