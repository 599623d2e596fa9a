use std::fmt;

use serde::{Serialize, Serializer};

use crate::diagram::PlanarDiagram;
use crate::error::{KnotError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DiagramStats {
    pub writhe: i64,
    pub seifert_circles: usize,
    pub crossing_count: usize,
    pub components: usize,
    pub connected: bool,
}

/// A nonnegative multiple of 1/2, stored doubled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(pub u64);

impl HalfInt {
    pub fn from_twice(twice: u64) -> Self {
        HalfInt(twice)
    }

    pub fn twice(self) -> u64 {
        self.0
    }

    pub fn as_integer(self) -> Option<u64> {
        self.0.is_multiple_of(2).then_some(self.0 / 2)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}/2", self.0),
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.as_integer() {
            Some(n) => s.serialize_u64(n),
            None => s.serialize_f64(self.0 as f64 / 2.0),
        }
    }
}

/// Number of circles left after smoothing every crossing along the orientation.
pub fn seifert_circles(d: &PlanarDiagram) -> usize {
    let n = d.arc_count() as usize;
    let mut next = vec![0u32; n];
    for c in d.crossings() {
        for s in 0..4 {
            if !c.is_outgoing(s) {
                let out = c.seifert_partner(s);
                next[c.slots[s] as usize - 1] = c.slots[out];
            }
        }
    }
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut a = start;
        while !seen[a] {
            seen[a] = true;
            a = next[a] as usize - 1;
        }
    }
    cycles + d.free_loops() as usize
}

pub fn stats(d: &PlanarDiagram) -> DiagramStats {
    DiagramStats {
        writhe: d.writhe(),
        seifert_circles: seifert_circles(d),
        crossing_count: d.crossing_count(),
        components: d.component_count(),
        connected: d.is_connected(),
    }
}

/// Genus bound `(c − O + 1)/2` from the surface Seifert's algorithm builds.
/// It is the genus of that surface (hence ≥ g(K)) when the diagram is a knot.
pub fn seifert_genus_upper(d: &PlanarDiagram) -> Result<HalfInt> {
    if !d.is_connected() {
        return Err(KnotError::Disconnected);
    }
    let twice = d.crossing_count() as i64 - seifert_circles(d) as i64 + 1;
    debug_assert!(twice >= 0);
    Ok(HalfInt::from_twice(twice as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;
    use crate::closure::braid_closure;
    use crate::pd::parse_pd;

    fn closure(text: &str) -> PlanarDiagram {
        braid_closure(&parse_braid(text).unwrap())
    }

    #[test]
    fn example_braid_stats() {
        let s = stats(&closure("-1 2 1 3 2"));
        assert_eq!((s.writhe, s.seifert_circles), (3, 4));
        let s = stats(&closure("1 2 3"));
        assert_eq!((s.writhe, s.seifert_circles, s.crossing_count), (3, 4, 3));
    }

    #[test]
    fn unknot_stats() {
        let s = stats(&PlanarDiagram::unknot());
        assert_eq!((s.writhe, s.seifert_circles, s.crossing_count), (0, 1, 0));
        assert!(s.connected);
    }

    #[test]
    fn trefoil_stats() {
        let s = stats(&closure("1 1 1"));
        assert_eq!((s.writhe, s.seifert_circles), (3, 2));
    }

    #[test]
    fn figure_eight_has_three_seifert_circles() {
        let d = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        assert_eq!(seifert_circles(&d), 3);
    }

    #[test]
    fn kink_circles() {
        assert_eq!(seifert_circles(&parse_pd("X(1,1,2,2)").unwrap()), 2);
    }

    #[test]
    fn genus_bounds() {
        assert_eq!(seifert_genus_upper(&closure("1 1 1")).unwrap(), HalfInt(2));
        assert_eq!(seifert_genus_upper(&PlanarDiagram::unknot()).unwrap(), HalfInt(0));
        assert_eq!(seifert_genus_upper(&closure("1 2 3")).unwrap().as_integer(), Some(0));
        assert_eq!(seifert_genus_upper(&closure("strands=3; 1 1 1")), Err(KnotError::Disconnected));
        // Hopf link: half-integer
        assert_eq!(seifert_genus_upper(&closure("1 1")).unwrap().to_string(), "1/2");
    }
}
