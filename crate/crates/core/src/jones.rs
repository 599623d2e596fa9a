//! Kauffman bracket and Jones polynomial by a frontier state sum.
//!
//! Crossings are absorbed one at a time. A partial state is the perfect
//! matching that the smoothed, already-absorbed crossings induce on the arcs
//! crossing the frontier; states with equal matchings are merged, so the
//! work is governed by frontier width rather than by `2^c`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::diagram::PlanarDiagram;
use crate::error::{KnotError, Result};
use crate::poly::LaurentPoly;
use crate::stats::HalfInt;

pub const BRACKET_BUDGET: usize = 24;

/// `-A^2 - A^-2`, the value of a closed loop.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1), (-2, -1)])
}

type Matching = Vec<(u32, u32)>;

#[derive(Clone, Copy)]
enum Side {
    Slot(usize),
    Boundary(u32),
}

fn partner(m: &Matching, arc: u32) -> Option<u32> {
    m.iter().find_map(|&(a, b)| {
        if a == arc {
            Some(b)
        } else if b == arc {
            Some(a)
        } else {
            None
        }
    })
}

/// Absorbs one smoothed crossing into a frontier matching; returns the new
/// matching and the number of loops closed off.
fn absorb(m: &Matching, slots: [u32; 4], joins: [(usize, usize); 2]) -> (Matching, usize) {
    let mut smooth = [0usize; 4];
    for (a, b) in joins {
        smooth[a] = b;
        smooth[b] = a;
    }
    let mut side = [Side::Boundary(0); 4];
    for s in 0..4 {
        let z = slots[s];
        side[s] = if let Some(t) = (0..4).find(|&t| t != s && slots[t] == z) {
            Side::Slot(t)
        } else if let Some(w) = partner(m, z) {
            match (0..4).find(|&t| slots[t] == w) {
                Some(t) => Side::Slot(t),
                None => Side::Boundary(w),
            }
        } else {
            Side::Boundary(z)
        };
    }

    let mut next: Matching = m.iter().copied().filter(|&(a, b)| !slots.contains(&a) && !slots.contains(&b)).collect();
    let mut seen = [false; 4];
    for s in 0..4 {
        let Side::Boundary(x) = side[s] else { continue };
        if seen[s] {
            continue;
        }
        let mut cur = s;
        loop {
            seen[cur] = true;
            let out = smooth[cur];
            seen[out] = true;
            match side[out] {
                Side::Boundary(y) => {
                    next.push(if x < y { (x, y) } else { (y, x) });
                    break;
                }
                Side::Slot(t) => cur = t,
            }
        }
    }
    let mut loops = 0;
    for s in 0..4 {
        if seen[s] {
            continue;
        }
        loops += 1;
        let mut cur = s;
        loop {
            seen[cur] = true;
            let out = smooth[cur];
            seen[out] = true;
            let Side::Slot(t) = side[out] else { unreachable!("closed loop reached the frontier") };
            if t == s {
                break;
            }
            cur = t;
        }
    }
    next.sort_unstable();
    (next, loops)
}

/// Greedy order keeping the frontier narrow: always absorb the crossing
/// sharing the most arcs with those already absorbed.
fn absorption_order(d: &PlanarDiagram) -> Vec<usize> {
    let n = d.crossing_count();
    let ends = d.arc_ends();
    let mut done = vec![false; n];
    let mut score = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n).filter(|&c| !done[c]).max_by_key(|&c| (score[c], std::cmp::Reverse(c))).unwrap();
        done[next] = true;
        order.push(next);
        for &l in &d.crossings()[next].slots {
            let e = ends[l as usize - 1];
            for x in [e.tail.crossing, e.head.crossing] {
                if !done[x] {
                    score[x] += 1;
                }
            }
        }
    }
    order
}

/// Kauffman bracket in `A`, normalised so the crossingless circle is 1.
pub fn kauffman_bracket(d: &PlanarDiagram) -> Result<LaurentPoly> {
    let c = d.crossing_count();
    if c > BRACKET_BUDGET {
        return Err(KnotError::CrossingBudget { crossings: c, budget: BRACKET_BUDGET });
    }
    let delta = loop_value();
    if c == 0 {
        return Ok(delta.pow(d.free_loops() - 1));
    }
    let delta_pows: Vec<LaurentPoly> = (0..=4).map(|k| delta.pow(k)).collect();

    let mut states: HashMap<Matching, LaurentPoly> = HashMap::new();
    states.insert(Vec::new(), LaurentPoly::one());
    for ci in absorption_order(d) {
        let slots = d.crossings()[ci].slots;
        let mut next: HashMap<Matching, LaurentPoly> = HashMap::with_capacity(states.len() * 2);
        for (m, p) in &states {
            // A-smoothing joins slots (0,1),(2,3); B-smoothing joins (0,3),(1,2)
            for (joins, weight) in [([(0, 1), (2, 3)], 1), ([(0, 3), (1, 2)], -1)] {
                let (m2, loops) = absorb(m, slots, joins);
                let term = &p.shift(weight) * &delta_pows[loops];
                *next.entry(m2).or_default() += &term;
            }
        }
        next.retain(|_, p| !p.is_zero());
        states = next;
    }
    let total = states.remove(&Vec::new()).unwrap_or_default();
    debug_assert!(states.is_empty());
    let total = &total * &delta.pow(d.free_loops());
    Ok(total.div_exact(&delta).expect("every state closes at least one loop"))
}

/// Jones polynomial with its cheap identification keys.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct JonesFingerprint {
    /// Polynomial in `t^(1/2)`: exponent `k` stands for `t^(k/2)`.
    pub polynomial: LaurentPoly,
    pub determinant: u64,
    /// Difference of extreme degrees, in powers of `t`.
    pub span: HalfInt,
}

impl JonesFingerprint {
    pub fn from_polynomial(polynomial: LaurentPoly) -> Self {
        let (re, im) = polynomial.eval_i();
        let det = (re.abs() + im.abs()).to_u64().expect("determinant fits in u64");
        let span = match (polynomial.min_exp(), polynomial.max_exp()) {
            (Some(lo), Some(hi)) => HalfInt::from_twice((hi - lo) as u64),
            _ => HalfInt::from_twice(0),
        };
        JonesFingerprint { polynomial, determinant: det, span }
    }

    /// Fingerprint of the mirror image: `t ↦ t^-1`.
    pub fn mirrored(&self) -> Self {
        Self::from_polynomial(self.polynomial.invert_variable())
    }

    pub fn is_trivial(&self) -> bool {
        self.polynomial.is_one()
    }

    /// Coefficient of `t^k` when every exponent is whole, as for knots.
    pub fn integer_powers(&self) -> Option<LaurentPoly> {
        self.polynomial.rescale_exponents(1, 2)
    }
}

pub fn jones_polynomial(d: &PlanarDiagram) -> Result<LaurentPoly> {
    let bracket = kauffman_bracket(d)?;
    let w = d.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let normalised = bracket.shift(-3 * w).scale(&BigInt::from(sign));
    // t = A^-4, so A^e = (t^(1/2))^(-e/2)
    Ok(normalised.rescale_exponents(-1, 2).expect("normalised bracket has even exponents"))
}

pub fn jones(d: &PlanarDiagram) -> Result<JonesFingerprint> {
    Ok(JonesFingerprint::from_polynomial(jones_polynomial(d)?))
}

/// Knot determinant |V(−1)|, for connected one-component diagrams.
pub fn determinant(d: &PlanarDiagram) -> Result<u64> {
    d.require_knot()?;
    Ok(jones(d)?.determinant)
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

    /// Doubled exponents: `t^k` is stored at `2k`.
    fn t_poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (2 * e, c)))
    }

    /// Naive oracle: sum over all 2^c smoothings, loops counted by union-find.
    fn brute_force_bracket(d: &PlanarDiagram) -> LaurentPoly {
        let c = d.crossing_count();
        let n = d.arc_count() as usize;
        let delta = loop_value();
        let mut total = LaurentPoly::zero();
        for state in 0u64..(1 << c) {
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(p: &mut [usize], x: usize) -> usize {
                let mut x = x;
                while p[x] != x {
                    p[x] = p[p[x]];
                    x = p[x];
                }
                x
            }
            let mut a_count = 0i64;
            for (i, x) in d.crossings().iter().enumerate() {
                let a_smoothing = state >> i & 1 == 0;
                let joins = if a_smoothing { [(0, 1), (2, 3)] } else { [(0, 3), (1, 2)] };
                a_count += if a_smoothing { 1 } else { -1 };
                for (s, t) in joins {
                    let (u, v) = (x.slots[s] as usize - 1, x.slots[t] as usize - 1);
                    let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                    parent[ru] = rv;
                }
            }
            let loops = (0..n).filter(|&i| find(&mut parent, i) == i).count() as u32 + d.free_loops();
            total += &(&LaurentPoly::monomial(a_count, 1) * &delta.pow(loops - 1));
        }
        total
    }

    #[test]
    fn frontier_sum_matches_brute_force() {
        let words = ["1 1 1", "1 -2 1 -2", "-1 2 1 3 2", "1 2 3 2 1 3 2 1 1", "1 1", "1 -1 2 -3 3 1"];
        for w in words {
            let d = closure(w);
            assert_eq!(kauffman_bracket(&d).unwrap(), brute_force_bracket(&d), "{w}");
        }
        let d = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        assert_eq!(kauffman_bracket(&d).unwrap(), brute_force_bracket(&d));
    }

    #[test]
    fn trefoil_span_from_brute_force() {
        let d = closure("1 1 1");
        let b = brute_force_bracket(&d);
        let v = b.shift(-9).scale(&BigInt::from(-1)).rescale_exponents(-1, 2).unwrap();
        let f = JonesFingerprint::from_polynomial(v);
        assert_eq!(f.span, HalfInt::from_twice(6));
        assert_eq!(f.determinant, 3);
        assert_eq!(jones(&d).unwrap(), f);
    }

    #[test]
    fn unknot_bracket_is_one() {
        assert!(kauffman_bracket(&PlanarDiagram::unknot()).unwrap().is_one());
    }

    #[test]
    fn kink_brackets() {
        let pos = parse_pd("X(1,1,2,2)").unwrap();
        assert_eq!(kauffman_bracket(&pos).unwrap(), LaurentPoly::monomial(3, -1));
        let neg = parse_pd("X(1,2,2,1)").unwrap();
        assert_eq!(kauffman_bracket(&neg).unwrap(), LaurentPoly::monomial(-3, -1));
        assert!(jones(&pos).unwrap().is_trivial());
        assert!(jones(&neg).unwrap().is_trivial());
    }

    #[test]
    fn unlink_of_two() {
        let d = PlanarDiagram::unlink(2).unwrap();
        assert_eq!(kauffman_bracket(&d).unwrap(), loop_value());
    }

    #[test]
    fn right_trefoil() {
        let f = jones(&closure("1 1 1")).unwrap();
        assert_eq!(f.polynomial, t_poly(&[(1, 1), (3, 1), (4, -1)]));
        assert_eq!(f.span, HalfInt::from_twice(6));
        assert_eq!(f.determinant, 3);
    }

    #[test]
    fn table_trefoil_is_left_handed() {
        let d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        assert_eq!(jones(&d).unwrap().polynomial, t_poly(&[(-1, 1), (-3, 1), (-4, -1)]));
    }

    #[test]
    fn figure_eight() {
        let d = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        let f = jones(&d).unwrap();
        assert_eq!(f.polynomial, t_poly(&[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)]));
        assert_eq!(f.determinant, 5);
    }

    #[test]
    fn hopf_link_has_half_integer_powers() {
        let f = jones(&closure("1 1")).unwrap();
        // V = -t^(1/2) - t^(5/2)
        assert_eq!(f.polynomial, LaurentPoly::from_terms([(1, -1), (5, -1)]));
        assert_eq!(f.determinant, 2);
        assert!(f.integer_powers().is_none());
    }

    #[test]
    fn budget_enforced() {
        let word = vec!["1"; 25].join(" ");
        assert!(matches!(jones(&closure(&word)), Err(KnotError::CrossingBudget { crossings: 25, budget: 24 })));
    }

    #[test]
    fn knot_determinants() {
        assert_eq!(determinant(&PlanarDiagram::unknot()).unwrap(), 1);
        assert_eq!(determinant(&closure("1 1 1")).unwrap(), 3);
        let fig8 = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        assert_eq!(determinant(&fig8).unwrap(), 5);
        assert_eq!(determinant(&closure("1 1")), Err(KnotError::NotAKnot { components: 2 }));
        assert_eq!(determinant(&closure("strands=3; 1 1 1")), Err(KnotError::Disconnected));
    }
}
