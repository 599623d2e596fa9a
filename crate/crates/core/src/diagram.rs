//! Oriented planar diagrams stored as PD codes.
//!
//! Slots of a crossing are listed counterclockwise starting from the incoming
//! under-strand, so the under-strand always runs slot 0 → slot 2. The over
//! strand runs 3 → 1 at a positive crossing and 1 → 3 at a negative one.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{KnotError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub slots: [u32; 4],
    pub sign: Sign,
}

impl Crossing {
    pub fn new(slots: [u32; 4], sign: Sign) -> Self {
        Crossing { slots, sign }
    }

    /// Whether the strand leaves the crossing through `slot`.
    pub fn is_outgoing(&self, slot: usize) -> bool {
        matches!((slot, self.sign), (2, _) | (1, Sign::Positive) | (3, Sign::Negative))
    }

    /// Same crossing with over and under exchanged, orientation kept.
    pub fn mirrored(&self) -> Crossing {
        let [a, b, c, d] = self.slots;
        match self.sign {
            Sign::Positive => Crossing::new([d, a, b, c], Sign::Negative),
            Sign::Negative => Crossing::new([b, c, d, a], Sign::Positive),
        }
    }

    /// Slot paired with `slot` by the oriented (Seifert) smoothing.
    pub fn seifert_partner(&self, slot: usize) -> usize {
        match self.sign {
            Sign::Positive => [1, 0, 3, 2][slot],
            Sign::Negative => [3, 2, 1, 0][slot],
        }
    }
}

/// One occurrence of an arc label: crossing index and slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct End {
    pub crossing: usize,
    pub slot: usize,
}

impl End {
    fn new(crossing: usize, slot: usize) -> Self {
        End { crossing, slot }
    }

    fn dart(self) -> usize {
        4 * self.crossing + self.slot
    }

    fn through(self) -> End {
        End::new(self.crossing, (self.slot + 2) % 4)
    }
}

/// Arc endpoints, oriented.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcEnds {
    pub tail: End,
    pub head: End,
}

/// An oriented link diagram. Arcs are labelled `1..=arc_count`; components
/// without crossings are kept as a count of free loops.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    arc_count: u32,
    free_loops: u32,
}

/// Face structure: `face_of_dart[4c+s]` is the face on the right of the arc
/// leaving crossing `c` through slot `s`.
#[derive(Debug, Clone)]
pub struct Faces {
    pub face_of_dart: Vec<usize>,
    pub count: usize,
}

impl Faces {
    pub fn dart(&self, crossing: usize, slot: usize) -> usize {
        self.face_of_dart[4 * crossing + slot]
    }

    /// Face in the corner between `slot` and `slot + 1` (counterclockwise).
    pub fn corner(&self, crossing: usize, slot: usize) -> usize {
        self.dart(crossing, (slot + 1) % 4)
    }
}

impl PlanarDiagram {
    pub fn unknot() -> Self {
        PlanarDiagram { crossings: vec![], arc_count: 0, free_loops: 1 }
    }

    /// Unlink of `n ≥ 1` crossingless circles.
    pub fn unlink(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(KnotError::Inconsistent("empty diagram".into()));
        }
        Ok(PlanarDiagram { crossings: vec![], arc_count: 0, free_loops: n })
    }

    /// Builds a diagram from oriented crossings with arbitrary positive arc
    /// labels; labels are compacted to `1..=2c` in sorted order.
    pub fn from_crossings(crossings: Vec<Crossing>, free_loops: u32) -> Result<Self> {
        let mut labels: Vec<u32> = crossings.iter().flat_map(|c| c.slots).collect();
        if labels.contains(&0) {
            return Err(KnotError::ZeroArc);
        }
        labels.sort_unstable();
        labels.dedup();
        let index: BTreeMap<u32, u32> = labels.iter().enumerate().map(|(i, &l)| (l, i as u32 + 1)).collect();
        let crossings: Vec<Crossing> =
            crossings.into_iter().map(|c| Crossing::new(c.slots.map(|l| index[&l]), c.sign)).collect();
        let d = PlanarDiagram { arc_count: labels.len() as u32, crossings, free_loops };
        d.validate()?;
        Ok(d)
    }

    /// Builds a diagram from unoriented PD tuples, inferring orientation from
    /// the under-strands. Components that never pass under are oriented so
    /// that labels increase along them from their smallest label.
    pub fn from_pd_tuples(tuples: Vec<[u32; 4]>) -> Result<Self> {
        if tuples.is_empty() {
            return Ok(Self::unknot());
        }
        let mut occurrences: BTreeMap<u32, Vec<End>> = BTreeMap::new();
        for (c, t) in tuples.iter().enumerate() {
            for (s, &l) in t.iter().enumerate() {
                if l == 0 {
                    return Err(KnotError::ZeroArc);
                }
                occurrences.entry(l).or_default().push(End::new(c, s));
            }
        }
        if let Some((&arc, ends)) = occurrences.iter().find(|(_, e)| e.len() != 2) {
            return Err(KnotError::ArcMultiplicity { arc, count: ends.len() });
        }
        let label_at = |e: End| tuples[e.crossing][e.slot];
        let other = |e: End| {
            let ends = &occurrences[&label_at(e)];
            if ends[0] == e {
                ends[1]
            } else {
                ends[0]
            }
        };

        let n = tuples.len();
        let mut visited = vec![false; 4 * n];
        // head end of every arc, filled in component by component
        let mut head: BTreeMap<u32, End> = BTreeMap::new();
        for (&arc, ends) in &occurrences {
            if visited[ends[0].dart()] {
                continue;
            }
            // forward walk: each entry is (arc, end where it enters a crossing)
            let start = ends[1];
            let mut walk: Vec<(u32, End, End)> = Vec::new();
            let mut entry = start;
            let (mut fwd, mut bwd) = (false, false);
            loop {
                let exit = entry.through();
                visited[entry.dart()] = true;
                visited[exit.dart()] = true;
                match entry.slot {
                    0 => fwd = true,
                    2 => bwd = true,
                    _ => {}
                }
                let tail = other(entry);
                walk.push((label_at(entry), tail, entry));
                entry = other(exit);
                if entry == start {
                    break;
                }
            }
            let forward = match (fwd, bwd) {
                (true, true) => return Err(KnotError::Unorientable { arc }),
                (true, false) => true,
                (false, true) => false,
                (false, false) => prefer_forward(&walk),
            };
            for &(a, tail, h) in &walk {
                head.insert(a, if forward { h } else { tail });
            }
        }

        let mut crossings = Vec::with_capacity(n);
        for (c, t) in tuples.iter().enumerate() {
            if head[&t[0]] != End::new(c, 0) {
                return Err(KnotError::Inconsistent(format!(
                    "under-strand of crossing {} is not incoming at its first slot",
                    c + 1
                )));
            }
            let sign = if head[&t[3]] == End::new(c, 3) { Sign::Positive } else { Sign::Negative };
            crossings.push(Crossing::new(*t, sign));
        }
        Self::from_crossings(crossings, 0)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> u32 {
        self.arc_count
    }

    pub fn free_loops(&self) -> u32 {
        self.free_loops
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.value()).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.crossings.iter().all(|c| c.sign == Sign::Positive)
    }

    /// Every arc runs from an over-passage to an under-passage.
    pub fn is_alternating(&self) -> bool {
        self.arc_ends().iter().all(|e| e.tail.slot % 2 != e.head.slot % 2)
    }

    pub fn label(&self, e: End) -> u32 {
        self.crossings[e.crossing].slots[e.slot]
    }

    /// Tail and head of every arc, indexed by `label - 1`.
    pub fn arc_ends(&self) -> Vec<ArcEnds> {
        let mut tails = vec![None; self.arc_count as usize];
        let mut heads = vec![None; self.arc_count as usize];
        for (ci, c) in self.crossings.iter().enumerate() {
            for s in 0..4 {
                let idx = c.slots[s] as usize - 1;
                if c.is_outgoing(s) {
                    tails[idx] = Some(End::new(ci, s));
                } else {
                    heads[idx] = Some(End::new(ci, s));
                }
            }
        }
        tails.into_iter().zip(heads).map(|(t, h)| ArcEnds { tail: t.unwrap(), head: h.unwrap() }).collect()
    }

    fn other_end(&self, ends: &[ArcEnds], e: End) -> End {
        let a = ends[self.label(e) as usize - 1];
        if a.tail == e {
            a.head
        } else {
            a.tail
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.arc_count as usize;
        if self.crossings.is_empty() && self.free_loops == 0 {
            return Err(KnotError::Inconsistent("empty diagram".into()));
        }
        if n != 2 * self.crossings.len() {
            return Err(KnotError::Inconsistent(format!("{} arcs for {} crossings", n, self.crossings.len())));
        }
        let mut outgoing = vec![0usize; n];
        let mut incoming = vec![0usize; n];
        for c in &self.crossings {
            for s in 0..4 {
                let l = c.slots[s] as usize;
                if l == 0 || l > n {
                    return Err(KnotError::Inconsistent(format!("arc label {l} out of range")));
                }
                if c.is_outgoing(s) {
                    outgoing[l - 1] += 1;
                } else {
                    incoming[l - 1] += 1;
                }
            }
        }
        for i in 0..n {
            if outgoing[i] + incoming[i] != 2 {
                return Err(KnotError::ArcMultiplicity { arc: i as u32 + 1, count: outgoing[i] + incoming[i] });
            }
            if outgoing[i] != 1 {
                return Err(KnotError::Unorientable { arc: i as u32 + 1 });
            }
        }
        let faces = self.faces().count;
        let expected = self.crossings.len() + 2 * self.crossing_graph_components();
        if faces != expected {
            return Err(KnotError::NonPlanar { faces, expected });
        }
        Ok(())
    }

    /// Traces the faces of the underlying 4-valent map.
    pub fn faces(&self) -> Faces {
        let ends = self.arc_ends();
        let total = 4 * self.crossings.len();
        let mut face_of_dart = vec![usize::MAX; total];
        let mut count = 0;
        for start in 0..total {
            if face_of_dart[start] != usize::MAX {
                continue;
            }
            let mut d = start;
            while face_of_dart[d] == usize::MAX {
                face_of_dart[d] = count;
                let e = End::new(d / 4, d % 4);
                let arrive = self.other_end(&ends, e);
                d = 4 * arrive.crossing + (arrive.slot + 1) % 4;
            }
            count += 1;
        }
        Faces { face_of_dart, count }
    }

    /// Darts of each face in traversal order.
    pub fn face_cycles(&self) -> Vec<Vec<End>> {
        let ends = self.arc_ends();
        let faces = self.faces();
        let mut cycles = vec![Vec::new(); faces.count];
        let mut seen = vec![false; faces.face_of_dart.len()];
        for start in 0..seen.len() {
            if seen[start] {
                continue;
            }
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                let e = End::new(d / 4, d % 4);
                cycles[faces.face_of_dart[d]].push(e);
                let arrive = self.other_end(&ends, e);
                d = 4 * arrive.crossing + (arrive.slot + 1) % 4;
            }
        }
        cycles
    }

    /// Connected components of the crossing graph, as a component id per crossing.
    pub fn crossing_graph_labels(&self) -> (Vec<usize>, usize) {
        let n = self.crossings.len();
        let mut by_arc: Vec<Vec<usize>> = vec![Vec::new(); self.arc_count as usize];
        for (ci, c) in self.crossings.iter().enumerate() {
            for &l in &c.slots {
                by_arc[l as usize - 1].push(ci);
            }
        }
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = count;
            while let Some(ci) = stack.pop() {
                for &l in &self.crossings[ci].slots {
                    for &nb in &by_arc[l as usize - 1] {
                        if comp[nb] == usize::MAX {
                            comp[nb] = count;
                            stack.push(nb);
                        }
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    fn crossing_graph_components(&self) -> usize {
        self.crossing_graph_labels().1
    }

    /// Connected as a plane curve: one piece, crossings or not.
    pub fn is_connected(&self) -> bool {
        let pieces = self.crossing_graph_components() + self.free_loops as usize;
        pieces == 1
    }

    /// Link components, each as its arcs in orientation order.
    pub fn link_components(&self) -> Vec<Vec<u32>> {
        let ends = self.arc_ends();
        let mut seen = vec![false; self.arc_count as usize];
        let mut comps = Vec::new();
        for start in 1..=self.arc_count {
            if seen[start as usize - 1] {
                continue;
            }
            let mut comp = Vec::new();
            let mut a = start;
            while !seen[a as usize - 1] {
                seen[a as usize - 1] = true;
                comp.push(a);
                let h = ends[a as usize - 1].head;
                a = self.label(h.through());
            }
            comps.push(comp);
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        self.link_components().len() + self.free_loops as usize
    }

    pub fn is_knot(&self) -> bool {
        self.component_count() == 1
    }

    /// Errors unless this is a connected one-component diagram.
    pub fn require_knot(&self) -> Result<()> {
        if !self.is_connected() {
            return Err(KnotError::Disconnected);
        }
        let components = self.component_count();
        if components != 1 {
            return Err(KnotError::NotAKnot { components });
        }
        Ok(())
    }

    /// Mirror image: every crossing switched, orientation kept.
    pub fn mirror(&self) -> PlanarDiagram {
        PlanarDiagram {
            crossings: self.crossings.iter().map(Crossing::mirrored).collect(),
            arc_count: self.arc_count,
            free_loops: self.free_loops,
        }
    }

    /// Relabeling-invariant form: two diagrams are equal up to arc and
    /// crossing relabeling iff their canonical forms are equal.
    pub fn canonical_form(&self) -> CanonicalForm {
        let (comp, count) = self.crossing_graph_labels();
        let ends = self.arc_ends();
        let mut codes = Vec::with_capacity(count);
        for k in 0..count {
            let members: Vec<usize> = (0..self.crossings.len()).filter(|&c| comp[c] == k).collect();
            let best = members.iter().map(|&start| self.traversal_code(&ends, start)).min().unwrap();
            codes.push(best);
        }
        codes.sort();
        CanonicalForm { components: codes, free_loops: self.free_loops }
    }

    fn traversal_code(&self, ends: &[ArcEnds], start: usize) -> Vec<(i8, [u32; 4])> {
        let mut order = vec![start];
        let mut placed = BTreeMap::new();
        placed.insert(start, 0usize);
        let mut i = 0;
        while i < order.len() {
            let c = order[i];
            for s in 0..4 {
                let o = self.other_end(ends, End::new(c, s));
                if let std::collections::btree_map::Entry::Vacant(slot) = placed.entry(o.crossing) {
                    slot.insert(order.len());
                    order.push(o.crossing);
                }
            }
            i += 1;
        }
        let mut relabel: BTreeMap<u32, u32> = BTreeMap::new();
        order
            .iter()
            .map(|&c| {
                let x = &self.crossings[c];
                let slots = x.slots.map(|l| {
                    let next = relabel.len() as u32 + 1;
                    *relabel.entry(l).or_insert(next)
                });
                (x.sign.value() as i8, slots)
            })
            .collect()
    }

    pub fn is_isomorphic(&self, other: &PlanarDiagram) -> bool {
        self.crossing_count() == other.crossing_count()
            && self.free_loops == other.free_loops
            && self.canonical_form() == other.canonical_form()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    components: Vec<Vec<(i8, [u32; 4])>>,
    free_loops: u32,
}

/// Tie-break for components with no under-crossing: labels should increase
/// along the orientation starting at the smallest one.
fn prefer_forward(walk: &[(u32, End, End)]) -> bool {
    let len = walk.len();
    let min_at = (0..len).min_by_key(|&i| walk[i].0).unwrap();
    let fwd: Vec<u32> = (0..len).map(|k| walk[(min_at + k) % len].0).collect();
    let bwd: Vec<u32> = (0..len).map(|k| walk[(min_at + len - k) % len].0).collect();
    match fwd.cmp(&bwd) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => {
            let (_, tail, head) = walk[min_at];
            head < tail
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil_left() -> PlanarDiagram {
        PlanarDiagram::from_pd_tuples(vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap()
    }

    #[test]
    fn kink_orientation_and_sign() {
        let pos = PlanarDiagram::from_pd_tuples(vec![[1, 1, 2, 2]]).unwrap();
        assert_eq!(pos.writhe(), 1);
        let neg = PlanarDiagram::from_pd_tuples(vec![[1, 2, 2, 1]]).unwrap();
        assert_eq!(neg.writhe(), -1);
        assert!(pos.is_knot() && pos.is_connected());
    }

    #[test]
    fn trefoil_table_code_is_left_handed() {
        let t = trefoil_left();
        assert_eq!(t.writhe(), -3);
        assert!(t.is_knot());
        assert_eq!(t.faces().count, 5);
    }

    #[test]
    fn figure_eight_code() {
        let d = PlanarDiagram::from_pd_tuples(vec![[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]]).unwrap();
        assert_eq!(d.writhe(), 0);
        assert!(d.is_knot());
    }

    #[test]
    fn multiplicity_errors() {
        assert_eq!(
            PlanarDiagram::from_pd_tuples(vec![[1, 1, 1, 2]]),
            Err(KnotError::ArcMultiplicity { arc: 1, count: 3 })
        );
        assert_eq!(
            PlanarDiagram::from_pd_tuples(vec![[1, 2, 3, 4], [1, 2, 3, 5]]),
            Err(KnotError::ArcMultiplicity { arc: 4, count: 1 })
        );
    }

    #[test]
    fn unorientable_code_rejected() {
        // under-strands of the two crossings traverse the same component in
        // opposite directions
        let r = PlanarDiagram::from_pd_tuples(vec![[1, 3, 2, 4], [1, 4, 2, 3]]);
        assert!(matches!(r, Err(KnotError::Unorientable { .. })));
    }

    #[test]
    fn mirror_is_involution() {
        let t = trefoil_left();
        let m = t.mirror();
        assert_eq!(m.writhe(), 3);
        assert_eq!(m.mirror(), t);
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = trefoil_left();
        let b = PlanarDiagram::from_pd_tuples(vec![[5, 2, 6, 3], [1, 4, 2, 5], [3, 6, 4, 1]]).unwrap();
        assert!(a.is_isomorphic(&b));
        assert!(!a.is_isomorphic(&a.mirror()));
    }

    #[test]
    fn empty_tuples_are_unknot() {
        let u = PlanarDiagram::from_pd_tuples(vec![]).unwrap();
        assert_eq!(u, PlanarDiagram::unknot());
        assert!(u.is_knot());
    }
}
