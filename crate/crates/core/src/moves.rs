//! Positive sharp insertion, sharp flips, and greedy Reidemeister I/II
//! simplification.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::braid::BraidWord;
use crate::closure::{closure_with_sites, TangleBuilder};
use crate::diagram::{Crossing, PlanarDiagram};
use crate::error::{KnotError, Result};

/// Where a sharp move acts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SharpSite {
    /// Insert into a braid word on strands `index..index+3` (1-based) before
    /// letter `offset`.
    BraidInsertion { index: usize, offset: usize },
    /// Four arcs crossed left to right by a transversal, all pointing the
    /// same way across it.
    DiagramTangle { arcs: [u32; 4] },
    /// Four crossings forming a two-over-two pattern.
    FlipCrossings { crossings: [usize; 4] },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoveRecord {
    pub site: SharpSite,
    pub writhe_delta: i64,
    pub crossings_added: usize,
    pub flipped_crossings: Vec<usize>,
    /// Indices of the new crossings in the output diagram.
    pub inserted_crossings: Vec<usize>,
}

/// Letters of the 8-crossing positive tangle on strands `i..i+3`.
pub fn sharp_tangle_word(i: usize) -> Vec<i32> {
    let i = i as i32;
    let block = [i + 1, i, i + 2, i + 1];
    block.iter().chain(block.iter()).copied().collect()
}

pub fn positive_sharp_braid(b: &BraidWord, i: usize, offset: usize) -> Result<(BraidWord, MoveRecord)> {
    if i == 0 || b.strands() < i + 3 {
        return Err(KnotError::TooFewStrands { needed: i.max(1) + 3, strands: b.strands() });
    }
    if offset > b.len() {
        return Err(KnotError::OffsetOutOfRange { offset, len: b.len() });
    }
    let mut letters = b.letters().to_vec();
    letters.splice(offset..offset, sharp_tangle_word(i));
    let out = b.with_letters(letters)?;
    let record = MoveRecord {
        site: SharpSite::BraidInsertion { index: i, offset },
        writhe_delta: 8,
        crossings_added: 8,
        flipped_crossings: vec![],
        inserted_crossings: (offset..offset + 8).collect(),
    };
    Ok((out, record))
}

/// The tangle site in the closure of `b` just above the last letter, on
/// strands `i..i+3`. Inserting there matches inserting at the end of the word.
pub fn braid_top_site(b: &BraidWord, i: usize) -> Result<(PlanarDiagram, SharpSite)> {
    if i == 0 || b.strands() < i + 3 {
        return Err(KnotError::TooFewStrands { needed: i.max(1) + 3, strands: b.strands() });
    }
    let closure = closure_with_sites(b);
    let mut arcs = [0u32; 4];
    for (j, arc) in arcs.iter_mut().enumerate() {
        *arc = closure.top_arcs[i - 1 + j]
            .ok_or_else(|| KnotError::InvalidSite(format!("strand {} meets no crossing", i + j)))?;
    }
    Ok((closure.diagram, SharpSite::DiagramTangle { arcs }))
}

pub fn positive_sharp_diagram(d: &PlanarDiagram, site: &SharpSite) -> Result<(PlanarDiagram, MoveRecord)> {
    let SharpSite::DiagramTangle { arcs } = site else {
        return Err(KnotError::InvalidSite("expected a diagram tangle site".into()));
    };
    let distinct: BTreeSet<u32> = arcs.iter().copied().collect();
    if distinct.len() != 4 {
        return Err(KnotError::InvalidSite("site arcs must be pairwise distinct".into()));
    }
    if let Some(&a) = arcs.iter().find(|&&a| a == 0 || a > d.arc_count()) {
        return Err(KnotError::InvalidSite(format!("no arc {a}")));
    }
    let ends = d.arc_ends();
    let faces = d.faces();
    let right = |a: u32| {
        let t = ends[a as usize - 1].tail;
        faces.dart(t.crossing, t.slot)
    };
    let left = |a: u32| {
        let t = ends[a as usize - 1].tail;
        faces.corner(t.crossing, t.slot)
    };
    for w in arcs.windows(2) {
        if right(w[0]) != left(w[1]) {
            return Err(KnotError::InvalidSite(format!(
                "arcs {} and {} are not adjacent and coherently oriented",
                w[0], w[1]
            )));
        }
    }

    // cut each arc: the old label ends at the tangle bottom, a new label leaves its top
    let mut positions = *arcs;
    let mut builder = TangleBuilder::new(d.arc_count() + 1);
    for letter in sharp_tangle_word(1) {
        builder.push(&mut positions, letter);
    }
    let mut crossings: Vec<Crossing> = d.crossings().to_vec();
    for (j, &a) in arcs.iter().enumerate() {
        let h = ends[a as usize - 1].head;
        crossings[h.crossing].slots[h.slot] = positions[j];
    }
    let first_new = crossings.len();
    crossings.extend(builder.crossings);
    let out = PlanarDiagram::from_crossings(crossings, d.free_loops())?;
    let record = MoveRecord {
        site: site.clone(),
        writhe_delta: 8,
        crossings_added: 8,
        flipped_crossings: vec![],
        inserted_crossings: (first_new..first_new + 8).collect(),
    };
    Ok((out, record))
}

/// Checks that the crossings form a two-over-two pattern: four distinct
/// crossings around a square face whose sides alternate between an arc that
/// is over at both ends and an arc that is under at both ends.
fn check_flip_pattern(d: &PlanarDiagram, ids: [usize; 4]) -> Result<()> {
    let set: BTreeSet<usize> = ids.iter().copied().collect();
    if set.len() != 4 {
        return Err(KnotError::NotSharpPattern("crossings must be distinct".into()));
    }
    if let Some(&c) = ids.iter().find(|&&c| c >= d.crossing_count()) {
        return Err(KnotError::NotSharpPattern(format!("no crossing {c}")));
    }
    let ends = d.arc_ends();
    let face = d
        .face_cycles()
        .into_iter()
        .find(|cycle| cycle.len() == 4 && cycle.iter().map(|e| e.crossing).collect::<BTreeSet<_>>() == set);
    let Some(face) = face else {
        return Err(KnotError::NotSharpPattern("crossings do not surround a square face".into()));
    };
    for dart in face {
        let label = d.label(dart);
        let e = &ends[label as usize - 1];
        if e.tail.slot % 2 != e.head.slot % 2 {
            return Err(KnotError::NotSharpPattern(format!("arc {label} goes from over to under")));
        }
    }
    Ok(())
}

/// Reverses the four crossings of a sharp pattern.
pub fn sharp_flip(d: &PlanarDiagram, crossings: [usize; 4]) -> Result<PlanarDiagram> {
    Ok(sharp_flip_with_record(d, crossings)?.0)
}

pub fn sharp_flip_with_record(d: &PlanarDiagram, ids: [usize; 4]) -> Result<(PlanarDiagram, MoveRecord)> {
    check_flip_pattern(d, ids)?;
    let mut crossings = d.crossings().to_vec();
    let mut writhe_delta = 0;
    for &c in &ids {
        writhe_delta -= 2 * crossings[c].sign.value();
        crossings[c] = crossings[c].mirrored();
    }
    let out = PlanarDiagram::from_crossings(crossings, d.free_loops())?;
    let mut flipped = ids.to_vec();
    flipped.sort_unstable();
    let record = MoveRecord {
        site: SharpSite::FlipCrossings { crossings: ids },
        writhe_delta,
        crossings_added: 0,
        flipped_crossings: flipped,
        inserted_crossings: vec![],
    };
    Ok((out, record))
}

/// Removes the given crossings, joining each pair of opposite slots.
fn remove_crossings(d: &PlanarDiagram, remove: &BTreeSet<usize>) -> PlanarDiagram {
    let n = d.arc_count() as usize;
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut touched = BTreeSet::new();
    for &ci in remove {
        let s = d.crossings()[ci].slots;
        for (x, y) in [(s[0], s[2]), (s[1], s[3])] {
            touched.insert(x as usize);
            touched.insert(y as usize);
            let (rx, ry) = (find(&mut parent, x as usize), find(&mut parent, y as usize));
            parent[rx] = ry;
        }
    }
    let kept: Vec<Crossing> = d
        .crossings()
        .iter()
        .enumerate()
        .filter(|(i, _)| !remove.contains(i))
        .map(|(_, c)| Crossing::new(c.slots.map(|l| find(&mut parent, l as usize) as u32), c.sign))
        .collect();
    let surviving: BTreeSet<u32> = kept.iter().flat_map(|c| c.slots).collect();
    let lost: BTreeSet<usize> =
        touched.iter().map(|&l| find(&mut parent, l)).filter(|&r| !surviving.contains(&(r as u32))).collect();
    let free_loops = d.free_loops() + lost.len() as u32;
    if kept.is_empty() {
        PlanarDiagram::unlink(free_loops).expect("a diagram with crossings has a component")
    } else {
        PlanarDiagram::from_crossings(kept, free_loops).expect("Reidemeister moves preserve validity")
    }
}

fn find_r1(d: &PlanarDiagram) -> Option<usize> {
    d.crossings().iter().position(|c| (0..4).any(|s| c.slots[s] == c.slots[(s + 1) % 4]))
}

fn find_r2(d: &PlanarDiagram) -> Option<(usize, usize)> {
    let ends = d.arc_ends();
    for cycle in d.face_cycles() {
        if cycle.len() != 2 || cycle[0].crossing == cycle[1].crossing {
            continue;
        }
        // one side over at both ends, the other under at both ends
        let parity_ok = cycle.iter().all(|&dart| {
            let e = &ends[d.label(dart) as usize - 1];
            e.tail.slot % 2 == e.head.slot % 2
        });
        if parity_ok {
            return Some((cycle[0].crossing, cycle[1].crossing));
        }
    }
    None
}

/// Greedy Reidemeister I and II reduction until neither applies.
pub fn simplify(d: &PlanarDiagram) -> PlanarDiagram {
    let mut current = d.clone();
    loop {
        let remove: BTreeSet<usize> = if let Some(c) = find_r1(&current) {
            [c].into()
        } else if let Some((a, b)) = find_r2(&current) {
            [a, b].into()
        } else {
            return current;
        };
        current = remove_crossings(&current, &remove);
    }
}
