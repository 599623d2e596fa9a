//! Braid closures and braid-shaped tangles as PD crossings.
//!
//! Frame: strands run upward, positions are numbered left to right, and σ_i
//! carries the strand at position `i` over the strand at `i + 1`. In this
//! frame a positive letter is a positive crossing.

use crate::braid::BraidWord;
use crate::diagram::{Crossing, PlanarDiagram, Sign};
use crate::error::Result;

/// Accumulates crossings of a braid tangle, handing out fresh arc labels.
pub(crate) struct TangleBuilder {
    pub crossings: Vec<Crossing>,
    next_arc: u32,
}

impl TangleBuilder {
    pub fn new(first_free_label: u32) -> Self {
        TangleBuilder { crossings: Vec::new(), next_arc: first_free_label }
    }

    pub fn fresh(&mut self) -> u32 {
        let a = self.next_arc;
        self.next_arc += 1;
        a
    }

    /// Applies one letter; `positions` holds the arc currently at each position.
    pub fn push(&mut self, positions: &mut [u32], letter: i32) {
        let i = letter.unsigned_abs() as usize - 1;
        let (left, right) = (positions[i], positions[i + 1]);
        let top_left = self.fresh();
        let top_right = self.fresh();
        let crossing = if letter > 0 {
            // under-strand enters bottom right and leaves top left
            Crossing::new([right, top_right, top_left, left], Sign::Positive)
        } else {
            // under-strand enters bottom left and leaves top right
            Crossing::new([left, right, top_right, top_left], Sign::Negative)
        };
        self.crossings.push(crossing);
        positions[i] = top_left;
        positions[i + 1] = top_right;
    }
}

/// Closure of a braid together with the arcs that close it up.
#[derive(Debug, Clone)]
pub struct Closure {
    pub diagram: PlanarDiagram,
    /// Arc passing over the top of the word at each position; `None` for a
    /// strand that meets no crossing (it closes to a free loop).
    pub top_arcs: Vec<Option<u32>>,
}

pub fn braid_closure(b: &BraidWord) -> PlanarDiagram {
    closure_with_sites(b).diagram
}

/// Crossing `k` of the result comes from letter `k` of the word.
pub fn closure_with_sites(b: &BraidWord) -> Closure {
    let k = b.strands();
    let mut positions: Vec<u32> = (1..=k as u32).collect();
    let mut builder = TangleBuilder::new(k as u32 + 1);
    for &l in b.letters() {
        builder.push(&mut positions, l);
    }
    let mut touched = vec![false; k];
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize - 1;
        touched[i] = true;
        touched[i + 1] = true;
    }
    // glue the top of each position back onto its bottom
    let rename: std::collections::HashMap<u32, u32> =
        positions.iter().enumerate().map(|(p, &top)| (top, p as u32 + 1)).collect();
    let crossings: Vec<Crossing> = builder
        .crossings
        .into_iter()
        .map(|c| Crossing::new(c.slots.map(|l| *rename.get(&l).unwrap_or(&l)), c.sign))
        .collect();
    let free_loops = touched.iter().filter(|t| !**t).count() as u32;

    let diagram = if crossings.is_empty() {
        PlanarDiagram::unlink(free_loops).expect("at least one strand")
    } else {
        PlanarDiagram::from_crossings(crossings, free_loops).expect("braid closures are valid diagrams")
    };
    // compaction preserves label order, so the bottom labels 1..k stay the
    // smallest; recover their new names
    let mut used: Vec<u32> = (1..=k as u32).filter(|&p| touched[p as usize - 1]).collect();
    used.sort_unstable();
    let top_arcs = (1..=k as u32).map(|p| used.iter().position(|&u| u == p).map(|i| i as u32 + 1)).collect();
    Closure { diagram, top_arcs }
}

/// Appends `σ_k, σ_(k+1), …` so the braid has `strands` strands; the closure
/// keeps its link type.
pub fn stabilize_to(b: &BraidWord, strands: usize) -> Result<BraidWord> {
    let mut letters = b.letters().to_vec();
    for s in b.strands()..strands {
        letters.push(s as i32);
    }
    BraidWord::new(letters, strands.max(b.strands()))
}
