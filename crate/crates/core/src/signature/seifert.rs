//! Seifert matrix of the surface built from a braid closure: one disk per
//! strand, one twisted band per letter. Used as an independent signature
//! oracle for the Goeritz computation.

use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{KnotError, Result};
use crate::signature::matrix::{self, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertMatrix {
    pub matrix: IntMatrix,
    pub genus: usize,
}

impl SeifertMatrix {
    /// Signature of `V + Vᵀ` (classical convention, right-handed trefoil = −2).
    pub fn classical_signature(&self) -> i64 {
        matrix::signature(&symmetrized(&self.matrix))
    }
}

pub fn symmetrized(v: &IntMatrix) -> IntMatrix {
    let n = v.len();
    (0..n).map(|i| (0..n).map(|j| v[i][j] + v[j][i]).collect()).collect()
}

/// A loop through two consecutive bands of the same generator.
struct Loop {
    generator: usize,
    start: usize,
    end: usize,
}

/// Seifert matrix for the closure of `b`, which must be a knot.
pub fn seifert_matrix(b: &BraidWord) -> Result<SeifertMatrix> {
    let components = b.closure_components();
    if components != 1 {
        return Err(KnotError::NotAKnot { components });
    }
    let letters = b.letters();
    let sign = |p: usize| letters[p].signum() as i64;
    let mut loops = Vec::new();
    for g in 1..b.strands() {
        let at: Vec<usize> = (0..letters.len()).filter(|&p| letters[p].unsigned_abs() as usize == g).collect();
        for w in at.windows(2) {
            loops.push(Loop { generator: g, start: w[0], end: w[1] });
        }
    }
    let n = loops.len();
    let mut v = vec![vec![0i64; n]; n];
    for a in 0..n {
        let la = &loops[a];
        v[a][a] = -(sign(la.start) + sign(la.end)) / 2;
        for b in 0..n {
            let lb = &loops[b];
            if la.generator == lb.generator && la.end == lb.start {
                // consecutive loops share one band
                if sign(la.end) > 0 {
                    v[a][b] = 1;
                } else {
                    v[b][a] = -1;
                }
            } else if lb.generator == la.generator + 1 && la.start < lb.start && lb.start < la.end && la.end < lb.end {
                v[b][a] = 1;
            } else if lb.generator == la.generator + 1 && lb.start < la.start && la.start < lb.end && lb.end < la.end {
                v[a][b] = -1;
            }
        }
    }
    Ok(SeifertMatrix { matrix: v, genus: n / 2 })
}
