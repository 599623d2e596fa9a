//! Goeritz matrix of a checkerboard colouring and the Gordon–Litherland
//! correction term.

use serde::Serialize;

use crate::diagram::{PlanarDiagram, Sign};
use crate::error::{KnotError, Result};
use crate::signature::matrix::{self, IntMatrix};

/// One of the two checkerboard colour classes of faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ColorClass {
    /// Class of the face on the right of the arc leaving slot 0 of crossing 0.
    First,
    Second,
}

impl ColorClass {
    pub fn other(self) -> ColorClass {
        match self {
            ColorClass::First => ColorClass::Second,
            ColorClass::Second => ColorClass::First,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoeritzData {
    pub class: ColorClass,
    /// Reduced Goeritz matrix on the faces of `class` (one face dropped).
    pub matrix: IntMatrix,
    /// Gordon–Litherland correction μ.
    pub correction: i64,
}

impl GoeritzData {
    /// Signature in the classical convention (right-handed trefoil = −2).
    pub fn classical_signature(&self) -> i64 {
        matrix::signature(&self.matrix) - self.correction
    }

    pub fn determinant_abs(&self) -> u64 {
        let d = matrix::determinant(&self.matrix);
        let d = if d < num_bigint::BigInt::from(0) { -d } else { d };
        u64::try_from(d).expect("determinant fits in u64")
    }
}

/// Two-colours the faces; returns the colour (0 or 1) of every face.
fn checkerboard(d: &PlanarDiagram) -> Result<(crate::diagram::Faces, Vec<u8>)> {
    let faces = d.faces();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); faces.count];
    for e in d.arc_ends() {
        let right = faces.dart(e.tail.crossing, e.tail.slot);
        let left = faces.corner(e.tail.crossing, e.tail.slot);
        adj[right].push(left);
        adj[left].push(right);
    }
    let mut color = vec![u8::MAX; faces.count];
    for start in 0..faces.count {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut stack = vec![start];
        while let Some(f) = stack.pop() {
            for &g in &adj[f] {
                if color[g] == u8::MAX {
                    color[g] = 1 - color[f];
                    stack.push(g);
                } else if color[g] == color[f] {
                    return Err(KnotError::Inconsistent("faces admit no checkerboard colouring".into()));
                }
            }
        }
    }
    Ok((faces, color))
}

/// Goeritz data for one colour class. The diagram must be a connected knot.
pub fn goeritz(d: &PlanarDiagram, class: ColorClass) -> Result<GoeritzData> {
    d.require_knot()?;
    if d.crossing_count() == 0 {
        return Ok(GoeritzData { class, matrix: vec![], correction: 0 });
    }
    let (faces, color) = checkerboard(d)?;
    let first = color[faces.dart(0, 0)];
    let white = match class {
        ColorClass::First => first,
        ColorClass::Second => 1 - first,
    };
    let white_faces: Vec<usize> = (0..faces.count).filter(|&f| color[f] == white).collect();
    let index = |f: usize| white_faces.iter().position(|&g| g == f).unwrap();
    let n = white_faces.len();
    let mut full = vec![vec![0i64; n]; n];
    let mut correction = 0;
    for (ci, c) in d.crossings().iter().enumerate() {
        // corners (0,1),(2,3) face each other, as do (1,2),(3,0)
        let white_at_01 = color[faces.corner(ci, 0)] == white;
        let (f, g) = if white_at_01 {
            (faces.corner(ci, 0), faces.corner(ci, 2))
        } else {
            (faces.corner(ci, 1), faces.corner(ci, 3))
        };
        // incidence: +1 when the white corners are those swept turning the
        // incoming under-strand counterclockwise onto the over-strand
        let eta: i64 = if white_at_01 { 1 } else { -1 };
        if f != g {
            let (i, j) = (index(f), index(g));
            full[i][j] -= eta;
            full[j][i] -= eta;
            full[i][i] += eta;
            full[j][j] += eta;
        }
        // the oriented smoothing of a positive crossing merges corners (1,2),(3,0)
        let merges_white = match c.sign {
            Sign::Positive => !white_at_01,
            Sign::Negative => white_at_01,
        };
        if !merges_white {
            correction += eta;
        }
    }
    let matrix: IntMatrix = full[1..].iter().map(|r| r[1..].to_vec()).collect();
    Ok(GoeritzData { class, matrix, correction })
}
