use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{KnotError, Result};

/// A braid word: letter `k > 0` is the generator σ_k, `k < 0` its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    letters: Vec<i32>,
    strands: usize,
}

impl BraidWord {
    pub fn new(letters: Vec<i32>, strands: usize) -> Result<Self> {
        if strands == 0 {
            return Err(KnotError::InvalidStrands);
        }
        for (i, &l) in letters.iter().enumerate() {
            if l == 0 {
                return Err(KnotError::ZeroLetter { column: i + 1 });
            }
            if l.unsigned_abs() as usize >= strands {
                return Err(KnotError::LetterOutOfRange { letter: l, strands });
            }
        }
        Ok(BraidWord { letters, strands })
    }

    /// Strand count defaults to one more than the largest generator index.
    pub fn from_letters(letters: Vec<i32>) -> Result<Self> {
        let strands = letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0) + 1;
        Self::new(letters, strands)
    }

    pub fn trivial(strands: usize) -> Result<Self> {
        Self::new(vec![], strands)
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    pub fn mirror(&self) -> BraidWord {
        BraidWord { letters: self.letters.iter().map(|l| -l).collect(), strands: self.strands }
    }

    /// Underlying permutation: `perm[p]` is the bottom position reached by
    /// the strand that starts at top-of-word position `p` (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// Number of link components of the closure.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = perm[p];
            }
        }
        count
    }

    pub fn closes_to_knot(&self) -> bool {
        self.closure_components() == 1
    }

    pub(crate) fn with_letters(&self, letters: Vec<i32>) -> Result<Self> {
        Self::new(letters, self.strands)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let default = self.letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0) + 1;
        if default != self.strands {
            write!(f, "strands={};", self.strands)?;
            if !self.letters.is_empty() {
                f.write_str(" ")?;
            }
        }
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parses whitespace-separated signed generator indices with an optional
/// `strands=K;` prefix. Empty text is the trivial braid on one strand.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let mut body = text;
    let mut offset = 0;
    let mut strands = None;

    let trimmed = text.trim_start();
    if let Some(rest) = trimmed.strip_prefix("strands=") {
        let lead = text.len() - trimmed.len();
        let Some(semi) = rest.find(';') else {
            return Err(KnotError::BraidSyntax { column: lead + 1, token: trimmed.to_string() });
        };
        let value = rest[..semi].trim();
        let k: usize = value
            .parse()
            .map_err(|_| KnotError::BraidSyntax { column: lead + "strands=".len() + 1, token: value.to_string() })?;
        strands = Some(k);
        offset = lead + "strands=".len() + semi + 1;
        body = &text[offset..];
    }

    let mut letters = Vec::new();
    let mut pos = 0;
    for token in body.split_whitespace() {
        let at = body[pos..].find(token).unwrap() + pos;
        pos = at + token.len();
        let column = offset + at + 1;
        let value: i32 = token.parse().map_err(|_| KnotError::BraidSyntax { column, token: token.to_string() })?;
        if value == 0 {
            return Err(KnotError::ZeroLetter { column });
        }
        letters.push(value);
    }

    match strands {
        Some(k) => BraidWord::new(letters, k),
        None => BraidWord::from_letters(letters),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_example_word() {
        let b = parse_braid("-1 2 1 3 2").unwrap();
        assert_eq!(b.letters(), &[-1, 2, 1, 3, 2]);
        assert_eq!(b.strands(), 4);
    }

    #[test]
    fn empty_text_is_trivial_braid() {
        let b = parse_braid("").unwrap();
        assert!(b.is_empty());
        assert_eq!(b.strands(), 1);
        assert_eq!(parse_braid("   \n").unwrap().strands(), 1);
    }

    #[test]
    fn zero_letter_rejected() {
        assert_eq!(parse_braid("1 0 2"), Err(KnotError::ZeroLetter { column: 3 }));
    }

    #[test]
    fn strands_override() {
        let b = parse_braid("strands=5; 1 2").unwrap();
        assert_eq!(b.strands(), 5);
        assert_eq!(b.letters(), &[1, 2]);
        assert!(matches!(parse_braid("strands=2; 1 2"), Err(KnotError::LetterOutOfRange { letter: 2, strands: 2 })));
        assert_eq!(parse_braid("strands=3;").unwrap().strands(), 3);
        assert!(matches!(parse_braid("strands=0;"), Err(KnotError::InvalidStrands)));
    }

    #[test]
    fn bad_tokens_report_column() {
        assert_eq!(parse_braid("1 x"), Err(KnotError::BraidSyntax { column: 3, token: "x".into() }));
        assert!(matches!(parse_braid("strands=4 1 2"), Err(KnotError::BraidSyntax { .. })));
    }

    #[test]
    fn display_round_trips() {
        for text in ["-1 2 1 3 2", "strands=5; 1 2", "strands=3;", "1"] {
            let b = parse_braid(text).unwrap();
            assert_eq!(parse_braid(&b.to_string()).unwrap(), b);
        }
    }

    #[test]
    fn closure_components() {
        assert_eq!(parse_braid("1 1 1").unwrap().closure_components(), 1);
        assert_eq!(parse_braid("1 1").unwrap().closure_components(), 2);
        assert_eq!(parse_braid("1 2 3").unwrap().closure_components(), 1);
        assert_eq!(parse_braid("strands=3; 1 1 1").unwrap().closure_components(), 2);
        assert_eq!(BraidWord::trivial(3).unwrap().closure_components(), 3);
    }
}
