//! Lower bounds on s, the non-alternating certificate, and bounds on the
//! sharp unknotting number u# and the unknotting number u.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::diagram::PlanarDiagram;
use crate::error::{KnotError, Result};
use crate::signature::{sigma_upper_after_sharps, signature_goeritz, SignatureValue};
use crate::stats::seifert_circles;

/// A certified lower bound for s(K).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SBound {
    pub lower: i64,
    pub source: String,
    /// The bound is attained (the witnessing diagram is positive).
    pub exact: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UnknottingBounds {
    pub u_sharp_lower: u64,
    pub u_sharp_upper: Option<u64>,
    pub u_lower: u64,
    pub u_upper: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    Theorem1,
    Corollary1,
    Theorem2Equality,
    NonAlternating,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Quantity {
    pub value: i64,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub inputs: BTreeMap<String, String>,
    pub quantities: BTreeMap<String, Quantity>,
    pub verdict: bool,
    pub narrative: Vec<String>,
}

impl Certificate {
    fn new(kind: CertificateKind) -> Self {
        Certificate { kind, inputs: BTreeMap::new(), quantities: BTreeMap::new(), verdict: false, narrative: vec![] }
    }

    fn put(&mut self, name: &str, value: i64, source: &str) {
        self.quantities.insert(name.to_string(), Quantity { value, source: source.to_string() });
    }

    pub fn quantity(&self, name: &str) -> Option<i64> {
        self.quantities.get(name).map(|q| q.value)
    }

    /// Recomputes the verdict from the stored quantities alone; `None` when a
    /// needed quantity is missing.
    pub fn recompute_verdict(&self) -> Option<bool> {
        let q = |n: &str| self.quantity(n);
        Some(match self.kind {
            CertificateKind::NonAlternating => q("bennequin")? > q("sigma")?,
            CertificateKind::Theorem1 | CertificateKind::Corollary1 => {
                q("n")? >= q("threshold")? && q("bennequin_out")? > q("sigma_upper_out")?
            }
            CertificateKind::Theorem2Equality => {
                let equal = 8 * q("u_sharp")? == q("s")?.abs();
                let branch_ok = q("fingerprint_trivial")? == 1 || q("s_lower")? > q("sigma")?;
                equal && branch_ok
            }
        })
    }

    /// True when the stored verdict matches its recomputation.
    pub fn is_consistent(&self) -> bool {
        self.recompute_verdict() == Some(self.verdict)
    }
}

/// `1 + w − O` for a connected knot diagram.
pub fn bennequin_bound(d: &PlanarDiagram) -> Result<SBound> {
    d.require_knot()?;
    let lower = 1 + d.writhe() - seifert_circles(d) as i64;
    let exact = d.is_positive();
    let source = format!("1+w-O on a {}-crossing {}diagram", d.crossing_count(), if exact { "positive " } else { "" });
    Ok(SBound { lower, source, exact })
}

/// Smallest `n` with `n > genus_upper − (1 + w − O)/2`.
pub fn theorem1_threshold(d: &PlanarDiagram, genus_upper: u64) -> Result<u64> {
    let b = bennequin_bound(d)?.lower;
    // b is even for knots, so the threshold is an integer
    let half = b.div_euclid(2);
    if (genus_upper as i64) < half {
        return Err(KnotError::InvalidGenusBound { genus: genus_upper as i64, half_bound: half });
    }
    Ok((genus_upper as i64 - half + 1) as u64)
}

/// Certificate that `n` positive sharp moves on `d` give a non-alternating knot.
/// It is a corollary-type certificate when `d` is positive and `genus_upper`
/// is the genus of its Seifert surface.
pub fn theorem1_certificate(d: &PlanarDiagram, genus_upper: u64, n: u64) -> Result<Certificate> {
    let s = bennequin_bound(d)?;
    let threshold = theorem1_threshold(d, genus_upper)?;
    let exact_genus = s.exact && 2 * genus_upper as i64 == s.lower;
    let mut c = Certificate::new(if exact_genus { CertificateKind::Corollary1 } else { CertificateKind::Theorem1 });
    c.inputs.insert("diagram".into(), crate::pd::render_pd(d));
    c.inputs.insert("n".into(), n.to_string());
    c.put("w", d.writhe(), "writhe of the input diagram");
    c.put("O", seifert_circles(d) as i64, "Seifert circles of the input diagram");
    c.put("genus_upper", genus_upper as i64, "supplied upper bound for g(K)");
    c.put("bennequin", s.lower, "bennequin_bound = 1+w-O");
    c.put("threshold", threshold as i64, "theorem1_threshold");
    c.put("n", n as i64, "number of positive sharp moves");
    let b_out = s.lower + 8 * n as i64;
    let sigma_up = sigma_upper_after_sharps(2 * genus_upper as i64, n);
    c.put("bennequin_out", b_out, "each positive sharp move adds 8 to w and keeps O");
    c.put("sigma_upper_out", sigma_up, "sigma_upper_after_sharps(2g, n)");
    c.verdict = c.recompute_verdict().expect("all quantities present");
    c.narrative = vec![
        format!("1+w-O = 1+{}-{} = {} on the input diagram", d.writhe(), seifert_circles(d), s.lower),
        format!("threshold: n > {} - {}/2, so n >= {}", genus_upper, s.lower, threshold),
        format!("after {n} moves: s >= {b_out} and sigma <= 2*{genus_upper} + 6*{n} = {sigma_up}"),
        if c.verdict {
            format!("{b_out} > {sigma_up}, so s != sigma and the output is non-alternating")
        } else {
            "the chain does not separate s from sigma; no conclusion".to_string()
        },
    ];
    Ok(c)
}

/// Fires when `1 + w − O > σ`: an alternating knot has s = σ, and s ≥ 1 + w − O.
pub fn nonalternating_certificate(d: &PlanarDiagram) -> Result<Certificate> {
    let s = bennequin_bound(d)?;
    let sigma = signature_goeritz(d)?;
    let mut c = Certificate::new(CertificateKind::NonAlternating);
    c.inputs.insert("diagram".into(), crate::pd::render_pd(d));
    c.put("w", d.writhe(), "writhe of the diagram");
    c.put("O", seifert_circles(d) as i64, "Seifert circles of the diagram");
    c.put("bennequin", s.lower, "bennequin_bound = 1+w-O");
    c.put("sigma", sigma.sigma, "signature_goeritz");
    c.verdict = c.recompute_verdict().expect("all quantities present");
    c.narrative = vec![
        format!("s >= 1+w-O = {}", s.lower),
        format!("sigma = {}", sigma.sigma),
        if c.verdict {
            format!("{} > {}: s != sigma, so the knot is not alternating", s.lower, sigma.sigma)
        } else {
            "1+w-O <= sigma: no conclusion".to_string()
        },
    ];
    Ok(c)
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

pub fn u_sharp_bounds(s: &SBound, sigma: SignatureValue, witness_moves: Option<u64>) -> Result<UnknottingBounds> {
    let s_abs = if s.exact {
        s.lower.unsigned_abs()
    } else if s.lower >= 0 {
        s.lower as u64
    } else {
        return Err(KnotError::NegativeSBound(s.lower));
    };
    let u_sharp_lower = ceil_div(s_abs, 8).max(ceil_div(sigma.sigma.unsigned_abs(), 6));
    if let Some(w) = witness_moves {
        if w < u_sharp_lower {
            return Err(KnotError::InconsistentWitness { witness: w, lower: u_sharp_lower });
        }
    }
    Ok(UnknottingBounds {
        u_sharp_lower,
        u_sharp_upper: witness_moves,
        u_lower: ceil_div(s_abs, 2),
        u_upper: witness_moves.map(|w| 4 * w),
    })
}

/// Checks `u# = |s|/8`. Needs u# pinned, and s pinned either by an exact
/// bound or by `lower = 8·u#` (since s ≤ |s| ≤ 8u#).
pub fn theorem2_equality(
    bounds: &UnknottingBounds,
    s: &SBound,
    sigma: SignatureValue,
    fingerprint_trivial: bool,
) -> Result<Certificate> {
    let u_sharp = match bounds.u_sharp_upper {
        Some(u) if u == bounds.u_sharp_lower => u,
        _ => {
            return Err(KnotError::BoundsNotPinned(format!(
                "u# is only known to lie in [{}, {}]",
                bounds.u_sharp_lower,
                bounds.u_sharp_upper.map_or("?".to_string(), |u| u.to_string())
            )))
        }
    };
    let sandwich = s.lower >= 0 && s.lower as u64 == 8 * u_sharp;
    if !s.exact && !sandwich {
        return Err(KnotError::BoundsNotPinned(format!("s is only known to lie in [{}, {}]", s.lower, 8 * u_sharp)));
    }
    let mut c = Certificate::new(CertificateKind::Theorem2Equality);
    c.inputs.insert("s_source".into(), s.source.clone());
    c.put("s_lower", s.lower, "bennequin_bound");
    c.put("s", s.lower, if s.exact { "exact: positive diagram" } else { "pinned: 1+w-O = 8 u#" });
    c.put("u_sharp", u_sharp as i64, "lower bound max(|s|/8, |sigma|/6) meets the witness");
    c.put("sigma", sigma.sigma, "signature_goeritz");
    c.put("fingerprint_trivial", fingerprint_trivial as i64, "fingerprint-trivial: Jones polynomial 1 and sigma 0");
    c.verdict = c.recompute_verdict().expect("all quantities present");
    c.narrative = vec![format!("s = {}, u# = {}", s.lower, u_sharp)];
    if 8 * u_sharp == s.lower.unsigned_abs() {
        c.put("u", 4 * u_sharp as i64, "u = 4 u# when u# = |s|/8");
        c.narrative.push(format!("u# = |s|/8, hence u = 4u# = {}", 4 * u_sharp));
        c.narrative.push(if fingerprint_trivial {
            "trivial branch (fingerprint-trivial)".to_string()
        } else {
            format!("non-alternating branch: s = {} > sigma = {}", s.lower, sigma.sigma)
        });
    } else {
        c.narrative.push(format!("8u# = {} != |s| = {}: equality fails", 8 * u_sharp, s.lower.abs()));
    }
    Ok(c)
}
