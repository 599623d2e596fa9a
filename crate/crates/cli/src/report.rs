//! JSON report assembled by every subcommand.

use serde::Serialize;
use sharpknot::{
    bennequin_bound, jones, render_pd, seifert_genus_upper, signature_goeritz, stats, BraidWord, Certificate,
    DiagramStats, HalfInt, JonesFingerprint, MoveRecord, PlanarDiagram, SBound, SignatureValue, TableMatch,
    UnknottingBounds,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct InputEcho {
    pub kind: &'static str,
    pub text: String,
}

#[derive(Debug, Serialize)]
pub struct SignatureReport {
    pub sigma_paper: i64,
    pub sigma_classical: i64,
}

impl From<SignatureValue> for SignatureReport {
    fn from(s: SignatureValue) -> Self {
        SignatureReport { sigma_paper: s.sigma, sigma_classical: s.classical() }
    }
}

#[derive(Debug, Serialize)]
pub struct JonesReport {
    /// Jones polynomial in `t`, when all powers are whole.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial_t: Option<String>,
    pub fingerprint: JonesFingerprint,
}

impl From<JonesFingerprint> for JonesReport {
    fn from(f: JonesFingerprint) -> Self {
        let polynomial_t = f.integer_powers().map(|p| p.to_string().replace('x', "t"));
        JonesReport { polynomial_t, fingerprint: f }
    }
}

/// Invariants of one diagram. Knot-only quantities are omitted for links.
#[derive(Debug, Serialize)]
pub struct DiagramReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub braid: Option<String>,
    pub pd: String,
    pub stats: DiagramStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus_upper: Option<HalfInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s_bound: Option<SBound>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signature: Option<SignatureReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jones: Option<JonesReport>,
}

impl DiagramReport {
    pub fn new(d: &PlanarDiagram, braid: Option<&BraidWord>, warnings: &mut Vec<String>) -> Self {
        let knot = d.is_knot();
        if !knot {
            warnings.push(format!(
                "diagram has {} components{}; knot invariants omitted",
                d.component_count(),
                if d.is_connected() { "" } else { " and is split" }
            ));
        }
        let jones = match jones(d) {
            Ok(f) => Some(f.into()),
            Err(e) => {
                warnings.push(format!("Jones polynomial skipped: {e}"));
                None
            }
        };
        DiagramReport {
            braid: braid.map(ToString::to_string),
            pd: render_pd(d),
            stats: stats(d),
            genus_upper: seifert_genus_upper(d).ok(),
            s_bound: knot.then(|| bennequin_bound(d).ok()).flatten(),
            signature: knot.then(|| signature_goeritz(d).ok().map(Into::into)).flatten(),
            jones,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Identification {
    /// Matches agree on Jones polynomial, determinant and σ; they do not
    /// prove the knot types are equal.
    pub method: &'static str,
    pub matches: Vec<TableMatch>,
}

impl Identification {
    pub fn new(matches: Vec<TableMatch>) -> Self {
        Identification { method: "fingerprint match", matches }
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: &'static str,
    pub input: InputEcho,
    pub diagram: DiagramReport,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub moves: Vec<MoveRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<DiagramReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<UnknottingBounds>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identification: Option<Identification>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, input: InputEcho, diagram: DiagramReport) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command,
            input,
            diagram,
            moves: vec![],
            threshold: None,
            output: None,
            certificates: vec![],
            bounds: None,
            verdict: None,
            identification: None,
            warnings: vec![],
        }
    }
}
