//! Positive sharp moves on knot diagrams, exact diagram invariants, and
//! certificates for non-alternation and sharp unknotting numbers.

pub mod bounds;
pub mod braid;
pub mod closure;
pub mod diagram;
pub mod error;
pub mod jones;
pub mod moves;
pub mod pd;
pub mod poly;
pub mod signature;
pub mod stats;
pub mod table;

pub use bounds::{
    bennequin_bound, nonalternating_certificate, theorem1_certificate, theorem1_threshold, theorem2_equality,
    u_sharp_bounds, Certificate, CertificateKind, Quantity, SBound, UnknottingBounds,
};
pub use braid::{parse_braid, BraidWord};
pub use closure::{braid_closure, closure_with_sites, stabilize_to, Closure};
pub use diagram::{Crossing, PlanarDiagram, Sign};
pub use error::{KnotError, Result};
pub use jones::{determinant, jones, jones_polynomial, kauffman_bracket, JonesFingerprint, BRACKET_BUDGET};
pub use moves::{
    braid_top_site, positive_sharp_braid, positive_sharp_diagram, sharp_flip, sharp_flip_with_record,
    sharp_tangle_word, simplify, MoveRecord, SharpSite,
};
pub use pd::{parse_pd, render_pd};
pub use poly::LaurentPoly;
pub use signature::{
    sigma_upper_after_sharps, signature_goeritz, signature_goeritz_with, signature_seifert_oracle, SignatureValue,
};
pub use stats::{seifert_circles, seifert_genus_upper, stats, DiagramStats, HalfInt};
pub use table::{bundled_table, default_table, identify, load_table, parse_table, KnotTable, TableEntry, TableMatch};
