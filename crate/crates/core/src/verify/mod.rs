//! Isomorph-free enumeration, bound-verification campaigns, graph6 file
//! ingestion and the configuration auditor.

mod audit;
mod campaign;
mod canon;
mod enumerate;
mod ingest;

pub use audit::{audit_config, AuditCase, ConfigAudit, Launch, Verdict};
pub use campaign::{
    campaign_graphs, run_campaign, verify_bound, Aggregate, CampaignSpec, ClassFilter, GraphRecord, Mode,
    OrderSummary, TacticOutcome, VerificationReport, Violation, DEFAULT_DENSITY,
};
pub use canon::{are_isomorphic, canonical_form, Canonical, CANON_SCOPE};
pub use enumerate::{alpha_at_most, enumerate_all, enumerate_graphs, Enumeration, ENUMERATION_SCOPE};
pub use ingest::{collect_graphs, Collected, ingest_graph6_file, ingest_graph6_stream, Graph6Lines, LineError};
