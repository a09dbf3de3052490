//! Link diagrams in, group presentations out.

mod braid;
mod pd;

use thiserror::Error;

use crate::words::FreeWord;

pub use braid::{
    closed_braid_presentation, core_transport, parse_braid, parse_braid_with_strands,
    transport_labels, two_cable, BraidWord,
};
pub use pd::{
    braid_closure_pd, parse_pd, pd_presentation, pd_presentation_choosing, Crossing, PdCode,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkError {
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("invalid braid: {0}")]
    Braid(String),
    #[error("invalid diagram: {0}")]
    Diagram(String),
}

/// Generators and relators presenting pi_1 of the double branched cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkPresentation {
    pub generator_count: usize,
    pub relators: Vec<FreeWord>,
    /// Generator of the core group that was set to the identity, in the
    /// numbering of the diagram.
    pub killed_generator: usize,
    pub component_count: usize,
}

impl LinkPresentation {
    /// A presentation given directly by relators; the generator count is the
    /// largest index that occurs unless `generator_count` is larger.
    pub fn from_relators(relators: Vec<FreeWord>, generator_count: Option<usize>) -> Self {
        let used = relators
            .iter()
            .map(FreeWord::max_generator)
            .max()
            .unwrap_or(0);
        LinkPresentation {
            generator_count: generator_count.unwrap_or(0).max(used),
            relators,
            killed_generator: 0,
            component_count: 0,
        }
    }

    /// Exponent sums of each relator, one row per relator.
    pub fn abelianized(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| r.exponent_sums(self.generator_count))
            .collect()
    }
}
