use serde::{Deserialize, Serialize};

/// Search counters collected by every solver call.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    /// Branch nodes created (dominating-set colourings and chain splits).
    pub branches: u64,
    /// Branches that survived to the 2-SAT / trouble-free stage.
    pub leaves: u64,
    /// Firings of list propagation rules 1 to 5.
    pub lsac_rules: [u64; 5],
    /// Firings of auxiliary-graph rules 1 to 8.
    pub trouble_rules: [u64; 8],
    /// Colouring options of the auxiliary graph that were tried.
    pub trouble_options: u64,
    /// Wall time in microseconds; left out unless timing was requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_us: Option<u64>,
}

impl Stats {
    pub fn merge(&mut self, other: &Stats) {
        self.branches += other.branches;
        self.leaves += other.leaves;
        for (a, b) in self.lsac_rules.iter_mut().zip(other.lsac_rules) {
            *a += b;
        }
        for (a, b) in self.trouble_rules.iter_mut().zip(other.trouble_rules) {
            *a += b;
        }
        self.trouble_options += other.trouble_options;
    }
}
