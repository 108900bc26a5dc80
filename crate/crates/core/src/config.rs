use serde::{Deserialize, Serialize};

use crate::ideals::DEFAULT_MAX_GENERATORS;
use crate::linalg::DEFAULT_MAX_ENTRY_BITS;

/// Resource limits. Tripping any of them yields [`crate::Error::Resource`]
/// instead of running out of memory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Guards {
    /// Minimal generators allowed for a power `I^h`.
    pub max_generators: usize,
    /// Elements allowed in an lcm-lattice.
    pub max_lattice: usize,
    /// Bit length allowed for any integer during exact elimination.
    pub max_entry_bits: u64,
    /// Faces allowed in a single complex handed to the homology engine.
    pub max_faces: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_generators: DEFAULT_MAX_GENERATORS,
            max_lattice: 2_000_000,
            max_entry_bits: DEFAULT_MAX_ENTRY_BITS,
            max_faces: 20_000_000,
        }
    }
}
