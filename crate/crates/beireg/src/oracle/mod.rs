//! Brute-force regularity oracle.
//!
//! `reg(S/J_G)` equals the regularity of the squarefree lexicographic
//! initial ideal of the binomial edge ideal (the initial ideal being
//! squarefree makes the transfer exact), so the oracle computes: admissible
//! paths -> initial ideal -> Hochster's formula over GF(p). It shares no
//! logic with the combinatorial bounds and serves as their ground truth on
//! small instances.

mod hochster;
mod homology;
mod paths;

pub use hochster::{ideal_betti_table, ideal_regularity, BettiEntry, BettiTable};
pub use homology::reduced_homology_dims;
pub use paths::{
    admissible_paths, initial_ideal, var_symbol, AdmissiblePath, SquarefreeMonomialIdeal,
};

use crate::graph::SimpleGraph;
use thiserror::Error;

/// Bitmask representation limits every computation to 64 ring variables.
pub const HARD_VAR_LIMIT: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph needs {needed} ring variables, over the cap of {cap}")]
    TooManyVariables { needed: usize, cap: usize },
    #[error("lcm lattice exceeded the cap of {cap} elements")]
    LatticeTooLarge { cap: usize },
    #[error("characteristic {0} is not a prime")]
    NotPrime(u64),
    #[error("characteristic {0} exceeds the supported limit 2^31 - 1")]
    CharacteristicTooLarge(u64),
}

/// Oracle limits and the homology coefficient field GF(p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConfig {
    /// Prime field characteristic.
    pub characteristic: u64,
    /// Maximum number of ring variables (2 per graph vertex), at most 64.
    pub max_vars: usize,
    /// Maximum size of the lcm lattice.
    pub max_lattice: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            characteristic: 32003,
            max_vars: 20,
            max_lattice: 2_000_000,
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl OracleConfig {
    pub(crate) fn validate(&self) -> Result<(), OracleError> {
        if self.characteristic > (1 << 31) - 1 {
            return Err(OracleError::CharacteristicTooLarge(self.characteristic));
        }
        if !is_prime(self.characteristic) {
            return Err(OracleError::NotPrime(self.characteristic));
        }
        Ok(())
    }

    fn check_graph(&self, g: &SimpleGraph) -> Result<(), OracleError> {
        let needed = 2 * g.n();
        let cap = self.max_vars.min(HARD_VAR_LIMIT);
        if needed > cap {
            return Err(OracleError::TooManyVariables { needed, cap });
        }
        Ok(())
    }
}

/// Ground-truth `reg(S/J_G)` for any simple graph within the size caps.
/// Edgeless graphs give 0; disconnected graphs are fine (regularity is
/// additive over variable-disjoint pieces, which the lattice machinery
/// reproduces by itself).
pub fn oracle_reg(g: &SimpleGraph, cfg: &OracleConfig) -> Result<usize, OracleError> {
    cfg.validate()?;
    cfg.check_graph(g)?;
    ideal_regularity(&initial_ideal(g), cfg)
}

/// `reg(S/J_G)` together with the full nonzero Betti table of the initial
/// ideal's quotient (computed without pruning).
pub fn oracle_betti(g: &SimpleGraph, cfg: &OracleConfig) -> Result<BettiTable, OracleError> {
    cfg.validate()?;
    cfg.check_graph(g)?;
    ideal_betti_table(&initial_ideal(g), cfg)
}
