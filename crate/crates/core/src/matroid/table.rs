use super::{elements_of, mask_of, GroundSet, RankOracle};
use crate::error::{Error, Result};

/// Largest ground set whose full rank table is materialized.
pub const TABLE_GUARD: usize = 20;

/// The rank of every subset, materialized once from another oracle.
///
/// Queries become table lookups; used wherever an algorithm ranges over
/// exponentially many subsets of a small ground set.
#[derive(Debug, Clone)]
pub struct RankTable {
    ground: GroundSet,
    ranks: Vec<u8>,
}

impl RankTable {
    pub fn from_oracle<M: RankOracle + ?Sized>(m: &M) -> Result<Self> {
        let n = m.ground_size();
        if n > TABLE_GUARD {
            return Err(Error::guard("rank table", n, TABLE_GUARD));
        }
        let size = 1usize << n;
        let mut ranks = vec![0u8; size];
        for (mask, slot) in ranks.iter_mut().enumerate().skip(1) {
            *slot = m.rank(&elements_of(mask as u64)) as u8;
        }
        Ok(RankTable {
            ground: m.ground().clone(),
            ranks,
        })
    }

    pub fn rank_of_mask(&self, mask: u64) -> usize {
        self.ranks[mask as usize] as usize
    }
}

impl RankOracle for RankTable {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn rank(&self, set: &[usize]) -> usize {
        self.rank_of_mask(mask_of(set))
    }
}
