use std::ops::RangeInclusive;

use crate::error::KlrwError;

/// Number of punctures `|x|`; fixes the quiver shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuiverConfig {
    punctures: usize,
}

impl QuiverConfig {
    pub fn new(punctures: usize) -> Result<Self, KlrwError> {
        if punctures == 0 {
            return Err(KlrwError::NoPunctures);
        }
        Ok(Self { punctures })
    }

    pub fn punctures(&self) -> usize {
        self.punctures
    }

    /// Object indices `0..=N`.
    pub fn objects(&self) -> RangeInclusive<usize> {
        0..=self.punctures
    }

    /// Braiding indices `1..=N-1`; empty when `N = 1`.
    pub fn braid_indices(&self) -> RangeInclusive<usize> {
        1..=self.punctures - 1
    }

    pub fn check_object(&self, index: usize) -> Result<(), KlrwError> {
        if index > self.punctures {
            return Err(KlrwError::ObjectOutOfRange {
                index,
                punctures: self.punctures,
            });
        }
        Ok(())
    }

    pub fn check_braid_index(&self, index: usize) -> Result<(), KlrwError> {
        if index == 0 || index >= self.punctures {
            return Err(KlrwError::BraidIndexOutOfRange {
                index,
                max: self.punctures - 1,
            });
        }
        Ok(())
    }
}
