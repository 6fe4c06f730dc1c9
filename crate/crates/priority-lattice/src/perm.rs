//! Partial permutations between integer intervals, written in one-line
//! notation with `-` (here `None`) marking positions outside the domain.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An injective partial map from `[domain]` to `[codomain]` (both 1-indexed).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPartialPermutation")]
pub struct PartialPermutation {
    domain: usize,
    codomain: usize,
    word: Vec<Option<usize>>,
}

#[derive(Deserialize)]
struct RawPartialPermutation {
    domain: usize,
    codomain: usize,
    word: Vec<Option<usize>>,
}

impl TryFrom<RawPartialPermutation> for PartialPermutation {
    type Error = crate::error::Error;
    fn try_from(raw: RawPartialPermutation) -> Result<Self> {
        PartialPermutation::new(raw.domain, raw.codomain, raw.word)
    }
}

impl PartialPermutation {
    /// Builds a partial permutation from its one-line word.
    /// `word[i]` is the image of position `i + 1`, or `None` when undefined.
    pub fn new(domain: usize, codomain: usize, word: Vec<Option<usize>>) -> Result<Self> {
        if word.len() != domain {
            return Err(Error::InvalidPermutation(format!(
                "word length {} differs from domain size {domain}",
                word.len()
            )));
        }
        let mut seen = vec![false; codomain + 1];
        for v in word.iter().flatten() {
            if *v == 0 || *v > codomain {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} outside [1, {codomain}]"
                )));
            }
            if seen[*v] {
                return Err(Error::InvalidPermutation(format!("repeated value {v}")));
            }
            seen[*v] = true;
        }
        Ok(Self {
            domain,
            codomain,
            word,
        })
    }

    /// The identity permutation on `[n]`.
    pub fn identity(n: usize) -> Self {
        Self {
            domain: n,
            codomain: n,
            word: (1..=n).map(Some).collect(),
        }
    }

    /// The everywhere-undefined map from `[domain]` to `[codomain]`.
    pub fn empty(domain: usize, codomain: usize) -> Self {
        Self {
            domain,
            codomain,
            word: vec![None; domain],
        }
    }

    pub fn domain_size(&self) -> usize {
        self.domain
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain
    }

    pub fn word(&self) -> &[Option<usize>] {
        &self.word
    }

    /// Image of position `pos` (1-indexed), if defined.
    pub fn get(&self, pos: usize) -> Option<usize> {
        self.word.get(pos.checked_sub(1)?).copied().flatten()
    }

    /// Positions of `[domain]` where the map is defined, in increasing order.
    pub fn defined_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.word
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.map(|_| i + 1))
    }

    /// Set of values taken by the map.
    pub fn image(&self) -> BTreeSet<usize> {
        self.word.iter().flatten().copied().collect()
    }

    pub fn is_total(&self) -> bool {
        self.word.iter().all(Option::is_some)
    }

    /// The inverse partial permutation, obtained by reversing every edge of
    /// the digraph of the map.
    pub fn invert(&self) -> Self {
        let mut word = vec![None; self.codomain];
        for (i, v) in self.word.iter().enumerate() {
            if let Some(v) = v {
                word[v - 1] = Some(i + 1);
            }
        }
        Self {
            domain: self.codomain,
            codomain: self.domain,
            word,
        }
    }

    /// Records: left-to-right maxima of each maximal contiguous defined
    /// subword. For example `2-143` has records `{1, 2, 4}`.
    pub fn records(&self) -> BTreeSet<usize> {
        let mut records = BTreeSet::new();
        let mut block_max: Option<usize> = None;
        for v in &self.word {
            match v {
                Some(v) => {
                    if block_max.is_none_or(|m| *v > m) {
                        records.insert(*v);
                        block_max = Some(*v);
                    }
                }
                None => block_max = None,
            }
        }
        records
    }

    /// Number of defined pairs of positions appearing out of order.
    pub fn inversions(&self) -> usize {
        let defined: Vec<usize> = self.word.iter().flatten().copied().collect();
        let mut count = 0;
        for i in 0..defined.len() {
            for j in i + 1..defined.len() {
                if defined[i] > defined[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for PartialPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match v {
                Some(v) => write!(f, "{v}")?,
                None => write!(f, "-")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(domain: usize, codomain: usize, word: &[i64]) -> PartialPermutation {
        let word = word
            .iter()
            .map(|&v| if v < 0 { None } else { Some(v as usize) })
            .collect();
        PartialPermutation::new(domain, codomain, word).unwrap()
    }

    #[test]
    fn invert_fig1_traversal() {
        // omega_F = "- - 4 1 3 - - 2" inverts to "4 8 5 3".
        let p = perm(8, 4, &[-1, -1, 4, 1, 3, -1, -1, 2]);
        let inv = p.invert();
        assert_eq!(inv, perm(4, 8, &[4, 8, 5, 3]));
        assert_eq!(inv.invert(), p);
    }

    #[test]
    fn invert_identity_and_empty() {
        let id = PartialPermutation::identity(3);
        assert_eq!(id.invert(), id);
        let empty = PartialPermutation::empty(5, 5);
        assert_eq!(empty.invert(), empty);
    }

    #[test]
    fn invert_composes_to_identity_on_image() {
        let p = perm(8, 4, &[-1, -1, 4, 1, 3, -1, -1, 2]);
        let inv = p.invert();
        for pos in p.defined_positions() {
            let v = p.get(pos).unwrap();
            assert_eq!(inv.get(v), Some(pos));
        }
    }

    #[test]
    fn records_examples() {
        assert_eq!(
            perm(5, 4, &[2, -1, 1, 4, 3]).records(),
            BTreeSet::from([1, 2, 4])
        );
        assert_eq!(
            perm(3, 3, &[1, 2, 3]).records(),
            BTreeSet::from([1, 2, 3])
        );
        assert_eq!(perm(3, 3, &[3, 2, 1]).records(), BTreeSet::from([3]));
    }

    #[test]
    fn records_invariant_under_right_padding() {
        let p = perm(5, 4, &[2, -1, 1, 4, 3]);
        let mut padded_word = p.word().to_vec();
        padded_word.extend([None, None]);
        let padded = PartialPermutation::new(7, 4, padded_word).unwrap();
        assert_eq!(p.records(), padded.records());
    }

    #[test]
    fn rejects_repeats_and_out_of_range() {
        assert!(PartialPermutation::new(2, 2, vec![Some(1), Some(1)]).is_err());
        assert!(PartialPermutation::new(2, 2, vec![Some(3), None]).is_err());
        assert!(PartialPermutation::new(2, 2, vec![Some(1)]).is_err());
    }

    #[test]
    fn inversions_counts_defined_pairs() {
        assert_eq!(perm(5, 4, &[-1, 4, 1, -1, 3]).inversions(), 2);
        assert_eq!(PartialPermutation::identity(4).inversions(), 0);
    }
}
