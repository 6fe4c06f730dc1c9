//! Partial parking functions and their priority forests.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forest::PriorityForest;
use crate::perm::PartialPermutation;

/// Preferences of `m` cars trying to park on `n` spots: car `k` drives to
/// spot `prefs[k - 1]` and takes the first free spot from there on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPartialParkingFunction")]
pub struct PartialParkingFunction {
    n: usize,
    prefs: Vec<usize>,
}

#[derive(Deserialize)]
struct RawPartialParkingFunction {
    n: usize,
    prefs: Vec<usize>,
}

impl TryFrom<RawPartialParkingFunction> for PartialParkingFunction {
    type Error = Error;
    fn try_from(raw: RawPartialParkingFunction) -> Result<Self> {
        PartialParkingFunction::new(raw.n, raw.prefs)
    }
}

/// Outcome of the parking process.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParkingOutcome {
    /// Whether every car found a spot.
    pub success: bool,
    /// Bird's eye view: spot-indexed word whose entries are the cars,
    /// undefined on free spots.
    pub birds_eye: PartialPermutation,
    /// One `[car, preference, spot]` triple per parked car, in parking order.
    pub blueprint: Vec<[usize; 3]>,
}

/// Lucky cars and total probes of a successful parking process.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParkingStatistics {
    /// Cars that park directly on their preferred spot.
    pub lucky: usize,
    /// Total spots inspected, preferences included.
    pub probes: usize,
}

impl PartialParkingFunction {
    pub fn new(n: usize, prefs: Vec<usize>) -> Result<Self> {
        if prefs.len() > n {
            return Err(Error::InvalidParkingFunction(format!(
                "{} cars cannot park on {n} spots",
                prefs.len()
            )));
        }
        for (k, &p) in prefs.iter().enumerate() {
            if p == 0 || p > n {
                return Err(Error::InvalidParkingFunction(format!(
                    "car {} prefers spot {p}, outside [1, {n}]",
                    k + 1
                )));
            }
        }
        Ok(Self { n, prefs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of cars.
    pub fn m(&self) -> usize {
        self.prefs.len()
    }

    pub fn prefs(&self) -> &[usize] {
        &self.prefs
    }

    pub fn pref(&self, car: usize) -> usize {
        self.prefs[car - 1]
    }

    /// Runs the parking process by linear probing. On failure the returned
    /// outcome still carries the cars parked before the first one that ran
    /// off the end.
    pub fn park(&self) -> ParkingOutcome {
        let mut spot_of = vec![None::<usize>; self.n];
        let mut blueprint = Vec::with_capacity(self.m());
        let mut success = true;
        for (k, &pref) in self.prefs.iter().enumerate() {
            let car = k + 1;
            match (pref..=self.n).find(|&s| spot_of[s - 1].is_none()) {
                Some(spot) => {
                    spot_of[spot - 1] = Some(car);
                    blueprint.push([car, pref, spot]);
                }
                None => {
                    success = false;
                    break;
                }
            }
        }
        let parked = blueprint.len();
        let birds_eye =
            PartialPermutation::new(self.n, parked, spot_of).expect("bird's eye word");
        ParkingOutcome {
            success,
            birds_eye,
            blueprint,
        }
    }

    /// Whether every car parks.
    pub fn parks(&self) -> bool {
        self.park().success
    }

    /// Lucky cars and aggregate probes; errors when some car fails to park.
    pub fn statistics(&self) -> Result<ParkingStatistics> {
        let outcome = self.park();
        if !outcome.success {
            return Err(Error::NotAParkingFunction);
        }
        let lucky = outcome
            .blueprint
            .iter()
            .filter(|[_, pref, spot]| pref == spot)
            .count();
        let probes = outcome
            .blueprint
            .iter()
            .map(|[_, pref, spot]| spot - pref + 1)
            .sum();
        Ok(ParkingStatistics { lucky, probes })
    }

    /// The priority forest of a partial parking function: its vertices are
    /// the spots (plus 0), the free spots and 0 are roots, and an occupied
    /// spot hangs below the spot just left of its car's preference.
    pub fn priority_forest(&self) -> Result<PriorityForest> {
        let outcome = self.park();
        if !outcome.success {
            return Err(Error::NotAParkingFunction);
        }
        let mut parent = vec![None; self.n];
        for spot in 1..=self.n {
            if let Some(car) = outcome.birds_eye.get(spot) {
                parent[spot - 1] = Some(self.pref(car) - 1);
            }
        }
        PriorityForest::new(self.n, parent)
    }

    /// All partial parking functions with `m` cars and `n` spots in which
    /// every car parks, in lexicographic preference order.
    pub fn enumerate_all(m: usize, n: usize) -> Vec<PartialParkingFunction> {
        assert!(m <= n);
        let mut out = Vec::new();
        let mut prefs = vec![1usize; m];
        loop {
            let pf = PartialParkingFunction::new(n, prefs.clone()).unwrap();
            if pf.parks() {
                out.push(pf);
            }
            // Next preference vector in lexicographic order.
            let mut i = m;
            loop {
                if i == 0 {
                    return out;
                }
                if prefs[i - 1] < n {
                    prefs[i - 1] += 1;
                    break;
                }
                prefs[i - 1] = 1;
                i -= 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pf(n: usize, prefs: &[usize]) -> PartialParkingFunction {
        PartialParkingFunction::new(n, prefs.to_vec()).unwrap()
    }

    #[test]
    fn running_example() {
        let p = pf(5, &[2, 4, 2, 1, 3]);
        let outcome = p.park();
        assert!(outcome.success);
        assert_eq!(
            outcome.birds_eye.word(),
            &[Some(4), Some(1), Some(3), Some(2), Some(5)]
        );
        assert_eq!(
            outcome.blueprint,
            vec![[1, 2, 2], [2, 4, 4], [3, 2, 3], [4, 1, 1], [5, 3, 5]]
        );
        let stats = p.statistics().unwrap();
        assert_eq!((stats.lucky, stats.probes), (3, 8));
    }

    #[test]
    fn running_example_prefix() {
        // Bird's eye view after the first three cars: - 1 3 2 -
        let p = pf(5, &[2, 4, 2]);
        let outcome = p.park();
        assert_eq!(
            outcome.birds_eye.word(),
            &[None, Some(1), Some(3), Some(2), None]
        );
    }

    #[test]
    fn prefix_forest() {
        let p = pf(5, &[2, 4, 2]);
        let f = p.priority_forest().unwrap();
        assert_eq!(f.roots(), vec![0, 1, 5]);
        assert_eq!(f.parent(2), Some(1));
        assert_eq!(f.parent(3), Some(1));
        assert_eq!(f.parent(4), Some(3));
    }

    #[test]
    fn failure_reported() {
        let p = pf(2, &[2, 2]);
        let outcome = p.park();
        assert!(!outcome.success);
        assert_eq!(outcome.blueprint, vec![[1, 2, 2]]);
        assert_eq!(p.statistics(), Err(Error::NotAParkingFunction));
        assert_eq!(p.priority_forest(), Err(Error::NotAParkingFunction));
    }

    #[test]
    fn counts_match_forest_counts() {
        for n in 0..=5usize {
            for m in 0..=n {
                assert_eq!(
                    PartialParkingFunction::enumerate_all(m, n).len(),
                    crate::cayley_forest_count(m, n),
                );
            }
        }
    }

    #[test]
    fn statistics_transfer_to_priority_forest() {
        for n in 0..=5usize {
            for m in 0..=n {
                for p in PartialParkingFunction::enumerate_all(m, n) {
                    let f = p.priority_forest().unwrap();
                    let s = p.statistics().unwrap();
                    assert_eq!(s.lucky, f.small_ascents());
                    assert_eq!(s.probes, f.aggregate_diff());
                }
            }
        }
    }

    #[test]
    fn rejects_bad_preferences() {
        assert!(PartialParkingFunction::new(3, vec![0]).is_err());
        assert!(PartialParkingFunction::new(3, vec![4]).is_err());
        assert!(PartialParkingFunction::new(2, vec![1, 1, 1]).is_err());
    }
}
