//! The bijections between saturated chains, ordered forests, and partial
//! parking functions, and the forest weary bijection obtained by composing
//! them.

use crate::error::{Error, Result};
use crate::forest::{OrderedForest, ParentRef, PriorityForest};
use crate::lattice::chain_from_label_word;
use crate::parking::PartialParkingFunction;
use crate::perm::PartialPermutation;

/// Label word of a saturated chain of forests, starting anywhere: the k-th
/// letter is the child vertex of the k-th added edge.
pub fn jordan_holder_word(chain: &[PriorityForest]) -> Result<PartialPermutation> {
    if chain.is_empty() {
        return Err(Error::NotSaturated);
    }
    let n = chain[0].n();
    let mut word = Vec::with_capacity(chain.len() - 1);
    for pair in chain.windows(2) {
        let (lo, hi) = (&pair[0], &pair[1]);
        if !hi.contains(lo) || hi.edge_count() != lo.edge_count() + 1 {
            return Err(Error::NotSaturated);
        }
        let child = (1..=n)
            .find(|&v| lo.parent(v).is_none() && hi.parent(v).is_some())
            .expect("one added edge");
        word.push(Some(child));
    }
    PartialPermutation::new(word.len(), n, word)
}

fn check_complete(chain: &[PriorityForest]) -> Result<&PriorityForest> {
    let top = chain.last().ok_or(Error::NotSaturated)?;
    if chain[0].edge_count() != 0 {
        return Err(Error::NotSaturated);
    }
    Ok(top)
}

/// Chain to ordered forest: relabel the top of the chain by the inverse of
/// its label word.
pub fn phi(chain: &[PriorityForest]) -> Result<OrderedForest> {
    let top = check_complete(chain)?;
    let lambda = jordan_holder_word(chain)?;
    top.apply_relabeling(&lambda)
}

/// Ordered forest to chain: build up the priority forest in visit order.
pub fn phi_inverse(f: &OrderedForest) -> Vec<PriorityForest> {
    let p = f.priority_forest();
    let lambda = f.priority_search().word.invert();
    chain_from_label_word(&p, &lambda).expect("visit order is a label word")
}

/// Chain to partial parking function: car k prefers the shifted parent of
/// the k-th added vertex.
pub fn psi(chain: &[PriorityForest]) -> Result<PartialParkingFunction> {
    let top = check_complete(chain)?;
    let lambda = jordan_holder_word(chain)?;
    let prefs = (1..=lambda.domain_size())
        .map(|k| top.shifted_parent(lambda.get(k).unwrap()).unwrap())
        .collect();
    PartialParkingFunction::new(top.n(), prefs)
}

/// Partial parking function to chain: add the occupied spots in the order
/// the cars arrive.
pub fn psi_inverse(pf: &PartialParkingFunction) -> Result<Vec<PriorityForest>> {
    let p = pf.priority_forest()?;
    let lambda = pf.park().birds_eye.invert();
    chain_from_label_word(&p, &lambda).map_err(|_| Error::NotAParkingFunction)
}

/// The forest weary bijection: each car heads to the spot right after its
/// parent's visit step; cars hanging below a root head to that component's
/// entry point.
pub fn weary(f: &OrderedForest) -> PartialParkingFunction {
    let traversal = f.priority_search();
    let entry = f.entry_points();
    let prefs = (1..=f.m())
        .map(|i| match f.parent_of(i) {
            ParentRef::Label(l) => traversal.visit_time[l - 1] + 1,
            ParentRef::Root(j) => entry[j],
        })
        .collect();
    PartialParkingFunction::new(f.n(), prefs).expect("weary preferences are in range")
}
