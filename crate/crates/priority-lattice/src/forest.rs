//! Ordered forests, priority forests, and the priority-first search.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::PartialPermutation;

/// Parent of a labeled node in an ordered forest: either another label in
/// `[m]` or the index of one of the `n - m + 1` roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParentRef {
    Label(usize),
    Root(usize),
}

/// A rooted forest with `n + 1` nodes and `m` edges whose component trees
/// `T_0, ..., T_{n-m}` are totally ordered. Roots are unlabeled and carry
/// the index of their tree; the non-roots are labeled by `[m]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawOrderedForest")]
pub struct OrderedForest {
    n: usize,
    m: usize,
    parent_of: Vec<ParentRef>,
}

#[derive(Deserialize)]
struct RawOrderedForest {
    n: usize,
    m: usize,
    parent_of: Vec<ParentRef>,
}

impl TryFrom<RawOrderedForest> for OrderedForest {
    type Error = Error;
    fn try_from(raw: RawOrderedForest) -> Result<Self> {
        OrderedForest::new(raw.n, raw.m, raw.parent_of)
    }
}

/// Result of a priority-first search on an ordered forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Traversal {
    /// The priority traversal: positions are visit steps `1..=n`, values are
    /// labels, roots leave their step undefined.
    pub word: PartialPermutation,
    /// Visit step of each label (index `label - 1`).
    pub visit_time: Vec<usize>,
    /// Visit step of each root index; root 0 is visited at step 0.
    pub root_time: Vec<usize>,
}

/// Priority statistics of an ordered forest together with the matching
/// statistics of its priority forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestStatistics {
    pub sasc: usize,
    pub diff: usize,
    pub psa: usize,
    pub wait: usize,
    pub records: BTreeSet<usize>,
}

impl OrderedForest {
    pub fn new(n: usize, m: usize, parent_of: Vec<ParentRef>) -> Result<Self> {
        if m > n {
            return Err(Error::InvalidOrderedForest(format!(
                "edge count {m} exceeds {n}"
            )));
        }
        if parent_of.len() != m {
            return Err(Error::InvalidOrderedForest(format!(
                "parent_of has {} entries, expected {m}",
                parent_of.len()
            )));
        }
        for (i, p) in parent_of.iter().enumerate() {
            match p {
                ParentRef::Label(l) => {
                    if *l == 0 || *l > m {
                        return Err(Error::InvalidOrderedForest(format!(
                            "label {l} outside [1, {m}]"
                        )));
                    }
                    if *l == i + 1 {
                        return Err(Error::InvalidOrderedForest(format!(
                            "label {l} is its own parent"
                        )));
                    }
                }
                ParentRef::Root(r) => {
                    if *r > n - m {
                        return Err(Error::InvalidOrderedForest(format!(
                            "root index {r} outside [0, {}]",
                            n - m
                        )));
                    }
                }
            }
        }
        // Following parent links must reach a root from every label.
        for start in 1..=m {
            let mut steps = 0;
            let mut cur = start;
            loop {
                match parent_of[cur - 1] {
                    ParentRef::Root(_) => break,
                    ParentRef::Label(l) => {
                        cur = l;
                        steps += 1;
                        if steps > m {
                            return Err(Error::InvalidOrderedForest(format!(
                                "cycle through label {start}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(Self { n, m, parent_of })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn parent_of(&self, label: usize) -> ParentRef {
        self.parent_of[label - 1]
    }

    /// Index of the component tree containing the given label.
    pub fn tree_of_label(&self, label: usize) -> usize {
        let mut cur = label;
        loop {
            match self.parent_of[cur - 1] {
                ParentRef::Root(r) => return r,
                ParentRef::Label(l) => cur = l,
            }
        }
    }

    /// Sizes `t_j = |T_j|` of the component trees, roots included.
    pub fn tree_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![1usize; self.n - self.m + 1];
        for label in 1..=self.m {
            sizes[self.tree_of_label(label)] += 1;
        }
        sizes
    }

    /// Entry points `e_k = 1 + sum_{j<k} t_j` of the forest weary parking
    /// process.
    pub fn entry_points(&self) -> Vec<usize> {
        let sizes = self.tree_sizes();
        let mut entry = Vec::with_capacity(sizes.len());
        let mut acc = 1;
        for t in sizes {
            entry.push(acc);
            acc += t;
        }
        entry
    }

    fn children_tables(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let mut of_label = vec![Vec::new(); self.m];
        let mut of_root = vec![Vec::new(); self.n - self.m + 1];
        for label in 1..=self.m {
            match self.parent_of[label - 1] {
                ParentRef::Label(l) => of_label[l - 1].push(label),
                ParentRef::Root(r) => of_root[r].push(label),
            }
        }
        (of_label, of_root)
    }

    /// Runs the priority-first search: at every step the unblocked node with
    /// the smallest label is visited and its children become unblocked; once
    /// a component tree is exhausted the next root is read. The visit of the
    /// first root is not recorded.
    pub fn priority_search(&self) -> Traversal {
        let (children_of_label, children_of_root) = self.children_tables();
        let mut word = vec![None; self.n];
        let mut visit_time = vec![0usize; self.m];
        let mut root_time = vec![0usize; self.n - self.m + 1];
        let mut unblocked: BTreeSet<usize> = BTreeSet::new();

        unblocked.extend(&children_of_root[0]);
        let mut next_root = 1;
        for step in 1..=self.n {
            if let Some(&label) = unblocked.iter().next() {
                unblocked.remove(&label);
                word[step - 1] = Some(label);
                visit_time[label - 1] = step;
                unblocked.extend(&children_of_label[label - 1]);
            } else {
                root_time[next_root] = step;
                unblocked.extend(&children_of_root[next_root]);
                next_root += 1;
            }
        }
        debug_assert!(unblocked.is_empty());
        debug_assert_eq!(next_root, self.n - self.m + 1);
        let word = PartialPermutation::new(self.n, self.m, word).expect("traversal word");
        Traversal {
            word,
            visit_time,
            root_time,
        }
    }

    /// Relabels every node by its visit step (the first root becoming 0),
    /// producing the priority forest of this ordered forest.
    pub fn priority_forest(&self) -> PriorityForest {
        let traversal = self.priority_search();
        let node_vertex = |p: ParentRef| match p {
            ParentRef::Label(l) => traversal.visit_time[l - 1],
            ParentRef::Root(r) => traversal.root_time[r],
        };
        let mut parent = vec![None; self.n];
        for label in 1..=self.m {
            let vertex = traversal.visit_time[label - 1];
            parent[vertex - 1] = Some(node_vertex(self.parent_of[label - 1]));
        }
        PriorityForest::new(self.n, parent).expect("visit relabeling is a priority forest")
    }

    /// Priority statistics: `psa` counts nodes visited immediately after
    /// their parent, `wait` sums the steps each node spends unblocked before
    /// its visit, and records are nodes whose label dominates their root path.
    pub fn statistics(&self) -> ForestStatistics {
        let traversal = self.priority_search();
        let node_time = |p: ParentRef| match p {
            ParentRef::Label(l) => traversal.visit_time[l - 1],
            ParentRef::Root(r) => traversal.root_time[r],
        };
        let mut psa = 0;
        let mut wait = 0;
        for label in 1..=self.m {
            let gap = traversal.visit_time[label - 1] - node_time(self.parent_of[label - 1]);
            wait += gap;
            if gap == 1 {
                psa += 1;
            }
        }
        let mut records = BTreeSet::new();
        for label in 1..=self.m {
            let mut max_on_path = true;
            let mut cur = label;
            while let ParentRef::Label(l) = self.parent_of[cur - 1] {
                if l > label {
                    max_on_path = false;
                    break;
                }
                cur = l;
            }
            if max_on_path {
                records.insert(label);
            }
        }
        let p = self.priority_forest();
        ForestStatistics {
            sasc: p.small_ascents(),
            diff: p.aggregate_diff(),
            psa,
            wait,
            records,
        }
    }

    /// All ordered `(m, n)`-forests, in a deterministic order.
    pub fn enumerate_all(m: usize, n: usize) -> Vec<OrderedForest> {
        assert!(m <= n);
        let mut choices = Vec::with_capacity(m);
        for label in 1..=m {
            let mut c: Vec<ParentRef> = (0..=n - m).map(ParentRef::Root).collect();
            c.extend((1..=m).filter(|&l| l != label).map(ParentRef::Label));
            choices.push(c);
        }
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(m);
        fn rec(
            n: usize,
            m: usize,
            choices: &[Vec<ParentRef>],
            current: &mut Vec<ParentRef>,
            out: &mut Vec<OrderedForest>,
        ) {
            if current.len() == m {
                if let Ok(f) = OrderedForest::new(n, m, current.clone()) {
                    out.push(f);
                }
                return;
            }
            for &p in &choices[current.len()] {
                current.push(p);
                rec(n, m, choices, current, out);
                current.pop();
            }
        }
        rec(n, m, &choices, &mut current, &mut out);
        out
    }
}

/// An increasing rooted forest on the vertex set `[0, n]` whose component
/// trees occupy consecutive integer intervals. These forests are exactly the
/// possible outcomes of relabeling an ordered forest by visit order, and they
/// are the elements of the priority lattice below the top.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPriorityForest")]
pub struct PriorityForest {
    n: usize,
    parent: Vec<Option<usize>>,
}

#[derive(Deserialize)]
struct RawPriorityForest {
    n: usize,
    parent: Vec<Option<usize>>,
}

impl TryFrom<RawPriorityForest> for PriorityForest {
    type Error = Error;
    fn try_from(raw: RawPriorityForest) -> Result<Self> {
        PriorityForest::new(raw.n, raw.parent)
    }
}

impl PriorityForest {
    /// Builds a priority forest from the parent assignment of vertices
    /// `1..=n` (`parent[i - 1]` is the parent of vertex `i`, `None` for
    /// roots). Vertex 0 is always a root.
    pub fn new(n: usize, parent: Vec<Option<usize>>) -> Result<Self> {
        if parent.len() != n {
            return Err(Error::InvalidPriorityForest(format!(
                "parent vector has {} entries, expected {n}",
                parent.len()
            )));
        }
        for (i, p) in parent.iter().enumerate() {
            let vertex = i + 1;
            if let Some(p) = p {
                if *p >= vertex {
                    return Err(Error::InvalidPriorityForest(format!(
                        "parent {p} of vertex {vertex} is not smaller"
                    )));
                }
            }
        }
        // Interval condition: a non-root vertex may not reach across the
        // closest root below it.
        let mut last_root = 0;
        for (i, p) in parent.iter().enumerate() {
            let vertex = i + 1;
            match p {
                None => last_root = vertex,
                Some(p) => {
                    if *p < last_root {
                        return Err(Error::InvalidPriorityForest(format!(
                            "vertex {vertex} reaches parent {p} across root {last_root}"
                        )));
                    }
                }
            }
        }
        Ok(Self { n, parent })
    }

    /// The edgeless forest on `[0, n]`, the bottom of the priority lattice.
    pub fn edgeless(n: usize) -> Self {
        Self {
            n,
            parent: vec![None; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges, which is also the rank in the priority lattice.
    pub fn edge_count(&self) -> usize {
        self.parent.iter().flatten().count()
    }

    pub fn parent(&self, vertex: usize) -> Option<usize> {
        assert!(vertex >= 1 && vertex <= self.n);
        self.parent[vertex - 1]
    }

    /// Shifted parent map `s(i) = p(i) + 1`.
    pub fn shifted_parent(&self, vertex: usize) -> Option<usize> {
        self.parent(vertex).map(|p| p + 1)
    }

    pub fn is_root(&self, vertex: usize) -> bool {
        vertex == 0 || self.parent[vertex - 1].is_none()
    }

    /// Roots in increasing order; always starts with 0.
    pub fn roots(&self) -> Vec<usize> {
        std::iter::once(0)
            .chain((1..=self.n).filter(|&v| self.parent[v - 1].is_none()))
            .collect()
    }

    /// Non-root vertices in increasing order.
    pub fn non_roots(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.parent[v - 1].is_some()).collect()
    }

    /// Edges as `(child, parent)` pairs, ordered by child.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|p| (i + 1, p)))
    }

    /// The vertex intervals `[r_j, r_{j+1} - 1]` of the component trees.
    pub fn components(&self) -> Vec<(usize, usize)> {
        let roots = self.roots();
        let mut out = Vec::with_capacity(roots.len());
        for (j, &r) in roots.iter().enumerate() {
            let hi = if j + 1 < roots.len() {
                roots[j + 1] - 1
            } else {
                self.n
            };
            out.push((r, hi));
        }
        out
    }

    /// Edge counts `e(T_0), ..., e(T_l)` of the component trees.
    pub fn component_edge_counts(&self) -> Vec<usize> {
        self.components().iter().map(|&(lo, hi)| hi - lo).collect()
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() == self.n
    }

    /// Number of small ascents: non-roots whose parent is `i - 1`.
    pub fn small_ascents(&self) -> usize {
        self.parent
            .iter()
            .enumerate()
            .filter(|(i, p)| **p == Some(*i))
            .count()
    }

    /// `diff = sum_i (i - s(i) + 1)` over non-root vertices.
    pub fn aggregate_diff(&self) -> usize {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|p| (i + 1) - (p + 1) + 1))
            .sum()
    }

    /// Edge-set containment, the order relation of the priority lattice.
    pub fn contains(&self, other: &PriorityForest) -> bool {
        assert_eq!(self.n, other.n);
        other
            .parent
            .iter()
            .zip(&self.parent)
            .all(|(o, s)| o.is_none() || o == s)
    }

    /// Adds the edge `(parent, child)`; `None` when the result is not a
    /// priority forest or the child is already attached.
    pub fn with_edge(&self, child: usize, parent: usize) -> Option<PriorityForest> {
        if child == 0 || child > self.n || self.parent[child - 1].is_some() {
            return None;
        }
        let mut p = self.parent.clone();
        p[child - 1] = Some(parent);
        PriorityForest::new(self.n, p).ok()
    }

    /// Removes the edge below `child`; `None` when absent or invalid after.
    pub fn without_edge(&self, child: usize) -> Option<PriorityForest> {
        if child == 0 || child > self.n || self.parent[child - 1].is_none() {
            return None;
        }
        let mut p = self.parent.clone();
        p[child - 1] = None;
        PriorityForest::new(self.n, p).ok()
    }

    /// Reconstructs the ordered forest whose priority forest is `self` and
    /// whose priority traversal is `lambda^{-1}`. The relabeling `lambda`
    /// must map `[m]` bijectively onto the non-root vertices.
    pub fn apply_relabeling(&self, lambda: &PartialPermutation) -> Result<OrderedForest> {
        let non_roots: BTreeSet<usize> = self.non_roots().into_iter().collect();
        let m = non_roots.len();
        if lambda.domain_size() != m || !lambda.is_total() || lambda.image() != non_roots {
            return Err(Error::DomainMismatch);
        }
        let mut label_of_vertex = vec![0usize; self.n + 1];
        for label in 1..=m {
            label_of_vertex[lambda.get(label).unwrap()] = label;
        }
        let roots = self.roots();
        let mut root_index = vec![usize::MAX; self.n + 1];
        for (j, &r) in roots.iter().enumerate() {
            root_index[r] = j;
        }
        let mut parent_of = Vec::with_capacity(m);
        for label in 1..=m {
            let vertex = lambda.get(label).unwrap();
            let pv = self.parent(vertex).unwrap();
            parent_of.push(if self.is_root(pv) {
                ParentRef::Root(root_index[pv])
            } else {
                ParentRef::Label(label_of_vertex[pv])
            });
        }
        OrderedForest::new(self.n, m, parent_of)
    }

    /// All priority forests on `[0, n]`, generated as compositions of the
    /// vertex interval into consecutive blocks, each carrying an increasing
    /// tree. Deterministic order.
    pub fn enumerate_all(n: usize) -> Vec<PriorityForest> {
        let mut out = Vec::new();
        let mut parent = vec![None; n];
        // Extend the forest from `start`, the first vertex of the next block.
        fn rec(n: usize, start: usize, parent: &mut Vec<Option<usize>>, out: &mut Vec<PriorityForest>) {
            if start == n + 1 {
                out.push(PriorityForest::new(n, parent.clone()).expect("generated forest"));
                return;
            }
            for end in start..=n {
                // Increasing tree on [start, end]: each vertex picks a parent
                // in [start, v - 1].
                fn fill(
                    n: usize,
                    start: usize,
                    end: usize,
                    v: usize,
                    parent: &mut Vec<Option<usize>>,
                    out: &mut Vec<PriorityForest>,
                ) {
                    if v > end {
                        rec(n, end + 1, parent, out);
                        return;
                    }
                    for p in start..v {
                        parent[v - 1] = Some(p);
                        fill(n, start, end, v + 1, parent, out);
                    }
                    parent[v - 1] = None;
                }
                if start == end {
                    rec(n, end + 1, parent, out);
                } else if start == 0 {
                    fill(n, 0, end, 1, parent, out);
                } else {
                    fill(n, start, end, start + 1, parent, out);
                }
            }
        }
        rec(n, 0, &mut parent, &mut out);
        out.sort_by_key(|f| (f.edge_count(), f.parent.clone()));
        out
    }

    /// Canonical key used for lattice indexing.
    pub fn key(&self) -> &[Option<usize>] {
        &self.parent
    }
}

impl fmt::Display for PriorityForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parent.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match p {
                Some(p) => write!(f, "{p}")?,
                None => write!(f, "-")?,
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn forest(n: usize, m: usize, parents: &[ParentRef]) -> OrderedForest {
        OrderedForest::new(n, m, parents.to_vec()).unwrap()
    }

    fn pforest(n: usize, parent: &[i64]) -> PriorityForest {
        let parent = parent
            .iter()
            .map(|&p| if p < 0 { None } else { Some(p as usize) })
            .collect();
        PriorityForest::new(n, parent).unwrap()
    }

    #[test]
    fn priority_search_single_edge() {
        let f = forest(1, 1, &[ParentRef::Root(0)]);
        let t = f.priority_search();
        assert_eq!(t.word.word(), &[Some(1)]);
    }

    #[test]
    fn priority_search_all_roots() {
        let f = forest(2, 0, &[]);
        let t = f.priority_search();
        assert_eq!(t.word.word(), &[None, None]);
        assert_eq!(t.root_time, vec![0, 1, 2]);
    }

    #[test]
    fn priority_forest_of_path() {
        let f = forest(2, 2, &[ParentRef::Root(0), ParentRef::Label(1)]);
        assert_eq!(f.priority_forest(), pforest(2, &[0, 1]));
    }

    #[test]
    fn priority_forest_with_trivial_first_tree() {
        // n=2, m=1, label 1 hangs below the second root.
        let f = forest(2, 1, &[ParentRef::Root(1)]);
        let t = f.priority_search();
        assert_eq!(t.word.word(), &[None, Some(1)]);
        assert_eq!(f.priority_forest(), pforest(2, &[-1, 1]));
    }

    #[test]
    fn interval_condition_rejected() {
        // Vertex 2 attached to 0 while 1 is a root breaks the intervals.
        assert!(PriorityForest::new(2, vec![None, Some(0)]).is_err());
    }

    #[test]
    fn increasing_condition_rejected() {
        assert!(PriorityForest::new(2, vec![Some(1), None]).is_err());
    }

    #[test]
    fn statistics_increasing_path() {
        let f = forest(
            3,
            3,
            &[ParentRef::Root(0), ParentRef::Label(1), ParentRef::Label(2)],
        );
        let s = f.statistics();
        assert_eq!((s.psa, s.wait), (3, 3));
        assert_eq!(s.records, BTreeSet::from([1, 2, 3]));
    }

    #[test]
    fn statistics_star() {
        let f = forest(
            3,
            3,
            &[ParentRef::Root(0), ParentRef::Root(0), ParentRef::Root(0)],
        );
        let s = f.statistics();
        assert_eq!((s.psa, s.wait), (1, 6));
        assert_eq!(s.records, BTreeSet::from([1, 2, 3]));
    }

    #[test]
    fn small_ascents_and_diff() {
        let path = pforest(4, &[0, 1, 2, 3]);
        assert_eq!((path.small_ascents(), path.aggregate_diff()), (4, 4));
        let star = pforest(4, &[0, 0, 0, 0]);
        assert_eq!((star.small_ascents(), star.aggregate_diff()), (1, 10));
        let edgeless = PriorityForest::edgeless(4);
        assert_eq!((edgeless.small_ascents(), edgeless.aggregate_diff()), (0, 0));
    }

    #[test]
    fn apply_relabeling_example() {
        // Path 0-1-2 with lambda = (1 -> 2, 2 -> 1).
        let p = pforest(2, &[0, 1]);
        let lambda = PartialPermutation::new(2, 2, vec![Some(2), Some(1)]).unwrap();
        let f = p.apply_relabeling(&lambda).unwrap();
        assert_eq!(f.parent_of(2), ParentRef::Root(0));
        assert_eq!(f.parent_of(1), ParentRef::Label(2));
        assert_eq!(
            f.priority_search().word,
            PartialPermutation::new(2, 2, vec![Some(2), Some(1)]).unwrap()
        );
    }

    #[test]
    fn apply_relabeling_rejects_wrong_image() {
        let p = pforest(2, &[0, 1]);
        let lambda = PartialPermutation::new(2, 2, vec![Some(1), None]).unwrap();
        assert_eq!(p.apply_relabeling(&lambda), Err(Error::DomainMismatch));
    }

    #[test]
    fn relabeling_roundtrip_exhaustive() {
        // Every ordered forest is recovered from its priority forest and the
        // inverse of its priority traversal.
        for n in 0..=4usize {
            for m in 0..=n {
                for f in OrderedForest::enumerate_all(m, n) {
                    let t = f.priority_search();
                    let p = f.priority_forest();
                    let g = p.apply_relabeling(&t.word.invert()).unwrap();
                    assert_eq!(g, f);
                }
            }
        }
    }

    #[test]
    fn canonical_labeling_is_a_search_fixed_point() {
        // Labeling the non-roots of a priority forest in increasing vertex
        // order yields an ordered forest whose search visits vertex v at
        // step v, so its priority forest is the original forest.
        for n in 0..=4usize {
            for p in PriorityForest::enumerate_all(n) {
                let m = p.edge_count();
                let id = PartialPermutation::new(
                    m,
                    n,
                    p.non_roots().into_iter().map(Some).collect(),
                )
                .unwrap();
                let g = p.apply_relabeling(&id).unwrap();
                let t = g.priority_search();
                assert_eq!(g.priority_forest(), p);
                for (label, vertex) in p.non_roots().into_iter().enumerate() {
                    assert_eq!(t.visit_time[label], vertex);
                }
            }
        }
    }

    #[test]
    fn forest_counts_match_cayley() {
        for n in 0..=5usize {
            let mut per_forest = std::collections::HashMap::new();
            let mut total_by_m = vec![0usize; n + 1];
            for m in 0..=n {
                for f in OrderedForest::enumerate_all(m, n) {
                    *per_forest.entry(f.priority_forest()).or_insert(0usize) += 1;
                    total_by_m[m] += 1;
                }
            }
            for m in 0..=n {
                assert_eq!(total_by_m[m], crate::cayley_forest_count(m, n));
            }
            // Fibers over forests with m edges sum to the same totals.
            for (p, fiber) in per_forest {
                assert!(fiber >= 1);
                let _ = p;
            }
        }
    }

    #[test]
    fn traversal_tree_blocks_are_respected() {
        for n in 0..=5usize {
            for m in 0..=n {
                for f in OrderedForest::enumerate_all(m, n) {
                    let t = f.priority_search();
                    assert_eq!(t.word.word().iter().filter(|v| v.is_none()).count(), n - m);
                    assert_eq!(t.word.image(), (1..=m).collect());
                    // All nodes of T_j come before the root of T_{j+1}.
                    for label in 1..=m {
                        let j = f.tree_of_label(label);
                        if j + 1 < t.root_time.len() {
                            assert!(t.visit_time[label - 1] < t.root_time[j + 1]);
                        }
                        assert!(t.visit_time[label - 1] > t.root_time[j]);
                    }
                }
            }
        }
    }

    #[test]
    fn records_match_traversal_records() {
        for n in 0..=4usize {
            for m in 0..=n {
                for f in OrderedForest::enumerate_all(m, n) {
                    assert_eq!(f.statistics().records, f.priority_search().word.records());
                }
            }
        }
    }

    #[test]
    fn stats_transfer_to_priority_forest() {
        for n in 0..=4usize {
            for m in 0..=n {
                for f in OrderedForest::enumerate_all(m, n) {
                    let s = f.statistics();
                    let p = f.priority_forest();
                    assert_eq!(s.psa, p.small_ascents());
                    assert_eq!(s.wait, p.aggregate_diff());
                    assert_eq!(s.sasc, s.psa);
                    assert_eq!(s.diff, s.wait);
                }
            }
        }
    }

    #[test]
    fn priority_forest_enumeration_counts() {
        // Level counts of the table of Whitney numbers of the second kind.
        let counts = |n: usize| {
            let mut by_rank = vec![0usize; n + 1];
            for p in PriorityForest::enumerate_all(n) {
                by_rank[p.edge_count()] += 1;
            }
            by_rank
        };
        assert_eq!(counts(2), vec![1, 2, 2]);
        assert_eq!(counts(3), vec![1, 3, 5, 6]);
        assert_eq!(counts(6), vec![1, 6, 20, 52, 126, 312, 720]);
    }

}
