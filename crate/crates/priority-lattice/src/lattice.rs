//! The priority lattice: all priority forests on `[0, n]` ordered by edge
//! containment, completed by a formal top element.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forest::PriorityForest;
use crate::perm::PartialPermutation;

/// Identifier of a lattice element. Forests are numbered by rank then by
/// parent vector; the top element gets the last id.
pub type ElementId = usize;

/// Classification of a difference edge of a forest interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeClass {
    /// Deleting the edge leaves a priority forest.
    Removable,
    /// Deleting the edge breaks the interval condition.
    Ascent,
}

/// Report of the edge-labeling checks on one interval.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElReport {
    pub maximal_chains: usize,
    pub increasing_chains: usize,
    pub increasing_is_lex_first: bool,
    pub ascent_free_chains: usize,
    pub passes: bool,
}

/// The lattice of priority forests on `[0, n]` with a formal top.
pub struct Lattice {
    n: usize,
    forests: Vec<PriorityForest>,
    index: HashMap<Vec<Option<usize>>, ElementId>,
    covers_up: Vec<Vec<ElementId>>,
    covers_down: Vec<Vec<ElementId>>,
}

impl Lattice {
    pub fn build(n: usize) -> Lattice {
        let forests = PriorityForest::enumerate_all(n);
        let index: HashMap<_, _> = forests
            .iter()
            .enumerate()
            .map(|(i, f)| (f.key().to_vec(), i))
            .collect();
        let top = forests.len();
        let mut covers_up = vec![Vec::new(); forests.len() + 1];
        let mut covers_down = vec![Vec::new(); forests.len() + 1];
        for (id, f) in forests.iter().enumerate() {
            if f.is_tree() {
                covers_up[id].push(top);
                covers_down[top].push(id);
                continue;
            }
            for v in 1..=n {
                if !f.is_root(v) {
                    continue;
                }
                for u in 0..v {
                    if let Some(g) = f.with_edge(v, u) {
                        let gid = index[g.key()];
                        covers_up[id].push(gid);
                        covers_down[gid].push(id);
                    }
                }
            }
        }
        for list in covers_up.iter_mut().chain(covers_down.iter_mut()) {
            list.sort_unstable();
        }
        Lattice {
            n,
            forests,
            index,
            covers_up,
            covers_down,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Total number of elements, top included.
    pub fn len(&self) -> usize {
        self.forests.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bottom(&self) -> ElementId {
        0
    }

    pub fn top(&self) -> ElementId {
        self.forests.len()
    }

    pub fn is_top(&self, x: ElementId) -> bool {
        x == self.forests.len()
    }

    /// The forest behind an id; `None` for the top.
    pub fn forest(&self, x: ElementId) -> Option<&PriorityForest> {
        self.forests.get(x)
    }

    pub fn id_of(&self, f: &PriorityForest) -> Option<ElementId> {
        self.index.get(f.key()).copied()
    }

    pub fn forest_ids(&self) -> std::ops::Range<ElementId> {
        0..self.forests.len()
    }

    pub fn all_ids(&self) -> std::ops::Range<ElementId> {
        0..self.len()
    }

    pub fn rank(&self, x: ElementId) -> usize {
        match self.forest(x) {
            Some(f) => f.edge_count(),
            None => self.n + 1,
        }
    }

    pub fn covers_up(&self, x: ElementId) -> &[ElementId] {
        &self.covers_up[x]
    }

    pub fn covers_down(&self, x: ElementId) -> &[ElementId] {
        &self.covers_down[x]
    }

    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        if self.is_top(y) {
            return true;
        }
        if self.is_top(x) {
            return false;
        }
        self.forests[y].contains(&self.forests[x])
    }

    pub fn is_cover(&self, x: ElementId, y: ElementId) -> bool {
        self.covers_up[x].binary_search(&y).is_ok()
    }

    /// Greatest lower bound: edge intersection, pruned of the edges that no
    /// common lower bound can keep.
    pub fn meet(&self, x: ElementId, y: ElementId) -> ElementId {
        if self.is_top(x) {
            return y;
        }
        if self.is_top(y) {
            return x;
        }
        let fx = &self.forests[x];
        let fy = &self.forests[y];
        let n = self.n;
        let mut parent: Vec<Option<usize>> = (1..=n)
            .map(|v| {
                let p = fx.parent(v);
                if p == fy.parent(v) {
                    p
                } else {
                    None
                }
            })
            .collect();
        // An edge whose parent lies left of a closer root cannot occur in
        // any lower bound, which only has more roots; drop until valid.
        loop {
            let mut violating = None;
            let mut last_root = 0;
            for v in 1..=n {
                match parent[v - 1] {
                    None => last_root = v,
                    Some(p) => {
                        if p < last_root {
                            violating = Some(v);
                            break;
                        }
                    }
                }
            }
            match violating {
                Some(v) => parent[v - 1] = None,
                None => break,
            }
        }
        self.index[parent.as_slice()]
    }

    /// Least upper bound: the edge union when it is a priority forest, the
    /// smallest forest containing it otherwise, the top when a vertex would
    /// need two parents or no forest works.
    pub fn join(&self, x: ElementId, y: ElementId) -> ElementId {
        if self.is_top(x) || self.is_top(y) {
            return self.top();
        }
        let fx = &self.forests[x];
        let fy = &self.forests[y];
        let mut parent = Vec::with_capacity(self.n);
        for v in 1..=self.n {
            match (fx.parent(v), fy.parent(v)) {
                (Some(a), Some(b)) if a != b => return self.top(),
                (a, b) => parent.push(a.or(b)),
            }
        }
        if let Some(&id) = self.index.get(parent.as_slice()) {
            return id;
        }
        // The union is a parent map but not a priority forest; scan for the
        // smallest forest above it (ids are sorted by rank).
        let contains_union = |f: &PriorityForest| {
            parent
                .iter()
                .enumerate()
                .all(|(i, p)| p.is_none() || f.parent(i + 1) == *p)
        };
        let cand = self.forest_ids().find(|&id| contains_union(&self.forests[id]));
        match cand {
            Some(id) => {
                debug_assert!(self
                    .forest_ids()
                    .filter(|&o| contains_union(&self.forests[o]))
                    .all(|o| self.leq(id, o)));
                id
            }
            None => self.top(),
        }
    }

    /// Elements of the closed interval `[x, y]`, sorted by id (hence rank).
    pub fn interval(&self, x: ElementId, y: ElementId) -> Vec<ElementId> {
        self.all_ids()
            .filter(|&z| self.leq(x, z) && self.leq(z, y))
            .collect()
    }

    /// Principal ideal `[0̂, x]` via downward cover search, sorted by id.
    pub fn ideal(&self, x: ElementId) -> Vec<ElementId> {
        self.closure(x, |z| self.covers_down(z))
    }

    /// Principal filter `[x, 1̂]` via upward cover search, sorted by id.
    pub fn filter(&self, x: ElementId) -> Vec<ElementId> {
        self.closure(x, |z| self.covers_up(z))
    }

    fn closure<'a>(
        &'a self,
        start: ElementId,
        neighbors: impl Fn(ElementId) -> &'a [ElementId],
    ) -> Vec<ElementId> {
        let mut seen = vec![false; self.len()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut out = vec![start];
        while let Some(z) = stack.pop() {
            for &w in neighbors(z) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                    out.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Atoms: elements covering the bottom.
    pub fn atoms(&self) -> &[ElementId] {
        self.covers_up(self.bottom())
    }

    /// Coatoms: elements covered by the top.
    pub fn coatoms(&self) -> &[ElementId] {
        self.covers_down(self.top())
    }

    /// Number of elements of each rank `0..=n+1`.
    pub fn level_sizes(&self) -> Vec<usize> {
        let mut out = vec![0usize; self.n + 2];
        for x in self.all_ids() {
            out[self.rank(x)] += 1;
        }
        out
    }

    /// Label of a cover: the child vertex of the added edge, or `None` on
    /// covers into the top.
    pub fn edge_label(&self, x: ElementId, y: ElementId) -> Result<Option<usize>> {
        if !self.is_cover(x, y) {
            return Err(Error::NotACover);
        }
        if self.is_top(y) {
            return Ok(None);
        }
        let fx = &self.forests[x];
        let fy = &self.forests[y];
        let child = (1..=self.n)
            .find(|&v| fx.parent(v).is_none() && fy.parent(v).is_some())
            .expect("cover adds one edge");
        Ok(Some(child))
    }

    /// Label word of a saturated chain of forests.
    pub fn jordan_holder(&self, chain: &[ElementId]) -> Result<PartialPermutation> {
        if chain.iter().any(|&x| self.is_top(x)) {
            return Err(Error::ContainsTop);
        }
        let mut word = Vec::with_capacity(chain.len().saturating_sub(1));
        for pair in chain.windows(2) {
            if !self.is_cover(pair[0], pair[1]) {
                return Err(Error::NotSaturated);
            }
            word.push(self.edge_label(pair[0], pair[1])?);
        }
        PartialPermutation::new(word.len(), self.n, word)
    }

    /// Saturated chains from `bottom` to `top`, each as a full id path, in
    /// lexicographic id order.
    pub fn maximal_chains_between(&self, bottom: ElementId, top: ElementId) -> Vec<Vec<ElementId>> {
        let mut out = Vec::new();
        let mut path = vec![bottom];
        self.chains_rec(top, &mut path, true, &mut out);
        out
    }

    /// All chains from `bottom` to `top`; when `saturated_only` is false any
    /// strictly increasing path of comparable elements qualifies.
    pub fn enumerate_chains(
        &self,
        bottom: ElementId,
        top: ElementId,
        saturated_only: bool,
    ) -> Vec<Vec<ElementId>> {
        let mut out = Vec::new();
        let mut path = vec![bottom];
        self.chains_rec(top, &mut path, saturated_only, &mut out);
        out
    }

    fn chains_rec(
        &self,
        top: ElementId,
        path: &mut Vec<ElementId>,
        saturated_only: bool,
        out: &mut Vec<Vec<ElementId>>,
    ) {
        let last = *path.last().unwrap();
        if last == top {
            out.push(path.clone());
            return;
        }
        if saturated_only {
            for &next in self.covers_up(last) {
                if self.leq(next, top) {
                    path.push(next);
                    self.chains_rec(top, path, saturated_only, out);
                    path.pop();
                }
            }
        } else {
            for next in last + 1..self.len() {
                if self.leq(last, next) && self.leq(next, top) {
                    path.push(next);
                    self.chains_rec(top, path, saturated_only, out);
                    path.pop();
                }
            }
        }
    }

    /// Complete `m`-chains: saturated chains of length `m` starting at the
    /// bottom (their tops are exactly the rank-`m` forests).
    pub fn complete_chains(&self, m: usize) -> Vec<Vec<ElementId>> {
        let mut out = Vec::new();
        for top in self.forest_ids() {
            if self.rank(top) == m {
                out.extend(self.maximal_chains_between(self.bottom(), top));
            }
        }
        out
    }

    /// Classifies a difference edge of `x < y`, given by its child vertex.
    pub fn classify_edge(&self, x: ElementId, y: ElementId, child: usize) -> Result<EdgeClass> {
        let fx = self
            .forest(x)
            .ok_or(Error::ContainsTop)?;
        let fy = self.forest(y).ok_or(Error::ContainsTop)?;
        if child == 0
            || child > self.n
            || fy.parent(child).is_none()
            || fx.parent(child).is_some()
        {
            return Err(Error::EdgeNotInDifference);
        }
        Ok(match fy.without_edge(child) {
            Some(_) => EdgeClass::Removable,
            None => EdgeClass::Ascent,
        })
    }

    /// Whether every difference edge of `[x, y]` is removable, making the
    /// interval a Boolean lattice.
    pub fn is_boolean_over(&self, x: ElementId, y: ElementId) -> bool {
        let (Some(fx), Some(fy)) = (self.forest(x), self.forest(y)) else {
            return false;
        };
        if !fy.contains(fx) {
            return false;
        }
        (1..=self.n)
            .filter(|&v| fx.parent(v).is_none() && fy.parent(v).is_some())
            .all(|v| fy.without_edge(v).is_some())
    }

    /// Checks the edge labeling on the forest interval `[x, y]`: exactly one
    /// maximal chain should carry an increasing label word, it should be the
    /// lexicographically first, and the ascent-free chains should number one
    /// on Boolean intervals and zero elsewhere.
    pub fn verify_el_labeling(&self, x: ElementId, y: ElementId) -> Result<ElReport> {
        if self.forest(x).is_none() || self.forest(y).is_none() {
            return Err(Error::ContainsTop);
        }
        if !self.leq(x, y) {
            return Err(Error::NotComparable);
        }
        let chains = self.maximal_chains_between(x, y);
        let mut words: Vec<Vec<usize>> = chains
            .iter()
            .map(|c| {
                c.windows(2)
                    .map(|p| self.edge_label(p[0], p[1]).unwrap().unwrap())
                    .collect()
            })
            .collect();
        let increasing = |w: &[usize]| w.windows(2).all(|p| p[0] < p[1]);
        let ascent_free = |w: &[usize]| w.windows(2).all(|p| p[0] > p[1]);
        let increasing_chains = words.iter().filter(|w| increasing(w)).count();
        let ascent_free_chains = words.iter().filter(|w| ascent_free(w)).count();
        let maximal_chains = words.len();
        words.sort();
        let increasing_is_lex_first = increasing(&words[0]);
        let expected_af = usize::from(self.is_boolean_over(x, y));
        let passes = increasing_chains == 1
            && increasing_is_lex_first
            && ascent_free_chains == expected_af;
        Ok(ElReport {
            maximal_chains,
            increasing_chains,
            increasing_is_lex_first,
            ascent_free_chains,
            passes,
        })
    }

    /// DOT rendering of the Hasse diagram; cover edges carry their label,
    /// covers into the top are unlabeled.
    pub fn to_dot(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        writeln!(s, "digraph lattice {{").unwrap();
        writeln!(s, "  rankdir=BT;").unwrap();
        for x in self.all_ids() {
            let name = match self.forest(x) {
                Some(f) => format!("{f}"),
                None => "top".to_string(),
            };
            writeln!(s, "  e{x} [label=\"{name}\"];").unwrap();
        }
        for x in self.all_ids() {
            for &y in self.covers_up(x) {
                match self.edge_label(x, y).unwrap() {
                    Some(l) => writeln!(s, "  e{x} -> e{y} [label=\"{l}\"];").unwrap(),
                    None => writeln!(s, "  e{x} -> e{y};").unwrap(),
                }
            }
        }
        writeln!(s, "}}").unwrap();
        s
    }

    /// JSON dump: elements (forest parent vectors or null for the top),
    /// ranks, and labeled covers.
    pub fn to_json(&self) -> serde_json::Value {
        let elements: Vec<serde_json::Value> = self
            .all_ids()
            .map(|x| match self.forest(x) {
                Some(f) => serde_json::to_value(f).unwrap(),
                None => serde_json::Value::Null,
            })
            .collect();
        let ranks: Vec<usize> = self.all_ids().map(|x| self.rank(x)).collect();
        let covers: Vec<serde_json::Value> = self
            .all_ids()
            .flat_map(|x| {
                self.covers_up(x)
                    .iter()
                    .map(move |&y| (x, y))
                    .collect::<Vec<_>>()
            })
            .map(|(x, y)| {
                serde_json::json!({
                    "lower": x,
                    "upper": y,
                    "label": self.edge_label(x, y).unwrap(),
                })
            })
            .collect();
        serde_json::json!({
            "n": self.n,
            "elements": elements,
            "ranks": ranks,
            "covers": covers,
        })
    }
}

/// The chain `0̂ = P_0 ⊂ P_1 ⊂ … ⊂ P_m = p` where `P_i` keeps the edges of
/// `p` whose child is among `lambda(1..=i)`. Fails when an intermediate step
/// is not a priority forest, which means `lambda` is not a label word of a
/// saturated chain below `p`.
pub fn chain_from_label_word(
    p: &PriorityForest,
    lambda: &PartialPermutation,
) -> Result<Vec<PriorityForest>> {
    let non_roots: std::collections::BTreeSet<usize> = p.non_roots().into_iter().collect();
    let m = non_roots.len();
    if lambda.domain_size() != m || !lambda.is_total() || lambda.image() != non_roots {
        return Err(Error::DomainMismatch);
    }
    let n = p.n();
    let mut chain = Vec::with_capacity(m + 1);
    chain.push(PriorityForest::edgeless(n));
    let mut parent = vec![None; n];
    for k in 1..=m {
        let child = lambda.get(k).unwrap();
        parent[child - 1] = p.parent(child);
        let step =
            PriorityForest::new(n, parent.clone()).map_err(|_| Error::InvalidLabelWord)?;
        chain.push(step);
    }
    Ok(chain)
}
