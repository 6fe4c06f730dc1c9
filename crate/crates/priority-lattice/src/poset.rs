//! Generic finite-poset utilities: isomorphism, duality, distributivity,
//! Boolean lattices, and diamond (M3) detection.

use crate::lattice::{ElementId, Lattice};

/// A finite poset given by its full order relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    leq: Vec<bool>,
}

impl Poset {
    pub fn from_relation(size: usize, leq: impl Fn(usize, usize) -> bool) -> Poset {
        let mut rel = vec![false; size * size];
        for i in 0..size {
            for j in 0..size {
                rel[i * size + j] = leq(i, j);
            }
        }
        let p = Poset { size, leq: rel };
        debug_assert!(p.is_valid());
        p
    }

    /// The closed interval `[x, y]` of a priority lattice as an abstract
    /// poset.
    pub fn from_interval(lattice: &Lattice, x: ElementId, y: ElementId) -> Poset {
        Poset::from_elements(lattice, &lattice.interval(x, y))
    }

    /// The subposet induced on a list of lattice elements.
    pub fn from_elements(lattice: &Lattice, elements: &[ElementId]) -> Poset {
        Poset::from_relation(elements.len(), |i, j| {
            lattice.leq(elements[i], elements[j])
        })
    }

    pub fn from_lattice(lattice: &Lattice) -> Poset {
        Poset::from_relation(lattice.len(), |i, j| lattice.leq(i, j))
    }

    /// The Boolean lattice of rank `k` (subsets of a `k`-set by inclusion).
    pub fn boolean(k: u32) -> Poset {
        let size = 1usize << k;
        Poset::from_relation(size, |i, j| i & j == i)
    }

    fn is_valid(&self) -> bool {
        let n = self.size;
        (0..n).all(|i| self.leq(i, i))
            && (0..n).all(|i| {
                (0..n).all(|j| {
                    (!(self.leq(i, j) && self.leq(j, i)) || i == j)
                        && (0..n).all(|k| !(self.leq(i, j) && self.leq(j, k)) || self.leq(i, k))
                })
            })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.size + j]
    }

    pub fn dual(&self) -> Poset {
        Poset::from_relation(self.size, |i, j| self.leq(j, i))
    }

    /// Cover relation derived from the order.
    fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.size {
            for j in 0..self.size {
                if i != j && self.leq(i, j) {
                    let strict_between = (0..self.size)
                        .any(|k| k != i && k != j && self.leq(i, k) && self.leq(k, j));
                    if !strict_between {
                        out.push((i, j));
                    }
                }
            }
        }
        out
    }

    /// Height of each element: length of a longest chain below it.
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.size).collect();
        order.sort_by_key(|&i| (0..self.size).filter(|&j| self.leq(j, i)).count());
        let mut h = vec![0usize; self.size];
        for &i in &order {
            for j in 0..self.size {
                if j != i && self.leq(j, i) {
                    h[i] = h[i].max(h[j] + 1);
                }
            }
        }
        h
    }

    /// Sizes of the height levels, a cheap isomorphism invariant.
    pub fn level_profile(&self) -> Vec<usize> {
        let h = self.heights();
        let max = h.iter().copied().max().unwrap_or(0);
        let mut out = vec![0usize; max + 1];
        for v in h {
            out[v] += 1;
        }
        out
    }

    /// Stable colors per element: iterated refinement by the color multisets
    /// of covered/covering neighbors, seeded with (height, updeg, downdeg).
    fn refined_colors(&self) -> Vec<u64> {
        let covers = self.covers();
        let mut up = vec![Vec::new(); self.size];
        let mut down = vec![Vec::new(); self.size];
        for &(i, j) in &covers {
            up[i].push(j);
            down[j].push(i);
        }
        let heights = self.heights();
        let mut color: Vec<u64> = (0..self.size)
            .map(|i| {
                let key = (heights[i], up[i].len(), down[i].len());
                hash_key(&format!("{key:?}"))
            })
            .collect();
        for _ in 0..self.size {
            let mut next = Vec::with_capacity(self.size);
            for i in 0..self.size {
                let mut ups: Vec<u64> = up[i].iter().map(|&j| color[j]).collect();
                let mut downs: Vec<u64> = down[i].iter().map(|&j| color[j]).collect();
                ups.sort_unstable();
                downs.sort_unstable();
                next.push(hash_key(&format!("{}|{ups:?}|{downs:?}", color[i])));
            }
            if next == color {
                break;
            }
            color = next;
        }
        color
    }

    /// Order isomorphism via invariant pruning plus backtracking.
    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        if self.size != other.size {
            return false;
        }
        if self.level_profile() != other.level_profile() {
            return false;
        }
        let ca = self.refined_colors();
        let cb = other.refined_colors();
        let mut sa = ca.clone();
        let mut sb = cb.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return false;
        }
        // Map elements in order of rarest color first.
        let mut freq = std::collections::HashMap::new();
        for &c in &ca {
            *freq.entry(c).or_insert(0usize) += 1;
        }
        let mut order: Vec<usize> = (0..self.size).collect();
        order.sort_by_key(|&i| (freq[&ca[i]], i));
        let mut image = vec![usize::MAX; self.size];
        let mut used = vec![false; self.size];
        self.match_rec(other, &ca, &cb, &order, 0, &mut image, &mut used)
    }

    #[allow(clippy::too_many_arguments)]
    fn match_rec(
        &self,
        other: &Poset,
        ca: &[u64],
        cb: &[u64],
        order: &[usize],
        depth: usize,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let i = order[depth];
        for j in 0..other.size {
            if used[j] || cb[j] != ca[i] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&k| {
                self.leq(i, k) == other.leq(j, image[k])
                    && self.leq(k, i) == other.leq(image[k], j)
            });
            if consistent {
                image[i] = j;
                used[j] = true;
                if self.match_rec(other, ca, cb, order, depth + 1, image, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }

    pub fn is_self_dual(&self) -> bool {
        self.is_isomorphic(&self.dual())
    }

    /// Greatest lower bounds for all pairs; `None` when some pair has no
    /// unique one (the poset is not a meet-semilattice).
    fn glb_table(&self) -> Option<Vec<usize>> {
        let n = self.size;
        let mut table = vec![usize::MAX; n * n];
        for i in 0..n {
            for j in 0..n {
                let lowers: Vec<usize> =
                    (0..n).filter(|&k| self.leq(k, i) && self.leq(k, j)).collect();
                let glb = lowers
                    .iter()
                    .copied()
                    .find(|&g| lowers.iter().all(|&k| self.leq(k, g)))?;
                table[i * n + j] = glb;
            }
        }
        Some(table)
    }

    /// Whether the poset is a distributive lattice.
    pub fn is_distributive(&self) -> bool {
        let n = self.size;
        let Some(meet) = self.glb_table() else {
            return false;
        };
        let Some(join_dual) = self.dual().glb_table() else {
            return false;
        };
        let join = join_dual;
        let m = |a: usize, b: usize| meet[a * n + b];
        let j = |a: usize, b: usize| join[a * n + b];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if m(x, j(y, z)) != j(m(x, y), m(x, z)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn hash_key(s: &str) -> u64 {
    use std::hash::{Hash, Hasher};
    let mut h = std::collections::hash_map::DefaultHasher::new();
    s.hash(&mut h);
    h.finish()
}

/// Searches the lattice for a diamond M3: elements `a < x, y, z < b` with
/// `x, y, z` pairwise incomparable, all pairwise meets `a` and joins `b`.
pub fn find_diamond(lattice: &Lattice) -> Option<[ElementId; 5]> {
    let ids: Vec<ElementId> = lattice.all_ids().collect();
    for &x in &ids {
        for &y in &ids {
            if y <= x || lattice.leq(x, y) || lattice.leq(y, x) {
                continue;
            }
            let a = lattice.meet(x, y);
            let b = lattice.join(x, y);
            for &z in &ids {
                if z == x
                    || z == y
                    || lattice.leq(z, x)
                    || lattice.leq(x, z)
                    || lattice.leq(z, y)
                    || lattice.leq(y, z)
                {
                    continue;
                }
                if lattice.meet(x, z) == a
                    && lattice.meet(y, z) == a
                    && lattice.join(x, z) == b
                    && lattice.join(y, z) == b
                {
                    return Some([a, x, y, z, b]);
                }
            }
        }
    }
    None
}
