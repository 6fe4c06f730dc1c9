//! Enumerative invariants of the priority lattice: Whitney numbers, corank
//! generating function, Möbius functions, characteristic polynomials, hook
//! lengths, flag vectors, and the isomorphism censuses.

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forest::PriorityForest;
use crate::lattice::{ElementId, Lattice};
use crate::poset::Poset;

pub fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Integer-coefficient polynomial in one variable, coefficients in
/// ascending degree, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial(Vec<BigInt>);

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Polynomial {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial(coeffs)
    }

    pub fn zero() -> Polynomial {
        Polynomial(Vec::new())
    }

    pub fn one() -> Polynomial {
        Polynomial(vec![BigInt::one()])
    }

    /// `c · q^d`.
    pub fn monomial(c: BigInt, d: usize) -> Polynomial {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c;
        Polynomial::new(coeffs)
    }

    /// `q`.
    pub fn q() -> Polynomial {
        Polynomial::monomial(BigInt::one(), 1)
    }

    /// `q - 1`.
    pub fn q_minus_one() -> Polynomial {
        Polynomial::new(vec![-BigInt::one(), BigInt::one()])
    }

    pub fn pow(&self, mut e: usize) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.0.get(d).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = vec![BigInt::zero(); self.0.len().max(rhs.0.len())];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.0.iter().enumerate() {
            out[i] += c;
        }
        Polynomial::new(out)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = vec![BigInt::zero(); self.0.len().max(rhs.0.len())];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.0.iter().enumerate() {
            out[i] -= c;
        }
        Polynomial::new(out)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.0.is_empty() || rhs.0.is_empty() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

/// Whitney numbers of the second kind by counting lattice levels; entries
/// for ranks `0..=n+1` (the last is the top).
pub fn whitney_second(lattice: &Lattice) -> Vec<BigInt> {
    lattice
        .level_sizes()
        .into_iter()
        .map(BigInt::from)
        .collect()
}

/// Same numbers from the closed form: a rank-k forest decomposes `[0, n]`
/// into `n + 1 - k` intervals, each carrying one of `(size-1)!` increasing
/// trees.
pub fn whitney_second_closed(n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n + 2];
    for comp in compositions(n + 1) {
        let rank = n + 1 - comp.len();
        let product: BigInt = comp.iter().map(|&part| factorial(part - 1)).product();
        out[rank] += product;
    }
    out[n + 1] = BigInt::one();
    out
}

/// All compositions (ordered positive parts) of `total`, lexicographic.
pub fn compositions(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for mut rest in compositions(total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Expansion of the corank generating function
/// `Co(z, t) = 1/(1 - t P(z)) + z/(1 - z)` with `P(z) = Σ_{i≥1} (i-1)! z^i`.
/// Row `N` of the result holds the coefficients of `z^{N+1} t^k` for
/// `k = 0..=N+1`: the number of corank-`k` elements of `Π(N)`.
pub fn corank_gf_coefficients(max_n: usize) -> Vec<Vec<BigInt>> {
    let order = max_n + 1;
    // s[N][k]: coefficient of z^N t^k in 1/(1 - t P(z)), via the recursion
    // S = 1 + t P(z) S.
    let mut s: Vec<Vec<BigInt>> = vec![Vec::new(); order + 1];
    s[0] = vec![BigInt::one()];
    for big_n in 1..=order {
        let mut row = vec![BigInt::zero(); big_n + 1];
        for i in 1..=big_n {
            let f = factorial(i - 1);
            let prev = s[big_n - i].clone();
            for (k, c) in prev.iter().enumerate() {
                row[k + 1] += &f * c;
            }
        }
        s[big_n] = row;
    }
    (0..=max_n)
        .map(|n| {
            let mut row = vec![BigInt::zero(); n + 2];
            for (k, c) in s[n + 1].iter().enumerate() {
                row[k] += c;
            }
            // z/(1-z) contributes the top element, corank 0.
            row[0] += 1;
            row
        })
        .collect()
}

/// Closed-form Möbius function of the priority lattice.
pub fn mobius(lattice: &Lattice, x: ElementId, y: ElementId) -> Result<BigInt> {
    if !lattice.leq(x, y) {
        return Err(Error::NotComparable);
    }
    if x == y {
        return Ok(BigInt::one());
    }
    match (lattice.forest(x), lattice.forest(y)) {
        (Some(_), Some(_)) => {
            if lattice.is_boolean_over(x, y) {
                let d = lattice.rank(y) - lattice.rank(x);
                Ok(if d % 2 == 0 { BigInt::one() } else { -BigInt::one() })
            } else {
                Ok(BigInt::zero())
            }
        }
        (Some(f), None) => {
            // μ(P, 1̂) = (-1)^{corank} ∏ e(T_k) over the non-final components.
            let corank = lattice.n() + 1 - lattice.rank(x);
            let mut edges = f.component_edge_counts();
            edges.pop();
            let product: BigInt = edges.into_iter().map(BigInt::from).product();
            Ok(if corank % 2 == 0 { product } else { -product })
        }
        (None, _) => unreachable!("top is below nothing else"),
    }
}

/// Memoized zeta-recursion Möbius oracle over one lattice.
pub struct MobiusOracle<'a> {
    lattice: &'a Lattice,
    cache: HashMap<(ElementId, ElementId), BigInt>,
}

impl<'a> MobiusOracle<'a> {
    pub fn new(lattice: &'a Lattice) -> Self {
        MobiusOracle {
            lattice,
            cache: HashMap::new(),
        }
    }

    pub fn mobius(&mut self, x: ElementId, y: ElementId) -> Result<BigInt> {
        if !self.lattice.leq(x, y) {
            return Err(Error::NotComparable);
        }
        Ok(self.mu(x, y))
    }

    fn mu(&mut self, x: ElementId, y: ElementId) -> BigInt {
        if x == y {
            return BigInt::one();
        }
        if let Some(v) = self.cache.get(&(x, y)) {
            return v.clone();
        }
        let mut sum = BigInt::zero();
        for z in self.lattice.interval(x, y) {
            if z != y {
                sum += self.mu(x, z);
            }
        }
        let v = -sum;
        self.cache.insert((x, y), v.clone());
        v
    }
}

/// One step of the sign-reversing involution on `[P, 1̂)`: toggles the
/// first toggleable edge joining roots of consecutive components of `P`.
/// Elements where no such edge can be toggled are the fixed points.
pub fn involution_upper(lattice: &Lattice, p: ElementId, q: ElementId) -> Result<ElementId> {
    let fp = lattice.forest(p).ok_or(Error::ContainsTop)?;
    let fq = lattice.forest(q).ok_or(Error::ContainsTop)?;
    if !lattice.leq(p, q) {
        return Err(Error::NotAbove);
    }
    let roots = fp.roots();
    for k in 1..roots.len() {
        let (child, parent) = (roots[k], roots[k - 1]);
        let toggled = match fq.parent(child) {
            Some(u) if u == parent => fq.without_edge(child),
            Some(_) => None,
            None => fq.with_edge(child, parent),
        };
        if let Some(g) = toggled {
            if g.contains(fp) {
                return Ok(lattice.id_of(&g).unwrap());
            }
        }
    }
    Ok(q)
}

/// Characteristic polynomial of `[0̂, top]` by the defining Möbius sum.
pub fn characteristic_polynomial_sum(lattice: &Lattice, top: ElementId) -> Polynomial {
    let mut oracle = MobiusOracle::new(lattice);
    let r = lattice.rank(top);
    let mut poly = Polynomial::zero();
    for x in lattice.interval(lattice.bottom(), top) {
        let mu = oracle.mobius(lattice.bottom(), x).unwrap();
        poly = &poly + &Polynomial::monomial(mu, r - lattice.rank(x));
    }
    poly
}

/// Closed-form characteristic polynomial: `q^{m - sasc} (q-1)^{sasc}` for a
/// forest ideal, `q (q-1)^n` for the whole lattice (with the rank-1 chain
/// `q - 1` at n = 0).
pub fn characteristic_polynomial_closed(lattice: &Lattice, top: ElementId) -> Polynomial {
    match lattice.forest(top) {
        Some(f) => {
            let sasc = f.small_ascents();
            let m = f.edge_count();
            &Polynomial::monomial(BigInt::one(), m - sasc) * &Polynomial::q_minus_one().pow(sasc)
        }
        None => {
            let n = lattice.n();
            if n == 0 {
                Polynomial::q_minus_one()
            } else {
                &Polynomial::q() * &Polynomial::q_minus_one().pow(n)
            }
        }
    }
}

/// Whitney numbers of the first kind of `[0̂, top]`: `w_k = Σ μ(0̂, x)` over
/// the rank-`k` elements, for `k = 0..=rank(top)`.
pub fn whitney_first(lattice: &Lattice, top: ElementId) -> Vec<BigInt> {
    let mut oracle = MobiusOracle::new(lattice);
    let mut out = vec![BigInt::zero(); lattice.rank(top) + 1];
    for x in lattice.interval(lattice.bottom(), top) {
        out[lattice.rank(x)] += oracle.mobius(lattice.bottom(), x).unwrap();
    }
    out
}

/// Hook lengths of a priority forest: on the non-roots, vertex `i` hangs
/// below the minimal `j > i` with `s(j) ≤ i`; the resulting forest has
/// decreasing labels toward each root and `h(v)` counts the subtree of `v`.
pub fn hook_lengths(p: &PriorityForest) -> BTreeMap<usize, usize> {
    let non_roots = p.non_roots();
    let mut parent_in_h: BTreeMap<usize, Option<usize>> = BTreeMap::new();
    for &i in &non_roots {
        let up = non_roots
            .iter()
            .copied()
            .find(|&j| j > i && p.shifted_parent(j).unwrap() <= i);
        parent_in_h.insert(i, up);
    }
    let mut h: BTreeMap<usize, usize> = non_roots.iter().map(|&v| (v, 1)).collect();
    // Children have smaller labels than parents, so one increasing pass
    // accumulates subtree sizes bottom-up.
    for &i in &non_roots {
        if let Some(j) = parent_in_h[&i] {
            let add = h[&i];
            *h.get_mut(&j).unwrap() += add;
        }
    }
    h
}

/// `m! / ∏ h(v)`: the number of maximal chains of `[0̂, P]`.
pub fn chain_count_hook(p: &PriorityForest) -> BigInt {
    let h = hook_lengths(p);
    let num = factorial(p.edge_count());
    let den: BigInt = h.values().map(|&v| BigInt::from(v)).product();
    let (q, r) = num_integer_div_rem(&num, &den);
    assert!(r.is_zero(), "hook product must divide m!");
    q
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

/// Table keyed by integer compositions of `n + 1`.
pub type CompositionTable = BTreeMap<Vec<usize>, BigInt>;

/// Converts a rank subset `S ⊆ {1..n}` to the composition
/// `(s_1, s_2 - s_1, …, n + 1 - s_k)` of `n + 1`.
pub fn subset_to_composition(n: usize, s: &[usize]) -> Vec<usize> {
    let mut comp = Vec::with_capacity(s.len() + 1);
    let mut prev = 0;
    for &v in s {
        comp.push(v - prev);
        prev = v;
    }
    comp.push(n + 1 - prev);
    comp
}

/// Flag vectors of the full lattice: `alpha[S]` counts the chains from `0̂`
/// to `1̂` whose interior ranks are exactly `S`, `beta` is its
/// inclusion–exclusion transform; both keyed by compositions of `n + 1`.
pub fn flag_vectors(lattice: &Lattice) -> (CompositionTable, CompositionTable) {
    let n = lattice.n();
    let by_rank: Vec<Vec<ElementId>> = {
        let mut v = vec![Vec::new(); n + 2];
        for x in lattice.all_ids() {
            v[lattice.rank(x)].push(x);
        }
        v
    };
    let subsets: Vec<Vec<usize>> = (0..1usize << n)
        .map(|mask| (1..=n).filter(|&r| mask >> (r - 1) & 1 == 1).collect())
        .collect();
    let mut alpha_by_subset: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    for s in &subsets {
        // Chains through the prescribed ranks, counted level by level.
        let mut counts: HashMap<ElementId, BigInt> = HashMap::new();
        counts.insert(lattice.bottom(), BigInt::one());
        for &r in s {
            let mut next = HashMap::new();
            for &y in &by_rank[r] {
                let total: BigInt = counts
                    .iter()
                    .filter(|(&x, _)| lattice.leq(x, y))
                    .map(|(_, c)| c.clone())
                    .sum();
                if !total.is_zero() {
                    next.insert(y, total);
                }
            }
            counts = next;
        }
        let alpha: BigInt = counts.values().cloned().sum();
        alpha_by_subset.insert(s.clone(), alpha);
    }
    let mut alpha = CompositionTable::new();
    let mut beta = CompositionTable::new();
    for s in &subsets {
        let comp = subset_to_composition(n, s);
        alpha.insert(comp.clone(), alpha_by_subset[s].clone());
        let mut b = BigInt::zero();
        // Sum over subsets T of S with sign (-1)^{|S| - |T|}.
        let k = s.len();
        for mask in 0..1usize << k {
            let t: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| s[i]).collect();
            let sign = if (k - t.len()) % 2 == 0 { 1 } else { -1 };
            b += sign * &alpha_by_subset[&t];
        }
        beta.insert(comp, b);
    }
    (alpha, beta)
}

/// Census of principal ideals of `Π(n)` isomorphic to some `Π(m)`, m ≤ n.
pub fn gamma_census(lattice: &Lattice) -> usize {
    census(lattice, true)
}

/// Census of principal filters `[P, 1̂]` isomorphic to some `Π(m)`, m ≤ n.
pub fn theta_census(lattice: &Lattice) -> usize {
    census(lattice, false)
}

fn census(lattice: &Lattice, ideals: bool) -> usize {
    let n = lattice.n();
    // Reference copies of Π(m); index m. Built lazily: the whole-lattice
    // interval is recognized without an isomorphism test.
    let mut references: Vec<Option<(usize, Vec<usize>, Poset)>> = vec![None; n + 1];
    let mut reference = |m: usize| -> (usize, Vec<usize>, Poset) {
        if references[m].is_none() {
            let l = Lattice::build(m);
            let p = Poset::from_lattice(&l);
            references[m] = Some((l.len(), p.level_profile(), p));
        }
        references[m].clone().unwrap()
    };
    let mut count = 0;
    for x in lattice.all_ids() {
        let (elements, m) = if ideals {
            let r = lattice.rank(x);
            if r == 0 {
                continue; // a singleton is no Π(m)
            }
            (lattice.ideal(x), r - 1)
        } else {
            if lattice.is_top(x) {
                continue; // singleton filter
            }
            (lattice.filter(x), n - lattice.rank(x))
        };
        // The full lattice is Π(n) by definition.
        if elements.len() == lattice.len() {
            count += 1;
            continue;
        }
        let (size, profile, reference_poset) = reference(m);
        if elements.len() != size {
            continue;
        }
        let poset = Poset::from_elements(lattice, &elements);
        if poset.level_profile() == profile && poset.is_isomorphic(&reference_poset) {
            count += 1;
        }
    }
    count
}
