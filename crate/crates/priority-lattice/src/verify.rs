//! Self-checking suites that compare the closed forms against brute-force
//! oracles on a freshly built lattice.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::bijections::{phi, phi_inverse, psi, psi_inverse, weary};
use crate::enumeration::{
    chain_count_hook, mobius, whitney_second, whitney_second_closed, MobiusOracle,
};
use crate::forest::OrderedForest;
use crate::lattice::Lattice;
use crate::parking::PartialParkingFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Graded,
    El,
    Mobius,
    Bijections,
    Equidistribution,
    All,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn run(n: usize, suite: Suite) -> VerifyReport {
    let lattice = Lattice::build(n);
    let mut checks = Vec::new();
    let mut add = |name: &str, passed: bool| {
        checks.push(Check {
            name: name.to_string(),
            passed,
        })
    };
    if matches!(suite, Suite::Graded | Suite::All) {
        graded(&lattice, &mut add);
    }
    if matches!(suite, Suite::El | Suite::All) {
        el(&lattice, &mut add);
    }
    if matches!(suite, Suite::Mobius | Suite::All) {
        mobius_suite(&lattice, &mut add);
    }
    if matches!(suite, Suite::Bijections | Suite::All) {
        bijections_suite(&lattice, &mut add);
    }
    if matches!(suite, Suite::Equidistribution | Suite::All) {
        equidistribution(n, &mut add);
    }
    VerifyReport { n, checks }
}

fn graded(l: &Lattice, add: &mut impl FnMut(&str, bool)) {
    let covers_raise_rank = l
        .all_ids()
        .all(|x| l.covers_up(x).iter().all(|&y| l.rank(y) == l.rank(x) + 1));
    add("graded: covers raise rank by one", covers_raise_rank);
    let chains = l.maximal_chains_between(l.bottom(), l.top());
    add(
        "graded: all maximal chains have length n+1",
        chains.iter().all(|c| c.len() == l.n() + 2),
    );
    add(
        "graded: level sizes match the closed form",
        whitney_second(l) == whitney_second_closed(l.n()),
    );
    if l.n() >= 1 {
        let fact: usize = (1..=l.n()).product();
        add(
            "graded: n atoms and n! coatoms",
            l.atoms().len() == l.n() && l.coatoms().len() == fact,
        );
    }
}

fn el(l: &Lattice, add: &mut impl FnMut(&str, bool)) {
    let mut all_pass = true;
    for x in l.forest_ids() {
        for y in l.forest_ids() {
            if l.leq(x, y) && !l.verify_el_labeling(x, y).unwrap().passes {
                all_pass = false;
            }
        }
    }
    add("el: every forest interval has one increasing, lex-first maximal chain and the Boolean ascent-free count", all_pass);
}

fn mobius_suite(l: &Lattice, add: &mut impl FnMut(&str, bool)) {
    let mut oracle = MobiusOracle::new(l);
    let mut agree = true;
    for x in l.all_ids() {
        for y in l.all_ids() {
            if l.leq(x, y) && mobius(l, x, y).unwrap() != oracle.mobius(x, y).unwrap() {
                agree = false;
            }
        }
    }
    add("mobius: closed form agrees with the zeta recursion", agree);
    add(
        "mobius: mu(bottom, top) vanishes for n >= 1",
        l.n() == 0 || mobius(l, l.bottom(), l.top()).unwrap() == BigInt::zero(),
    );
    let hooks = l.forest_ids().all(|x| {
        let count = l.maximal_chains_between(l.bottom(), x).len();
        chain_count_hook(l.forest(x).unwrap()) == BigInt::from(count)
    });
    add("mobius: hook-length chain counts match enumeration", hooks);
}

fn bijections_suite(l: &Lattice, add: &mut impl FnMut(&str, bool)) {
    let n = l.n();
    let mut phi_ok = true;
    let mut psi_ok = true;
    for m in 0..=n {
        for c in l.complete_chains(m) {
            let chain: Vec<_> = c.iter().map(|&x| l.forest(x).unwrap().clone()).collect();
            let f = phi(&chain).unwrap();
            if phi_inverse(&f) != chain {
                phi_ok = false;
            }
            let pf = psi(&chain).unwrap();
            if psi_inverse(&pf).unwrap() != chain {
                psi_ok = false;
            }
        }
        for f in OrderedForest::enumerate_all(m, n) {
            if phi(&phi_inverse(&f)).unwrap() != f {
                phi_ok = false;
            }
            if weary(&f) != psi(&phi_inverse(&f)).unwrap() {
                psi_ok = false;
            }
        }
        for pf in PartialParkingFunction::enumerate_all(m, n) {
            if psi(&psi_inverse(&pf).unwrap()).unwrap() != pf {
                psi_ok = false;
            }
        }
    }
    add("bijections: phi roundtrips both ways", phi_ok);
    add("bijections: psi roundtrips and weary factors through phi", psi_ok);
}

fn equidistribution(n: usize, add: &mut impl FnMut(&str, bool)) {
    let mut ok = true;
    for m in 0..=n {
        let mut forest_stats: Vec<(Vec<usize>, usize, usize)> =
            OrderedForest::enumerate_all(m, n)
                .iter()
                .map(|f| {
                    let s = f.statistics();
                    (s.records.iter().copied().collect(), s.psa, s.wait)
                })
                .collect();
        let mut parking_stats: Vec<(Vec<usize>, usize, usize)> =
            PartialParkingFunction::enumerate_all(m, n)
                .iter()
                .map(|pf| {
                    let s = pf.statistics().unwrap();
                    let rec = pf.park().birds_eye.records();
                    (rec.iter().copied().collect(), s.lucky, s.probes)
                })
                .collect();
        forest_stats.sort();
        parking_stats.sort();
        if forest_stats != parking_stats {
            ok = false;
        }
    }
    add(
        "equidistribution: (records, psa, wait) matches (records, lucky, probes)",
        ok,
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_on_small_lattices() {
        for n in 0..=3usize {
            let report = run(n, Suite::All);
            assert!(report.passed(), "n={n}: {:?}", report.checks);
            assert!(report.checks.len() >= 8);
        }
    }
}
