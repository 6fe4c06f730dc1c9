//! Acceptance suite: one pass/fail line per criterion.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use priority_lattice::bijections::{phi, phi_inverse, psi, psi_inverse, weary};
use priority_lattice::cayley_forest_count;
use priority_lattice::enumeration::{
    binomial, chain_count_hook, characteristic_polynomial_closed, characteristic_polynomial_sum,
    corank_gf_coefficients, flag_vectors, gamma_census, mobius, theta_census, whitney_first,
    whitney_second, whitney_second_closed, MobiusOracle, Polynomial,
};
use priority_lattice::forest::OrderedForest;
use priority_lattice::lattice::Lattice;
use priority_lattice::parking::PartialParkingFunction;
use priority_lattice::poset::{find_diamond, Poset};

fn criterion(number: usize, name: &str, check: impl FnOnce() -> bool) {
    let passed = check();
    println!(
        "criterion {number:02} [{}] {name}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "criterion {number:02} failed: {name}");
}

#[test]
fn criterion_01_cayley_counts() {
    criterion(1, "Cayley counts agree across chains, forests, parking functions", || {
        for n in 0..=4usize {
            let l = Lattice::build(n);
            for m in 0..=n {
                let expected = cayley_forest_count(m, n);
                if l.complete_chains(m).len() != expected
                    || OrderedForest::enumerate_all(m, n).len() != expected
                    || PartialParkingFunction::enumerate_all(m, n).len() != expected
                {
                    return false;
                }
            }
        }
        true
    });
}

#[test]
fn criterion_02_whitney_second() {
    criterion(2, "Whitney numbers of the second kind: table, monotonicity, log-concavity failure", || {
        let rows: [&[i64]; 7] = [
            &[1, 1],
            &[1, 1, 1],
            &[1, 2, 2, 1],
            &[1, 3, 5, 6, 1],
            &[1, 4, 9, 16, 24, 1],
            &[1, 5, 14, 31, 64, 120, 1],
            &[1, 6, 20, 52, 126, 312, 720, 1],
        ];
        for (n, row) in rows.iter().enumerate() {
            let expected: Vec<BigInt> = row.iter().map(|&v| BigInt::from(v)).collect();
            if whitney_second_closed(n) != expected {
                return false;
            }
            if n <= 6 && whitney_second(&Lattice::build(n)) != expected {
                return false;
            }
        }
        for n in 3..=6usize {
            let w = whitney_second_closed(n);
            if !(0..n).all(|k| w[k] < w[k + 1]) {
                return false;
            }
        }
        let w6 = whitney_second_closed(6);
        &w6[4] * &w6[4] == BigInt::from(15876)
            && &w6[3] * &w6[5] == BigInt::from(16224)
            && &w6[4] * &w6[4] < &w6[3] * &w6[5]
    });
}

#[test]
fn criterion_03_characteristic_polynomials() {
    criterion(3, "characteristic polynomials: q(q-1)^n, signed binomials, ideal closed form", || {
        for n in 1..=5usize {
            let l = Lattice::build(n);
            let expected = &Polynomial::q() * &Polynomial::q_minus_one().pow(n);
            if characteristic_polynomial_sum(&l, l.top()) != expected {
                return false;
            }
            let w = whitney_first(&l, l.top());
            for (k, v) in w.iter().enumerate() {
                let e = if k <= n {
                    let b = binomial(n, k);
                    if k % 2 == 0 {
                        b
                    } else {
                        -b
                    }
                } else {
                    BigInt::zero()
                };
                if *v != e {
                    return false;
                }
            }
            for x in l.forest_ids() {
                let f = l.forest(x).unwrap();
                let sasc = f.small_ascents();
                let m = f.edge_count();
                let closed = &Polynomial::monomial(BigInt::one(), m - sasc)
                    * &Polynomial::q_minus_one().pow(sasc);
                if characteristic_polynomial_sum(&l, x) != closed
                    || characteristic_polynomial_closed(&l, x) != closed
                {
                    return false;
                }
            }
        }
        true
    });
}

#[test]
fn criterion_04_mobius() {
    criterion(4, "closed-form Moebius agrees with the zeta recursion on all pairs", || {
        for n in 0..=5usize {
            let l = Lattice::build(n);
            let mut oracle = MobiusOracle::new(&l);
            if n >= 1 && mobius(&l, l.bottom(), l.top()).unwrap() != BigInt::zero() {
                return false;
            }
            for &c in l.coatoms() {
                if mobius(&l, c, l.top()).unwrap() != -BigInt::one() {
                    return false;
                }
            }
            for x in l.all_ids() {
                for y in l.all_ids() {
                    if l.leq(x, y)
                        && mobius(&l, x, y).unwrap() != oracle.mobius(x, y).unwrap()
                    {
                        return false;
                    }
                }
            }
        }
        true
    });
}

#[test]
fn criterion_05_hook_lengths() {
    criterion(5, "hook-length chain counts match exhaustive enumeration", || {
        for n in 0..=5usize {
            let l = Lattice::build(n);
            for x in l.forest_ids() {
                let count = l.maximal_chains_between(l.bottom(), x).len();
                if chain_count_hook(l.forest(x).unwrap()) != BigInt::from(count) {
                    return false;
                }
            }
        }
        true
    });
}

#[test]
fn criterion_06_el_labeling() {
    criterion(6, "every forest interval: one increasing lex-first chain, Boolean ascent-free count", || {
        for n in 0..=4usize {
            let l = Lattice::build(n);
            for x in l.forest_ids() {
                for y in l.forest_ids() {
                    if l.leq(x, y) {
                        let report = l.verify_el_labeling(x, y).unwrap();
                        let expected_af = usize::from(l.is_boolean_over(x, y));
                        if !report.passes
                            || report.increasing_chains != 1
                            || report.ascent_free_chains != expected_af
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    });
}

#[test]
fn criterion_07_bijection_roundtrips() {
    criterion(7, "phi/psi/weary roundtrips and the running parking example", || {
        for n in 0..=4usize {
            let l = Lattice::build(n);
            for m in 0..=n {
                for c in l.complete_chains(m) {
                    let chain: Vec<_> =
                        c.iter().map(|&x| l.forest(x).unwrap().clone()).collect();
                    if phi_inverse(&phi(&chain).unwrap()) != chain {
                        return false;
                    }
                    if psi_inverse(&psi(&chain).unwrap()).unwrap() != chain {
                        return false;
                    }
                }
                for f in OrderedForest::enumerate_all(m, n) {
                    if phi(&phi_inverse(&f)).unwrap() != f
                        || weary(&f) != psi(&phi_inverse(&f)).unwrap()
                    {
                        return false;
                    }
                }
                for pf in PartialParkingFunction::enumerate_all(m, n) {
                    if psi(&psi_inverse(&pf).unwrap()).unwrap() != pf {
                        return false;
                    }
                }
            }
        }
        // Bird's eye words of the prefixes of (2, 4, 2, 1, 3).
        let expected: [&[i64]; 6] = [
            &[0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0],
            &[0, 1, 0, 2, 0],
            &[0, 1, 3, 2, 0],
            &[4, 1, 3, 2, 0],
            &[4, 1, 3, 2, 5],
        ];
        let prefs = [2usize, 4, 2, 1, 3];
        for (k, row) in expected.iter().enumerate() {
            let pf = PartialParkingFunction::new(5, prefs[..k].to_vec()).unwrap();
            let word: Vec<Option<usize>> = row
                .iter()
                .map(|&v| if v == 0 { None } else { Some(v as usize) })
                .collect();
            if pf.park().birds_eye.word() != word.as_slice() {
                return false;
            }
        }
        true
    });
}

#[test]
fn criterion_08_equidistribution() {
    criterion(8, "(records, psa, wait) and (records, lucky, probes) are jointly equidistributed", || {
        for n in 0..=4usize {
            for m in 0..=n {
                let mut a: Vec<(Vec<usize>, usize, usize)> = OrderedForest::enumerate_all(m, n)
                    .iter()
                    .map(|f| {
                        let s = f.statistics();
                        (s.records.iter().copied().collect(), s.psa, s.wait)
                    })
                    .collect();
                let mut b: Vec<(Vec<usize>, usize, usize)> =
                    PartialParkingFunction::enumerate_all(m, n)
                        .iter()
                        .map(|pf| {
                            let s = pf.statistics().unwrap();
                            (
                                pf.park().birds_eye.records().iter().copied().collect(),
                                s.lucky,
                                s.probes,
                            )
                        })
                        .collect();
                a.sort();
                b.sort();
                if a != b {
                    return false;
                }
            }
        }
        true
    });
}

#[test]
fn criterion_09_flag_vectors() {
    criterion(9, "flag beta coefficients for n = 2, 3, 4", || {
        let beta_table = |n: usize| flag_vectors(&Lattice::build(n)).1;
        let check = |n: usize, expected: &[(&[usize], i64)]| -> bool {
            let beta = beta_table(n);
            let expected: BTreeMap<Vec<usize>, BigInt> = expected
                .iter()
                .map(|(k, v)| (k.to_vec(), BigInt::from(*v)))
                .collect();
            beta.iter()
                .all(|(k, v)| expected.get(k).cloned().unwrap_or_else(BigInt::zero) == *v)
                && expected.iter().all(|(k, v)| beta[k] == *v)
        };
        check(
            2,
            &[(&[1, 2], 1), (&[2, 1], 1), (&[3], 1)],
        ) && check(
            3,
            &[
                (&[1, 1, 2], 1),
                (&[1, 2, 1], 3),
                (&[1, 3], 2),
                (&[2, 2], 4),
                (&[3, 1], 5),
                (&[4], 1),
            ],
        ) && check(
            4,
            &[
                (&[1, 1, 1, 2], 1),
                (&[1, 1, 2, 1], 6),
                (&[1, 1, 3], 3),
                (&[1, 2, 1, 1], 1),
                (&[1, 2, 2], 13),
                (&[1, 3, 1], 23),
                (&[1, 4], 3),
                (&[2, 1, 2], 6),
                (&[2, 2, 1], 21),
                (&[2, 3], 8),
                (&[3, 1, 1], 1),
                (&[3, 2], 15),
                (&[4, 1], 23),
                (&[5], 1),
            ],
        )
    });
}

#[test]
fn criterion_10_censuses_and_corank_gf() {
    criterion(10, "gamma/theta censuses and corank generating function", || {
        let gamma: Vec<usize> = (1..=6).map(|n| gamma_census(&Lattice::build(n))).collect();
        if gamma != vec![2, 4, 8, 14, 22, 32] {
            return false;
        }
        if gamma_census(&Lattice::build(7)) != 44 {
            return false;
        }
        let theta: Vec<usize> = (1..=6).map(|n| theta_census(&Lattice::build(n))).collect();
        if theta != vec![2, 4, 10, 34, 154, 874] {
            return false;
        }
        let table = corank_gf_coefficients(5);
        for n in 0..=5usize {
            let l = Lattice::build(n);
            let mut counts = vec![BigInt::zero(); n + 2];
            for x in l.all_ids() {
                counts[n + 1 - l.rank(x)] += 1;
            }
            if table[n] != counts {
                return false;
            }
        }
        true
    });
}

#[test]
fn criterion_11_structural() {
    criterion(11, "grading, diamond sublattice, distributivity, self-duality", || {
        for n in 0..=5usize {
            let l = Lattice::build(n);
            let graded = l
                .maximal_chains_between(l.bottom(), l.top())
                .iter()
                .all(|c| c.len() == n + 2);
            if !graded {
                return false;
            }
        }
        let l3 = Lattice::build(3);
        if find_diamond(&l3).is_none() || Poset::from_lattice(&l3).is_distributive() {
            return false;
        }
        let l4 = Lattice::build(4);
        for x in l4.forest_ids() {
            for y in l4.forest_ids() {
                if l4.leq(x, y) && !Poset::from_interval(&l4, x, y).is_distributive() {
                    return false;
                }
            }
        }
        Poset::from_lattice(&Lattice::build(2)).is_self_dual()
            && !Poset::from_lattice(&l3).is_self_dual()
            && !Poset::from_lattice(&l4).is_self_dual()
    });
}
