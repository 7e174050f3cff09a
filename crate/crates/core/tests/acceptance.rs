//! Acceptance gate: one test per criterion, each printing a single
//! `criterion N (...): PASS/FAIL` line (run with `--nocapture` to see the
//! lines even when everything passes). All checks are exact.

use std::collections::HashMap;
use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::sync::OnceLock;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use multconj::bounds::{check_conjectures, huneke_miller_check, vandermonde_certificate};
use multconj::determinantal::{check_bounds, DegreeMatrix};
use multconj::hilbert;
use multconj::monomial::{monomials_of_degree, Monomial, MonomialIdeal};
use multconj::powers::{
    asymptotic_multiplicity, limit_ratio_report, power_scan, slope_equality_check, SlopeStatus,
};
use multconj::regseq::{verify_extension, ShiftProfile};
use multconj::resolution::{betti_ek, betti_oracle, BettiTable};
use multconj::Caps;

fn criterion<F: FnOnce() + UnwindSafe>(n: u32, label: &str, f: F) {
    let outcome = catch_unwind(f);
    let status = if outcome.is_ok() { "PASS" } else { "FAIL" };
    println!("criterion {n} ({label}): {status}");
    if let Err(panic) = outcome {
        resume_unwind(panic);
    }
}

/// One corpus member: a strongly stable ideal with its Betti table computed
/// both ways, plus multiplicity and codimension.
struct Item {
    ideal: MonomialIdeal,
    ek: BettiTable,
    oracle: BettiTable,
    e: BigInt,
    s: usize,
}

/// Shared corpus: 100 seeded random strongly stable ideals (n <= 4, degrees
/// <= 4) plus every strongly stable ideal generated in degree <= 3 for
/// n <= 3.
fn corpus() -> &'static Vec<Item> {
    static CORPUS: OnceLock<Vec<Item>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let caps = Caps::default();
        let mut ideals = Vec::new();

        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..100 {
            let n = rng.gen_range(1..=4);
            let by_degree: Vec<Vec<Monomial>> =
                (0..=4u32).map(|d| monomials_of_degree(n, d)).collect();
            let gens: Vec<Monomial> = (0..rng.gen_range(1..=3))
                .map(|_| {
                    let d = rng.gen_range(1..=4u32) as usize;
                    by_degree[d][rng.gen_range(0..by_degree[d].len())].clone()
                })
                .collect();
            ideals.push(MonomialIdeal::borel_closure(gens, n).unwrap());
        }

        for n in 1..=3 {
            ideals.extend(strongly_stable_low_degree(n));
        }

        ideals
            .into_iter()
            .map(|ideal| {
                assert!(ideal.is_strongly_stable().unwrap());
                let ek = betti_ek(&ideal).unwrap();
                let oracle = betti_oracle(&ideal, &caps).unwrap();
                let e = hilbert::multiplicity(&ideal).unwrap();
                let s = hilbert::codimension(&ideal).unwrap();
                Item {
                    ideal,
                    ek,
                    oracle,
                    e,
                    s,
                }
            })
            .collect()
    })
}

/// All subsets of the degree-`d` monomials closed under the exchange moves
/// `x_j -> x_i`, `i < j` (the graded pieces of strongly stable ideals).
fn exchange_closed_subsets(n: usize, d: u32) -> Vec<Vec<Monomial>> {
    let mons = monomials_of_degree(n, d);
    let index: HashMap<Monomial, usize> = mons
        .iter()
        .enumerate()
        .map(|(k, u)| (u.clone(), k))
        .collect();
    let images: Vec<Vec<usize>> = mons
        .iter()
        .map(|u| {
            let mut v = Vec::new();
            for j in u.support() {
                for i in 1..j {
                    v.push(index[&u.exchange(i, j)]);
                }
            }
            v
        })
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << mons.len() {
        let closed = (0..mons.len()).all(|k| {
            mask >> k & 1 == 0 || images[k].iter().all(|&p| mask >> p & 1 == 1)
        });
        if closed {
            out.push(
                (0..mons.len())
                    .filter(|&k| mask >> k & 1 == 1)
                    .map(|k| mons[k].clone())
                    .collect(),
            );
        }
    }
    out
}

/// Every nonzero strongly stable ideal of `k[x_1..x_n]` generated in degree
/// <= 3, each exactly once: such an ideal is determined by its graded pieces
/// `(I_1, I_2, I_3)`, which are exchange-closed sets linked by
/// multiplication.
fn strongly_stable_low_degree(n: usize) -> Vec<MonomialIdeal> {
    let layers: Vec<Vec<Vec<Monomial>>> =
        (1..=3u32).map(|d| exchange_closed_subsets(n, d)).collect();
    let grows_into = |lower: &[Monomial], upper: &[Monomial]| {
        lower.iter().all(|u| {
            (1..=n).all(|i| upper.contains(&u.mul(&Monomial::var(i, n))))
        })
    };
    let mut out = Vec::new();
    for b1 in &layers[0] {
        for b2 in &layers[1] {
            if !grows_into(b1, b2) {
                continue;
            }
            for b3 in &layers[2] {
                if !grows_into(b2, b3) {
                    continue;
                }
                if b1.is_empty() && b2.is_empty() && b3.is_empty() {
                    continue;
                }
                let gens: Vec<Monomial> =
                    b1.iter().chain(b2).chain(b3).cloned().collect();
                out.push(MonomialIdeal::minimalize(gens, n).unwrap());
            }
        }
    }
    out
}

#[test]
fn criterion_01_betti_route_equivalence() {
    criterion(1, "closed formula matches homology oracle", || {
        let corpus = corpus();
        assert!(corpus.len() > 100, "exhaustive part of the corpus is empty");
        for item in corpus {
            assert_eq!(
                item.ek, item.oracle,
                "Betti routes disagree on {}",
                item.ideal
            );
        }
    });
}

#[test]
fn criterion_02_euler_hilbert_consistency() {
    criterion(2, "alternating Betti sum equals Hilbert numerator", || {
        for item in corpus() {
            let k = hilbert::k_polynomial(&item.ideal).unwrap();
            assert_eq!(
                item.oracle.alternating_sum(),
                k,
                "Euler identity fails on {}",
                item.ideal
            );
        }
    });
}

#[test]
fn criterion_03_pure_multiplicity_formula() {
    criterion(3, "p! e equals shift product on pure CM instances", || {
        let mut seen = 0usize;
        for item in corpus() {
            let cm = item.ek.projdim() == item.s;
            if cm && item.ek.is_pure() {
                seen += 1;
                assert!(
                    huneke_miller_check(&item.ek, &item.e).unwrap(),
                    "pure-resolution multiplicity formula fails on {}",
                    item.ideal
                );
            }
        }
        assert!(seen > 0, "no pure CM instance encountered");
    });
}

#[test]
fn criterion_04_upper_bound_and_improved_on_stable_class() {
    criterion(4, "upper bound and tightness implication on stable corpus", || {
        let caps = Caps::default();
        for item in corpus() {
            let report = check_conjectures(&item.ideal, &caps).unwrap();
            assert!(report.conj2_holds, "upper bound fails on {}", item.ideal);
            assert!(
                report.improved_ok,
                "tightness without purity + CM on {}",
                item.ideal
            );
        }
    });
}

/// Append a fresh variable and adjoin its `d`-th power: a regular form on
/// `S/I`.
fn adjoin_pure_power(ideal: &MonomialIdeal, d: u32) -> MonomialIdeal {
    let n = ideal.num_vars();
    let mut gens: Vec<Monomial> = ideal
        .generators()
        .iter()
        .map(|g| {
            let mut e = g.exponents().to_vec();
            e.push(0);
            Monomial::new(e).unwrap()
        })
        .collect();
    let mut top = vec![0u32; n + 1];
    top[n] = d;
    gens.push(Monomial::new(top).unwrap());
    MonomialIdeal::minimalize(gens, n + 1).unwrap()
}

#[test]
fn criterion_05_shift_extension_sweep() {
    criterion(5, "shift propagation keeps the bounds, exhaustively", || {
        // Degree sequences of length 1..=3 with entries 1..=4.
        let mut degree_seqs: Vec<Vec<u64>> = Vec::new();
        for len in 1..=3usize {
            let mut stack = vec![Vec::new()];
            for _ in 0..len {
                stack = stack
                    .into_iter()
                    .flat_map(|s: Vec<u64>| {
                        (1..=4u64).map(move |d| {
                            let mut t = s.clone();
                            t.push(d);
                            t
                        })
                    })
                    .collect();
            }
            degree_seqs.extend(stack);
        }

        let factorial = |s: usize| -> u128 { (2..=s as u128).product::<u128>().max(1) };

        for s in 0..=3usize {
            // All (M, m) with 1 <= m_i <= M_i <= 8.
            let mut shapes: Vec<(Vec<u64>, Vec<u64>)> = vec![(vec![], vec![])];
            for _ in 0..s {
                shapes = shapes
                    .into_iter()
                    .flat_map(|(big, small)| {
                        (1..=8u64).flat_map(move |bm| {
                            let big = big.clone();
                            let small = small.clone();
                            (1..=bm).map(move |sm| {
                                let mut b = big.clone();
                                let mut m = small.clone();
                                b.push(bm);
                                m.push(sm);
                                (b, m)
                            })
                        })
                    })
                    .collect();
            }
            let sfact = factorial(s);
            for (big, small) in shapes {
                let prod_big: u128 = big.iter().map(|&v| v as u128).product();
                let prod_small: u128 = small.iter().map(|&v| v as u128).product();
                // e ranges over [ceil(prod_small/s!), floor(prod_big/s!)];
                // both bound checks are monotone in e, so the two endpoint
                // values cover the whole interval.
                let e_lo = prod_small.div_ceil(sfact);
                let e_hi = prod_big / sfact;
                if e_lo > e_hi {
                    continue;
                }
                for e in [e_lo, e_hi] {
                    let profile =
                        ShiftProfile::new(s, big.clone(), small.clone(), e).unwrap();
                    assert!(profile.satisfies_bounds());
                    for degrees in &degree_seqs {
                        let trace = verify_extension(&profile, degrees).unwrap();
                        assert!(
                            trace.ok,
                            "bounds lost extending M = {:?}, m = {:?}, e = {} by {:?}",
                            big, small, e, degrees
                        );
                    }
                    if e_lo == e_hi {
                        break;
                    }
                }
            }
        }

        // Cross-validate the recursion against actual resolutions: adjoin a
        // pure power of a fresh variable and recompute from scratch.
        let caps = Caps::default();
        let bases = [
            ("x1", 1),
            ("x1^3", 1),
            ("x1, x2", 2),
            ("x1^2, x2^3", 2),
            ("x1^2, x1*x2", 2),
            ("x1*x2", 2),
            ("x1^2, x1*x2, x2^3", 2),
            ("x1^2, x1*x2, x2^2", 2),
            ("x1^2, x2^2", 2),
            ("x1^3, x1^2*x2", 2),
        ];
        for (src, n) in bases {
            for d in [1u32, 3] {
                let ideal = multconj::parse_ideal(src, n).unwrap();
                let table = betti_oracle(&ideal, &caps).unwrap();
                let s = hilbert::codimension(&ideal).unwrap();
                let e = hilbert::multiplicity(&ideal).unwrap();
                let profile = ShiftProfile::from_table(&table, s, &e).unwrap();
                let predicted = profile.extend_shifts(d as u64).unwrap();

                let extended = adjoin_pure_power(&ideal, d);
                let table2 = betti_oracle(&extended, &caps).unwrap();
                let s2 = hilbert::codimension(&extended).unwrap();
                let e2 = hilbert::multiplicity(&extended).unwrap();
                let actual = ShiftProfile::from_table(&table2, s2, &e2).unwrap();
                assert_eq!(
                    predicted, actual,
                    "recursion disagrees with resolution for {} + x{}^{}",
                    src,
                    n + 1,
                    d
                );
            }
        }
    });
}

/// All valid entry arrays with `rows` rows, `cols` columns and entries in
/// `1..=max`: columns decrease downward and `u[i][j] <= u[i-1][j+1]`.
fn valid_u_arrays(rows: usize, cols: usize, max: u64) -> Vec<Vec<Vec<u64>>> {
    let mut out = Vec::new();
    let mut current: Vec<Vec<u64>> = Vec::new();
    fn rec(
        rows: usize,
        cols: usize,
        max: u64,
        i: usize,
        j: usize,
        current: &mut Vec<Vec<u64>>,
        out: &mut Vec<Vec<Vec<u64>>>,
    ) {
        if i == rows {
            out.push(current.clone());
            return;
        }
        if j == 0 {
            current.push(Vec::with_capacity(cols));
        }
        let mut hi = max;
        if i > 0 {
            hi = hi.min(current[i - 1][j]);
            if j + 1 < cols {
                hi = hi.min(current[i - 1][j + 1]);
            }
        }
        for v in 1..=hi {
            current[i].push(v);
            let (ni, nj) = if j + 1 == cols { (i + 1, 0) } else { (i, j + 1) };
            rec(rows, cols, max, ni, nj, current, out);
            current[i].pop();
        }
        if j == 0 {
            current.pop();
        }
    }
    rec(rows, cols, max, 0, 0, &mut current, &mut out);
    out
}

#[test]
fn criterion_06_determinantal_sweep() {
    criterion(6, "minor-ideal bounds, purity and duality, exhaustively", || {
        let mut checked = 0u64;
        for rows in 1..=4usize {
            for cols in 1..=4usize {
                for u in valid_u_arrays(rows, cols, 4) {
                    let d = DegreeMatrix::from_u(u).unwrap();
                    // check_bounds errors internally if tightness and purity
                    // ever disagree (for r >= 1).
                    let report = check_bounds(&d).unwrap();
                    assert!(report.upper_holds && report.lower_holds);
                    if rows >= 2 {
                        assert_eq!(report.tight_upper, report.pure);
                        assert_eq!(report.tight_lower, report.pure);
                    }
                    checked += 1;
                }
            }
        }
        assert!(checked > 1000, "sweep unexpectedly small: {checked}");

        // Duality: reflecting both indices swaps the two shift vectors and
        // preserves the multiplicity.
        for rows in 1..=3usize {
            for cols in 1..=3usize {
                for u in valid_u_arrays(rows, cols, 4) {
                    let d = DegreeMatrix::from_u(u).unwrap();
                    let (big, small) = d.en_shifts().unwrap();
                    let dual = d.dualize().unwrap();
                    let (dual_big, dual_small) = dual.en_shifts().unwrap();
                    assert_eq!(dual_big, small);
                    assert_eq!(dual_small, big);
                    assert_eq!(dual.ht_multiplicity(), d.ht_multiplicity());
                    assert_eq!(dual.dualize().unwrap().u(), d.u());
                }
            }
        }
    });
}

#[test]
fn criterion_07_determinantal_monomial_crosscheck() {
    criterion(7, "minor-ideal formulas match monomial computations", || {
        let caps = Caps::default();
        for r_plus_1 in 1..=2usize {
            for delta in 1..=2u32 {
                for m in 1..=3u32 {
                    let dm = DegreeMatrix::power_matrix(
                        &vec![delta as u64; r_plus_1],
                        m as usize,
                    )
                    .unwrap();
                    let base = MonomialIdeal::minimalize(
                        (1..=r_plus_1)
                            .map(|i| {
                                let mut e = vec![0u32; r_plus_1];
                                e[i - 1] = delta;
                                Monomial::new(e).unwrap()
                            })
                            .collect(),
                        r_plus_1,
                    )
                    .unwrap();
                    let ideal = base.power(m).unwrap();

                    assert_eq!(
                        dm.ht_multiplicity(),
                        hilbert::multiplicity(&ideal).unwrap(),
                        "multiplicity mismatch at r+1={r_plus_1}, delta={delta}, m={m}"
                    );

                    let (big, small) = dm.en_shifts().unwrap();
                    let shifts = betti_oracle(&ideal, &caps).unwrap().shifts();
                    assert_eq!(
                        big,
                        shifts.big_m.iter().map(|&v| v as u64).collect::<Vec<_>>(),
                        "max shifts mismatch at r+1={r_plus_1}, delta={delta}, m={m}"
                    );
                    assert_eq!(
                        small,
                        shifts.small_m.iter().map(|&v| v as u64).collect::<Vec<_>>(),
                        "min shifts mismatch at r+1={r_plus_1}, delta={delta}, m={m}"
                    );
                }
            }
        }
    });
}

#[test]
fn criterion_08_powers_empirics() {
    criterion(8, "regularity slopes and bound ratios along powers", || {
        let caps = Caps::default();
        let cases = [
            ("x1, x2", 2),
            ("x1^2, x2^2", 2),
            ("x1^2, x1*x2", 2),
            ("x1*x2, x2*x3, x1*x3", 3),
        ];
        for (src, n) in cases {
            let ideal = multconj::parse_ideal(src, n).unwrap();
            let scan = power_scan(&ideal, 6, &caps).unwrap();
            assert!(!scan.truncated, "scan truncated for {src}");
            assert_eq!(scan.rows.len(), 6);
            for row in &scan.rows {
                assert!(
                    row.reg.windows(2).all(|w| w[0] <= w[1]),
                    "partial regularities not monotone for {src} at k = {}",
                    row.k
                );
            }
            let slopes = slope_equality_check(&scan);
            assert_eq!(
                slopes.status,
                SlopeStatus::Consistent,
                "slopes disagree for {src}"
            );
            let asym = asymptotic_multiplicity(&scan, &slopes).unwrap();
            assert!(asym.stable, "difference window not stable for {src}");
            assert_eq!(
                asym.slope_bound_holds,
                Some(true),
                "asymptotic multiplicity above slope power for {src}"
            );
            let ratios = limit_ratio_report(&scan);
            assert!(ratios.all_le_one, "bound ratio above 1 for {src}");
        }
    });
}

#[test]
fn criterion_09_vandermonde_certificate() {
    criterion(9, "determinant certificate and sandwich on CM corpus", || {
        let caps = Caps::default();
        let mut certified = 0usize;
        for item in corpus() {
            let cm = item.ek.projdim() == item.s;
            if !cm {
                continue;
            }
            let cert = vandermonde_certificate(&item.ek, &item.e, item.s).unwrap();
            assert!(cert.identity_holds, "certificate fails on {}", item.ideal);
            assert!(cert.sb_positive, "certificate weight <= 0 on {}", item.ideal);
            certified += 1;

            if item.ek.is_quasi_pure() {
                let report = check_conjectures(&item.ideal, &caps).unwrap();
                assert_eq!(report.conj1_holds, Some(true));
                let tight = report.tight_upper || report.tight_lower == Some(true);
                assert_eq!(
                    tight,
                    item.ek.is_pure(),
                    "sandwich tight but not pure (or vice versa) on {}",
                    item.ideal
                );
            }
        }
        assert!(certified > 0, "no CM instance encountered");
    });
}

#[test]
fn criterion_10_fuzz_determinism() {
    criterion(10, "seeded fuzzing is byte-deterministic", || {
        let bin = env!("CARGO_BIN_EXE_multconj");
        let dir = std::env::temp_dir();
        let out1 = dir.join("multconj-determinism-1.json");
        let out2 = dir.join("multconj-determinism-2.json");
        let args = [
            "fuzz", "-n", "3", "--count", "10", "--maxdeg", "3", "--seed", "123",
        ];
        for out in [&out1, &out2] {
            let status = std::process::Command::new(bin)
                .args(args)
                .arg("--out")
                .arg(out)
                .status()
                .unwrap();
            assert!(status.success());
        }
        let a = std::fs::read(&out1).unwrap();
        let b = std::fs::read(&out2).unwrap();
        assert!(!a.is_empty());
        assert_eq!(a, b, "fuzz reports differ between identical runs");
        let _ = std::fs::remove_file(&out1);
        let _ = std::fs::remove_file(&out2);
    });
}
