//! The `check` subcommand: reruns the library's invariant suites up to a
//! size bound, one report line per item. Items that compare a conjectural
//! rule against data are notes, never failures. Every item also keeps its
//! own feasibility cap, so a large `--n-max` asks for the full check, not
//! for an unbounded one.

use num_bigint::BigInt;
use num_rational::BigRational;

use hochschild::coxeter::{conjecture_b_prediction, conjecture_report, known_factorization};
use hochschild::doubling::verify_doubling_construction;
use hochschild::dyck::verify_isomorphism;
use hochschild::enumeration::{
    chain_polynomial, classify_chains, closed_form_chain_count, degree_profile,
    degree_profile_closed_form, mini_observations, phi, phi_inverse, verify_n_powers, z_counts,
    Variant, ZSystem,
};
use hochschild::invariants::{
    birkhoff_reconstruction, certify_el_shellability, chain_labels, check_semidistributive,
    is_join_irreducible_shape, is_meet_irreducible_shape, join_irreducibles, maximal_chain_stats,
    meet_irreducibles, mobius, saturated_chains, spine,
};
use hochschild::poset::{is_lattice, FinitePoset};
use hochschild::triword::{generate, hasse, Triword};

use crate::SuiteArg;

pub struct CheckReport {
    pub lines: Vec<String>,
    pub failures: usize,
    pub items: usize,
}

struct Log {
    lines: Vec<String>,
    failures: usize,
    items: usize,
}

impl Log {
    fn check(&mut self, suite: &str, good: bool, msg: String) {
        self.items += 1;
        if good {
            self.lines.push(format!("{suite}: ok: {msg}"));
        } else {
            self.failures += 1;
            self.lines.push(format!("{suite}: FAIL: {msg}"));
        }
    }

    fn note(&mut self, suite: &str, msg: String) {
        self.lines.push(format!("{suite}: note: {msg}"));
    }
}

pub fn run(n_max: usize, suite: SuiteArg) -> CheckReport {
    let mut log = Log { lines: Vec::new(), failures: 0, items: 0 };
    // fixed order: suite name, then n within each item
    if matches!(suite, SuiteArg::All | SuiteArg::Counts) {
        counts_suite(&mut log, n_max);
    }
    if matches!(suite, SuiteArg::All | SuiteArg::Coxeter) {
        coxeter_suite(&mut log, n_max);
    }
    if matches!(suite, SuiteArg::All | SuiteArg::Doubling) {
        doubling_suite(&mut log, n_max);
    }
    if matches!(suite, SuiteArg::All | SuiteArg::Lattice) {
        lattice_suite(&mut log, n_max);
    }
    if matches!(suite, SuiteArg::All | SuiteArg::Shell) {
        shell_suite(&mut log, n_max);
    }
    CheckReport { lines: log.lines, failures: log.failures, items: log.items }
}

fn counts_suite(log: &mut Log, n_max: usize) {
    let hi = n_max.min(10);
    if hi >= 2 {
        let mut bad = Vec::new();
        for n in 2..=hi {
            if degree_profile(n) != degree_profile_closed_form(n) {
                bad.push(format!("profile differs at n={n}"));
            }
            let poset = hasse(n);
            let up = poset.up_adjacency();
            let down = poset.down_adjacency();
            for i in 0..poset.len() {
                if up[i].len() + down[i].len() != n {
                    bad.push(format!("{} has degree {} in Tr({n})", poset.label(i), up[i].len() + down[i].len()));
                }
            }
        }
        log.check(
            "counts",
            bad.is_empty(),
            if bad.is_empty() {
                format!("degree polynomial factors as (x+y)^(n-2)(x^2+(n+1)xy+y^2) for n = 2..={hi}")
            } else {
                bad.join("; ")
            },
        );
    }

    let hi = n_max.min(5);
    let mut bad = Vec::new();
    for variant in [Variant::Tr, Variant::Mu] {
        for n in 1..=hi {
            for k in 1..=3usize {
                let classes = classify_chains(n, k, variant);
                let brute: Vec<BigInt> = classes.iter().map(|c| BigInt::from(c.len())).collect();
                let (z, total) = z_counts(n, k, variant);
                if z != brute || total != brute.iter().sum::<BigInt>() {
                    bad.push(format!("n={n} k={k} {}", variant.name()));
                }
            }
        }
    }
    log.check(
        "counts",
        bad.is_empty(),
        if bad.is_empty() {
            format!("recurrence counts equal brute-force chain enumeration for n <= {hi}, k <= 3")
        } else {
            format!("recurrence vs brute force differs at: {}", bad.join(", "))
        },
    );

    let hi = n_max.min(12);
    let mut bad = Vec::new();
    for variant in [Variant::Tr, Variant::Mu] {
        for k in 1..=5usize {
            let system = ZSystem::new(k, variant);
            for n in 1..=hi {
                if closed_form_chain_count(n, k, variant).unwrap() != system.total(n) {
                    bad.push(format!("n={n} k={k} {}", variant.name()));
                }
            }
        }
    }
    log.check(
        "counts",
        bad.is_empty(),
        if bad.is_empty() {
            format!("closed forms match the recurrence for n <= {hi}, k <= 5, both families")
        } else {
            format!("closed form vs recurrence differs at: {}", bad.join(", "))
        },
    );

    let full_constants = [3i64, 17, 142, 1569, 21576];
    let mini_constants = [1i64, 2, 6, 24, 120];
    let mut bad = Vec::new();
    for k in 1..=5usize {
        let full = chain_polynomial(k, Variant::Tr);
        let base = BigInt::from(k as u64 + 1);
        if full.constant_term != BigRational::from_integer(BigInt::from(full_constants[k - 1]))
            || full.value_at_one != BigRational::from_integer(base.pow(k as u32 + 1))
        {
            bad.push(format!("k={k} tr"));
        }
        let mini = chain_polynomial(k, Variant::Mu);
        if mini.constant_term != BigRational::from_integer(BigInt::from(mini_constants[k - 1]))
            || mini.value_at_one != BigRational::from_integer(base.pow(k as u32))
        {
            bad.push(format!("k={k} mu"));
        }
    }
    log.check(
        "counts",
        bad.is_empty(),
        if bad.is_empty() {
            "polynomial parts carry the recorded constants and values at 1 (k <= 5)".into()
        } else {
            format!("polynomial constants differ at: {}", bad.join(", "))
        },
    );

    let hi = n_max.min(4);
    let mut bad = Vec::new();
    if hi >= 2 {
        for variant in [Variant::Tr, Variant::Mu] {
            for n in 2..=hi {
                for k in 1..=3usize {
                    let classes = classify_chains(n, k, variant);
                    let (z, _) = z_counts(n, k, variant);
                    for (i, chains) in classes.iter().enumerate() {
                        let mut images = std::collections::BTreeSet::new();
                        for chain in chains {
                            let (t, dropped) = phi(chain).unwrap();
                            let key: Vec<String> = dropped.iter().map(|u| u.to_string()).collect();
                            if !images.insert((t, key)) {
                                bad.push(format!("collision at n={n} k={k} class {i}"));
                            }
                            if phi_inverse(i, t, &dropped).unwrap() != *chain {
                                bad.push(format!("round trip at n={n} k={k} class {i}"));
                            }
                        }
                        if BigInt::from(chains.len()) != z[i] {
                            bad.push(format!("class size at n={n} k={k} class {i}"));
                        }
                    }
                }
            }
        }
    }
    log.check(
        "counts",
        bad.is_empty(),
        if bad.is_empty() {
            format!("letter dropping is injective and invertible on all chains for n <= {hi}, k <= 3")
        } else {
            bad.join("; ")
        },
    );

    let mut bad = Vec::new();
    for k in 1..=6usize {
        let report = verify_n_powers(k);
        if !report.holds() {
            bad.push(format!("k={k}: {:?}", report.failures));
        }
    }
    log.check(
        "counts",
        bad.is_empty(),
        if bad.is_empty() {
            "shifted recurrence powers carry the factorial entries (k <= 6)".into()
        } else {
            bad.join("; ")
        },
    );

    for n in 1..=n_max.min(6) {
        let obs = mini_observations(n);
        log.note(
            "counts",
            format!(
                "zero-free poset at n={n}: {} elements, lattice: {}, semidistributive: {}, constant degree sum: {}",
                obs.size,
                obs.is_lattice,
                obs.is_semidistributive.map_or("n/a".into(), |b| b.to_string()),
                obs.constant_degree_sum.map_or("no".into(), |d| d.to_string()),
            ),
        );
    }
}

fn coxeter_suite(log: &mut Log, n_max: usize) {
    // recompute up to 6 at most: the 320-element row is a deliberate,
    // multi-minute opt-in that lives in the test suite instead
    let hi = n_max.min(6);
    for n in 1..=hi {
        let r = conjecture_report(n);
        log.check(
            "coxeter",
            r.conjecture_a == Some(true),
            format!("f_{n} factors into cyclotomic polynomials entirely"),
        );
        log.check(
            "coxeter",
            r.table_match == Some(true),
            format!(
                "computed f_{n} equals the recorded row ({})",
                r.factorization.as_deref().unwrap_or("no factorization")
            ),
        );
        match r.prediction_match {
            Some(true) => log.note("coxeter", format!("exponent rule reproduces f_{n}")),
            _ => log.note(
                "coxeter",
                format!(
                    "exponent rule differs from f_{n} at indices {:?} (a conjectural first approximation; reported, not a failure)",
                    r.mismatched_indices
                ),
            ),
        }
    }
    for n in 7..=n_max.min(10) {
        let known = known_factorization(n).expect("rows are recorded through n = 10");
        let predicted = conjecture_b_prediction(n);
        let mismatched = known.mismatched_indices(&predicted);
        log.note(
            "coxeter",
            format!(
                "f_{n} (degree {}) is not recomputed here; the recorded row stands in",
                known.degree()
            ),
        );
        if mismatched.is_empty() {
            log.note("coxeter", format!("exponent rule reproduces the recorded f_{n}"));
        } else {
            log.note(
                "coxeter",
                format!(
                    "exponent rule differs from the recorded f_{n} at indices {mismatched:?} (reported, not a failure)"
                ),
            );
        }
    }
    if n_max > 10 {
        log.note("coxeter", "no rows are recorded above n = 10".into());
    }
}

fn doubling_suite(log: &mut Log, n_max: usize) {
    let hi = n_max.min(6);
    let mut bad = Vec::new();
    for n in 1..=hi {
        let report = verify_doubling_construction(n).unwrap();
        if !report.holds() {
            bad.push(report.to_string());
        }
    }
    log.check(
        "doubling",
        bad.is_empty(),
        if bad.is_empty() {
            format!("two doubling steps per letter rebuild Tr(n+1) exactly for n <= {hi}")
        } else {
            bad.join("; ")
        },
    );

    let hi = n_max.min(4);
    let mut bad = Vec::new();
    for n in 1..=hi {
        let report = check_semidistributive(n);
        if !report.holds() {
            bad.push(format!(
                "n={n}: {} join / {} meet violations",
                report.join_violations.len(),
                report.meet_violations.len()
            ));
        }
    }
    log.check(
        "doubling",
        bad.is_empty(),
        if bad.is_empty() {
            format!("both semidistributive laws hold on all triples for n <= {hi}")
        } else {
            bad.join("; ")
        },
    );
}

fn distributive(p: &FinitePoset) -> bool {
    let closure = p.closure();
    let size = p.len();
    let join: Vec<Vec<usize>> = (0..size)
        .map(|a| (0..size).map(|b| closure.join(a, b).unwrap()).collect())
        .collect();
    let meet: Vec<Vec<usize>> = (0..size)
        .map(|a| (0..size).map(|b| closure.meet(a, b).unwrap()).collect())
        .collect();
    for a in 0..size {
        for b in 0..size {
            for c in 0..size {
                if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]] {
                    return false;
                }
            }
        }
    }
    true
}

fn lattice_suite(log: &mut Log, n_max: usize) {
    let column = [2usize, 5, 12, 28, 64, 144, 320, 704, 1536, 3328];
    let hi = n_max.min(10);
    let mut bad = Vec::new();
    for n in 1..=hi {
        let count = generate(n).len();
        let formula = if n == 1 { 2 } else { (1usize << (n - 2)) * (n + 3) };
        if count != column[n - 1] || count != formula {
            bad.push(format!("n={n}: counted {count}"));
        }
    }
    log.check(
        "lattice",
        bad.is_empty(),
        if bad.is_empty() {
            format!("element counts equal 2^(n-2)(n+3) and the recorded column for n <= {hi}")
        } else {
            bad.join("; ")
        },
    );

    let hi = n_max.min(5);
    let mut bad = Vec::new();
    for n in 1..=hi {
        let words = generate(n);
        let poset = hasse(n);
        if !is_lattice(&poset) {
            bad.push(format!("Tr({n}) is not a lattice"));
            continue;
        }
        let closure = poset.closure();
        let index: Vec<usize> = words
            .iter()
            .map(|u| poset.index_of(&u.to_string()).unwrap())
            .collect();
        'outer: for (a, u) in words.iter().enumerate() {
            for (b, v) in words.iter().enumerate() {
                let join = u.join(v).unwrap();
                let meet = u.meet(v).unwrap();
                if poset.label(closure.join(index[a], index[b]).unwrap()) != join.to_string()
                    || poset.label(closure.meet(index[a], index[b]).unwrap()) != meet.to_string()
                    || &u.join(&meet).unwrap() != u
                    || &u.meet(&join).unwrap() != u
                {
                    bad.push(format!("n={n}: {u} vs {v}"));
                    break 'outer;
                }
            }
        }
    }
    log.check(
        "lattice",
        bad.is_empty(),
        if bad.is_empty() {
            format!("meet and join equal the exhaustive greatest/least bounds on every pair for n <= {hi}")
        } else {
            bad.join("; ")
        },
    );

    let hi = n_max.min(6);
    let mut bad = Vec::new();
    for n in 1..=hi {
        let report = verify_isomorphism(n).unwrap();
        if !report.holds() {
            bad.push(report.to_string());
        }
    }
    log.check(
        "lattice",
        bad.is_empty(),
        if bad.is_empty() {
            format!("the Dyck-path interval mirrors the word lattice, covers preserved both ways, for n <= {hi}")
        } else {
            bad.join("; ")
        },
    );

    let hi = n_max.min(5);
    let mut bad = Vec::new();
    for n in 1..=hi {
        let words = generate(n);
        for u in &words {
            for v in &words {
                if u.leq(v).unwrap() {
                    let value = mobius(u, v).unwrap();
                    if !(-1..=1).contains(&value) {
                        bad.push(format!("mu([{u}, {v}]) = {value}"));
                    }
                }
            }
        }
    }
    log.check(
        "lattice",
        bad.is_empty(),
        if bad.is_empty() {
            format!("Möbius values of all intervals lie in {{-1, 0, 1}} for n <= {hi}")
        } else {
            bad.join("; ")
        },
    );

    let hi = n_max.min(8);
    let mut bad = Vec::new();
    for n in 1..=hi {
        let joins = join_irreducibles(n);
        let meets = meet_irreducibles(n);
        if joins.len() != 2 * n - 1 || meets.len() != 2 * n - 1 {
            bad.push(format!("irreducible counts at n={n}: {} joins, {} meets", joins.len(), meets.len()));
        }
        for u in generate(n) {
            if joins.contains(&u) != is_join_irreducible_shape(&u)
                || meets.contains(&u) != is_meet_irreducible_shape(&u)
            {
                bad.push(format!("irreducible shape mismatch on {u} at n={n}"));
            }
        }
        let (longest, _) = maximal_chain_stats(n);
        if longest != 2 * n - 1 {
            bad.push(format!("longest chain at n={n} has {longest} covers"));
        }
        let sp = spine(n);
        if sp.len() != 1 << n {
            bad.push(format!("spine size at n={n} is {}", sp.len()));
        } else if !is_lattice(&sp) || !distributive(&sp) {
            bad.push(format!("spine at n={n} is not a distributive lattice"));
        }
    }
    log.check(
        "lattice",
        bad.is_empty(),
        if bad.is_empty() {
            format!("2n-1 irreducibles of each kind with exact shapes, longest chain 2n-1, distributive spine of size 2^n, for n <= {hi}")
        } else {
            bad.join("; ")
        },
    );

    let hi = n_max.min(5);
    let mut bad = Vec::new();
    for n in 1..=hi {
        if !birkhoff_reconstruction(n).unwrap() {
            bad.push(format!("n={n}"));
        }
    }
    log.check(
        "lattice",
        bad.is_empty(),
        if bad.is_empty() {
            format!("the spine is the ideal lattice of its own irreducibles for n <= {hi}")
        } else {
            format!("ideal reconstruction differs at: {}", bad.join(", "))
        },
    );
}

fn shell_suite(log: &mut Log, n_max: usize) {
    let hi = n_max.min(5);
    let mut bad = Vec::new();
    let mut intervals = 0usize;
    for n in 1..=hi {
        for report in certify_el_shellability(n) {
            intervals += 1;
            if !report.holds() {
                bad.push(format!("n={n}: {report}"));
            }
        }
    }
    log.check(
        "shell",
        bad.is_empty(),
        if bad.is_empty() {
            format!("every interval has one increasing chain, lex-first, and at most one weakly decreasing chain ({intervals} intervals, n <= {hi})")
        } else {
            bad.join("; ")
        },
    );

    if hi >= 3 {
        let bottom: Triword = "000".parse().unwrap();
        let top: Triword = "122".parse().unwrap();
        let chains = saturated_chains(&bottom, &top).unwrap();
        let mut increasing = Vec::new();
        let mut decreasing = Vec::new();
        for chain in &chains {
            let labels = chain_labels(chain).unwrap();
            if labels.windows(2).all(|p| p[0] < p[1]) {
                increasing.push(chain);
            }
            if labels.windows(2).all(|p| p[0] >= p[1]) {
                decreasing.push(chain);
            }
        }
        let chain_words = |chain: &Vec<Triword>| -> Vec<String> {
            chain.iter().map(|u| u.to_string()).collect()
        };
        let good = increasing.len() == 1
            && decreasing.len() == 1
            && chain_words(increasing[0]) == ["000", "100", "110", "120", "121", "122"]
            && chain_words(decreasing[0]) == ["000", "002", "022", "122"];
        log.check(
            "shell",
            good,
            if good {
                "the two distinguished chains of [000, 122] come out verbatim".into()
            } else {
                format!(
                    "distinguished chains of [000, 122] differ: increasing {:?}, decreasing {:?}",
                    increasing.iter().map(|c| chain_words(c)).collect::<Vec<_>>(),
                    decreasing.iter().map(|c| chain_words(c)).collect::<Vec<_>>()
                )
            },
        );
    }
}
