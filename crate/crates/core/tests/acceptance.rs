//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each
//! with its wall time, and exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

use phitilde::analysis::golden::{self, GoldenTable};
use phitilde::analysis::{
    check_property, conjecture_scan, preimage, verify_paper_tables_with, PropertyId, ValueIndex,
};
use phitilde::bounds::{compute_q, global_threshold, q_cardinality};
use phitilde::phitilde::{
    enumerate_coprime_nonprimes, phi_tilde, phi_tilde_at_prime_index, phi_tilde_by_enumeration,
    phi_tilde_primorial, phi_tilde_value,
};
use phitilde::sieve::{
    build_sieve, count_primes_sublinear, primorial, segmented_prime_count, SieveTables,
};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

struct Shared {
    tables: SieveTables,
    index: ValueIndex,
}

fn first_twenty(s: &Shared) -> Check {
    let data = GoldenTable::load(golden::FIRST_TWENTY).map_err(e)?;
    for row in &data.entries {
        let set = enumerate_coprime_nonprimes(row.key, &s.tables).map_err(e)?;
        ensure(set.elements == row.values, || {
            format!("E_{} = {:?}", row.key, set.elements)
        })?;
        let value = phi_tilde(row.key, &s.tables).map_err(e)?.phi_tilde;
        ensure(value == row.values.len() as u64, || {
            format!("phi_tilde({}) = {value}", row.key)
        })?;
    }
    Ok(format!("{}/20 rows", data.entries.len()))
}

fn formula_vs_oracle(s: &Shared) -> Check {
    for n in 1..=100_000 {
        let formula = phi_tilde(n, &s.tables).map_err(e)?.phi_tilde;
        let oracle = phi_tilde_by_enumeration(n, &s.tables).map_err(e)?;
        ensure(formula == oracle, || {
            format!("n = {n}: formula {formula}, |E_n| = {oracle}")
        })?;
    }
    Ok("n <= 100000, 0 exceptions".into())
}

fn prime_identity(s: &Shared) -> Check {
    let mut count = 0;
    for (idx, p) in s.tables.primes().take_while(|&p| p <= 100_000).enumerate() {
        let k = idx as u64 + 1;
        let value = phi_tilde(p, &s.tables).map_err(e)?.phi_tilde;
        ensure(value == p - k, || {
            format!("phi_tilde(p_{k} = {p}) = {value}")
        })?;
        ensure(phi_tilde_at_prime_index(k).map_err(e)? == value, || {
            format!("index route at k = {k}")
        })?;
        count += 1;
    }
    Ok(format!("{count} primes <= 100000"))
}

fn value_one(s: &Shared) -> Check {
    let expected = vec![1, 2, 3, 4, 6, 8, 12, 18, 24, 30];
    let report = preimage(1, &s.tables).map_err(e)?;
    ensure(report.elements == expected, || {
        format!("s(1) = {:?}", report.elements)
    })?;
    let bound = report.certificate.global_bound;
    let above = (31..=bound).find(|&n| phi_tilde_value(n, &s.tables) <= 1);
    ensure(above.is_none(), || {
        format!("phi_tilde({}) <= 1", above.unwrap())
    })?;
    Ok(format!(
        "certified bound {bound}, phi_tilde(l) > 1 for 31 <= l <= bound"
    ))
}

fn missing_up_to_hundred(s: &Shared) -> Check {
    let missing = s.index.missing();
    ensure(missing == vec![13, 31, 70], || {
        format!("missing = {missing:?}")
    })?;
    let worst = (1..=100)
        .map(|k| s.index.certificate(k).map(|c| c.global_bound))
        .collect::<Result<Vec<_>, _>>()
        .map_err(e)?
        .into_iter()
        .max()
        .unwrap();
    ensure(worst <= 400_000, || format!("largest bound {worst} > 4e5"))?;
    ensure(s.index.scanned_bound() >= worst, || {
        "scan shorter than bounds".into()
    })?;
    let violations = s.index.certificate_violations();
    ensure(violations.is_empty(), || {
        format!("solutions above bound: {violations:?}")
    })?;
    Ok(format!(
        "{{13, 31, 70}}, every k <= 100 scanned to {}",
        s.index.scanned_bound()
    ))
}

fn singletons(s: &Shared) -> Check {
    let expected = vec![16, 39, 47, 49, 53, 57, 58, 65, 66, 76, 85, 91, 94];
    let found = s.index.singletons();
    ensure(found == expected, || format!("singletons = {found:?}"))?;
    let s16 = s.index.preimage(16).map_err(e)?.elements;
    ensure(s16 == vec![144], || format!("s(16) = {s16:?}"))?;
    Ok("13 singleton values, s(16) = {144}".into())
}

fn smallest_tables(s: &Shared) -> Check {
    let data = GoldenTable::load(golden::SMALLEST_PREIMAGE).map_err(e)?;
    let mut populated = 0;
    let mut absent = Vec::new();
    for row in &data.entries {
        let want = row.values.first().copied();
        let got = s.index.smallest(row.key).map_err(e)?;
        ensure(want == got, || {
            format!("k = {}: expected {want:?}, got {got:?}", row.key)
        })?;
        match got {
            Some(_) => populated += 1,
            None => absent.push(row.key),
        }
    }
    ensure(populated == 58 && absent == vec![13, 31], || {
        format!("{populated} populated, absent at {absent:?}")
    })?;
    Ok("58 entries match, absent at k = 13, 31".into())
}

fn observations(s: &Shared) -> Check {
    let outcomes = verify_paper_tables_with(&s.tables, &s.index).map_err(e)?;
    let obs: Vec<_> = outcomes
        .iter()
        .filter(|o| o.claim_id.starts_with("obs_"))
        .collect();
    ensure(obs.len() == 19, || {
        format!("{} observation claims", obs.len())
    })?;
    if let Some(bad) = obs.iter().find(|o| !o.passed) {
        return Err(format!("{} failed: {:?}", bad.claim_id, bad.counterexample));
    }
    let noted: Vec<&str> = obs
        .iter()
        .filter(|o| o.note.is_some())
        .map(|o| o.claim_id.as_str())
        .collect();
    ensure(noted == vec!["obs_1"], || format!("errata on {noted:?}"))?;
    let others = outcomes.iter().filter(|o| !o.passed).count();
    ensure(others == 0, || {
        format!("{others} other table claims failed")
    })?;
    Ok("19/19 sets match, obs_1 passes with erratum".into())
}

fn structural_inequalities(s: &Shared) -> Check {
    let runs = [
        (PropertyId::SquarefreePart, 100_000),
        (PropertyId::PrimePowerGrowth, 1_000_000),
        (PropertyId::PrimeSwap, 10_000),
        (PropertyId::PrimorialMin, 100_000),
    ];
    for (id, limit) in runs {
        let out = check_property(id, limit, &s.tables).map_err(e)?;
        ensure(out.passed, || {
            format!("{id} failed: {:?}", out.counterexample)
        })?;
    }
    let base_two: Vec<u64> = [2, 4, 8]
        .iter()
        .map(|&n| phi_tilde_value(n, &s.tables))
        .collect();
    ensure(base_two == vec![1, 1, 1], || {
        format!("phi_tilde(2, 4, 8) = {base_two:?}")
    })?;
    Ok("parts 1-4 hold, 0 violations; phi_tilde(2) = phi_tilde(4) = phi_tilde(8) = 1".into())
}

fn primorial_machinery(s: &Shared) -> Check {
    let q4 = compute_q(4, &s.tables).map_err(e)?;
    ensure(q4.cardinality == 4, || {
        format!("|Q_4| = {}", q4.cardinality)
    })?;
    let q: Vec<u64> = (4..=9)
        .map(|i| q_cardinality(i, &s.tables))
        .collect::<Result<_, _>>()
        .map_err(e)?;
    ensure(q.windows(2).all(|w| w[0] < w[1]), || {
        format!("|Q_i| = {q:?}")
    })?;

    // sublinear route only: no table lookup for N_i beyond the sieve
    let values: Vec<u64> = (3..=9)
        .map(|i| {
            let n = primorial(i)?;
            let r = phi_tilde_primorial(i, &s.tables)?;
            Ok::<_, phitilde::Error>(r.phi + i - count_primes_sublinear(n)?)
        })
        .collect::<Result<_, _>>()
        .map_err(e)?;
    ensure(values.windows(2).all(|w| w[0] < w[1]), || {
        format!("phi_tilde(N_i) = {values:?}")
    })?;

    let n9 = primorial(9).map_err(e)?;
    let sublinear = count_primes_sublinear(n9).map_err(e)?;
    let segmented = segmented_prime_count(n9);
    ensure(sublinear == segmented, || {
        format!("pi(N_9): {sublinear} vs {segmented}")
    })?;
    Ok(format!(
        "|Q_4..9| = {q:?}, pi(N_9) = {sublinear} by both methods"
    ))
}

fn prime_count_equivalence(_: &Shared) -> Check {
    let big = build_sieve(10_000_000).map_err(e)?;
    let mut rng = StdRng::seed_from_u64(0x5eed_cafe);
    for _ in 0..10_000 {
        let x = rng.random_range(1..=10_000_000u64);
        let fast = count_primes_sublinear(x).map_err(e)?;
        ensure(fast == big.pi(x), || {
            format!("pi({x}): {fast} vs {}", big.pi(x))
        })?;
    }
    Ok("10000 sampled x <= 1e7 agree".into())
}

fn conjecture(s: &Shared) -> Check {
    let expected: Vec<u64> = vec![
        13, 31, 70, 119, 189, 210, 235, 236, 265, 301, 303, 317, 345, 352, 366, 448, 470, 472, 479,
        498, 500,
    ];
    let index = ValueIndex::build(500, &s.tables).map_err(e)?;
    ensure(index.certificate_violations().is_empty(), || {
        "solution above its bound".into()
    })?;
    let bound_500 = global_threshold(500).map_err(e)?.global_bound;
    ensure(index.scanned_bound() >= bound_500, || {
        "scan shorter than N(500)".into()
    })?;

    let mut reports = Vec::new();
    for threads in [1, 2, 4] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(e)?;
        reports.push(
            pool.install(|| conjecture_scan(500, &s.tables))
                .map_err(e)?,
        );
    }
    reports.push(conjecture_scan(500, &s.tables).map_err(e)?);
    ensure(reports.windows(2).all(|w| w[0] == w[1]), || {
        "reports differ between runs".into()
    })?;
    ensure(reports[0].missing == expected, || {
        format!("missing = {:?}", reports[0].missing)
    })?;
    ensure(reports[0].missing == index.missing(), || {
        "scan disagrees with index".into()
    })?;
    let set: BTreeSet<u64> = reports[0].missing.iter().copied().collect();
    ensure(set.len() as u64 == reports[0].count, || {
        "count mismatch".into()
    })?;
    Ok(format!(
        "{} missing values <= 500, density {}, identical across 1/2/4 threads",
        reports[0].count, reports[0].density
    ))
}

type Criterion = (u32, &'static str, Duration, fn(&Shared) -> Check);

fn main() {
    let started = Instant::now();
    let tables = build_sieve(1_000_000).expect("sieve");
    let index = ValueIndex::build(100, &tables).expect("value index");
    let shared = Shared { tables, index };
    println!(
        "setup (sieve 1e6 + scan k <= 100): {:.2?}",
        started.elapsed()
    );

    let secs = Duration::from_secs;
    let criteria: [Criterion; 12] = [
        (1, "first-twenty table", secs(1), first_twenty),
        (2, "formula-oracle equivalence", secs(30), formula_vs_oracle),
        (3, "prime identity", secs(5), prime_identity),
        (4, "value-1 set", secs(1), value_one),
        (5, "missing values k <= 100", secs(60), missing_up_to_hundred),
        (6, "singleton values", secs(60), singletons),
        (7, "smallest-n tables", secs(60), smallest_tables),
        (8, "observations 1-19", secs(60), observations),
        (9, "structural inequalities", secs(120), structural_inequalities),
        (10, "primorial machinery", secs(300), primorial_machinery),
        (
            11,
            "prime-counting equivalence",
            secs(60),
            prime_count_equivalence,
        ),
        (12, "conjecture scan", secs(60), conjecture),
    ];

    let mut failures = 0;
    for (id, name, budget, check) in criteria {
        let t0 = Instant::now();
        let result = check(&shared);
        let elapsed = t0.elapsed();
        let (ok, detail) = match result {
            Ok(d) if elapsed <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over time budget {budget:?}")),
            Err(d) => (false, d),
        };
        if !ok {
            failures += 1;
        }
        println!(
            "[{}] criterion {id:>2} {name}: {detail} ({elapsed:.2?}, budget {budget:?})",
            if ok { "PASS" } else { "FAIL" }
        );
    }
    println!("{} of 12 criteria passed", 12 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
