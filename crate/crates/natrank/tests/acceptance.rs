//! Acceptance suite: one test per release criterion, every tolerance
//! exact and pinned in the assertions. Run with
//! `cargo test -p natrank --test acceptance -- --nocapture` to see the
//! per-criterion pass lines.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use natrank::binom::{binom, compositions_count, parallel_sum};
use natrank::{
    enumerate, lex_cmp, rank_monotone, rank_tuple, unrank_monotone, unrank_tuple,
    verify_prefix_bijection, Dimension, FnOrder, MonotoneCone, MonotoneTuple, Naturals, Space,
    Tuple, Violation,
};

fn dim(k: usize) -> Dimension {
    Dimension::new(k).unwrap()
}

/// Every monotone tuple of the given length with coordinates ≤ bound.
fn all_monotone(len: usize, bound: u64) -> Vec<MonotoneTuple> {
    fn rec(len: usize, max: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for v in (0..=max).rev() {
            prefix.push(v);
            rec(len, v, prefix, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    rec(len, bound, &mut Vec::new(), &mut raw);
    raw.iter()
        .map(|c| MonotoneTuple::from_u64s(c).unwrap())
        .collect()
}

#[test]
fn criterion_1_oracle_equivalence() {
    let started = Instant::now();
    for k in 1..=5usize {
        let mut element = MonotoneTuple::minimum(dim(k));
        for x in 0..10_000u64 {
            let rank = BigUint::from(x);
            assert_eq!(
                rank_monotone(&element),
                rank,
                "closed-form rank diverges from the successor chain at x={x}, k={k}"
            );
            assert_eq!(
                unrank_monotone(&rank, dim(k)),
                element,
                "unranking diverges from the successor chain at x={x}, k={k}"
            );
            element = element.successor();
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("criterion 1 PASS: cone rank/unrank equal successor iteration, k<=5, first 10000 ranks ({elapsed:?})");
}

#[test]
fn criterion_2_full_space_bijection() {
    let started = Instant::now();
    for k in 1..=5usize {
        let mut element = MonotoneTuple::minimum(dim(k));
        for x in 0..10_000u64 {
            let folded = element.fold();
            assert_eq!(rank_tuple(&folded), BigUint::from(x), "at x={x}, k={k}");
            element = element.successor();
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for k in 1..=10usize {
        for _ in 0..10_000 {
            let coords: Vec<u64> = (0..k).map(|_| rng.gen_range(0..=1_000_000)).collect();
            let n = Tuple::from_u64s(&coords).unwrap();
            assert_eq!(unrank_tuple(&rank_tuple(&n), dim(k)), n, "at {coords:?}");
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!("criterion 2 PASS: full-space rank inverts exactly, prefixes and 10000 random tuples per k<=10 ({elapsed:?})");
}

#[test]
fn criterion_3_successor_coherence() {
    for k in 1..=3usize {
        for m in all_monotone(k, 8) {
            let stepped = rank_monotone(&m.successor());
            let here = rank_monotone(&m);
            assert_eq!(stepped, here + 1u32, "rank step is not 1 at {m}, k={k}");
        }
    }
    println!("criterion 3 PASS: successor advances the rank by exactly 1, exhaustive k<=3, coords<=8");
}

#[test]
fn criterion_4_down_set_cardinality() {
    let started = Instant::now();
    for k in 1..=3usize {
        let tuples = all_monotone(k, 6);
        for n in &tuples {
            let below = tuples
                .iter()
                .filter(|m| lex_cmp(m.coords(), n.coords()).unwrap() == Ordering::Less)
                .count();
            assert_eq!(
                rank_monotone(n),
                BigUint::from(below),
                "rank is not the down-set size at {n}, k={k}"
            );
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    println!("criterion 4 PASS: rank equals brute-force down-set count, k<=3, coords<=6 ({elapsed:?})");
}

#[test]
fn criterion_5_summation_identities() {
    for x in 0i64..=30 {
        for y in 0i64..=30 {
            assert_eq!(
                parallel_sum(&BigInt::from(x), y).unwrap(),
                binom(&BigInt::from(x + y), &BigInt::from(y)),
                "parallel summation fails at ({x}, {y})"
            );
        }
    }

    fn brute(m: u64, j: i64) -> u64 {
        if j < 0 {
            return 0;
        }
        if m == 1 {
            return 1;
        }
        (0..=j).map(|first| brute(m - 1, j - first)).sum()
    }
    for m in 1u64..=4 {
        for j in 0i64..=8 {
            assert_eq!(
                compositions_count(m, &BigInt::from(j)).unwrap(),
                BigInt::from(brute(m, j)),
                "composition count fails at ({m}, {j})"
            );
        }
    }
    println!("criterion 5 PASS: parallel summation on [0,30]^2 and composition counts vs brute force, m<=4, j<=8");
}

#[test]
fn criterion_6_low_dimension_reductions() {
    for x in 0u64..10_000 {
        let n = Tuple::from_u64s(&[x]).unwrap();
        assert_eq!(rank_tuple(&n), BigUint::from(x), "k=1 rank is not the identity at {x}");
    }

    // triangular closed form for k=2, validated against the walk first
    let closed_form = |n1: u64, n2: u64| {
        let s = n1 + n2;
        BigUint::from(n1) + BigUint::from(s) * BigUint::from(s + 1) / 2u32
    };
    for (x, tuple) in enumerate(dim(2), Space::Full).take(500).enumerate() {
        let c: Vec<u64> = tuple
            .coords()
            .iter()
            .map(|c| u64::try_from(c).unwrap())
            .collect();
        assert_eq!(
            closed_form(c[0], c[1]),
            BigUint::from(x),
            "closed form disagrees with the enumeration oracle at rank {x}"
        );
    }
    for n1 in 0u64..=100 {
        for n2 in 0u64..=100 {
            let n = Tuple::from_u64s(&[n1, n2]).unwrap();
            assert_eq!(
                rank_tuple(&n),
                closed_form(n1, n2),
                "k=2 closed form fails at ({n1}, {n2})"
            );
        }
    }
    println!("criterion 6 PASS: k=1 rank is the identity on 0..10^4; k=2 matches the triangular closed form on [0,100]^2");
}

#[test]
fn criterion_7_wellorder_harness() {
    assert!(verify_prefix_bijection(&Naturals, 2000).passed());
    for k in 1..=4usize {
        let report = verify_prefix_bijection(&MonotoneCone::new(dim(k)), 2000);
        assert!(report.passed(), "cone k={k}: {report}");
    }

    // skips over 4 and emits it one step late: 0 1 2 3 5 4 6 7 ...
    let skipping = FnOrder {
        first: 0u64,
        compare: |a: &u64, b: &u64| a.cmp(b),
        next: |a: &u64| match a {
            3 => 5,
            5 => 4,
            4 => 6,
            _ => a + 1,
        },
    };
    assert_eq!(
        verify_prefix_bijection(&skipping, 100).violation,
        Some(Violation::RankMismatch { index: 4, counted: 5 }),
        "skipped element must surface at its proper rank"
    );

    // claims 2 < 1 while the chain emits 1 first
    let flipped = FnOrder {
        first: 0u64,
        compare: |a: &u64, b: &u64| match (a, b) {
            (1, 2) => Ordering::Greater,
            (2, 1) => Ordering::Less,
            _ => a.cmp(b),
        },
        next: |a: &u64| a + 1,
    };
    assert_eq!(
        verify_prefix_bijection(&flipped, 100).violation,
        Some(Violation::RankMismatch { index: 1, counted: 2 }),
        "inconsistent comparator must surface at the first affected rank"
    );

    // starts at 5 instead of the minimum: 5 0 1 2 3 4 6 7 ...
    let rotated = FnOrder {
        first: 5u64,
        compare: |a: &u64, b: &u64| a.cmp(b),
        next: |a: &u64| match a {
            5 => 0,
            4 => 6,
            _ => a + 1,
        },
    };
    assert_eq!(
        verify_prefix_bijection(&rotated, 100).violation,
        Some(Violation::RankMismatch { index: 0, counted: 5 }),
        "non-minimal first element must surface at rank 0"
    );
    println!("criterion 7 PASS: prefix verification accepts naturals and cones k<=4 at n=2000 and pinpoints all three broken orders");
}

#[test]
fn criterion_8_big_number_soundness() {
    let k = dim(10);
    let coords = vec![1_000_000u64; 10];
    let n = Tuple::from_u64s(&coords).unwrap();

    let rank = rank_tuple(&n);
    assert!(rank > BigUint::from(10u32).pow(60), "rank should be astronomically large");
    assert_eq!(unrank_tuple(&rank, k), n);

    // warm up, then take the median over repeated full round trips
    for _ in 0..10 {
        let r = rank_tuple(&n);
        assert_eq!(unrank_tuple(&r, k), n);
    }
    let mut samples: Vec<Duration> = (0..100)
        .map(|_| {
            let started = Instant::now();
            let r = rank_tuple(&n);
            let back = unrank_tuple(&r, k);
            let elapsed = started.elapsed();
            assert_eq!(back, n);
            elapsed
        })
        .collect();
    samples.sort();
    let median = samples[samples.len() / 2];
    assert!(
        median < Duration::from_millis(1),
        "median round trip took {median:?}"
    );
    println!(
        "criterion 8 PASS: k=10 round trip with coordinates 10^6 (rank has {} digits) is exact, median {median:?}",
        rank.to_string().len()
    );
}

#[test]
fn criterion_9_cli_determinism() {
    use std::process::Command;

    let bin = env!("CARGO_BIN_EXE_natrank");
    let enumerate_once = |format: &str| {
        let out = Command::new(bin)
            .args(["enumerate", "-k", "3", "--count", "400", "--format", format])
            .output()
            .expect("binary runs");
        assert!(out.status.success());
        out.stdout
    };
    for format in ["plain", "csv", "jsonl"] {
        assert_eq!(
            enumerate_once(format),
            enumerate_once(format),
            "{format} output differs between runs"
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let bound = BigUint::from(10u32).pow(30);
    for trial in 0..1000 {
        let bytes: Vec<u8> = (0..13).map(|_| rng.gen()).collect();
        let x = (BigUint::from_bytes_be(&bytes) % &bound).to_string();
        let k = (trial % 6 + 1).to_string();

        let decoded = Command::new(bin)
            .args(["decode", "-k", &k, &x])
            .output()
            .expect("binary runs");
        assert!(decoded.status.success());
        let coords = String::from_utf8(decoded.stdout).unwrap();

        let mut encode = Command::new(bin);
        encode.args(["encode", "-k", &k]);
        for c in coords.split_whitespace() {
            encode.arg(c);
        }
        let encoded = encode.output().expect("binary runs");
        assert!(encoded.status.success());
        assert_eq!(
            String::from_utf8(encoded.stdout).unwrap().trim(),
            x,
            "decode/encode at the process boundary is not the identity for k={k}, x={x}"
        );
    }
    println!("criterion 9 PASS: byte-identical enumeration across runs; decode->encode identity for 1000 ranks < 10^30");
}
