//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the measured values (run with `--nocapture` to see them).
//!
//! Criterion 9 (the new codes' full lower-bound proofs and codeword
//! counts) is long-running by design and marked `#[ignore]`; run it
//! explicitly with `cargo test --release --test acceptance -- --ignored`.

use f4codes::catalog::{self, Tier};
use f4codes::circulant::{block_matrix, BinaryMatrix, CirculantPair};
use f4codes::code::{predict_type_prop1, type_by_degrees, AdditiveCode, TypeLabel};
use f4codes::minweight::{
    count_words_of_weight, find_word_of_weight_at_most, min_weight_enumerate, min_weight_windowed,
    verify_certificate, verify_no_word_below, EngineConfig, VerifyOutcome,
};
use f4codes::search::{
    exhaustive_search, random_search, single_circulant_search, SearchConfig, TypeFilter,
};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn eng() -> EngineConfig {
    EngineConfig::default()
}

fn random_pair(rng: &mut ChaCha8Rng, n: usize) -> CirculantPair {
    let mut a_pos = Vec::new();
    for j in 2..=n {
        let partner = ((n + 1 - j) % n) + 1;
        if j <= partner && rng.gen_bool(0.5) {
            a_pos.push(j);
            if partner != j {
                a_pos.push(partner);
            }
        }
    }
    let b_pos: Vec<usize> = (1..=n).filter(|_| rng.gen_bool(0.5)).collect();
    CirculantPair::from_positions(n, &a_pos, &b_pos).unwrap()
}

fn random_adjacency(rng: &mut ChaCha8Rng, v: usize) -> BinaryMatrix {
    let mut m = BinaryMatrix::zero(v, v);
    for i in 0..v {
        for j in (i + 1)..v {
            if rng.gen_bool(0.5) {
                m.set(i, j, true);
                m.set(j, i, true);
            }
        }
    }
    m
}

/// Every valid pair of block order n, in search order.
fn all_pairs(n: usize) -> Vec<CirculantPair> {
    let free: Vec<usize> = (2..=n)
        .filter(|&j| j <= ((n + 1 - j) % n) + 1)
        .collect();
    let mut out = Vec::new();
    for a_bits in 0u64..1 << free.len() {
        let mut a_pos = Vec::new();
        for (i, &j) in free.iter().enumerate() {
            if a_bits >> i & 1 == 1 {
                a_pos.push(j);
                let partner = ((n + 1 - j) % n) + 1;
                if partner != j {
                    a_pos.push(partner);
                }
            }
        }
        for b_bits in 0u64..1 << n {
            let b_pos: Vec<usize> = (0..n).filter(|i| b_bits >> i & 1 == 1).map(|i| i + 1).collect();
            out.push(CirculantPair::from_positions(n, &a_pos, &b_pos).unwrap());
        }
    }
    out
}

#[test]
fn criterion_1_table_fast_tier() {
    let t = Instant::now();
    let cfg = eng();
    for entry in catalog::entries() {
        if entry.code_length() > 28 {
            continue;
        }
        let report = catalog::verify_entry(entry, Tier::Fast, &cfg).unwrap();
        assert!(report.self_dual, "{} not self-dual", entry.name);
        assert_eq!(report.computed_d, entry.claimed_d, "{} min weight", entry.name);
        assert_eq!(report.type_ok, Some(true), "{} type", entry.name);
        verify_certificate(&entry.code(), &report.certificate).unwrap();
    }
    println!(
        "criterion 1: PASS - fast tier (lengths 14..28) d and type match in {:.1?}",
        t.elapsed()
    );
}

#[test]
fn criterion_2_table_full_tier() {
    let t = Instant::now();
    let cfg = eng();
    for entry in catalog::entries() {
        let len = entry.code_length();
        if !(30..=40).contains(&len) {
            continue;
        }
        let code = entry.code();
        let cert = min_weight_windowed(&code, &cfg).unwrap();
        assert_eq!(cert.claimed_d, entry.claimed_d, "{}", entry.name);
        verify_certificate(&code, &cert).unwrap();
        if let Some(claimed) = entry.claimed_type {
            assert_eq!(predict_type_prop1(&entry.pair()), claimed, "{}", entry.name);
        }
    }
    println!(
        "criterion 2: PASS - full tier (lengths 30..40) windowed d matches in {:.1?}",
        t.elapsed()
    );
}

#[test]
fn criterion_3_type_three_way_agreement() {
    let t = Instant::now();
    let cfg = eng();
    let mut checked = 0u64;
    // Exhaustive over all valid pairs with code length <= 16.
    for n in 1..=8 {
        for pair in all_pairs(n) {
            let by_prop = predict_type_prop1(&pair);
            let by_deg = type_by_degrees(&block_matrix(&pair)).unwrap();
            let code = AdditiveCode::from_pair(&pair).unwrap();
            let by_enum = code
                .classify_type_by_enumeration(cfg.enum_budget, cfg.threads)
                .unwrap();
            assert_eq!(by_prop, by_deg, "pair {pair:?}");
            assert_eq!(by_deg, by_enum, "pair {pair:?}");
            checked += 1;
        }
    }
    // 10^3 random pairs with code length <= 24 (enumeration fits 2^24).
    let mut rng = ChaCha8Rng::seed_from_u64(0xc3);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=12);
        let pair = random_pair(&mut rng, n);
        let by_prop = predict_type_prop1(&pair);
        let by_deg = type_by_degrees(&block_matrix(&pair)).unwrap();
        let code = AdditiveCode::from_pair(&pair).unwrap();
        let by_enum = code
            .classify_type_by_enumeration(cfg.enum_budget, cfg.threads)
            .unwrap();
        assert_eq!(by_prop, by_deg, "pair {pair:?}");
        assert_eq!(by_deg, by_enum, "pair {pair:?}");
        checked += 1;
    }
    println!(
        "criterion 3: PASS - three-way type agreement on {checked} pairs, zero disagreements, {:.1?}",
        t.elapsed()
    );
}

#[test]
fn criterion_4_self_duality_property() {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xc4);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=32); // code length 2n <= 64
        let pair = random_pair(&mut rng, n);
        assert!(
            AdditiveCode::from_pair(&pair).unwrap().is_self_dual(),
            "pair {pair:?}"
        );
    }
    for _ in 0..1000 {
        let v = rng.gen_range(1..=64);
        let adj = random_adjacency(&mut rng, v);
        assert!(AdditiveCode::from_graph(&adj).unwrap().is_self_dual());
    }
    println!(
        "criterion 4: PASS - 1000 random pairs + 1000 random graphs all self-dual, {:.1?}",
        t.elapsed()
    );
}

#[test]
fn criterion_5_oracle_equivalence() {
    let t = Instant::now();
    let cfg = eng();
    let mut rng = ChaCha8Rng::seed_from_u64(0xc5);
    for i in 0..200 {
        let n = rng.gen_range(1..=12); // code length 2n <= 24
        let pair = random_pair(&mut rng, n);
        let code = AdditiveCode::from_pair(&pair).unwrap();
        let by_enum = min_weight_enumerate(&code, &cfg).unwrap();
        let by_window = min_weight_windowed(&code, &cfg).unwrap();
        assert_eq!(by_enum.claimed_d, by_window.claimed_d, "case {i}: {pair:?}");
        verify_certificate(&code, &by_window).unwrap();
    }
    for entry in catalog::entries() {
        if entry.code_length() > 24 {
            continue;
        }
        let code = entry.code();
        let by_enum = min_weight_enumerate(&code, &cfg).unwrap();
        let by_window = min_weight_windowed(&code, &cfg).unwrap();
        assert_eq!(by_enum.claimed_d, by_window.claimed_d, "{}", entry.name);
    }
    println!(
        "criterion 5: PASS - windowed == enumerate on 200 random codes + small catalog, {:.1?}",
        t.elapsed()
    );
}

#[test]
fn criterion_6_exhaustive_search_reproduction() {
    let t = Instant::now();
    for (length, want) in [(14u32, 6u32), (16, 6), (18, 6), (20, 8)] {
        let record = exhaustive_search(&SearchConfig::exhaustive(length as usize)).unwrap();
        assert_eq!(record.best_d, want, "length {length}");
        assert!(record.finished);
        // Every retained witness re-certifies to best_d.
        for w in record.witnesses.iter().take(4) {
            let cert = min_weight_enumerate(&w.build_code().unwrap(), &eng()).unwrap();
            assert_eq!(cert.claimed_d, record.best_d);
        }
    }
    let mut cfg = SearchConfig::exhaustive(14);
    cfg.type_filter = TypeFilter::TypeI;
    let record = exhaustive_search(&cfg).unwrap();
    assert_eq!(record.best_d, 5, "Type I record at length 14");
    println!(
        "criterion 6: PASS - exhaustive records 6,6,6,8 at 14..20 and Type I 5 at 14, {:.1?}",
        t.elapsed()
    );
}

#[test]
fn criterion_7_single_circulant_comparison() {
    let t = Instant::now();
    let r14 = single_circulant_search(&SearchConfig::single(14)).unwrap();
    assert_eq!(r14.best_d, 6);
    let r36 = single_circulant_search(&SearchConfig::single(36)).unwrap();
    assert_eq!(r36.best_d, 11);
    // The pair construction beats the single circulant at length 36.
    let pair_36 = catalog::lookup("C36II").unwrap().claimed_d;
    assert!(pair_36 > r36.best_d);
    println!(
        "criterion 7: PASS - single-circulant records 6 (n=14) and 11 (n=36) < 12, {:.1?}",
        t.elapsed()
    );
}

#[test]
fn criterion_8_new_code_witnesses() {
    let cfg = eng();
    for (name, d) in [("C66", 17u32), ("C78", 19), ("C94", 21)] {
        let t = Instant::now();
        let entry = catalog::lookup(name).unwrap();
        let code = entry.code();
        let word = find_word_of_weight_at_most(&code, d, &cfg)
            .unwrap_or_else(|| panic!("{name}: no weight-{d} word found"));
        assert!(word.weight() as u32 <= d);
        assert!(code.contains(&word).unwrap());
        println!(
            "criterion 8: PASS - {name} weight-{} witness in {:.1?}",
            word.weight(),
            t.elapsed()
        );
    }
}

/// Long tier: full lower-bound proofs and codeword counts for the new
/// codes. On a 2-core desktop the C66 proof takes ~10 minutes, the C78
/// proof hours, the C94 proof weeks, and the C66/C78 counts hours to
/// days; run explicitly with `-- --ignored` (release profile advised).
#[test]
#[ignore = "long tier: unbounded runtime by design"]
fn criterion_9_new_codes_long_tier() {
    let cfg = eng();
    for (name, d) in [("C66", 17u32), ("C78", 19), ("C94", 21)] {
        let t = Instant::now();
        let entry = catalog::lookup(name).unwrap();
        let code = entry.code();
        match verify_no_word_below(&code, d, &cfg).unwrap() {
            VerifyOutcome::Holds(cert) => {
                verify_certificate(&code, &cert).unwrap();
                println!(
                    "criterion 9: {name} min weight >= {d} proven in {:.1?}",
                    t.elapsed()
                );
            }
            VerifyOutcome::Refuted(w) => {
                panic!("{name}: unexpected word of weight {}", w.weight())
            }
        }
        for &(w, claimed) in entry.claimed_counts {
            let t = Instant::now();
            let report = count_words_of_weight(&code, w, &cfg).unwrap();
            assert!(report.exhaustive, "{name} A_{w} count not certified");
            assert_eq!(report.count, claimed, "{name} A_{w}");
            println!(
                "criterion 9: {name} A_{w} = {} matches in {:.1?}",
                report.count,
                t.elapsed()
            );
        }
    }
    println!("criterion 9: PASS - new-code proofs and counts");
}

#[test]
fn criterion_10_determinism() {
    let t = Instant::now();
    let entry = catalog::lookup("C16II").unwrap();
    let code = entry.code();

    let base_cert = min_weight_windowed(&code, &eng().with_threads(1)).unwrap();
    let base_dist = code.weight_distribution(1 << 28, 1).unwrap();
    let base_find = find_word_of_weight_at_most(&code, 6, &eng().with_threads(1));
    let base_count = count_words_of_weight(&code, 6, &eng().with_threads(1)).unwrap();
    let base_enum = min_weight_enumerate(&code, &eng().with_threads(1)).unwrap();
    for threads in [4, 8] {
        let cfg = eng().with_threads(threads);
        assert_eq!(min_weight_windowed(&code, &cfg).unwrap(), base_cert);
        assert_eq!(code.weight_distribution(1 << 28, threads).unwrap(), base_dist);
        assert_eq!(find_word_of_weight_at_most(&code, 6, &cfg), base_find);
        assert_eq!(count_words_of_weight(&code, 6, &cfg).unwrap(), base_count);
        assert_eq!(min_weight_enumerate(&code, &cfg).unwrap(), base_enum);
    }

    let mut search_cfg = SearchConfig::exhaustive(14);
    search_cfg.engine = eng().with_threads(1);
    let base_search = exhaustive_search(&search_cfg).unwrap();
    for threads in [4, 8] {
        let mut cfg = search_cfg.clone();
        cfg.engine = eng().with_threads(threads);
        assert_eq!(exhaustive_search(&cfg).unwrap(), base_search);
    }

    let mut single_cfg = SearchConfig::single(14);
    single_cfg.engine = eng().with_threads(1);
    let base_single = single_circulant_search(&single_cfg).unwrap();
    for threads in [4, 8] {
        let mut cfg = single_cfg.clone();
        cfg.engine = eng().with_threads(threads);
        assert_eq!(single_circulant_search(&cfg).unwrap(), base_single);
    }

    let rand_cfg = SearchConfig::random(16, 0xd5ee, 1500);
    let a = random_search(&rand_cfg).unwrap();
    let b = random_search(&rand_cfg).unwrap();
    assert_eq!(a, b);
    let mut rand_threaded = rand_cfg.clone();
    rand_threaded.engine = eng().with_threads(8);
    assert_eq!(random_search(&rand_threaded).unwrap(), a);

    println!(
        "criterion 10: PASS - bit-identical results at 1/4/8 workers; random search reproducible, {:.1?}",
        t.elapsed()
    );
}
