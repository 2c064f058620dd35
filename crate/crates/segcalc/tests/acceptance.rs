//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Run with `cargo test -p segcalc --test acceptance` (add `-- --nocapture`
//! to see the PASS lines).

use std::collections::BTreeSet;
use std::path::Path;
use std::process::Command;

use segcalc::cosets::enumerate_coset_matrices;
use segcalc::distinction::{
    classify_standard_module, classify_via_mackey, verify_admissibility_exclusion,
};
use segcalc::formula::{formulas_equivalent, Atom};
use segcalc::jl::jl_segment;
use segcalc::perm::{involutions, Involution};
use segcalc::sampling::{random_multisegment, SplitMix64};
use segcalc::segment::{is_standard_order, LineSet, Multisegment, Segment};
use segcalc::sign::Sign;
use segcalc::signs::{verify_sign_identity, SignConfig};
use segcalc::{Context, Error};

fn ctx(d: u32, eta: Sign) -> Context {
    Context::new(d, eta).unwrap()
}

/// One self-dual line and one dual pair, all with k = 1 and the given torsion.
fn small_pool(l: u32) -> (LineSet, Vec<Segment>) {
    let lines = LineSet::builder()
        .self_dual("S", 1, l)
        .dual_pair("P", "Q", 1, l)
        .finish()
        .unwrap();
    let mut pool = Vec::new();
    for label in ["S", "P", "Q"] {
        let id = lines.lookup(label).unwrap();
        for a in -2i64..=1 {
            for len in 1i64..=3 {
                pool.push(Segment::new(id, a, a + len - 1).unwrap());
            }
        }
    }
    (lines, pool)
}

/// Multisets of 1..=3 pool indices (combinations with repetition).
fn multisets_up_to_three(pool_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..pool_len {
        out.push(vec![i]);
        for j in i..pool_len {
            out.push(vec![i, j]);
            for k in j..pool_len {
                out.push(vec![i, j, k]);
            }
        }
    }
    out
}

#[test]
fn criterion_1_classifier_and_mackey_formulas_are_equivalent() {
    let mut instances = 0u64;
    for l in [1u32, 2] {
        let (lines, pool) = small_pool(l);
        let multisets = multisets_up_to_three(pool.len());
        for d in [1u32, 2, 3] {
            let c = ctx(d, Sign::Minus);
            for indices in &multisets {
                let ms: Multisegment =
                    indices.iter().map(|&i| pool[i].clone()).collect();
                instances += 1;
                let n = ms.total_group_size(&lines);
                let f = classify_standard_module(&ms, c, &lines);
                let g = classify_via_mackey(&ms, c, &lines);
                if (n * d as u64) % 2 != 0 {
                    assert!(matches!(f, Err(Error::NoEmbedding { .. })));
                    assert!(matches!(g, Err(Error::NoEmbedding { .. })));
                    continue;
                }
                let f = f.unwrap();
                let g = g.unwrap();
                assert!(
                    formulas_equivalent(&f, &g),
                    "divergence at d={d} l={l} ms={} classifier={} mackey={}",
                    ms.render(&lines),
                    f.render(),
                    g.render()
                );
            }
        }
    }
    assert!(instances > 5_000, "family unexpectedly small: {instances}");
    println!(
        "ACCEPTANCE 1 PASS: classifier == Mackey brute force on {instances} exhaustive instances"
    );
}

#[test]
fn criterion_2_no_nonadmissible_coset_survives() {
    let mut nonadmissible = 0u64;
    let mut counterexamples = 0u64;

    // the exhaustive family of criterion 1
    for l in [1u32, 2] {
        let (lines, pool) = small_pool(l);
        for d in [1u32, 2, 3] {
            let c = ctx(d, Sign::Minus);
            for indices in &multisets_up_to_three(pool.len()) {
                let ms: Multisegment =
                    indices.iter().map(|&i| pool[i].clone()).collect();
                let report = verify_admissibility_exclusion(&ms, c, &lines);
                nonadmissible += report.nonadmissible.len() as u64;
                counterexamples += report.counterexample_count() as u64;
            }
        }
    }

    // plus a seeded random campaign
    let lines = LineSet::builder()
        .self_dual("S", 1, 1)
        .dual_pair("P", "Q", 1, 2)
        .finish()
        .unwrap();
    let mut rng = SplitMix64::new(0x5eed_2222);
    for i in 0..10_000u64 {
        let ms = random_multisegment(&lines, &mut rng, 4, 4, 4);
        let d = [1u32, 2, 3][(i % 3) as usize];
        let report = verify_admissibility_exclusion(&ms, ctx(d, Sign::Minus), &lines);
        nonadmissible += report.nonadmissible.len() as u64;
        counterexamples += report.counterexample_count() as u64;
    }

    assert_eq!(counterexamples, 0, "admissibility exclusion violated");
    assert!(nonadmissible > 10_000, "campaign too weak: {nonadmissible}");
    println!(
        "ACCEPTANCE 2 PASS: 0 counterexamples among {nonadmissible} non-admissible cosets"
    );
}

fn random_sign_config(rng: &mut SplitMix64) -> SignConfig {
    let t = 1 + rng.below(6) as usize;
    let d = [1u32, 2, 3, 4][rng.below(4) as usize];
    let eta = if rng.chance() { Sign::Plus } else { Sign::Minus };
    // random involution by greedy pairing
    let mut map = vec![usize::MAX; t];
    for i in 0..t {
        if map[i] != usize::MAX {
            continue;
        }
        let free: Vec<usize> = (i + 1..t).filter(|&j| map[j] == usize::MAX).collect();
        if free.is_empty() || rng.chance() {
            map[i] = i;
        } else {
            let j = free[rng.below(free.len() as u64) as usize];
            map[i] = j;
            map[j] = i;
        }
    }
    let sigma = Involution::from_map(map).unwrap();
    let mut sizes = vec![0u64; t];
    let mut omega = vec![Sign::Plus; t];
    for i in 0..t {
        let j = sigma.apply(i);
        if j < i {
            continue;
        }
        let size = if i == j && d % 2 == 1 {
            2 * (1 + rng.below(4)) // fixed points need n*d even
        } else {
            1 + rng.below(8)
        };
        let om = if rng.chance() { Sign::Plus } else { Sign::Minus };
        sizes[i] = size;
        sizes[j] = size;
        omega[i] = om;
        omega[j] = om;
    }
    SignConfig::new(ctx(d, eta), sigma, sizes, omega).unwrap()
}

#[test]
fn criterion_3_sign_identity() {
    let mut rng = SplitMix64::new(0x5eed_3333);
    for _ in 0..10_000 {
        let cfg = random_sign_config(&mut rng);
        assert!(
            verify_sign_identity(&cfg).unwrap(),
            "sign identity failed: {cfg:?}"
        );
    }

    // all omega assignments, exhaustively, for t <= 3
    let mut exhaustive = 0u64;
    for t in 1usize..=3 {
        for sigma in involutions(t) {
            for sizes_code in 0u64..4u64.pow(t as u32) {
                let sizes: Vec<u64> = (0..t)
                    .map(|i| 1 + (sizes_code >> (2 * i) & 3))
                    .collect();
                if (0..t).any(|i| sizes[sigma.apply(i)] != sizes[i]) {
                    continue;
                }
                for d in [1u32, 2] {
                    if sigma
                        .fixed_points()
                        .any(|i| (sizes[i] * d as u64) % 2 != 0)
                    {
                        continue;
                    }
                    for eta in [Sign::Plus, Sign::Minus] {
                        let mut totals = BTreeSet::new();
                        for omega_code in 0u64..1 << t {
                            let omega: Vec<Sign> = (0..t)
                                .map(|i| {
                                    if omega_code >> i & 1 == 1 {
                                        Sign::Minus
                                    } else {
                                        Sign::Plus
                                    }
                                })
                                .collect();
                            if (0..t).any(|i| omega[sigma.apply(i)] != omega[i]) {
                                continue;
                            }
                            let cfg = SignConfig::new(
                                ctx(d, eta),
                                sigma.clone(),
                                sizes.clone(),
                                omega,
                            )
                            .unwrap();
                            assert!(verify_sign_identity(&cfg).unwrap());
                            totals.insert(segcalc::signs::total_sign(&cfg).unwrap());
                            exhaustive += 1;
                        }
                        // omega never influences the total
                        assert_eq!(totals.len(), 1);
                    }
                }
            }
        }
    }
    println!(
        "ACCEPTANCE 3 PASS: sign identity on 10000 random configs and {exhaustive} exhaustive omega assignments"
    );
}

#[test]
fn criterion_4_jl_preserves_precedence_and_size() {
    let configs = [
        (1u32, 1u32, 1u32),
        (1, 1, 2),
        (1, 2, 2),
        (1, 2, 4),
        (2, 2, 1),
        (2, 2, 2),
        (1, 3, 3),
        (1, 3, 6),
    ];
    let mut pairs = 0u64;
    for (k, l, d) in configs {
        assert_eq!((k as u64 * d as u64) % l as u64, 0);
        let lines = LineSet::builder().self_dual("A", k, l).finish().unwrap();
        let id = lines.lookup("A").unwrap();
        let c = ctx(d, Sign::Plus);
        let mut segs = Vec::new();
        for a in -4i64..=4 {
            for b in a..=4 {
                segs.push(Segment::new(id, a, b).unwrap());
            }
        }
        for s in &segs {
            let fs = jl_segment(s, &lines, c).unwrap();
            assert_eq!(
                fs.group_size(),
                s.group_size(&lines) * d as u64,
                "size transfer failed for {s:?} under (k,l,d)=({k},{l},{d})"
            );
            for t in &segs {
                let ft = jl_segment(t, &lines, c).unwrap();
                assert_eq!(
                    s.precedes(t),
                    fs.precedes(&ft),
                    "precedence not preserved for {s:?}, {t:?} under (k,l,d)=({k},{l},{d})"
                );
                pairs += 1;
            }
        }
    }
    println!("ACCEPTANCE 4 PASS: precedence and size preserved on {pairs} transferred pairs");
}

#[test]
fn criterion_5_coset_counts_match_involution_numbers() {
    // telephone numbers by the standard recurrence, the independent oracle
    fn involution_count(t: usize) -> u64 {
        match t {
            0 | 1 => 1,
            _ => involution_count(t - 1) + (t as u64 - 1) * involution_count(t - 2),
        }
    }
    let mut counts = Vec::new();
    for t in 1usize..=6 {
        let partition = vec![1u64; t];
        let matrices = enumerate_coset_matrices(&partition, 2);
        assert_eq!(matrices.len() as u64, involution_count(t), "t = {t}");
        // and each matrix is a symmetric permutation matrix
        for m in &matrices {
            assert!(m.is_admissible());
        }
        counts.push(matrices.len());
    }
    assert_eq!(counts, vec![1, 2, 4, 10, 26, 76]);
    println!("ACCEPTANCE 5 PASS: |I(P)| over unit partitions = {counts:?}");
}

#[test]
fn criterion_6_duality_and_ordering_invariants() {
    let lines = LineSet::builder()
        .self_dual("S", 1, 1)
        .dual_pair("P", "Q", 1, 2)
        .self_dual("R", 2, 1)
        .finish()
        .unwrap();
    let c = ctx(2, Sign::Minus);
    let mut rng = SplitMix64::new(0x5eed_6666);
    for _ in 0..1_000 {
        let ms = random_multisegment(&lines, &mut rng, 4, 4, 4);

        // dual involutivity
        assert_eq!(ms.dual(&lines).dual(&lines), ms);

        // right-ordered forms are standard orders
        assert!(is_standard_order(&ms.right_ordered(&lines)));

        // classifier ignores the input order
        let mut shuffled: Vec<Segment> = ms.segments().to_vec();
        for i in (1..shuffled.len()).rev() {
            let j = rng.below(i as u64 + 1) as usize;
            shuffled.swap(i, j);
        }
        let f = classify_standard_module(&ms, c, &lines).unwrap();
        let g =
            classify_standard_module(&Multisegment::new(shuffled), c, &lines).unwrap();
        assert_eq!(f, g);

        // classifier commutes with duality up to atom relabeling
        let dual_f = classify_standard_module(&ms.dual(&lines), c, &lines).unwrap();
        assert_eq!(
            dual_f,
            f.map_atoms(|a| Atom::new(a.segment().dual(&lines), &lines))
        );
    }
    println!("ACCEPTANCE 6 PASS: duality/ordering invariants on 1000 random multisegments");
}

#[test]
fn criterion_7_cli_golden_files() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let bin = env!("CARGO_BIN_EXE_segcalc");
    let cases: &[(&str, &str, &[&str])] = &[
        ("order", "order.seg", &[]),
        ("classify", "selfdual.seg", &["--oracle", "basic.oracle"]),
        ("mackey", "pair.seg", &[]),
        ("verify", "pair.seg", &[]),
        ("jl", "selfdual.seg", &[]),
        ("cosets", "ones.seg", &[]),
        ("epsilon", "ones.seg", &[]),
    ];
    for (command, session, extra) in cases {
        let session_path = manifest.join("tests/sessions").join(session);
        let mut args: Vec<String> = vec![
            command.to_string(),
            session_path.to_string_lossy().into_owned(),
        ];
        let mut extra_iter = extra.iter();
        while let Some(flag) = extra_iter.next() {
            args.push(flag.to_string());
            let value = extra_iter.next().expect("flag value");
            args.push(
                manifest
                    .join("tests/sessions")
                    .join(value)
                    .to_string_lossy()
                    .into_owned(),
            );
        }
        let run = |args: &[String]| {
            let output = Command::new(bin).args(args).output().expect("spawn segcalc");
            assert!(
                output.status.success(),
                "{command} failed: {}",
                String::from_utf8_lossy(&output.stderr)
            );
            output.stdout
        };
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first, second, "{command} output is not deterministic");
        let golden_path = manifest.join("tests/golden").join(format!("{command}.json"));
        let golden = std::fs::read(&golden_path)
            .unwrap_or_else(|e| panic!("missing golden {}: {e}", golden_path.display()));
        assert_eq!(
            first,
            golden,
            "{command} diverges from {}",
            golden_path.display()
        );
    }
    println!("ACCEPTANCE 7 PASS: 7 golden CLI reports byte-identical across runs");
}
