//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::fs;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use semiring_core::congruences::{
    congruence_lattice, is_congruence, is_congruence_simple, monolith, quotient, Partition,
};
use semiring_core::constructions::{
    catalog_semiring, end_semiring, zigzag, CatalogName, SemilatticeTable,
};
use semiring_core::divisibility::is_mult_divisible;
use semiring_core::enumeration::{enumerate, export, ConstraintSet, EnumerationOptions};
use semiring_core::ideals::{is_bi_ideal_simple, is_ideal_simple, rho_partition};
use semiring_core::morphisms::{canonical_form, relabel, CanonicalForm};
use semiring_core::tables::{check_axioms, opposite, predicates};
use semiring_core::verifier::{
    verify_classification, verify_corpus_properties, verify_semiring, ClaimStatus, SearchMode,
};
use semiring_core::FiniteSemiring;

/// Seed for the lattice sample of criterion 7.
const LATTICE_SEED: u64 = 0x5EED_0007;
/// Seed for the relabelling fuzz of criterion 9.
const FUZZ_SEED: u64 = 0x5EED_0009;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn cat(k: u8) -> FiniteSemiring {
    catalog_semiring(CatalogName::S(k))
}

fn forms(ks: &[u8]) -> Vec<CanonicalForm> {
    let mut v: Vec<CanonicalForm> = ks
        .iter()
        .map(|&k| canonical_form(&cat(k)).unwrap())
        .collect();
    v.sort();
    v
}

fn criterion_1() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let json = dir.path().join("classification.json");
    let out = Command::new(env!("CARGO_BIN_EXE_semiring"))
        .args([
            "--json-out",
            json.to_str().unwrap(),
            "verify",
            "--suite",
            "classification",
            "--max-order",
            "3",
        ])
        .output()
        .map_err(|e| e.to_string())?;
    let doc: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&json).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
    let metrics = &doc["data"]["metrics"];
    ensure(
        metrics["order2.classes"] == "6",
        format!("order 2 count {}", metrics["order2.classes"]),
    )?;
    ensure(
        metrics["order3.classes"] == "2",
        format!("order 3 count {}", metrics["order3.classes"]),
    )?;
    let text = String::from_utf8_lossy(&out.stdout);
    for id in ["Thm3.3.order2", "Thm3.3.order3"] {
        let line = text
            .lines()
            .find(|l| l.contains(id))
            .ok_or(format!("{id} missing"))?;
        ensure(line.contains("[PASS]"), line.to_string())?;
    }

    let mut c = ConstraintSet {
        congruence_simple_filter: true,
        ..ConstraintSet::mult_idempotent()
    };
    ensure(
        enumerate(2, c).unwrap().classes == forms(&[1, 2, 3, 4, 5, 6]),
        "order 2 classes differ from S1..S6",
    )?;
    c.add_idempotent = true;
    ensure(
        enumerate(3, c).unwrap().classes == forms(&[7, 8]),
        "order 3 classes differ from S7, S8",
    )?;
    Ok("6 classes = {S1..S6}, 2 classes = {S7,S8}".into())
}

fn criterion_2() -> Check {
    let opts = EnumerationOptions::default();
    let restricted =
        verify_classification(4, SearchMode::Restricted, &opts).map_err(|e| e.to_string())?;
    ensure(
        restricted.metrics["order4.classes"] == "0",
        "restricted order 4 not empty",
    )?;
    ensure(
        restricted.status("Thm3.3.order4") == Some(ClaimStatus::Pass),
        "Thm3.3.order4 not Pass",
    )?;
    let full = verify_classification(4, SearchMode::Full, &opts).map_err(|e| e.to_string())?;
    ensure(
        full.metrics["order4.classes"] == "0",
        "full order 4 not empty",
    )?;

    let c = ConstraintSet {
        congruence_simple_filter: true,
        ..ConstraintSet::mult_idempotent()
    };
    let r = enumerate(4, c).unwrap();
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    export(&r, dir.path(), "full").map_err(|e| e.to_string())?;
    let manifest =
        fs::read_to_string(dir.path().join("manifest.txt")).map_err(|e| e.to_string())?;
    ensure(manifest.lines().any(|l| l == "mode=full"), "manifest mode")?;
    ensure(
        manifest.lines().any(|l| l == "class_count=0"),
        "manifest count",
    )?;
    Ok(format!(
        "restricted 0 classes ({} ms), full 0 classes ({} ms)",
        restricted.metrics["order4.wall_ms"], full.metrics["order4.wall_ms"]
    ))
}

fn criterion_3() -> Check {
    let with = enumerate(
        2,
        ConstraintSet {
            has_mult_absorbing: true,
            ..ConstraintSet::mult_idempotent()
        },
    )
    .unwrap();
    ensure(
        with.classes == forms(&[1, 2, 3, 4]),
        "absorbing order-2 classes differ from S1..S4",
    )?;
    let all = enumerate(2, ConstraintSet::mult_idempotent()).unwrap();
    let without: Vec<CanonicalForm> = all
        .classes
        .iter()
        .filter(|c| c.semiring().mult_absorbing().is_none())
        .cloned()
        .collect();
    ensure(
        without == forms(&[5, 6]),
        "non-absorbing order-2 classes differ from S5, S6",
    )?;
    ensure(opposite(&cat(6)) == cat(5), "opposite(S6) differs from S5")?;
    Ok("4 absorbing = {S1..S4}, 2 non-absorbing = {S5,S6}, S6^op = S5".into())
}

fn criterion_4() -> Check {
    let p = catalog_semiring(CatalogName::P);
    check_axioms(p.add_table().clone(), p.mul_table().clone()).map_err(|e| e.to_string())?;
    let m = monolith(&p);
    let sigma = Partition::from_blocks(5, &[&[1, 4]]).unwrap();
    ensure(
        m.partition.as_ref() == Some(&sigma),
        format!("monolith {:?}", m.partition.map(|p| p.to_string())),
    )?;
    ensure(!is_congruence_simple(&p), "P congruence-simple")?;
    let is = is_ideal_simple(&p);
    ensure(
        !is.simple && is.witness == Some(vec![0, 2]),
        format!("ideal-simple witness {:?}", is.witness),
    )?;
    ensure(is_bi_ideal_simple(&p).simple, "P not bi-ideal-simple")?;
    let rho = rho_partition(&p).unwrap();
    match quotient(&p, &rho) {
        Ok(q) => {
            ensure(
                canonical_form(&q).unwrap() == canonical_form(&cat(2)).unwrap(),
                "P/rho is not S2",
            )?;
        }
        Err(e) => {
            return Err(format!(
                "axioms, monolith {{1,c}}, simplicity flags and witness {{0,a}} hold; \
                 but rho_P = {} is not a congruence ({e}), so P/rho_P ~ S2 cannot hold",
                rho
            ))
        }
    }
    Ok("all dossier items hold".into())
}

fn criterion_5() -> Check {
    let (end, _) = end_semiring(&SemilatticeTable::chain(2)).map_err(|e| e.to_string())?;
    let (s7, s8) = (cat(7), cat(8));
    let cf = |s: &FiniteSemiring| canonical_form(s).unwrap();
    ensure(cf(&end) == cf(&s7), "End(L2) not ~ S7")?;
    ensure(cf(&opposite(&end)) == cf(&s8), "End(L2)^op not ~ S8")?;
    ensure(cf(&s7) != cf(&s8), "S7 ~ S8")?;
    for (name, s) in [("S7", &s7), ("S8", &s8)] {
        ensure(
            is_congruence_simple(s),
            format!("{name} not congruence-simple"),
        )?;
        ensure(!is_ideal_simple(s).simple, format!("{name} ideal-simple"))?;
    }
    Ok(
        "End(L2) ~ S7, End(L2)^op ~ S8, S7 !~ S8, both congruence-simple, neither ideal-simple"
            .into(),
    )
}

fn criterion_6() -> Check {
    let mut checked = 0;
    let mut total = 0;
    for k in 1..=4 {
        for s in zigzag(&cat(k), 8).map_err(|e| e.to_string())? {
            total += 1;
            let w = match s.mult_absorbing() {
                Some(w) if s.is_mult_idempotent() => w,
                _ => continue,
            };
            let applies = (s.bi_absorbing() == Some(w) && is_bi_ideal_simple(&s).simple)
                || (s.zero() == Some(w) && is_ideal_simple(&s).simple);
            let status = verify_semiring(&s).status("Cor-unique-coatom");
            if !applies {
                ensure(
                    status == Some(ClaimStatus::NotApplicable),
                    format!("S{k} iterate of order {}", s.order()),
                )?;
                continue;
            }
            checked += 1;
            let rho = rho_partition(&s).unwrap();
            ensure(
                is_congruence(&s, &rho),
                format!("rho not a congruence at order {} from S{k}", s.order()),
            )?;
            let coatoms = congruence_lattice(&s).map_err(|e| e.to_string())?.coatoms();
            ensure(
                coatoms == vec![rho],
                format!("coatoms {coatoms:?} at order {} from S{k}", s.order()),
            )?;
            ensure(status == Some(ClaimStatus::Pass), "verifier disagrees")?;
        }
    }
    ensure(checked > 0, "no iterate met the hypotheses")?;
    Ok(format!(
        "{checked} of {total} iterates meet the hypotheses; rho is the unique coatom in each"
    ))
}

fn criterion_7() -> Check {
    type Class = (Vec<usize>, Vec<usize>);
    for n in 1..=3 {
        let muls: Vec<Vec<usize>> = common::all_tables(n)
            .filter(|t| common::is_associative(t, n))
            .collect();
        let mut expected = BTreeSet::new();
        for m in &muls {
            for a in &muls {
                if common::is_semiring(a, m, n) {
                    expected.insert(common::brute_canonical(a, m, n));
                }
            }
        }
        let got: BTreeSet<Class> = enumerate(n, ConstraintSet::default())
            .unwrap()
            .semirings()
            .iter()
            .map(common::brute_canonical_of)
            .collect();
        ensure(
            got == expected,
            format!(
                "order {n}: {} enumerated vs {} oracle classes",
                got.len(),
                expected.len()
            ),
        )?;
    }

    let mut pool: Vec<FiniteSemiring> = Vec::new();
    for n in 1..=4 {
        pool.extend(enumerate(n, ConstraintSet::default()).unwrap().semirings());
    }
    pool.extend(
        enumerate(5, ConstraintSet::bi_idempotent())
            .unwrap()
            .semirings(),
    );
    let mut rng = StdRng::seed_from_u64(LATTICE_SEED);
    let sample: Vec<&FiniteSemiring> = pool.choose_multiple(&mut rng, 25).collect();
    for s in &sample {
        let mut got: Vec<Partition> = congruence_lattice(s).unwrap().congruences().to_vec();
        got.sort_by(|a, b| a.labels().cmp(b.labels()));
        let mut all: Vec<Partition> = semiring_core::congruences::all_partitions(s.order())
            .into_iter()
            .filter(|p| {
                (0..s.order()).all(|x| {
                    (0..s.order()).all(|y| {
                        !p.related(x, y)
                            || (0..s.order()).all(|c| {
                                p.related(s.add(x, c), s.add(y, c))
                                    && p.related(s.mul(x, c), s.mul(y, c))
                                    && p.related(s.mul(c, x), s.mul(c, y))
                            })
                    })
                })
            })
            .collect();
        all.sort_by(|a, b| a.labels().cmp(b.labels()));
        ensure(got == all, format!("lattice mismatch on\n{}", s.to_text()))?;
    }
    let orders: BTreeSet<usize> = sample.iter().map(|s| s.order()).collect();
    Ok(format!("enumerate = oracle at orders 1..3; 25 lattices match (seed {LATTICE_SEED:#x}, orders {orders:?})"))
}

fn criterion_8() -> Check {
    let report =
        verify_corpus_properties(4, &EnumerationOptions::default()).map_err(|e| e.to_string())?;
    for id in [
        "Remark1.i",
        "Remark1.v",
        "Remark1.vi",
        "RemarkSemigroup.2",
        "Remark5.i",
        "Remark5.ii",
    ] {
        let c = report.claim(id).ok_or(format!("{id} missing"))?;
        ensure(
            c.status == ClaimStatus::Pass,
            format!("{id}: {:?} {}", c.status, c.detail),
        )?;
    }

    let s1_4 = forms(&[1, 2, 3, 4]);
    let mut classes = 0;
    for n in 1..=4 {
        for s in enumerate(n, ConstraintSet::default()).unwrap().semirings() {
            classes += 1;
            let cs = is_congruence_simple(&s);
            let is = is_ideal_simple(&s).simple;
            let bis = is_bi_ideal_simple(&s).simple;
            let p = predicates(&s);
            let mi = p.mult_idempotent.holds;
            ensure(
                !cs || bis,
                format!("congruence-simple, not bi-ideal-simple:\n{s}"),
            )?;
            ensure(
                !is || bis,
                format!("ideal-simple, not bi-ideal-simple:\n{s}"),
            )?;
            ensure(
                n != 2 || (cs && is),
                format!("order-2 class not simple:\n{s}"),
            )?;
            ensure(
                !(mi && p.add_cancellative.holds) || p.boolean_ring.holds,
                format!("not a Boolean ring:\n{s}"),
            )?;
            ensure(
                is_mult_divisible(&s).divisible == mi,
                format!("divisible != idempotent:\n{s}"),
            )?;
            if p.commutative_mul.holds && mi && (cs || is) {
                ensure(
                    s1_4.contains(&canonical_form(&s).unwrap()),
                    format!("commutative simple outside S1..S4:\n{s}"),
                )?;
            }
        }
    }
    Ok(format!("{classes} classes, zero counterexamples"))
}

fn criterion_9() -> Check {
    let mut pool: Vec<FiniteSemiring> = Vec::new();
    for n in 1..=4 {
        pool.extend(enumerate(n, ConstraintSet::default()).unwrap().semirings());
    }
    for k in 1..=8 {
        pool.push(cat(k));
    }
    pool.push(catalog_semiring(CatalogName::P));
    let flags = |s: &FiniteSemiring| {
        let p = predicates(s);
        (
            [
                p.mult_idempotent.holds,
                p.add_idempotent.holds,
                p.bi_idempotent.holds,
                p.commutative_mul.holds,
            ],
            [
                p.add_cancellative.holds,
                p.boolean_ring.holds,
                is_congruence_simple(s),
                is_ideal_simple(s).simple,
            ],
            [
                is_bi_ideal_simple(s).simple,
                is_mult_divisible(s).divisible,
                s.zero().is_some(),
                s.bi_absorbing().is_some(),
            ],
            congruence_lattice(s).map(|l| l.len()).ok(),
        )
    };
    let mut rng = StdRng::seed_from_u64(FUZZ_SEED);
    for i in 0..200 {
        let s = &pool[rng.gen_range(0..pool.len())];
        let mut perm: Vec<usize> = s.elements().collect();
        perm.shuffle(&mut rng);
        let t = relabel(s, &perm).map_err(|e| e.to_string())?;
        ensure(
            flags(s) == flags(&t),
            format!("pair {i}: predicates changed under {perm:?}\n{s}"),
        )?;
        ensure(
            canonical_form(s).unwrap() == canonical_form(&t).unwrap(),
            format!("pair {i}: canonical form changed"),
        )?;
    }
    Ok(format!("200 pairs invariant (seed {FUZZ_SEED:#x})"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "classification at order <= 3",
            criterion_1,
            Duration::from_secs(5),
        ),
        ("order-4 emptiness", criterion_2, Duration::from_secs(60)),
        (
            "two-element subclassifications",
            criterion_3,
            Duration::from_secs(1),
        ),
        ("semiring P dossier", criterion_4, Duration::from_secs(1)),
        ("End(L) reconstruction", criterion_5, Duration::from_secs(1)),
        (
            "unique-coatom corollary on zig-zag iterates",
            criterion_6,
            Duration::from_secs(30),
        ),
        ("oracle equivalence", criterion_7, Duration::from_secs(120)),
        (
            "corpus property suite",
            criterion_8,
            Duration::from_secs(120),
        ),
        (
            "isomorphism-invariance fuzz",
            criterion_9,
            Duration::from_secs(30),
        ),
    ];
    let mut failures = 0;
    for (k, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(msg) if elapsed > *budget => {
                Err(format!("{msg}; took {elapsed:?}, budget {budget:?}"))
            }
            other => other,
        };
        match result {
            Ok(msg) => println!(
                "PASS criterion {}: {name}: {msg} [{} ms]",
                k + 1,
                elapsed.as_millis()
            ),
            Err(msg) => {
                failures += 1;
                println!(
                    "FAIL criterion {}: {name}: {msg} [{} ms]",
                    k + 1,
                    elapsed.as_millis()
                );
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
