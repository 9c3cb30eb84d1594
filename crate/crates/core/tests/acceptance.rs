//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use kzfp::cartier::{cm_entry, cm_numeric, cm_symbolic};
use kzfp::decomposition::{
    check_box, check_vanishing_criterion, decompose_l, j_vec_in_module, solution_j_vec,
    solution_j_vec_direct, taylor_l, MIndex,
};
use kzfp::kz::{check_support_disjointness, verify_kz};
use kzfp::solutions::{homogenized_k, FpSolutions, Limits};
use kzfp::{DyadicRational, PrimeContext, SparsePoly};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SOLUTION_CASES: [(u32, u64); 8] = [
    (1, 5),
    (1, 7),
    (1, 11),
    (1, 13),
    (2, 5),
    (2, 7),
    (2, 11),
    (3, 7),
];
const SWEEP_CASES: [(u32, u64); 3] = [(1, 5), (1, 7), (2, 5)];

struct Outcome {
    pass: bool,
    detail: String,
}

fn ctx(g: u32, p: u64) -> PrimeContext {
    PrimeContext::new(g, p).expect("valid (g, p)")
}

fn kz_suite() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for (g, p) in SOLUTION_CASES {
        let c = ctx(g, p);
        let sols = FpSolutions::new(&c, &Limits::default()).unwrap();
        for m in 0..g {
            for (name, v) in [
                ("I", sols.solution_i(m).unwrap()),
                ("J", sols.solution_j(m).unwrap()),
            ] {
                checked += 1;
                if !verify_kz(&v, &c).unwrap().passed() {
                    bad.push(format!("{name}^{m} (g={g}, p={p})"));
                }
            }
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!("{checked} solutions verified, failing: {bad:?}"),
    }
}

fn basis_identities() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for (g, p) in SOLUTION_CASES {
        let c = ctx(g, p);
        let sols = FpSolutions::new(&c, &Limits::default()).unwrap();
        for m in 0..g {
            let j = sols.solution_j(m).unwrap();
            checked += 2;
            if sols.solution_j_shifted(m).unwrap() != j {
                bad.push(format!("shifted extraction m={m} (g={g}, p={p})"));
            }
            if homogenized_k(&c, m).unwrap() != j {
                bad.push(format!("rescaling m={m} (g={g}, p={p})"));
            }
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!("{checked} identities, failing: {bad:?}"),
    }
}

fn independence() -> Outcome {
    let mut bad = Vec::new();
    for (g, p) in SOLUTION_CASES {
        if !check_support_disjointness(&ctx(g, p)).unwrap().pass {
            bad.push((g, p));
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!("{} cases, failing: {bad:?}", SOLUTION_CASES.len()),
    }
}

fn cartier_manin() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut points = 0;
    let mut bad = Vec::new();
    let mut cases: Vec<(u32, u64)> = vec![(1, 3)];
    cases.extend(SOLUTION_CASES);
    for (g, p) in cases {
        let c = ctx(g, p);
        let symbolic = cm_symbolic(&c).unwrap();
        for _ in 0..20 {
            let lambda: Vec<u64> = (0..2 * g - 1).map(|_| rng.gen_range(0..p)).collect();
            points += 1;
            if symbolic.evaluate(&lambda) != cm_numeric(&c, &lambda).unwrap().matrix {
                bad.push(format!("(g={g}, p={p}) at {lambda:?}"));
            }
        }
    }
    for p in [3u64, 5, 7, 11, 13] {
        let c = ctx(1, p);
        let f = c.field();
        let half = c.half();
        let sign = f.sign(half as i64);
        let terms = (0..=half).map(|k| {
            let b = c.lucas_binom(half, k);
            (vec![k as u32], f.mul(sign, f.mul(b, b)))
        });
        let deuring = SparsePoly::from_terms(f, 1, terms);
        if cm_entry(&c, 0, 0).unwrap() != deuring {
            bad.push(format!("g=1 entry for p={p}"));
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!("{points} random points and 5 genus-one entries, failing: {bad:?}"),
    }
}

fn vanishing() -> Outcome {
    let mut details = Vec::new();
    let mut pass = true;
    for (g, p) in SWEEP_CASES {
        let r = check_vanishing_criterion(&ctx(g, p), p * p).unwrap();
        pass &= r.passed();
        details.push(format!(
            "(g={g}, p={p}): {} tuples, {} admissible, {} counterexamples",
            r.tuples_checked,
            r.admissible_count,
            r.failures.len()
        ));
    }
    Outcome {
        pass,
        detail: details.join("; "),
    }
}

fn congruence() -> Outcome {
    let mut details = Vec::new();
    let mut pass = true;
    for (g, p) in SWEEP_CASES {
        let r = check_box(&ctx(g, p), p * p).unwrap();
        pass &= r.passed();
        details.push(format!(
            "(g={g}, p={p}): {}/{} equal with unit (-1)^((p-1)/2) 4^(-m_(a+1)), {}/{} without it",
            r.congruences_checked - r.failures.len() as u64,
            r.congruences_checked,
            r.printed_display_matches,
            r.congruences_checked,
        ));
    }
    Outcome {
        pass,
        detail: details.join("; "),
    }
}

fn decomposition() -> Outcome {
    let mut details = Vec::new();
    let mut pass = true;
    for (g, p) in [(1u32, 5u64), (2, 5)] {
        let r = decompose_l(&ctx(g, p), 1, p * p).unwrap();
        pass &= r.passed();
        details.push(format!(
            "(g={g}, p={p}): {} blocks, disjoint={}, {} mismatches over {} tuples ({} without unit weights)",
            r.blocks.len(),
            r.supports_disjoint,
            r.failures.len(),
            r.tuples_checked,
            r.unweighted_mismatches,
        ));
    }
    Outcome {
        pass,
        detail: details.join("; "),
    }
}

fn j_vec_suite() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for (g, p) in SWEEP_CASES {
        let c = ctx(g, p);
        let sols = FpSolutions::new(&c, &Limits::default()).unwrap();
        let basis = sols.basis_i().unwrap();
        for m in MIndex::enumerate(&c, 1) {
            checked += 1;
            let label = format!("{:?} (g={g}, p={p})", m.as_slice());
            let j = solution_j_vec(&c, &m).unwrap();
            if !verify_kz(&j, &c).unwrap().passed() {
                bad.push(format!("KZ {label}"));
            }
            let m1 = m.as_slice()[1];
            if m.depth() == 0 {
                let b = c.lucas_binom(2 * m1 as u64, m1 as u64);
                if j != sols.solution_j(m1).unwrap().scale(&b) {
                    bad.push(format!("depth-0 identity {label}"));
                }
            } else {
                match j_vec_in_module(&c, &j, &basis).unwrap() {
                    Some(cs) if cs.iter().any(|x| !x.is_zero()) => {}
                    _ => bad.push(format!("module membership {label}")),
                }
            }
            if g == 1 && solution_j_vec_direct(&c, &m).unwrap() != j {
                bad.push(format!("factor route {label}"));
            }
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!("{checked} indices, failing: {bad:?}"),
    }
}

fn spot_values() -> Outcome {
    let dy = |n: i64, e: u32| DyadicRational::new(n.into(), e);
    let l1 = taylor_l(1, &[0]).unwrap().value;
    let ok1 = l1 == vec![dy(1, 1), dy(-1, 0), dy(1, 1)];
    let l2 = taylor_l(2, &[0, 0, 0]).unwrap().value;
    let ok2 = l2 == vec![dy(3, 3), dy(-3, 1), dy(3, 3), dy(3, 3), dy(3, 3)];
    let c = ctx(1, 3);
    let expected = SparsePoly::from_terms(c.field(), 1, [(vec![0], 2), (vec![1], 2)]);
    let ok3 = cm_entry(&c, 0, 0).unwrap() == expected;
    Outcome {
        pass: ok1 && ok2 && ok3,
        detail: format!(
            "L(0) g=1 = ({}), L(0) g=2 = ({}), C (g=1, p=3) = {}",
            l1.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", "),
            l2.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", "),
            cm_entry(&c, 0, 0).unwrap().to_string_with(&["l3"]),
        ),
    }
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        ("KZ verification", kz_suite),
        ("basis identities", basis_identities),
        ("independence certificate", independence),
        ("Cartier-Manin correctness", cartier_manin),
        ("vanishing criterion", vanishing),
        ("congruence", congruence),
        ("decomposition", decomposition),
        ("J_m solutions", j_vec_suite),
        ("spot values", spot_values),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        all &= out.pass;
        println!(
            "criterion {} [{name}]: {} ({:.1}s) {}",
            i + 1,
            if out.pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            out.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
