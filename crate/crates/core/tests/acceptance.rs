//! Acceptance runner: one line per criterion, nonzero exit on any failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use comprelie::law::*;
use comprelie::lie_view::{check_fdb_presentation, check_fdb_unscaled, check_g2_presentation, FdbPresentation};
use comprelie::lincomb::{Basis, LinComb};
use comprelie::polyx::*;
use comprelie::prelie::{binomial_identity_check, tvf_product};
use comprelie::scalar::{factorial_q, int, pow, ratio};
use comprelie::shuffle::half_shuffle;
use comprelie::structures::{KxStructure, SStructure, TvStructure};
use comprelie::{Elem, LinForm, LinMap, PreLieConsts, Rational, Word};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn w(l: &[usize]) -> Word {
    Word::new(l.to_vec())
}

fn fliess() -> LinMap {
    LinMap::new(vec![vec![int(0), int(0)], vec![int(1), int(0)]]).unwrap()
}

fn random_rational(rng: &mut StdRng) -> Rational {
    ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

fn star_table() -> PreLieConsts {
    // e0⋆e0 = e0, e0⋆e1 = e1, e1⋆e0 = −e1, e1⋆e1 = 0
    PreLieConsts::new(vec![
        vec![vec![int(1), int(0)], vec![int(0), int(1)]],
        vec![vec![int(0), int(-1)], vec![int(0), int(0)]],
    ])
    .unwrap()
}

fn suites_pass<S: Structure>(s: &S, suites: &[Suite], cap: usize) -> Result<usize, String> {
    let mut checked = 0;
    for &suite in suites {
        for r in run_suite(s, suite, cap).map_err(|e| e.to_string())? {
            ensure(r.passed(), format!("{}: {r}", s.name()))?;
            checked += r.checked;
        }
    }
    Ok(checked)
}

fn golden_fliess() -> Outcome {
    let expr = |terms: &[(i64, &[usize])]| {
        terms.iter().fold(Elem::zero(2), |acc, (c, l)| {
            acc.checked_add(&Elem::word(2, l).unwrap().scale(&int(*c))).unwrap()
        })
    };
    let table: [(&[usize], &[usize], Elem); 8] = [
        (&[0, 0], &[0], Elem::zero(2)),
        (&[0, 0], &[1], Elem::zero(2)),
        (&[0, 1], &[0], expr(&[(1, &[0, 0, 0])])),
        (&[0, 1], &[1], expr(&[(1, &[0, 0, 1])])),
        (&[1, 0], &[0], expr(&[(2, &[0, 0, 0])])),
        (&[1, 0], &[1], expr(&[(1, &[0, 0, 1]), (1, &[0, 1, 0])])),
        (&[1, 1], &[0], expr(&[(1, &[1, 0, 0]), (1, &[0, 1, 0]), (1, &[0, 0, 1])])),
        (&[1, 1], &[1], expr(&[(1, &[1, 0, 1]), (2, &[0, 1, 1])])),
    ];
    for (u, v, expected) in &table {
        let got = tvf_product(&fliess(), &Elem::word(2, u).unwrap(), &Elem::word(2, v).unwrap())
            .map_err(|e| e.to_string())?;
        ensure(&got == expected, format!("{} • {}: got {got}, want {expected}", w(u), w(v)))?;
    }
    Ok("8/8 values exact".into())
}

fn law_suites() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let all = [Suite::All];
    let mut total = 0;
    let f = LinMap::new((0..2).map(|_| (0..2).map(|_| random_rational(&mut rng)).collect()).collect()).unwrap();
    total += suites_pass(&TvStructure::tvf(f), &all, 5)?;
    let f1 = LinForm::new(vec![random_rational(&mut rng)]).unwrap();
    total += suites_pass(&TvStructure::tvfl(f1, random_rational(&mut rng)), &all, 5)?;
    let f2 = LinForm::new(vec![random_rational(&mut rng), random_rational(&mut rng)]).unwrap();
    total += suites_pass(&TvStructure::tvfl(f2, random_rational(&mut rng)), &[Suite::ComPreLie], 5)?;
    total += suites_pass(&TvStructure::tvstar(star_table()), &all, 5)?;
    for d in 1..=3 {
        let f = LinForm::new((0..d).map(|_| random_rational(&mut rng)).collect()).unwrap();
        let s = SStructure::new(f, random_rational(&mut rng));
        total += suites_pass(&s, &[Suite::ComPreLie, Suite::Bialgebra], 4)?;
    }
    Ok(format!("{total} basis tuples, no failures"))
}

fn tvfl_counterexample_structure() -> TvStructure {
    TvStructure::tvfl(LinForm::new(vec![int(0), int(1)]).unwrap(), int(1))
}

fn tvfl_counterexamples() -> Outcome {
    let s = tvfl_counterexample_structure();
    let zp = check_zinbiel_prelie(&s, 3).map_err(|e| e.to_string())?;
    let wit = zp
        .failure_at(&[w(&[0]), w(&[1]), w(&[1])])
        .ok_or("no zinbiel_prelie failure at (x, y, y)")?;
    ensure(wit.lhs == Value::Elem(LinComb::zero()), format!("lhs {}", wit.lhs))?;
    ensure(wit.rhs == Value::Elem(LinComb::basis(w(&[0, 1]))), format!("rhs {}", wit.rhs))?;
    let bc = check_bialgebra_compat(&s, 3).map_err(|e| e.to_string())?;
    let bw = bc.witness().ok_or("bialgebra_compat passed")?;
    ensure(bw.degree() <= 3, format!("witness degree {}", bw.degree()))?;
    Ok(format!("{wit}; {bw}"))
}

fn closed_form() -> Outcome {
    let vals = [int(0), int(1), int(-1), ratio(1, 2), ratio(2, 3)];
    let mut pairs = 0;
    for nu in &vals {
        for lambda in &vals {
            if let Some((m, n)) = closed_form_mismatch(nu, lambda, 8) {
                return Err(format!("ν={nu} λ={lambda} m={m} n={n}"));
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (ν,λ) pairs, m+n ≤ 8"))
}

fn derivation_identities() -> Outcome {
    let cases = [
        (LinForm::new(vec![ratio(3, 2)]).unwrap(), ratio(-2, 3)),
        (LinForm::new(vec![ratio(3, 2), int(-1)]).unwrap(), ratio(-2, 3)),
        (LinForm::new(vec![int(0), int(1)]).unwrap(), int(1)),
    ];
    for (f, lambda) in &cases {
        let d = f.dim();
        if let Some((u, v)) = partial_derivation_mismatch(f, d, 6) {
            return Err(format!("(1a) at ({u}, {v})"));
        }
        if let Some((u, v)) = phi_symmetry_mismatch(f, lambda, d, 6) {
            return Err(format!("(1b) at ({u}, {v})"));
        }
        if let Some(u) = coproduct_identity_mismatch(f, lambda, d, 6) {
            return Err(format!("(2) at {u}"));
        }
    }
    Ok("1a, 1b, 2 hold for d ∈ {1, 2}, degree ≤ 6".into())
}

fn family_samples() -> Vec<FamilySpec> {
    vec![
        FamilySpec::g1(1, int(2), int(1), int(1)).unwrap(),
        FamilySpec::g1(2, ratio(-1, 3), ratio(5, 2), ratio(1, 2)).unwrap(),
        FamilySpec::g1(3, int(0), int(-2), int(0)).unwrap(),
        FamilySpec::g2(1, int(4), ratio(2, 7)).unwrap(),
        FamilySpec::g2(2, int(1), int(-1)).unwrap(),
        FamilySpec::g2(3, ratio(1, 2), int(5)).unwrap(),
        FamilySpec::g3(1, ratio(1, 2), int(3)).unwrap(),
        FamilySpec::g3(2, int(0), ratio(-5, 4)).unwrap(),
        FamilySpec::g3(3, int(-1), int(1)).unwrap(),
        FamilySpec::g4(ratio(9, 5)),
        FamilySpec::g4(int(0)),
        FamilySpec::g4(int(-3)),
    ]
}

fn graded_families() -> Outcome {
    for spec in family_samples() {
        let seq = LambdaSeq::family(spec.clone()).map_err(|e| e.to_string())?;
        let bad = prelie_condition_check(&seq, 15).map_err(|e| e.to_string())?;
        if let Some((j, k)) = bad.first() {
            return Err(format!("{spec}: condition fails at ({j}, {k})"));
        }
        suites_pass(&KxStructure::graded(seq), &[Suite::ComPreLie], 9)?;
        let n = match &spec {
            FamilySpec::G1 { n, .. } | FamilySpec::G2 { n, .. } | FamilySpec::G3 { n, .. } => *n,
            _ => 1,
        };
        let prefix: Vec<Rational> = (0..3 * n + 2).map(|j| lambda_of(&spec, j).unwrap()).collect();
        let got = classify(&prefix);
        ensure(got == ClassifyResult::Family(spec.clone()), format!("{spec} classified as {got:?}"))?;
    }
    Ok("12 samples: condition, comprelie suite at cap 9, classify round trip".into())
}

fn dichotomy_witnesses() -> Vec<(KxStructure, Option<Witness<Power>>)> {
    [
        FamilySpec::g2(1, int(1), int(3)).unwrap(),
        FamilySpec::g3(1, ratio(1, 2), int(-2)).unwrap(),
        FamilySpec::g1(1, int(1), ratio(3, 2), int(2)).unwrap(),
    ]
    .into_iter()
    .map(|spec| {
        let s = KxStructure::family(spec).unwrap();
        let r = check_bialgebra_compat(&s, 6).unwrap();
        let wit = r.witness().cloned();
        (s, wit)
    })
    .collect()
}

fn bialgebra_dichotomy() -> Outcome {
    let a = ratio(5, 3);
    let good = KxStructure::family(FamilySpec::g1(1, a.clone(), a, int(1)).unwrap()).unwrap();
    let r = check_bialgebra_compat(&good, 6).map_err(|e| e.to_string())?;
    ensure(r.passed(), format!("{r}"))?;
    let mut found = Vec::new();
    for (s, wit) in dichotomy_witnesses() {
        let wit = wit.ok_or(format!("{} passed", s.name()))?;
        ensure(wit.degree() <= 3, format!("{}: {wit}", s.name()))?;
        found.push(format!("{wit}"));
    }
    Ok(format!("g1(1,a,1) passes; G2, G3, G1(b=2) fail: {}", found.join("; ")))
}

fn theta_transport() -> Outcome {
    let a = ratio(-7, 3);
    let f = LinMap::scalar(1, a.clone());
    let mut cases = 0;
    for k in 0..=8usize {
        for l in 0..=8 - k {
            let lhs = tvf_product(&f, &theta_iso(k), &theta_iso(l)).map_err(|e| e.to_string())?;
            let c = &a * int(k as i64) / int(l as i64 + 1);
            ensure(lhs == theta_iso(k + l).scale(&c), format!("• at k={k} l={l}"))?;
            if k + l > 0 {
                let lhs = half_shuffle(&theta_iso(k), &theta_iso(l)).map_err(|e| e.to_string())?;
                let c = int(k as i64) / int((k + l) as i64);
                ensure(lhs == theta_iso(k + l).scale(&c), format!("≺ at k={k} l={l}"))?;
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} (k, l) pairs for • and ≺"))
}

fn presentations() -> Outcome {
    let mut checked = 0;
    for spec in [
        FamilySpec::g1(2, int(3), int(1), ratio(1, 2)).unwrap(),
        FamilySpec::g3(3, int(3), int(2)).unwrap(),
    ] {
        let r = check_fdb_presentation(&spec, 8).map_err(|e| e.to_string())?;
        ensure(r.passed() && r.checked > 0, format!("{spec}: {r}"))?;
        checked += r.checked;
    }
    for (n, mu) in [(1, int(1)), (2, ratio(1, 3))] {
        let r = check_g2_presentation(n, mu, 10).map_err(|e| e.to_string())?;
        ensure(r.passed(), format!("{r}"))?;
        checked += r.checked;
    }
    Ok(format!("{checked} relations"))
}

fn gprime() -> Outcome {
    for (lambda, mu) in [(int(1), int(0)), (int(1), int(1)), (ratio(2, 3), ratio(-1, 2))] {
        let s = KxStructure::family(FamilySpec::gprime(lambda.clone(), mu.clone())).unwrap();
        for r in [check_prelie(&s, 9), check_derivation(&s, 9)] {
            let r = r.map_err(|e| e.to_string())?;
            ensure(r.passed(), format!("{r}"))?;
        }
        for k in 1..=8usize {
            let c = gprime_product(&lambda, &mu, 1, k).coeff(&Power(1));
            let want = factorial_q(k as u64) * &lambda * pow(&mu, k - 1);
            ensure(c == want, format!("λ={lambda} μ={mu} k={k}: {c} ≠ {want}"))?;
        }
    }
    Ok("3 parameter pairs, degree ≤ 9, k ≤ 8".into())
}

fn binomial() -> Outcome {
    ensure(binomial_identity_check(20), "identity fails below 20")?;
    Ok("all 1 ≤ k, l with k + l ≤ j ≤ 20".into())
}

fn replay_all<B: Basis>(ev: &impl Evaluate<B>, failures: &[Witness<B>], label: &str) -> Result<usize, String> {
    ensure(!failures.is_empty(), format!("{label}: no witness"))?;
    for wit in failures {
        ensure(wit.reproduces(ev).map_err(|e| e.to_string())?, format!("{label}: {wit} does not replay"))?;
    }
    Ok(failures.len())
}

fn self_tests() -> Outcome {
    let mut replayed = 0;
    let bases = [
        TvStructure::tvf(fliess()),
        TvStructure::tvfl(LinForm::new(vec![int(2)]).unwrap(), ratio(1, 2)),
        TvStructure::tvstar(star_table()),
    ];
    let bumps = [
        (Op::Mul, (w(&[0]), w(&[0])), w(&[0])),
        (Op::PreLie, (w(&[0]), w(&[0])), w(&[0, 0])),
        (Op::HalfShuffle, (w(&[0]), w(&[0])), w(&[0])),
        (Op::Coproduct, (w(&[0, 0]), w(&[])), w(&[0])),
    ];
    for inner in bases {
        for (op, at, bump) in bumps.clone() {
            let s = Corrupted {
                inner: inner.clone(),
                op,
                at,
                bump,
            };
            let mut failures = Vec::new();
            for r in run_suite(&s, Suite::All, 3).map_err(|e| e.to_string())? {
                failures.extend(r.failures);
            }
            replayed += replay_all(&s, &failures, &format!("{} {op:?}", inner.name()))?;
        }
    }
    let g1 = FamilySpec::g1(2, int(3), int(1), ratio(1, 2)).unwrap();
    let bad = check_fdb_unscaled(&g1, 8).map_err(|e| e.to_string())?;
    replayed += replay_all(&FdbPresentation::unscaled(&g1).unwrap(), &bad.failures, "unscaled E_i")?;
    let s = tvfl_counterexample_structure();
    let zp = check_zinbiel_prelie(&s, 3).map_err(|e| e.to_string())?;
    replayed += replay_all(&s, &zp.failures, "zinbiel_prelie on T(V,f,λ)")?;
    for (s, wit) in dichotomy_witnesses() {
        replayed += replay_all(&s, &wit.into_iter().collect::<Vec<_>>(), &s.name())?;
    }
    Ok(format!("{replayed} witnesses replayed"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("golden Fliess table", golden_fliess),
        ("law suites on T(V,f), T(V,f,λ), T(V,⋆), S(V,f,λ)", law_suites),
        ("T(V,f,λ) counterexamples in dimension 2", tvfl_counterexamples),
        ("closed form for x^m • x^n", closed_form),
        ("∂ and φ identities", derivation_identities),
        ("graded families on K[X]", graded_families),
        ("bialgebra dichotomy on K[X]", bialgebra_dichotomy),
        ("Θ transport", theta_transport),
        ("bracket presentations", presentations),
        ("g′(λ,μ)", gprime),
        ("binomial identity", binomial),
        ("harness self-tests", self_tests),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {:>2} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {:>2} {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
