use comprelie::law::*;
use comprelie::polyx::{FamilySpec, LambdaSeq, Power};
use comprelie::scalar::{int, ratio};
use comprelie::structures::{KxStructure, SStructure, TvStructure};
use comprelie::{LinComb, LinForm, LinMap, PreLieConsts, Rational, Word};

fn fliess() -> TvStructure {
    TvStructure::tvf(LinMap::new(vec![vec![int(0), int(0)], vec![int(1), int(0)]]).unwrap())
}

fn random_tvf() -> TvStructure {
    TvStructure::tvf(
        LinMap::new(vec![vec![ratio(2, 3), int(-1)], vec![ratio(1, 2), ratio(-3, 4)]]).unwrap(),
    )
}

fn tvfl(values: Vec<Rational>, lambda: Rational) -> TvStructure {
    TvStructure::tvfl(LinForm::new(values).unwrap(), lambda)
}

fn star() -> TvStructure {
    TvStructure::tvstar(
        PreLieConsts::new(vec![
            vec![vec![int(1), int(0)], vec![int(0), int(1)]],
            vec![vec![int(0), int(-1)], vec![int(0), int(0)]],
        ])
        .unwrap(),
    )
}

fn w(l: &[usize]) -> Word {
    Word::new(l.to_vec())
}

fn kx(spec: FamilySpec) -> KxStructure {
    KxStructure::family(spec).unwrap()
}

#[test]
fn tuples_are_ordered_by_degree_then_lex() {
    let t = tuples(&fliess(), 2, 2, true);
    let expect: Vec<Vec<Word>> = vec![
        vec![w(&[0]), w(&[0])],
        vec![w(&[0]), w(&[1])],
        vec![w(&[1]), w(&[0])],
        vec![w(&[1]), w(&[1])],
    ];
    assert_eq!(t, expect);
    let all = tuples(&fliess(), 3, 3, false);
    // Σ_{n ≤ 3} 2^n C(n+2, 2)
    assert_eq!(all.len(), 1 + 6 + 24 + 80);
    assert!(all.windows(2).all(|p| {
        let d = |v: &Vec<Word>| v.iter().map(Word::len).sum::<usize>();
        (d(&p[0]), &p[0]) < (d(&p[1]), &p[1])
    }));
}

#[test]
fn shuffle_and_polynomials_are_commutative_algebras() {
    assert!(check_com_assoc(&fliess(), 5).unwrap().passed());
    let g4 = kx(FamilySpec::g4(int(0)));
    assert!(check_com_assoc(&g4, 8).unwrap().passed());
}

#[test]
fn tvf_is_a_zinbiel_prelie_bialgebra() {
    for s in [fliess(), random_tvf()] {
        let reports = run_suite(&s, Suite::All, 4).unwrap();
        for r in &reports {
            assert!(r.passed(), "{r}");
        }
    }
}

#[test]
fn tvfl_is_com_prelie_in_two_dimensions() {
    let s = tvfl(vec![ratio(2, 3), ratio(-5, 2)], ratio(1, 2));
    assert!(all_passed(&run_suite(&s, Suite::ComPreLie, 4).unwrap()));
}

#[test]
fn tvfl_fails_zinbiel_prelie_in_two_dimensions() {
    let s = tvfl(vec![int(0), int(1)], ratio(1, 2));
    let r = check_zinbiel_prelie(&s, 3).unwrap();
    let wit = r.failure_at(&[w(&[0]), w(&[1]), w(&[1])]).expect("(x, y, y) fails");
    assert_eq!(wit.lhs, Value::Elem(LinComb::zero()));
    assert_eq!(wit.rhs, Value::Elem(LinComb::basis(w(&[0, 1]))));
    assert!(wit.reproduces(&s).unwrap());
    assert!(r.witness().unwrap().reproduces(&s).unwrap());
}

#[test]
fn tvfl_is_zinbiel_prelie_in_one_dimension() {
    let s = tvfl(vec![ratio(3, 2)], ratio(-2, 3));
    assert!(check_zinbiel_prelie(&s, 5).unwrap().passed());
}

#[test]
fn tvstar_passes_every_suite() {
    assert!(all_passed(&run_suite(&star(), Suite::All, 4).unwrap()));
}

#[test]
fn s_structure_is_a_com_prelie_bialgebra() {
    let s = SStructure::new(LinForm::new(vec![ratio(1, 2), int(-2)]).unwrap(), ratio(2, 3));
    for r in run_suite(&s, Suite::ComPreLie, 4)
        .unwrap()
        .into_iter()
        .chain(run_suite(&s, Suite::Bialgebra, 4).unwrap())
    {
        assert!(r.passed(), "{r}");
    }
    assert_eq!(
        check_zinbiel(&s, 3),
        Err(comprelie::AlgebraError::MissingHalfShuffle)
    );
}

#[test]
fn unit_and_counit_consequences() {
    assert!(check_unit_counit(&fliess(), 5).unwrap().passed());
    let s = SStructure::new(LinForm::new(vec![int(1), int(3)]).unwrap(), int(1));
    assert!(check_unit_counit(&s, 4).unwrap().passed());
    for spec in [
        FamilySpec::g1(2, int(1), int(3), ratio(1, 2)).unwrap(),
        FamilySpec::g2(1, int(1), int(2)).unwrap(),
        FamilySpec::g3(2, int(1), int(2)).unwrap(),
        FamilySpec::g4(int(7)),
    ] {
        assert!(check_unit_counit(&kx(spec), 8).unwrap().passed());
    }
}

#[test]
fn f_a_extraction() {
    let f = LinMap::new(vec![vec![ratio(2, 3), int(-1)], vec![ratio(1, 2), ratio(-3, 4)]]).unwrap();
    assert_eq!(extract_fa(&TvStructure::tvf(f.clone())).unwrap(), f);
    assert!(extract_fa(&star()).unwrap().is_zero());
    let s = SStructure::new(LinForm::new(vec![int(1), int(3)]).unwrap(), int(1));
    assert!(extract_fa(&s).unwrap().is_zero());
}

#[test]
fn primitive_closure() {
    assert!(check_prim_closure(&star()).unwrap().passed());
    let s = SStructure::new(LinForm::new(vec![int(1), int(3)]).unwrap(), int(1));
    assert!(check_prim_closure(&s).unwrap().passed());
    assert!(matches!(
        check_prim_closure(&fliess()),
        Err(comprelie::AlgebraError::PreconditionFA(_))
    ));
}

#[test]
fn condition_violation_fails_prelie_on_kx() {
    let seq = LambdaSeq::explicit([0, 1, 1, 0, 0, 0, 0, 0, 0, 0].iter().map(|&v| int(v)).collect())
        .unwrap();
    let s = KxStructure::graded(seq);
    let r = check_prelie(&s, 6).unwrap();
    assert!(!r.passed());
    assert!(r.witness().unwrap().reproduces(&s).unwrap());
    assert!(check_derivation(&s, 6).unwrap().passed());
}

#[test]
fn bialgebra_dichotomy_on_kx() {
    let a = ratio(5, 3);
    let good = kx(FamilySpec::g1(1, a.clone(), a, int(1)).unwrap());
    assert!(check_bialgebra_compat(&good, 6).unwrap().passed());
    // λ = 2μ passes at (X, X) and is caught at (X, X²)
    let g3 = kx(FamilySpec::g3(1, int(2), int(1)).unwrap());
    let r = check_bialgebra_compat(&g3, 6).unwrap();
    assert_eq!(r.witness().unwrap().inputs, vec![Power(1), Power(2)]);
    assert!(r.witness().unwrap().reproduces(&g3).unwrap());
}

#[test]
fn kx_zinbiel_coproduct_compat() {
    let s = kx(FamilySpec::g1(1, int(2), int(2), int(1)).unwrap());
    assert!(check_zinbiel_coproduct_compat(&s, 6).unwrap().passed());
    assert!(check_zinbiel(&s, 8).unwrap().passed());
}

#[test]
fn missing_handles_are_reported() {
    let s = SStructure::new(LinForm::new(vec![int(1)]).unwrap(), int(1));
    assert_eq!(
        check_zinbiel_prelie(&s, 2),
        Err(comprelie::AlgebraError::MissingHalfShuffle)
    );
    assert!("everything".parse::<Suite>().is_err());
    assert_eq!("zinbiel".parse::<Suite>().unwrap(), Suite::Zinbiel);
}

#[test]
fn corrupted_fixtures_are_caught_and_replayable() {
    let cases: Vec<(Op, (Word, Word), Word)> = vec![
        (Op::Mul, (w(&[0]), w(&[1])), w(&[0, 0])),
        (Op::PreLie, (w(&[1]), w(&[0])), w(&[1])),
        (Op::HalfShuffle, (w(&[0]), w(&[1])), w(&[1, 1])),
        (Op::Coproduct, (w(&[0, 1]), w(&[])), w(&[0])),
    ];
    for (op, at, bump) in cases {
        let s = Corrupted {
            inner: fliess(),
            op,
            at,
            bump,
        };
        let reports = run_suite(&s, Suite::All, 3).unwrap();
        let failing: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
        assert!(!failing.is_empty(), "{op:?} went unnoticed");
        for r in failing {
            for wit in &r.failures {
                assert!(wit.reproduces(&s).unwrap(), "{wit}");
                assert!(!wit.reproduces(&fliess()).unwrap());
            }
        }
    }
}
