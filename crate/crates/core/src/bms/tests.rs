use super::*;
use crate::geometry::{preset, CodeKind};
use proptest::prelude::*;

fn gf9() -> Field {
    Field::gf9()
}

fn poly(f: &Field, terms: &[((usize, usize), i32)]) -> BivariatePoly {
    BivariatePoly::from_terms(terms.iter().map(|&(c, l)| (c, Elt::from_log(l))), f)
}

fn hermitian() -> (Field, CodeKind) {
    preset("hermitian-q9", None).unwrap()
}

/// Direct sum Σ e_P x^i y^j over a planted error pattern.
fn planted_syndromes(f: &Field, errs: &[(Point, Elt)]) -> Array2D {
    Array2D::from_fn(8, |(i, j)| {
        errs.iter().fold(Elt::ZERO, |acc, (p, v)| {
            let m = f.mul(f.pow(p.x, i as i64).unwrap(), f.pow(p.y, j as i64).unwrap());
            f.add(acc, f.mul(*v, m))
        })
    })
}

#[test]
fn single_point_ideal() {
    let f = gf9();
    let o = MonomialOrder::Weighted { a: 1, b: 1 };
    let b = vanishing_ideal_basis(&[Point::from_cell((0, 0))], &o, &f).unwrap();
    assert_eq!(b.elements(), &[poly(&f, &[((1, 0), 0), ((0, 0), 4)]), poly(&f, &[((0, 1), 0), ((0, 0), 4)])]);
    assert_eq!(b.delta_set().cells(), &[(0, 0)]);

    for (r, s) in [(3, 5), (7, 1)] {
        let b = vanishing_ideal_basis(&[Point::from_cell((r, s))], &o, &f).unwrap();
        let minus = |k: usize| f.neg(Elt::from_log(k as i32)).log();
        assert_eq!(
            b.elements(),
            &[poly(&f, &[((1, 0), 0), ((0, 0), minus(r))]), poly(&f, &[((0, 1), 0), ((0, 0), minus(s))])]
        );
    }
}

#[test]
fn hermitian_point_ideal() {
    let (f, kind) = hermitian();
    let pts = kind.points(&f);
    let b = vanishing_ideal_basis(&pts, &kind.order(), &f).unwrap();
    let curve = poly(&f, &[((0, 3), 0), ((0, 1), 0), ((4, 0), 4)]);
    let x8 = poly(&f, &[((8, 0), 0), ((0, 0), 4)]);
    assert_eq!(b.elements(), &[curve, x8]);
    let stair: Vec<Cell> = (0..8).flat_map(|i| (0..3).map(move |j| (i, j))).collect();
    assert!(b.delta_set().same_members(&SupportSet::new(stair, &kind.order())));
    for g in b.elements() {
        for p in &pts {
            assert!(g.eval(p.x, p.y, &f).is_zero());
        }
    }
}

#[test]
fn zero_coordinate_rejected() {
    let f = gf9();
    let o = MonomialOrder::Weighted { a: 1, b: 1 };
    let p = Point::new(Elt::ZERO, Elt::ONE);
    assert_eq!(vanishing_ideal_basis(&[p], &o, &f), Err(BmsError::ZeroCoordinatePoint(p)));
}

#[test]
fn empty_and_constant_prefixes() {
    let f = gf9();
    let o = MonomialOrder::Weighted { a: 1, b: 1 };
    let zero = Array2D::for_field(&f);
    let b = bms(&PartialArray::full(zero.clone()), &o, &f);
    assert_eq!(b.elements(), &[BivariatePoly::monomial((0, 0), Elt::ONE)]);
    assert!(b.delta_set().is_empty());

    let set = SupportSet::new([(0, 0)], &o);
    let mut one = zero.clone();
    one[(0, 0)] = Elt::ONE;
    let b = bms(&PartialArray::on(&one, set.clone()), &o, &f);
    assert_eq!(b.delta_set().cells(), &[(0, 0)]);
    let b = bms(&PartialArray::on(&zero, set), &o, &f);
    assert!(b.delta_set().is_empty());
}

#[test]
fn nine_point_redundant_set_is_generic() {
    let (f, kind) = hermitian();
    let pts = kind.points(&f);
    let b = vanishing_ideal_basis(&pts[..9], &kind.order(), &f).unwrap();
    assert_eq!(b.delta_set().len(), 9);
    for g in b.elements() {
        for p in &pts[..9] {
            assert!(g.eval(p.x, p.y, &f).is_zero());
        }
    }
}

#[test]
fn extend_zero_is_zero() {
    let (f, kind) = hermitian();
    let b = vanishing_ideal_basis(&kind.points(&f), &kind.order(), &f).unwrap();
    let part = PartialArray::on(&Array2D::for_field(&f), b.delta_set().clone());
    assert!(extend(&part, &b, &f).unwrap().is_zero());
}

#[test]
fn extend_follows_curve_relation() {
    let (f, kind) = hermitian();
    let b = vanishing_ideal_basis(&kind.points(&f), &kind.order(), &f).unwrap();
    let mut seed = Array2D::for_field(&f);
    for (k, c) in b.delta_set().iter().enumerate() {
        seed[c] = Elt::from_log((k * 5 % 9) as i32 - 1);
    }
    let out = extend(&PartialArray::on(&seed, b.delta_set().clone()), &b, &f).unwrap();
    for (i, j) in out.cells() {
        if j < 3 {
            assert_eq!(out[(i, j)], seed[(i, j)]);
        } else {
            let v = f.sub(out[((i + 4) % 8, j - 3)], out[(i, j - 2)]);
            assert_eq!(out[(i, j)], v);
        }
    }
}

#[test]
fn extend_errors() {
    let (f, kind) = hermitian();
    let b = vanishing_ideal_basis(&kind.points(&f), &kind.order(), &f).unwrap();
    let small = SupportSet::new([(0, 0)], &kind.order());
    assert!(matches!(
        extend(&PartialArray::on(&Array2D::for_field(&f), small), &b, &f),
        Err(BmsError::IncompleteCover(_))
    ));
    let mut bad = Array2D::for_field(&f);
    bad[(0, 5)] = Elt::ONE;
    assert!(matches!(extend(&PartialArray::full(bad), &b, &f), Err(BmsError::InconsistentKnownValues { .. })));
}

#[test]
fn basis_text_round_trip() {
    let (f, kind) = hermitian();
    let b = vanishing_ideal_basis(&kind.points(&f)[..9], &kind.order(), &f).unwrap();
    let text = b.to_text();
    assert_eq!(GroebnerBasis::from_text(&text, &f).unwrap(), b);
    let again = vanishing_ideal_basis(&kind.points(&f)[..9], &kind.order(), &f).unwrap();
    assert_eq!(again.to_text(), text);
    assert!(GroebnerBasis::from_text("order weighted 3 4\nelement\n1 2\nend\n", &f).is_err());
}

#[test]
fn voting_zero_syndromes() {
    let (f, kind) = hermitian();
    let dom = Domain::for_kind(&kind, &f);
    let part = PartialArray::on(&Array2D::for_field(&f), kind.phi_m(&f));
    let (b, full) = bms_with_voting(&part, &dom, 3, &f).unwrap();
    assert!(full.is_zero());
    assert!(b.delta_set().is_empty());
}

#[test]
fn voting_single_error() {
    let (f, kind) = hermitian();
    let dom = Domain::for_kind(&kind, &f);
    let p = kind.points(&f)[7];
    let v = Elt::from_log(3);
    let truth = planted_syndromes(&f, &[(p, v)]);
    let (b, full) = bms_with_voting(&PartialArray::on(&truth, kind.phi_m(&f)), &dom, 3, &f).unwrap();
    assert_eq!(full, truth);
    assert_eq!(b.delta_set().len(), 1);
}

fn check_planted(kind: &CodeKind, errs: &[(usize, i32)]) {
    let f = gf9();
    let dom = Domain::for_kind(kind, &f);
    let pts = kind.points(&f);
    let planted: Vec<(Point, Elt)> = errs.iter().map(|&(k, l)| (pts[k], Elt::from_log(l))).collect();
    let truth = planted_syndromes(&f, &planted);
    let part = PartialArray::on(&truth, kind.phi_m(&f));
    let (b, full) = bms_with_voting(&part, &dom, kind.designed_capability(), &f).unwrap();
    assert_eq!(full, truth);
    assert_eq!(b.delta_set().len(), errs.len());
    for g in b.elements() {
        for (p, _) in &planted {
            assert!(g.eval(p.x, p.y, &f).is_zero());
        }
    }
}

#[test]
fn voting_three_hermitian_errors() {
    let (_, kind) = hermitian();
    check_planted(&kind, &[(0, 0), (5, 3), (20, 6)]);
    check_planted(&kind, &[(1, 7), (2, 2), (3, 5)]);
}

#[test]
fn voting_four_hcrs_errors() {
    let (_, kind) = preset("hcrs-q9", None).unwrap();
    check_planted(&kind, &[(0, 0), (9, 3), (18, 6), (63, 1)]);
    check_planted(&kind, &[(1, 0), (2, 0), (3, 0), (4, 0)]);
}

#[test]
fn voting_two_rs_errors() {
    let (_, kind) = preset("rs-q9", None).unwrap();
    let f = gf9();
    let dom = Domain::for_kind(&kind, &f);
    let pts = kind.points(&f);
    let truth = planted_syndromes(&f, &[(pts[2], Elt::from_log(5)), (pts[6], Elt::ONE)]);
    let (_, full) = bms_with_voting(&PartialArray::on(&truth, kind.phi_m(&f)), &dom, 2, &f).unwrap();
    assert_eq!(full, truth);
}

fn subset_strategy() -> impl Strategy<Value = Vec<usize>> {
    proptest::sample::subsequence((0..24).collect::<Vec<_>>(), 1..=24)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn vanishing_basis_counts_points(idx in subset_strategy()) {
        let (f, kind) = hermitian();
        let all = kind.points(&f);
        let pts: Vec<Point> = idx.iter().map(|&k| all[k]).collect();
        let b = vanishing_ideal_basis(&pts, &kind.order(), &f).unwrap();
        prop_assert_eq!(b.delta_set().len(), pts.len());
        prop_assert!(b.delta_set().is_downward_closed());
        for g in b.elements() {
            for p in &pts {
                prop_assert!(g.eval(p.x, p.y, &f).is_zero());
            }
        }
        let leads = b.leading_cells();
        for (x, &a) in leads.iter().enumerate() {
            for &c in &leads[x + 1..] {
                prop_assert!(!divides(a, c) && !divides(c, a));
            }
        }
    }

    #[test]
    fn grid_point_sets(cells in proptest::collection::btree_set((0usize..8, 0usize..8), 1..20)) {
        let f = gf9();
        let o = MonomialOrder::Weighted { a: 1, b: 1 };
        let pts: Vec<Point> = cells.iter().map(|&c| Point::from_cell(c)).collect();
        let b = vanishing_ideal_basis(&pts, &o, &f).unwrap();
        prop_assert_eq!(b.delta_set().len(), pts.len());
        for g in b.elements() {
            for p in &pts {
                prop_assert!(g.eval(p.x, p.y, &f).is_zero());
            }
        }
    }

    #[test]
    fn schedules_agree(idx in subset_strategy(), seed in proptest::collection::vec(-1i32..8, 24)) {
        let (f, kind) = hermitian();
        let all = kind.points(&f);
        let pts: Vec<Point> = idx.iter().map(|&k| all[k]).collect();
        let b = vanishing_ideal_basis(&pts, &kind.order(), &f).unwrap();
        let mut arr = Array2D::for_field(&f);
        for (k, c) in b.delta_set().iter().enumerate() {
            arr[c] = Elt::from_log(seed[k]);
        }
        let part = PartialArray::on(&arr, b.delta_set().clone());
        let a = extend_with(&part, &b, &f, Schedule::RowMajor).unwrap();
        let c = extend_with(&part, &b, &f, Schedule::OrderEnumeration).unwrap();
        prop_assert_eq!(&a, &c);
        // already full and consistent: unchanged
        prop_assert_eq!(extend(&PartialArray::full(a.clone()), &b, &f).unwrap(), a);
    }

    #[test]
    fn hermitian_locator(idx in proptest::sample::subsequence((0..24).collect::<Vec<_>>(), 0..=3),
                         vals in proptest::collection::vec(0i32..8, 3)) {
        let (_, kind) = hermitian();
        let errs: Vec<(usize, i32)> = idx.iter().zip(&vals).map(|(&k, &v)| (k, v)).collect();
        check_planted(&kind, &errs);
    }
}
