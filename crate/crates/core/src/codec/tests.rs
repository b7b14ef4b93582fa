use super::*;
use crate::linalg::rank;
use proptest::prelude::*;

fn herm() -> CodeSpec {
    CodeSpec::preset("hermitian-q9", None).unwrap()
}

fn all_specs() -> Vec<CodeSpec> {
    ["hermitian-q9", "hcrs-q9", "rs-q9"].iter().map(|n| CodeSpec::preset(n, None).unwrap()).collect()
}

fn elts(v: &[i32]) -> Vec<Elt> {
    v.iter().map(|&l| Elt::from_log(l)).collect()
}

fn word_strategy(len: usize) -> impl Strategy<Value = Vec<Elt>> {
    proptest::collection::vec((-1i32..8).prop_map(Elt::from_log), len)
}

/// H·c computed straight from the matrix.
fn parity(spec: &CodeSpec, word: &[Elt]) -> Vec<Elt> {
    let f = spec.field();
    let h = check_matrix(spec);
    (0..spec.phi_m().len())
        .map(|l| word.iter().zip(&h).fold(Elt::ZERO, |acc, (&c, row)| f.add(acc, f.mul(c, row[l]))))
        .collect()
}

fn is_zero(v: &[Elt]) -> bool {
    v.iter().all(|x| x.is_zero())
}

#[test]
fn parameters() {
    let got: Vec<(usize, usize, usize)> = all_specs().iter().map(|s| (s.n(), s.k(), s.phi_m().len())).collect();
    assert_eq!(got, vec![(24, 15, 9), (64, 44, 20), (8, 4, 4)]);
    for s in all_specs() {
        assert_eq!(s.wp().len() + s.wp_prime().len(), s.n());
        assert!(s.basis_wp().delta_set().same_members(s.phi_m()));
        assert_eq!(s.basis_all().delta_set().len(), s.n());
        assert_eq!(s.info_cells().len(), s.k());
    }
    assert_eq!(herm().zero_points().len(), 3);
}

#[test]
fn check_matrix_entries() {
    let s = herm();
    let h = check_matrix(&s);
    assert_eq!(h.len(), 27);
    assert!(h.iter().all(|row| row[0] == Elt::ONE));
    let cols: Vec<_> = s.phi_m().iter().collect();
    let zp = s.zero_points().iter().position(|p| p.y == Elt::from_log(2)).unwrap();
    let row = &h[24 + zp];
    assert_eq!(row[cols.iter().position(|&c| c == (1, 0)).unwrap()], Elt::ZERO);
    assert_eq!(row[cols.iter().position(|&c| c == (0, 2)).unwrap()], Elt::from_log(4));
    assert_eq!(rank(s.field(), &h[..24]), 9);
}

#[test]
fn zero_coordinate_substitution() {
    // y³ lies off the strip, so it is checked through the analogue array
    let s = herm();
    let p = Point::new(Elt::ZERO, Elt::from_log(2));
    let a = analogue_dft(&s, &p, Elt::ONE).unwrap();
    assert_eq!(a[(0, 3)], Elt::from_log(6));
    assert_eq!(a[(1, 0)], Elt::ZERO);
}

#[test]
fn zero_info_gives_zero_word() {
    for s in all_specs() {
        let z = vec![Elt::ZERO; s.k()];
        assert!(is_zero(&encode_systematic(&s, &z).unwrap()));
        assert!(is_zero(&encode_nonsystematic(&s, &z).unwrap()));
        assert!(is_zero(&encode_matrix_oracle(&s, &z).unwrap()));
    }
    let s = herm();
    assert!(is_zero(&encode_systematic_extended(&s, &[Elt::ZERO; 18]).unwrap()));
}

#[test]
fn single_error_syndromes() {
    let s = herm();
    let f = s.field();
    let k = 11;
    let (r, t) = s.points()[k].cell().unwrap();
    let mut w = vec![Elt::ZERO; 24];
    w[k] = Elt::from_log(3);
    let syn = syndromes(&s, &w).unwrap();
    for (i, j) in syn.full.cells() {
        assert_eq!(syn.full[(i, j)], f.alpha_pow((3 + r * i + t * j) as i64));
    }
}

#[test]
fn analogue_rows() {
    let s = herm();
    let at = |y: i32| Point::new(Elt::ZERO, Elt::from_log(y));
    let row0 = |a: &crate::transform::Array2D| a.row(0).iter().map(|v| v.log()).collect::<Vec<_>>();
    let a = analogue_dft(&s, &at(2), Elt::from_log(5)).unwrap();
    assert_eq!(row0(&a), vec![5, 7, 1, 3, 5, 7, 1, 3]);
    assert!((1..8).all(|i| a.row(i).iter().all(|v| v.is_zero())));
    let b = analogue_dft(&s, &at(6), Elt::from_log(2)).unwrap();
    assert_eq!(row0(&b), vec![2, 0, 6, 4, 2, 0, 6, 4]);
    let o = analogue_dft(&s, &Point::new(Elt::ZERO, Elt::ZERO), Elt::from_log(7)).unwrap();
    assert!(o.cells().all(|c| o[c] == if c == (0, 0) { Elt::from_log(7) } else { Elt::ZERO }));
    assert!(analogue_dft(&s, &s.points()[0], Elt::ONE).is_err());
    assert!(analogue_dft(&s, &at(1), Elt::ONE).is_err());
}

#[test]
fn extended_single_origin_symbol() {
    let s = herm();
    let mut info = vec![Elt::ZERO; 18];
    let origin = s.zero_points().iter().position(|p| p.y.is_zero()).unwrap();
    info[15 + origin] = Elt::from_log(7);
    let c = encode_systematic_extended(&s, &info).unwrap();
    assert_eq!(c[24 + origin], Elt::from_log(7));
    assert!(is_zero(&parity(&s, &c)));
}

#[test]
fn rs_generator() {
    let f = Field::gf9();
    assert_eq!(rs_gen_poly(&f, 1).unwrap(), elts(&[4, 0]));
    assert_eq!(rs_gen_poly(&f, 2).unwrap(), elts(&[1, 3, 0]));
    for r in 1..8 {
        let g = rs_gen_poly(&f, r).unwrap();
        assert_eq!(g.len(), r + 1);
        for i in 0..r {
            let x = f.alpha_pow(i as i64);
            let v = g.iter().rev().fold(Elt::ZERO, |acc, &c| f.add(f.mul(acc, x), c));
            assert!(v.is_zero());
        }
    }
    assert!(rs_gen_poly(&f, 0).is_err());
    assert!(rs_gen_poly(&f, 8).is_err());
}

#[test]
fn rs_idft_delta() {
    let f = Field::gf9();
    let r = 3;
    let mut info = vec![Elt::ZERO; 5];
    info[0] = Elt::ONE;
    let c = rs_encode_idft(&f, r, &info).unwrap();
    for (h, v) in c.iter().enumerate() {
        assert_eq!(*v, f.alpha_pow(-((r * h) as i64)));
    }
}

#[test]
fn rs_single_symbol_is_generator_multiple() {
    // r = q−2: one information symbol at degree 7; codeword is a multiple of G
    let f = Field::gf9();
    let c = rs_encode_euclid(&f, 7, &[Elt::from_log(2)]).unwrap();
    let g = rs_gen_poly(&f, 7).unwrap();
    let scaled: Vec<Elt> = g.iter().map(|&v| f.mul(v, Elt::from_log(2))).collect();
    assert_eq!(c, scaled);
}

#[test]
fn oracle_matches_rs_euclid() {
    let s = CodeSpec::preset("rs-q9", None).unwrap();
    assert_eq!(s.wp(), &[0, 1, 2, 3]);
    let info = elts(&[3, -1, 0, 6]);
    assert_eq!(encode_matrix_oracle(&s, &info).unwrap(), rs_encode_euclid(s.field(), 4, &info).unwrap());
}

#[test]
fn spec_text_round_trip() {
    for s in all_specs() {
        let text = s.to_text();
        assert_eq!(CodeSpec::from_text(&text).unwrap(), s);
    }
    let text = herm().to_text();
    assert!(CodeSpec::from_text(&text.replace("agcodec-spec v1", "agcodec-spec v9")).is_err());
    let tampered = text.replacen("element\n", "element\n9 9 0\n", 1);
    assert!(CodeSpec::from_text(&tampered).is_err());
}

#[test]
fn decode_rejects_lengthened_words() {
    let s = herm();
    assert_eq!(decode(&s, Mode::Systematic, &[Elt::ZERO; 27]), Err(CodecError::ExtendedDecodeUnsupported));
}

#[test]
fn decode_never_returns_unchecked_words() {
    let s = herm();
    let mut w = vec![Elt::ZERO; 24];
    for k in [0, 4, 9, 13, 17, 22] {
        w[k] = Elt::from_log(k as i32 % 8);
    }
    if let Ok(d) = decode(&s, Mode::Systematic, &w) {
        assert!(is_zero(&parity(&s, &d.codeword)));
    }
}

fn pick_errors(n: usize, pos: &[usize], vals: &[i32], t: usize) -> Vec<(usize, Elt)> {
    let mut seen = Vec::new();
    for &p in pos {
        let p = p % n;
        if !seen.contains(&p) && seen.len() < t {
            seen.push(p);
        }
    }
    seen.into_iter().zip(vals).map(|(p, &v)| (p, Elt::from_log(v))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn encoders_agree_and_pass_parity(info in word_strategy(15), other in word_strategy(15), lam in 0i32..8) {
        let s = herm();
        let f = s.field();
        let sys = encode_systematic(&s, &info).unwrap();
        prop_assert_eq!(&sys, &encode_matrix_oracle(&s, &info).unwrap());
        for (&k, &v) in s.wp_prime().iter().zip(&info) {
            prop_assert_eq!(sys[k], v);
        }
        let non = encode_nonsystematic(&s, &info).unwrap();
        prop_assert!(is_zero(&parity(&s, &sys)));
        prop_assert!(is_zero(&parity(&s, &non)));
        if !is_zero(&info) {
            prop_assert!(!is_zero(&non));
        }
        // linearity
        let l = Elt::from_log(lam);
        let mix: Vec<Elt> = info.iter().zip(&other).map(|(&a, &b)| f.add(a, f.mul(l, b))).collect();
        for enc in [encode_systematic, encode_nonsystematic] {
            let lhs = enc(&s, &mix).unwrap();
            let (a, b) = (enc(&s, &info).unwrap(), enc(&s, &other).unwrap());
            let rhs: Vec<Elt> = a.iter().zip(&b).map(|(&x, &y)| f.add(x, f.mul(l, y))).collect();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn syndromes_match_matrix(w in word_strategy(64)) {
        for s in all_specs() {
            let word = &w[..s.n()];
            prop_assert_eq!(syndromes(&s, word).unwrap().on_phi_m, parity(&s, word));
        }
    }

    #[test]
    fn extended_encoder(info in word_strategy(18)) {
        let s = herm();
        let c = encode_systematic_extended(&s, &info).unwrap();
        prop_assert_eq!(c.len(), 27);
        prop_assert!(is_zero(&parity(&s, &c)));
        for (&k, &v) in s.wp_prime().iter().zip(&info) {
            prop_assert_eq!(c[k], v);
        }
        prop_assert_eq!(&c[24..], &info[15..]);
    }

    #[test]
    fn rs_encoders(info in word_strategy(6), r in prop::sample::select(vec![2usize, 4, 6])) {
        let f = Field::gf9();
        let info = &info[..8 - r];
        let e = rs_encode_euclid(&f, r, info).unwrap();
        prop_assert_eq!(&e, &rs_encode_dh(&f, r, info).unwrap());
        for h in r..8 {
            prop_assert_eq!(e[h], info[h - r]);
        }
        // d_h = R(α^h) for every h, R = I − c
        let d = rs_dh_sequence(&f, r, info).unwrap();
        let rem: Vec<Elt> = (0..8).map(|h| if h < r { f.neg(e[h]) } else { Elt::ZERO }).collect();
        for (h, &dv) in d.iter().enumerate() {
            let x = f.alpha_pow(h as i64);
            let rv = rem.iter().rev().fold(Elt::ZERO, |acc, &c| f.add(f.mul(acc, x), c));
            prop_assert_eq!(dv, rv);
        }
        let ci = rs_encode_idft(&f, r, info).unwrap();
        for i in 0..8 {
            let x = f.alpha_pow(i as i64);
            let val = ci.iter().rev().fold(Elt::ZERO, |acc, &c| f.add(f.mul(acc, x), c));
            let expect = if i < r { Elt::ZERO } else { f.neg(info[i - r]) };
            prop_assert_eq!(val, expect);
        }
    }

    #[test]
    fn decode_round_trip(info in word_strategy(44), pos in proptest::collection::vec(0usize..64, 4),
                         vals in proptest::collection::vec(0i32..8, 4), sys in any::<bool>()) {
        let mode = if sys { Mode::Systematic } else { Mode::Nonsystematic };
        for s in all_specs() {
            let f = s.field();
            let info = &info[..s.k()];
            let c = encode(&s, mode, info).unwrap();
            let mut r = c.clone();
            for (p, v) in pick_errors(s.n(), &pos, &vals, s.capability()) {
                r[p] = f.add(r[p], v);
            }
            let d = decode(&s, mode, &r).unwrap();
            prop_assert_eq!(&d.codeword, &c);
            prop_assert_eq!(&d.info[..], info);
        }
    }
}
