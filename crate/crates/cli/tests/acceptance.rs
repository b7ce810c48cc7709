//! Acceptance suite: every criterion is an exact-arithmetic identity and is
//! asserted at exact equality. Each test prints one pass line; a panic is
//! the fail line.

use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use excursion_core::bounded::{check_recurrence, f_polynomials, numerator};
use excursion_core::oracle::{count_bounded, count_excursions, verify_annihilation, CountSeries};
use excursion_core::platypus::{annihilator, plethysm_elementary};
use excursion_core::ring::poly::poly_exact_div;
use excursion_core::ring::text::parse_bivariate;
use excursion_core::schur::{puj_product, rect_schur_gf, subsets, NumericAlphabet};
use excursion_core::stepset::parse_stepset;
use excursion_core::{LaurentPoly, MultiPoly, Rational, Ring, RingPoly, StepSet, Weight};

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn e_term(n: usize, pairs: &[(usize, u32)], c: i64) -> MultiPoly {
    let mut exps = vec![0u32; n];
    for &(i, e) in pairs {
        exps[i - 1] = e;
    }
    MultiPoly::term(n, exps, q(c))
}

#[test]
fn criterion_1_dyck_golden_set() {
    let s = parse_stepset("1:1,-1:1").unwrap();
    let d = annihilator(&s).unwrap();
    assert_eq!(d, parse_bivariate("1 - z + t^2*z^2").unwrap());
    assert_eq!(numerator(&s).unwrap(), RingPoly::one());

    let e = count_excursions(&s, 12);
    let catalan = [1i64, 1, 2, 5, 14, 42, 132];
    for (n, &c) in catalan.iter().enumerate() {
        assert_eq!(e.coeff(2 * n), q(c), "t^{}", 2 * n);
        if 2 * n < 12 {
            assert_eq!(e.coeff(2 * n + 1), q(0));
        }
    }

    let fs = f_polynomials(&s, 12);
    let t2 = LaurentPoly::monomial(Rational::one(), 2);
    for k in 1..12 {
        assert_eq!(fs[k + 1], fs[k].sub(&t2.mul(&fs[k - 1])), "F_{}", k + 1);
    }
    println!("criterion 1 (Dyck golden set): PASS");
}

#[test]
fn criterion_2_one_down_family() {
    for a in [2u32, 3] {
        let s = parse_stepset(&format!("{a}:1,-1:1")).unwrap();
        let d = annihilator(&s).unwrap();
        let expected = parse_bivariate(&format!("1 - z + t^{0}*z^{0}", a + 1)).unwrap();
        assert_eq!(d, expected, "a = {a}");
        assert_eq!(numerator(&s).unwrap(), RingPoly::one(), "a = {a}");
    }
    println!("criterion 2 (S = {{a, -1}} golden set, a = 2, 3): PASS");
}

#[test]
fn criterion_3_three_minus_two_golden_set() {
    let s = parse_stepset("3:1,-2:1").unwrap();
    let d = annihilator(&s).unwrap();
    let d32 = parse_bivariate("1 - z + 2*t^5*z^5 - t^5*z^6 + t^5*z^7 + t^10*z^10").unwrap();
    assert_eq!(d, d32);
    assert_eq!(
        numerator(&s).unwrap(),
        parse_bivariate("1 + t^5*z^5").unwrap()
    );
    assert_eq!(s.d(), 10);
    assert!(check_recurrence(&s, 20).unwrap());
    println!("criterion 3 ((3,2) golden set): PASS");
}

#[test]
fn criterion_4_four_minus_three_golden_set() {
    let start = Instant::now();
    let s = parse_stepset("4:1,-3:1").unwrap();
    let d = annihilator(&s).unwrap();
    let d43 = parse_bivariate(
        "1 - z \
         + 5*t^7*z^7 - 4*t^7*z^8 + t^7*z^9 + 3*t^7*z^10 - t^7*z^12 + t^7*z^13 \
         + 10*t^14*z^14 - 6*t^14*z^15 + 3*t^14*z^16 + 5*t^14*z^17 - t^14*z^18 + t^14*z^19 \
         + 10*t^21*z^21 - 4*t^21*z^22 + 3*t^21*z^23 + t^21*z^24 - t^21*z^25 \
         + 5*t^28*z^28 - t^28*z^29 + t^28*z^30 - t^28*z^31 \
         + t^35*z^35",
    )
    .unwrap();
    assert_eq!(d, d43);
    assert_eq!(d.degree(), Some(35));
    assert_eq!(d.coeff(35), LaurentPoly::monomial(Rational::one(), 35));

    let n = numerator(&s).unwrap();
    let n43 = parse_bivariate(
        "1 + 4*t^7*z^7 + t^7*z^10 + t^7*z^11 + 6*t^14*z^14 + t^14*z^17 \
         + 4*t^21*z^21 + t^28*z^28",
    )
    .unwrap();
    assert_eq!(n, n43);
    assert_eq!(n.degree(), Some(28));

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "took {elapsed:?}, budget is 30 s");
    println!("criterion 4 ((4,3) golden set in {elapsed:?}): PASS");
}

#[test]
fn criterion_5_basketball_factorizations() {
    // (weighting text, common factor, reduced polynomial, numerator)
    let cases = [
        (
            "2:t,1:1,-1:1,-2:t",
            "1+t^2*z",
            "1 - z - 2*t^2*z + 3*t^2*z^2 + 2*t^4*z^2 - t^4*z^3 - 2*t^6*z^3 + t^8*z^4",
            "1 - t^4*z^2",
            "1 - t^2*z",
        ),
        (
            "2:1,1:1,-1:1,-2:1",
            "1+t*z",
            "1 - z - 2*t*z + 2*t*z^2 + 3*t^2*z^2 - t^2*z^3 - 2*t^3*z^3 + t^4*z^4",
            "1 - t^2*z^2",
            "1 - t*z",
        ),
    ];
    for (steps, factor, dbar_text, n_text, reduced_numer_text) in cases {
        let s = parse_stepset(steps).unwrap();
        let d = annihilator(&s).unwrap();
        let factor_poly = parse_bivariate(factor).unwrap();
        let dbar = parse_bivariate(dbar_text).unwrap();

        // library route: divide out the factor twice, compare exactly
        let once = poly_exact_div(&d, &factor_poly).expect("first division");
        let twice = poly_exact_div(&once, &factor_poly).expect("second division");
        assert_eq!(twice, dbar, "{steps}");
        assert_eq!(d, dbar.mul(&factor_poly).mul(&factor_poly), "{steps}");

        // CLI route through `divides`
        let out = Command::new(env!("CARGO_BIN_EXE_excursion-lab"))
            .args([
                "divides", "--steps", steps, "--factor", factor, "--factor", factor,
            ])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "{steps}");
        let text = String::from_utf8(out.stdout).unwrap();
        let quotient_line = text.lines().last().unwrap();
        let quotient = parse_bivariate(quotient_line.strip_prefix("quotient = ").unwrap()).unwrap();
        assert_eq!(quotient, dbar, "{steps}");

        // N reproduces the displayed sum F_k z^k = reduced_numer/((factor)(dbar))
        // after multiplying numerator and denominator by the common factor.
        let n = numerator(&s).unwrap();
        assert_eq!(n, parse_bivariate(n_text).unwrap(), "{steps}");
        let reduced_numer = parse_bivariate(reduced_numer_text).unwrap();
        assert_eq!(n, reduced_numer.mul(&factor_poly), "{steps}");
        assert_eq!(
            n.mul(&factor_poly).mul(&dbar),
            reduced_numer.mul(&d),
            "cross-multiplied fraction identity for {steps}"
        );
    }
    println!("criterion 5 (basketball factorizations, both weightings): PASS");
}

#[test]
fn criterion_6_plethysm_golden_set() {
    // (a=2, n=3) display
    let p23 = plethysm_elementary(2, 3, None).unwrap();
    assert_eq!(p23.render_q(), "1 - e_2*z + e_{3,1}*z^2 - e_{3,3}*z^3");

    // (a=2, n=4): the six-term expansion
    let p24 = plethysm_elementary(2, 4, None).unwrap();
    let n = 4;
    let expect: Vec<MultiPoly> = vec![
        MultiPoly::one(),
        e_term(n, &[(2, 1)], 1),
        e_term(n, &[(3, 1), (1, 1)], 1).add(&e_term(n, &[(4, 1)], -1)),
        e_term(n, &[(3, 2)], 1)
            .add(&e_term(n, &[(4, 1), (1, 2)], 1))
            .add(&e_term(n, &[(4, 1), (2, 1)], -2)),
        e_term(n, &[(4, 1), (3, 1), (1, 1)], 1).add(&e_term(n, &[(4, 2)], -1)),
        e_term(n, &[(4, 2), (2, 1)], 1),
        e_term(n, &[(4, 3)], 1),
    ];
    assert_eq!(p24.coefficients(), &expect[..]);

    // (a,b) = (2,3): restricted to {2, 5}
    let keep25: BTreeSet<u32> = [2, 5].into_iter().collect();
    let p = plethysm_elementary(2, 5, Some(&keep25)).unwrap().q_poly();
    let n = 5;
    let mut expected = vec![MultiPoly::zero_in(n); 11];
    expected[0] = MultiPoly::one();
    expected[1] = e_term(n, &[(2, 1)], -1);
    expected[5] = e_term(n, &[(5, 2)], -2);
    expected[6] = e_term(n, &[(5, 2), (2, 1)], 1);
    expected[7] = e_term(n, &[(5, 2), (2, 2)], -1);
    expected[10] = e_term(n, &[(5, 4)], 1);
    for (k, want) in expected.iter().enumerate() {
        assert_eq!(&p.coeff(k), want, "(2,3) restricted, z^{k}");
    }

    // (a,b) = (5,2): restricted to {5, 7}
    let keep57: BTreeSet<u32> = [5, 7].into_iter().collect();
    let p = plethysm_elementary(5, 7, Some(&keep57)).unwrap().q_poly();
    let n = 7;
    let mut expected = vec![MultiPoly::zero_in(n); 22];
    expected[0] = MultiPoly::one();
    expected[1] = e_term(n, &[(5, 1)], -1);
    expected[7] = e_term(n, &[(7, 5)], -3);
    expected[8] = e_term(n, &[(5, 1), (7, 5)], 2);
    expected[9] = e_term(n, &[(5, 2), (7, 5)], -2);
    expected[10] = e_term(n, &[(5, 3), (7, 5)], 1);
    expected[11] = e_term(n, &[(5, 4), (7, 5)], -1);
    expected[14] = e_term(n, &[(7, 10)], 3);
    expected[15] = e_term(n, &[(5, 1), (7, 10)], -1);
    expected[16] = e_term(n, &[(5, 2), (7, 10)], 2);
    expected[21] = e_term(n, &[(7, 15)], -1);
    for (k, want) in expected.iter().enumerate() {
        assert_eq!(&p.coeff(k), want, "(5,2) restricted, z^{k}");
    }

    // regression (a,b) = (3,5): the z^16 coefficient is NOT a monomial and
    // contains both e_8^6 and e_3^8 e_8^3
    let keep38: BTreeSet<u32> = [3, 8].into_iter().collect();
    let p38 = plethysm_elementary(3, 8, Some(&keep38)).unwrap();
    let entry16 = &p38.coefficients()[16];
    assert!(
        entry16.num_terms() >= 2,
        "z^16 entry is a monomial: {entry16}"
    );
    let mono_e8_6 = {
        let mut exps = vec![0u32; 8];
        exps[7] = 6;
        exps
    };
    let mono_e3_8_e8_3 = {
        let mut exps = vec![0u32; 8];
        exps[2] = 8;
        exps[7] = 3;
        exps
    };
    assert!(!entry16.coeff(&mono_e8_6).is_zero(), "missing e_8^6");
    assert!(
        !entry16.coeff(&mono_e3_8_e8_3).is_zero(),
        "missing e_3^8 e_8^3"
    );
    println!("criterion 6 (plethysm golden set and (3,5) regression): PASS");
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Every unit-weight step set with steps in {-3..3}\{0}, both signs present,
/// gcd 1, plus the two basketball weightings.
fn battery() -> Vec<StepSet> {
    let candidates: [i64; 6] = [-3, -2, -1, 1, 2, 3];
    let mut out = Vec::new();
    for mask in 1u32..(1 << candidates.len()) {
        let chosen: Vec<i64> = candidates
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &s)| s)
            .collect();
        if !chosen.iter().any(|&s| s > 0) || !chosen.iter().any(|&s| s < 0) {
            continue;
        }
        let g = chosen.iter().fold(0u64, |g, s| gcd(g, s.unsigned_abs()));
        if g != 1 {
            continue;
        }
        let steps: BTreeMap<i64, Weight> = chosen.into_iter().map(|s| (s, Weight::one())).collect();
        out.push(StepSet::new(steps).unwrap());
    }
    out.push(parse_stepset("2:t,1:1,-1:1,-2:t").unwrap());
    out.push(parse_stepset("2:1,1:1,-1:1,-2:1").unwrap());
    out
}

#[test]
fn criterion_7_oracle_battery() {
    let sets = battery();
    assert!(
        sets.len() >= 45,
        "battery has only {} step sets",
        sets.len()
    );
    for s in &sets {
        let d = annihilator(s).unwrap();
        assert!(
            verify_annihilation(&d, &count_excursions(s, 15)),
            "annihilation failed for {s}"
        );
        for k in 0..=6 {
            let algebraic = excursion_core::bounded::bounded_series(s, k, 12);
            let counted = count_bounded(s, k, 12);
            assert_eq!(
                algebraic.coeffs(),
                counted.coefficients(),
                "{s}, height {k}"
            );
        }
        for k in 0..=8 {
            assert_eq!(
                excursion_core::schur::f_via_jacobi_trudi(s, k),
                excursion_core::bounded::f_polynomial(s, k),
                "{s}, k = {k}"
            );
        }
        let kmax = (s.d() + (s.a() + s.b()) as u64) as usize;
        assert!(check_recurrence(s, kmax).unwrap(), "{s}");
    }
    println!(
        "criterion 7 (oracle battery over {} step sets): PASS",
        sets.len()
    );
}

#[test]
fn criterion_8_rectangular_schur_battery() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE);
    let mut done = 0;
    while done < 20 {
        let n = rng.gen_range(2..=6usize);
        let a = rng.gen_range(1..n) as u32;
        let values: Vec<Rational> = (0..n)
            .map(|_| {
                Rational::new(
                    rng.gen_range(1..=9i64) * if rng.gen_bool(0.3) { -1 } else { 1 },
                    rng.gen_range(1..=4i64),
                )
            })
            .collect();
        let alphabet = match NumericAlphabet::new(values) {
            Ok(al) if al.is_generic(a as usize) => al,
            _ => continue,
        };
        let (p, _) = rect_schur_gf(&alphabet, a).unwrap();

        // deg P = C(n,a) - n
        let big_d = subsets(n, a as usize).len();
        assert_eq!(p.degree(), Some(big_d - n), "n={n}, a={a}");

        // leading coefficient: (-1)^(C(n,a)+ab-1) (u_1...u_n)^(C(n-1,a-1)-a)
        let b = n - a as usize;
        let exp = subsets(n - 1, a as usize - 1).len() - a as usize;
        let sign = if (big_d + a as usize * b - 1).is_multiple_of(2) {
            1
        } else {
            -1
        };
        let prod_all = alphabet.product_over(&(0..n).collect::<Vec<_>>());
        let expected_lead = prod_all.pow(exp as u32).scale(&q(sign));
        assert_eq!(p.leading_coeff(), Some(&expected_lead), "n={n}, a={a}");

        // P(1/u_J) on three random subsets J
        let all = subsets(n, a as usize);
        for _ in 0..3 {
            let j = &all[rng.gen_range(0..all.len())];
            let at = p.eval(&alphabet.product_over(j).inverse().unwrap());
            assert_eq!(at, puj_product(&alphabet, a, j), "n={n}, a={a}, J={j:?}");
        }
        done += 1;
    }

    // golden case (a=2, n=4): P = 1 - e_4 z^2
    let al = NumericAlphabet::new(vec![q(1), q(2), q(3), q(5)]).unwrap();
    let (p, _) = rect_schur_gf(&al, 2).unwrap();
    assert_eq!(p, RingPoly::from_coeffs(vec![q(1), q(0), q(-30)]));

    // golden case (a=2, n=5): P = 1 - e_4 z^2 + e_{5,1} z^3 - e_5^2 z^5,
    // with the elementary values expanded directly from the alphabet
    let al5 = NumericAlphabet::new(vec![q(1), q(2), q(3), q(5), q(7)]).unwrap();
    let (p5, _) = rect_schur_gf(&al5, 2).unwrap();
    let mut e = vec![q(1)];
    for u in al5.values() {
        let mut next = vec![q(0); e.len() + 1];
        for (m, c) in e.iter().enumerate() {
            next[m] = next[m].add(c);
            next[m + 1] = next[m + 1].add(&c.mul(u));
        }
        e = next;
    }
    assert_eq!(&e[1..], &[q(18), q(118), q(348), q(457), q(210)]);
    let expected = RingPoly::from_coeffs(vec![
        q(1),
        q(0),
        e[4].neg(),
        e[5].mul(&e[1]),
        q(0),
        e[5].mul(&e[5]).neg(),
    ]);
    assert_eq!(p5, expected);
    println!("criterion 8 (rectangular Schur battery, 20 alphabets + goldens): PASS");
}

#[test]
fn criterion_9_negative_controls() {
    // perturbed Catalan series must fail annihilation
    let d = parse_bivariate("1 - z + t^2*z^2").unwrap();
    let mut coeffs = count_excursions(&parse_stepset("1:1,-1:1").unwrap(), 10)
        .coefficients()
        .to_vec();
    coeffs[4] = q(3); // true value is 2
    let perturbed = CountSeries::from_coefficients(coeffs);
    assert!(!verify_annihilation(&d, &perturbed));

    // CLI validation failure exits with code 2
    let out = Command::new(env!("CARGO_BIN_EXE_excursion-lab"))
        .args(["series", "--steps", "1:1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    println!("criterion 9 (negative controls): PASS");
}
